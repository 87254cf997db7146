//! Enumerate all n-ary groups on a small carrier up to isomorphism.

use polygroups::classify::{enumerate, report_text, verify_against_table};
use polygroups::Config;

fn main() {
    let cfg = Config::default();
    for (k, n) in [(2, 3), (3, 3), (4, 3), (3, 7)] {
        let report = enumerate(k, n, &cfg).unwrap();
        println!("k={k} n={n} (l={}):", report.l);
        print!("{}", report_text(&report));
        let diff = verify_against_table(&report).unwrap();
        if diff.is_empty() {
            println!("matches the published counts\n");
        } else {
            println!("differs from the published counts: {diff:?}\n");
        }
    }
}
