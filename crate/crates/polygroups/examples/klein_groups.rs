//! n-ary groups over the Klein four-group.
//!
//! The class count depends only on gcd(n-1, 12); sweeping n from 3 to 14
//! hits every case.

use polygroups::classify::klein_classification;
use polygroups::util::gcd;
use polygroups::Config;

fn main() {
    let cfg = Config::default();
    for n in 3usize..=14 {
        let classes = klein_classification(n, &cfg).unwrap();
        let l = gcd(n as u64 - 1, 12);
        println!("n={n:2} l={l:2}: {} classes", classes.len());
        for rep in &classes {
            println!(
                "    phi={:?} b={} commutative={}",
                rep.hg.phi().map(),
                rep.hg.b(),
                rep.flags.commutative
            );
        }
    }
}
