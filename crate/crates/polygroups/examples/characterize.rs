//! Alternative characterizations of n-ary groups, plus the idempotent
//! normal-form and exponential-group tests.

use polygroups::hosszu::{canonical_f_a, form19_check, k_exponential_check};
use polygroups::polyadic::{check_characterizations, NaryOp};
use polygroups::Config;

fn main() {
    let cfg = Config::default();

    let g = canonical_f_a(3, 3, 0, &cfg).unwrap();
    let report = check_characterizations(g.op(), &cfg).unwrap();
    println!("ternary sum mod 3:");
    println!("  semigroup={} group={}", report.is_semigroup, report.is_group);
    println!("  sokolov={} tyutin={}", report.sokolov, report.tyutin);
    println!("  neutral sequences from k={:?}", report.neutral_sequences);
    println!("  translations solvable at {:?}", report.translations);

    // Mal'tsev-style ternary operation xy^-1z on Z4 is idempotent and
    // matches the alternating-inverse form
    let maltsev: Vec<usize> = {
        let mut v = Vec::new();
        for x in 0..4usize {
            for y in 0..4 {
                for z in 0..4 {
                    v.push((x + 4 - y + z) % 4);
                }
            }
        }
        v
    };
    let op = NaryOp::from_table(3, 4, maltsev, &cfg).unwrap();
    let mg = polygroups::polyadic::NaryGroup::certify(op, &cfg).unwrap();
    println!("x - y + z mod 4 has the alternating form: {}", form19_check(&mg, &cfg).unwrap());
    println!("ternary sum has it: {}", form19_check(&g, &cfg).unwrap());

    for t in 1..=2 {
        println!("sum mod 3, t={t}: exponential anchor {:?}", k_exponential_check(&g, t, &cfg).unwrap());
    }
}
