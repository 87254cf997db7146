//! Check the n-ary group axioms on a dense operation table.
//!
//! Builds the ternary sum modulo 3, which is a ternary group, and a broken
//! variant that only reads two of its arguments, then runs the full,
//! Sokolov and Dornte axiom systems on both.

use polygroups::polyadic::{is_nary_group, predicates, Method, NaryGroup, NaryOp, Verdict};
use polygroups::Config;

fn table(k: usize, f: impl Fn(&[usize]) -> usize) -> Vec<usize> {
    let mut values = Vec::new();
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                values.push(f(&[x, y, z]));
            }
        }
    }
    values
}

fn main() {
    let cfg = Config::default();

    let sum = NaryOp::from_table(3, 3, table(3, |a| (a[0] + a[1] + a[2]) % 3), &cfg).unwrap();
    for method in [Method::Full, Method::Sokolov, Method::Dornte { i: 2, j: 2 }] {
        let verdict = is_nary_group(&sum, method, &cfg).unwrap();
        println!("sum mod 3, {method:?}: {}", if verdict.holds() { "holds" } else { "fails" });
    }

    let g = NaryGroup::certify(sum, &cfg).unwrap();
    let flags = predicates(&g);
    println!("commutative={} medial={} idempotent={}", flags.commutative, flags.semiabelian, flags.idempotent);

    // drops the middle argument, so unique solvability at place 2 breaks
    let broken = NaryOp::from_table(3, 3, table(3, |a| (a[0] + a[2]) % 3), &cfg).unwrap();
    match is_nary_group(&broken, Method::Full, &cfg).unwrap() {
        Verdict::Holds => println!("broken op: holds (unexpected)"),
        Verdict::Fails(witness) => println!("broken op: fails with {witness:?}"),
    }
}
