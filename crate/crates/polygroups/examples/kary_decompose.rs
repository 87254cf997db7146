//! Generalized decomposition: expressing an n-ary group through an m-ary
//! retract whenever m-1 divides n-1.

use polygroups::hosszu::{canonical_f_a, construct_k, decompose_k};
use polygroups::polyadic::eval_equal;
use polygroups::Config;

fn main() {
    let cfg = Config::default();

    // 7-ary sum plus 2 on Z3, pulled back to a ternary base (r = 2)
    let g = canonical_f_a(3, 7, 2, &cfg).unwrap();
    for anchor in 0..3 {
        let khg = decompose_k(&g, anchor, 3, &cfg).unwrap();
        println!(
            "anchor {anchor}: base arity {} phi={:?} constants={:?}",
            khg.base().arity(),
            khg.phi(),
            khg.bs()
        );
        let rebuilt = construct_k(&khg, &cfg).unwrap();
        assert!(eval_equal(g.op(), rebuilt.op(), &cfg).unwrap());
    }

    // the same group also decomposes through a 4-ary base (r = 1)
    let khg = decompose_k(&g, 0, 4, &cfg).unwrap();
    println!("4-ary base: phi={:?} constants={:?}", khg.phi(), khg.bs());
    let rebuilt = construct_k(&khg, &cfg).unwrap();
    assert!(eval_equal(g.op(), rebuilt.op(), &cfg).unwrap());
    println!("round trips verified");
}
