//! Round trip between a group-with-automorphism triple and its derived
//! n-ary group.
//!
//! Starts from the cyclic group Z7, the automorphism x -> 3x (which has
//! order 6, so it supports a 7-ary operation) and a fixed element, builds
//! the derived 7-ary group, then recovers an equivalent triple by
//! decomposing at every anchor.

use polygroups::groups::{cyclic, Automorphism};
use polygroups::hosszu::{certify_hg, construct, decompose};
use polygroups::Config;

fn main() {
    let cfg = Config::default();
    let base = cyclic(7);
    let phi = Automorphism::certify(&base, (0..7).map(|x| 3 * x % 7).collect()).unwrap();
    let hg = certify_hg(base, phi, 0, 7).unwrap();

    let g = construct(hg, &cfg).unwrap();
    println!("derived group: arity {} on {} elements", g.arity(), g.order());
    println!("f(1,1,1,1,1,1,1) = {}", g.eval(&[1; 7]).unwrap());

    for anchor in 0..7 {
        let recovered = decompose(&g, anchor).unwrap();
        let phi_map: Vec<usize> = (0..7).map(|x| recovered.phi().apply(x)).collect();
        println!("anchor {anchor}: phi={phi_map:?} b={}", recovered.b());
        let rebuilt = construct(recovered, &cfg).unwrap();
        assert!(polygroups::polyadic::eval_equal(g.op(), rebuilt.op(), &cfg).unwrap());
    }
    println!("all anchors reproduce the operation");
}
