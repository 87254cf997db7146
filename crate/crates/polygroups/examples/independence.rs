//! Term operations and independence over an abelian base.
//!
//! Over Z5 with the identity automorphism and zero constant, the unary term
//! functions are exactly the maps x -> cx, so a single nonzero element is
//! independent in both senses while any two elements satisfy a linear
//! relation.

use polygroups::groups::{cyclic, Automorphism};
use polygroups::hosszu::certify_hg;
use polygroups::terms::*;
use polygroups::Config;

fn main() {
    let cfg = Config::default();
    let base = cyclic(5);
    let id = Automorphism::certify(&base, (0..5).collect()).unwrap();
    let alg = TermAlgebra::new(certify_hg(base, id, 0, 3).unwrap()).unwrap();

    let fns = enumerate_unary_functions(&alg, &cfg).unwrap();
    println!("{} distinct unary term functions", fns.len());

    let t1 = MTerm::new(&alg, &[&[3], &[4]], 0);
    println!("3x + 4y at (1,1) = {}", eval_term(&alg, &t1, &[1, 1]).unwrap());
    let t2 = MTerm::new(&alg, &[&[8], &[-1]], 5);
    println!("coefficients reduce: equal to 8x - y + 5b: {}", terms_equal(&alg, &t1, &t2).unwrap());

    for set in [vec![1], vec![1, 2], vec![0]] {
        for family in [Family::M, Family::G] {
            match independent(&alg, &set, family, &cfg).unwrap() {
                Independence::Independent => println!("{set:?} is {family:?}-independent"),
                Independence::Dependent(cert) => {
                    println!(
                        "{set:?} is {family:?}-dependent: h coefficients {:?}, values {:?}, k_h={}",
                        cert.parts.iter().map(|p| p.coeffs.clone()).collect::<Vec<_>>(),
                        cert.values,
                        cert.k_h
                    );
                }
            }
        }
    }
}
