//! Isomorphism testing through binary retracts.
//!
//! The two ternary groups x+y+z+1 and x+y+z+2 on Z3 are isomorphic under
//! x -> 2x. The ternary sums over Z4 and the Klein four-group are not,
//! since their retracts already differ.

use polygroups::groups::{catalog, cyclic, Automorphism};
use polygroups::hosszu::{canonical_f_a, certify_hg, construct};
use polygroups::iso::{iso_bruteforce, iso_retract};
use polygroups::Config;

fn main() {
    let cfg = Config::default();

    let f1 = canonical_f_a(3, 3, 1, &cfg).unwrap();
    let f2 = canonical_f_a(3, 3, 2, &cfg).unwrap();
    let witness = iso_retract(&f1, &f2, &cfg).unwrap().expect("isomorphic");
    println!("f1 ~ f2 under {:?}", witness.map);
    assert!(witness.verify(&f1, &f2, &cfg).unwrap());

    // brute force agrees
    assert!(iso_bruteforce(&f1, &f2, &cfg).unwrap().is_some());

    let z4_sum = canonical_f_a(4, 3, 0, &cfg).unwrap();
    let v4 = catalog(4).unwrap()[1].clone();
    let id = Automorphism::certify(&v4, (0..4).collect()).unwrap();
    let v4_sum = construct(certify_hg(v4, id, 0, 3).unwrap(), &cfg).unwrap();
    println!("Z4 sum ~ V4 sum: {}", iso_retract(&z4_sum, &v4_sum, &cfg).unwrap().is_some());

    let f0 = canonical_f_a(3, 3, 0, &cfg).unwrap();
    println!("f0 ~ f1: {}", iso_retract(&f0, &f1, &cfg).unwrap().is_some());

    // same base, different automorphism conjugacy class
    let z5_plain = canonical_f_a(5, 5, 0, &cfg).unwrap();
    let z5_twist = {
        let base = cyclic(5);
        let phi = Automorphism::certify(&base, (0..5).map(|x| 2 * x % 5).collect()).unwrap();
        construct(certify_hg(base, phi, 0, 5).unwrap(), &cfg).unwrap()
    };
    println!("plain 5-ary sum ~ twisted: {}", iso_retract(&z5_plain, &z5_twist, &cfg).unwrap().is_some());
}
