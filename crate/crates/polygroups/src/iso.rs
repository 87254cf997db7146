//! Isomorphism testing for finite n-ary groups through their binary
//! retracts, with a brute-force search over all bijections as an oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups;
use crate::hosszu;
use crate::polyadic::{NaryGroup, NaryOp};
use crate::util::{checked_pow, for_each_tuple, permutations};
use crate::Config;

/// A verified isomorphism between two n-ary groups, found through the
/// retracts at the recorded anchor pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: Vec<usize>,
    /// `(c, d)` with `d = map(c)`; the witness is a group isomorphism
    /// between the binary retracts at `c` and `d`.
    pub anchor_pair: (usize, usize),
}

impl IsoWitness {
    /// Checks the homomorphism identity on the full n-ary operations:
    /// exhaustively when the tuple space fits the check budget, otherwise on
    /// seeded samples.
    pub fn verify(&self, g1: &NaryGroup, g2: &NaryGroup, cfg: &Config) -> Result<bool> {
        bijection_is_morphism(g1.op(), g2.op(), &self.map, cfg)
    }
}

fn bijection_is_morphism(f1: &NaryOp, f2: &NaryOp, h: &[usize], cfg: &Config) -> Result<bool> {
    let n = f1.arity();
    let k = f1.order();
    let mut mapped = vec![0usize; n];
    let mut check = |tuple: &[usize]| {
        for (pos, &x) in tuple.iter().enumerate() {
            mapped[pos] = h[x];
        }
        h[f1.eval_raw(tuple)] == f2.eval_raw(&mapped)
    };
    let work = checked_pow(k, n);
    if work <= cfg.check_budget {
        return Ok(for_each_tuple(k, n, |t| check(t)));
    }
    // tuples with at most two distinct entries, then seeded samples
    let mut args = vec![0usize; n];
    for x in 0..k {
        for y in 0..k {
            for split in 0..=n {
                args[..split].fill(x);
                args[split..].fill(y);
                if !check(&args) {
                    return Ok(false);
                }
            }
            for pos in 0..n {
                args.fill(x);
                args[pos] = y;
                if !check(&args) {
                    return Ok(false);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        args.iter_mut().for_each(|v| *v = rng.gen_range(0..k));
        if !check(&args) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Retract-based isomorphism search.
///
/// The anchor in `g1` is fixed at 0; for each `d` in `g2` (ascending) the
/// group isomorphisms between the retracts at 0 and `d` are enumerated in
/// lexicographic order, and the first one compatible with the derived
/// `(phi, b)` data on both sides is returned. The triple (retract, phi, b)
/// determines the n-ary operation, so acceptance at one anchor is sound and
/// complete.
pub fn iso_retract(g1: &NaryGroup, g2: &NaryGroup, cfg: &Config) -> Result<Option<IsoWitness>> {
    if g1.arity() != g2.arity() || g1.order() != g2.order() {
        return Err(Error::ShapeMismatch {
            n1: g1.arity(),
            k1: g1.order(),
            n2: g2.arity(),
            k2: g2.order(),
        });
    }
    let k = g1.order();
    let c = 0;
    let hg1 = hosszu::decompose(g1, c)?;
    for d in 0..k {
        let hg2 = hosszu::decompose(g2, d)?;
        for h in groups::isomorphisms(hg1.base(), hg2.base()) {
            if h[c] != d || h[hg1.b()] != hg2.b() {
                continue;
            }
            let compatible = (0..k).all(|x| h[hg1.phi().apply(x)] == hg2.phi().apply(h[x]));
            if compatible {
                let witness = IsoWitness { map: h, anchor_pair: (c, d) };
                debug_assert!(witness.verify(g1, g2, cfg)?);
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

/// Oracle: searches all `k!` bijections for an n-ary isomorphism. Intended
/// for small carriers; refuses when `k! * k^n` exceeds the check budget.
pub fn iso_bruteforce(g1: &NaryGroup, g2: &NaryGroup, cfg: &Config) -> Result<Option<Vec<usize>>> {
    if g1.arity() != g2.arity() || g1.order() != g2.order() {
        return Err(Error::ShapeMismatch {
            n1: g1.arity(),
            k1: g1.order(),
            n2: g2.arity(),
            k2: g2.order(),
        });
    }
    let k = g1.order();
    let n = g1.arity();
    let factorial: u128 = (1..=k as u128).product();
    let per_candidate = checked_pow(k, n).min(cfg.samples as u128 + (k * k * (2 * n + 1)) as u128);
    let work = factorial.saturating_mul(per_candidate);
    if work > cfg.check_budget {
        return Err(Error::BudgetExceeded { work, budget: cfg.check_budget });
    }
    for h in permutations(k) {
        if bijection_is_morphism(g1.op(), g2.op(), &h, cfg)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hosszu::{canonical_f_a, canonical_g_d};
    use crate::polyadic::modular_sum_op;

    fn cfg() -> Config {
        Config::default()
    }

    fn f_a(k: usize, n: usize, a: usize) -> NaryGroup {
        canonical_f_a(k, n, a, &cfg()).unwrap()
    }

    #[test]
    fn example_pair_is_isomorphic() {
        // x+y+z+v+1 and x+y+z+v+2 over Z3
        let f1 = f_a(3, 4, 1);
        let f2 = f_a(3, 4, 2);
        let w = iso_retract(&f1, &f2, &cfg()).unwrap().expect("isomorphic");
        assert_eq!(w.map, vec![0, 2, 1]); // h(x) = 2x (mod 3)
        assert!(w.verify(&f1, &f2, &cfg()).unwrap());
        assert!(iso_bruteforce(&f1, &f2, &cfg()).unwrap().is_some());
    }

    #[test]
    fn self_iso_is_identity() {
        let g = f_a(3, 4, 1);
        let w = iso_retract(&g, &g, &cfg()).unwrap().unwrap();
        assert_eq!(w.map, vec![0, 1, 2]);
        assert_eq!(iso_bruteforce(&g, &g, &cfg()).unwrap().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn f0_f1_not_isomorphic() {
        let f0 = f_a(3, 4, 0);
        let f1 = f_a(3, 4, 1);
        assert!(iso_retract(&f0, &f1, &cfg()).unwrap().is_none());
        assert!(iso_bruteforce(&f0, &f1, &cfg()).unwrap().is_none());
    }

    #[test]
    fn klein_sum_vs_cyclic_sum() {
        let z4 = NaryGroup::certify(modular_sum_op(4, 3, 0, &cfg()), &cfg()).unwrap();
        let v4 = groups::catalog(4).unwrap()[1].clone();
        let id: Vec<usize> = (0..4).collect();
        let phi = groups::Automorphism::certify(&v4, id).unwrap();
        let klein = hosszu::construct(hosszu::certify_hg(v4, phi, 0, 3).unwrap(), &cfg()).unwrap();
        assert!(iso_retract(&z4, &klein, &cfg()).unwrap().is_none());
        assert!(iso_bruteforce(&z4, &klein, &cfg()).unwrap().is_none());
    }

    #[test]
    fn shape_mismatch() {
        let a = f_a(3, 4, 0);
        let b = f_a(3, 3, 0);
        assert!(matches!(iso_retract(&a, &b, &cfg()), Err(Error::ShapeMismatch { .. })));
    }

    #[test]
    fn equivalence_relation_on_small_corpus() {
        let corpus = vec![
            f_a(3, 4, 0),
            f_a(3, 4, 1),
            f_a(3, 4, 2),
            f_a(4, 3, 0),
            f_a(4, 3, 1),
            f_a(4, 3, 2),
            canonical_g_d(4, 3, 3, &cfg()).unwrap(),
        ];
        for (i, g1) in corpus.iter().enumerate() {
            for (j, g2) in corpus.iter().enumerate() {
                if g1.order() != g2.order() || g1.arity() != g2.arity() {
                    continue;
                }
                let forward = iso_retract(g1, g2, &cfg()).unwrap();
                let oracle = iso_bruteforce(g1, g2, &cfg()).unwrap();
                assert_eq!(forward.is_some(), oracle.is_some(), "pair ({i}, {j})");
                let backward = iso_retract(g2, g1, &cfg()).unwrap();
                assert_eq!(forward.is_some(), backward.is_some(), "symmetry ({i}, {j})");
                if let Some(w) = forward {
                    assert!(w.verify(g1, g2, &cfg()).unwrap());
                    let inverse = crate::util::invert(&w.map);
                    assert!(bijection_is_morphism(g2.op(), g1.op(), &inverse, &cfg()).unwrap());
                }
            }
        }
    }

    #[test]
    fn transitivity_by_composition() {
        let a = f_a(3, 4, 1);
        let b = f_a(3, 4, 2);
        let w1 = iso_retract(&a, &b, &cfg()).unwrap().unwrap();
        let w2 = iso_retract(&b, &a, &cfg()).unwrap().unwrap();
        let composed = crate::util::compose(&w2.map, &w1.map);
        assert!(bijection_is_morphism(a.op(), a.op(), &composed, &cfg()).unwrap());
    }
}
