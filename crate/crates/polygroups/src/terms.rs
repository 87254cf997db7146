//! Term operations of Hosszú-Gluskin algebras with abelian base, written
//! additively: every m-ary term is a sum of coefficient combinations of
//! automorphism powers per variable plus an integer multiple of the
//! constant. Includes function-equality decision and Marczewski- and
//! Grätzer-style independence testing by bounded brute force.

use crate::error::{Error, Result};
use crate::hosszu::HgAlgebra;
use crate::util::{checked_pow, for_each_tuple};
use crate::Config;

/// An HG-algebra with abelian base, prepared for term manipulation:
/// coefficients of `phi^l` live modulo the group exponent `e`, constant
/// multiples modulo the order of `b`.
#[derive(Debug, Clone)]
pub struct TermAlgebra {
    hg: HgAlgebra,
    /// Exponent of the base group.
    e: usize,
    /// Order of the automorphism.
    d: usize,
    /// Order of the constant `b`.
    ord_b: usize,
}

impl TermAlgebra {
    pub fn new(hg: HgAlgebra) -> Result<TermAlgebra> {
        if !hg.base().is_abelian() {
            return Err(Error::NonAbelianBase);
        }
        let e = hg.base().exponent();
        let d = hg.phi().order();
        let ord_b = hg.base().element_order(hg.b());
        Ok(TermAlgebra { hg, e, d, ord_b })
    }

    pub fn hg(&self) -> &HgAlgebra {
        &self.hg
    }

    pub fn order(&self) -> usize {
        self.hg.base().order()
    }

    pub fn exponent(&self) -> usize {
        self.e
    }

    pub fn phi_order(&self) -> usize {
        self.d
    }

    pub fn b_order(&self) -> usize {
        self.ord_b
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.hg.base().mul(x, y)
    }

    /// `m . x` in the additive base group.
    fn multiple(&self, m: usize, x: usize) -> usize {
        self.hg.base().pow(x, m as i64)
    }

    /// `sum_l coeffs[l] . phi^l(x)`.
    fn eval_coeffs(&self, coeffs: &[usize], x: usize) -> usize {
        let mut acc = self.hg.base().identity();
        for (l, &c) in coeffs.iter().enumerate() {
            acc = self.add(acc, self.multiple(c, self.hg.phi_power(l, x)));
        }
        acc
    }

    fn k_b(&self, k: usize) -> usize {
        self.multiple(k, self.hg.b())
    }

    fn reduce(&self, raw: &[i64]) -> Vec<usize> {
        let e = self.e as i64;
        let mut coeffs = vec![0usize; self.d];
        for (l, &c) in raw.iter().enumerate() {
            let slot = l % self.d;
            coeffs[slot] = ((coeffs[slot] as i64 + c).rem_euclid(e)) as usize;
        }
        coeffs
    }
}

/// A unary term `g(x) = sum_l c_l . phi^l(x) + k_g . b` in canonical form:
/// `d` coefficients modulo the exponent, constant multiple modulo `ord(b)`.
///
/// Distinct canonical forms can still be equal as functions (the
/// automorphism may satisfy linear relations), so all comparisons are
/// pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryTerm {
    pub coeffs: Vec<usize>,
    pub k_g: usize,
}

impl UnaryTerm {
    /// Builds a term from arbitrary integer data: coefficients of
    /// `phi^0, phi^1, ..` (any length, folded modulo `ord(phi)` and reduced
    /// modulo the exponent) and an integer constant multiple.
    pub fn new(alg: &TermAlgebra, raw_coeffs: &[i64], k_g: i64) -> UnaryTerm {
        UnaryTerm {
            coeffs: alg.reduce(raw_coeffs),
            k_g: k_g.rem_euclid(alg.ord_b as i64) as usize,
        }
    }

    pub fn eval(&self, alg: &TermAlgebra, x: usize) -> usize {
        alg.add(alg.eval_coeffs(&self.coeffs, x), alg.k_b(self.k_g))
    }

    fn value_vector(&self, alg: &TermAlgebra) -> Vec<usize> {
        (0..alg.order()).map(|x| self.eval(alg, x)).collect()
    }
}

/// An m-ary term `F(x_1, .., x_m) = sum_i g_i(x_i) + k_F . b`, with the
/// per-variable parts holding zero constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTerm {
    pub parts: Vec<Vec<usize>>,
    pub k_f: usize,
}

impl MTerm {
    pub fn new(alg: &TermAlgebra, raw_parts: &[&[i64]], k_f: i64) -> MTerm {
        MTerm {
            parts: raw_parts.iter().map(|p| alg.reduce(p)).collect(),
            k_f: k_f.rem_euclid(alg.ord_b as i64) as usize,
        }
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }
}

pub fn eval_term(alg: &TermAlgebra, t: &MTerm, args: &[usize]) -> Result<usize> {
    if args.len() != t.arity() {
        return Err(Error::ArityMismatch { expected: t.arity(), got: args.len() });
    }
    let mut acc = alg.k_b(t.k_f);
    for (part, &x) in t.parts.iter().zip(args) {
        acc = alg.add(acc, alg.eval_coeffs(part, x));
    }
    Ok(acc)
}

/// Function equality of two terms over the same algebra. Each per-variable
/// part vanishes at 0, so equality of the constants plus pointwise equality
/// of each part decides equality on all `k^m` tuples at cost O(mk).
pub fn terms_equal(alg: &TermAlgebra, t1: &MTerm, t2: &MTerm) -> Result<bool> {
    if t1.arity() != t2.arity() {
        return Err(Error::ShapeMismatch {
            n1: t1.arity(),
            k1: alg.order(),
            n2: t2.arity(),
            k2: alg.order(),
        });
    }
    if alg.k_b(t1.k_f) != alg.k_b(t2.k_f) {
        return Ok(false);
    }
    for (p1, p2) in t1.parts.iter().zip(&t2.parts) {
        if (0..alg.order()).any(|x| alg.eval_coeffs(p1, x) != alg.eval_coeffs(p2, x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All distinct unary term functions with zero constant part, one canonical
/// representative each (first coefficient vector in odometer order),
/// deduplicated by their full value vectors.
pub fn enumerate_unary_functions(alg: &TermAlgebra, cfg: &Config) -> Result<Vec<UnaryTerm>> {
    let space = checked_pow(alg.e, alg.d);
    if space > cfg.term_budget {
        return Err(Error::BudgetExceeded { work: space, budget: cfg.term_budget });
    }
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut reps = Vec::new();
    for_each_tuple(alg.e, alg.d, |coeffs| {
        let term = UnaryTerm { coeffs: coeffs.to_vec(), k_g: 0 };
        let vector = term.value_vector(alg);
        if !seen.contains(&vector) {
            seen.push(vector);
            reps.push(term);
        }
        true
    });
    Ok(reps)
}

/// The two mapping families of the independence theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Marczewski independence: a zero sum must force every part to be the
    /// zero function.
    M,
    /// Grätzer weak independence: a zero sum must force every summand value
    /// (and the constant) to be zero.
    G,
}

/// A witness of dependence: elements, the violating unary parts, their
/// values at those elements, and the constant multiple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub elements: Vec<usize>,
    pub parts: Vec<UnaryTerm>,
    pub values: Vec<usize>,
    pub k_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Independence {
    Independent,
    Dependent(Certificate),
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::Independent)
    }
}

/// Decides M- or G-independence of `X` by scanning all unary-term-function
/// tuples over every nonempty subset of `X`, looking for a zero sum
/// `sum_i h_i(a_i) + k_H . b = 0` violating the respective clause. The
/// first violation in lexicographic scan order becomes the certificate.
pub fn independent(alg: &TermAlgebra, x: &[usize], family: Family, cfg: &Config) -> Result<Independence> {
    for (i, &a) in x.iter().enumerate() {
        if a >= alg.order() {
            return Err(Error::IndexOutOfRange { value: a, order: alg.order() });
        }
        if x[..i].contains(&a) {
            return Err(Error::DuplicateElements(a));
        }
    }
    let reps = enumerate_unary_functions(alg, cfg)?;
    let zero = alg.hg().base().identity();
    for subset in nonempty_subsets(x) {
        let m = subset.len();
        let work = checked_pow(reps.len(), m).saturating_mul(alg.ord_b as u128);
        if work > cfg.term_budget {
            return Err(Error::BudgetExceeded { work, budget: cfg.term_budget });
        }
        let mut found = None;
        for_each_tuple(reps.len(), m, |choice| {
            let values: Vec<usize> = choice
                .iter()
                .zip(&subset)
                .map(|(&ri, &a)| reps[ri].eval(alg, a))
                .collect();
            for k_h in 0..alg.ord_b {
                let kb = alg.k_b(k_h);
                let sum = values.iter().fold(kb, |acc, &v| alg.add(acc, v));
                if sum != zero {
                    continue;
                }
                let violated = match family {
                    Family::G => values.iter().any(|&v| v != zero) || kb != zero,
                    Family::M => {
                        let some_nonzero_fn = choice.iter().any(|&ri| {
                            (0..alg.order()).any(|t| reps[ri].eval(alg, t) != zero)
                        });
                        some_nonzero_fn || kb != zero
                    }
                };
                if violated {
                    found = Some(Certificate {
                        elements: subset.clone(),
                        parts: choice.iter().map(|&ri| reps[ri].clone()).collect(),
                        values,
                        k_h,
                    });
                    return false;
                }
            }
            true
        });
        if let Some(cert) = found {
            return Ok(Independence::Dependent(cert));
        }
    }
    Ok(Independence::Independent)
}

fn nonempty_subsets(x: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << x.len()) {
        out.push(
            x.iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect(),
        );
    }
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{self, Automorphism};
    use crate::hosszu::certify_hg;

    fn cfg() -> Config {
        Config::default()
    }

    fn z5_plain() -> TermAlgebra {
        let base = groups::cyclic(5);
        let id: Vec<usize> = (0..5).collect();
        let phi = Automorphism::certify(&base, id).unwrap();
        TermAlgebra::new(certify_hg(base, phi, 0, 3).unwrap()).unwrap()
    }

    fn z5_doubling(n: usize) -> TermAlgebra {
        let base = groups::cyclic(5);
        let phi = Automorphism::certify(&base, vec![0, 2, 4, 1, 3]).unwrap();
        TermAlgebra::new(certify_hg(base, phi, 0, n).unwrap()).unwrap()
    }

    #[test]
    fn eval_examples() {
        let alg = z5_plain();
        let t = MTerm::new(&alg, &[&[3], &[4]], 0);
        assert_eq!(eval_term(&alg, &t, &[1, 1]).unwrap(), 2);

        let zero = MTerm::new(&alg, &[&[0], &[0]], 0);
        assert_eq!(eval_term(&alg, &zero, &[3, 4]).unwrap(), 0);

        // phi(x) = 2x: phi^1 + phi^3 sums to 2x + 3x = 0
        let alg2 = z5_doubling(5);
        let t2 = MTerm::new(&alg2, &[&[0, 1, 0, 1]], 0);
        for x in 0..5 {
            assert_eq!(eval_term(&alg2, &t2, &[x]).unwrap(), 0);
        }
        assert_eq!(eval_term(&alg2, &t2, &[4]).unwrap(), 0);
    }

    #[test]
    fn equality_is_pointwise() {
        let alg = z5_doubling(5);
        // 2x vs 3x + phi^3(x) = 3x + 3x = x
        let t1 = MTerm::new(&alg, &[&[0, 1, 0, 0]], 0);
        let t2 = MTerm::new(&alg, &[&[3, 0, 0, 1]], 0);
        assert!(!terms_equal(&alg, &t1, &t2).unwrap());

        let alg5 = z5_plain();
        let seven_x = MTerm::new(&alg5, &[&[7]], 0);
        let two_x = MTerm::new(&alg5, &[&[2]], 0);
        assert!(terms_equal(&alg5, &seven_x, &two_x).unwrap());
        assert!(terms_equal(&alg5, &two_x, &two_x).unwrap());
    }

    #[test]
    fn equality_matches_exhaustive_evaluation() {
        let alg = z5_doubling(5);
        let pool: Vec<MTerm> = (0..3)
            .flat_map(|c0| (0..3).map(move |c1| (c0, c1)))
            .map(|(c0, c1)| MTerm::new(&alg, &[&[c0, c1], &[c1, 0]], c0))
            .collect();
        for t1 in &pool {
            for t2 in &pool {
                let claimed = terms_equal(&alg, t1, t2).unwrap();
                let mut actual = true;
                for_each_tuple(5, 2, |args| {
                    actual = eval_term(&alg, t1, args).unwrap() == eval_term(&alg, t2, args).unwrap();
                    actual
                });
                assert_eq!(claimed, actual);
            }
        }
    }

    #[test]
    fn unary_function_counts() {
        assert_eq!(enumerate_unary_functions(&z5_plain(), &cfg()).unwrap().len(), 5);
        // phi is scalar multiplication, so the clone is still just {cx}
        assert_eq!(enumerate_unary_functions(&z5_doubling(5), &cfg()).unwrap().len(), 5);
    }

    #[test]
    fn klein_swap_functions() {
        let v4 = groups::catalog(4).unwrap()[1].clone();
        let phi = Automorphism::certify(&v4, vec![0, 1, 3, 2]).unwrap();
        let alg = TermAlgebra::new(certify_hg(v4, phi, 0, 3).unwrap()).unwrap();
        let fns = enumerate_unary_functions(&alg, &cfg()).unwrap();
        // c0 x + c1 phi(x), c in {0,1}^2: all four maps are distinct
        assert_eq!(fns.len(), 4);
    }

    #[test]
    fn closure_properties() {
        let alg = z5_doubling(5);
        let fns = enumerate_unary_functions(&alg, &cfg()).unwrap();
        let vectors: Vec<Vec<usize>> = fns.iter().map(|f| f.value_vector(&alg)).collect();
        for f in &fns {
            let composed: Vec<usize> = (0..5).map(|x| f.eval(&alg, alg.hg().phi().apply(x))).collect();
            assert!(vectors.contains(&composed));
            for g in &fns {
                let sum: Vec<usize> = (0..5)
                    .map(|x| alg.add(f.eval(&alg, x), g.eval(&alg, x)))
                    .collect();
                assert!(vectors.contains(&sum));
            }
        }
    }

    #[test]
    fn independence_examples() {
        let alg = z5_plain();
        assert!(independent(&alg, &[1], Family::G, &cfg()).unwrap().is_independent());
        assert!(independent(&alg, &[1], Family::M, &cfg()).unwrap().is_independent());

        match independent(&alg, &[1, 2], Family::G, &cfg()).unwrap() {
            Independence::Dependent(cert) => {
                let zero = 0;
                let sum = cert
                    .values
                    .iter()
                    .fold(alg.k_b(cert.k_h), |acc, &v| alg.add(acc, v));
                assert_eq!(sum, zero);
                assert!(cert.values.iter().any(|&v| v != zero));
            }
            other => panic!("expected dependence, got {other:?}"),
        }

        // h(x) = x vanishes at 0 without being the zero function
        assert!(!independent(&alg, &[0], Family::M, &cfg()).unwrap().is_independent());
        assert!(independent(&alg, &[0], Family::G, &cfg()).unwrap().is_independent());
    }

    #[test]
    fn duplicates_rejected() {
        let alg = z5_plain();
        assert!(matches!(
            independent(&alg, &[1, 1], Family::M, &cfg()),
            Err(Error::DuplicateElements(1))
        ));
    }

    #[test]
    fn hereditarity_and_m_implies_g() {
        let base = groups::catalog(4).unwrap()[1].clone();
        let id: Vec<usize> = (0..4).collect();
        let algs = vec![
            z5_plain(),
            z5_doubling(5),
            TermAlgebra::new(certify_hg(base.clone(), Automorphism::certify(&base, id).unwrap(), 1, 3).unwrap()).unwrap(),
        ];
        for alg in &algs {
            let k = alg.order();
            let sets: Vec<Vec<usize>> = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| vec![a, b]))
                .chain((0..k).map(|a| vec![a]))
                .collect();
            for x in &sets {
                let m = independent(alg, x, Family::M, &cfg()).unwrap();
                let g = independent(alg, x, Family::G, &cfg()).unwrap();
                if m.is_independent() {
                    assert!(g.is_independent(), "M-independent must be G-independent: {x:?}");
                }
                if x.len() == 2 && g.is_independent() {
                    for e in x {
                        assert!(
                            independent(alg, &[*e], Family::G, &cfg()).unwrap().is_independent(),
                            "hereditarity: {x:?} -> {e}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn linear_independence_over_prime_field() {
        let alg = z5_plain();
        for a in 1..5 {
            assert!(independent(&alg, &[a], Family::G, &cfg()).unwrap().is_independent());
            for b in a + 1..5 {
                assert!(!independent(&alg, &[a, b], Family::G, &cfg()).unwrap().is_independent());
            }
        }
    }

    #[test]
    fn nonabelian_base_rejected() {
        let s3 = groups::catalog(6).unwrap()[1].clone();
        let id: Vec<usize> = (0..6).collect();
        let hg = certify_hg(s3.clone(), Automorphism::certify(&s3, id).unwrap(), 0, 3).unwrap();
        assert!(matches!(TermAlgebra::new(hg), Err(Error::NonAbelianBase)));
    }
}
