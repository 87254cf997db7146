//! Hosszú-Gluskin algebras: certification of `(group, automorphism, constant)`
//! triples, construction of n-ary groups from them, decomposition of n-ary
//! groups back to such data, the generalized k-ary version, and the canonical
//! operation families over cyclic groups.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{self, Automorphism, BinaryGroup};
use crate::polyadic::{self, eval_equal, eval_iterated, NaryGroup, NaryOp};
use crate::util::{checked_pow, compose, for_each_tuple, is_permutation, permutation_order};
use crate::Config;

/// A certified triple `(base, phi, b)` defining an n-ary group via
/// `f(x_1, .., x_n) = x_1 . phi(x_2) . phi^2(x_3) .. phi^(n-1)(x_n) . b`.
///
/// Certification requires `phi(b) = b` and `phi^(n-1) = conjugation by b`.
#[derive(Debug, Clone)]
pub struct HgAlgebra {
    base: BinaryGroup,
    phi: Automorphism,
    b: usize,
    arity: usize,
    /// `phi^0 .. phi^(d-1)` where `d` is the order of `phi`; higher powers
    /// wrap around, so evaluation stays O(1) per position even for large n.
    phi_powers: Vec<Vec<usize>>,
}

impl HgAlgebra {
    pub fn base(&self) -> &BinaryGroup {
        &self.base
    }

    pub fn phi(&self) -> &Automorphism {
        &self.phi
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `phi^j(x)` for any non-negative exponent.
    pub fn phi_power(&self, j: usize, x: usize) -> usize {
        self.phi_powers[j % self.phi_powers.len()][x]
    }

    /// The defining evaluation; `args` must have length `arity`.
    pub fn eval(&self, args: &[usize]) -> usize {
        let mut acc = args[0];
        for (j, &x) in args.iter().enumerate().skip(1) {
            acc = self.base.mul(acc, self.phi_power(j, x));
        }
        self.base.mul(acc, self.b)
    }

    /// Closed-form skew element: with `p = x . phi(x) .. phi^(n-2)(x)` the
    /// defining equation `f(x^(n-1), z) = x` solves to `z = (p . b)^-1 . x`.
    pub fn skew(&self, x: usize) -> usize {
        let mut p = x;
        for j in 1..self.arity - 1 {
            p = self.base.mul(p, self.phi_power(j, x));
        }
        let pb = self.base.mul(p, self.b);
        self.base.mul(self.base.inv(pb), x)
    }
}

/// Certifies a Hosszú-Gluskin triple for the target arity `n`.
pub fn certify_hg(base: BinaryGroup, phi: Automorphism, b: usize, n: usize) -> Result<HgAlgebra> {
    if n < 3 {
        return Err(Error::ArityTooSmall(n));
    }
    let k = base.order();
    if b >= k {
        return Err(Error::IndexOutOfRange { value: b, order: k });
    }
    if phi.map().len() != k {
        return Err(Error::ShapeMismatch { n1: 2, k1: k, n2: 2, k2: phi.map().len() });
    }
    if phi.apply(b) != b {
        return Err(Error::FixedPointViolated);
    }
    let d = phi.order();
    let mut phi_powers = Vec::with_capacity(d);
    let mut current: Vec<usize> = (0..k).collect();
    for _ in 0..d {
        phi_powers.push(current.clone());
        current = compose(phi.map(), &current);
    }
    let high = &phi_powers[(n - 1) % d];
    for x in 0..k {
        if high[x] != base.mul(base.mul(b, x), base.inv(b)) {
            return Err(Error::InnerPowerViolated(x));
        }
    }
    Ok(HgAlgebra { base, phi, b, arity: n, phi_powers })
}

/// Builds the n-ary group defined by a certified triple. The result is
/// lazily evaluated; no table of size `k^n` is materialized.
pub fn construct(hg: HgAlgebra, cfg: &Config) -> Result<NaryGroup> {
    NaryGroup::certify(NaryOp::hg_backed(Arc::new(hg)), cfg)
}

/// Recovers a Hosszú-Gluskin triple from an n-ary group at the given anchor:
/// the base is the binary retract at `a`, `phi(x) = f(skew a, x, a^(n-2))`
/// and `b = f(skew a, .., skew a)`.
pub fn decompose(g: &NaryGroup, a: usize) -> Result<HgAlgebra> {
    let n = g.arity();
    let k = g.order();
    let retract = polyadic::binary_retract(g, a)?;
    let a_bar = g.skew_of(a);
    let mut args = vec![a; n];
    args[0] = a_bar;
    let phi_map: Vec<usize> = (0..k)
        .map(|x| {
            args[1] = x;
            g.op().eval_raw(&args)
        })
        .collect();
    let phi = Automorphism::certify(&retract, phi_map)?;
    let b = g.op().eval_raw(&vec![a_bar; n]);
    certify_hg(retract, phi, b, n)
}

/// A certified generalized triple over an m-ary group `(G; g)`:
/// `f(x_1, .., x_n) = g_(.)(x_1, phi(x_2), .., phi^(n-1)(x_n), b_2, .., b_m)`
/// where `m-1` divides `n-1`.
#[derive(Debug, Clone)]
pub struct KaryHgAlgebra {
    base: NaryGroup,
    phi: Vec<usize>,
    bs: Vec<usize>,
    arity: usize,
    phi_powers: Vec<Vec<usize>>,
}

impl KaryHgAlgebra {
    pub fn base(&self) -> &NaryGroup {
        &self.base
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// The constants `b_2 .. b_m`.
    pub fn bs(&self) -> &[usize] {
        &self.bs
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn phi_power(&self, j: usize, x: usize) -> usize {
        self.phi_powers[j % self.phi_powers.len()][x]
    }

    pub fn eval(&self, args: &[usize]) -> usize {
        let n = self.arity;
        let m = self.base.arity();
        let mut all = Vec::with_capacity(n + m - 2);
        for (j, &x) in args.iter().enumerate() {
            all.push(self.phi_power(j, x));
        }
        all.extend_from_slice(&self.bs);
        let t = (n - 1) / (m - 1) + 1;
        eval_iterated(self.base.op(), t, &all).expect("shape fixed by construction")
    }
}

/// Certifies a generalized triple: `m-1` must divide `n-1`, `phi` must be an
/// automorphism of the m-ary group fixing every constant, and
/// `g(phi^(n-1)(x), b_2, .., b_m) = g(b_2, .., b_m, x)` must hold.
pub fn certify_khg(base: NaryGroup, phi: Vec<usize>, bs: Vec<usize>, n: usize, cfg: &Config) -> Result<KaryHgAlgebra> {
    let m = base.arity();
    let k = base.order();
    if n < 3 || m < 2 || (n - 1) % (m - 1) != 0 {
        return Err(Error::DivisibilityViolated { m, n });
    }
    if bs.len() != m - 1 {
        return Err(Error::ArityMismatch { expected: m - 1, got: bs.len() });
    }
    if !is_permutation(&phi) || phi.len() != k {
        return Err(Error::ParamConstraintViolated("phi is not a bijection of the carrier".into()));
    }
    let work = checked_pow(k, m);
    if work > cfg.check_budget {
        return Err(Error::BudgetExceeded { work, budget: cfg.check_budget });
    }
    let mut mapped = vec![0usize; m];
    let commutes = for_each_tuple(k, m, |t| {
        for (pos, &x) in t.iter().enumerate() {
            mapped[pos] = phi[x];
        }
        phi[base.op().eval_raw(t)] == base.op().eval_raw(&mapped)
    });
    if !commutes {
        return Err(Error::ParamConstraintViolated(
            "phi does not commute with the base operation".into(),
        ));
    }
    if bs.iter().any(|&b| phi[b] != b) {
        return Err(Error::FixedPointViolated);
    }
    let d = permutation_order(&phi);
    let mut phi_powers = Vec::with_capacity(d);
    let mut current: Vec<usize> = (0..k).collect();
    for _ in 0..d {
        phi_powers.push(current.clone());
        current = compose(&phi, &current);
    }
    let high = &phi_powers[(n - 1) % d];
    let mut left = vec![0usize; m];
    let mut right = vec![0usize; m];
    left[1..].copy_from_slice(&bs);
    right[..m - 1].copy_from_slice(&bs);
    for x in 0..k {
        left[0] = high[x];
        right[m - 1] = x;
        if base.op().eval_raw(&left) != base.op().eval_raw(&right) {
            return Err(Error::InnerPowerViolated(x));
        }
    }
    Ok(KaryHgAlgebra { base, phi, bs, arity: n, phi_powers })
}

/// Builds the n-ary group defined by a generalized triple, as a dense table.
pub fn construct_k(khg: &KaryHgAlgebra, cfg: &Config) -> Result<NaryGroup> {
    let n = khg.arity();
    let k = khg.base().order();
    let cells = checked_pow(k, n);
    if cells > cfg.dense_budget {
        return Err(Error::BudgetExceeded { work: cells, budget: cfg.dense_budget });
    }
    let mut values = Vec::with_capacity(cells as usize);
    for_each_tuple(k, n, |t| {
        values.push(khg.eval(t));
        true
    });
    NaryGroup::certify(NaryOp::from_table(n, k, values, cfg)?, cfg)
}

/// Recovers a generalized triple from an n-ary group at anchor `a` with an
/// m-ary base: the base is the m-ary retract at `a^(r)` with
/// `r = (n-m)/(m-1)`, `phi(x) = f(skew a, a^(n-r-2), x, a^(r))`, the
/// constants `b_3 .. b_m` equal `skew a`, and `b_2` is the unique constant
/// making the reconstruction reproduce `f` (validated by round-trip).
pub fn decompose_k(g: &NaryGroup, a: usize, m: usize, cfg: &Config) -> Result<KaryHgAlgebra> {
    let n = g.arity();
    let k = g.order();
    if m < 2 || n <= m || (n - 1) % (m - 1) != 0 {
        return Err(Error::DivisibilityViolated { m, n });
    }
    let r = (n - m) / (m - 1);
    let base = polyadic::retract(g, &vec![a; r], m, cfg)?;
    let a_bar = g.skew_of(a);
    let mut args = vec![a; n];
    args[0] = a_bar;
    let phi: Vec<usize> = (0..k)
        .map(|x| {
            args[n - r - 1] = x;
            g.op().eval_raw(&args)
        })
        .collect();
    let mut bs = vec![a_bar; m - 1];
    for b2 in 0..k {
        bs[0] = b2;
        let Ok(khg) = certify_khg(base.clone(), phi.clone(), bs.clone(), n, cfg) else {
            continue;
        };
        let reconstructed = construct_k(&khg, cfg)?;
        if eval_equal(g.op(), reconstructed.op(), cfg)? {
            return Ok(khg);
        }
    }
    // the skew-element tail is the expected solution; fall back to a full
    // search over constant tuples before giving up
    let mut result = None;
    for_each_tuple(k, m - 1, |tail| {
        let Ok(khg) = certify_khg(base.clone(), phi.clone(), tail.to_vec(), n, cfg) else {
            return true;
        };
        let Ok(reconstructed) = construct_k(&khg, cfg) else {
            return true;
        };
        if eval_equal(g.op(), reconstructed.op(), cfg).unwrap_or(false) {
            result = Some(khg);
            return false;
        }
        true
    });
    result.ok_or_else(|| {
        Error::ParamConstraintViolated("no constant tuple reproduces the operation".into())
    })
}

/// `f_a(x_1, .., x_n) = x_1 + .. + x_n + a (mod k)`.
pub fn canonical_f_a(k: usize, n: usize, a: usize, cfg: &Config) -> Result<NaryGroup> {
    let base = groups::cyclic(k);
    let id: Vec<usize> = (0..k).collect();
    let phi = Automorphism::certify(&base, id)?;
    construct(certify_hg(base, phi, a, n)?, cfg)
}

fn multiplication_map(k: usize, d: usize) -> Vec<usize> {
    (0..k).map(|x| d * x % k).collect()
}

/// `g_d(x_1, .., x_n) = x_1 + d x_2 + d^2 x_3 + .. + d^(n-2) x_(n-1) + x_n
/// (mod k)`, requiring `d^(n-1) = 1 (mod k)` and `d` outside `{0, 1}`.
pub fn canonical_g_d(k: usize, n: usize, d: usize, cfg: &Config) -> Result<NaryGroup> {
    canonical_g_dc_inner(k, n, d, 0, cfg)
}

/// `g_(d,c)`: the `g_d` form with a trailing constant `c`, requiring
/// additionally `d c = c (mod k)` and `c` outside `{0, 1}`.
pub fn canonical_g_dc(k: usize, n: usize, d: usize, c: usize, cfg: &Config) -> Result<NaryGroup> {
    if c == 0 || c == 1 {
        return Err(Error::ParamConstraintViolated(format!(
            "c = {c} must lie outside {{0, 1}}"
        )));
    }
    if d * c % k != c % k {
        return Err(Error::ParamConstraintViolated(format!(
            "d*c = {dc} differs from c = {c} (mod {k})",
            dc = d * c % k
        )));
    }
    canonical_g_dc_inner(k, n, d, c, cfg)
}

fn canonical_g_dc_inner(k: usize, n: usize, d: usize, c: usize, cfg: &Config) -> Result<NaryGroup> {
    if d == 0 || d == 1 {
        return Err(Error::ParamConstraintViolated(format!(
            "d = {d} must lie outside {{0, 1}}"
        )));
    }
    let mut pow = 1usize;
    for _ in 0..n - 1 {
        pow = pow * d % k;
    }
    if pow != 1 % k {
        return Err(Error::ParamConstraintViolated(format!(
            "d^(n-1) = {pow} differs from 1 (mod {k})"
        )));
    }
    let base = groups::cyclic(k);
    let phi = Automorphism::certify(&base, multiplication_map(k, d))?;
    construct(certify_hg(base, phi, c, n)?, cfg)
}

/// Does `f` have the alternating form
/// `x_1 . x_2^-1 . x_3 . .. . x_(n-1)^-1 . x_n` over an abelian group?
///
/// Checked through the two defining identities: idempotency, and invariance
/// under replacing any adjacent equal pair `y, y` by `z, z`. Only defined
/// for odd arity.
pub fn form19_check(g: &NaryGroup, cfg: &Config) -> Result<bool> {
    let n = g.arity();
    if n % 2 == 0 {
        return Err(Error::EvenArity);
    }
    let k = g.order();
    let work = checked_pow(k, n - 1).saturating_mul((n - 1) as u128);
    if work > cfg.check_budget {
        return Err(Error::BudgetExceeded { work, budget: cfg.check_budget });
    }
    let mut args = vec![0usize; n];
    let idempotent = (0..k).all(|x| {
        args.fill(x);
        g.op().eval_raw(&args) == x
    });
    if !idempotent {
        return Ok(false);
    }
    for i in 0..=n - 2 {
        let ok = for_each_tuple(k, n - 2, |context| {
            args[..i].copy_from_slice(&context[..i]);
            args[i + 2..].copy_from_slice(&context[i..]);
            args[i] = 0;
            args[i + 1] = 0;
            let reference = g.op().eval_raw(&args);
            (1..k).all(|y| {
                args[i] = y;
                args[i + 1] = y;
                g.op().eval_raw(&args) == reference
            })
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for an anchor witnessing that `g` is derived from a
/// t-exponential group: `f(a, .., a) = a` and the iterated identity
/// `f_(t)(a^(n-2), x, a^(n-2), x, .., a) = x` for all `x`.
pub fn k_exponential_check(g: &NaryGroup, t: usize, cfg: &Config) -> Result<Option<usize>> {
    if t == 0 {
        return Err(Error::ParamConstraintViolated("exponent must be positive".into()));
    }
    let n = g.arity();
    let k = g.order();
    let len = t * (n - 1) + 1;
    let work = checked_pow(k, 2).saturating_mul(len as u128);
    if work > cfg.check_budget {
        return Err(Error::BudgetExceeded { work, budget: cfg.check_budget });
    }
    let mut args = vec![0usize; len];
    'anchors: for a in 0..k {
        if g.op().eval_raw(&vec![a; n]) != a {
            continue;
        }
        for x in 0..k {
            args.fill(a);
            for block in 0..t {
                args[block * (n - 1) + n - 2] = x;
            }
            args[len - 1] = a;
            if eval_iterated(g.op(), t, &args)? != x {
                continue 'anchors;
            }
        }
        return Ok(Some(a));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyadic::modular_sum_op;

    fn cfg() -> Config {
        Config::default()
    }

    fn hg_z3_example() -> HgAlgebra {
        let base = groups::cyclic(3);
        let id: Vec<usize> = (0..3).collect();
        let phi = Automorphism::certify(&base, id).unwrap();
        certify_hg(base, phi, 1, 4).unwrap()
    }

    #[test]
    fn certify_examples() {
        hg_z3_example();

        let base = groups::cyclic(5);
        let phi = Automorphism::certify(&base, multiplication_map(5, 2)).unwrap();
        assert!(certify_hg(base.clone(), phi.clone(), 0, 5).is_ok());
        // 2^3 = 8 = 3 (mod 5), so phi^3 is not conjugation by 0
        assert!(matches!(
            certify_hg(base, phi, 0, 4),
            Err(Error::InnerPowerViolated(_))
        ));
    }

    #[test]
    fn certify_rejects_moved_constant() {
        let base = groups::cyclic(5);
        let phi = Automorphism::certify(&base, multiplication_map(5, 2)).unwrap();
        assert!(matches!(certify_hg(base, phi, 3, 5), Err(Error::FixedPointViolated)));
    }

    #[test]
    fn construct_example_one() {
        let g = construct(hg_z3_example(), &cfg()).unwrap();
        let expected = modular_sum_op(3, 4, 1, &cfg());
        assert!(eval_equal(g.op(), &expected, &cfg()).unwrap());
    }

    #[test]
    fn construct_derived_ternary_sum() {
        let base = groups::cyclic(3);
        let id: Vec<usize> = (0..3).collect();
        let phi = Automorphism::certify(&base, id).unwrap();
        let g = construct(certify_hg(base, phi, 0, 3).unwrap(), &cfg()).unwrap();
        assert!(eval_equal(g.op(), &modular_sum_op(3, 3, 0, &cfg()), &cfg()).unwrap());
    }

    #[test]
    fn construct_g_d_expands_phi_powers() {
        let base = groups::cyclic(5);
        let phi = Automorphism::certify(&base, multiplication_map(5, 2)).unwrap();
        let g = construct(certify_hg(base, phi, 0, 5).unwrap(), &cfg()).unwrap();
        // x1 + 2 x2 + 4 x3 + 3 x4 + x5 (mod 5)
        for_each_tuple(5, 5, |t| {
            let expected = (t[0] + 2 * t[1] + 4 * t[2] + 3 * t[3] + t[4]) % 5;
            assert_eq!(g.op().eval_raw(t), expected);
            true
        });
    }

    #[test]
    fn materialization_agrees_with_lazy_eval() {
        let g = construct(hg_z3_example(), &cfg()).unwrap();
        let dense = g.op().to_dense(&cfg()).unwrap();
        assert!(eval_equal(g.op(), &dense, &cfg()).unwrap());
    }

    #[test]
    fn decompose_example_one() {
        let f1 = NaryGroup::certify(modular_sum_op(3, 4, 1, &cfg()), &cfg()).unwrap();
        let hg = decompose(&f1, 0).unwrap();
        assert_eq!(hg.base().identity(), 2);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(hg.base().mul(x, y), (x + y + 1) % 3);
            }
        }
        assert!(hg.phi().is_identity());
        assert_eq!(hg.b(), 0);
        let rebuilt = construct(hg, &cfg()).unwrap();
        assert!(eval_equal(f1.op(), rebuilt.op(), &cfg()).unwrap());
    }

    #[test]
    fn decompose_ternary_sum() {
        let g = NaryGroup::certify(modular_sum_op(5, 3, 0, &cfg()), &cfg()).unwrap();
        let hg = decompose(&g, 0).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(hg.base().mul(x, y), (x + y) % 5);
            }
        }
        assert!(hg.phi().is_identity());
        assert_eq!(hg.b(), 0);
    }

    #[test]
    fn round_trip_at_every_anchor() {
        for (k, n, c) in [(3, 4, 1), (4, 3, 2), (5, 3, 0)] {
            let g = NaryGroup::certify(modular_sum_op(k, n, c, &cfg()), &cfg()).unwrap();
            for a in 0..k {
                let rebuilt = construct(decompose(&g, a).unwrap(), &cfg()).unwrap();
                assert!(eval_equal(g.op(), rebuilt.op(), &cfg()).unwrap(), "k={k} n={n} a={a}");
            }
        }
    }

    #[test]
    fn reverse_round_trip_reproduces_operation() {
        let g = construct(hg_z3_example(), &cfg()).unwrap();
        let hg2 = decompose(&g, 0).unwrap();
        let rebuilt = construct(hg2, &cfg()).unwrap();
        assert!(eval_equal(g.op(), rebuilt.op(), &cfg()).unwrap());
    }

    #[test]
    fn k_ary_round_trip_ternary_base() {
        // 5-ary sum mod 3 over its ternary retract
        let g = NaryGroup::certify(modular_sum_op(3, 5, 0, &cfg()), &cfg()).unwrap();
        let khg = decompose_k(&g, 0, 3, &cfg()).unwrap();
        assert_eq!(khg.base().arity(), 3);
        let rebuilt = construct_k(&khg, &cfg()).unwrap();
        assert!(eval_equal(g.op(), rebuilt.op(), &cfg()).unwrap());
    }

    #[test]
    fn k_ary_round_trip_two_element_carrier() {
        let g = NaryGroup::certify(modular_sum_op(2, 7, 1, &cfg()), &cfg()).unwrap();
        let khg = decompose_k(&g, 0, 4, &cfg()).unwrap();
        let rebuilt = construct_k(&khg, &cfg()).unwrap();
        assert!(eval_equal(g.op(), rebuilt.op(), &cfg()).unwrap());
    }

    #[test]
    fn k_ary_divisibility_guard() {
        let g = NaryGroup::certify(modular_sum_op(3, 5, 0, &cfg()), &cfg()).unwrap();
        assert!(matches!(
            decompose_k(&g, 0, 4, &cfg()),
            Err(Error::DivisibilityViolated { m: 4, n: 5 })
        ));
    }

    #[test]
    fn canonical_families() {
        let f1 = canonical_f_a(3, 4, 1, &cfg()).unwrap();
        assert!(eval_equal(f1.op(), &modular_sum_op(3, 4, 1, &cfg()), &cfg()).unwrap());

        let gd = canonical_g_d(5, 5, 2, &cfg()).unwrap();
        for_each_tuple(5, 5, |t| {
            let expected = (t[0] + 2 * t[1] + 4 * t[2] + 3 * t[3] + t[4]) % 5;
            assert_eq!(gd.op().eval_raw(t), expected);
            true
        });

        // 3^2 = 1 (mod 4) and 3 * 2 = 2 (mod 4)
        assert!(canonical_g_dc(4, 3, 3, 2, &cfg()).is_ok());
    }

    #[test]
    fn canonical_constraints() {
        assert!(matches!(
            canonical_g_d(5, 4, 2, &cfg()),
            Err(Error::ParamConstraintViolated(_))
        )); // 2^3 = 3 (mod 5)
        assert!(matches!(
            canonical_g_d(5, 5, 1, &cfg()),
            Err(Error::ParamConstraintViolated(_))
        ));
        assert!(matches!(
            canonical_g_dc(4, 3, 3, 1, &cfg()),
            Err(Error::ParamConstraintViolated(_))
        ));
        assert!(matches!(
            canonical_g_dc(5, 5, 2, 3, &cfg()),
            Err(Error::ParamConstraintViolated(_))
        )); // 2 * 3 = 1 != 3 (mod 5)
    }

    #[test]
    fn form19_on_maltsev_and_sums() {
        let mut values = Vec::new();
        for_each_tuple(5, 3, |t| {
            values.push((t[0] + 5 - t[1] + t[2]) % 5);
            true
        });
        let maltsev = NaryGroup::certify(NaryOp::from_table(3, 5, values, &cfg()).unwrap(), &cfg()).unwrap();
        assert!(form19_check(&maltsev, &cfg()).unwrap());

        let sum = NaryGroup::certify(modular_sum_op(3, 3, 0, &cfg()), &cfg()).unwrap();
        assert!(!form19_check(&sum, &cfg()).unwrap());

        let f1 = NaryGroup::certify(modular_sum_op(3, 4, 1, &cfg()), &cfg()).unwrap();
        assert_eq!(form19_check(&f1, &cfg()), Err(Error::EvenArity));
    }

    #[test]
    fn exponential_anchors() {
        let sum = NaryGroup::certify(modular_sum_op(5, 3, 0, &cfg()), &cfg()).unwrap();
        assert_eq!(k_exponential_check(&sum, 1, &cfg()).unwrap(), Some(0));

        let gd = canonical_g_d(5, 5, 2, &cfg()).unwrap();
        assert_eq!(k_exponential_check(&gd, 2, &cfg()).unwrap(), Some(0));

        let f1 = NaryGroup::certify(modular_sum_op(3, 4, 1, &cfg()), &cfg()).unwrap();
        assert_eq!(k_exponential_check(&f1, 1, &cfg()).unwrap(), None);
    }

    #[test]
    fn skew_closed_form_matches_scan() {
        let base = groups::cyclic(7);
        let phi = Automorphism::certify(&base, multiplication_map(7, 3)).unwrap();
        // 3^6 = 1 (mod 7)
        let g = construct(certify_hg(base, phi, 0, 7).unwrap(), &cfg()).unwrap();
        let scanned = polyadic::derive_skew(g.op()).unwrap();
        assert_eq!(g.skew_map(), &scanned[..]);
    }
}
