//! Finite binary groups as multiplication tables, a catalog of all groups of
//! order at most 8, automorphism groups and isomorphism testing.
//!
//! Elements are integer indices `0..k-1`; labels are cosmetic.

use crate::error::{Error, Result};
use crate::util;

/// The largest order supported by the catalog and the permutation searches.
pub const MAX_ORDER: usize = 8;

/// A finite group given by its multiplication table, certified at
/// construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryGroup {
    order: usize,
    mul: Vec<usize>, // k*k, row major
    identity: usize,
    inv: Vec<usize>,
    label: Option<String>,
}

impl BinaryGroup {
    /// Checks the group axioms on `table` and returns a certified group.
    ///
    /// The error names the first violated axiom together with a witness:
    /// `MalformedTable`, `NotAssociative`, `NoIdentity` or `NoInverse`.
    pub fn validate(table: &[Vec<usize>]) -> Result<BinaryGroup> {
        let k = table.len();
        if k == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for row in table {
            if row.len() != k {
                return Err(Error::MalformedTable(format!(
                    "expected {k} columns, got {}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= k {
                    return Err(Error::MalformedTable(format!(
                        "entry {v} out of range 0..{k}"
                    )));
                }
            }
        }
        let mul: Vec<usize> = table.iter().flatten().copied().collect();
        let at = |x: usize, y: usize| mul[x * k + y];
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(Error::NotAssociative { x, y, z });
                    }
                }
            }
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let mut inv = vec![0; k];
        for x in 0..k {
            inv[x] = (0..k)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or(Error::NoInverse(x))?;
        }
        Ok(BinaryGroup {
            order: k,
            mul,
            identity,
            inv,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// Rows of the multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// `x^m` for any integer `m`.
    pub fn pow(&self, x: usize, m: i64) -> usize {
        let base = if m < 0 { self.inv[x] } else { x };
        let mut acc = self.identity;
        for _ in 0..m.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Order of the element `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut ord = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            ord += 1;
        }
        ord
    }

    /// Group exponent: the lcm of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1u64, |acc, x| util::lcm(acc, self.element_order(x) as u64)) as usize
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        profile.sort_unstable();
        profile
    }
}

/// A permutation of a group's carrier certified to be an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    map: Vec<usize>,
}

impl Automorphism {
    /// Certifies that `map` is a bijective homomorphism of `base`.
    pub fn certify(base: &BinaryGroup, map: Vec<usize>) -> Result<Automorphism> {
        let k = base.order();
        if map.len() != k || !util::is_permutation(&map) {
            return Err(Error::MalformedTable("map is not a permutation".into()));
        }
        for x in 0..k {
            for y in 0..k {
                if map[base.mul(x, y)] != base.mul(map[x], map[y]) {
                    return Err(Error::MalformedTable(format!(
                        "map is not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        debug_assert_eq!(map[base.identity()], base.identity());
        Ok(Automorphism { map })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn order(&self) -> usize {
        util::permutation_order(&self.map)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// All automorphisms of `g`, in lexicographic order of their maps.
///
/// The search fixes the identity and only tries images of matching element
/// order; with `k <= 8` this is instant.
pub fn automorphisms(g: &BinaryGroup) -> Result<Vec<Automorphism>> {
    let k = g.order();
    if k > MAX_ORDER {
        return Err(Error::OrderTooLarge(k));
    }
    let orders: Vec<usize> = (0..k).map(|x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; k];
    map[g.identity()] = g.identity();
    search_homomorphisms(g, g, &orders, &orders, &mut map, 0, &mut |m| {
        out.push(Automorphism { map: m.to_vec() });
        true
    });
    Ok(out)
}

/// First group isomorphism `g1 -> g2` in lexicographic search order, if any.
pub fn group_isomorphic(g1: &BinaryGroup, g2: &BinaryGroup) -> Option<Vec<usize>> {
    if g1.order() != g2.order() || g1.order_profile() != g2.order_profile() {
        return None;
    }
    let k = g1.order();
    let o1: Vec<usize> = (0..k).map(|x| g1.element_order(x)).collect();
    let o2: Vec<usize> = (0..k).map(|x| g2.element_order(x)).collect();
    let mut map = vec![usize::MAX; k];
    map[g1.identity()] = g2.identity();
    let mut found = None;
    search_homomorphisms(g1, g2, &o1, &o2, &mut map, 0, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

/// All group isomorphisms `g1 -> g2`, in lexicographic order of their maps.
pub fn isomorphisms(g1: &BinaryGroup, g2: &BinaryGroup) -> Vec<Vec<usize>> {
    if g1.order() != g2.order() || g1.order_profile() != g2.order_profile() {
        return Vec::new();
    }
    let k = g1.order();
    let o1: Vec<usize> = (0..k).map(|x| g1.element_order(x)).collect();
    let o2: Vec<usize> = (0..k).map(|x| g2.element_order(x)).collect();
    let mut map = vec![usize::MAX; k];
    map[g1.identity()] = g2.identity();
    let mut out = Vec::new();
    search_homomorphisms(g1, g2, &o1, &o2, &mut map, 0, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Backtracking over images of elements `0..k` in order, skipping already
/// assigned ones. Prunes by element order and by partial homomorphism
/// consistency. `emit` returns `false` to stop the search.
fn search_homomorphisms(
    g1: &BinaryGroup,
    g2: &BinaryGroup,
    o1: &[usize],
    o2: &[usize],
    map: &mut Vec<usize>,
    next: usize,
    emit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let k = g1.order();
    let Some(x) = (next..k).find(|&x| map[x] == usize::MAX) else {
        // the partial checks skip pairs whose product had no image yet
        let hom = (0..k)
            .all(|x| (0..k).all(|y| map[g1.mul(x, y)] == g2.mul(map[x], map[y])));
        return if hom { emit(map) } else { true };
    };
    for image in 0..k {
        if o2[image] != o1[x] || map.iter().any(|&v| v == image) {
            continue;
        }
        map[x] = image;
        if partial_hom_ok(g1, g2, map, x) && !search_homomorphisms(g1, g2, o1, o2, map, x + 1, emit)
        {
            map[x] = usize::MAX;
            return false;
        }
        map[x] = usize::MAX;
    }
    true
}

fn partial_hom_ok(g1: &BinaryGroup, g2: &BinaryGroup, map: &[usize], x: usize) -> bool {
    let k = g1.order();
    for y in 0..k {
        if map[y] == usize::MAX {
            continue;
        }
        for (a, b) in [(x, y), (y, x)] {
            let p = g1.mul(a, b);
            if map[p] != usize::MAX && g2.mul(map[a], map[b]) != map[p] {
                return false;
            }
        }
    }
    true
}

/// The cyclic group `(Z_k; +)`.
pub fn cyclic(k: usize) -> BinaryGroup {
    let table: Vec<Vec<usize>> = (0..k)
        .map(|x| (0..k).map(|y| (x + y) % k).collect())
        .collect();
    BinaryGroup::validate(&table)
        .expect("cyclic table")
        .with_label(format!("Z{k}"))
}

fn direct_product(a: &BinaryGroup, b: &BinaryGroup, label: &str) -> BinaryGroup {
    let (ka, kb) = (a.order(), b.order());
    let k = ka * kb;
    let table: Vec<Vec<usize>> = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| {
                    let (xa, xb) = (x / kb, x % kb);
                    let (ya, yb) = (y / kb, y % kb);
                    a.mul(xa, ya) * kb + b.mul(xb, yb)
                })
                .collect()
        })
        .collect();
    BinaryGroup::validate(&table)
        .expect("product table")
        .with_label(label)
}

/// Dihedral group of order `2n`: element `f*n + i` is the map `x -> (-1)^f x + i`.
fn dihedral(n: usize, label: &str) -> BinaryGroup {
    let k = 2 * n;
    let table: Vec<Vec<usize>> = (0..k)
        .map(|x| {
            (0..k)
                .map(|y| {
                    let (f1, i1) = (x / n, x % n);
                    let (f2, i2) = (y / n, y % n);
                    let i = if f1 == 1 { (n + i1 - i2) % n } else { (i1 + i2) % n };
                    (f1 ^ f2) * n + i
                })
                .collect()
        })
        .collect();
    BinaryGroup::validate(&table)
        .expect("dihedral table")
        .with_label(label)
}

/// Quaternion group: elements `s*4 + u` with sign `s` and unit `u` in
/// `{1, i, j, k}`.
fn quaternion() -> BinaryGroup {
    // unit products and the sign they produce
    let unit = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, u) => (u, 0),
            (u, 0) => (u, 0),
            (u, v) if u == v => (0, 1),
            (1, 2) => (3, 0),
            (2, 3) => (1, 0),
            (3, 1) => (2, 0),
            (2, 1) => (3, 1),
            (3, 2) => (1, 1),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let table: Vec<Vec<usize>> = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s1, u1) = (x / 4, x % 4);
                    let (s2, u2) = (y / 4, y % 4);
                    let (u, s) = unit(u1, u2);
                    ((s1 + s2 + s) % 2) * 4 + u
                })
                .collect()
        })
        .collect();
    BinaryGroup::validate(&table)
        .expect("quaternion table")
        .with_label("Q8")
}

/// Pairwise non-isomorphic representatives of all groups of the given order.
pub fn catalog(order: usize) -> Result<Vec<BinaryGroup>> {
    match order {
        1..=3 | 5 | 7 => Ok(vec![cyclic(order)]),
        4 => Ok(vec![
            cyclic(4),
            direct_product(&cyclic(2), &cyclic(2), "Z2xZ2"),
        ]),
        6 => Ok(vec![cyclic(6), dihedral(3, "S3")]),
        8 => Ok(vec![
            cyclic(8),
            direct_product(&cyclic(4), &cyclic(2), "Z4xZ2"),
            direct_product(&direct_product(&cyclic(2), &cyclic(2), ""), &cyclic(2), "Z2xZ2xZ2"),
            dihedral(4, "D4"),
            quaternion(),
        ]),
        _ => Err(Error::UnsupportedOrder(order)),
    }
}
