//! Small combinatorial helpers shared across modules.

/// Iterates over all tuples in `{0..base}^len` in lexicographic order,
/// last coordinate fastest. Calls `f` on each tuple; stops early (returning
/// `false`) as soon as `f` returns `false`.
pub fn for_each_tuple(base: usize, len: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut tuple = vec![0usize; len];
    loop {
        if !f(&tuple) {
            return false;
        }
        // odometer step
        let mut pos = len;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < base {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// `base^exp` without overflow surprises; saturates at `u128::MAX`.
pub fn checked_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(k: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(k, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(k, &mut current, &mut used, &mut out);
    out
}

/// Composition `a . b`, i.e. the map `x -> a[b[x]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// Inverse of a permutation.
pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let k = p.len();
    let mut seen = vec![false; k];
    for &v in p {
        if v >= k || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Multiplicative order of the permutation `p`.
pub fn permutation_order(p: &[usize]) -> usize {
    let k = p.len();
    let identity: Vec<usize> = (0..k).collect();
    let mut acc = p.to_vec();
    let mut ord = 1;
    while acc != identity {
        acc = compose(p, &acc);
        ord += 1;
    }
    ord
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_covers_all_tuples() {
        let mut seen = Vec::new();
        for_each_tuple(3, 2, |t| {
            seen.push(t.to_vec());
            true
        });
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]); // last coordinate fastest
        assert_eq!(seen[8], vec![2, 2]);
    }

    #[test]
    fn permutation_order_of_three_cycle() {
        assert_eq!(permutation_order(&[1, 2, 0]), 3);
        assert_eq!(permutation_order(&[0, 1, 2]), 1);
    }

    #[test]
    fn lex_permutations() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], vec![0, 1, 2]);
        assert_eq!(ps[5], vec![2, 1, 0]);
    }
}
