//! Dominantization under the Weyl groups of type A (permutations) and type C
//! (signed permutations).
//!
//! Lengths are counted as the number of positive roots made negative, which
//! is the cohomological degree that Borel-Bott-Weil assigns.

use std::fmt;

/// Why a vector has no regular dominant representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// Two entries coincide (type A) at positions `i < j`.
    RepeatedEntry { i: usize, j: usize },
    /// An entry is zero (type C).
    ZeroEntry { i: usize },
    /// Two entries share an absolute value (type C).
    RepeatedAbsValue { i: usize, j: usize },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::RepeatedEntry { i, j } => write!(f, "entries {i} and {j} coincide"),
            Degeneracy::ZeroEntry { i } => write!(f, "entry {i} is zero"),
            Degeneracy::RepeatedAbsValue { i, j } => {
                write!(f, "entries {i} and {j} share an absolute value")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominantization {
    Degenerate(Degeneracy),
    /// `sorted` is strictly decreasing (all positive in type C).
    Regular { sorted: Vec<i64>, length: usize },
}

impl Dominantization {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Dominantization::Degenerate(_))
    }

    pub fn length(&self) -> Option<usize> {
        match self {
            Dominantization::Regular { length, .. } => Some(*length),
            Dominantization::Degenerate(_) => None,
        }
    }
}

/// Type A: sort decreasingly, length = number of inversions `v_i < v_j`, `i < j`.
pub fn dominantize_a(v: &[i64]) -> Dominantization {
    let n = v.len();
    let mut length = 0;
    for i in 0..n {
        for j in i + 1..n {
            if v[i] == v[j] {
                return Dominantization::Degenerate(Degeneracy::RepeatedEntry { i, j });
            }
            if v[i] < v[j] {
                length += 1;
            }
        }
    }
    let mut sorted = v.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Dominantization::Regular { sorted, length }
}

/// Type C: sort absolute values decreasingly. The length counts the positive
/// roots `e_i - e_j`, `e_i + e_j` and `2e_i` that `v` pairs negatively with.
pub fn dominantize_c(v: &[i64]) -> Dominantization {
    let n = v.len();
    if let Some(i) = v.iter().position(|&x| x == 0) {
        return Dominantization::Degenerate(Degeneracy::ZeroEntry { i });
    }
    let mut length = v.iter().filter(|&&x| x < 0).count();
    for i in 0..n {
        for j in i + 1..n {
            if v[i].abs() == v[j].abs() {
                return Dominantization::Degenerate(Degeneracy::RepeatedAbsValue { i, j });
            }
            if v[i] < v[j] {
                length += 1;
            }
            if v[i] + v[j] < 0 {
                length += 1;
            }
        }
    }
    let mut sorted: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Dominantization::Regular { sorted, length }
}

/// Cheap sufficient test for type-C degeneracy: some `m >= 0` has at least
/// `m + 1` entries of absolute value `<= m` (pigeonhole on `{1..m}`).
pub fn quick_vanish_c(v: &[i64]) -> bool {
    let max = v.iter().map(|x| x.abs()).max().unwrap_or(0);
    (0..=max).any(|m| v.iter().filter(|x| x.abs() <= m).count() as i64 > m)
}

/// `n!`
pub fn weyl_order_a(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `2^n · n!`
pub fn weyl_order_c(n: usize) -> u64 {
    (1u64 << n) * weyl_order_a(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn regular(sorted: &[i64], length: usize) -> Dominantization {
        Dominantization::Regular {
            sorted: sorted.to_vec(),
            length,
        }
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(dominantize_a(&[4, 3, 2, 1]), regular(&[4, 3, 2, 1], 0));
        assert_eq!(dominantize_a(&[-1, -3, 1]), regular(&[1, -1, -3], 2));
        assert!(dominantize_a(&[2, 1, 1]).is_degenerate());
    }

    #[test]
    fn type_c_examples() {
        assert_eq!(dominantize_c(&[2, -3, -4, 1]), regular(&[4, 3, 2, 1], 9));
        assert_eq!(dominantize_c(&[4, 2, -3, 1]), regular(&[4, 3, 2, 1], 4));
        assert_eq!(
            dominantize_c(&[4, 2, -1, 1]),
            Dominantization::Degenerate(Degeneracy::RepeatedAbsValue { i: 2, j: 3 })
        );
        assert_eq!(
            dominantize_c(&[3, 0, 1]),
            Dominantization::Degenerate(Degeneracy::ZeroEntry { i: 1 })
        );
        assert_eq!(dominantize_c(&[5, 4, 2, 1]), regular(&[5, 4, 2, 1], 0));
    }

    #[test]
    fn quick_vanish_examples() {
        assert!(quick_vanish_c(&[6, 3, 1, 1]));
        assert!(!quick_vanish_c(&[4, 3, 2, 1]));
        assert!(quick_vanish_c(&[4, 2, -1, 1]));
        assert!(quick_vanish_c(&[0]));
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_order_c(4), 384);
        assert_eq!(weyl_order_c(1), 2);
        assert_eq!(weyl_order_a(3), 6);
        assert_eq!(weyl_order_c(4) / (weyl_order_a(3) * weyl_order_c(1)), 32);
        assert_eq!(weyl_order_a(1), 1);
    }

    /// Enumerates the signed permutations of `n` letters by closing the
    /// identity under the simple reflections.
    fn signed_perm_group(n: usize) -> u64 {
        let start: Vec<i64> = (1..=n as i64).collect();
        let mut seen = std::collections::HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in simple_reflections(&v) {
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() as u64
    }

    fn simple_reflections(v: &[i64]) -> Vec<Vec<i64>> {
        let n = v.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n - 1 {
            let mut w = v.to_vec();
            w.swap(i, i + 1);
            out.push(w);
        }
        let mut w = v.to_vec();
        w[n - 1] = -w[n - 1];
        out.push(w);
        out
    }

    #[test]
    fn signed_permutation_group_order() {
        assert_eq!(signed_perm_group(2), weyl_order_c(2));
        assert_eq!(signed_perm_group(3), weyl_order_c(3));
    }

    /// Word length found by breadth-first search from `v` to its dominant
    /// chamber along simple reflections (s_i swaps i,i+1; s_n negates the last).
    fn bfs_length(v: &[i64]) -> usize {
        let is_dom = |w: &[i64]| w.windows(2).all(|p| p[0] > p[1]) && w[w.len() - 1] > 0;
        let mut dist = HashMap::from([(v.to_vec(), 0usize)]);
        let mut queue = VecDeque::from([v.to_vec()]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            if is_dom(&w) {
                return d;
            }
            for x in simple_reflections(&w) {
                if !dist.contains_key(&x) {
                    dist.insert(x.clone(), d + 1);
                    queue.push_back(x);
                }
            }
        }
        unreachable!("the orbit always meets the dominant chamber")
    }

    fn all_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (lo..=hi).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn root_count_matches_bfs_word_length() {
        for n in 1..=3 {
            for v in all_vectors(n, -4, 4) {
                match dominantize_c(&v) {
                    Dominantization::Regular { length, .. } => {
                        assert_eq!(length, bfs_length(&v), "{v:?}")
                    }
                    Dominantization::Degenerate(_) => {
                        let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
                        abs.sort();
                        abs.dedup();
                        assert!(v.contains(&0) || abs.len() < v.len());
                    }
                }
            }
        }
    }

    #[test]
    fn quick_vanish_implies_degenerate() {
        for v in all_vectors(4, -5, 5) {
            if quick_vanish_c(&v) {
                assert!(dominantize_c(&v).is_degenerate(), "{v:?}");
            }
        }
    }

    #[test]
    fn length_bounds_and_antidominant_chamber() {
        for n in 1..=4usize {
            for v in all_vectors(n, -6, 6) {
                if let Some(l) = dominantize_c(&v).length() {
                    assert!(l <= n * n);
                }
                if let Some(l) = dominantize_a(&v).length() {
                    assert!(l <= n * (n - 1) / 2);
                }
            }
            // -ρ minus a dominant perturbation lies in the antidominant chamber.
            let rho: Vec<i64> = (1..=n as i64).rev().collect();
            for bump in 0..3 {
                let v: Vec<i64> = rho.iter().map(|r| -r - bump).collect();
                if bump == 0 || dominantize_c(&v).length().is_some() {
                    assert_eq!(dominantize_c(&v).length(), Some(n * n));
                }
                let w: Vec<i64> = rho.iter().rev().map(|r| r + bump).collect();
                assert_eq!(dominantize_a(&w).length(), Some(n * (n - 1) / 2));
            }
        }
    }

    #[test]
    fn idempotent_on_outputs() {
        for v in all_vectors(3, -5, 5) {
            if let Dominantization::Regular { sorted, .. } = dominantize_c(&v) {
                assert_eq!(dominantize_c(&sorted), regular(&sorted, 0));
            }
            if let Dominantization::Regular { sorted, .. } = dominantize_a(&v) {
                assert_eq!(dominantize_a(&sorted), regular(&sorted, 0));
            }
        }
    }
}
