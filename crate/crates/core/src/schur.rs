//! Tensor-product decompositions and Weyl dimension formulas.
//!
//! Mixed tensors `Σ^α U ⊗ Σ^β U^∨` are reduced to products of two
//! `U^∨`-Schur functors by dualizing the `U` side, then shifted to partitions
//! and decomposed by Littlewood-Richardson tableau enumeration.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{EngineError, Result};
use crate::weight::{GLWeight, SpWeight};

/// `Σ mult · Σ^γ`, keyed by dominant `γ`.
pub type Decomposition = BTreeMap<GLWeight, u64>;

/// Dimension of the `GL(rank)` irreducible with highest weight `w`.
pub fn dim_gl(w: &GLWeight) -> Result<u64> {
    if !w.is_dominant() {
        return Err(EngineError::NonDominant(w.entries().to_vec()));
    }
    let v = w.entries();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            num *= v[i] - v[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    Ok(exact_quotient(num, den))
}

/// Dimension of the `Sp(2n)` irreducible with highest weight `w`, `n = rank(w)`.
pub fn dim_sp(w: &SpWeight) -> u64 {
    let n = w.rank();
    let rho: Vec<i64> = (1..=n as i64).rev().collect();
    let l: Vec<i64> = w.entries().iter().zip(&rho).map(|(a, r)| a + r).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= l[i];
        den *= rho[i];
        for j in i + 1..n {
            num *= l[i] * l[i] - l[j] * l[j];
            den *= rho[i] * rho[i] - rho[j] * rho[j];
        }
    }
    exact_quotient(num, den)
}

fn exact_quotient(num: BigInt, den: BigInt) -> u64 {
    debug_assert!((&num % &den) == BigInt::from(0));
    (num / den)
        .to_u64()
        .expect("Weyl dimension fits in u64 for the weights handled here")
}

type LrKey = (Vec<i64>, Vec<i64>, usize);

fn lr_memo() -> &'static DashMap<LrKey, Arc<Decomposition>> {
    static MEMO: OnceLock<DashMap<LrKey, Arc<Decomposition>>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// Littlewood-Richardson coefficients `c^γ_{αβ}` for partitions `α`, `β`,
/// discarding `γ` with more than `rank` nonzero rows. Keys have length `rank`.
pub fn lr_coefficients(alpha: &[i64], beta: &[i64], rank: usize) -> Arc<Decomposition> {
    let key = (alpha.to_vec(), beta.to_vec(), rank);
    if let Some(hit) = lr_memo().get(&key) {
        return Arc::clone(&hit);
    }
    let result = Arc::new(lr_enumerate(alpha, beta, rank));
    lr_memo().insert(key, Arc::clone(&result));
    result
}

fn is_partition(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && GLWeight::from(v).is_dominant()
}

/// Fills the boxes of `β` label by label: the boxes labelled `i` form a
/// horizontal strip of size `β_i`, and in every prefix of rows the `i`s may not
/// outnumber the `(i-1)`s of the strictly higher rows (lattice word condition).
fn lr_enumerate(alpha: &[i64], beta: &[i64], rank: usize) -> Decomposition {
    let mut out = Decomposition::new();
    let rows = alpha.iter().filter(|&&x| x > 0).count();
    if !is_partition(alpha) || !is_partition(beta) || rows > rank {
        return out;
    }
    let mut shape: Vec<i64> = alpha[..rows].to_vec();
    shape.resize(rank, 0);
    let content: Vec<i64> = beta.iter().copied().filter(|&x| x > 0).collect();
    let prev = vec![0i64; rank];
    add_label(&shape, &content, 0, &prev, &mut out);
    out
}

fn add_label(
    shape: &[i64],
    content: &[i64],
    label: usize,
    prev_counts: &[i64],
    out: &mut Decomposition,
) {
    if label == content.len() {
        *out.entry(GLWeight::from(shape)).or_insert(0) += 1;
        return;
    }
    let mut counts = vec![0i64; shape.len()];
    strip(shape, content, label, prev_counts, 0, content[label], &mut counts, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    shape: &[i64],
    content: &[i64],
    label: usize,
    prev_counts: &[i64],
    row: usize,
    remaining: i64,
    counts: &mut Vec<i64>,
    out: &mut Decomposition,
) {
    if remaining == 0 {
        let next: Vec<i64> = shape.iter().zip(counts.iter()).map(|(s, c)| s + c).collect();
        add_label(&next, content, label + 1, counts, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { remaining } else { (shape[row - 1] - shape[row]).min(remaining) };
    for take in 0..=cap {
        counts[row] = take;
        if label > 0 {
            let mine: i64 = counts[..=row].iter().sum();
            let above: i64 = prev_counts[..row].iter().sum();
            if mine > above {
                break;
            }
        }
        strip(shape, content, label, prev_counts, row + 1, remaining - take, counts, out);
    }
    counts[row] = 0;
}

/// `Σ^a U^∨ ⊗ Σ^b U^∨` for dominant weights of equal rank.
pub fn tensor_gl(a: &GLWeight, b: &GLWeight) -> Result<Decomposition> {
    if a.rank() != b.rank() {
        return Err(EngineError::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    for w in [a, b] {
        if !w.is_dominant() {
            return Err(EngineError::NonDominant(w.entries().to_vec()));
        }
    }
    let k = a.rank();
    if k == 0 {
        return Ok(Decomposition::from([(GLWeight::zero(0), 1)]));
    }
    let (sa, sb) = (a.entries()[k - 1], b.entries()[k - 1]);
    let pa = a.twist(-sa);
    let pb = b.twist(-sb);
    let lr = lr_coefficients(pa.entries(), pb.entries(), k);
    Ok(lr.iter().map(|(g, &m)| (g.twist(sa + sb), m)).collect())
}

/// `Σ^α U ⊗ Σ^β U^∨`, expressed in `U^∨`-Schur functors.
pub fn tensor_mixed(alpha: &GLWeight, beta: &GLWeight) -> Result<Decomposition> {
    let out = tensor_gl(&alpha.dualize(), beta)?;
    let k = alpha.rank();
    let (a, b) = (alpha.entries(), beta.entries());
    let total = beta.sum() - alpha.sum();
    for g in out.keys() {
        let ge = g.entries();
        assert_eq!(g.sum(), total, "degree not conserved in {alpha} x {beta}");
        for i in 0..k {
            // box bounds, shifted from the partition case by a_k and b_k
            assert!(
                b[k - 1] - a[k - 1 - i] <= ge[i] && ge[i] <= b[i] - a[k - 1],
                "summand {g} of {alpha} x {beta} leaves the box"
            );
        }
    }
    Ok(out)
}

/// Clebsch-Gordan for the rank-2 symplectic bundle: `S^a ⊗ S^b = ⊕ S^{a+b-2i}`.
pub fn tensor_s(a: u32, b: u32) -> BTreeMap<u32, u64> {
    (0..=a.min(b)).map(|i| (a + b - 2 * i, 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn w(v: &[i64]) -> GLWeight {
        GLWeight::from(v)
    }

    fn decomposition(items: &[(&[i64], u64)]) -> Decomposition {
        items.iter().map(|(g, m)| (w(g), *m)).collect()
    }

    #[test]
    fn dim_gl_examples() {
        assert_eq!(dim_gl(&w(&[2, 1, 0])).unwrap(), 8);
        assert_eq!(dim_gl(&w(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(dim_gl(&w(&[3, 1, 0])).unwrap(), 15);
        assert_eq!(dim_gl(&w(&[3, 3, 0])).unwrap(), 10);
        assert_eq!(dim_gl(&w(&[4, 2, 0])).unwrap(), 27);
        assert_eq!(dim_gl(&w(&[3, 1, 0, 0, 0, 0, 0, 0])).unwrap(), 630);
        assert!(dim_gl(&w(&[0, 1, 0])).is_err());
    }

    #[test]
    fn dim_sp_examples() {
        let d = |v: &[i64]| dim_sp(&SpWeight::new(v.to_vec()).unwrap());
        assert_eq!(d(&[1, 0, 0, 0]), 8);
        assert_eq!(d(&[0, 0, 0, 0]), 1);
        assert_eq!(d(&[1, 1, 0, 0]), 27);
        assert_eq!(d(&[2, 0, 0, 0]), 36);
        assert_eq!(d(&[2, 1, 0, 0]), 160);
        assert_eq!(d(&[3, 0, 0, 0]), 120);
        assert_eq!(d(&[3, 1, 0, 0]), 594);
        assert_eq!(d(&[1, 1, 1, 1]), 42);
        assert_eq!(d(&[1, 0]), 4);
    }

    #[test]
    fn lr_examples() {
        assert_eq!(
            *lr_coefficients(&[2, 1], &[1, 1], 3),
            decomposition(&[(&[3, 2, 0], 1), (&[3, 1, 1], 1), (&[2, 2, 1], 1)])
        );
        assert_eq!(*lr_coefficients(&[4, 2], &[0], 2), decomposition(&[(&[4, 2], 1)]));
        assert_eq!(
            *lr_coefficients(&[1], &[1], 3),
            decomposition(&[(&[2, 0, 0], 1), (&[1, 1, 0], 1)])
        );
        assert_eq!(
            lr_coefficients(&[2, 1], &[2, 1], 3).get(&w(&[3, 2, 1])),
            Some(&2)
        );
    }

    #[test]
    fn mixed_tensor_examples() {
        assert_eq!(
            tensor_mixed(&w(&[1, 0, 0]), &w(&[1, 0, 0])).unwrap(),
            decomposition(&[(&[0, 0, 0], 1), (&[1, 0, -1], 1)])
        );
        assert_eq!(
            tensor_mixed(&w(&[1, 0, 0]), &w(&[2, 1, 0])).unwrap(),
            decomposition(&[(&[2, 1, -1], 1), (&[2, 0, 0], 1), (&[1, 1, 0], 1)])
        );
        assert_eq!(
            tensor_mixed(&w(&[0, 0, 0]), &w(&[3, 1, -2])).unwrap(),
            decomposition(&[(&[3, 1, -2], 1)])
        );
        assert!(tensor_mixed(&w(&[1, 0]), &w(&[1, 0, 0])).is_err());
    }

    #[test]
    fn clebsch_gordan() {
        assert_eq!(tensor_s(1, 1), BTreeMap::from([(2, 1), (0, 1)]));
        assert_eq!(tensor_s(0, 5), BTreeMap::from([(5, 1)]));
        assert_eq!(tensor_s(2, 1), BTreeMap::from([(3, 1), (1, 1)]));
        for a in 0..6 {
            for b in 0..6 {
                let total: u64 = tensor_s(a, b).keys().map(|&c| c as u64 + 1).sum();
                assert_eq!(total, (a as u64 + 1) * (b as u64 + 1));
            }
        }
    }

    // Oracle: Schur polynomials in three variables as explicit monomial sums,
    // built from semistandard tableaux and multiplied out directly.

    type Poly = HashMap<[u32; 3], i64>;

    fn ssyt_poly(shape: &[usize]) -> Poly {
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut grid = vec![vec![0u32; shape.first().copied().unwrap_or(0)]; shape.len()];
        let mut poly = Poly::new();
        fill(&cells, 0, &mut grid, &mut poly);
        poly
    }

    fn fill(cells: &[(usize, usize)], idx: usize, grid: &mut [Vec<u32>], poly: &mut Poly) {
        if idx == cells.len() {
            let mut exp = [0u32; 3];
            for &(r, c) in cells {
                exp[grid[r][c] as usize - 1] += 1;
            }
            *poly.entry(exp).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        for x in 1..=3u32 {
            if c > 0 && grid[r][c - 1] > x {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= x {
                continue;
            }
            grid[r][c] = x;
            fill(cells, idx + 1, grid, poly);
        }
        grid[r][c] = 0;
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Peels off the lexicographically largest monomial, which is always the
    /// leading term of some Schur polynomial.
    fn decompose(mut p: Poly) -> Decomposition {
        let mut out = Decomposition::new();
        while let Some((&lead, &c)) = p.iter().max_by_key(|(e, _)| **e) {
            assert!(c > 0);
            let shape: Vec<usize> = lead.iter().map(|&x| x as usize).collect();
            for (e, m) in ssyt_poly(&shape) {
                *p.entry(e).or_insert(0) -= c * m;
            }
            p.retain(|_, x| *x != 0);
            out.insert(w(&lead.map(|x| x as i64)), c as u64);
        }
        out
    }

    fn partitions(max_rows: usize, max_cols: i64) -> Vec<Vec<i64>> {
        let mut out = vec![];
        for a in 0..=max_cols {
            for b in 0..=a {
                for c in 0..=b {
                    let p = vec![a, b, c];
                    if p.iter().filter(|&&x| x > 0).count() <= max_rows {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn lr_matches_schur_polynomial_products() {
        let ps = partitions(3, 4);
        let polys: HashMap<Vec<i64>, Poly> = ps
            .iter()
            .map(|p| (p.clone(), ssyt_poly(&p.iter().map(|&x| x as usize).collect::<Vec<_>>())))
            .collect();
        for a in &ps {
            for b in &ps {
                let expected = decompose(mul(&polys[a], &polys[b]));
                assert_eq!(*lr_coefficients(a, b, 3), expected, "{a:?} x {b:?}");
            }
        }
    }

    #[test]
    fn schur_polynomial_at_ones_is_dim_gl() {
        for p in partitions(3, 4) {
            let poly = ssyt_poly(&p.iter().map(|&x| x as usize).collect::<Vec<_>>());
            let total: i64 = poly.values().sum();
            assert_eq!(total as u64, dim_gl(&w(&p)).unwrap());
        }
    }

    fn dominant3() -> impl Strategy<Value = GLWeight> {
        (-3i64..=3, -3i64..=3, -3i64..=3).prop_map(|(a, b, c)| {
            let mut v = vec![a, b, c];
            v.sort_by(|x, y| y.cmp(x));
            GLWeight::new(v)
        })
    }

    #[test]
    fn mixed_dimension_conservation_exhaustive() {
        let mut weights = vec![];
        for a in -3..=3i64 {
            for b in -3..=a {
                for c in -3..=b {
                    weights.push(w(&[a, b, c]));
                }
            }
        }
        for a in &weights {
            for b in &weights {
                let total: u64 = tensor_mixed(a, b)
                    .unwrap()
                    .iter()
                    .map(|(g, m)| m * dim_gl(g).unwrap())
                    .sum();
                assert_eq!(total, dim_gl(a).unwrap() * dim_gl(b).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn dim_gl_symmetries(v in dominant3(), t in -5i64..5) {
            prop_assert_eq!(dim_gl(&v).unwrap(), dim_gl(&v.dualize()).unwrap());
            prop_assert_eq!(dim_gl(&v).unwrap(), dim_gl(&v.twist(t)).unwrap());
        }

        #[test]
        fn tensor_gl_is_commutative(a in dominant3(), b in dominant3()) {
            prop_assert_eq!(tensor_gl(&a, &b).unwrap(), tensor_gl(&b, &a).unwrap());
        }
    }
}
