use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{euler, KClass};
use crate::error::Result;

/// `entries[i][j] = χ(E_i, E_j)` over an ordered list of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub order: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Unit diagonal and vanishing strictly-lower part: the K-theoretic shadow
    /// of exceptionality in the given order.
    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row[i] == 1 && row[..i].iter().all(|&x| x == 0)
        })
    }

    /// Positions `(i, j)`, `i > j`, with nonzero entries.
    pub fn lower_violations(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &x) in row[..i].iter().enumerate() {
                if x != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> BigInt {
        bareiss_determinant(&self.entries)
    }
}

/// Gram matrix of `classes`; rows are evaluated in parallel.
pub fn gram_matrix(classes: &[KClass]) -> Result<GramMatrix> {
    let entries = classes
        .par_iter()
        .map(|a| classes.iter().map(|b| euler(a, b)).collect::<Result<Vec<i64>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix {
        order: classes.iter().map(|c| c.label.clone()).collect(),
        entries,
    })
}

/// Exact determinant by fraction-free Gaussian elimination. Every division
/// in the recurrence is exact.
pub fn bareiss_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    /// Cofactor expansion along the first row.
    fn laplace(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * laplace(&minor)
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_determinant(&[]), BigInt::one());
        assert_eq!(bareiss_determinant(&[vec![1]]), BigInt::one());
        assert_eq!(bareiss_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            bareiss_determinant(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]),
            BigInt::from(6)
        );
        assert_eq!(bareiss_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor_expansion(
            n in 1usize..6,
            seed in prop::collection::vec(-5i64..6, 36),
        ) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 6..i * 6 + n].to_vec()).collect();
            prop_assert_eq!(bareiss_determinant(&m), BigInt::from(laplace(&m)));
        }

        #[test]
        fn unitriangular_has_unit_determinant(upper in prop::collection::vec(-9i64..10, 36)) {
            let n = 6;
            let m: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Less => upper[i * n + j],
                    std::cmp::Ordering::Greater => 0,
                }).collect())
                .collect();
            prop_assert_eq!(bareiss_determinant(&m).abs(), BigInt::one());
        }
    }
}
