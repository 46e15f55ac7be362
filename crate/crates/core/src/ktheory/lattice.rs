//! Decisions in `K_0` made through pairing vectors against a unimodular probe
//! collection: equality, integer span membership, and exactness shadows.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{euler, gram_matrix, k_class_of_complex, named, ComplexSpec, GramMatrix, KClass};
use crate::error::{EngineError, Result};

/// Classes whose Gram matrix is unimodular and whose count is the rank of
/// `K_0`. Then `x ↦ (χ(P_i, x))_i` is injective on `K_0`.
#[derive(Clone, Debug)]
pub struct ProbeSet {
    classes: Vec<KClass>,
    gram: GramMatrix,
}

impl ProbeSet {
    pub fn new(classes: Vec<KClass>) -> Result<Self> {
        let ctx = classes
            .first()
            .map(|c| c.context())
            .ok_or_else(|| EngineError::ProbeCertificateAbsent("empty probe list".into()))?;
        if classes.len() as u64 != ctx.k0_rank() {
            return Err(EngineError::ProbeCertificateAbsent(format!(
                "{} probes but K_0 of {ctx} has rank {}",
                classes.len(),
                ctx.k0_rank()
            )));
        }
        let gram = gram_matrix(&classes)?;
        if gram.determinant().abs() != BigInt::one() {
            return Err(EngineError::ProbeCertificateAbsent(format!(
                "probe Gram determinant is {}",
                gram.determinant()
            )));
        }
        Ok(ProbeSet { classes, gram })
    }

    /// The first 32-object collection on `IGr(3,8)`, verified once.
    pub fn reference() -> Result<&'static ProbeSet> {
        static PROBES: OnceLock<Result<ProbeSet>> = OnceLock::new();
        PROBES
            .get_or_init(|| ProbeSet::new(named::theorem_main(1)?.classes))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn classes(&self) -> &[KClass] {
        &self.classes
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// `(χ(P_i, x))_i`.
    pub fn pairing_right(&self, x: &KClass) -> Result<Vec<i64>> {
        self.classes.par_iter().map(|p| euler(p, x)).collect()
    }

    /// `(χ(x, P_i))_i`.
    pub fn pairing_left(&self, x: &KClass) -> Result<Vec<i64>> {
        self.classes.par_iter().map(|p| euler(x, p)).collect()
    }

    fn is_zero_class(&self, x: &KClass) -> Result<bool> {
        Ok(self.pairing_right(x)?.iter().all(|&v| v == 0)
            && self.pairing_left(x)?.iter().all(|&v| v == 0))
    }
}

/// Equal ranks and `a − b` pairs to zero with every probe, in both orders.
pub fn k_class_equals(a: &KClass, b: &KClass, probes: &ProbeSet) -> Result<bool> {
    if a.rank()? != b.rank()? {
        return Ok(false);
    }
    probes.is_zero_class(&a.sub(b)?)
}

/// Zero rank and zero pairings: the class an exact complex must have.
pub fn complex_euler_check(c: &ComplexSpec, probes: &ProbeSet) -> Result<bool> {
    let class = k_class_of_complex(c)?;
    Ok(class.rank()? == 0 && probes.is_zero_class(&class)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanCertificate {
    /// `target = Σ c_j · generator_j` in `K_0`.
    Coefficients(Vec<i64>),
    NotInSpan,
}

impl SpanCertificate {
    pub fn is_member(&self) -> bool {
        matches!(self, SpanCertificate::Coefficients(_))
    }
}

/// Integer span membership, decided in pairing-vector coordinates.
pub fn k_span_membership(
    target: &KClass,
    generators: &[KClass],
    probes: &ProbeSet,
) -> Result<SpanCertificate> {
    let columns: Vec<Vec<i64>> = generators
        .iter()
        .map(|g| probes.pairing_right(g))
        .collect::<Result<_>>()?;
    let rhs = probes.pairing_right(target)?;
    Ok(match solve_integer(&columns, &rhs) {
        Some(c) => SpanCertificate::Coefficients(c),
        None => SpanCertificate::NotInSpan,
    })
}

/// Solves `Σ_j c_j · columns[j] = target` over the integers, or `None`.
///
/// Column operations (tracked in a unimodular matrix `u`) bring the system to
/// column echelon form; the solution is then read off by forward substitution.
pub fn solve_integer(columns: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let m = columns.len();
    let rows = target.len();
    let big = |x: i64| BigInt::from(x);
    let mut a: Vec<Vec<BigInt>> = columns.iter().map(|c| c.iter().map(|&x| big(x)).collect()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|j| (0..m).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = vec![];
    let mut next = 0;
    for r in 0..rows {
        if next == m {
            break;
        }
        // gcd-reduce row r across columns next.. into column `next`
        loop {
            let nz: Vec<usize> = (next..m).filter(|&j| !a[j][r].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| a[j][r].abs()).unwrap();
            a.swap(next, p);
            u.swap(next, p);
            let mut done = true;
            for j in next + 1..m {
                if a[j][r].is_zero() {
                    continue;
                }
                let q = a[j][r].div_floor(&a[next][r]);
                for i in 0..rows {
                    let t = &q * &a[next][i];
                    a[j][i] -= t;
                }
                for i in 0..m {
                    let t = &q * &u[next][i];
                    u[j][i] -= t;
                }
                if !a[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                pivots.push((r, next));
                next += 1;
                break;
            }
        }
    }
    // forward substitution in the echelon basis
    let mut y = vec![BigInt::zero(); m];
    let mut residual: Vec<BigInt> = target.iter().map(|&x| big(x)).collect();
    for &(r, p) in &pivots {
        let (q, rem) = residual[r].div_rem(&a[p][r]);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..rows {
            let t = &q * &a[p][i];
            residual[i] -= t;
        }
        y[p] = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // columns of the echelon form are u-combinations of the inputs
    let mut c = vec![BigInt::zero(); m];
    for (p, yp) in y.iter().enumerate() {
        for i in 0..m {
            c[i] += yp * &u[p][i];
        }
    }
    let c: Vec<i64> = c.iter().map(|x| x.to_i64().expect("coefficient fits in i64")).collect();
    let check: Vec<i64> = (0..rows)
        .map(|i| (0..m).map(|j| c[j] * columns[j][i]).sum())
        .collect();
    debug_assert_eq!(check, target);
    Some(c)
}
