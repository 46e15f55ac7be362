//! Grothendieck-group shadows: virtual classes, the Euler pairing, mutations,
//! complexes, Gram matrices and lattice certificates.

mod gram;
mod lattice;
pub mod named;

use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;

use crate::bbw::ext_terms;
use crate::error::{EngineError, Result};
use crate::expr::{BundleExpr, BundleTerm, Context};

pub use gram::{bareiss_determinant, gram_matrix, GramMatrix};
pub use lattice::{
    complex_euler_check, k_class_equals, k_span_membership, solve_integer, ProbeSet,
    SpanCertificate,
};

/// Virtual class in `K_0`, with a label saying where it came from.
#[derive(Clone, PartialEq, Eq)]
pub struct KClass {
    pub expr: BundleExpr,
    pub label: String,
}

impl KClass {
    pub fn new(label: impl Into<String>, expr: BundleExpr) -> Self {
        KClass {
            expr,
            label: label.into(),
        }
    }

    pub fn context(&self) -> Context {
        self.expr.context()
    }

    pub fn rank(&self) -> Result<i64> {
        self.expr.rank()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Tensor with `O(t)`; the label records the twist.
    pub fn twist(&self, t: i64) -> KClass {
        if t == 0 {
            return self.clone();
        }
        KClass::new(format!("{}({t})", self.label), self.expr.twist(t))
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        Ok(KClass::new(
            format!("{} + {}", self.label, other.label),
            self.expr.add(&other.expr)?,
        ))
    }

    pub fn sub(&self, other: &KClass) -> Result<KClass> {
        Ok(KClass::new(
            format!("{} - {}", self.label, other.label),
            self.expr.sub(&other.expr)?,
        ))
    }

    pub fn scale(&self, c: i64) -> KClass {
        KClass::new(format!("{c}*{}", self.label), self.expr.scale(c))
    }

    pub fn negate(&self) -> KClass {
        KClass::new(format!("-{}", self.label), self.expr.negate())
    }

    /// Adds `c` copies of `other` without touching the label.
    fn add_scaled(&mut self, other: &KClass, c: i64) -> Result<()> {
        if c != 0 {
            self.expr = self.expr.add(&other.expr.scale(c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.label, self.expr)
    }
}

type EulerKey = (Context, BundleTerm, BundleTerm);

fn euler_memo() -> &'static DashMap<EulerKey, i64> {
    static MEMO: OnceLock<DashMap<EulerKey, i64>> = OnceLock::new();
    MEMO.get_or_init(DashMap::new)
}

/// `χ(e, f)` for irreducible terms. Both are shifted so that `e` ends in 0,
/// which leaves the pairing unchanged and improves cache reuse.
pub fn euler_terms(ctx: Context, e: &BundleTerm, f: &BundleTerm) -> Result<i64> {
    let shift = -e.weight.entries().last().copied().unwrap_or(0);
    let key = (ctx, e.twist(shift), f.twist(shift));
    if let Some(hit) = euler_memo().get(&key) {
        return Ok(*hit);
    }
    let chi = ext_terms(ctx, &key.1, &key.2)?.euler_characteristic();
    euler_memo().insert(key, chi);
    Ok(chi)
}

/// Euler pairing `χ(A, B) = Σ (-1)^p dim Ext^p(A, B)`, extended bilinearly.
pub fn euler(a: &KClass, b: &KClass) -> Result<i64> {
    if a.context() != b.context() {
        return Err(EngineError::ContextMismatch {
            left: a.context().to_string(),
            right: b.context().to_string(),
        });
    }
    let ctx = a.context();
    let mut total = 0i64;
    for (ta, ma) in a.expr.terms() {
        for (tb, mb) in b.expr.terms() {
            total += ma * mb * euler_terms(ctx, ta, tb)?;
        }
    }
    Ok(total)
}

/// `[L_{E_1,…,E_m} G]`: applies `g ↦ g − χ(E, g)·E` for `E = E_m, …, E_1`.
pub fn k_mutate_left(block: &[KClass], g: &KClass) -> Result<KClass> {
    let mut out = g.clone();
    for e in block.iter().rev() {
        let c = euler(e, &out)?;
        out.add_scaled(e, -c)?;
    }
    Ok(out.with_label(format!("L[{}]", g.label)))
}

/// `[R_{E_1,…,E_m} G]`: applies `g ↦ g − χ(g, E)·E` for `E = E_1, …, E_m`.
pub fn k_mutate_right(block: &[KClass], g: &KClass) -> Result<KClass> {
    let mut out = g.clone();
    for e in block {
        let c = euler(&out, e)?;
        out.add_scaled(e, -c)?;
    }
    Ok(out.with_label(format!("R[{}]", g.label)))
}

/// Bounded complex of bundle expressions indexed by cohomological degree.
#[derive(Clone, Debug)]
pub struct ComplexSpec {
    pub name: String,
    terms: Vec<(i64, BundleExpr)>,
}

impl ComplexSpec {
    /// Terms may be listed in any order; entries sharing a degree are summed.
    /// The result must be nonempty.
    pub fn new(name: impl Into<String>, terms: Vec<(i64, BundleExpr)>) -> Result<Self> {
        let name = name.into();
        let mut merged: Vec<(i64, BundleExpr)> = Vec::new();
        let mut sorted = terms;
        sorted.sort_by_key(|(d, _)| *d);
        for (d, e) in sorted {
            match merged.last_mut() {
                Some((last, acc)) if *last == d => *acc = acc.add(&e)?,
                _ => merged.push((d, e)),
            }
        }
        if merged.is_empty() {
            return Err(EngineError::InvalidContext(format!("complex {name} has no terms")));
        }
        Ok(ComplexSpec {
            name,
            terms: merged,
        })
    }

    /// `(degree, term)` with strictly increasing degrees.
    pub fn terms(&self) -> &[(i64, BundleExpr)] {
        &self.terms
    }

    pub fn context(&self) -> Context {
        self.terms[0].1.context()
    }
}

/// `Σ (−1)^degree [term]`.
pub fn k_class_of_complex(c: &ComplexSpec) -> Result<KClass> {
    let mut acc = BundleExpr::zero(c.context());
    for (d, e) in c.terms() {
        acc = if d.rem_euclid(2) == 0 { acc.add(e)? } else { acc.sub(e)? };
    }
    Ok(KClass::new(format!("[{}]", c.name), acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    const X: Context = Context::IGR_3_8;

    fn k(s: &str) -> KClass {
        KClass::new(s, BundleExpr::parse(X, s).unwrap())
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler(&k("Sigma(0,0,0)"), &k("Sigma(1,0,0)")).unwrap(), 8);
        // Serre duality turns this into Ext(Σ^{2,1}(1), Σ^{2,1}), which vanishes
        assert_eq!(euler(&k("Sigma(2,1,0)(5)"), &k("Sigma(2,1,0)")).unwrap(), 0);
        assert_eq!(euler(&k("Sigma(2,1,0)(5)"), &k("Sigma(3,1,0)")).unwrap(), -1);
        let virt = k("Sigma(0,0,0) - Sigma(0,0,0)(-1)");
        assert_eq!(
            euler(&virt, &k("Sigma(1,0,0)")).unwrap(),
            8 - euler(&k("Sigma(0,0,0)(-1)"), &k("Sigma(1,0,0)")).unwrap()
        );
    }

    #[test]
    fn euler_is_twist_invariant() {
        for t in -3..4 {
            assert_eq!(
                euler(&k("Sigma(1,1,0)").twist(t), &k("Sigma(3,1,0)").twist(t)).unwrap(),
                euler(&k("Sigma(1,1,0)"), &k("Sigma(3,1,0)")).unwrap()
            );
        }
    }

    #[test]
    fn mutation_by_orthogonal_object_is_identity() {
        let e = k("Sigma(0,0,0)(-1)");
        let g = k("Sigma(2,1,0)(-2)");
        assert_eq!(euler(&e, &g).unwrap(), 0);
        assert_eq!(k_mutate_left(&[e], &g).unwrap().expr, g.expr);
    }

    #[test]
    fn single_term_complex() {
        let c = ComplexSpec::new("one", vec![(0, BundleExpr::parse(X, "Sigma(2,1,0)").unwrap())])
            .unwrap();
        assert_eq!(k_class_of_complex(&c).unwrap().expr, k("Sigma(2,1,0)").expr);
        assert!(ComplexSpec::new("none", vec![]).is_err());
    }
}
