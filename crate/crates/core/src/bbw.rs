//! Borel-Bott-Weil cohomology of irreducible equivariant bundles, Ext groups
//! between bundle expressions, and relative pushforward along Grassmannian
//! bundles.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{EngineError, Result};
use crate::expr::{BundleExpr, BundleTerm, Context, Space};
use crate::schur::{dim_gl, dim_sp, tensor_mixed, tensor_s};
use crate::weight::{GLWeight, SpWeight};
use crate::weyl::{dominantize_a, dominantize_c, quick_vanish_c, Dominantization};

/// Highest weight of a representation of the acting group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RepWeight {
    Sp(SpWeight),
    Gl(GLWeight),
}

impl RepWeight {
    pub fn dim(&self) -> u64 {
        match self {
            RepWeight::Sp(w) => dim_sp(w),
            RepWeight::Gl(w) => dim_gl(w).expect("cohomology weights are dominant"),
        }
    }

    pub fn entries(&self) -> &[i64] {
        match self {
            RepWeight::Sp(w) => w.entries(),
            RepWeight::Gl(w) => w.entries(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.entries().iter().all(|&x| x == 0)
    }
}

impl fmt::Display for RepWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepWeight::Sp(w) => write!(f, "SpWeight{w}"),
            RepWeight::Gl(w) => write!(f, "GLWeight{w}"),
        }
    }
}

/// Finite multiset of `(degree, weight)` with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct CohomologyResult {
    entries: BTreeMap<(usize, RepWeight), u64>,
}

impl CohomologyResult {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(degree: usize, weight: RepWeight, mult: u64) -> Self {
        let mut out = Self::zero();
        out.insert(degree, weight, mult);
        out
    }

    fn insert(&mut self, degree: usize, weight: RepWeight, mult: u64) {
        if mult > 0 {
            *self.entries.entry((degree, weight)).or_insert(0) += mult;
        }
    }

    /// Adds `scale` copies of `other`.
    pub fn absorb(&mut self, other: &CohomologyResult, scale: u64) {
        for ((d, w), m) in &other.entries {
            self.insert(*d, w.clone(), m * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(degree, weight, multiplicity)` sorted by degree, then weight.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &RepWeight, u64)> + '_ {
        self.entries.iter().map(|((d, w), m)| (*d, w, *m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_dimension_at_degree(&self, p: usize) -> u64 {
        self.entries()
            .filter(|(d, _, _)| *d == p)
            .map(|(_, w, m)| m * w.dim())
            .sum()
    }

    /// Degrees carrying something, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.entries.keys().map(|(d, _)| *d).collect();
        out.dedup();
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.entries()
            .map(|(d, w, m)| {
                let v = (m * w.dim()) as i64;
                if d % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
}

impl fmt::Display for CohomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "ZERO");
        }
        for (i, (d, w, m)) in self.entries().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "H^{d} = {w} dim {} ×{m}", w.dim())?;
        }
        Ok(())
    }
}

/// Cohomology of `Σ^β U^∨ ⊗ S^c S` on `IGr(k, 2n)`.
pub fn cohomology_igr(k: usize, n: usize, beta: &GLWeight, c: u32) -> Result<CohomologyResult> {
    let ctx = Context::isotropic(k, 2 * n)?;
    cohomology_term(ctx, &BundleTerm::new(beta.clone(), c))
}

/// Cohomology of `Σ^β U^∨ ⊗ Σ^γ U^⊥` on `Gr(k, n)`, with `γ` of rank `n - k`.
pub fn cohomology_gr(k: usize, n: usize, beta: &GLWeight, gamma: &GLWeight) -> Result<CohomologyResult> {
    Context::classical(k, n)?;
    if beta.rank() != k || gamma.rank() != n - k {
        return Err(EngineError::RankMismatch {
            left: beta.rank() + gamma.rank(),
            right: n,
        });
    }
    let mut alpha = beta.entries().to_vec();
    alpha.extend_from_slice(gamma.entries());
    Ok(bbw_type_a(&alpha))
}

fn bbw_type_a(alpha: &[i64]) -> CohomologyResult {
    let n = alpha.len() as i64;
    let shifted: Vec<i64> = alpha.iter().enumerate().map(|(i, a)| a + n - i as i64).collect();
    match dominantize_a(&shifted) {
        Dominantization::Degenerate(_) => CohomologyResult::zero(),
        Dominantization::Regular { sorted, length } => {
            let w: Vec<i64> = sorted.iter().enumerate().map(|(i, s)| s - (n - i as i64)).collect();
            CohomologyResult::single(length, RepWeight::Gl(GLWeight::new(w)), 1)
        }
    }
}

fn bbw_type_c(alpha: &[i64]) -> CohomologyResult {
    let n = alpha.len() as i64;
    let shifted: Vec<i64> = alpha.iter().enumerate().map(|(i, a)| a + n - i as i64).collect();
    if quick_vanish_c(&shifted) {
        return CohomologyResult::zero();
    }
    match dominantize_c(&shifted) {
        Dominantization::Degenerate(_) => CohomologyResult::zero(),
        Dominantization::Regular { sorted, length } => {
            let w: Vec<i64> = sorted.iter().enumerate().map(|(i, s)| s - (n - i as i64)).collect();
            let w = SpWeight::new(w).expect("sorted minus rho of a regular weight is dominant");
            CohomologyResult::single(length, RepWeight::Sp(w), 1)
        }
    }
}

/// Cohomology of a single irreducible term.
pub fn cohomology_term(ctx: Context, term: &BundleTerm) -> Result<CohomologyResult> {
    let k = ctx.k();
    if term.weight.rank() != k {
        return Err(EngineError::RankMismatch {
            left: term.weight.rank(),
            right: k,
        });
    }
    if !term.weight.is_dominant() {
        return Err(EngineError::NonDominant(term.weight.entries().to_vec()));
    }
    if term.s_degree > 0 && ctx.s_rank() != 2 {
        return Err(EngineError::UnsupportedSPower {
            power: term.s_degree,
            s_rank: ctx.s_rank(),
        });
    }
    let mut alpha = term.weight.entries().to_vec();
    let out = match ctx.space() {
        Space::Isotropic => {
            if term.s_degree > 0 {
                alpha.push(term.s_degree as i64);
            }
            alpha.resize(ctx.group_rank(), 0);
            bbw_type_c(&alpha)
        }
        Space::Classical => {
            alpha.resize(ctx.group_rank(), 0);
            bbw_type_a(&alpha)
        }
    };
    debug_assert!(out.len() <= 1);
    debug_assert!(out.degrees().iter().all(|&d| d <= ctx.variety_dim()));
    Ok(out)
}

/// Cohomology of an effective expression, additively over its terms.
pub fn cohomology_expr(e: &BundleExpr) -> Result<CohomologyResult> {
    let mut out = CohomologyResult::zero();
    for (t, m) in e.terms() {
        if m < 0 {
            return Err(EngineError::NegativeMultiplicity {
                term: t.to_string(),
                mult: m,
            });
        }
        out.absorb(&cohomology_term(e.context(), t)?, m as u64);
    }
    Ok(out)
}

/// `E^∨ ⊗ F` for irreducible `E`, `F`, expanded into irreducible terms.
/// `S` is symplectic, hence self-dual; the GL weight of `E` is dualized.
pub fn hom_bundle(ctx: Context, e: &BundleTerm, f: &BundleTerm) -> Result<Vec<(BundleTerm, u64)>> {
    if (e.s_degree > 0 || f.s_degree > 0) && ctx.s_rank() != 2 {
        return Err(EngineError::UnsupportedSPower {
            power: e.s_degree.max(f.s_degree),
            s_rank: ctx.s_rank(),
        });
    }
    let gl = tensor_mixed(&e.weight, &f.weight)?;
    let s = tensor_s(e.s_degree, f.s_degree);
    let mut out = Vec::with_capacity(gl.len() * s.len());
    for (g, m1) in &gl {
        for (&c, &m2) in &s {
            out.push((BundleTerm::new(g.clone(), c), m1 * m2));
        }
    }
    Ok(out)
}

/// `Ext^•(e, f) = H^•(e^∨ ⊗ f)` for irreducible terms.
pub fn ext_terms(ctx: Context, e: &BundleTerm, f: &BundleTerm) -> Result<CohomologyResult> {
    let mut out = CohomologyResult::zero();
    for (t, m) in hom_bundle(ctx, e, f)? {
        out.absorb(&cohomology_term(ctx, &t)?, m);
    }
    Ok(out)
}

/// `Ext^•(E, F)` for effective expressions over a common context.
pub fn ext_groups(e: &BundleExpr, f: &BundleExpr) -> Result<CohomologyResult> {
    if e.context() != f.context() {
        return Err(EngineError::ContextMismatch {
            left: e.context().to_string(),
            right: f.context().to_string(),
        });
    }
    let ctx = e.context();
    let mut out = CohomologyResult::zero();
    for expr in [e, f] {
        if let Some((t, m)) = expr.terms().find(|(_, m)| *m < 0) {
            return Err(EngineError::NegativeMultiplicity {
                term: t.to_string(),
                mult: m,
            });
        }
    }
    for (te, me) in e.terms() {
        for (tf, mf) in f.terms() {
            out.absorb(&ext_terms(ctx, te, tf)?, (me * mf) as u64);
        }
    }
    Ok(out)
}

/// `dim Ext^p(E, F) = dim Ext^{d-p}(F, E ⊗ ω)` for every `p`.
pub fn serre_duality_check(e: &BundleExpr, f: &BundleExpr) -> Result<bool> {
    let ctx = e.context();
    let d = ctx.variety_dim();
    let lhs = ext_groups(e, f)?;
    let rhs = ext_groups(f, &e.twist(ctx.canonical_twist()))?;
    Ok((0..=d).all(|p| lhs.total_dimension_at_degree(p) == rhs.total_dimension_at_degree(d - p))
        && lhs.degrees().iter().all(|&p| p <= d)
        && rhs.degrees().iter().all(|&p| p <= d))
}

/// Derived pushforward of an irreducible bundle along a Grassmannian-bundle
/// projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PushforwardResult {
    Zero,
    /// `Σ^weight U_l^∨` placed in cohomological degree `shift`.
    Term { weight: GLWeight, shift: usize },
}

impl fmt::Display for PushforwardResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PushforwardResult::Zero => write!(f, "ZERO"),
            PushforwardResult::Term { weight, shift } => write!(f, "Sigma{weight}[-{shift}]"),
        }
    }
}

/// Pushforward of `Σ^β U_k^∨` from the relative `Gr(k, U_l)` to the base.
/// Regularity is tested on `α + ρ` where `α` is `β` padded with zeros.
pub fn pushforward_rel_gr(beta: &GLWeight, l: usize) -> Result<PushforwardResult> {
    if l <= beta.rank() {
        return Err(EngineError::RankMismatch {
            left: beta.rank(),
            right: l,
        });
    }
    if !beta.is_dominant() {
        return Err(EngineError::NonDominant(beta.entries().to_vec()));
    }
    let alpha = beta.padded(l);
    let shifted: Vec<i64> = alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, a)| a + (l - i) as i64)
        .collect();
    Ok(match dominantize_a(&shifted) {
        Dominantization::Degenerate(_) => PushforwardResult::Zero,
        Dominantization::Regular { sorted, length } => {
            let w = sorted.iter().enumerate().map(|(i, s)| s - (l - i) as i64).collect();
            PushforwardResult::Term {
                weight: GLWeight::new(w),
                shift: length,
            }
        }
    })
}

/// Pushforward of `Σ^{j+k,k} U_2^∨ ⊗ O(i H_3)` from the partial flag variety
/// of 2-planes in 3-planes down to the 3-plane Grassmannian.
pub fn pushforward_ifl(j: i64, k: i64, i: i64) -> Result<PushforwardResult> {
    Ok(match pushforward_rel_gr(&GLWeight::new(vec![j + k, k]), 3)? {
        PushforwardResult::Zero => PushforwardResult::Zero,
        PushforwardResult::Term { weight, shift } => PushforwardResult::Term {
            weight: weight.twist(i),
            shift,
        },
    })
}
