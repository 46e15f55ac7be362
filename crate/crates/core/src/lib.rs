//! Exact computations on isotropic and classical Grassmannians: weights,
//! Weyl-group dominantization, Schur-functor tensor calculus, Borel-Bott-Weil
//! cohomology and Euler-pairing K-theory.

pub mod bbw;
pub mod error;
pub mod expr;
pub mod ktheory;
pub mod schur;
pub mod weight;
pub mod weyl;

pub use bbw::{
    cohomology_expr, cohomology_gr, cohomology_igr, ext_groups, pushforward_ifl,
    pushforward_rel_gr, serre_duality_check, CohomologyResult, PushforwardResult, RepWeight,
};
pub use error::{EngineError, Result};
pub use expr::{BundleExpr, BundleTerm, Context, Space};
pub use weight::{GLWeight, SpWeight};
pub use ktheory::{euler, k_mutate_left, k_mutate_right, GramMatrix, KClass, ProbeSet};
