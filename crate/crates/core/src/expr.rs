//! Formal integer combinations of irreducible equivariant bundles.
//!
//! Every irreducible bundle on the Grassmannians handled here is
//! `Σ^β U^∨ ⊗ S^c S`, keyed by a [`BundleTerm`]. A [`BundleExpr`] is a finite
//! sum of such terms with integer multiplicities; it serves for honest bundles,
//! virtual K-classes and the terms of complexes alike.
//!
//! Expressions have a small text syntax:
//!
//! ```text
//! term := "Sigma(" int ("," int)* ")" [ "(" int ")" ] [ "*S^" uint ]
//! expr := [int "*"] term ( ("+" | "-") [int "*"] term )*
//! ```
//!
//! `Sigma(2,1,0)(5)` is `Σ^{2,1}U^∨(5)` and `Sigma(0,0,0)*S^1` is `S`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{EngineError, Result};
use crate::schur;
use crate::weight::GLWeight;

/// Which homogeneous space the bundles live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// `Gr(k, n)` with `GL(n)` acting.
    Classical,
    /// `IGr(k, 2n)` with `Sp(2n)` acting.
    Isotropic,
}

/// Grassmannian on which cohomology is computed. Threaded explicitly through
/// every call; there is no global default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Context {
    space: Space,
    k: usize,
    dim: usize,
}

impl Context {
    /// `IGr(3, 8)`.
    pub const IGR_3_8: Context = Context {
        space: Space::Isotropic,
        k: 3,
        dim: 8,
    };
    /// `IGr(2, 8)`.
    pub const IGR_2_8: Context = Context {
        space: Space::Isotropic,
        k: 2,
        dim: 8,
    };

    /// Isotropic Grassmannian `IGr(k, dim)`; `dim` must be even and `k < dim/2`.
    pub fn isotropic(k: usize, dim: usize) -> Result<Self> {
        if dim % 2 != 0 || k == 0 || k >= dim / 2 {
            return Err(EngineError::InvalidContext(format!(
                "IGr({k},{dim}) needs even dim and 1 <= k < dim/2"
            )));
        }
        Ok(Context {
            space: Space::Isotropic,
            k,
            dim,
        })
    }

    /// Classical Grassmannian `Gr(k, dim)` with `1 <= k < dim`.
    pub fn classical(k: usize, dim: usize) -> Result<Self> {
        if k == 0 || k >= dim {
            return Err(EngineError::InvalidContext(format!(
                "Gr({k},{dim}) needs 1 <= k < dim"
            )));
        }
        Ok(Context {
            space: Space::Classical,
            k,
            dim,
        })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Rank of the tautological bundle.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension of the ambient vector space.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Rank of the weight lattice of the acting group.
    pub fn group_rank(&self) -> usize {
        match self.space {
            Space::Classical => self.dim,
            Space::Isotropic => self.dim / 2,
        }
    }

    /// Rank of `S = U^⊥/U` (zero for classical Grassmannians).
    pub fn s_rank(&self) -> usize {
        match self.space {
            Space::Classical => 0,
            Space::Isotropic => self.dim - 2 * self.k,
        }
    }

    /// Dimension of the variety.
    pub fn variety_dim(&self) -> usize {
        let k = self.k;
        match self.space {
            Space::Classical => k * (self.dim - k),
            Space::Isotropic => {
                let n = self.dim / 2;
                2 * k * (n - k) + k * (k + 1) / 2
            }
        }
    }

    /// `t` such that the canonical bundle is `O(t)`.
    pub fn canonical_twist(&self) -> i64 {
        match self.space {
            Space::Classical => -(self.dim as i64),
            Space::Isotropic => -((self.dim - self.k + 1) as i64),
        }
    }

    /// Rank of `K_0`: the index of the Levi Weyl group in the full Weyl group.
    pub fn k0_rank(&self) -> u64 {
        use crate::weyl::{weyl_order_a, weyl_order_c};
        match self.space {
            Space::Classical => {
                weyl_order_a(self.dim) / (weyl_order_a(self.k) * weyl_order_a(self.dim - self.k))
            }
            Space::Isotropic => {
                let n = self.dim / 2;
                let levi = weyl_order_a(self.k) * if n > self.k { weyl_order_c(n - self.k) } else { 1 };
                weyl_order_c(n) / levi
            }
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.space {
            Space::Classical => write!(f, "Gr({},{})", self.k, self.dim),
            Space::Isotropic => write!(f, "IGr({},{})", self.k, self.dim),
        }
    }
}

/// The irreducible bundle `Σ^weight U^∨ ⊗ S^s_degree S`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleTerm {
    pub weight: GLWeight,
    pub s_degree: u32,
}

impl BundleTerm {
    pub fn new(weight: impl Into<GLWeight>, s_degree: u32) -> Self {
        BundleTerm {
            weight: weight.into(),
            s_degree,
        }
    }

    pub fn twist(&self, t: i64) -> BundleTerm {
        BundleTerm {
            weight: self.weight.twist(t),
            s_degree: self.s_degree,
        }
    }

    /// Rank, assuming `rank S = 2` whenever `s_degree > 0`.
    pub fn rank(&self) -> Result<i64> {
        let gl = schur::dim_gl(&self.weight)?;
        Ok(gl as i64 * (self.s_degree as i64 + 1))
    }
}

impl fmt::Display for BundleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sigma{}", self.weight)?;
        if self.s_degree > 0 {
            write!(f, "*S^{}", self.s_degree)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BundleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formal sum of [`BundleTerm`]s over a fixed [`Context`].
#[derive(Clone, PartialEq, Eq)]
pub struct BundleExpr {
    ctx: Context,
    terms: BTreeMap<BundleTerm, i64>,
}

impl BundleExpr {
    pub fn zero(ctx: Context) -> Self {
        BundleExpr {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// One copy of a single term. Checks rank and the S-degree constraint.
    pub fn term(ctx: Context, term: BundleTerm) -> Result<Self> {
        Self::zero(ctx).with(term, 1)
    }

    /// Shorthand for `mult · Σ^weight U^∨(twist)`.
    pub fn sigma(ctx: Context, weight: &[i64], twist: i64) -> Result<Self> {
        Self::term(ctx, BundleTerm::new(GLWeight::from(weight).twist(twist), 0))
    }

    /// Adds `mult` copies of `term` in place.
    pub fn with(mut self, term: BundleTerm, mult: i64) -> Result<Self> {
        self.add_term(term, mult)?;
        Ok(self)
    }

    pub fn add_term(&mut self, term: BundleTerm, mult: i64) -> Result<()> {
        if term.weight.rank() != self.ctx.k() {
            return Err(EngineError::RankMismatch {
                left: term.weight.rank(),
                right: self.ctx.k(),
            });
        }
        if !term.weight.is_dominant() {
            return Err(EngineError::NonDominant(term.weight.entries().to_vec()));
        }
        if term.s_degree > 0 && self.ctx.s_rank() == 0 {
            return Err(EngineError::UnsupportedSPower {
                power: term.s_degree,
                s_rank: 0,
            });
        }
        if mult == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(term).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
        Ok(())
    }

    pub fn context(&self) -> Context {
        self.ctx
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (sorted) order.
    pub fn terms(&self) -> impl Iterator<Item = (&BundleTerm, i64)> + '_ {
        self.terms.iter().map(|(t, &m)| (t, m))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    fn check_ctx(&self, other: &BundleExpr) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(EngineError::ContextMismatch {
                left: self.ctx.to_string(),
                right: other.ctx.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &BundleExpr) -> Result<BundleExpr> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (t, m) in other.terms() {
            out.add_term(t.clone(), m)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BundleExpr) -> Result<BundleExpr> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> BundleExpr {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> BundleExpr {
        if c == 0 {
            return BundleExpr::zero(self.ctx);
        }
        BundleExpr {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(t, &m)| (t.clone(), m * c)).collect(),
        }
    }

    /// Tensor with `O(t)`.
    pub fn twist(&self, t: i64) -> BundleExpr {
        BundleExpr {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(k, &m)| (k.twist(t), m)).collect(),
        }
    }

    /// Σ over terms of multiplicity × rank.
    pub fn rank(&self) -> Result<i64> {
        let mut total = 0i64;
        for (t, m) in self.terms() {
            let r = if t.s_degree == 0 {
                schur::dim_gl(&t.weight)? as i64
            } else {
                if self.ctx.s_rank() != 2 {
                    return Err(EngineError::UnsupportedSPower {
                        power: t.s_degree,
                        s_rank: self.ctx.s_rank(),
                    });
                }
                t.rank()?
            };
            total += m * r;
        }
        Ok(total)
    }

    /// Parses the expression syntax documented at the module level.
    pub fn parse(ctx: Context, input: &str) -> Result<BundleExpr> {
        Parser::new(input).parse_expr(ctx)
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, m)) in self.terms().enumerate() {
            match (i, m) {
                (0, 1) => write!(f, "{t}")?,
                (0, m) => write!(f, "{m}*{t}")?,
                (_, 1) => write!(f, " + {t}")?,
                (_, -1) => write!(f, " - {t}")?,
                (_, m) if m < 0 => write!(f, " - {}*{t}", -m)?,
                (_, m) => write!(f, " + {m}*{t}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ctx, self)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(EngineError::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
        match text.parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn term(&mut self) -> Result<BundleTerm> {
        self.expect("Sigma")?;
        self.expect("(")?;
        let mut entries = vec![self.int()?];
        while self.eat(",") {
            entries.push(self.int()?);
        }
        self.expect(")")?;
        let mut weight = GLWeight::new(entries);
        if self.eat("(") {
            let t = self.int()?;
            self.expect(")")?;
            weight = weight.twist(t);
        }
        let mut s_degree = 0u32;
        if self.eat("*") {
            self.expect("S^")?;
            let c = self.int()?;
            if c < 0 {
                return self.err("S-power must be non-negative");
            }
            s_degree = c as u32;
        }
        Ok(BundleTerm { weight, s_degree })
    }

    fn item(&mut self, sign: i64) -> Result<(i64, BundleTerm)> {
        let mut mult = sign;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'-' || c == b'+') {
            mult *= self.int()?;
            self.expect("*")?;
        }
        let at = self.pos;
        let term = self.term()?;
        if !term.weight.is_dominant() {
            self.pos = at;
            return self.err(format!("weight {} is not dominant", term.weight));
        }
        Ok((mult, term))
    }

    fn parse_expr(&mut self, ctx: Context) -> Result<BundleExpr> {
        let mut out = BundleExpr::zero(ctx);
        let mut sign = 1;
        loop {
            let at = self.pos;
            let (mult, term) = self.item(sign)?;
            if let Err(e) = out.add_term(term, mult) {
                self.pos = at;
                return self.err(e.to_string());
            }
            if self.eat("+") {
                sign = 1;
            } else if self.eat("-") {
                sign = -1;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input");
        }
        Ok(out)
    }
}
