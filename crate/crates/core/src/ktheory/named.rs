//! The specific objects on `IGr(3,8)` and `IGr(2,8)`: the starting blocks,
//! the bundles `T`, `F`, `T'`, the complexes relating them, and the ordered
//! 32- and 24-object collections.
//!
//! Trivial factors `Λ^p V` (with `dim V = 8`) enter as multiplicities.

use super::{k_class_of_complex, k_mutate_left, ComplexSpec, KClass};
use crate::error::{EngineError, Result};
use crate::expr::{BundleExpr, BundleTerm, Context};
use crate::schur::tensor_gl;
use crate::weight::GLWeight;

const X: Context = Context::IGR_3_8;

/// `dim Λ^p V` for an 8-dimensional `V`.
pub const LAMBDA_V: [i64; 9] = [1, 8, 28, 56, 70, 56, 28, 8, 1];

pub const W_O: [i64; 3] = [0, 0, 0];
pub const W_UV: [i64; 3] = [1, 0, 0];
pub const W_S2: [i64; 3] = [2, 0, 0];
pub const W_L2: [i64; 3] = [1, 1, 0];
pub const W_S21: [i64; 3] = [2, 1, 0];
pub const W_S22: [i64; 3] = [2, 2, 0];
pub const W_S31: [i64; 3] = [3, 1, 0];
pub const W_S32: [i64; 3] = [3, 2, 0];
pub const W_S33: [i64; 3] = [3, 3, 0];
pub const W_S42: [i64; 3] = [4, 2, 0];
/// `U = Σ^{0,0,-1} U^∨`.
pub const W_U: [i64; 3] = [0, 0, -1];

/// `Λ^i U` as a `U^∨`-weight, zero beyond the rank.
fn lambda_u(i: usize) -> Option<[i64; 3]> {
    match i {
        0 => Some([0, 0, 0]),
        1 => Some([0, 0, -1]),
        2 => Some([0, -1, -1]),
        3 => Some([-1, -1, -1]),
        _ => None,
    }
}

fn name_of(w: [i64; 3]) -> String {
    match w {
        W_O => "O".into(),
        W_UV => "U^v".into(),
        W_S2 => "S^2U^v".into(),
        W_L2 => "L^2U^v".into(),
        W_U => "U".into(),
        [a, b, 0] => format!("Sigma^{{{a},{b}}}U^v"),
        _ => format!("Sigma{}U^v", GLWeight::from(w)),
    }
}

fn term(w: [i64; 3], t: i64, s: u32) -> BundleTerm {
    BundleTerm::new(GLWeight::from(w).twist(t), s)
}

/// `Σ mult · Σ^w U^∨(t) ⊗ S^s` over `IGr(3,8)`.
fn expr(items: &[(i64, [i64; 3], i64, u32)]) -> BundleExpr {
    let mut e = BundleExpr::zero(X);
    for &(m, w, t, s) in items {
        e.add_term(term(w, t, s), m)
            .expect("named bundles are dominant of rank 3");
    }
    e
}

/// The irreducible bundle `Σ^w U^∨(t)`, labelled by name.
pub fn bundle(w: [i64; 3], t: i64) -> KClass {
    let name = name_of(w);
    let label = if t == 0 { name } else { format!("{name}({t})") };
    KClass::new(label, expr(&[(1, w, t, 0)]))
}

/// `(O, U^∨, S²U^∨, Λ²U^∨, Σ^{2,1}U^∨)(t)`.
pub fn block_e(t: i64) -> Vec<KClass> {
    [W_O, W_UV, W_S2, W_L2, W_S21].iter().map(|&w| bundle(w, t)).collect()
}

/// `(Σ^{2,1}U^∨(-1), O, U^∨, S²U^∨, Λ²U^∨)(t)`.
pub fn block_e_prime(t: i64) -> Vec<KClass> {
    let mut out = vec![bundle(W_S21, t - 1)];
    out.extend([W_O, W_UV, W_S2, W_L2].iter().map(|&w| bundle(w, t)));
    out
}

/// `[T] = −[L_𝔈(Σ^{3,1}U^∨)]`; the shift by 3 contributes the sign.
pub fn class_t() -> Result<KClass> {
    let l = k_mutate_left(&block_e(0), &bundle(W_S31, 0))?;
    Ok(l.negate().with_label("T"))
}

/// `[F] = [T] − [Σ^{2,1}U^∨(-1)]`, the class of the right mutation of `T`
/// through `Σ^{2,1}U^∨(-1)`.
pub fn class_f() -> Result<KClass> {
    Ok(class_t()?.sub(&bundle(W_S21, -1))?.with_label("F"))
}

/// The two-term complex `Λ³V ⊗ O(-1) → Λ²V ⊗ U^∨(-1)`, second term in degree 0.
pub fn complex_g() -> ComplexSpec {
    ComplexSpec::new(
        "G",
        vec![
            (-1, expr(&[(LAMBDA_V[3], W_O, -1, 0)])),
            (0, expr(&[(LAMBDA_V[2], W_UV, -1, 0)])),
        ],
    )
    .expect("nonempty")
}

pub fn class_g() -> Result<KClass> {
    Ok(k_class_of_complex(&complex_g())?.with_label("G"))
}

/// `[T'] = [G] − [T]`, from the triangle `T[-1] → T' → G`.
pub fn class_t_prime() -> Result<KClass> {
    Ok(class_g()?.sub(&class_t()?)?.with_label("T'"))
}

/// Builds a complex from `(degree, mult, weight, twist)` rows.
fn complex(name: &str, rows: &[(i64, i64, [i64; 3], i64)]) -> ComplexSpec {
    let terms = rows
        .iter()
        .map(|&(d, m, w, t)| (d, expr(&[(m, w, t, 0)])))
        .collect();
    ComplexSpec::new(name, terms).expect("nonempty")
}

/// `Λ^k U^⊥` through the filtration `U ⊂ U^⊥` with quotient `S`:
/// `[Λ^k U] + [Λ^{k-1} U ⊗ S] + [Λ^{k-2} U]`, using `Λ²S = O`.
pub fn lambda_u_perp(k: usize) -> BundleExpr {
    let mut items = vec![];
    if let Some(w) = lambda_u(k) {
        items.push((1, w, 0, 0));
    }
    if let Some(w) = k.checked_sub(1).and_then(lambda_u) {
        items.push((1, w, 0, 1));
    }
    if let Some(w) = k.checked_sub(2).and_then(lambda_u) {
        items.push((1, w, 0, 0));
    }
    expr(&items)
}

/// `Λ^{k-i} V ⊗ S^i U^∨` in degree `i`, without the kernel term.
pub fn koszul_resolution(k: usize) -> ComplexSpec {
    let rows: Vec<_> = (0..=k)
        .map(|i| (i as i64, LAMBDA_V[k - i], [i as i64, 0, 0], 0))
        .collect();
    complex(&format!("koszul-{k}-resolution"), &rows)
}

/// `0 → Λ^k U^⊥ → Λ^k V ⊗ O → … → V ⊗ S^{k-1}U^∨ → S^k U^∨ → 0`, with the
/// kernel in degree −1.
pub fn koszul(k: usize) -> ComplexSpec {
    let mut terms = koszul_resolution(k).terms().to_vec();
    terms.push((-1, lambda_u_perp(k)));
    ComplexSpec::new(format!("koszul-{k}"), terms).expect("nonempty")
}

/// Staircase complex ending in `S²U^∨`.
pub fn staircase_s2() -> ComplexSpec {
    complex(
        "staircase-s2",
        &[
            (0, 1, W_S33, -4),
            (1, LAMBDA_V[7], W_S22, -3),
            (2, LAMBDA_V[6], W_L2, -2),
            (3, LAMBDA_V[5], W_O, -1),
            (4, LAMBDA_V[2], W_O, 0),
            (5, LAMBDA_V[1], W_UV, 0),
            (6, 1, W_S2, 0),
        ],
    )
}

/// Staircase complex ending in `Σ^{3,1}U^∨`.
pub fn staircase_s31() -> ComplexSpec {
    complex(
        "staircase-s31",
        &[
            (0, 1, W_S32, -3),
            (1, LAMBDA_V[7], W_S21, -2),
            (2, LAMBDA_V[6], W_UV, -1),
            (3, LAMBDA_V[4], W_O, 0),
            (4, LAMBDA_V[2], W_L2, 0),
            (5, LAMBDA_V[1], W_S21, 0),
            (6, 1, W_S31, 0),
        ],
    )
}

/// Staircase complex ending in `Σ^{3,2}U^∨`.
pub fn staircase_s32() -> ComplexSpec {
    complex(
        "staircase-s32",
        &[
            (0, 1, W_S42, -3),
            (1, LAMBDA_V[7], W_S31, -2),
            (2, LAMBDA_V[6], W_S2, -1),
            (3, LAMBDA_V[4], W_UV, 0),
            (4, LAMBDA_V[3], W_L2, 0),
            (5, LAMBDA_V[1], W_S22, 0),
            (6, 1, W_S32, 0),
        ],
    )
}

/// Total complex of the truncated bicomplex built on the `Λ⁴V ⊗ O` column.
pub fn bicomplex_first_right() -> ComplexSpec {
    complex(
        "bicomplex-first-right",
        &[
            (0, LAMBDA_V[4], W_O, 0),
            (1, LAMBDA_V[2], W_L2, 0),
            (2, LAMBDA_V[1], W_S21, 0),
            (3, 1, W_S31, 0),
            (-1, LAMBDA_V[2], W_O, 0),
            (0, LAMBDA_V[1], W_UV, 0),
            (1, 1, W_S2, 0),
        ],
    )
}

/// Quasi-isomorphic twisted form of [`bicomplex_first_right`].
pub fn bicomplex_first_left() -> ComplexSpec {
    complex(
        "bicomplex-first-left",
        &[
            (-2, 1, W_S32, -3),
            (-1, LAMBDA_V[1], W_S21, -2),
            (0, LAMBDA_V[2], W_UV, -1),
            (-4, 1, W_S33, -4),
            (-3, LAMBDA_V[1], W_S22, -3),
            (-2, LAMBDA_V[2], W_L2, -2),
            (-1, LAMBDA_V[3], W_O, -1),
        ],
    )
}

/// Truncation extending [`bicomplex_first_right`] by the `G` column.
pub fn bicomplex_second_right() -> ComplexSpec {
    complex(
        "bicomplex-second-right",
        &[
            (0, LAMBDA_V[2], W_UV, -1),
            (1, LAMBDA_V[4], W_O, 0),
            (2, LAMBDA_V[2], W_L2, 0),
            (3, LAMBDA_V[1], W_S21, 0),
            (4, 1, W_S31, 0),
            (-1, LAMBDA_V[3], W_O, -1),
            (0, LAMBDA_V[2], W_O, 0),
            (1, LAMBDA_V[1], W_UV, 0),
            (2, 1, W_S2, 0),
        ],
    )
}

/// Quasi-isomorphic twisted form of [`bicomplex_second_right`].
pub fn bicomplex_second_left() -> ComplexSpec {
    complex(
        "bicomplex-second-left",
        &[
            (-1, 1, W_S32, -3),
            (0, LAMBDA_V[1], W_S21, -2),
            (-3, 1, W_S33, -4),
            (-2, LAMBDA_V[1], W_S22, -3),
            (-1, LAMBDA_V[2], W_L2, -2),
        ],
    )
}

/// Associated graded of the filtration on `T`:
/// `O(-1)⊗S ⊕ U^∨(-1) ⊕ S²U^∨(-1)⊗S ⊕ Σ^{2,1}U^∨(-1)`.
pub fn class_t_semisimple() -> KClass {
    KClass::new(
        "ss(T)",
        expr(&[
            (1, W_O, -1, 1),
            (1, W_UV, -1, 0),
            (1, W_S2, -1, 1),
            (1, W_S21, -1, 0),
        ]),
    )
}

/// `[S] = 8[O] − [U] − [U^∨]`, from the monad `U → V ⊗ O → U^∨`.
pub fn class_s_monad() -> KClass {
    KClass::new(
        "monad(S)",
        expr(&[(LAMBDA_V[1], W_O, 0, 0), (-1, W_U, 0, 0), (-1, W_UV, 0, 0)]),
    )
}

/// Replaces every `Σ^β U^∨ ⊗ S` by `8 Σ^β U^∨ − Σ^β U^∨ ⊗ U − Σ^β U^∨ ⊗ U^∨`.
pub fn expand_s(e: &BundleExpr) -> Result<BundleExpr> {
    let mut out = BundleExpr::zero(e.context());
    for (t, m) in e.terms() {
        match t.s_degree {
            0 => out.add_term(t.clone(), m)?,
            1 => {
                out.add_term(BundleTerm::new(t.weight.clone(), 0), LAMBDA_V[1] * m)?;
                for factor in [W_U, W_UV] {
                    for (g, c) in tensor_gl(&t.weight, &GLWeight::from(factor))? {
                        out.add_term(BundleTerm::new(g, 0), -m * c as i64)?;
                    }
                }
            }
            p => {
                return Err(EngineError::UnsupportedSPower {
                    power: p,
                    s_rank: e.context().s_rank(),
                })
            }
        }
    }
    Ok(out)
}

pub fn class_t_semisimple_monad() -> Result<KClass> {
    Ok(KClass::new("ss(T) via monad", expand_s(&class_t_semisimple().expr)?))
}

/// `[H^0(T')] − [ss H^{-1}(T')]` with `H^0 = Σ^{3,1}U^∨(-2)` and
/// `ss H^{-1} = O(-2) ⊕ U^∨(-2)⊗S ⊕ U(-1) ⊕ O(-1)⊗S`.
pub fn class_t_prime_from_cohomology() -> KClass {
    KClass::new(
        "H^0(T') - H^-1(T')",
        expr(&[
            (1, W_S31, -2, 0),
            (-1, W_O, -2, 0),
            (-1, W_UV, -2, 1),
            (-1, W_U, -1, 0),
            (-1, W_O, -1, 1),
        ]),
    )
}

/// Ordered collection with optional Lefschetz support partition.
#[derive(Clone, Debug)]
pub struct Collection {
    pub name: String,
    pub classes: Vec<KClass>,
    pub support: Option<Vec<usize>>,
}

impl Collection {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub const COLLECTION_NAMES: [&str; 7] = [
    "theorem-main-1",
    "theorem-main-2",
    "theorem-main-3",
    "theorem-main-4",
    "rectangular",
    "igr28-g",
    "igr28-gprime",
];

/// The four 32-object collections on `IGr(3,8)`.
///
/// 1. `F, 𝔈, F(1), 𝔈(1), …, 𝔈(5)` and 2. the same with `T, 𝔈'` are
///    Lefschetz for `O(1)` with support `(6,6,5,5,5,5)`.
/// 3. `F, 𝔈, 𝔈(1), 𝔈(2), F(3), 𝔈(3), 𝔈(4), 𝔈(5)` and 4. the same with
///    `T, 𝔈'` are rectangular Lefschetz for `O(3)` with support `(16,16)`.
pub fn theorem_main(which: usize) -> Result<Collection> {
    let (extra, block): (KClass, fn(i64) -> Vec<KClass>) = match which {
        1 | 3 => (class_f()?, block_e),
        2 | 4 => (class_t()?, block_e_prime),
        _ => return Err(EngineError::UnknownClass(format!("theorem-main-{which}"))),
    };
    let mut classes = vec![];
    let support = if which <= 2 {
        classes.push(extra.clone());
        classes.extend(block(0));
        classes.push(extra.twist(1));
        for t in 1..=5 {
            classes.extend(block(t));
        }
        vec![6, 6, 5, 5, 5, 5]
    } else {
        for half in [0, 3] {
            classes.push(extra.twist(half));
            for t in half..half + 3 {
                classes.extend(block(t));
            }
        }
        vec![16, 16]
    };
    Ok(Collection {
        name: format!("theorem-main-{which}"),
        classes,
        support: Some(support),
    })
}

/// `𝔈, 𝔈(1), …, 𝔈(5)`: the rectangular part.
pub fn rectangular() -> Collection {
    Collection {
        name: "rectangular".into(),
        classes: (0..6).flat_map(block_e).collect(),
        support: Some(vec![5; 6]),
    }
}

fn igr28(w: [i64; 2], t: i64) -> KClass {
    let name = match w {
        [0, 0] => "O".to_string(),
        [1, 0] => "U^v".to_string(),
        [a, 0] => format!("S^{a}U^v"),
        _ => format!("Sigma{}U^v", GLWeight::from(w)),
    };
    let label = if t == 0 { name } else { format!("{name}({t})") };
    let e = BundleExpr::zero(Context::IGR_2_8)
        .with(BundleTerm::new(GLWeight::from(w).twist(t), 0), 1)
        .expect("rank-2 dominant weight");
    KClass::new(label, e)
}

/// Lefschetz collection on `IGr(2,8)` with first block `O, U^∨, S²U^∨, S³U^∨`,
/// support `(4,4,4,3,3,3,3)`, twisted by `O(-5)`.
pub fn igr28_g() -> Collection {
    let mut classes = vec![];
    for i in 0..7 {
        let size = if i < 3 { 4 } else { 3 };
        for a in 0..size {
            classes.push(igr28([a, 0], i - 5));
        }
    }
    Collection {
        name: "igr28-g".into(),
        classes,
        support: Some(vec![4, 4, 4, 3, 3, 3, 3]),
    }
}

/// [`igr28_g`] twisted by `O(-1)`, with its first object `O(-6)` moved to the
/// end as `O(-6) ⊗ ω^{-1} = O(1)`.
pub fn igr28_gprime() -> Collection {
    let mut classes: Vec<KClass> = igr28_g().classes.iter().skip(1).map(|c| c.twist(-1)).collect();
    for c in classes.iter_mut() {
        c.label = relabel_igr28(&c.expr);
    }
    classes.push(igr28([0, 0], 1));
    Collection {
        name: "igr28-gprime".into(),
        classes,
        support: None,
    }
}

fn relabel_igr28(e: &BundleExpr) -> String {
    let (t, _) = e.terms().next().expect("single term");
    let v = t.weight.entries();
    igr28([v[0] - v[1], 0], v[1]).label
}

pub fn collection_by_name(name: &str) -> Result<Collection> {
    match name {
        "theorem-main-1" => theorem_main(1),
        "theorem-main-2" => theorem_main(2),
        "theorem-main-3" => theorem_main(3),
        "theorem-main-4" => theorem_main(4),
        "rectangular" => Ok(rectangular()),
        "igr28-g" => Ok(igr28_g()),
        "igr28-gprime" => Ok(igr28_gprime()),
        _ => Err(EngineError::UnknownClass(name.to_string())),
    }
}

pub const COMPLEX_NAMES: [&str; 12] = [
    "koszul-2",
    "koszul-3",
    "koszul-4",
    "staircase-s2",
    "staircase-s31",
    "staircase-s32",
    "bicomplex-first-right",
    "bicomplex-first-left",
    "bicomplex-second-right",
    "bicomplex-second-left",
    "G",
    "koszul-2-resolution",
];

pub fn complex_by_name(name: &str) -> Result<ComplexSpec> {
    Ok(match name {
        "koszul-2" => koszul(2),
        "koszul-3" => koszul(3),
        "koszul-4" => koszul(4),
        "koszul-2-resolution" => koszul_resolution(2),
        "staircase-s2" => staircase_s2(),
        "staircase-s31" => staircase_s31(),
        "staircase-s32" => staircase_s32(),
        "bicomplex-first-right" => bicomplex_first_right(),
        "bicomplex-first-left" => bicomplex_first_left(),
        "bicomplex-second-right" => bicomplex_second_right(),
        "bicomplex-second-left" => bicomplex_second_left(),
        "G" => complex_g(),
        _ => return Err(EngineError::UnknownClass(name.to_string())),
    })
}

pub const CLASS_NAMES: [&str; 7] = ["T", "F", "G", "T'", "ss(T)", "ss(T)-monad", "T'-cohomology"];

/// Named classes, with an optional trailing twist: `F(1)`, `T(-2)`.
pub fn class_by_name(name: &str) -> Result<KClass> {
    let (base, twist) = split_twist(name);
    let class = match base {
        "T" => class_t()?,
        "F" => class_f()?,
        "G" => class_g()?,
        "T'" => class_t_prime()?,
        "ss(T)" => class_t_semisimple(),
        "ss(T)-monad" => class_t_semisimple_monad()?,
        "T'-cohomology" => class_t_prime_from_cohomology(),
        _ => return Err(EngineError::UnknownClass(name.to_string())),
    };
    Ok(class.twist(twist))
}

fn split_twist(name: &str) -> (&str, i64) {
    if let Some(open) = name.rfind('(') {
        if name.ends_with(')') {
            if let Ok(t) = name[open + 1..name.len() - 1].parse::<i64>() {
                return (&name[..open], t);
            }
        }
    }
    (name, 0)
}
