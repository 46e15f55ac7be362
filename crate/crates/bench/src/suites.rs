//! Seeded property suites. Each returns how many cases ran and which failed;
//! the same seed always draws the same cases.

use std::collections::{HashSet, VecDeque};

use igr_core::schur::{dim_gl, tensor_gl};
use igr_core::weyl::{dominantize_c, quick_vanish_c};
use igr_core::{serre_duality_check, BundleExpr, BundleTerm, Context, GLWeight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 0x5eed_0003_0008;

pub const SUITE_NAMES: [&str; 5] = [
    "serre-named",
    "serre-random",
    "lr-conservation",
    "weyl-length",
    "degeneracy-criterion",
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub cases: usize,
    pub failures: usize,
    /// At most a handful of failing cases, for the report.
    pub examples: Vec<String>,
}

impl SuiteOutcome {
    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(case());
            }
        }
    }
}

/// `cases` overrides the default size for the seeded suites.
pub fn run_suite(name: &str, seed: u64, cases: Option<usize>) -> Result<SuiteOutcome, String> {
    match name {
        "serre-named" => Ok(serre_named()),
        "serre-random" => Ok(serre_random(seed, cases.unwrap_or(200))),
        "lr-conservation" => Ok(lr_conservation(seed, cases.unwrap_or(500))),
        "weyl-length" => Ok(weyl_length_bfs(3, 4)),
        "degeneracy-criterion" => Ok(degeneracy_criterion(4, 5)),
        _ => Err(format!("unknown property suite `{name}`")),
    }
}

/// The irreducible bundles that appear in the collections, mutations and
/// orthogonality statements on `IGr(3,8)`.
pub fn named_bundles() -> Vec<String> {
    let mut out = vec![];
    for t in 0..6 {
        for w in ["0,0,0", "1,0,0", "2,0,0", "1,1,0", "2,1,0"] {
            out.push(format!("Sigma({w})({t})"));
        }
    }
    for s in [
        "Sigma(2,1,0)(-1)",
        "Sigma(2,1,0)(-2)",
        "Sigma(3,1,0)",
        "Sigma(3,1,0)(-2)",
        "Sigma(3,1,0)(3)",
        "Sigma(3,2,0)(-3)",
        "Sigma(3,3,0)(-4)",
        "Sigma(2,2,0)(-3)",
        "Sigma(4,2,0)(-3)",
        "Sigma(0,0,-1)",
        "Sigma(0,0,0)(-1)*S^1",
        "Sigma(1,0,0)(-1)*S^1",
        "Sigma(2,0,0)(-1)*S^1",
        "Sigma(2,2,0)(-3)*S^1",
    ] {
        out.push(s.to_string());
    }
    out
}

pub fn serre_named() -> SuiteOutcome {
    let x = Context::IGR_3_8;
    let bundles: Vec<(String, BundleExpr)> = named_bundles()
        .into_iter()
        .map(|s| {
            let e = BundleExpr::parse(x, &s).expect("named bundles parse");
            (s, e)
        })
        .collect();
    let mut out = SuiteOutcome::default();
    for (sa, a) in &bundles {
        for (sb, b) in &bundles {
            let ok = serre_duality_check(a, b).unwrap_or(false);
            out.record(ok, || format!("{sa} / {sb}"));
        }
    }
    out
}

fn dominant(rng: &mut ChaCha8Rng, rank: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..rank).map(|_| rng.gen_range(lo..=hi)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn serre_random(seed: u64, cases: usize) -> SuiteOutcome {
    let x = Context::IGR_3_8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::default();
    for _ in 0..cases {
        let (a, sa) = (dominant(&mut rng, 3, -4, 4), rng.gen_range(0..=2));
        let (b, sb) = (dominant(&mut rng, 3, -4, 4), rng.gen_range(0..=2));
        let e = BundleExpr::term(x, BundleTerm::new(a.clone(), sa)).expect("dominant");
        let f = BundleExpr::term(x, BundleTerm::new(b.clone(), sb)).expect("dominant");
        let ok = serre_duality_check(&e, &f).unwrap_or(false);
        out.record(ok, || format!("{a:?}*S^{sa} / {b:?}*S^{sb}"));
    }
    out
}

/// `dim Σ^a ⊗ Σ^b = Σ_γ c^γ dim Σ^γ` for `GL(r)`, `r ∈ {2,3,4}`.
pub fn lr_conservation(seed: u64, cases: usize) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SuiteOutcome::default();
    for _ in 0..cases {
        let rank = rng.gen_range(2..=4);
        let a = GLWeight::new(dominant(&mut rng, rank, -3, 3));
        let b = GLWeight::new(dominant(&mut rng, rank, -3, 3));
        let ok = (|| -> Option<bool> {
            let lhs = dim_gl(&a).ok()? * dim_gl(&b).ok()?;
            let mut rhs = 0;
            for (g, m) in tensor_gl(&a, &b).ok()? {
                rhs += m * dim_gl(&g).ok()?;
            }
            Some(lhs == rhs)
        })()
        .unwrap_or(false);
        out.record(ok, || format!("{a} x {b}"));
    }
    out
}

/// Word length by breadth-first search over the simple reflections of type
/// `C_n`: adjacent swaps and negation of the last entry. `None` when no
/// vector in the orbit is strictly decreasing and positive.
pub fn bfs_length_c(v: &[i64]) -> Option<usize> {
    let n = v.len();
    let target = |w: &[i64]| w.iter().all(|&x| x > 0) && w.windows(2).all(|p| p[0] > p[1]);
    let mut seen = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([(v.to_vec(), 0)]);
    while let Some((w, d)) = queue.pop_front() {
        if target(&w) {
            return Some(d);
        }
        for i in 0..n {
            let mut next = w.clone();
            if i + 1 < n {
                next.swap(i, i + 1);
            } else {
                next[i] = -next[i];
            }
            if seen.insert(next.clone()) {
                queue.push_back((next, d + 1));
            }
        }
    }
    None
}

fn all_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Root-count length against the BFS oracle for every vector with
/// `1 <= n <= max_n` and entries in `[-bound, bound]`.
pub fn weyl_length_bfs(max_n: usize, bound: i64) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    for n in 1..=max_n {
        for v in all_vectors(n, bound) {
            let ok = dominantize_c(&v).length() == bfs_length_c(&v);
            out.record(ok, || format!("{v:?}"));
        }
    }
    out
}

/// The pigeonhole criterion never fires on a regular vector.
pub fn degeneracy_criterion(n: usize, bound: i64) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    for v in all_vectors(n, bound) {
        let ok = !quick_vanish_c(&v) || dominantize_c(&v).is_degenerate();
        out.record(ok, || format!("{v:?}"));
    }
    out
}
