//! Manifest loading and validation.
//!
//! A manifest is a JSON object with a `checks` array. Every check has a
//! unique `id`, a `kind`, kind-specific `inputs` and `expected` values, an
//! optional `space` (default `IGr(3,8)`) and a free-form `provenance` tag:
//!
//! | kind               | inputs                                   | expected                         |
//! |--------------------|------------------------------------------|----------------------------------|
//! | `extEquals`        | `[from, to]`                             | Ext notation or `{"dims": {..}}` |
//! | `extZero`          | `[[from, to], ...]`                      | `"0"`                            |
//! | `extTable`         | `{"from": [..], "twists": [..], "to": [..]}` | nonzero cells, all others zero |
//! | `gramCheck`        | `[collection]`                           | `{"size", "unitriangular", "det"}` |
//! | `pushforwardTable` | `{"i": [lo, hi], "j": [..], "k": [..]}`  | `[{"ijk": [i, j, k], "result"}]` |
//! | `kIdentity`        | `[[lhs, rhs], ...]`                      | `true`                           |
//! | `eulerPairing`     | `[[a, b], ...]`                          | `[chi, ...]`                     |
//! | `spanCheck`        | `[{"target", "generators": [..]}, ...]`  | `["member" \| "notMember", ...]` |
//! | `complexCheck`     | `[complex, ...]`                         | `"exact"` or `"notExact"`        |
//! | `rankCheck`        | `[class or "K0", ...]`                   | `[rank, ...]`                    |
//! | `propertySuite`    | `{"suite", "cases"?}`                    | `{"failures": 0}`                |
//!
//! Bundle expressions use the core `Sigma(..)(t)*S^c` syntax; K-class
//! expressions use [`crate::kexpr`]; Ext notation is [`crate::notation`].

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use igr_core::Context;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::notation;

pub const BUNDLED_NAME: &str = "paper-full.json";
const BUNDLED: &str = include_str!("../manifests/paper-full.json");

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("check `{id}`: unknown kind `{kind}`")]
    UnknownKind { id: String, kind: String },
    #[error("duplicate check id `{0}`")]
    DuplicateId(String),
    #[error("check `{id}`: {message}")]
    BadCheck { id: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    ExtEquals,
    ExtZero,
    ExtTable,
    GramCheck,
    PushforwardTable,
    KIdentity,
    EulerPairing,
    SpanCheck,
    ComplexCheck,
    RankCheck,
    PropertySuite,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::ExtEquals,
        CheckKind::ExtZero,
        CheckKind::ExtTable,
        CheckKind::GramCheck,
        CheckKind::PushforwardTable,
        CheckKind::KIdentity,
        CheckKind::EulerPairing,
        CheckKind::SpanCheck,
        CheckKind::ComplexCheck,
        CheckKind::RankCheck,
        CheckKind::PropertySuite,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::ExtEquals => "extEquals",
            CheckKind::ExtZero => "extZero",
            CheckKind::ExtTable => "extTable",
            CheckKind::GramCheck => "gramCheck",
            CheckKind::PushforwardTable => "pushforwardTable",
            CheckKind::KIdentity => "kIdentity",
            CheckKind::EulerPairing => "eulerPairing",
            CheckKind::SpanCheck => "spanCheck",
            CheckKind::ComplexCheck => "complexCheck",
            CheckKind::RankCheck => "rankCheck",
            CheckKind::PropertySuite => "propertySuite",
        }
    }
}

impl FromStr for CheckKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        CheckKind::ALL.into_iter().find(|k| k.as_str() == s).ok_or(())
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Expected Ext groups: exact representations, or dimensions per degree.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ExtExpect {
    Notation(String),
    /// Keys are degrees written as JSON object keys.
    Dims { dims: BTreeMap<String, u64> },
}

impl ExtExpect {
    pub fn dims_by_degree(dims: &BTreeMap<String, u64>) -> Result<BTreeMap<usize, u64>, String> {
        dims.iter()
            .map(|(k, &v)| {
                k.parse::<usize>()
                    .map(|d| (d, v))
                    .map_err(|_| format!("bad degree `{k}` in dims"))
            })
            .collect()
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableInputs {
    pub from: Vec<String>,
    pub twists: Vec<i64>,
    pub to: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableCell {
    pub from: String,
    pub twist: i64,
    pub to: String,
    pub ext: ExtExpect,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramExpect {
    pub size: usize,
    pub unitriangular: bool,
    pub det: i64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PushRanges {
    pub i: [i64; 2],
    pub j: [i64; 2],
    pub k: [i64; 2],
}

impl PushRanges {
    pub fn triples(&self) -> Vec<[i64; 3]> {
        let mut out = vec![];
        for i in self.i[0]..=self.i[1] {
            for j in self.j[0]..=self.j[1] {
                for k in self.k[0]..=self.k[1] {
                    out.push([i, j, k]);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PushRow {
    pub ijk: [i64; 3],
    pub result: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpanInput {
    pub target: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Membership {
    Member,
    NotMember,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Exactness {
    Exact,
    NotExact,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteInput {
    pub suite: String,
    #[serde(default)]
    pub cases: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteExpect {
    pub failures: usize,
}

/// Kind-specific inputs and expected values, decoded at load time.
#[derive(Clone, Debug)]
pub enum CheckBody {
    ExtEquals { from: String, to: String, expected: ExtExpect },
    ExtZero { pairs: Vec<[String; 2]> },
    ExtTable { inputs: TableInputs, cells: Vec<TableCell> },
    Gram { collection: String, expected: GramExpect },
    Pushforward { ranges: PushRanges, rows: Vec<PushRow> },
    KIdentity { pairs: Vec<[String; 2]> },
    EulerPairing { pairs: Vec<[String; 2]>, expected: Vec<i64> },
    Span { inputs: Vec<SpanInput>, expected: Vec<Membership> },
    Complex { names: Vec<String>, expected: Exactness },
    Rank { exprs: Vec<String>, expected: Vec<i64> },
    Suite { input: SuiteInput, expected: SuiteExpect },
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub kind: CheckKind,
    pub space: Context,
    pub provenance: String,
    /// The expected value as written, echoed into reports.
    pub expected: Value,
    pub body: CheckBody,
}

#[derive(Clone, Debug, Default)]
pub struct Manifest {
    pub description: Option<String>,
    pub checks: Vec<Check>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    checks: Vec<RawCheck>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCheck {
    id: String,
    kind: String,
    #[serde(default)]
    space: Option<String>,
    #[serde(default)]
    inputs: Value,
    expected: Value,
    #[serde(default)]
    provenance: String,
}

/// `IGr(k,n)` or `Gr(k,n)`.
pub fn parse_space(s: &str) -> Result<Context, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (isotropic, rest) = if let Some(r) = compact.strip_prefix("IGr(") {
        (true, r)
    } else if let Some(r) = compact.strip_prefix("Gr(") {
        (false, r)
    } else {
        return Err(format!("unknown space `{s}`"));
    };
    let inner = rest.strip_suffix(')').ok_or_else(|| format!("unknown space `{s}`"))?;
    let (k, n) = inner.split_once(',').ok_or_else(|| format!("unknown space `{s}`"))?;
    let k: usize = k.parse().map_err(|_| format!("bad rank in `{s}`"))?;
    let n: usize = n.parse().map_err(|_| format!("bad dimension in `{s}`"))?;
    let ctx = if isotropic {
        Context::isotropic(k, n)
    } else {
        Context::classical(k, n)
    };
    ctx.map_err(|e| e.to_string())
}

fn decode<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T, String> {
    serde_json::from_value(v.clone()).map_err(|e| format!("bad {what}: {e}"))
}

fn check_notation(e: &ExtExpect, rank: usize) -> Result<(), String> {
    match e {
        ExtExpect::Notation(s) => notation::parse(s, rank).map(|_| ()),
        ExtExpect::Dims { dims } => ExtExpect::dims_by_degree(dims).map(|_| ()),
    }
}

fn decode_body(kind: CheckKind, raw: &RawCheck, ctx: Context) -> Result<CheckBody, String> {
    let (inputs, expected) = (&raw.inputs, &raw.expected);
    let rank = ctx.group_rank();
    Ok(match kind {
        CheckKind::ExtEquals => {
            let [from, to]: [String; 2] = decode(inputs, "inputs")?;
            let expected: ExtExpect = decode(expected, "expected")?;
            check_notation(&expected, rank)?;
            CheckBody::ExtEquals { from, to, expected }
        }
        CheckKind::ExtZero => {
            if expected != &Value::String("0".into()) {
                return Err("expected must be \"0\"".into());
            }
            CheckBody::ExtZero {
                pairs: decode(inputs, "inputs")?,
            }
        }
        CheckKind::ExtTable => {
            let inputs: TableInputs = decode(inputs, "inputs")?;
            let cells: Vec<TableCell> = decode(expected, "expected")?;
            let mut seen = HashSet::new();
            for c in &cells {
                check_notation(&c.ext, rank)?;
                if !inputs.from.contains(&c.from)
                    || !inputs.to.contains(&c.to)
                    || !inputs.twists.contains(&c.twist)
                {
                    return Err(format!("cell {}({}) -> {} is outside the table", c.from, c.twist, c.to));
                }
                if !seen.insert((c.from.clone(), c.twist, c.to.clone())) {
                    return Err(format!("cell {}({}) -> {} listed twice", c.from, c.twist, c.to));
                }
            }
            CheckBody::ExtTable { inputs, cells }
        }
        CheckKind::GramCheck => {
            let [collection]: [String; 1] = decode(inputs, "inputs")?;
            CheckBody::Gram {
                collection,
                expected: decode(expected, "expected")?,
            }
        }
        CheckKind::PushforwardTable => {
            let ranges: PushRanges = decode(inputs, "inputs")?;
            let rows: Vec<PushRow> = decode(expected, "expected")?;
            let want: BTreeSet<[i64; 3]> = ranges.triples().into_iter().collect();
            let got: BTreeSet<[i64; 3]> = rows.iter().map(|r| r.ijk).collect();
            if got.len() != rows.len() || got != want {
                return Err("expected rows must list every (i, j, k) in range exactly once".into());
            }
            CheckBody::Pushforward { ranges, rows }
        }
        CheckKind::KIdentity => {
            if expected != &Value::Bool(true) {
                return Err("expected must be true".into());
            }
            CheckBody::KIdentity {
                pairs: decode(inputs, "inputs")?,
            }
        }
        CheckKind::EulerPairing => {
            let pairs: Vec<[String; 2]> = decode(inputs, "inputs")?;
            let expected: Vec<i64> = decode(expected, "expected")?;
            if pairs.len() != expected.len() {
                return Err("one expected value per pair".into());
            }
            CheckBody::EulerPairing { pairs, expected }
        }
        CheckKind::SpanCheck => {
            let inputs: Vec<SpanInput> = decode(inputs, "inputs")?;
            let expected: Vec<Membership> = decode(expected, "expected")?;
            if inputs.len() != expected.len() {
                return Err("one expected value per target".into());
            }
            CheckBody::Span { inputs, expected }
        }
        CheckKind::ComplexCheck => CheckBody::Complex {
            names: decode(inputs, "inputs")?,
            expected: decode(expected, "expected")?,
        },
        CheckKind::RankCheck => {
            let exprs: Vec<String> = decode(inputs, "inputs")?;
            let expected: Vec<i64> = decode(expected, "expected")?;
            if exprs.len() != expected.len() {
                return Err("one expected value per input".into());
            }
            CheckBody::Rank { exprs, expected }
        }
        CheckKind::PropertySuite => CheckBody::Suite {
            input: decode(inputs, "inputs")?,
            expected: decode(expected, "expected")?,
        },
    })
}

impl FromStr for Manifest {
    type Err = ManifestError;

    /// Blank input is an empty manifest.
    fn from_str(text: &str) -> Result<Self, ManifestError> {
        if text.trim().is_empty() {
            return Ok(Manifest::default());
        }
        let raw: RawManifest = serde_json::from_str(text).map_err(|e| ManifestError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let mut ids = HashSet::new();
        let mut checks = vec![];
        for rc in raw.checks {
            if !ids.insert(rc.id.clone()) {
                return Err(ManifestError::DuplicateId(rc.id));
            }
            let kind: CheckKind = rc.kind.parse().map_err(|_| ManifestError::UnknownKind {
                id: rc.id.clone(),
                kind: rc.kind.clone(),
            })?;
            let bad = |message: String| ManifestError::BadCheck {
                id: rc.id.clone(),
                message,
            };
            let space = match &rc.space {
                Some(s) => parse_space(s).map_err(bad)?,
                None => Context::IGR_3_8,
            };
            let body = decode_body(kind, &rc, space).map_err(bad)?;
            checks.push(Check {
                id: rc.id,
                kind,
                space,
                provenance: rc.provenance,
                expected: rc.expected,
                body,
            });
        }
        Ok(Manifest {
            description: raw.description,
            checks,
        })
    }
}

impl Manifest {
    pub fn bundled() -> Manifest {
        BUNDLED.parse().expect("bundled manifest is valid")
    }

    pub fn bundled_text() -> &'static str {
        BUNDLED
    }

    /// Reads `path`; a bare `paper-full.json` that does not exist on disk
    /// resolves to the bundled copy.
    pub fn load(path: &Path) -> Result<Manifest, ManifestError> {
        if !path.exists() && path.as_os_str() == BUNDLED_NAME {
            return Ok(Manifest::bundled());
        }
        let text = std::fs::read_to_string(path).map_err(|e| ManifestError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        text.parse()
    }

    pub fn ids(&self) -> Vec<&str> {
        self.checks.iter().map(|c| c.id.as_str()).collect()
    }
}
