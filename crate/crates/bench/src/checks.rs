//! Evaluation of single checks. Every check is pure; engine errors become
//! a failing outcome carrying the message instead of aborting the run.

use std::collections::{BTreeMap, BTreeSet};

use igr_core::ktheory::named::{collection_by_name, complex_by_name};
use igr_core::ktheory::{
    complex_euler_check, gram_matrix, k_class_equals, k_span_membership, ProbeSet, SpanCertificate,
};
use igr_core::{euler, ext_groups, pushforward_ifl, BundleExpr, CohomologyResult, Context};
use serde_json::{json, Value};

use crate::kexpr;
use crate::manifest::{Check, CheckBody, Exactness, ExtExpect, Membership};
use crate::notation;
use crate::suites::run_suite;

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub computed: Value,
}

impl Outcome {
    fn error(message: impl Into<String>) -> Self {
        Outcome {
            pass: false,
            computed: json!({ "error": message.into() }),
        }
    }
}

pub fn run_check(check: &Check, seed: u64) -> Outcome {
    evaluate(check, seed).unwrap_or_else(Outcome::error)
}

fn ext(ctx: Context, from: &str, to: &str) -> Result<CohomologyResult, String> {
    let e = BundleExpr::parse(ctx, from).map_err(|e| format!("{e} in `{from}`"))?;
    let f = BundleExpr::parse(ctx, to).map_err(|e| format!("{e} in `{to}`"))?;
    ext_groups(&e, &f).map_err(|e| e.to_string())
}

fn ext_matches(h: &CohomologyResult, want: &ExtExpect, rank: usize) -> Result<bool, String> {
    Ok(match want {
        ExtExpect::Notation(s) => notation::parse(s, rank)? == notation::shape(h),
        ExtExpect::Dims { dims } => notation::dims(h) == ExtExpect::dims_by_degree(dims)?,
    })
}

fn ext_value(h: &CohomologyResult, want: &ExtExpect) -> Value {
    match want {
        ExtExpect::Notation(_) => json!(notation::render(h)),
        ExtExpect::Dims { .. } => json!({ "dims": notation::dims(h), "ext": notation::render(h) }),
    }
}

fn probes() -> Result<&'static ProbeSet, String> {
    ProbeSet::reference().map_err(|e| e.to_string())
}

fn evaluate(check: &Check, seed: u64) -> Result<Outcome, String> {
    let ctx = check.space;
    let rank = ctx.group_rank();
    let err = |e: igr_core::EngineError| e.to_string();
    match &check.body {
        CheckBody::ExtEquals { from, to, expected } => {
            let h = ext(ctx, from, to)?;
            Ok(Outcome {
                pass: ext_matches(&h, expected, rank)?,
                computed: ext_value(&h, expected),
            })
        }
        CheckBody::ExtZero { pairs } => {
            let mut pass = true;
            let mut computed = vec![];
            for [from, to] in pairs {
                let h = ext(ctx, from, to)?;
                pass &= h.is_zero();
                computed.push(json!(notation::render(&h)));
            }
            Ok(Outcome {
                pass,
                computed: Value::Array(computed),
            })
        }
        CheckBody::ExtTable { inputs, cells } => {
            let wanted: BTreeMap<(&str, i64, &str), &ExtExpect> = cells
                .iter()
                .map(|c| ((c.from.as_str(), c.twist, c.to.as_str()), &c.ext))
                .collect();
            let mut pass = true;
            let mut nonzero = vec![];
            let mut matched = BTreeSet::new();
            for from in &inputs.from {
                for &t in &inputs.twists {
                    let e = BundleExpr::parse(ctx, from).map_err(err)?.twist(t);
                    for to in &inputs.to {
                        let f = BundleExpr::parse(ctx, to).map_err(err)?;
                        let h = ext_groups(&e, &f).map_err(err)?;
                        let key = (from.as_str(), t, to.as_str());
                        match wanted.get(&key) {
                            Some(want) => {
                                pass &= ext_matches(&h, want, rank)?;
                                matched.insert(key);
                            }
                            None => pass &= h.is_zero(),
                        }
                        if !h.is_zero() {
                            let shown = match wanted.get(&key) {
                                Some(want) => ext_value(&h, want),
                                None => json!(notation::render(&h)),
                            };
                            nonzero.push(json!({ "from": from, "twist": t, "to": to, "ext": shown }));
                        }
                    }
                }
            }
            pass &= matched.len() == wanted.len();
            Ok(Outcome {
                pass,
                computed: Value::Array(nonzero),
            })
        }
        CheckBody::Gram {
            collection,
            expected,
        } => {
            let c = collection_by_name(collection).map_err(err)?;
            let g = gram_matrix(&c.classes).map_err(err)?;
            let det = g.determinant();
            let unitriangular = g.is_unitriangular();
            let pass = g.size() == expected.size
                && unitriangular == expected.unitriangular
                && det == expected.det.into();
            Ok(Outcome {
                pass,
                computed: json!({
                    "size": g.size(),
                    "unitriangular": unitriangular,
                    "det": integer_json(&det.to_string()),
                    "lowerViolations": g.lower_violations(),
                }),
            })
        }
        CheckBody::Pushforward { ranges: _, rows } => {
            let mut pass = true;
            let mut computed = vec![];
            for row in rows {
                let [i, j, k] = row.ijk;
                let got = notation::render_pushforward(&pushforward_ifl(j, k, i).map_err(err)?);
                pass &= normalize(&got) == normalize(&row.result);
                computed.push(json!({ "ijk": row.ijk, "result": got }));
            }
            Ok(Outcome {
                pass,
                computed: Value::Array(computed),
            })
        }
        CheckBody::KIdentity { pairs } => {
            let probes = probes()?;
            let mut results = vec![];
            for [lhs, rhs] in pairs {
                let a = kexpr::parse(lhs)?;
                let b = kexpr::parse(rhs)?;
                results.push(k_class_equals(&a, &b, probes).map_err(err)?);
            }
            Ok(Outcome {
                pass: results.iter().all(|&b| b),
                computed: json!(results),
            })
        }
        CheckBody::EulerPairing { pairs, expected } => {
            let mut got = vec![];
            for [a, b] in pairs {
                got.push(euler(&kexpr::parse(a)?, &kexpr::parse(b)?).map_err(err)?);
            }
            Ok(Outcome {
                pass: &got == expected,
                computed: json!(got),
            })
        }
        CheckBody::Span { inputs, expected } => {
            let probes = probes()?;
            let mut pass = true;
            let mut computed = vec![];
            for (input, want) in inputs.iter().zip(expected) {
                let target = kexpr::parse(&input.target)?;
                let mut gens = vec![];
                for g in &input.generators {
                    gens.extend(kexpr::parse_generator(g)?);
                }
                let cert = k_span_membership(&target, &gens, probes).map_err(err)?;
                let member = cert.is_member();
                pass &= member == (*want == Membership::Member);
                computed.push(match cert {
                    SpanCertificate::Coefficients(c) => json!({ "member": true, "coefficients": c }),
                    SpanCertificate::NotInSpan => json!({ "member": false }),
                });
            }
            Ok(Outcome {
                pass,
                computed: Value::Array(computed),
            })
        }
        CheckBody::Complex { names, expected } => {
            let probes = probes()?;
            let mut pass = true;
            let mut computed = vec![];
            for name in names {
                let c = complex_by_name(name).map_err(err)?;
                let exact = complex_euler_check(&c, probes).map_err(err)?;
                pass &= exact == (*expected == Exactness::Exact);
                computed.push(json!({ "complex": name, "exact": exact }));
            }
            Ok(Outcome {
                pass,
                computed: Value::Array(computed),
            })
        }
        CheckBody::Rank { exprs, expected } => {
            let mut got = vec![];
            for e in exprs {
                got.push(if e == "K0" {
                    ctx.k0_rank() as i64
                } else {
                    kexpr::parse(e)?.rank().map_err(err)?
                });
            }
            Ok(Outcome {
                pass: &got == expected,
                computed: json!(got),
            })
        }
        CheckBody::Suite { input, expected } => {
            let out = run_suite(&input.suite, seed, input.cases)?;
            Ok(Outcome {
                pass: out.failures == expected.failures && out.cases > 0,
                computed: serde_json::to_value(&out).map_err(|e| e.to_string())?,
            })
        }
    }
}

/// Integers that fit in `i64` stay JSON numbers; larger ones become strings.
pub fn integer_json(digits: &str) -> Value {
    digits.parse::<i64>().map_or_else(|_| json!(digits), Value::from)
}

fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}
