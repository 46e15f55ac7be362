//! Text forms for Ext groups and pushforwards, used both for expected values
//! in manifests and for the `computed` field of reports.
//!
//! Ext groups are written as sums of shifted representations:
//!
//! ```text
//! ext  := "0" | item ("+" item)*
//! item := [uint "*"] ("k" | "V(" int ("," int)* ")") ["[" int "]"]
//! ```
//!
//! `k[-9]` is the trivial representation in cohomological degree 9, and
//! `V(2,1)` is the irreducible `Sp` representation of highest weight
//! `(2,1,0,…)` in degree 0. Shifts are non-positive.

use std::collections::BTreeMap;

use igr_core::{CohomologyResult, PushforwardResult};
use serde::Serialize;

/// `(degree, highest weight) -> multiplicity`, weights padded to the group rank.
pub type ExtShape = BTreeMap<(usize, Vec<i64>), u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtEntry {
    pub deg: usize,
    pub weight: Vec<i64>,
    pub mult: u64,
}

/// `{"ext": [...]}` or `{"cohomology": [...]}` with fields in a fixed order.
#[derive(Serialize)]
pub struct EntryList {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ext: Option<Vec<ExtEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cohomology: Option<Vec<ExtEntry>>,
}

pub fn entries(h: &CohomologyResult) -> Vec<ExtEntry> {
    h.entries()
        .map(|(deg, w, mult)| ExtEntry {
            deg,
            weight: w.entries().to_vec(),
            mult,
        })
        .collect()
}

pub fn shape(h: &CohomologyResult) -> ExtShape {
    h.entries()
        .map(|(deg, w, mult)| ((deg, w.entries().to_vec()), mult))
        .collect()
}

fn shift(deg: usize) -> String {
    if deg == 0 {
        String::new()
    } else {
        format!("[-{deg}]")
    }
}

pub fn render(h: &CohomologyResult) -> String {
    if h.is_zero() {
        return "0".into();
    }
    let items: Vec<String> = h
        .entries()
        .map(|(deg, w, mult)| {
            let rep = if w.is_trivial() {
                "k".to_string()
            } else {
                let v = w.entries();
                let last = v.iter().rposition(|&x| x != 0).map_or(1, |i| i + 1);
                let body: Vec<String> = v[..last].iter().map(|x| x.to_string()).collect();
                format!("V({})", body.join(","))
            };
            let m = if mult == 1 { String::new() } else { format!("{mult}*") };
            format!("{m}{rep}{}", shift(deg))
        })
        .collect();
    items.join(" + ")
}

/// Parses the notation above; weights are padded with zeros to `rank`.
pub fn parse(s: &str, rank: usize) -> Result<ExtShape, String> {
    let s = s.trim();
    let mut out = ExtShape::new();
    if s == "0" {
        return Ok(out);
    }
    for item in s.split('+') {
        let item: String = item.chars().filter(|c| !c.is_whitespace()).collect();
        let (mult, rest) = match item.split_once('*') {
            Some((m, r)) => (m.parse::<u64>().map_err(|_| format!("bad multiplicity in `{item}`"))?, r),
            None => (1, item.as_str()),
        };
        let (rep, deg) = match rest.find('[') {
            Some(open) => {
                let inner = rest[open..]
                    .strip_prefix('[')
                    .and_then(|x| x.strip_suffix(']'))
                    .ok_or_else(|| format!("unclosed shift in `{item}`"))?;
                let d: i64 = inner.parse().map_err(|_| format!("bad shift in `{item}`"))?;
                if d > 0 {
                    return Err(format!("positive shift in `{item}`"));
                }
                (&rest[..open], (-d) as usize)
            }
            None => (rest, 0),
        };
        let mut weight = if rep == "k" {
            vec![]
        } else {
            let inner = rep
                .strip_prefix("V(")
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(|| format!("expected `k` or `V(...)` in `{item}`"))?;
            inner
                .split(',')
                .map(|x| x.parse::<i64>().map_err(|_| format!("bad weight in `{item}`")))
                .collect::<Result<Vec<_>, _>>()?
        };
        if weight.len() > rank {
            return Err(format!("weight in `{item}` exceeds rank {rank}"));
        }
        weight.resize(rank, 0);
        *out.entry((deg, weight)).or_default() += mult;
    }
    Ok(out)
}

/// `dim Ext^p` for every `p` with a nonzero group.
pub fn dims(h: &CohomologyResult) -> BTreeMap<usize, u64> {
    h.degrees()
        .into_iter()
        .map(|p| (p, h.total_dimension_at_degree(p)))
        .collect()
}

pub fn render_pushforward(r: &PushforwardResult) -> String {
    match r {
        PushforwardResult::Zero => "0".into(),
        PushforwardResult::Term { weight, shift: s } => {
            let body: Vec<String> = weight.entries().iter().map(|x| x.to_string()).collect();
            format!("Sigma({}){}", body.join(","), shift(*s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use igr_core::{ext_groups, BundleExpr, Context};

    fn ext(a: &str, b: &str) -> CohomologyResult {
        let x = Context::IGR_3_8;
        ext_groups(&BundleExpr::parse(x, a).unwrap(), &BundleExpr::parse(x, b).unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        for (a, b) in [
            ("Sigma(2,1,0)(5)", "Sigma(3,1,0)"),
            ("Sigma(1,0,0)", "Sigma(2,1,0)"),
            ("Sigma(0,0,0)", "Sigma(3,1,0)"),
            ("Sigma(3,1,0)(3)", "Sigma(3,1,0)"),
        ] {
            let h = ext(a, b);
            assert_eq!(parse(&render(&h), 4).unwrap(), shape(&h), "{a} -> {b}");
        }
        assert_eq!(render(&ext("Sigma(2,1,0)(5)", "Sigma(3,1,0)")), "k[-9]");
        assert_eq!(render(&ext("Sigma(1,0,0)", "Sigma(2,1,0)")), "V(1,1) + V(2)");
    }

    #[test]
    fn parse_accepts_sums_and_multiplicities() {
        let s = parse("2*k[-3] + V(1)[0] + k[-3]", 4).unwrap();
        assert_eq!(s[&(3, vec![0, 0, 0, 0])], 3);
        assert_eq!(s[&(0, vec![1, 0, 0, 0])], 1);
        assert!(parse("0", 4).unwrap().is_empty());
        assert!(parse("k[3]", 4).is_err());
        assert!(parse("W(1)", 4).is_err());
        assert!(parse("V(1,1,1,1,1)", 4).is_err());
    }
}
