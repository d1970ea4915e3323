//! JSON document format for algebra specs.
//!
//! ```json
//! { "name": "U", "vars": ["X1", "X2"], "invertible": [false, false],
//!   "q": {"(2,1)": "s^-2"}, "c": {"(2,1)": "0"}, "weights": [[1,0],[1,1]] }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::element::Element;
use super::parse_element;
use super::rewrite::validate_spec;
use super::spec::AlgebraSpec;
use crate::coeff::RatF;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    #[serde(default)]
    pub name: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub invertible: Vec<bool>,
    pub q: BTreeMap<String, String>,
    #[serde(default)]
    pub c: BTreeMap<String, String>,
    #[serde(default)]
    pub weights: Vec<[i32; 2]>,
}

fn line_of(src: &str, needle: &str) -> usize {
    src.find(needle).map(|off| src[..off].matches('\n').count() + 1).unwrap_or(0)
}

fn at_line(src: &str, key: &str, msg: String) -> Error {
    let line = line_of(src, &format!("\"{key}\""));
    Error::InvalidSpec(format!("line {line}: {msg}"))
}

fn parse_key(key: &str) -> Option<(usize, usize)> {
    let inner = key.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (j, i) = inner.split_once(',')?;
    Some((j.trim().parse().ok()?, i.trim().parse().ok()?))
}

/// Parses and validates a spec document; confluence failures are errors naming the overlap.
pub fn parse_spec(src: &str) -> Result<AlgebraSpec> {
    let doc: SpecDoc = serde_json::from_str(src).map_err(|e| Error::InvalidSpec(format!("line {}, column {}: {}", e.line(), e.column(), e)))?;
    let spec = build_from_doc(&doc, src)?;
    let report = validate_spec(&spec);
    if let Some(bad) = report.failures().next() {
        let word: Vec<String> = bad.word.iter().map(|&(v, e)| if e == 1 { spec.vars()[v].clone() } else { format!("{}^(-1)", spec.vars()[v]) }).collect();
        return Err(Error::InvalidSpec(format!("not confluent on overlap {}: {} vs {}", word.join(" "), spec.format(&bad.left), spec.format(&bad.right))));
    }
    Ok(spec)
}

fn build_from_doc(doc: &SpecDoc, src: &str) -> Result<AlgebraSpec> {
    let n = doc.vars.len();
    let names: Vec<&str> = doc.vars.iter().map(String::as_str).collect();
    let invertible = if doc.invertible.is_empty() { vec![false; n] } else { doc.invertible.clone() };
    let mut b = AlgebraSpec::builder(&names).name(&doc.name).invertible(&invertible);
    if !doc.weights.is_empty() {
        let w: Vec<(i32, i32)> = doc.weights.iter().map(|p| (p[0], p[1])).collect();
        b = b.weights(&w);
    }
    // a scratch spec over the same variables is used to parse corrections
    let scratch = {
        let mut sb = AlgebraSpec::builder(&names);
        for j in 2..=n {
            for i in 1..j {
                sb = sb.commute(j, i, RatF::one());
            }
        }
        sb.build()?
    };
    let mut seen = vec![vec![false; n]; n];
    for (key, val) in &doc.q {
        let (j, i) = parse_key(key).ok_or_else(|| at_line(src, key, format!("bad relation key `{key}`")))?;
        if !(1..=n).contains(&j) || i < 1 || i >= j {
            return Err(at_line(src, key, format!("relation key `{key}` needs n >= j > i >= 1")));
        }
        let q = RatF::parse(val).map_err(|e| at_line(src, key, format!("q{key}: {e}")))?;
        let c = match doc.c.get(key) {
            Some(cs) => parse_element(&scratch, cs).map_err(|e| at_line(src, key, format!("c{key}: {e}")))?,
            None => Element::zero(),
        };
        seen[j - 1][i - 1] = true;
        b = b.relation(j, i, q, c);
    }
    for key in doc.c.keys() {
        if !doc.q.contains_key(key) {
            return Err(at_line(src, key, format!("correction `{key}` has no matching q entry")));
        }
    }
    b.build()
}

/// Serializes a spec; `parse_spec(to_json(s))` reproduces `s`.
pub fn to_doc(spec: &AlgebraSpec) -> SpecDoc {
    let n = spec.nvars();
    let mut q = BTreeMap::new();
    let mut c = BTreeMap::new();
    for j in 0..n {
        for i in 0..j {
            let key = format!("({},{})", j + 1, i + 1);
            q.insert(key.clone(), spec.q(j, i).to_string());
            if !spec.c(j, i).is_zero() {
                c.insert(key, spec.format(spec.c(j, i)));
            }
        }
    }
    SpecDoc {
        name: spec.name().to_string(),
        vars: spec.vars().to_vec(),
        invertible: spec.invertible_flags().to_vec(),
        q,
        c,
        weights: spec.weights().iter().map(|w| [w.0, w.1]).collect(),
    }
}

pub fn to_json(spec: &AlgebraSpec) -> String {
    serde_json::to_string_pretty(&to_doc(spec)).expect("spec serializes")
}
