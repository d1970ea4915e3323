//! Machine-readable verification reports (`report/v1`).

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::coeff::RatF;
use crate::error::{Error, Result};
use crate::hopf::TensorElt;
use crate::pbw::{AlgebraSpec, Element};

pub const SCHEMA: &str = "report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub residual: String,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_residual: Option<String>,
}

/// Effective configuration of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub degbound: i32,
    pub window: Option<i32>,
    pub jobs: Option<usize>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_sample: Option<[String; 2]>,
}

impl Default for Config {
    fn default() -> Self {
        Config { degbound: 6, window: None, jobs: None, seed: 7, numeric_sample: None }
    }
}

impl Config {
    /// Degree bound from `QSERRE_DEGBOUND` when set.
    pub fn from_env() -> Result<Self> {
        let mut c = Config::default();
        if let Ok(v) = std::env::var("QSERRE_DEGBOUND") {
            c.degbound = v.trim().parse().map_err(|_| Error::Usage(format!("QSERRE_DEGBOUND must be an integer, got `{v}`")))?;
        }
        Ok(c)
    }

    pub fn window_or(&self, default: i32) -> i32 {
        self.window.unwrap_or(default)
    }

    pub fn sample(&self) -> Result<Option<(BigRational, BigRational)>> {
        let Some([r, s]) = &self.numeric_sample else { return Ok(None) };
        let parse = |x: &str| -> Result<BigRational> {
            let v = RatF::parse(x)?;
            if !v.is_rational_constant() {
                return Err(Error::Usage(format!("numeric sample `{x}` is not a rational number")));
            }
            v.eval(&BigRational::from_integer(0.into()), &BigRational::from_integer(0.into()))
        };
        Ok(Some((parse(r)?, parse(s)?)))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: String,
    pub config: Config,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, f64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

impl VerificationReport {
    pub fn new(suite: &str, config: Config) -> Self {
        VerificationReport { schema: SCHEMA.into(), suite: suite.into(), config, checks: Vec::new(), timing: None }
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Discrepancy => s.discrepancy += 1,
            }
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn ids_unique(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.checks.iter().all(|c| seen.insert(c.id.as_str()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Other(format!("bad report: {e}")))
    }

    /// One line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Discrepancy => "disc",
            };
            out.push_str(&format!("{tag:<5} {}", c.id));
            if !c.note.is_empty() {
                out.push_str(&format!("  -- {}", c.note));
            }
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!("{}: {} pass, {} fail, {} discrepancy\n", self.suite, s.pass, s.fail, s.discrepancy));
        out
    }
}

/// A residual as rendered in a record.
pub enum Residual<'a> {
    None,
    Element(&'a AlgebraSpec, &'a Element),
    Tensor(&'a AlgebraSpec, &'a TensorElt),
    Text(String),
}

impl Residual<'_> {
    pub fn render(&self) -> String {
        match self {
            Residual::None => String::new(),
            Residual::Element(s, e) => s.format(e),
            Residual::Tensor(s, t) => t.format(s),
            Residual::Text(t) => t.clone(),
        }
    }

    fn coefficients(&self) -> Vec<&RatF> {
        match self {
            Residual::Element(_, e) => e.iter().map(|(_, c)| c).collect(),
            Residual::Tensor(_, t) => t.terms().map(|(_, _, c)| c).collect(),
            _ => Vec::new(),
        }
    }

    /// Coefficients evaluated at a sample point.
    pub fn numeric(&self, r0: &BigRational, s0: &BigRational) -> Option<String> {
        let cs = self.coefficients();
        if cs.is_empty() {
            return None;
        }
        let vals: Vec<String> = cs
            .iter()
            .map(|c| match c.eval(r0, s0) {
                Ok(v) => v.to_string(),
                Err(_) => "pole".into(),
            })
            .collect();
        Some(format!("[{}]", vals.join(", ")))
    }
}

/// Collects records for one suite.
pub struct Recorder<'c> {
    pub config: &'c Config,
    sample: Option<(BigRational, BigRational)>,
    pub records: Vec<CheckRecord>,
}

impl<'c> Recorder<'c> {
    pub fn new(config: &'c Config) -> Result<Self> {
        Ok(Recorder { config, sample: config.sample()?, records: Vec::new() })
    }

    pub fn push(&mut self, id: &str, anchor: &str, status: Status, residual: Residual<'_>, note: impl Into<String>) {
        let numeric = self.sample.as_ref().and_then(|(r, s)| residual.numeric(r, s));
        self.records.push(CheckRecord {
            id: id.into(),
            paper_anchor: anchor.into(),
            status,
            residual: residual.render(),
            note: note.into(),
            numeric_residual: numeric,
        });
    }

    /// `pass` when `ok`, else `fail`.
    pub fn check(&mut self, id: &str, anchor: &str, ok: bool, residual: Residual<'_>, note: impl Into<String>) {
        self.push(id, anchor, if ok { Status::Pass } else { Status::Fail }, residual, note);
    }

    /// A printed value that disagrees with the computed one: `discrepancy` when the
    /// printed value really fails and the corrected one holds, `fail` otherwise.
    pub fn discrepancy(&mut self, id: &str, anchor: &str, printed_fails: bool, corrected_holds: bool, residual: Residual<'_>, note: impl Into<String>) {
        let status = if printed_fails && corrected_holds { Status::Discrepancy } else { Status::Fail };
        self.push(id, anchor, status, residual, note);
    }
}
