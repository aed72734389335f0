//! Machine-readable verdicts for verification runs.
//!
//! Rationals are written as `"p/q"` strings; every exact field has a
//! sibling `*_decimal` field for reading only. Serialisation is
//! deterministic: fields in declaration order, witnesses by canonical key.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one checked claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub detail: String,
    /// graph6 strings of graphs contradicting the claim.
    pub counterexamples: Vec<String>,
}

impl Verdict {
    pub fn check(claim: impl Into<String>, ok: bool, detail: impl Into<String>, counterexamples: Vec<String>) -> Self {
        Verdict {
            claim: claim.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
            counterexamples,
        }
    }

    pub fn skipped(claim: impl Into<String>, reason: impl Into<String>) -> Self {
        Verdict { claim: claim.into(), status: Status::Skipped, detail: reason.into(), counterexamples: vec![] }
    }
}

/// A graph achieving a recorded value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    /// Hex canonical key.
    pub key: String,
    pub azi: Rational,
    /// Ψ-family membership, where the claim concerns it.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi_member: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub class: String,
    pub n: usize,
    pub class_size: usize,
    pub bound_lower: Option<Rational>,
    pub bound_upper: Option<Rational>,
    pub achieved_min: Option<Rational>,
    pub achieved_max: Option<Rational>,
    pub lower_tight: bool,
    pub upper_tight: bool,
    pub minimizers: Vec<Witness>,
    pub maximizers: Vec<Witness>,
    /// Graphs meeting a per-graph bound with equality.
    pub equality_witnesses: Vec<Witness>,
    pub verdicts: Vec<Verdict>,
    /// Parameters of the run that produced this certificate.
    pub config: BTreeMap<String, String>,
}

impl BoundCertificate {
    pub fn new(class: impl Into<String>, n: usize) -> Self {
        BoundCertificate {
            class: class.into(),
            n,
            class_size: 0,
            bound_lower: None,
            bound_upper: None,
            achieved_min: None,
            achieved_max: None,
            lower_tight: false,
            upper_tight: false,
            minimizers: vec![],
            maximizers: vec![],
            equality_witnesses: vec![],
            verdicts: vec![],
            config: BTreeMap::new(),
        }
    }

    /// PASS when no verdict failed (and, unless allowed, none was skipped).
    pub fn passed(&self, allow_skipped: bool) -> bool {
        self.verdicts.iter().all(|v| match v.status {
            Status::Pass => true,
            Status::Skipped => allow_skipped,
            Status::Fail => false,
        })
    }

    pub fn verdict(&self, claim: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct JsonView<'a> {
    class: &'a str,
    n: usize,
    class_size: usize,
    bound_lower: Option<&'a Rational>,
    bound_lower_decimal: Option<String>,
    bound_upper: Option<&'a Rational>,
    bound_upper_decimal: Option<String>,
    achieved_min: Option<&'a Rational>,
    achieved_min_decimal: Option<String>,
    achieved_max: Option<&'a Rational>,
    achieved_max_decimal: Option<String>,
    lower_tight: bool,
    upper_tight: bool,
    minimizers: Vec<&'a Witness>,
    maximizers: Vec<&'a Witness>,
    equality_witnesses: Vec<&'a Witness>,
    verdicts: &'a [Verdict],
    config: &'a BTreeMap<String, String>,
}

fn dec(r: &Option<Rational>) -> Option<String> {
    r.as_ref().map(Rational::to_decimal_string)
}

fn by_key(ws: &[Witness]) -> Vec<&Witness> {
    let mut v: Vec<&Witness> = ws.iter().collect();
    v.sort_by(|a, b| a.key.cmp(&b.key));
    v
}

pub fn emit_certificate(c: &BoundCertificate, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let view = JsonView {
                class: &c.class,
                n: c.n,
                class_size: c.class_size,
                bound_lower: c.bound_lower.as_ref(),
                bound_lower_decimal: dec(&c.bound_lower),
                bound_upper: c.bound_upper.as_ref(),
                bound_upper_decimal: dec(&c.bound_upper),
                achieved_min: c.achieved_min.as_ref(),
                achieved_min_decimal: dec(&c.achieved_min),
                achieved_max: c.achieved_max.as_ref(),
                achieved_max_decimal: dec(&c.achieved_max),
                lower_tight: c.lower_tight,
                upper_tight: c.upper_tight,
                minimizers: by_key(&c.minimizers),
                maximizers: by_key(&c.maximizers),
                equality_witnesses: by_key(&c.equality_witnesses),
                verdicts: &c.verdicts,
                config: &c.config,
            };
            let mut out = serde_json::to_vec_pretty(&view).expect("certificate serialises");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["class", "n", "class_size", "claim", "status", "bound_lower", "bound_upper", "achieved_min", "achieved_max", "detail", "counterexamples"])
                .expect("in-memory write");
            let s = |r: &Option<Rational>| r.as_ref().map(|x| x.to_string()).unwrap_or_default();
            for v in &c.verdicts {
                w.write_record([
                    c.class.clone(),
                    c.n.to_string(),
                    c.class_size.to_string(),
                    v.claim.clone(),
                    v.status.to_string(),
                    s(&c.bound_lower),
                    s(&c.bound_upper),
                    s(&c.achieved_min),
                    s(&c.achieved_max),
                    v.detail.clone(),
                    v.counterexamples.join(" "),
                ])
                .expect("in-memory write");
            }
            w.into_inner().expect("in-memory flush")
        }
    }
}
