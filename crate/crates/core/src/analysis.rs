//! The full pipeline from a representation to its invariants, and the flat
//! `key = value` / JSON report.

use std::fmt::Write as _;

use serde_json::{Map, Value as Json};
use thiserror::Error;

use crate::algebra::{Field, ProjPoint};
use crate::curves::{classify_singularities, rank_profile, CurveError, RankProfile, SingClassification};
use crate::detrep::{DerivedEquations, SymDetRep};
use crate::fourfold::{couples_and_intersections, singular_locus_x, Couples, FourfoldError, SingularLocusX};
use crate::lattice::{ns2_gram, Ns2Report};

/// A mathematical rejection (the input violates a standing hypothesis) or an
/// internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<CurveError> for AnalysisError {
    fn from(e: CurveError) -> Self {
        let why = match &e {
            CurveError::NonReduced => "the discriminant sextic must be reduced, but it has a repeated component".to_string(),
            CurveError::NotNodal { .. } => format!("the discriminant sextic must be nodal: {e}"),
            _ => e.to_string(),
        };
        AnalysisError::Rejected(why)
    }
}

impl From<FourfoldError> for AnalysisError {
    fn from(e: FourfoldError) -> Self {
        match e {
            FourfoldError::Inconsistent(msg) => AnalysisError::Internal(msg),
            FourfoldError::Curve(c) => c.into(),
            other => AnalysisError::Rejected(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub field: Field,
    pub derived: DerivedEquations,
    pub classification: SingClassification,
    pub sing_x: SingularLocusX,
    pub couples: Couples,
    pub ns2: Option<Ns2Report>,
    /// Only over finite fields.
    pub rank_profile: Option<RankProfile>,
    /// Hypotheses that fail although a report could still be produced.
    pub diagnostics: Vec<String>,
}

impl AnalysisReport {
    /// `Some(true)` only when `Sing(X)` is provably empty.
    pub fn smooth(&self) -> Option<bool> {
        if !self.sing_x.is_empty() {
            Some(false)
        } else if self.sing_x.complete {
            Some(true)
        } else {
            None
        }
    }

    pub fn bounds_ok(&self) -> bool {
        self.sing_x.bounds_ok()
    }
}

pub fn analyze(rep: &SymDetRep) -> Result<AnalysisReport, AnalysisError> {
    let derived = rep.derived();
    let classification = classify_singularities(rep)?;
    let sing_x = singular_locus_x(rep, &classification)?;
    let couples = couples_and_intersections(rep, &classification.s_theta())?;
    let m = couples.pairs.len();
    let ns2 = (m >= 1).then(|| ns2_gram(m).expect("m ≥ 1"));
    let rank_profile = rep.field().is_finite().then(|| rank_profile(rep));

    let mut diagnostics = Vec::new();
    if sing_x.base.net_degenerate {
        diagnostics.push(
            "the conics Q_p ∩ P span only a pencil (the generators G(e1), G(e2), G(e3) are dependent), \
             so the base locus is not cut out by a net"
                .to_string(),
        );
    }
    if !sing_x.base.within_bound() {
        diagnostics.push(format!(
            "the base locus has {} points; a valid associated pair has at most 3, not on a line",
            sing_x.base.points.len()
        ));
    }
    if !sing_x.zero_dimensional {
        diagnostics.push("Sing(X) contains the singular line of a rank-2 fiber".to_string());
    }
    if !sing_x.all_double {
        diagnostics.push("a singular point of X is not a double point".to_string());
    }
    if let Some(p) = &rank_profile {
        if !p.is_stratified() {
            diagnostics.push(format!("fiber ranks are not stratified by the curve: {p:?}"));
        }
    }
    if !(couples.within_are_lines() && couples.cross_are_points() && couples.no_plane_is_p()) {
        diagnostics.push("the couples of planes do not meet as expected".to_string());
    }
    Ok(AnalysisReport {
        field: rep.field(),
        derived,
        classification,
        sing_x,
        couples,
        ns2,
        rank_profile,
        diagnostics,
    })
}

/// A report value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    BigInt(String),
    Bool(bool),
    Text(String),
    List(Vec<String>),
    Unknown,
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::BigInt(s) | Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
            Value::List(v) => format!("[{}]", v.join(", ")),
            Value::Unknown => "unknown".into(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Int(n) => Json::from(*n),
            Value::BigInt(s) | Value::Text(s) => Json::from(s.clone()),
            Value::Bool(b) => Json::from(*b),
            Value::List(v) => Json::from(v.clone()),
            Value::Unknown => Json::Null,
        }
    }
}

/// Ordered `(key, value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flat(pub Vec<(String, Value)>);

impl Flat {
    pub fn push(&mut self, key: &str, v: Value) {
        self.0.push((key.to_string(), v));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.0 {
            writeln!(s, "{k} = {}", v.render()).unwrap();
        }
        s
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Json> = self.0.iter().map(|(k, v)| (k.clone(), v.json())).collect();
        serde_json::to_string_pretty(&Json::Object(map)).unwrap() + "\n"
    }
}

fn points(v: &[ProjPoint]) -> Value {
    let mut names: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    names.sort();
    Value::List(names)
}

fn count(v: usize) -> Value {
    Value::Int(v as i64)
}

impl AnalysisReport {
    pub fn flat(&self) -> Flat {
        let c = &self.classification;
        let x = &self.sing_x;
        let mut f = Flat::default();
        f.push("field", Value::Text(self.field.to_string()));
        f.push("sextic", Value::Text(self.derived.sextic.to_string()));
        f.push("d_cubic", Value::Text(self.derived.d_cubic.to_string()));
        f.push("fourfold", Value::Text(self.derived.fourfold.to_string()));
        f.push("complete", Value::Bool(x.complete));
        f.push("sing_c_count", count(c.points.len()));
        f.push("sing_c", points(&c.sing_c()));
        f.push("s_theta_count", count(c.s_theta().len()));
        f.push("s_theta", points(&c.s_theta()));
        f.push("s_theta_tilde_count", count(c.s_theta_tilde().len()));
        f.push("s_theta_tilde", points(&c.s_theta_tilde()));
        f.push("s_c_count", count(c.s_c().len()));
        f.push("s_c", points(&c.s_c()));
        if let Some(ic) = &c.i_c_fq {
            f.push("i_c_count", count(ic.len()));
        }
        f.push("b_count", count(x.base.points.len()));
        f.push("b_points", points(&x.base.points));
        f.push("net_degenerate", Value::Bool(x.base.net_degenerate));
        f.push("sing_x_count", count(x.len()));
        f.push("sing_x", points(&x.points()));
        f.push("all_double", Value::Bool(x.all_double));
        f.push("zero_dimensional", Value::Bool(x.zero_dimensional));
        f.push("bounds_ok", Value::Bool(self.bounds_ok()));
        f.push(
            "smooth",
            match self.smooth() {
                Some(b) => Value::Bool(b),
                None => Value::Unknown,
            },
        );
        let cp = &self.couples;
        f.push("couples", count(cp.pairs.len()));
        f.push(
            "couple_fields",
            Value::List(
                cp.pairs
                    .iter()
                    .map(|p| match &p.d {
                        None => "base".to_string(),
                        Some(d) => format!("sqrt({d})"),
                    })
                    .collect(),
            ),
        );
        f.push("couples_meet_in_lines", Value::Bool(cp.within_are_lines()));
        f.push("cross_planes_meet_in_points", Value::Bool(cp.cross_are_points()));
        f.push("no_plane_is_p", Value::Bool(cp.no_plane_is_p()));
        match &self.ns2 {
            Some(n) => {
                f.push("ns2_m", count(n.m));
                f.push("ns2_class_count", count(n.class_count));
                f.push("ns2_det", Value::BigInt(n.det.to_string()));
                f.push("ns2_rank", count(n.rank));
                f.push("ns2_rank_lower_bound", count(n.rank_lower_bound));
            }
            None => f.push("ns2_m", count(0)),
        }
        if let Some(p) = &self.rank_profile {
            f.push("rank_stratified", Value::Bool(p.is_stratified()));
        }
        f.push("diagnostics", Value::List(self.diagnostics.clone()));
        f
    }
}
