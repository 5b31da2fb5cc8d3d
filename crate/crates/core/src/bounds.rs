//! Closed-form formulas and graph-dependent upper bounds on `q(G)`.
//!
//! Edge-count formulas that are integral (Kopylov, Ore) are evaluated in
//! exact integer arithmetic; the half-integral Erdős–Gallai bounds are exposed
//! doubled (`egp_twice`, `egc_twice`) so that checkers compare `2e` against an
//! integer.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound `{0}` is undefined for a graph without edges")]
    NoEdges(BoundName),
    #[error("bound `{name}` needs at least {min} vertices, got {order}")]
    TooFewVertices { name: BoundName, min: usize, order: usize },
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("formula `{formula}` is missing parameter `{name}`")]
    MissingParameter { formula: FormulaId, name: &'static str },
    #[error("formula `{formula}`: {reason}")]
    InvalidParameter { formula: FormulaId, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    Merris,
    Das,
    EdgeDegree,
    ClosedFormSnk,
    KopylovI,
    KopylovIi,
    Egp,
    Egc,
    OreThreshold,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundName::Merris => "merris",
            BoundName::Das => "das",
            BoundName::EdgeDegree => "edge_degree",
            BoundName::ClosedFormSnk => "closed_form_snk",
            BoundName::KopylovI => "kopylov_i",
            BoundName::KopylovIi => "kopylov_ii",
            BoundName::Egp => "egp",
            BoundName::Egc => "egc",
            BoundName::OreThreshold => "ore_threshold",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    UpperBoundOnQ,
    EdgeCountBound,
    SandwichPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundValue {
    pub name: BoundName,
    pub value: f64,
    pub relation: Relation,
}

/// `max_u { d_u + (1/d_u) Σ_{v∈Γ(u)} d_v }` over vertices of positive degree.
pub fn merris_bound(g: &Graph) -> Result<BoundValue, BoundError> {
    let value = (0..g.order())
        .filter(|&u| g.degree(u) > 0)
        .map(|u| {
            let d = g.degree(u) as f64;
            d + g.neighbor_degree_sum(u).expect("vertex in range") as f64 / d
        })
        .max_by(f64::total_cmp)
        .ok_or(BoundError::NoEdges(BoundName::Merris))?;
    Ok(BoundValue {
        name: BoundName::Merris,
        value,
        relation: Relation::UpperBoundOnQ,
    })
}

/// `2m/(n−1) + n − 2`.
pub fn das_bound(g: &Graph) -> Result<BoundValue, BoundError> {
    let n = g.order();
    if n < 2 {
        return Err(BoundError::TooFewVertices {
            name: BoundName::Das,
            min: 2,
            order: n,
        });
    }
    Ok(BoundValue {
        name: BoundName::Das,
        value: 2.0 * g.size() as f64 / (n - 1) as f64 + n as f64 - 2.0,
        relation: Relation::UpperBoundOnQ,
    })
}

/// `max { d_u + d_v : uv ∈ E(G) }`.
pub fn edge_degree_bound(g: &Graph) -> Result<BoundValue, BoundError> {
    let value = g
        .edges()
        .map(|(u, v)| g.degree(u) + g.degree(v))
        .max()
        .ok_or(BoundError::NoEdges(BoundName::EdgeDegree))?;
    Ok(BoundValue {
        name: BoundName::EdgeDegree,
        value: value as f64,
        relation: Relation::UpperBoundOnQ,
    })
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `q(S_{n,k}) = ½(n+2k−2 + √((n+2k−2)² − 8(k²−k)))`.
pub fn closed_form_snk(n: u64, k: u64) -> f64 {
    let (n, k) = (n as f64, k as f64);
    let s = n + 2.0 * k - 2.0;
    0.5 * (s + (s * s - 8.0 * (k * k - k)).sqrt())
}

/// `(n+2k−2 − 2(k²−k)/(n+2k−3), n+2k−2 − 2(k²−k)/(n+2k+2))`.
pub fn prop1_sandwich(n: u64, k: u64) -> (f64, f64) {
    let (n, k) = (n as f64, k as f64);
    let s = n + 2.0 * k - 2.0;
    let c = 2.0 * (k * k - k);
    (s - c / (n + 2.0 * k - 3.0), s - c / (n + 2.0 * k + 2.0))
}

/// Edge bound for connected graphs without `P_{2k+2}`:
/// `max { kn − k(k+1)/2, C(2k,2) + (n−2k) }`.
pub fn kopylov_i_edges(n: u64, k: u64) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (k * n - k * (k + 1) / 2).max(binom2(2 * k) + (n - 2 * k))
}

/// Edge bound for connected graphs without `P_{2k+3}`:
/// `max { kn − k(k+1)/2 + 1, C(2k+1,2) + (n−2k−1) }`.
pub fn kopylov_ii_edges(n: u64, k: u64) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (k * n - k * (k + 1) / 2 + 1).max(binom2(2 * k + 1) + (n - 2 * k - 1))
}

/// `2 · (kn/2)`.
pub fn egp_twice(n: u64, k: u64) -> i64 {
    (k * n) as i64
}

/// `2 · (k(n−1)/2)`.
pub fn egc_twice(n: u64, k: u64) -> i64 {
    k as i64 * (n as i64 - 1)
}

/// `C(n−1, 2) + 1`; more edges than this forces a Hamiltonian cycle.
pub fn ore_threshold(n: u64) -> i64 {
    binom2(n as i64 - 1) + 1
}

/// Stable identifiers of the formula registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    ClosedFormSnk,
    Prop1Sandwich,
    KopylovI,
    KopylovIi,
    Egp,
    Egc,
    OreThreshold,
}

impl FormulaId {
    pub const ALL: [FormulaId; 7] = [
        FormulaId::ClosedFormSnk,
        FormulaId::Prop1Sandwich,
        FormulaId::KopylovI,
        FormulaId::KopylovIi,
        FormulaId::Egp,
        FormulaId::Egc,
        FormulaId::OreThreshold,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FormulaId::ClosedFormSnk => "closed_form_snk",
            FormulaId::Prop1Sandwich => "prop1_sandwich",
            FormulaId::KopylovI => "kopylov_i",
            FormulaId::KopylovIi => "kopylov_ii",
            FormulaId::Egp => "egp",
            FormulaId::Egc => "egc",
            FormulaId::OreThreshold => "ore_threshold",
        }
    }

    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FormulaId::OreThreshold => &["n"],
            _ => &["n", "k"],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FormulaId {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| BoundError::UnknownFormula(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaValue {
    Scalar(f64),
    Pair { lower: f64, upper: f64 },
}

impl FormulaValue {
    pub fn scalar(self) -> Option<f64> {
        match self {
            FormulaValue::Scalar(x) => Some(x),
            FormulaValue::Pair { .. } => None,
        }
    }

    pub fn pair(self) -> Option<(f64, f64)> {
        match self {
            FormulaValue::Pair { lower, upper } => Some((lower, upper)),
            FormulaValue::Scalar(_) => None,
        }
    }
}

/// Evaluates a registry formula with named integer parameters.
pub fn formula_value(id: &str, params: &BTreeMap<String, u64>) -> Result<FormulaValue, BoundError> {
    let formula: FormulaId = id.parse()?;
    let get = |name: &'static str| {
        params
            .get(name)
            .copied()
            .ok_or(BoundError::MissingParameter { formula, name })
    };
    let invalid = |reason: &str| {
        Err(BoundError::InvalidParameter {
            formula,
            reason: reason.to_owned(),
        })
    };
    let n = get("n")?;
    let k = if formula == FormulaId::OreThreshold { 0 } else { get("k")? };
    match formula {
        FormulaId::ClosedFormSnk if !(k >= 1 && n > k) => invalid("requires n > k >= 1"),
        FormulaId::Prop1Sandwich if !(k >= 1 && n >= 2) => invalid("requires k >= 1 and n >= 2"),
        FormulaId::KopylovI | FormulaId::KopylovIi | FormulaId::Egp if k < 1 => invalid("requires k >= 1"),
        FormulaId::Egc if k < 2 => invalid("requires k >= 2"),
        FormulaId::Egc | FormulaId::OreThreshold if n < 1 => invalid("requires n >= 1"),
        _ => Ok(()),
    }?;
    Ok(match formula {
        FormulaId::ClosedFormSnk => FormulaValue::Scalar(closed_form_snk(n, k)),
        FormulaId::Prop1Sandwich => {
            let (lower, upper) = prop1_sandwich(n, k);
            FormulaValue::Pair { lower, upper }
        }
        FormulaId::KopylovI => FormulaValue::Scalar(kopylov_i_edges(n, k) as f64),
        FormulaId::KopylovIi => FormulaValue::Scalar(kopylov_ii_edges(n, k) as f64),
        FormulaId::Egp => FormulaValue::Scalar(egp_twice(n, k) as f64 / 2.0),
        FormulaId::Egc => FormulaValue::Scalar(egc_twice(n, k) as f64 / 2.0),
        FormulaId::OreThreshold => FormulaValue::Scalar(ore_threshold(n) as f64),
    })
}
