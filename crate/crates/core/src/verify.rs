//! Per-instance checkers for each bound, lemma and theorem, and exhaustive
//! suites over enumerated graphs.
//!
//! Every checker evaluates the hypothesis first. A false hypothesis yields
//! [`Status::PreconditionUnmet`], never `Holds`. Spectral thresholds go
//! through [`certified_compare`] and may come back
//! [`Status::Indeterminate`]. Equality cases that come with a structural
//! characterisation are matched component by component (canonical forms up
//! to order 10, exact direct predicates above that); an equality without
//! the structure is reported as `Violated`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    egc_twice, egp_twice, kopylov_i_edges, kopylov_ii_edges, ore_threshold, prop1_sandwich,
};
use crate::constructions::{self, ConstructionError};
use crate::enumeration::{
    canonical_form, canonical_labeling, enumerate_up_to, write_graph6, CanonError, MAX_CANONICAL_ORDER,
    MAX_ENUMERATION_ORDER,
};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::spectral::{certified_compare, q_index, SpectralError, SpectralResult, Verdict};
use crate::subgraph::{
    find_constrained_path, find_cycle_of_length, has_cycle_longer_than, is_hamiltonian, CycleWitness,
    EndpointConstraint, PathWitness, SubgraphError,
};

/// Eigensolver tolerance used by every spectral check.
pub const SPECTRAL_TOL: f64 = 1e-11;
/// Two spectral quantities closer than this are treated as equal.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CheckError {
    #[error("{statement}: missing parameter `{name}`")]
    MissingParameter { statement: Statement, name: &'static str },
    #[error("{statement}: {reason}")]
    Malformed { statement: Statement, reason: String },
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("{0} is not checked per graph")]
    NotPerGraph(Statement),
    #[error("suite needs n_max <= {MAX_ENUMERATION_ORDER} or a corpus, got n_max = {0}")]
    SuiteRange(usize),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Subgraph(#[from] SubgraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Canon(#[from] CanonError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Statement {
    #[serde(rename = "egp")]
    Egp,
    #[serde(rename = "egc")]
    Egc,
    #[serde(rename = "kopylov_i")]
    KopylovI,
    #[serde(rename = "kopylov_ii")]
    KopylovII,
    #[serde(rename = "ore")]
    Ore,
    #[serde(rename = "ni")]
    Ni,
    #[serde(rename = "lemma1")]
    Lemma1,
    #[serde(rename = "lemma2")]
    Lemma2,
    #[serde(rename = "lemma3")]
    Lemma3,
    #[serde(rename = "cor1")]
    Cor1,
    #[serde(rename = "cor2")]
    Cor2,
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem1_corollary")]
    Theorem1Corollary,
    #[serde(rename = "theorem1_probe")]
    Theorem1Probe,
    #[serde(rename = "prop1")]
    Prop1,
}

impl Statement {
    pub const ALL: [Statement; 15] = [
        Statement::Egp,
        Statement::Egc,
        Statement::KopylovI,
        Statement::KopylovII,
        Statement::Ore,
        Statement::Ni,
        Statement::Lemma1,
        Statement::Lemma2,
        Statement::Lemma3,
        Statement::Cor1,
        Statement::Cor2,
        Statement::Theorem1,
        Statement::Theorem1Corollary,
        Statement::Theorem1Probe,
        Statement::Prop1,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Statement::Egp => "egp",
            Statement::Egc => "egc",
            Statement::KopylovI => "kopylov_i",
            Statement::KopylovII => "kopylov_ii",
            Statement::Ore => "ore",
            Statement::Ni => "ni",
            Statement::Lemma1 => "lemma1",
            Statement::Lemma2 => "lemma2",
            Statement::Lemma3 => "lemma3",
            Statement::Cor1 => "cor1",
            Statement::Cor2 => "cor2",
            Statement::Theorem1 => "theorem1",
            Statement::Theorem1Corollary => "theorem1_corollary",
            Statement::Theorem1Probe => "theorem1_probe",
            Statement::Prop1 => "prop1",
        }
    }

    /// Statements that take a single graph (everything but the probes).
    pub fn is_per_graph(self) -> bool {
        !matches!(self, Statement::Theorem1Probe | Statement::Prop1)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Statement {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|st| st.tag() == s)
            .ok_or_else(|| CheckError::UnknownStatement(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    EqualityCase,
    Violated,
    PreconditionUnmet,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Path(PathWitness),
    Cycle(CycleWitness),
    Vertices(VertexSet),
}

/// Verdict on one statement instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckOutcome {
    pub statement: Statement,
    pub status: Status,
    /// Left-hand side of the inequality that decided the status.
    pub lhs: f64,
    pub rhs: f64,
    pub witness: Option<Witness>,
    pub note: String,
}

impl CheckOutcome {
    fn new(statement: Statement, status: Status, lhs: f64, rhs: f64) -> Self {
        Self {
            statement,
            status,
            lhs,
            rhs,
            witness: None,
            note: String::new(),
        }
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }
}

/// The host graph `H` of Lemma 3 together with its distinguished vertex and
/// the vertices of `F` joined to it.
#[derive(Debug, Clone, PartialEq)]
pub struct Lemma3Instance {
    pub host: Graph,
    /// `w`, as a vertex of `host`.
    pub hub: usize,
    /// Vertices of `F` joined to `w`; a set over `F`'s vertex range.
    pub attachment: VertexSet,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CheckParams {
    pub k: Option<usize>,
    /// `v` for lemma2, `w` for cor2.
    pub vertex: Option<usize>,
    /// The side `A` of the partition for ni; `B` is its complement.
    pub part_a: Option<VertexSet>,
    pub lemma3: Option<Lemma3Instance>,
}

impl CheckParams {
    pub fn with_k(k: usize) -> Self {
        Self {
            k: Some(k),
            ..Self::default()
        }
    }

    pub fn vertex(mut self, v: usize) -> Self {
        self.vertex = Some(v);
        self
    }

    pub fn part_a(mut self, a: VertexSet) -> Self {
        self.part_a = Some(a);
        self
    }

    pub fn lemma3(mut self, inst: Lemma3Instance) -> Self {
        self.lemma3 = Some(inst);
        self
    }

    fn k(&self, statement: Statement) -> Result<usize, CheckError> {
        self.k.ok_or(CheckError::MissingParameter { statement, name: "k" })
    }

    fn vertex_in(&self, statement: Statement, g: &Graph) -> Result<usize, CheckError> {
        let v = self
            .vertex
            .ok_or(CheckError::MissingParameter { statement, name: "vertex" })?;
        if v >= g.order() {
            return Err(CheckError::Malformed {
                statement,
                reason: format!("vertex {v} out of range for order {}", g.order()),
            });
        }
        Ok(v)
    }
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn is_complete(g: &Graph) -> bool {
    g.size() == binom2(g.order())
}

/// Exact isomorphism test against a named family: canonical forms when
/// small enough, otherwise the family's direct characterisation.
fn matches_family(component: &Graph, reference: &Graph, direct: impl Fn(&Graph) -> bool) -> Result<bool, CheckError> {
    if component.order() != reference.order() || component.size() != reference.size() {
        return Ok(false);
    }
    if component.order() <= MAX_CANONICAL_ORDER {
        Ok(canonical_form(component)? == canonical_form(reference)?)
    } else {
        Ok(direct(component))
    }
}

fn component_graphs(g: &Graph) -> Vec<(VertexSet, Graph)> {
    g.components()
        .into_iter()
        .map(|c| {
            let sub = g.induced_subgraph(&c).expect("component of g");
            (c, sub)
        })
        .collect()
}

/// Union of disjoint copies of `K_s`.
fn is_union_of_cliques(g: &Graph, s: usize) -> Result<bool, CheckError> {
    let reference = Graph::complete(s)?;
    for (_, comp) in component_graphs(g) {
        if !matches_family(&comp, &reference, is_complete)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Copies of `K_k` sharing one vertex (a single vertex counts as zero copies).
fn is_windmill(g: &Graph, k: usize) -> Result<bool, CheckError> {
    let n = g.order();
    if n == 1 {
        return Ok(true);
    }
    if k < 2 || (n - 1) % (k - 1) != 0 {
        return Ok(false);
    }
    let reference = constructions::windmill(k, (n - 1) / (k - 1))?;
    matches_family(g, &reference, |h| {
        (0..n).any(|hub| {
            h.degree(hub) == n - 1
                && h.without_vertex(hub)
                    .map(|rest| {
                        component_graphs(&rest)
                            .iter()
                            .all(|(_, c)| c.order() == k - 1 && is_complete(c))
                    })
                    .unwrap_or(false)
        })
    })
}

/// Vertex sets of the blocks (maximal 2-connected pieces and bridges).
fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State<'_>, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for v in s.g.neighbors(u).collect::<Vec<_>>() {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                visit(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = s.stack.pop() {
                        block.extend([a, b]);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    s.out.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for u in 0..n {
        if s.disc[u] == 0 {
            visit(&mut s, u, None);
        }
    }
    s.out
}

/// Connected, with every block a `K_k` (a single vertex qualifies).
fn is_clique_tree(g: &Graph, k: usize) -> Result<bool, CheckError> {
    if g.order() == 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    for b in blocks(g) {
        let set = VertexSet::from_members(g.order(), b.iter().copied())?;
        if b.len() != k || g.edges_within(&set)? != binom2(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Several copies of `K_{2k}` plus one `K_{2k}+v` whose pendant is `v`.
fn is_lemma2_exception(g: &Graph, v: usize, k: usize) -> Result<bool, CheckError> {
    if g.degree(v) != 1 {
        return Ok(false);
    }
    let clique = Graph::complete(2 * k)?;
    let kite = constructions::kite_pendant(k)?;
    for (set, comp) in component_graphs(g) {
        let ok = if set.contains(v) {
            matches_family(&comp, &kite, |h| {
                let local_v = set.iter().position(|u| u == v).expect("v in its component");
                h.without_vertex(local_v).map(|rest| is_complete(&rest)).unwrap_or(false)
            })?
        } else {
            matches_family(&comp, &clique, is_complete)?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of testing `q ≤ threshold` with a certified interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SpectralLe {
    Strict,
    Equal,
    Exceeds,
    Indeterminate,
}

fn spectral_le(r: &SpectralResult, threshold: f64) -> SpectralLe {
    let close = (r.q - threshold).abs() <= EQUALITY_TOL;
    match certified_compare(r, threshold).verdict {
        Verdict::Lt => SpectralLe::Strict,
        _ if close => SpectralLe::Equal,
        Verdict::Ge => SpectralLe::Exceeds,
        Verdict::Indeterminate => SpectralLe::Indeterminate,
    }
}

/// Status of the strict claim `q < threshold`.
fn strict_upper_status(r: &SpectralResult, threshold: f64) -> Status {
    match certified_compare(r, threshold).verdict {
        Verdict::Lt => Status::Holds,
        Verdict::Ge => Status::Violated,
        Verdict::Indeterminate => Status::Indeterminate,
    }
}

fn bound_status(ok: bool) -> Status {
    if ok {
        Status::Holds
    } else {
        Status::Violated
    }
}

/// Marks a holding bound without an equality clause as tight when lhs = rhs.
fn tight_or(out: CheckOutcome) -> CheckOutcome {
    if out.status == Status::Holds && out.lhs == out.rhs {
        out.with_note("tight")
    } else {
        out
    }
}

fn unmet(statement: Statement, lhs: f64, rhs: f64, note: impl Into<String>) -> CheckOutcome {
    CheckOutcome::new(statement, Status::PreconditionUnmet, lhs, rhs).with_note(note)
}

/// Evaluates one statement on one graph.
pub fn check_statement(statement: Statement, g: &Graph, params: &CheckParams) -> Result<CheckOutcome, CheckError> {
    match statement {
        Statement::Egp => check_egp(g, params.k(statement)?),
        Statement::Egc => check_egc(g, params.k(statement)?),
        Statement::KopylovI => check_kopylov(statement, g, params.k(statement)?),
        Statement::KopylovII => check_kopylov(statement, g, params.k(statement)?),
        Statement::Ore => check_ore(g),
        Statement::Ni => {
            let a = params
                .part_a
                .as_ref()
                .ok_or(CheckError::MissingParameter { statement, name: "part_a" })?;
            check_ni(g, a, params.k(statement)?)
        }
        Statement::Lemma1 => check_lemma1(g, params.k(statement)?),
        Statement::Lemma2 => check_lemma2(g, params.vertex_in(statement, g)?, params.k(statement)?),
        Statement::Lemma3 => {
            let inst = params
                .lemma3
                .as_ref()
                .ok_or(CheckError::MissingParameter { statement, name: "lemma3" })?;
            check_lemma3(g, inst, params.k(statement)?)
        }
        Statement::Cor1 => check_cor1(g, params.k(statement)?),
        Statement::Cor2 => check_cor2(g, params.vertex_in(statement, g)?, params.k(statement)?),
        Statement::Theorem1 | Statement::Theorem1Corollary => check_theorem1(statement, g, params.k(statement)?),
        Statement::Theorem1Probe | Statement::Prop1 => Err(CheckError::NotPerGraph(statement)),
    }
}

fn check_egp(g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Egp;
    let (n, e) = (g.order(), g.size());
    let rhs = egp_twice(n as u64, k as u64) as f64 / 2.0;
    if k < 1 {
        return Ok(unmet(st, e as f64, rhs, "requires k >= 1"));
    }
    if let Some(p) = find_constrained_path(g, k + 2, &EndpointConstraint::None)? {
        return Ok(unmet(st, e as f64, rhs, format!("contains P_{}", k + 2)).with_witness(Witness::Path(p)));
    }
    let twice = 2 * e as i64;
    let bound = egp_twice(n as u64, k as u64);
    Ok(if twice < bound {
        CheckOutcome::new(st, Status::Holds, e as f64, rhs)
    } else if twice == bound {
        if is_union_of_cliques(g, k + 1)? {
            CheckOutcome::new(st, Status::EqualityCase, e as f64, rhs)
                .with_note(format!("disjoint copies of K_{}", k + 1))
        } else {
            CheckOutcome::new(st, Status::Violated, e as f64, rhs)
                .with_note(format!("equality without the disjoint K_{} structure", k + 1))
        }
    } else {
        CheckOutcome::new(st, Status::Violated, e as f64, rhs)
    })
}

fn check_egc(g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Egc;
    let (n, e) = (g.order(), g.size());
    if k < 2 || n < 1 {
        return Ok(unmet(st, e as f64, 0.0, "requires k >= 2 and n >= 1"));
    }
    let bound = egc_twice(n as u64, k as u64);
    let rhs = bound as f64 / 2.0;
    if let Some(c) = has_cycle_longer_than(g, k)? {
        return Ok(unmet(st, e as f64, rhs, format!("contains C_{}", c.length())).with_witness(Witness::Cycle(c)));
    }
    let twice = 2 * e as i64;
    Ok(if twice < bound {
        CheckOutcome::new(st, Status::Holds, e as f64, rhs)
    } else if twice == bound {
        if is_clique_tree(g, k)? {
            let shape = if is_windmill(g, k)? {
                format!("copies of K_{k} sharing one vertex")
            } else {
                format!("connected, every block K_{k}")
            };
            CheckOutcome::new(st, Status::EqualityCase, e as f64, rhs).with_note(shape)
        } else {
            CheckOutcome::new(st, Status::Violated, e as f64, rhs)
                .with_note(format!("equality without every block being K_{k}"))
        }
    } else {
        CheckOutcome::new(st, Status::Violated, e as f64, rhs)
    })
}

fn check_kopylov(st: Statement, g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let (n, e) = (g.order(), g.size());
    let (min_order, forbidden, bound) = match st {
        Statement::KopylovI => (2 * k + 2, 2 * k + 2, kopylov_i_edges(n as u64, k as u64)),
        _ => (2 * k + 3, 2 * k + 3, kopylov_ii_edges(n as u64, k as u64)),
    };
    let (lhs, rhs) = (e as f64, bound as f64);
    if k < 1 {
        return Ok(unmet(st, lhs, rhs, "requires k >= 1"));
    }
    if !g.is_connected() {
        return Ok(unmet(st, lhs, rhs, "graph is disconnected"));
    }
    if n < min_order {
        return Ok(unmet(st, lhs, rhs, format!("requires n >= {min_order}")));
    }
    if let Some(p) = find_constrained_path(g, forbidden, &EndpointConstraint::None)? {
        return Ok(unmet(st, lhs, rhs, format!("contains P_{forbidden}")).with_witness(Witness::Path(p)));
    }
    Ok(tight_or(CheckOutcome::new(st, bound_status(e as i64 <= bound), lhs, rhs)))
}

fn check_ore(g: &Graph) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Ore;
    let n = g.order();
    let e = g.size() as f64;
    if n < 3 {
        return Ok(unmet(st, e, 0.0, "requires n >= 3"));
    }
    let threshold = ore_threshold(n as u64);
    let rhs = threshold as f64;
    if (g.size() as i64) <= threshold {
        return Ok(unmet(st, e, rhs, "edge count not above C(n-1,2)+1"));
    }
    Ok(match is_hamiltonian(g)? {
        Some(c) => CheckOutcome::new(st, Status::Holds, e, rhs).with_witness(Witness::Cycle(c)),
        None => CheckOutcome::new(st, Status::Violated, e, rhs).with_note("no Hamiltonian cycle"),
    })
}

fn check_ni(g: &Graph, a: &VertexSet, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Ni;
    if a.order() != g.order() {
        return Err(CheckError::Malformed {
            statement: st,
            reason: format!("partition over {} vertices, graph has {}", a.order(), g.order()),
        });
    }
    let b = a.complement();
    let lhs = (2 * g.edges_within(a)? + g.edges_between(a, &b)?) as f64;
    let rhs = ((2 * k).saturating_sub(1) * a.len() + k * b.len()) as f64;
    if k < 1 {
        return Ok(unmet(st, lhs, rhs, "requires k >= 1"));
    }
    if lhs <= rhs {
        return Ok(unmet(st, lhs, rhs, "2e(A)+e(A,B) not above (2k-1)|A|+k|B|"));
    }
    Ok(
        match find_constrained_path(g, 2 * k + 1, &EndpointConstraint::EndsIn(a.clone()))? {
            Some(p) => CheckOutcome::new(st, Status::Holds, lhs, rhs).with_witness(Witness::Path(p)),
            None => CheckOutcome::new(st, Status::Violated, lhs, rhs)
                .with_note(format!("no P_{} with both ends in A", 2 * k + 1)),
        },
    )
}

fn check_lemma1(g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Lemma1;
    if k < 1 {
        return Ok(unmet(st, 0.0, 0.0, "requires k >= 1"));
    }
    if let Some(p) = find_constrained_path(g, 2 * k + 1, &EndpointConstraint::None)? {
        return Ok(unmet(st, 0.0, 0.0, format!("contains P_{}", 2 * k + 1)).with_witness(Witness::Path(p)));
    }
    // The component with the largest e(H) − (k−1)v(H) among those with v(H) ≠ 2k.
    let worst = component_graphs(g)
        .into_iter()
        .filter(|(_, h)| h.order() != 2 * k)
        .max_by_key(|(_, h)| h.size() as i64 - ((k - 1) * h.order()) as i64);
    let Some((set, h)) = worst else {
        return Ok(CheckOutcome::new(st, Status::Holds, 0.0, 0.0).with_note(format!("every component has order {}", 2 * k)));
    };
    let (e, bound) = (h.size(), (k - 1) * h.order());
    Ok(tight_or(CheckOutcome::new(st, bound_status(e <= bound), e as f64, bound as f64))
        .with_witness(Witness::Vertices(set)))
}

fn check_lemma2(g: &Graph, v: usize, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Lemma2;
    let n = g.order();
    let lhs = (2 * g.size() - g.degree(v)) as f64;
    let rhs = ((2 * k).saturating_sub(1) * (n - 1)) as f64;
    if k < 1 {
        return Ok(unmet(st, lhs, rhs, "requires k >= 1"));
    }
    if let Some(p) = find_constrained_path(g, 2 * k + 1, &EndpointConstraint::EndsAvoid(v))? {
        return Ok(
            unmet(st, lhs, rhs, format!("contains P_{} with both ends different from v", 2 * k + 1))
                .with_witness(Witness::Path(p)),
        );
    }
    Ok(if lhs <= rhs {
        tight_or(CheckOutcome::new(st, Status::Holds, lhs, rhs))
    } else if is_lemma2_exception(g, v, k)? {
        CheckOutcome::new(st, Status::Holds, lhs, rhs)
            .with_note(format!("exceptional structure: copies of K_{} plus K_{}+v", 2 * k, 2 * k))
    } else {
        CheckOutcome::new(st, Status::Violated, lhs, rhs)
    })
}

/// `F` is given as `g`; its blocks of order `2k` are `[2k·i, 2k·(i+1))`.
fn check_lemma3(f: &Graph, inst: &Lemma3Instance, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Lemma3;
    let m = inst.host.order();
    if inst.attachment.order() != f.order() {
        return Err(CheckError::Malformed {
            statement: st,
            reason: format!("attachment over {} vertices, F has {}", inst.attachment.order(), f.order()),
        });
    }
    if m == 0 || inst.hub >= m {
        return Err(CheckError::Malformed {
            statement: st,
            reason: format!("hub {} not a vertex of H (order {m})", inst.hub),
        });
    }
    if k < 2 {
        return Ok(unmet(st, 0.0, 0.0, "requires k >= 2"));
    }
    let block = 2 * k;
    if f.order() % block != 0 {
        return Ok(unmet(st, 0.0, 0.0, format!("F has order {}, not a multiple of {block}", f.order())));
    }
    if f.edges().any(|(u, v)| u / block != v / block) {
        return Ok(unmet(st, 0.0, 0.0, "F has edges between its blocks"));
    }
    let p = f.order() / block;
    let n = f.order() + m;
    let target = (n + 2 * k - 2) as f64;
    if n < 6 * k + 13 {
        return Ok(unmet(st, n as f64, (6 * k + 13) as f64, "requires n >= 6k+13"));
    }

    let rh = q_index(&inst.host, SPECTRAL_TOL)?;
    let hyp_threshold = (m + 2 * k - 2) as f64 + (6 * p * k) as f64 / (n as f64 + 3.0);
    let hypothesis = spectral_le(&rh, hyp_threshold);
    match hypothesis {
        SpectralLe::Exceeds => {
            return Ok(unmet(st, rh.q, hyp_threshold, "q(H) above m+2k-2+6pk/(n+3)"));
        }
        SpectralLe::Indeterminate => {
            return Ok(CheckOutcome::new(st, Status::Indeterminate, rh.q, hyp_threshold)
                .with_note("hypothesis on q(H) not decidable at solver precision"));
        }
        SpectralLe::Strict | SpectralLe::Equal => {}
    }

    let offset = f.order();
    let edges = f
        .edges()
        .chain(inst.host.edges().map(|(u, v)| (u + offset, v + offset)))
        .chain(inst.attachment.iter().map(|a| (a, offset + inst.hub)));
    let g = Graph::new(n, edges)?;
    let rg = q_index(&g, SPECTRAL_TOL)?;
    let out = match (spectral_le(&rg, target), hypothesis) {
        (SpectralLe::Strict, _) => CheckOutcome::new(st, Status::Holds, rg.q, target),
        (SpectralLe::Equal, SpectralLe::Equal) => CheckOutcome::new(st, Status::EqualityCase, rg.q, target),
        (SpectralLe::Equal, _) => CheckOutcome::new(st, Status::Violated, rg.q, target)
            .with_note("q(G) = n+2k-2 although the hypothesis on q(H) is strict"),
        (SpectralLe::Exceeds, _) => CheckOutcome::new(st, Status::Violated, rg.q, target),
        (SpectralLe::Indeterminate, _) => CheckOutcome::new(st, Status::Indeterminate, rg.q, target),
    };
    Ok(out.with_witness(Witness::Vertices(inst.attachment.clone())))
}

/// `K_1 ∨ (pK_{2k} ∪ K_{2k+1})` up to isomorphism, returning `p`.
fn corollary1_shape(g: &Graph, k: usize) -> Option<usize> {
    let n = g.order();
    if n < 2 * k + 2 || (n - 2) % (2 * k) != 0 {
        return None;
    }
    let p = (n - 2) / (2 * k) - 1;
    let apex = (0..n).find(|&u| {
        g.degree(u) == n - 1 && {
            let rest = g.without_vertex(u).expect("u < n");
            let mut sizes: Vec<usize> = component_graphs(&rest)
                .iter()
                .filter(|(_, c)| is_complete(c))
                .map(|(_, c)| c.order())
                .collect();
            sizes.sort_unstable();
            let mut want = vec![2 * k; p];
            want.push(2 * k + 1);
            sizes == want
        }
    });
    apex.map(|_| p)
}

fn check_cor1(g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Cor1;
    let n = g.order();
    let target = (n + 2 * k - 2) as f64;
    if k < 2 {
        return Ok(unmet(st, 0.0, target, "requires k >= 2"));
    }
    let Some(p) = corollary1_shape(g, k) else {
        return Ok(unmet(st, 0.0, target, format!("graph is not K_1 v (pK_{} u K_{})", 2 * k, 2 * k + 1)));
    };
    if n < 6 * k + 13 {
        return Ok(unmet(st, n as f64, (6 * k + 13) as f64, "requires n >= 6k+13"));
    }
    let r = q_index(g, SPECTRAL_TOL)?;
    Ok(CheckOutcome::new(st, strict_upper_status(&r, target), r.q, target).with_note(format!("p = {p}")))
}

/// Builds `corollary1(k, p)` and checks it.
pub fn check_corollary1(k: usize, p: usize) -> Result<CheckOutcome, CheckError> {
    check_cor1(&constructions::corollary1(k, p)?, k)
}

fn check_cor2(g: &Graph, w: usize, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Cor2;
    let n = g.order();
    let target = (n + 2 * k - 2) as f64;
    if k < 2 {
        return Ok(unmet(st, 0.0, target, "requires k >= 2"));
    }
    if n < 6 * k + 13 {
        return Ok(unmet(st, n as f64, (6 * k + 13) as f64, "requires n >= 6k+13"));
    }
    let rest = g.without_vertex(w)?;
    for (set, c) in component_graphs(&rest) {
        if c.order() != 2 * k && c.size() > (k - 1) * c.order() {
            return Ok(unmet(st, c.size() as f64, ((k - 1) * c.order()) as f64, "a component of G-w is too dense")
                .with_witness(Witness::Vertices(set)));
        }
    }
    let r = q_index(g, SPECTRAL_TOL)?;
    Ok(CheckOutcome::new(st, strict_upper_status(&r, target), r.q, target))
}

fn check_theorem1(st: Statement, g: &Graph, k: usize) -> Result<CheckOutcome, CheckError> {
    let n = g.order();
    let target = (n + 2 * k - 2) as f64;
    if k < 2 {
        return Ok(unmet(st, 0.0, target, "requires k >= 2"));
    }
    if n <= 6 * k * k {
        return Ok(unmet(st, n as f64, (6 * k * k) as f64, "requires n > 6k^2"));
    }
    let r = q_index(g, SPECTRAL_TOL)?;
    match certified_compare(&r, target).verdict {
        Verdict::Lt => return Ok(unmet(st, r.q, target, "q(G) below n+2k-2")),
        Verdict::Indeterminate => {
            return Ok(CheckOutcome::new(st, Status::Indeterminate, r.q, target)
                .with_note("q(G) >= n+2k-2 not decidable at solver precision"))
        }
        Verdict::Ge => {}
    }
    let lengths: Vec<usize> = match st {
        Statement::Theorem1Corollary => (3..=2 * k + 2).collect(),
        _ => vec![2 * k + 1, 2 * k + 2],
    };
    let mut last = None;
    for l in lengths {
        match find_cycle_of_length(g, l)? {
            Some(c) => last = Some(c),
            None => {
                return Ok(CheckOutcome::new(st, Status::Violated, r.q, target).with_note(format!("no C_{l}")));
            }
        }
    }
    let mut out = CheckOutcome::new(st, Status::Holds, r.q, target);
    out.witness = last.map(Witness::Cycle);
    Ok(out)
}

/// Checks that the extremal candidates `S_{n,k}` and `S_{n,k}^+` stay below
/// `n+2k−2`, and that `K_n` (above it) has every cycle `C_3..C_{2k+2}`.
pub fn theorem1_construction_probe(n: usize, k: usize) -> Result<CheckOutcome, CheckError> {
    let st = Statement::Theorem1Probe;
    if k < 2 {
        return Ok(unmet(st, 0.0, 0.0, "requires k >= 2"));
    }
    if n <= 6 * k * k {
        return Ok(unmet(st, n as f64, (6 * k * k) as f64, "requires n > 6k^2"));
    }
    let target = (n + 2 * k - 2) as f64;
    let rs = q_index(&constructions::s_nk(n, k)?, SPECTRAL_TOL)?;
    let rp = q_index(&constructions::s_nk_plus(n, k)?, SPECTRAL_TOL)?;
    let lhs = rs.q.max(rp.q);
    let statuses = [strict_upper_status(&rs, target), strict_upper_status(&rp, target)];
    if statuses.contains(&Status::Violated) {
        return Ok(CheckOutcome::new(st, Status::Violated, lhs, target)
            .with_note(format!("q(S) = {}, q(S+) = {}", rs.q, rp.q)));
    }
    if statuses.contains(&Status::Indeterminate) {
        return Ok(CheckOutcome::new(st, Status::Indeterminate, lhs, target));
    }
    let kn = constructions::complete(n)?;
    let rk = q_index(&kn, SPECTRAL_TOL)?;
    if certified_compare(&rk, target).verdict != Verdict::Ge {
        return Ok(CheckOutcome::new(st, Status::Violated, rk.q, target).with_note("q(K_n) not above n+2k-2"));
    }
    let mut witness = None;
    for l in 3..=2 * k + 2 {
        match find_cycle_of_length(&kn, l)? {
            Some(c) => witness = Some(c),
            None => {
                return Ok(CheckOutcome::new(st, Status::Violated, rk.q, target).with_note(format!("K_n has no C_{l}")));
            }
        }
    }
    let mut out = CheckOutcome::new(st, Status::Holds, lhs, target).with_note(format!(
        "q(S_n,k) = {:.9}, q(S+_n,k) = {:.9}, q(K_n) = {:.9}",
        rs.q, rp.q, rk.q
    ));
    out.witness = witness.map(Witness::Cycle);
    Ok(out)
}

/// Both sides of the sandwich around `q(S_{n,k}) < q(S_{n,k}^+)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Prop1Report {
    pub n: usize,
    pub k: usize,
    pub lower: f64,
    pub q_snk: f64,
    pub q_snk_plus: f64,
    pub upper: f64,
    pub residual_snk: f64,
    pub residual_snk_plus: f64,
    pub status: Status,
    pub note: String,
}

impl Prop1Report {
    pub fn to_outcome(&self) -> CheckOutcome {
        CheckOutcome::new(Statement::Prop1, self.status, self.q_snk_plus, self.upper).with_note(format!(
            "{:.9} < q(S) = {:.9} < q(S+) = {:.9} < {:.9}; {}",
            self.lower, self.q_snk, self.q_snk_plus, self.upper, self.note
        ))
    }

    /// Smallest gap in the chain `lower < q(S) < q(S+) < upper`.
    pub fn min_margin(&self) -> f64 {
        (self.q_snk - self.lower)
            .min(self.q_snk_plus - self.q_snk)
            .min(self.upper - self.q_snk_plus)
    }
}

/// Verifies `lower < q(S_{n,k}) < q(S_{n,k}^+) < upper` with certified intervals.
pub fn prop1_check(n: usize, k: usize) -> Result<Prop1Report, CheckError> {
    let (lower, upper) = prop1_sandwich(n as u64, k as u64);
    let mut report = Prop1Report {
        n,
        k,
        lower,
        q_snk: 0.0,
        q_snk_plus: 0.0,
        upper,
        residual_snk: 0.0,
        residual_snk_plus: 0.0,
        status: Status::PreconditionUnmet,
        note: String::new(),
    };
    if k < 2 || n <= 5 * k * k {
        report.note = "requires k >= 2 and n > 5k^2".into();
        return Ok(report);
    }
    let rs = q_index(&constructions::s_nk(n, k)?, SPECTRAL_TOL)?;
    let rp = q_index(&constructions::s_nk_plus(n, k)?, SPECTRAL_TOL)?;
    report.q_snk = rs.q;
    report.q_snk_plus = rp.q;
    report.residual_snk = rs.residual;
    report.residual_snk_plus = rp.residual;
    let links = [
        (certified_compare(&rs, lower).verdict == Verdict::Ge, rs.q < lower, "lower < q(S)"),
        (
            rs.q + rs.residual < rp.q - rp.residual,
            rp.q + rp.residual < rs.q - rs.residual,
            "q(S) < q(S+)",
        ),
        (certified_compare(&rp, upper).verdict == Verdict::Lt, rp.q > upper, "q(S+) < upper"),
    ];
    report.status = Status::Holds;
    for (certain, reversed, name) in links {
        if !certain {
            if reversed {
                report.status = Status::Violated;
                report.note = format!("{name} fails");
                break;
            }
            report.status = Status::Indeterminate;
            report.note = format!("{name} not decidable at solver precision");
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tally {
    pub instances: u64,
    pub holds: u64,
    pub equality_case: u64,
    pub violated: u64,
    pub precondition_unmet: u64,
    pub indeterminate: u64,
}

impl Tally {
    pub fn record(&mut self, status: Status) {
        self.instances += 1;
        match status {
            Status::Holds => self.holds += 1,
            Status::EqualityCase => self.equality_case += 1,
            Status::Violated => self.violated += 1,
            Status::PreconditionUnmet => self.precondition_unmet += 1,
            Status::Indeterminate => self.indeterminate += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.instances += other.instances;
        self.holds += other.holds;
        self.equality_case += other.equality_case;
        self.violated += other.violated;
        self.precondition_unmet += other.precondition_unmet;
        self.indeterminate += other.indeterminate;
    }

    pub fn is_consistent(&self) -> bool {
        self.holds + self.equality_case + self.violated + self.precondition_unmet + self.indeterminate
            == self.instances
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Violation {
    pub statement: Statement,
    /// graph6 of the canonical labeling (order ≤ 10) or of the input graph.
    pub canonical_graph6: String,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub statements: Vec<Statement>,
    pub graphs: u64,
    pub totals: Tally,
    pub per_statement: BTreeMap<Statement, Tally>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub statements: Vec<Statement>,
    /// Largest enumerated order; ignored when a corpus is supplied.
    pub n_max: usize,
    pub k_values: Vec<usize>,
    pub corpus: Option<Vec<Graph>>,
    pub seed: u64,
    /// Worker threads; `0` uses rayon's default.
    pub jobs: usize,
    /// Orders up to this use every partition for `ni`.
    pub ni_exhaustive_max: usize,
    /// Random partitions per graph for `ni` above `ni_exhaustive_max`.
    pub ni_samples: usize,
}

impl SuiteConfig {
    pub fn new(statements: Vec<Statement>, n_max: usize, k_values: Vec<usize>) -> Self {
        Self {
            statements,
            n_max,
            k_values,
            corpus: None,
            seed: 0,
            jobs: 0,
            ni_exhaustive_max: 6,
            ni_samples: 50,
        }
    }
}

#[derive(Default)]
struct Partial {
    per_statement: BTreeMap<Statement, Tally>,
    violations: Vec<Violation>,
}

fn graph_label(g: &Graph) -> String {
    let g = if g.order() <= MAX_CANONICAL_ORDER {
        canonical_labeling(g).map(|(f, _)| f.to_graph()).unwrap_or_else(|_| g.clone())
    } else {
        g.clone()
    };
    write_graph6(&g)
        .map(|b| String::from_utf8_lossy(&b).into_owned())
        .unwrap_or_else(|_| format!("{g:?}"))
}

/// `(graph index within its order, graph)`; the index seeds `ni` sampling.
fn check_graph(cfg: &SuiteConfig, index: usize, g: &Graph) -> Result<Partial, CheckError> {
    let n = g.order();
    let mut part = Partial::default();
    let record = |st: Statement, params: String, out: CheckOutcome, part: &mut Partial| {
        part.per_statement.entry(st).or_default().record(out.status);
        if out.status == Status::Violated {
            part.violations.push(Violation {
                statement: st,
                canonical_graph6: graph_label(g),
                params,
                lhs: out.lhs,
                rhs: out.rhs,
                note: out.note,
            });
        }
    };
    for &st in &cfg.statements {
        match st {
            Statement::Ore => {
                let out = check_statement(st, g, &CheckParams::default())?;
                record(st, String::new(), out, &mut part);
            }
            Statement::Ni => {
                let subsets: Vec<u64> = if n <= cfg.ni_exhaustive_max {
                    (1..1u64 << n).collect()
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((n as u64) << 48) ^ index as u64);
                    (0..cfg.ni_samples)
                        .map(|_| loop {
                            let a = (0..n).filter(|_| rand::Rng::random_bool(&mut rng, 0.5)).fold(0u64, |m, v| m | 1 << v);
                            if a != 0 {
                                break a;
                            }
                        })
                        .collect()
                };
                for &k in &cfg.k_values {
                    for &mask in &subsets {
                        let a = VertexSet::from_members(n, (0..n).filter(|v| mask >> v & 1 == 1))?;
                        let out = check_statement(st, g, &CheckParams::with_k(k).part_a(a))?;
                        record(st, format!("k={k},A={mask:#b}"), out, &mut part);
                    }
                }
            }
            Statement::Lemma2 | Statement::Cor2 => {
                for &k in &cfg.k_values {
                    for v in 0..n {
                        let out = check_statement(st, g, &CheckParams::with_k(k).vertex(v))?;
                        record(st, format!("k={k},v={v}"), out, &mut part);
                    }
                }
            }
            Statement::Lemma3 => {
                // The enumerated graph plays H with p = 0.
                let f = Graph::edgeless(0)?;
                for &k in &cfg.k_values {
                    for hub in 0..n {
                        let inst = Lemma3Instance {
                            host: g.clone(),
                            hub,
                            attachment: VertexSet::empty(0),
                        };
                        let out = check_statement(st, &f, &CheckParams::with_k(k).lemma3(inst))?;
                        record(st, format!("k={k},w={hub},p=0"), out, &mut part);
                    }
                }
            }
            _ => {
                for &k in &cfg.k_values {
                    let out = check_statement(st, g, &CheckParams::with_k(k))?;
                    record(st, format!("k={k}"), out, &mut part);
                }
            }
        }
    }
    Ok(part)
}

/// Runs every statement on every graph of order `1..=n_max` (or of the
/// corpus) and every admissible parameter choice. Results are merged in
/// canonical order regardless of `jobs`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, CheckError> {
    if let Some(&st) = cfg.statements.iter().find(|s| !s.is_per_graph()) {
        return Err(CheckError::NotPerGraph(st));
    }
    let instances: Vec<(usize, Graph)> = match &cfg.corpus {
        Some(graphs) => graphs.iter().cloned().enumerate().collect(),
        None => {
            if cfg.n_max > MAX_ENUMERATION_ORDER {
                return Err(CheckError::SuiteRange(cfg.n_max));
            }
            enumerate_up_to(cfg.n_max)?
                .into_iter()
                .skip(1)
                .flat_map(|level| level.into_iter().enumerate())
                .collect()
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CheckError::ThreadPool(e.to_string()))?;
    let partials: Vec<Partial> = pool.install(|| {
        instances
            .par_iter()
            .map(|(i, g)| check_graph(cfg, *i, g))
            .collect::<Result<_, _>>()
    })?;
    let mut report = SuiteReport {
        statements: cfg.statements.clone(),
        graphs: instances.len() as u64,
        totals: Tally::default(),
        per_statement: cfg.statements.iter().map(|&s| (s, Tally::default())).collect(),
        violations: Vec::new(),
    };
    for p in partials {
        for (st, t) in &p.per_statement {
            report.per_statement.entry(*st).or_default().merge(t);
            report.totals.merge(t);
        }
        report.violations.extend(p.violations);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, corollary1, cycle, kite_pendant, lemma2_exception, windmill};

    #[test]
    fn egp_equality_on_disjoint_triangles() {
        let g = Graph::disjoint_union(&[complete(3).unwrap(), complete(3).unwrap(), complete(3).unwrap()]).unwrap();
        let out = check_statement(Statement::Egp, &g, &CheckParams::with_k(2)).unwrap();
        assert_eq!(out.status, Status::EqualityCase);
        assert_eq!((out.lhs, out.rhs), (9.0, 9.0));
    }

    #[test]
    fn egc_equality_on_windmills() {
        for (k, c) in [(2, 4), (3, 3), (4, 2), (3, 5)] {
            let g = windmill(k, c).unwrap();
            let out = check_statement(Statement::Egc, &g, &CheckParams::with_k(k)).unwrap();
            assert_eq!(out.status, Status::EqualityCase, "k={k} c={c}");
        }
    }

    #[test]
    fn egc_equality_beyond_windmills() {
        let p4 = crate::constructions::path(4).unwrap();
        let out = check_statement(Statement::Egc, &p4, &CheckParams::with_k(2)).unwrap();
        assert_eq!(out.status, Status::EqualityCase);
        assert_eq!(out.note, "connected, every block K_2");
        let chain = Graph::new(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let out = check_statement(Statement::Egc, &chain, &CheckParams::with_k(3)).unwrap();
        assert_eq!(out.status, Status::EqualityCase);
        assert_eq!(blocks(&chain).len(), 3);
    }

    #[test]
    fn egc_hypothesis_excludes_all_long_cycles() {
        // K_{3,3} has no C_3 but does have C_4 and C_6.
        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let out = check_statement(Statement::Egc, &k33, &CheckParams::with_k(2)).unwrap();
        assert_eq!(out.status, Status::PreconditionUnmet);
    }

    #[test]
    fn lemma1_example() {
        let g = Graph::disjoint_union(&[cycle(4).unwrap(), complete(3).unwrap()]).unwrap();
        let out = check_statement(Statement::Lemma1, &g, &CheckParams::with_k(2)).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!((out.lhs, out.rhs), (3.0, 3.0));
        assert_eq!(out.note, "tight");
    }

    #[test]
    fn lemma2_exceptional_structure() {
        let g = Graph::disjoint_union(&[complete(4).unwrap(), kite_pendant(2).unwrap()]).unwrap();
        let out = check_statement(Statement::Lemma2, &g, &CheckParams::with_k(2).vertex(8)).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!((out.lhs, out.rhs), (25.0, 24.0));
        assert!(out.note.contains("exceptional"));
        for k in 1..=3 {
            for copies in 0..=2 {
                let g = lemma2_exception(k, copies).unwrap();
                let v = g.order() - 1;
                let out = check_statement(Statement::Lemma2, &g, &CheckParams::with_k(k).vertex(v)).unwrap();
                assert!(out.lhs > out.rhs, "k={k} copies={copies}");
                assert_eq!(out.status, Status::Holds, "k={k} copies={copies}");
            }
        }
    }

    #[test]
    fn ni_triangle_example() {
        let g = complete(3).unwrap();
        let a = VertexSet::from_members(3, [0, 1]).unwrap();
        let out = check_statement(Statement::Ni, &g, &CheckParams::with_k(1).part_a(a)).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!((out.lhs, out.rhs), (4.0, 3.0));
        assert_eq!(out.witness, Some(Witness::Path(PathWitness(vec![0, 2, 1]))));
    }

    #[test]
    fn corollary1_instance() {
        let out = check_corollary1(2, 5).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert_eq!(out.rhs, 28.0);
        assert!(out.lhs < 28.0);
        let g = corollary1(2, 5).unwrap().relabeled(&(0..26).rev().collect::<Vec<_>>()).unwrap();
        assert_eq!(check_statement(Statement::Cor1, &g, &CheckParams::with_k(2)).unwrap().status, Status::Holds);
        let small = check_corollary1(2, 1).unwrap();
        assert_eq!(small.status, Status::PreconditionUnmet);
    }

    #[test]
    fn probe_examples() {
        let out = theorem1_construction_probe(25, 2).unwrap();
        assert_eq!(out.status, Status::Holds);
        assert!((out.lhs - 26.851_030).abs() < 0.05);
        assert_eq!(theorem1_construction_probe(26, 2).unwrap().status, Status::Holds);
        let out = theorem1_construction_probe(10, 2).unwrap();
        assert_eq!(out.status, Status::PreconditionUnmet);
        assert_eq!((out.lhs, out.rhs), (10.0, 24.0));
    }

    #[test]
    fn prop1_at_25_2() {
        let r = prop1_check(25, 2).unwrap();
        assert_eq!(r.status, Status::Holds, "{}", r.note);
        assert!((r.q_snk - 26.851_030).abs() < 1e-6);
        assert_eq!(prop1_check(20, 2).unwrap().status, Status::PreconditionUnmet);
    }

    #[test]
    fn missing_parameters_are_errors() {
        let g = complete(3).unwrap();
        assert!(matches!(
            check_statement(Statement::Egp, &g, &CheckParams::default()),
            Err(CheckError::MissingParameter { name: "k", .. })
        ));
        assert!(matches!(
            check_statement(Statement::Lemma2, &g, &CheckParams::with_k(1)),
            Err(CheckError::MissingParameter { name: "vertex", .. })
        ));
        assert!(matches!(
            check_statement(Statement::Prop1, &g, &CheckParams::with_k(1)),
            Err(CheckError::NotPerGraph(_))
        ));
        assert!("lemma9".parse::<Statement>().is_err());
    }

    #[test]
    fn statement_tags_match_serde() {
        for st in Statement::ALL {
            let json = serde_json::to_string(&st).unwrap();
            assert_eq!(json, format!("\"{}\"", st.tag()));
            assert_eq!(st.tag().parse::<Statement>().unwrap(), st);
        }
    }

    #[test]
    fn small_suite_has_no_violations() {
        let cfg = SuiteConfig::new(vec![Statement::Egp, Statement::Egc], 5, vec![1, 2, 3]);
        let report = run_suite(&cfg).unwrap();
        assert_eq!(report.totals.violated, 0, "{:?}", report.violations);
        assert!(report.totals.is_consistent());
        assert_eq!(report.graphs, 1 + 2 + 4 + 11 + 34);
    }
}
