//! Hill climbing on `q(G)` over graphs of fixed order that avoid a set of
//! cycle lengths.
//!
//! A move toggles one vertex pair. Adding `uv` is feasible iff no path of
//! order `l` runs from `u` to `v` for any forbidden `l`. Removing an edge
//! never raises `q`, so only additions are tried. A move is accepted on
//! strict improvement of the power-iteration estimate. When a full pass over the non-edges finds nothing, the climb
//! restarts from a random feasible graph drawn from the same stream, until
//! the move budget is spent.
//!
//! Restart `r` uses `ChaCha8Rng::seed_from_u64(seed + r)`; restarts run in
//! parallel and are merged by `(q, canonical form)` so the result does not
//! depend on `jobs`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::ConstructionSpec;
use crate::enumeration::{canonical_form, write_graph6, MAX_CANONICAL_ORDER};
use crate::graph::Graph;
use crate::spectral::{q_index, SpectralError};
use crate::subgraph::{find_cycle_of_length, find_path_between, SearchBudget, SubgraphError};

/// Eigensolver tolerance during the climb.
pub const CLIMB_TOL: f64 = 1e-8;
/// Eigensolver tolerance for the reported interval.
pub const FINAL_TOL: f64 = 1e-10;
/// Minimum gain for a move to count as an improvement.
pub const IMPROVEMENT_MARGIN: f64 = 1e-9;
/// Restart bests within this of the overall best are reported as ties.
pub const TIE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("search needs n >= 3, got {0}")]
    OrderTooSmall(usize),
    #[error("forbidden cycle lengths must be at least 3, got {0}")]
    ForbiddenTooShort(usize),
    #[error("at least one forbidden cycle length is required")]
    NothingForbidden,
    #[error("budget and restarts must be at least 1")]
    ZeroBudget,
    #[error("seed graph has order {seed}, search order is {n}")]
    SeedOrderMismatch { seed: usize, n: usize },
    #[error("seed graph contains a forbidden C_{0}")]
    SeedInfeasible(usize),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Subgraph(#[from] SubgraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: usize,
    pub forbidden: BTreeSet<usize>,
    /// Candidate moves evaluated per restart.
    pub budget: u64,
    pub restarts: usize,
    pub seed: u64,
    /// Starting point of restart 0.
    pub seed_graph: Option<Graph>,
    /// Worker threads; `0` uses rayon's default.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(n: usize, forbidden: impl IntoIterator<Item = usize>) -> Self {
        Self {
            n,
            forbidden: forbidden.into_iter().collect(),
            budget: 2_000,
            restarts: 8,
            seed: 0,
            seed_graph: None,
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tie {
    pub graph: Graph,
    pub q: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchResult {
    pub n: usize,
    pub forbidden: Vec<usize>,
    pub best: Graph,
    pub q: f64,
    pub q_interval: (f64, f64),
    pub feasible: bool,
    pub seed: u64,
    pub restarts: usize,
    pub accepted_moves: u64,
    /// `s_nk:n=..,k=..` or `s_nk_plus:n=..,k=..` when isomorphic (n ≤ 10).
    pub matched_family: Option<String>,
    /// Other restart bests within [`TIE_TOL`] of `q`, one per isomorphism
    /// class when `n ≤ 10`.
    pub ties: Vec<Tie>,
}

struct Climber<'a> {
    forbidden: &'a BTreeSet<usize>,
    rng: ChaCha8Rng,
    moves: u64,
    budget: u64,
    accepted: u64,
}

impl Climber<'_> {
    fn can_add(&self, g: &Graph, u: usize, v: usize) -> Result<bool, SearchError> {
        for &l in self.forbidden {
            if find_path_between(g, u, v, l, SearchBudget::default())?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn random_feasible(&mut self, n: usize) -> Result<Graph, SearchError> {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        pairs.shuffle(&mut self.rng);
        let mut g = Graph::edgeless(n).expect("n <= MAX_ORDER");
        for (u, v) in pairs {
            if self.rng.random_bool(0.5) && self.can_add(&g, u, v)? {
                g = g.with_edge_toggled(u, v).expect("u != v");
            }
        }
        Ok(g)
    }

    /// Climbs from `g` until no non-edge improves `q` or the budget runs out.
    fn climb(&mut self, mut g: Graph) -> Result<(Graph, f64), SearchError> {
        let n = g.order();
        let mut q = q_index(&g, CLIMB_TOL)?.q;
        loop {
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            if pairs.is_empty() {
                self.moves += 1;
                return Ok((g, q));
            }
            pairs.shuffle(&mut self.rng);
            let mut improved = false;
            for (u, v) in pairs {
                if self.moves >= self.budget {
                    return Ok((g, q));
                }
                self.moves += 1;
                if !self.can_add(&g, u, v)? {
                    continue;
                }
                let h = g.with_edge_toggled(u, v).expect("u != v");
                let qh = q_index(&h, CLIMB_TOL)?.q;
                if qh > q + IMPROVEMENT_MARGIN {
                    g = h;
                    q = qh;
                    self.accepted += 1;
                    improved = true;
                }
            }
            if !improved {
                return Ok((g, q));
            }
        }
    }
}

struct RestartBest {
    graph: Graph,
    q: f64,
    key: Vec<u8>,
    accepted: u64,
}

fn order_key(g: &Graph) -> Vec<u8> {
    if g.order() <= MAX_CANONICAL_ORDER {
        if let Ok(f) = canonical_form(g) {
            return f.as_bytes().to_vec();
        }
    }
    write_graph6(g).unwrap_or_else(|_| format!("{:?}", g.edges().collect::<Vec<_>>()).into_bytes())
}

fn better(a: &RestartBest, b: &RestartBest) -> Ordering {
    a.q.total_cmp(&b.q).then_with(|| b.key.cmp(&a.key))
}

fn run_restart(cfg: &SearchConfig, r: usize) -> Result<RestartBest, SearchError> {
    let mut c = Climber {
        forbidden: &cfg.forbidden,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(r as u64)),
        moves: 0,
        budget: cfg.budget,
        accepted: 0,
    };
    let mut start = match (&cfg.seed_graph, r) {
        (Some(g), 0) => g.clone(),
        _ => c.random_feasible(cfg.n)?,
    };
    let mut best: Option<(Graph, f64)> = None;
    loop {
        let (g, q) = c.climb(start)?;
        if best.as_ref().is_none_or(|(_, bq)| q > *bq) {
            best = Some((g, q));
        }
        if c.moves >= c.budget {
            break;
        }
        start = c.random_feasible(cfg.n)?;
    }
    let (graph, q) = best.expect("at least one climb");
    Ok(RestartBest {
        key: order_key(&graph),
        graph,
        q,
        accepted: c.accepted,
    })
}

fn contains_forbidden(g: &Graph, forbidden: &BTreeSet<usize>) -> Result<Option<usize>, SearchError> {
    for &l in forbidden {
        if l <= g.order() && find_cycle_of_length(g, l)?.is_some() {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

fn matched_family(g: &Graph) -> Option<String> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return None;
    }
    let form = canonical_form(g).ok()?;
    (1..n).find_map(|k| {
        [ConstructionSpec::SNk { n, k }, ConstructionSpec::SNkPlus { n, k }]
            .into_iter()
            .find(|spec| {
                spec.build()
                    .ok()
                    .and_then(|h| canonical_form(&h).ok())
                    .is_some_and(|f| f == form)
            })
            .map(|spec| spec.to_string())
    })
}

/// Maximises `q(G)` over graphs on `cfg.n` vertices with no cycle whose
/// length is in `cfg.forbidden`.
pub fn maximize_q_forbidden_cycles(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    if cfg.n < 3 {
        return Err(SearchError::OrderTooSmall(cfg.n));
    }
    if cfg.forbidden.is_empty() {
        return Err(SearchError::NothingForbidden);
    }
    if let Some(&l) = cfg.forbidden.iter().find(|&&l| l < 3) {
        return Err(SearchError::ForbiddenTooShort(l));
    }
    if cfg.budget == 0 || cfg.restarts == 0 {
        return Err(SearchError::ZeroBudget);
    }
    if let Some(g) = &cfg.seed_graph {
        if g.order() != cfg.n {
            return Err(SearchError::SeedOrderMismatch { seed: g.order(), n: cfg.n });
        }
        if let Some(l) = contains_forbidden(g, &cfg.forbidden)? {
            return Err(SearchError::SeedInfeasible(l));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    let bests: Vec<RestartBest> = pool.install(|| {
        (0..cfg.restarts)
            .into_par_iter()
            .map(|r| run_restart(cfg, r))
            .collect::<Result<_, _>>()
    })?;
    let accepted_moves = bests.iter().map(|b| b.accepted).sum();
    let top = bests.iter().max_by(|a, b| better(a, b)).expect("restarts >= 1");

    let feasible = contains_forbidden(&top.graph, &cfg.forbidden)?.is_none();
    let fin = q_index(&top.graph, FINAL_TOL)?;

    let mut seen = BTreeSet::from([top.key.clone()]);
    let mut others: Vec<&RestartBest> = bests.iter().filter(|b| top.q - b.q <= TIE_TOL).collect();
    others.sort_by(|a, b| better(b, a));
    let ties = others
        .into_iter()
        .filter(|b| seen.insert(b.key.clone()))
        .map(|b| Tie {
            graph: b.graph.clone(),
            q: b.q,
        })
        .collect();

    Ok(SearchResult {
        n: cfg.n,
        forbidden: cfg.forbidden.iter().copied().collect(),
        matched_family: matched_family(&top.graph),
        best: top.graph.clone(),
        q: fin.q,
        q_interval: fin.interval(),
        feasible,
        seed: cfg.seed,
        restarts: cfg.restarts,
        accepted_moves,
        ties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::s_nk;

    #[test]
    fn triangle_free_six_vertices_reaches_bipartite_maximum() {
        let r = maximize_q_forbidden_cycles(&SearchConfig::new(6, [3])).unwrap();
        assert!(r.feasible);
        assert!((r.q - 6.0).abs() < 1e-8, "q = {}", r.q);
        assert!(r.q_interval.0 <= r.q && r.q <= r.q_interval.1);
    }

    #[test]
    fn seeded_run_never_drops_below_the_seed() {
        let mut cfg = SearchConfig::new(10, [5]);
        cfg.seed_graph = Some(s_nk(10, 2).unwrap());
        cfg.budget = 300;
        cfg.restarts = 2;
        let r = maximize_q_forbidden_cycles(&cfg).unwrap();
        assert!(r.feasible);
        assert!(r.q >= 11.656_854_25 - 1e-9, "q = {}", r.q);
    }

    #[test]
    fn deterministic_across_job_counts() {
        let mut a = SearchConfig::new(7, [4]);
        a.budget = 200;
        a.restarts = 4;
        a.jobs = 1;
        let mut b = a.clone();
        b.jobs = 3;
        assert_eq!(maximize_q_forbidden_cycles(&a).unwrap(), maximize_q_forbidden_cycles(&b).unwrap());
    }

    #[test]
    fn rejects_bad_configurations() {
        assert_eq!(maximize_q_forbidden_cycles(&SearchConfig::new(2, [3])), Err(SearchError::OrderTooSmall(2)));
        assert_eq!(
            maximize_q_forbidden_cycles(&SearchConfig::new(5, [2])),
            Err(SearchError::ForbiddenTooShort(2))
        );
        let mut cfg = SearchConfig::new(6, [3]);
        cfg.seed_graph = Some(crate::constructions::complete(6).unwrap());
        assert_eq!(maximize_q_forbidden_cycles(&cfg), Err(SearchError::SeedInfeasible(3)));
    }

    #[test]
    fn terminates_when_the_complete_graph_is_feasible() {
        let mut cfg = SearchConfig::new(5, [7]);
        cfg.budget = 50;
        cfg.restarts = 1;
        let r = maximize_q_forbidden_cycles(&cfg).unwrap();
        assert!((r.q - 8.0).abs() < 1e-8);
    }
}
