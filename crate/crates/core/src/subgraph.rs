//! Exact backtracking search for paths and cycles of prescribed *order*.
//!
//! `P_k` and `C_k` have `k` vertices. A negative answer (`Ok(None)`) is
//! exact: the search space was exhausted. Running out of expansion budget
//! is reported as [`SubgraphError::BudgetExceeded`], never as absence.
//! Candidates are tried in ascending vertex order, so witnesses are
//! deterministic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::graph::{Graph, VertexSet};

/// Default cap on DFS expansions.
pub const DEFAULT_EXPANSION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgraphError {
    #[error("search budget of {budget} expansions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("path order must be at least 1")]
    ZeroOrder,
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("Hamiltonicity needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("endpoint set is empty")]
    EmptyEndpointSet,
    #[error("endpoint set is over {set} vertices but the graph has {graph}")]
    EndpointOrderMismatch { set: usize, graph: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_expansions: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_expansions: DEFAULT_EXPANSION_BUDGET,
        }
    }
}

/// Distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathWitness(pub Vec<usize>);

/// Distinct vertices, consecutive ones adjacent, last adjacent to first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleWitness(pub Vec<usize>);

impl PathWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }
}

/// Restriction on where a path may end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndpointConstraint {
    None,
    /// Both endvertices in the set.
    EndsIn(VertexSet),
    /// Neither endvertex equals the vertex.
    EndsAvoid(usize),
}

impl EndpointConstraint {
    fn allows(&self, u: usize) -> bool {
        match self {
            EndpointConstraint::None => true,
            EndpointConstraint::EndsIn(a) => a.contains(u),
            EndpointConstraint::EndsAvoid(v) => u != *v,
        }
    }

    fn check(&self, g: &Graph) -> Result<(), SubgraphError> {
        match self {
            EndpointConstraint::None => Ok(()),
            EndpointConstraint::EndsIn(a) if a.order() != g.order() => Err(SubgraphError::EndpointOrderMismatch {
                set: a.order(),
                graph: g.order(),
            }),
            EndpointConstraint::EndsIn(a) if a.is_empty() => Err(SubgraphError::EmptyEndpointSet),
            EndpointConstraint::EndsAvoid(v) if *v >= g.order() => Err(SubgraphError::VertexOutOfRange {
                vertex: *v,
                order: g.order(),
            }),
            _ => Ok(()),
        }
    }

    fn end_mask(&self, n: usize) -> Vec<u64> {
        match self {
            EndpointConstraint::None => bits::full(n),
            EndpointConstraint::EndsIn(a) => a.words().to_vec(),
            EndpointConstraint::EndsAvoid(v) => {
                let mut m = bits::full(n);
                bits::clear(&mut m, *v);
                m
            }
        }
    }
}

/// Independent validator for path witnesses.
pub fn is_valid_path(g: &Graph, path: &[usize], order: usize, c: &EndpointConstraint) -> bool {
    if path.len() != order || path.is_empty() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &u in path {
        if u >= g.order() || std::mem::replace(&mut seen[u], true) {
            return false;
        }
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1])) && c.allows(path[0]) && c.allows(path[path.len() - 1])
}

/// Independent validator for cycle witnesses.
pub fn is_valid_cycle(g: &Graph, cycle: &[usize], length: usize) -> bool {
    if cycle.len() != length || length < 3 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &u in cycle {
        if u >= g.order() || std::mem::replace(&mut seen[u], true) {
            return false;
        }
    }
    (0..length).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % length]))
}

struct Dfs<'a> {
    g: &'a Graph,
    target: usize,
    path: Vec<usize>,
    /// Vertices still available for extension.
    free: Vec<u64>,
    /// Acceptable final vertices.
    ends: Vec<u64>,
    expansions: u64,
    budget: u64,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a Graph, target: usize, free: Vec<u64>, ends: Vec<u64>, budget: SearchBudget) -> Self {
        Self {
            g,
            target,
            path: Vec::with_capacity(target),
            free,
            ends,
            expansions: 0,
            budget: budget.max_expansions,
        }
    }

    /// Can `remaining` more vertices be appended after `cur`, finishing in `ends`?
    /// Counts vertices reachable from `cur` through free vertices.
    fn feasible(&self, cur: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return bits::test(&self.ends, cur);
        }
        let w = self.free.len();
        let mut reached = vec![0u64; w];
        let mut frontier: Vec<u64> = self.g.row(cur).iter().zip(&self.free).map(|(a, b)| a & b).collect();
        loop {
            let mut grew = false;
            for i in 0..w {
                let new = frontier[i] & !reached[i];
                if new != 0 {
                    reached[i] |= new;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
            let mut next = vec![0u64; w];
            for u in bits::ones(&frontier) {
                for (i, r) in self.g.row(u).iter().enumerate() {
                    next[i] |= r & self.free[i];
                }
            }
            for i in 0..w {
                next[i] &= !reached[i];
            }
            frontier = next;
        }
        bits::count(&reached) >= remaining && reached.iter().zip(&self.ends).any(|(r, e)| r & e != 0)
    }

    fn extend(&mut self, cur: usize) -> Result<bool, SubgraphError> {
        if self.path.len() == self.target {
            return Ok(bits::test(&self.ends, cur));
        }
        let candidates: Vec<usize> = bits::ones(self.g.row(cur)).filter(|&v| bits::test(&self.free, v)).collect();
        for v in candidates {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(SubgraphError::BudgetExceeded { budget: self.budget });
            }
            bits::clear(&mut self.free, v);
            self.path.push(v);
            let remaining = self.target - self.path.len();
            if self.feasible(v, remaining) && self.extend(v)? {
                return Ok(true);
            }
            self.path.pop();
            bits::set(&mut self.free, v);
        }
        Ok(false)
    }

    fn run_from(&mut self, start: usize) -> Result<bool, SubgraphError> {
        bits::clear(&mut self.free, start);
        self.path.clear();
        self.path.push(start);
        let found = self.feasible(start, self.target - 1) && self.extend(start)?;
        if !found {
            bits::set(&mut self.free, start);
        }
        Ok(found)
    }
}

/// Path on exactly `order` vertices whose endvertices satisfy `c`.
pub fn find_constrained_path(
    g: &Graph,
    order: usize,
    c: &EndpointConstraint,
) -> Result<Option<PathWitness>, SubgraphError> {
    find_constrained_path_with_budget(g, order, c, SearchBudget::default())
}

pub fn find_constrained_path_with_budget(
    g: &Graph,
    order: usize,
    c: &EndpointConstraint,
    budget: SearchBudget,
) -> Result<Option<PathWitness>, SubgraphError> {
    if order == 0 {
        return Err(SubgraphError::ZeroOrder);
    }
    c.check(g)?;
    let n = g.order();
    if order > n {
        return Ok(None);
    }
    let ends = c.end_mask(n);
    let starts: Vec<usize> = bits::ones(&ends).collect();
    let mut dfs = Dfs::new(g, order, bits::full(n), ends, budget);
    for s in starts {
        if dfs.run_from(s)? {
            return Ok(Some(PathWitness(dfs.path)));
        }
    }
    Ok(None)
}

/// Path on exactly `order` vertices from `from` to `to`. With `order ≥ 3`
/// this is a cycle of length `order` through the pair `{from, to}` once that
/// pair is joined.
pub fn find_path_between(
    g: &Graph,
    from: usize,
    to: usize,
    order: usize,
    budget: SearchBudget,
) -> Result<Option<PathWitness>, SubgraphError> {
    let n = g.order();
    for x in [from, to] {
        if x >= n {
            return Err(SubgraphError::VertexOutOfRange { vertex: x, order: n });
        }
    }
    if order == 0 {
        return Err(SubgraphError::ZeroOrder);
    }
    if order > n || (order == 1) != (from == to) {
        return Ok(None);
    }
    let mut ends = vec![0u64; bits::words_for(n)];
    bits::set(&mut ends, to);
    let mut dfs = Dfs::new(g, order, bits::full(n), ends, budget);
    Ok(dfs.run_from(from)?.then(|| PathWitness(dfs.path)))
}

/// Cycle of length exactly `l`.
pub fn find_cycle_of_length(g: &Graph, l: usize) -> Result<Option<CycleWitness>, SubgraphError> {
    find_cycle_of_length_with_budget(g, l, SearchBudget::default())
}

pub fn find_cycle_of_length_with_budget(
    g: &Graph,
    l: usize,
    budget: SearchBudget,
) -> Result<Option<CycleWitness>, SubgraphError> {
    if l < 3 {
        return Err(SubgraphError::CycleTooShort(l));
    }
    let n = g.order();
    if l > n {
        return Ok(None);
    }
    let mut spent = 0u64;
    // The cycle's smallest vertex is `s`; only larger vertices may follow it.
    for s in 0..=n - l {
        if g.degree(s) < 2 {
            continue;
        }
        let mut free = bits::full(n);
        for u in 0..=s {
            bits::clear(&mut free, u);
        }
        let ends: Vec<u64> = g.row(s).iter().zip(&free).map(|(a, b)| a & b).collect();
        let remaining = SearchBudget {
            max_expansions: budget.max_expansions - spent,
        };
        let mut dfs = Dfs::new(g, l, free, ends, remaining);
        dfs.path.push(s);
        let found = match dfs.extend(s) {
            Ok(found) => found,
            Err(SubgraphError::BudgetExceeded { .. }) => {
                return Err(SubgraphError::BudgetExceeded {
                    budget: budget.max_expansions,
                })
            }
            Err(e) => return Err(e),
        };
        if found {
            return Ok(Some(CycleWitness(dfs.path)));
        }
        spent += dfs.expansions;
    }
    Ok(None)
}

/// Hamiltonian cycle, if any.
pub fn is_hamiltonian(g: &Graph) -> Result<Option<CycleWitness>, SubgraphError> {
    if g.order() < 3 {
        return Err(SubgraphError::TooFewVertices(g.order()));
    }
    find_cycle_of_length(g, g.order())
}

/// A cycle of some length `l > k` (`l ≥ 3`), trying lengths in increasing order.
pub fn has_cycle_longer_than(g: &Graph, k: usize) -> Result<Option<CycleWitness>, SubgraphError> {
    for l in (k + 1).max(3)..=g.order() {
        if let Some(c) = find_cycle_of_length(g, l)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, kite_pendant, s_nk, star};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).unwrap()
    }

    #[test]
    fn path_examples() {
        let none = EndpointConstraint::None;
        let p = find_constrained_path(&cycle(5).unwrap(), 5, &none).unwrap().unwrap();
        assert!(is_valid_path(&cycle(5).unwrap(), p.vertices(), 5, &none));
        assert!(find_constrained_path(&star(4).unwrap(), 4, &none).unwrap().is_none());

        let g = s_nk(10, 2).unwrap();
        let p = find_constrained_path(&g, 5, &none).unwrap().unwrap();
        assert!(is_valid_path(&g, p.vertices(), 5, &none));

        // K_4 plus pendant 4 on vertex 0: every P_5 ends at the pendant.
        let kite = kite_pendant(2).unwrap();
        assert!(find_constrained_path(&kite, 5, &EndpointConstraint::EndsAvoid(4)).unwrap().is_none());
        assert!(find_constrained_path(&kite, 5, &none).unwrap().is_some());
    }

    #[test]
    fn ends_in_example() {
        let tri = complete(3).unwrap();
        let a = VertexSet::from_members(3, [0, 1]).unwrap();
        let p = find_constrained_path(&tri, 3, &EndpointConstraint::EndsIn(a)).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 2, 1]);
    }

    #[test]
    fn cycle_examples() {
        assert!(find_cycle_of_length(&complete(4).unwrap(), 4).unwrap().is_some());
        assert!(find_cycle_of_length(&s_nk(10, 2).unwrap(), 5).unwrap().is_none());
        let p = petersen();
        assert!(find_cycle_of_length(&p, 3).unwrap().is_none());
        assert!(find_cycle_of_length(&p, 4).unwrap().is_none());
        let c5 = find_cycle_of_length(&p, 5).unwrap().unwrap();
        assert!(is_valid_cycle(&p, c5.vertices(), 5));
        // Petersen is famously non-Hamiltonian.
        assert!(is_hamiltonian(&p).unwrap().is_none());
    }

    #[test]
    fn hamiltonian_examples() {
        assert!(is_hamiltonian(&cycle(6).unwrap()).unwrap().is_some());
        assert!(is_hamiltonian(&star(5).unwrap()).unwrap().is_none());
        assert_eq!(is_hamiltonian(&complete(2).unwrap()), Err(SubgraphError::TooFewVertices(2)));
    }

    #[test]
    fn argument_errors() {
        let g = complete(3).unwrap();
        assert_eq!(find_cycle_of_length(&g, 2), Err(SubgraphError::CycleTooShort(2)));
        assert_eq!(find_constrained_path(&g, 0, &EndpointConstraint::None), Err(SubgraphError::ZeroOrder));
        assert_eq!(
            find_constrained_path(&g, 2, &EndpointConstraint::EndsIn(VertexSet::empty(3))),
            Err(SubgraphError::EmptyEndpointSet)
        );
        assert!(matches!(
            find_constrained_path(&g, 2, &EndpointConstraint::EndsAvoid(7)),
            Err(SubgraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn budget_is_distinct_from_absence() {
        // Long paths in S_{12,3} do not exist, but proving it takes work.
        let g = s_nk(12, 3).unwrap();
        let tiny = SearchBudget { max_expansions: 10 };
        assert!(matches!(
            find_cycle_of_length_with_budget(&g, 8, tiny),
            Err(SubgraphError::BudgetExceeded { .. })
        ));
        assert!(find_cycle_of_length(&g, 8).unwrap().is_none());
    }

    #[test]
    fn order_one_paths() {
        let g = Graph::edgeless(3).unwrap();
        let p = find_constrained_path(&g, 1, &EndpointConstraint::EndsAvoid(0)).unwrap().unwrap();
        assert_eq!(p.vertices(), &[1]);
        assert!(find_constrained_path(&g, 2, &EndpointConstraint::None).unwrap().is_none());
    }

    #[test]
    fn path_between_closes_cycles() {
        let g = cycle(6).unwrap().with_edge_toggled(0, 5).unwrap();
        // Path 0-1-2-3-4-5 of order 6 from 0 to 5: adding {0,5} back gives C_6.
        let p = find_path_between(&g, 0, 5, 6, SearchBudget::default()).unwrap().unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4, 5]);
        assert!(find_path_between(&g, 0, 5, 5, SearchBudget::default()).unwrap().is_none());
    }
}
