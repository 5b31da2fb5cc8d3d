//! Immutable simple undirected graphs over dense vertex indices `0..n`.
//!
//! Adjacency is stored as one packed bit row per vertex. Rows are shared
//! behind `Arc`, so [`Graph::with_edge_toggled`] copies only the two rows it
//! touches and graphs can be handed to parallel checkers freely.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;

/// Largest supported order.
pub const MAX_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex set over {set} vertices used with a graph of order {graph}")]
    OrderMismatch { set: usize, graph: usize },
    #[error("{0} is not a permutation of the vertex range")]
    NotAPermutation(String),
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_ORDER {
        Err(GraphError::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

/// A subset of `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            words: vec![0; bits::words_for(order)],
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            order,
            words: bits::full(order),
        }
    }

    pub fn from_members<I>(order: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(order);
        for v in members {
            if v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            bits::set(&mut set.words, v);
        }
        Ok(set)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && bits::test(&self.words, v)
    }

    /// # Panics
    /// Panics if `v` is outside `0..order`.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range {}", self.order);
        bits::set(&mut self.words, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            bits::clear(&mut self.words, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.words)
    }

    pub fn complement(&self) -> Self {
        let full = bits::full(self.order);
        Self {
            order: self.order,
            words: self.words.iter().zip(&full).map(|(w, f)| !w & f).collect(),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexSetRecord {
    order: usize,
    members: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VertexSetRecord {
            order: self.order,
            members: self.iter().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = VertexSetRecord::deserialize(d)?;
        check_order(rec.order).map_err(serde::de::Error::custom)?;
        VertexSet::from_members(rec.order, rec.members).map_err(serde::de::Error::custom)
    }
}

/// Simple undirected graph. Equality is labeled equality, not isomorphism.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<Arc<[u64]>>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let w = bits::words_for(n);
        let mut rows = vec![vec![0u64; w]; n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            bits::set(&mut rows[u], v);
            bits::set(&mut rows[v], u);
        }
        Ok(Self::from_rows(n, rows))
    }

    pub(crate) fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Self {
        let degrees: Vec<usize> = rows.iter().map(|r| bits::count(r)).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        Self {
            n,
            rows: rows.into_iter().map(Arc::from).collect(),
            degrees,
            m,
        }
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Self::from_rows(n, vec![vec![0; bits::words_for(n)]; n]))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let rows = (0..n)
            .map(|u| {
                let mut r = bits::full(n);
                bits::clear(&mut r, u);
                r
            })
            .collect();
        Ok(Self::from_rows(n, rows))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.degrees[u]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(&self.rows[u], v)
    }

    /// Neighbours of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.rows[u])
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u]
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: u, order: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.order() != self.n {
            Err(GraphError::OrderMismatch { set: s.order(), graph: self.n })
        } else {
            Ok(())
        }
    }

    /// `G ∨ H`: disjoint union plus every edge between the two parts.
    /// Vertices of `other` are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        check_order(n)?;
        let w = bits::words_for(n);
        let mut rows = Vec::with_capacity(n);
        for u in 0..self.n {
            let mut r = vec![0u64; w];
            for v in self.neighbors(u) {
                bits::set(&mut r, v);
            }
            for v in self.n..n {
                bits::set(&mut r, v);
            }
            rows.push(r);
        }
        for u in 0..other.n {
            let mut r = vec![0u64; w];
            for v in 0..self.n {
                bits::set(&mut r, v);
            }
            for v in other.neighbors(u) {
                bits::set(&mut r, self.n + v);
            }
            rows.push(r);
        }
        Ok(Graph::from_rows(n, rows))
    }

    /// Disjoint union; part `i` occupies the next `parts[i].order()` indices.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        let n: usize = parts.iter().map(Graph::order).sum();
        check_order(n)?;
        let mut edges = Vec::new();
        let mut offset = 0;
        for p in parts {
            edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
            offset += p.order();
        }
        Graph::new(n, edges)
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            seen.insert(s);
            comp.insert(s);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// `Σ_{v ∈ Γ(u)} d_v`.
    pub fn neighbor_degree_sum(&self, u: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        Ok(self.neighbors(u).map(|v| self.degrees[v]).sum())
    }

    /// `e(X)`: edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> Result<usize, GraphError> {
        self.check_set(x)?;
        let twice: usize = x
            .iter()
            .map(|u| {
                self.rows[u]
                    .iter()
                    .zip(x.words())
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum();
        Ok(twice / 2)
    }

    /// `e(X, Y)` for disjoint `x`, `y`. Overlapping vertices are counted from
    /// `x`'s side, i.e. each ordered adjacency `x → y` is counted once.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        Ok(x.iter()
            .map(|u| {
                self.rows[u]
                    .iter()
                    .zip(y.words())
                    .map(|(a, b)| (a & b).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum())
    }

    /// `G[X]` relabeled so that the members of `x` become `0..|x|` in ascending order.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(x)?;
        let members: Vec<usize> = x.iter().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let k = members.len();
        let w = bits::words_for(k);
        let rows = members
            .iter()
            .map(|&u| {
                let mut r = vec![0u64; w];
                for v in self.neighbors(u) {
                    if index[v] != usize::MAX {
                        bits::set(&mut r, index[v]);
                    }
                }
                r
            })
            .collect();
        Ok(Graph::from_rows(k, rows))
    }

    /// `G − w`, remaining vertices keep their relative order.
    pub fn without_vertex(&self, w: usize) -> Result<Graph, GraphError> {
        self.check_vertex(w)?;
        let mut keep = VertexSet::full(self.n);
        keep.remove(w);
        self.induced_subgraph(&keep)
    }

    /// Copy of the graph with the pair `{u, v}` toggled. Only rows `u` and `v`
    /// are reallocated.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let present = self.has_edge(u, v);
        let mut out = self.clone();
        for (a, b) in [(u, v), (v, u)] {
            let mut r = out.rows[a].to_vec();
            if present {
                bits::clear(&mut r, b);
                out.degrees[a] -= 1;
            } else {
                bits::set(&mut r, b);
                out.degrees[a] += 1;
            }
            out.rows[a] = Arc::from(r);
        }
        if present {
            out.m -= 1;
        } else {
            out.m += 1;
        }
        Ok(out)
    }

    /// Relabels vertex `u` as `perm[u]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::NotAPermutation(format!("{perm:?}")));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::NotAPermutation(format!("{perm:?}")));
            }
        }
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    /// One colour class of a proper 2-colouring (vertex 0 of every component
    /// is on the returned side), or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut colour = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return None;
                    }
                }
            }
        }
        VertexSet::from_members(self.n, (0..self.n).filter(|&u| colour[u] == 0)).ok()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected bipartite graph whose degrees are constant on each side.
    pub fn is_semiregular_bipartite(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let Some(side) = self.bipartition() else {
            return false;
        };
        let constant = |set: &VertexSet| {
            let mut it = set.iter().map(|u| self.degrees[u]);
            match it.next() {
                Some(d) => it.all(|e| e == d),
                None => true,
            }
        };
        constant(&side) && constant(&side.complement())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a[..] == b[..])
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for r in &self.rows {
            r[..].hash(state);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphRecord {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRecord {
            order: self.n,
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = GraphRecord::deserialize(d)?;
        Graph::new(rec.order, rec.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_path() {
        let g = path3();
        assert_eq!(g.size(), 2);
        assert_eq!(g.degrees(), &[1, 2, 1]);
    }

    #[test]
    fn build_complete_and_edgeless() {
        let all: Vec<_> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let k4 = Graph::new(4, all).unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let e5 = Graph::new(5, []).unwrap();
        assert_eq!(e5.size(), 0);
        assert_eq!(e5.order(), 5);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, order: 3 }
        );
        assert_eq!(Graph::new(3, [(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
        assert!(matches!(Graph::edgeless(MAX_ORDER + 1), Err(GraphError::OrderTooLarge(_))));
    }

    #[test]
    fn duplicates_are_merged() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g, path3());
    }

    #[test]
    fn join_examples() {
        let s52 = Graph::complete(2).unwrap().join(&Graph::edgeless(3).unwrap()).unwrap();
        assert_eq!(s52.order(), 5);
        assert_eq!(s52.size(), 7);

        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let wheel = Graph::complete(1).unwrap().join(&c4).unwrap();
        assert_eq!(wheel.size(), 8);
        assert_eq!(wheel.degree(0), 4);

        let k2 = Graph::edgeless(1).unwrap().join(&Graph::edgeless(1).unwrap()).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
    }

    #[test]
    fn disjoint_union_examples() {
        let k4 = Graph::complete(4).unwrap();
        let two = Graph::disjoint_union(&[k4.clone(), k4]).unwrap();
        assert_eq!((two.order(), two.size(), two.components().len()), (8, 12, 2));

        assert_eq!(Graph::disjoint_union(&[path3()]).unwrap(), path3());

        let g = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::edgeless(2).unwrap()]).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (5, 3, 3));
    }

    #[test]
    fn components_examples() {
        let g = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(2).unwrap()]).unwrap();
        let sizes: Vec<_> = g.components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![3, 2]);

        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(c5.components().len(), 1);

        let e4 = Graph::edgeless(4).unwrap();
        let comps = e4.components();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn neighbor_degree_sum_examples() {
        assert_eq!(path3().neighbor_degree_sum(1).unwrap(), 2);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.neighbor_degree_sum(0).unwrap(), 9);
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(star.neighbor_degree_sum(0).unwrap(), 4);
        assert!(star.neighbor_degree_sum(5).is_err());
    }

    #[test]
    fn neighbourhood_identity_on_k4() {
        let k4 = Graph::complete(4).unwrap();
        let gamma = VertexSet::from_members(4, k4.neighbors(0)).unwrap();
        let rest = gamma.complement();
        let rhs = 2 * k4.edges_within(&gamma).unwrap() + k4.edges_between(&gamma, &rest).unwrap();
        assert_eq!(rhs, 9);
    }

    #[test]
    fn toggling_shares_untouched_rows() {
        let g = path3();
        let h = g.with_edge_toggled(0, 2).unwrap();
        assert_eq!(h.size(), 3);
        assert!(Arc::ptr_eq(&g.rows[1], &h.rows[1]));
        assert_eq!(h.with_edge_toggled(2, 0).unwrap(), g);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn bipartite_helpers() {
        let star = Graph::new(4, (1..4).map(|v| (0, v))).unwrap();
        assert!(star.is_semiregular_bipartite());
        assert!(!Graph::complete(3).unwrap().is_bipartite());
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p4.is_bipartite());
        assert!(!p4.is_semiregular_bipartite());
    }

    #[test]
    fn relabel_and_induced() {
        let g = path3();
        let h = g.relabeled(&[1, 0, 2]).unwrap();
        assert!(h.has_edge(1, 0) && h.has_edge(0, 2) && !h.has_edge(1, 2));
        assert!(g.relabeled(&[0, 0, 1]).is_err());
        let sub = g.without_vertex(1).unwrap();
        assert_eq!((sub.order(), sub.size()), (2, 0));
    }

    #[test]
    fn serde_round_trip_validates() {
        let g = path3();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"order":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"order":2,"edges":[[0,2]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"order":2,"edges":[],"x":1}"#).is_err());
    }
}
