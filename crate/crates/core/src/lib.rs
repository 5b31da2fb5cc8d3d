//! Verification workbench for the signless Laplacian spectral radius ("Q-index")
//! of graphs with forbidden cycles.
//!
//! The crate is organised bottom-up:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | immutable simple graphs on packed bit rows |
//! | [`spectral`] | `Q = D + A`, power iteration, Jacobi oracle, certified comparisons |
//! | [`constructions`] | the named extremal families (`S_{n,k}`, `S_{n,k}^+`, windmills, ...) |
//! | [`subgraph`] | exact backtracking search for paths and cycles of a given order |
//! | [`bounds`] | closed-form formulas and graph-dependent upper bounds on `q(G)` |
//! | [`enumeration`] | canonical forms, isomorph-free generation, graph6 |
//! | [`verify`] | per-instance statement checkers and exhaustive suites |
//! | [`search`] | hill climbing for large `q(G)` under forbidden cycle lengths |
//!
//! Paths and cycles are always measured by their *order*: `P_k` and `C_k`
//! have `k` vertices.

mod bits;

pub mod bounds;
pub mod constructions;
pub mod enumeration;
pub mod graph;
pub mod search;
pub mod spectral;
pub mod subgraph;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
