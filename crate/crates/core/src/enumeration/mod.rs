//! Canonical forms, isomorph-free generation of small graphs, and graph6.

mod canonical;
mod graph6;

pub use canonical::{
    canonical_form, canonical_labeling, enumerate_nonisomorphic, enumerate_up_to, CanonError, CanonicalForm,
    MAX_CANONICAL_ORDER, MAX_ENUMERATION_ORDER,
};
pub use graph6::{
    parse_graph6, parse_graph6_corpus, write_graph6, write_graph6_corpus, CorpusError, Graph6Error, GRAPH6_HEADER,
    MAX_GRAPH6_ORDER,
};
