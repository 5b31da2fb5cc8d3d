//! Permutation-minimal canonical forms and isomorph-free generation.
//!
//! The canonical string of a graph on `n ≤ 10` vertices is the
//! lexicographically smallest upper-triangle bit string, in column order
//! `a(0,1); a(0,2), a(1,2); a(0,3), …`, over all `n!` relabelings.
//!
//! The minimum is found exactly by placing vertices one position at a time:
//! column `j` of the string depends only on positions `0..=j`, so any partial
//! labeling whose prefix is larger than the smallest prefix at that depth is
//! discarded. Two unused vertices `u`, `v` with `N(u)∖{v} = N(v)∖{u}` are
//! swapped by an automorphism, so only the smaller one is tried.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_CANONICAL_ORDER: usize = 10;
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("canonical forms are limited to order {MAX_CANONICAL_ORDER}, got {0}")]
    TooLarge(usize),
    #[error("native enumeration is limited to order {MAX_ENUMERATION_ORDER}, got {0}")]
    EnumerationTooLarge(usize),
}

/// Order byte followed by the minimal upper-triangle bit string, packed
/// most-significant bit first and zero padded.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn order(&self) -> usize {
        self.bytes[0] as usize
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.bytes[1 + bit / 8] >> (7 - bit % 8)) & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::new(n, edges).expect("canonical form encodes a valid graph")
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn from_labeling(adj: &[u16], labeling: &[usize]) -> Self {
        let n = adj.len();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; 1 + nbits.div_ceil(8)];
        bytes[0] = n as u8;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if adj[labeling[i]] >> labeling[j] & 1 == 1 {
                    bytes[1 + bit / 8] |= 0x80 >> (bit % 8);
                }
                bit += 1;
            }
        }
        Self { bytes }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

fn small_rows(g: &Graph) -> Result<Vec<u16>, CanonError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(CanonError::TooLarge(n));
    }
    Ok((0..n).map(|u| g.neighbors(u).fold(0u16, |r, v| r | 1 << v)).collect())
}

#[derive(Clone)]
struct Partial {
    labeling: [u8; MAX_CANONICAL_ORDER],
    used: u16,
}

/// Returns `labeling` with `labeling[position] = vertex`.
fn minimise(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    // twins[c]: vertices u with N(u)∖{c} = N(c)∖{u}.
    let twins: Vec<u16> = (0..n)
        .map(|c| {
            (0..n)
                .filter(|&u| u != c && (adj[u] & !(1 << c)) == (adj[c] & !(1 << u)))
                .fold(0u16, |m, u| m | 1 << u)
        })
        .collect();
    let mut states = vec![Partial {
        labeling: [0; MAX_CANONICAL_ORDER],
        used: 0,
    }];
    for j in 0..n {
        let mut best: Option<u16> = None;
        let mut next = Vec::new();
        for st in &states {
            for c in 0..n {
                let bit = 1u16 << c;
                if st.used & bit != 0 || twins[c] & !st.used & (bit - 1) != 0 {
                    continue;
                }
                let col = (0..j).fold(0u16, |acc, i| acc << 1 | (adj[st.labeling[i] as usize] >> c & 1));
                match best {
                    Some(b) if col > b => continue,
                    Some(b) if col < b => next.clear(),
                    _ => {}
                }
                best = Some(col);
                let mut child = st.clone();
                child.labeling[j] = c as u8;
                child.used |= bit;
                next.push(child);
            }
        }
        states = next;
    }
    states
        .first()
        .map(|s| s.labeling[..n].iter().map(|&v| v as usize).collect())
        .unwrap_or_default()
}

/// Canonical form of `g` (`n ≤ 10`).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// Canonical form and a labeling achieving it: `labeling[position] = vertex`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), CanonError> {
    let adj = small_rows(g)?;
    let labeling = minimise(&adj);
    Ok((CanonicalForm::from_labeling(&adj, &labeling), labeling))
}

/// One representative per isomorphism class for every order `0..=n_max`,
/// each list sorted by canonical form and given in canonical labeling.
///
/// Order `n` is generated from order `n − 1` by adding a vertex with every
/// possible neighbourhood and deduplicating canonical forms.
pub fn enumerate_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>, CanonError> {
    if n_max > MAX_ENUMERATION_ORDER {
        return Err(CanonError::EnumerationTooLarge(n_max));
    }
    let mut levels: Vec<Vec<Vec<u16>>> = vec![vec![Vec::new()]];
    let mut out = vec![vec![Graph::edgeless(0).expect("order 0")]];
    for n in 1..=n_max {
        let mut forms = BTreeSet::new();
        for rep in &levels[n - 1] {
            for mask in 0u16..(1 << (n - 1)) {
                let mut adj = rep.clone();
                for (u, row) in adj.iter_mut().enumerate() {
                    *row |= (mask >> u & 1) << (n - 1);
                }
                adj.push(mask);
                let labeling = minimise(&adj);
                forms.insert(CanonicalForm::from_labeling(&adj, &labeling));
            }
        }
        let graphs: Vec<Graph> = forms.iter().map(CanonicalForm::to_graph).collect();
        levels.push(
            graphs
                .iter()
                .map(|g| (0..n).map(|u| g.neighbors(u).fold(0u16, |r, v| r | 1 << v)).collect())
                .collect(),
        );
        out.push(graphs);
    }
    Ok(out)
}

/// All graphs of order `n ≤ 8` up to isomorphism, in canonical-form order.
pub fn enumerate_nonisomorphic(n: usize) -> Result<impl Iterator<Item = Graph>, CanonError> {
    let mut levels = enumerate_up_to(n)?;
    Ok(levels.swap_remove(n).into_iter())
}
