//! Named graph families with fixed vertex labelings.
//!
//! | family | labeling |
//! |--------|----------|
//! | `s_nk(n, k)` | `0..k` is the dominating clique, `k..n` the independent set |
//! | `s_nk_plus(n, k)` | as `s_nk`, plus the edge `{k, k+1}` |
//! | `windmill(k, copies)` | vertex 0 is the hub shared by `copies` cliques `K_k`; order `copies·(k−1)+1` |
//! | `kite_pendant(k)` | `K_{2k}` on `0..2k`, pendant vertex `2k` joined to vertex 0 |
//! | `corollary1(k, p)` | apex 0, then `p` blocks `K_{2k}`, then one `K_{2k+1}`; order `2(p+1)k+2` |
//! | `lemma2_exception(k, copies)` | `copies` blocks `K_{2k}`, then `K_{2k}` plus pendant `v` (the last vertex) joined to the block's first vertex |
//! | `complete`, `path`, `cycle`, `star`, `edgeless` | natural order; the star's centre is 0 |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: {constraint}")]
    Constraint { family: Family, constraint: String },
    #[error("unknown construction family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: missing parameter `{name}`")]
    MissingParameter { family: Family, name: &'static str },
    #[error("{family}: unexpected parameter `{name}`")]
    UnexpectedParameter { family: Family, name: String },
    #[error("malformed construction text `{0}`")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SNk,
    SNkPlus,
    Windmill,
    KitePendant,
    Corollary1,
    Lemma2Exception,
    Complete,
    Path,
    Cycle,
    Star,
    Edgeless,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::SNk,
        Family::SNkPlus,
        Family::Windmill,
        Family::KitePendant,
        Family::Corollary1,
        Family::Lemma2Exception,
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Edgeless,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::SNk => "s_nk",
            Family::SNkPlus => "s_nk_plus",
            Family::Windmill => "windmill",
            Family::KitePendant => "kite_pendant",
            Family::Corollary1 => "corollary1",
            Family::Lemma2Exception => "lemma2_exception",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Edgeless => "edgeless",
        }
    }

    /// Parameter names, in the order a bare positional value is assigned.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::SNk | Family::SNkPlus => &["k", "n"],
            Family::Windmill | Family::Lemma2Exception => &["k", "copies"],
            Family::KitePendant => &["k"],
            Family::Corollary1 => &["k", "p"],
            Family::Complete | Family::Path | Family::Cycle | Family::Star | Family::Edgeless => &["n"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.to_owned()))
    }
}

/// A fully parameterised member of one of the named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConstructionSpec {
    SNk { n: usize, k: usize },
    SNkPlus { n: usize, k: usize },
    Windmill { k: usize, copies: usize },
    KitePendant { k: usize },
    Corollary1 { k: usize, p: usize },
    Lemma2Exception { k: usize, copies: usize },
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Edgeless { n: usize },
}

impl ConstructionSpec {
    pub fn family(&self) -> Family {
        match self {
            ConstructionSpec::SNk { .. } => Family::SNk,
            ConstructionSpec::SNkPlus { .. } => Family::SNkPlus,
            ConstructionSpec::Windmill { .. } => Family::Windmill,
            ConstructionSpec::KitePendant { .. } => Family::KitePendant,
            ConstructionSpec::Corollary1 { .. } => Family::Corollary1,
            ConstructionSpec::Lemma2Exception { .. } => Family::Lemma2Exception,
            ConstructionSpec::Complete { .. } => Family::Complete,
            ConstructionSpec::Path { .. } => Family::Path,
            ConstructionSpec::Cycle { .. } => Family::Cycle,
            ConstructionSpec::Star { .. } => Family::Star,
            ConstructionSpec::Edgeless { .. } => Family::Edgeless,
        }
    }

    /// Builds a spec from named parameters; every name the family needs must
    /// be present and no other name may appear.
    pub fn from_params(family: Family, params: &BTreeMap<String, usize>) -> Result<Self, ConstructionError> {
        for name in params.keys() {
            if !family.parameters().contains(&name.as_str()) {
                return Err(ConstructionError::UnexpectedParameter {
                    family,
                    name: name.clone(),
                });
            }
        }
        let get = |name: &'static str| {
            params
                .get(name)
                .copied()
                .ok_or(ConstructionError::MissingParameter { family, name })
        };
        Ok(match family {
            Family::SNk => ConstructionSpec::SNk { n: get("n")?, k: get("k")? },
            Family::SNkPlus => ConstructionSpec::SNkPlus { n: get("n")?, k: get("k")? },
            Family::Windmill => ConstructionSpec::Windmill {
                k: get("k")?,
                copies: get("copies")?,
            },
            Family::KitePendant => ConstructionSpec::KitePendant { k: get("k")? },
            Family::Corollary1 => ConstructionSpec::Corollary1 { k: get("k")?, p: get("p")? },
            Family::Lemma2Exception => ConstructionSpec::Lemma2Exception {
                k: get("k")?,
                copies: get("copies")?,
            },
            Family::Complete => ConstructionSpec::Complete { n: get("n")? },
            Family::Path => ConstructionSpec::Path { n: get("n")? },
            Family::Cycle => ConstructionSpec::Cycle { n: get("n")? },
            Family::Star => ConstructionSpec::Star { n: get("n")? },
            Family::Edgeless => ConstructionSpec::Edgeless { n: get("n")? },
        })
    }

    /// Order of the graph this spec builds (no validation).
    pub fn order(&self) -> usize {
        match *self {
            ConstructionSpec::SNk { n, .. }
            | ConstructionSpec::SNkPlus { n, .. }
            | ConstructionSpec::Complete { n }
            | ConstructionSpec::Path { n }
            | ConstructionSpec::Cycle { n }
            | ConstructionSpec::Star { n }
            | ConstructionSpec::Edgeless { n } => n,
            ConstructionSpec::Windmill { k, copies } => copies.saturating_mul(k.saturating_sub(1)).saturating_add(1),
            ConstructionSpec::KitePendant { k } => k.saturating_mul(2).saturating_add(1),
            ConstructionSpec::Corollary1 { k, p } => {
                p.saturating_add(1).saturating_mul(k).saturating_mul(2).saturating_add(2)
            }
            ConstructionSpec::Lemma2Exception { k, copies } => copies
                .saturating_add(1)
                .saturating_mul(k)
                .saturating_mul(2)
                .saturating_add(1),
        }
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        let family = self.family();
        let fail = |constraint: &str| {
            Err(ConstructionError::Constraint {
                family,
                constraint: constraint.to_owned(),
            })
        };
        match *self {
            ConstructionSpec::SNk { n, k } if !(k >= 1 && n > k) => fail("requires n > k >= 1"),
            ConstructionSpec::SNkPlus { n, k } if !(k >= 1 && n >= k + 2) => fail("requires k >= 1 and n >= k + 2"),
            ConstructionSpec::Windmill { k, copies } if !(k >= 2 && copies >= 1) => {
                fail("requires k >= 2 and copies >= 1")
            }
            ConstructionSpec::KitePendant { k } if k < 1 => fail("requires k >= 1"),
            ConstructionSpec::Corollary1 { k, .. } if k < 2 => fail("requires k >= 2"),
            ConstructionSpec::Lemma2Exception { k, .. } if k < 1 => fail("requires k >= 1"),
            ConstructionSpec::Cycle { n } if n < 3 => fail("requires n >= 3"),
            _ => Ok(()),
        }?;
        if self.order() > crate::MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.order()).into());
        }
        Ok(())
    }

    pub fn build(&self) -> Result<Graph, ConstructionError> {
        build_construction(self)
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::SNk { n, k } | ConstructionSpec::SNkPlus { n, k } => {
                write!(f, "{}:n={n},k={k}", self.family())
            }
            ConstructionSpec::Windmill { k, copies } | ConstructionSpec::Lemma2Exception { k, copies } => {
                write!(f, "{}:k={k},copies={copies}", self.family())
            }
            ConstructionSpec::KitePendant { k } => write!(f, "kite_pendant:k={k}"),
            ConstructionSpec::Corollary1 { k, p } => write!(f, "corollary1:k={k},p={p}"),
            ConstructionSpec::Complete { n }
            | ConstructionSpec::Path { n }
            | ConstructionSpec::Cycle { n }
            | ConstructionSpec::Star { n }
            | ConstructionSpec::Edgeless { n } => write!(f, "{}:n={n}", self.family()),
        }
    }
}

/// Parses `family[:name=value,...]` into a family and its raw parameters.
///
/// A bare value (`s_nk:2`) is assigned to the family's first parameter.
pub fn parse_construction_text(text: &str) -> Result<(Family, BTreeMap<String, usize>), ConstructionError> {
    let malformed = || ConstructionError::Malformed(text.to_owned());
    let (head, tail) = match text.split_once(':') {
        Some((h, t)) => (h, Some(t)),
        None => (text, None),
    };
    let family: Family = head.trim().parse()?;
    let mut params = BTreeMap::new();
    if let Some(tail) = tail {
        for (i, item) in tail.split(',').enumerate() {
            let item = item.trim();
            let (name, value) = match item.split_once('=') {
                Some((name, value)) => (name.trim().to_owned(), value),
                None if i == 0 => (family.parameters()[0].to_owned(), item),
                None => return Err(malformed()),
            };
            let value: usize = value.trim().parse().map_err(|_| malformed())?;
            if name.is_empty() || params.insert(name, value).is_some() {
                return Err(malformed());
            }
        }
    }
    Ok((family, params))
}

impl FromStr for ConstructionSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, params) = parse_construction_text(s)?;
        let spec = ConstructionSpec::from_params(family, &params)?;
        spec.validate()?;
        Ok(spec)
    }
}

fn clique_edges(start: usize, size: usize, edges: &mut Vec<(usize, usize)>) {
    for u in start..start + size {
        for v in u + 1..start + size {
            edges.push((u, v));
        }
    }
}

/// Builds the graph described by `spec`, following the labeling table in the
/// module docs.
pub fn build_construction(spec: &ConstructionSpec) -> Result<Graph, ConstructionError> {
    spec.validate()?;
    let n = spec.order();
    let mut edges = Vec::new();
    match *spec {
        ConstructionSpec::SNk { n, k } | ConstructionSpec::SNkPlus { n, k } => {
            clique_edges(0, k, &mut edges);
            for u in 0..k {
                edges.extend((k..n).map(|v| (u, v)));
            }
            if matches!(spec, ConstructionSpec::SNkPlus { .. }) {
                edges.push((k, k + 1));
            }
        }
        ConstructionSpec::Windmill { k, copies } => {
            for c in 0..copies {
                let start = 1 + c * (k - 1);
                clique_edges(start, k - 1, &mut edges);
                edges.extend((start..start + k - 1).map(|v| (0, v)));
            }
        }
        ConstructionSpec::KitePendant { k } => {
            clique_edges(0, 2 * k, &mut edges);
            edges.push((0, 2 * k));
        }
        ConstructionSpec::Corollary1 { k, p } => {
            let mut start = 1;
            for _ in 0..p {
                clique_edges(start, 2 * k, &mut edges);
                start += 2 * k;
            }
            clique_edges(start, 2 * k + 1, &mut edges);
            edges.extend((1..n).map(|v| (0, v)));
        }
        ConstructionSpec::Lemma2Exception { k, copies } => {
            for c in 0..=copies {
                clique_edges(c * 2 * k, 2 * k, &mut edges);
            }
            edges.push((copies * 2 * k, n - 1));
        }
        ConstructionSpec::Complete { n } => clique_edges(0, n, &mut edges),
        ConstructionSpec::Path { n } => edges.extend((1..n).map(|v| (v - 1, v))),
        ConstructionSpec::Cycle { n } => edges.extend((0..n).map(|v| (v, (v + 1) % n))),
        ConstructionSpec::Star { n } => edges.extend((1..n).map(|v| (0, v))),
        ConstructionSpec::Edgeless { .. } => {}
    }
    Ok(Graph::new(n, edges)?)
}

pub fn s_nk(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::SNk { n, k })
}

pub fn s_nk_plus(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::SNkPlus { n, k })
}

pub fn windmill(k: usize, copies: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Windmill { k, copies })
}

pub fn kite_pendant(k: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::KitePendant { k })
}

pub fn corollary1(k: usize, p: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Corollary1 { k, p })
}

pub fn lemma2_exception(k: usize, copies: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Lemma2Exception { k, copies })
}

pub fn complete(n: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Complete { n })
}

pub fn path(n: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Path { n })
}

pub fn cycle(n: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Cycle { n })
}

pub fn star(n: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Star { n })
}

pub fn edgeless(n: usize) -> Result<Graph, ConstructionError> {
    build_construction(&ConstructionSpec::Edgeless { n })
}
