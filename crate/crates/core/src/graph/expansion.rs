use serde::Serialize;

use super::{min_phi_in_range, Edge, Graph, MaskGraph, VertexSet};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// ∂U (optionally restricted to edges landing in W) and φ(U) = |∂U| / |U|.
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryReport {
    pub boundary_edges: Vec<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restricted_boundary: Option<Vec<Edge>>,
    pub size: usize,
    #[serde(with = "rational::serde_ratio")]
    pub phi: Rational,
}

fn check_members(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.universe() != g.n() {
        if let Some(v) = set.iter().find(|&v| v >= g.n()) {
            return Err(Error::ForeignVertex(v));
        }
    }
    Ok(())
}

pub fn boundary(g: &Graph, u: &VertexSet, w: Option<&VertexSet>) -> Result<BoundaryReport> {
    check_members(g, u)?;
    if u.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(w) = w {
        check_members(g, w)?;
        if u.iter().any(|v| w.contains(v)) {
            return Err(Error::OverlappingSets);
        }
    }
    let mut boundary_edges = Vec::new();
    let mut restricted = w.map(|_| Vec::new());
    for &(a, b) in g.edges() {
        let (ia, ib) = (u.contains(a), u.contains(b));
        if ia == ib {
            continue;
        }
        boundary_edges.push((a, b));
        if let (Some(out), Some(w)) = (restricted.as_mut(), w) {
            let other = if ia { b } else { a };
            if w.contains(other) {
                out.push((a, b));
            }
        }
    }
    let size = boundary_edges.len();
    Ok(BoundaryReport {
        boundary_edges,
        restricted_boundary: restricted,
        size,
        phi: Rational::new(size as i64, u.len() as i64),
    })
}

/// φ_G(U) without materializing the edge list.
pub fn phi(g: &Graph, u: &VertexSet) -> Rational {
    assert!(!u.is_empty());
    let count = u
        .iter()
        .flat_map(|v| g.neighbors(v).iter())
        .filter(|&&w| !u.contains(w))
        .count();
    Rational::new(count as i64, u.len() as i64)
}

/// G[U] relabeled to `0..|U|`; `original[i]` is the parent id of local vertex `i`.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a set of local ids back into the parent graph.
    pub fn lift(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        let mut out = VertexSet::empty(parent_n);
        for v in local.iter() {
            out.insert(self.original[v]);
        }
        out
    }

    pub fn lift_ids(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.original[v]).collect()
    }
}

pub fn induced_subgraph(g: &Graph, u: &VertexSet) -> Result<InducedSubgraph> {
    check_members(g, u)?;
    let original = u.to_vec();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in original.iter().enumerate() {
        local[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| local[a] != usize::MAX && local[b] != usize::MAX)
        .map(|&(a, b)| (local[a], local[b]));
    let graph = Graph::from_edges(original.len(), edges)?;
    Ok(InducedSubgraph { graph, original })
}

#[derive(Debug, Clone, Serialize)]
pub struct SmallScaleExpansion {
    #[serde(with = "rational::serde_ratio")]
    pub value: Rational,
    pub witness: VertexSet,
}

/// ĥ_m(G): the minimum of φ over nonempty sets of at most `m` vertices, by
/// exhaustive enumeration. Ties go to the smallest, then lexicographically
/// first, witness.
pub fn h_small_scale(g: &Graph, m: usize, cfg: &RunConfig) -> Result<SmallScaleExpansion> {
    if m == 0 || m > g.n() {
        return Err(Error::ZeroSize);
    }
    if g.n() > cfg.exact_threshold {
        return Err(Error::TooLargeForExact {
            n: g.n(),
            threshold: cfg.exact_threshold,
        });
    }
    let best = min_phi_in_range(&MaskGraph::new(g), 1, m).expect("range is nonempty");
    Ok(SmallScaleExpansion {
        value: Rational::new(best.boundary as i64, best.size as i64),
        witness: VertexSet::from_mask(g.n(), best.mask),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpanderCheck {
    pub is_expander: bool,
    /// h_{1/2}(G); absent when no set of size ≤ n/2 exists (n ≤ 1).
    #[serde(with = "rational::serde_ratio_opt")]
    pub h_half: Option<Rational>,
    pub counterexample: Option<VertexSet>,
}

/// Whether every nonempty U with |U| ≤ ⌊n/2⌋ has φ(U) ≥ eps.
pub fn is_epsilon_expander_exact(g: &Graph, eps: Rational, cfg: &RunConfig) -> Result<ExpanderCheck> {
    if g.n() > cfg.exact_threshold {
        return Err(Error::TooLargeForExact {
            n: g.n(),
            threshold: cfg.exact_threshold,
        });
    }
    if g.n() / 2 == 0 {
        return Ok(ExpanderCheck {
            is_expander: true,
            h_half: None,
            counterexample: None,
        });
    }
    let h = h_small_scale(g, g.n() / 2, cfg)?;
    let is_expander = h.value >= eps;
    Ok(ExpanderCheck {
        is_expander,
        h_half: Some(h.value),
        counterexample: (!is_expander).then_some(h.witness),
    })
}
