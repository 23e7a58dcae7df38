//! Sparse cuts, balanced separators, expansion concentration, and
//! low-cost partitions of graphs without large expanders.

mod concentrate;
mod partition;
mod separator;
mod spectral;

use serde::Serialize;

use crate::config::{Evidence, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{self, min_phi_in_range, Edge, Graph, MaskGraph, VertexSet};
use crate::rational::{self, Rational};

pub use concentrate::{concentrate, log_factor, ConcentrationOutcome, ConcentrationTrace};
pub use partition::{partition_no_expander, partition_theorem, PartitionCertificate, TheoremConstants};
pub use separator::{build_separator, ExpanderWitness, SeparatorCertificate, SeparatorOutcome, SeparatorStep};

/// One side of a cut together with its boundary.
#[derive(Debug, Clone, Serialize)]
pub struct Cut {
    pub side: VertexSet,
    #[serde(with = "rational::serde_ratio")]
    pub phi: Rational,
    pub boundary: Vec<Edge>,
    pub mode: Evidence,
}

impl Cut {
    fn from_set(g: &Graph, side: VertexSet, mode: Evidence) -> Cut {
        let report = graph::boundary(g, &side, None).expect("cut side is a nonempty subset");
        Cut {
            side,
            phi: report.phi,
            boundary: report.boundary_edges,
            mode,
        }
    }
}

/// Lowest-φ set with `lo <= |U| <= hi`: the true minimum in exact mode, the
/// best sweep prefix otherwise.
pub(crate) fn best_cut(g: &Graph, lo: usize, hi: usize, cfg: &RunConfig) -> Result<Option<Cut>> {
    let hi = hi.min(g.n());
    if lo.max(1) > hi {
        return Ok(None);
    }
    if cfg.use_exact(g.n())? {
        Ok(min_phi_in_range(&MaskGraph::new(g), lo, hi)
            .map(|c| Cut::from_set(g, VertexSet::from_mask(g.n(), c.mask), Evidence::Exact)))
    } else {
        Ok(spectral::sweep_cut(g, lo, hi, cfg).map(|c| Cut::from_set(g, c.set, Evidence::Heuristic)))
    }
}

/// A cut with at most `m` vertices (never the whole graph) and φ ≤ `eps`.
///
/// In exact mode `None` proves no such cut exists. In heuristic mode `None`
/// only means the sweep did not find one.
pub fn find_sparse_cut(g: &Graph, m: usize, eps: Rational, cfg: &RunConfig) -> Result<Option<Cut>> {
    if m == 0 {
        return Err(Error::ZeroSize);
    }
    let cap = m.min(g.n().saturating_sub(1));
    Ok(best_cut(g, 1, cap, cfg)?.filter(|c| c.phi <= eps))
}
