use serde::Serialize;

use super::concentrate::{concentrate, log_factor, ConcentrationOutcome};
use super::find_sparse_cut;
use crate::config::{Evidence, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, VertexSet};
use crate::rational::{self, Rational};

/// Constants of the scaled run behind [`partition_theorem`].
#[derive(Debug, Clone, Serialize)]
pub struct TheoremConstants {
    pub requested_m: usize,
    #[serde(with = "rational::serde_ratio")]
    pub requested_eps: Rational,
    /// m' = ⌊3m/2⌋, the scale the partitioner runs at.
    pub scale_m: usize,
    /// L = max(1, ⌈log_{3/2}(n/m')⌉).
    pub log_factor: u32,
    /// The concrete value standing in for c·log(n): 4L.
    #[serde(with = "rational::serde_ratio")]
    pub c_log_n: Rational,
    /// 4L·eps, the cut level the partitioner was run with.
    #[serde(with = "rational::serde_ratio")]
    pub scaled_eps: Rational,
    /// c = 4L / ln(n), informational only.
    pub c_estimate: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionCertificate {
    pub blocks: Vec<VertexSet>,
    pub crossing_edges: Vec<Edge>,
    /// Sets peeled off in order, before regrouping into blocks.
    pub steps: Vec<VertexSet>,
    #[serde(with = "rational::serde_ratio_vec")]
    pub per_step_phi: Vec<Rational>,
    pub m: usize,
    #[serde(with = "rational::serde_ratio")]
    pub eps: Rational,
    #[serde(with = "rational::serde_ratio")]
    pub eps_effective: Rational,
    pub mode: Evidence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremConstants>,
}

/// Peels sets of at most `m` vertices with φ ≤ eps (measured inside the
/// remainder) until at most `m` vertices remain, then regroups the pieces in
/// order into blocks of fewer than 2m vertices.
///
/// When some remainder of more than `m` vertices has no such set, the
/// hypothesis fails there and the remainder is returned inside
/// [`Error::ExpanderObstruction`].
pub fn partition_no_expander(g: &Graph, m: usize, eps: Rational, cfg: &RunConfig) -> Result<PartitionCertificate> {
    if m == 0 {
        return Err(Error::ZeroSize);
    }
    let n = g.n();
    let mut remaining = g.vertices();
    let mut steps = Vec::new();
    let mut per_step_phi = Vec::new();
    let mut mode = Evidence::Exact;
    while remaining.len() > m {
        let sub = graph::induced_subgraph(g, &remaining)?;
        match find_sparse_cut(&sub.graph, m, eps, cfg)? {
            Some(cut) => {
                mode = mode.and(cut.mode);
                let side = sub.lift(&cut.side, n);
                remaining = remaining.difference(&side);
                per_step_phi.push(cut.phi);
                steps.push(side);
            }
            None if cfg.use_exact(sub.graph.n())? => {
                return Err(Error::ExpanderObstruction {
                    witness: remaining.to_vec(),
                    certified: true,
                });
            }
            None => {
                return Err(Error::Inconclusive(format!(
                    "sweep found no cut of at most {m} vertices below {} in a remainder of {}",
                    rational::format(&eps),
                    remaining.len()
                )));
            }
        }
    }
    if !remaining.is_empty() {
        steps.push(remaining);
    }

    let mut blocks = Vec::new();
    let mut current = VertexSet::empty(n);
    for piece in &steps {
        if current.len() + piece.len() >= 2 * m && !current.is_empty() {
            blocks.push(std::mem::replace(&mut current, VertexSet::empty(n)));
        }
        current = current.union(piece);
    }
    if !current.is_empty() {
        blocks.push(current);
    }

    let mut labels = vec![0; n];
    for (j, block) in blocks.iter().enumerate() {
        block.iter().for_each(|v| labels[v] = j);
    }
    let eps_effective = per_step_phi
        .iter()
        .copied()
        .max()
        .unwrap_or_else(|| Rational::from_integer(0));
    Ok(PartitionCertificate {
        crossing_edges: g.crossing_edges(&labels),
        blocks,
        steps,
        per_step_phi,
        m,
        eps,
        eps_effective,
        mode,
        theorem: None,
    })
}

/// Partition of a graph with no `eps`-expander on `m` or more vertices into
/// blocks of fewer than 3m vertices, cutting at most 4L·eps·n edges.
///
/// Runs [`partition_no_expander`] at scale m' = ⌊3m/2⌋ and level 4L·eps. An
/// obstruction there is concentrated into an induced `eps`-expander on at
/// least `m` vertices, which is reported as [`Error::ExpanderObstruction`].
pub fn partition_theorem(g: &Graph, m: usize, eps: Rational, cfg: &RunConfig) -> Result<PartitionCertificate> {
    if m == 0 {
        return Err(Error::ZeroSize);
    }
    let n = g.n();
    let scale_m = (3 * m / 2).max(1);
    let l = log_factor(n, scale_m);
    let c_log_n = Rational::from_integer(4 * l as i64);
    let scaled_eps = c_log_n * eps;
    let constants = TheoremConstants {
        requested_m: m,
        requested_eps: eps,
        scale_m,
        log_factor: l,
        c_log_n,
        scaled_eps,
        c_estimate: if n > 1 {
            4.0 * l as f64 / (n as f64).ln()
        } else {
            f64::INFINITY
        },
    };
    match partition_no_expander(g, scale_m, scaled_eps, cfg) {
        Ok(mut cert) => {
            cert.theorem = Some(constants);
            Ok(cert)
        }
        Err(Error::ExpanderObstruction { witness, .. }) => {
            let region = VertexSet::from_ids(n, witness)?;
            let sub = graph::induced_subgraph(g, &region)?;
            let (u, trace) = concentrate(&sub.graph, scale_m, scaled_eps, cfg)?;
            if trace.outcome == ConcentrationOutcome::HypothesisRefuted {
                return Err(Error::TheoremViolation(
                    "concentration refuted a certified small-scale expansion bound".into(),
                ));
            }
            Err(Error::ExpanderObstruction {
                witness: sub.lift(&u, n).to_vec(),
                certified: true,
            })
        }
        Err(other) => Err(other),
    }
}

impl PartitionCertificate {
    /// Independent re-check of the block structure and the edge ledger.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let mut labels = vec![usize::MAX; n];
        for (j, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(format!("block {j} is empty"));
            }
            for v in block.iter() {
                if v >= n || labels[v] != usize::MAX {
                    return Err(format!("vertex {v} is foreign or in two blocks"));
                }
                labels[v] = j;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err("blocks do not cover every vertex".into());
        }
        let mut recount: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| labels[u] != labels[v])
            .collect();
        recount.sort_unstable();
        let mut stored = self.crossing_edges.clone();
        stored.sort_unstable();
        if recount != stored {
            return Err(format!(
                "recounted {} crossing edges, certificate stores {}",
                recount.len(),
                stored.len()
            ));
        }
        if self.eps_effective > self.eps {
            return Err("eps_effective exceeds eps".into());
        }
        if Rational::from_integer(stored.len() as i64) > self.eps_effective * Rational::from_integer(n as i64) {
            return Err("crossing edges exceed eps_effective·n".into());
        }
        if let Some(b) = self.blocks.iter().find(|b| b.len() >= 2 * self.m) {
            return Err(format!(
                "block of {} vertices is not below 2m = {}",
                b.len(),
                2 * self.m
            ));
        }
        // t ≤ n/m + 1
        if (self.blocks.len() - 1) * self.m > n {
            return Err(format!("{} blocks exceed n/m + 1", self.blocks.len()));
        }
        if let Some(c) = &self.theorem {
            if let Some(b) = self.blocks.iter().find(|b| b.len() >= 3 * c.requested_m) {
                return Err(format!("block of {} vertices is not below 3m", b.len()));
            }
            let bound = c.c_log_n * c.requested_eps * Rational::from_integer(n as i64);
            if Rational::from_integer(stored.len() as i64) > bound {
                return Err("crossing edges exceed c·log(n)·eps·n".into());
            }
        }
        Ok(())
    }
}
