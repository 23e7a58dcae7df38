use serde::Serialize;

use super::best_cut;
use crate::config::{Evidence, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, VertexSet};
use crate::rational::{self, Rational};

/// One peeling step: `A_i` was cut out of `B_{i-1}` along `S_i`.
#[derive(Debug, Clone, Serialize)]
pub struct SeparatorStep {
    pub side: VertexSet,
    pub cut_edges: Vec<Edge>,
    #[serde(with = "rational::serde_ratio")]
    pub phi: Rational,
    /// |B_{i-1}|, the size of the set the cut was taken from.
    pub from_size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparatorCertificate {
    pub s_edges: Vec<Edge>,
    pub part_a: VertexSet,
    pub part_b: VertexSet,
    pub ledger: Vec<SeparatorStep>,
    #[serde(with = "rational::serde_ratio")]
    pub eps: Rational,
    /// Largest per-step φ; every step is strictly below `eps`.
    #[serde(with = "rational::serde_ratio")]
    pub eps_effective: Rational,
    pub mode: Evidence,
}

/// An induced subgraph on more than 2n/3 vertices certified to be an
/// `eps`-expander by exhaustive enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct ExpanderWitness {
    pub vertices: VertexSet,
    #[serde(with = "rational::serde_ratio")]
    pub eps: Rational,
    /// Exact h_{1/2} of the induced subgraph; absent when it has one vertex.
    #[serde(with = "rational::serde_ratio_opt")]
    pub h_half: Option<Rational>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SeparatorOutcome {
    Separator(SeparatorCertificate),
    Expander(ExpanderWitness),
}

/// Peels sparse cuts (φ < eps, at most half the remaining vertices) off the
/// remainder until at most 2n/3 vertices are left. If some remainder of more
/// than 2n/3 vertices admits no such cut it is returned as an expander
/// witness; that conclusion requires the exact oracle, so a heuristic
/// failure is reported as [`Error::Inconclusive`].
pub fn build_separator(g: &Graph, eps: Rational, cfg: &RunConfig) -> Result<SeparatorOutcome> {
    let n = g.n();
    let mut remaining = g.vertices();
    let mut ledger = Vec::new();
    let mut mode = Evidence::Exact;
    while 3 * remaining.len() > 2 * n {
        let sub = graph::induced_subgraph(g, &remaining)?;
        let half = remaining.len() / 2;
        let cut = best_cut(&sub.graph, 1, half, cfg)?;
        match cut {
            Some(cut) if cut.phi < eps => {
                mode = mode.and(cut.mode);
                let side = sub.lift(&cut.side, n);
                let cut_edges = cut
                    .boundary
                    .iter()
                    .map(|&(a, b)| {
                        let (a, b) = (sub.original[a], sub.original[b]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                ledger.push(SeparatorStep {
                    side: side.clone(),
                    cut_edges,
                    phi: cut.phi,
                    from_size: remaining.len(),
                });
                remaining = remaining.difference(&side);
            }
            Some(cut) if cut.mode == Evidence::Heuristic => {
                return Err(Error::Inconclusive(format!(
                    "sweep found no cut below {} in a remainder of {} vertices (best {})",
                    rational::format(&eps),
                    remaining.len(),
                    rational::format(&cut.phi)
                )));
            }
            None if !cfg.use_exact(sub.graph.n())? && half > 0 => {
                return Err(Error::Inconclusive(format!(
                    "sweep found no candidate cut in a remainder of {} vertices",
                    remaining.len()
                )));
            }
            best => {
                return Ok(SeparatorOutcome::Expander(ExpanderWitness {
                    vertices: remaining,
                    eps,
                    h_half: best.map(|c| c.phi),
                }));
            }
        }
    }
    let mut s_edges: Vec<Edge> = ledger.iter().flat_map(|s| s.cut_edges.iter().copied()).collect();
    s_edges.sort_unstable();
    let eps_effective = ledger
        .iter()
        .map(|s| s.phi)
        .max()
        .unwrap_or_else(|| Rational::from_integer(0));
    Ok(SeparatorOutcome::Separator(SeparatorCertificate {
        s_edges,
        part_a: remaining.complement(),
        part_b: remaining,
        ledger,
        eps,
        eps_effective,
        mode,
    }))
}

impl SeparatorCertificate {
    /// Independent re-check against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.part_a.universe() != n || self.part_b.universe() != n {
            return Err("parts are not over the graph's vertex set".into());
        }
        if !self.part_a.is_disjoint(&self.part_b) || self.part_a.len() + self.part_b.len() != n {
            return Err("parts do not partition the vertices".into());
        }
        for part in [&self.part_a, &self.part_b] {
            if 3 * part.len() < n || 3 * part.len() > 2 * n {
                return Err(format!("unbalanced part of size {} (n = {n})", part.len()));
            }
        }
        if let Some(e) = self.s_edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(format!("separator edge {e:?} is not in the graph"));
        }
        let reach = g.reachable_avoiding(&self.part_a, &self.s_edges);
        if !reach.is_disjoint(&self.part_b) {
            return Err("removing the separator leaves the parts connected".into());
        }
        let ledger_total: usize = self.ledger.iter().map(|s| s.cut_edges.len()).sum();
        if ledger_total != self.s_edges.len() {
            return Err(format!(
                "ledger sums to {ledger_total}, separator has {}",
                self.s_edges.len()
            ));
        }
        let mut union = VertexSet::empty(n);
        for step in &self.ledger {
            if step.phi * Rational::from_integer(step.side.len() as i64)
                != Rational::from_integer(step.cut_edges.len() as i64)
            {
                return Err("ledger step φ disagrees with its edge count".into());
            }
            if step.phi > self.eps_effective {
                return Err("ledger step exceeds eps_effective".into());
            }
            union = union.union(&step.side);
        }
        if union != self.part_a {
            return Err("ledger sides do not add up to part A".into());
        }
        // |S| ≤ (2/3)·eps_effective·n
        let lhs = Rational::from_integer(3 * self.s_edges.len() as i64);
        if lhs > self.eps_effective * Rational::from_integer(2 * n as i64) {
            return Err("separator exceeds (2/3)·eps_effective·n".into());
        }
        if self.eps_effective >= self.eps && !self.ledger.is_empty() {
            return Err("a step reached eps".into());
        }
        Ok(())
    }
}

impl ExpanderWitness {
    /// Exhaustive re-check that the witness is large and an `eps`-expander.
    pub fn validate(&self, g: &Graph, cfg: &RunConfig) -> std::result::Result<(), String> {
        if 3 * self.vertices.len() <= 2 * g.n() {
            return Err(format!("witness of {} vertices is not above 2n/3", self.vertices.len()));
        }
        let sub = graph::induced_subgraph(g, &self.vertices).map_err(|e| e.to_string())?;
        let check = graph::is_epsilon_expander_exact(&sub.graph, self.eps, cfg).map_err(|e| e.to_string())?;
        if !check.is_expander {
            return Err("witness is not an eps-expander".into());
        }
        Ok(())
    }
}
