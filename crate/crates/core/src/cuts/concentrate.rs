// Expansion concentration.
//
// Start from a set Y_1 of size in (m, n/2] with φ(Y_1) < eps/2. Repeatedly
// split G[Y_i] with the separator builder at level τ = eps / (4L),
// L = ⌈log_{3/2}(n/m)⌉, and descend into the side whose boundary towards
// V \ Y_i is relatively smaller. Each split satisfies |S_i| < τ·(2/3)|Y_i|,
// so δ_i = |S_i| / |Y_{i+1}| < eps / (2L), and the telescoping bound
// φ(Y_{l+1}) ≤ φ(Y_1) + Σ δ_i < eps shows the descent can only bottom out
// (|Y_{l+1}| ≤ m) when ĥ_m(G) < eps. Otherwise some G[Y_i] refuses to
// split, and the builder hands back an induced τ-expander on more than
// (2/3)|Y_i| > (2/3)m vertices.

use serde::Serialize;

use super::best_cut;
use super::separator::{build_separator, SeparatorOutcome};
use crate::config::{Evidence, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{self, Graph, VertexSet};
use crate::rational::{self, ceil_log_three_halves, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConcentrationOutcome {
    /// h_{1/2}(G) ≥ eps/2 already; the whole vertex set is returned.
    WholeGraph,
    /// An induced expander was extracted during the descent.
    Extracted,
    /// The descent reached a set of at most m vertices with φ < eps, so the
    /// hypothesis ĥ_m(G) ≥ eps is false. `result` holds that set.
    HypothesisRefuted,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcentrationTrace {
    pub m: usize,
    #[serde(with = "rational::serde_ratio")]
    pub eps: Rational,
    /// L = max(1, ⌈log_{3/2}(n/m)⌉).
    pub log_factor: u32,
    /// τ = eps / (4L): the separator level, and the expansion a returned expander carries.
    #[serde(with = "rational::serde_ratio")]
    pub target_expansion: Rational,
    /// eps / (6L), the weaker level derived from |S_{i'}| ≥ ... |Y_{i'}|.
    #[serde(with = "rational::serde_ratio")]
    pub reported_bound_div6: Rational,
    #[serde(with = "rational::serde_ratio_opt")]
    pub phi_first: Option<Rational>,
    pub y_sequence: Vec<VertexSet>,
    pub separator_sizes: Vec<usize>,
    #[serde(with = "rational::serde_ratio_vec")]
    pub deltas: Vec<Rational>,
    /// Index into `y_sequence` of the set the expander was taken from.
    pub chosen_index: Option<usize>,
    pub result: VertexSet,
    pub outcome: ConcentrationOutcome,
    /// Exact h_{1/2}(G[result]) when it fits the enumeration threshold.
    #[serde(with = "rational::serde_ratio_opt")]
    pub certified_h_half: Option<Rational>,
    pub mode: Evidence,
}

pub fn log_factor(n: usize, m: usize) -> u32 {
    ceil_log_three_halves(n as u64, m.max(1) as u64).max(1)
}

// Side of a split whose edges towards the outside of `y` are relatively fewer.
fn pick_side(g: &Graph, y: &VertexSet, a: VertexSet, b: VertexSet) -> VertexSet {
    let outward = |x: &VertexSet| {
        let count = x
            .iter()
            .flat_map(|v| g.neighbors(v).iter())
            .filter(|&&w| !y.contains(w))
            .count();
        Rational::new(count as i64, x.len() as i64)
    };
    let (ra, rb) = (outward(&a), outward(&b));
    if ra < rb || (ra == rb && a.witness_cmp(&b) != std::cmp::Ordering::Greater) {
        a
    } else {
        b
    }
}

/// Concentrates small-scale expansion into an induced expander.
///
/// Under the hypothesis ĥ_m(G) ≥ eps the result is a set U with
/// |U| > (2/3)m whose induced subgraph is an eps/(4L)-expander. When the
/// hypothesis fails the procedure still terminates and says so through
/// [`ConcentrationOutcome::HypothesisRefuted`].
pub fn concentrate(g: &Graph, m: usize, eps: Rational, cfg: &RunConfig) -> Result<(VertexSet, ConcentrationTrace)> {
    if m == 0 {
        return Err(Error::ZeroSize);
    }
    let n = g.n();
    let l = log_factor(n, m);
    let four_l = Rational::from_integer(4 * l as i64);
    let tau = eps / four_l;
    let half_eps = eps / Rational::from_integer(2);
    let mut trace = ConcentrationTrace {
        m,
        eps,
        log_factor: l,
        target_expansion: tau,
        reported_bound_div6: eps / Rational::from_integer(6 * l as i64),
        phi_first: None,
        y_sequence: Vec::new(),
        separator_sizes: Vec::new(),
        deltas: Vec::new(),
        chosen_index: None,
        result: g.vertices(),
        outcome: ConcentrationOutcome::WholeGraph,
        certified_h_half: None,
        mode: Evidence::Exact,
    };

    let first = best_cut(g, 1, n / 2, cfg)?;
    let y1 = match first {
        Some(cut) if cut.phi < half_eps => {
            trace.mode = cut.mode;
            trace.phi_first = Some(cut.phi);
            cut.side
        }
        Some(cut) if cut.mode == Evidence::Heuristic => {
            return Err(Error::Inconclusive(format!(
                "sweep found no set below φ = {} to start from, and cannot certify the whole graph",
                rational::format(&half_eps)
            )));
        }
        None if n / 2 > 0 && !cfg.use_exact(n)? => {
            return Err(Error::Inconclusive("sweep produced no candidate sets".into()));
        }
        _ => {
            trace.certified_h_half = first.map(|c| c.phi);
            return Ok((trace.result.clone(), trace));
        }
    };

    let mut y = y1;
    trace.y_sequence.push(y.clone());
    while y.len() > m {
        let sub = graph::induced_subgraph(g, &y)?;
        match build_separator(&sub.graph, tau, cfg)? {
            SeparatorOutcome::Expander(w) => {
                trace.chosen_index = Some(trace.y_sequence.len() - 1);
                trace.result = sub.lift(&w.vertices, n);
                trace.outcome = ConcentrationOutcome::Extracted;
                trace.certified_h_half = w.h_half;
                break;
            }
            SeparatorOutcome::Separator(cert) => {
                trace.mode = trace.mode.and(cert.mode);
                let a = sub.lift(&cert.part_a, n);
                let b = sub.lift(&cert.part_b, n);
                let next = pick_side(g, &y, a, b);
                trace.separator_sizes.push(cert.s_edges.len());
                trace
                    .deltas
                    .push(Rational::new(cert.s_edges.len() as i64, next.len() as i64));
                y = next;
                trace.y_sequence.push(y.clone());
            }
        }
    }
    if trace.outcome != ConcentrationOutcome::Extracted {
        trace.outcome = ConcentrationOutcome::HypothesisRefuted;
        trace.result = y;
    }
    if trace.outcome == ConcentrationOutcome::Extracted
        && trace.certified_h_half.is_none()
        && trace.result.len() <= cfg.exact_threshold
        && trace.result.len() > 1
    {
        let sub = graph::induced_subgraph(g, &trace.result)?;
        trace.certified_h_half = graph::is_epsilon_expander_exact(&sub.graph, tau, cfg)?.h_half;
    }
    Ok((trace.result.clone(), trace))
}

impl ConcentrationTrace {
    /// Re-checks the size ledger, the δ ledger and, when feasible, the
    /// expansion of the result.
    pub fn validate(&self, g: &Graph, cfg: &RunConfig) -> std::result::Result<(), String> {
        let steps = self.deltas.len();
        if self.y_sequence.len() != steps + usize::from(!self.y_sequence.is_empty()) {
            return Err("trace lengths disagree".into());
        }
        for (i, pair) in self.y_sequence.windows(2).enumerate() {
            let (big, small) = (pair[0].len(), pair[1].len());
            if 3 * small < big || 3 * small > 2 * big || !pair[1].is_subset(&pair[0]) {
                return Err(format!("step {i}: {small} is not a balanced part of {big}"));
            }
            let delta = Rational::new(self.separator_sizes[i] as i64, small as i64);
            if delta != self.deltas[i] {
                return Err(format!("step {i}: δ mismatch"));
            }
        }
        if steps > self.log_factor as usize {
            return Err(format!("{steps} descent steps exceed L = {}", self.log_factor));
        }
        if let (Some(first), Some(last)) = (self.y_sequence.first(), self.y_sequence.last()) {
            // φ(Y_last) ≤ φ(Y_1) + Σ δ_i
            let total: Rational = self.deltas.iter().copied().sum();
            if graph::phi(g, last) > graph::phi(g, first) + total {
                return Err("telescoping inequality fails".into());
            }
            if Some(graph::phi(g, first)) != self.phi_first {
                return Err("recorded φ(Y_1) is wrong".into());
            }
        }
        match self.outcome {
            ConcentrationOutcome::HypothesisRefuted => {
                if self.result.len() > self.m || graph::phi(g, &self.result) >= self.eps {
                    return Err("refutation set is not a small sparse set".into());
                }
            }
            ConcentrationOutcome::WholeGraph | ConcentrationOutcome::Extracted => {
                let level = if self.outcome == ConcentrationOutcome::WholeGraph {
                    self.eps / Rational::from_integer(2)
                } else {
                    self.target_expansion
                };
                if 3 * self.result.len() <= 2 * self.m.min(g.n()) && self.outcome == ConcentrationOutcome::Extracted {
                    return Err("extracted set is not larger than (2/3)m".into());
                }
                if self.result.len() <= cfg.exact_threshold {
                    let sub = graph::induced_subgraph(g, &self.result).map_err(|e| e.to_string())?;
                    let check = graph::is_epsilon_expander_exact(&sub.graph, level, cfg).map_err(|e| e.to_string())?;
                    if !check.is_expander {
                        return Err("result is not an expander at the claimed level".into());
                    }
                } else if self.outcome == ConcentrationOutcome::WholeGraph {
                    return Err("whole-graph outcome on a graph too large to certify".into());
                }
            }
        }
        Ok(())
    }
}
