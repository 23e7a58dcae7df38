//! Code-parameter bounds from partitions of the connectivity graph.
//!
//! A partition `V = A ⊔ B_1 ⊔ ... ⊔ B_t` (optionally `⊔ C_1 ⊔ ... ⊔ C_s` for
//! CSS codes) with no edge between distinct `B` blocks (or distinct `C`
//! blocks) forces `d ≤ max|B_i|` (quantum: `d ≤ max(max|B_i|, max|C_j|)`) or
//! `k ≤ |A|`. This module checks that disjunction on concrete partitions,
//! builds such partitions for graphs without large expanders, and pulls
//! expanders out of connectivity graphs whose `(k, d)` rule a partition out.

use serde::Serialize;

use crate::codes::CodeParams;
use crate::config::{Evidence, RunConfig};
use crate::cuts::{concentrate, partition_no_expander, partition_theorem, ConcentrationOutcome, PartitionCertificate};
use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, VertexSet};
use crate::rational::{self, Rational};

/// `A ⊔ B_1 ⊔ ... [⊔ C_1 ⊔ ...]` over the bits of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodePartition {
    pub a: VertexSet,
    pub b_blocks: Vec<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_blocks: Option<Vec<VertexSet>>,
}

impl CodePartition {
    /// Checks that the parts tile `V` and that no edge joins two distinct
    /// blocks of the same family.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut owner = vec![None; n];
        let families = std::iter::once(&self.b_blocks).chain(self.c_blocks.iter());
        let parts = std::iter::once((usize::MAX, usize::MAX, &self.a)).chain(
            families
                .enumerate()
                .flat_map(|(f, blocks)| blocks.iter().enumerate().map(move |(i, b)| (f, i, b))),
        );
        for (family, index, part) in parts {
            if part.universe() != n {
                return Err(Error::InvalidPartition(format!(
                    "a part is over {} vertices, not {n}",
                    part.universe()
                )));
            }
            for v in part.iter() {
                if owner[v].replace((family, index)).is_some() {
                    return Err(Error::InvalidPartition(format!("vertex {v} lies in two parts")));
                }
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!("vertex {v} lies in no part")));
        }
        for &(u, v) in g.edges() {
            let (fu, iu) = owner[u].unwrap();
            let (fv, iv) = owner[v].unwrap();
            if fu == fv && fu != usize::MAX && iu != iv {
                let name = if fu == 0 { "B" } else { "C" };
                return Err(Error::InvalidPartition(format!(
                    "edge ({u}, {v}) joins {name} blocks {iu} and {iv}"
                )));
            }
        }
        Ok(())
    }

    pub fn max_block(&self) -> usize {
        self.b_blocks
            .iter()
            .chain(self.c_blocks.iter().flatten())
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Only `d ≤ max block` holds.
    DistanceBranch,
    /// Only `k ≤ |A|` holds.
    RateBranch,
    Both,
    /// Neither holds: a counterexample to the partition bound.
    Violation,
}

impl Verdict {
    fn of(distance: bool, rate: bool) -> Verdict {
        match (distance, rate) {
            (true, true) => Verdict::Both,
            (true, false) => Verdict::DistanceBranch,
            (false, true) => Verdict::RateBranch,
            (false, false) => Verdict::Violation,
        }
    }
}

/// The concrete inequalities a partition-producing run certifies.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremBranches {
    pub m: usize,
    #[serde(with = "rational::serde_ratio")]
    pub eps: Rational,
    /// Blocks have fewer than `3m` vertices, so `d ≤ 3m` on the distance branch.
    pub distance_limit: usize,
    /// `k` limit on the rate branch: `2·C·eps·n`, or `4·(C_1·eps)(C_2·eps)·n` for CSS codes.
    #[serde(with = "rational::serde_ratio")]
    pub k_bound: Rational,
    pub distance_holds: bool,
    pub rate_holds: bool,
    /// One certificate per partition level, in the coordinates of the graph it ran on.
    pub levels: Vec<PartitionCertificate>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DichotomyReport {
    pub quantum: bool,
    pub params: CodeParams,
    pub partition: CodePartition,
    pub max_block: usize,
    pub a_size: usize,
    pub distance_holds: bool,
    pub rate_holds: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremBranches>,
}

/// Evaluates the partition bound for `params` against `p`.
///
/// `g` is the connectivity graph of the code. Returns a report whose
/// verdict is [`Verdict::Violation`] when neither branch holds.
pub fn check_partition_lemma(
    params: CodeParams,
    g: &Graph,
    p: &CodePartition,
    quantum: bool,
) -> Result<DichotomyReport> {
    if g.n() != params.n {
        return Err(Error::ShapeMismatch(format!(
            "graph has {} vertices, code has {} bits",
            g.n(),
            params.n
        )));
    }
    if !quantum && p.c_blocks.is_some() {
        return Err(Error::InvalidPartition(
            "C blocks are only meaningful for CSS codes".into(),
        ));
    }
    p.validate(g)?;
    let max_block = p.max_block();
    let a_size = p.a.len();
    let distance_holds = params.d <= max_block;
    let rate_holds = params.k <= a_size;
    Ok(DichotomyReport {
        quantum,
        params,
        partition: p.clone(),
        max_block,
        a_size,
        distance_holds,
        rate_holds,
        verdict: Verdict::of(distance_holds, rate_holds),
        theorem: None,
    })
}

fn endpoints(n: usize, edges: &[Edge]) -> VertexSet {
    let mut s = VertexSet::empty(n);
    for &(u, v) in edges {
        s.insert(u);
        s.insert(v);
    }
    s
}

fn strip(blocks: &[VertexSet], a: &VertexSet) -> Vec<VertexSet> {
    blocks
        .iter()
        .map(|b| b.difference(a))
        .filter(|b| !b.is_empty())
        .collect()
}

/// Partitions the connectivity graph of a code with no `eps`-expander on
/// `m` or more vertices and evaluates both branches of the resulting bound.
///
/// Classical: `A` is the set of endpoints of cut edges and the blocks lose
/// their `A` vertices. Quantum: the subgraph on those endpoints is
/// partitioned a second time; its blocks minus the new endpoints become the
/// `C` blocks and the new endpoints become `A`.
pub fn dichotomy(
    params: CodeParams,
    g: &Graph,
    m: usize,
    eps: Rational,
    quantum: bool,
    cfg: &RunConfig,
) -> Result<DichotomyReport> {
    let n = g.n();
    let first = partition_theorem(g, m, eps, cfg)?;
    let c1 = first
        .theorem
        .as_ref()
        .expect("partition_theorem records constants")
        .c_log_n;
    let a1 = endpoints(n, &first.crossing_edges);
    let b_blocks = strip(&first.blocks, &a1);
    let two_eps_n = Rational::from_integer(2) * eps * rational::from_int(n);

    let (partition, k_bound, levels) = if !quantum {
        let partition = CodePartition {
            a: a1,
            b_blocks,
            c_blocks: None,
        };
        (partition, c1 * two_eps_n, vec![first])
    } else {
        let sub = graph::induced_subgraph(g, &a1)?;
        let (a, c_blocks, c2, second) = if sub.graph.n() == 0 {
            (VertexSet::empty(n), Vec::new(), Rational::from_integer(0), None)
        } else {
            let second = match partition_theorem(&sub.graph, m, eps, cfg) {
                Err(Error::ExpanderObstruction { witness, certified }) => {
                    return Err(Error::ExpanderObstruction {
                        witness: sub.lift_ids(&witness),
                        certified,
                    })
                }
                other => other?,
            };
            let c2 = second
                .theorem
                .as_ref()
                .expect("partition_theorem records constants")
                .c_log_n;
            let local_a = endpoints(sub.graph.n(), &second.crossing_edges);
            let lifted: Vec<VertexSet> = strip(&second.blocks, &local_a).iter().map(|b| sub.lift(b, n)).collect();
            (sub.lift(&local_a, n), lifted, c2, Some(second))
        };
        let partition = CodePartition {
            a,
            b_blocks,
            c_blocks: Some(c_blocks),
        };
        let bound = Rational::from_integer(2) * c1 * c2 * eps * two_eps_n;
        (partition, bound, std::iter::once(first).chain(second).collect())
    };

    let mut report = check_partition_lemma(params, g, &partition, quantum)?;
    let distance_limit = 3 * m;
    report.theorem = Some(TheoremBranches {
        m,
        eps,
        distance_limit,
        k_bound,
        distance_holds: params.d <= distance_limit,
        rate_holds: rational::from_int(params.k) <= k_bound,
        levels,
    });
    Ok(report)
}

/// One extracted induced expander.
#[derive(Debug, Clone, Serialize)]
pub struct ExpanderCertificate {
    pub vertices: VertexSet,
    /// Expansion the extraction guarantees for `G[vertices]`.
    #[serde(with = "rational::serde_ratio")]
    pub target: Rational,
    /// Exact `h_{1/2}` of `G[vertices]` when it was computable; absent for one vertex.
    #[serde(with = "rational::serde_ratio_opt")]
    pub h_half: Option<Rational>,
    pub mode: Evidence,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtractionResult {
    pub quantum: bool,
    pub params: CodeParams,
    /// Every expander has at least this many vertices: `⌈d/3⌉`.
    pub min_size: usize,
    /// The partitioner runs at `⌊d/2⌋`, so its blocks are smaller than `d`.
    pub scale_m: usize,
    /// Cut level: `k/(4n)`, or `⌊√(k/(8n))⌋` to 1/1000 for CSS codes.
    #[serde(with = "rational::serde_ratio")]
    pub eps_prime: Rational,
    pub expanders: Vec<ExpanderCertificate>,
    pub total: usize,
    /// Smallest certified expansion among the expanders.
    #[serde(with = "rational::serde_ratio")]
    pub epsilon_achieved: Rational,
}

const SQRT_DENOM: i64 = 1000;

/// Removes induced expanders from the connectivity graph until they cover
/// at least `⌈k/2⌉` vertices.
///
/// Each round partitions the remaining graph at scale `⌊d/2⌋` and level
/// `eps'`. If that succeeds, the removed expanders, the cut endpoints and the
/// blocks form a partition whose `A` has fewer than `k` vertices and whose
/// blocks have fewer than `d`, contradicting the parameters; this is reported
/// as [`Error::TheoremViolation`]. Otherwise the obstruction is concentrated
/// into an expander with at least `⌈d/3⌉` vertices, which is removed.
pub fn extract_expanders(params: CodeParams, g: &Graph, quantum: bool, cfg: &RunConfig) -> Result<ExtractionResult> {
    let n = g.n();
    if n != params.n {
        return Err(Error::ShapeMismatch(format!(
            "graph has {} vertices, code has {} bits",
            n, params.n
        )));
    }
    let k = params.k;
    let d = params.d;
    let wanted = k.div_ceil(2);
    let eps_prime = if quantum {
        rational::sqrt_floor(&Rational::new(k as i64, 8 * n as i64), SQRT_DENOM)
    } else {
        Rational::new(k as i64, 4 * n as i64)
    };
    let mut result = ExtractionResult {
        quantum,
        params,
        min_size: d.div_ceil(3),
        scale_m: d / 2,
        eps_prime,
        expanders: Vec::new(),
        total: 0,
        epsilon_achieved: eps_prime,
    };
    if k == 0 {
        return Ok(result);
    }
    if d < 3 {
        // Blocks of one vertex already fall below d, and a single vertex is
        // vacuously an expander at any level.
        for v in 0..wanted {
            result.expanders.push(ExpanderCertificate {
                vertices: VertexSet::from_ids(n, [v])?,
                target: eps_prime,
                h_half: None,
                mode: Evidence::Exact,
            });
        }
        result.total = wanted;
        return Ok(result);
    }
    if eps_prime == Rational::from_integer(0) {
        return Err(Error::InvalidConfig(format!(
            "cut level rounds to zero at precision 1/{SQRT_DENOM}"
        )));
    }
    let scale_m = d / 2;
    let mut alive = g.vertices();
    while result.total < wanted {
        let region = find_obstruction(g, &alive, scale_m, eps_prime, quantum, cfg)?;
        let Some((region, certified)) = region else {
            return Err(Error::TheoremViolation(format!(
                "the graph minus {} extracted vertices partitions with |A| < k = {k} and blocks < d = {d}",
                result.total
            )));
        };
        let sub = graph::induced_subgraph(g, &region)?;
        let (local, trace) = concentrate(&sub.graph, scale_m, eps_prime, cfg)?;
        if trace.outcome == ConcentrationOutcome::HypothesisRefuted {
            let msg = "concentration refuted the expansion of a partition obstruction";
            return Err(if certified {
                Error::TheoremViolation(msg.into())
            } else {
                Error::Inconclusive(msg.into())
            });
        }
        let k_set = sub.lift(&local, n);
        if k_set.len() < result.min_size {
            return Err(Error::TheoremViolation(format!(
                "extracted expander has {} < ⌈d/3⌉ = {} vertices",
                k_set.len(),
                result.min_size
            )));
        }
        let mut h_half = trace.certified_h_half;
        if h_half.is_none() && k_set.len() > 1 && cfg.use_exact(k_set.len())? {
            let kg = graph::induced_subgraph(g, &k_set)?;
            h_half = graph::is_epsilon_expander_exact(&kg.graph, trace.target_expansion, cfg)?.h_half;
        }
        let mode = if certified { trace.mode } else { Evidence::Heuristic };
        result.epsilon_achieved = result.epsilon_achieved.min(h_half.unwrap_or(trace.target_expansion));
        result.total += k_set.len();
        alive = alive.difference(&k_set);
        result.expanders.push(ExpanderCertificate {
            vertices: k_set,
            target: trace.target_expansion,
            h_half,
            mode,
        });
    }
    Ok(result)
}

/// Region of `G[alive]` that the partitioner could not break up, or `None`
/// when the partition (both levels for CSS codes) completes.
fn find_obstruction(
    g: &Graph,
    alive: &VertexSet,
    m: usize,
    eps: Rational,
    quantum: bool,
    cfg: &RunConfig,
) -> Result<Option<(VertexSet, bool)>> {
    let n = g.n();
    let sub = graph::induced_subgraph(g, alive)?;
    let cert = match partition_no_expander(&sub.graph, m, eps, cfg) {
        Err(Error::ExpanderObstruction { witness, certified }) => {
            return Ok(Some((VertexSet::from_ids(n, sub.lift_ids(&witness))?, certified)))
        }
        other => other?,
    };
    if !quantum {
        return Ok(None);
    }
    let a1 = endpoints(sub.graph.n(), &cert.crossing_edges);
    let lifted_a1 = sub.lift(&a1, n);
    find_obstruction(g, &lifted_a1, m, eps, false, cfg)
}

impl ExtractionResult {
    /// Re-checks disjointness, sizes, the total and, where feasible, the
    /// exact expansion of each extracted set.
    pub fn validate(&self, g: &Graph, cfg: &RunConfig) -> std::result::Result<(), String> {
        let mut used = VertexSet::empty(g.n());
        for (i, e) in self.expanders.iter().enumerate() {
            if !e.vertices.is_disjoint(&used) {
                return Err(format!("expander {i} overlaps an earlier one"));
            }
            used = used.union(&e.vertices);
            if e.vertices.len() < self.min_size {
                return Err(format!(
                    "expander {i} has {} < {} vertices",
                    e.vertices.len(),
                    self.min_size
                ));
            }
            if e.vertices.len() > 1 && cfg.use_exact(e.vertices.len()).map_err(|x| x.to_string())? {
                let sub = graph::induced_subgraph(g, &e.vertices).map_err(|x| x.to_string())?;
                let exact = graph::is_epsilon_expander_exact(&sub.graph, e.target, cfg).map_err(|x| x.to_string())?;
                if exact.h_half != e.h_half {
                    return Err(format!(
                        "expander {i} reports h = {:?}, recomputed {:?}",
                        e.h_half, exact.h_half
                    ));
                }
                if !exact.is_expander {
                    return Err(format!("expander {i} falls below its target expansion"));
                }
            }
        }
        if used.len() != self.total {
            return Err("total does not match the expanders".into());
        }
        if self.total < self.params.k.div_ceil(2) {
            return Err(format!("total {} < ⌈k/2⌉", self.total));
        }
        Ok(())
    }
}
