// Sweep-cut heuristic: order vertices by an approximate Fiedler vector
// (power iteration on c·I − L with the constant vector projected out) and
// scan prefixes. BFS orders from the two extreme vertices are swept as well.

use std::cmp::Ordering;
use std::collections::VecDeque;

use rand::Rng;

use crate::config::RunConfig;
use crate::generators;
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub(crate) struct SweepCandidate {
    pub set: VertexSet,
    pub boundary: usize,
}

impl SweepCandidate {
    fn phi(&self) -> Rational {
        Rational::new(self.boundary as i64, self.set.len() as i64)
    }

    fn rank(&self, other: &Self) -> Ordering {
        self.phi()
            .cmp(&other.phi())
            .then_with(|| self.set.witness_cmp(&other.set))
    }
}

fn keep(best: &mut Option<SweepCandidate>, cand: SweepCandidate) {
    if best.as_ref().is_none_or(|b| cand.rank(b) == Ordering::Less) {
        *best = Some(cand);
    }
}

/// Approximate Fiedler vector of the connected graph `g`.
pub(crate) fn fiedler_vector(g: &Graph, cfg: &RunConfig) -> Vec<f64> {
    let n = g.n();
    let mut rng = generators::rng(cfg.seed ^ 0x5eed_f1ed);
    let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let shift = 2.0 * g.max_degree() as f64 + 1.0;
    let project = |x: &mut Vec<f64>| {
        let mean = x.iter().sum::<f64>() / n as f64;
        x.iter_mut().for_each(|v| *v -= mean);
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            x.iter_mut().for_each(|v| *v /= norm);
        }
    };
    project(&mut x);
    let mut next = vec![0.0; n];
    for _ in 0..cfg.sweep_iterations {
        for v in 0..n {
            let lap = g.degree(v) as f64 * x[v] - g.neighbors(v).iter().map(|&w| x[w]).sum::<f64>();
            next[v] = shift * x[v] - lap;
        }
        project(&mut next);
        let delta: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if delta < 1e-12 {
            break;
        }
    }
    x
}

fn bfs_order(g: &Graph, start: usize, members: &VertexSet) -> Vec<usize> {
    let mut seen = VertexSet::empty(g.n());
    seen.insert(start);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if members.contains(w) && !seen.contains(w) {
                seen.insert(w);
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    order
}

fn sweep_order(g: &Graph, order: &[usize], lo: usize, hi: usize, best: &mut Option<SweepCandidate>) {
    let mut set = VertexSet::empty(g.n());
    let mut boundary = 0usize;
    for (i, &v) in order.iter().enumerate() {
        let inside = g.neighbors(v).iter().filter(|&&w| set.contains(w)).count();
        boundary = boundary + g.degree(v) - 2 * inside;
        set.insert(v);
        let size = i + 1;
        if size > hi {
            break;
        }
        if size >= lo {
            keep(
                best,
                SweepCandidate {
                    set: set.clone(),
                    boundary,
                },
            );
        }
    }
}

/// Best sweep prefix with `lo <= |U| <= hi` over every component.
pub(crate) fn sweep_cut(g: &Graph, lo: usize, hi: usize, cfg: &RunConfig) -> Option<SweepCandidate> {
    let lo = lo.max(1);
    if lo > hi {
        return None;
    }
    let mut comps = g.components();
    let mut best = None;
    if comps.len() > 1 {
        // unions of whole components cost nothing
        comps.sort_by_key(|c| (c.len(), c[0]));
        let mut union = VertexSet::empty(g.n());
        for c in &comps {
            if union.len() + c.len() > hi {
                break;
            }
            c.iter().for_each(|&v| union.insert(v));
            if union.len() >= lo {
                keep(
                    &mut best,
                    SweepCandidate {
                        set: union.clone(),
                        boundary: 0,
                    },
                );
                break;
            }
        }
    }
    for comp in &comps {
        if comp.len() < 2 {
            continue;
        }
        let members = VertexSet::from_ids(g.n(), comp.iter().copied()).unwrap();
        let sub = crate::graph::induced_subgraph(g, &members).unwrap();
        let f = fiedler_vector(&sub.graph, cfg);
        let mut local: Vec<usize> = (0..comp.len()).collect();
        local.sort_by(|&a, &b| f[a].total_cmp(&f[b]).then(a.cmp(&b)));
        let ascending: Vec<usize> = local.iter().map(|&v| sub.original[v]).collect();
        let descending: Vec<usize> = ascending.iter().rev().copied().collect();
        let cap = hi.min(comp.len() - 1);
        sweep_order(g, &ascending, lo, cap, &mut best);
        sweep_order(g, &descending, lo, cap, &mut best);
        for start in [ascending[0], descending[0]] {
            sweep_order(g, &bfs_order(g, start, &members), lo, cap, &mut best);
        }
    }
    best
}
