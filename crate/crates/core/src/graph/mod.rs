//! Undirected simple graphs with dense integer ids, and the exact boundary and
//! expansion primitives everything else is built from.

mod enumerate;
mod expansion;
pub mod io;
mod vertex_set;

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

pub(crate) use enumerate::{min_phi_in_range, MaskGraph};
pub use expansion::{
    boundary, h_small_scale, induced_subgraph, is_epsilon_expander_exact, phi, BoundaryReport, ExpanderCheck,
    InducedSubgraph, SmallScaleExpansion,
};
pub use vertex_set::VertexSet;

pub type Edge = (usize, usize);

/// Undirected simple graph on vertices `0..n`.
///
/// Parallel edges handed to the constructor are collapsed; how many copies
/// were seen is kept in [`Graph::multiplicity`] but plays no role in any
/// expansion quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    multiplicity: BTreeMap<Edge, u32>,
}

fn normalize((u, v): Edge) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edges: Vec::new(),
            multiplicity: BTreeMap::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut counts: BTreeMap<Edge, u32> = BTreeMap::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::ForeignVertex(u));
            }
            if v >= n {
                return Err(Error::ForeignVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            *counts.entry(normalize((u, v))).or_default() += 1;
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_list = Vec::with_capacity(counts.len());
        let mut multiplicity = BTreeMap::new();
        for (&(u, v), &count) in &counts {
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_list.push((u, v));
            if count > 1 {
                multiplicity.insert((u, v), count);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edges: edge_list,
            multiplicity,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Number of parallel copies collapsed into edge `{u, v}` (0 if absent).
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        if !self.has_edge(u, v) {
            return 0;
        }
        self.multiplicity.get(&normalize((u, v))).copied().unwrap_or(1)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Hop distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices reachable from `sources` without crossing any edge in `removed`.
    pub fn reachable_avoiding(&self, sources: &VertexSet, removed: &[Edge]) -> VertexSet {
        let mut blocked: Vec<Edge> = removed.iter().copied().map(normalize).collect();
        blocked.sort_unstable();
        let mut seen = sources.clone();
        let mut queue: VecDeque<usize> = sources.iter().collect();
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen.contains(w) && blocked.binary_search(&normalize((u, w))).is_err() {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Edges with endpoints in different parts of `labels` (one label per vertex).
    pub fn crossing_edges(&self, labels: &[usize]) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| labels[u] != labels[v])
            .collect()
    }
}
