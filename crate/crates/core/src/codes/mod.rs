//! Classical and CSS codes over GF(2): parameters, distance, and the graphs
//! derived from a choice of checks.

pub mod alist;
mod distance;
pub mod ldpc;
pub mod library;

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::gf2::{self, BitVec};
use crate::graph::{Edge, Graph};

pub use distance::{css_params, distance, Distance};

/// Checks of a classical code on `n` bits; the code is the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    n: usize,
    rows: Vec<BitVec>,
}

impl ParityCheckMatrix {
    pub fn new(n: usize, rows: Vec<BitVec>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ShapeMismatch("a code needs at least one bit".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeMismatch(format!(
                    "check {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row.is_zero() {
                return Err(Error::ShapeMismatch(format!("check {i} is empty")));
            }
        }
        Ok(ParityCheckMatrix { n, rows })
    }

    pub fn from_supports<I, S>(n: usize, supports: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        let mut rows = Vec::new();
        for support in supports {
            let support: Vec<usize> = support.into_iter().collect();
            if let Some(&b) = support.iter().find(|&&b| b >= n) {
                return Err(Error::ShapeMismatch(format!("bit {b} outside 0..{n}")));
            }
            rows.push(BitVec::from_support(n, support));
        }
        Self::new(n, rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_checks(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn support(&self, check: usize) -> Vec<usize> {
        self.rows[check].support().collect()
    }

    pub fn max_check_weight(&self) -> usize {
        self.rows.iter().map(BitVec::weight).max().unwrap_or(0)
    }

    /// Number of checks touching each bit.
    pub fn bit_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for row in &self.rows {
            row.support().for_each(|b| deg[b] += 1);
        }
        deg
    }

    pub fn is_codeword(&self, x: &BitVec) -> bool {
        self.rows.iter().all(|r| !r.dot(x))
    }

    /// Basis of the code (the kernel of the checks).
    pub fn generator_basis(&self) -> Vec<BitVec> {
        gf2::Echelon::new(&self.rows, self.n).kernel_basis()
    }

    pub fn connectivity_graph(&self) -> Graph {
        connectivity_graph(self.n, [self])
    }

    pub fn tanner_graph(&self) -> TannerGraph {
        let edges = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(c, row)| row.support().map(move |b| (b, self.n + c)))
            .collect::<Vec<_>>();
        TannerGraph {
            graph: Graph::from_edges(self.n + self.rows.len(), edges).expect("bit/check ids are in range"),
            bits: self.n,
            checks: self.rows.len(),
        }
    }
}

/// `(rank, k)` with `k = n - rank` over GF(2).
pub fn rank_k(h: &ParityCheckMatrix) -> (usize, usize) {
    let rank = gf2::rank(&h.rows, h.n);
    (rank, h.n - rank)
}

/// Bits sharing a check are adjacent; parallel contributions collapse.
pub fn connectivity_graph<'a, I>(n: usize, matrices: I) -> Graph
where
    I: IntoIterator<Item = &'a ParityCheckMatrix>,
{
    let mut edges: Vec<Edge> = Vec::new();
    for h in matrices {
        for row in &h.rows {
            let support: Vec<usize> = row.support().collect();
            for (i, &a) in support.iter().enumerate() {
                edges.extend(support[i + 1..].iter().map(|&b| (a, b)));
            }
        }
    }
    Graph::from_edges(n, edges).expect("supports are within 0..n")
}

/// Bipartite bit/check incidence graph: bit `b` is vertex `b`, check `c` is vertex `bits + c`.
#[derive(Debug, Clone)]
pub struct TannerGraph {
    pub graph: Graph,
    pub bits: usize,
    pub checks: usize,
}

impl TannerGraph {
    pub fn check_vertex(&self, check: usize) -> usize {
        self.bits + check
    }

    pub fn is_bit(&self, v: usize) -> bool {
        v < self.bits
    }
}

/// Quantum CSS code: X checks `hx`, Z checks `hz` on the same qubits.
#[derive(Debug, Clone)]
pub struct CssCode {
    pub hx: ParityCheckMatrix,
    pub hz: ParityCheckMatrix,
}

impl CssCode {
    pub fn new(hx: ParityCheckMatrix, hz: ParityCheckMatrix) -> Result<Self> {
        if hx.n() != hz.n() {
            return Err(Error::NotACode(format!("hx has {} qubits, hz has {}", hx.n(), hz.n())));
        }
        for (i, x) in hx.rows().iter().enumerate() {
            if let Some(j) = hz.rows().iter().position(|z| x.dot(z)) {
                return Err(Error::NotACode(format!("X check {i} anticommutes with Z check {j}")));
            }
        }
        Ok(CssCode { hx, hz })
    }

    pub fn n(&self) -> usize {
        self.hx.n()
    }

    pub fn connectivity_graph(&self) -> Graph {
        connectivity_graph(self.n(), [&self.hx, &self.hz])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMode {
    Exact,
    LowerBound,
}

/// `[n, k, d]` (or `[[n, k, d]]`); `d` is 0 when `k` is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_mode: DistanceMode,
}

pub fn classical_params(h: &ParityCheckMatrix, cfg: &RunConfig) -> Result<CodeParams> {
    let (_, k) = rank_k(h);
    if k == 0 {
        return Ok(CodeParams {
            n: h.n(),
            k,
            d: 0,
            d_mode: DistanceMode::Exact,
        });
    }
    let d = distance(h, cfg)?;
    Ok(CodeParams {
        n: h.n(),
        k,
        d: d.d,
        d_mode: d.mode,
    })
}

/// Checks split into classes of pairwise disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckClassing {
    pub classes: Vec<Vec<usize>>,
}

/// Greedy coloring of the check-conflict graph, visiting checks by
/// descending weight and then index.
pub fn class_checks(h: &ParityCheckMatrix) -> CheckClassing {
    let r = h.num_checks();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(h.rows[c].weight()), c));
    let mut color = vec![usize::MAX; r];
    for &c in &order {
        let mut used = Vec::new();
        for (other, &k) in color.iter().enumerate() {
            if k != usize::MAX && h.rows[c].intersects(&h.rows[other]) {
                used.push(k);
            }
        }
        color[c] = (0..).find(|k| !used.contains(k)).unwrap();
    }
    let count = color.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); count];
    for c in 0..r {
        classes[color[c]].push(c);
    }
    CheckClassing { classes }
}

impl CheckClassing {
    pub fn validate(&self, h: &ParityCheckMatrix) -> std::result::Result<(), String> {
        let mut seen = vec![false; h.num_checks()];
        for class in &self.classes {
            for (i, &a) in class.iter().enumerate() {
                if a >= seen.len() || std::mem::replace(&mut seen[a], true) {
                    return Err(format!("check {a} is foreign or repeated"));
                }
                if let Some(&b) = class[i + 1..].iter().find(|&&b| h.rows[a].intersects(&h.rows[b])) {
                    return Err(format!("checks {a} and {b} share a bit"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err("some check has no class".into());
        }
        Ok(())
    }
}
