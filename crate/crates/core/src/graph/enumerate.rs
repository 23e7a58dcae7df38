// Exhaustive subset scan behind every exact expansion quantity.
//
// Subsets are visited in Gray-code order so each step flips one vertex and the
// boundary size updates in O(1) from the adjacency masks. The top bits are
// fixed per chunk so chunks can run in parallel; the reduction uses a total
// order, which keeps the winner independent of scheduling.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::Graph;

pub(crate) struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u32>,
}

impl MaskGraph {
    pub(crate) fn new(g: &Graph) -> Self {
        assert!(g.n() <= 63, "mask enumeration supports at most 63 vertices");
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let deg = (0..g.n()).map(|v| g.degree(v) as u32).collect();
        MaskGraph { n: g.n(), adj, deg }
    }

    fn boundary(&self, mask: u64) -> u32 {
        let mut total = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (self.adj[v] & !mask).count_ones();
        }
        total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SubsetCandidate {
    pub boundary: u32,
    pub size: u32,
    pub mask: u64,
}

impl SubsetCandidate {
    /// φ ascending, then size ascending, then sorted member list ascending.
    pub(crate) fn rank(&self, other: &Self) -> Ordering {
        let lhs = self.boundary as u64 * other.size as u64;
        let rhs = other.boundary as u64 * self.size as u64;
        lhs.cmp(&rhs)
            .then(self.size.cmp(&other.size))
            .then_with(|| lex_cmp(self.mask, other.mask))
    }
}

// Equal-size sets: the one holding the smallest element of the symmetric
// difference comes first.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        Ordering::Equal
    } else if a & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn keep_best(best: Option<SubsetCandidate>, cand: SubsetCandidate) -> Option<SubsetCandidate> {
    match best {
        Some(b) if b.rank(&cand) != Ordering::Greater => Some(b),
        _ => Some(cand),
    }
}

fn scan_chunk(g: &MaskGraph, high: u64, low_bits: usize, lo: u32, hi: u32) -> Option<SubsetCandidate> {
    let mut cur = high;
    let mut b = g.boundary(cur);
    let mut best = None;
    let total: u64 = 1 << low_bits;
    for i in 0..total {
        if i > 0 {
            let v = i.trailing_zeros() as usize;
            let bit = 1u64 << v;
            if cur & bit != 0 {
                cur &= !bit;
                b = b + 2 * (g.adj[v] & cur).count_ones() - g.deg[v];
            } else {
                b = b + g.deg[v] - 2 * (g.adj[v] & cur).count_ones();
                cur |= bit;
            }
        }
        let size = cur.count_ones();
        if size >= lo && size <= hi {
            best = keep_best(
                best,
                SubsetCandidate {
                    boundary: b,
                    size,
                    mask: cur,
                },
            );
        }
    }
    best
}

/// Minimum-φ subset with `lo <= |U| <= hi` under the witness tie-break.
pub(crate) fn min_phi_in_range(g: &MaskGraph, lo: usize, hi: usize) -> Option<SubsetCandidate> {
    let lo = lo.max(1) as u32;
    let hi = hi.min(g.n) as u32;
    if g.n == 0 || lo > hi {
        return None;
    }
    let high_bits = if g.n >= 16 { 6 } else { 0 };
    let low_bits = g.n - high_bits;
    let chunks: Vec<u64> = (0..1u64 << high_bits).map(|h| h << low_bits).collect();
    chunks
        .into_par_iter()
        .map(|high| scan_chunk(g, high, low_bits, lo, hi))
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if x.rank(&y) == Ordering::Greater { y } else { x }),
                (x, None) => x,
                (None, y) => y,
            },
        )
}
