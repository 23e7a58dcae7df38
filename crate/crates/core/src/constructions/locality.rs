//! The two locality clauses: every check fits in a ball of radius `r`, and
//! every ball of radius `r` holds at most `r'` bits.

use std::collections::VecDeque;

use serde::Serialize;

use crate::codes::ParityCheckMatrix;
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct LocalityReport {
    pub r: usize,
    pub r_prime: usize,
    /// Checks whose bits fit in no ball of radius `r`.
    pub far_checks: Vec<usize>,
    /// Centers of balls holding more than `r'` bits (at most 32 listed).
    pub dense_balls: Vec<Vec<i64>>,
    /// Largest number of bits found in one ball.
    pub max_ball: usize,
    pub ok: bool,
}

const LISTED: usize = 32;

/// L∞ metric on `Z^D`: a check fits iff every coordinate spans at most `2r`.
/// Every integer center within `r` of the occupied bounding box is scanned;
/// lattice points in any ball form a box covered by an integer-centered one.
pub fn verify_grid(code: &ParityCheckMatrix, coords: &[Vec<i64>], r: usize, r_prime: usize) -> LocalityReport {
    assert_eq!(coords.len(), code.n());
    let dim = coords.first().map_or(0, Vec::len);
    let r_i = r as i64;
    let far_checks = (0..code.num_checks())
        .filter(|&c| {
            let support = code.support(c);
            (0..dim).any(|axis| {
                let (lo, hi) = support.iter().fold((i64::MAX, i64::MIN), |(lo, hi), &b| {
                    (lo.min(coords[b][axis]), hi.max(coords[b][axis]))
                });
                hi - lo > 2 * r_i
            })
        })
        .collect();

    let lo: Vec<i64> = (0..dim)
        .map(|a| coords.iter().map(|c| c[a]).min().unwrap_or(0) - r_i)
        .collect();
    let ext: Vec<usize> = (0..dim)
        .map(|a| (coords.iter().map(|c| c[a]).max().unwrap_or(0) + r_i - lo[a] + 1) as usize)
        .collect();
    let volume: usize = ext.iter().product();
    let flat = |p: &[i64]| {
        p.iter()
            .zip(&lo)
            .zip(&ext)
            .fold(0usize, |acc, ((x, l), e)| acc * e + (x - l) as usize)
    };
    let mut counts = vec![0usize; volume];
    for c in coords {
        counts[flat(c)] += 1;
    }
    // Box sums by one sliding window per axis.
    let mut stride = volume;
    for &len in &ext {
        stride /= len;
        let mut next = vec![0usize; volume];
        for base in 0..volume {
            if !(base / stride).is_multiple_of(len) {
                continue;
            }
            let line = |i: usize| base + i * stride;
            let mut window: usize = (0..len.min(r + 1)).map(|i| counts[line(i)]).sum();
            for i in 0..len {
                next[line(i)] = window;
                if i + r + 1 < len {
                    window += counts[line(i + r + 1)];
                }
                if i >= r {
                    window -= counts[line(i - r)];
                }
            }
        }
        counts = next;
    }
    let max_ball = counts.iter().copied().max().unwrap_or(0);
    let dense_balls = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > r_prime)
        .take(LISTED)
        .map(|(i, _)| {
            let mut rest = i;
            let mut point = vec![0i64; dim];
            for a in (0..dim).rev() {
                point[a] = lo[a] + (rest % ext[a]) as i64;
                rest /= ext[a];
            }
            point
        })
        .collect::<Vec<_>>();
    finish(r, r_prime, far_checks, dense_balls, max_ball)
}

/// Shortest-path metric of `host`; bit `b` sits on vertex `vertex_of_bit[b]`.
/// Balls are centered at host vertices.
pub fn verify_host(
    code: &ParityCheckMatrix,
    host: &Graph,
    vertex_of_bit: &[usize],
    r: usize,
    r_prime: usize,
) -> LocalityReport {
    assert_eq!(vertex_of_bit.len(), code.n());
    let mut load = vec![0usize; host.n()];
    vertex_of_bit.iter().for_each(|&v| load[v] += 1);
    let mut dense_balls = Vec::new();
    let mut max_ball = 0;
    for v in 0..host.n() {
        let count: usize = ball(host, v, r).into_iter().map(|u| load[u]).sum();
        max_ball = max_ball.max(count);
        if count > r_prime && dense_balls.len() < LISTED {
            dense_balls.push(vec![v as i64]);
        }
    }
    let far_checks = (0..code.num_checks())
        .filter(|&c| {
            let vertices: Vec<usize> = code.support(c).iter().map(|&b| vertex_of_bit[b]).collect();
            !ball(host, vertices[0], r).into_iter().any(|center| {
                let near = ball(host, center, r);
                vertices.iter().all(|v| near.binary_search(v).is_ok())
            })
        })
        .collect();
    finish(r, r_prime, far_checks, dense_balls, max_ball)
}

/// Sorted vertices within distance `r` of `center`.
fn ball(g: &Graph, center: usize, r: usize) -> Vec<usize> {
    let mut dist = std::collections::HashMap::from([(center, 0usize)]);
    let mut queue = VecDeque::from([center]);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        if du == r {
            continue;
        }
        for &w in g.neighbors(u) {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(du + 1);
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<usize> = dist.into_keys().collect();
    out.sort_unstable();
    out
}

fn finish(
    r: usize,
    r_prime: usize,
    far_checks: Vec<usize>,
    dense_balls: Vec<Vec<i64>>,
    max_ball: usize,
) -> LocalityReport {
    let ok = far_checks.is_empty() && max_ball <= r_prime;
    LocalityReport {
        r,
        r_prime,
        far_checks,
        dense_balls,
        max_ball,
        ok,
    }
}
