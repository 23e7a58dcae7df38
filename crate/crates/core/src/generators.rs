//! Deterministic and seeded graph families used by tests, benches and the CLI.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: Vec<Edge>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced a valid edge list")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, edges)
}

/// `rows x cols` grid; vertex `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, edges)
}

/// Vertex-disjoint union, relabeling each part consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    build(offset, edges)
}

/// Cliques of the given sizes, consecutive ones joined by a single edge
/// between the last vertex of one and the first vertex of the next.
pub fn clique_chain(sizes: &[usize]) -> Graph {
    let parts: Vec<Graph> = sizes.iter().map(|&s| complete(s)).collect();
    let union = disjoint_union(&parts);
    let mut edges = union.edges().to_vec();
    let mut start = 0;
    for w in sizes.windows(2) {
        edges.push((start + w[0] - 1, start + w[0]));
        start += w[0];
    }
    build(union.n(), edges)
}

pub fn dumbbell(a: usize, b: usize) -> Graph {
    clique_chain(&[a, b])
}

/// `K_k` on ids `0..k` with a path of `tail` vertices hanging off vertex `k - 1`.
pub fn clique_with_tail(k: usize, tail: usize) -> Graph {
    let mut edges = complete(k).edges().to_vec();
    for i in 0..tail {
        edges.push((k + i - 1, k + i));
    }
    build(k + tail, edges)
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let mut rng = rng(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &c in &code {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    build(n, edges)
}

/// Random `d`-regular simple graph by the pairing model with restarts.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) || d >= n {
        return Err(Error::InvalidConfig(format!("no {d}-regular graph on {n} vertices")));
    }
    let mut rng = rng(seed);
    'attempt: for _ in 0..1000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(&mut rng);
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Ok(build(n, edges));
    }
    Err(Error::InvalidConfig(format!(
        "pairing model failed to produce a simple {d}-regular graph on {n} vertices"
    )))
}
