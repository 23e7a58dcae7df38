use std::collections::VecDeque;

use super::immersion::{validate_immersion, Immersion};
use super::{locality, Embedding, HostEmbedding, LiftedCode, Provenance};
use crate::codes::ParityCheckMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Turns an immersion of the Tanner graph of `src` into a code on the host
/// vertices.
///
/// * Each bit cluster is tied together by weight-2 checks along a spanning
///   tree, and each path's interior continues that repetition code.
/// * Each check cluster gets a spanning tree; the check at vertex `y` acts
///   on `y`, its tree children and the path ends attached to `y`, so `y`
///   carries the parity of its subtree. The root is frozen, which enforces
///   the source check.
/// * Host vertices outside the immersion are frozen.
///
/// Every check acts within distance 1 of one vertex.
pub fn lift_immersion(imm: &Immersion, src: &ParityCheckMatrix, host: &Graph) -> Result<LiftedCode> {
    let tanner = src.tanner_graph();
    validate_immersion(host, &tanner.graph, imm).map_err(Error::ShapeMismatch)?;
    let n = src.n();
    let mut provenance = vec![Provenance::Idle; host.n()];
    let mut checks: Vec<Vec<usize>> = Vec::new();

    for (v, cluster) in imm.x.iter().enumerate() {
        for &a in cluster {
            provenance[a] = if v < n {
                Provenance::BitCluster { bit: v }
            } else {
                Provenance::CheckCluster { check: v - n }
            };
        }
    }
    // attached[y]: path vertices feeding check-cluster vertex y.
    let mut attached: Vec<Vec<usize>> = vec![Vec::new(); host.n()];
    for (&(bit, check_vertex), path) in imm.edges.iter().zip(&imm.p) {
        let check = check_vertex - n;
        let end = path.len() - 1;
        for &a in &path[1..end] {
            provenance[a] = Provenance::Path { bit, check };
        }
        for pair in path[..end].windows(2) {
            checks.push(vec![pair[0], pair[1]]);
        }
        attached[path[end]].push(path[end - 1]);
    }
    for (v, cluster) in imm.x.iter().enumerate() {
        let parent = spanning_tree(host, cluster);
        if v < n {
            for (&a, &p) in cluster.iter().zip(&parent) {
                if p != a {
                    checks.push(vec![a, p]);
                }
            }
        } else {
            for (&y, &p) in cluster.iter().zip(&parent) {
                let children = cluster
                    .iter()
                    .zip(&parent)
                    .filter(|&(&c, &q)| q == y && c != y)
                    .map(|(&c, _)| c);
                let mut check: Vec<usize> = std::iter::once(y)
                    .chain(children)
                    .chain(attached[y].iter().copied())
                    .collect();
                check.sort_unstable();
                checks.push(check);
                if p == y {
                    checks.push(vec![y]);
                }
            }
        }
    }
    for (a, prov) in provenance.iter().enumerate() {
        if *prov == Provenance::Idle {
            checks.push(vec![a]);
        }
    }
    let code = ParityCheckMatrix::from_supports(host.n(), checks)?;
    let vertex_of_bit: Vec<usize> = (0..host.n()).collect();
    let r = 1;
    let r_prime = locality::verify_host(&code, host, &vertex_of_bit, r, usize::MAX).max_ball;
    Ok(LiftedCode {
        code,
        provenance,
        embedding: Embedding::Host(HostEmbedding {
            host: host.clone(),
            vertex_of_bit,
            r,
            r_prime,
        }),
        representatives: (0..n).map(|b| imm.x[b][0]).collect(),
    })
}

/// BFS parents inside `cluster` (same order), rooted at its first vertex.
fn spanning_tree(host: &Graph, cluster: &[usize]) -> Vec<usize> {
    let index = |a: usize| cluster.iter().position(|&c| c == a);
    let mut parent = vec![usize::MAX; cluster.len()];
    parent[0] = cluster[0];
    let mut queue = VecDeque::from([cluster[0]]);
    while let Some(a) = queue.pop_front() {
        for &b in host.neighbors(a) {
            if let Some(i) = index(b) {
                if parent[i] == usize::MAX {
                    parent[i] = a;
                    queue.push_back(b);
                }
            }
        }
    }
    parent
}
