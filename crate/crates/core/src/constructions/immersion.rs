use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::{Edge, Graph};

/// Vertex-disjoint connected clusters `x[v]` for the vertices of a pattern
/// graph, and for each pattern edge `edges[e] = (u, w)` a host path `p[e]`
/// from a vertex of `x[u]` to a vertex of `x[w]` whose interior avoids every
/// cluster and every other path. Paths may share end vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Immersion {
    pub x: Vec<Vec<usize>>,
    pub p: Vec<Vec<usize>>,
    pub edges: Vec<Edge>,
}

impl Serialize for Immersion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Clusters<'a>(&'a [Vec<usize>]);
        impl Serialize for Clusters<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (v, x) in self.0.iter().enumerate() {
                    map.serialize_entry(&v.to_string(), x)?;
                }
                map.end()
            }
        }
        struct Paths<'a>(&'a Immersion);
        impl Serialize for Paths<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.p.len()))?;
                for ((u, w), path) in self.0.edges.iter().zip(&self.0.p) {
                    map.serialize_entry(&format!("{u}-{w}"), path)?;
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("X", &Clusters(&self.x))?;
        map.serialize_entry("P", &Paths(self))?;
        map.end()
    }
}

const RESERVE_PENALTY: usize = 3;
const EXIT_SLACK: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Use {
    Free,
    Cluster(usize),
    Path,
}

/// Greedy immersion of `h` into `host`.
///
/// Pattern vertices are placed one at a time, preferring those with the most
/// placed neighbours. Each is seeded at the free vertex closest (in total
/// free-path distance) to its placed neighbours' clusters, grown until it
/// has a spare exit beyond its degree (when one is in reach), and joined to those clusters by
/// cheapest paths through free vertices. Failed attempts restart with a
/// freshly seeded order, up to `cfg.retry_limit` attempts in total.
pub fn immerse(host: &Graph, h: &Graph, cfg: &RunConfig) -> Result<Immersion> {
    if !host.is_connected() {
        return Err(Error::InvalidConfig("the host graph must be connected".into()));
    }
    let attempts = cfg.retry_limit.max(1);
    if h.n() <= host.n() {
        for attempt in 0..attempts {
            let mut rng = rng(cfg
                .seed
                .wrapping_add(attempt as u64)
                .wrapping_mul(0x9e37_79b9_7f4a_7c15));
            if let Some(imm) = attempt_once(host, h, &mut rng, attempt > 0) {
                debug_assert_eq!(validate_immersion(host, h, &imm), Ok(()));
                return Ok(imm);
            }
        }
    }
    Err(Error::ImmersionFailure { attempts })
}

fn attempt_once(host: &Graph, h: &Graph, rng: &mut impl Rng, shuffle: bool) -> Option<Immersion> {
    let n = host.n();
    let mut state = vec![Use::Free; n];
    let mut x: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    let mut placed = vec![false; h.n()];
    let edge_index = |u: usize, w: usize| h.edges().binary_search(&(u.min(w), u.max(w))).unwrap();
    let mut p: Vec<Vec<usize>> = vec![Vec::new(); h.m()];
    let mut pending: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut tie: Vec<u64> = (0..h.n() as u64).map(|v| u64::MAX - v).collect();
    let mut host_order: Vec<usize> = (0..n).collect();
    if shuffle {
        tie.iter_mut().for_each(|t| *t = rng.gen());
        host_order.shuffle(rng);
    }

    for _ in 0..h.n() {
        let v = (0..h.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let done = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (done, h.degree(v), tie[v])
            })
            .unwrap();
        let anchors: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| placed[w]).collect();
        let seed = choose_seed(host, &state, &x, &anchors, &host_order)?;
        let cluster = grow_cluster(host, &mut state, seed, v, h)?;
        x[v] = cluster;
        placed[v] = true;
        for &w in &anchors {
            let tight: Vec<bool> = (0..h.n())
                .map(|u| placed[u] && pending[u] > 0 && exits(host, &state, &x[u], u, h) <= pending[u])
                .collect();
            let no_tight = vec![false; h.n()];
            let mut path = cheapest_free_path(host, &state, &x[v], v, w, &pending, &tight)
                .or_else(|| cheapest_free_path(host, &state, &x[v], v, w, &pending, &no_tight))?;
            pending[v] -= 1;
            pending[w] -= 1;
            let e = edge_index(v, w);
            if h.edges()[e].0 != v {
                path.reverse();
            }
            for &u in &path[1..path.len() - 1] {
                state[u] = Use::Path;
            }
            p[e] = path;
        }
    }
    Some(Immersion {
        x,
        p,
        edges: h.edges().to_vec(),
    })
}

/// Free vertex minimising the summed free-path distance to the anchors'
/// clusters; without anchors, the free vertex farthest from anything used.
fn choose_seed(host: &Graph, state: &[Use], x: &[Vec<usize>], anchors: &[usize], order: &[usize]) -> Option<usize> {
    let n = host.n();
    let score: Vec<Option<usize>> = if anchors.is_empty() {
        let used: Vec<usize> = (0..n).filter(|&u| state[u] != Use::Free).collect();
        if used.is_empty() {
            return order
                .iter()
                .copied()
                .max_by_key(|&u| (host.degree(u), std::cmp::Reverse(u)));
        }
        let dist = bfs(host, &used, |u| state[u] == Use::Free || used.contains(&u));
        dist.into_iter().map(|d| d.map(|d| usize::MAX - d)).collect()
    } else {
        let mut total = vec![Some(0usize); n];
        for &w in anchors {
            let dist = bfs(host, &x[w], |u| state[u] == Use::Free || x[w].contains(&u));
            for u in 0..n {
                total[u] = match (total[u], dist[u]) {
                    (Some(t), Some(d)) => Some(t + d),
                    _ => None,
                };
            }
        }
        total
    };
    order
        .iter()
        .copied()
        .filter(|&u| state[u] == Use::Free)
        .filter_map(|u| score[u].map(|s| (s, u)))
        .min_by_key(|&(s, _)| s)
        .map(|(_, u)| u)
}

/// Grows a connected cluster from `seed` over free vertices until it has
/// `deg_h(v) + EXIT_SLACK` distinct exits: free neighbours, or neighbouring
/// clusters of pattern neighbours.
fn grow_cluster(host: &Graph, state: &mut [Use], seed: usize, v: usize, h: &Graph) -> Option<Vec<usize>> {
    let need = h.degree(v) + EXIT_SLACK;
    let mut cluster = vec![seed];
    state[seed] = Use::Cluster(v);
    loop {
        let current = exits(host, state, &cluster, v, h);
        if current >= need {
            return Some(cluster);
        }
        let next = cluster
            .iter()
            .flat_map(|&a| host.neighbors(a))
            .copied()
            .filter(|&b| state[b] == Use::Free)
            .max_by_key(|&b| {
                let gain = host.neighbors(b).iter().filter(|&&c| state[c] == Use::Free).count();
                (gain, Reverse(b))
            });
        match next {
            Some(b) => {
                state[b] = Use::Cluster(v);
                cluster.push(b);
                if current >= h.degree(v) && exits(host, state, &cluster, v, h) <= current {
                    // The spare exit is out of reach here; keep what suffices.
                    state[b] = Use::Free;
                    cluster.pop();
                    return Some(cluster);
                }
            }
            None if current >= h.degree(v) => return Some(cluster),
            None => {
                cluster.iter().for_each(|&a| state[a] = Use::Free);
                return None;
            }
        }
    }
}

fn exits(host: &Graph, state: &[Use], cluster: &[usize], v: usize, h: &Graph) -> usize {
    let mut seen: Vec<usize> = Vec::new();
    let mut count = 0;
    for &a in cluster {
        for &b in host.neighbors(a) {
            match state[b] {
                Use::Free if !seen.contains(&b) => {
                    seen.push(b);
                    count += 1;
                }
                Use::Cluster(w) if w != v && h.has_edge(v, w) && !seen.contains(&(usize::MAX - w)) => {
                    seen.push(usize::MAX - w);
                    count += 1;
                }
                _ => {}
            }
        }
    }
    count
}

/// Cheapest host path from `from` to the cluster of pattern vertex `w`
/// whose interior is free. Entering a free vertex costs 1, plus
/// `RESERVE_PENALTY` when it borders a cluster other than the two endpoints
/// that still has edges to route, so paths avoid taking its exits.
fn cheapest_free_path(
    host: &Graph,
    state: &[Use],
    from: &[usize],
    v: usize,
    w: usize,
    pending: &[usize],
    tight: &[bool],
) -> Option<Vec<usize>> {
    let n = host.n();
    let borders = |b: usize, pred: &dyn Fn(usize) -> bool| {
        host.neighbors(b).iter().any(|&c| match state[c] {
            Use::Cluster(u) => u != v && u != w && pred(u),
            _ => false,
        })
    };
    let reserved = |b: usize| borders(b, &|u| pending[u] > 0);
    let blocked = |b: usize| borders(b, &|u| tight[u]);
    let mut cost = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    for &a in from {
        cost[a] = 0;
        parent[a] = a;
        heap.push(Reverse((0usize, a)));
    }
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(Reverse((c, a))) = heap.pop() {
        if c > cost[a] || best.is_some_and(|(bc, _, _)| c >= bc) {
            continue;
        }
        for &b in host.neighbors(a) {
            if state[b] == Use::Cluster(w) {
                if best.is_none_or(|(bc, _, _)| c < bc) {
                    best = Some((c, a, b));
                }
                continue;
            }
            if state[b] != Use::Free || blocked(b) {
                continue;
            }
            let step = 1 + if reserved(b) { RESERVE_PENALTY } else { 0 };
            if c + step < cost[b] {
                cost[b] = c + step;
                parent[b] = a;
                heap.push(Reverse((c + step, b)));
            }
        }
    }
    let (_, a, b) = best?;
    let mut path = vec![b, a];
    let mut cur = a;
    while parent[cur] != cur {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

fn bfs(host: &Graph, sources: &[usize], passable: impl Fn(usize) -> bool) -> Vec<Option<usize>> {
    let mut dist = vec![None; host.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(a) = queue.pop_front() {
        let da = dist[a].unwrap();
        for &b in host.neighbors(a) {
            if dist[b].is_none() && passable(b) {
                dist[b] = Some(da + 1);
                queue.push_back(b);
            }
        }
    }
    dist
}

/// Independent check of every clause of an immersion, using one ownership
/// map over the host vertices.
pub fn validate_immersion(host: &Graph, h: &Graph, imm: &Immersion) -> std::result::Result<(), String> {
    let n = host.n();
    if imm.x.len() != h.n() || imm.p.len() != h.m() || imm.edges != h.edges() {
        return Err("immersion does not match the pattern graph".into());
    }
    #[derive(Clone, Copy, PartialEq)]
    enum Owner {
        None,
        Cluster(usize),
        Interior(usize),
    }
    let mut owner = vec![Owner::None; n];
    for (v, cluster) in imm.x.iter().enumerate() {
        if cluster.is_empty() {
            return Err(format!("cluster {v} is empty"));
        }
        for &a in cluster {
            if a >= n {
                return Err(format!("cluster {v} uses foreign vertex {a}"));
            }
            if owner[a] != Owner::None {
                return Err(format!("vertex {a} is in two clusters"));
            }
            owner[a] = Owner::Cluster(v);
        }
        let reach = bfs(host, &cluster[..1], |u| owner[u] == Owner::Cluster(v));
        if cluster.iter().any(|&a| reach[a].is_none()) {
            return Err(format!("cluster {v} is not connected"));
        }
    }
    for (e, (&(u, w), path)) in imm.edges.iter().zip(&imm.p).enumerate() {
        if path.len() < 2 {
            return Err(format!("path {e} has fewer than two vertices"));
        }
        if path.iter().any(|&a| a >= n) {
            return Err(format!("path {e} leaves the host"));
        }
        if owner[path[0]] != Owner::Cluster(u) || owner[*path.last().unwrap()] != Owner::Cluster(w) {
            return Err(format!("path {e} does not join clusters {u} and {w}"));
        }
        if let Some(pair) = path.windows(2).find(|pair| !host.has_edge(pair[0], pair[1])) {
            return Err(format!("path {e} steps along a non-edge ({}, {})", pair[0], pair[1]));
        }
        for &a in &path[1..path.len() - 1] {
            if owner[a] != Owner::None {
                return Err(format!("interior vertex {a} of path {e} is already used"));
            }
            owner[a] = Owner::Interior(e);
        }
    }
    Ok(())
}
