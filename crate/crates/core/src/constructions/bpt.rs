use serde::Serialize;

use super::routing::{self, coords, route, snake_order, volume};
use super::{locality, Embedding, GridEmbedding, LiftedCode, Provenance};
use crate::codes::{class_checks, ParityCheckMatrix};
use crate::config::RunConfig;
use crate::error::{Error, Result};

/// A braided embedding of a code into `Z^D` together with its layout.
#[derive(Debug, Clone, Serialize)]
pub struct BptEmbedding {
    pub lifted: LiftedCode,
    /// Check classes with pairwise disjoint supports, one braiding layer each.
    pub classes: Vec<Vec<usize>>,
    pub layers: usize,
    /// Track length: every track crosses every column.
    pub delta: usize,
    /// Side lengths of the box holding one cell per track in each column.
    pub box_dims: Vec<usize>,
    /// Column on which each layer's checks act.
    pub layer_columns: Vec<usize>,
    /// Swap rounds spent routing each layer.
    pub routing_depths: Vec<usize>,
    /// A priori bound `(2r + 1)^D` on bits per ball.
    pub density_bound: usize,
}

/// Embeds `src` into `Z^dim` by braiding repetition-code tracks.
///
/// Each bit (and each padding cell of the `(dim-1)`-box) owns a track along
/// the last axis. For every check class the tracks are permuted by adjacent
/// swaps until each check's bits occupy consecutive snake-order cells, and
/// the check is then placed on that column. Consecutive cells of a track are
/// tied by weight-2 checks, so each track carries one source bit.
pub fn bpt_embed(src: &ParityCheckMatrix, dim: usize, cfg: &RunConfig) -> Result<BptEmbedding> {
    if dim < 2 {
        return Err(Error::InvalidDimension(dim));
    }
    let weight = src.max_check_weight();
    if weight > cfg.max_check_weight {
        return Err(Error::TooDense(format!(
            "check weight {weight} > {}",
            cfg.max_check_weight
        )));
    }
    let degree = src.bit_degrees().into_iter().max().unwrap_or(0);
    if degree > cfg.max_bit_degree {
        return Err(Error::TooDense(format!("bit degree {degree} > {}", cfg.max_bit_degree)));
    }
    let n = src.n();
    let dims = box_dims(n, dim - 1);
    let cells = volume(&dims);
    let snake = snake_order(&dims);
    let classes = class_checks(src).classes;

    // columns[t][p]: track occupying position p on column t.
    let mut track_at = vec![0; cells];
    for (track, &p) in snake.iter().enumerate() {
        track_at[p] = track;
    }
    let mut columns = vec![track_at.clone()];
    let mut layer_columns = Vec::new();
    let mut routing_depths = Vec::new();
    for class in &classes {
        let rank = target_ranks(src, class, cells);
        let dest: Vec<usize> = track_at.iter().map(|&t| snake[rank[t]]).collect();
        let rounds = route(&dims, &dest);
        for round in &rounds {
            routing::apply(&dims, &mut track_at, std::slice::from_ref(round));
            columns.push(track_at.clone());
        }
        routing_depths.push(rounds.len());
        layer_columns.push(columns.len() - 1);
    }

    let delta = columns.len();
    let cell_id = |t: usize, p: usize| t * cells + p;
    let mut position = vec![vec![0; cells]; delta];
    for (t, column) in columns.iter().enumerate() {
        for (p, &track) in column.iter().enumerate() {
            position[t][track] = p;
        }
    }

    let mut checks: Vec<Vec<usize>> = Vec::new();
    let mut provenance = Vec::with_capacity(delta * cells);
    let mut coordinates = Vec::with_capacity(delta * cells);
    for (t, column) in columns.iter().enumerate() {
        for (p, &track) in column.iter().enumerate() {
            let mut point: Vec<i64> = coords(p, &dims).into_iter().map(|x| x as i64).collect();
            point.push(t as i64);
            coordinates.push(point);
            if track < n {
                provenance.push(Provenance::Track { bit: track, column: t });
                if t + 1 < delta {
                    checks.push(vec![cell_id(t, p), cell_id(t + 1, position[t + 1][track])]);
                }
            } else {
                provenance.push(Provenance::Padding { column: t });
                checks.push(vec![cell_id(t, p)]);
            }
        }
    }
    for (class, &t) in classes.iter().zip(&layer_columns) {
        for &c in class {
            checks.push(src.support(c).into_iter().map(|b| cell_id(t, position[t][b])).collect());
        }
    }
    let code = ParityCheckMatrix::from_supports(delta * cells, checks)?;
    let r = weight.saturating_sub(1).div_ceil(2).max(1);
    let r_prime = locality::verify_grid(&code, &coordinates, r, usize::MAX).max_ball;
    let representatives = (0..n).map(|b| cell_id(0, position[0][b])).collect();
    Ok(BptEmbedding {
        lifted: LiftedCode {
            code,
            provenance,
            embedding: Embedding::Grid(GridEmbedding {
                dim,
                coords: coordinates,
                r,
                r_prime,
            }),
            representatives,
        },
        layers: classes.len(),
        classes,
        delta,
        box_dims: dims,
        layer_columns,
        routing_depths,
        density_bound: (2 * r + 1).pow(dim as u32),
    })
}

/// Smallest box with `axes` sides of at most `s = ⌈n^{1/axes}⌉` holding `n`
/// cells: start from the cube of side `s` and shrink trailing sides.
fn box_dims(n: usize, axes: usize) -> Vec<usize> {
    let mut s: usize = 1;
    while s.pow(axes as u32) < n {
        s += 1;
    }
    let mut dims = vec![s; axes];
    for axis in (0..axes).rev() {
        while dims[axis] > 1 && volume(&dims) / dims[axis] * (dims[axis] - 1) >= n {
            dims[axis] -= 1;
        }
    }
    dims
}

/// Snake rank of every track for one class: the checks' supports and the
/// remaining tracks as singletons, in ascending order of their least track.
fn target_ranks(src: &ParityCheckMatrix, class: &[usize], cells: usize) -> Vec<usize> {
    let mut covered = vec![false; cells];
    let mut groups: Vec<Vec<usize>> = class.iter().map(|&c| src.support(c)).collect();
    groups.iter().flatten().for_each(|&b| covered[b] = true);
    groups.extend((0..cells).filter(|&t| !covered[t]).map(|t| vec![t]));
    groups.sort_by_key(|g| g[0]);
    let mut rank = vec![0; cells];
    for (i, t) in groups.into_iter().flatten().enumerate() {
        rank[t] = i;
    }
    rank
}
