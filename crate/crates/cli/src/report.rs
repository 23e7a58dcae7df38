//! Compact summaries of constructions; per-bit data goes to the CSV and
//! alist files instead.

use expander_ledger::constructions::{BptEmbedding, Immersion, LiftVerification, LiftedCode, Provenance};
use serde::Serialize;

#[derive(Serialize)]
pub struct BptReport {
    pub n_prime: usize,
    pub layers: usize,
    pub classes: Vec<Vec<usize>>,
    pub delta: usize,
    pub box_dims: Vec<usize>,
    pub layer_columns: Vec<usize>,
    pub routing_depths: Vec<usize>,
    pub density_bound: usize,
    pub verification: LiftVerification,
}

impl BptReport {
    pub fn new(e: &BptEmbedding, verification: LiftVerification) -> Self {
        BptReport {
            n_prime: e.lifted.n(),
            layers: e.layers,
            classes: e.classes.clone(),
            delta: e.delta,
            box_dims: e.box_dims.clone(),
            layer_columns: e.layer_columns.clone(),
            routing_depths: e.routing_depths.clone(),
            density_bound: e.density_bound,
            verification,
        }
    }
}

#[derive(Serialize)]
pub struct ImmersionReport {
    pub n_prime: usize,
    pub cluster_sizes: Vec<usize>,
    pub path_lengths: Vec<usize>,
    pub idle_vertices: usize,
    pub verification: LiftVerification,
}

impl ImmersionReport {
    pub fn new(imm: &Immersion, lifted: &LiftedCode, verification: LiftVerification) -> Self {
        ImmersionReport {
            n_prime: lifted.n(),
            cluster_sizes: imm.x.iter().map(Vec::len).collect(),
            path_lengths: imm.p.iter().map(Vec::len).collect(),
            idle_vertices: lifted.provenance.iter().filter(|p| **p == Provenance::Idle).count(),
            verification,
        }
    }
}
