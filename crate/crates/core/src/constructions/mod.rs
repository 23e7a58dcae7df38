//! Local embeddings of classical codes: braiding into a lattice, and lifting
//! through an immersion of the Tanner graph into a host graph.

mod bpt;
mod immersion;
mod lift;
pub mod locality;
pub mod routing;

use std::fmt::Write as _;

use serde::Serialize;

use crate::codes::{classical_params, CodeParams, ParityCheckMatrix};
use crate::config::RunConfig;
use crate::error::Result;
use crate::gf2::{self, BitVec};
use crate::graph::Graph;

pub use bpt::{bpt_embed, BptEmbedding};
pub use immersion::{immerse, validate_immersion, Immersion};
pub use lift::lift_immersion;
pub use locality::LocalityReport;

/// Where a lifted bit came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    /// A cell of the track carrying a source bit.
    Track { bit: usize, column: usize },
    /// A cell of a padding track, frozen to zero.
    Padding { column: usize },
    /// A vertex of the cluster standing for a source bit.
    BitCluster { bit: usize },
    /// An interior vertex of the path from a bit cluster to a check cluster.
    Path { bit: usize, check: usize },
    /// A vertex of the cluster standing for a source check.
    CheckCluster { check: usize },
    /// A host vertex outside the immersion, frozen to zero.
    Idle,
}

/// Lattice points in `Z^D`, one per lifted bit, under the L∞ metric.
#[derive(Debug, Clone, Serialize)]
pub struct GridEmbedding {
    pub dim: usize,
    pub coords: Vec<Vec<i64>>,
    pub r: usize,
    pub r_prime: usize,
}

/// Lifted bit `b` sits on host vertex `vertex_of_bit[b]`, under the
/// shortest-path metric of the host.
#[derive(Debug, Clone, Serialize)]
pub struct HostEmbedding {
    #[serde(skip)]
    pub host: Graph,
    pub vertex_of_bit: Vec<usize>,
    pub r: usize,
    pub r_prime: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "metric", rename_all = "kebab-case")]
pub enum Embedding {
    Grid(GridEmbedding),
    Host(HostEmbedding),
}

impl Embedding {
    pub fn r(&self) -> usize {
        match self {
            Embedding::Grid(g) => g.r,
            Embedding::Host(h) => h.r,
        }
    }
}

/// A code on many more bits whose codewords restrict, on `representatives`,
/// exactly to the codewords of the source.
#[derive(Debug, Clone, Serialize)]
pub struct LiftedCode {
    #[serde(skip)]
    pub code: ParityCheckMatrix,
    pub provenance: Vec<Provenance>,
    pub embedding: Embedding,
    /// One lifted bit per source bit.
    pub representatives: Vec<usize>,
}

/// Both locality clauses for `code` at `(r, r')`.
pub fn verify_local_embedding(code: &ParityCheckMatrix, embedding: &Embedding) -> LocalityReport {
    match embedding {
        Embedding::Grid(g) => locality::verify_grid(code, &g.coords, g.r, g.r_prime),
        Embedding::Host(h) => locality::verify_host(code, &h.host, &h.vertex_of_bit, h.r, h.r_prime),
    }
}

/// Independent re-check of a lifted code against its source.
#[derive(Debug, Clone, Serialize)]
pub struct LiftVerification {
    pub source: CodeParams,
    pub lifted: CodeParams,
    pub k_matches: bool,
    /// The distance the construction promises.
    pub required_distance: usize,
    pub distance_ok: bool,
    /// Restriction to the representatives maps the lifted code onto the
    /// source code (checked on a basis).
    pub restriction_ok: bool,
    pub locality: LocalityReport,
    pub ok: bool,
}

impl LiftedCode {
    pub fn n(&self) -> usize {
        self.code.n()
    }

    /// Recomputes `(k', d')`, the restriction map and locality.
    ///
    /// `required_distance` is what the construction claims for `d'`. A
    /// lower-bound `d'` only passes if it already meets the claim.
    pub fn verify(
        &self,
        src: &ParityCheckMatrix,
        required_distance: usize,
        cfg: &RunConfig,
    ) -> Result<LiftVerification> {
        let source = classical_params(src, cfg)?;
        let lifted = classical_params(&self.code, cfg)?;
        let k_matches = source.k == lifted.k;
        let distance_ok = lifted.k == 0 || lifted.d >= required_distance;
        let restriction_ok = self.restriction_is_bijective(src);
        let locality = verify_local_embedding(&self.code, &self.embedding);
        let ok = k_matches && distance_ok && restriction_ok && locality.ok;
        Ok(LiftVerification {
            source,
            lifted,
            k_matches,
            required_distance,
            distance_ok,
            restriction_ok,
            locality,
            ok,
        })
    }

    /// The restriction of every lifted basis codeword must be a source
    /// codeword, and the restrictions must stay independent; equal dimensions
    /// then make the restriction a bijection onto the source code.
    fn restriction_is_bijective(&self, src: &ParityCheckMatrix) -> bool {
        if self.representatives.len() != src.n() {
            return false;
        }
        let basis = self.code.generator_basis();
        let restricted: Vec<BitVec> = basis
            .iter()
            .map(|v| BitVec::from_support(src.n(), (0..src.n()).filter(|&i| v.get(self.representatives[i]))))
            .collect();
        restricted.iter().all(|v| src.is_codeword(v))
            && gf2::rank(&restricted, src.n()) == basis.len()
            && basis.len() == src.generator_basis().len()
    }

    /// `bit_id,x0,...` rows for grid embeddings, `bit_id,host_vertex` rows
    /// for host embeddings.
    pub fn coordinates_csv(&self) -> String {
        let mut out = String::new();
        match &self.embedding {
            Embedding::Grid(g) => {
                let header: Vec<String> = (0..g.dim).map(|a| format!("x{a}")).collect();
                writeln!(out, "bit_id,{}", header.join(",")).unwrap();
                for (b, c) in g.coords.iter().enumerate() {
                    let cells: Vec<String> = c.iter().map(i64::to_string).collect();
                    writeln!(out, "{b},{}", cells.join(",")).unwrap();
                }
            }
            Embedding::Host(h) => {
                writeln!(out, "bit_id,host_vertex").unwrap();
                for (b, v) in h.vertex_of_bit.iter().enumerate() {
                    writeln!(out, "{b},{v}").unwrap();
                }
            }
        }
        out
    }
}
