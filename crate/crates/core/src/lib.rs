//! Certificate-producing algorithms relating graph expansion to code parameters.
//!
//! The crate covers four layers:
//!
//! * [`graph`]: simple graphs, boundaries, and exact small-scale expansion.
//! * [`cuts`]: sparse-cut oracles, balanced separators, expansion
//!   concentration and low-cost partitioning of expander-free graphs.
//! * [`codes`] / [`bounds`]: GF(2) codes, their connectivity and Tanner graphs,
//!   and the partition-based dichotomies on `(k, d)`.
//! * [`constructions`]: local embeddings of LDPC codes into lattices by
//!   repetition-code braiding, and lifting through graph immersions.
//!
//! Every inequality a result claims is carried as exact rationals so that
//! certificates can be re-validated independently of the code that built them.

pub mod bounds;
pub mod codes;
pub mod config;
pub mod constructions;
pub mod cuts;
pub mod error;
pub mod generators;
pub mod gf2;
pub mod graph;
pub mod json;
pub mod rational;

pub use config::{Evidence, Mode, RunConfig};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
