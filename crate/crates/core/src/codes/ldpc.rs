//! Seeded random regular LDPC codes from the configuration model.

use rand::seq::SliceRandom;

use super::ParityCheckMatrix;
use crate::error::{Error, Result};
use crate::generators::rng;

const MAX_ATTEMPTS: usize = 10_000;

/// A `(col_weight, row_weight)`-regular check matrix on `n` bits.
///
/// Bit sockets are shuffled into check slots; draws that place a bit twice
/// in one check are rejected and redrawn.
pub fn random_regular_ldpc(n: usize, col_weight: usize, row_weight: usize, seed: u64) -> Result<ParityCheckMatrix> {
    if n == 0 || col_weight == 0 || row_weight == 0 || row_weight > n || !(n * col_weight).is_multiple_of(row_weight) {
        return Err(Error::InvalidConfig(format!(
            "no ({col_weight}, {row_weight})-regular code on {n} bits"
        )));
    }
    let m = n * col_weight / row_weight;
    let mut rng = rng(seed);
    let mut sockets: Vec<usize> = (0..n).flat_map(|b| std::iter::repeat_n(b, col_weight)).collect();
    for _ in 0..MAX_ATTEMPTS {
        sockets.shuffle(&mut rng);
        let rows: Vec<Vec<usize>> = sockets.chunks(row_weight).map(|c| c.to_vec()).collect();
        let simple = rows.iter().all(|r| {
            let mut s = r.clone();
            s.sort_unstable();
            s.windows(2).all(|p| p[0] != p[1])
        });
        if simple {
            debug_assert_eq!(rows.len(), m);
            return ParityCheckMatrix::from_supports(n, rows);
        }
    }
    Err(Error::InvalidConfig(format!(
        "no simple ({col_weight}, {row_weight}) draw on {n} bits after {MAX_ATTEMPTS} attempts"
    )))
}
