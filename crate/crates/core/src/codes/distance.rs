use rayon::prelude::*;

use super::{rank_k, CodeParams, CssCode, DistanceMode, ParityCheckMatrix};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Echelon};

/// Minimum distance; `mode` says whether `d` is exact or only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distance {
    pub d: usize,
    pub mode: DistanceMode,
}

/// Minimum weight of a nonzero codeword of `ker h`.
///
/// Exact by enumerating all `2^k` codewords when `k <= cfg.k_max`; otherwise
/// by enumerating low-weight vectors until a work budget of
/// `2^max(k_max, 16)` candidates runs out.
pub fn distance(h: &ParityCheckMatrix, cfg: &RunConfig) -> Result<Distance> {
    let (_, k) = rank_k(h);
    if k == 0 {
        return Err(Error::NoCodewords);
    }
    if k <= cfg.k_max {
        let basis = h.generator_basis();
        let d = min_weight_in_span(&basis, h.n(), &|_| true).expect("k >= 1 gives a nonzero codeword");
        return Ok(Distance {
            d,
            mode: DistanceMode::Exact,
        });
    }
    let columns = columns_of(h);
    Ok(low_weight_search(h.n(), search_budget(cfg), |support| {
        syndrome_zero(&columns, support)
    }))
}

/// `[[n, k, d]]` of a CSS code. `d` is the minimum weight over
/// `ker hz \ rowspace hx` and `ker hx \ rowspace hz`; it is 0 when `k` is 0.
pub fn css_params(code: &CssCode, cfg: &RunConfig) -> Result<CodeParams> {
    let code = CssCode::new(code.hx.clone(), code.hz.clone())?;
    let n = code.n();
    let ex = Echelon::new(code.hx.rows(), n);
    let ez = Echelon::new(code.hz.rows(), n);
    let k = n - ex.rank() - ez.rank();
    if k == 0 {
        return Ok(CodeParams {
            n,
            k,
            d: 0,
            d_mode: DistanceMode::Exact,
        });
    }
    let ker_z = ez.kernel_basis();
    let ker_x = ex.kernel_basis();
    if ker_z.len() <= cfg.k_max && ker_x.len() <= cfg.k_max {
        let dx = min_weight_in_span(&ker_z, n, &|v| !ex.contains(v));
        let dz = min_weight_in_span(&ker_x, n, &|v| !ez.contains(v));
        let d = dx.into_iter().chain(dz).min().expect("k >= 1 gives a logical operator");
        return Ok(CodeParams {
            n,
            k,
            d,
            d_mode: DistanceMode::Exact,
        });
    }
    let cols_z = columns_of(&code.hz);
    let cols_x = columns_of(&code.hx);
    let found = low_weight_search(n, search_budget(cfg), |support| {
        let logical = |cols: &[BitVec], stabilizers: &Echelon| {
            syndrome_zero(cols, support) && !stabilizers.contains(&BitVec::from_support(n, support.iter().copied()))
        };
        logical(&cols_z, &ex) || logical(&cols_x, &ez)
    });
    Ok(CodeParams {
        n,
        k,
        d: found.d,
        d_mode: found.mode,
    })
}

fn search_budget(cfg: &RunConfig) -> u64 {
    1u64 << cfg.k_max.max(16)
}

fn columns_of(h: &ParityCheckMatrix) -> Vec<BitVec> {
    let mut cols = vec![BitVec::zeros(h.num_checks()); h.n()];
    for (c, row) in h.rows().iter().enumerate() {
        for b in row.support() {
            cols[b].set(c, true);
        }
    }
    cols
}

fn syndrome_zero(columns: &[BitVec], support: &[usize]) -> bool {
    let mut s = columns[support[0]].clone();
    for &b in &support[1..] {
        s.xor_assign(&columns[b]);
    }
    s.is_zero()
}

/// Smallest weight among nonzero vectors of `span(basis)` accepted by `accept`.
/// `accept` is only consulted for vectors lighter than the best found so far.
fn min_weight_in_span(basis: &[BitVec], n: usize, accept: &(dyn Fn(&BitVec) -> bool + Sync)) -> Option<usize> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let top = if k >= 16 { 6 } else { 0 };
    let low = k - top;
    (0u64..1 << top)
        .into_par_iter()
        .filter_map(|prefix| {
            let mut cur = BitVec::zeros(n);
            for (i, v) in basis[low..].iter().enumerate() {
                if prefix >> i & 1 == 1 {
                    cur.xor_assign(v);
                }
            }
            let mut best: Option<usize> = None;
            let mut consider = |v: &BitVec| {
                let w = v.weight();
                if w > 0 && best.is_none_or(|b| w < b) && accept(v) {
                    best = Some(w);
                }
            };
            consider(&cur);
            for i in 1u64..1 << low {
                cur.xor_assign(&basis[i.trailing_zeros() as usize]);
                consider(&cur);
            }
            best
        })
        .min()
}

/// Scans supports of weight 1, 2, ... in lexicographic order. A hit at weight
/// `w` is exact; exhausting `budget` candidates during weight `w` proves only
/// `d >= w`.
fn low_weight_search(n: usize, budget: u64, mut hit: impl FnMut(&[usize]) -> bool) -> Distance {
    let mut spent = 0u64;
    for w in 1..=n {
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            if spent >= budget {
                return Distance {
                    d: w,
                    mode: DistanceMode::LowerBound,
                };
            }
            spent += 1;
            if hit(&support) {
                return Distance {
                    d: w,
                    mode: DistanceMode::Exact,
                };
            }
            let Some(i) = (0..w).rev().find(|&i| support[i] < n - w + i) else {
                break;
            };
            support[i] += 1;
            for j in i + 1..w {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    unreachable!("the all-ones vector or an earlier hit ends the scan when k >= 1")
}
