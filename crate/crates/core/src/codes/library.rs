//! Small named codes used throughout the tests and examples.

use super::{CssCode, ParityCheckMatrix};

/// Checks `x_i + x_{i+1}` for the `[n, 1, n]` repetition code.
pub fn repetition(n: usize) -> ParityCheckMatrix {
    ParityCheckMatrix::from_supports(n, (1..n).map(|i| vec![i - 1, i])).unwrap()
}

/// One check over all `n` bits: the `[n, n-1, 2]` code.
pub fn single_parity(n: usize) -> ParityCheckMatrix {
    ParityCheckMatrix::from_supports(n, [(0..n).collect::<Vec<_>>()]).unwrap()
}

/// Hamming(7,4) with column `j` equal to the binary expansion of `j + 1`.
pub fn hamming74() -> ParityCheckMatrix {
    let rows = (0..3).map(|bit| (0..7).filter(move |j| (j + 1) >> bit & 1 == 1));
    ParityCheckMatrix::from_supports(7, rows).unwrap()
}

/// Block-diagonal checks of two codes side by side.
pub fn direct_sum(a: &ParityCheckMatrix, b: &ParityCheckMatrix) -> ParityCheckMatrix {
    let n = a.n() + b.n();
    let rows = (0..a.num_checks())
        .map(|c| a.support(c))
        .chain((0..b.num_checks()).map(|c| b.support(c).into_iter().map(|x| x + a.n()).collect()));
    ParityCheckMatrix::from_supports(n, rows).unwrap()
}

/// `[[4, 2, 2]]`: one weight-4 X check and one weight-4 Z check.
pub fn code_422() -> CssCode {
    let h = ParityCheckMatrix::from_supports(4, [vec![0, 1, 2, 3]]).unwrap();
    CssCode::new(h.clone(), h).unwrap()
}

/// Steane `[[7, 1, 3]]` from Hamming(7,4) in both sectors.
pub fn steane() -> CssCode {
    CssCode::new(hamming74(), hamming74()).unwrap()
}

/// Six bits with five weight-2 checks. The first three have disjoint
/// supports {0,4}, {1,5}, {2,3}; the last two, {0,1} and {2,4}, overlap
/// them, so the checks split into two classes.
pub fn braiding_toy() -> ParityCheckMatrix {
    ParityCheckMatrix::from_supports(6, [vec![0, 4], vec![1, 5], vec![2, 3], vec![0, 1], vec![2, 4]]).unwrap()
}
