//! Benchmark inputs shared by the criterion targets.

use rmatrix_core::belavindrinfeld::r_cg;
use rmatrix_core::lie::TwoTensor;

/// Cremmer-Gervais r-matrices of increasing size.
pub fn cg_series() -> Vec<((usize, usize), TwoTensor)> {
    [(1, 4), (2, 5), (3, 7), (4, 9), (5, 11)]
        .into_iter()
        .map(|(i, n)| ((i, n), r_cg(i, n).expect("coprime")))
        .collect()
}
