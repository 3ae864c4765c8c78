//! Exact linear algebra over the rationals, just enough for rank checks.

use num_rational::BigRational;
use num_traits::Zero;

/// Rank of a dense row-major matrix by fraction-exact Gaussian elimination.
pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let delta = &factor * p;
                *entry -= delta;
            }
        }
        rank += 1;
    }
    rank
}
