//! Gaussian elimination over `Q(w)`.

use crate::cyclotomic::{CycContext, CycScalar};

fn eliminate(ctx: &CycContext, mut rows: Vec<Vec<CycScalar>>) -> (usize, CycScalar) {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut det = ctx.one();
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            det = ctx.zero();
            continue;
        };
        if pivot != rank {
            rows.swap(pivot, rank);
            det = -det;
        }
        let inv = rows[rank][col].inverse().expect("nonzero pivot in a field");
        det *= &rows[rank][col];
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (c, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *c -= &factor * p;
            }
        }
        rank += 1;
        if rank == n_rows {
            break;
        }
    }
    (rank, det)
}

/// Rank of a matrix given as rows.
pub fn rank(ctx: &CycContext, rows: Vec<Vec<CycScalar>>) -> usize {
    eliminate(ctx, rows).0
}

/// Determinant of a square matrix.
pub fn determinant(ctx: &CycContext, rows: Vec<Vec<CycScalar>>) -> CycScalar {
    assert!(rows.iter().all(|r| r.len() == rows.len()), "square matrix required");
    if rows.is_empty() {
        return ctx.one();
    }
    // a column without pivot has already zeroed det
    eliminate(ctx, rows).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_determinant() {
        let c = CycContext::new(3).unwrap();
        let i = |k: i64| c.from_int(k);
        let m = vec![vec![i(1), i(2)], vec![i(2), i(4)]];
        assert_eq!(rank(&c, m.clone()), 1);
        assert!(determinant(&c, m).is_zero());
        let m = vec![vec![i(0), i(1)], vec![i(1), i(0)]];
        assert_eq!(determinant(&c, m), i(-1));
        let w = c.omega();
        // Vandermonde in 1, w: det = w - 1
        let v = vec![vec![i(1), i(1)], vec![i(1), w.clone()]];
        assert_eq!(determinant(&c, v), w - i(1));
        assert_eq!(rank(&c, vec![vec![i(0); 3]; 2]), 0);
    }
}
