//! Linear algebra over GF(2), enough to pin down Wu classes.

use crate::error::{Error, Result};

/// Solves A·x = b over GF(2) for square A by Gaussian elimination.
///
/// Entries must be 0/1. A singular system is an error carrying the rank
/// defect; for intersection forms this signals that the presented manifold
/// is not a homology sphere.
pub fn gf2_solve(matrix: &[Vec<u8>], rhs: &[u8]) -> Result<Vec<u8>> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::validation("GF(2) matrix must be square"));
    }
    if rhs.len() != n {
        return Err(Error::validation("GF(2) right-hand side length mismatch"));
    }
    if matrix
        .iter()
        .flatten()
        .chain(rhs.iter())
        .any(|&v| v > 1)
    {
        return Err(Error::validation("GF(2) entries must be 0 or 1"));
    }

    // augmented rows, reduced to RREF
    let mut rows: Vec<Vec<u8>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();

    let mut pivot_cols = Vec::with_capacity(n);
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&i| rows[i][col] == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in 0..n {
            if i != rank && rows[i][col] == 1 {
                let (head, tail) = rows.split_at_mut(rank.max(i));
                let (src, dst) = if i < rank {
                    (&tail[0], &mut head[i])
                } else {
                    (&head[rank], &mut tail[0])
                };
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }

    if rank < n {
        return Err(Error::Gf2Singular {
            rank_defect: n - rank,
        });
    }

    let mut solution = vec![0u8; n];
    for (row, &col) in pivot_cols.iter().enumerate() {
        solution[col] = rows[row][n];
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_returns_rhs() {
        let a = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let b = vec![1, 0, 1];
        assert_eq!(gf2_solve(&a, &b).unwrap(), b);
    }

    #[test]
    fn hand_elimination_example() {
        let a = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(gf2_solve(&a, &[0, 1]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn singular_reports_rank_defect() {
        let a = vec![vec![1, 1], vec![1, 1]];
        match gf2_solve(&a, &[0, 0]) {
            Err(Error::Gf2Singular { rank_defect }) => assert_eq!(rank_defect, 1),
            other => panic!("expected singular system, got {other:?}"),
        }
    }

    #[test]
    fn empty_system() {
        assert_eq!(gf2_solve(&[], &[]).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn solution_solves_the_system() {
        let a = vec![
            vec![1, 1, 0, 1],
            vec![1, 0, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 1, 0],
        ];
        let b = vec![1, 1, 0, 1];
        let x = gf2_solve(&a, &b).unwrap();
        for (row, &bi) in a.iter().zip(&b) {
            let acc = row.iter().zip(&x).fold(0u8, |acc, (&m, &v)| acc ^ (m & v));
            assert_eq!(acc, bi);
        }
    }
}
