//! Inertia of symmetric and Hermitian forms.
//!
//! Two routes on purpose. `signature_exact` diagonalizes integer symmetric
//! forms by rational congruence, so it never misclassifies a zero.
//! `signature_hermitian_numeric` is the floating eigenvalue route for the
//! complex equivariant forms; it refuses to answer when an eigenvalue sits
//! too close to the zero threshold instead of guessing.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::matrix::IntSymMatrix;
use super::rational::Rational;

/// Scale-relative zero threshold for the numeric eigenvalue route.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Inertia of a symmetric or Hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn size(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }
}

/// Exact inertia of an integer symmetric form by rational congruence
/// diagonalization. Zero diagonal pivots are repaired by the symmetric
/// row/column combination, which exposes a hyperbolic (+1, -1) pair without
/// leaving exact arithmetic.
#[allow(clippy::needless_range_loop)]
pub fn signature_exact(m: &IntSymMatrix) -> SignatureTriple {
    let n = m.size();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(m.entry(i, j).clone()))
                .collect()
        })
        .collect();

    let mut triple = SignatureTriple {
        positive: 0,
        negative: 0,
        zero: 0,
    };

    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                // symmetric swap of rows/cols k and j
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // all remaining diagonal entries vanish: add row/col j to
                // row/col k, turning the pivot into 2·a[k][j]
                for col in 0..n {
                    let v = a[j][col].clone();
                    a[k][col] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            } else {
                triple.zero += 1;
                k += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            triple.positive += 1;
        } else {
            triple.negative += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &a[k][j];
                a[i][j] -= sub;
            }
        }
        // mirror the elimination on columns to keep the block symmetric
        for j in k + 1..n {
            if a[k][j].is_zero() {
                continue;
            }
            let factor = &a[k][j] / &pivot;
            for i in k..n {
                let sub = &factor * &a[i][k].clone();
                a[i][j] -= sub;
            }
        }
        k += 1;
    }
    triple
}

/// Complex Hermitian matrix, validated at construction.
#[derive(Debug, Clone)]
pub struct HermitianMatrix {
    size: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut data = vec![Complex64::ZERO; size * size];
        for i in 0..size {
            for j in 0..size {
                data[i * size + j] = f(i, j);
            }
        }
        let m = HermitianMatrix { size, data };
        m.check_hermitian()?;
        Ok(m)
    }

    fn check_hermitian(&self) -> Result<()> {
        let scale = 1.0 + self.max_abs_entry();
        for i in 0..self.size {
            for j in 0..=i {
                let delta = (self.entry(i, j) - self.entry(j, i).conj()).norm();
                if delta > 1e-12 * scale {
                    return Err(Error::validation(format!(
                        "matrix is not Hermitian: |H[{i}][{j}] - conj(H[{j}][{i}])| = {delta:e}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    fn max_abs_entry(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn max_row_norm(&self) -> f64 {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(i, j).norm()).sum())
            .fold(0.0, f64::max)
    }

    /// Real symmetric 2k×2k matrix [[Re, -Im], [Im, Re]] whose spectrum is
    /// that of the Hermitian form with every eigenvalue doubled.
    fn realified(&self) -> DMatrix<f64> {
        let k = self.size;
        DMatrix::from_fn(2 * k, 2 * k, |r, c| {
            let z = self.entry(r % k, c % k);
            match (r >= k, c >= k) {
                (false, false) | (true, true) => z.re,
                (false, true) => -z.im,
                (true, false) => z.im,
            }
        })
    }
}

/// Numeric inertia of a Hermitian form.
///
/// Eigenvalues with |λ| ≤ tol·(1 + max row norm) count as zero. Any
/// eigenvalue within a factor of two of that threshold (on either side) is
/// ambiguous and yields `IndeterminateSignature`, so callers can fall back
/// to an exact singularity pre-check instead of trusting a coin flip.
pub fn signature_hermitian_numeric(h: &HermitianMatrix, tol: f64) -> Result<SignatureTriple> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::validation("tolerance must be positive and finite"));
    }
    if h.size() == 0 {
        return Ok(SignatureTriple {
            positive: 0,
            negative: 0,
            zero: 0,
        });
    }
    let threshold = tol * (1.0 + h.max_row_norm());
    let eigen = h.realified().symmetric_eigen();

    let mut doubled = SignatureTriple {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for &lambda in eigen.eigenvalues.iter() {
        let mag = lambda.abs();
        if mag > threshold / 2.0 && mag <= 2.0 * threshold {
            return Err(Error::IndeterminateSignature {
                eigenvalue: lambda,
                threshold,
            });
        }
        if mag <= threshold {
            doubled.zero += 1;
        } else if lambda > 0.0 {
            doubled.positive += 1;
        } else {
            doubled.negative += 1;
        }
    }
    // realification doubles every eigenvalue, so each count must be even
    if doubled.positive % 2 != 0 || doubled.negative % 2 != 0 || doubled.zero % 2 != 0 {
        return Err(Error::IndeterminateSignature {
            eigenvalue: f64::NAN,
            threshold,
        });
    }
    Ok(SignatureTriple {
        positive: doubled.positive / 2,
        negative: doubled.negative / 2,
        zero: doubled.zero / 2,
    })
}

/// Numeric inertia of an integer symmetric form, for cross-checks against
/// `signature_exact`.
pub fn signature_int_sym_numeric(m: &IntSymMatrix, tol: f64) -> Result<SignatureTriple> {
    let h = HermitianMatrix::from_fn(m.size(), |i, j| {
        Complex64::new(
            m.entry(i, j)
                .to_f64()
                .expect("integer symmetric entry exceeds f64 range"),
            0.0,
        )
    })?;
    signature_hermitian_numeric(&h, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::matrix::IntMatrix;

    fn e8_matrix() -> IntSymMatrix {
        // star-shaped -2 tree with arms of lengths 1, 2, 4
        let mut m = IntMatrix::zeros(8, 8);
        for i in 0..8 {
            m.set(i, i, (-2).into());
        }
        for (a, b) in [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)] {
            m.set(a, b, 1.into());
            m.set(b, a, 1.into());
        }
        IntSymMatrix::new(m).unwrap()
    }

    #[test]
    fn empty_form() {
        let m = IntSymMatrix::from_i64_rows(&[]).unwrap();
        let t = signature_exact(&m);
        assert_eq!((t.positive, t.negative, t.zero), (0, 0, 0));
    }

    #[test]
    fn single_negative_vertex() {
        let t = signature_exact(&IntSymMatrix::diagonal(&[-2]));
        assert_eq!((t.positive, t.negative, t.zero), (0, 1, 0));
    }

    #[test]
    fn e8_is_negative_definite() {
        let t = signature_exact(&e8_matrix());
        assert_eq!((t.positive, t.negative, t.zero), (0, 8, 0));
        assert_eq!(t.signature(), -8);
    }

    #[test]
    fn hyperbolic_pair() {
        let m = IntSymMatrix::from_i64_rows(&[vec![0, 3], vec![3, 0]]).unwrap();
        let t = signature_exact(&m);
        assert_eq!((t.positive, t.negative, t.zero), (1, 1, 0));
    }

    #[test]
    fn zero_rows_count_as_zeros() {
        let m = IntSymMatrix::from_i64_rows(&[vec![0, 0, 0], vec![0, 5, 0], vec![0, 0, 0]])
            .unwrap();
        let t = signature_exact(&m);
        assert_eq!((t.positive, t.negative, t.zero), (1, 0, 2));
    }

    #[test]
    fn numeric_zero_matrix() {
        let h = HermitianMatrix::from_fn(3, |_, _| Complex64::ZERO).unwrap();
        let t = signature_hermitian_numeric(&h, DEFAULT_TOLERANCE).unwrap();
        assert_eq!((t.positive, t.negative, t.zero), (0, 0, 3));
    }

    #[test]
    fn numeric_two_by_two_complex() {
        let entries = [
            [Complex64::new(-3.0, 0.0), Complex64::new(1.5, -0.866)],
            [Complex64::new(1.5, 0.866), Complex64::new(-3.0, 0.0)],
        ];
        let h = HermitianMatrix::from_fn(2, |i, j| entries[i][j]).unwrap();
        let t = signature_hermitian_numeric(&h, DEFAULT_TOLERANCE).unwrap();
        assert_eq!((t.positive, t.negative, t.zero), (0, 2, 0));
    }

    #[test]
    fn numeric_doubled_symmetric() {
        let entries = [[-4.0, 2.0], [2.0, -4.0]];
        let h = HermitianMatrix::from_fn(2, |i, j| Complex64::new(entries[i][j], 0.0)).unwrap();
        let t = signature_hermitian_numeric(&h, DEFAULT_TOLERANCE).unwrap();
        assert_eq!((t.positive, t.negative, t.zero), (0, 2, 0));
    }

    #[test]
    fn ambiguous_zero_is_reported() {
        let h = HermitianMatrix::from_fn(1, |_, _| Complex64::new(1.5e-9, 0.0)).unwrap();
        match signature_hermitian_numeric(&h, DEFAULT_TOLERANCE) {
            Err(Error::IndeterminateSignature { .. }) => {}
            other => panic!("expected indeterminate signature, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let err = HermitianMatrix::from_fn(2, |i, j| {
            if i == 0 && j == 1 {
                Complex64::new(1.0, 1.0)
            } else {
                Complex64::ZERO
            }
        });
        assert!(err.is_err());
    }

    #[test]
    fn numeric_agrees_with_exact_on_e8() {
        let exact = signature_exact(&e8_matrix());
        let numeric = signature_int_sym_numeric(&e8_matrix(), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(exact, numeric);
    }
}
