//! Dense integer matrices with exact determinants.
//!
//! Entries are arbitrary-precision integers so that congruence experiments
//! and determinant oracles never overflow. Sizes stay small (well under 200)
//! throughout the crate, so dense storage is the right trade.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = IntMatrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::validation("ragged matrix rows"));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::validation("matrix product shape mismatch"));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::validation("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(pivot) => {
                        m.swap(k, pivot);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    // Bareiss guarantees exact divisibility by the previous pivot
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }
}

/// Square integer matrix with entry-wise symmetry, the carrier of
/// intersection and symmetrized Seifert forms. Size 0 is legal and denotes
/// the empty form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    inner: IntMatrix,
}

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::validation("symmetric matrix must be square"));
        }
        if !m.is_symmetric() {
            return Err(Error::validation("matrix is not symmetric"));
        }
        Ok(IntSymMatrix { inner: m })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        IntSymMatrix::new(IntMatrix::from_i64_rows(rows)?)
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(v));
        }
        IntSymMatrix { inner: m }
    }

    pub fn size(&self) -> usize {
        self.inner.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        self.inner.get(i, j)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.inner
    }

    pub fn determinant(&self) -> BigInt {
        self.inner.determinant().expect("square by construction")
    }

    /// Congruent form UᵀMU for an arbitrary square U of matching size.
    pub fn congruence(&self, u: &IntMatrix) -> Result<IntSymMatrix> {
        if !u.is_square() || u.rows() != self.size() {
            return Err(Error::validation("congruence shape mismatch"));
        }
        let product = u.transpose().mul(&self.inner)?.mul(u)?;
        IntSymMatrix::new(product)
    }

    /// Evaluates the quadratic form vᵀ M v on a 0/1 vector.
    pub fn quadratic_form_01(&self, v: &[u8]) -> Result<BigInt> {
        if v.len() != self.size() {
            return Err(Error::validation("quadratic form vector length mismatch"));
        }
        let mut acc = BigInt::zero();
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj != 0 {
                    acc += self.entry(i, j);
                }
            }
        }
        Ok(acc)
    }
}
