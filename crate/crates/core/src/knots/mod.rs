//! Knot-theoretic input layer: Seifert matrices, normalized Alexander
//! polynomials, and Tristram-Levine equivariant signatures.

pub mod alexander;
pub mod catalog;
pub mod signature;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::One;

use crate::arith::matrix::IntMatrix;
use crate::error::{Error, Result};

pub use alexander::{alexander_polynomial, SymmetricLaurentPoly};
pub use catalog::{figure_eight, torus_knot_seifert_matrix, trefoil, unknot, KnotSpec};
pub use signature::{
    first_alexander_root_in_sum, is_alexander_root, signature_sum, tristram_levine_signature,
};

/// Seifert matrix of a knot in an integral homology sphere: a square integer
/// matrix of even size 2g whose skew part V - Vᵀ is unimodular. The 0×0
/// matrix presents the unknot.
///
/// The matrix is taken as ground truth; mirroring the knot replaces V by
/// -Vᵀ and flips every signature, so callers must supply the matrix matching
/// their own orientation convention.
#[derive(Debug, Clone)]
pub struct SeifertMatrix {
    inner: IntMatrix,
    delta: OnceLock<alexander::SymmetricLaurentPoly>,
}

impl PartialEq for SeifertMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl Eq for SeifertMatrix {}

impl SeifertMatrix {
    /// Validates and wraps a candidate Seifert matrix.
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::validation("Seifert matrix must be square"));
        }
        if matrix.rows() % 2 != 0 {
            return Err(Error::validation(format!(
                "Seifert matrix must have even size, got {}",
                matrix.rows()
            )));
        }
        let n = matrix.rows();
        let mut skew = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                skew.set(i, j, matrix.get(i, j) - matrix.get(j, i));
            }
        }
        let det = skew.determinant()?;
        if !det.is_one() {
            return Err(Error::validation(format!(
                "det(V - Vᵀ) must equal 1, got {det}"
            )));
        }
        Ok(SeifertMatrix {
            inner: matrix,
            delta: OnceLock::new(),
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        SeifertMatrix::new(IntMatrix::from_i64_rows(rows)?)
    }

    /// The empty Seifert matrix of the unknot.
    pub fn empty() -> Self {
        SeifertMatrix {
            inner: IntMatrix::zeros(0, 0),
            delta: OnceLock::new(),
        }
    }

    /// Memoized Alexander polynomial; computed at most once per matrix.
    pub(crate) fn delta_cache(&self) -> &OnceLock<alexander::SymmetricLaurentPoly> {
        &self.delta
    }

    pub fn size(&self) -> usize {
        self.inner.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.inner
    }

    /// Standard S-equivalence enlargement by two rows and columns: the new
    /// column carries `coupling` over the old rows and `corner` on the
    /// diagonal, the single off-diagonal 1 sits at (n, n+1), and the last
    /// row stays zero. Presents the same knot with genus raised by one.
    pub fn stabilize(&self, coupling: &[i64], corner: i64) -> Result<SeifertMatrix> {
        let n = self.size();
        if coupling.len() != n {
            return Err(Error::validation("stabilization coupling length mismatch"));
        }
        let mut m = IntMatrix::zeros(n + 2, n + 2);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.inner.get(i, j).clone());
            }
        }
        for (i, &xi) in coupling.iter().enumerate() {
            m.set(i, n, BigInt::from(xi));
        }
        m.set(n, n, BigInt::from(corner));
        m.set(n, n + 1, BigInt::one());
        SeifertMatrix::new(m)
    }

    /// Change of basis V ↦ UᵀVU for unimodular U.
    pub fn congruence(&self, u: &IntMatrix) -> Result<SeifertMatrix> {
        if !u.is_square() || u.rows() != self.size() {
            return Err(Error::validation("congruence shape mismatch"));
        }
        let det = u.determinant()?;
        if det != BigInt::one() && det != BigInt::from(-1) {
            return Err(Error::validation("change of basis must be unimodular"));
        }
        SeifertMatrix::new(u.transpose().mul(&self.inner)?.mul(u)?)
    }
}

/// A root of unity ω = exp(2πi m/n), canonicalized to lowest terms while
/// remembering the original n for bookkeeping and error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    m: u64,
    n: u64,
    m_reduced: u64,
    n_reduced: u64,
}

impl RootOfUnity {
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation("root of unity needs n >= 1"));
        }
        let m = m % n;
        let g = m.gcd(&n);
        let (m_reduced, n_reduced) = if m == 0 { (0, 1) } else { (m / g, n / g) };
        Ok(RootOfUnity {
            m,
            n,
            m_reduced,
            n_reduced,
        })
    }

    /// The m in the original presentation m/n.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The n in the original presentation m/n.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Multiplicative order of ω (1 for ω = 1).
    pub fn order(&self) -> u64 {
        self.n_reduced
    }

    pub fn m_reduced(&self) -> u64 {
        self.m_reduced
    }

    pub fn is_one(&self) -> bool {
        self.n_reduced == 1
    }

    /// ω̄ presented over the same original n.
    pub fn conjugate(&self) -> RootOfUnity {
        RootOfUnity::new((self.n - self.m) % self.n, self.n).expect("n unchanged")
    }

    pub fn value(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI * (self.m_reduced as f64) / (self.n_reduced as f64);
        Complex64::new(theta.cos(), theta.sin())
    }
}

impl std::fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.m, self.n)
    }
}
