//! Normalized Alexander polynomials from Seifert matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::matrix::IntMatrix;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

use super::SeifertMatrix;

/// Symmetric Laurent polynomial Δ(t) = a₀ + Σ_{j≥1} a_j (t^j + t^{-j}),
/// normalized so that Δ(1) = 1. Symmetry Δ(t) = Δ(1/t) is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricLaurentPoly {
    constant: BigInt,
    tail: Vec<BigInt>, // tail[j-1] = a_j, trimmed of trailing zeros
}

impl SymmetricLaurentPoly {
    pub fn new(constant: BigInt, mut tail: Vec<BigInt>) -> Result<Self> {
        while tail.last().is_some_and(Zero::is_zero) {
            tail.pop();
        }
        let at_one: BigInt = &constant + 2 * tail.iter().sum::<BigInt>();
        if !at_one.is_one() {
            return Err(Error::validation(format!(
                "normalized Alexander polynomial must have Δ(1) = 1, got {at_one}"
            )));
        }
        Ok(SymmetricLaurentPoly { constant, tail })
    }

    /// Δ = 1, the unknot polynomial.
    pub fn one() -> Self {
        SymmetricLaurentPoly {
            constant: BigInt::one(),
            tail: Vec::new(),
        }
    }

    /// Width d of the symmetric expansion; coefficients vanish beyond |j| > d.
    pub fn width(&self) -> usize {
        self.tail.len()
    }

    /// Coefficient a_j = a_{-j}.
    pub fn coefficient(&self, j: usize) -> BigInt {
        if j == 0 {
            self.constant.clone()
        } else {
            self.tail.get(j - 1).cloned().unwrap_or_else(BigInt::zero)
        }
    }

    /// Δ''(1) = Σ_{j≥1} 2 j² a_j, always even.
    pub fn second_derivative_at_one(&self) -> BigInt {
        self.tail
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let j = (i + 1) as i64;
                BigInt::from(2 * j * j) * a
            })
            .sum()
    }

    /// Δ(-1), the knot determinant up to sign; always odd.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = self.constant.clone();
        for (i, a) in self.tail.iter().enumerate() {
            let sign = if (i + 1) % 2 == 0 { 2 } else { -2 };
            acc += BigInt::from(sign) * a;
        }
        acc
    }

    /// t^d · Δ(t) as an ordinary polynomial, palindromic of degree 2d.
    pub fn to_int_poly(&self) -> IntPoly {
        let d = self.width();
        let mut coeffs = vec![BigInt::zero(); 2 * d + 1];
        coeffs[d] = self.constant.clone();
        for (i, a) in self.tail.iter().enumerate() {
            coeffs[d + i + 1] = a.clone();
            coeffs[d - i - 1] = a.clone();
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::fmt::Display for SymmetricLaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        for j in (1..=self.width() as i64).rev() {
            terms.push((j, self.coefficient(j as usize)));
        }
        terms.push((0, self.constant.clone()));
        for j in 1..=self.width() as i64 {
            terms.push((-j, self.coefficient(j as usize)));
        }
        let mut first = true;
        for (power, coeff) in terms {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { "-" } else { "+" };
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one() && power != 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Normalized Alexander polynomial Δ(t) = t^{-g} · det(V - tVᵀ).
///
/// det(V - tVᵀ) is expanded exactly by evaluating integer determinants at
/// 2g + 1 points and interpolating over the rationals. The normalization
/// Δ(1) = 1 and the coefficient symmetry are rechecked and any violation is
/// a hard internal failure. The result is memoized on the matrix.
pub fn alexander_polynomial(v: &SeifertMatrix) -> Result<SymmetricLaurentPoly> {
    if let Some(cached) = v.delta_cache().get() {
        return Ok(cached.clone());
    }
    let delta = compute_alexander(v)?;
    Ok(v.delta_cache().get_or_init(|| delta).clone())
}

fn compute_alexander(v: &SeifertMatrix) -> Result<SymmetricLaurentPoly> {
    let size = v.size();
    let g = v.genus();
    if size == 0 {
        return Ok(SymmetricLaurentPoly::one());
    }

    let points: Vec<i64> = (-(g as i64)..=g as i64).collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|&p| {
            let mut m = IntMatrix::zeros(size, size);
            let t = BigInt::from(p);
            for i in 0..size {
                for j in 0..size {
                    m.set(i, j, v.matrix().get(i, j) - &t * v.matrix().get(j, i));
                }
            }
            m.determinant()
        })
        .collect::<Result<_>>()?;

    let coeffs = interpolate_integer_poly(&points, &values)?;

    // coeffs[k] is the t^k coefficient of det(V - tVᵀ); Laurent offset by g
    let constant = coeffs[g].clone();
    let tail: Vec<BigInt> = (g + 1..=2 * g).map(|k| coeffs[k].clone()).collect();
    for j in 1..=g {
        if coeffs[g + j] != coeffs[g - j] {
            return Err(Error::internal(format!(
                "Alexander coefficients are not symmetric at offset {j}"
            )));
        }
    }
    SymmetricLaurentPoly::new(constant, tail).map_err(|_| {
        Error::internal("validated Seifert matrix produced a non-normalized Alexander polynomial")
    })
}

/// Lagrange interpolation through integer samples; the result must have
/// integer coefficients.
fn interpolate_integer_poly(points: &[i64], values: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = points.len();
    // master polynomial Π_j (t - x_j), coefficients ascending
    let mut master = vec![BigInt::zero(); n + 1];
    master[0] = BigInt::one();
    for (deg, &x) in points.iter().enumerate() {
        for k in (0..=deg).rev() {
            let carried = master[k].clone();
            master[k + 1] += &carried;
            master[k] = -BigInt::from(x) * carried;
        }
    }

    let mut acc = vec![Rational::zero(); n];
    for (&xi, yi) in points.iter().zip(values) {
        if yi.is_zero() {
            continue;
        }
        // quotient q = master / (t - x_i) by synthetic division
        let xb = BigInt::from(xi);
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = master[n].clone();
        for k in (0..n).rev() {
            quotient[k] = carry.clone();
            carry = &master[k] + &xb * carry;
        }
        // denominator Π_{j≠i} (x_i - x_j) = q(x_i)
        let mut denom = BigInt::zero();
        for c in quotient.iter().rev() {
            denom = denom * &xb + c;
        }
        let weight = Rational::new(yi.clone(), denom);
        for (a, q) in acc.iter_mut().zip(&quotient) {
            *a += Rational::from_integer(q.clone()) * &weight;
        }
    }
    acc.into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(Error::internal(
                    "interpolated determinant has non-integer coefficients",
                ))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_integer::Integer;

    use super::*;
    use crate::knots::catalog;

    #[test]
    fn unknot_polynomial_is_one() {
        let delta = alexander_polynomial(&SeifertMatrix::empty()).unwrap();
        assert_eq!(delta, SymmetricLaurentPoly::one());
        assert_eq!(delta.second_derivative_at_one(), BigInt::zero());
    }

    #[test]
    fn trefoil_polynomial() {
        let delta = alexander_polynomial(&catalog::trefoil()).unwrap();
        assert_eq!(delta.coefficient(0), BigInt::from(-1));
        assert_eq!(delta.coefficient(1), BigInt::from(1));
        assert_eq!(delta.width(), 1);
        assert_eq!(delta.second_derivative_at_one(), BigInt::from(2));
        assert_eq!(delta.to_string(), "t - 1 + t^-1");
    }

    #[test]
    fn figure_eight_polynomial() {
        let delta = alexander_polynomial(&catalog::figure_eight()).unwrap();
        assert_eq!(delta.coefficient(0), BigInt::from(3));
        assert_eq!(delta.coefficient(1), BigInt::from(-1));
        assert_eq!(delta.second_derivative_at_one(), BigInt::from(-2));
        assert_eq!(delta.to_string(), "-t + 3 - t^-1");
    }

    #[test]
    fn torus_2_5_polynomial() {
        let v = catalog::torus_knot_seifert_matrix(2, 5).unwrap();
        let delta = alexander_polynomial(&v).unwrap();
        assert_eq!(delta.to_string(), "t^2 - t + 1 - t^-1 + t^-2");
    }

    #[test]
    fn stabilization_preserves_polynomial() {
        let v = catalog::trefoil();
        let w = v.stabilize(&[2, -1], 1).unwrap();
        assert_eq!(
            alexander_polynomial(&v).unwrap(),
            alexander_polynomial(&w).unwrap()
        );
    }

    #[test]
    fn determinant_is_odd() {
        for v in [
            SeifertMatrix::empty(),
            catalog::trefoil(),
            catalog::figure_eight(),
            catalog::torus_knot_seifert_matrix(3, 5).unwrap(),
        ] {
            let det = alexander_polynomial(&v).unwrap().eval_at_minus_one();
            assert!(det.is_odd(), "Δ(-1) = {det} must be odd");
        }
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(SymmetricLaurentPoly::new(BigInt::from(2), vec![]).is_err());
        assert!(SymmetricLaurentPoly::new(BigInt::from(-1), vec![BigInt::one()]).is_ok());
    }
}
