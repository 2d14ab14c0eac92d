//! Tristram-Levine equivariant knot signatures and their sums over roots of
//! unity.
//!
//! The evaluation strategy is exact-first: the only points where the
//! Hermitian form (1-ω)V + (1-ω̄)Vᵀ can be singular are roots of the
//! Alexander polynomial, and those are detected exactly by cyclotomic
//! divisibility before any floating arithmetic runs. Away from them the
//! numeric inertia is stable, and a zero eigenvalue reported there is a bug,
//! not a property of the input.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith::signature::{signature_hermitian_numeric, HermitianMatrix};
use crate::error::{Error, Result};
use crate::poly::cyclotomic;

use super::alexander::alexander_polynomial;
use super::{RootOfUnity, SeifertMatrix};

/// True iff Δ(ω) = 0 exactly, decided by testing whether the cyclotomic
/// polynomial of ω's order divides t^d·Δ(t) over the integers.
pub fn is_alexander_root(v: &SeifertMatrix, omega: &RootOfUnity) -> Result<bool> {
    if omega.is_one() {
        // Δ(1) = 1 for every valid Seifert matrix
        return Ok(false);
    }
    let delta = alexander_polynomial(v)?;
    Ok(cyclotomic(omega.order()).divides(&delta.to_int_poly()))
}

/// First m in 1..n with Δ(ζ_n^m) = 0, or None when the whole signature sum
/// is defined.
pub fn first_alexander_root_in_sum(v: &SeifertMatrix, n: u64) -> Result<Option<u64>> {
    let delta = alexander_polynomial(v)?;
    let poly = delta.to_int_poly();
    for m in 1..n {
        let omega = RootOfUnity::new(m, n)?;
        if cyclotomic(omega.order()).divides(&poly) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Tristram-Levine equivariant signature at ω: the signature of the
/// Hermitian form (1-ω)V + (1-ω̄)Vᵀ. Always even, and symmetric under
/// conjugation of ω.
///
/// At ω = 1 the form vanishes and the signature is 0. At an Alexander root
/// the signature jumps and is deliberately undefined here.
pub fn tristram_levine_signature(
    v: &SeifertMatrix,
    omega: &RootOfUnity,
    tol: f64,
) -> Result<i64> {
    if omega.is_one() {
        return Ok(0);
    }
    if is_alexander_root(v, omega)? {
        return Err(Error::AlexanderRoot {
            m: omega.m(),
            n: omega.n(),
        });
    }

    let size = v.size();
    if size == 0 {
        return Ok(0);
    }
    let w = omega.value();
    let one_minus = Complex64::new(1.0, 0.0) - w;
    let one_minus_conj = one_minus.conj();
    let entry_f64 = |i: usize, j: usize| {
        v.matrix()
            .get(i, j)
            .to_f64()
            .expect("Seifert entry exceeds f64 range")
    };
    let h = HermitianMatrix::from_fn(size, |i, j| {
        one_minus * entry_f64(i, j) + one_minus_conj * entry_f64(j, i)
    })?;

    let triple = signature_hermitian_numeric(&h, tol).map_err(|e| match e {
        Error::IndeterminateSignature { .. } => Error::internal(format!(
            "numeric signature indeterminate at {omega} although the exact pre-check passed"
        )),
        other => other,
    })?;
    if triple.zero != 0 {
        return Err(Error::internal(format!(
            "equivariant form reported {} null directions at {omega} although Δ(ω) ≠ 0",
            triple.zero
        )));
    }
    Ok(triple.signature())
}

/// Σ_{m=0}^{n-1} sign^{m/n}, the full equivariant signature sum. Exploits
/// conjugation symmetry: only m ≤ n/2 is evaluated.
pub fn signature_sum(v: &SeifertMatrix, n: u64, tol: f64) -> Result<i64> {
    if n == 0 {
        return Err(Error::validation("signature sum needs n >= 1"));
    }
    if let Some(m) = first_alexander_root_in_sum(v, n)? {
        return Err(Error::AlexanderRoot { m, n });
    }
    let mut total = 0i64;
    for m in 1..=n / 2 {
        let sig = tristram_levine_signature(v, &RootOfUnity::new(m, n)?, tol)?;
        total += if 2 * m == n { sig } else { 2 * sig };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::signature::DEFAULT_TOLERANCE;
    use crate::knots::catalog;

    fn tl(v: &SeifertMatrix, m: u64, n: u64) -> Result<i64> {
        tristram_levine_signature(v, &RootOfUnity::new(m, n).unwrap(), DEFAULT_TOLERANCE)
    }

    #[test]
    fn zero_at_trivial_character() {
        assert_eq!(tl(&catalog::trefoil(), 0, 5).unwrap(), 0);
        assert_eq!(tl(&SeifertMatrix::empty(), 0, 2).unwrap(), 0);
    }

    #[test]
    fn trefoil_values() {
        assert_eq!(tl(&catalog::trefoil(), 1, 2).unwrap(), -2);
        assert_eq!(tl(&catalog::trefoil(), 1, 3).unwrap(), -2);
    }

    #[test]
    fn trefoil_sixth_root_is_singular() {
        match tl(&catalog::trefoil(), 1, 6) {
            Err(Error::AlexanderRoot { m: 1, n: 6 }) => {}
            other => panic!("expected Alexander root error, got {other:?}"),
        }
    }

    #[test]
    fn alexander_root_detection() {
        let trefoil = catalog::trefoil();
        assert!(is_alexander_root(&trefoil, &RootOfUnity::new(1, 6).unwrap()).unwrap());
        assert!(is_alexander_root(&trefoil, &RootOfUnity::new(5, 6).unwrap()).unwrap());
        assert!(!is_alexander_root(&trefoil, &RootOfUnity::new(1, 2).unwrap()).unwrap());
        assert!(!is_alexander_root(&SeifertMatrix::empty(), &RootOfUnity::new(1, 6).unwrap())
            .unwrap());
        // unreduced 2/12 has order 6
        assert!(is_alexander_root(&trefoil, &RootOfUnity::new(2, 12).unwrap()).unwrap());
    }

    #[test]
    fn signature_sums() {
        let trefoil = catalog::trefoil();
        assert_eq!(signature_sum(&SeifertMatrix::empty(), 7, DEFAULT_TOLERANCE).unwrap(), 0);
        assert_eq!(signature_sum(&trefoil, 2, DEFAULT_TOLERANCE).unwrap(), -2);
        assert_eq!(signature_sum(&trefoil, 3, DEFAULT_TOLERANCE).unwrap(), -4);
        match signature_sum(&trefoil, 6, DEFAULT_TOLERANCE) {
            Err(Error::AlexanderRoot { m: 1, n: 6 }) => {}
            other => panic!("expected Alexander root at m = 1, got {other:?}"),
        }
    }

    #[test]
    fn conjugation_symmetry_and_evenness() {
        let v = catalog::torus_knot_seifert_matrix(3, 5).unwrap();
        for (m, n) in [(1u64, 2u64), (1, 3), (2, 5), (3, 7), (2, 7)] {
            let a = tl(&v, m, n).unwrap();
            let b = tl(&v, n - m, n).unwrap();
            assert_eq!(a, b);
            assert_eq!(a % 2, 0);
        }
    }

    #[test]
    fn torus_3_5_classical_signature() {
        let v = catalog::torus_knot_seifert_matrix(3, 5).unwrap();
        assert_eq!(tl(&v, 1, 2).unwrap(), -8);
    }

    #[test]
    fn stabilization_preserves_signatures() {
        let v = catalog::figure_eight();
        let w = v.stabilize(&[1, 2], -1).unwrap();
        for (m, n) in [(1u64, 2u64), (1, 3), (1, 5), (2, 5)] {
            assert_eq!(tl(&v, m, n).unwrap(), tl(&w, m, n).unwrap());
        }
    }
}
