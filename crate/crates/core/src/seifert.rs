//! Seifert fibered homology spheres: canonical presentation, star-shaped
//! plumbing graph, integral Wu class, the Neumann-Siebenmann μ̄ invariant,
//! and the invariants of conjugation mapping tori.
//!
//! Orientation is pinned to the link-of-singularity convention e = -1/a,
//! the choice under which Σ(2,3,5) produces the negative-definite E8
//! plumbing and μ̄ = -1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::gf2::gf2_solve;
use crate::arith::matrix::{IntMatrix, IntSymMatrix};
use crate::arith::rational::rat_int;
use crate::arith::signature::signature_exact;
use crate::error::{Error, Result};
use crate::report::{InvariantReport, RohlinMod2, TermBreakdown};

/// Seifert fibered homology sphere Σ(a₁, …, a_k) with pairwise coprime
/// multiplicities. Entries equal to 1 are legal and geometrically trivial;
/// with no entry ≥ 2 the space is S³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertHS {
    multiplicities: Vec<u64>,
}

impl SeifertHS {
    pub fn new(multiplicities: Vec<u64>) -> Result<Self> {
        if multiplicities.contains(&0) {
            return Err(Error::validation("Seifert multiplicities must be >= 1"));
        }
        for i in 0..multiplicities.len() {
            for j in i + 1..multiplicities.len() {
                if multiplicities[i].gcd(&multiplicities[j]) != 1 {
                    return Err(Error::validation(format!(
                        "Seifert multiplicities must be pairwise coprime, got {} and {}",
                        multiplicities[i], multiplicities[j]
                    )));
                }
            }
        }
        Ok(SeifertHS { multiplicities })
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// Multiplicities with the trivial a = 1 fibers dropped.
    fn essential(&self) -> Vec<u64> {
        self.multiplicities
            .iter()
            .copied()
            .filter(|&a| a > 1)
            .collect()
    }
}

impl std::fmt::Display for SeifertHS {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Σ(")?;
        for (i, a) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Unnormalized Seifert data (b; (a₁,b₁), …, (a_k,b_k)) with 0 < b_i < a_i
/// and b + Σ b_i/a_i = -1/(a₁⋯a_k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertPresentation {
    pub b: i64,
    pub pairs: Vec<(u64, u64)>,
}

/// Weighted star-shaped plumbing tree. Vertex 0 is the central vertex; each
/// arm is a chain of vertices ordered outward from the center.
#[derive(Debug, Clone)]
pub struct PlumbingGraph {
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
    arms: Vec<Vec<usize>>,
}

impl PlumbingGraph {
    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex indices per arm, ordered from the center outward.
    pub fn arms(&self) -> &[Vec<usize>] {
        &self.arms
    }

    /// Intersection form: weights on the diagonal, 1 for each edge.
    pub fn intersection_matrix(&self) -> IntSymMatrix {
        let n = self.vertex_count();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &w) in self.weights.iter().enumerate() {
            m.set(i, i, BigInt::from(w));
        }
        for &(a, b) in &self.edges {
            m.set(a, b, BigInt::one());
            m.set(b, a, BigInt::one());
        }
        IntSymMatrix::new(m).expect("construction is symmetric")
    }
}

fn mod_inverse(x: u64, modulus: u64) -> Option<u64> {
    let (mut r0, mut r1) = (modulus as i128, (x % modulus) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(modulus as i128) as u64)
}

/// The unique presentation with 0 < b_i < a_i, determined by
/// b_i·(a/a_i) ≡ -1 (mod a_i) and the Euler number -1/a.
pub fn seifert_presentation(s: &SeifertHS) -> Result<SeifertPresentation> {
    let mult = s.essential();
    if mult.is_empty() {
        return Err(Error::validation(
            "Seifert presentation needs at least one multiplicity >= 2",
        ));
    }
    let a_total = mult
        .iter()
        .try_fold(1u64, |acc, &a| acc.checked_mul(a))
        .filter(|&a| a <= 1_000_000_000_000)
        .ok_or_else(|| Error::validation("Seifert multiplicities are too large"))?;
    let mut pairs = Vec::with_capacity(mult.len());
    let mut weighted_sum: i64 = 0;
    for &ai in &mult {
        let cofactor = (a_total / ai) % ai;
        let inv = mod_inverse(cofactor, ai)
            .ok_or_else(|| Error::internal(format!("no inverse for {cofactor} mod {ai}")))?;
        let bi = (ai - inv) % ai;
        pairs.push((ai, bi));
        weighted_sum += (bi * (a_total / ai)) as i64;
    }
    let numerator = -1 - weighted_sum;
    if numerator.rem_euclid(a_total as i64) != 0 {
        return Err(Error::internal(
            "central weight is not integral; presentation is inconsistent",
        ));
    }
    Ok(SeifertPresentation {
        b: numerator / a_total as i64,
        pairs,
    })
}

/// Negated Hirzebruch-Jung expansion entries of a/b: a/b = c₁ - 1/(c₂ - …)
/// with all c_j >= 2.
fn hirzebruch_jung(a: u64, b: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut a, mut b) = (a, b);
    while b > 0 {
        let c = a.div_ceil(b);
        out.push(c);
        let next_b = c * b - a;
        a = b;
        b = next_b;
    }
    out
}

/// Star-shaped plumbing with central weight b and arm weights given by the
/// negated continued-fraction entries of a_i/b_i. The determinant of the
/// intersection form must be ±1 and is rechecked.
pub fn plumbing_graph(p: &SeifertPresentation) -> Result<PlumbingGraph> {
    let mut weights = vec![p.b];
    let mut edges = Vec::new();
    let mut arms = Vec::new();
    for &(ai, bi) in &p.pairs {
        if bi == 0 || bi >= ai {
            return Err(Error::validation("presentation pair needs 0 < b_i < a_i"));
        }
        let mut arm = Vec::new();
        let mut prev = 0usize;
        for c in hirzebruch_jung(ai, bi) {
            weights.push(-(c as i64));
            let idx = weights.len() - 1;
            edges.push((prev, idx));
            arm.push(idx);
            prev = idx;
        }
        arms.push(arm);
    }
    if weights.len() > 512 {
        return Err(Error::validation(
            "plumbing graph exceeds the supported size (512 vertices)",
        ));
    }
    let graph = PlumbingGraph {
        weights,
        edges,
        arms,
    };
    let det = graph.intersection_matrix().determinant();
    if !det.abs().is_one() {
        return Err(Error::internal(format!(
            "plumbing intersection form must be unimodular, got det = {det}"
        )));
    }
    Ok(graph)
}

/// The unique 0/1 vector w with P·w ≡ diag(P) (mod 2): the integral Wu
/// class of the plumbing. Uniqueness follows from |det P| = 1.
pub fn wu_class(graph: &PlumbingGraph) -> Result<Vec<u8>> {
    let p = graph.intersection_matrix();
    let n = p.size();
    let matrix: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if p.entry(i, j).is_odd() { 1 } else { 0 })
                .collect()
        })
        .collect();
    let rhs: Vec<u8> = (0..n)
        .map(|i| if p.entry(i, i).is_odd() { 1 } else { 0 })
        .collect();
    gf2_solve(&matrix, &rhs)
}

/// Neumann-Siebenmann μ̄ = (sign(P) - wᵀPw)/8, with w the integer lift of
/// the Wu class. Integrality is guaranteed by the van der Blij congruence
/// and asserted. Σ with no multiplicity >= 2 is S³ and yields 0.
pub fn mu_bar(s: &SeifertHS) -> Result<i64> {
    if s.essential().is_empty() {
        return Ok(0);
    }
    let presentation = seifert_presentation(s)?;
    let graph = plumbing_graph(&presentation)?;
    let p = graph.intersection_matrix();
    let w = wu_class(&graph)?;
    let sign = signature_exact(&p).signature();
    let wpw = p
        .quadratic_form_01(&w)?
        .to_i64()
        .ok_or_else(|| Error::internal("Wu form value exceeds i64 range"))?;
    let diff = sign - wpw;
    if diff % 8 != 0 {
        return Err(Error::internal(format!(
            "van der Blij congruence violated: sign {sign}, wᵀPw {wpw}"
        )));
    }
    Ok(diff / 8)
}

/// Invariants of the mapping torus of the conjugation involution on a
/// Brieskorn-Hamm link: λ_SW = -μ̄, λ_FO = μ̄, Rohlin invariant μ̄ mod 2.
pub fn conjugation_torus_invariants(s: &SeifertHS) -> Result<InvariantReport> {
    let mu = mu_bar(s)?;
    let mut report = InvariantReport::new(
        rat_int(-mu),
        rat_int(mu),
        TermBreakdown {
            mu_bar: Some(rat_int(mu)),
            ..TermBreakdown::default()
        },
    );
    debug_assert_eq!(report.rohlin_mod2, RohlinMod2::Value((mu.rem_euclid(2)) as u8));
    report.notes.push(
        "Seiberg-Witten moduli space is empty for this geometry; the invariant is carried \
         entirely by the correction term"
            .to_string(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shs(m: &[u64]) -> SeifertHS {
        SeifertHS::new(m.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(SeifertHS::new(vec![2, 4]).is_err());
        assert!(SeifertHS::new(vec![2, 3, 5]).is_ok());
        assert!(SeifertHS::new(vec![0]).is_err());
        assert!(SeifertHS::new(vec![1, 1]).is_ok());
    }

    #[test]
    fn presentations() {
        let p = seifert_presentation(&shs(&[2, 3, 5])).unwrap();
        assert_eq!(p.b, -2);
        assert_eq!(p.pairs, vec![(2, 1), (3, 2), (5, 4)]);

        let p = seifert_presentation(&shs(&[2, 3, 7])).unwrap();
        assert_eq!(p.b, -1);
        assert_eq!(p.pairs, vec![(2, 1), (3, 1), (7, 1)]);

        let p = seifert_presentation(&shs(&[2, 3])).unwrap();
        assert_eq!(p.b, -1);
        assert_eq!(p.pairs, vec![(2, 1), (3, 1)]);

        assert!(seifert_presentation(&shs(&[1, 1])).is_err());
    }

    #[test]
    fn hj_expansions() {
        assert_eq!(hirzebruch_jung(2, 1), vec![2]);
        assert_eq!(hirzebruch_jung(3, 2), vec![2, 2]);
        assert_eq!(hirzebruch_jung(5, 4), vec![2, 2, 2, 2]);
        assert_eq!(hirzebruch_jung(7, 1), vec![7]);
        assert_eq!(hirzebruch_jung(11, 4), vec![3, 4]);
    }

    #[test]
    fn poincare_sphere_is_e8() {
        let g = plumbing_graph(&seifert_presentation(&shs(&[2, 3, 5])).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert!(g.weights().iter().all(|&w| w == -2));
        let mut lengths: Vec<usize> = g.arms().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 2, 4]);
        assert!(g.intersection_matrix().determinant().abs().is_one());
    }

    #[test]
    fn wu_classes() {
        let e8 = plumbing_graph(&seifert_presentation(&shs(&[2, 3, 5])).unwrap()).unwrap();
        assert_eq!(wu_class(&e8).unwrap(), vec![0; 8]);

        let g237 = plumbing_graph(&seifert_presentation(&shs(&[2, 3, 7])).unwrap()).unwrap();
        assert_eq!(wu_class(&g237).unwrap(), vec![0, 1, 1, 1]);

        // odd weight forces the Wu class onto the vertex
        let single = PlumbingGraph {
            weights: vec![-1],
            edges: vec![],
            arms: vec![],
        };
        assert_eq!(wu_class(&single).unwrap(), vec![1]);
    }

    #[test]
    fn mu_bar_values() {
        assert_eq!(mu_bar(&shs(&[2, 3])).unwrap(), 0);
        assert_eq!(mu_bar(&shs(&[2, 3, 5])).unwrap(), -1);
        assert_eq!(mu_bar(&shs(&[2, 3, 7])).unwrap(), 1);
        assert_eq!(mu_bar(&shs(&[2, 3, 11])).unwrap(), 0);
        assert_eq!(mu_bar(&shs(&[2, 5, 7])).unwrap(), 0);
        assert_eq!(mu_bar(&shs(&[1, 1])).unwrap(), 0);
        assert_eq!(mu_bar(&shs(&[3])).unwrap(), 0);
    }

    #[test]
    fn mu_bar_permutation_invariance() {
        assert_eq!(
            mu_bar(&shs(&[5, 2, 3])).unwrap(),
            mu_bar(&shs(&[2, 3, 5])).unwrap()
        );
        assert_eq!(
            mu_bar(&shs(&[7, 3, 2])).unwrap(),
            mu_bar(&shs(&[2, 3, 7])).unwrap()
        );
    }

    #[test]
    fn conjugation_reports() {
        let r = conjugation_torus_invariants(&shs(&[2, 3, 5])).unwrap();
        assert_eq!(r.lambda_sw, rat_int(1));
        assert_eq!(r.lambda_fo, rat_int(-1));
        assert_eq!(r.rohlin_mod2, RohlinMod2::Value(1));
        assert!(!r.notes.is_empty());

        let r = conjugation_torus_invariants(&shs(&[2, 3])).unwrap();
        assert_eq!(r.lambda_sw, rat_int(0));
        assert_eq!(r.lambda_fo, rat_int(0));
        assert_eq!(r.rohlin_mod2, RohlinMod2::Value(0));

        let r = conjugation_torus_invariants(&shs(&[2, 3, 7])).unwrap();
        assert_eq!(r.lambda_sw, rat_int(-1));
        assert_eq!(r.lambda_fo, rat_int(1));
        assert_eq!(r.rohlin_mod2, RohlinMod2::Value(1));
    }

    #[test]
    fn canonical_plumbings_are_negative_definite() {
        for mults in [vec![2u64, 3, 5], vec![2, 3, 7], vec![3, 4, 5], vec![2, 3, 5, 7]] {
            let g = plumbing_graph(&seifert_presentation(&shs(&mults)).unwrap()).unwrap();
            let t = signature_exact(&g.intersection_matrix());
            assert_eq!(t.negative, g.vertex_count());
            assert_eq!(t.positive, 0);
        }
    }
}
