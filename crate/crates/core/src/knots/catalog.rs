//! Catalog knots, the torus-knot Seifert matrix generator, and randomized
//! generation of valid Seifert matrices for the property suites.

use num_integer::Integer;
use rand::Rng;
use serde::Deserialize;

use crate::arith::matrix::IntMatrix;
use crate::error::{Error, Result};

use super::SeifertMatrix;

/// The unknot: empty Seifert matrix.
pub fn unknot() -> SeifertMatrix {
    SeifertMatrix::empty()
}

/// Right-handed trefoil in the convention with sign^{1/2} = -2.
pub fn trefoil() -> SeifertMatrix {
    SeifertMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]).expect("catalog matrix")
}

/// Figure-eight knot, Δ = -t + 3 - t^{-1}.
pub fn figure_eight() -> SeifertMatrix {
    SeifertMatrix::from_rows(&[vec![1, 1], vec![0, -1]]).expect("catalog matrix")
}

/// Seifert matrix of the (p, q) torus knot on the standard fiber-surface
/// basis of rank (p-1)(q-1), realized as the negated tensor product of the
/// two bidiagonal chain blocks.
///
/// Conventions in the literature differ by transpose and sign, so this
/// construction is pinned by an oracle rather than a quoted matrix: its
/// Alexander polynomial must equal the normalization of
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), and the test suite rejects it
/// otherwise.
pub fn torus_knot_seifert_matrix(p: u64, q: u64) -> Result<SeifertMatrix> {
    if p < 2 || q < 2 {
        return Err(Error::validation("torus knot parameters need p, q >= 2"));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::validation(format!(
            "torus knot parameters must be coprime, got ({p}, {q})"
        )));
    }
    let chain = |n: u64| -> Vec<Vec<i64>> {
        let k = (n - 1) as usize;
        let mut block = vec![vec![0i64; k]; k];
        for i in 0..k {
            block[i][i] = 1;
            if i + 1 < k {
                block[i][i + 1] = -1;
            }
        }
        block
    };
    let a = chain(p);
    let b = chain(q);
    let rb = b.len();
    let size = a.len() * rb;
    let mut rows = vec![vec![0i64; size]; size];
    for (i, arow) in a.iter().enumerate() {
        for (j, &av) in arow.iter().enumerate() {
            if av == 0 {
                continue;
            }
            for (k, brow) in b.iter().enumerate() {
                for (l, &bv) in brow.iter().enumerate() {
                    rows[i * rb + k][j * rb + l] = -av * bv;
                }
            }
        }
    }
    SeifertMatrix::from_rows(&rows)
}

/// Knot input as consumed by the CLI: either a catalog name or an explicit
/// row-major Seifert matrix.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum KnotSpec {
    Named { name: String },
    Matrix { seifert_matrix: Vec<Vec<i64>> },
}

impl KnotSpec {
    pub fn resolve(&self) -> Result<SeifertMatrix> {
        match self {
            KnotSpec::Named { name } => knot_by_name(name),
            KnotSpec::Matrix { seifert_matrix } => SeifertMatrix::from_rows(seifert_matrix),
        }
    }
}

/// Case-insensitive catalog lookup: unknot, trefoil, figure8, torus(p,q).
pub fn knot_by_name(name: &str) -> Result<SeifertMatrix> {
    let lowered = name.trim().to_ascii_lowercase();
    match lowered.as_str() {
        "unknot" => return Ok(unknot()),
        "trefoil" => return Ok(trefoil()),
        "figure8" => return Ok(figure_eight()),
        _ => {}
    }
    if let Some(args) = lowered
        .strip_prefix("torus(")
        .and_then(|rest| rest.strip_suffix(')'))
    {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() == 2 {
            let p = parts[0]
                .parse::<u64>()
                .map_err(|_| Error::validation(format!("bad torus knot parameter {:?}", parts[0])))?;
            let q = parts[1]
                .parse::<u64>()
                .map_err(|_| Error::validation(format!("bad torus knot parameter {:?}", parts[1])))?;
            return torus_knot_seifert_matrix(p, q);
        }
    }
    Err(Error::validation(format!(
        "unknown knot name {name:?}; expected unknot, trefoil, figure8 or torus(p,q)"
    )))
}

/// Random unimodular matrix built from a handful of elementary row
/// operations, for congruence experiments.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, size: usize, ops: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(size);
    if size < 2 {
        return u;
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size);
        while j == i {
            j = rng.gen_range(0..size);
        }
        let factor = if rng.gen_bool(0.5) { 1 } else { -1 };
        // row_j += factor * row_i
        for col in 0..size {
            let v = u.get(j, col) + factor * u.get(i, col);
            u.set(j, col, v);
        }
    }
    u
}

/// One of the catalog knots, uniformly at random.
pub fn random_catalog_knot<R: Rng + ?Sized>(rng: &mut R) -> (String, SeifertMatrix) {
    const TORUS_PAIRS: [(u64, u64); 7] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6)];
    match rng.gen_range(0..4) {
        0 => ("unknot".to_string(), unknot()),
        1 => ("trefoil".to_string(), trefoil()),
        2 => ("figure8".to_string(), figure_eight()),
        _ => {
            let (p, q) = TORUS_PAIRS[rng.gen_range(0..TORUS_PAIRS.len())];
            (
                format!("torus({p},{q})"),
                torus_knot_seifert_matrix(p, q).expect("catalog pair"),
            )
        }
    }
}

/// Catalog knot disguised by random stabilizations and a random unimodular
/// change of basis. Yields a large population of valid Seifert matrices
/// without a knot-diagram front end.
pub fn random_valid_seifert<R: Rng + ?Sized>(
    rng: &mut R,
    max_stabilizations: usize,
) -> (String, SeifertMatrix) {
    let (name, mut v) = random_catalog_knot(rng);
    let stabilizations = rng.gen_range(0..=max_stabilizations);
    for _ in 0..stabilizations {
        let coupling: Vec<i64> = (0..v.size()).map(|_| rng.gen_range(-1..=1)).collect();
        let corner = rng.gen_range(-1..=1);
        v = v.stabilize(&coupling, corner).expect("coupling sized to fit");
    }
    if v.size() > 0 {
        let ops = rng.gen_range(0..=5);
        let u = random_unimodular(rng, v.size(), ops);
        v = v.congruence(&u).expect("unimodular by construction");
    }
    (name, v)
}
