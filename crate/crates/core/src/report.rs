//! Invariant reports: the exact values, their term-by-term breakdown, and
//! the mod-2 consistency data.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::rational::{
    is_integral, mod_two, serde_opt_rational, serde_rational, Rational,
};

/// Reduction of an integral invariant mod 2, or "n/a" when the value is not
/// an integer and the input therefore cannot come from an honest mapping
/// torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RohlinMod2 {
    Value(u8),
    NotApplicable,
}

impl RohlinMod2 {
    pub fn value(&self) -> Option<u8> {
        match self {
            RohlinMod2::Value(v) => Some(*v),
            RohlinMod2::NotApplicable => None,
        }
    }
}

impl Serialize for RohlinMod2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            RohlinMod2::Value(v) => serializer.serialize_u8(*v),
            RohlinMod2::NotApplicable => serializer.serialize_str("n/a"),
        }
    }
}

impl std::fmt::Display for RohlinMod2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RohlinMod2::Value(v) => write!(f, "{v}"),
            RohlinMod2::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// If the invariant is an integer, its residue mod 2; otherwise "n/a".
pub fn rohlin_mod2(lambda_sw: &Rational) -> RohlinMod2 {
    match mod_two(lambda_sw) {
        Some(v) => RohlinMod2::Value(v),
        None => RohlinMod2::NotApplicable,
    }
}

/// Named components of the invariant formulas. Fields are absent when the
/// corresponding term does not occur in the formula that produced the report.
#[derive(Debug, Clone, Default, Serialize)]
pub struct TermBreakdown {
    /// n·λ of the ambient or quotient homology sphere.
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub casson_term: Option<Rational>,
    /// (1/8)·Σ_m sign^{m/n}.
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub signature_sum_term: Option<Rational>,
    /// (q/2)·Δ''(1).
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub alexander_term: Option<Rational>,
    /// λ_W(L(n,q)) through the exact Dedekind pipeline.
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub lens_walker_term: Option<Rational>,
    /// (1/8)·Σ_α ρ_α(L(n,q)) through the floating cotangent pipeline,
    /// rationalized on the 1/(8n²) grid.
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub lens_rho_sum_term: Option<Rational>,
    /// μ̄ for conjugation mapping tori.
    #[serde(skip_serializing_if = "Option::is_none", with = "serde_opt_rational")]
    pub mu_bar: Option<Rational>,
}

/// Exact invariant pair with provenance. `lambda_sw + lambda_fo = 0` holds
/// for every report this crate produces; the two lens terms in the breakdown
/// are computed by independent pipelines and must agree exactly.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub lambda_sw: Rational,
    pub lambda_fo: Rational,
    pub breakdown: TermBreakdown,
    pub integral: bool,
    pub rohlin_mod2: RohlinMod2,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn new(lambda_sw: Rational, lambda_fo: Rational, breakdown: TermBreakdown) -> Self {
        let integral = is_integral(&lambda_sw);
        let rohlin = rohlin_mod2(&lambda_sw);
        InvariantReport {
            lambda_sw,
            lambda_fo,
            breakdown,
            integral,
            rohlin_mod2: rohlin,
            warnings: Vec::new(),
            notes: Vec::new(),
        }
    }
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let field_count = 6 + usize::from(!self.notes.is_empty());
        let mut state = serializer.serialize_struct("InvariantReport", field_count)?;
        state.serialize_field("lambda_sw", &RationalField(&self.lambda_sw))?;
        state.serialize_field("lambda_fo", &RationalField(&self.lambda_fo))?;
        state.serialize_field("integral", &self.integral)?;
        state.serialize_field("rohlin_mod2", &self.rohlin_mod2)?;
        state.serialize_field("breakdown", &self.breakdown)?;
        state.serialize_field("warnings", &self.warnings)?;
        if self.notes.is_empty() {
            state.skip_field("notes")?;
        } else {
            state.serialize_field("notes", &self.notes)?;
        }
        state.end()
    }
}

struct RationalField<'a>(&'a Rational);

impl Serialize for RationalField<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serde_rational::serialize(self.0, serializer)
    }
}
