//! Output payloads and rendering. JSON field order follows struct
//! declaration order; every invariant value is a lowest-terms rational
//! string so the encoding never loses exactness.

use serde::Serialize;

use cassonkit::report::{InvariantReport, RohlinMod2};
use cassonkit::suites::SuiteReport;

#[derive(Debug, Serialize)]
pub struct AlexanderOutput {
    pub alexander: String,
    pub constant_term: String,
    pub higher_coefficients: Vec<String>,
    pub second_derivative_at_1: String,
}

#[derive(Debug, Serialize)]
pub struct SignatureOutput {
    pub at: String,
    pub signature: String,
}

#[derive(Debug, Serialize)]
pub struct SignatureSumOutput {
    pub n: u64,
    pub signature_sum: String,
}

#[derive(Debug, Serialize)]
pub struct LensOutput {
    pub lambda_w: String,
    pub rho_sum_eighth: String,
}

#[derive(Debug, Serialize)]
pub struct BranchedOutput {
    pub lambda_fo: String,
}

#[derive(Debug, Serialize)]
pub struct ProductOutput {
    pub lambda_sw: String,
}

#[derive(Debug, Serialize)]
pub struct MubarOutput {
    pub mu_bar: String,
    pub lambda_sw: String,
    pub lambda_fo: String,
    pub rohlin: RohlinMod2,
}

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub suite: String,
    pub samples: u64,
    pub seed: u64,
    pub passed: bool,
    pub reports: Vec<SuiteReport>,
}

/// Anything the CLI can print: compact JSON or an aligned key/value table.
pub enum Output {
    Alexander(AlexanderOutput),
    Signature(SignatureOutput),
    SignatureSum(SignatureSumOutput),
    Lens(LensOutput),
    Torus(Box<InvariantReport>),
    Branched(BranchedOutput),
    Product(ProductOutput),
    Mubar(MubarOutput),
    Verify(VerifyOutput),
}

impl Output {
    pub fn to_json(&self) -> String {
        let json = match self {
            Output::Alexander(o) => serde_json::to_string(o),
            Output::Signature(o) => serde_json::to_string(o),
            Output::SignatureSum(o) => serde_json::to_string(o),
            Output::Lens(o) => serde_json::to_string(o),
            Output::Torus(o) => serde_json::to_string(o),
            Output::Branched(o) => serde_json::to_string(o),
            Output::Product(o) => serde_json::to_string(o),
            Output::Mubar(o) => serde_json::to_string(o),
            Output::Verify(o) => serde_json::to_string(o),
        };
        json.expect("output structs serialize infallibly")
    }

    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    fn rows(&self) -> Vec<(String, String)> {
        match self {
            Output::Alexander(o) => vec![
                ("alexander".into(), o.alexander.clone()),
                ("constant_term".into(), o.constant_term.clone()),
                (
                    "higher_coefficients".into(),
                    if o.higher_coefficients.is_empty() {
                        "(none)".into()
                    } else {
                        o.higher_coefficients.join(", ")
                    },
                ),
                (
                    "second_derivative_at_1".into(),
                    o.second_derivative_at_1.clone(),
                ),
            ],
            Output::Signature(o) => vec![
                ("at".into(), o.at.clone()),
                ("signature".into(), o.signature.clone()),
            ],
            Output::SignatureSum(o) => vec![
                ("n".into(), o.n.to_string()),
                ("signature_sum".into(), o.signature_sum.clone()),
            ],
            Output::Lens(o) => vec![
                ("lambda_w".into(), o.lambda_w.clone()),
                ("rho_sum_eighth".into(), o.rho_sum_eighth.clone()),
            ],
            Output::Torus(report) => report_rows(report),
            Output::Branched(o) => vec![("lambda_fo".into(), o.lambda_fo.clone())],
            Output::Product(o) => vec![("lambda_sw".into(), o.lambda_sw.clone())],
            Output::Mubar(o) => vec![
                ("mu_bar".into(), o.mu_bar.clone()),
                ("lambda_sw".into(), o.lambda_sw.clone()),
                ("lambda_fo".into(), o.lambda_fo.clone()),
                ("rohlin".into(), o.rohlin.to_string()),
            ],
            Output::Verify(o) => {
                let mut rows = vec![
                    ("suite".into(), o.suite.clone()),
                    ("samples".into(), o.samples.to_string()),
                    ("seed".into(), o.seed.to_string()),
                    ("passed".into(), o.passed.to_string()),
                ];
                for report in &o.reports {
                    let mut line = format!(
                        "{} ({} checks, {} failures)",
                        report.status, report.checks, report.failures
                    );
                    if let Some(example) = &report.first_counterexample {
                        line.push_str(&format!("; first counterexample: {example}"));
                    }
                    rows.push((report.suite.clone(), line));
                }
                rows
            }
        }
    }
}

fn report_rows(report: &InvariantReport) -> Vec<(String, String)> {
    let mut rows = vec![
        ("lambda_sw".into(), report.lambda_sw.to_string()),
        ("lambda_fo".into(), report.lambda_fo.to_string()),
        ("integral".into(), report.integral.to_string()),
        ("rohlin_mod2".into(), report.rohlin_mod2.to_string()),
    ];
    let breakdown = [
        ("casson_term", &report.breakdown.casson_term),
        ("signature_sum_term", &report.breakdown.signature_sum_term),
        ("alexander_term", &report.breakdown.alexander_term),
        ("lens_walker_term", &report.breakdown.lens_walker_term),
        ("lens_rho_sum_term", &report.breakdown.lens_rho_sum_term),
        ("mu_bar", &report.breakdown.mu_bar),
    ];
    for (name, value) in breakdown {
        if let Some(v) = value {
            rows.push((format!("breakdown.{name}"), v.to_string()));
        }
    }
    for warning in &report.warnings {
        rows.push(("warning".into(), warning.clone()));
    }
    for note in &report.notes {
        rows.push(("note".into(), note.clone()));
    }
    rows
}
