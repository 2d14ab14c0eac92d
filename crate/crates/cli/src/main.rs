mod opts;
mod output;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;

use cassonkit::arith::rational::format_rational;
use cassonkit::knots::alexander::alexander_polynomial;
use cassonkit::knots::catalog::KnotSpec;
use cassonkit::knots::signature::{signature_sum, tristram_levine_signature};
use cassonkit::knots::{RootOfUnity, SeifertMatrix};
use cassonkit::lens::{casson_walker_lens, rho_sum_lens, LensSpace};
use cassonkit::seifert::{conjugation_torus_invariants, mu_bar, SeifertHS};
use cassonkit::suites::{run_suites, SuiteConfig, SuiteKind};
use cassonkit::torus::{
    lambda_fo_branched, lambda_sw_free, lambda_sw_product, MappingTorusSpec,
};
use cassonkit::Error;

use opts::{Cli, Command, Format, KnotCommand, SeifertCommand, TorusCommand};
use output::{
    AlexanderOutput, BranchedOutput, LensOutput, MubarOutput, Output, ProductOutput,
    SignatureOutput, SignatureSumOutput, VerifyOutput,
};

const EXIT_VALIDATION: u8 = 2;
const EXIT_OBSTRUCTION: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_VERIFY_FAILED: u8 = 5;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match dispatch(cli) {
        Ok((out, code)) => {
            match format {
                Format::Json => println!("{}", out.to_json()),
                Format::Table => println!("{}", out.to_table()),
            }
            ExitCode::from(code)
        }
        Err(err) => {
            let payload = serde_json::json!({
                "error": { "code": err.code(), "message": err.to_string() }
            });
            eprintln!("{payload}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Validation(_) => EXIT_VALIDATION,
        Error::AlexanderRoot { .. } => EXIT_OBSTRUCTION,
        Error::IndeterminateSignature { .. } | Error::Gf2Singular { .. } | Error::Internal(_) => {
            EXIT_INTERNAL
        }
    }
}

fn dispatch(cli: Cli) -> Result<(Output, u8), Error> {
    let tol = cli.tolerance;
    match cli.command {
        Command::Knot { command } => knot_command(command, tol).map(|o| (o, 0)),
        Command::Lens { n, q } => {
            let lens = LensSpace::new(n, q)?;
            Ok((
                Output::Lens(LensOutput {
                    lambda_w: format_rational(&casson_walker_lens(&lens)),
                    rho_sum_eighth: format_rational(&rho_sum_lens(&lens)),
                }),
                0,
            ))
        }
        Command::Torus { command } => torus_command(command, tol).map(|o| (o, 0)),
        Command::Product { casson } => Ok((
            Output::Product(ProductOutput {
                lambda_sw: lambda_sw_product(casson).to_string(),
            }),
            0,
        )),
        Command::Seifert { command } => seifert_command(command).map(|o| (o, 0)),
        Command::Verify {
            suite,
            samples,
            seed,
        } => {
            let kind: SuiteKind = suite.parse()?;
            if samples == 0 {
                return Err(Error::validation("samples must be positive"));
            }
            let config = SuiteConfig { samples, seed };
            let reports = run_suites(kind, &config);
            let passed = reports.iter().all(|r| r.passed());
            let out = Output::Verify(VerifyOutput {
                suite,
                samples,
                seed,
                passed,
                reports,
            });
            Ok((out, if passed { 0 } else { EXIT_VERIFY_FAILED }))
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::validation(format!("cannot parse {}: {e}", path.display())))
}

fn load_knot(path: &Path) -> Result<SeifertMatrix, Error> {
    read_json::<KnotSpec>(path)?.resolve()
}

fn parse_at(at: &str) -> Result<RootOfUnity, Error> {
    let (m, n) = at
        .split_once('/')
        .ok_or_else(|| Error::validation(format!("--at expects m/n, got {at:?}")))?;
    let m: u64 = m
        .trim()
        .parse()
        .map_err(|_| Error::validation(format!("bad numerator in --at {at:?}")))?;
    let n: u64 = n
        .trim()
        .parse()
        .map_err(|_| Error::validation(format!("bad denominator in --at {at:?}")))?;
    RootOfUnity::new(m, n)
}

fn knot_command(command: KnotCommand, tol: f64) -> Result<Output, Error> {
    match command {
        KnotCommand::Alexander { knot } => {
            let v = load_knot(&knot.input)?;
            let delta = alexander_polynomial(&v)?;
            Ok(Output::Alexander(AlexanderOutput {
                alexander: delta.to_string(),
                constant_term: delta.coefficient(0).to_string(),
                higher_coefficients: (1..=delta.width())
                    .map(|j| delta.coefficient(j).to_string())
                    .collect(),
                second_derivative_at_1: delta.second_derivative_at_one().to_string(),
            }))
        }
        KnotCommand::Signature { knot, at } => {
            let v = load_knot(&knot.input)?;
            let omega = parse_at(&at)?;
            let sig = tristram_levine_signature(&v, &omega, tol)?;
            Ok(Output::Signature(SignatureOutput {
                at: omega.to_string(),
                signature: sig.to_string(),
            }))
        }
        KnotCommand::SignatureSum { knot, n } => {
            if n == 0 {
                return Err(Error::validation("signature sum needs n >= 1"));
            }
            let v = load_knot(&knot.input)?;
            let sum = signature_sum(&v, n, tol)?;
            Ok(Output::SignatureSum(SignatureSumOutput {
                n,
                signature_sum: sum.to_string(),
            }))
        }
    }
}

fn torus_command(command: TorusCommand, tol: f64) -> Result<Output, Error> {
    match command {
        TorusCommand::Free { input } => {
            let spec: MappingTorusSpec = read_json(&input)?;
            let free = spec.resolve_free()?;
            Ok(Output::Torus(Box::new(lambda_sw_free(&free, tol)?)))
        }
        TorusCommand::Branched { input } => {
            let spec: MappingTorusSpec = read_json(&input)?;
            let branched = spec.resolve_branched()?;
            let lambda_fo = lambda_fo_branched(&branched, tol)?;
            Ok(Output::Branched(BranchedOutput {
                lambda_fo: format_rational(&lambda_fo),
            }))
        }
    }
}

fn seifert_command(command: SeifertCommand) -> Result<Output, Error> {
    match command {
        SeifertCommand::Mubar { a } => {
            if a.is_empty() {
                return Err(Error::validation("--a needs at least one multiplicity"));
            }
            let s = SeifertHS::new(a)?;
            let mu = mu_bar(&s)?;
            let report = conjugation_torus_invariants(&s)?;
            Ok(Output::Mubar(MubarOutput {
                mu_bar: mu.to_string(),
                lambda_sw: format_rational(&report.lambda_sw),
                lambda_fo: format_rational(&report.lambda_fo),
                rohlin: report.rohlin_mod2,
            }))
        }
    }
}
