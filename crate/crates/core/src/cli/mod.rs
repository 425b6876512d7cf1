//! Command-line surface.
//!
//! Every subcommand reads JSON documents (file paths, or inline JSON when
//! the argument starts with `[` or `{`), prints one JSON [`Report`] on
//! standard output and exits with 0 when all checks pass, 1 when a check
//! fails and 2 on usage, parse or domain errors.

pub mod checks;
pub mod documents;
pub mod report;
pub mod rng;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::canonical::{canonical_related, canonicalize, find_moduli, ModuliMap};
use crate::cartan::{
    duality_matrix, invariant_i, s3_remark_check, structure_residuals, varpi_curvature, TwoForm,
};
use crate::equation::{transform, ChartedEquation};
use crate::invariants::{connection, s_hierarchy};
use crate::series::{parse_rational, Jet, Rational};
use crate::solve::{ode_residual, series_solve, SecondKindEquation};

use checks::CheckResult;
use documents::{DocumentError, EquationDocument, Source};
use report::Output;
pub use report::Report;
use rng::SplitMix64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Math(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "abel", version, about = "Differential invariants of first-kind Abel equations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The hierarchy s3, s5, ... and the connection r.
    Invariants {
        #[arg(long)]
        eq: String,
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
    },
    /// Canonical form dY/dX = Y³ + J(X).
    Canonical {
        #[arg(long)]
        eq: String,
        #[arg(long, value_parser = rational_arg, default_value = "1")]
        rho: Rational,
    },
    /// Apply a gauge map to an equation.
    Transform {
        #[arg(long)]
        eq: String,
        #[arg(long)]
        map: String,
    },
    /// Series solution with y(0) = y0.
    Solve {
        #[arg(long)]
        eq: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        y0: Rational,
        #[arg(long)]
        order: usize,
    },
    /// Reduce a second-kind equation to first kind.
    Reduce2(Reduce2Args),
    /// Coframe structure equations at rational points.
    Cartan {
        #[arg(long)]
        eq: String,
        #[arg(long)]
        points: String,
    },
    /// Whether two canonical invariants differ by a moduli map.
    Equiv {
        #[arg(long)]
        j1: String,
        #[arg(long)]
        j2: String,
        #[arg(long = "K", value_parser = rational_arg, allow_hyphen_values = true)]
        k: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        h: Option<Rational>,
    },
    /// Run the invariant suite on seeded random gauge maps.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Reduce2Args {
    #[arg(long)]
    pub b0: String,
    #[arg(long)]
    pub b1: String,
    /// Equation document whose c0..c3 are the numerator cubic; c3 may vanish.
    #[arg(long)]
    pub num: String,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub y0: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Equation to test; a random one per trial when absent.
    #[arg(long)]
    pub eq: Option<String>,
    #[arg(long, default_value_t = 25)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "max-n", default_value_t = 3)]
    pub max_n: usize,
    /// Truncation order of random equations.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Parses `argv` (program name first) and runs it, writing the report to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn main_with_args<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match run(&cli.command, &args) {
        Ok(report) => {
            let _ = writeln!(out, "{}", report.to_json());
            if report.passed {
                EXIT_OK
            } else {
                for c in report.checks.iter().filter(|c| !c.pass) {
                    let _ = writeln!(err, "check failed: {} (first failing order {:?})", c.name, c.first_failing_order);
                }
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run(command: &Command, args: &[String]) -> Result<Report, CliError> {
    match command {
        Command::Invariants { eq, max_n } => invariants(args, eq, *max_n),
        Command::Canonical { eq, rho } => canonical(args, eq, rho),
        Command::Transform { eq, map } => transform_cmd(args, eq, map),
        Command::Solve { eq, y0, order } => solve(args, eq, y0, *order),
        Command::Reduce2(a) => reduce2(args, a),
        Command::Cartan { eq, points } => cartan(args, eq, points),
        Command::Equiv { j1, j2, k, h } => equiv(args, j1, j2, k.as_ref(), h.as_ref()),
        Command::Verify(a) => verify(args, a),
    }
}

fn invariants(args: &[String], eq_arg: &str, max_n: usize) -> Result<Report, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let src = Source::load(eq_arg)?;
    let eq = documents::equation_from(&src)?;
    let mut report = Report::new("invariants", args, &[&src.text]);
    let s = s_hierarchy(&eq, max_n)?;
    for (i, sn) in s.iter().enumerate() {
        report.output(format!("s{}", 2 * i + 3), sn);
    }
    report.output("r", connection(&eq));
    for c in checks::operator_identity(&eq, max_n)? {
        report.check(c);
    }
    Ok(report)
}

fn canonical(args: &[String], eq_arg: &str, rho: &Rational) -> Result<Report, CliError> {
    let src = Source::load(eq_arg)?;
    let eq = documents::equation_from(&src)?;
    let mut report = Report::new("canonical", args, &[&src.text]);
    let cd = canonicalize(&eq, rho)?;
    report.output("V", &cd.v);
    report.output("U", &cd.u);
    report.output("M", &cd.m);
    report.output("J", &cd.j);
    report.output("X", &cd.x_of_x);
    report.output("J_of_X", &cd.j_in_x);
    report.output("rho", &cd.rho);
    for c in checks::canonical_identities(&eq, rho, 1)? {
        report.check(c);
    }
    Ok(report)
}

fn equation_outputs(report: &mut Report, prefix: &str, eq: &ChartedEquation) {
    for (i, c) in eq.eq.coefficients().iter().enumerate() {
        report.output(format!("{prefix}c{i}"), c);
    }
    report.output(format!("{prefix}dvar"), &eq.dvar);
}

fn transform_cmd(args: &[String], eq_arg: &str, map_arg: &str) -> Result<Report, CliError> {
    let eq_src = Source::load(eq_arg)?;
    let map_src = Source::load(map_arg)?;
    let eq = documents::equation_from(&eq_src)?;
    let t = documents::map_from(&map_src)?;
    if t.order() != eq.order() {
        return Err(crate::Error::OrderMismatch { left: eq.order(), right: t.order() }.into());
    }
    let mut report = Report::new("transform", args, &[&eq_src.text, &map_src.text]);
    let out = transform(&eq, &t)?;
    equation_outputs(&mut report, "", &out);
    report.check(checks::leading_invariance(&eq, &t)?);
    for c in checks::tensor_law(&eq, &t, 1)? {
        report.check(c);
    }
    report.check(checks::connection_law(&eq, &t)?);
    Ok(report)
}

fn solve(args: &[String], eq_arg: &str, y0: &Rational, order: usize) -> Result<Report, CliError> {
    let src = Source::load(eq_arg)?;
    let eq = documents::equation_from(&src)?;
    let mut report = Report::new("solve", args, &[&src.text]);
    let y = series_solve(&eq, y0.clone(), order)?;
    let truncated = truncate_equation(&eq, order)?;
    let residual = ode_residual(&truncated, &y)?;
    report.check(CheckResult::compare("ode_residual", &residual, &Jet::zero(order)));
    report.output("y", &y);
    report.output("residual", &residual);
    Ok(report)
}

fn truncate_equation(eq: &ChartedEquation, order: usize) -> Result<ChartedEquation, crate::Error> {
    let [c0, c1, c2, c3] = eq.eq.coefficients().clone().map(|c| c.truncate(order));
    Ok(crate::equation::AbelEquation::new(c0, c1, c2, c3)?.into())
}

fn reduce2(args: &[String], a: &Reduce2Args) -> Result<Report, CliError> {
    let b0_src = Source::load(&a.b0)?;
    let b1_src = Source::load(&a.b1)?;
    let num_src = Source::load(&a.num)?;
    let b0 = documents::series_from(&b0_src)?;
    let b1 = documents::series_from(&b1_src)?;
    let num_doc: EquationDocument = num_src.parse()?;
    let num = documents::cubic_from(&num_src, &num_doc)?;
    let mut report = Report::new("reduce2", args, &[&b0_src.text, &b1_src.text, &num_src.text]);
    let second = SecondKindEquation::new(b0, b1, num)?;
    let first: ChartedEquation = second.reduce()?.into();
    equation_outputs(&mut report, "", &first);
    if let Some(y0) = &a.y0 {
        let y = second.series_solve(y0.clone(), second.order())?;
        let z = second.substitution(&y)?;
        let residual = ode_residual(&first, &z)?;
        report.check(CheckResult::compare("reduced_residual", &residual, &Jet::zero(second.order())));
        report.output("y", &y);
        report.output("z", &z);
    }
    Ok(report)
}

fn two_form(w: &TwoForm) -> Output {
    Output::Record(
        [("dx_dy", &w.dx_dy), ("dx_du", &w.dx_du), ("dy_du", &w.dy_du)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), Output::from(v)))
            .collect(),
    )
}

fn cartan(args: &[String], eq_arg: &str, points_arg: &str) -> Result<Report, CliError> {
    let eq_src = Source::load(eq_arg)?;
    let pts_src = Source::load(points_arg)?;
    let eq = documents::equation_from(&eq_src)?;
    if !eq.is_original() {
        return Err(CliError::Usage("cartan needs an equation in its original variable".into()));
    }
    let points = documents::points_from(&pts_src)?;
    let mut report = Report::new("cartan", args, &[&eq_src.text, &pts_src.text]);
    let mut per_point = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let res = structure_residuals(&eq.eq, p)?;
        let duality = duality_matrix(&eq.eq, p)?;
        let identity = duality
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, v)| if r == c { v.is_one() } else { v.is_zero() }));
        report.check(CheckResult::flag(format!("structure_theta1_p{i}"), res.theta1.is_zero()));
        report.check(CheckResult::flag(format!("structure_theta2_p{i}"), res.theta2.is_zero()));
        report.check(CheckResult::flag(format!("structure_varpi_p{i}"), res.varpi.is_zero()));
        report.check(CheckResult::flag(format!("duality_p{i}"), identity));
        let mut rec = std::collections::BTreeMap::new();
        rec.insert("I".to_string(), Output::from(invariant_i(&eq.eq, p)));
        rec.insert("varpi_curvature".to_string(), Output::from(varpi_curvature(&eq.eq, p)));
        rec.insert("residual_theta1".to_string(), two_form(&res.theta1));
        rec.insert("residual_theta2".to_string(), two_form(&res.theta2));
        rec.insert("residual_varpi".to_string(), two_form(&res.varpi));
        rec.insert(
            "duality".to_string(),
            Output::List(duality.iter().map(|row| Output::List(row.iter().map(Output::from).collect())).collect()),
        );
        per_point.push(Output::Record(rec));
    }
    report.output("points", Output::List(per_point));
    let remark = s3_remark_check(&eq.eq);
    report.output("v_is_solution", remark.is_solution);
    report.output("s3_vanishes", remark.s3_vanishes);
    report.check(CheckResult::flag("s3_remark", remark.agree()));
    Ok(report)
}

fn equiv(
    args: &[String],
    j1_arg: &str,
    j2_arg: &str,
    k: Option<&Rational>,
    h: Option<&Rational>,
) -> Result<Report, CliError> {
    let j1_src = Source::load(j1_arg)?;
    let j2_src = Source::load(j2_arg)?;
    let j1 = documents::series_from(&j1_src)?;
    let j2 = documents::series_from(&j2_src)?;
    let mut report = Report::new("equiv", args, &[&j1_src.text, &j2_src.text]);
    let found = match (k, h) {
        (None, None) => find_moduli(&j1, &j2),
        _ => {
            let m = ModuliMap::new(
                k.cloned().unwrap_or_else(Rational::one),
                h.cloned().unwrap_or_else(Rational::zero),
            )?;
            canonical_related(&j1, &j2, &m)?.then_some(m)
        }
    };
    if let Some(m) = &found {
        report.output("K", &m.k);
        report.output("h", &m.h);
    }
    report.check(CheckResult::flag("equivalent", found.is_some()));
    Ok(report)
}

fn verify(args: &[String], a: &VerifyArgs) -> Result<Report, CliError> {
    if a.max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let src = a.eq.as_deref().map(Source::load).transpose()?;
    let fixed = src.as_ref().map(documents::equation_from).transpose()?;
    let inputs: Vec<&str> = src.iter().map(|s| s.text.as_str()).collect();
    let mut report = Report::new("verify", args, &inputs);
    report.seed = Some(a.seed);

    let trials: Vec<Result<Vec<CheckResult>, String>> = (0..a.trials)
        .into_par_iter()
        .map(|i| run_seeded_trial(fixed.as_ref(), a.seed, i, a.order, a.max_n))
        .collect();

    let mut merged: Vec<CheckResult> = Vec::new();
    let mut failed = Vec::new();
    for (i, trial) in trials.into_iter().enumerate() {
        match trial {
            Ok(results) => {
                if results.iter().any(|c| !c.pass) {
                    failed.push(Output::Count(i as u64));
                }
                for c in results {
                    merge(&mut merged, c);
                }
            }
            Err(e) => {
                failed.push(Output::Count(i as u64));
                merge(&mut merged, CheckResult::flag(format!("trial_error: {e}"), false));
            }
        }
    }
    report.output("trials", Output::Count(a.trials));
    report.output("failed_trials", Output::List(failed));
    for c in merged {
        report.check(c);
    }
    Ok(report)
}

/// Trial `i` draws from its own stream seeded with `seed + i`.
pub fn run_seeded_trial(
    fixed: Option<&ChartedEquation>,
    seed: u64,
    i: u64,
    order: usize,
    max_n: usize,
) -> Result<Vec<CheckResult>, String> {
    let mut rng = SplitMix64::new(seed.wrapping_add(i));
    let eq = match fixed {
        Some(eq) => eq.clone(),
        None => rng.equation(order),
    };
    checks::run_trial(&eq, max_n, &mut rng).map_err(|e| e.to_string())
}

/// Folds one trial's result into the running summary for its check name.
fn merge(into: &mut Vec<CheckResult>, c: CheckResult) {
    let Some(acc) = into.iter_mut().find(|a| a.name == c.name) else {
        into.push(c);
        return;
    };
    acc.pass &= c.pass;
    acc.checked_through = match (acc.checked_through, c.checked_through) {
        (Some(a), Some(b)) => Some(a.min(b)),
        _ => None,
    };
    acc.first_failing_order = match (acc.first_failing_order, c.first_failing_order) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
}
