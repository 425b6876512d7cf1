//! Identity checks shared by the subcommands and the `verify` harness.
//!
//! Every check compares two jets built along different routes and reports
//! the first order (within the common valid range) where they disagree.

use serde::Serialize;

use crate::canonical::{c3u_power, canonicalize, compatible_rho, d_j_d_x, reconstructed_s3};
use crate::equation::{compose_maps, expected_leading, transform, ChartedEquation, PseudoGroupMap};
use crate::error::Result;
use crate::grading::scaling_map;
use crate::invariants::{connection, covariant_derivative, nabla_raise, s_hierarchy};
use crate::series::rational::rational_powi;
use crate::series::{Jet, Rational};
use crate::solve::{ode_residual, series_solve, transport_solution};

use super::rng::SplitMix64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Highest order both sides were trusted to; `None` means nothing could
    /// be compared.
    pub checked_through: Option<usize>,
    pub first_failing_order: Option<usize>,
}

impl CheckResult {
    pub fn compare(name: impl Into<String>, lhs: &Jet, rhs: &Jet) -> Self {
        let checked_through = lhs.valid_len().min(rhs.valid_len()).checked_sub(1);
        let first_failing_order = if lhs.order() == rhs.order() {
            lhs.first_mismatch(rhs)
        } else {
            Some(0)
        };
        Self {
            name: name.into(),
            pass: first_failing_order.is_none() && checked_through.is_some(),
            checked_through,
            first_failing_order,
        }
    }

    pub fn flag(name: impl Into<String>, pass: bool) -> Self {
        Self { name: name.into(), pass, checked_through: None, first_failing_order: None }
    }
}

/// `γ3 = (u²/μ) c3`.
pub fn leading_invariance(eq: &ChartedEquation, t: &PseudoGroupMap) -> Result<CheckResult> {
    let out = transform(eq, t)?;
    Ok(CheckResult::compare("leading_relative_invariance", out.eq.c3(), &expected_leading(eq, t)?))
}

/// `s_{2n+1}(t·eq) = (u/μ)^(2n+1) s_{2n+1}(eq)` for `n = 1..=n_max`.
pub fn tensor_law(eq: &ChartedEquation, t: &PseudoGroupMap, n_max: usize) -> Result<Vec<CheckResult>> {
    let out = transform(eq, t)?;
    let jac = t.in_chart(eq)?.jacobian();
    let before = s_hierarchy(eq, n_max)?;
    let after = s_hierarchy(&out, n_max)?;
    Ok((1..=n_max)
        .map(|n| {
            let factor = jac.pow(2 * n as u32 + 1);
            CheckResult::compare(format!("tensor_law_n{n}"), &after[n - 1], &(&factor * &before[n - 1]))
        })
        .collect())
}

/// `r̃ = (1/μ)(r + D log(u/μ))`, with the logarithm taken after normalizing
/// the constant term of `u/μ` to one.
pub fn connection_law(eq: &ChartedEquation, t: &PseudoGroupMap) -> Result<CheckResult> {
    let out = transform(eq, t)?;
    let t = t.in_chart(eq)?;
    let jac = t.jacobian();
    let unit = jac.scale(&jac.constant_term().recip());
    let dlog = eq.derive(&unit.log()?);
    let expected = (connection(eq) + dlog).checked_div(&t.mu)?;
    Ok(CheckResult::compare("connection_law", &connection(&out), &expected))
}

/// For `φ̃ = (u/μ)ⁿ φ`, `∇̃ₙ φ̃ = (uⁿ/μⁿ⁺¹) ∇ₙ φ`.
pub fn covariant_multiplier(
    eq: &ChartedEquation,
    t: &PseudoGroupMap,
    phi: &Jet,
    n: i32,
) -> Result<CheckResult> {
    let out = transform(eq, t)?;
    let t = t.in_chart(eq)?;
    let jac = t.jacobian();
    let phi_t = &jac.powi(n)? * phi;
    let lhs = covariant_derivative(&out, &phi_t, i64::from(n));
    let factor = jac.powi(n)?.checked_div(&t.mu)?;
    let rhs = &factor * &covariant_derivative(eq, phi, i64::from(n));
    Ok(CheckResult::compare(format!("covariant_multiplier_n{n}"), &lhs, &rhs))
}

/// `c3 ∇_{2n-1} s_{2n-1} = s_{2n+1}` for `n = 2..=n_max`.
pub fn operator_identity(eq: &ChartedEquation, n_max: usize) -> Result<Vec<CheckResult>> {
    let s = s_hierarchy(eq, n_max)?;
    Ok((2..=n_max)
        .map(|n| {
            let raised = nabla_raise(eq, &s[n - 2], n as i64);
            CheckResult::compare(format!("operator_identity_n{n}"), &raised, &s[n - 1])
        })
        .collect())
}

/// Scaling subgroups: multipliers `λ^(4n+2)` (weight) and `λ^(2n+1)`
/// (degree) on `s_{2n+1}`.
pub fn grading_laws(eq: &ChartedEquation, lambda: &Rational, n_max: usize) -> Result<Vec<CheckResult>> {
    let before = s_hierarchy(eq, n_max)?;
    let mut out = Vec::new();
    for (label, s, r) in [("weight", 1, 1), ("degree", 1, 0)] {
        let t = scaling_map(lambda, s, r, eq.order())?;
        let after = s_hierarchy(&transform(eq, &t)?, n_max)?;
        for n in 1..=n_max {
            let exponent = if r == 1 { 4 * n + 2 } else { 2 * n + 1 } as i32;
            let expected = before[n - 1].scale(&rational_powi(lambda, exponent));
            out.push(CheckResult::compare(format!("grading_{label}_n{n}"), &after[n - 1], &expected));
        }
    }
    Ok(out)
}

/// `t2 · (t1 · eq) = (t2 ∘ t1) · eq`.
pub fn group_action(eq: &ChartedEquation, t1: &PseudoGroupMap, t2: &PseudoGroupMap) -> Result<Vec<CheckResult>> {
    let stepwise = transform(&transform(eq, t1)?, t2)?;
    let direct = transform(eq, &compose_maps(t2, t1)?)?;
    let mut out: Vec<CheckResult> = stepwise
        .eq
        .coefficients()
        .iter()
        .zip(direct.eq.coefficients())
        .enumerate()
        .map(|(i, (a, b))| CheckResult::compare(format!("group_action_c{i}"), a, b))
        .collect();
    out.push(CheckResult::compare("group_action_chart", &stepwise.dvar, &direct.dvar));
    Ok(out)
}

/// `J (c3 U)³ = s3` and `dⁿJ/dXⁿ (c3 U)^(2n+3) = s_{2n+3}` for `n = 0..n_max`.
pub fn canonical_identities(eq: &ChartedEquation, rho: &Rational, n_max: usize) -> Result<Vec<CheckResult>> {
    let cd = canonicalize(eq, rho)?;
    let s = s_hierarchy(eq, n_max + 1)?;
    let mut out = vec![CheckResult::compare("canonical_j_times_c3u_cubed", &reconstructed_s3(eq, &cd), &s[0])];
    for n in 0..=n_max {
        let lhs = &d_j_d_x(&cd, n) * &c3u_power(eq, &cd, 2 * n as u32 + 3);
        out.push(CheckResult::compare(format!("canonical_djdx_n{n}"), &lhs, &s[n]));
    }
    Ok(out)
}

/// With `ρ̃` chosen so that `Ũ(0) = U(0)/u(0)`: `Ũ = U/u`, `X̃ = X`, `J̃ = J`.
pub fn absolute_invariance(eq: &ChartedEquation, t: &PseudoGroupMap, rho: &Rational) -> Result<Vec<CheckResult>> {
    let out = transform(eq, t)?;
    let cd = canonicalize(eq, rho)?;
    let cdt = canonicalize(&out, &compatible_rho(eq, t, rho)?)?;
    let u_over = cd.u.checked_div(&t.in_chart(eq)?.u)?;
    Ok(vec![
        CheckResult::compare("absolute_u", &cdt.u, &u_over),
        CheckResult::compare("absolute_x", &cdt.x_of_x, &cd.x_of_x),
        CheckResult::compare("absolute_j", &cdt.j, &cd.j),
        CheckResult::compare("absolute_j_in_x", &cdt.j_in_x, &cd.j_in_x),
    ])
}

/// A series solution of `eq` maps to one of `t · eq`.
pub fn solution_transport(eq: &ChartedEquation, t: &PseudoGroupMap, y0: &Rational) -> Result<CheckResult> {
    let y = series_solve(eq, y0.clone(), eq.order())?;
    let own = ode_residual(eq, &y)?;
    let out = transform(eq, t)?;
    let eta = transport_solution(eq, t, &y)?;
    let residual = ode_residual(&out, &eta)?;
    let zero = Jet::zero(eq.order());
    let mut check = CheckResult::compare("solution_transport", &residual, &zero);
    if !own.agrees_with(&zero) {
        check.pass = false;
    }
    Ok(check)
}

/// Runs the whole suite on one random trial.
pub fn run_trial(eq: &ChartedEquation, n_max: usize, rng: &mut SplitMix64) -> Result<Vec<CheckResult>> {
    let order = eq.order();
    let t1 = rng.map(order);
    let t2 = rng.map(order);
    let phi = rng.jet(order);
    let lambda = rng.nonzero_rational();
    let rho = rng.nonzero_rational();
    let y0 = rng.rational();

    let mut out = vec![leading_invariance(eq, &t1)?];
    out.extend(tensor_law(eq, &t1, n_max)?);
    out.push(connection_law(eq, &t1)?);
    for n in -2..=4 {
        out.push(covariant_multiplier(eq, &t1, &phi, n)?);
    }
    out.extend(operator_identity(eq, n_max.max(2))?);
    out.extend(grading_laws(eq, &lambda, n_max)?);
    out.extend(group_action(eq, &t1, &t2)?);
    out.extend(canonical_identities(eq, &rho, n_max.saturating_sub(1))?);
    out.extend(absolute_invariance(eq, &t1, &rho)?);
    out.push(solution_transport(eq, &t1, &y0)?);
    Ok(out)
}
