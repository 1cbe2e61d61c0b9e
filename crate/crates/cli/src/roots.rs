use clap::Args;
use num_complex::Complex64;
use serde::Serialize;
use slitpath_core::genfun::genfun;
use slitpath_core::oracles::reduction::{ANALYTIC_TOL, FINITE_DIFF_TOL};
use slitpath_core::oracles::{
    closed_form_numeric, cubic_roots, reduction_identity_check, root_series_check, Cubic,
};
use slitpath_core::{SlitSpec, Weights};

use crate::output::{print_json, weights_triple, write_csv, Format, FormatArgs};
use crate::CmdResult;

pub const CSV_HELP: &str = "CSV columns: check,value,bound,pass,detail\n  \
value is the residual or quantity checked (empty when it could not be computed),\n  \
bound the condition it must meet (empty for informational rows).";

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Barrier separation
    #[arg(long)]
    m: usize,
    /// Step weights a1,a2,a3
    #[arg(long)]
    weights: Weights,
    /// Point at which the cubic and the generating function are evaluated
    #[arg(long)]
    z: f64,
    /// Deformation parameter of the cubic's constant term
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    /// Terms of the small-root expansion (clamped to m-2)
    #[arg(long, default_value_t = 5)]
    terms: usize,
    /// Nonzero-order series coefficients compared with the closed form, from z^(m-1) up
    #[arg(long, default_value_t = 13)]
    series_terms: usize,
    /// Bound on the relative residuals
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Serialize)]
struct Row {
    check: String,
    value: Option<f64>,
    bound: Option<String>,
    pass: bool,
    detail: String,
}

impl Row {
    fn info(check: &str, value: f64, detail: impl Into<String>) -> Self {
        Row {
            check: check.into(),
            value: Some(value),
            bound: None,
            pass: true,
            detail: detail.into(),
        }
    }

    fn at_most(check: &str, value: f64, bound: f64, detail: impl Into<String>) -> Self {
        Row {
            check: check.into(),
            value: Some(value),
            bound: Some(format!("<= {bound:e}")),
            pass: value <= bound,
            detail: detail.into(),
        }
    }

    fn error(check: &str, err: impl ToString) -> Self {
        Row {
            check: check.into(),
            value: None,
            bound: None,
            pass: false,
            detail: err.to_string(),
        }
    }
}

#[derive(Serialize)]
struct RootsReport {
    m: usize,
    weights: Weights,
    z: f64,
    q: f64,
    rows: Vec<Row>,
}

fn complex(c: Complex64) -> String {
    format!("{:e}{:+e}i", c.re, c.im)
}

pub fn run(args: &RootsArgs) -> CmdResult {
    let spec = SlitSpec::new(args.m).map_err(|e| e.to_string())?;
    for (name, v) in [("z", args.z), ("q", args.q), ("tolerance", args.tolerance)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(format!("--{name} must be positive and finite, got {v}"));
        }
    }
    if args.series_terms == 0 {
        return Err("--series-terms must be at least 1".into());
    }

    let w = &args.weights;
    let (z, q, tol) = (args.z, args.q, args.tolerance);
    let mut rows = Vec::new();

    match cubic_roots(z, q, w) {
        Ok(r) => {
            let detail = r.as_array().map(complex).join(", ");
            rows.push(Row::at_most(
                "vieta",
                r.vieta_residual(z, q, w),
                tol,
                format!("roots {detail}"),
            ));
        }
        Err(e) => rows.push(Row::error("vieta", e)),
    }

    match closed_form_numeric(z, q, &spec, w) {
        Ok(cf) => {
            rows.push(Row::info(
                "closed_form",
                cf,
                format!("start {}, q = {q}", spec.start()),
            ));
            rows.push(series_row(&spec, w, z, q, cf, args.series_terms, tol)?);
        }
        Err(e) => rows.push(Row::error("closed_form", e)),
    }

    let terms = args.terms.min(args.m - 2);
    match root_series_check(&spec, w, z, terms) {
        Ok(r) if terms == 0 => rows.push(Row::info(
            "small_root_series",
            r.residuals[0],
            format!("no expansion terms available for m = {}", args.m),
        )),
        Ok(r) => {
            let last = r.residuals[terms];
            let shown: Vec<String> = r.residuals.iter().map(|x| format!("{x:e}")).collect();
            let mut row = Row::at_most(
                "small_root_series",
                last,
                tol,
                format!("residuals for 0..={terms} terms: {}", shown.join(", ")),
            );
            if !r.non_increasing() {
                row.pass = false;
                row.detail.push_str(" (not monotone)");
            }
            rows.push(row);
            rows.push(Row::info(
                "small_q_prefactor",
                r.small_q_prefactor_residual,
                "relative deviation of b^(1-m) from (a1 z q)^(1-m) at q = 1e-6",
            ));
            for (i, fit) in r.large_roots.iter().enumerate() {
                rows.push(Row {
                    check: format!("large_root_{}_order", i + 1),
                    value: Some(fit.order),
                    bound: Some(">= 1.5".into()),
                    pass: fit.order >= 1.5,
                    detail: format!(
                        "quadratic root {}, residuals {:e}, {:e}",
                        complex(fit.quadratic_root),
                        fit.residuals[0],
                        fit.residuals[1]
                    ),
                });
            }
        }
        Err(e) => rows.push(Row::error("small_root_series", e)),
    }

    match reduction_identity_check(&Cubic::characteristic(z, w), q) {
        Ok(r) => {
            rows.push(Row::at_most(
                "derivative_identity",
                r.derivative_residual,
                ANALYTIC_TOL,
                "F'(r) against b0 times the root differences",
            ));
            rows.push(Row::at_most(
                "discriminant_identity",
                r.discriminant_residual,
                ANALYTIC_TOL,
                format!("discriminant {:e}", r.discriminant),
            ));
            rows.push(Row::at_most(
                "inverse_derivative",
                r.inverse_derivative_residual,
                FINITE_DIFF_TOL,
                format!(
                    "dr/dq by central differences; signs {:?}",
                    r.power_identity_signs
                ),
            ));
        }
        Err(e) => rows.push(Row::error("reduction_identities", e)),
    }

    let passed = rows.iter().all(|r| r.pass);
    match args.format.resolve() {
        Format::Human => print_human(args, &rows),
        Format::Json => print_json(&RootsReport {
            m: args.m,
            weights: w.clone(),
            z,
            q,
            rows,
        }),
        Format::Csv => write_csv(
            &["check", "value", "bound", "pass", "detail"],
            rows.iter().map(|r| {
                [
                    r.check.clone(),
                    r.value.map_or_else(String::new, |v| format!("{v:e}")),
                    r.bound.clone().unwrap_or_default(),
                    r.pass.to_string(),
                    r.detail.clone(),
                ]
            }),
        )?,
    }
    Ok(passed)
}

/// Closed form against the truncated series. The series only represents the
/// closed form at `q = 1`; otherwise the row is informational.
fn series_row(
    spec: &SlitSpec,
    w: &Weights,
    z: f64,
    q: f64,
    cf: f64,
    terms: usize,
    tol: f64,
) -> Result<Row, String> {
    let first = spec.start();
    let upto = first + terms - 1;
    let gf = genfun(spec, w, upto).map_err(|e| e.to_string())?;
    let truncated = gf.eval_truncated(z, upto);
    let rel = (cf - truncated).abs() / cf.abs();
    let mut detail = format!("series z^{first}..z^{upto} gives {truncated:e}");
    if q != 1.0 {
        return Ok(Row::info(
            "series_truncation",
            rel,
            detail + "; compared only at q = 1",
        ));
    }
    let magnitudes: Vec<f64> = (first..=upto)
        .map(|n| slitpath_core::exact::to_f64(&gf.coefficient(n)).abs() * z.powi(n as i32))
        .collect();
    // zero coefficients recur with period up to 3, so compare blocks of three
    if rel > tol && magnitudes.len() >= 6 {
        let tail: f64 = magnitudes[magnitudes.len() - 3..].iter().sum();
        let before: f64 = magnitudes[magnitudes.len() - 6..magnitudes.len() - 3]
            .iter()
            .sum();
        if tail > before {
            detail.push_str(&format!(
                "; series terms grow at z = {z}, outside the radius of convergence"
            ));
        }
    }
    Ok(Row::at_most("series_truncation", rel, tol, detail))
}

fn print_human(args: &RootsArgs, rows: &[Row]) {
    println!(
        "m = {}, weights a1,a2,a3 = {}, z = {}, q = {}",
        args.m,
        weights_triple(&args.weights),
        args.z,
        args.q
    );
    let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
    for r in rows {
        let value = r
            .value
            .map_or_else(|| "-".to_string(), |v| format!("{v:e}"));
        let bound = r.bound.as_deref().unwrap_or("");
        let status = if r.pass { "pass" } else { "FAIL" };
        println!(
            "{:<width$}  {value:<24} {bound:<10} {status}  {}",
            r.check, r.detail
        );
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    println!(
        "{}",
        if failed == 0 {
            "all checks passed".to_string()
        } else {
            format!("{failed} checks failed")
        }
    );
}
