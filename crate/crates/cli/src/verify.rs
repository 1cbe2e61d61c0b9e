use std::ops::RangeInclusive;

use clap::Args;
use slitpath_core::exact::format_rational;
use slitpath_core::harness::{sweep_equivalence, Oracle, OracleSet};
use slitpath_core::oracles::DEFAULT_MAX_ENUM;
use slitpath_core::{SeriesOrder, SweepConfig, VerificationReport, Weights};

use crate::output::{print_json, weights_triple, write_csv, Format, FormatArgs};
use crate::CmdResult;

/// Distance above the barrier used when `--order` is not given.
const DEFAULT_ORDER_MARGIN: usize = 15;

pub const CSV_HELP: &str = "CSV columns: m,a1,a2,a3,order,check,pass,detail\n  \
One row per executed check; weights are exact rationals p/q, pass is true or false.\n\n\
Environment: SLITPATH_MAX_ENUM caps the path-enumeration depth (default 30).";

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Barrier separation, a single value or an inclusive range such as 2..10
    #[arg(long, value_parser = parse_m_range)]
    m: RangeInclusive<usize>,
    /// Step weights a1,a2,a3; repeat the flag for several weight sets
    #[arg(long, required = true)]
    weights: Vec<Weights>,
    /// Series order for every m [default: m + 15]
    #[arg(long)]
    order: Option<usize>,
    /// Oracle to compare the closed form with (series, matrix, enumerate,
    /// charpoly); repeatable [default: all]
    #[arg(long = "oracle")]
    oracles: Vec<Oracle>,
    #[command(flatten)]
    format: FormatArgs,
}

fn parse_m_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid m value {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let m = parse(s)?;
            (m, m)
        }
    };
    if lo < 2 {
        return Err(format!("m must be at least 2, got {lo}"));
    }
    if lo > hi {
        return Err(format!("empty m range {s}"));
    }
    Ok(lo..=hi)
}

pub fn enumeration_limit() -> Result<usize, String> {
    match std::env::var("SLITPATH_MAX_ENUM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("SLITPATH_MAX_ENUM must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_ENUM),
    }
}

pub fn run(args: &VerifyArgs) -> CmdResult {
    let oracles = if args.oracles.is_empty() {
        OracleSet::all()
    } else {
        OracleSet::series_and(&args.oracles)
    };
    let order = match args.order {
        Some(n) => SeriesOrder::Fixed(n),
        None => SeriesOrder::AboveBarrier(DEFAULT_ORDER_MARGIN),
    };
    let (lo, hi) = (*args.m.start(), *args.m.end());
    if let Some(n) = args.order {
        if n + 1 < hi {
            return Err(format!(
                "order {n} is below m - 1 = {} for m = {hi}",
                hi - 1
            ));
        }
    }
    let limit = enumeration_limit()?;
    let deepest = order.resolve(hi).max(order.resolve(lo));
    if oracles.enumeration && deepest > limit {
        return Err(format!(
            "order {deepest} exceeds the enumeration limit {limit}; raise SLITPATH_MAX_ENUM or drop the enumerate oracle"
        ));
    }

    let cfg = SweepConfig::new(args.m.clone(), args.weights.clone(), order)
        .with_oracles(oracles)
        .with_enumeration_limit(limit);
    let report = sweep_equivalence(&cfg);
    match args.format.resolve() {
        Format::Human => print_human(&report),
        Format::Json => print_json(&report),
        Format::Csv => write_csv(
            &["m", "a1", "a2", "a3", "order", "check", "pass", "detail"],
            csv_rows(&report),
        )?,
    }
    Ok(report.passed())
}

fn print_human(report: &VerificationReport) {
    for inst in &report.instances {
        let order = inst
            .order
            .map_or_else(|| "-".to_string(), |o| o.to_string());
        let names: Vec<&str> = inst.checks.iter().map(|c| c.name.as_str()).collect();
        let status = if inst.passed() { "pass" } else { "FAIL" };
        println!(
            "m={:<3} weights={:<12} order={:<4} {status} [{}]",
            inst.m,
            weights_triple(&inst.weights),
            order,
            names.join(", ")
        );
        for c in inst.checks.iter().filter(|c| !c.pass) {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    let failed = report.failures().count();
    println!(
        "{} instances, {} checks, {}",
        report.instances.len(),
        report.check_count(),
        if failed == 0 {
            "all passed".to_string()
        } else {
            format!("{failed} instances failed")
        }
    );
}

fn csv_rows(report: &VerificationReport) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for inst in &report.instances {
        let w = &inst.weights;
        for c in &inst.checks {
            rows.push(vec![
                inst.m.to_string(),
                format_rational(w.a1()),
                format_rational(w.a2()),
                format_rational(w.a3()),
                inst.order.map_or_else(String::new, |o| o.to_string()),
                c.name.clone(),
                c.pass.to_string(),
                c.detail.clone(),
            ]);
        }
    }
    rows
}
