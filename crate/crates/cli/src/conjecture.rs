use clap::Args;
use slitpath_core::harness::sweep_conjecture;
use slitpath_core::{VerificationReport, Weights};

use crate::output::{print_json, weights_triple, write_csv, Format, FormatArgs};
use crate::CmdResult;

pub const CSV_HELP: &str = "CSV columns: m,predicted,observed\n  \
predicted is floor(2(m-1)/3); observed is the smallest number of terms whose\n  \
partial sum equals the exact denominator, empty if none does.";

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    /// Largest m to check; the sweep covers 3..=m-max
    #[arg(long)]
    m_max: usize,
    /// Step weights a1,a2,a3
    #[arg(long, default_value = "1,1,1")]
    weights: Weights,
    #[command(flatten)]
    format: FormatArgs,
}

pub fn run(args: &ConjectureArgs) -> CmdResult {
    if args.m_max < 3 {
        return Err(format!("--m-max must be at least 3, got {}", args.m_max));
    }
    let report = sweep_conjecture(args.m_max, &args.weights);
    match args.format.resolve() {
        Format::Human => print_human(&report, &args.weights),
        Format::Json => print_json(&report),
        Format::Csv => write_csv(&["m", "predicted", "observed"], csv_rows(&report))?,
    }
    Ok(report.passed())
}

fn observed(
    report: &VerificationReport,
) -> impl Iterator<Item = (usize, usize, Option<usize>)> + '_ {
    report.instances.iter().map(|inst| {
        let c = inst
            .conjecture
            .as_ref()
            .expect("conjecture sweeps record predictions");
        (inst.m, c.predicted, c.observed)
    })
}

fn print_human(report: &VerificationReport, w: &Weights) {
    println!("weights a1,a2,a3 = {}", weights_triple(w));
    println!("{:>4} {:>9} {:>8}  status", "m", "predicted", "observed");
    for (inst, (m, predicted, obs)) in report.instances.iter().zip(observed(report)) {
        let obs = obs.map_or_else(|| "-".to_string(), |n| n.to_string());
        let status = match inst.first_failure() {
            None => "pass".to_string(),
            Some(c) => format!("FAIL {}: {}", c.name, c.detail),
        };
        println!("{m:>4} {predicted:>9} {obs:>8}  {status}");
    }
    let failed = report.failures().count();
    println!(
        "{} values of m, {}",
        report.instances.len(),
        if failed == 0 {
            "all match".to_string()
        } else {
            format!("{failed} mismatches")
        }
    );
}

fn csv_rows(report: &VerificationReport) -> Vec<[String; 3]> {
    observed(report)
        .map(|(m, p, o)| {
            [
                m.to_string(),
                p.to_string(),
                o.map_or_else(String::new, |n| n.to_string()),
            ]
        })
        .collect()
}
