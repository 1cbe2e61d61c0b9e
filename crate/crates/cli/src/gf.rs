use clap::Args;
use serde::Serialize;
use slitpath_core::exact::format_rational;
use slitpath_core::genfun::genfun;
use slitpath_core::{BigRat, SlitSpec, Weights};

use crate::output::{human_rational, print_json, weights_triple, write_csv, Format, FormatArgs};
use crate::CmdResult;

pub const CSV_HELP: &str = "CSV columns: part,exponent,coefficient\n  \
part is numerator, denominator or series; coefficient is an exact rational p/q.\n  \
Series rows cover every exponent from m-1 to the order, zeros included.";

#[derive(Args, Debug)]
pub struct GfArgs {
    /// Barrier separation: paths start at m-1 and are absorbed at 0 or at m or beyond
    #[arg(long)]
    m: usize,
    /// Step weights a1,a2,a3 for the -1, +1 and +2 steps (integers, decimals or p/q)
    #[arg(long)]
    weights: Weights,
    /// Highest power of z in the series (at least m-1)
    #[arg(long)]
    order: usize,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Serialize)]
struct Term {
    exponent: usize,
    coefficient: String,
}

impl Term {
    fn new(exponent: usize, c: &BigRat) -> Self {
        Term {
            exponent,
            coefficient: format_rational(c),
        }
    }
}

#[derive(Serialize)]
struct GfReport {
    m: usize,
    weights: Weights,
    order: usize,
    numerator: Term,
    denominator: Vec<Term>,
    series: Vec<Term>,
}

pub fn run(args: &GfArgs) -> CmdResult {
    let spec = SlitSpec::new(args.m).map_err(|e| e.to_string())?;
    let gf = genfun(&spec, &args.weights, args.order).map_err(|e| e.to_string())?;
    let shift = gf.numerator_shift();
    let series_range = shift..=gf.order();

    match args.format.resolve() {
        Format::Human => {
            println!(
                "m = {}, weights a1,a2,a3 = {}",
                args.m,
                weights_triple(&args.weights)
            );
            println!("G(z) = {gf}");
            println!("denominator: {}", gf.denominator());
            println!("series through z^{}: {}", gf.order(), gf.series_poly());
            println!("coefficients:");
            let width = gf.order().to_string().len() + 2;
            for n in series_range {
                println!(
                    "  {:<width$} {}",
                    format!("z^{n}"),
                    human_rational(&gf.coefficient(n))
                );
            }
        }
        Format::Json => print_json(&GfReport {
            m: args.m,
            weights: args.weights.clone(),
            order: gf.order(),
            numerator: Term::new(shift, gf.numerator_scale()),
            denominator: gf
                .denominator()
                .terms()
                .map(|(e, c)| Term::new(e, c))
                .collect(),
            series: series_range
                .map(|n| Term::new(n, &gf.coefficient(n)))
                .collect(),
        }),
        Format::Csv => {
            let numerator = std::iter::once(("numerator", shift, gf.numerator_scale().clone()));
            let denominator = gf
                .denominator()
                .terms()
                .map(|(e, c)| ("denominator", e, c.clone()));
            let series = series_range.map(|n| ("series", n, gf.coefficient(n)));
            let rows = numerator
                .chain(denominator)
                .chain(series)
                .map(|(part, e, c)| [part.to_string(), e.to_string(), format_rational(&c)]);
            write_csv(&["part", "exponent", "coefficient"], rows)?;
        }
    }
    Ok(true)
}
