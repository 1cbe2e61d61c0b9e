use std::io;

use clap::{Args, ValueEnum};
use serde::Serialize;
use slitpath_core::BigRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, conflicts_with_all = ["json", "csv"])]
    format: Option<Format>,
    /// Same as --format json
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Same as --format csv
    #[arg(long)]
    csv: bool,
}

impl FormatArgs {
    pub fn resolve(&self) -> Format {
        match (self.format, self.json, self.csv) {
            (Some(f), _, _) => f,
            (None, true, _) => Format::Json,
            (None, _, true) => Format::Csv,
            _ => Format::Human,
        }
    }
}

/// Integers print bare, everything else as `p/q`.
pub fn human_rational(x: &BigRat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn weights_triple(w: &slitpath_core::Weights) -> String {
    [w.a1(), w.a2(), w.a3()].map(human_rational).join(",")
}

pub fn print_json<T: Serialize + ?Sized>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialises")
    );
}

pub fn csv_writer() -> csv::Writer<io::Stdout> {
    csv::Writer::from_writer(io::stdout())
}

pub fn write_csv<I, R>(header: &[&str], rows: I) -> Result<(), String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut out = csv_writer();
    out.write_record(header).map_err(|e| e.to_string())?;
    for row in rows {
        out.write_record(row).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())
}
