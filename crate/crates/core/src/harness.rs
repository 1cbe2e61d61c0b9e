//! Verification sweeps over ranges of `m` and weight sets.
//!
//! Instances run in parallel; checks inside an instance run in order and the
//! instance stops at its first failing check. Reports are assembled in
//! `(m, weight-set index)` order and serialise deterministically: wall-clock
//! timings are kept in memory but never serialised.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, BigRat, Poly};
use crate::genfun::{self, g_term, min_terms, GenFun, SlitSpec, Weights};
use crate::oracles::{enumerate_paths_from, interior_charpoly, matrix_series, DEFAULT_MAX_ENUM};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Oracle {
    /// The closed-form generating function (or an injected candidate).
    Series,
    Matrix,
    Enumeration,
    Charpoly,
}

impl Oracle {
    pub const ALL: [Oracle; 4] = [
        Oracle::Series,
        Oracle::Matrix,
        Oracle::Enumeration,
        Oracle::Charpoly,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Oracle::Series => "series",
            Oracle::Matrix => "matrix",
            Oracle::Enumeration => "enumerate",
            Oracle::Charpoly => "charpoly",
        }
    }
}

impl FromStr for Oracle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Oracle::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| {
                format!("unknown oracle {s:?}; expected one of series, matrix, enumerate, charpoly")
            })
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which sources take part in a sweep. Every pair of enabled sources that
/// describe the same object is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleSet {
    pub series: bool,
    pub matrix: bool,
    pub enumeration: bool,
    pub charpoly: bool,
}

impl Default for OracleSet {
    fn default() -> Self {
        Self::all()
    }
}

impl OracleSet {
    pub fn all() -> Self {
        Self {
            series: true,
            matrix: true,
            enumeration: true,
            charpoly: true,
        }
    }

    pub fn none() -> Self {
        Self {
            series: false,
            matrix: false,
            enumeration: false,
            charpoly: false,
        }
    }

    pub fn with(mut self, o: Oracle, on: bool) -> Self {
        match o {
            Oracle::Series => self.series = on,
            Oracle::Matrix => self.matrix = on,
            Oracle::Enumeration => self.enumeration = on,
            Oracle::Charpoly => self.charpoly = on,
        }
        self
    }

    pub fn without(self, o: Oracle) -> Self {
        self.with(o, false)
    }

    /// The closed form plus the listed oracles.
    pub fn series_and(oracles: &[Oracle]) -> Self {
        oracles
            .iter()
            .fold(Self::none().with(Oracle::Series, true), |s, &o| {
                s.with(o, true)
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    Fixed(usize),
    /// `order = m + k`
    AboveBarrier(usize),
}

impl SeriesOrder {
    pub fn resolve(&self, m: usize) -> usize {
        match *self {
            SeriesOrder::Fixed(n) => n,
            SeriesOrder::AboveBarrier(k) => m + k,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub m_values: Vec<usize>,
    pub weight_sets: Vec<Weights>,
    pub order: SeriesOrder,
    pub oracles: OracleSet,
    pub enumeration_limit: usize,
}

impl SweepConfig {
    pub fn new(
        m_values: impl IntoIterator<Item = usize>,
        weight_sets: Vec<Weights>,
        order: SeriesOrder,
    ) -> Self {
        Self {
            m_values: m_values.into_iter().collect(),
            weight_sets,
            order,
            oracles: OracleSet::all(),
            enumeration_limit: DEFAULT_MAX_ENUM,
        }
    }

    pub fn with_oracles(mut self, oracles: OracleSet) -> Self {
        self.oracles = oracles;
        self
    }

    pub fn with_enumeration_limit(mut self, limit: usize) -> Self {
        self.enumeration_limit = limit;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<Discrepancy>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass: true,
            detail: detail.into(),
            discrepancy: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass: false,
            detail: detail.into(),
            discrepancy: None,
            elapsed: Duration::ZERO,
        }
    }

    fn timed(mut self, since: Instant) -> Self {
        self.elapsed = since.elapsed();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureOutcome {
    pub predicted: usize,
    pub observed: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub m: usize,
    pub weights: Weights,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureOutcome>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub instances: Vec<InstanceReport>,
}

impl VerificationReport {
    pub fn new(instances: Vec<InstanceReport>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            instances,
        }
    }

    pub fn passed(&self) -> bool {
        self.instances.iter().all(InstanceReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceReport> {
        self.instances.iter().filter(|i| !i.passed())
    }

    pub fn check_count(&self) -> usize {
        self.instances.iter().map(|i| i.checks.len()).sum()
    }

    pub fn elapsed(&self) -> Duration {
        self.instances.iter().map(|i| i.elapsed).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn compare_coeffs(name: &str, what: &str, expected: &[BigRat], actual: &[BigRat]) -> CheckOutcome {
    let len = expected.len().max(actual.len());
    let zero = BigRat::default();
    for i in 0..len {
        let e = expected.get(i).unwrap_or(&zero);
        let a = actual.get(i).unwrap_or(&zero);
        if e != a {
            let mut out = CheckOutcome::fail(
                name,
                format!("first mismatch at z^{i}: expected {e}, got {a}"),
            );
            out.discrepancy = Some(Discrepancy {
                index: i,
                expected: format_rational(e),
                actual: format_rational(a),
            });
            return out;
        }
    }
    CheckOutcome::pass(name, format!("{len} {what} agree"))
}

type Candidate<'a> = dyn Fn(&SlitSpec, &Weights, usize) -> Result<GenFun> + Sync + 'a;

/// Four-way equivalence of the closed form with the transition matrix, the
/// brute-force enumeration and the interior characteristic polynomial.
pub fn sweep_equivalence(cfg: &SweepConfig) -> VerificationReport {
    sweep_equivalence_with(cfg, &genfun::genfun)
}

/// As [`sweep_equivalence`], with `candidate` standing in for the closed form.
pub fn sweep_equivalence_with(cfg: &SweepConfig, candidate: &Candidate<'_>) -> VerificationReport {
    let jobs: Vec<(usize, &Weights)> = cfg
        .m_values
        .iter()
        .flat_map(|&m| cfg.weight_sets.iter().map(move |w| (m, w)))
        .collect();
    let instances = jobs
        .into_par_iter()
        .map(|(m, w)| equivalence_instance(cfg, m, w, candidate))
        .collect();
    VerificationReport::new(instances)
}

fn equivalence_instance(
    cfg: &SweepConfig,
    m: usize,
    w: &Weights,
    candidate: &Candidate<'_>,
) -> InstanceReport {
    let start = Instant::now();
    let order = cfg.order.resolve(m);
    let mut report = InstanceReport {
        m,
        weights: w.clone(),
        order: Some(order),
        checks: Vec::new(),
        conjecture: None,
        elapsed: Duration::ZERO,
    };
    let spec = match SlitSpec::new(m) {
        Ok(s) => s,
        Err(e) => {
            report
                .checks
                .push(CheckOutcome::fail("precondition", e.to_string()));
            return report;
        }
    };
    if order + 1 < m {
        report.checks.push(CheckOutcome::fail(
            "precondition",
            Error::OrderTooSmall { order, min: m - 1 }.to_string(),
        ));
        return report;
    }

    let o = cfg.oracles;
    let mut candidate_gf: Option<Result<GenFun>> = None;
    let mut matrix: Option<Vec<BigRat>> = None;
    let mut enumeration: Option<Result<Vec<BigRat>>> = None;

    let mut pairs: Vec<(&str, Oracle, Oracle)> = Vec::new();
    if o.series && o.matrix {
        pairs.push(("series_vs_matrix", Oracle::Series, Oracle::Matrix));
    }
    if o.series && o.enumeration {
        pairs.push(("series_vs_enumeration", Oracle::Series, Oracle::Enumeration));
    }
    if o.matrix && o.enumeration {
        pairs.push(("matrix_vs_enumeration", Oracle::Matrix, Oracle::Enumeration));
    }
    if o.series && o.charpoly {
        pairs.push(("denominator_vs_charpoly", Oracle::Series, Oracle::Charpoly));
    }

    for (name, left, right) in pairs {
        let t = Instant::now();
        let mut fetch = |src: Oracle| -> std::result::Result<Vec<BigRat>, String> {
            match src {
                Oracle::Series => {
                    let gf = candidate_gf.get_or_insert_with(|| candidate(&spec, w, order));
                    match gf {
                        Ok(gf) if right == Oracle::Charpoly => {
                            Ok(gf.denominator().coeffs().to_vec())
                        }
                        Ok(gf) => Ok(gf.series().to_vec()),
                        Err(e) => Err(e.to_string()),
                    }
                }
                Oracle::Matrix => Ok(matrix
                    .get_or_insert_with(|| matrix_series(&spec, w, order))
                    .clone()),
                Oracle::Enumeration => enumeration
                    .get_or_insert_with(|| {
                        enumerate_paths_from(&spec, w, spec.start(), order, cfg.enumeration_limit)
                    })
                    .clone()
                    .map_err(|e| e.to_string()),
                Oracle::Charpoly => Ok(interior_charpoly(&spec, w).coeffs().to_vec()),
            }
        };
        let outcome = match (fetch(left), fetch(right)) {
            (Ok(l), Ok(r)) => {
                let what = if right == Oracle::Charpoly {
                    "denominator coefficients"
                } else {
                    "series coefficients"
                };
                compare_coeffs(name, what, &r, &l)
            }
            (Err(e), _) | (_, Err(e)) => CheckOutcome::fail(name, e),
        }
        .timed(t);
        let failed = !outcome.pass;
        report.checks.push(outcome);
        if failed {
            break;
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Smallest `N` with `1 + G_1 + ... + G_N` equal to `det(I - zB)`, if any `N <= m - 1` works.
pub fn observed_min_terms(spec: &SlitSpec, w: &Weights) -> Option<usize> {
    let target = interior_charpoly(spec, w);
    let mut partial = Poly::one();
    for n in 0..spec.m() {
        if n > 0 {
            partial += &g_term(n, spec, w).ok()?;
        }
        if partial == target {
            return Some(n);
        }
    }
    None
}

/// Conjecture checks for one `m`: the minimal term count, its case-table
/// row, the top degree of the last term and the vanishing of the next one.
pub fn conjecture_instance(m: usize, w: &Weights) -> InstanceReport {
    let start = Instant::now();
    let mut report = InstanceReport {
        m,
        weights: w.clone(),
        order: None,
        checks: Vec::new(),
        conjecture: None,
        elapsed: Duration::ZERO,
    };
    let spec = match SlitSpec::new(m) {
        Ok(s) => s,
        Err(e) => {
            report
                .checks
                .push(CheckOutcome::fail("precondition", e.to_string()));
            return report;
        }
    };
    let predicted = min_terms(m);

    let t = Instant::now();
    let observed = observed_min_terms(&spec, w);
    report.conjecture = Some(ConjectureOutcome {
        predicted,
        observed,
    });
    let detail = match observed {
        Some(n) => format!("predicted {predicted}, observed {n}"),
        None => {
            format!("predicted {predicted}, no partial sum matches the characteristic polynomial")
        }
    };
    report.checks.push(if observed == Some(predicted) {
        CheckOutcome::pass("minimal_terms", detail).timed(t)
    } else {
        CheckOutcome::fail("minimal_terms", detail).timed(t)
    });

    if m >= 3 {
        let v = m / 3;
        let (case, row_nmax) = match m % 3 {
            2 => (1, 2 * v),
            1 => (2, 2 * v),
            _ => (3, 2 * v - 1),
        };
        let sum1 = (predicted.max(1) - 1) / 2;
        let detail = format!(
            "case {case}, v = {v}: n_max = {predicted} (row {row_nmax}), Sum1 = {sum1} (row {})",
            v - 1
        );
        report
            .checks
            .push(if predicted == row_nmax && sum1 == v - 1 {
                CheckOutcome::pass("case_table", detail)
            } else {
                CheckOutcome::fail("case_table", detail)
            });
    }

    if predicted >= 1 {
        let t = Instant::now();
        let outcome = match g_term(predicted, &spec, w) {
            Ok(g) => {
                let top = g.degree();
                let detail = format!("G_{predicted} has top exponent {top:?}, m - 1 = {}", m - 1);
                if top == Some(m - 1) {
                    CheckOutcome::pass("leading_exponent", detail)
                } else {
                    CheckOutcome::fail("leading_exponent", detail)
                }
            }
            Err(e) => CheckOutcome::fail("leading_exponent", e.to_string()),
        };
        report.checks.push(outcome.timed(t));
    }

    let next = predicted + 1;
    if next < m {
        let t = Instant::now();
        let outcome = match g_term(next, &spec, w) {
            Ok(g) => match g.low_degree() {
                None => CheckOutcome::pass(
                    "next_term_vanishes",
                    format!("G_{next} is identically zero"),
                ),
                Some(e) if e >= m => {
                    CheckOutcome::pass("next_term_vanishes", format!("G_{next} starts at z^{e}"))
                }
                Some(e) => CheckOutcome::fail(
                    "next_term_vanishes",
                    format!("G_{next} has a term at z^{e} < z^{m}"),
                ),
            },
            Err(e) => CheckOutcome::fail("next_term_vanishes", e.to_string()),
        };
        report.checks.push(outcome.timed(t));
    }

    report.elapsed = start.elapsed();
    report
}

/// Runs [`conjecture_instance`] for every `m` in `3..=m_max`.
pub fn sweep_conjecture(m_max: usize, w: &Weights) -> VerificationReport {
    let instances = (3..=m_max.max(2))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|m| conjecture_instance(m, w))
        .collect();
    VerificationReport::new(instances)
}
