//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{rngs::StdRng, Rng, SeedableRng};
use slitpath_core::exact::ratio;
use slitpath_core::genfun::{denominator, g_term, genfun, genfun_a2_zero};
use slitpath_core::harness::{
    sweep_conjecture, sweep_equivalence, OracleSet, SeriesOrder, SweepConfig,
};
use slitpath_core::oracles::{
    closed_form_numeric, general_start_numeric, reduction_identity_check, root_series_check, Cubic,
};
use slitpath_core::{BigRat, Poly, SlitSpec, Weights};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(a1: i64, a2: i64, a3: i64) -> Weights {
    Weights::from_integers(a1, a2, a3).unwrap()
}

fn poly(terms: &[(usize, i64)]) -> Poly {
    terms.iter().fold(Poly::zero(), |acc, &(e, c)| {
        acc + Poly::monomial(BigRat::from_integer(c.into()), e)
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:.2?}, limit {limit:?}")
    })
}

fn golden_example() -> Outcome {
    let start = Instant::now();
    let spec = SlitSpec::new(9).unwrap();
    let weights = w(1, 3, 2);
    let expected_terms = [
        poly(&[(2, -21)]),
        poly(&[(3, -12), (4, 135)]),
        poly(&[(5, 120), (6, -270)]),
        poly(&[(6, 24), (7, -216), (8, 81)]),
        poly(&[(8, -36)]),
    ];
    for (i, expected) in expected_terms.iter().enumerate() {
        let got = g_term(i + 1, &spec, &weights).map_err(|e| e.to_string())?;
        ensure(&got == expected, || {
            format!("G_{} = {got}, expected {expected}", i + 1)
        })?;
    }
    let expected_den = poly(&[
        (0, 1),
        (2, -21),
        (3, -12),
        (4, 135),
        (5, 120),
        (6, -246),
        (7, -216),
        (8, 45),
    ]);
    let den = denominator(&spec, &weights);
    ensure(den == expected_den, || {
        format!("denominator {den}, expected {expected_den}")
    })?;

    let gf = genfun(&spec, &weights, 20).map_err(|e| e.to_string())?;
    let expected_series: [i64; 21] = [
        0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 21, 12, 306, 384, 3981, 7812, 50580, 130752, 649332, 1980432,
        8487756,
    ];
    for (n, c) in expected_series.iter().enumerate() {
        let got = gf.coefficient(n);
        ensure(got == ratio(*c, 1), || {
            format!("coefficient of z^{n} is {got}, expected {c}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1), "golden example")?;
    Ok(format!(
        "5 terms, denominator and series through z^20 exact ({:.2?})",
        start.elapsed()
    ))
}

fn four_way_agreement() -> Outcome {
    let start = Instant::now();
    let weights = vec![
        w(1, 1, 1),
        w(1, 3, 2),
        w(1, 0, 2),
        w(2, 1, 1),
        Weights::new(ratio(1, 2), ratio(1, 3), ratio(1, 6)).unwrap(),
    ];
    let cfg = SweepConfig::new(2..=10, weights, SeriesOrder::AboveBarrier(15))
        .with_oracles(OracleSet::all());
    let report = sweep_equivalence(&cfg);
    if let Some(bad) = report.failures().next() {
        let check = bad.first_failure().unwrap();
        return Err(format!(
            "m={} w={}: {} {}",
            bad.m, bad.weights, check.name, check.detail
        ));
    }
    ensure(report.instances.len() == 45, || {
        format!("{} instances, expected 45", report.instances.len())
    })?;
    within(start.elapsed(), Duration::from_secs(120), "four-way sweep")?;
    Ok(format!(
        "45 instances, {} checks ({:.2?})",
        report.check_count(),
        start.elapsed()
    ))
}

fn a2_zero_special_case() -> Outcome {
    let weights = [
        w(1, 0, 2),
        w(1, 0, 1),
        Weights::new(ratio(2, 3), ratio(0, 1), ratio(5, 4)).unwrap(),
    ];
    let mut compared = 0;
    for m in 2..=12 {
        let spec = SlitSpec::new(m).unwrap();
        for wt in &weights {
            let order = m + 15;
            let special = genfun_a2_zero(&spec, wt, order).map_err(|e| e.to_string())?;
            let general = genfun(&spec, wt, order).map_err(|e| e.to_string())?;
            ensure(special.denominator() == general.denominator(), || {
                format!("m={m} w={wt}: denominators differ")
            })?;
            ensure(special.series() == general.series(), || {
                format!("m={m} w={wt}: series differ")
            })?;
            compared += 1;
        }
        // with a1 = a3 = 1 each even term is the single monomial C(3n-m, n) z^(3n)
        for n in (1..).take_while(|n| 2 * n < m) {
            let expected = Poly::monomial(
                BigRat::from_integer(slitpath_core::binom(3 * n as i64 - m as i64, n)),
                3 * n,
            );
            let got = g_term(2 * n, &spec, &w(1, 0, 1)).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("m={m}: G_{} = {got}, expected {expected}", 2 * n)
            })?;
        }
    }
    Ok(format!(
        "{compared} (m, weights) pairs and the even-term binomial identity for m in 2..12"
    ))
}

fn conjecture() -> Outcome {
    let report = sweep_conjecture(60, &w(1, 1, 1));
    ensure(report.instances.len() == 58, || {
        format!("{} instances, expected 58", report.instances.len())
    })?;
    if let Some(bad) = report.failures().next() {
        let check = bad.first_failure().unwrap();
        return Err(format!("m={}: {} {}", bad.m, check.name, check.detail));
    }
    for v in 1..=10 {
        for m in [3 * v, 3 * v + 1, 3 * v + 2] {
            let inst = report.instances.iter().find(|i| i.m == m).unwrap();
            for name in ["case_table", "next_term_vanishes"] {
                let found = inst.checks.iter().any(|c| c.name == name && c.pass);
                ensure(found, || format!("m={m}: {name} missing"))?;
            }
        }
    }
    Ok("m in 3..60 match, case table for v in 1..10, next term vanishes below z^m".into())
}

fn numeric_consistency() -> Outcome {
    let spec = SlitSpec::new(9).unwrap();
    let weights = w(1, 3, 2);
    let (z, q) = (0.05, 1.0);
    let cf = closed_form_numeric(z, q, &spec, &weights).map_err(|e| e.to_string())?;
    // 13 series terms: z^8 through z^20
    let gf = genfun(&spec, &weights, 20).map_err(|e| e.to_string())?;
    let truncated = gf.eval_truncated(z, 20);
    let abs = (cf - truncated).abs();
    let rel = abs / cf.abs();
    ensure(abs <= 1e-6 && rel <= 1e-6, || {
        format!("closed form {cf:e} vs series {truncated:e}, rel {rel:e}")
    })?;
    let general =
        general_start_numeric(z, q, spec.start(), &spec, &weights).map_err(|e| e.to_string())?;
    let rel_start = (general - cf).abs() / cf.abs();
    ensure(rel_start <= 1e-9, || {
        format!("general start {general:e} vs closed form {cf:e}, rel {rel_start:e}")
    })?;
    Ok(format!(
        "series rel {rel:.1e}, general start rel {rel_start:.1e}"
    ))
}

fn random_distinct_cubic(rng: &mut StdRng) -> (Cubic, f64) {
    loop {
        let b0: f64 = rng.gen_range(0.2..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let (s1, s2, s3, gap) = if rng.gen_bool(0.5) {
            let r: [f64; 3] = [0, 1, 2].map(|_| rng.gen_range(-3.0..3.0));
            let gap = (r[0] - r[1])
                .abs()
                .min((r[1] - r[2]).abs())
                .min((r[2] - r[0]).abs());
            (
                r[0] + r[1] + r[2],
                r[0] * r[1] + r[1] * r[2] + r[2] * r[0],
                r[0] * r[1] * r[2],
                gap,
            )
        } else {
            let r0: f64 = rng.gen_range(-3.0..3.0);
            let re: f64 = rng.gen_range(-2.0..2.0);
            let im: f64 = rng.gen_range(0.3..2.0);
            let modsq = re * re + im * im;
            let gap = ((r0 - re).hypot(im)).min(2.0 * im);
            (r0 + 2.0 * re, 2.0 * r0 * re + modsq, r0 * modsq, gap)
        };
        if gap >= 0.3 {
            return (
                Cubic {
                    b0,
                    b1: -b0 * s1,
                    b2: b0 * s2,
                },
                -b0 * s3,
            );
        }
    }
}

fn reduction_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(17);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let (cubic, q) = random_distinct_cubic(&mut rng);
        let r =
            reduction_identity_check(&cubic, q).map_err(|e| format!("random cubic {i}: {e}"))?;
        ensure(r.passes(), || {
            format!("random cubic {i} {cubic:?} q={q}: {r:?}")
        })?;
        worst = worst
            .max(r.derivative_residual)
            .max(r.discriminant_residual);
    }
    let weights = w(1, 3, 2);
    let points = [
        (0.01, 1.0),
        (0.02, 1.0),
        (0.05, 1.0),
        (0.08, 1.0),
        (0.1, 1.0),
        (0.01, 0.5),
        (0.03, 0.25),
        (0.05, 2.0),
        (0.07, 0.75),
        (0.1, 0.1),
    ];
    for (z, q) in points {
        let r = reduction_identity_check(&Cubic::characteristic(z, &weights), q)
            .map_err(|e| format!("z={z} q={q}: {e}"))?;
        ensure(r.passes(), || {
            format!("characteristic cubic z={z} q={q}: {r:?}")
        })?;
        worst = worst
            .max(r.derivative_residual)
            .max(r.discriminant_residual);
    }
    Ok(format!(
        "50 random cubics and 10 (z, q) points, worst analytic residual {worst:.1e}"
    ))
}

fn small_root_series() -> Outcome {
    let r = root_series_check(&SlitSpec::new(9).unwrap(), &w(1, 3, 2), 0.02, 5)
        .map_err(|e| e.to_string())?;
    ensure(r.strictly_decreasing(1, 5), || {
        format!("residuals {:?}", r.residuals)
    })?;
    let shown: Vec<String> = r.residuals[1..=5]
        .iter()
        .map(|x| format!("{x:.1e}"))
        .collect();
    Ok(format!("residuals {}", shown.join(" > ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("golden example m=9", golden_example),
        ("four-way oracle agreement", four_way_agreement),
        ("a2 = 0 special case", a2_zero_special_case),
        ("minimal term count", conjecture),
        ("numeric closed form", numeric_consistency),
        ("cubic reduction identities", reduction_identities),
        ("small-root series order", small_root_series),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
