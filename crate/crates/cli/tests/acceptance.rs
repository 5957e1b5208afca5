//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use denumerant::bernoulli::{bernoulli_number, bernoulli_poly_eval};
use denumerant::detpoly::{
    conjecture_45_constant, delta, delta_bar, delta_via_f_poly, f1_closed_form, f_poly, fbar_poly, g_degree_bound,
    g_poly, gbar_poly, hessenberg_m_direct, hessenberg_m_recursive, hilbert_like_det, prop_42_corrected,
    Conj45Form, Limits,
};
use denumerant::detpoly::{conjecture_44_rhs, pairwise_square_product, pairwise_square_sum};
use denumerant::multipoly::vandermonde;
use denumerant::partition::{
    check_residue_identity, p_oracle_table, quasi_from_delta_system, quasi_from_deltabar_system, quasi_from_oracle,
    small_specs, PartitionSpec,
};
use denumerant::report::{VerificationReport, Verdict};
use denumerant::verify::{run_identity, VerifyParams};
use denumerant::{MultiPoly, Rational};
use num_bigint::BigInt;

type Outcome = Result<String, String>;

/// Name, check, and time limit.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: denumerant::Error) -> String {
    e.to_string()
}

fn factorial(n: u64) -> Rational {
    Rational::from(BigInt::from((1..=n).product::<u64>().max(1)))
}

fn sign(k: u64) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    q(rng.random_range(-1000..=1000), rng.random_range(1..=97))
}

fn criterion_1() -> Outcome {
    ensure(bernoulli_number(1) == q(-1, 2), || "B_1".into())?;
    ensure(bernoulli_number(2) == q(1, 6), || "B_2".into())?;
    ensure(bernoulli_number(4) == q(-1, 30), || "B_4".into())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let points: Vec<Rational> = (0..50).map(|_| random_rational(&mut rng)).collect();
    for n in 0..=20 {
        for x in &points {
            let lhs = bernoulli_poly_eval(n, &(Rational::one() - x));
            let rhs = sign(n as u64) * bernoulli_poly_eval(n, x);
            ensure(lhs == rhs, || format!("reflection fails at n={n}, x={x}"))?;
        }
    }
    Ok("B_1, B_2, B_4 exact; reflection at 50 random x for n <= 20".into())
}

fn criterion_2() -> Outcome {
    for r in 1..=8u64 {
        let num: Rational = (1..r).map(factorial).fold(Rational::one(), |a, b| a * b);
        let den: Rational = (r..2 * r).map(factorial).fold(Rational::one(), |a, b| a * b);
        let closed = num.pow(3) / den;
        let direct = hilbert_like_det(r as usize);
        ensure(direct == closed, || format!("r={r}: {direct} != {closed}"))?;
    }
    Ok("r <= 8".into())
}

fn criterion_3() -> Outcome {
    for d in 0..=20usize {
        let closed = sign(d as u64) / Rational::from(d + 1);
        let (rec, direct) = (hessenberg_m_recursive(d), hessenberg_m_direct(d));
        ensure(rec == closed && direct == closed, || {
            format!("D={d}: recursion {rec}, direct {direct}, closed {closed}")
        })?;
    }
    Ok("D <= 20".into())
}

fn criterion_4() -> Outcome {
    for d in 1..=4 {
        let f = f_poly(1, d, Limits::default()).map_err(err)?;
        let closed = f1_closed_form(d).map_err(err)?;
        ensure(f == closed, || format!("D={d}: polynomials differ"))?;
    }
    Ok("D <= 4, term by term".into())
}

fn criterion_5() -> Outcome {
    for d in 1..=4usize {
        let g = g_poly(1, d, Limits::default()).map_err(err)?;
        ensure(g.is_symmetric(), || format!("D={d}: not symmetric"))?;
        ensure(g.total_degree() == Some(d as u32), || format!("D={d}: degree {:?}", g.total_degree()))?;
        let lead = MultiPoly::monomial(d, vec![1; d], Rational::one() / factorial(d as u64)).map_err(err)?;
        ensure(g.homogeneous_component(d as u32) == lead, || format!("D={d}: leading term"))?;
        let constant = sign(d as u64) / factorial(d as u64 + 1);
        ensure(g.constant_term() == constant, || format!("D={d}: constant term {}", g.constant_term()))?;
    }
    Ok("D <= 4".into())
}

fn criterion_6() -> Outcome {
    for (r, d) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let f = f_poly(r, d, Limits::default()).map_err(err)?;
        let v = vandermonde(d, r as u32).map_err(err)?;
        let g = f.exact_div(&v).map_err(|e| format!("(r={r},D={d}): {e}"))?;
        ensure(&g * &v == f, || format!("(r={r},D={d}): product does not reconstruct"))?;
        ensure(g.is_symmetric(), || format!("(r={r},D={d}): quotient not symmetric"))?;
        let deg = g.total_degree().map_or(0, i64::from);
        let bound = g_degree_bound(r, d);
        ensure(deg <= bound, || format!("(r={r},D={d}): degree {deg} > {bound}"))?;
    }
    Ok("(2,2), (2,3), (3,2)".into())
}

/// Specs of criterion 7 with both determinants nonzero, plus the count skipped.
fn partition_specs() -> Result<(Vec<PartitionSpec>, usize), String> {
    let mut kept = Vec::new();
    let mut skipped = 0;
    for spec in small_specs(4, 3, 8) {
        let (r, d) = (spec.r(), spec.period() as usize);
        if delta(r, d).map_err(err)?.is_zero() || delta_bar(r, d).map_err(err)?.is_zero() {
            skipped += 1;
        } else {
            kept.push(spec);
        }
    }
    Ok((kept, skipped))
}

fn criterion_7() -> Outcome {
    let (specs, skipped) = partition_specs()?;
    let lim = Limits::default();
    for spec in &specs {
        let label = spec.label();
        let oracle = quasi_from_oracle(spec).map_err(err)?;
        let by_delta = quasi_from_delta_system(spec, lim).map_err(err)?;
        let by_bar = quasi_from_deltabar_system(spec, lim).map_err(err)?;
        ensure(oracle == by_delta, || format!("{label}: delta route differs"))?;
        ensure(oracle == by_bar, || format!("{label}: delta-bar route differs"))?;
        let n_max = 3 * spec.order() as u64;
        for (n, count) in p_oracle_table(spec, n_max).into_iter().enumerate() {
            let value = oracle.eval(n as u64);
            ensure(value == Rational::from(BigInt::from(count.clone())), || {
                format!("{label}: n={n} gives {value}, count {count}")
            })?;
        }
    }
    Ok(format!("{} specs, {skipped} skipped for vanishing determinants", specs.len()))
}

fn criterion_8() -> Outcome {
    let (specs, _) = partition_specs()?;
    let mut checked = 0;
    for spec in &specs {
        for report in check_residue_identity(spec).map_err(err)? {
            ensure(report.verdict == Verdict::Equal, || format!("{}: {}", report.identity, report.verdict.as_str()))?;
            checked += 1;
        }
    }
    let s12 = PartitionSpec::new(vec![1, 2]).map_err(err)?;
    let first = &check_residue_identity(&s12).map_err(err)?[0];
    ensure(first.lhs == q(3, 2).into() && first.rhs == q(3, 2).into(), || {
        format!("a=(1,2), m=0: {:?} vs {:?}", first.lhs, first.rhs)
    })?;
    Ok(format!("{checked} residue identities over {} specs; a=(1,2), m=0 gives 3/2 = 3/2", specs.len()))
}

fn criterion_9() -> Outcome {
    ensure(delta_bar(1, 2).map_err(err)? == q(1, 2), || "delta-bar(1,2)".into())?;
    ensure(delta_bar(1, 3).map_err(err)? == q(1, 9), || "delta-bar(1,3)".into())?;
    for r in 1..=5u64 {
        let expected = sign(r * (r - 1) / 2);
        ensure(delta_bar(r as usize, 1).map_err(err)? == expected, || format!("delta-bar({r},1)"))?;
    }
    for d in 1..=6u64 {
        let num = (1..=d.saturating_sub(2)).map(factorial).fold(Rational::one(), |a, b| a * b);
        let closed = num / Rational::from(d).pow(d as u32 - 1);
        let direct = delta_bar(1, d as usize).map_err(err)?;
        ensure(direct == closed, || format!("D={d}: {direct} != {closed}"))?;
        ensure(prop_42_corrected(d as usize) == closed, || format!("D={d}: library closed form"))?;
    }
    let reports = run_identity("prop42", &VerifyParams::default()).map_err(err)?;
    let printed: Vec<&VerificationReport> =
        reports.iter().filter(|r| r.identity.ends_with("printed value")).collect();
    ensure(printed.iter().any(|r| r.verdict == Verdict::Mismatch), || "printed constant not flagged".into())?;
    ensure(printed.iter().all(|r| r.report_only), || "printed constant asserted".into())?;
    Ok("1/2, 1/9, unit period r <= 5, corrected closed form D <= 6; printed constant MISMATCH".into())
}

/// Report-only printed forms whose MISMATCH is a recorded erratum.
const KNOWN_ERRATA: &[&str] = &["printed value", "printed degree bound", "printed sum form"];

fn criterion_10() -> Outcome {
    for r in 1..=6usize {
        for d in 1..=6 / r {
            let direct = delta(r, d).map_err(err)?;
            let route = delta_via_f_poly(r, d, Limits::default()).map_err(err)?;
            ensure(direct == route, || format!("delta route (r={r},D={d}): {direct} != {route}"))?;
        }
    }

    let out = Command::new(env!("CARGO_BIN_EXE_denumerant"))
        .args(["verify", "--identity", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("verify all exited with {:?}", out.status.code()))?;
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let verdict_of = |name: &str| {
        reports
            .iter()
            .find(|r| r["identity"] == name)
            .and_then(|r| r["verdict"].as_str())
            .unwrap_or("missing")
            .to_string()
    };
    let bar_route = verdict_of("delta-bar-route[r=1,D=2]");
    ensure(bar_route == "EQUAL_UP_TO_SIGN", || format!("delta-bar route at (1,2): {bar_route}"))?;
    let cor = verdict_of("cor35[D=2]");
    ensure(cor == "EQUAL_UP_TO_SIGN", || format!("corollary at D=2: {cor}"))?;

    let mismatches: Vec<&serde_json::Value> = reports.iter().filter(|r| r["verdict"] == "MISMATCH").collect();
    for m in &mismatches {
        let id = m["identity"].as_str().unwrap_or_default();
        ensure(m["report_only"] == true && KNOWN_ERRATA.iter().any(|e| id.ends_with(e)), || {
            format!("unexpected MISMATCH: {id}")
        })?;
    }
    let names: Vec<&str> = mismatches.iter().filter_map(|m| m["identity"].as_str()).collect();
    Ok(format!(
        "{} reports, exit 0; MISMATCH only on report-only printed forms: {}",
        reports.len(),
        names.join("; ")
    ))
}

fn criterion_11() -> Outcome {
    let lim = Limits::default();
    let start = Instant::now();
    for r in 1..=3 {
        let fbar = fbar_poly(r, 2, lim).map_err(err)?;
        ensure(fbar == conjecture_44_rhs(r).map_err(err)?, || format!("F̄_{{{r},2}} differs"))?;
    }
    let t44 = start.elapsed();
    ensure(t44 < Duration::from_secs(300), || format!("r <= 3 took {t44:.1?}"))?;

    let start = Instant::now();
    let mut constants = Vec::new();
    let mut printed = Vec::new();
    for d in 2..=3 {
        let k = conjecture_45_constant(d, Conj45Form::Product, lim)
            .map_err(err)?
            .ok_or_else(|| format!("D={d}: product form quotient not constant"))?;
        ensure(!k.is_zero(), || format!("D={d}: K = 0"))?;
        let rebuilt = (&vandermonde(d, 2).map_err(err)? * &pairwise_square_product(d).map_err(err)?).scale(&k);
        ensure(rebuilt == fbar_poly(2, d, lim).map_err(err)?, || format!("D={d}: product form does not rebuild"))?;
        constants.push(format!("K({d}) = {k}"));

        let sum_k = conjecture_45_constant(d, Conj45Form::PrintedSum, lim).map_err(err)?;
        let sum_matches = sum_k.is_some_and(|s| {
            let sum_rebuilt = (&vandermonde(d, 2).unwrap() * &pairwise_square_sum(d).unwrap()).scale(&s);
            sum_rebuilt == fbar_poly(2, d, lim).unwrap()
        });
        printed.push(format!("D={d} {}", if sum_matches { "EQUAL" } else { "MISMATCH" }));
    }
    let t45 = start.elapsed();
    ensure(t45 < Duration::from_secs(600), || format!("D <= 3 took {t45:.1?}"))?;

    let deg = gbar_poly(3, 3, lim).map_err(err)?.total_degree();
    ensure(deg == Some(18), || format!("degree of Ḡ_{{3,3}} is {deg:?}"))?;
    Ok(format!(
        "F̄_{{r,2}} r <= 3 ({t44:.1?}); product form {} ({t45:.1?}); Ḡ_{{3,3}} degree 18; printed sum form: {}",
        constants.join(", "),
        printed.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Bernoulli suite", criterion_1, Duration::from_secs(1)),
        ("Hilbert-type determinant", criterion_2, Duration::from_secs(1)),
        ("Hessenberg determinant", criterion_3, Duration::from_secs(1)),
        ("F_{1,D} closed form", criterion_4, Duration::from_secs(30)),
        ("G_{1,D} structure", criterion_5, Duration::from_secs(60)),
        ("Vandermonde factorization", criterion_6, Duration::from_secs(300)),
        ("partition triple agreement", criterion_7, Duration::from_secs(120)),
        ("residue identity", criterion_8, Duration::from_secs(120)),
        ("delta-bar values", criterion_9, Duration::from_secs(60)),
        ("route comparisons", criterion_10, Duration::from_secs(300)),
        ("conjectured factorizations", criterion_11, Duration::from_secs(900)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; exceeded {limit:?}")),
            other => other,
        };
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {:>2}: {status} [{elapsed:.2?}] {name}: {detail}", i + 1);
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
