//! Named identity checks producing [`VerificationReport`] lists.
//!
//! Each identity is a pure function of [`VerifyParams`]; [`run_all`] runs them
//! on scoped threads and returns the reports in registry order.

use std::thread;

use crate::bernoulli::{
    bernoulli_barnes_number, bernoulli_barnes_series, bernoulli_number, bernoulli_poly_eval,
};
use crate::detpoly::{
    conjecture_44_rhs, conjecture_45_quotient, corollary_35_printed, delta, delta_bar, delta_bar_unit_period,
    delta_bar_via_fbar_poly, delta_via_f_poly, f1_closed_form, f_poly, fbar_poly, g_degree_bound, g_poly,
    gbar_degree_bound, gbar_degree_bound_printed, gbar_poly, hessenberg_closed_form, hessenberg_m_direct,
    hessenberg_m_recursive, hilbert_closed_form, hilbert_like_det, prop_42_corrected, prop_42_printed, Conj45Form,
    Limits,
};
use crate::detpoly::symbolic::divide_by_vandermonde;
use crate::detpoly::guard;
use crate::error::{Error, Result};
use crate::multipoly::{divided_diff_bernoulli, divided_diff_bernoulli_recursive, vandermonde, MultiPoly};
use crate::partition::{check_residue_identity, check_triple_agreement, small_specs, PartitionSpec};
use crate::rational::{binomial, factorial, Rational};
use crate::report::VerificationReport;

/// Every identity accepted by [`run_identity`], in the order [`run_all`] emits them.
pub const IDENTITIES: &[&str] = &[
    "bernoulli",
    "lemma31",
    "hessenberg",
    "prop33",
    "thm34",
    "cor35",
    "prop36",
    "prop42",
    "delta-route",
    "delta-bar",
    "divided-diff",
    "gbar",
    "conj44",
    "conj45",
    "residue",
    "triple-agreement",
];

/// Range caps. `None` selects the per-identity default.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyParams {
    pub max_r: Option<usize>,
    pub max_d: Option<usize>,
    pub limits: Limits,
}

impl VerifyParams {
    fn r(&self, default: usize) -> usize {
        self.max_r.unwrap_or(default)
    }

    fn d(&self, default: usize) -> usize {
        self.max_d.unwrap_or(default)
    }
}

pub fn run_identity(name: &str, params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    match name {
        "bernoulli" => bernoulli(params),
        "lemma31" => lemma31(params),
        "hessenberg" => hessenberg(params),
        "prop33" => prop33(params),
        "thm34" => thm34(params),
        "cor35" => cor35(params),
        "prop36" => prop36(params),
        "prop42" => prop42(params),
        "delta-route" => delta_route(params),
        "delta-bar" => delta_bar_values(params),
        "divided-diff" => divided_diff(params),
        "gbar" => gbar(params),
        "conj44" => conj44(params),
        "conj45" => conj45(params),
        "residue" => residue(params),
        "triple-agreement" => triple_agreement(params),
        "all" => run_all(params),
        other => Err(Error::InvalidArgument(format!(
            "unknown identity '{other}' (expected one of {}, all)",
            IDENTITIES.join(", ")
        ))),
    }
}

/// Runs every registered identity concurrently.
pub fn run_all(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let results: Vec<Result<Vec<VerificationReport>>> = thread::scope(|s| {
        let handles: Vec<_> = IDENTITIES
            .iter()
            .map(|name| s.spawn(move || run_identity(name, params)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn bernoulli(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let q = Rational::frac;
    let mut out = vec![
        VerificationReport::compare("bernoulli[B_1]", bernoulli_number(1), q(-1, 2)),
        VerificationReport::compare("bernoulli[B_2]", bernoulli_number(2), q(1, 6)),
        VerificationReport::compare("bernoulli[B_4]", bernoulli_number(4), q(-1, 30)),
    ];
    let points: Vec<Rational> = [(1, 3), (-2, 7), (5, 4), (0, 1), (1, 2), (-9, 11), (13, 5)]
        .iter()
        .map(|&(n, d)| q(n, d))
        .collect();
    for n in 0..=params.d(20) {
        let lhs: Vec<Rational> = points.iter().map(|x| bernoulli_poly_eval(n, &(Rational::one() - x))).collect();
        let rhs: Vec<Rational> = points
            .iter()
            .map(|x| Rational::sign_power(n as u64) * bernoulli_poly_eval(n, x))
            .collect();
        out.push(VerificationReport::compare(format!("bernoulli-reflection[n={n}]"), vec![lhs], vec![rhs]));
    }
    for a in [&[1u64, 2][..], &[2, 3, 5], &[1, 1, 4]] {
        let label: Vec<String> = a.iter().map(u64::to_string).collect();
        let series = bernoulli_barnes_series(8, a);
        let direct: Vec<Rational> = (0..=8).map(|j| bernoulli_barnes_number(j, a)).collect();
        out.push(VerificationReport::compare(
            format!("barnes-routes[a={}]", label.join(",")),
            vec![series],
            vec![direct],
        ));
    }
    Ok(out)
}

fn lemma31(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    Ok((1..=params.r(8))
        .map(|r| VerificationReport::compare(format!("lemma31[r={r}]"), hilbert_like_det(r), hilbert_closed_form(r)))
        .collect())
}

/// One report per `D`: recursion and direct determinant against the closed form.
fn hessenberg(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    Ok((0..=params.d(20))
        .map(|d| {
            let closed = hessenberg_closed_form(d);
            VerificationReport::compare(
                format!("hessenberg[D={d}]"),
                vec![vec![hessenberg_m_recursive(d), hessenberg_m_direct(d)]],
                vec![vec![closed.clone(), closed]],
            )
        })
        .collect())
}

fn prop33(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 1..=params.d(4) {
        let g = g_poly(1, d, params.limits)?;
        let name = |what: &str| format!("prop33[D={d}] {what}");
        let top = g.total_degree().unwrap_or(0);
        let lead = MultiPoly::monomial(d, vec![1; d], Rational::new(1, factorial(d as u64))?)?;
        let constant = Rational::sign_power(d as u64) / Rational::from(factorial(d as u64 + 1));
        out.push(VerificationReport::compare(name("symmetric"), g.is_symmetric(), true));
        out.push(VerificationReport::compare(name("degree"), Rational::from(top), Rational::from(d)));
        out.push(VerificationReport::compare(name("leading term"), g.homogeneous_component(top), lead));
        out.push(VerificationReport::compare(name("constant term"), g.constant_term(), constant));
    }
    Ok(out)
}

fn thm34(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    (1..=params.d(4))
        .map(|d| {
            Ok(VerificationReport::compare(
                format!("thm34[D={d}]"),
                f_poly(1, d, params.limits)?,
                f1_closed_form(d)?,
            ))
        })
        .collect()
}

/// Printed closed form; recorded, not asserted.
fn cor35(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    (1..=params.d(6))
        .map(|d| {
            Ok(VerificationReport::compare(format!("cor35[D={d}]"), delta(1, d)?, corollary_35_printed(d)).report_only())
        })
        .collect()
}

/// `(r, D)` with `r <= max_r`, `D <= max_d` and `rD <= max_order`.
fn grid(max_r: usize, max_d: usize, max_order: usize, min_d: usize) -> Vec<(usize, usize)> {
    (1..=max_r)
        .flat_map(|r| (min_d..=max_d).map(move |d| (r, d)))
        .filter(|&(r, d)| r * d <= max_order)
        .collect()
}

fn prop36(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for (r, d) in grid(params.r(3), params.d(4), 6, 1) {
        let f = f_poly(r, d, params.limits)?;
        let g = divide_by_vandermonde(&f, r as u32)?;
        let name = |what: &str| format!("prop36[r={r},D={d}] {what}");
        let degree = g.total_degree().map_or(0, i64::from);
        out.push(VerificationReport::compare(name("factorization"), &vandermonde(d, r as u32)? * &g, f));
        out.push(VerificationReport::compare(name("symmetric"), g.is_symmetric(), true));
        out.push(
            VerificationReport::compare(name("degree bound"), degree <= g_degree_bound(r, d), true)
                .with_note(format!("degree {degree}, bound {}", g_degree_bound(r, d))),
        );
    }
    Ok(out)
}

fn prop42(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 1..=params.d(6) {
        let fbar = fbar_poly(1, d, params.limits)?;
        let expected = vandermonde(d, 1)?.scale(&Rational::new(1, factorial(d as u64 - 1))?);
        out.push(VerificationReport::compare(format!("prop42[D={d}] polynomial"), fbar, expected));
        let direct = delta_bar(1, d)?;
        out.push(VerificationReport::compare(
            format!("prop42[D={d}] corrected value"),
            direct.clone(),
            prop_42_corrected(d),
        ));
        out.push(
            VerificationReport::compare(format!("prop42[D={d}] printed value"), direct, prop_42_printed(d))
                .report_only(),
        );
    }
    Ok(out)
}

fn delta_route(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    grid(params.r(6), params.d(6), 6, 1)
        .into_iter()
        .map(|(r, d)| {
            Ok(VerificationReport::compare(
                format!("delta-route[r={r},D={d}]"),
                delta(r, d)?,
                delta_via_f_poly(r, d, params.limits)?,
            ))
        })
        .collect()
}

fn delta_bar_values(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let q = Rational::frac;
    let mut out = vec![
        VerificationReport::compare("delta-bar[r=1,D=2]", delta_bar(1, 2)?, q(1, 2)),
        VerificationReport::compare("delta-bar[r=1,D=3]", delta_bar(1, 3)?, q(1, 9)),
    ];
    for r in 1..=params.r(5) {
        out.push(VerificationReport::compare(
            format!("delta-bar[r={r},D=1]"),
            delta_bar(r, 1)?,
            delta_bar_unit_period(r),
        ));
    }
    for (r, d) in grid(params.r(6), params.d(6), 6, 1) {
        out.push(
            VerificationReport::compare(
                format!("delta-bar-route[r={r},D={d}]"),
                delta_bar(r, d)?,
                delta_bar_via_fbar_poly(r, d, params.limits)?,
            )
            .report_only(),
        );
    }
    Ok(out)
}

fn divided_diff(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for ell in 1..=8 {
        for j in 1..=params.d(5) {
            let closed = divided_diff_bernoulli(ell, j)?;
            let name = |what: &str| format!("divided-diff[l={ell},j={j}] {what}");
            let origin = if ell + 1 >= j {
                Rational::from(binomial(ell as u64, j as u64 - 1)) * bernoulli_number(ell + 1 - j)
            } else {
                Rational::zero()
            };
            out.push(VerificationReport::compare(name("origin"), closed.constant_term(), origin));
            out.push(VerificationReport::compare(
                name("recursion"),
                divided_diff_bernoulli_recursive(ell, j)?,
                closed,
            ));
        }
    }
    Ok(out)
}

fn gbar(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let (max_r, max_d) = (params.r(3), params.d(3));
    let mut out = Vec::new();
    for (r, d) in grid(max_r, max_d, 9, 2) {
        if r * d > 6 && (r, d) != (3, 3) {
            continue;
        }
        let g = gbar_poly(r, d, params.limits)?;
        let name = |what: &str| format!("gbar[r={r},D={d}] {what}");
        let degree = g.total_degree().map_or(0, i64::from);
        let bound = gbar_degree_bound(r, d);
        out.push(VerificationReport::compare(name("symmetric"), g.is_symmetric(), true));
        out.push(
            VerificationReport::compare(name("degree bound"), degree <= bound, true)
                .with_note(format!("degree {degree}, bound {bound}")),
        );
        let printed = gbar_degree_bound_printed(r, d);
        out.push(
            VerificationReport::compare(name("printed degree bound"), degree <= printed, true)
                .report_only()
                .with_note(format!("degree {degree}, printed bound {printed}")),
        );
        if (r, d) == (3, 3) {
            out.push(VerificationReport::compare(name("degree"), Rational::from(degree), Rational::from(18)));
        }
        if d == 2 {
            let at_zero = g.substitute(1, &Rational::zero())?;
            let top = (r * (r - 1)) as u32;
            let lead = MultiPoly::monomial(2, vec![top, 0], hilbert_closed_form(r))?;
            out.push(VerificationReport::compare(
                name("leading term at x_2=0"),
                at_zero.homogeneous_component(at_zero.total_degree().unwrap_or(0)),
                lead,
            ));
        }
    }
    Ok(out)
}

fn conj44(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let max_r = params.r(3);
    guard("r for the F̄_{r,2} conjecture", max_r, params.limits.conj44_max_r)?;
    (1..=max_r)
        .map(|r| {
            Ok(VerificationReport::compare(
                format!("conj44[r={r}]"),
                fbar_poly(r, 2, params.limits)?,
                conjecture_44_rhs(r)?,
            ))
        })
        .collect()
}

/// Asserts the product form and records the printed sum form.
fn conj45(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 2..=params.d(3) {
        guard("D for the F̄_{2,D} conjecture", d, params.limits.conj45_max_d)?;
        let name = |what: &str| format!("conj45[D={d}] {what}");
        let fbar = fbar_poly(2, d, params.limits)?;
        let vander = vandermonde(d, 2)?;
        for form in [Conj45Form::Product, Conj45Form::PrintedSum] {
            let label = match form {
                Conj45Form::Product => "product form",
                Conj45Form::PrintedSum => "printed sum form",
            };
            let shape = &vander * &form.factor(d)?;
            let report = match conjecture_45_quotient(&fbar, form)? {
                Some(k) => VerificationReport::compare(name(label), fbar.clone(), shape.scale(&k))
                    .with_note(format!("K = {k}")),
                None => VerificationReport::compare(name(label), fbar.clone(), MultiPoly::zero(d))
                    .with_note("quotient is not a constant"),
            };
            if form == Conj45Form::PrintedSum {
                out.push(report.report_only());
                continue;
            }
            out.push(report);
            let Some(k) = conjecture_45_quotient(&fbar, form)? else {
                continue;
            };
            out.push(VerificationReport::compare(name("K nonzero"), !k.is_zero(), true));
            let sign = Rational::sign_power(d as u64 + 1);
            out.push(VerificationReport::compare(
                name("gbar"),
                gbar_poly(2, d, params.limits)?,
                form.factor(d)?.scale(&(sign * &k)),
            ));
            if d == 2 {
                let from_44 = conjecture_44_rhs(2)?.exact_div(&shape)?;
                out.push(VerificationReport::compare(name("overlap with r=2 product"), k, from_44.constant_term()));
            }
        }
    }
    Ok(out)
}

fn partition_specs(params: &VerifyParams) -> Vec<PartitionSpec> {
    small_specs(4, params.r(3), 8)
        .into_iter()
        .filter(|s| params.max_d.is_none_or(|d| s.period() as usize <= d))
        .collect()
}

fn residue(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for spec in partition_specs(params) {
        out.extend(check_residue_identity(&spec)?);
    }
    Ok(out)
}

fn triple_agreement(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for spec in partition_specs(params) {
        out.extend(check_triple_agreement(&spec, params.limits)?);
    }
    Ok(out)
}
