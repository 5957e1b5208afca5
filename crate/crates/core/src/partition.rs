//! The restricted partition function `p_a(n)`, the number of nonnegative
//! solutions of `a_1 x_1 + ... + a_r x_r = n`, and its quasi-polynomial.
//!
//! Three independent routes produce the coefficients `d[m][v]` of
//! `p_a(n) = sum_m d[m][n mod D] n^m`: interpolation of the counting oracle,
//! the delta system, and the delta-bar system.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::bernoulli::bernoulli_barnes_series;
use crate::detpoly::{bernoulli_rows, build_delta_bar_matrix, build_delta_matrix, Limits};
use crate::error::{Error, Result};
use crate::matrix::{cramer_column_replace, det, solve_linear, RationalMatrix};
use crate::rational::{factorial, lcm, Rational};
use crate::report::VerificationReport;

/// Parts `a_1, ..., a_r` together with a common multiple `D` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionSpec {
    parts: Vec<u64>,
    period: u64,
}

impl PartitionSpec {
    /// Uses `D = lcm(a)`.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        Self::check_parts(&parts)?;
        let period = lcm(&parts);
        Ok(PartitionSpec { parts, period })
    }

    /// Uses a caller-supplied common multiple `D`.
    pub fn with_period(parts: Vec<u64>, period: u64) -> Result<Self> {
        Self::check_parts(&parts)?;
        if period == 0 || parts.iter().any(|a| !period.is_multiple_of(*a)) {
            return Err(Error::InvalidArgument(format!(
                "D={period} is not a common multiple of the parts {parts:?}"
            )));
        }
        Ok(PartitionSpec { parts, period })
    }

    fn check_parts(parts: &[u64]) -> Result<()> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("parts must be a nonempty list of positive integers".into()));
        }
        Ok(())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Order `rD` of both determinant systems.
    pub fn order(&self) -> usize {
        self.r() * self.period as usize
    }

    /// Comma-separated parts, as used in report names.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        let mut s = format!("a={}", parts.join(","));
        if self.period != lcm(&self.parts) {
            let _ = write!(s, ";D={}", self.period);
        }
        s
    }
}

/// `p(n) = sum_m d[m][n mod D] n^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiPolynomial {
    r: usize,
    #[serde(rename = "D")]
    period: u64,
    d: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn new(d: Vec<Vec<Rational>>) -> Result<Self> {
        let period = d.first().map_or(0, Vec::len);
        if d.is_empty() || period == 0 || d.iter().any(|row| row.len() != period) {
            return Err(Error::InvalidArgument("coefficient table must be a nonempty rectangle".into()));
        }
        Ok(QuasiPolynomial {
            r: d.len(),
            period: period as u64,
            d,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Row `m` holds `d[m][v]` for residues `v = 0..D-1`.
    pub fn table(&self) -> &[Vec<Rational>] {
        &self.d
    }

    pub fn coeff(&self, m: usize, v: u64) -> &Rational {
        &self.d[m][(v % self.period) as usize]
    }

    pub fn eval(&self, n: u64) -> Rational {
        let v = (n % self.period) as usize;
        let x = Rational::from(n);
        self.d.iter().rev().fold(Rational::zero(), |acc, row| acc * &x + &row[v])
    }
}

/// `p_a(0), ..., p_a(n_max)` by the coin-change recurrence.
pub fn p_oracle_table(spec: &PartitionSpec, n_max: u64) -> Vec<BigUint> {
    let len = n_max as usize + 1;
    let mut dp = vec![BigUint::from(0u32); len];
    dp[0] = BigUint::from(1u32);
    for &a in spec.parts() {
        let a = a as usize;
        for j in a..len {
            let (lo, hi) = dp.split_at_mut(j);
            hi[0] += &lo[j - a];
        }
    }
    dp
}

pub fn p_oracle(spec: &PartitionSpec, n: u64) -> BigUint {
    p_oracle_table(spec, n).pop().expect("table is nonempty")
}

fn to_rational(x: &BigUint) -> Rational {
    Rational::from(BigInt::from(x.clone()))
}

/// Interpolates each residue class through `n = v + kD`, `k = 1..r`, and
/// validates at `k = 0` and `k = r+1..2r`.
pub fn quasi_from_oracle(spec: &PartitionSpec) -> Result<QuasiPolynomial> {
    let (r, period) = (spec.r(), spec.period());
    let table = p_oracle_table(spec, period * (2 * r as u64 + 1));
    let mut d = vec![vec![Rational::zero(); period as usize]; r];
    for v in 0..period {
        let samples: Vec<u64> = (1..=r as u64).map(|k| v + k * period).collect();
        let vander = RationalMatrix::from_fn(r, r, |i, m| Rational::from(samples[i]).pow(m as u32));
        let values: Vec<Rational> = samples.iter().map(|&n| to_rational(&table[n as usize])).collect();
        for (m, c) in solve_linear(&vander, &values)?.into_iter().enumerate() {
            d[m][v as usize] = c;
        }
    }
    let q = QuasiPolynomial::new(d)?;
    let checks = std::iter::once(0).chain(r as u64 + 1..=2 * r as u64);
    for n in checks.flat_map(|k| (0..period).map(move |v| v + k * period)) {
        if q.eval(n) != to_rational(&table[n as usize]) {
            return Err(Error::RouteDisagreement(format!(
                "interpolated quasi-polynomial misses p({n}) for {}",
                spec.label()
            )));
        }
    }
    Ok(q)
}

/// `B_0(a), ..., B_n(a)`.
fn barnes(spec: &PartitionSpec, n: usize) -> Vec<Rational> {
    bernoulli_barnes_series(n, spec.parts())
}

/// Right side of the delta-system equation `n`:
/// `(-1)^{r-1} n! / (n+r)! B_{r+n}(a) + δ_{0n}`.
pub fn system_rhs(spec: &PartitionSpec, n: usize) -> Rational {
    system_rhs_with(spec.r(), &barnes(spec, spec.r() + n), n)
}

fn system_rhs_with(r: usize, barnes: &[Rational], n: usize) -> Rational {
    let ratio = Rational::new(factorial(n as u64), factorial((n + r) as u64)).unwrap();
    let value = Rational::sign_power(r as u64 - 1) * ratio * &barnes[r + n];
    if n == 0 {
        value + Rational::one()
    } else {
        value
    }
}

/// Right side of the residue equation `m`:
/// `(-1)^{r-1} D^{m+1} / (m! (r-1-m)!) B_{r-1-m}(a)`.
pub fn residue_rhs(spec: &PartitionSpec, m: usize) -> Rational {
    residue_rhs_with(spec, &barnes(spec, spec.r()), m)
}

fn residue_rhs_with(spec: &PartitionSpec, barnes: &[Rational], m: usize) -> Rational {
    let r = spec.r();
    let denom = factorial(m as u64) * factorial((r - 1 - m) as u64);
    Rational::sign_power(r as u64 - 1) * Rational::from(spec.period()).pow(m as u32 + 1) / Rational::from(denom)
        * &barnes[r - 1 - m]
}

/// Unknown `m*D + (v-1)` with `v = 1..D` is `d[m][v mod D]`.
fn unpack(spec: &PartitionSpec, x: Vec<Rational>) -> Result<QuasiPolynomial> {
    let period = spec.period() as usize;
    let mut d = vec![vec![Rational::zero(); period]; spec.r()];
    for (idx, value) in x.into_iter().enumerate() {
        let (m, v) = (idx / period, idx % period + 1);
        d[m][v % period] = value;
    }
    QuasiPolynomial::new(d)
}

fn delta_system(spec: &PartitionSpec, limits: Limits) -> Result<(RationalMatrix, Vec<Rational>)> {
    let (r, order) = (spec.r(), spec.order());
    limits.check_numeric(order)?;
    let m = build_delta_matrix(r, spec.period() as usize)?;
    let b = barnes(spec, r + order);
    let rhs = (0..order).map(|n| system_rhs_with(r, &b, n)).collect();
    Ok((m, rhs))
}

/// Solves the delta system. [`Error::Singular`] if its determinant vanishes.
pub fn quasi_from_delta_system(spec: &PartitionSpec, limits: Limits) -> Result<QuasiPolynomial> {
    let (m, rhs) = delta_system(spec, limits)?;
    unpack(spec, solve_linear(&m, &rhs)?)
}

/// The delta system solved by Cramer's rule, one determinant per unknown.
pub fn quasi_from_delta_cramer(spec: &PartitionSpec, limits: Limits) -> Result<QuasiPolynomial> {
    let (m, rhs) = delta_system(spec, limits)?;
    let denom = det(&m)?;
    if denom.is_zero() {
        return Err(Error::Singular);
    }
    let x = (0..spec.order())
        .map(|col| Ok(cramer_column_replace(&m, col, &rhs)? / &denom))
        .collect::<Result<Vec<_>>>()?;
    unpack(spec, x)
}

/// Solves the delta-bar system: `r` residue equations followed by the delta
/// equations `n = 0..rD-r-1`.
pub fn quasi_from_deltabar_system(spec: &PartitionSpec, limits: Limits) -> Result<QuasiPolynomial> {
    let (r, order) = (spec.r(), spec.order());
    limits.check_numeric(order)?;
    let m = build_delta_bar_matrix(r, spec.period() as usize)?;
    let b = barnes(spec, order);
    let rhs: Vec<Rational> = (0..r)
        .map(|k| residue_rhs_with(spec, &b, k))
        .chain((0..order - r).map(|n| system_rhs_with(r, &b, n)))
        .collect();
    unpack(spec, solve_linear(&m, &rhs)?)
}

/// Checks `sum_v (-D)^m d[m][v] = residue_rhs(m)` for each `m`, with the
/// oracle-derived coefficients.
pub fn check_residue_identity(spec: &PartitionSpec) -> Result<Vec<VerificationReport>> {
    let q = quasi_from_oracle(spec)?;
    let b = barnes(spec, spec.r());
    let minus_d = -Rational::from(spec.period());
    Ok((0..spec.r())
        .map(|m| {
            let lhs: Rational = q.table()[m].iter().sum::<Rational>() * minus_d.pow(m as u32);
            let rhs = residue_rhs_with(spec, &b, m);
            VerificationReport::compare(format!("residue[{};m={m}]", spec.label()), lhs, rhs)
        })
        .collect())
}

/// Largest order at which the Cramer route is also exercised.
pub const CRAMER_MAX_ORDER: usize = 5;

/// Compares the oracle, delta and delta-bar quasi-polynomials, evaluates them
/// against the oracle for `n <= 3rD`, and checks the delta equations for
/// `n = rD..rD+5` with the oracle coefficients.
pub fn check_triple_agreement(spec: &PartitionSpec, limits: Limits) -> Result<Vec<VerificationReport>> {
    let label = spec.label();
    let oracle = quasi_from_oracle(spec)?;
    let via_delta = quasi_from_delta_system(spec, limits)?;
    let via_bar = quasi_from_deltabar_system(spec, limits)?;
    let name = |what: &str| format!("triple-agreement[{label}] {what}");
    let table = |q: &QuasiPolynomial| q.table().to_vec();

    let mut reports = vec![
        VerificationReport::compare(name("delta"), table(&via_delta), table(&oracle)),
        VerificationReport::compare(name("delta-bar"), table(&via_bar), table(&oracle)),
    ];
    if spec.order() <= CRAMER_MAX_ORDER {
        let via_cramer = quasi_from_delta_cramer(spec, limits)?;
        reports.push(VerificationReport::compare(name("cramer"), table(&via_cramer), table(&via_delta)));
    }

    let n_max = 3 * spec.order() as u64;
    let counts: Vec<Rational> = p_oracle_table(spec, n_max).iter().map(to_rational).collect();
    for (route, q) in [("oracle", &oracle), ("delta", &via_delta), ("delta-bar", &via_bar)] {
        let evals: Vec<Rational> = (0..=n_max).map(|n| q.eval(n)).collect();
        reports.push(VerificationReport::compare(
            name(&format!("eval {route}")),
            vec![evals],
            vec![counts.clone()],
        ));
    }

    let (r, order) = (spec.r(), spec.order());
    let extra = 6;
    let rows = bernoulli_rows(r, spec.period() as usize, order + extra);
    let b = barnes(spec, r + order + extra);
    let period = spec.period() as usize;
    let unknowns: Vec<&Rational> = (0..order)
        .map(|idx| &oracle.table()[idx / period][(idx % period + 1) % period])
        .collect();
    let (lhs, rhs): (Vec<Rational>, Vec<Rational>) = (order..order + extra)
        .map(|n| {
            let lhs = rows[n].iter().zip(&unknowns).map(|(a, &x)| a * x).sum();
            (lhs, system_rhs_with(r, &b, n))
        })
        .unzip();
    reports.push(VerificationReport::compare(name("extended rows"), vec![lhs], vec![rhs]));
    Ok(reports)
}

/// Sorted multisets of parts from `1..=max_part` with `1 <= r <= max_r` and
/// `r * lcm <= max_order`.
pub fn small_specs(max_part: u64, max_r: usize, max_order: usize) -> Vec<PartitionSpec> {
    fn extend(
        prefix: &mut Vec<u64>,
        min: u64,
        max_part: u64,
        max_r: usize,
        max_order: usize,
        out: &mut Vec<PartitionSpec>,
    ) {
        for a in min..=max_part {
            prefix.push(a);
            if prefix.len() * lcm(prefix) as usize <= max_order {
                out.push(PartitionSpec::new(prefix.clone()).expect("positive parts"));
            }
            if prefix.len() < max_r {
                extend(prefix, a, max_part, max_r, max_order, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_part, max_r, max_order, &mut out);
    out.sort_by(|x, y| (x.r(), x.parts()).cmp(&(y.r(), y.parts())));
    out
}
