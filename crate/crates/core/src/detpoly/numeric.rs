use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::error::{Error, Result};
use crate::matrix::{det, RationalMatrix};
use crate::rational::{binomial, factorial, superfactorial, Rational};
use crate::unipoly::UniPoly;

use super::symbolic::{f_poly, fbar_poly};
use super::{check_positive, pairs_count, Limits};

/// `B_1, ..., B_n` as polynomials, index 0 unused.
fn bernoulli_table(n: usize) -> Vec<UniPoly> {
    (0..=n).map(bernoulli_poly).collect()
}

/// Rows `n = row_offset..` of the Bernoulli part shared by both systems:
/// entry `D^{n+m} B_{n+m+1}(v/D) / (n+m+1)` at column `m*D + v - 1`.
pub(crate) fn bernoulli_rows(r: usize, d: usize, rows: usize) -> Vec<Vec<Rational>> {
    let table = bernoulli_table(rows + r);
    let big_d = Rational::from(d);
    let points: Vec<Rational> = (1..=d).map(|v| Rational::frac(v as i64, d as i64)).collect();
    (0..rows)
        .map(|n| {
            let mut row = Vec::with_capacity(r * d);
            for m in 0..r {
                let k = n + m + 1;
                let scale = big_d.pow((n + m) as u32) / Rational::from(k);
                for x in &points {
                    row.push(table[k].eval(x) * &scale);
                }
            }
            row
        })
        .collect()
}

/// The `rD x rD` delta matrix: row `n`, column `m*D + (v-1)` holds
/// `D^{n+m} B_{n+m+1}(v/D) / (n+m+1)`.
pub fn build_delta_matrix(r: usize, d: usize) -> Result<RationalMatrix> {
    check_positive(r, d)?;
    RationalMatrix::from_rows(bernoulli_rows(r, d, r * d))
}

/// The `rD x rD` delta-bar matrix: `r` residue rows (row `m` is `(-D)^m` on
/// block `m`, zero elsewhere) followed by the first `rD - r` delta rows.
pub fn build_delta_bar_matrix(r: usize, d: usize) -> Result<RationalMatrix> {
    check_positive(r, d)?;
    let minus_d = -Rational::from(d);
    let mut rows: Vec<Vec<Rational>> = (0..r)
        .map(|m| {
            let mut row = vec![Rational::zero(); r * d];
            let value = minus_d.pow(m as u32);
            for cell in &mut row[m * d..(m + 1) * d] {
                *cell = value.clone();
            }
            row
        })
        .collect();
    rows.extend(bernoulli_rows(r, d, r * d - r));
    RationalMatrix::from_rows(rows)
}

pub fn delta(r: usize, d: usize) -> Result<Rational> {
    det(&build_delta_matrix(r, d)?)
}

pub fn delta_bar(r: usize, d: usize) -> Result<Rational> {
    det(&build_delta_bar_matrix(r, d)?)
}

/// `((D-1)/D, (D-2)/D, ..., 1/D, 0)`, in variable order `x_1..x_D`.
pub fn canonical_point(d: usize) -> Vec<Rational> {
    (1..=d).map(|v| Rational::frac((d - v) as i64, d as i64)).collect()
}

/// `Δ_{r,D}` through the symbolic route:
/// `(-1)^{rD(rD+r)/2} D^{rD(rD+r-2)/2} F_{r,D}(canonical point)`.
pub fn delta_via_f_poly(r: usize, d: usize, limits: Limits) -> Result<Rational> {
    let f = f_poly(r, d, limits)?;
    let n = r * d;
    let sign = Rational::sign_power((n * (n + r) / 2) as u64);
    let scale = Rational::from(d).pow((n * (n + r - 2) / 2) as u32);
    Ok(sign * scale * f.eval(&canonical_point(d))?)
}

/// `Δ̄_{r,D}` through the printed symbolic route:
/// `(-D)^{D C(r,2) + C(rD-r,2)} F̄_{r,D}(canonical point)`.
pub fn delta_bar_via_fbar_poly(r: usize, d: usize, limits: Limits) -> Result<Rational> {
    let f = fbar_poly(r, d, limits)?;
    let exponent = d * pairs_count(r) + pairs_count(r * d - r);
    Ok((-Rational::from(d)).pow(exponent as u32) * f.eval(&canonical_point(d))?)
}

/// `Δ̄_{r,1} = (-1)^{C(r,2)}`.
pub fn delta_bar_unit_period(r: usize) -> Rational {
    Rational::sign_power(pairs_count(r) as u64)
}

/// The `r x r` matrix with entries `1 / (i + j - 1)` (one-based).
pub fn hilbert_matrix(r: usize) -> RationalMatrix {
    RationalMatrix::from_fn(r, r, |i, j| Rational::frac(1, (i + j + 1) as i64))
}

pub fn hilbert_like_det(r: usize) -> Rational {
    det(&hilbert_matrix(r)).expect("square")
}

/// `[1! 2! ... (r-1)!]^3 / (r! (r+1)! ... (2r-1)!)`.
pub fn hilbert_closed_form(r: usize) -> Rational {
    let numer = superfactorial(r.saturating_sub(1) as u64).pow(3);
    let denom = (r as u64..2 * r as u64).fold(num_bigint::BigInt::from(1), |acc, k| acc * factorial(k));
    Rational::new(numer, denom).unwrap()
}

/// The `D x D` lower Hessenberg matrix whose determinant is `D! G_{1,D}(0)`:
/// entry `(i, j)` (one-based) is `C(i, j-1) B_{i-j+1}` for `j <= i`, one on
/// the superdiagonal, zero above it.
pub fn hessenberg_matrix(d: usize) -> RationalMatrix {
    RationalMatrix::from_fn(d, d, |i, j| {
        if j <= i {
            Rational::from(binomial(i as u64 + 1, j as u64)) * bernoulli_number(i + 1 - j)
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `M_D` from the lower-Hessenberg expansion
/// `M_D = C(D, D-1) B_1 M_{D-1} + sum_{l=1}^{D-1} (-1)^{D-l} C(D, D+1-l) B_{D+1-l} M_{l-1}`,
/// with `M_0 = 1`.
pub fn hessenberg_m_recursive(d: usize) -> Rational {
    let mut m = vec![Rational::one()];
    for k in 1..=d {
        let k64 = k as u64;
        let mut value = Rational::from(binomial(k64, k64 - 1)) * bernoulli_number(1) * &m[k - 1];
        for l in 1..k {
            let term = Rational::from(binomial(k64, k64 + 1 - l as u64)) * bernoulli_number(k + 1 - l) * &m[l - 1];
            value += Rational::sign_power((k - l) as u64) * term;
        }
        m.push(value);
    }
    m.pop().unwrap()
}

pub fn hessenberg_m_direct(d: usize) -> Rational {
    det(&hessenberg_matrix(d)).expect("square")
}

/// `M_D`, computed by the recursion and checked against the direct determinant.
pub fn hessenberg_m(d: usize) -> Result<Rational> {
    let recursive = hessenberg_m_recursive(d);
    let direct = hessenberg_m_direct(d);
    if recursive != direct {
        return Err(Error::RouteDisagreement(format!(
            "M_{d}: recursion gives {recursive}, determinant gives {direct}"
        )));
    }
    Ok(recursive)
}

/// `(-1)^D / (D + 1)`.
pub fn hessenberg_closed_form(d: usize) -> Rational {
    Rational::sign_power(d as u64) / Rational::from(d + 1)
}

/// `e_0, ..., e_n` evaluated at `point`, from the coefficients of
/// `prod (1 + x_i z)`.
fn elementary_values(point: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for x in point {
        let mut next = e.clone();
        next.push(Rational::zero());
        for (k, prev) in e.iter().enumerate() {
            next[k + 1] += prev * x;
        }
        e = next;
    }
    e
}

/// The closed form for `Δ_{1,D}` as printed:
/// `(-1)^{D(D+1)/2} (D-1)!...1! / D! * sum_t (-1)^t E_{D,D-t}(canonical point) / (t+1)`.
pub fn corollary_35_printed(d: usize) -> Rational {
    let e = elementary_values(&canonical_point(d));
    let sum: Rational = (0..=d)
        .map(|t| Rational::sign_power(t as u64) * &e[d - t] / Rational::from(t + 1))
        .sum();
    let prefactor = Rational::new(superfactorial(d as u64 - 1), factorial(d as u64)).unwrap();
    Rational::sign_power((d * (d + 1) / 2) as u64) * prefactor * sum
}

/// `1! 2! ... (D-2)! / (-D)^D`, as printed for `Δ̄_{1,D}`.
pub fn prop_42_printed(d: usize) -> Rational {
    let numer = Rational::from(superfactorial(d.saturating_sub(2) as u64));
    numer / (-Rational::from(d)).pow(d as u32)
}

/// `1! 2! ... (D-2)! / D^{D-1}`, which matches the direct determinant.
pub fn prop_42_corrected(d: usize) -> Rational {
    let numer = Rational::from(superfactorial(d.saturating_sub(2) as u64));
    numer / Rational::from(d).pow(d as u32 - 1)
}
