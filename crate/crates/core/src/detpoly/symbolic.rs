//! Symbolic determinants `F_{r,D}`, `F̄_{r,D}` and their Vandermonde quotients.

use std::collections::HashMap;

use crate::bernoulli::bernoulli_poly;
use crate::error::{Error, Result};
use crate::multipoly::{elem_sym, vandermonde, MultiPoly};
use crate::rational::{factorial, Rational};

use super::numeric::hilbert_closed_form;
use super::{check_positive, guard, pairs_count, Limits};
use crate::multipoly::families::pairs;

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoizing minors by their column subset.
///
/// Minors are built bottom-up: the minor on the last `k` rows and column set
/// `S` expands along its first row into minors on `S` minus one column. Each
/// level only needs the previous one, and there are `2^n` subsets in total.
pub(crate) fn laplace_det(entries: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = entries.len();
    assert!(n <= 20 && entries.iter().all(|row| row.len() == n), "square, small");
    if n == 0 {
        return MultiPoly::one(nvars);
    }

    let mut prev: HashMap<u32, MultiPoly> = HashMap::from([(0, MultiPoly::one(nvars))]);
    for size in 1..=n {
        let row = &entries[n - size];
        let mut next = HashMap::new();
        for mask in (0u32..1 << n).filter(|m| m.count_ones() as usize == size) {
            let mut acc = MultiPoly::zero(nvars);
            for (pos, c) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                let a = &row[c];
                if let Some(minor) = prev.get(&(mask & !(1 << c))).filter(|_| !a.is_zero()) {
                    if pos % 2 == 0 {
                        acc.add_product(minor, a);
                    } else {
                        acc.sub_product(minor, a);
                    }
                }
            }
            if !acc.is_zero() {
                next.insert(mask, acc);
            }
        }
        prev = next;
    }
    prev.remove(&((1u32 << n) - 1)).unwrap_or_else(|| MultiPoly::zero(nvars))
}

/// `B_k(x_v) / k` in `d` variables, cached by `(k, v)`.
struct EntryCache {
    d: usize,
    cache: HashMap<(usize, usize), MultiPoly>,
}

impl EntryCache {
    fn new(d: usize) -> Self {
        EntryCache {
            d,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, k: usize, v: usize) -> MultiPoly {
        let d = self.d;
        self.cache
            .entry((k, v))
            .or_insert_with(|| {
                let scaled = bernoulli_poly(k).scale(&Rational::frac(1, k as i64));
                MultiPoly::from_univariate(d, v, &scaled).expect("variable in range")
            })
            .clone()
    }
}

/// Rows `0..rows` of the Bernoulli block: entry at column `m*D + v` is
/// `B_{n+m+1}(x_{v+1}) / (n+m+1)`.
fn bernoulli_block(r: usize, d: usize, rows: usize) -> Vec<Vec<MultiPoly>> {
    let mut cache = EntryCache::new(d);
    (0..rows)
        .map(|n| {
            (0..r)
                .flat_map(|m| (0..d).map(move |v| (m, v)))
                .map(|(m, v)| cache.get(n + m + 1, v))
                .collect()
        })
        .collect()
}

/// `F_{r,D}(x_1, ..., x_D)`: the `rD x rD` determinant with entry
/// `B_{n+m+1}(x_v) / (n+m+1)` in row `n` and column `(m, v)`.
pub fn f_poly(r: usize, d: usize, limits: Limits) -> Result<MultiPoly> {
    check_positive(r, d)?;
    limits.check_symbolic(r * d)?;
    Ok(laplace_det(&bernoulli_block(r, d, r * d), d))
}

/// `F̄_{r,D}(x_1, ..., x_D)`: `r` indicator rows (row `m` is one on block `m`)
/// above the first `rD - r` rows of the Bernoulli block.
pub fn fbar_poly(r: usize, d: usize, limits: Limits) -> Result<MultiPoly> {
    check_positive(r, d)?;
    limits.check_symbolic(r * d)?;
    let mut rows: Vec<Vec<MultiPoly>> = (0..r)
        .map(|m| {
            (0..r * d)
                .map(|c| {
                    if c / d == m {
                        MultiPoly::one(d)
                    } else {
                        MultiPoly::zero(d)
                    }
                })
                .collect()
        })
        .collect();
    rows.extend(bernoulli_block(r, d, r * d - r));
    Ok(laplace_det(&rows, d))
}

/// Divides by `prod_{i<j} (x_j - x_i)^power`, one linear factor at a time.
pub fn divide_by_vandermonde(p: &MultiPoly, power: u32) -> Result<MultiPoly> {
    let n = p.nvars();
    let mut q = p.clone();
    for (i, j) in pairs(n) {
        let factor = &MultiPoly::var(n, j)? - &MultiPoly::var(n, i)?;
        for _ in 0..power {
            q = q.exact_div(&factor)?;
        }
    }
    Ok(q)
}

/// `G_{r,D} = F_{r,D} / prod_{i<j} (x_j - x_i)^r`.
///
/// A [`Error::NotDivisible`] here would contradict the factorization.
pub fn g_poly(r: usize, d: usize, limits: Limits) -> Result<MultiPoly> {
    divide_by_vandermonde(&f_poly(r, d, limits)?, r as u32)
}

/// `Ḡ_{r,D} = (-1)^{(D+1) C(r,2)} F̄_{r,D} / prod_{i<j} (x_j - x_i)^r`, for `D >= 2`.
pub fn gbar_poly(r: usize, d: usize, limits: Limits) -> Result<MultiPoly> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("Ḡ needs D >= 2 (D={d})")));
    }
    let sign = Rational::sign_power(((d + 1) * pairs_count(r)) as u64);
    divide_by_vandermonde(&fbar_poly(r, d, limits)?.scale(&sign), r as u32)
}

/// `(1/D!) prod_{i<j} (x_j - x_i) sum_{t=0}^{D} (-1)^t E_{D,D-t} / (t+1)`.
pub fn f1_closed_form(d: usize) -> Result<MultiPoly> {
    check_positive(1, d)?;
    let mut sum = MultiPoly::zero(d);
    for t in 0..=d {
        let c = Rational::sign_power(t as u64) / Rational::from(t + 1);
        sum = &sum + &elem_sym(d, d - t)?.scale(&c);
    }
    let scale = Rational::new(1, factorial(d as u64))?;
    Ok((&vandermonde(d, 1)? * &sum).scale(&scale))
}

/// Degree bound `r^2 C(D+1,2) - r C(D,2)` for `G_{r,D}`.
pub fn g_degree_bound(r: usize, d: usize) -> i64 {
    (r * r * pairs_count(d + 1)) as i64 - (r * pairs_count(d)) as i64
}

/// The printed bound `r C(rD-r,2) + D C(r,2) - r C(D,2)` for `Ḡ_{r,D}`.
/// Negative when `r = 1` and `D >= 2`, although `Ḡ_{1,D}` is a nonzero constant.
pub fn gbar_degree_bound_printed(r: usize, d: usize) -> i64 {
    (r * pairs_count(r * d - r) + d * pairs_count(r)) as i64 - (r * pairs_count(d)) as i64
}

/// Bound from counting degrees in `F̄_{r,D}` directly:
/// `C(rD-r+1,2) + (D-1) C(r,2) - r C(D,2)`. Never exceeds the printed bound for
/// `r >= 2`, and is attained by `Ḡ_{3,3}` (degree 18).
pub fn gbar_degree_bound(r: usize, d: usize) -> i64 {
    (pairs_count(r * d - r + 1) + (d - 1) * pairs_count(r)) as i64 - (r * pairs_count(d)) as i64
}

/// Conjectured `F̄_{r,2}`:
/// `(-1)^{C(r,2)} H_r (x_2-x_1)^r prod_{j=1}^{r-1} ((x_2-x_1)^2 - j^2)^{r-j}`,
/// with `H_r` the Hilbert-type determinant value.
///
/// The product starts at `j = 1`. A `j = 0` factor would contribute an extra
/// `(x_2-x_1)^{2r}` and overshoot the degree `r^2` of `F̄_{r,2}`.
pub fn conjecture_44_rhs(r: usize) -> Result<MultiPoly> {
    check_positive(r, 2)?;
    let diff = &MultiPoly::var(2, 1)? - &MultiPoly::var(2, 0)?;
    let diff_sq = &diff * &diff;
    let mut acc = diff.pow(r as u32);
    for j in 1..r {
        let factor = &diff_sq - &MultiPoly::constant(2, Rational::from(j * j));
        acc = &acc * &factor.pow((r - j) as u32);
    }
    let c = Rational::sign_power(pairs_count(r) as u64) * hilbert_closed_form(r);
    Ok(acc.scale(&c))
}

/// `(x_j - x_i)^2 - 1` for each pair `i < j`, in `d` variables.
fn shifted_square_gaps(d: usize) -> Result<Vec<MultiPoly>> {
    pairs(d)
        .map(|(i, j)| {
            let diff = &MultiPoly::var(d, j)? - &MultiPoly::var(d, i)?;
            Ok(&(&diff * &diff) - &MultiPoly::one(d))
        })
        .collect()
}

/// `sum_{i<j} ((x_j - x_i)^2 - 1)` in `d` variables.
pub fn pairwise_square_sum(d: usize) -> Result<MultiPoly> {
    Ok(shifted_square_gaps(d)?
        .iter()
        .fold(MultiPoly::zero(d), |acc, p| &acc + p))
}

/// `prod_{i<j} ((x_j - x_i)^2 - 1)` in `d` variables.
pub fn pairwise_square_product(d: usize) -> Result<MultiPoly> {
    Ok(shifted_square_gaps(d)?
        .iter()
        .fold(MultiPoly::one(d), |acc, p| &acc * p))
}

/// Shape of the `F̄_{2,D}` factor after the squared Vandermonde product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conj45Form {
    /// `prod_{i<j} ((x_j - x_i)^2 - 1)`; holds for every `D` checked.
    Product,
    /// `sum_{i<j} ((x_j - x_i)^2 - 1)`, as printed. Agrees with the product
    /// only at `D = 2`.
    PrintedSum,
}

impl Conj45Form {
    pub fn factor(self, d: usize) -> Result<MultiPoly> {
        match self {
            Conj45Form::Product => pairwise_square_product(d),
            Conj45Form::PrintedSum => pairwise_square_sum(d),
        }
    }
}

/// The constant `K(D)` with `F̄_{2,D} = K(D) prod_{i<j}(x_j-x_i)^2 * factor`,
/// or `None` when the quotient is not a constant.
pub fn conjecture_45_constant(d: usize, form: Conj45Form, limits: Limits) -> Result<Option<Rational>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("conjecture needs D >= 2 (D={d})")));
    }
    guard("D for the F̄_{2,D} conjecture", d, limits.conj45_max_d)?;
    conjecture_45_quotient(&fbar_poly(2, d, limits)?, form)
}

/// As [`conjecture_45_constant`], from an already expanded `F̄_{2,D}`.
pub fn conjecture_45_quotient(fbar: &MultiPoly, form: Conj45Form) -> Result<Option<Rational>> {
    let factor = form.factor(fbar.nvars())?;
    match divide_by_vandermonde(fbar, 2).and_then(|q| q.exact_div(&factor)) {
        Ok(q) if q.is_constant() => Ok(Some(q.constant_term())),
        Ok(_) | Err(Error::NotDivisible) => Ok(None),
        Err(e) => Err(e),
    }
}
