//! Bernoulli numbers, Bernoulli polynomials and Bernoulli-Barnes numbers.
//!
//! **Convention:** `B_1 = -1/2`, i.e. the numbers are the Taylor coefficients
//! of `z / (e^z - 1)`. Some libraries use `B_1 = +1/2`; every formula in this
//! crate assumes the minus sign.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::rational::{binomial, factorial, Rational};
use crate::unipoly::UniPoly;

fn cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// The Bernoulli number `B_j`.
///
/// Values come from `sum_{k=0}^{n} C(n+1, k) B_k = 0` and are memoized in a
/// grow-only table shared across threads. Concurrent fills compute identical
/// values, so whichever writer wins leaves the table unchanged in content.
pub fn bernoulli_number(j: usize) -> Rational {
    if let Some(b) = cache().read().unwrap().get(j) {
        return b.clone();
    }
    let mut table = cache().write().unwrap();
    while table.len() <= j {
        let n = table.len() as u64;
        let s: Rational = table
            .iter()
            .enumerate()
            .map(|(k, b)| b * Rational::from(binomial(n + 1, k as u64)))
            .sum();
        let b = -s / Rational::from(n + 1);
        table.push(b);
    }
    table[j].clone()
}

/// `B_0, ..., B_n`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    bernoulli_number(n);
    cache().read().unwrap()[..=n].to_vec()
}

/// `B_n(x) = sum_k C(n, k) B_{n-k} x^k`; monic of degree `n`.
pub fn bernoulli_poly(n: usize) -> UniPoly {
    let b = bernoulli_numbers(n);
    UniPoly::new(
        (0..=n)
            .map(|k| Rational::from(binomial(n as u64, k as u64)) * &b[n - k])
            .collect(),
    )
}

pub fn bernoulli_poly_eval(n: usize, x: &Rational) -> Rational {
    bernoulli_poly(n).eval(x)
}

/// Bernoulli-Barnes number `B_j(a)` by summing over all compositions
/// `i_1 + ... + i_r = j`:
///
/// `sum multinomial(j; i) * B_{i_1}...B_{i_r} * a_1^{i_1-1}...a_r^{i_r-1}`.
///
/// # Panics
///
/// If `a` is empty or contains a zero.
pub fn bernoulli_barnes_number(j: usize, a: &[u64]) -> Rational {
    assert!(!a.is_empty() && a.iter().all(|&x| x > 0), "parts must be positive");
    let b = bernoulli_numbers(j);
    let j_fact = factorial(j as u64);
    let fact: Vec<BigInt> = (0..=j as u64).map(factorial).collect();

    let mut total = Rational::zero();
    let mut parts = vec![0usize; a.len()];
    compositions(j, 0, &mut parts, &mut |c| {
        let mut term = Rational::one();
        let mut denom = BigInt::from(1);
        for (&i, &ak) in c.iter().zip(a) {
            if b[i].is_zero() {
                return;
            }
            term *= &b[i];
            term *= &Rational::from(ak)
                .powi(i as i32 - 1)
                .expect("parts are positive");
            denom *= &fact[i];
        }
        total += term * Rational::new(j_fact.clone(), denom).unwrap();
    });
    total
}

fn compositions(remaining: usize, idx: usize, parts: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if idx + 1 == parts.len() {
        parts[idx] = remaining;
        visit(parts);
        return;
    }
    for i in 0..=remaining {
        parts[idx] = i;
        compositions(remaining - i, idx + 1, parts, visit);
    }
}

/// `B_0(a), ..., B_n(a)` from the truncated product of the series
/// `z / (e^{a_k z} - 1) = sum_i B_i a_k^{i-1} z^i / i!`.
pub fn bernoulli_barnes_series(n: usize, a: &[u64]) -> Vec<Rational> {
    assert!(!a.is_empty() && a.iter().all(|&x| x > 0), "parts must be positive");
    let b = bernoulli_numbers(n);
    let inv_fact: Vec<Rational> = (0..=n as u64)
        .map(|i| Rational::new(1, factorial(i)).unwrap())
        .collect();

    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for &ak in a {
        let ak = Rational::from(ak);
        let factor: Vec<Rational> = (0..=n)
            .map(|i| &b[i] * ak.powi(i as i32 - 1).unwrap() * &inv_fact[i])
            .collect();
        let mut next = vec![Rational::zero(); n + 1];
        for (i, x) in acc.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, y) in factor[..=n - i].iter().enumerate() {
                next[i + k] += x * y;
            }
        }
        acc = next;
    }
    acc.into_iter()
        .enumerate()
        .map(|(j, c)| c * Rational::from(factorial(j as u64)))
        .collect()
}
