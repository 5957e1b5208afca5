//! Named polynomial families: elementary and complete homogeneous symmetric
//! polynomials, Vandermonde powers, and divided differences of Bernoulli
//! polynomials.

use std::collections::HashMap;

use super::{Monomial, MultiPoly};
use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};

/// Elementary symmetric polynomial `E_{n,k}`: the sum of all products of `k`
/// distinct variables among `n`.
pub fn elem_sym(n: usize, k: usize) -> Result<MultiPoly> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "elementary symmetric degree {k} exceeds variable count {n}"
        )));
    }
    let mut p = MultiPoly::zero(n);
    let mut exps = vec![0u32; n];
    choose(n, k, 0, &mut exps, &mut |e| p.add_term(Monomial::new(e.to_vec()), Rational::one()));
    Ok(p)
}

fn choose(n: usize, k: usize, start: usize, exps: &mut [u32], visit: &mut impl FnMut(&[u32])) {
    if k == 0 {
        visit(exps);
        return;
    }
    for i in start..=n - k {
        exps[i] = 1;
        choose(n, k - 1, i + 1, exps, visit);
        exps[i] = 0;
    }
}

/// Complete homogeneous polynomial `L_j(x_1, ..., x_n)`: every monomial of
/// degree `j` with coefficient one.
pub fn complete_hom(n: usize, j: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete_hom needs at least one variable".into()));
    }
    let mut p = MultiPoly::zero(n);
    let mut exps = vec![0u32; n];
    distribute(j, 0, &mut exps, &mut |e| p.add_term(Monomial::new(e.to_vec()), Rational::one()));
    Ok(p)
}

fn distribute(remaining: u32, idx: usize, exps: &mut [u32], visit: &mut impl FnMut(&[u32])) {
    if idx + 1 == exps.len() {
        exps[idx] = remaining;
        visit(exps);
        return;
    }
    for e in 0..=remaining {
        exps[idx] = e;
        distribute(remaining - e, idx + 1, exps, visit);
    }
    exps[idx] = 0;
}

/// `prod_{1 <= i < j <= n} (x_j - x_i)^power`.
pub fn vandermonde(n: usize, power: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("vandermonde needs at least one variable".into()));
    }
    let mut acc = MultiPoly::one(n);
    for (i, j) in pairs(n) {
        let factor = &MultiPoly::var(n, j)? - &MultiPoly::var(n, i)?;
        acc = &acc * &factor.pow(power);
    }
    Ok(acc)
}

/// Index pairs `(i, j)` with `i < j < n`.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

/// Divided difference `B_ell(x_1, ..., x_j)` of the Bernoulli polynomial, in
/// `j` variables, from the closed form
///
/// `sum_{t=0}^{ell-j+1} C(ell, t+j-1) B_{ell-j+1-t} L_t(x_1, ..., x_j)`.
///
/// It is zero for `ell <= j - 2` and the constant one for `j = ell + 1`.
pub fn divided_diff_bernoulli(ell: usize, j: usize) -> Result<MultiPoly> {
    if ell == 0 || j == 0 {
        return Err(Error::InvalidArgument("divided differences need ell, j >= 1".into()));
    }
    let mut p = MultiPoly::zero(j);
    if ell + 1 < j {
        return Ok(p);
    }
    for t in 0..=ell + 1 - j {
        let c = Rational::from(binomial(ell as u64, (t + j - 1) as u64)) * bernoulli_number(ell + 1 - j - t);
        if c.is_zero() {
            continue;
        }
        p = &p + &complete_hom(j, t as u32)?.scale(&c);
    }
    Ok(p)
}

/// Same polynomial as [`divided_diff_bernoulli`], built by the Newton
/// recursion
///
/// `B(x_1..x_{i-1}, x_k) = (B(x_1..x_{i-2}, x_k) - B(x_1..x_{i-1})) / (x_k - x_{i-1})`
///
/// with every quotient taken by exact division.
pub fn divided_diff_bernoulli_recursive(ell: usize, j: usize) -> Result<MultiPoly> {
    if ell == 0 || j == 0 {
        return Err(Error::InvalidArgument("divided differences need ell, j >= 1".into()));
    }
    let base = bernoulli_poly(ell);
    let mut memo = HashMap::new();
    let vars: Vec<usize> = (0..j).collect();
    newton(&vars, j, &base, &mut memo)
}

fn newton(
    vars: &[usize],
    nvars: usize,
    base: &crate::unipoly::UniPoly,
    memo: &mut HashMap<Vec<usize>, MultiPoly>,
) -> Result<MultiPoly> {
    if let Some(p) = memo.get(vars) {
        return Ok(p.clone());
    }
    let p = match vars {
        [v] => MultiPoly::from_univariate(nvars, *v, base)?,
        _ => {
            let t = vars.len();
            let (last, prev) = (vars[t - 1], vars[t - 2]);
            let mut skip_prev = vars[..t - 2].to_vec();
            skip_prev.push(last);
            let a = newton(&skip_prev, nvars, base, memo)?;
            let b = newton(&vars[..t - 1], nvars, base, memo)?;
            let denom = &MultiPoly::var(nvars, last)? - &MultiPoly::var(nvars, prev)?;
            (&a - &b).exact_div(&denom)?
        }
    };
    memo.insert(vars.to_vec(), p.clone());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elem_sym(2, 1).unwrap(), &x(2, 0) + &x(2, 1));
        assert_eq!(elem_sym(3, 3).unwrap(), &(&x(3, 0) * &x(3, 1)) * &x(3, 2));
        assert_eq!(elem_sym(4, 0).unwrap(), MultiPoly::one(4));
        assert_eq!(elem_sym(5, 2).unwrap().len(), 10);
        assert!(elem_sym(2, 3).is_err());
        assert!(elem_sym(3, 2).unwrap().is_symmetric());
    }

    #[test]
    fn complete_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let expected = &(&(&x1 * &x1) + &(&x1 * &x2)) + &(&x2 * &x2);
        assert_eq!(complete_hom(2, 2).unwrap(), expected);
        assert_eq!(complete_hom(4, 1).unwrap(), elem_sym(4, 1).unwrap());
        assert_eq!(complete_hom(1, 5).unwrap(), x(1, 0).pow(5));
        assert_eq!(complete_hom(3, 0).unwrap(), MultiPoly::one(3));
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(2, 1).unwrap(), &x(2, 1) - &x(2, 0));
        assert_eq!(vandermonde(1, 3).unwrap(), MultiPoly::one(1));
        let v = vandermonde(3, 1).unwrap();
        let at = |a, b, c| v.eval(&[Rational::from(a), Rational::from(b), Rational::from(c)]).unwrap();
        assert_eq!(at(0, 1, 2), Rational::from(2));
        assert_eq!(
            v.eval(&[Rational::frac(2, 3), Rational::frac(1, 3), Rational::zero()]).unwrap(),
            Rational::frac(-2, 27)
        );
    }

    #[test]
    fn divided_difference_boundary_values() {
        for ell in 1..=8 {
            assert_eq!(divided_diff_bernoulli(ell, ell + 1).unwrap(), MultiPoly::one(ell + 1));
            for j in ell + 2..=ell + 4 {
                assert!(divided_diff_bernoulli(ell, j).unwrap().is_zero());
            }
            let single = MultiPoly::from_univariate(1, 0, &bernoulli_poly(ell)).unwrap();
            assert_eq!(divided_diff_bernoulli(ell, 1).unwrap(), single);
        }
    }

    #[test]
    fn recursion_matches_closed_form() {
        for ell in 1..=8 {
            for j in 1..=5 {
                assert_eq!(
                    divided_diff_bernoulli_recursive(ell, j).unwrap(),
                    divided_diff_bernoulli(ell, j).unwrap(),
                    "ell={ell}, j={j}"
                );
            }
        }
    }

    #[test]
    fn value_at_origin() {
        for ell in 1..=8usize {
            for j in 1..=ell + 1 {
                let p = divided_diff_bernoulli(ell, j).unwrap();
                let expected = Rational::from(binomial(ell as u64, j as u64 - 1)) * bernoulli_number(ell + 1 - j);
                assert_eq!(p.constant_term(), expected, "ell={ell}, j={j}");
            }
        }
    }

    #[test]
    fn complete_homogeneous_step_identity() {
        // L_j(x_1..x_{n-2}, x_n) - L_j(x_1..x_{n-1}) = (x_n - x_{n-1}) L_{j-1}(x_1..x_n)
        for n in 2..=5 {
            for j in 1..=5u32 {
                let l_prev = complete_hom(n - 1, j).unwrap();
                let embed = |p: &MultiPoly, map: &dyn Fn(usize) -> usize| {
                    MultiPoly::from_terms(
                        n,
                        p.terms().map(|(m, c)| {
                            let mut e = vec![0; n];
                            for (i, &k) in m.exps().iter().enumerate() {
                                e[map(i)] = k;
                            }
                            (e, c.clone())
                        }),
                    )
                    .unwrap()
                };
                let skip = embed(&l_prev, &|i| if i == n - 2 { n - 1 } else { i });
                let first = embed(&l_prev, &|i| i);
                let lhs = &skip - &first;
                let rhs = &(&x(n, n - 1) - &x(n, n - 2)) * &complete_hom(n, j - 1).unwrap();
                assert_eq!(lhs, rhs, "n={n}, j={j}");
            }
        }
    }
}
