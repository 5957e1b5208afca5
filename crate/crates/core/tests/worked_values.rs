//! Small values worked out by hand, each checked through the public API.

use denumerant::bernoulli::{bernoulli_barnes_number, bernoulli_number, bernoulli_poly};
use denumerant::detpoly::{
    build_delta_bar_matrix, build_delta_matrix, delta, delta_bar, delta_via_f_poly, f_poly, fbar_poly, g_poly,
    gbar_poly, hessenberg_m, hilbert_like_det, Limits,
};
use denumerant::multipoly::{elem_sym, vandermonde, MultiPoly};
use denumerant::partition::{
    check_residue_identity, p_oracle, quasi_from_delta_system, quasi_from_deltabar_system, quasi_from_oracle,
    PartitionSpec,
};
use denumerant::report::Verdict;
use denumerant::{Rational, RationalMatrix};

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn x(n: usize, i: usize) -> MultiPoly {
    MultiPoly::var(n, i).unwrap()
}

fn c(n: usize, v: Rational) -> MultiPoly {
    MultiPoly::constant(n, v)
}

fn matrix(rows: &[&[Rational]]) -> RationalMatrix {
    RationalMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

#[test]
fn bernoulli_values() {
    assert_eq!(bernoulli_number(12), q(-691, 2730));
    assert_eq!(bernoulli_poly(2).to_string(), "x^2 - x + 1/6");
    assert_eq!(bernoulli_barnes_number(2, &[1, 1]), q(5, 6));
}

#[test]
fn delta_small_systems() {
    let lim = Limits::default();
    assert_eq!(build_delta_matrix(1, 1).unwrap(), matrix(&[&[q(1, 2)]]));
    assert_eq!(
        build_delta_matrix(1, 2).unwrap(),
        matrix(&[&[q(0, 1), q(1, 2)], &[q(-1, 12), q(1, 6)]])
    );
    assert_eq!(delta(1, 1).unwrap(), q(1, 2));
    assert_eq!(delta(1, 2).unwrap(), q(1, 24));
    assert_eq!(delta_via_f_poly(1, 2, lim).unwrap(), q(1, 24));
    assert!((1..=6).all(|d| !delta(1, d).unwrap().is_zero()));
}

#[test]
fn delta_bar_small_systems() {
    assert_eq!(
        build_delta_bar_matrix(1, 2).unwrap(),
        matrix(&[&[q(1, 1), q(1, 1)], &[q(0, 1), q(1, 2)]])
    );
    let m = build_delta_bar_matrix(1, 3).unwrap();
    assert_eq!(m.row(1), &[q(-1, 6), q(1, 6), q(1, 2)]);
    assert_eq!(m.row(2), &[q(-1, 12), q(-1, 12), q(1, 4)]);
    assert_eq!(delta_bar(1, 2).unwrap(), q(1, 2));
    assert_eq!(delta_bar(1, 3).unwrap(), q(1, 9));
    for r in 1..=5 {
        assert_eq!(delta_bar(r, 1).unwrap(), Rational::sign_power((r * (r - 1) / 2) as u64));
    }
}

#[test]
fn symbolic_small_cases() {
    let lim = Limits::default();
    assert_eq!(f_poly(1, 1, lim).unwrap(), &x(1, 0) - &c(1, q(1, 2)));

    // (1/2)(x_2 - x_1)(x_1 x_2 - (x_1 + x_2)/2 + 1/3)
    let inner = &(&(&x(2, 0) * &x(2, 1)) - &elem_sym(2, 1).unwrap().scale(&q(1, 2))) + &c(2, q(1, 3));
    let g12 = inner.scale(&q(1, 2));
    assert_eq!(g_poly(1, 2, lim).unwrap(), g12);
    assert_eq!(f_poly(1, 2, lim).unwrap(), &vandermonde(2, 1).unwrap() * &g12);

    for d in 1..=4 {
        let g = g_poly(1, d, lim).unwrap();
        let sign = Rational::sign_power(d as u64);
        let fact: u64 = (1..=d as u64 + 1).product();
        assert_eq!(g.constant_term(), sign / Rational::from(fact));
    }

    for r in 1..=3 {
        assert_eq!(fbar_poly(r, 1, lim).unwrap(), MultiPoly::one(1));
    }
    assert_eq!(gbar_poly(1, 2, lim).unwrap(), MultiPoly::one(2));
    assert!(gbar_poly(2, 1, lim).is_err());
}

#[test]
fn evaluation_examples() {
    let v3 = vandermonde(3, 1).unwrap();
    assert_eq!(v3.eval(&[q(2, 3), q(1, 3), q(0, 1)]).unwrap(), q(-2, 27));
    assert_eq!(elem_sym(2, 1).unwrap().eval(&[q(1, 2), q(0, 1)]).unwrap(), q(1, 2));
    assert!(elem_sym(3, 2).unwrap().is_symmetric());
    assert!(!(&x(2, 0) - &x(2, 1)).is_symmetric());
}

#[test]
fn scalar_determinants() {
    assert_eq!(hilbert_like_det(1), q(1, 1));
    assert_eq!(hilbert_like_det(2), q(1, 12));
    assert_eq!(hilbert_like_det(3), q(1, 2160));
    assert_eq!(hessenberg_m(0).unwrap(), q(1, 1));
    assert_eq!(hessenberg_m(1).unwrap(), q(-1, 2));
    assert_eq!(hessenberg_m(2).unwrap(), q(1, 3));
}

#[test]
fn partition_examples() {
    let lim = Limits::default();
    let s12 = PartitionSpec::new(vec![1, 2]).unwrap();
    assert_eq!(p_oracle(&s12, 4).to_string(), "3");

    let oracle = quasi_from_oracle(&s12).unwrap();
    assert_eq!(oracle.table(), &[vec![q(1, 1), q(1, 2)], vec![q(1, 2), q(1, 2)]]);
    assert_eq!(quasi_from_delta_system(&s12, lim).unwrap(), oracle);
    assert_eq!(quasi_from_deltabar_system(&s12, lim).unwrap(), oracle);

    let residues = check_residue_identity(&s12).unwrap();
    assert_eq!(residues[0].lhs, q(3, 2).into());
    assert_eq!(residues[0].rhs, q(3, 2).into());

    let s1 = PartitionSpec::new(vec![1]).unwrap();
    assert_eq!(quasi_from_delta_system(&s1, lim).unwrap().table(), &[vec![q(1, 1)]]);
    assert_eq!(quasi_from_deltabar_system(&s1, lim).unwrap().table(), &[vec![q(1, 1)]]);

    let s11 = PartitionSpec::new(vec![1, 1]).unwrap();
    let reports = check_residue_identity(&s11).unwrap();
    assert!(reports.iter().all(|r| r.verdict == Verdict::Equal));
    assert_eq!(reports[1].lhs, q(-1, 1).into());

    let s22 = PartitionSpec::new(vec![2, 2]).unwrap();
    assert_eq!(quasi_from_delta_system(&s22, lim).unwrap(), quasi_from_oracle(&s22).unwrap());
}
