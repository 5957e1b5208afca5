//! Determinants of scaled Bernoulli-polynomial values and their symbolic
//! counterparts.
//!
//! Two `rD x rD` systems appear throughout. The *delta* system has row
//! `n = 0..rD-1` and, for part index `m = 0..r-1` and residue `v = 1..D`,
//! entry `D^{n+m} B_{n+m+1}(v/D) / (n+m+1)`. The *delta-bar* system replaces
//! the last `r` of those rows with `r` residue rows: row `m` holds `(-D)^m` on
//! the `D` columns of block `m`.
//!
//! Replacing `v/D` by indeterminates `x_v` and dropping the powers of `D`
//! gives the polynomials `F_{r,D}` and `F̄_{r,D}` in [`symbolic`].

mod numeric;
pub(crate) use numeric::bernoulli_rows;
pub mod symbolic;

pub use numeric::{
    build_delta_bar_matrix, build_delta_matrix, canonical_point, corollary_35_printed, delta, delta_bar,
    delta_bar_unit_period, delta_bar_via_fbar_poly, delta_via_f_poly, hessenberg_closed_form,
    hessenberg_m, hessenberg_m_direct, hessenberg_m_recursive, hessenberg_matrix, hilbert_closed_form,
    hilbert_like_det, hilbert_matrix, prop_42_corrected, prop_42_printed,
};
pub use symbolic::{
    conjecture_44_rhs, conjecture_45_constant, conjecture_45_quotient, pairwise_square_product,
    pairwise_square_sum, Conj45Form, f1_closed_form, f_poly, fbar_poly, g_degree_bound, g_poly,
    gbar_degree_bound, gbar_degree_bound_printed, gbar_poly,
};

use crate::error::{Error, Result};
use crate::matrix::{det, RationalMatrix};
use crate::rational::Rational;

/// Which of the two determinant systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetKind {
    Delta,
    DeltaBar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetSystemSpec {
    pub r: usize,
    pub d: usize,
    pub kind: DetKind,
}

impl DetSystemSpec {
    pub fn new(r: usize, d: usize, kind: DetKind) -> Result<Self> {
        check_positive(r, d)?;
        Ok(DetSystemSpec { r, d, kind })
    }

    pub fn order(&self) -> usize {
        self.r * self.d
    }

    pub fn matrix(&self) -> Result<RationalMatrix> {
        match self.kind {
            DetKind::Delta => build_delta_matrix(self.r, self.d),
            DetKind::DeltaBar => build_delta_bar_matrix(self.r, self.d),
        }
    }

    pub fn determinant(&self) -> Result<Rational> {
        det(&self.matrix()?)
    }
}

/// Size guards for the expensive constructions. The defaults are safe at
/// desk scale; [`Limits::unlimited`] removes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest matrix order expanded symbolically.
    pub symbolic_order: usize,
    /// Largest matrix order evaluated numerically.
    pub numeric_order: usize,
    /// Largest `r` for the `F̄_{r,2}` product conjecture.
    pub conj44_max_r: usize,
    /// Largest `D` for the `F̄_{2,D}` conjecture.
    pub conj45_max_d: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            symbolic_order: 9,
            numeric_order: 12,
            conj44_max_r: 4,
            conj45_max_d: 4,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            symbolic_order: usize::MAX,
            numeric_order: usize::MAX,
            conj44_max_r: usize::MAX,
            conj45_max_d: usize::MAX,
        }
    }

    pub fn check_symbolic(&self, order: usize) -> Result<()> {
        guard("symbolic matrix order rD", order, self.symbolic_order)
    }

    pub fn check_numeric(&self, order: usize) -> Result<()> {
        guard("numeric matrix order rD", order, self.numeric_order)
    }
}

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}

pub(crate) fn check_positive(r: usize, d: usize) -> Result<()> {
    if r == 0 || d == 0 {
        return Err(Error::InvalidArgument(format!("r and D must be positive (r={r}, D={d})")));
    }
    Ok(())
}

/// `C(n, 2)`.
pub(crate) fn pairs_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
