//! Exact restricted partition functions and determinant systems of Bernoulli
//! polynomials.

pub mod bernoulli;
pub mod detpoly;
pub mod error;
pub mod matrix;
pub mod multipoly;
pub mod partition;
pub mod rational;
pub mod report;
pub mod unipoly;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use multipoly::MultiPoly;
pub use rational::Rational;
pub use unipoly::UniPoly;
