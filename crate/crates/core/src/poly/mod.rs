//! Sparse multivariate polynomials over a [`Field`](crate::arith::Field).

mod jacobian;
mod monomial;
mod parse;
mod ring;

use thiserror::Error;

pub use jacobian::{determinant, jacobian, minors, subsets};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_element, parse_poly, parse_poly_with, parse_tower, Macros, ParseError};
pub use ring::{Poly, PolyRing, Ring, RingExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("at most {max} variables are supported, got {0}", max = MAX_VARS)]
    TooManyVariables(usize),
    #[error("variable name `{0}` is used twice")]
    DuplicateVariable(String),
    #[error("order {0:?} does not fit the variable count")]
    BadOrder(MonomialOrder),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("{k}x{k} minors requested from a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },
}
