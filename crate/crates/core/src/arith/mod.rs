//! Exact coefficient arithmetic.
//!
//! Every algebraic routine in this crate is generic over [`Field`], a
//! context object that owns the arithmetic of its elements. Two fields are
//! provided: [`FieldTower`], a tower of number fields over the rationals, and
//! [`PrimeField`], the integers modulo an odd prime. A [`PrimeReduction`]
//! maps the former homomorphically onto the latter.

mod prime;
mod tower;
mod unipoly;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use prime::{is_prime, next_prime, PrimeField, PrimeReduction};
pub use tower::{FieldTower, TowerElement, TowerStep};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("minimal polynomial of `{0}` is not monic")]
    NotMonic(String),
    #[error("minimal polynomial of `{0}` must have degree at least 2, got {1}")]
    DegreeTooSmall(String, usize),
    #[error("generator `{0}` is not defined in the tower")]
    UndefinedGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("elements belong to different towers")]
    MixedTowers,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("prime {p} divides the denominator {den}")]
    DenominatorDivisible { p: u64, den: BigInt },
    #[error("minimal polynomial of `{name}` is not squarefree modulo {p}")]
    NotSquarefreeModP { name: String, p: u64 },
    #[error("minimal polynomial of `{name}` has no root modulo {p}")]
    NoRootModP { name: String, p: u64 },
    #[error("image {image} is not a root of the minimal polynomial of `{name}` modulo {p}")]
    BadImage { name: String, p: u64, image: u64 },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("no valid prime found in [{floor}, {ceiling})")]
    NoValidPrime { floor: u64, ceiling: u64 },
}

/// A field given as a context object.
///
/// Elements are plain values; all arithmetic goes through the context so that
/// elements need not carry a reference to their field.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem, ArithError>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// The named tower generator, if this field has one by that name.
    fn generator(&self, name: &str) -> Option<Self::Elem>;
    fn generator_names(&self) -> Vec<String>;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Renders an element in the polynomial expression grammar.
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// True if the printed form is a single signed atom (no top-level `+`).
    fn is_atomic(&self, a: &Self::Elem) -> bool;
    /// Structural identity of the field, used to reject mixed-field operations.
    fn same_field(&self, other: &Self) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        let inv = self.inv(b).ok_or(ArithError::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        *acc = self.add(acc, &prod);
    }
}

pub(crate) fn rational_to_string(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
