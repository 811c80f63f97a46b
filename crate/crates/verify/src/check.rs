//! Coefficient lowering and the outcome of a single check.

use serde_json::{json, Value};

use nodalcov::arith::{ArithError, Field, FieldTower, PrimeField, PrimeReduction, TowerElement};
use nodalcov::poly::{Poly, Ring};
use nodalcov::scheme::{RationalPoint, SchemeError};

/// Sends tower elements into the field a check runs over.
pub trait Lowering {
    type F: Field;
    fn field(&self) -> Self::F;
    fn lower(&self, e: &TowerElement) -> Result<<Self::F as Field>::Elem, ArithError>;
    fn prime(&self) -> Option<u64>;

    fn lower_poly(&self, p: &Poly<FieldTower>, ring: &Ring<Self::F>) -> Result<Poly<Self::F>, ArithError> {
        p.map_coeffs(ring, |e| self.lower(e))
    }

    fn lower_point(&self, p: &[TowerElement]) -> Result<RationalPoint<Self::F>, String> {
        let cs = p
            .iter()
            .map(|c| self.lower(c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        RationalPoint::new(&self.field(), cs).map_err(|e: SchemeError| e.to_string())
    }
}

pub struct Exact(pub FieldTower);

impl Lowering for Exact {
    type F = FieldTower;

    fn field(&self) -> FieldTower {
        self.0.clone()
    }

    fn lower(&self, e: &TowerElement) -> Result<TowerElement, ArithError> {
        Ok(e.clone())
    }

    fn prime(&self) -> Option<u64> {
        None
    }
}

impl Lowering for PrimeReduction {
    type F = PrimeField;

    fn field(&self) -> PrimeField {
        PrimeReduction::field(self)
    }

    fn lower(&self, e: &TowerElement) -> Result<u64, ArithError> {
        self.apply(e)
    }

    fn prime(&self) -> Option<u64> {
        Some(PrimeReduction::prime(self))
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

impl Outcome {
    pub fn new(expected: Value, observed: Value, pass: bool) -> Self {
        Outcome {
            expected,
            observed,
            pass,
        }
    }

    /// Observed equals expected.
    pub fn equal(expected: Value, observed: Value) -> Self {
        let pass = expected == observed;
        Outcome::new(expected, observed, pass)
    }

    pub fn error(expected: Value, message: impl ToString) -> Self {
        Outcome::new(expected, json!({ "error": message.to_string() }), false)
    }
}

/// Combines per-prime outcomes: passes iff every prime passes and all
/// primes observe the same value.
pub fn combine_primes(per_prime: Vec<(u64, Outcome)>) -> Outcome {
    let expected = per_prime.first().map_or(Value::Null, |(_, o)| o.expected.clone());
    let agree = per_prime.windows(2).all(|w| w[0].1.observed == w[1].1.observed);
    let pass = !per_prime.is_empty() && agree && per_prime.iter().all(|(_, o)| o.pass);
    let observed = per_prime
        .iter()
        .map(|(p, o)| json!({ "prime": p, "observed": o.observed, "pass": o.pass }))
        .collect();
    Outcome::new(expected, Value::Array(observed), pass)
}
