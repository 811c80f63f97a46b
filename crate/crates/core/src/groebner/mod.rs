//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod hilbert;
mod ops;
mod radical;

use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::arith::Field;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyError, Ring, RingExt};

pub(crate) use buchberger::Reducers;
pub use hilbert::{hilbert_dim_degree, hilbert_numerator};
pub use ops::{
    coefficient_vector, eliminate, homogeneous_part, ideal_quotient, intersect, monomials_of_degree,
    quotient_by, saturate, saturate_by,
};
pub use radical::radical;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("ring order {found:?} does not match the basis order {expected:?}")]
    OrderMismatch {
        expected: MonomialOrder,
        found: MonomialOrder,
    },
    #[error("cannot eliminate every variable")]
    DropAllVariables,
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("generator is not homogeneous")]
    NotHomogeneous,
    #[error("radical is only implemented up to projective dimension 1, got {0}")]
    DimensionTooLarge(i64),
    #[error("no auxiliary variable slot left")]
    NoAuxiliaryVariable,
    #[error("failed to find coordinates in general position")]
    NoGeneralPosition,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A reduced Gröbner basis: monic elements sorted by increasing leading
/// monomial. The ring carries the term order.
#[derive(Clone)]
pub struct ReducedGB<F: Field> {
    ring: Ring<F>,
    elements: Vec<Poly<F>>,
}

impl<F: Field> ReducedGB<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.elements
    }

    /// True for the unit ideal.
    pub fn is_one(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *g.lm().unwrap()).collect()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Result<Poly<F>, GroebnerError> {
        self.check_ring(f)?;
        Ok(self.reduce(f))
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether monomial `m` is a standard monomial (not in the leading ideal).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.elements.iter().any(|g| g.lm().unwrap().divides(m))
    }

    pub fn to_ideal(&self) -> Ideal<F> {
        let ideal = Ideal {
            ring: self.ring.clone(),
            gens: self.elements.clone(),
            cache: Mutex::new(Vec::new()),
        };
        ideal.cache.lock().unwrap().push(Arc::new(self.clone()));
        ideal
    }

    pub(crate) fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        Reducers::new(self.elements.iter()).reduce(f)
    }

    fn check_ring(&self, f: &Poly<F>) -> Result<(), GroebnerError> {
        let r = f.ring();
        if r.var_names() != self.ring.var_names() || !r.field().same_field(self.ring.field()) {
            return Err(GroebnerError::RingMismatch);
        }
        if r.order() != self.ring.order() {
            return Err(GroebnerError::OrderMismatch {
                expected: self.ring.order(),
                found: r.order(),
            });
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for ReducedGB<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter().map(|g| g.to_string())).finish()
    }
}

impl<F: Field> PartialEq for ReducedGB<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.elements == other.elements
    }
}

/// An ideal given by generators, with lazily computed Gröbner bases
/// cached per term order.
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Poly<F>>,
    cache: Mutex<Vec<Arc<ReducedGB<F>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_string())).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring<F>, gens: Vec<Poly<F>>) -> Result<Self, GroebnerError> {
        if gens.iter().any(|g| !g.ring().same_ring(ring)) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![ring.one()],
            cache: Mutex::new(Vec::new()),
        }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &Ring<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| ring.var(i)).collect(),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Poly::is_homogeneous)
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn gb(&self) -> Arc<ReducedGB<F>> {
        self.groebner_basis(self.ring.order())
    }

    /// Reduced Gröbner basis in `order`, computed once and cached.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<ReducedGB<F>> {
        if let Some(g) = self.cache.lock().unwrap().iter().find(|g| g.order() == order) {
            return g.clone();
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order)
        };
        let gens: Vec<Poly<F>> = self.gens.iter().map(|g| g.reorder(&ring)).collect();
        let elements = buchberger::buchberger(&ring, &gens);
        let gb = Arc::new(ReducedGB { ring, elements });
        let mut cache = self.cache.lock().unwrap();
        if let Some(g) = cache.iter().find(|g| g.order() == order) {
            return g.clone();
        }
        cache.push(gb.clone());
        gb
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_one()
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool, GroebnerError> {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        if !other.ring.same_ring(&self.ring) {
            return Err(GroebnerError::RingMismatch);
        }
        let gb = self.gb();
        Ok(other.gens.iter().all(|g| gb.reduce(g).is_zero()))
    }

    /// Equality of ideals via their reduced bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        if !other.ring.same_ring(&self.ring) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(self.gb().elements == other.gb().elements)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: &[Poly<F>]) -> Result<Ideal<F>, GroebnerError> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
        if !other.ring.same_ring(&self.ring) {
            return Err(GroebnerError::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Moves the ideal into a ring with the same variables and field
    /// but a different term order.
    pub fn reorder(&self, ring: &Ring<F>) -> Ideal<F> {
        Ideal {
            ring: ring.clone(),
            gens: self.gens.iter().map(|g| g.reorder(ring)).collect(),
            cache: Mutex::new(
                self.cache
                    .lock()
                    .unwrap()
                    .iter()
                    .map(|g| {
                        let gr = if g.order() == ring.order() { ring.clone() } else { g.ring.clone() };
                        Arc::new(ReducedGB {
                            elements: g.elements.iter().map(|p| p.reorder(&gr)).collect(),
                            ring: gr,
                        })
                    })
                    .collect(),
            ),
        }
    }

    /// Projective dimension and degree; see [`hilbert_dim_degree`].
    pub fn dim_degree(&self) -> Result<(i64, u64), GroebnerError> {
        hilbert_dim_degree(self)
    }
}

/// Reduced Gröbner basis of `ideal` in `order`.
pub fn groebner_basis<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> Arc<ReducedGB<F>> {
    ideal.groebner_basis(order)
}

/// Normal form of `f` with respect to `gb`.
pub fn normal_form<F: Field>(f: &Poly<F>, gb: &ReducedGB<F>) -> Result<Poly<F>, GroebnerError> {
    gb.normal_form(f)
}

/// Checks that every S-polynomial of `gb` reduces to zero.
pub fn is_groebner_basis<F: Field>(gb: &ReducedGB<F>) -> bool {
    let red = Reducers::new(gb.elements.iter());
    let els = &gb.elements;
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            if !red.reduce(&buchberger::s_poly(&els[i], &els[j])).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldTower, PrimeField};
    use crate::poly::{parse_poly, parse_poly_with, Macros, PolyRing};

    fn ring(vars: &[&str]) -> Ring<PrimeField> {
        PolyRing::new(PrimeField::new(32003).unwrap(), vars, MonomialOrder::DegRevLex).unwrap()
    }

    fn ideal<F: Field>(r: &Ring<F>, gens: &[&str]) -> Ideal<F> {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
    }

    fn gb_strings<F: Field>(i: &Ideal<F>) -> Vec<String> {
        i.gb().elements().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn linear_basis() {
        let r = ring(&["x", "y"]);
        assert_eq!(gb_strings(&ideal(&r, &["x", "x+y"])), vec!["y", "x"]);
    }

    #[test]
    fn principal_ideal() {
        let r = ring(&["x", "y"]);
        assert_eq!(gb_strings(&ideal(&r, &["3*x^2*y"])), vec!["x^2*y"]);
    }

    #[test]
    fn unit_and_zero() {
        let r = ring(&["x", "y"]);
        assert!(ideal(&r, &["x", "x+1"]).is_unit());
        let z = Ideal::new(&r, vec![r.zero()]).unwrap();
        assert!(z.gb().is_zero());
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        assert!(is_groebner_basis(&i.gb()));
        assert_eq!(i.dim_degree().unwrap(), (1, 3));
    }

    #[test]
    fn lex_basis_of_intersection_points() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y"], MonomialOrder::Lex).unwrap();
        let i = ideal(&r, &["x^2 + y^2 - 1", "x - y"]);
        assert_eq!(gb_strings(&i), vec!["y^2 + 50", "x + 100*y"]);
    }

    #[test]
    fn normal_form_checks_the_order() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "y"]);
        let lex = r.with_order(MonomialOrder::Lex);
        let f = parse_poly("x", &lex).unwrap();
        assert!(matches!(
            i.gb().normal_form(&f),
            Err(GroebnerError::OrderMismatch { .. })
        ));
        assert!(i.gb().normal_form(&r.zero()).unwrap().is_zero());
        let other = ring(&["a", "b"]);
        assert_eq!(
            i.gb().normal_form(&other.var(0)),
            Err(GroebnerError::RingMismatch)
        );
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        let e = eliminate(&ideal(&r, &["x - y"]), &[0]).unwrap();
        assert!(e.gb().is_zero());
        let e = eliminate(&ideal(&r, &["x - y", "x"]), &[0]).unwrap();
        assert_eq!(gb_strings(&e), vec!["y"]);
        assert_eq!(
            eliminate(&ideal(&r, &["x"]), &[0, 1]).unwrap_err(),
            GroebnerError::DropAllVariables
        );
    }

    #[test]
    fn rabinowitsch_saturation() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2*y"]);
        let x = r.var(0);
        // through the affine route (the input is not treated as projective)
        let ext = PolyRing::new(r.field().clone(), &["t", "x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let j = ideal(&ext, &["x^2*y", "t*x - 1"]);
        let e = eliminate(&j, &[0]).unwrap();
        assert_eq!(gb_strings(&e), vec!["y"]);
        assert_eq!(gb_strings(&saturate_by(&i, &x).unwrap()), vec!["y"]);
        let xy = parse_poly("x + y", &r).unwrap();
        let s = saturate_by(&ideal(&r, &["x^2*y + x*y^2"]), &xy).unwrap();
        assert_eq!(gb_strings(&s), vec!["x*y"]);
    }

    #[test]
    fn quotient_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2*y"]);
        let q = ideal_quotient(&i, &ideal(&r, &["x"])).unwrap();
        assert_eq!(gb_strings(&q), vec!["x*y"]);
        let s = saturate(&i, &ideal(&r, &["x"])).unwrap();
        assert_eq!(gb_strings(&s), vec!["y"]);
        assert!(saturate(&s, &ideal(&r, &["x"])).unwrap().equals(&s).unwrap());
        assert_eq!(
            ideal_quotient(&i, &Ideal::zero(&r)).unwrap_err(),
            GroebnerError::ZeroIdeal
        );
        // the general route through intersection
        let q = quotient_by(&i, &parse_poly("x + y", &r).unwrap()).unwrap();
        assert_eq!(gb_strings(&q), vec!["x^2*y"]);
    }

    #[test]
    fn intersection_of_coordinate_axes() {
        let r = ring(&["x", "y", "z"]);
        let i = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "z"])).unwrap();
        assert_eq!(gb_strings(&i), vec!["y", "x*z"]);
    }

    #[test]
    fn one_point_in_p4() {
        let r = ring(&["x", "y", "z", "w", "t"]);
        let p = ideal(&r, &["x - 2*t", "y", "z + t", "w - 5*t"]);
        assert_eq!(p.dim_degree().unwrap(), (0, 1));
        assert_eq!(ideal(&r, &["x", "y", "z", "w", "t"]).dim_degree().unwrap(), (-1, 0));
        assert_eq!(Ideal::unit(&r).dim_degree().unwrap(), (-1, 0));
        assert_eq!(
            ideal(&r, &["x + 1"]).dim_degree().unwrap_err(),
            GroebnerError::NotHomogeneous
        );
    }

    #[test]
    fn homogeneous_slices() {
        let r = ring(&["x", "y", "z", "w", "t"]);
        let q = ideal(&r, &["x*y + z^2 - w*t"]);
        assert_eq!(homogeneous_part(&q, 3).unwrap().len(), 5);
        assert_eq!(homogeneous_part(&q, 1).unwrap().len(), 0);
        assert_eq!(homogeneous_part(&q, 2).unwrap().len(), 1);
        assert_eq!(monomials_of_degree(5, 2).len(), 15);
        assert_eq!(monomials_of_degree(1, 3).len(), 1);
    }

    fn igusa() -> (Ring<FieldTower>, Ideal<FieldTower>) {
        let r = PolyRing::new(
            FieldTower::rationals(),
            &["x", "y", "z", "w", "t"],
            MonomialOrder::DegRevLex,
        )
        .unwrap();
        let mut m = Macros::new();
        m.define("h", "-x-y-z-w-t");
        let q = parse_poly("5*(x^2+y^2+z^2+w^2+t^2)-7*(x+y+z+w+t)^2", &r).unwrap();
        let i = parse_poly_with(
            "4*(x^4+y^4+z^4+w^4+t^4+h^4)-(x^2+y^2+z^2+w^2+t^2+h^2)^2",
            &r,
            &m,
        )
        .unwrap();
        (r.clone(), Ideal::new(&r, vec![q, i]).unwrap())
    }

    #[test]
    fn quartic_complete_intersection() {
        let (r, i) = igusa();
        assert!(is_groebner_basis(&i.gb()));
        for g in i.generators() {
            assert!(i.gb().normal_form(g).unwrap().is_zero());
        }
        assert_eq!(i.dim_degree().unwrap(), (2, 8));
        assert_eq!(homogeneous_part(&i, 2).unwrap().len(), 1);
        assert_eq!(homogeneous_part(&i, 1).unwrap().len(), 0);
        let a = parse_poly("x^2 - 3*y*t + 2", &r).unwrap();
        let b = parse_poly("x*z - 7", &r).unwrap();
        let comb = a.mul(&i.generators()[0]).add(&b.mul(&i.generators()[1]));
        assert!(i.contains(&comb).unwrap());
        assert!(!i.contains(&comb.add(&r.var(0))).unwrap());
    }
}
