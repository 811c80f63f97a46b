//! Linear systems of hypersurfaces of a fixed degree.

use thiserror::Error;

use crate::arith::Field;
use crate::groebner::{coefficient_vector, monomials_of_degree, GroebnerError};
use crate::linalg;
use crate::poly::{Monomial, Poly, Ring, RingExt};
use crate::scheme::{ProjScheme, RationalPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinSysError {
    #[error("linear system and scheme live in different ambient spaces")]
    AmbientMismatch,
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// A subspace of the degree-`d` forms, stored as independent coefficient
/// vectors over [`monomials_of_degree`] in reduced echelon form.
#[derive(Clone, Debug)]
pub struct LinSys<F: Field> {
    ring: Ring<F>,
    degree: u32,
    monomials: Vec<Monomial>,
    basis: Vec<Vec<F::Elem>>,
}

/// Result of restricting a linear system to a scheme.
#[derive(Clone, Debug)]
pub struct Trace<F: Field> {
    pub dimension: usize,
    /// Normal forms modulo the scheme's ideal spanning the restriction.
    pub sections: Vec<Poly<F>>,
}

impl<F: Field> LinSys<F> {
    /// All forms of degree `d`.
    pub fn complete(ring: &Ring<F>, d: u32) -> Self {
        let monomials = monomials_of_degree(ring.nvars(), d);
        let field = ring.field();
        let basis = (0..monomials.len())
            .map(|i| {
                let mut v = vec![field.zero(); monomials.len()];
                v[i] = field.one();
                v
            })
            .collect();
        LinSys {
            ring: ring.clone(),
            degree: d,
            monomials,
            basis,
        }
    }

    /// The span of the given forms of degree `d`.
    pub fn spanned_by(ring: &Ring<F>, d: u32, forms: &[Poly<F>]) -> Self {
        let monomials = monomials_of_degree(ring.nvars(), d);
        let mut basis: Vec<_> = forms.iter().map(|f| coefficient_vector(f, &monomials)).collect();
        linalg::rref(ring.field(), &mut basis);
        LinSys {
            ring: ring.clone(),
            degree: d,
            monomials,
            basis,
        }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis_vectors(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn members(&self) -> Vec<Poly<F>> {
        self.basis.iter().map(|v| self.form(v)).collect()
    }

    fn form(&self, v: &[F::Elem]) -> Poly<F> {
        let field = self.ring.field();
        let terms = self
            .monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        self.ring.from_terms(terms)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        if !f.is_zero() && f.homogeneous_degree().ok() != Some(self.degree) {
            return false;
        }
        let field = self.ring.field();
        let mut rows = self.basis.clone();
        rows.push(coefficient_vector(f, &self.monomials));
        linalg::rank(field, &rows) == self.basis.len()
    }

    /// `self ⊆ other` as subspaces.
    pub fn is_subsystem_of(&self, other: &Self) -> bool {
        let field = self.ring.field();
        let mut rows = other.basis.clone();
        rows.extend(self.basis.iter().cloned());
        linalg::rank(field, &rows) == other.basis.len()
    }

    /// The members `Σ c_i b_i` with `c` in the kernel of the matrix whose
    /// column `i` is `images[i]`.
    fn restrict(&self, images: &[Vec<F::Elem>]) -> Self {
        let field = self.ring.field();
        let nrows = images.first().map_or(0, Vec::len);
        let matrix: Vec<Vec<F::Elem>> = (0..nrows)
            .map(|r| images.iter().map(|col| col[r].clone()).collect())
            .collect();
        let combos = linalg::kernel(field, &matrix, self.basis.len());
        let mut basis: Vec<Vec<F::Elem>> = combos
            .iter()
            .map(|c| {
                let mut v = vec![field.zero(); self.monomials.len()];
                for (ci, b) in c.iter().zip(&self.basis) {
                    if field.is_zero(ci) {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        field.add_mul_assign(x, ci, y);
                    }
                }
                v
            })
            .collect();
        linalg::rref(field, &mut basis);
        LinSys {
            ring: self.ring.clone(),
            degree: self.degree,
            monomials: self.monomials.clone(),
            basis,
        }
    }

    fn check_ambient(&self, ring: &Ring<F>) -> Result<(), LinSysError> {
        if self.ring.nvars() == ring.nvars()
            && self.ring.var_names() == ring.var_names()
            && self.ring.field().same_field(ring.field())
        {
            Ok(())
        } else {
            Err(LinSysError::AmbientMismatch)
        }
    }

    fn normal_forms(&self, z: &ProjScheme<F>) -> Result<Vec<Poly<F>>, LinSysError> {
        self.check_ambient(z.ring())?;
        let gb = z.ideal().gb();
        let target = gb.ring().clone();
        self.members()
            .iter()
            .map(|f| Ok(gb.normal_form(&f.reorder(&target))?))
            .collect()
    }

    /// Members vanishing on `z`.
    pub fn through_scheme(&self, z: &ProjScheme<F>) -> Result<Self, LinSysError> {
        let nfs = self.normal_forms(z)?;
        let images: Vec<_> = nfs
            .iter()
            .map(|f| coefficient_vector(&f.reorder(&self.ring), &self.monomials))
            .collect();
        Ok(self.restrict(&images))
    }

    /// Members vanishing at every point.
    pub fn through_points(&self, pts: &[RationalPoint<F>]) -> Result<Self, LinSysError> {
        let n = self.ring.nvars();
        if let Some(p) = pts.iter().find(|p| p.len() != n) {
            return Err(LinSysError::PointLength {
                expected: n,
                got: p.len(),
            });
        }
        let images: Vec<Vec<F::Elem>> = self
            .members()
            .iter()
            .map(|f| pts.iter().map(|p| f.evaluate(p.coords()).unwrap()).collect())
            .collect();
        Ok(self.restrict(&images))
    }

    /// `dim L - dim (L ∩ I_X)` together with representatives of the
    /// restricted system.
    pub fn trace(&self, x: &ProjScheme<F>) -> Result<Trace<F>, LinSysError> {
        let field = self.ring.field();
        let nfs = self.normal_forms(x)?;
        let mut rows: Vec<_> = nfs
            .iter()
            .map(|f| coefficient_vector(&f.reorder(&self.ring), &self.monomials))
            .collect();
        linalg::rref(field, &mut rows);
        let sections = rows.iter().map(|v| self.form(v)).collect();
        Ok(Trace {
            dimension: rows.len(),
            sections,
        })
    }

    pub fn trace_dimension(&self, x: &ProjScheme<F>) -> Result<usize, LinSysError> {
        Ok(self.trace(x)?.dimension)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};

    fn ring(n: usize) -> Ring<PrimeField> {
        let names = ["x", "y", "z", "w", "t", "u", "v"];
        PolyRing::new(PrimeField::new(32003).unwrap(), &names[..n], MonomialOrder::DegRevLex).unwrap()
    }

    fn scheme(r: &Ring<PrimeField>, gens: &[&str]) -> ProjScheme<PrimeField> {
        ProjScheme::from_generators(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn complete_dimensions() {
        assert_eq!(LinSys::complete(&ring(5), 2).dim(), 15);
        assert_eq!(LinSys::complete(&ring(2), 1).dim(), 2);
        assert_eq!(LinSys::complete(&ring(7), 2).dim(), 28);
    }

    #[test]
    fn through_a_point() {
        let r = ring(5);
        let l = LinSys::complete(&r, 2);
        let p = scheme(&r, &["x", "y", "z", "w"]);
        assert_eq!(l.through_scheme(&p).unwrap().dim(), 14);
        assert_eq!(l.through_scheme(&ProjScheme::ambient(&r)).unwrap().dim(), 0);
        let pt = RationalPoint::parse(r.field(), &["0", "0", "0", "0", "1"]).unwrap();
        let via_pt = l.through_points(&[pt]).unwrap();
        assert_eq!(via_pt.dim(), 14);
        assert!(via_pt.is_subsystem_of(&l.through_scheme(&p).unwrap()));
        assert_eq!(l.through_points(&[]).unwrap().dim(), 15);
    }

    #[test]
    fn trace_on_a_quadric() {
        let r = ring(5);
        let x = scheme(&r, &["x^2 + y^2 + z^2 + w^2 + t^2", "x^4 + y*z^3"]);
        let l = LinSys::complete(&r, 2);
        assert_eq!(l.trace_dimension(&x).unwrap(), 14);
        let zero = LinSys::spanned_by(&r, 2, &[]);
        assert_eq!(zero.trace_dimension(&x).unwrap(), 0);
        let q = parse_poly("x^2 + y^2 + z^2 + w^2 + t^2", &r).unwrap();
        assert!(l.through_scheme(&x).unwrap().contains(&q));
    }

    #[test]
    fn ambient_is_checked() {
        let l = LinSys::complete(&ring(3), 2);
        let other = ring(4);
        assert_eq!(
            l.through_scheme(&ProjScheme::ambient(&other)).unwrap_err(),
            LinSysError::AmbientMismatch
        );
    }
}
