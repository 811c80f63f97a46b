//! Projective schemes cut out by homogeneous ideals.

use std::collections::HashSet;

use thiserror::Error;

use crate::arith::Field;
use crate::groebner::{self, GroebnerError, Ideal};
use crate::linalg;
use crate::poly::{jacobian, minors, parse_element, ParseError, Poly, PolyError, Ring, RingExt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("generator is not homogeneous")]
    NotHomogeneous,
    #[error("schemes live in different ambient spaces")]
    AmbientMismatch,
    #[error("expected {expected} generators for a complete intersection, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("candidate {0} does not lie on the scheme")]
    NotOnScheme(usize),
    #[error("expected a zero-dimensional scheme, got dimension {0}")]
    NotZeroDimensional(i64),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A point of projective space, scaled so that its last nonzero coordinate
/// is one.
#[derive(Clone, Debug)]
pub struct RationalPoint<F: Field> {
    coords: Vec<F::Elem>,
}

impl<F: Field> PartialEq for RationalPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> Eq for RationalPoint<F> {}

impl<F: Field> std::hash::Hash for RationalPoint<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl<F: Field> RationalPoint<F> {
    pub fn new(field: &F, coords: Vec<F::Elem>) -> Result<Self, SchemeError> {
        let last = coords
            .iter()
            .rposition(|c| !field.is_zero(c))
            .ok_or(SchemeError::ZeroPoint)?;
        let inv = field.inv(&coords[last]).unwrap();
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(RationalPoint { coords })
    }

    /// Coordinates written in the polynomial expression grammar.
    pub fn parse(field: &F, coords: &[&str]) -> Result<Self, SchemeError> {
        let cs = coords
            .iter()
            .map(|c| parse_element(c.trim(), field))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, cs)
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn format(&self, field: &F) -> String {
        let cs: Vec<String> = self.coords.iter().map(|c| field.format_elem(c)).collect();
        format!("({})", cs.join(" : "))
    }
}

/// Outcome of [`certify_zero_dim_points`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCertificate {
    pub verified: usize,
    pub reduced_degree: u64,
    pub complete: bool,
}

/// `V(I) ⊂ P^n` for a homogeneous ideal `I` in `n + 1` variables.
#[derive(Clone, Debug)]
pub struct ProjScheme<F: Field> {
    ideal: Ideal<F>,
}

impl<F: Field> ProjScheme<F> {
    pub fn new(ideal: Ideal<F>) -> Result<Self, SchemeError> {
        if !ideal.is_homogeneous() {
            return Err(SchemeError::NotHomogeneous);
        }
        Ok(ProjScheme { ideal })
    }

    pub fn from_generators(ring: &Ring<F>, gens: Vec<Poly<F>>) -> Result<Self, SchemeError> {
        Self::new(Ideal::new(ring, gens)?)
    }

    /// All of projective space.
    pub fn ambient(ring: &Ring<F>) -> Self {
        ProjScheme {
            ideal: Ideal::zero(ring),
        }
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring<F> {
        self.ideal.ring()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ring().nvars() - 1
    }

    pub fn generators(&self) -> &[Poly<F>] {
        self.ideal.generators()
    }

    pub fn dim_degree(&self) -> Result<(i64, u64), SchemeError> {
        Ok(self.ideal.dim_degree()?)
    }

    pub fn dimension(&self) -> Result<i64, SchemeError> {
        Ok(self.dim_degree()?.0)
    }

    pub fn degree(&self) -> Result<u64, SchemeError> {
        Ok(self.dim_degree()?.1)
    }

    pub fn is_empty(&self) -> Result<bool, SchemeError> {
        Ok(self.dimension()? == -1)
    }

    fn check_ambient(&self, other: &Self) -> Result<(), SchemeError> {
        if self.ring().same_ring(other.ring()) {
            Ok(())
        } else {
            Err(SchemeError::AmbientMismatch)
        }
    }

    /// `V(I ∩ J)`.
    pub fn union(&self, other: &Self) -> Result<Self, SchemeError> {
        self.check_ambient(other)?;
        Self::new(groebner::intersect(&self.ideal, &other.ideal)?)
    }

    /// `V(I + J)`.
    pub fn intersect(&self, other: &Self) -> Result<Self, SchemeError> {
        self.check_ambient(other)?;
        Self::new(self.ideal.sum(&other.ideal)?)
    }

    /// `V(I + <f>)`.
    pub fn cut(&self, f: &Poly<F>) -> Result<Self, SchemeError> {
        Self::new(self.ideal.with_generators(std::slice::from_ref(f))?)
    }

    pub fn contains_point(&self, p: &RationalPoint<F>) -> Result<bool, SchemeError> {
        let n = self.ring().nvars();
        if p.len() != n {
            return Err(SchemeError::PointLength {
                expected: n,
                got: p.len(),
            });
        }
        let field = self.ring().field();
        for g in self.generators() {
            if !field.is_zero(&g.evaluate(p.coords())?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The candidates lying on the scheme, in input order.
    pub fn points_among(&self, candidates: &[RationalPoint<F>]) -> Result<Vec<RationalPoint<F>>, SchemeError> {
        let mut out = Vec::new();
        for p in candidates {
            if self.contains_point(p)? {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    /// Same support, radical ideal (dimension at most 1).
    pub fn reduced(&self) -> Result<Self, SchemeError> {
        Self::new(groebner::radical(&self.ideal)?)
    }

    /// Jacobian criterion for a complete intersection of `codim` generators.
    pub fn singular_subscheme(&self, codim: usize) -> Result<Self, SchemeError> {
        let gens = self.generators();
        if gens.len() != codim {
            return Err(SchemeError::GeneratorCount {
                expected: codim,
                got: gens.len(),
            });
        }
        let jac = jacobian(gens)?;
        let mut all = gens.to_vec();
        all.extend(minors(&jac, codim)?);
        Self::from_generators(self.ring(), all)
    }

    /// Equality of the saturations by the irrelevant ideal, tested chart by
    /// chart: `sat(I) = sat(J)` iff `I : x_i^∞ = J : x_i^∞` for every `i`.
    pub fn scheme_equal(&self, other: &Self) -> Result<bool, SchemeError> {
        self.check_ambient(other)?;
        if self.ideal.equals(&other.ideal)? {
            return Ok(true);
        }
        let ring = self.ring();
        for i in 0..ring.nvars() {
            let x = ring.var(i);
            let a = groebner::saturate_by(&self.ideal, &x)?;
            let b = groebner::saturate_by(&other.ideal, &x)?;
            if !a.equals(&b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the Jacobian of the generators has rank equal to the
    /// codimension at every given point. The generators must generate a
    /// radical ideal.
    pub fn smooth_at_points(&self, pts: &[RationalPoint<F>]) -> Result<bool, SchemeError> {
        let codim = self.ambient_dim() as i64 - self.dimension()?;
        let jac = jacobian(self.generators())?;
        let field = self.ring().field();
        for (k, p) in pts.iter().enumerate() {
            if !self.contains_point(p)? {
                return Err(SchemeError::NotOnScheme(k));
            }
            let rows = jac
                .iter()
                .map(|row| row.iter().map(|d| d.evaluate(p.coords())).collect())
                .collect::<Result<Vec<Vec<F::Elem>>, _>>()?;
            if (linalg::rank(field, &rows) as i64) < codim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `p` is an ordinary double point of a complete intersection:
    /// the Jacobian drops rank by exactly one and the Hessian of the
    /// vanishing combination is nondegenerate on the tangent space.
    pub fn is_node(&self, p: &RationalPoint<F>) -> Result<bool, SchemeError> {
        if !self.contains_point(p)? {
            return Err(SchemeError::NotOnScheme(0));
        }
        let ring = self.ring();
        let field = ring.field();
        let gens = self.generators();
        let c = gens.len();
        let n = ring.nvars();
        // affine chart at the last nonzero coordinate, which is 1
        let j = p.coords().iter().rposition(|x| !field.is_zero(x)).unwrap();
        let vars: Vec<usize> = (0..n).filter(|&i| i != j).collect();
        let jac: Vec<Vec<F::Elem>> = gens
            .iter()
            .map(|g| vars.iter().map(|&i| g.derivative(i).evaluate(p.coords())).collect())
            .collect::<Result<_, _>>()?;
        if linalg::rank(field, &jac) + 1 != c {
            return Ok(false);
        }
        // mu with sum mu_k grad f_k = 0
        let transposed: Vec<Vec<F::Elem>> = (0..vars.len())
            .map(|i| (0..c).map(|k| jac[k][i].clone()).collect())
            .collect();
        let mu = linalg::kernel(field, &transposed, c).remove(0);
        let mut g = ring.zero();
        for (k, f) in gens.iter().enumerate() {
            g = g.add(&f.scale(&mu[k]));
        }
        let tangent = linalg::kernel(field, &jac, vars.len());
        let hess: Vec<Vec<F::Elem>> = vars
            .iter()
            .map(|&a| {
                let ga = g.derivative(a);
                vars.iter().map(|&b| ga.derivative(b).evaluate(p.coords())).collect()
            })
            .collect::<Result<_, _>>()?;
        let m = tangent.len();
        let restricted: Vec<Vec<F::Elem>> = (0..m)
            .map(|s| {
                (0..m)
                    .map(|t| {
                        let mut acc = field.zero();
                        for a in 0..vars.len() {
                            for b in 0..vars.len() {
                                let h = field.mul(&hess[a][b], &tangent[t][b]);
                                field.add_mul_assign(&mut acc, &tangent[s][a], &h);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(linalg::rank(field, &restricted) == m)
    }
}

/// Checks every candidate lies on `x`, counts the distinct ones, and compares
/// the count with the degree of the reduced scheme. When the count already
/// equals the degree of `x` itself the reduced degree is pinned between the
/// two and no radical is computed.
pub fn certify_zero_dim_points<F: Field>(
    x: &ProjScheme<F>,
    candidates: &[RationalPoint<F>],
) -> Result<PointCertificate, SchemeError> {
    let (dim, degree) = x.dim_degree()?;
    if dim > 0 {
        return Err(SchemeError::NotZeroDimensional(dim));
    }
    for (k, p) in candidates.iter().enumerate() {
        if !x.contains_point(p)? {
            return Err(SchemeError::NotOnScheme(k));
        }
    }
    let distinct: HashSet<&RationalPoint<F>> = candidates.iter().collect();
    let verified = distinct.len();
    let reduced_degree = if verified as u64 == degree {
        degree
    } else {
        x.reduced()?.degree()?
    };
    Ok(PointCertificate {
        verified,
        reduced_degree,
        complete: verified as u64 == reduced_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{FieldTower, PrimeField};
    use crate::poly::{parse_poly, parse_tower, MonomialOrder, PolyRing};

    fn ring(vars: &[&str]) -> Ring<PrimeField> {
        PolyRing::new(PrimeField::new(32003).unwrap(), vars, MonomialOrder::DegRevLex).unwrap()
    }

    fn scheme(r: &Ring<PrimeField>, gens: &[&str]) -> ProjScheme<PrimeField> {
        ProjScheme::from_generators(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect())
            .unwrap()
    }

    fn point(r: &Ring<PrimeField>, c: &[&str]) -> RationalPoint<PrimeField> {
        RationalPoint::parse(r.field(), c).unwrap()
    }

    #[test]
    fn smooth_conic_has_empty_singular_locus() {
        let r = ring(&["x", "y", "z"]);
        let c = scheme(&r, &["x^2 + y^2 - z^2"]);
        assert!(c.singular_subscheme(1).unwrap().is_empty().unwrap());
        let p = point(&r, &["3", "4", "5"]);
        assert!(c.smooth_at_points(&[p]).unwrap());
    }

    #[test]
    fn line_pair_is_singular_at_the_vertex() {
        let r = ring(&["x", "y", "z"]);
        let c = scheme(&r, &["x*y"]);
        let p = point(&r, &["0", "0", "1"]);
        assert!(!c.smooth_at_points(&[p.clone()]).unwrap());
        assert!(c.is_node(&p).unwrap());
        let cusp = scheme(&r, &["y^2*z - x^3"]);
        assert!(!cusp.is_node(&p).unwrap());
    }

    #[test]
    fn generator_count_is_checked() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            scheme(&r, &["x*y"]).singular_subscheme(2).unwrap_err(),
            SchemeError::GeneratorCount { expected: 2, got: 1 }
        );
    }

    #[test]
    fn points_are_normalized() {
        let r = ring(&["x", "y"]);
        assert_eq!(point(&r, &["2", "4"]), point(&r, &["1", "2"]));
        assert_eq!(point(&r, &["3", "0"]), point(&r, &["1", "0"]));
        assert_eq!(
            RationalPoint::parse(r.field(), &["0", "0"]).unwrap_err(),
            SchemeError::ZeroPoint
        );
    }

    #[test]
    fn union_and_intersection_of_points() {
        let r = ring(&["x", "y"]);
        let a = scheme(&r, &["x"]);
        let b = scheme(&r, &["y"]);
        assert_eq!(a.union(&b).unwrap().dim_degree().unwrap(), (0, 2));
        assert!(a.intersect(&b).unwrap().is_empty().unwrap());
        let amb = ProjScheme::ambient(&r);
        assert!(a.intersect(&amb).unwrap().scheme_equal(&a).unwrap());
        assert!(amb.contains_point(&point(&r, &["5", "7"])).unwrap());
        let other = ring(&["u", "v"]);
        assert_eq!(
            a.union(&scheme(&other, &["u"])).unwrap_err(),
            SchemeError::AmbientMismatch
        );
    }

    #[test]
    fn saturation_equality() {
        let r = ring(&["x", "y", "z"]);
        let a = scheme(&r, &["x"]);
        // same line with an embedded irrelevant component
        let b = scheme(&r, &["x^2", "x*y", "x*z"]);
        let c = scheme(&r, &["x", "y^3", "y^2*z", "z^4"]);
        assert!(a.scheme_equal(&b).unwrap());
        assert!(!a.scheme_equal(&c).unwrap());
        assert!(!a.scheme_equal(&scheme(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn certificates() {
        let r = ring(&["x", "y", "z"]);
        let pts = [point(&r, &["1", "0", "1"]), point(&r, &["0", "1", "1"])];
        let two = scheme(&r, &["x*y", "x + y - z"]);
        let cert = certify_zero_dim_points(&two, &pts).unwrap();
        assert!(cert.complete);
        let cert = certify_zero_dim_points(&two, &pts[..1]).unwrap();
        assert_eq!((cert.verified, cert.reduced_degree, cert.complete), (1, 2, false));
        // doubled point: degree 2, reduced degree 1
        let fat = scheme(&r, &["x^2", "y"]);
        let cert = certify_zero_dim_points(&fat, &[point(&r, &["0", "0", "1"])]).unwrap();
        assert!(cert.complete);
        let empty = scheme(&r, &["x", "y", "z"]);
        assert!(certify_zero_dim_points(&empty, &[]).unwrap().complete);
        assert_eq!(
            certify_zero_dim_points(&two, &[point(&r, &["1", "1", "1"])]).unwrap_err(),
            SchemeError::NotOnScheme(0)
        );
    }

    #[test]
    fn tower_points_parse() {
        let tower = parse_tower(&[("r", "r^2 + 15")]).unwrap();
        let p = RationalPoint::parse(&tower, &["4", "-r+1", "r-5", "-r+1", "4"]).unwrap();
        assert_eq!(tower.format_elem(&p.coords()[1]), "-1/4*r + 1/4");
        let q = RationalPoint::<FieldTower>::parse(&tower, &["q"]);
        assert!(matches!(q, Err(SchemeError::Parse(_))));
    }
}
