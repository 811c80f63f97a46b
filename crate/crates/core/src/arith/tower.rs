use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rational_to_string, ArithError, Field, Rational, UniPoly};

/// One simple extension `K(g) = K[g] / (minpoly(g))` of the tower below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStep {
    pub name: String,
    /// Monic minimal polynomial, lowest coefficient first, coefficients in
    /// the tower below this step.
    pub minpoly: Vec<TowerElement>,
}

impl TowerStep {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }
}

#[derive(Debug)]
struct TowerData {
    steps: Vec<TowerStep>,
    degree: usize,
    /// The tower without its top step; `None` for the rationals.
    lower: Option<FieldTower>,
}

/// A tower `Q ⊂ Q(g1) ⊂ Q(g1, g2) ⊂ …` of simple algebraic extensions.
///
/// Elements are dense coefficient vectors over the basis
/// `g1^e1 · g2^e2 · …` with `e_i` below the degree of step `i`; the first
/// generator varies fastest.
#[derive(Clone)]
pub struct FieldTower(Arc<TowerData>);

/// An element of a [`FieldTower`], always in reduced normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    coeffs: Vec<Rational>,
}

impl TowerElement {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when only the constant coordinate may be nonzero.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldTower(")?;
        for (i, s) in self.0.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: degree {}", s.name, s.degree())?;
        }
        write!(f, ")")
    }
}

impl PartialEq for FieldTower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.steps == other.0.steps
    }
}

impl Eq for FieldTower {}

impl FieldTower {
    /// The empty tower.
    pub fn rationals() -> Self {
        FieldTower(Arc::new(TowerData {
            steps: Vec::new(),
            degree: 1,
            lower: None,
        }))
    }

    /// Adjoins a root of `minpoly` (coefficients in `self`, lowest first).
    pub fn extend(&self, name: &str, minpoly: Vec<TowerElement>) -> Result<Self, ArithError> {
        if self.0.steps.iter().any(|s| s.name == name) {
            return Err(ArithError::DuplicateGenerator(name.to_string()));
        }
        if minpoly.iter().any(|c| c.coeffs.len() != self.0.degree) {
            return Err(ArithError::MixedTowers);
        }
        let mut minpoly = minpoly;
        while minpoly.last().is_some_and(|c| c.is_zero()) {
            minpoly.pop();
        }
        let deg = minpoly.len().saturating_sub(1);
        if deg < 2 {
            return Err(ArithError::DegreeTooSmall(name.to_string(), deg));
        }
        if minpoly[deg] != self.one() {
            return Err(ArithError::NotMonic(name.to_string()));
        }
        let mut steps = self.0.steps.clone();
        steps.push(TowerStep {
            name: name.to_string(),
            minpoly,
        });
        Ok(FieldTower(Arc::new(TowerData {
            steps,
            degree: self.0.degree * deg,
            lower: Some(self.clone()),
        })))
    }

    /// Extension steps, bottom first.
    pub fn steps(&self) -> &[TowerStep] {
        &self.0.steps
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn lower(&self) -> Option<&FieldTower> {
        self.0.lower.as_ref()
    }

    /// The subtower made of the first `k` steps.
    pub fn truncated(&self, k: usize) -> FieldTower {
        let mut t = self.clone();
        while t.0.steps.len() > k {
            t = t.0.lower.clone().expect("nonempty tower has a lower level");
        }
        t
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<TowerElement, ArithError> {
        if coeffs.len() != self.0.degree {
            return Err(ArithError::MixedTowers);
        }
        Ok(TowerElement { coeffs })
    }

    pub fn rational(&self, q: Rational) -> TowerElement {
        let mut coeffs = vec![Rational::zero(); self.0.degree];
        coeffs[0] = q;
        TowerElement { coeffs }
    }

    /// Embeds an element of a subtower (a prefix of this tower's steps).
    pub fn embed(&self, sub: &FieldTower, a: &TowerElement) -> Result<TowerElement, ArithError> {
        let k = sub.steps().len();
        if k > self.steps().len() || self.0.steps[..k] != sub.0.steps[..] {
            return Err(ArithError::MixedTowers);
        }
        let mut coeffs = vec![Rational::zero(); self.0.degree];
        coeffs[..a.coeffs.len()].clone_from_slice(&a.coeffs);
        Ok(TowerElement { coeffs })
    }

    pub fn checked_add(&self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement, ArithError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_sub(&self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement, ArithError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn checked_mul(&self, a: &TowerElement, b: &TowerElement) -> Result<TowerElement, ArithError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn invert(&self, a: &TowerElement) -> Result<TowerElement, ArithError> {
        self.check(a)?;
        self.inv(a).ok_or(ArithError::DivisionByZero)
    }

    fn check(&self, a: &TowerElement) -> Result<(), ArithError> {
        if a.coeffs.len() == self.0.degree {
            Ok(())
        } else {
            Err(ArithError::MixedTowers)
        }
    }

    fn mul_slices(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let lower = match &self.0.lower {
            None => return vec![&a[0] * &b[0]],
            Some(l) => l,
        };
        let s = lower.0.degree;
        let step = self.0.steps.last().unwrap();
        let d = step.degree();
        let a_blocks: Vec<&[Rational]> = a.chunks(s).collect();
        let b_blocks: Vec<&[Rational]> = b.chunks(s).collect();
        let nonzero = |blk: &[Rational]| blk.iter().any(|c| !c.is_zero());
        let a_nz: Vec<bool> = a_blocks.iter().map(|x| nonzero(x)).collect();
        let b_nz: Vec<bool> = b_blocks.iter().map(|x| nonzero(x)).collect();
        let mut prod: Vec<Vec<Rational>> = vec![vec![Rational::zero(); s]; 2 * d - 1];
        for i in 0..d {
            if !a_nz[i] {
                continue;
            }
            for j in 0..d {
                if !b_nz[j] {
                    continue;
                }
                let t = lower.mul_slices(a_blocks[i], b_blocks[j]);
                for (acc, v) in prod[i + j].iter_mut().zip(t) {
                    *acc += v;
                }
            }
        }
        for k in (d..2 * d - 1).rev() {
            let top = std::mem::replace(&mut prod[k], vec![Rational::zero(); s]);
            if !nonzero(&top) {
                continue;
            }
            for (i, m) in step.minpoly[..d].iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let t = lower.mul_slices(&top, &m.coeffs);
                for (acc, v) in prod[k - d + i].iter_mut().zip(t) {
                    *acc -= v;
                }
            }
        }
        prod.truncate(d);
        prod.into_iter().flatten().collect()
    }

    fn inv_slices(&self, a: &[Rational]) -> Option<Vec<Rational>> {
        let lower = match &self.0.lower {
            None => {
                return if a[0].is_zero() {
                    None
                } else {
                    Some(vec![a[0].recip()])
                }
            }
            Some(l) => l,
        };
        if a.iter().all(Zero::is_zero) {
            return None;
        }
        let s = lower.0.degree;
        if a[s..].iter().all(Zero::is_zero) {
            let mut inv = lower.inv_slices(&a[..s])?;
            inv.resize(self.0.degree, Rational::zero());
            return Some(inv);
        }
        let step = self.0.steps.last().unwrap();
        let blocks: Vec<TowerElement> = a
            .chunks(s)
            .map(|c| TowerElement { coeffs: c.to_vec() })
            .collect();
        let pa = UniPoly::new(lower, blocks);
        let pm = UniPoly::new(lower, step.minpoly.clone());
        let (g, s_coef, _) = UniPoly::ext_gcd(lower, &pa, &pm);
        // an irreducible minimal polynomial leaves a unit gcd
        if g.degree() != Some(0) {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.degree);
        for i in 0..step.degree() {
            out.extend(s_coef.coeff(lower, i).coeffs);
        }
        Some(out)
    }

    fn generator_index(&self, name: &str) -> Option<usize> {
        let mut stride = 1;
        for step in &self.0.steps {
            if step.name == name {
                return Some(stride);
            }
            stride *= step.degree();
        }
        None
    }

    /// Exponent vector of each basis index.
    fn basis_exponents(&self, idx: usize) -> Vec<usize> {
        let mut rem = idx;
        self.0
            .steps
            .iter()
            .map(|s| {
                let e = rem % s.degree();
                rem /= s.degree();
                e
            })
            .collect()
    }
}

impl Field for FieldTower {
    type Elem = TowerElement;

    fn zero(&self) -> TowerElement {
        TowerElement {
            coeffs: vec![Rational::zero(); self.0.degree],
        }
    }

    fn one(&self) -> TowerElement {
        self.rational(Rational::one())
    }

    fn is_zero(&self, a: &TowerElement) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &TowerElement) -> bool {
        a.coeffs[0].is_one() && a.is_rational()
    }

    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        TowerElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        TowerElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }

    fn neg(&self, a: &TowerElement) -> TowerElement {
        TowerElement {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        if self.0.degree == 1 || b.is_rational() {
            let c = &b.coeffs[0];
            return TowerElement {
                coeffs: a.coeffs.iter().map(|x| x * c).collect(),
            };
        }
        if a.is_rational() {
            let c = &a.coeffs[0];
            return TowerElement {
                coeffs: b.coeffs.iter().map(|x| x * c).collect(),
            };
        }
        TowerElement {
            coeffs: self.mul_slices(&a.coeffs, &b.coeffs),
        }
    }

    fn inv(&self, a: &TowerElement) -> Option<TowerElement> {
        if a.is_rational() {
            if a.coeffs[0].is_zero() {
                return None;
            }
            return Some(self.rational(a.coeffs[0].recip()));
        }
        self.inv_slices(&a.coeffs).map(|coeffs| TowerElement { coeffs })
    }

    fn from_rational(&self, q: &Rational) -> Result<TowerElement, ArithError> {
        Ok(self.rational(q.clone()))
    }

    fn from_i64(&self, n: i64) -> TowerElement {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    fn generator(&self, name: &str) -> Option<TowerElement> {
        let idx = self.generator_index(name)?;
        let mut coeffs = vec![Rational::zero(); self.0.degree];
        coeffs[idx] = Rational::one();
        Some(TowerElement { coeffs })
    }

    fn generator_names(&self) -> Vec<String> {
        self.0.steps.iter().map(|s| s.name.clone()).collect()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn format_elem(&self, a: &TowerElement) -> String {
        let mut out = String::new();
        for (idx, c) in a.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exps = self.basis_exponents(idx);
            let gens: Vec<String> = self
                .0
                .steps
                .iter()
                .zip(&exps)
                .filter(|(_, &e)| e > 0)
                .map(|(s, &e)| if e == 1 { s.name.clone() } else { format!("{}^{}", s.name, e) })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if gens.is_empty() {
                rational_to_string(&mag)
            } else if mag.is_one() {
                gens.join("*")
            } else {
                format!("{}*{}", rational_to_string(&mag), gens.join("*"))
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }

    fn is_atomic(&self, a: &TowerElement) -> bool {
        a.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
    }

    fn same_field(&self, other: &Self) -> bool {
        self == other
    }

    fn add_mul_assign(&self, acc: &mut TowerElement, a: &TowerElement, b: &TowerElement) {
        if self.0.degree == 1 {
            acc.coeffs[0] += &a.coeffs[0] * &b.coeffs[0];
            return;
        }
        let prod = self.mul(a, b);
        for (x, y) in acc.coeffs.iter_mut().zip(prod.coeffs) {
            *x += y;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Q(r) with r^2 + 15 = 0.
    pub(crate) fn qr() -> FieldTower {
        let base = FieldTower::rationals();
        base.extend(
            "r",
            vec![base.from_i64(15), base.zero(), base.one()],
        )
        .unwrap()
    }

    #[test]
    fn rationals_have_degree_one() {
        let t = FieldTower::rationals();
        assert_eq!(t.degree(), 1);
        assert!(t.steps().is_empty());
    }

    #[test]
    fn r_squared_is_minus_fifteen() {
        let t = qr();
        assert_eq!(t.degree(), 2);
        let r = t.generator("r").unwrap();
        assert_eq!(t.mul(&r, &r), t.from_i64(-15));
    }

    #[test]
    fn conjugate_product() {
        let t = qr();
        let r = t.generator("r").unwrap();
        let two = t.from_i64(2);
        let a = t.add(&two, &r);
        let b = t.sub(&two, &r);
        assert_eq!(t.mul(&a, &b), t.from_i64(19));
    }

    #[test]
    fn inverses() {
        let t = qr();
        let r = t.generator("r").unwrap();
        assert_eq!(t.inv(&t.one()).unwrap(), t.one());
        let expect = t.element(vec![Rational::zero(), q(-1, 15)]).unwrap();
        assert_eq!(t.inv(&r).unwrap(), expect);
        let two = t.from_i64(2);
        let a = t.add(&two, &r);
        let inv = t.inv(&a).unwrap();
        assert_eq!(inv, t.element(vec![q(2, 19), q(-1, 19)]).unwrap());
        assert_eq!(t.mul(&a, &inv), t.one());
        assert!(t.inv(&t.zero()).is_none());
        assert_eq!(t.invert(&t.zero()), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn construction_errors() {
        let base = FieldTower::rationals();
        let two = base.from_i64(2);
        assert_eq!(
            base.extend("r", vec![base.one(), base.zero(), two]).unwrap_err(),
            ArithError::NotMonic("r".into())
        );
        assert_eq!(
            base.extend("r", vec![base.one(), base.one()]).unwrap_err(),
            ArithError::DegreeTooSmall("r".into(), 1)
        );
        let t = qr();
        assert_eq!(
            t.extend("r", vec![t.one(), t.zero(), t.one()]).unwrap_err(),
            ArithError::DuplicateGenerator("r".into())
        );
    }

    #[test]
    fn mixed_towers_rejected() {
        let t = qr();
        let base = FieldTower::rationals();
        assert_eq!(
            t.checked_add(&t.one(), &base.one()),
            Err(ArithError::MixedTowers)
        );
    }

    #[test]
    fn two_step_tower_inverse() {
        let t = qr();
        // m^2 - m + 4 over Q(r)
        let t2 = t
            .extend("m", vec![t.from_i64(4), t.from_i64(-1), t.one()])
            .unwrap();
        assert_eq!(t2.degree(), 4);
        let r = t2.generator("r").unwrap();
        let m = t2.generator("m").unwrap();
        let a = t2.add(&t2.mul(&r, &m), &t2.from_i64(3));
        let inv = t2.inv(&a).unwrap();
        assert_eq!(t2.mul(&a, &inv), t2.one());
        assert_eq!(t2.format_elem(&a), "r*m + 3");
    }
}
