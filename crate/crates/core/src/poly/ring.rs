use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::Field;

use super::{Monomial, MonomialOrder, PolyError, MAX_VARS};

/// A polynomial ring `F[x_0, …, x_{n-1}]` with a fixed term order.
#[derive(Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str], order: MonomialOrder) -> Result<Ring<F>, PolyError> {
        Self::from_names(field, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn from_names(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<Ring<F>, PolyError> {
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
            if field.generator(v).is_some() {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(PolyError::BadOrder(order));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same field and variables, different term order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring<F> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order,
        })
    }

    /// Same field, new variable list.
    pub fn with_vars(&self, vars: Vec<String>, order: MonomialOrder) -> Result<Ring<F>, PolyError> {
        Self::from_names(self.field.clone(), vars, order)
    }

    pub fn same_ring(&self, other: &PolyRing<F>) -> bool {
        std::ptr::eq(self, other)
            || (self.vars == other.vars
                && self.order == other.order
                && self.field.same_field(&other.field))
    }

    #[inline]
    pub fn key(&self, m: &Monomial) -> u128 {
        self.order.key(m)
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        let parts: Vec<String> = (0..self.nvars())
            .filter(|&i| m.exp(i) > 0)
            .map(|i| {
                if m.exp(i) == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{}", self.vars[i], m.exp(i))
                }
            })
            .collect();
        parts.join("*")
    }
}

pub trait RingExt<F: Field> {
    fn zero(&self) -> Poly<F>;
    fn one(&self) -> Poly<F>;
    fn var(&self, i: usize) -> Poly<F>;
    fn constant(&self, c: F::Elem) -> Poly<F>;
    fn monomial(&self, m: Monomial, c: F::Elem) -> Poly<F>;
    fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Poly<F>;
    fn from_i64(&self, n: i64) -> Poly<F>;
}

impl<F: Field> RingExt<F> for Ring<F> {
    fn zero(&self) -> Poly<F> {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    fn var(&self, i: usize) -> Poly<F> {
        assert!(i < self.nvars(), "variable index out of range");
        self.monomial(Monomial::var(i), self.field.one())
    }

    fn constant(&self, c: F::Elem) -> Poly<F> {
        self.monomial(Monomial::one(), c)
    }

    fn monomial(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        let terms = if self.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: self.clone(),
            terms,
        }
    }

    /// Sums duplicate monomials, drops zeros and sorts.
    fn from_terms(&self, terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        let field = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> =
            acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_unstable_by_key(|(m, _)| std::cmp::Reverse(self.key(m)));
        Poly {
            ring: self.clone(),
            terms,
        }
    }

    fn from_i64(&self, n: i64) -> Poly<F> {
        self.constant(self.field.from_i64(n))
    }
}

/// Sparse polynomial; terms are sorted by decreasing monomial order and
/// carry nonzero coefficients.
#[derive(Clone)]
pub struct Poly<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Poly<F> {
    /// Builds from terms already sorted in decreasing order with nonzero
    /// coefficients.
    pub(crate) fn from_sorted(ring: Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.key(&w[0].0) > ring.key(&w[1].0)));
        Poly { ring, terms }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Result<u32, PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Ok(d)
        } else {
            Err(PolyError::NotHomogeneous)
        }
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)
    }

    /// True if only variables with `used[i] == true` appear.
    pub fn uses_only(&self, used: &[bool]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| (0..self.ring.nvars()).all(|i| used[i] || m.exp(i) == 0))
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.ring.same_ring(&other.ring),
            "polynomials belong to different rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other);
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other);
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.key(ma).cmp(&ring.key(mb)) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, if negate { field.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { field.sub(ca, cb) } else { field.add(ca, cb) };
                    if !field.is_zero(&c) {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (*m, if negate { field.neg(c) } else { c.clone() })),
        );
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`; order is preserved because term orders are
    /// multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let field = self.field();
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(e) => field.add_mul_assign(e, ca, cb),
                    None => {
                        acc.insert(m, field.mul(ca, cb));
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let ring = &self.ring;
        terms.sort_unstable_by_key(|(m, _)| std::cmp::Reverse(ring.key(m)));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                (
                    m.with_exp(i, e - 1).unwrap(),
                    field.mul(c, &field.from_i64(e as i64)),
                )
            })
            .filter(|(_, c)| !field.is_zero(c))
            .collect();
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Evaluates at a point given by one field element per variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem, PolyError> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                got: point.len(),
            });
        }
        let field = self.field();
        let mut powers: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
        for i in 0..n {
            let d = self.degree_in(i) as usize;
            let mut p = Vec::with_capacity(d + 1);
            p.push(field.one());
            for k in 1..=d {
                p.push(field.mul(&p[k - 1], &point[i]));
            }
            powers.push(p);
        }
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = field.mul(&t, &pw[e]);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in
    /// `target`), coefficients unchanged.
    pub fn substitute(&self, target: &Ring<F>, images: &[Poly<F>]) -> Result<Poly<F>, PolyError> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(PolyError::DimensionMismatch {
                expected: n,
                got: images.len(),
            });
        }
        let mut powers: Vec<Vec<Poly<F>>> = Vec::with_capacity(n);
        for (i, img) in images.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut p = Vec::with_capacity(d + 1);
            p.push(target.one());
            for k in 1..=d {
                p.push(p[k - 1].mul(img));
            }
            powers.push(p);
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            terms.extend(t.terms);
        }
        Ok(target.from_terms(terms))
    }

    /// Renames variables: variable `i` becomes variable `map[i]` of
    /// `target`. Coefficients are shared.
    pub fn rename(&self, target: &Ring<F>, map: &[usize]) -> Poly<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permuted(map), c.clone()))
            .collect();
        target.from_terms(terms)
    }

    /// Same polynomial viewed in a ring with identical variables but a
    /// different term order.
    pub fn reorder(&self, target: &Ring<F>) -> Poly<F> {
        let mut terms = self.terms.clone();
        terms.sort_unstable_by_key(|(m, _)| std::cmp::Reverse(target.key(m)));
        Poly {
            ring: target.clone(),
            terms,
        }
    }

    /// Applies a coefficient map into a ring over another field with the
    /// same number of variables.
    pub fn map_coeffs<G, E>(
        &self,
        target: &Ring<G>,
        mut f: impl FnMut(&F::Elem) -> Result<G::Elem, E>,
    ) -> Result<Poly<G>, E>
    where
        G: Field,
    {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Ok(target.from_terms(terms))
    }

    /// Homogenizes with respect to variable `h` (which must not occur).
    pub fn homogenize(&self, h: usize) -> Poly<F> {
        let d = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(h, d - m.degree()).unwrap(), c.clone()))
            .collect();
        self.ring.from_terms(terms)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono = self.ring.monomial_to_string(m);
            let cs = field.format_elem(c);
            let (neg, body) = if field.is_atomic(c) {
                match cs.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, cs),
                }
            } else {
                (false, format!("({})", cs))
            };
            let term = if mono.is_empty() {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{}*{}", body, mono)
            };
            match (k, neg) {
                (0, true) => write!(f, "-{}", term)?,
                (0, false) => write!(f, "{}", term)?,
                (_, true) => write!(f, " - {}", term)?,
                (_, false) => write!(f, " + {}", term)?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        Poly::add(self, rhs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        Poly::sub(self, rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        Poly::mul(self, rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}
