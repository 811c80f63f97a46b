use super::Field;

/// Dense univariate polynomial, coefficients stored lowest degree first.
///
/// The representation is normalized: the leading coefficient is nonzero, and
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(field: &F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, field: &F, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Self::new(field, coeffs)
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.sub(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        Self::new(field, coeffs)
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                field.add_mul_assign(&mut out[i + j], a, b);
            }
        }
        Self::new(field, out)
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        Self::new(field, self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn monic(&self, field: &F) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => {
                let inv = field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(field, &inv)
            }
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, field: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = field.inv(divisor.lc().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = field.mul(&rem[k + dd], &lc_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = field.mul(&c, d);
                rem[k + i] = field.sub(&rem[k + i], &t);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(field, quot), Self::new(field, rem))
    }

    pub fn rem(&self, field: &F, divisor: &Self) -> Self {
        self.div_rem(field, divisor).1
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(field: &F, a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` the monic gcd.
    pub fn ext_gcd(field: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::constant(field, field.one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(field, field.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(field, &r1);
            let s2 = s0.sub(field, &q.mul(field, &s1));
            let t2 = t0.sub(field, &q.mul(field, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = field.inv(lc).unwrap();
                (
                    r0.scale(field, &inv),
                    s0.scale(field, &inv),
                    t0.scale(field, &inv),
                )
            }
        }
    }

    pub fn derivative(&self, field: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
            .collect();
        Self::new(field, coeffs)
    }

    /// `self / gcd(self, self')`, made monic. Valid in characteristic zero or
    /// when the characteristic exceeds the degree.
    pub fn squarefree_part(&self, field: &F) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic(field);
        }
        let g = Self::gcd(field, self, &self.derivative(field));
        self.div_rem(field, &g).0.monic(field)
    }

    pub fn is_squarefree(&self, field: &F) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => Self::gcd(field, self, &self.derivative(field))
                .degree()
                .unwrap_or(0)
                == 0,
        }
    }

    pub fn eval(&self, field: &F, x: &F::Elem) -> F::Elem {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.mul(&acc, x);
            acc = field.add(&acc, c);
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, field: &F, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(field, modulus);
        let mut acc = Self::constant(field, field.one()).rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(field, &base).rem(field, modulus);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    fn p(field: &PrimeField, c: &[i64]) -> UniPoly<PrimeField> {
        UniPoly::new(field, c.iter().map(|&x| field.from_i64(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree_mod_p() {
        let f = PrimeField::new(101).unwrap();
        // (x-1)^2 (x+2)
        let a = p(&f, &[-1, 1]).mul(&f, &p(&f, &[-1, 1])).mul(&f, &p(&f, &[2, 1]));
        let sf = a.squarefree_part(&f);
        assert_eq!(sf, p(&f, &[-1, 1]).mul(&f, &p(&f, &[2, 1])));
        assert!(!a.is_squarefree(&f));
        assert!(sf.is_squarefree(&f));
    }

    #[test]
    fn ext_gcd_identity() {
        let f = PrimeField::new(97).unwrap();
        let a = p(&f, &[3, 0, 1, 5]);
        let b = p(&f, &[1, 7, 2]);
        let (g, s, t) = UniPoly::ext_gcd(&f, &a, &b);
        let lhs = s.mul(&f, &a).add(&f, &t.mul(&f, &b));
        assert_eq!(lhs, g);
        assert_eq!(g, UniPoly::gcd(&f, &a, &b));
    }
}
