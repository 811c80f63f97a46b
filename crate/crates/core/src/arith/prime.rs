use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ArithError, Field, FieldTower, Rational, TowerElement, UniPoly};

/// The field with `p` elements, `p` an odd prime below 2^63.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p < 3 || p >= 1 << 63 || !is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().unwrap()
    }

    /// All roots of `f` in the field, ascending.
    pub fn roots(&self, f: &UniPoly<PrimeField>) -> Vec<u64> {
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = f.monic(self);
        let x = UniPoly::monomial(self, 1, 1);
        // product of the distinct linear factors: gcd(f, x^p - x)
        let xp = x.pow_mod(self, self.p, &f);
        let split = UniPoly::gcd(self, &f, &xp.sub(self, &x));
        let mut roots = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(self.p);
        self.split_linear(&split, &mut rng, &mut roots);
        roots.sort_unstable();
        roots.dedup();
        roots
    }

    fn split_linear(&self, g: &UniPoly<PrimeField>, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => {
                let c = g.monic(self);
                out.push(self.neg(&c.coeffs()[0]));
            }
            Some(_) => loop {
                // Cantor-Zassenhaus equal-degree splitting
                let a = rng.gen_range(0..self.p);
                let shift = UniPoly::new(self, vec![a, 1]);
                let h = shift.pow_mod(self, (self.p - 1) / 2, g);
                let d = UniPoly::gcd(self, g, &h.sub(self, &UniPoly::constant(self, 1)));
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < g.degree().unwrap() {
                    let rest = g.div_rem(self, &d).0;
                    self.split_linear(&d, rng, out);
                    self.split_linear(&rest, rng, out);
                    return;
                }
            },
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u64)
    }

    fn from_rational(&self, q: &Rational) -> Result<u64, ArithError> {
        let den = self.reduce_int(q.denom());
        if den == 0 {
            return Err(ArithError::DenominatorDivisible {
                p: self.p,
                den: q.denom().clone(),
            });
        }
        let num = self.reduce_int(q.numer());
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }

    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }

    fn generator(&self, _name: &str) -> Option<u64> {
        None
    }

    fn generator_names(&self) -> Vec<String> {
        Vec::new()
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn is_atomic(&self, _a: &u64) -> bool {
        true
    }

    fn same_field(&self, other: &Self) -> bool {
        self.p == other.p
    }

    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = ((*acc as u128 + *a as u128 * *b as u128) % self.p as u128) as u64;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(mut n: u64) -> u64 {
    while !is_prime(n) {
        n += 1;
    }
    n
}

/// A ring homomorphism from a [`FieldTower`] onto `Z/p`, given by one root
/// of each minimal polynomial.
#[derive(Clone, Debug)]
pub struct PrimeReduction {
    tower: FieldTower,
    field: PrimeField,
    images: Vec<u64>,
    /// Image of each basis monomial of the tower.
    basis: Vec<u64>,
}

impl PrimeReduction {
    /// Validates `p` against the tower and picks, for each generator, the
    /// smallest nonnegative root of its reduced minimal polynomial.
    pub fn new(tower: &FieldTower, p: u64) -> Result<Self, ArithError> {
        Self::build(tower, p, None)
    }

    /// Like [`PrimeReduction::new`] but with caller-chosen generator images.
    pub fn with_images(tower: &FieldTower, p: u64, images: &[u64]) -> Result<Self, ArithError> {
        if images.len() != tower.steps().len() {
            return Err(ArithError::ImageCount {
                expected: tower.steps().len(),
                got: images.len(),
            });
        }
        Self::build(tower, p, Some(images))
    }

    fn build(tower: &FieldTower, p: u64, chosen: Option<&[u64]>) -> Result<Self, ArithError> {
        let field = PrimeField::new(p)?;
        for step in tower.steps() {
            for c in &step.minpoly {
                for q in c.coeffs() {
                    if field.reduce_int(q.denom()) == 0 {
                        return Err(ArithError::DenominatorDivisible {
                            p,
                            den: q.denom().clone(),
                        });
                    }
                }
            }
        }
        let mut red = PrimeReduction {
            tower: FieldTower::rationals(),
            field,
            images: Vec::new(),
            basis: vec![1],
        };
        for (k, step) in tower.steps().iter().enumerate() {
            let coeffs = step
                .minpoly
                .iter()
                .map(|c| red.apply(c))
                .collect::<Result<Vec<_>, _>>()?;
            let f = UniPoly::new(&field, coeffs);
            if !f.is_squarefree(&field) {
                return Err(ArithError::NotSquarefreeModP {
                    name: step.name.clone(),
                    p,
                });
            }
            let image = match chosen {
                Some(images) => {
                    let im = images[k] % p;
                    if !field.is_zero(&f.eval(&field, &im)) {
                        return Err(ArithError::BadImage {
                            name: step.name.clone(),
                            p,
                            image: images[k],
                        });
                    }
                    im
                }
                None => *field.roots(&f).first().ok_or_else(|| ArithError::NoRootModP {
                    name: step.name.clone(),
                    p,
                })?,
            };
            let d = step.degree();
            let mut basis = Vec::with_capacity(red.basis.len() * d);
            let mut power = 1u64;
            for _ in 0..d {
                basis.extend(red.basis.iter().map(|b| field.mul(b, &power)));
                power = field.mul(&power, &image);
            }
            red.images.push(image);
            red.basis = basis;
            red.tower = tower.truncated(k + 1);
        }
        Ok(red)
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn apply(&self, a: &TowerElement) -> Result<u64, ArithError> {
        if a.len() != self.basis.len() {
            return Err(ArithError::MixedTowers);
        }
        let mut acc = 0u64;
        for (q, b) in a.coeffs().iter().zip(&self.basis) {
            if q.is_zero() {
                continue;
            }
            let v = self.field.from_rational(q)?;
            self.field.add_mul_assign(&mut acc, &v, b);
        }
        Ok(acc)
    }

    /// The first `count` primes at or above `floor` that give a valid
    /// reduction of `tower`.
    pub fn select(tower: &FieldTower, floor: u64, count: usize) -> Result<Vec<Self>, ArithError> {
        let floor = floor.max(3);
        let ceiling = floor.saturating_add(1 << 24);
        let mut out = Vec::new();
        let mut p = floor;
        while out.len() < count {
            p = next_prime(p);
            if p >= ceiling {
                return Err(ArithError::NoValidPrime { floor, ceiling });
            }
            if let Ok(red) = Self::new(tower, p) {
                out.push(red);
            }
            p += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qr() -> FieldTower {
        let base = FieldTower::rationals();
        base.extend("r", vec![base.from_i64(15), base.zero(), base.one()])
            .unwrap()
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert_eq!(next_prime(1 << 30), 1073741827);
    }

    #[test]
    fn field_inverse() {
        let f = PrimeField::new(17).unwrap();
        for a in 1..17 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn r_reduces_to_six_mod_17() {
        let t = qr();
        let red = PrimeReduction::new(&t, 17).unwrap();
        assert_eq!(red.images(), &[6]);
        let r = t.generator("r").unwrap();
        assert_eq!(red.apply(&r).unwrap(), 6);
        assert_eq!(red.apply(&t.one()).unwrap(), 1);
        assert_eq!((6 * 6) % 17, (17 - 15) % 17);
    }

    #[test]
    fn prime_five_rejected_for_q_r() {
        let t = qr();
        assert_eq!(
            PrimeReduction::new(&t, 5).unwrap_err(),
            ArithError::NotSquarefreeModP { name: "r".into(), p: 5 }
        );
        assert_eq!(
            PrimeReduction::new(&t, 3).unwrap_err(),
            ArithError::NotSquarefreeModP { name: "r".into(), p: 3 }
        );
    }

    #[test]
    fn chosen_images_are_checked() {
        let t = qr();
        assert!(PrimeReduction::with_images(&t, 17, &[11]).is_ok());
        assert!(matches!(
            PrimeReduction::with_images(&t, 17, &[5]),
            Err(ArithError::BadImage { .. })
        ));
    }

    #[test]
    fn roots_found() {
        let f = PrimeField::new(101).unwrap();
        // (x-3)(x-50)(x-7)(x^2+1)?  x^2 + 1 has roots mod 101 (101 = 1 mod 4): 10, 91
        let lin = |a: u64| UniPoly::new(&f, vec![f.neg(&a), 1]);
        let g = lin(3)
            .mul(&f, &lin(50))
            .mul(&f, &lin(7))
            .mul(&f, &UniPoly::new(&f, vec![1, 0, 1]));
        assert_eq!(f.roots(&g), vec![3, 7, 10, 50, 91]);
    }

    #[test]
    fn selection_skips_bad_primes() {
        let t = qr();
        let reds = PrimeReduction::select(&t, 3, 4).unwrap();
        let ps: Vec<u64> = reds.iter().map(|r| r.prime()).collect();
        // need -15 to be a square mod p
        for &p in &ps {
            assert!(p != 3 && p != 5);
        }
        assert_eq!(ps[0], 17);
    }
}
