use std::fmt;

/// Maximum number of variables of any polynomial ring. Seven ambient
/// coordinates plus room for the auxiliary variables used by elimination.
pub const MAX_VARS: usize = 12;

/// Exponent vector, one byte per variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m
    }

    /// `None` if an exponent exceeds 255 or there are too many entries.
    pub fn from_exps(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u8::try_from(e).ok()?;
        }
        Some(m)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exps(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Monomial::default();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        Some(out)
    }

    /// Panics on exponent overflow (more than 255 in one variable).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Monomial::default();
        for i in 0..MAX_VARS {
            out.exps[i] = other.exps[i].checked_sub(self.exps[i])?;
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::default();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::default();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Option<Monomial> {
        let mut out = *self;
        out.exps[i] = u8::try_from(e).ok()?;
        Some(out)
    }

    /// Moves exponents according to `map[i] = new index of variable i`.
    pub fn permuted(&self, map: &[usize]) -> Monomial {
        let mut out = Monomial::default();
        for (i, &j) in map.iter().enumerate() {
            out.exps[j] = self.exps[i];
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// Term orders. Every order is encoded as a `u128` key whose natural order
/// agrees with the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Elimination order for the first `k` variables: degrevlex on the first
    /// block, ties broken by degrevlex on the rest.
    Block(usize),
}

impl MonomialOrder {
    #[inline]
    pub fn key(&self, m: &Monomial) -> u128 {
        let e = &m.exps;
        match *self {
            MonomialOrder::DegRevLex => {
                let mut k = m.degree() as u128;
                for i in (0..MAX_VARS).rev() {
                    k = (k << 8) | (255 - e[i]) as u128;
                }
                k
            }
            MonomialOrder::Lex => {
                let mut k = 0u128;
                for &x in e.iter() {
                    k = (k << 8) | x as u128;
                }
                k
            }
            MonomialOrder::Block(split) => {
                let d1: u32 = e[..split].iter().map(|&x| x as u32).sum();
                let d2: u32 = e[split..].iter().map(|&x| x as u32).sum();
                let mut k = d1 as u128;
                for i in (0..split).rev() {
                    k = (k << 8) | (255 - e[i]) as u128;
                }
                k = (k << 12) | d2 as u128;
                for i in (split..MAX_VARS).rev() {
                    k = (k << 8) | (255 - e[i]) as u128;
                }
                k
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e).unwrap()
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        // x > y > z in degree one
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x*z < y^2 in degrevlex (smaller power of the last variable wins)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let blk = MonomialOrder::Block(1);
        assert_eq!(blk.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(blk.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn overflow_is_checked() {
        let a = m(&[200]);
        assert!(a.checked_mul(&a).is_none());
        assert!(Monomial::from_exps(&[256]).is_none());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..6, 5).prop_map(|v| m(&v))
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Block(2)] {
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                prop_assert!(o.cmp(&a.mul(&c), &a) != Ordering::Less);
                if o.key(&a) == o.key(&b) {
                    prop_assert_eq!(a, b);
                }
            }
        }
    }
}
