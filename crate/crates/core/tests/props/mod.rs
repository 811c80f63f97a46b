//! Randomized property suites with fixed seeds. Each function runs one suite
//! and returns a description of the first failure.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use nodalcov::arith::{Field, FieldTower, PrimeField, PrimeReduction, TowerElement};
use nodalcov::cover::{chi_cover, chi_nodal, nodal_char_data, BranchAssignment, NodeSet};
use nodalcov::groebner::{self, is_groebner_basis, Ideal};
use nodalcov::poly::{parse_tower, MonomialOrder, Poly, PolyRing, Ring, RingExt};

pub const SMALL_P: u64 = 32003;

pub fn runner(cases: u32, seed: u64) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn qr() -> FieldTower {
    parse_tower(&[("r", "r^2 + 15")]).unwrap()
}

pub fn tower8() -> FieldTower {
    parse_tower(&[
        ("r", "r^2 + 15"),
        ("m", "m^2 - 95/42*m + 2855/2646"),
        ("n", "n^2 + 443889677/206391214080000*r - 46942774543/619173642240000"),
    ])
    .unwrap()
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

pub fn tower_elem(t: &FieldTower) -> BoxedStrategy<TowerElement> {
    let t = t.clone();
    prop::collection::vec(rational(), t.degree()).prop_map(move |cs| t.element(cs).unwrap())
        .boxed()
}

pub fn prime_elem(p: u64) -> impl Strategy<Value = u64> {
    0..p
}

fn axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), TestCaseError> {
    prop_assert_eq!(f.add(a, b), f.add(b, a));
    prop_assert_eq!(f.mul(a, b), f.mul(b, a));
    prop_assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    prop_assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    prop_assert_eq!(f.add(a, &f.zero()), a.clone());
    prop_assert_eq!(f.mul(a, &f.one()), a.clone());
    prop_assert!(f.is_zero(&f.add(a, &f.neg(a))));
    prop_assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
    if f.is_zero(a) {
        prop_assert!(f.inv(a).is_none());
    } else {
        let inv = f.inv(a).unwrap();
        prop_assert!(f.is_one(&f.mul(a, &inv)));
    }
    Ok(())
}

fn fail<E: std::fmt::Display>(name: &str, e: E) -> String {
    format!("{name}: {e}")
}

/// Field axioms over a large prime, a small prime, Q(r) and the degree-8
/// tower: 1000 cases each.
pub fn field_axioms() -> Result<(), String> {
    for p in [SMALL_P, 1073741971] {
        let f = PrimeField::new(p).unwrap();
        runner(1000, 11 + p)
            .run(&(prime_elem(p), prime_elem(p), prime_elem(p)), |(a, b, c)| axioms(&f, &a, &b, &c))
            .map_err(|e| fail("prime field axioms", e))?;
    }
    for (k, t) in [qr(), tower8()].into_iter().enumerate() {
        let s = tower_elem(&t);
        runner(1000, 21 + k as u64)
            .run(&(s.clone(), s.clone(), s), |(a, b, c)| axioms(&t, &a, &b, &c))
            .map_err(|e| fail("tower axioms", e))?;
    }
    Ok(())
}

/// Reduction modulo a prime is a ring homomorphism that commutes with
/// inversion: 1000 cases per tower.
pub fn reduction_homomorphism() -> Result<(), String> {
    for (k, t) in [qr(), tower8()].into_iter().enumerate() {
        let red = PrimeReduction::select(&t, 1 << 30, 1).unwrap().remove(0);
        let f = red.field();
        let s = tower_elem(&t);
        runner(1000, 31 + k as u64)
            .run(&(s.clone(), s), |(a, b)| {
                let (ra, rb) = (red.apply(&a).unwrap(), red.apply(&b).unwrap());
                prop_assert_eq!(red.apply(&t.add(&a, &b)).unwrap(), f.add(&ra, &rb));
                prop_assert_eq!(red.apply(&t.mul(&a, &b)).unwrap(), f.mul(&ra, &rb));
                prop_assert_eq!(red.apply(&t.neg(&a)).unwrap(), f.neg(&ra));
                prop_assert_eq!(red.apply(&t.one()).unwrap(), 1);
                if !t.is_zero(&a) && ra != 0 {
                    prop_assert_eq!(red.apply(&t.inv(&a).unwrap()).unwrap(), f.inv(&ra).unwrap());
                }
                Ok(())
            })
            .map_err(|e| fail("reduction homomorphism", e))?;
    }
    Ok(())
}

pub fn ring3(p: u64) -> Ring<PrimeField> {
    PolyRing::new(PrimeField::new(p).unwrap(), &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap()
}

/// A polynomial from `(exponents, coefficient)` terms.
pub fn poly_from<F: Field>(ring: &Ring<F>, terms: &[(Vec<u32>, i64)]) -> Poly<F> {
    let f = ring.field();
    let mut acc = ring.zero();
    for (exps, c) in terms {
        let mut m = ring.constant(f.from_i64(*c));
        for (i, &e) in exps.iter().enumerate() {
            m = m.mul(&ring.var(i).pow(e));
        }
        acc = acc.add(&m);
    }
    acc
}

/// The same terms padded with powers of the last variable to a common degree.
pub fn homog_from<F: Field>(ring: &Ring<F>, terms: &[(Vec<u32>, i64)]) -> Poly<F> {
    let d = terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0);
    let last = ring.nvars() - 1;
    let padded: Vec<_> = terms
        .iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            e[last] += d - e.iter().sum::<u32>();
            (e, *c)
        })
        .collect();
    poly_from(ring, &padded)
}

pub fn small_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), -9i64..=9),
        1..=max_terms,
    )
    .prop_map(move |ts| {
        ts.into_iter()
            .map(|(mut e, c)| {
                // keep total degree bounded
                while e.iter().sum::<u32>() > max_deg {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (e, c)
            })
            .collect()
    })
}

fn small_ideal() -> impl Strategy<Value = (Vec<Vec<(Vec<u32>, i64)>>, Vec<usize>)> {
    prop::collection::vec(small_poly(3, 3, 4), 2..=3).prop_flat_map(|gens| {
        let n = gens.len();
        (Just(gens), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Reduced bases of 120 random ideals: S-pairs reduce to zero, recomputing
/// from the basis is the identity, generator order is irrelevant, and ideal
/// members reduce to zero.
pub fn groebner_properties() -> Result<(), String> {
    let ring = ring3(SMALL_P);
    runner(120, 41)
        .run(&(small_ideal(), small_poly(3, 2, 3), small_poly(3, 2, 3)), |((gens, perm), h1, h2)| {
            let gens: Vec<Poly<PrimeField>> = gens.iter().map(|g| poly_from(&ring, g)).collect();
            let ideal = Ideal::new(&ring, gens.clone()).unwrap();
            let gb = ideal.gb();
            prop_assert!(is_groebner_basis(&gb));
            let again = Ideal::new(&ring, gb.elements().to_vec()).unwrap().gb();
            prop_assert_eq!(again.elements(), gb.elements());
            let shuffled: Vec<_> = perm.iter().map(|&i| gens[i].clone()).collect();
            let other = Ideal::new(&ring, shuffled).unwrap().gb();
            prop_assert_eq!(other.elements(), gb.elements());
            let member = gens[0].mul(&poly_from(&ring, &h1)).add(&gens[1].mul(&poly_from(&ring, &h2)));
            prop_assert!(gb.normal_form(&member).unwrap().is_zero());
            Ok(())
        })
        .map_err(|e| fail("groebner", e))
}

/// Ideal of a projective point: the 2x2 minors of `(x | p)`.
pub fn point_ideal<F: Field>(ring: &Ring<F>, p: &[F::Elem]) -> Ideal<F> {
    let n = ring.nvars();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            gens.push(ring.var(i).scale(&p[j]).sub(&ring.var(j).scale(&p[i])));
        }
    }
    Ideal::new(ring, gens).unwrap()
}

fn normalized(f: &PrimeField, p: &[u64]) -> Option<Vec<u64>> {
    let last = p.iter().rposition(|&c| c != 0)?;
    let inv = f.inv(&p[last]).unwrap();
    Some(p.iter().map(|c| f.mul(c, &inv)).collect())
}

/// The intersection of `k <= 6` distinct point ideals has dimension 0 and
/// degree `k`.
pub fn hilbert_points() -> Result<(), String> {
    let p = 101;
    let f = PrimeField::new(p).unwrap();
    let point = prop::collection::vec(0..p, 4);
    runner(100, 51)
        .run(&prop::collection::vec(point, 1..=6), |pts| {
            let ring = PolyRing::new(f, &["x", "y", "z", "w"], MonomialOrder::DegRevLex).unwrap();
            let mut distinct: Vec<Vec<u64>> = Vec::new();
            for q in pts.iter().filter_map(|q| normalized(&f, q)) {
                if !distinct.contains(&q) {
                    distinct.push(q);
                }
            }
            prop_assume!(!distinct.is_empty());
            let mut ideal = point_ideal(&ring, &distinct[0]);
            for q in &distinct[1..] {
                ideal = groebner::intersect(&ideal, &point_ideal(&ring, q)).unwrap();
            }
            prop_assert_eq!(ideal.dim_degree().unwrap(), (0, distinct.len() as u64));
            Ok(())
        })
        .map_err(|e| fail("hilbert points", e))
}

/// A random assignment of `n` nodes to elements of `(Z/2)^r` (0 means not
/// a branch node).
pub fn assignment() -> impl Strategy<Value = (u32, Vec<u8>)> {
    (1u32..=4).prop_flat_map(|r| (Just(r), prop::collection::vec(0u8..(1 << r), 0..=40)))
}

pub fn build_assignment(r: u32, sigma: &[u8]) -> BranchAssignment {
    let parts: Vec<(u8, NodeSet)> = (1..(1u16 << r))
        .map(|s| {
            let nodes = sigma
                .iter()
                .enumerate()
                .filter(|(_, &t)| t as u16 == s)
                .map(|(k, _)| k + 1);
            (s as u8, NodeSet::from_nodes(nodes).unwrap())
        })
        .collect();
    BranchAssignment::new(r, &parts).unwrap()
}

/// `chi_cover` with nodal data agrees with `chi_nodal`.
pub fn chi_consistency() -> Result<(), String> {
    runner(500, 61)
        .run(&(assignment(), -20i64..=20), |((r, sigma), chi_x)| {
            let b = build_assignment(r, &sigma);
            let h0 = vec![0; (1 << r) - 1];
            let data = nodal_char_data(&b, &h0).unwrap();
            let chi_x = Rational64::from_integer(chi_x);
            prop_assert_eq!(chi_cover(r, chi_x, &data).unwrap(), chi_nodal(r, chi_x, b.support().len()));
            Ok(())
        })
        .map_err(|e| fail("chi consistency", e))
}

/// Branch sums are additive in the character.
pub fn character_additivity() -> Result<(), String> {
    runner(500, 71)
        .run(&(assignment(), any::<u8>(), any::<u8>()), |((r, sigma), a, b)| {
            let mask = ((1u16 << r) - 1) as u8;
            let (a, b) = (a & mask, b & mask);
            prop_assume!(a != 0 && b != 0 && a != b);
            let br = build_assignment(r, &sigma);
            let lhs = br.char_set(a ^ b).unwrap();
            let rhs = br.char_set(a).unwrap().symmetric_difference(br.char_set(b).unwrap());
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| fail("character additivity", e))
}
