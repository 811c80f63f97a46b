//! Radicals of homogeneous ideals of projective dimension at most one.
//!
//! Dimension 0 uses Seidenberg's lemma on an affine chart: adjoining the
//! squarefree part of the minimal polynomial of every variable yields the
//! radical. Dimension 1 adjoins squarefree parts of eliminants in three
//! variables, which makes the ideal radical over the generic point of a
//! Noether projection to P^1. The remaining locus is cut out by the leading
//! coefficients `h` of a block-order basis, and
//! `rad I = (J : h^∞) ∩ rad(I + <h>)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, UniPoly};
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingExt};

use super::ops::exact_division;
use super::{eliminate, homogeneous_part, intersect, saturate_by, GroebnerError, Ideal, ReducedGB};

const COORDINATE_ATTEMPTS: u64 = 20;

/// The radical of the saturation of a homogeneous ideal, for projective
/// dimension at most 1. An empty projective scheme gives the irrelevant
/// ideal (or the unit ideal for the unit ideal).
pub fn radical<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let ring = ideal.ring().clone();
    if ideal.generators().is_empty() {
        return Ok(Ideal::zero(&ring));
    }
    if ideal.is_unit() {
        return Ok(Ideal::unit(&ring));
    }
    let (dim, _) = ideal.dim_degree()?;
    if dim == -1 {
        return Ok(Ideal::irrelevant(&ring));
    }
    if dim > 1 {
        return Err(GroebnerError::DimensionTooLarge(dim));
    }
    let linear = homogeneous_part(ideal, 1)?;
    let out = if !linear.is_empty() {
        radical_mod_linear(ideal, &linear)?
    } else if dim == 0 {
        radical_dim0(ideal)?
    } else {
        radical_dim1(ideal)?
    };
    Ok(out.gb().to_ideal())
}

/// Solves the linear forms for their leading variables, recurses in the
/// remaining variables and adds the linear forms back.
fn radical_mod_linear<F: Field>(ideal: &Ideal<F>, linear: &[Poly<F>]) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = ideal.gb();
    let mut pivot = vec![false; n];
    for l in linear {
        let m = l.lm().unwrap();
        pivot[(0..n).find(|&i| m.exp(i) == 1).unwrap()] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&i| !pivot[i]).collect();
    if kept.is_empty() {
        return Ok(Ideal::irrelevant(ring));
    }
    let small = ring.with_vars(
        kept.iter().map(|&i| ring.var_names()[i].clone()).collect(),
        MonomialOrder::DegRevLex,
    )?;
    let mut base = vec![small.zero(); n];
    for (k, &i) in kept.iter().enumerate() {
        base[i] = small.var(k);
    }
    let mut images = base.clone();
    for i in 0..n {
        if pivot[i] {
            let nf = gb.reduce(&ring.var(i));
            images[i] = nf.substitute(&small, &base)?;
        }
    }
    let gens: Vec<Poly<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&small, &images))
        .collect::<Result<_, _>>()?;
    let reduced = radical(&Ideal::new(&small, gens)?)?;
    let mut out: Vec<Poly<F>> = reduced
        .generators()
        .iter()
        .map(|g| g.rename(ring, &kept))
        .collect();
    out.extend(linear.iter().cloned());
    Ideal::new(ring, out)
}

/// Pulls the ideal back along the linear substitution `x_i ↦ images[i]`.
fn pull_back<F: Field>(ideal: &Ideal<F>, images: &[Poly<F>]) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(ring, images))
        .collect::<Result<_, _>>()?;
    Ideal::new(ring, gens)
}

fn empty_after_adding<F: Field>(ideal: &Ideal<F>, vars: &[usize]) -> Result<bool, GroebnerError> {
    let ring = ideal.ring();
    let extra: Vec<Poly<F>> = vars.iter().map(|&i| ring.var(i)).collect();
    Ok(ideal.with_generators(&extra)?.dim_degree()?.0 == -1)
}

/// Random upper unitriangular substitution and its inverse.
fn random_unitriangular<F: Field>(ring: &Ring<F>, seed: u64) -> (Vec<Poly<F>>, Vec<Poly<F>>) {
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 1;
        for x in row.iter_mut().skip(i + 1) {
            *x = rng.gen_range(-3..=3);
        }
    }
    // inverse of a unitriangular integer matrix by back substitution
    let mut inv = vec![vec![0i64; n]; n];
    for i in (0..n).rev() {
        inv[i][i] = 1;
        for j in i + 1..n {
            let s: i64 = (i + 1..=j).map(|k| a[i][k] * inv[k][j]).sum();
            inv[i][j] = -s;
        }
    }
    let to_polys = |m: &Vec<Vec<i64>>| -> Vec<Poly<F>> {
        (0..n)
            .map(|i| {
                let terms = (0..n)
                    .filter(|&k| m[i][k] != 0)
                    .map(|k| (Monomial::var(k), ring.field().from_i64(m[i][k])))
                    .collect();
                ring.from_terms(terms)
            })
            .collect()
    };
    (to_polys(&a), to_polys(&inv))
}

/// Minimal polynomial of variable `v` modulo a zero-dimensional affine
/// ideal, from the first linear dependency among normal forms of `v^k`.
fn minimal_polynomial<F: Field>(gb: &ReducedGB<F>, v: usize) -> Result<UniPoly<F>, GroebnerError> {
    let ring = gb.ring();
    let field = ring.field().clone();
    let x = ring.var(v);
    // echelon rows: (vector with leading monomial pivot and monic lead, combination)
    let mut rows: Vec<(Poly<F>, Vec<F::Elem>)> = Vec::new();
    let mut power = gb.reduce(&ring.one());
    let limit = 4096;
    for k in 0..limit {
        let mut vec = power.clone();
        let mut combo = vec![field.zero(); k + 1];
        combo[k] = field.one();
        loop {
            let hit = vec.terms().iter().find_map(|(m, c)| {
                rows.iter()
                    .find(|(r, _)| r.lm() == Some(m))
                    .map(|row| (c.clone(), row))
            });
            let Some((c, (r, rc))) = hit else { break };
            vec = vec.sub(&r.scale(&c));
            for (a, b) in combo.iter_mut().zip(rc) {
                *a = field.sub(a, &field.mul(&c, b));
            }
        }
        if vec.is_zero() {
            return Ok(UniPoly::new(&field, combo).monic(&field));
        }
        let inv = field.inv(vec.lc().unwrap()).unwrap();
        let combo = combo.iter().map(|c| field.mul(c, &inv)).collect();
        rows.push((vec.scale(&inv), combo));
        power = gb.reduce(&power.mul(&x));
    }
    Err(GroebnerError::NoGeneralPosition)
}

fn unipoly_in<F: Field>(ring: &Ring<F>, p: &UniPoly<F>, v: usize) -> Poly<F> {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| (Monomial::var(v).with_exp(v, k as u32).unwrap(), c.clone()))
        .collect();
    ring.from_terms(terms)
}

fn radical_dim0<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    for j in (0..n).rev() {
        if empty_after_adding(ideal, &[j])? {
            return seidenberg_chart(ideal, j);
        }
    }
    for attempt in 0..COORDINATE_ATTEMPTS {
        let (phi, inv) = random_unitriangular(ring, 0x5eed_0000 + attempt);
        let moved = pull_back(ideal, &phi)?;
        if empty_after_adding(&moved, &[0])? {
            let r = seidenberg_chart(&moved, 0)?;
            return pull_back(&r, &inv);
        }
    }
    Err(GroebnerError::NoGeneralPosition)
}

/// Radical of a zero-dimensional ideal with no point on `x_j = 0`.
fn seidenberg_chart<F: Field>(ideal: &Ideal<F>, j: usize) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let kept: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let chart = ring.with_vars(
        kept.iter().map(|&i| ring.var_names()[i].clone()).collect(),
        MonomialOrder::DegRevLex,
    )?;
    let mut images = vec![chart.one(); n];
    for (k, &i) in kept.iter().enumerate() {
        images[i] = chart.var(k);
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(&chart, &images))
        .collect::<Result<Vec<_>, _>>()?;
    let affine = Ideal::new(&chart, gens)?;
    let gb = affine.gb();
    let field = ring.field().clone();
    let mut extra = Vec::new();
    for v in 0..chart.nvars() {
        let mp = minimal_polynomial(&gb, v)?;
        let sf = mp.squarefree_part(&field);
        if sf.degree() != mp.degree() {
            extra.push(unipoly_in(&chart, &sf, v));
        }
    }
    let rad = if extra.is_empty() { affine } else { affine.with_generators(&extra)? };
    let out = rad
        .gb()
        .elements()
        .iter()
        .map(|g| g.rename(ring, &kept).homogenize(j))
        .collect();
    Ideal::new(ring, out)
}

fn radical_dim1<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    for a in (0..n).rev() {
        for b in (0..a).rev() {
            if empty_after_adding(ideal, &[a, b])? {
                return curve_radical(ideal, a, b);
            }
        }
    }
    for attempt in 0..COORDINATE_ATTEMPTS {
        let (phi, inv) = random_unitriangular(ring, 0x5eed_1000 + attempt);
        let moved = pull_back(ideal, &phi)?;
        if empty_after_adding(&moved, &[0, 1])? {
            let r = curve_radical(&moved, 0, 1)?;
            return pull_back(&r, &inv);
        }
    }
    Err(GroebnerError::NoGeneralPosition)
}

/// Multivariate gcd through `lcm = <a> ∩ <b>`.
fn gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>, GroebnerError> {
    if b.is_zero() {
        return Ok(a.monic());
    }
    if a.is_zero() {
        return Ok(b.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(a.ring().one());
    }
    let ring = a.ring();
    let meet = intersect(
        &Ideal::new(ring, vec![a.clone()])?,
        &Ideal::new(ring, vec![b.clone()])?,
    )?;
    let lcm = meet.gb().elements()[0].clone();
    Ok(exact_division(&a.mul(b), &lcm).expect("lcm divides the product").monic())
}

/// Squarefree part of a homogeneous `f` in the variables `a, b, v`.
fn squarefree_part<F: Field>(f: &Poly<F>, a: usize, b: usize, v: usize) -> Result<Poly<F>, GroebnerError> {
    let mut g = gcd(f, &f.derivative(v))?;
    let top = f.degree_in(v);
    let content_free = f
        .terms()
        .iter()
        .filter(|(m, _)| m.exp(v) == top)
        .all(|(m, _)| m.degree() == top);
    if !content_free {
        g = gcd(&g, &f.derivative(a))?;
        g = gcd(&g, &f.derivative(b))?;
    }
    Ok(exact_division(f, &g).expect("gcd divides f").monic())
}

/// Leading coefficient of `g` viewed as a polynomial in the first `k`
/// variables with coefficients in the others.
fn block_leading_coefficient<F: Field>(g: &Poly<F>, k: usize) -> Poly<F> {
    let lm = g.lm().unwrap();
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| (0..k).all(|i| m.exp(i) == lm.exp(i)))
        .map(|(m, c)| {
            let mut e = *m;
            for i in 0..k {
                e = e.with_exp(i, 0).unwrap();
            }
            (e, c.clone())
        })
        .collect();
    g.ring().from_terms(terms)
}

/// Radical of a one-dimensional ideal whose zero set misses `x_a = x_b = 0`.
fn curve_radical<F: Field>(ideal: &Ideal<F>, a: usize, b: usize) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let rest: Vec<usize> = (0..n).filter(|&i| i != a && i != b).collect();

    let mut extra = Vec::new();
    for &v in &rest {
        let drop: Vec<usize> = rest.iter().copied().filter(|&i| i != v).collect();
        let elim = eliminate(ideal, &drop)?;
        let f = elim
            .gb()
            .elements()
            .iter()
            .min_by_key(|g| (g.total_degree(), g.len()))
            .cloned()
            .ok_or(GroebnerError::NoGeneralPosition)?;
        let sf = squarefree_part(&f, a, b, v)?;
        if sf.total_degree() != f.total_degree() {
            extra.push(sf);
        }
    }
    let j = if extra.is_empty() { ideal.clone() } else { ideal.with_generators(&extra)? };

    // block order with the fibre variables first
    let order: Vec<usize> = rest.iter().copied().chain([a, b]).collect();
    let mut map = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        map[old] = new;
    }
    let k = rest.len();
    let block = ring.with_vars(
        order.iter().map(|&i| ring.var_names()[i].clone()).collect(),
        MonomialOrder::Block(k),
    )?;
    let jb = Ideal::new(&block, j.generators().iter().map(|g| g.rename(&block, &map)).collect())?;
    // leading coefficients of a minimal basis over k(x_a, x_b)
    let fibre = |g: &Poly<F>| {
        let lm = g.lm().unwrap();
        let mut m = Monomial::one();
        for i in 0..k {
            m = m.with_exp(i, lm.exp(i)).unwrap();
        }
        m
    };
    let mut cands: Vec<(Monomial, Poly<F>)> = jb
        .gb()
        .elements()
        .iter()
        .map(|g| (fibre(g), block_leading_coefficient(g, k).rename(ring, &order)))
        .collect();
    cands.sort_by_key(|(m, lc)| (m.degree(), lc.total_degree(), lc.len()));
    let mut kept: Vec<Monomial> = Vec::new();
    let mut lcs: Vec<Poly<F>> = Vec::new();
    for (m, lc) in cands {
        if kept.iter().any(|q| q.divides(&m)) {
            continue;
        }
        kept.push(m);
        if !lc.is_constant() {
            lcs.push(lc);
        }
    }
    if lcs.is_empty() {
        return Ok(j);
    }
    let h = binary_squarefree(ring, &lcs, a, b);
    let sat = if h.len() == 1 {
        let m = *h.lm().unwrap();
        let mut s = j.clone();
        for i in (0..n).filter(|&i| m.exp(i) > 0) {
            s = saturate_by(&s, &ring.var(i))?;
        }
        s
    } else {
        saturate_by(&j, &h)?
    };
    // a complete intersection is unmixed, so there are no isolated points
    if ideal.generators().len() + 2 == n {
        return Ok(sat);
    }
    let points = radical(&j.with_generators(&[h])?)?;
    if points.contains_ideal(&sat)? {
        return Ok(sat);
    }
    intersect(&sat, &points)
}

/// Squarefree part of the product of binary forms in `x_a, x_b`, computed
/// on the chart `x_b = 1`.
fn binary_squarefree<F: Field>(ring: &Ring<F>, forms: &[Poly<F>], a: usize, b: usize) -> Poly<F> {
    let field = ring.field();
    let mut product = UniPoly::constant(field, field.one());
    let mut through_b = false;
    for f in forms {
        let d = f.total_degree().unwrap();
        let mut coeffs = vec![field.zero(); d as usize + 1];
        for (m, c) in f.terms() {
            coeffs[m.exp(a) as usize] = c.clone();
        }
        let u = UniPoly::new(field, coeffs);
        through_b |= u.degree() != Some(d as usize);
        product = product.mul(field, &u);
    }
    let sf = product.squarefree_part(field);
    let deg = sf.degree().unwrap_or(0) as u32;
    let terms = sf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let m = Monomial::var(a)
                .with_exp(a, i as u32)
                .unwrap()
                .with_exp(b, deg - i as u32)
                .unwrap();
            (m, c.clone())
        })
        .collect();
    let h = ring.from_terms(terms);
    if through_b {
        h.mul(&ring.var(b))
    } else {
        h
    }
}
