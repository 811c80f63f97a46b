use crate::arith::Field;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, RingExt, MAX_VARS};

use super::{buchberger, GroebnerError, Ideal, Reducers};

/// Fresh variable names not clashing with `ring`'s variables.
fn fresh_names<F: Field>(ring: &Ring<F>, k: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(k);
    let mut i = 0;
    while out.len() < k {
        let name = format!("_aux{i}");
        if ring.var_index(&name).is_none() && ring.field().generator(&name).is_none() {
            out.push(name);
        }
        i += 1;
    }
    out
}

/// Ring with `k` auxiliary variables in front of the variables of `ring`,
/// ordered by the elimination order for the auxiliary block.
fn extended_ring<F: Field>(ring: &Ring<F>, k: usize) -> Result<Ring<F>, GroebnerError> {
    if ring.nvars() + k > MAX_VARS {
        return Err(GroebnerError::NoAuxiliaryVariable);
    }
    let mut names = fresh_names(ring, k);
    names.extend(ring.var_names().iter().cloned());
    Ok(ring.with_vars(names, MonomialOrder::Block(k))?)
}

/// Lifts `f` into the extended ring (variable `i` becomes `i + k`).
fn lift<F: Field>(f: &Poly<F>, ext: &Ring<F>, k: usize) -> Poly<F> {
    let map: Vec<usize> = (0..f.ring().nvars()).map(|i| i + k).collect();
    f.rename(ext, &map)
}

/// Keeps the basis elements free of the first `k` variables and moves them
/// back into `ring`.
fn drop_front<F: Field>(basis: &[Poly<F>], ring: &Ring<F>, k: usize) -> Vec<Poly<F>> {
    let n = ring.nvars();
    let mut map = vec![0usize; n + k];
    for (i, slot) in map.iter_mut().enumerate().skip(k) {
        *slot = i - k;
    }
    basis
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
        .map(|g| g.rename(ring, &map))
        .collect()
}

fn check_same<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(), GroebnerError> {
    if a.ring().same_ring(b.ring()) {
        Ok(())
    } else {
        Err(GroebnerError::RingMismatch)
    }
}

/// `I ∩ k[kept variables]`, returned in the ring of `I`.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop: &[usize]) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut dropped = vec![false; n];
    for &i in drop {
        if i >= n {
            return Err(GroebnerError::RingMismatch);
        }
        dropped[i] = true;
    }
    let k = dropped.iter().filter(|&&d| d).count();
    if k == 0 {
        return Ok(ideal.clone());
    }
    if k == n {
        return Err(GroebnerError::DropAllVariables);
    }
    // dropped variables first, in their original relative order
    let order: Vec<usize> = (0..n)
        .filter(|&i| dropped[i])
        .chain((0..n).filter(|&i| !dropped[i]))
        .collect();
    let mut map = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        map[old] = new;
    }
    let names: Vec<String> = order.iter().map(|&i| ring.var_names()[i].clone()).collect();
    let ext = ring.with_vars(names, MonomialOrder::Block(k))?;
    let gens: Vec<Poly<F>> = ideal.generators().iter().map(|g| g.rename(&ext, &map)).collect();
    let basis = buchberger::buchberger(&ext, &gens);
    let back: Vec<usize> = order.clone();
    let kept = basis
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
        .map(|g| g.rename(ring, &back))
        .collect();
    Ideal::new(ring, kept)
}

/// `I ∩ J` via `t·I + (1 - t)·J ∩ k[x]`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    check_same(a, b)?;
    let ring = a.ring();
    if a.generators().is_empty() || b.generators().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    if a.contains_ideal(b)? {
        return Ok(b.clone());
    }
    if b.contains_ideal(a)? {
        return Ok(a.clone());
    }
    let ext = extended_ring(ring, 1)?;
    let t = ext.var(0);
    let one_minus_t = ext.one().sub(&t);
    let mut gens: Vec<Poly<F>> = a.generators().iter().map(|g| t.mul(&lift(g, &ext, 1))).collect();
    gens.extend(b.generators().iter().map(|g| one_minus_t.mul(&lift(g, &ext, 1))));
    let basis = buchberger::buchberger(&ext, &gens);
    Ideal::new(ring, drop_front(&basis, ring, 1))
}

/// Exact quotient `f / g`, or `None` if `g` does not divide `f`.
pub fn exact_division<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Option<Poly<F>> {
    let field = f.field().clone();
    let lc_inv = field.inv(g.lc()?)?;
    let gm = g.monic();
    let red = Reducers::new([&gm]);
    let mut qs = vec![Vec::new()];
    let rem = red.reduce_tracking(f, Some(&mut qs));
    if !rem.is_zero() {
        return None;
    }
    let q = f.ring().from_terms(qs.pop().unwrap());
    Some(q.scale(&lc_inv))
}

/// Index of the variable if `g` is a single variable with coefficient 1.
fn as_variable<F: Field>(g: &Poly<F>) -> Option<usize> {
    if g.len() != 1 || !g.field().is_one(g.lc().unwrap()) {
        return None;
    }
    let m = g.lm().unwrap();
    if m.degree() != 1 {
        return None;
    }
    (0..g.ring().nvars()).find(|&i| m.exp(i) == 1)
}

/// Degrevlex basis of a homogeneous ideal with variable `v` last, moved
/// back to the ring of the ideal, followed by `f` applied to each element
/// (in the permuted ring, where `v` is the last variable).
fn with_variable_last<F: Field>(
    ideal: &Ideal<F>,
    v: usize,
    f: impl Fn(&Poly<F>) -> Poly<F>,
) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let order: Vec<usize> = (0..n).filter(|&i| i != v).chain([v]).collect();
    let mut map = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        map[old] = new;
    }
    let names: Vec<String> = order.iter().map(|&i| ring.var_names()[i].clone()).collect();
    let perm = ring.with_vars(names, MonomialOrder::DegRevLex)?;
    let gens: Vec<Poly<F>> = ideal.generators().iter().map(|g| g.rename(&perm, &map)).collect();
    let basis = buchberger::buchberger(&perm, &gens);
    let out = basis.iter().map(|g| f(g).rename(ring, &order)).collect();
    Ideal::new(ring, out)
}

fn divide_by_var_power<F: Field>(g: &Poly<F>, v: usize, cap: u32) -> Poly<F> {
    let e = g.terms().iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0).min(cap);
    if e == 0 {
        return g.clone();
    }
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| (m.with_exp(v, m.exp(v) - e).unwrap(), c.clone()))
        .collect();
    g.ring().from_terms(terms)
}

/// `I : g`.
pub fn quotient_by<F: Field>(ideal: &Ideal<F>, g: &Poly<F>) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    if !g.ring().same_ring(ring) {
        return Err(GroebnerError::RingMismatch);
    }
    if g.is_zero() {
        return Err(GroebnerError::ZeroIdeal);
    }
    if ideal.is_homogeneous() {
        if let Some(v) = as_variable(g) {
            let last = ring.nvars() - 1;
            return with_variable_last(ideal, v, |p| divide_by_var_power(p, last, 1));
        }
    }
    let gi = Ideal::new(ring, vec![g.clone()])?;
    let meet = intersect(ideal, &gi)?;
    let gens = meet
        .generators()
        .iter()
        .map(|f| exact_division(f, g).expect("generator of I ∩ <g> is divisible by g"))
        .collect();
    Ideal::new(ring, gens)
}

/// `I : J`.
pub fn ideal_quotient<F: Field>(ideal: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    check_same(ideal, j)?;
    if j.generators().is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let q = quotient_by(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap())
}

/// `I : g^∞`.
pub fn saturate_by<F: Field>(ideal: &Ideal<F>, g: &Poly<F>) -> Result<Ideal<F>, GroebnerError> {
    let ring = ideal.ring();
    if !g.ring().same_ring(ring) {
        return Err(GroebnerError::RingMismatch);
    }
    if g.is_zero() {
        return Err(GroebnerError::ZeroIdeal);
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    if ideal.is_homogeneous() {
        if let Some(v) = as_variable(g) {
            let last = ring.nvars() - 1;
            return with_variable_last(ideal, v, |p| divide_by_var_power(p, last, u32::MAX));
        }
    }
    // Rabinowitsch: eliminate s from I + <s·g - 1>
    let ext = extended_ring(ring, 1)?;
    let s = ext.var(0);
    let mut gens: Vec<Poly<F>> = ideal.generators().iter().map(|f| lift(f, &ext, 1)).collect();
    gens.push(s.mul(&lift(g, &ext, 1)).sub(&ext.one()));
    let basis = buchberger::buchberger(&ext, &gens);
    Ideal::new(ring, drop_front(&basis, ring, 1))
}

/// `I : J^∞ = ∩_g I : g^∞` over the generators `g` of `J`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>, GroebnerError> {
    check_same(ideal, j)?;
    if j.generators().is_empty() {
        return Err(GroebnerError::ZeroIdeal);
    }
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let q = saturate_by(ideal, g)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap())
}

/// All monomials of total degree `d` in `n` variables, in decreasing
/// degrevlex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            cur.push(left);
            out.push(Monomial::from_exps(cur).unwrap());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(i + 1, n, left - e, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::one()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut Vec::with_capacity(n), &mut out);
    let ord = MonomialOrder::DegRevLex;
    out.sort_by_key(|m| std::cmp::Reverse(ord.key(m)));
    out
}

/// Coefficients of `f` on the given monomials.
pub fn coefficient_vector<F: Field>(f: &Poly<F>, monomials: &[Monomial]) -> Vec<F::Elem> {
    monomials.iter().map(|m| f.coeff(m)).collect()
}

/// A basis of the degree-`d` part of a homogeneous ideal: one element
/// `u - NF(u)` for every degree-`d` monomial `u` in the leading-term ideal.
pub fn homogeneous_part<F: Field>(ideal: &Ideal<F>, d: u32) -> Result<Vec<Poly<F>>, GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let ring = ideal.ring();
    let gb = ideal.gb();
    let one = ring.field().one();
    Ok(monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .filter(|u| !gb.is_standard(u))
        .map(|u| {
            let p = ring.monomial(u, one.clone());
            p.sub(&gb.reduce(&p))
        })
        .collect())
}
