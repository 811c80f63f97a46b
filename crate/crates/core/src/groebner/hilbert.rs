use crate::arith::Field;
use crate::poly::Monomial;

use super::{GroebnerError, Ideal};

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i128> {
    let mut p = vec![0i128; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    p
}

fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens[0].is_one() {
        return vec![0];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(g.degree())));
    }
    // pivot on the variable occurring in the most non-pure generators
    let mixed: Vec<&Monomial> = gens
        .iter()
        .filter(|g| g.exps().iter().filter(|&&e| e > 0).count() > 1)
        .collect();
    let nv = gens[0].exps().len();
    let x = (0..nv)
        .max_by_key(|&i| mixed.iter().filter(|g| g.exp(i) > 0).count())
        .unwrap();
    let e = mixed
        .iter()
        .map(|g| g.exp(x))
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let pivot = Monomial::var(x).with_exp(x, e).unwrap();
    let mut plus = gens.clone();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.with_exp(x, g.exp(x).saturating_sub(e)).unwrap())
        .collect();
    let mut out = numerator(plus);
    poly_add_shifted(&mut out, &numerator(colon), e as usize);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of the
/// quotient by the leading-term ideal of `ideal`.
pub fn hilbert_numerator<F: Field>(ideal: &Ideal<F>) -> Vec<i128> {
    numerator(ideal.gb().leading_monomials())
}

/// Projective dimension and degree of a homogeneous ideal, read off the
/// Hilbert series. An empty projective scheme reports `(-1, 0)`.
pub fn hilbert_dim_degree<F: Field>(ideal: &Ideal<F>) -> Result<(i64, u64), GroebnerError> {
    if !ideal.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let mut num = hilbert_numerator(ideal);
    if num.iter().all(|&c| c == 0) {
        return Ok((-1, 0));
    }
    let n = ideal.ring().nvars() as i64;
    let mut k = 0i64;
    // divide by (1 - t) while N(1) = 0
    while num.iter().sum::<i128>() == 0 {
        let mut q = vec![0i128; num.len() - 1];
        let mut acc = 0i128;
        for (i, c) in num.iter().take(num.len() - 1).enumerate() {
            acc += c;
            q[i] = acc;
        }
        num = q;
        k += 1;
    }
    let affine = n - k;
    if affine <= 0 {
        return Ok((-1, 0));
    }
    let degree: i128 = num.iter().sum();
    Ok((affine - 1, degree as u64))
}
