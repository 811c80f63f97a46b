use std::collections::{BinaryHeap, HashMap};

use crate::arith::Field;
use crate::poly::{Monomial, Poly, Ring, RingExt};

/// Bitmask of the variables occurring in `m`, for fast non-divisibility
/// rejection.
#[inline]
fn support_mask(m: &Monomial) -> u16 {
    let mut mask = 0u16;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            mask |= 1 << i;
        }
    }
    mask
}

/// Reducers with precomputed leading data. All reducers must be monic.
pub(crate) struct Reducers<'a, F: Field> {
    polys: Vec<&'a Poly<F>>,
    lms: Vec<Monomial>,
    masks: Vec<u16>,
}

impl<'a, F: Field> Reducers<'a, F> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a Poly<F>>) -> Self {
        let polys: Vec<&Poly<F>> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        debug_assert!(polys
            .iter()
            .all(|p| p.field().is_one(p.lc().unwrap())));
        let lms: Vec<Monomial> = polys.iter().map(|p| *p.lm().unwrap()).collect();
        let masks = lms.iter().map(support_mask).collect();
        Reducers { polys, lms, masks }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = support_mask(m);
        (0..self.lms.len()).find(|&i| self.masks[i] & !mask == 0 && self.lms[i].divides(m))
    }

    /// Full reduction of `f`: the result has no term divisible by any
    /// reducer's leading monomial.
    pub(crate) fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        self.reduce_tracking(f, None)
    }

    /// Full reduction that also accumulates quotients per reducer.
    pub(crate) fn reduce_tracking(
        &self,
        f: &Poly<F>,
        mut quotients: Option<&mut Vec<Vec<(Monomial, F::Elem)>>>,
    ) -> Poly<F> {
        let ring = f.ring().clone();
        let field = ring.field().clone();
        if self.polys.is_empty() {
            return f.clone();
        }
        let mut heap: BinaryHeap<(u128, Monomial)> = BinaryHeap::with_capacity(f.len() * 2);
        let mut coeffs: HashMap<Monomial, F::Elem> = HashMap::with_capacity(f.len() * 2);
        for (m, c) in f.terms() {
            heap.push((ring.key(m), *m));
            coeffs.insert(*m, c.clone());
        }
        let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((_, m)) = heap.pop() {
            let Some(c) = coeffs.remove(&m) else { continue };
            if field.is_zero(&c) {
                continue;
            }
            match self.find(&m) {
                None => rem.push((m, c)),
                Some(i) => {
                    let g = self.polys[i];
                    let q = self.lms[i].quotient_of(&m).unwrap();
                    for (t, d) in &g.terms()[1..] {
                        let mono = t.mul(&q);
                        let prod = field.mul(&c, d);
                        match coeffs.get_mut(&mono) {
                            Some(e) => *e = field.sub(e, &prod),
                            None => {
                                coeffs.insert(mono, field.neg(&prod));
                                heap.push((ring.key(&mono), mono));
                            }
                        }
                    }
                    if let Some(qs) = quotients.as_deref_mut() {
                        qs[i].push((q, c));
                    }
                }
            }
        }
        Poly::from_sorted(ring, rem)
    }
}

/// Buchberger's S-polynomial of two monic polynomials.
pub(crate) fn s_poly<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let (lf, lg) = (f.lm().unwrap(), g.lm().unwrap());
    let l = lf.lcm(lg);
    let one = f.field().one();
    let a = f.mul_term(&lf.quotient_of(&l).unwrap(), &one);
    let b = g.mul_term(&lg.quotient_of(&l).unwrap(), &one);
    a.sub(&b)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Runs Buchberger's algorithm with the Gebauer-Möller criteria and the
/// sugar selection strategy. Returns the reduced, monic basis sorted by
/// increasing leading monomial.
pub(crate) fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Poly<F>]) -> Vec<Poly<F>> {
    let mut polys: Vec<Poly<F>> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    input.sort_by_key(|p| p.lm().map(|m| ring.key(m)));
    for f in input {
        let h = {
            let reducers = Reducers::new(active_polys(&polys, &active));
            reducers.reduce(&f).monic()
        };
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.one()];
        }
        let sugar = f.total_degree().unwrap();
        insert(&mut polys, &mut sugars, &mut active, &mut pairs, h, sugar);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by_key(|&k| (pairs[k].sugar, ring.key(&pairs[k].lcm)))
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_poly(&polys[pair.i], &polys[pair.j]);
        let h = {
            let reducers = Reducers::new(active_polys(&polys, &active));
            reducers.reduce(&s).monic()
        };
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![ring.one()];
        }
        insert(&mut polys, &mut sugars, &mut active, &mut pairs, h, pair.sugar);
    }

    let basis: Vec<Poly<F>> = active_polys(&polys, &active).cloned().collect();
    interreduce(ring, basis)
}

fn active_polys<'a, F: Field>(
    polys: &'a [Poly<F>],
    active: &'a [bool],
) -> impl Iterator<Item = &'a Poly<F>> {
    polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p)
}

fn insert<F: Field>(
    polys: &mut Vec<Poly<F>>,
    sugars: &mut Vec<u32>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Poly<F>,
    sugar: u32,
) {
    let hi = polys.len();
    let lh = *h.lm().unwrap();
    let pair_with = |g: usize, polys: &[Poly<F>], sugars: &[u32]| {
        let lg = polys[g].lm().unwrap();
        let lcm = lh.lcm(lg);
        let sg = (sugar + lcm.degree() - lh.degree()).max(sugars[g] + lcm.degree() - lg.degree());
        Pair {
            i: g,
            j: hi,
            lcm,
            sugar: sg,
        }
    };

    // Gebauer-Möller: candidate pairs (h, g) for active g
    let cands: Vec<Pair> = (0..polys.len())
        .filter(|&g| active[g])
        .map(|g| pair_with(g, polys, sugars))
        .collect();
    let coprime = |p: &Pair| polys[p.i].lm().unwrap().is_coprime(&lh);

    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cands.iter().enumerate() {
        if coprime(p) {
            kept.push(p.clone());
            continue;
        }
        let dominated = cands[k + 1..]
            .iter()
            .chain(kept.iter())
            .any(|q| q.lcm.divides(&p.lcm));
        if !dominated {
            kept.push(p.clone());
        }
    }
    let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p)).collect();

    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && polys[p.i].lm().unwrap().lcm(&lh) != p.lcm
            && polys[p.j].lm().unwrap().lcm(&lh) != p.lcm)
    });
    pairs.extend(new_pairs);

    for g in 0..polys.len() {
        if active[g] && lh.divides(polys[g].lm().unwrap()) {
            active[g] = false;
        }
    }
    polys.push(h);
    sugars.push(sugar);
    active.push(true);
}

/// Minimalizes, fully interreduces and sorts a Gröbner basis.
pub(crate) fn interreduce<F: Field>(ring: &Ring<F>, basis: Vec<Poly<F>>) -> Vec<Poly<F>> {
    let mut basis: Vec<Poly<F>> = basis
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    basis.sort_by_key(|p| ring.key(p.lm().unwrap()));
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for p in basis {
        let lm = p.lm().unwrap();
        if minimal.iter().any(|q| q.lm().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(p);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p));
        let p = &minimal[k];
        // the leading term is irreducible by minimality; reduce the tail
        let lead = ring.monomial(*p.lm().unwrap(), p.lc().unwrap().clone());
        let tail = p.sub(&lead);
        out.push(lead.add(&others.reduce(&tail)));
    }
    out
}
