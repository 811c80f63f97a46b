//! Node-set combinatorics and numerical invariants of `(Z/2)^r` covers
//! branched over nodes.

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

/// Nodes are numbered `1..=MAX_NODES`.
pub const MAX_NODES: usize = 128;
pub const MAX_RANK: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("the trivial character has no branch set")]
    TrivialCharacter,
    #[error("group rank {0} exceeds {MAX_RANK}")]
    RankTooLarge(u32),
    #[error("element {0:#b} is outside the group")]
    ElementOutOfRange(u8),
    #[error("node {0} is outside 1..={MAX_NODES}")]
    NodeOutOfRange(usize),
    #[error("node {0} is assigned to two group elements")]
    Overlap(usize),
    #[error("unknown trope {0}")]
    UnknownTrope(usize),
    #[error("trope {id} has {size} nodes, expected 12")]
    TropeSize { id: usize, size: usize },
    #[error("target is outside the span of trope pairs (rank {rank})")]
    OutsideSpan { rank: usize },
    #[error("sizes sum to {sum} but the universe has {universe} nodes")]
    SizeMismatch { sum: usize, universe: usize },
    #[error("no assignment with the requested sizes exists")]
    NoPartition,
    #[error("no data for character {0:#b}")]
    MissingCharacter(u8),
    #[error("negative h0 value {0}")]
    NegativeH0(i64),
    #[error("elements do not form a subgroup")]
    NotSubgroup,
}

/// `χ(σ)` for a character and a group element written as bit vectors.
pub fn pairing(chi: u8, sigma: u8) -> bool {
    (chi & sigma).count_ones() % 2 == 1
}

/// Name of a group element in the generators `a, b, c, ...`, or `e`.
pub fn element_name(sigma: u8) -> String {
    if sigma == 0 {
        return "e".into();
    }
    (0..8)
        .filter(|i| sigma >> i & 1 == 1)
        .map(|i| (b'a' + i as u8) as char)
        .collect()
}

/// Parses `e`, `a`, `bc`, `abc`, ...
pub fn parse_element(name: &str) -> Option<u8> {
    if name == "e" {
        return Some(0);
    }
    let mut s = 0u8;
    for ch in name.chars() {
        let i = (ch as u32).checked_sub('a' as u32).filter(|&i| i < 8)?;
        if s >> i & 1 == 1 {
            return None;
        }
        s |= 1 << i;
    }
    (!name.is_empty()).then_some(s)
}

/// Bit `i` of a character is its value on the `i`-th generator, so
/// `chi_bits(&[1,1,0])` is the character written `110`.
pub fn chi_bits(values: &[u8]) -> u8 {
    values.iter().enumerate().fold(0, |acc, (i, &v)| acc | (v & 1) << i)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NodeSet(u128);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> NodeSet {
        assert!(n <= MAX_NODES);
        if n == MAX_NODES {
            NodeSet(u128::MAX)
        } else {
            NodeSet((1u128 << n) - 1)
        }
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> Result<NodeSet, CoverError> {
        let mut s = NodeSet::EMPTY;
        for n in nodes {
            s.insert(n)?;
        }
        Ok(s)
    }

    pub fn from_bits(bits: u128) -> NodeSet {
        NodeSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn insert(&mut self, node: usize) -> Result<(), CoverError> {
        if node == 0 || node > MAX_NODES {
            return Err(CoverError::NodeOutOfRange(node));
        }
        self.0 |= 1 << (node - 1);
        Ok(())
    }

    pub fn contains(self, node: usize) -> bool {
        node >= 1 && node <= MAX_NODES && self.0 >> (node - 1) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 | o.0)
    }

    pub fn intersection(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & o.0)
    }

    pub fn difference(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 & !o.0)
    }

    pub fn symmetric_difference(self, o: NodeSet) -> NodeSet {
        NodeSet(self.0 ^ o.0)
    }

    pub fn is_subset(self, o: NodeSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: NodeSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn nodes(self) -> impl Iterator<Item = usize> {
        (0..MAX_NODES).filter(move |i| self.0 >> i & 1 == 1).map(|i| i + 1)
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.nodes()).finish()
    }
}

/// The branch divisors `D_σ` of a cover, stored as one group element per
/// node so that they are disjoint by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchAssignment {
    rank: u32,
    sigma: Vec<u8>,
}

impl BranchAssignment {
    pub fn new(rank: u32, parts: &[(u8, NodeSet)]) -> Result<Self, CoverError> {
        if rank > MAX_RANK {
            return Err(CoverError::RankTooLarge(rank));
        }
        let mut sigma = vec![0u8; MAX_NODES];
        for &(s, set) in parts {
            if rank < 8 && s >> rank != 0 {
                return Err(CoverError::ElementOutOfRange(s));
            }
            for n in set.nodes() {
                if sigma[n - 1] != 0 && sigma[n - 1] != s {
                    return Err(CoverError::Overlap(n));
                }
                sigma[n - 1] = s;
            }
        }
        Ok(BranchAssignment { rank, sigma })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn order(&self) -> usize {
        1 << self.rank
    }

    /// Group element of a node, `0` if the node is not a branch point.
    pub fn element_of(&self, node: usize) -> u8 {
        self.sigma.get(node.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `D_σ`.
    pub fn part(&self, s: u8) -> NodeSet {
        if s == 0 {
            return NodeSet::EMPTY;
        }
        let mut out = NodeSet::EMPTY;
        for (i, &t) in self.sigma.iter().enumerate() {
            if t == s {
                out.0 |= 1 << i;
            }
        }
        out
    }

    /// All branch nodes.
    pub fn support(&self) -> NodeSet {
        let mut out = NodeSet::EMPTY;
        for (i, &t) in self.sigma.iter().enumerate() {
            if t != 0 {
                out.0 |= 1 << i;
            }
        }
        out
    }

    pub fn parts(&self) -> Vec<(u8, NodeSet)> {
        (1..self.order() as u16)
            .map(|s| (s as u8, self.part(s as u8)))
            .collect()
    }

    /// Whether the elements carrying branch nodes generate the group, the
    /// condition for the cover to be irreducible.
    pub fn generates_group(&self) -> bool {
        let used: Vec<u8> = self
            .parts()
            .into_iter()
            .filter(|(_, d)| !d.is_empty())
            .map(|(s, _)| s)
            .collect();
        span(&used).len() == self.order()
    }

    /// Union of the `D_σ` with `χ(σ) = 1`.
    pub fn char_set(&self, chi: u8) -> Result<NodeSet, CoverError> {
        if chi == 0 {
            return Err(CoverError::TrivialCharacter);
        }
        if self.rank < 8 && chi >> self.rank != 0 {
            return Err(CoverError::ElementOutOfRange(chi));
        }
        let mut out = NodeSet::EMPTY;
        for (i, &t) in self.sigma.iter().enumerate() {
            if t != 0 && pairing(chi, t) {
                out.0 |= 1 << i;
            }
        }
        Ok(out)
    }
}

pub fn branch_char_set(b: &BranchAssignment, chi: u8) -> Result<NodeSet, CoverError> {
    b.char_set(chi)
}

/// Trope curves by identifier, each through 12 nodes.
#[derive(Clone, Debug, Default)]
pub struct TropeTable {
    tropes: Vec<(usize, NodeSet)>,
}

impl TropeTable {
    pub fn new(tropes: Vec<(usize, NodeSet)>) -> Result<Self, CoverError> {
        for &(id, set) in &tropes {
            if set.len() != 12 {
                return Err(CoverError::TropeSize { id, size: set.len() });
            }
        }
        Ok(TropeTable { tropes })
    }

    pub fn ids(&self) -> Vec<usize> {
        self.tropes.iter().map(|t| t.0).collect()
    }

    pub fn len(&self) -> usize {
        self.tropes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tropes.is_empty()
    }

    pub fn get(&self, id: usize) -> Result<NodeSet, CoverError> {
        self.tropes
            .iter()
            .find(|t| t.0 == id)
            .map(|t| t.1)
            .ok_or(CoverError::UnknownTrope(id))
    }

    /// The pairs `(t1, t2)` with `t1 < t2` in table order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.tropes.len() {
            for j in i + 1..self.tropes.len() {
                out.push((self.tropes[i].0, self.tropes[j].0));
            }
        }
        out
    }

    pub fn without(&self, id: usize) -> TropeTable {
        TropeTable {
            tropes: self.tropes.iter().copied().filter(|t| t.0 != id).collect(),
        }
    }
}

/// Nodes on exactly one of the two tropes.
pub fn trope_pair_set(t: &TropeTable, t1: usize, t2: usize) -> Result<NodeSet, CoverError> {
    Ok(t.get(t1)?.symmetric_difference(t.get(t2)?))
}

/// A target node set written as a sum of trope-pair sets over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityCertificate {
    pub target: NodeSet,
    pub pairs: Vec<(usize, usize)>,
}

impl DivisibilityCertificate {
    pub fn replay(&self, t: &TropeTable) -> Result<NodeSet, CoverError> {
        let mut acc = NodeSet::EMPTY;
        for &(a, b) in &self.pairs {
            acc = acc.symmetric_difference(trope_pair_set(t, a, b)?);
        }
        Ok(acc)
    }

    pub fn is_valid(&self, t: &TropeTable) -> bool {
        self.replay(t).is_ok_and(|s| s == self.target)
    }
}

/// Expresses `target` in the GF(2) span of the trope-pair sets.
pub fn gf2_certify(target: NodeSet, t: &TropeTable) -> Result<DivisibilityCertificate, CoverError> {
    let pairs = t.pairs();
    // pivot[b]: a reduced row with top bit b and the pair indices summing to it
    let mut pivot: Vec<Option<(u128, Vec<bool>)>> = vec![None; MAX_NODES];
    let reduce = |pivot: &[Option<(u128, Vec<bool>)>], mut v: u128, combo: &mut Vec<bool>| {
        while v != 0 {
            let top = 127 - v.leading_zeros() as usize;
            match &pivot[top] {
                Some((bits, c)) => {
                    v ^= bits;
                    xor_into(combo, c);
                }
                None => break,
            }
        }
        v
    };
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let mut combo = vec![false; pairs.len()];
        combo[k] = true;
        let v = reduce(&pivot, trope_pair_set(t, a, b)?.0, &mut combo);
        if v != 0 {
            pivot[127 - v.leading_zeros() as usize] = Some((v, combo));
        }
    }
    let rank = pivot.iter().filter(|p| p.is_some()).count();
    let mut combo = vec![false; pairs.len()];
    let v = reduce(&pivot, target.0, &mut combo);
    if v != 0 {
        return Err(CoverError::OutsideSpan { rank });
    }
    Ok(DivisibilityCertificate {
        target,
        pairs: pairs
            .into_iter()
            .zip(combo)
            .filter(|(_, used)| *used)
            .map(|(p, _)| p)
            .collect(),
    })
}

fn xor_into(a: &mut [bool], b: &[bool]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

/// An assignment found by [`partition_search`] with certificates for the
/// branch sums of the three basis characters.
#[derive(Clone, Debug)]
pub struct PartitionSolution {
    pub assignment: BranchAssignment,
    pub certificates: [DivisibilityCertificate; 3],
}

/// The order in which `sizes` lists the group elements of `(Z/2)^3`:
/// `a, b, c, abc, bc, ac, ab`.
pub const SIZE_ORDER: [u8; 7] = [0b001, 0b010, 0b100, 0b111, 0b110, 0b101, 0b011];

/// Searches `(Z/2)^3` branch assignments partitioning `universe` with
/// `|D_σ| = sizes[k]` for `σ = SIZE_ORDER[k]`, whose basis character sums
/// are trope-pair sets or their complements in `universe`. Returns the first
/// solution in lexicographic order, or all of them when `all` is set.
pub fn partition_search(
    t: &TropeTable,
    universe: NodeSet,
    sizes: [usize; 7],
    all: bool,
) -> Result<Vec<PartitionSolution>, CoverError> {
    let sum: usize = sizes.iter().sum();
    if sum != universe.len() {
        return Err(CoverError::SizeMismatch {
            sum,
            universe: universe.len(),
        });
    }
    let universe_cert = gf2_certify(universe, t).ok();
    let mut candidates: Vec<(NodeSet, DivisibilityCertificate)> = vec![(
        NodeSet::EMPTY,
        DivisibilityCertificate {
            target: NodeSet::EMPTY,
            pairs: Vec::new(),
        },
    )];
    for (a, b) in t.pairs() {
        let s = trope_pair_set(t, a, b)?;
        if s.is_subset(universe) {
            candidates.push((
                s,
                DivisibilityCertificate {
                    target: s,
                    pairs: vec![(a, b)],
                },
            ));
            if let Some(u) = &universe_cert {
                let mut pairs = vec![(a, b)];
                for p in &u.pairs {
                    if let Some(k) = pairs.iter().position(|q| q == p) {
                        pairs.remove(k);
                    } else {
                        pairs.push(*p);
                    }
                }
                candidates.push((
                    universe.difference(s),
                    DivisibilityCertificate {
                        target: universe.difference(s),
                        pairs,
                    },
                ));
            }
        }
    }
    let mut size_of = [0usize; 8];
    for (k, &s) in SIZE_ORDER.iter().enumerate() {
        size_of[s as usize] = sizes[k];
    }
    let needed = |chi: u8| -> usize { (1..8u8).filter(|&s| pairing(chi, s)).map(|s| size_of[s as usize]).sum() };
    let pick = |chi: u8| -> Vec<usize> {
        (0..candidates.len())
            .filter(|&k| candidates[k].0.len() == needed(chi))
            .collect()
    };
    let (ca, cb, cc) = (pick(0b001), pick(0b010), pick(0b100));
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &i in &ca {
        for &j in &cb {
            for &k in &cc {
                let sets = [candidates[i].0, candidates[j].0, candidates[k].0];
                if !seen.insert(sets) {
                    continue;
                }
                let Some(b) = assignment_from_sums(universe, sets, &size_of) else {
                    continue;
                };
                if !universe.is_empty() && !b.generates_group() {
                    continue;
                }
                out.push(PartitionSolution {
                    assignment: b,
                    certificates: [candidates[i].1.clone(), candidates[j].1.clone(), candidates[k].1.clone()],
                });
                if !all {
                    return Ok(out);
                }
            }
        }
    }
    if out.is_empty() {
        Err(CoverError::NoPartition)
    } else {
        Ok(out)
    }
}

/// A node lies in the sum of the `i`-th basis character iff bit `i` of its
/// group element is set.
fn assignment_from_sums(universe: NodeSet, sets: [NodeSet; 3], size_of: &[usize; 8]) -> Option<BranchAssignment> {
    let mut parts = [NodeSet::EMPTY; 8];
    for n in universe.nodes() {
        let s = (0..3).fold(0u8, |acc, i| acc | (sets[i].contains(n) as u8) << i);
        if s == 0 {
            return None;
        }
        parts[s as usize].insert(n).ok()?;
    }
    if (1..8).any(|s| parts[s].len() != size_of[s]) {
        return None;
    }
    let list: Vec<(u8, NodeSet)> = (1..8u8).map(|s| (s, parts[s as usize])).collect();
    BranchAssignment::new(3, &list).ok()
}

/// Per-character data entering the holomorphic Euler characteristic of a
/// cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharClassData {
    pub chi: u8,
    pub nodes: usize,
    pub l_squared: Rational64,
    pub k_dot_l: Rational64,
    pub h0: u64,
}

/// Data for a cover branched only over nodes: `L² = -n/2`, `K·L = 0`.
/// `h0[chi - 1]` is `h⁰(K + L_χ)`.
pub fn nodal_char_data(b: &BranchAssignment, h0: &[u64]) -> Result<Vec<CharClassData>, CoverError> {
    (1..b.order())
        .map(|c| {
            let chi = c as u8;
            let n = b.char_set(chi)?.len();
            Ok(CharClassData {
                chi,
                nodes: n,
                l_squared: Rational64::new(-(n as i64), 2),
                k_dot_l: Rational64::from_integer(0),
                h0: *h0.get(c - 1).ok_or(CoverError::MissingCharacter(chi))?,
            })
        })
        .collect()
}

/// `2^r χ(X) + ½ Σ (L_χ² + K·L_χ)`.
pub fn chi_cover(r: u32, chi_x: Rational64, data: &[CharClassData]) -> Result<Rational64, CoverError> {
    if r > MAX_RANK {
        return Err(CoverError::RankTooLarge(r));
    }
    let mut sum = Rational64::from_integer(0);
    for c in 1..(1u16 << r) {
        let d = data
            .iter()
            .find(|d| d.chi as u16 == c)
            .ok_or(CoverError::MissingCharacter(c as u8))?;
        sum += d.l_squared + d.k_dot_l;
    }
    Ok(Rational64::from_integer(1 << r) * chi_x + sum / 2)
}

/// `p_g(X) + Σ h⁰(K + L_χ)`.
pub fn pg_cover(pg_x: i64, h0s: &[i64]) -> Result<i64, CoverError> {
    if let Some(&h) = h0s.iter().find(|&&h| h < 0) {
        return Err(CoverError::NegativeH0(h));
    }
    Ok(pg_x + h0s.iter().sum::<i64>())
}

/// `2^r (χ(X) - m/8)` for a cover branched over `m` nodes.
pub fn chi_nodal(r: u32, chi_x: Rational64, m: usize) -> Rational64 {
    Rational64::from_integer(1 << r) * (chi_x - Rational64::new(m as i64, 8))
}

pub fn ksq_cover(r: u32, k2_x: i64) -> i64 {
    (1 << r) * k2_x
}

/// The cover factors the canonical map iff it does not add sections.
pub fn canonical_factors(pg_cover: i64, pg_base: i64) -> bool {
    pg_cover == pg_base
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub chi: Rational64,
    pub pg: i64,
    pub q: Rational64,
    pub k2: i64,
}

impl SurfaceInvariants {
    pub fn new(chi: Rational64, pg: i64, k2: i64) -> Self {
        SurfaceInvariants {
            chi,
            pg,
            q: Rational64::from_integer(pg) - chi + 1,
            k2,
        }
    }
}

/// The elements of the subgroup generated by `gens`.
pub fn span(gens: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8];
    for &g in gens {
        if out.contains(&g) {
            continue;
        }
        let more: Vec<u8> = out.iter().map(|&x| x ^ g).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out
}

/// All subgroups of `(Z/2)^r`, each sorted, smallest first.
pub fn subgroups(r: u32) -> Vec<Vec<u8>> {
    let mut found: Vec<Vec<u8>> = Vec::new();
    let mut frontier = vec![vec![0u8]];
    while let Some(h) = frontier.pop() {
        if found.contains(&h) {
            continue;
        }
        for g in 1..(1u16 << r) {
            let g = g as u8;
            if !h.contains(&g) {
                let mut gens = h.clone();
                gens.push(g);
                frontier.push(span(&gens));
            }
        }
        found.push(h);
    }
    found.sort_by_key(|h| (h.len(), h.clone()));
    found
}

/// Invariants of `Y/H` for the cover `Y → X` with branch data `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    /// Nodes of `X` over which `Y/H → X` branches.
    pub branch_nodes: usize,
    /// Nodes of `Y/H`.
    pub node_count: usize,
    pub chi: Rational64,
    /// Present when `h⁰(K + L_χ)` data was supplied.
    pub pg: Option<i64>,
}

pub fn quotient_data(
    b: &BranchAssignment,
    h: &[u8],
    chi_x: Rational64,
    pg: Option<(i64, &[CharClassData])>,
) -> Result<QuotientData, CoverError> {
    let mut h_sorted = h.to_vec();
    h_sorted.sort_unstable();
    h_sorted.dedup();
    if !h_sorted.contains(&0)
        || h_sorted.iter().any(|&x| (b.rank < 8 && x >> b.rank != 0) || h_sorted.iter().any(|&y| !h_sorted.contains(&(x ^ y))))
    {
        return Err(CoverError::NotSubgroup);
    }
    let support = b.support();
    let in_h = support
        .nodes()
        .filter(|&n| h_sorted.contains(&b.element_of(n)))
        .count();
    let m = support.len() - in_h;
    let index = b.order() / h_sorted.len();
    let r_quot = index.trailing_zeros();
    let pg = match pg {
        None => None,
        Some((pg_x, data)) => {
            let mut total = pg_x;
            for c in 1..b.order() {
                let chi = c as u8;
                if h_sorted.iter().all(|&s| !pairing(chi, s)) {
                    let d = data
                        .iter()
                        .find(|d| d.chi == chi)
                        .ok_or(CoverError::MissingCharacter(chi))?;
                    total += d.h0 as i64;
                }
            }
            Some(total)
        }
    };
    Ok(QuotientData {
        branch_nodes: m,
        node_count: index * in_h,
        chi: chi_nodal(r_quot, chi_x, m),
        pg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn toy() -> BranchAssignment {
        let sizes = [4, 4, 4, 4, 8, 8, 8];
        let mut parts = Vec::new();
        let mut next = 1;
        for (k, &s) in SIZE_ORDER.iter().enumerate() {
            parts.push((s, NodeSet::from_nodes(next..next + sizes[k]).unwrap()));
            next += sizes[k];
        }
        BranchAssignment::new(3, &parts).unwrap()
    }

    #[test]
    fn element_names() {
        assert_eq!(element_name(0b101), "ac");
        assert_eq!(parse_element("abc"), Some(7));
        assert_eq!(parse_element("e"), Some(0));
        assert_eq!(parse_element("aa"), None);
        assert_eq!(chi_bits(&[1, 0, 0]), 0b001);
    }

    #[test]
    fn character_sets() {
        let b = toy();
        assert_eq!(b.char_set(0b001).unwrap().len(), 24);
        assert_eq!(b.char_set(0b111).unwrap(), b.part(1).union(b.part(2)).union(b.part(4)).union(b.part(7)));
        assert_eq!(b.char_set(0).unwrap_err(), CoverError::TrivialCharacter);
        assert!(b.generates_group());
        let single = BranchAssignment::new(1, &[(1, NodeSet::from_nodes([3, 5]).unwrap())]).unwrap();
        assert_eq!(single.char_set(1).unwrap(), NodeSet::from_nodes([3, 5]).unwrap());
    }

    #[test]
    fn overlap_rejected() {
        let s = NodeSet::from_nodes([1]).unwrap();
        assert_eq!(BranchAssignment::new(2, &[(1, s), (2, s)]).unwrap_err(), CoverError::Overlap(1));
    }

    #[test]
    fn numerology() {
        let b = toy();
        let data = nodal_char_data(&b, &[0, 0, 0, 0, 0, 0, 2]).unwrap();
        assert_eq!(chi_cover(3, r(6), &data).unwrap(), r(8));
        assert_eq!(chi_nodal(3, r(6), 40), r(8));
        assert_eq!(chi_nodal(2, r(6), 36), r(6));
        assert_eq!(chi_cover(0, r(6), &[]).unwrap(), r(6));
        assert_eq!(pg_cover(5, &[2, 0, 0, 0, 0, 0, 0]).unwrap(), 7);
        assert_eq!(pg_cover(4, &[]).unwrap(), 4);
        assert_eq!(pg_cover(4, &[-1]).unwrap_err(), CoverError::NegativeH0(-1));
        assert_eq!(ksq_cover(3, 8), 64);
        assert_eq!(ksq_cover(2, 8), 32);
        assert!(canonical_factors(5, 5));
        assert!(!canonical_factors(7, 5));
        assert_eq!(SurfaceInvariants::new(r(8), 7, 64).q, r(0));
        assert_eq!(chi_cover(1, r(6), &[]).unwrap_err(), CoverError::MissingCharacter(1));
    }

    #[test]
    fn quotients() {
        let b = toy();
        let c = quotient_data(&b, &span(&[0b100]), r(6), None).unwrap();
        assert_eq!((c.branch_nodes, c.node_count, c.chi), (36, 16, r(6)));
        let abac = quotient_data(&b, &span(&[0b011, 0b101]), r(6), None).unwrap();
        assert_eq!((abac.branch_nodes, abac.node_count, abac.chi), (16, 48, r(8)));
        let full = quotient_data(&b, &span(&[1, 2, 4]), r(6), None).unwrap();
        assert_eq!((full.branch_nodes, full.node_count, full.chi), (0, 40, r(6)));
        let triv = quotient_data(&b, &[0], r(6), None).unwrap();
        assert_eq!((triv.branch_nodes, triv.node_count, triv.chi), (40, 0, r(8)));
        assert_eq!(quotient_data(&b, &[0, 1, 2], r(6), None).unwrap_err(), CoverError::NotSubgroup);
        assert_eq!(subgroups(3).len(), 16);
    }

    #[test]
    fn certificates_and_search_on_small_table() {
        let t = TropeTable::new(vec![
            (1, NodeSet::from_nodes(1..=12).unwrap()),
            (2, NodeSet::from_nodes(7..=18).unwrap()),
        ])
        .unwrap();
        assert_eq!(trope_pair_set(&t, 1, 1).unwrap(), NodeSet::EMPTY);
        let s = trope_pair_set(&t, 1, 2).unwrap();
        assert_eq!(s.len(), 12);
        let cert = gf2_certify(s, &t).unwrap();
        assert!(cert.is_valid(&t));
        assert!(gf2_certify(NodeSet::EMPTY, &t).unwrap().pairs.is_empty());
        assert_eq!(
            gf2_certify(NodeSet::from_nodes([1]).unwrap(), &t).unwrap_err(),
            CoverError::OutsideSpan { rank: 1 }
        );
        assert_eq!(trope_pair_set(&t, 1, 3).unwrap_err(), CoverError::UnknownTrope(3));
        let empty = partition_search(&t, NodeSet::EMPTY, [0; 7], false).unwrap();
        assert_eq!(empty[0].assignment.support(), NodeSet::EMPTY);
        assert_eq!(
            partition_search(&t, NodeSet::full(4), [0; 7], false).unwrap_err(),
            CoverError::SizeMismatch { sum: 0, universe: 4 }
        );
    }
}
