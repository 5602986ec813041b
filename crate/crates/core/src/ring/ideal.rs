//! Ideals of a finite ring: generation, enumeration, classification, radicals
//! and the (ungraded) prime spectrum.

use std::collections::HashSet;
use std::fmt;

use super::{Elem, FiniteRing, RingElement};
use crate::error::{Error, Result};
use crate::set::ElemSet;

/// An ideal stored as its full member set plus a generating list.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    members: ElemSet,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.ring.render_set(&self.members))
    }
}

/// Result of [`Ideal::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealClass {
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_radical: bool,
}

impl Ideal {
    /// Smallest ideal containing `gens`, by fixed-point closure under addition
    /// and multiplication by ring elements.
    pub fn generate(ring: &FiniteRing, gens: &[RingElement]) -> Result<Ideal> {
        let gens = gens.iter().map(|&g| ring.check(g)).collect::<Result<Vec<_>>>()?;
        Ok(Self::generated_by(ring, &gens))
    }

    pub(crate) fn generated_by(ring: &FiniteRing, gens: &[Elem]) -> Ideal {
        let members = close_ideal(ring, gens.iter().copied());
        Ideal { ring: ring.clone(), members, generators: gens.to_vec() }
    }

    /// Validates `members` as an ideal; generators are chosen greedily in
    /// ascending code order.
    pub fn from_members(ring: &FiniteRing, members: ElemSet) -> Result<Ideal> {
        if members.universe() != ring.order() {
            return Err(Error::RingMismatch);
        }
        if let Some(reason) = ideal_violation(ring, &members) {
            return Err(Error::InvalidInput(format!("not an ideal: {reason}")));
        }
        Ok(Self::trusted(ring, members))
    }

    /// Wraps a set already known to be an ideal.
    pub(crate) fn trusted(ring: &FiniteRing, members: ElemSet) -> Ideal {
        let generators = greedy_generators(ring, &members);
        Ideal { ring: ring.clone(), members, generators }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal { ring: ring.clone(), members: ElemSet::from_elems(ring.order(), [ring.zero()]), generators: vec![] }
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal { ring: ring.clone(), members: ring.all(), generators: vec![ring.one()] }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    fn ensure_ring(&self, ring: &FiniteRing) -> Result<()> {
        if !self.ring.same_ring(ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// A pair `(r, s)` with `rs` in the ideal but neither factor in it.
    pub fn prime_witness(&self) -> Option<(Elem, Elem)> {
        let r = &self.ring;
        r.elements()
            .filter(|&a| !self.contains(a))
            .flat_map(|a| r.elements().filter(move |&b| b >= a).map(move |b| (a, b)))
            .find(|&(a, b)| !self.contains(b) && self.contains(r.mul(a, b)))
    }

    /// Proper and no violating pair in an exhaustive scan.
    pub fn is_prime(&self) -> bool {
        self.is_proper() && self.prime_witness().is_none()
    }

    /// Proper and no ideal of `ideals` lies strictly between it and the ring.
    pub(crate) fn is_maximal_among(&self, ideals: &[Ideal]) -> bool {
        self.is_proper()
            && !ideals.iter().any(|j| j.is_proper() && j.len() > self.len() && self.members.is_subset(&j.members))
    }

    pub fn classify(&self, ring: &FiniteRing) -> Result<IdealClass> {
        self.ensure_ring(ring)?;
        let ideals = enumerate_ideals(ring)?;
        Ok(IdealClass {
            is_proper: self.is_proper(),
            is_prime: self.is_prime(),
            is_maximal: self.is_maximal_among(&ideals),
            is_radical: radical_set(ring, &self.members) == self.members,
        })
    }

    /// `{x : x^k ∈ I for some k ≤ |R|}`.
    pub fn radical(&self, ring: &FiniteRing) -> Result<Ideal> {
        self.ensure_ring(ring)?;
        Ok(Ideal::trusted(ring, radical_set(ring, &self.members)))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ensure_ring(&other.ring)?;
        Ok(Ideal::trusted(&self.ring, self.members.intersection(&other.members)))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

pub(crate) fn close_ideal(ring: &FiniteRing, seed: impl IntoIterator<Item = Elem>) -> ElemSet {
    let mut members = ElemSet::from_elems(ring.order(), [ring.zero()]);
    let mut work: Vec<Elem> = vec![ring.zero()];
    for g in seed {
        if members.insert(g) {
            work.push(g);
        }
    }
    while let Some(x) = work.pop() {
        for r in ring.elements() {
            let y = ring.mul(r, x);
            if members.insert(y) {
                work.push(y);
            }
        }
        let current: Vec<Elem> = members.iter().collect();
        for m in current {
            let y = ring.add(x, m);
            if members.insert(y) {
                work.push(y);
            }
        }
    }
    members
}

pub(crate) fn ideal_violation(ring: &FiniteRing, members: &ElemSet) -> Option<String> {
    if !members.contains(ring.zero()) {
        return Some("does not contain 0".into());
    }
    for a in members.iter() {
        for b in members.iter() {
            if !members.contains(ring.add(a, b)) {
                return Some(format!("{} + {} leaves the set", ring.render(a), ring.render(b)));
            }
        }
        for r in ring.elements() {
            if !members.contains(ring.mul(r, a)) {
                return Some(format!("({}) * ({}) leaves the set", ring.render(r), ring.render(a)));
            }
        }
    }
    None
}

fn greedy_generators(ring: &FiniteRing, members: &ElemSet) -> Vec<Elem> {
    let mut span = ElemSet::from_elems(ring.order(), [ring.zero()]);
    let mut gens = Vec::new();
    for x in members.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = extend_by(ring, &span, x);
        }
    }
    gens
}

/// `I + Rx` for an ideal `I`.
pub(crate) fn extend_by(ring: &FiniteRing, ideal: &ElemSet, x: Elem) -> ElemSet {
    let principal: ElemSet = ElemSet::from_elems(ring.order(), ring.elements().map(|r| ring.mul(r, x)));
    let mut out = ElemSet::empty(ring.order());
    for i in ideal.iter() {
        for p in principal.iter() {
            out.insert(ring.add(i, p));
        }
    }
    out
}

pub(crate) fn radical_set(ring: &FiniteRing, ideal: &ElemSet) -> ElemSet {
    let n = ring.order();
    ElemSet::from_elems(
        n,
        ring.elements().filter(|&x| {
            let mut p = x;
            for _ in 0..n {
                if ideal.contains(p) {
                    return true;
                }
                p = ring.mul(p, x);
            }
            false
        }),
    )
}

/// Breadth-first closure over the ideal lattice: starting from `(0)`, extend
/// each known ideal by one outside element and re-close. Sorted canonically.
pub fn enumerate_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    ring.ensure_enumerable("ring")?;
    let sets = enumerate_closures(
        ring.order(),
        ring.zero(),
        &ring.elements().collect::<Vec<_>>(),
        |set, x| extend_by(ring, set, x),
        |a, b| ring.add(a, b),
    );
    Ok(sets.into_iter().map(|s| Ideal::trusted(ring, s)).collect())
}

/// Shared lattice walk for ideals and submodules. `candidates` are the
/// elements that may be adjoined; `extend(set, x)` must return the smallest
/// closed set containing `set ∪ {x}`.
pub(crate) fn enumerate_closures(
    universe: usize,
    zero: Elem,
    candidates: &[Elem],
    extend: impl Fn(&ElemSet, Elem) -> ElemSet,
    add: impl Fn(Elem, Elem) -> Elem,
) -> Vec<ElemSet> {
    let start = ElemSet::from_elems(universe, [zero]);
    let mut seen: HashSet<ElemSet> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            // x and x + i give the same extension, so one candidate per coset
            let mut covered = set.clone();
            for &x in candidates {
                if covered.contains(x) {
                    continue;
                }
                for i in set.iter() {
                    covered.insert(add(x, i));
                }
                let ext = extend(set, x);
                if seen.insert(ext.clone()) {
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<ElemSet> = seen.into_iter().collect();
    all.sort();
    all
}

/// Prime ideals, canonically ordered.
pub fn spec(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    Ok(enumerate_ideals(ring)?.into_iter().filter(Ideal::is_prime).collect())
}

/// Maximal ideals, canonically ordered.
pub fn max_spec(ring: &FiniteRing) -> Result<Vec<Ideal>> {
    let ideals = enumerate_ideals(ring)?;
    Ok(ideals.iter().filter(|i| i.is_maximal_among(&ideals)).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(i: &Ideal) -> Vec<u16> {
        i.members().codes()
    }

    fn gaussian(n: u32) -> FiniteRing {
        let z = FiniteRing::zmod(n).unwrap();
        FiniteRing::poly_quotient_with_var(&z, &[Elem(1), Elem(0), Elem(1)], 'i').unwrap()
    }

    #[test]
    fn generate_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let i = Ideal::generate(&z6, &[z6.element(2).unwrap()]).unwrap();
        assert_eq!(codes(&i), vec![0, 2, 4]);
        assert_eq!(codes(&Ideal::generate(&z6, &[]).unwrap()), vec![0]);

        let zi = gaussian(4);
        // 2 = code 2, 2i = code 8, 2+2i = code 10
        let i = Ideal::generate(&zi, &[zi.element(2).unwrap(), zi.element(8).unwrap()]).unwrap();
        assert_eq!(codes(&i), vec![0, 2, 8, 10]);

        let other = FiniteRing::zmod(6).unwrap();
        assert_eq!(Ideal::generate(&z6, &[other.element(1).unwrap()]), Err(Error::RingMismatch));
    }

    #[test]
    fn enumerate_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let ideals = enumerate_ideals(&z6).unwrap();
        let got: Vec<Vec<u16>> = ideals.iter().map(codes).collect();
        assert_eq!(got, vec![vec![0], vec![0, 3], vec![0, 2, 4], (0..6).collect()]);

        assert_eq!(enumerate_ideals(&FiniteRing::zmod(5).unwrap()).unwrap().len(), 2);
        let z2 = FiniteRing::zmod(2).unwrap();
        let p = FiniteRing::product(&z2, &z2).unwrap();
        assert_eq!(enumerate_ideals(&p).unwrap().len(), 4);
    }

    #[test]
    fn enumeration_respects_bound() {
        let z = FiniteRing::zmod(300).unwrap();
        match enumerate_ideals(&z) {
            Err(Error::ResourceLimit { bound, size, .. }) => assert_eq!((bound, size), (256, 300)),
            other => panic!("expected resource limit, got {other:?}"),
        }
        assert_eq!(enumerate_ideals(&z.with_bound(300)).unwrap().len(), 18);
    }

    #[test]
    fn classify_examples() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let two = Ideal::generate(&z6, &[z6.element(2).unwrap()]).unwrap();
        let c = two.classify(&z6).unwrap();
        assert!(c.is_proper && c.is_prime && c.is_maximal && c.is_radical);

        let z4 = FiniteRing::zmod(4).unwrap();
        let zero = Ideal::zero(&z4);
        assert!(!zero.classify(&z4).unwrap().is_prime);
        assert_eq!(zero.prime_witness(), Some((Elem(2), Elem(2))));

        let zi = gaussian(4);
        let i = Ideal::generate(&zi, &[zi.element(2).unwrap(), zi.element(8).unwrap()]).unwrap();
        assert!(!i.classify(&zi).unwrap().is_prime);
        // (1+i)(1-i) = (1+i)(1+3i) = 2
        let (a, b) = (Elem(1 + 4), Elem(1 + 3 * 4));
        assert_eq!(zi.mul(a, b), Elem(2));
        assert!(!i.contains(a) && !i.contains(b));

        let other = FiniteRing::zmod(6).unwrap();
        assert_eq!(two.classify(&other), Err(Error::RingMismatch));
    }

    #[test]
    fn radical_examples() {
        let z4 = FiniteRing::zmod(4).unwrap();
        assert_eq!(codes(&Ideal::zero(&z4).radical(&z4).unwrap()), vec![0, 2]);
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(codes(&Ideal::zero(&z6).radical(&z6).unwrap()), vec![0]);
        assert_eq!(Ideal::whole(&z6).radical(&z6).unwrap(), Ideal::whole(&z6));
    }

    #[test]
    fn spectra() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let got: Vec<Vec<u16>> = spec(&z6).unwrap().iter().map(codes).collect();
        assert_eq!(got, vec![vec![0, 3], vec![0, 2, 4]]);
        let z4 = FiniteRing::zmod(4).unwrap();
        let got: Vec<Vec<u16>> = spec(&z4).unwrap().iter().map(codes).collect();
        assert_eq!(got, vec![vec![0, 2]]);
        let z5 = FiniteRing::zmod(5).unwrap();
        let got: Vec<Vec<u16>> = max_spec(&z5).unwrap().iter().map(codes).collect();
        assert_eq!(got, vec![vec![0]]);
    }

    #[test]
    fn from_members_validates() {
        let z6 = FiniteRing::zmod(6).unwrap();
        let bad = ElemSet::from_elems(6, [Elem(0), Elem(2)]);
        assert!(matches!(Ideal::from_members(&z6, bad), Err(Error::InvalidInput(_))));
        let good = Ideal::from_members(&z6, ElemSet::from_elems(6, [Elem(0), Elem(3)])).unwrap();
        assert_eq!(good.generators(), &[Elem(3)]);
    }
}
