//! Brute-force reference computations that only use the ring tables and the
//! two homogeneous parts, never the library's ideal machinery.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gradspec::{Elem, GradedRing};

pub type Set = BTreeSet<u16>;

pub struct Oracle {
    pub n: usize,
    add: Vec<Vec<u16>>,
    mul: Vec<Vec<u16>>,
    pub r0: Set,
    pub r1: Set,
    part0: Vec<u16>,
    part1: Vec<u16>,
}

impl Oracle {
    pub fn new(g: &GradedRing) -> Oracle {
        let r = g.ring();
        let n = r.order();
        let codes = || (0..n as u16).map(Elem);
        let add = codes().map(|a| codes().map(|b| r.add(a, b).0).collect()).collect();
        let mul = codes().map(|a| codes().map(|b| r.mul(a, b).0).collect()).collect();
        let r0: Set = g.r0().codes().into_iter().collect();
        let r1: Set = g.r1().codes().into_iter().collect();
        // split each element as a + b over R0 × R1 by search
        let mut part0 = vec![u16::MAX; n];
        let mut part1 = vec![u16::MAX; n];
        for &a in &r0 {
            for &b in &r1 {
                let s: u16 = r.add(Elem(a), Elem(b)).0;
                part0[s as usize] = a;
                part1[s as usize] = b;
            }
        }
        Oracle { n, add, mul, r0, r1, part0, part1 }
    }

    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize][b as usize]
    }

    pub fn one(&self) -> u16 {
        (0..self.n as u16).find(|&e| (0..self.n as u16).all(|x| self.mul(e, x) == x)).unwrap()
    }

    pub fn homogeneous(&self) -> Set {
        self.r0.union(&self.r1).copied().collect()
    }

    pub fn parts(&self, x: u16) -> (u16, u16) {
        (self.part0[x as usize], self.part1[x as usize])
    }

    /// Additive closure of `{r·g}` over all ring elements `r` and seeds `g`.
    pub fn ideal(&self, seeds: &[u16]) -> Set {
        let mut set: Set = [0].into();
        for &g in seeds {
            for r in 0..self.n as u16 {
                set.insert(self.mul(r, g));
            }
        }
        loop {
            let sums: Vec<u16> =
                set.iter().flat_map(|&a| set.iter().map(move |&b| (a, b))).map(|(a, b)| self.add(a, b)).collect();
            let before = set.len();
            set.extend(sums);
            if set.len() == before {
                return set;
            }
        }
    }

    /// Every graded ideal: sums of principal ideals of homogeneous elements,
    /// closed under pairwise sums.
    pub fn graded_ideals(&self) -> BTreeSet<Set> {
        let mut all: BTreeSet<Set> = self.homogeneous().iter().map(|&h| self.ideal(&[h])).collect();
        all.insert([0].into());
        loop {
            let list: Vec<Set> = all.iter().cloned().collect();
            let mut grew = false;
            for a in &list {
                for b in &list {
                    let seeds: Vec<u16> = a.union(b).copied().collect();
                    if all.insert(self.ideal(&seeds)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return all;
            }
        }
    }

    /// Every ideal of the flat ring, by the same sum closure over all
    /// principal ideals.
    pub fn ideals(&self) -> BTreeSet<Set> {
        let mut all: BTreeSet<Set> = (0..self.n as u16).map(|h| self.ideal(&[h])).collect();
        loop {
            let list: Vec<Set> = all.iter().cloned().collect();
            let mut grew = false;
            for a in &list {
                for b in &list {
                    let seeds: Vec<u16> = a.union(b).copied().collect();
                    if all.insert(self.ideal(&seeds)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return all;
            }
        }
    }

    pub fn is_proper(&self, j: &Set) -> bool {
        !j.contains(&self.one())
    }

    pub fn is_graded_prime(&self, j: &Set) -> bool {
        let h = self.homogeneous();
        self.is_proper(j)
            && h.iter().all(|&a| h.iter().all(|&b| !j.contains(&self.mul(a, b)) || j.contains(&a) || j.contains(&b)))
    }

    pub fn is_prime(&self, j: &Set) -> bool {
        let all = 0..self.n as u16;
        self.is_proper(j)
            && all
                .clone()
                .all(|a| all.clone().all(|b| !j.contains(&self.mul(a, b)) || j.contains(&a) || j.contains(&b)))
    }

    pub fn graded_primes(&self) -> BTreeSet<Set> {
        self.graded_ideals().into_iter().filter(|j| self.is_graded_prime(j)).collect()
    }

    pub fn graded_maximals(&self) -> BTreeSet<Set> {
        let all = self.graded_ideals();
        let proper: Vec<&Set> = all.iter().filter(|j| self.is_proper(j)).collect();
        proper
            .iter()
            .filter(|j| !proper.iter().any(|k| k.len() > j.len() && j.is_subset(k)))
            .map(|j| (*j).clone())
            .collect()
    }

    pub fn radical(&self, j: &Set) -> Set {
        (0..self.n as u16)
            .filter(|&x| {
                let mut p = x;
                for _ in 0..=self.n {
                    if j.contains(&p) {
                        return true;
                    }
                    p = self.mul(p, x);
                }
                false
            })
            .collect()
    }

    /// Elements whose two components both lie in `√J`.
    pub fn graded_radical(&self, j: &Set) -> Set {
        let rad = self.radical(j);
        (0..self.n as u16)
            .filter(|&x| {
                let (a, b) = self.parts(x);
                rad.contains(&a) && rad.contains(&b)
            })
            .collect()
    }
}

pub fn codes(set: &gradspec::ElemSet) -> Set {
    set.codes().into_iter().collect()
}
