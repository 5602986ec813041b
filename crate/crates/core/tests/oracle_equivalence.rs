mod common;

use std::collections::BTreeSet;

use common::{codes, Oracle, Set};
use gradspec::ring::enumerate_ideals as enumerate_ideals_flat;
use gradspec::{catalog, RadicalMethod, SpecMethod};

fn sets<'a>(it: impl Iterator<Item = &'a gradspec::ElemSet>) -> BTreeSet<Set> {
    it.map(codes).collect()
}

#[test]
fn graded_ideals_match_oracle() {
    for entry in catalog() {
        let g = entry.build().unwrap();
        let oracle = Oracle::new(&g);
        let expected = oracle.graded_ideals();
        let pairs = g.enumerate_graded_ideals().unwrap();
        assert_eq!(sets(pairs.iter().map(|j| j.members())), expected, "{}", entry.name);
        assert_eq!(pairs.len(), expected.len(), "{}: duplicate pairs", entry.name);
        let filtered = g.graded_ideals_by_definition().unwrap();
        assert_eq!(sets(filtered.iter()), expected, "{}", entry.name);
    }
}

#[test]
fn graded_primes_match_oracle() {
    for entry in catalog() {
        let g = entry.build().unwrap();
        let expected = Oracle::new(&g).graded_primes();
        for m in [SpecMethod::Definitional, SpecMethod::Constructive] {
            let rep = g.graded_spec(m).unwrap();
            assert_eq!(sets(rep.graded_points.iter().map(|q| q.members())), expected, "{} {m:?}", entry.name);
        }
    }
}

#[test]
fn graded_maximals_match_oracle() {
    for entry in catalog() {
        let g = entry.build().unwrap();
        let expected = Oracle::new(&g).graded_maximals();
        for m in [SpecMethod::Definitional, SpecMethod::Constructive] {
            let got = g.graded_max(m).unwrap();
            assert_eq!(sets(got.iter().map(|j| j.members())), expected, "{} {m:?}", entry.name);
        }
    }
}

#[test]
fn graded_radicals_match_oracle() {
    for entry in catalog() {
        let g = entry.build().unwrap();
        if g.ring().order() > 64 {
            continue;
        }
        let oracle = Oracle::new(&g);
        for j in g.enumerate_graded_ideals().unwrap() {
            let expected = oracle.graded_radical(&codes(j.members()));
            for m in [RadicalMethod::Definitional, RadicalMethod::Intersection, RadicalMethod::Formula] {
                let got = g.graded_radical(&j, m).unwrap();
                assert_eq!(codes(got.members()), expected, "{} {m:?} J = {:?}", entry.name, j);
            }
        }
    }
}

#[test]
fn flat_ideals_and_primes_match_oracle() {
    for entry in catalog() {
        let g = entry.build().unwrap();
        if g.ring().order() > 64 {
            continue;
        }
        let oracle = Oracle::new(&g);
        let expected = oracle.ideals();
        let ideals = enumerate_ideals_flat(g.ring()).unwrap();
        assert_eq!(sets(ideals.iter().map(|i| i.members())), expected, "{}", entry.name);
        let primes: BTreeSet<Set> = expected.iter().filter(|j| oracle.is_prime(j)).cloned().collect();
        let got = gradspec::ring::spec(g.ring()).unwrap();
        assert_eq!(sets(got.iter().map(|i| i.members())), primes, "{}", entry.name);
    }
}
