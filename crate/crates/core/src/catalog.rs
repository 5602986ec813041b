//! The fixed family of small graded rings every property is checked on.

use crate::error::Result;
use crate::graded::GradedRing;
use crate::ring::FiniteRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogRecipe {
    /// `Z/n[i]`, `i² = -1`.
    Gaussian(u32),
    /// `Z/n[x]/(x² - alpha)`.
    Quadratic { n: u32, alpha: u16 },
    /// `Z/n ⋉ Z/m`.
    TrivialExtension { n: u32, m: u32 },
    /// `Z/n[x]/(x^k)` graded by parity of degree.
    Truncated { n: u32, k: usize },
    /// `Z/n` with `R1 = 0`.
    Trivial(u32),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: CatalogRecipe,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<GradedRing> {
        match self.recipe {
            CatalogRecipe::Gaussian(n) => GradedRing::gaussian(n),
            CatalogRecipe::Quadratic { n, alpha } => {
                let a = FiniteRing::zmod(n)?;
                GradedRing::quadratic_extension(&a, a.element(alpha)?)
            }
            CatalogRecipe::TrivialExtension { n, m } => GradedRing::trivial_extension(&FiniteRing::zmod(n)?, &[m]),
            CatalogRecipe::Truncated { n, k } => GradedRing::truncated_poly(&FiniteRing::zmod(n)?, k),
            CatalogRecipe::Trivial(n) => GradedRing::trivial(&FiniteRing::zmod(n)?),
        }
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, recipe| out.push(CatalogEntry { name, recipe });
    for n in [2, 3, 4, 5, 9, 10, 12] {
        push(format!("gaussian-{n}"), CatalogRecipe::Gaussian(n));
    }
    for n in 2..=5u32 {
        for alpha in 0..n as u16 {
            push(format!("quadratic-{n}-alpha-{alpha}"), CatalogRecipe::Quadratic { n, alpha });
        }
    }
    for (n, m) in [(2, 2), (3, 3), (4, 2), (4, 4)] {
        push(format!("trivial-extension-{n}-by-{m}"), CatalogRecipe::TrivialExtension { n, m });
    }
    for n in [2, 4] {
        for k in 1..=3 {
            push(format!("truncated-{n}-degree-{k}"), CatalogRecipe::Truncated { n, k });
        }
    }
    for n in [4, 6, 12] {
        push(format!("zmod-{n}-trivial"), CatalogRecipe::Trivial(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_with_a_unique_name() {
        let entries = catalog();
        assert_eq!(entries.len(), 34);
        let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), entries.len());
        for e in &entries {
            let g = e.build().unwrap();
            assert!(g.ring().verify_axioms().is_ok(), "{}", e.name);
        }
    }
}
