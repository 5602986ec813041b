//! Graded ideals as compatible pairs `(I, R')` with `I` an ideal of `R0`,
//! `R'` a submodule of `R1`, `I·R1 ⊆ R'` and `R1·R' ⊆ I`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedRing, Submodule};
use crate::report::{all_passed, Check};
use crate::ring::ideal::ideal_violation;
use crate::ring::{enumerate_ideals, Elem, Ideal};
use crate::set::ElemSet;

/// A graded ideal `J = I + R'`. Equality is pairwise; the flat member set is
/// derived.
#[derive(Clone)]
pub struct GradedIdeal {
    graded: u64,
    i0: Ideal,
    r_part: Submodule,
    flat: ElemSet,
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.graded == other.graded && self.i0 == other.i0 && self.r_part == other.r_part
    }
}

impl Eq for GradedIdeal {}

impl PartialOrd for GradedIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.flat.cmp(&other.flat)
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedIdeal({:?} + {:?})", self.i0.members(), self.r_part.members())
    }
}

impl GradedIdeal {
    /// Degree-0 part, an ideal of [`GradedRing::r0_ring`].
    pub fn i0(&self) -> &Ideal {
        &self.i0
    }

    /// Degree-1 part.
    pub fn r_part(&self) -> &Submodule {
        &self.r_part
    }

    /// Member set in the ambient ring.
    pub fn members(&self) -> &ElemSet {
        &self.flat
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.flat.contains(x)
    }

    pub fn is_proper(&self) -> bool {
        self.i0.is_proper()
    }

    pub fn is_subset(&self, other: &GradedIdeal) -> bool {
        self.flat.is_subset(&other.flat)
    }
}

/// Outcome of checking the strongly graded correspondence `I ↔ I + I·R1`.
#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub ideals_of_r0: usize,
    pub submodules: usize,
    pub graded_ideals: usize,
    pub checks: Vec<Check>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

impl GradedRing {
    /// Builds `I + R'` after checking both compatibility conditions.
    pub fn graded_ideal(&self, i0: &Ideal, r_part: &Submodule) -> Result<GradedIdeal> {
        let covered = self.ideal_times_r1(i0)?;
        let back = self.r1_times_submodule(r_part)?;
        if !covered.is_subset(r_part) {
            return Err(Error::InvalidInput("I·R1 is not contained in R'".into()));
        }
        if !back.is_subset(i0) {
            return Err(Error::InvalidInput("R1·R' is not contained in I".into()));
        }
        let gi = self.pair_unchecked(i0.clone(), r_part.clone());
        if let Some(reason) = ideal_violation(self.ring(), &gi.flat) {
            return Err(Error::TheoremViolation(format!("compatible pair is not an ideal: {reason}")));
        }
        Ok(gi)
    }

    pub(crate) fn ensure_graded_ideal(&self, j: &GradedIdeal) -> Result<()> {
        if j.graded != self.id() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn pair_unchecked(&self, i0: Ideal, r_part: Submodule) -> GradedIdeal {
        let r = self.ring();
        let mut flat = ElemSet::empty(r.order());
        for a in i0.members().iter() {
            for m in r_part.members().iter() {
                flat.insert(r.add(self.embed(a), m));
            }
        }
        GradedIdeal { graded: self.id(), i0, r_part, flat }
    }

    pub fn zero_graded_ideal(&self) -> GradedIdeal {
        self.pair_unchecked(Ideal::zero(self.r0_ring()), self.zero_submodule())
    }

    pub fn whole_graded_ideal(&self) -> GradedIdeal {
        self.pair_unchecked(Ideal::whole(self.r0_ring()), self.whole_r1())
    }

    /// True iff the ideal `members` equals `(J ∩ R0) + (J ∩ R1)`.
    pub fn is_graded_ideal(&self, members: &ElemSet) -> Result<bool> {
        Ideal::from_members(self.ring(), members.clone())?;
        Ok(members.iter().all(|x| {
            let (x0, x1) = self.parts(x);
            members.contains(x0) && members.contains(x1)
        }))
    }

    /// Splits a graded ideal into `(J ∩ R0, J ∩ R1)`.
    pub fn decompose(&self, members: &ElemSet) -> Result<GradedIdeal> {
        if !self.is_graded_ideal(members)? {
            return Err(Error::InvalidInput("ideal is not graded".into()));
        }
        let i0_set = ElemSet::from_elems(
            self.r0_ring().order(),
            members.intersection(self.r0()).iter().map(|x| self.restrict(x).expect("degree 0")),
        );
        let i0 = Ideal::from_members(self.r0_ring(), i0_set)?;
        let r_part = self.submodule(members.intersection(self.r1()))?;
        let gi = self.graded_ideal(&i0, &r_part)?;
        if gi.flat != *members {
            return Err(Error::TheoremViolation("J differs from (J ∩ R0) + (J ∩ R1)".into()));
        }
        Ok(gi)
    }

    /// `I + I·R1`.
    pub fn graded_ideal_from_ideal(&self, i: &Ideal) -> Result<GradedIdeal> {
        let rp = self.ideal_times_r1(i)?;
        self.graded_ideal(i, &rp)
    }

    /// `(R' : R1) + R'`.
    pub fn graded_ideal_from_submodule(&self, rp: &Submodule) -> Result<GradedIdeal> {
        let res = self.residual(rp)?;
        self.graded_ideal(&res, rp)
    }

    /// All compatible pairs from `ideals(R0) × submodules(R1)`, ordered by
    /// flat member set.
    pub fn enumerate_graded_ideals(&self) -> Result<Vec<GradedIdeal>> {
        let ideals = enumerate_ideals(self.r0_ring())?;
        let subs = self.submodules()?;
        let times_r1: Vec<Submodule> = ideals.iter().map(|i| self.ideal_times_r1(i)).collect::<Result<_>>()?;
        let back: Vec<Ideal> = subs.iter().map(|s| self.r1_times_submodule(s)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (i, ir1) in ideals.iter().zip(&times_r1) {
            for (s, r1s) in subs.iter().zip(&back) {
                if ir1.is_subset(s) && r1s.is_subset(i) {
                    out.push(self.pair_unchecked(i.clone(), s.clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Graded ideals found by filtering every ideal of `R` with the
    /// definition. Independent of the pair construction.
    pub fn graded_ideals_by_definition(&self) -> Result<Vec<ElemSet>> {
        let mut out = Vec::new();
        for j in enumerate_ideals(self.ring())? {
            if self.is_graded_ideal(j.members())? {
                out.push(j.members().clone());
            }
        }
        Ok(out)
    }

    /// Checks that `I ↦ I + I·R1` is a bijection onto the graded ideals with
    /// inverse `J ↦ J ∩ R0`, along with the structure of `R1` as an
    /// R0-module that makes this work.
    pub fn strongly_graded_correspondence(&self) -> Result<CorrespondenceReport> {
        if !self.is_strongly_graded() {
            return Err(Error::NotStronglyGraded);
        }
        let ideals = enumerate_ideals(self.r0_ring())?;
        let subs = self.submodules()?;
        let graded = self.enumerate_graded_ideals()?;
        let mut checks = Vec::new();

        let images: Vec<GradedIdeal> = ideals.iter().map(|i| self.graded_ideal_from_ideal(i)).collect::<Result<_>>()?;
        let image_sets: BTreeSet<&ElemSet> = images.iter().map(|g| g.members()).collect();
        let graded_sets: BTreeSet<&ElemSet> = graded.iter().map(|g| g.members()).collect();
        let witness = if image_sets.len() != images.len() {
            Some("two ideals of R0 map to the same graded ideal".to_string())
        } else if image_sets != graded_sets {
            graded
                .iter()
                .find(|g| !image_sets.contains(g.members()))
                .map(|g| format!("graded ideal {} is not of the form I + I·R1", self.ring().render_set(g.members())))
        } else {
            None
        };
        checks.push(Check::from_witness("ideal-map-bijective", witness));

        let witness = graded.iter().find_map(|j| {
            let back = self.graded_ideal_from_ideal(j.i0()).ok()?;
            (back != *j).then(|| format!("J = {} is not recovered from J ∩ R0", self.ring().render_set(j.members())))
        });
        checks.push(Check::from_witness("contraction-inverts", witness));

        let r1_parts: BTreeSet<&Submodule> = graded.iter().map(|g| g.r_part()).collect();
        let witness = (r1_parts.len() != graded.len() || r1_parts.len() != subs.len()).then(|| {
            format!("{} graded ideals, {} distinct R1-parts, {} submodules", graded.len(), r1_parts.len(), subs.len())
        });
        checks.push(Check::from_witness("submodule-map-bijective", witness));

        match self.unit_decomposition() {
            None => checks.push(Check::fail("unit-decomposition", "no sum of products of R1 elements equals 1")),
            Some(pairs) => {
                let rendered: Vec<String> =
                    pairs.iter().map(|&(a, b)| format!("{}*{}", self.render(a), self.render(b))).collect();
                checks.push(Check::pass("unit-decomposition"));
                let gens: Vec<Elem> = pairs.iter().map(|&(a, _)| a).collect();
                let span = self.span(&gens);
                let witness = (span.members() != self.r1())
                    .then(|| format!("1 = {} but the a_i span only {} elements", rendered.join(" + "), span.len()));
                checks.push(Check::from_witness("r1-finitely-generated", witness));
            }
        }

        let mut witness = None;
        for s in &subs {
            let res = self.residual(s)?;
            if self.ideal_times_r1(&res)? != *s {
                witness = Some(format!("R' = {} differs from (R':R1)·R1", self.ring().render_set(s.members())));
                break;
            }
        }
        checks.push(Check::from_witness("multiplication-module", witness));

        let times: Vec<Submodule> = ideals.iter().map(|i| self.ideal_times_r1(i)).collect::<Result<_>>()?;
        let witness = ideals.iter().zip(&times).find_map(|(i, ir)| {
            ideals.iter().zip(&times).find_map(|(j, jr)| {
                (ir.is_subset(jr) && !i.is_subset(j)).then(|| {
                    let r0 = self.r0_ring();
                    format!("I·R1 ⊆ I'·R1 but I = {} ⊄ I' = {}", r0.render_set(i.members()), r0.render_set(j.members()))
                })
            })
        });
        checks.push(Check::from_witness("ideal-cancellation", witness));

        Ok(CorrespondenceReport {
            ideals_of_r0: ideals.len(),
            submodules: subs.len(),
            graded_ideals: graded.len(),
            checks,
        })
    }
}
