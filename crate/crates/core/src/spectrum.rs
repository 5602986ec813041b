//! Graded prime ideals, the contraction map φ(P) = P ∩ R0 and its inverse,
//! Zariski-topology checks, graded radicals and homogeneous dimension.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::{GradedRing, Submodule};
use crate::graded_ideal::GradedIdeal;
use crate::report::{all_passed, Check};
use crate::ring::ideal::{close_ideal, radical_set};
use crate::ring::{spec, Elem, Ideal};
use crate::set::ElemSet;

/// The two shapes a graded prime can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeCase {
    /// `P = p + R1` with `R1² ⊆ p`.
    ContainsR1,
    /// `P = (R' : R1) + R'` with `R'` a prime submodule and `R1³ ⊄ R'`.
    PrimeSubmodule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecMethod {
    /// Filter all graded ideals through the homogeneous pair test.
    Definitional,
    /// Map `φ⁻¹` over the primes of `R0`.
    Constructive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadicalMethod {
    Definitional,
    Intersection,
    Formula,
}

/// A classified graded prime ideal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GradedPrime {
    base: GradedIdeal,
    case: PrimeCase,
}

impl GradedPrime {
    pub fn ideal(&self) -> &GradedIdeal {
        &self.base
    }

    pub fn case(&self) -> PrimeCase {
        self.case
    }

    /// The contraction `P ∩ R0`.
    pub fn p(&self) -> &Ideal {
        self.base.i0()
    }

    pub fn members(&self) -> &ElemSet {
        self.base.members()
    }
}

/// Graded spectrum, spectrum of `R0` and the φ pairing between them.
#[derive(Clone, Debug)]
pub struct SpectrumReport {
    pub graded_points: Vec<GradedPrime>,
    pub base_points: Vec<Ideal>,
    /// `(i, j)`: φ sends `graded_points[i]` to `base_points[j]`.
    pub phi_table: Vec<(usize, usize)>,
    pub checks: Vec<Check>,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NilCaseReport {
    pub applicable: bool,
    pub checks: Vec<Check>,
}

impl NilCaseReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Agreement of the three graded-radical computations for one ideal, plus
/// measurements on the unradicalized bracket `R1[J0]`.
#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    pub checks: Vec<Check>,
    /// `{x ∈ R1 : x² ∈ J0}` is closed under the R0-action and addition.
    pub bracket_of_j0_is_submodule: bool,
    /// `√J0 + R1[J0]` (bracket taken at `J0` itself) equals `Grad(J)`.
    pub literal_formula_matches: bool,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Longest strict chains in the graded spectrum and in `Spec R0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub homogeneous: usize,
    pub base: usize,
}

impl Dimension {
    pub fn agrees(&self) -> bool {
        self.homogeneous == self.base
    }
}

impl GradedRing {
    /// A homogeneous pair `(r, s)` with `rs ∈ J`, `r, s ∉ J`.
    pub fn graded_prime_witness(&self, j: &GradedIdeal) -> Result<Option<(Elem, Elem)>> {
        self.ensure_graded_ideal(j)?;
        let r = self.ring();
        let outside: Vec<Elem> = self.homogeneous().into_iter().filter(|&x| !j.contains(x)).collect();
        for (k, &a) in outside.iter().enumerate() {
            for &b in &outside[k..] {
                if j.contains(r.mul(a, b)) {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_graded_prime(&self, j: &GradedIdeal) -> Result<bool> {
        Ok(j.is_proper() && self.graded_prime_witness(j)?.is_none())
    }

    pub fn is_prime_submodule(&self, rp: &Submodule) -> Result<bool> {
        let res = self.residual(rp)?;
        if rp.members() == self.r1() {
            return Ok(false);
        }
        let r = self.ring();
        Ok(self
            .r0_ring()
            .elements()
            .filter(|&a| !res.contains(a))
            .all(|a| self.r1().iter().filter(|&m| !rp.contains(m)).all(|m| !rp.contains(r.mul(self.embed(a), m)))))
    }

    /// Tags a graded prime with its shape, verifying every condition of the
    /// shape along the way.
    pub fn classify_graded_prime(&self, q: &GradedIdeal) -> Result<GradedPrime> {
        if !self.is_graded_prime(q)? {
            return Err(Error::InvalidInput("not a graded prime ideal".into()));
        }
        let r0 = self.r0_ring();
        let p = q.i0();
        if let Some((a, b)) = p.prime_witness() {
            return Err(Error::TheoremViolation(format!(
                "P ∩ R0 is not prime: ({}) * ({}) lies in it",
                r0.render(a),
                r0.render(b)
            )));
        }
        let rp = q.r_part();
        if rp.members() == self.r1() {
            if !self.r1_squared().is_subset(p) {
                return Err(Error::TheoremViolation("R1 ⊆ P but R1² ⊄ P ∩ R0".into()));
            }
            return Ok(GradedPrime { base: q.clone(), case: PrimeCase::ContainsR1 });
        }
        if self.residual(rp)? != *p {
            return Err(Error::TheoremViolation("P ∩ R0 differs from (P ∩ R1 : R1)".into()));
        }
        if !self.is_prime_submodule(rp)? {
            return Err(Error::TheoremViolation("P ∩ R1 is not a prime submodule".into()));
        }
        if self.r1_cubed().is_subset(rp) {
            return Err(Error::TheoremViolation("R1 ⊄ P but R1³ ⊆ P ∩ R1".into()));
        }
        Ok(GradedPrime { base: q.clone(), case: PrimeCase::PrimeSubmodule })
    }

    /// `φ(P) = P ∩ R0`.
    pub fn phi(&self, prime: &GradedPrime) -> Result<Ideal> {
        self.ensure_graded_ideal(prime.ideal())?;
        let p = prime.p().clone();
        if !p.is_prime() {
            return Err(Error::TheoremViolation("φ(P) is not prime".into()));
        }
        Ok(p)
    }

    /// `(p, R1)` when `R1² ⊆ p`, otherwise `(p, {x ∈ R1 : x·R1 ⊆ p})`.
    pub fn phi_inverse(&self, p: &Ideal) -> Result<GradedPrime> {
        self.ensure_r0_ideal(p)?;
        if !p.is_prime() {
            return Err(Error::InvalidInput("φ⁻¹ needs a prime ideal of R0".into()));
        }
        let r = self.ring();
        let rp = if self.r1_squared().is_subset(p) {
            self.whole_r1()
        } else {
            let set = ElemSet::from_elems(
                r.order(),
                self.r1().iter().filter(|&x| {
                    self.r1().iter().all(|y| p.contains(self.restrict(r.mul(x, y)).expect("R1 R1 lies in R0")))
                }),
            );
            self.submodule(set)
                .map_err(|e| Error::TheoremViolation(format!("{{x : xR1 ⊆ p}} is not a submodule: {e}")))?
        };
        let q = self.graded_ideal(p, &rp).map_err(|e| Error::TheoremViolation(format!("φ⁻¹(p) is not graded: {e}")))?;
        let prime = self.classify_graded_prime(&q).map_err(|e| match e {
            Error::InvalidInput(_) => Error::TheoremViolation("φ⁻¹(p) is not graded prime".into()),
            other => other,
        })?;
        if prime.p() != p {
            return Err(Error::TheoremViolation("φ(φ⁻¹(p)) differs from p".into()));
        }
        Ok(prime)
    }

    /// Graded primes by either method, sorted by flat member set, with the φ
    /// pairing against `Spec R0`.
    pub fn graded_spec(&self, method: SpecMethod) -> Result<SpectrumReport> {
        let base_points = spec(self.r0_ring())?;
        let mut graded_points = match method {
            SpecMethod::Definitional => {
                let mut out = Vec::new();
                for j in self.enumerate_graded_ideals()? {
                    if self.is_graded_prime(&j)? {
                        out.push(self.classify_graded_prime(&j)?);
                    }
                }
                out
            }
            SpecMethod::Constructive => base_points.iter().map(|p| self.phi_inverse(p)).collect::<Result<_>>()?,
        };
        graded_points.sort();
        let mut phi_table = Vec::new();
        let mut checks = Vec::new();
        let mut stray = None;
        for (i, point) in graded_points.iter().enumerate() {
            let image = self.phi(point)?;
            match base_points.iter().position(|b| *b == image) {
                Some(j) => phi_table.push((i, j)),
                None => {
                    stray.get_or_insert_with(|| {
                        format!("φ({}) is not a listed prime", self.render_graded(point.ideal()))
                    });
                }
            }
        }
        checks.push(Check::from_witness("phi-lands-in-spec", stray));
        Ok(SpectrumReport { graded_points, base_points, phi_table, checks })
    }

    fn render_graded(&self, j: &GradedIdeal) -> String {
        self.ring().render_set(j.members())
    }

    /// Runs both spectrum methods and checks that φ is a homeomorphism:
    /// bijective, inverse to φ⁻¹, and matching closed sets both ways.
    pub fn check_homeomorphism(&self) -> Result<SpectrumReport> {
        let mut report = self.graded_spec(SpecMethod::Definitional)?;
        let constructive = self.graded_spec(SpecMethod::Constructive)?;
        let r = self.ring();
        let r0 = self.r0_ring();
        let points = &report.graded_points;
        let base = &report.base_points;
        let mut checks = Vec::new();

        let def_sets: Vec<&ElemSet> = points.iter().map(GradedPrime::members).collect();
        let con_sets: Vec<&ElemSet> = constructive.graded_points.iter().map(GradedPrime::members).collect();
        let witness = (def_sets != con_sets)
            .then(|| format!("definitional finds {} graded primes, constructive {}", def_sets.len(), con_sets.len()));
        checks.push(Check::from_witness("methods-agree", witness));

        let images: BTreeSet<usize> = report.phi_table.iter().map(|&(_, j)| j).collect();
        let witness = (report.phi_table.len() != points.len()
            || images.len() != points.len()
            || images.len() != base.len())
        .then(|| {
            format!("{} graded primes, {} primes of R0, {} distinct images", points.len(), base.len(), images.len())
        });
        checks.push(Check::from_witness("phi-bijective", witness));

        let mut witness = None;
        for p in base {
            let back = self.phi(&self.phi_inverse(p)?)?;
            if back != *p {
                witness = Some(format!("φ(φ⁻¹({})) ≠ p", r0.render_set(p.members())));
                break;
            }
        }
        if witness.is_none() {
            for point in points {
                if self.phi_inverse(&self.phi(point)?)? != *point {
                    witness = Some(format!("φ⁻¹(φ(P)) ≠ P for P = {}", self.render_graded(point.ideal())));
                    break;
                }
            }
        }
        checks.push(Check::from_witness("phi-roundtrip", witness));

        // V_G(a) ∩ points versus φ⁻¹(V(a)), as index sets into `points`
        let index_of = |q: &GradedPrime| points.iter().position(|x| x == q);
        let inverse_images: Vec<Option<usize>> =
            base.iter().map(|p| self.phi_inverse(p).ok().and_then(|q| index_of(&q))).collect();
        let witness = r0.elements().find_map(|a| {
            let graded: BTreeSet<usize> =
                points.iter().enumerate().filter(|(_, q)| q.contains_elem(self.embed(a))).map(|(i, _)| i).collect();
            let pulled: BTreeSet<Option<usize>> =
                base.iter().zip(&inverse_images).filter(|(p, _)| p.contains(a)).map(|(_, &i)| i).collect();
            let pulled: BTreeSet<usize> = pulled.into_iter().flatten().collect();
            (graded != pulled).then(|| {
                format!("a = {}: V_G(a) has {} points, φ⁻¹(V(a)) has {}", r0.render(a), graded.len(), pulled.len())
            })
        });
        checks.push(Check::from_witness("closed-sets-pull-back", witness));

        let witness = self.homogeneous().into_iter().find_map(|x| {
            let pushed: BTreeSet<&Ideal> = points.iter().filter(|q| q.contains_elem(x)).map(GradedPrime::p).collect();
            let sq = self.restrict(r.square(x)).expect("squares of homogeneous elements lie in R0");
            let expected: BTreeSet<&Ideal> = base.iter().filter(|p| p.contains(sq)).collect();
            (pushed != expected).then(|| {
                format!("r = {}: φ(V_G(r)) has {} points, V(r²) has {}", r.render(x), pushed.len(), expected.len())
            })
        });
        checks.push(Check::from_witness("closed-sets-push-forward", witness));

        let mut witness = None;
        for point in points {
            let expected = self.pair_from_bracket(point.p())?;
            if expected.as_ref() != Some(point.members()) {
                witness = Some(format!("P = {} differs from p + R1[p]", self.render_graded(point.ideal())));
                break;
            }
        }
        checks.push(Check::from_witness("prime-is-p-plus-bracket", witness));

        let sq = self.r1_squared();
        let mut witness = None;
        for p in base.iter().filter(|p| !sq.is_subset(p)) {
            if self.residual(&self.ideal_times_r1(p)?)? != *p {
                witness = Some(format!("(pR1 : R1) ≠ p for p = {}", r0.render_set(p.members())));
                break;
            }
        }
        checks.push(Check::from_witness("residual-of-p-r1", witness));

        let mut witness = None;
        for point in points {
            let p = point.p();
            let sum = close_ideal(r0, p.members().union(sq.members()).iter());
            if sum.is_full() {
                let expected = self.graded_ideal(p, &self.ideal_times_r1(p)?)?;
                if expected != *point.ideal() {
                    witness = Some(format!("R1² + p = R0 but P ≠ p + pR1 for p = {}", r0.render_set(p.members())));
                    break;
                }
            }
        }
        checks.push(Check::from_witness("comaximal-form", witness));

        if self.is_strongly_graded() {
            let mut witness = None;
            for point in points {
                let p = point.p();
                if self.graded_ideal_from_ideal(p)? != *point.ideal() {
                    witness = Some(format!("P ≠ p + pR1 for p = {}", r0.render_set(p.members())));
                    break;
                }
            }
            checks.push(Check::from_witness("strongly-graded-form", witness));
        } else {
            checks.push(Check::not_applicable("strongly-graded-form", "R1² ≠ R0"));
        }

        report.checks.extend(checks);
        Ok(report)
    }

    /// The flat set `p + R1[p]`, or `None` if the bracket is not a submodule.
    fn pair_from_bracket(&self, p: &Ideal) -> Result<Option<ElemSet>> {
        let bracket = self.r1_bracket(p)?;
        let Ok(sub) = self.submodule(bracket) else {
            return Ok(None);
        };
        Ok(self.graded_ideal(p, &sub).ok().map(|j| j.members().clone()))
    }

    /// When `R1² ⊆ √0`, graded primes and primes of `R` coincide and all
    /// have the form `(p, R1)`.
    pub fn check_nil_case(&self) -> Result<NilCaseReport> {
        let nil = radical_set(self.r0_ring(), Ideal::zero(self.r0_ring()).members());
        if !self.r1_squared().members().is_subset(&nil) {
            return Ok(NilCaseReport {
                applicable: false,
                checks: vec![Check::not_applicable("graded-primes-are-primes", "R1² ⊄ √0")],
            });
        }
        let graded = self.graded_spec(SpecMethod::Definitional)?;
        let graded_sets: Vec<&ElemSet> = graded.graded_points.iter().map(GradedPrime::members).collect();
        let flat = spec(self.ring())?;
        let flat_sets: Vec<&ElemSet> = flat.iter().map(Ideal::members).collect();
        let witness = (graded_sets != flat_sets).then(|| {
            let extra = flat.iter().find(|p| !graded_sets.contains(&p.members()));
            match extra {
                Some(p) => format!("prime {} of R is not graded prime", self.ring().render_set(p.members())),
                None => format!("{} graded primes versus {} primes", graded_sets.len(), flat_sets.len()),
            }
        });
        let mut checks = vec![Check::from_witness("graded-primes-are-primes", witness)];
        let witness = graded
            .graded_points
            .iter()
            .find(|q| q.case() != PrimeCase::ContainsR1)
            .map(|q| format!("{} does not contain R1", self.render_graded(q.ideal())));
        checks.push(Check::from_witness("primes-contain-r1", witness));
        Ok(NilCaseReport { applicable: true, checks })
    }

    /// `R1[I] = {x ∈ R1 : x² ∈ I}` as a raw set; a submodule whenever `I` is
    /// radical.
    pub fn r1_bracket(&self, i0: &Ideal) -> Result<ElemSet> {
        self.ensure_r0_ideal(i0)?;
        let r = self.ring();
        Ok(ElemSet::from_elems(
            r.order(),
            self.r1().iter().filter(|&x| i0.contains(self.restrict(r.square(x)).expect("x² lies in R0"))),
        ))
    }

    pub fn graded_radical(&self, j: &GradedIdeal, method: RadicalMethod) -> Result<GradedIdeal> {
        self.ensure_graded_ideal(j)?;
        match method {
            RadicalMethod::Definitional => {
                let r = self.ring();
                let rad = radical_set(r, j.members());
                let set = ElemSet::from_elems(
                    r.order(),
                    r.elements().filter(|&x| {
                        let (x0, x1) = self.parts(x);
                        rad.contains(x0) && rad.contains(x1)
                    }),
                );
                self.decompose(&set).map_err(|e| Error::TheoremViolation(format!("Grad(J) is not a graded ideal: {e}")))
            }
            RadicalMethod::Intersection => {
                let primes = self.graded_spec(SpecMethod::Constructive)?.graded_points;
                let mut set = self.ring().all();
                for q in primes.iter().filter(|q| j.is_subset(q.ideal())) {
                    set = set.intersection(q.members());
                }
                self.decompose(&set).map_err(|e| Error::TheoremViolation(format!("intersection of graded primes: {e}")))
            }
            RadicalMethod::Formula => {
                let rad0 = j.i0().radical(self.r0_ring())?;
                let bracket = self.r1_bracket(&rad0)?;
                let sub = self
                    .submodule(bracket)
                    .map_err(|e| Error::TheoremViolation(format!("R1[√J0] is not a submodule: {e}")))?;
                self.graded_ideal(&rad0, &sub).map_err(|e| Error::TheoremViolation(format!("√J0 + R1[√J0]: {e}")))
            }
        }
    }

    /// Compares the three radical methods on `j` and checks `J ⊆ Grad(J)`,
    /// idempotence and that the intersection over primes splits by degree.
    pub fn radical_report(&self, j: &GradedIdeal) -> Result<RadicalReport> {
        let def = self.graded_radical(j, RadicalMethod::Definitional)?;
        let int = self.graded_radical(j, RadicalMethod::Intersection)?;
        let form = self.graded_radical(j, RadicalMethod::Formula)?;
        let r = self.ring();
        let mut checks = Vec::new();
        let witness = (def != int || def != form).then(|| {
            format!(
                "J = {}: definitional {}, intersection {}, formula {}",
                self.render_graded(j),
                self.render_graded(&def),
                self.render_graded(&int),
                self.render_graded(&form)
            )
        });
        checks.push(Check::from_witness("three-way-agreement", witness));
        checks.push(Check::from_witness(
            "contains-ideal",
            (!j.is_subset(&def)).then(|| format!("J = {} ⊄ Grad(J)", self.render_graded(j))),
        ));
        let twice = self.graded_radical(&def, RadicalMethod::Definitional)?;
        checks.push(Check::from_witness(
            "idempotent",
            (twice != def).then(|| format!("Grad(Grad(J)) ≠ Grad(J) for J = {}", self.render_graded(j))),
        ));

        // ∩ (p + R1[p]) against ∩p + ∩R1[p] over primes p ⊇ J0
        let primes: Vec<Ideal> = spec(self.r0_ring())?.into_iter().filter(|p| j.i0().is_subset(p)).collect();
        let mut whole = r.all();
        let mut deg0 = self.r0_ring().all();
        let mut deg1 = self.r1().clone();
        for p in &primes {
            let bracket = self.r1_bracket(p)?;
            if let Some(flat) = self.pair_from_bracket(p)? {
                whole = whole.intersection(&flat);
            }
            deg0 = deg0.intersection(p.members());
            deg1 = deg1.intersection(&bracket);
        }
        let mut split = ElemSet::empty(r.order());
        for a in deg0.iter() {
            for x in deg1.iter() {
                split.insert(r.add(self.embed(a), x));
            }
        }
        checks.push(Check::from_witness(
            "intersection-splits",
            (split != whole).then(|| format!("over primes containing J0 of J = {}", self.render_graded(j))),
        ));

        let literal = self.r1_bracket(j.i0())?;
        let bracket_of_j0_is_submodule = self.submodule(literal.clone()).is_ok();
        let literal_formula_matches = literal == *def.r_part().members();
        Ok(RadicalReport { checks, bracket_of_j0_is_submodule, literal_formula_matches })
    }

    /// Longest strict chain lengths in the graded spectrum and in `Spec R0`.
    pub fn homogeneous_dim(&self) -> Result<Dimension> {
        let graded = self.graded_spec(SpecMethod::Constructive)?;
        let graded_sets: Vec<ElemSet> = graded.graded_points.iter().map(|q| q.members().clone()).collect();
        let base_sets: Vec<ElemSet> = graded.base_points.iter().map(|p| p.members().clone()).collect();
        Ok(Dimension { homogeneous: longest_chain(&graded_sets), base: longest_chain(&base_sets) })
    }
}

impl GradedPrime {
    fn contains_elem(&self, x: Elem) -> bool {
        self.base.contains(x)
    }
}

/// Number of strict inclusions in the longest chain; 0 for an antichain or a
/// single point.
pub(crate) fn longest_chain(sets: &[ElemSet]) -> usize {
    let mut order: Vec<&ElemSet> = sets.iter().collect();
    order.sort_by_key(|s| s.len());
    let mut depth = vec![0usize; order.len()];
    for i in 0..order.len() {
        for k in 0..i {
            if order[k].len() < order[i].len() && order[k].is_subset(order[i]) {
                depth[i] = depth[i].max(depth[k] + 1);
            }
        }
    }
    depth.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn zmod(n: u32) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    fn r0_ideal(g: &GradedRing, codes: &[u16]) -> Ideal {
        let gens: Vec<_> = codes.iter().map(|&c| g.r0_ring().element(c).unwrap()).collect();
        Ideal::generate(g.r0_ring(), &gens).unwrap()
    }

    fn set(n: usize, codes: &[u16]) -> ElemSet {
        ElemSet::from_elems(n, codes.iter().map(|&c| Elem(c)))
    }

    #[test]
    fn graded_prime_with_non_prime_flat_set() {
        let g = GradedRing::gaussian(10).unwrap();
        let j = g.graded_ideal_from_ideal(&r0_ideal(&g, &[2])).unwrap();
        assert!(g.is_graded_prime(&j).unwrap());
        let flat = Ideal::from_members(g.ring(), j.members().clone()).unwrap();
        let (a, b) = flat.prime_witness().unwrap();
        assert!(flat.contains(g.ring().mul(a, b)) && !flat.contains(a) && !flat.contains(b));
        // 3+i has code 13 and 3-i = 3+9i has code 93
        assert!(!flat.contains(Elem(13)) && !flat.contains(Elem(93)));
        assert_eq!(g.ring().mul(Elem(13), Elem(93)), g.ring().zero());
        assert!(!g.is_graded_prime(&g.whole_graded_ideal()).unwrap());

        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        let j = g_pair(&t, &[0], t.r1());
        assert!(t.is_graded_prime(&j).unwrap());
    }

    fn g_pair(g: &GradedRing, i0: &[u16], r1: &ElemSet) -> GradedIdeal {
        let i = if i0 == [0] { Ideal::zero(g.r0_ring()) } else { r0_ideal(g, i0) };
        g.graded_ideal(&i, &g.submodule(r1.clone()).unwrap()).unwrap()
    }

    #[test]
    fn prime_submodule_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        assert!(g.is_prime_submodule(&g.submodule(set(16, &[0, 8])).unwrap()).unwrap());
        assert!(!g.is_prime_submodule(&g.whole_r1()).unwrap());
        let z2i = GradedRing::gaussian(2).unwrap();
        assert!(z2i.is_prime_submodule(&z2i.zero_submodule()).unwrap());
        assert_eq!(z2i.residual(&z2i.zero_submodule()).unwrap(), Ideal::zero(z2i.r0_ring()));
    }

    #[test]
    fn classification_examples() {
        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        let q = g_pair(&t, &[0], t.r1());
        assert_eq!(t.classify_graded_prime(&q).unwrap().case(), PrimeCase::ContainsR1);

        let g = GradedRing::gaussian(4).unwrap();
        let q = g_pair(&g, &[2], &set(16, &[0, 8]));
        let prime = g.classify_graded_prime(&q).unwrap();
        assert_eq!(prime.case(), PrimeCase::PrimeSubmodule);
        assert_eq!(g.phi(&prime).unwrap().members().codes(), vec![0, 2]);

        let z2i = GradedRing::gaussian(2).unwrap();
        let prime = z2i.classify_graded_prime(&z2i.zero_graded_ideal()).unwrap();
        assert_eq!(prime.case(), PrimeCase::PrimeSubmodule);
        assert_eq!(z2i.phi(&prime).unwrap(), Ideal::zero(z2i.r0_ring()));

        assert!(matches!(g.classify_graded_prime(&g.zero_graded_ideal()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn phi_inverse_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        let q = g.phi_inverse(&r0_ideal(&g, &[2])).unwrap();
        assert_eq!(q.ideal().r_part().members().codes(), vec![0, 8]);

        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        let q = t.phi_inverse(&Ideal::zero(t.r0_ring())).unwrap();
        assert_eq!(q.ideal().r_part().members(), t.r1());

        let z5 = zmod(5);
        let f = GradedRing::quadratic_extension(&z5, z5.element(1).unwrap()).unwrap();
        let q = f.phi_inverse(&Ideal::zero(f.r0_ring())).unwrap();
        assert_eq!(q.ideal(), &f.zero_graded_ideal());

        let z6 = GradedRing::trivial(&zmod(6)).unwrap();
        let three = r0_ideal(&z6, &[3]);
        assert_eq!(z6.phi(&z6.phi_inverse(&three).unwrap()).unwrap(), three);
        assert!(matches!(z6.phi_inverse(&Ideal::zero(z6.r0_ring())), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn spectrum_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        for m in [SpecMethod::Definitional, SpecMethod::Constructive] {
            let rep = g.graded_spec(m).unwrap();
            assert_eq!(rep.graded_points.len(), 1);
            assert_eq!(rep.base_points.len(), 1);
            assert_eq!(rep.phi_table, vec![(0, 0)]);
        }
        let z5 = zmod(5);
        let f = GradedRing::quadratic_extension(&z5, z5.element(1).unwrap()).unwrap();
        assert_eq!(f.graded_spec(SpecMethod::Definitional).unwrap().graded_points.len(), 1);
        assert_eq!(spec(f.ring()).unwrap().len(), 2);
    }

    #[test]
    fn homeomorphism_examples() {
        let z2 = zmod(2);
        for g in [
            GradedRing::gaussian(4).unwrap(),
            GradedRing::gaussian(10).unwrap(),
            GradedRing::trivial(&zmod(6)).unwrap(),
            GradedRing::truncated_poly(&z2, 3).unwrap(),
            GradedRing::trivial_extension(&zmod(4), &[2]).unwrap(),
        ] {
            let rep = g.check_homeomorphism().unwrap();
            assert!(rep.passed(), "{g:?}: {:?}", rep.checks);
        }
    }

    #[test]
    fn nil_case_examples() {
        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        let rep = t.check_nil_case().unwrap();
        assert!(rep.applicable && rep.passed());
        let tp = GradedRing::truncated_poly(&zmod(4), 2).unwrap();
        let rep = tp.check_nil_case().unwrap();
        assert!(rep.applicable && rep.passed());
        assert!(!GradedRing::gaussian(4).unwrap().check_nil_case().unwrap().applicable);
    }

    #[test]
    fn bracket_examples() {
        let tp = GradedRing::truncated_poly(&zmod(4), 2).unwrap();
        assert_eq!(&tp.r1_bracket(&Ideal::zero(tp.r0_ring())).unwrap(), tp.r1());
        let g = GradedRing::gaussian(4).unwrap();
        assert_eq!(g.r1_bracket(&r0_ideal(&g, &[2])).unwrap().codes(), vec![0, 8]);
        assert_eq!(&g.r1_bracket(&Ideal::whole(g.r0_ring())).unwrap(), g.r1());
    }

    #[test]
    fn radical_examples() {
        let all = [RadicalMethod::Definitional, RadicalMethod::Intersection, RadicalMethod::Formula];
        let tp = GradedRing::truncated_poly(&zmod(4), 2).unwrap();
        for m in all {
            let rad = tp.graded_radical(&tp.zero_graded_ideal(), m).unwrap();
            assert_eq!(rad.i0().members().codes(), vec![0, 2]);
            assert_eq!(rad.r_part().members(), tp.r1());
        }
        let g = GradedRing::gaussian(4).unwrap();
        for m in all {
            let rad = g.graded_radical(&g.zero_graded_ideal(), m).unwrap();
            assert_eq!(rad.r_part().members().codes(), vec![0, 8]);
            assert_eq!(g.graded_radical(&g.whole_graded_ideal(), m).unwrap(), g.whole_graded_ideal());
        }
        assert!(g.radical_report(&g.zero_graded_ideal()).unwrap().passed());

        // x² ≠ 0 in Z/2[x]/(x³), so the bracket at J0 = 0 misses x
        let t3 = GradedRing::truncated_poly(&zmod(2), 3).unwrap();
        let rep = t3.radical_report(&t3.zero_graded_ideal()).unwrap();
        assert!(rep.passed());
        assert!(!rep.literal_formula_matches);
    }

    #[test]
    fn dimension_examples() {
        for g in [
            GradedRing::gaussian(4).unwrap(),
            GradedRing::trivial(&zmod(6)).unwrap(),
            GradedRing::trivial_extension(&zmod(2), &[2]).unwrap(),
        ] {
            assert_eq!(g.homogeneous_dim().unwrap(), Dimension { homogeneous: 0, base: 0 });
        }
    }

    #[test]
    fn chain_lengths() {
        let a = set(4, &[0]);
        let b = set(4, &[0, 1]);
        let c = set(4, &[0, 1, 2]);
        let d = set(4, &[0, 3]);
        assert_eq!(longest_chain(&[a.clone(), b.clone(), c, d.clone()]), 2);
        assert_eq!(longest_chain(&[b, d]), 0);
        assert_eq!(longest_chain(&[]), 0);
    }
}
