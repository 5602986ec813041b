//! Graded maximal ideals, graded local rings, graded domains and fields, the
//! quadratic presentation of a graded field and the norm `x0² − x1²`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::graded_ideal::GradedIdeal;
use crate::report::{all_passed, Check};
use crate::ring::{find_isomorphism, max_spec, Elem, Ideal, RingElement};
use crate::set::ElemSet;
use crate::spectrum::SpecMethod;

/// Predicates with both a definitional scan and a structural criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredicateMethod {
    Definitional,
    Structural,
}

/// Rings up to this order get an exhaustive multiplicativity scan.
pub const EXHAUSTIVE_NORM_LIMIT: usize = 64;
pub const NORM_SAMPLES: usize = 10_000;
const NORM_SEED: u64 = 0x6e6f726d;

/// `N(x) = x0² − x1²`, an element of `R0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormValue {
    pub value: RingElement,
}

/// `R ≅ R0[X]/(X² − α)` via `c0 + c1·b ↦ c0 + c1·X`.
#[derive(Clone, Debug)]
pub struct GradedFieldPresentation {
    /// Generator of `R1` over `R0`.
    pub b: RingElement,
    /// `b²`, as an element of [`GradedRing::r0_ring`].
    pub alpha: RingElement,
    pub target: GradedRing,
    /// Image in `target` of each code of `R`.
    pub iso_table: Vec<Elem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximalReport {
    pub graded_maximals: usize,
    pub maximals_of_r0: usize,
    pub checks: Vec<Check>,
}

impl MaximalReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleReport {
    /// Submodules `R'` with `R1³ ⊄ R'`.
    pub applicable: usize,
    pub checks: Vec<Check>,
}

impl SubmoduleReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldReport {
    pub graded_domain: bool,
    pub graded_field: bool,
    pub domain: bool,
    pub field: bool,
    pub checks: Vec<Check>,
}

impl FieldReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NormReport {
    pub domain: bool,
    pub graded_domain: bool,
    /// Size of the zero set of the norm.
    pub norm_zeros: usize,
    /// Pairs examined for multiplicativity.
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub checks: Vec<Check>,
}

impl NormReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

impl GradedRing {
    /// Proper and maximal among proper graded ideals.
    pub fn is_graded_maximal(&self, j: &GradedIdeal) -> Result<bool> {
        self.ensure_graded_ideal(j)?;
        if !j.is_proper() {
            return Ok(false);
        }
        let all = self.enumerate_graded_ideals()?;
        Ok(!all.iter().any(|k| k.is_proper() && k.members().len() > j.members().len() && j.is_subset(k)))
    }

    /// Definitional: filter graded ideals. Constructive: `(p, R1)` for maximal
    /// `p ⊇ R1²` and `(p, pR1)` for the rest.
    pub fn graded_max(&self, method: SpecMethod) -> Result<Vec<GradedIdeal>> {
        let mut out = Vec::new();
        match method {
            SpecMethod::Definitional => {
                let all = self.enumerate_graded_ideals()?;
                for j in &all {
                    if j.is_proper()
                        && !all.iter().any(|k| k.is_proper() && k.members().len() > j.members().len() && j.is_subset(k))
                    {
                        out.push(j.clone());
                    }
                }
            }
            SpecMethod::Constructive => {
                let sq = self.r1_squared();
                for p in max_spec(self.r0_ring())? {
                    let rp = if sq.is_subset(&p) { self.whole_r1() } else { self.ideal_times_r1(&p)? };
                    out.push(self.graded_ideal(&p, &rp)?);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// For each submodule `R'` with `R1³ ⊄ R'`: `R'` is maximal iff its
    /// residual is a maximal ideal, and then `R' = (R' : R1)·R1`.
    pub fn maximal_submodule_check(&self) -> Result<SubmoduleReport> {
        let subs = self.submodules()?;
        let maxes = max_spec(self.r0_ring())?;
        let cube = self.r1_cubed();
        let r = self.ring();
        let mut applicable = 0;
        let mut witness = None;
        let mut product_witness = None;
        for s in subs.iter().filter(|s| !cube.is_subset(s)) {
            applicable += 1;
            let is_max = s.members() != self.r1()
                && !subs.iter().any(|t| t.members() != self.r1() && t.len() > s.len() && s.is_subset(t));
            let res = self.residual(s)?;
            let res_max = maxes.contains(&res);
            if is_max != res_max && witness.is_none() {
                witness = Some(format!(
                    "R' = {}: maximal submodule {is_max}, residual maximal {res_max}",
                    r.render_set(s.members())
                ));
            }
            if is_max && self.ideal_times_r1(&res)? != *s && product_witness.is_none() {
                product_witness = Some(format!("R' = {} differs from (R':R1)·R1", r.render_set(s.members())));
            }
        }
        let checks = if applicable == 0 {
            vec![
                Check::not_applicable("maximal-iff-residual-maximal", "R1³ lies in every submodule"),
                Check::not_applicable("maximal-is-residual-times-r1", "R1³ lies in every submodule"),
            ]
        } else {
            vec![
                Check::from_witness("maximal-iff-residual-maximal", witness),
                Check::from_witness("maximal-is-residual-times-r1", product_witness),
            ]
        };
        Ok(SubmoduleReport { applicable, checks })
    }

    /// Exactly one graded maximal ideal; cross-checked against `R0` local.
    pub fn is_graded_local(&self) -> Result<bool> {
        let graded = self.graded_max(SpecMethod::Definitional)?.len() == 1;
        let base = max_spec(self.r0_ring())?.len() == 1;
        if graded != base {
            return Err(Error::TheoremViolation(format!("graded local is {graded} but R0 local is {base}")));
        }
        Ok(graded)
    }

    /// Nonzero homogeneous `r, s` with `rs = 0`.
    pub fn homogeneous_zero_divisors(&self) -> Option<(Elem, Elem)> {
        let r = self.ring();
        let nonzero: Vec<Elem> = self.homogeneous().into_iter().filter(|&x| x != r.zero()).collect();
        nonzero
            .iter()
            .enumerate()
            .flat_map(|(k, &a)| nonzero[k..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| r.mul(a, b) == r.zero())
    }

    pub fn is_graded_domain(&self, method: PredicateMethod) -> bool {
        match method {
            PredicateMethod::Definitional => self.homogeneous_zero_divisors().is_none(),
            PredicateMethod::Structural => {
                if self.r1_is_zero() {
                    return self.r0_ring().is_domain();
                }
                let zero = self.zero_submodule();
                let prime = self.is_prime_submodule(&zero).expect("own submodule");
                let ann = self.residual(&zero).expect("own submodule");
                prime && ann == Ideal::zero(self.r0_ring()) && self.r1_cubed().len() > 1
            }
        }
    }

    pub fn is_graded_field(&self, method: PredicateMethod) -> bool {
        match method {
            PredicateMethod::Definitional => {
                let r = self.ring();
                self.homogeneous().into_iter().filter(|&x| x != r.zero()).all(|x| r.is_unit(x))
            }
            PredicateMethod::Structural => {
                self.r0_ring().is_field() && (self.r1_is_zero() || self.r1_squared().len() > 1)
            }
        }
    }

    /// `None` when `R1 = 0`. Picks the first `b ∈ R1` with `b² ≠ 0`.
    pub fn graded_field_presentation(&self) -> Result<Option<GradedFieldPresentation>> {
        if !self.is_graded_field(PredicateMethod::Definitional) {
            return Err(Error::NotGradedField);
        }
        if self.r1_is_zero() {
            return Ok(None);
        }
        let r = self.ring();
        let r0 = self.r0_ring();
        let b = self
            .r1()
            .iter()
            .find(|&x| r.square(x) != r.zero())
            .ok_or_else(|| Error::TheoremViolation("graded field with R1 ≠ 0 but R1² = 0".into()))?;
        let alpha = self.restrict(r.square(b)).expect("b² lies in R0");
        // c1 with c1·b = x for each x ∈ R1
        let mut coeff: Vec<Option<Elem>> = vec![None; r.order()];
        for c in r0.elements() {
            let x = r.mul(self.embed(c), b);
            if coeff[x.index()].replace(c).is_some() {
                return Err(Error::TheoremViolation("R0 → R0·b is not injective".into()));
            }
        }
        if let Some(x) = self.r1().iter().find(|x| coeff[x.index()].is_none()) {
            return Err(Error::TheoremViolation(format!("{} is not in R0·b", r.render(x))));
        }
        let target = GradedRing::quadratic_extension(r0, r0.tag(alpha))?;
        let t = target.ring();
        // constants keep their codes and X̄ is the code |R0|
        let xbar = Elem(r0.order() as u16);
        let iso_table: Vec<Elem> = r
            .elements()
            .map(|x| {
                let (x0, x1) = self.parts(x);
                let c0 = self.restrict(x0).expect("degree 0");
                let c1 = coeff[x1.index()].expect("R1 = R0·b");
                t.add(target.embed(c0), t.mul(target.embed(c1), xbar))
            })
            .collect();
        if let Some(reason) = homomorphism_violation(self, &target, &iso_table) {
            return Err(Error::TheoremViolation(format!("presentation map: {reason}")));
        }
        Ok(Some(GradedFieldPresentation { b: r.tag(b), alpha: r0.tag(alpha), target, iso_table }))
    }

    pub fn norm(&self, x: RingElement) -> Result<NormValue> {
        let x = self.ring().check(x)?;
        Ok(NormValue { value: self.ring().tag(self.norm_of(x)) })
    }

    pub(crate) fn norm_of(&self, x: Elem) -> Elem {
        let r = self.ring();
        let (x0, x1) = self.parts(x);
        r.sub(r.square(x0), r.square(x1))
    }

    /// `{x : N(x) = 0}`.
    pub fn norm_set(&self) -> ElemSet {
        let r = self.ring();
        ElemSet::from_elems(r.order(), r.elements().filter(|&x| self.norm_of(x) == r.zero()))
    }

    /// Graded maximal ideals by both methods, with the structural facts that
    /// tie them to `Max R0`.
    pub fn maximal_report(&self) -> Result<MaximalReport> {
        let def = self.graded_max(SpecMethod::Definitional)?;
        let con = self.graded_max(SpecMethod::Constructive)?;
        let maxes = max_spec(self.r0_ring())?;
        let r = self.ring();
        let r0 = self.r0_ring();
        let mut checks = Vec::new();

        let witness = (def != con).then(|| {
            let stray = def.iter().chain(&con).find(|j| !(def.contains(j) && con.contains(j)));
            match stray {
                Some(j) => format!("{} found by only one method", r.render_set(j.members())),
                None => format!("{} versus {} graded maximals", def.len(), con.len()),
            }
        });
        checks.push(Check::from_witness("methods-agree", witness));

        let mut witness = None;
        for j in &def {
            if !self.is_graded_prime(j)? {
                witness = Some(format!("{} is graded maximal but not graded prime", r.render_set(j.members())));
                break;
            }
        }
        checks.push(Check::from_witness("maximal-is-prime", witness));

        let mut images: Vec<&Ideal> = def.iter().map(|j| j.i0()).collect();
        images.sort();
        images.dedup();
        let witness =
            (images.len() != def.len() || images.len() != maxes.len() || images.iter().any(|p| !maxes.contains(p)))
                .then(|| {
                    format!(
                        "{} graded maximals contract to {} ideals; R0 has {} maximals",
                        def.len(),
                        images.len(),
                        maxes.len()
                    )
                });
        checks.push(Check::from_witness("phi-bijective-on-max", witness));

        let witness = ((def.len() == 1) != (maxes.len() == 1))
            .then(|| format!("{} graded maximals but {} maximals of R0", def.len(), maxes.len()));
        checks.push(Check::from_witness("local-iff-r0-local", witness));

        let field = self.is_graded_field(PredicateMethod::Definitional);
        let zero = self.zero_graded_ideal();
        let zero_max = def.len() == 1 && def[0] == zero;
        let two = self.enumerate_graded_ideals()?.len() == 2;
        let witness = (field != zero_max || field != two).then(|| {
            format!("graded field {field}, zero ideal the only graded maximal {zero_max}, two graded ideals {two}")
        });
        checks.push(Check::from_witness("field-iff-zero-maximal", witness));

        if self.is_strongly_graded() {
            let mut witness = None;
            for p in &maxes {
                let j = self.graded_ideal_from_ideal(p)?;
                if !def.contains(&j) {
                    witness = Some(format!("p + pR1 is not graded maximal for p = {}", r0.render_set(p.members())));
                    break;
                }
            }
            checks.push(Check::from_witness("strongly-graded-form", witness));
        } else {
            checks.push(Check::not_applicable("strongly-graded-form", "R1² ≠ R0"));
        }

        Ok(MaximalReport { graded_maximals: def.len(), maximals_of_r0: maxes.len(), checks })
    }

    /// Definitional and structural domain/field predicates, their link to
    /// graded primes and maximals, and the quadratic presentation.
    pub fn field_report(&self) -> Result<FieldReport> {
        let r = self.ring();
        let gd = self.is_graded_domain(PredicateMethod::Definitional);
        let gf = self.is_graded_field(PredicateMethod::Definitional);
        let mut checks = Vec::new();

        let sd = self.is_graded_domain(PredicateMethod::Structural);
        let witness = (gd != sd).then(|| match self.homogeneous_zero_divisors() {
            Some((a, b)) => format!("({}) * ({}) = 0 but the structural criterion says {sd}", r.render(a), r.render(b)),
            None => format!("no homogeneous zero divisors but the structural criterion says {sd}"),
        });
        checks.push(Check::from_witness("domain-methods-agree", witness));

        let sf = self.is_graded_field(PredicateMethod::Structural);
        let witness =
            (gf != sf).then(|| match self.homogeneous().into_iter().find(|&x| x != r.zero() && !r.is_unit(x)) {
                Some(x) => format!("{} is a homogeneous nonunit but the structural criterion says {sf}", r.render(x)),
                None => format!("every homogeneous element is a unit but the structural criterion says {sf}"),
            });
        checks.push(Check::from_witness("field-methods-agree", witness));

        let zero_prime = self.is_graded_prime(&self.zero_graded_ideal())?;
        checks.push(Check::from_witness(
            "domain-iff-zero-prime",
            (gd != zero_prime).then(|| format!("graded domain {gd}, zero ideal graded prime {zero_prime}")),
        ));

        if self.is_strongly_graded() {
            let r0d = self.r0_ring().is_domain();
            checks.push(Check::from_witness(
                "strongly-graded-domain",
                (gd != r0d).then(|| format!("graded domain {gd}, R0 domain {r0d}")),
            ));
        } else {
            checks.push(Check::not_applicable("strongly-graded-domain", "R1² ≠ R0"));
        }

        if !gf {
            checks.push(Check::not_applicable("presentation", "not a graded field"));
        } else {
            match self.graded_field_presentation() {
                Ok(None) => checks.push(Check::not_applicable("presentation", "R1 = 0")),
                Ok(Some(_)) => checks.push(Check::pass("presentation")),
                Err(e) => checks.push(Check::fail("presentation", e.to_string())),
            }
        }

        Ok(FieldReport { graded_domain: gd, graded_field: gf, domain: r.is_domain(), field: r.is_field(), checks })
    }

    /// `R` is a domain iff it is a graded domain with `N(x) = 0 ⇒ x = 0`;
    /// also checks `N(xy) = N(x)N(y)` and `N(x) ∈ R0`.
    pub fn domain_equivalence_check(&self) -> NormReport {
        let r = self.ring();
        let domain = r.is_domain();
        let graded_domain = self.is_graded_domain(PredicateMethod::Definitional);
        let zeros = self.norm_set();
        let trivial = zeros.len() == 1;
        let mut checks = Vec::new();

        let witness = (domain != (graded_domain && trivial)).then(|| {
            let mut parts = vec![format!("domain {domain}, graded domain {graded_domain}")];
            if let Some((a, b)) = r.zero_divisor_pair() {
                parts.push(format!("({}) * ({}) = 0", r.render(a), r.render(b)));
            }
            if let Some(x) = zeros.iter().find(|&x| x != r.zero()) {
                parts.push(format!("N({}) = 0", r.render(x)));
            }
            parts.join("; ")
        });
        checks.push(Check::from_witness("domain-iff-graded-domain-and-trivial-norm-zeros", witness));

        let witness = r
            .elements()
            .find(|&x| !self.r0().contains(self.norm_of(x)))
            .map(|x| format!("N({}) = {} is not in R0", r.render(x), r.render(self.norm_of(x))));
        checks.push(Check::from_witness("norm-in-r0", witness));

        let exhaustive = r.order() <= EXHAUSTIVE_NORM_LIMIT;
        let pairs: Vec<(Elem, Elem)> = if exhaustive {
            r.elements().flat_map(|x| r.elements().map(move |y| (x, y))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(NORM_SEED);
            let n = r.order() as u16;
            (0..NORM_SAMPLES).map(|_| (Elem(rng.gen_range(0..n)), Elem(rng.gen_range(0..n)))).collect()
        };
        let witness = pairs
            .iter()
            .find(|&&(x, y)| self.norm_of(r.mul(x, y)) != r.mul(self.norm_of(x), self.norm_of(y)))
            .map(|&(x, y)| format!("N(({}) * ({})) ≠ N({})·N({})", r.render(x), r.render(y), r.render(x), r.render(y)));
        checks.push(Check::from_witness("norm-multiplicative", witness));

        NormReport { domain, graded_domain, norm_zeros: zeros.len(), pairs_checked: pairs.len(), exhaustive, checks }
    }
}

/// Checks that `table` is a bijective, grading-preserving ring homomorphism
/// from `source` to `target`.
fn homomorphism_violation(source: &GradedRing, target: &GradedRing, table: &[Elem]) -> Option<String> {
    let (s, t) = (source.ring(), target.ring());
    let image = ElemSet::from_elems(t.order(), table.iter().copied());
    if table.len() != t.order() || !image.is_full() {
        return Some("not bijective".into());
    }
    if table[s.one().index()] != t.one() {
        return Some("1 is not preserved".into());
    }
    for x in s.elements() {
        let fx = table[x.index()];
        if source.r0().contains(x) != target.r0().contains(fx) || source.r1().contains(x) != target.r1().contains(fx) {
            return Some(format!("degree of {} is not preserved", s.render(x)));
        }
        for y in s.elements() {
            let fy = table[y.index()];
            if table[s.add(x, y).index()] != t.add(fx, fy) || table[s.mul(x, y).index()] != t.mul(fx, fy) {
                return Some(format!("fails on {} and {}", s.render(x), s.render(y)));
            }
        }
    }
    None
}

impl GradedFieldPresentation {
    /// Independent confirmation that `R` and the target ring are isomorphic,
    /// by unconstrained search.
    pub fn isomorphic_by_search(&self, source: &GradedRing) -> bool {
        find_isomorphism(source.ring(), self.target.ring()).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn zmod(n: u32) -> FiniteRing {
        FiniteRing::zmod(n).unwrap()
    }

    fn quad(n: u32, alpha: u16) -> GradedRing {
        let a = zmod(n);
        GradedRing::quadratic_extension(&a, a.element(alpha).unwrap()).unwrap()
    }

    fn both(g: &GradedRing, m: SpecMethod) -> Vec<Vec<u16>> {
        g.graded_max(m).unwrap().iter().map(|j| j.members().codes()).collect()
    }

    #[test]
    fn graded_maximal_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        let two = Ideal::generate(g.r0_ring(), &[g.r0_ring().element(2).unwrap()]).unwrap();
        let m = g.graded_ideal_from_ideal(&two).unwrap();
        assert!(g.is_graded_maximal(&m).unwrap());
        let flat = Ideal::from_members(g.ring(), m.members().clone()).unwrap();
        assert!(!flat.is_prime());
        assert!(!g.is_graded_maximal(&g.whole_graded_ideal()).unwrap());
        let f = quad(5, 1);
        assert!(f.is_graded_maximal(&f.zero_graded_ideal()).unwrap());
    }

    #[test]
    fn graded_max_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        assert_eq!(both(&g, SpecMethod::Definitional), vec![vec![0, 2, 8, 10]]);
        assert_eq!(both(&g, SpecMethod::Constructive), vec![vec![0, 2, 8, 10]]);
        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        assert_eq!(both(&t, SpecMethod::Definitional), both(&t, SpecMethod::Constructive));
        assert_eq!(t.graded_max(SpecMethod::Definitional).unwrap()[0].r_part().members(), t.r1());
        let z6 = GradedRing::trivial(&zmod(6)).unwrap();
        assert_eq!(both(&z6, SpecMethod::Definitional), vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(both(&z6, SpecMethod::Constructive), vec![vec![0, 3], vec![0, 2, 4]]);
        assert!(z6.maximal_report().unwrap().passed());
    }

    #[test]
    fn maximal_submodule_examples() {
        let g = GradedRing::gaussian(4).unwrap();
        let rep = g.maximal_submodule_check().unwrap();
        assert!(rep.passed());
        assert_eq!(rep.applicable, 2);
        let rep = quad(5, 2).maximal_submodule_check().unwrap();
        assert!(rep.passed() && rep.applicable == 1);
        let rep = GradedRing::truncated_poly(&zmod(2), 3).unwrap().maximal_submodule_check().unwrap();
        assert_eq!(rep.applicable, 0);
        assert!(rep.checks.iter().all(|c| c.status == crate::Status::NotApplicable));
    }

    #[test]
    fn local_examples() {
        assert!(GradedRing::gaussian(4).unwrap().is_graded_local().unwrap());
        assert!(!GradedRing::trivial(&zmod(6)).unwrap().is_graded_local().unwrap());
        assert!(quad(5, 1).is_graded_local().unwrap());
    }

    #[test]
    fn domain_and_field_examples() {
        use PredicateMethod::*;
        let z2i = GradedRing::gaussian(2).unwrap();
        for m in [Definitional, Structural] {
            assert!(z2i.is_graded_domain(m));
            assert!(z2i.is_graded_field(m));
        }
        assert!(!z2i.ring().is_domain());

        let f = quad(5, 1);
        for m in [Definitional, Structural] {
            assert!(f.is_graded_domain(m));
            assert!(f.is_graded_field(m));
        }
        assert!(!f.ring().is_field());

        let t = GradedRing::trivial_extension(&zmod(2), &[2]).unwrap();
        for m in [Definitional, Structural] {
            assert!(!t.is_graded_domain(m));
            assert!(!t.is_graded_field(m));
        }
        assert!(t.field_report().unwrap().passed());
        assert_eq!(t.graded_field_presentation().unwrap_err(), Error::NotGradedField);
    }

    #[test]
    fn presentation_examples() {
        let f = quad(5, 2);
        let p = f.graded_field_presentation().unwrap().unwrap();
        assert_eq!((p.b.elem(), p.alpha.elem()), (Elem(5), Elem(2)));
        assert!(p.iso_table.iter().enumerate().all(|(k, e)| e.index() == k));

        let z2i = GradedRing::gaussian(2).unwrap();
        let p = z2i.graded_field_presentation().unwrap().unwrap();
        assert_eq!((p.b.elem(), p.alpha.elem()), (Elem(2), Elem(1)));
        assert!(p.isomorphic_by_search(&z2i));

        let z3i = GradedRing::gaussian(3).unwrap();
        let p = z3i.graded_field_presentation().unwrap().unwrap();
        assert_eq!((p.b.elem(), p.alpha.elem()), (Elem(3), Elem(2)));

        let z5 = GradedRing::trivial(&zmod(5)).unwrap();
        assert!(z5.graded_field_presentation().unwrap().is_none());
    }

    #[test]
    fn norm_examples() {
        let z5i = GradedRing::gaussian(5).unwrap();
        let x = z5i.ring().element(2 + 5).unwrap();
        assert_eq!(z5i.norm(x).unwrap().value.elem(), Elem(0));
        assert!(z5i.norm_set().contains(Elem(7)));
        let one = z5i.ring().element(1).unwrap();
        assert_eq!(z5i.norm(one).unwrap().value.elem(), Elem(1));
        let zero = z5i.ring().element(0).unwrap();
        assert_eq!(z5i.norm(zero).unwrap().value.elem(), Elem(0));

        let z3i = GradedRing::gaussian(3).unwrap();
        assert_eq!(z3i.norm_set().codes(), vec![0]);
        let other = GradedRing::gaussian(3).unwrap();
        assert_eq!(z3i.norm(other.ring().element(1).unwrap()).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn domain_equivalence_examples() {
        for n in [2, 3, 5] {
            let g = GradedRing::gaussian(n).unwrap();
            let rep = g.domain_equivalence_check();
            assert!(rep.passed(), "{n}: {:?}", rep.checks);
            assert_eq!(rep.domain, n == 3);
            assert!(rep.exhaustive);
        }
        let big = GradedRing::gaussian(12).unwrap();
        let rep = big.domain_equivalence_check();
        assert!(rep.passed() && !rep.exhaustive);
        assert_eq!(rep.pairs_checked, NORM_SAMPLES);
    }
}
