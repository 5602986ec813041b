//! Runs the verification suites on one instance and assembles the report.

use std::collections::BTreeSet;

use clap::ValueEnum;
use gradspec::ring::{enumerate_ideals, max_spec, spec};
use gradspec::{Check, Error, GradedRing, Ideal, PredicateMethod, SpecMethod, Status};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ideals,
    Spectrum,
    Homeo,
    Radical,
    Maximal,
    Field,
    Norm,
    All,
}

impl Suite {
    pub const EVERY: [Suite; 7] =
        [Suite::Field, Suite::Homeo, Suite::Ideals, Suite::Maximal, Suite::Norm, Suite::Radical, Suite::Spectrum];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ideals => "ideals",
            Suite::Spectrum => "spectrum",
            Suite::Homeo => "homeo",
            Suite::Radical => "radical",
            Suite::Maximal => "maximal",
            Suite::Field => "field",
            Suite::Norm => "norm",
            Suite::All => "all",
        }
    }
}

/// Expands `all` and sorts by name; an empty selection means every suite.
pub fn resolve_suites(selected: &[Suite]) -> Vec<Suite> {
    let mut out: BTreeSet<&'static str> = BTreeSet::new();
    let expand = selected.is_empty() || selected.contains(&Suite::All);
    for s in if expand { &Suite::EVERY[..] } else { selected } {
        out.insert(s.name());
    }
    Suite::EVERY.iter().copied().filter(|s| out.contains(s.name())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    Pass,
    Fail,
    ResourceLimit,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceSummary {
    pub name: String,
    pub description: String,
    pub order: usize,
    pub r0_order: usize,
    pub r1_order: usize,
    pub strongly_graded: bool,
}

impl InstanceSummary {
    pub fn of(name: &str, g: &GradedRing) -> Self {
        InstanceSummary {
            name: name.to_string(),
            description: g.provenance().to_string(),
            order: g.ring().order(),
            r0_order: g.r0().len(),
            r1_order: g.r1().len(),
            strongly_graded: g.is_strongly_graded(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub ideals_of_r0: usize,
    pub graded_ideals: usize,
    pub primes_of_r0: usize,
    pub graded_primes: usize,
    pub maximals_of_r0: usize,
    pub graded_maximals: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremRecord {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub instance: InstanceSummary,
    pub suites: Vec<&'static str>,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Counts>,
    pub theorems: Vec<TheoremRecord>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            ReportStatus::Pass => 0,
            ReportStatus::Fail => 1,
            ReportStatus::ResourceLimit => 3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let i = &self.instance;
        let mut out = format!(
            "{}: {}\n|R| = {}, |R0| = {}, |R1| = {}, strongly graded: {}\n",
            i.name, i.description, i.order, i.r0_order, i.r1_order, i.strongly_graded
        );
        if let Some(c) = &self.counts {
            out += &format!(
                "ideals of R0 {}, graded ideals {}, primes of R0 {}, graded primes {}, maximals of R0 {}, graded maximals {}\n",
                c.ideals_of_r0, c.graded_ideals, c.primes_of_r0, c.graded_primes, c.maximals_of_r0, c.graded_maximals
            );
        }
        for t in &self.theorems {
            let tag = match t.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "N/A ",
            };
            out += &format!("{tag} {}/{}", t.suite, t.name);
            if let Some(w) = &t.witness {
                out += &format!(": {w}");
            }
            out.push('\n');
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out += &format!(
            "status: {}\n",
            match self.status {
                ReportStatus::Pass => "pass",
                ReportStatus::Fail => "fail",
                ReportStatus::ResourceLimit => "resource-limit",
            }
        );
        out
    }
}

struct Outcome {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checks: Vec::new(), notes: Vec::new() }
    }
}

type SuiteResult = std::result::Result<Outcome, Error>;

/// Runs `suites` on `g`. A resource limit anywhere sets the report status
/// instead of aborting; any other library error becomes a failed record.
pub fn run_verify(name: &str, g: &GradedRing, suites: &[Suite]) -> VerificationReport {
    let suites = resolve_suites(suites);
    let mut theorems = Vec::new();
    let mut notes = Vec::new();
    let mut limited = false;
    for &suite in &suites {
        let result = match suite {
            Suite::Ideals => ideals_suite(g),
            Suite::Spectrum => spectrum_suite(g),
            Suite::Homeo => homeo_suite(g),
            Suite::Radical => radical_suite(g),
            Suite::Maximal => maximal_suite(g),
            Suite::Field => field_suite(g),
            Suite::Norm => Ok(norm_suite(g)),
            Suite::All => unreachable!("expanded by resolve_suites"),
        };
        match result {
            Ok(outcome) => {
                theorems.extend(outcome.checks.into_iter().map(|c| TheoremRecord {
                    suite: suite.name(),
                    name: c.name,
                    status: c.status,
                    witness: c.witness,
                }));
                notes.extend(outcome.notes.into_iter().map(|n| format!("{}: {n}", suite.name())));
            }
            Err(e @ Error::ResourceLimit { .. }) => {
                limited = true;
                notes.push(format!("{}: {e}", suite.name()));
            }
            Err(e) => theorems.push(TheoremRecord {
                suite: suite.name(),
                name: "error".into(),
                status: Status::Fail,
                witness: Some(e.to_string()),
            }),
        }
    }
    theorems.sort_by(|a, b| (a.suite, &a.name).cmp(&(b.suite, &b.name)));
    let counts = counts(g).ok();
    let status = if limited {
        ReportStatus::ResourceLimit
    } else if theorems.iter().any(|t| t.status == Status::Fail) {
        ReportStatus::Fail
    } else {
        ReportStatus::Pass
    };
    VerificationReport {
        instance: InstanceSummary::of(name, g),
        suites: suites.iter().map(|s| s.name()).collect(),
        status,
        counts,
        theorems,
        notes,
    }
}

fn counts(g: &GradedRing) -> Result<Counts, Error> {
    let r0 = g.r0_ring();
    Ok(Counts {
        ideals_of_r0: enumerate_ideals(r0)?.len(),
        graded_ideals: g.enumerate_graded_ideals()?.len(),
        primes_of_r0: spec(r0)?.len(),
        graded_primes: g.graded_spec(SpecMethod::Constructive)?.graded_points.len(),
        maximals_of_r0: max_spec(r0)?.len(),
        graded_maximals: g.graded_max(SpecMethod::Constructive)?.len(),
    })
}

fn ideals_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    let pairs = g.enumerate_graded_ideals()?;
    let by_pairs: BTreeSet<_> = pairs.iter().map(|j| j.members().clone()).collect();
    let by_definition: BTreeSet<_> = g.graded_ideals_by_definition()?.into_iter().collect();
    let witness = (by_pairs != by_definition).then(|| {
        format!("{} compatible pairs versus {} graded ideals by definition", by_pairs.len(), by_definition.len())
    });
    out.checks.push(Check::from_witness("pairs-match-definition", witness));

    let mut witness = None;
    for j in &pairs {
        if g.decompose(j.members())? != *j {
            witness = Some(format!("{} does not split back into its pair", g.ring().render_set(j.members())));
            break;
        }
    }
    out.checks.push(Check::from_witness("decomposition-roundtrip", witness));

    if g.is_strongly_graded() {
        let rep = g.strongly_graded_correspondence()?;
        out.checks.extend(rep.checks.into_iter().map(|c| Check { name: format!("correspondence-{}", c.name), ..c }));
    } else {
        out.checks.push(Check::not_applicable("correspondence", "R1² ≠ R0"));
    }
    Ok(out)
}

fn spectrum_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    let def = g.graded_spec(SpecMethod::Definitional)?;
    let con = g.graded_spec(SpecMethod::Constructive)?;
    out.checks.extend(def.checks.iter().cloned());
    let same = def.graded_points.iter().map(|q| q.members()).eq(con.graded_points.iter().map(|q| q.members()));
    out.checks.push(Check::from_witness(
        "methods-agree",
        (!same).then(|| format!("{} versus {} graded primes", def.graded_points.len(), con.graded_points.len())),
    ));
    let nil = g.check_nil_case()?;
    out.checks.extend(nil.checks.into_iter().map(|c| Check { name: format!("nil-case-{}", c.name), ..c }));

    let r = g.ring();
    for q in &def.graded_points {
        let flat = Ideal::from_members(r, q.members().clone())?;
        if let Some((a, b)) = flat.prime_witness() {
            out.notes.push(format!(
                "graded prime {} is not a prime ideal of R: ({}) * ({}) = {} lies in it",
                r.render_set(q.members()),
                r.render(a),
                r.render(b),
                r.render(r.mul(a, b))
            ));
        }
    }
    Ok(out)
}

fn homeo_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    let rep = g.check_homeomorphism()?;
    out.checks.extend(rep.checks);
    let dim = g.homogeneous_dim()?;
    out.checks.push(Check::from_witness(
        "dimension-agrees",
        (!dim.agrees())
            .then(|| format!("graded chains of length {}, chains in R0 of length {}", dim.homogeneous, dim.base)),
    ));
    Ok(out)
}

fn radical_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    let ideals = g.enumerate_graded_ideals()?;
    let mut merged: Vec<Check> = Vec::new();
    let mut non_submodule = 0;
    let mut literal_differs = 0;
    for j in &ideals {
        let rep = g.radical_report(j)?;
        for c in rep.checks {
            match merged.iter_mut().find(|m| m.name == c.name) {
                Some(m) if m.passed() && !c.passed() => *m = c,
                Some(_) => {}
                None => merged.push(c),
            }
        }
        non_submodule += usize::from(!rep.bracket_of_j0_is_submodule);
        literal_differs += usize::from(!rep.literal_formula_matches);
    }
    out.checks = merged;
    out.notes.push(format!(
        "over {} graded ideals: R1[J0] fails to be a submodule for {non_submodule}, and √J0 + R1[J0] differs from Grad(J) for {literal_differs}",
        ideals.len()
    ));
    Ok(out)
}

fn maximal_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    out.checks.extend(g.maximal_report()?.checks);
    out.checks.extend(g.maximal_submodule_check()?.checks);
    match g.is_graded_local() {
        Ok(local) => {
            out.checks.push(Check::pass("graded-local-agrees"));
            out.notes.push(format!("graded local: {local}"));
        }
        Err(Error::TheoremViolation(w)) => out.checks.push(Check::fail("graded-local-agrees", w)),
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn field_suite(g: &GradedRing) -> SuiteResult {
    let mut out = Outcome::new();
    let rep = g.field_report()?;
    out.notes.push(format!(
        "graded domain {}, domain {}, graded field {}, field {}",
        rep.graded_domain, rep.domain, rep.graded_field, rep.field
    ));
    if rep.graded_field {
        if let Ok(Some(p)) = g.graded_field_presentation() {
            let b = p.b.elem();
            let alpha = p.alpha.elem();
            out.notes.push(format!(
                "presentation: b = {}, alpha = {}, R ≅ R0[X]/(X² - {})",
                g.render(b),
                g.r0_ring().render(alpha),
                g.r0_ring().render(alpha)
            ));
        }
    }
    out.checks.extend(rep.checks);
    let def = g.is_graded_field(PredicateMethod::Definitional);
    out.checks.push(Check::from_witness(
        "zero-ideal-graded-maximal",
        (def != g.is_graded_maximal(&g.zero_graded_ideal())?).then(|| format!("graded field is {def}")),
    ));
    Ok(out)
}

fn norm_suite(g: &GradedRing) -> Outcome {
    let rep = g.domain_equivalence_check();
    let mut out = Outcome::new();
    out.notes.push(format!(
        "norm has {} zeros; multiplicativity checked on {} pairs ({})",
        rep.norm_zeros,
        rep.pairs_checked,
        if rep.exhaustive { "all pairs" } else { "seeded sample" }
    ));
    out.checks = rep.checks;
    out
}
