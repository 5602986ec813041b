//! Instance files, verification reports and DOT export for the `gradspec`
//! command-line tool.

pub mod dot;
pub mod instance;
pub mod verify;

use gradspec::ring::spec;
use gradspec::{GradedRing, PrimeCase, SpecMethod};
use serde::Serialize;

pub use dot::export_dot;
pub use instance::{parse_instance, InstanceError, InstanceSpec, Limits, RingRecipe};
pub use verify::{run_verify, ReportStatus, Suite, VerificationReport};

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumPoint {
    pub members: Vec<u16>,
    pub rendered: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<PrimeCase>,
    /// Codes in `R` of `P ∩ R0`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contraction: Option<Vec<u16>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumListing {
    pub graded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<&'static str>,
    pub points: Vec<SpectrumPoint>,
}

/// Prime ideals of `R`, or with `graded` the graded primes found by `method`.
pub fn spectrum_listing(g: &GradedRing, graded: bool, method: SpecMethod) -> gradspec::Result<SpectrumListing> {
    let r = g.ring();
    if !graded {
        let points = spec(r)?
            .iter()
            .map(|p| SpectrumPoint {
                members: p.members().codes(),
                rendered: r.render_set(p.members()),
                case: None,
                contraction: None,
            })
            .collect();
        return Ok(SpectrumListing { graded, method: None, points });
    }
    let rep = g.graded_spec(method)?;
    let points = rep
        .graded_points
        .iter()
        .map(|q| SpectrumPoint {
            members: q.members().codes(),
            rendered: r.render_set(q.members()),
            case: Some(q.case()),
            contraction: Some(g.embed_set(q.p().members()).codes()),
        })
        .collect();
    let method = match method {
        SpecMethod::Definitional => "definitional",
        SpecMethod::Constructive => "constructive",
    };
    Ok(SpectrumListing { graded, method: Some(method), points })
}

impl SpectrumListing {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out += &p.rendered;
            if let Some(case) = p.case {
                out += match case {
                    PrimeCase::ContainsR1 => "  contains R1",
                    PrimeCase::PrimeSubmodule => "  prime submodule",
                };
            }
            out.push('\n');
        }
        out
    }
}
