//! Instance files: a JSON construction tree tagged by `"kind"`, plus optional
//! limits.

use gradspec::{Elem, ElemSet, FiniteRing, GradedRing};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("at {path}: {source}")]
    Build {
        path: String,
        #[source]
        source: gradspec::Error,
    },
}

impl InstanceError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, InstanceError::Build { source: gradspec::Error::ResourceLimit { .. }, .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingRecipe {
    Zmod {
        n: u32,
    },
    Product {
        left: Box<RingRecipe>,
        right: Box<RingRecipe>,
    },
    /// Monic modulus, coefficient codes from the constant term upwards.
    PolyQuotient {
        base: Box<RingRecipe>,
        modulus: Vec<u16>,
    },
    Quadratic {
        base: Box<RingRecipe>,
        alpha: u16,
    },
    Gaussian {
        n: u32,
    },
    TrivialExtension {
        n: u32,
        module: Vec<u32>,
    },
    TruncatedPoly {
        base: Box<RingRecipe>,
        k: usize,
    },
    GradedManual {
        base: Box<RingRecipe>,
        r0: Vec<u16>,
        r1: Vec<u16>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

impl Limits {
    fn is_default(&self) -> bool {
        self.bound.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingRecipe,
    #[serde(default, skip_serializing_if = "Limits::is_default")]
    pub limits: Limits,
}

pub fn parse_instance(text: &str) -> Result<InstanceSpec, InstanceError> {
    let spec: InstanceSpec = serde_json::from_str(text)?;
    spec.build()?;
    Ok(spec)
}

impl InstanceSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance specs always serialize")
    }

    /// Builds the graded ring, applying `limits.bound` if present.
    pub fn build(&self) -> Result<GradedRing, InstanceError> {
        let g = self.ring.graded("ring")?;
        Ok(match self.limits.bound {
            Some(b) => g.with_bound(b),
            None => g,
        })
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "instance".into())
    }
}

fn at(path: &str) -> impl FnOnce(gradspec::Error) -> InstanceError + '_ {
    move |source| InstanceError::Build { path: path.to_string(), source }
}

impl RingRecipe {
    /// Grading of the recipe; the ring-only kinds are trivially graded.
    pub fn graded(&self, path: &str) -> Result<GradedRing, InstanceError> {
        match self {
            RingRecipe::Zmod { .. } | RingRecipe::Product { .. } | RingRecipe::PolyQuotient { .. } => {
                GradedRing::trivial(&self.ring(path)?).map_err(at(path))
            }
            RingRecipe::Quadratic { base, alpha } => {
                let sub = format!("{path}.base");
                let a = base.ring(&sub)?;
                let alpha = a.element(*alpha).map_err(at(&format!("{path}.alpha")))?;
                GradedRing::quadratic_extension(&a, alpha).map_err(at(path))
            }
            RingRecipe::Gaussian { n } => GradedRing::gaussian(*n).map_err(at(path)),
            RingRecipe::TrivialExtension { n, module } => {
                let a = FiniteRing::zmod(*n).map_err(at(&format!("{path}.n")))?;
                GradedRing::trivial_extension(&a, module).map_err(at(&format!("{path}.module")))
            }
            RingRecipe::TruncatedPoly { base, k } => {
                let a = base.ring(&format!("{path}.base"))?;
                GradedRing::truncated_poly(&a, *k).map_err(at(&format!("{path}.k")))
            }
            RingRecipe::GradedManual { base, r0, r1 } => {
                let ring = base.ring(&format!("{path}.base"))?;
                let r0 = code_set(&ring, r0, &format!("{path}.r0"))?;
                let r1 = code_set(&ring, r1, &format!("{path}.r1"))?;
                GradedRing::manual(&ring, &r0, &r1).map_err(at(path))
            }
        }
    }

    /// The underlying ring, ignoring any grading.
    pub fn ring(&self, path: &str) -> Result<FiniteRing, InstanceError> {
        match self {
            RingRecipe::Zmod { n } => FiniteRing::zmod(*n).map_err(at(&format!("{path}.n"))),
            RingRecipe::Product { left, right } => {
                let a = left.ring(&format!("{path}.left"))?;
                let b = right.ring(&format!("{path}.right"))?;
                FiniteRing::product(&a, &b).map_err(at(path))
            }
            RingRecipe::PolyQuotient { base, modulus } => {
                let a = base.ring(&format!("{path}.base"))?;
                let sub = format!("{path}.modulus");
                let coeffs = modulus.iter().map(|&c| a.element(c).map(|e| e.elem())).collect::<Result<Vec<Elem>, _>>();
                FiniteRing::poly_quotient(&a, &coeffs.map_err(at(&sub))?).map_err(at(&sub))
            }
            _ => Ok(self.graded(path)?.ring().clone()),
        }
    }
}

fn code_set(ring: &FiniteRing, codes: &[u16], path: &str) -> Result<ElemSet, InstanceError> {
    let elems =
        codes.iter().map(|&c| ring.element(c).map(|e| e.elem())).collect::<Result<Vec<_>, _>>().map_err(at(path))?;
    Ok(ElemSet::from_elems(ring.order(), elems))
}
