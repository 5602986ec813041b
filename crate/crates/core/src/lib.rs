//! Finite Z/2-graded commutative rings.
//!
//! A graded ring here is a finite commutative ring `R` with an additive
//! decomposition `R = R0 ⊕ R1` satisfying `Ri·Rj ⊆ R(i+j)`. The crate
//! enumerates graded ideals, the homogeneous prime and maximal spectra and
//! graded radicals, and checks each structural description of them against a
//! definitional brute-force computation.

pub mod catalog;
pub mod error;
pub mod graded;
pub mod graded_ideal;
pub mod maximal;
pub mod report;
pub mod ring;
pub mod set;
pub mod spectrum;

pub use catalog::{catalog, CatalogEntry, CatalogRecipe};
pub use error::{Error, Result};
pub use graded::{GradedRing, MatrixRep, Submodule};
pub use graded_ideal::{CorrespondenceReport, GradedIdeal};
pub use maximal::{
    FieldReport, GradedFieldPresentation, MaximalReport, NormReport, NormValue, PredicateMethod, SubmoduleReport,
};
pub use report::{Check, Status};
pub use ring::{Elem, FiniteRing, Ideal, RingElement};
pub use set::ElemSet;
pub use spectrum::{
    Dimension, GradedPrime, NilCaseReport, PrimeCase, RadicalMethod, RadicalReport, SpecMethod, SpectrumReport,
};
