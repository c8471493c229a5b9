//! Exact complexified exterior algebra on six dimensional nilpotent Lie
//! algebras, with classification of the algebra and of the complex
//! structure, and Hermitian metric predicates (SKT, balanced, locally
//! conformal Kähler) computed symbolically over Gaussian rationals.

pub mod catalog;
pub mod complex;
pub mod connection;
pub mod error;
pub mod form;
pub mod hermitian;
pub mod hodge;
pub mod lck;
pub mod lie;
pub mod linalg;
pub mod realform;
pub mod scalar;
pub mod structure;
pub mod word;

pub use catalog::{CatalogTag, ALL_TAGS};
pub use complex::{ComplexStructure, JClass, NilpotentCoeffs, NonNilpotentCoeffs, TwoStepCoeffs};
pub use error::AlgebraError;
pub use form::Form;
pub use hermitian::{HermitianMetric, RegionPoint};
pub use connection::LeviCivita;
pub use hodge::Hodge;
pub use lck::{is_lck, solve_lck, LckSolution};
pub use lie::{AlgebraClass, LieAlgebra, SeriesProfile};
pub use realform::{complex_to_real, real_to_complex, RealForm};
pub use scalar::{rat, Rational, Scalar};
pub use structure::StructureEquations;
pub use word::{Letter, Word};
