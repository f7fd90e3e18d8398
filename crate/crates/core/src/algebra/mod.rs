//! Structure-constant algebras, linear maps and the BiHom constructions.

mod bihom;
mod construct;
mod element;
mod endo;
mod generic;
mod morphism;
mod ops;
mod permutation;
mod structure;

pub use bihom::{BiHomAlgebra, Facts};
pub use construct::{
    minus_algebra, plus_algebra, twist, untwist_star, untwist_star_involutive, Preconditions,
};
pub use element::{Element, ElementDisplay};
pub use endo::LinearEndo;
pub use generic::{adjoin_generic, Generic};
pub use morphism::{is_morphism, maps_commute};
pub use permutation::Permutation;
pub use structure::Algebra;

use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{map} is not invertible")]
    NotInvertible { map: String },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("construction refused: {0}")]
    Refused(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
