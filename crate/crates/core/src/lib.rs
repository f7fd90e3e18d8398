//! Exact computer algebra for finite-dimensional algebras carrying two
//! structure maps.
//!
//! The crate is organised bottom-up: [`scalar`] provides exact coefficients,
//! [`algebra`] structure-constant algebras and the twisting constructions,
//! [`identities`] the identity registry and its decision procedure,
//! [`catalog`] built-in example algebras and [`discovery`] a brute-force
//! search for commuting morphism pairs.

pub mod scalar;
pub mod algebra;
pub mod report;
pub mod catalog;
pub mod identities;
pub mod discovery;
