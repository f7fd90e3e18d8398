//! Exact coefficient arithmetic.
//!
//! Every structure constant and matrix entry is a [`ScalarValue`]: a quotient of
//! two multivariate polynomials over the rationals. Purely rational values are
//! stored as constant polynomials over a one denominator, so the common case of
//! numeric tables stays cheap.
//!
//! Polynomials live in a [`Ring`], an ordered list of variable names. Rings may
//! be extended by adjoining variables at the end; values from a ring and one of
//! its extensions combine freely, anything else is a ring mismatch.

mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ring;
mod value;

pub use monomial::Monomial;
pub use parse::parse_scalar;
pub use polynomial::Polynomial;
pub use ring::Ring;
pub use value::ScalarValue;

use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

pub type Result<T, E = ScalarError> = std::result::Result<T, E>;

/// Binary scalar operations named after the public contract; they report ring
/// mismatches instead of panicking like the operator impls do.
pub fn scalar_add(a: &ScalarValue, b: &ScalarValue) -> Result<ScalarValue> {
    a.checked_add(b)
}

pub fn scalar_mul(a: &ScalarValue, b: &ScalarValue) -> Result<ScalarValue> {
    a.checked_mul(b)
}

pub fn is_zero(a: &ScalarValue) -> bool {
    a.is_zero()
}
