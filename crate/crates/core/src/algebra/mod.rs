//! Exact arithmetic substrate: rationals, sparse commutative polynomials,
//! Laurent scalars in `t`, and the polynomial text format.

mod context;
mod laurent;
mod monomial;
pub(crate) mod parse;
mod polynomial;

pub use context::{Context, VarName};
pub use laurent::LaurentScalar;
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;

use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q` as a [`Rational`].
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("variable {name} is not in {context}")]
    VariableOutsideRoster { name: String, context: Context },
    #[error("variable index {index} is not in {context}")]
    UnknownVariable { index: usize, context: Context },
    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch { left: Context, right: Context },
}
