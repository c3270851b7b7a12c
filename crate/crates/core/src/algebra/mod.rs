//! Exact coefficient fields, sparse polynomials and square-free monomial ideals.

pub mod field;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod polynomial;

use thiserror::Error;

pub use field::{Field, FieldSpec, Scalar};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use parse::{parse_polynomial, ParseError, ParseErrorKind};
pub use polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected {expected} variables, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("expected {expected} images, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("unknown field {0:?}; expected \"rational\" or {{\"prime\": p}}")]
    UnknownField(String),
    #[error("ideal generator is not square-free")]
    NotSquareFree,
    #[error("the monomial 1 cannot generate a proper ideal")]
    UnitGenerator,
}
