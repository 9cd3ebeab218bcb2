//! Exact graded polynomial arithmetic in the tautological generators
//! `lambda_i`, `K_i`, `D_ij`, `kappa_j` and rewriting modulo the diagonal
//! relations.

mod expr;
mod generator;
pub mod json;
mod monomial;
pub mod rewrite;
mod text;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use expr::TautExpr;
pub use generator::{Ambient, Generator};
pub use monomial::Monomial;
pub use text::parse_expr;

/// Exact coefficient type. Always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
