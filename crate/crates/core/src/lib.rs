//! Exact computations in the tautological ring of moduli spaces of pointed
//! curves, and the counting of multi-scale differentials, assembled into the
//! divisor class of genus 3 curves carrying a meromorphic differential of
//! type `(6; -2)`.
//!
//! The pieces are usable on their own:
//!
//! - [`taut`]: the ring, its rewriting relations and the normal form.
//! - [`chern`]: Chern classes of the bundles in the degeneracy-locus setup and
//!   formal inversion.
//! - [`pushforward`]: forgetting marked points and restricting to the interior.
//! - [`porteous`]: the lambda coefficient with its stage trace.
//! - [`msd`]: boundary counts, closed degree formulas and test-curve
//!   intersections.
//! - [`divisor`]: solving for the class and converting between spaces.

pub mod chern;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod exec;
pub mod msd;
pub mod porteous;
pub mod pushforward;
pub mod taut;

pub use error::{Error, Result};
pub use exec::Execution;
pub use taut::{parse_expr, Ambient, Generator, Monomial, Rational, TautExpr};
