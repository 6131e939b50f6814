//! Exact arithmetic: the symbol ring and Laurent rational functions in
//! X = q^{-s}.
//!
//! - [`symbols`]: interner, monomials, multivariate polynomials, gcd
//! - [`scalar`]: canonical fractions (the coefficient field)
//! - [`laurent`]: factored Laurent rational functions in X
//! - [`parse`]: expression parser for scalar strings

pub mod laurent;
pub mod parse;
pub mod scalar;
pub mod symbols;

pub use laurent::{LaurentRational, XPoly};
pub use parse::{parse_rational, parse_scalar};
pub use scalar::Scalar;
pub use symbols::{RenderMode, SymId};
