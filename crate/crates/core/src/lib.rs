//! Exact symbolic local factors for G2 x GL_r over a nonarchimedean field.
//!
//! The engine computes gamma-, L- and epsilon-factors attached to
//! representations given by cuspidal-support data: a G2 side described by
//! one of its three support families (or Satake data), and a GL_r side given
//! as a formal sum of characters twisted by Steinberg blocks plus opaque
//! supercuspidal atoms. Two independent computation routes are provided —
//! through the seven-dimensional lift, and through the product formulas over
//! the support — and the crate cross-checks them against each other.
//!
//! All arithmetic is exact: scalars live in the fraction field of a
//! polynomial ring over Q (with a formal square root `u` of the residue
//! cardinality `q`), and factor values are Laurent rational functions in
//! X = q^{-s} with decidable equality.

pub mod error;
pub mod ratfun;

pub use error::{Error, Result};
pub use ratfun::{LaurentRational, RenderMode, Scalar};
