//! Exact arithmetic for the q-deformed projective line.
//!
//! Rational numbers admit two q-deformations, a right (sharp) and a left
//! (flat) version, obtained as the orbits of 1/0 and 1/(1-q) under a
//! quantized action of the modular group. This crate implements the whole
//! toolchain over exact integer arithmetic:
//!
//! - [`laurent`]: Laurent polynomials in q with big-integer coefficients,
//!   the coefficient ring of everything else.
//! - [`projective`]: points of P^1(Z(q)) in canonical form and the Mobius
//!   action of 2x2 matrices.
//! - [`qgroup`]: the quantized generators R_q, S_q, N_q of PGL_2(Z), word
//!   evaluation, the twisted (tau-composed) operators, and the stabilizer
//!   computation singling out 1/0 and 1/(1-q).
//! - [`contfrac`]: positive and negative continued fractions and their
//!   quantized matrix factorizations.
//! - [`qrat`]: left and right q-rationals and the action rules that
//!   exchange or preserve the two flavors.
//! - [`qseries`]: truncated Laurent series, quantization of real numbers
//!   from continued-fraction digit streams, and digit recovery.
//! - [`qtrace`]: palindromicity and positivity of traces of quantized
//!   matrices.
//! - [`fenceposet`]: left circular fence posets whose admissible-ideal
//!   generating functions realize q-traces.
//! - [`algebraic`]: exact root isolation for the degree-4 and degree-6
//!   families with fractional-linear Galois symmetries, and the quantized
//!   Vieta relations among the q-deformed roots.

pub mod algebraic;
pub mod contfrac;
pub mod fenceposet;
pub mod laurent;
pub mod projective;
pub mod qgroup;
pub mod qrat;
pub mod qseries;
pub mod qtrace;
pub mod rational;

pub use laurent::{LambdaUnit, LaurentPoly};
pub use projective::ProjPoint;
pub use qgroup::{GroupWord, QMatrix, TwistedOp};
pub use rational::ExtRational;

/// First 45 continued-fraction digits of pi, one per line, integer part
/// first. Same contents as `data/pi_cf_digits.txt` at the repository root.
pub const PI_CF_DIGITS: &str = include_str!("../../../data/pi_cf_digits.txt");
