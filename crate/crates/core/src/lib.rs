//! Biquaternion (complex quaternion) representation of spin-1/2 and its
//! application to the relativistic one-electron atom.
//!
//! The universal value type is [`Biquaternion`]: four complex coefficients on
//! the units `e0..e3` with Hamilton's rules `e1 e2 = e3` (cyclic) and
//! `ek^2 = -1`. Every quaternionic identity in this crate has a 2x2 complex
//! matrix counterpart in [`matrix`], which serves as the verification oracle.
//!
//! Module map:
//!
//! * [`biquaternion`]: the algebra itself (product, conjugations, norms).
//! * [`matrix`]: quaternion to matrix maps and the ket/bra vector maps.
//! * [`oracle`]: named identities checked against the matrix side.
//! * [`spin`]: Pauli quaternions, spin states and operators, rotations,
//!   ladder operators.
//! * [`special`]: Laguerre polynomials, spherical harmonics, quadrature.
//! * [`spinor`]: total angular momentum spinor functions.
//! * [`hydrogen`]: Sommerfeld energies, closed-form radial functions, the
//!   shooting verifier and the assembled quaternionic wavefunction.
//! * [`dirac`]: the Pauli algebra embedding and the Dirac gamma matrices.
//! * [`verify`]: the invariant suites behind `biquat verify`.

// NaN must fail the domain checks, hence `!(x > 0.0)` rather than `x <= 0.0`.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod biquaternion;
pub mod dirac;
mod error;
mod half;
pub mod hydrogen;
pub mod matrix;
pub mod oracle;
pub mod special;
pub mod spin;
pub mod spinor;
pub mod units;
pub mod verify;

pub use biquaternion::{Biquaternion, RealQuaternion};
pub use error::{Error, Result};
pub use half::HalfInt;
pub use matrix::{ComplexMatrix2, ComplexVector2};
pub use num_complex::Complex64;

/// Absolute per-coefficient tolerance used for algebraic identities.
pub const ALGEBRA_TOL: f64 = 1e-12;
