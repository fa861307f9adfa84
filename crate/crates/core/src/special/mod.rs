//! Special functions and quadrature used by the spinor and hydrogen modules.
//!
//! Spherical harmonics use the Condon-Shortley phase, `Y_l^{-m} = (-1)^m
//! conj(Y_l^m)`. Spinor coefficient signs depend on this choice.

mod harmonics;
mod laguerre;

pub(crate) use laguerre::eval as laguerre_eval;
mod quadrature;

pub use harmonics::{spherical_harmonic, ylm, SphericalHarmonicParams};
pub use laguerre::{laguerre, LaguerreParams};
pub use quadrature::{gauss_legendre, quadrature_radial, quadrature_sphere, RadialIntegral, SphereRule};
