//! The relativistic one-electron atom.
//!
//! Natural units throughout: `hbar = c = m = 1`, energies in `mc^2`, lengths
//! in `hbar/(mc)` (the Bohr radius is `1/alpha`). `k` is the Dirac quantum
//! number with `j = |k| - 1/2`; `k = -1` is the ground state.
//!
//! The radial pair is `(G, F)`. `G` is the large component and carries the
//! orbital number `l = k` (`k > 0`) or `-k - 1` (`k < 0`); `F` is the small
//! component, smaller by roughly `Z alpha / 2`. In these units the system the
//! closed forms satisfy is
//!
//! ```text
//! G' = -(k/r) G - (1 + E + Z alpha / r) F
//! F' =  (k/r) F + (E - 1 + Z alpha / r) G
//! ```
//!
//! [`RadialConvention::AsPrinted`] flips the sign of the mass terms, which is
//! how the system is often transcribed; the closed forms do not satisfy it.

mod radial;
mod shooting;
mod wavefunction;

use serde::Serialize;

use crate::units::ALPHA;
use crate::{Error, HalfInt, Result};

pub use radial::{
    binding, energy, ode_residual, radial_f, radial_g, radial_parameters, radial_system_residual, sommerfeld, Level,
    RadialConvention, RadialFunctions, RadialParameters, Residual,
};
pub use shooting::{bohr_bracket, shoot_binding, shoot_eigenvalue};
pub use wavefunction::{
    assemble_wavefunction, probability_density, probability_in_region, probability_in_region_tol, ShellProbability,
    WaveFunction,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuantumNumbers {
    pub z: u32,
    pub n: u32,
    pub k: i32,
    pub mj: HalfInt,
}

impl QuantumNumbers {
    /// Checks `Z >= 1`, `n >= 1`, `1 <= |k| <= n`, `k != n`, `|m_j| <= j` and
    /// `Z alpha < |k|`.
    ///
    /// `k = +n` is excluded: a state with no radial nodes exists only for
    /// negative `k`.
    pub fn new(z: u32, n: u32, k: i32, mj: HalfInt) -> Result<Self> {
        check_nk(f64::from(z), n, k)?;
        if z == 0 {
            return Err(Error::domain("nuclear charge Z must be at least 1"));
        }
        let j2 = 2 * k.abs() - 1;
        if !mj.is_half_odd() || mj.twice().abs() > j2 {
            return Err(Error::domain(format!("m_j = {mj} is not a projection of j = {j2}/2")));
        }
        Ok(QuantumNumbers { z, n, k, mj })
    }

    /// The state with `m_j = j`.
    pub fn stretched(z: u32, n: u32, k: i32) -> Result<Self> {
        Self::new(z, n, k, HalfInt::from_twice(2 * k.abs() - 1))
    }

    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.k.abs() - 1)
    }

    /// `n - |k|`.
    pub fn radial_index(&self) -> u32 {
        self.n - self.k.unsigned_abs()
    }

    /// `Z alpha`.
    pub fn coupling(&self) -> f64 {
        f64::from(self.z) * ALPHA
    }

    /// Orbital number of the large component `G`.
    pub fn l_major(&self) -> u32 {
        if self.k > 0 {
            self.k as u32
        } else {
            (-self.k - 1) as u32
        }
    }

    /// Orbital number of the small component `F`, `2j - l_major`.
    pub fn l_minor(&self) -> u32 {
        (2 * self.k.unsigned_abs() - 1) - self.l_major()
    }
}

pub(crate) fn check_nk(z: f64, n: u32, k: i32) -> Result<()> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("nuclear charge must be finite and nonnegative, got {z}")));
    }
    if n == 0 {
        return Err(Error::domain("principal quantum number n must be at least 1"));
    }
    if k == 0 || k.unsigned_abs() > n {
        return Err(Error::domain(format!("k = {k} must satisfy 1 <= |k| <= n = {n}")));
    }
    if k == n as i32 {
        return Err(Error::domain(format!("k = +n = {k} has no bound state")));
    }
    if z * ALPHA >= f64::from(k.unsigned_abs()) {
        return Err(Error::domain(format!("s imaginary: Z alpha = {} >= |k| = {}", z * ALPHA, k.abs())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let half = HalfInt::HALF;
        assert!(QuantumNumbers::new(1, 1, -1, half).is_ok());
        assert!(QuantumNumbers::new(1, 1, 1, half).is_err());
        assert!(QuantumNumbers::new(1, 2, 1, half).is_ok());
        assert!(QuantumNumbers::new(1, 2, 2, half).is_err());
        assert!(QuantumNumbers::new(1, 2, -3, half).is_err());
        assert!(QuantumNumbers::new(1, 2, 0, half).is_err());
        assert!(QuantumNumbers::new(0, 1, -1, half).is_err());
        assert!(QuantumNumbers::new(1, 2, -1, HalfInt::from_twice(3)).is_err());
        assert!(QuantumNumbers::new(1, 2, -2, HalfInt::from_twice(-3)).is_ok());
        let err = QuantumNumbers::stretched(200, 1, -1).unwrap_err();
        assert!(err.to_string().contains("s imaginary"));
    }

    #[test]
    fn orbital_pairing() {
        let g = QuantumNumbers::stretched(1, 1, -1).unwrap();
        assert_eq!((g.l_major(), g.l_minor()), (0, 1));
        let p = QuantumNumbers::stretched(1, 2, 1).unwrap();
        assert_eq!((p.l_major(), p.l_minor()), (1, 0));
        let d = QuantumNumbers::stretched(1, 3, -2).unwrap();
        assert_eq!((d.l_major(), d.l_minor(), d.j()), (1, 2, HalfInt::from_twice(3)));
    }
}
