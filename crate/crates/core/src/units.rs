//! Physical constants and unit conversions.
//!
//! Internally everything is in natural units with `hbar = c = m = 1`: energies
//! in `mc^2`, lengths in the reduced Compton wavelength `hbar / (mc)`.

/// Fine-structure constant (CODATA 2018).
pub const ALPHA: f64 = 7.297_352_569_3e-3;

/// Electron rest energy in eV (CODATA 2018).
pub const MC2_EV: f64 = 510_998.95;

/// Bohr radius `hbar / (m c alpha)` in natural length units.
pub const BOHR_RADIUS: f64 = 1.0 / ALPHA;

pub fn bohr_to_natural(r: f64) -> f64 {
    r * BOHR_RADIUS
}

pub fn natural_to_bohr(r: f64) -> f64 {
    r / BOHR_RADIUS
}

pub fn mc2_to_ev(e: f64) -> f64 {
    e * MC2_EV
}
