use num_complex::Complex64;
use serde::Serialize;

use super::radial::RadialFunctions;
use super::QuantumNumbers;
use crate::special::{quadrature_radial, quadrature_sphere};
use crate::spinor::{spinor_as_biquaternion, SpinorFunction};
use crate::{Biquaternion, Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);
const RADIAL_TOL: f64 = 1e-12;

/// Assembled state
/// `Psi = (A / r) [ G(Cr) y_major - i F(Cr) y_minor ]`
/// where `y_major` has `l = l_major` and `y_minor` has `l = l_minor`, both
/// with the same `j, m_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaveFunction {
    pub qn: QuantumNumbers,
    pub radial: RadialFunctions,
    pub major: SpinorFunction,
    pub minor: SpinorFunction,
    /// Normalization `A`.
    pub norm: f64,
    /// `rho` beyond which the radial density is below roundoff.
    pub rho_max: f64,
}

/// Builds the wavefunction and fixes `A` so that the density integrates to
/// one over all space.
pub fn assemble_wavefunction(qn: &QuantumNumbers) -> Result<WaveFunction> {
    let radial = RadialFunctions::exact(qn)?;
    let j = qn.j();
    let major = SpinorFunction::new(qn.l_major(), j, qn.mj)?;
    let minor = SpinorFunction::new(qn.l_minor(), j, qn.mj)?;
    let rho_max = 60.0 + 4.0 * f64::from(qn.n);
    // integral (F^2 + G^2) dr = (1/C) integral (F^2 + G^2) drho
    let total = quadrature_radial(
        |rho| {
            let (f, g) = radial.fg(rho);
            f * f + g * g
        },
        0.0,
        rho_max,
        RADIAL_TOL,
    )?;
    let norm = (radial.c / total.value).sqrt();
    if !norm.is_finite() {
        return Err(Error::numerical("normalization integral vanished"));
    }
    Ok(WaveFunction { qn: *qn, radial, major, minor, norm, rho_max })
}

impl WaveFunction {
    /// `A (F, G)` at radius `r`.
    pub fn radial_pair(&self, r: f64) -> (f64, f64) {
        let (f, g) = self.radial.at_radius(r);
        (self.norm * f, self.norm * g)
    }

    /// `Psi` composed from the two spinor biquaternions.
    pub fn psi(&self, r: f64, theta: f64, phi: f64) -> Result<Biquaternion> {
        let (f, g) = self.radial_pair(r);
        let ya = spinor_as_biquaternion(&self.major, theta, phi)?;
        let yb = spinor_as_biquaternion(&self.minor, theta, phi)?;
        Ok((ya.scale_real(g) - yb.scale(I * f)).scale_real(1.0 / r))
    }

    /// `Psi` written out coefficient by coefficient:
    ///
    /// ```text
    /// sqrt2 r Psi = (G C1 Y1 - i F C3 Y3) e0 + (-i G C1 Y1 - F C3 Y3) e1
    ///             + (-G C2 Y2 + i F C4 Y4) e2 + (-i G C2 Y2 - F C4 Y4) e3
    /// ```
    ///
    /// with `(C1, C2), (Y1, Y2)` from the major spinor and `(C3, C4), (Y3, Y4)`
    /// from the minor one.
    pub fn psi_expanded(&self, r: f64, theta: f64, phi: f64) -> Result<Biquaternion> {
        let (f, g) = self.radial_pair(r);
        let (y1, y2) = self.major.harmonics(theta, phi)?;
        let (y3, y4) = self.minor.harmonics(theta, phi)?;
        let a1 = y1 * (g * self.major.c1);
        let a2 = y2 * (g * self.major.c2);
        let b3 = y3 * (f * self.minor.c1);
        let b4 = y4 * (f * self.minor.c2);
        let q = Biquaternion::new(a1 - I * b3, -I * a1 - b3, -a2 + I * b4, -I * a2 - b4);
        Ok(q.scale_real(std::f64::consts::FRAC_1_SQRT_2 / r))
    }

    /// `conj_both(Psi) Psi`; its scalar part is the density.
    pub fn density_product(&self, r: f64, theta: f64, phi: f64) -> Result<Biquaternion> {
        let psi = self.psi(r, theta, phi)?;
        Ok(psi.conj_both() * psi)
    }

    /// `(A^2/r^2) [G^2 (|C1 Y1|^2 + |C2 Y2|^2) + F^2 (|C3 Y3|^2 + |C4 Y4|^2)]`.
    pub fn density_componentwise(&self, r: f64, theta: f64, phi: f64) -> Result<f64> {
        let (f, g) = self.radial_pair(r);
        let (y1, y2) = self.major.harmonics(theta, phi)?;
        let (y3, y4) = self.minor.harmonics(theta, phi)?;
        let ang_a = (self.major.c1 * self.major.c1) * y1.norm_sqr() + (self.major.c2 * self.major.c2) * y2.norm_sqr();
        let ang_b = (self.minor.c1 * self.minor.c1) * y3.norm_sqr() + (self.minor.c2 * self.minor.c2) * y4.norm_sqr();
        Ok((g * g * ang_a + f * f * ang_b) / (r * r))
    }
}

/// `Sc(conj_both(Psi) Psi)` at `(r, theta, phi)`, `r > 0` in natural units.
///
/// The `F G` cross terms cancel pointwise: they pair harmonics with equal `m`,
/// whose product is real, and the `e0`/`e1` (and `e2`/`e3`) contributions
/// enter with opposite signs.
pub fn probability_density(w: &WaveFunction, r: f64, theta: f64, phi: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("density needs r > 0, got {r}")));
    }
    Ok(w.density_product(r, theta, phi)?.scalar().re)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShellProbability {
    pub value: f64,
    pub error_estimate: f64,
}

/// Probability of `r_lo <= r < r_hi` (natural units; `r_hi` may be
/// infinite). The density separates, so this is the radial integral of
/// `A^2 G^2` and `A^2 F^2` times the sphere integrals of the two spinor
/// densities.
pub fn probability_in_region(w: &WaveFunction, r_lo: f64, r_hi: f64) -> Result<ShellProbability> {
    probability_in_region_tol(w, r_lo, r_hi, RADIAL_TOL)
}

/// [`probability_in_region`] with a caller-chosen relative tolerance for the
/// radial integrals.
pub fn probability_in_region_tol(w: &WaveFunction, r_lo: f64, r_hi: f64, tol: f64) -> Result<ShellProbability> {
    if !(r_lo >= 0.0) || !(r_hi > r_lo) {
        return Err(Error::domain(format!("need 0 <= r_lo < r_hi, got [{r_lo}, {r_hi}]")));
    }
    let c = w.radial.c;
    let lo = (c * r_lo).min(w.rho_max);
    let hi = (c * r_hi).min(w.rho_max);
    let ang = |s: &SpinorFunction| {
        quadrature_sphere(|t, p| {
            let (y1, y2) = s.harmonics(t, p).expect("quadrature angles are in range");
            s.c1 * s.c1 * y1.norm_sqr() + s.c2 * s.c2 * y2.norm_sqr()
        })
    };
    let (sa, sb) = (ang(&w.major), ang(&w.minor));
    if hi <= lo {
        return Ok(ShellProbability { value: 0.0, error_estimate: 0.0 });
    }
    let scale = w.norm * w.norm / c;
    let gg = quadrature_radial(|rho| w.radial.fg(rho).1.powi(2), lo, hi, tol)?;
    let ff = quadrature_radial(|rho| w.radial.fg(rho).0.powi(2), lo, hi, tol)?;
    let value = scale * (gg.value * sa + ff.value * sb);
    let error_estimate = scale * (gg.error_estimate * sa + ff.error_estimate * sb);
    Ok(ShellProbability { value, error_estimate })
}
