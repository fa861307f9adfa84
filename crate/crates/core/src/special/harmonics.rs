use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalHarmonicParams {
    pub l: u32,
    pub m: i32,
    pub theta: f64,
    pub phi: f64,
}

/// Orthonormal `Y_l^m(theta, phi)` with the Condon-Shortley phase.
pub fn spherical_harmonic(p: SphericalHarmonicParams) -> Result<Complex64> {
    if p.m.unsigned_abs() > p.l {
        return Err(Error::domain(format!("|m| = {} exceeds l = {}", p.m.abs(), p.l)));
    }
    if !(0.0..=PI).contains(&p.theta) || !p.phi.is_finite() {
        return Err(Error::domain("spherical harmonic needs theta in [0, pi] and finite phi"));
    }
    let m = p.m.unsigned_abs();
    let y =
        normalized_legendre(p.l, m, p.theta.cos(), p.theta.sin()) * Complex64::from_polar(1.0, f64::from(m) * p.phi);
    if p.m < 0 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        Ok(y.conj() * sign)
    } else {
        Ok(y)
    }
}

/// Shorthand for [`spherical_harmonic`].
pub fn ylm(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    spherical_harmonic(SphericalHarmonicParams { l, m, theta, phi })
}

/// `sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(x)` for `m >= 0`, including the
/// `(-1)^m` phase, by the standard stable recurrence in `l`.
fn normalized_legendre(l: u32, m: u32, x: f64, sin_theta: f64) -> f64 {
    // P_m^m
    let mut pmm = (1.0 / (4.0 * PI)).sqrt();
    for i in 1..=m {
        let i = f64::from(i);
        pmm *= -((2.0 * i + 1.0) / (2.0 * i)).sqrt() * sin_theta;
    }
    if l == m {
        return pmm;
    }
    let mf = f64::from(m);
    let mut prev = pmm;
    let mut cur = x * (2.0 * mf + 3.0).sqrt() * pmm;
    for ll in (m + 2)..=l {
        let lf = f64::from(ll);
        let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
        let lm1 = lf - 1.0;
        let b = ((lm1 * lm1 - mf * mf) / (4.0 * lm1 * lm1 - 1.0)).sqrt();
        let next = a * (x * cur - b * prev);
        prev = cur;
        cur = next;
    }
    cur
}
