//! Spin spherical harmonics `y_l^{j m_j}` coupling orbital `l` with spin 1/2.
//!
//! The spinor is `C1 Y_l^{m_j - 1/2} q+ + C2 Y_l^{m_j + 1/2} q-`; all
//! normalization is folded into `C1, C2` so the sphere-integrated density is 1.
//! Signs follow the Condon-Shortley Clebsch-Gordan convention for coupling
//! `l (x) 1/2` in that order:
//!
//! * `j = l + 1/2`: `C1 = sqrt((l + m + 1/2)/(2l+1))`, `C2 = sqrt((l - m + 1/2)/(2l+1))`
//! * `j = l - 1/2`: `C1 = -sqrt((l - m + 1/2)/(2l+1))`, `C2 = sqrt((l + m + 1/2)/(2l+1))`

use num_complex::Complex64;
use serde::Serialize;

use crate::matrix::ComplexVector2;
use crate::special::ylm;
use crate::spin::{inner_values, q_down, q_up};
use crate::{Biquaternion, Error, HalfInt, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinorFunction {
    pub l: u32,
    pub j: HalfInt,
    pub mj: HalfInt,
    pub c1: f64,
    pub c2: f64,
}

impl SpinorFunction {
    pub fn new(l: u32, j: HalfInt, mj: HalfInt) -> Result<Self> {
        let (c1, c2) = clebsch_coefficients(l, j, mj)?;
        Ok(SpinorFunction { l, j, mj, c1, c2 })
    }

    /// Orbital indices `(m_j - 1/2, m_j + 1/2)` of the two components.
    pub fn orbital_m(&self) -> (i32, i32) {
        let m2 = self.mj.twice();
        ((m2 - 1) / 2, (m2 + 1) / 2)
    }

    /// `(Y_l^{m_j - 1/2}, Y_l^{m_j + 1/2})`, with a component set to zero when
    /// its `|m|` exceeds `l` (its coefficient vanishes there as well).
    pub fn harmonics(&self, theta: f64, phi: f64) -> Result<(Complex64, Complex64)> {
        let (m1, m2) = self.orbital_m();
        let y = |m: i32| {
            if m.unsigned_abs() > self.l {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                ylm(self.l, m, theta, phi)
            }
        };
        Ok((y(m1)?, y(m2)?))
    }
}

/// Normalized coefficients `(C1, C2)` for the triple `(l, j, m_j)`.
pub fn clebsch_coefficients(l: u32, j: HalfInt, mj: HalfInt) -> Result<(f64, f64)> {
    let l2 = 2 * l as i32;
    let (j2, m2) = (j.twice(), mj.twice());
    if !(j2 == l2 + 1 || j2 == l2 - 1) || j2 <= 0 {
        return Err(Error::domain(format!("j = {j} is not l +- 1/2 for l = {l}")));
    }
    if !mj.is_half_odd() || m2.abs() > j2 {
        return Err(Error::domain(format!("m_j = {mj} is not a valid projection of j = {j}")));
    }
    let lf = f64::from(l);
    let m = mj.value();
    let denom = 2.0 * lf + 1.0;
    let plus = ((lf + m + 0.5) / denom).sqrt();
    let minus = ((lf - m + 0.5) / denom).sqrt();
    if j2 == l2 + 1 {
        Ok((plus, minus))
    } else {
        Ok((-minus, plus))
    }
}

/// `(C1 Y_l^{m_j - 1/2}, C2 Y_l^{m_j + 1/2})`.
pub fn spinor_as_vector(s: &SpinorFunction, theta: f64, phi: f64) -> Result<ComplexVector2> {
    let (y1, y2) = s.harmonics(theta, phi)?;
    Ok(ComplexVector2::new(y1 * s.c1, y2 * s.c2))
}

/// `C1 Y1 q+ + C2 Y2 q-`, i.e.
/// `(C1 Y1 e0 - i C1 Y1 e1 - C2 Y2 e2 - i C2 Y2 e3) / sqrt2`.
pub fn spinor_as_biquaternion(s: &SpinorFunction, theta: f64, phi: f64) -> Result<Biquaternion> {
    let v = spinor_as_vector(s, theta, phi)?;
    Ok(q_up().scale(v.0[0]) + q_down().scale(v.0[1]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinBasis {
    Up,
    Down,
}

/// Density `|<q+-|y>|^2` of finding the spinor in the given spin state.
pub fn measure_probability(state: SpinBasis, s: &SpinorFunction, theta: f64, phi: f64) -> Result<f64> {
    let y = spinor_as_biquaternion(s, theta, phi)?;
    let basis = match state {
        SpinBasis::Up => q_up(),
        SpinBasis::Down => q_down(),
    };
    Ok(inner_values(&basis, &y).norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ket_to_vector;
    use std::f64::consts::PI;

    fn h(s: &str) -> HalfInt {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_coefficients() {
        let (c1, c2) = clebsch_coefficients(2, h("5/2"), h("3/2")).unwrap();
        assert!((c1 - 2.0 / 5f64.sqrt()).abs() < 1e-15);
        assert!((c2 - 1.0 / 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(clebsch_coefficients(0, h("1/2"), h("1/2")).unwrap(), (1.0, 0.0));
        let (c1, c2) = clebsch_coefficients(1, h("1/2"), h("1/2")).unwrap();
        assert!((c1 + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((c2 - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn invalid_triples() {
        assert!(clebsch_coefficients(0, h("-1/2"), h("1/2")).is_err());
        assert!(clebsch_coefficients(2, h("1/2"), h("1/2")).is_err());
        assert!(clebsch_coefficients(1, h("3/2"), h("5/2")).is_err());
        assert!(clebsch_coefficients(1, h("3/2"), h("1")).is_err());
    }

    #[test]
    fn worked_example_forms() {
        let s = SpinorFunction::new(2, h("5/2"), h("3/2")).unwrap();
        let (t, p) = (1.2, 0.4);
        let (y21, y22) = (ylm(2, 1, t, p).unwrap(), ylm(2, 2, t, p).unwrap());
        let r5 = 5f64.sqrt();
        let v = spinor_as_vector(&s, t, p).unwrap();
        assert!(v.max_abs_diff(&ComplexVector2::new(y21 * (2.0 / r5), y22 * (1.0 / r5))) < 1e-15);
        let i = Complex64::i();
        let expect = Biquaternion::new(y21 * (2.0 / r5), -i * y21 * (2.0 / r5), -y22 / r5, -i * y22 / r5)
            .scale_real(std::f64::consts::FRAC_1_SQRT_2);
        assert!(spinor_as_biquaternion(&s, t, p).unwrap().approx_eq(&expect, 1e-15));
        let down = measure_probability(SpinBasis::Down, &s, t, p).unwrap();
        assert!((down - y22.norm_sqr() / 5.0).abs() < 1e-15);
    }

    #[test]
    fn s_wave() {
        let s = SpinorFunction::new(0, h("1/2"), h("1/2")).unwrap();
        let y00 = 0.5 / PI.sqrt();
        let q = spinor_as_biquaternion(&s, 0.3, 5.0).unwrap();
        assert!(q.approx_eq(&q_up().scale_real(y00), 1e-15));
        let v = spinor_as_vector(&s, 0.3, 5.0).unwrap();
        assert!(v.max_abs_diff(&ComplexVector2::new(Complex64::from(y00), Complex64::from(0.0))) < 1e-15);
        let up = measure_probability(SpinBasis::Up, &s, 2.0, 1.0).unwrap();
        assert!((up - 1.0 / (4.0 * PI)).abs() < 1e-15);
        assert!(ket_to_vector(&q).max_abs_diff(&v) < 1e-15);
    }
}
