//! Biquaternion algebra: Hamilton product, the three conjugations, norms,
//! inverses and zero divisors.
//!
//! A biquaternion is `q = q0 e0 + q1 e1 + q2 e2 + q3 e3` with complex
//! coefficients. The ordinary imaginary unit `i` commutes with every `ek`.
//! The cross-product convention is right-handed in unit order:
//! `e1 x e2 = e3`, `e2 x e3 = e1`, `e3 x e1 = e2`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::{Error, Result, ALGEBRA_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// `UNIT_PRODUCT[a][b] = (sign, c)` means `ea * eb = sign * ec`.
const UNIT_PRODUCT: [[(f64, usize); 4]; 4] = [
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
    [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2)],
    [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1)],
    [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0)],
];

/// Complex quaternion with coefficients on `e0, e1, e2, e3`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Biquaternion(pub [Complex64; 4]);

impl Biquaternion {
    pub const ZERO: Biquaternion = Biquaternion([ZERO; 4]);
    pub const E0: Biquaternion = Biquaternion([ONE, ZERO, ZERO, ZERO]);
    pub const E1: Biquaternion = Biquaternion([ZERO, ONE, ZERO, ZERO]);
    pub const E2: Biquaternion = Biquaternion([ZERO, ZERO, ONE, ZERO]);
    pub const E3: Biquaternion = Biquaternion([ZERO, ZERO, ZERO, ONE]);

    pub const fn new(q0: Complex64, q1: Complex64, q2: Complex64, q3: Complex64) -> Self {
        Biquaternion([q0, q1, q2, q3])
    }

    pub fn from_real(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Biquaternion([q0.into(), q1.into(), q2.into(), q3.into()])
    }

    /// The unit `ek`, `k` in `0..4`.
    pub fn unit(k: usize) -> Self {
        let mut q = Self::ZERO;
        q.0[k] = ONE;
        q
    }

    /// `i * ek`.
    pub fn imaginary_unit(k: usize) -> Self {
        Self::unit(k).scale(I)
    }

    pub fn coeffs(&self) -> [Complex64; 4] {
        self.0
    }

    /// `Sc(q) = q0`.
    pub fn scalar(&self) -> Complex64 {
        self.0[0]
    }

    /// `Vec(q) = q1 e1 + q2 e2 + q3 e3`.
    pub fn vector(&self) -> Biquaternion {
        Biquaternion([ZERO, self.0[1], self.0[2], self.0[3]])
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Biquaternion(self.0.map(|x| x * c))
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Biquaternion(self.0.map(|x| x * c))
    }

    /// `q-bar`: negate the vector part.
    pub fn conj_vec(&self) -> Self {
        let [a, b, c, d] = self.0;
        Biquaternion([a, -b, -c, -d])
    }

    /// `q*`: complex-conjugate every coefficient.
    pub fn conj_complex(&self) -> Self {
        Biquaternion(self.0.map(|x| x.conj()))
    }

    /// `q-bar*`: both conjugations.
    pub fn conj_both(&self) -> Self {
        self.conj_vec().conj_complex()
    }

    /// `|q|^2 = Sc(q conj_both(q))`, the sum of squares of the eight real parts.
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|x| x.norm_sqr()).sum()
    }

    /// The complex quadratic form `Sc(q conj_vec(q)) = q0^2 + q1^2 + q2^2 + q3^2`.
    ///
    /// `q` is invertible iff this is nonzero; then `q^-1 = conj_vec(q) / form`.
    pub fn quadratic_form(&self) -> Complex64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// True for a nonzero `q` whose quadratic form vanishes. The test is
    /// relative: `|form| <= 1e-12 * |q|^2`.
    pub fn is_zero_divisor(&self) -> bool {
        let n = self.norm_sq();
        n > f64::MIN_POSITIVE && self.quadratic_form().norm() <= ALGEBRA_TOL * n
    }

    /// Inverse through the quadratic form. Fails for zero and for zero divisors.
    pub fn try_inverse(&self) -> Result<Self> {
        if self.norm_sq() == 0.0 || self.is_zero_divisor() {
            return Err(Error::domain("no inverse: zero or zero divisor"));
        }
        let form = self.quadratic_form();
        Ok(self.conj_vec().scale(form.inv()))
    }

    /// Largest coefficient deviation `max_k |a_k - b_k|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// True when every coefficient has zero imaginary part within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().all(|x| x.im.abs() <= tol)
    }
}

impl Index<usize> for Biquaternion {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.0[k]
    }
}

impl Add for Biquaternion {
    type Output = Biquaternion;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        out += rhs;
        out
    }
}

impl AddAssign for Biquaternion {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Biquaternion {
    type Output = Biquaternion;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Biquaternion {
    type Output = Biquaternion;

    fn neg(self) -> Self {
        Biquaternion(self.0.map(|x| -x))
    }
}

/// Hamilton product, expanded from the unit multiplication table.
impl Mul for Biquaternion {
    type Output = Biquaternion;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [ZERO; 4];
        for (a, row) in UNIT_PRODUCT.iter().enumerate() {
            for (b, &(sign, c)) in row.iter().enumerate() {
                out[c] += self.0[a] * rhs.0[b] * sign;
            }
        }
        Biquaternion(out)
    }
}

impl Mul<Complex64> for Biquaternion {
    type Output = Biquaternion;

    fn mul(self, rhs: Complex64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Biquaternion> for Complex64 {
    type Output = Biquaternion;

    fn mul(self, rhs: Biquaternion) -> Biquaternion {
        rhs.scale(self)
    }
}

impl Mul<f64> for Biquaternion {
    type Output = Biquaternion;

    fn mul(self, rhs: f64) -> Self {
        self.scale_real(rhs)
    }
}

impl Mul<Biquaternion> for f64 {
    type Output = Biquaternion;

    fn mul(self, rhs: Biquaternion) -> Biquaternion {
        rhs.scale_real(self)
    }
}

impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i)e{}", c.re, c.im, k)?;
        }
        Ok(())
    }
}

/// Splits the product `ab` into its scalar part and vector part using the
/// dot/cross decomposition
///
/// `ab = Sc(a)Sc(b) - <Vec a, Vec b> + Sc(a)Vec(b) + Sc(b)Vec(a) + Vec a x Vec b`,
///
/// where `<.,.>` is the bilinear (not Hermitian) dot product.
pub fn decompose(a: &Biquaternion, b: &Biquaternion) -> (Complex64, Biquaternion) {
    let [a0, a1, a2, a3] = a.0;
    let [b0, b1, b2, b3] = b.0;
    let dot = a1 * b1 + a2 * b2 + a3 * b3;
    let cross = [a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1];
    let scalar = a0 * b0 - dot;
    let vector =
        Biquaternion([ZERO, a0 * b1 + b0 * a1 + cross[0], a0 * b2 + b0 * a2 + cross[1], a0 * b3 + b0 * a3 + cross[2]]);
    (scalar, vector)
}

/// Quaternion with real coefficients, an element of the division algebra H(R).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RealQuaternion(pub [f64; 4]);

impl RealQuaternion {
    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        RealQuaternion([q0, q1, q2, q3])
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = self.0;
        RealQuaternion([a, -b, -c, -d])
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// `q^-1 = conj(q) / |q|^2`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n == 0.0 {
            return Err(Error::domain("no inverse: zero quaternion"));
        }
        Ok(RealQuaternion(self.conj().0.map(|x| x / n)))
    }

    pub fn to_biquaternion(self) -> Biquaternion {
        let [a, b, c, d] = self.0;
        Biquaternion::from_real(a, b, c, d)
    }
}

impl Mul for RealQuaternion {
    type Output = RealQuaternion;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [0.0; 4];
        for (a, row) in UNIT_PRODUCT.iter().enumerate() {
            for (b, &(sign, c)) in row.iter().enumerate() {
                out[c] += sign * self.0[a] * rhs.0[b];
            }
        }
        RealQuaternion(out)
    }
}

impl From<RealQuaternion> for Biquaternion {
    fn from(q: RealQuaternion) -> Self {
        q.to_biquaternion()
    }
}

impl TryFrom<Biquaternion> for RealQuaternion {
    type Error = Error;

    fn try_from(q: Biquaternion) -> Result<Self> {
        if !q.is_real(ALGEBRA_TOL) {
            return Err(Error::domain("biquaternion has complex coefficients"));
        }
        Ok(RealQuaternion(q.0.map(|x| x.re)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hamilton_rules() {
        use Biquaternion as Q;
        assert_eq!(Q::E1 * Q::E2, Q::E3);
        assert_eq!(Q::E2 * Q::E3, Q::E1);
        assert_eq!(Q::E3 * Q::E1, Q::E2);
        assert_eq!(Q::E2 * Q::E1, -Q::E3);
        for k in 1..4 {
            assert_eq!(Q::unit(k) * Q::unit(k), -Q::E0);
        }
    }

    #[test]
    fn identity_element() {
        let q = Biquaternion::new(c(1.0, 2.0), c(-3.0, 0.5), c(0.0, 1.0), c(4.0, -4.0));
        assert_eq!(q * Biquaternion::E0, q);
        assert_eq!(Biquaternion::E0 * q, q);
    }

    #[test]
    fn pauli_product_maps_back_to_e1() {
        // (-i e3)(-i e2) = -e3 e2 = e1
        let qx = Biquaternion::imaginary_unit(3).scale(c(-1.0, 0.0));
        let qy = Biquaternion::imaginary_unit(2).scale(c(-1.0, 0.0));
        assert!((qx * qy).approx_eq(&Biquaternion::E1, 1e-15));
    }

    #[test]
    fn decompose_unit_cases() {
        let (s, v) = decompose(&Biquaternion::E1, &Biquaternion::E1);
        assert_eq!(s, c(-1.0, 0.0));
        assert_eq!(v, Biquaternion::ZERO);
        let (s, v) = decompose(&Biquaternion::E1, &Biquaternion::E2);
        assert_eq!(s, ZERO);
        assert_eq!(v, Biquaternion::E3);
    }

    #[test]
    fn conjugations() {
        let q = Biquaternion::E0 + Biquaternion::E1;
        assert_eq!(q.conj_vec(), Biquaternion::E0 - Biquaternion::E1);
        let (a, b, cc, d) = (1.5, -2.0, 0.25, 3.0);
        let q = Biquaternion::new(c(a, b), c(cc, d), ZERO, ZERO);
        assert_eq!(q.conj_both(), Biquaternion::new(c(a, -b), c(-cc, d), ZERO, ZERO));
        let lhs = (Biquaternion::E1 * Biquaternion::E2).conj_vec();
        let rhs = Biquaternion::E2.conj_vec() * Biquaternion::E1.conj_vec();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, -Biquaternion::E3);
    }

    #[test]
    fn norms() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q_up = Biquaternion::new(c(s, 0.0), c(0.0, -s), ZERO, ZERO);
        assert!((q_up.norm_sq() - 1.0).abs() < 1e-15);
        assert_eq!(Biquaternion::ZERO.norm_sq(), 0.0);
        let q = Biquaternion::new(c(1.0, 1.0), ZERO, ZERO, ZERO);
        assert_eq!(q.norm_sq(), 2.0);
        // Sc(q conj_both(q)) through the product
        let p = Biquaternion::new(c(0.3, -1.0), c(2.0, 0.1), c(-0.7, 0.7), c(0.0, 1.2));
        let sc = (p * p.conj_both()).scalar();
        assert!((sc.re - p.norm_sq()).abs() < 1e-14 && sc.im.abs() < 1e-14);
    }

    #[test]
    fn real_inverse() {
        let e0 = RealQuaternion::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(e0.inverse().unwrap(), e0);
        let e1 = RealQuaternion::new(0.0, 1.0, 0.0, 0.0);
        assert_eq!(e1.inverse().unwrap(), RealQuaternion::new(0.0, -1.0, 0.0, 0.0));
        let q = RealQuaternion::new(3.0, 0.0, 4.0, 0.0);
        let inv = q.inverse().unwrap();
        let expect = RealQuaternion::new(3.0 / 25.0, 0.0, -4.0 / 25.0, 0.0);
        for k in 0..4 {
            assert!((inv.0[k] - expect.0[k]).abs() < 1e-16);
        }
        let prod = q * inv;
        assert!((prod.0[0] - 1.0).abs() < 1e-14);
        assert!(prod.0[1..].iter().all(|x| x.abs() < 1e-14));
        assert!(matches!(RealQuaternion::default().inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_divisors() {
        let d = Biquaternion::new(c(0.5, 0.0), c(0.0, 0.5), ZERO, ZERO);
        let partner = Biquaternion::new(ONE, c(0.0, -1.0), ZERO, ZERO);
        // (e0 + i e1)(e0 - i e1) = 0
        assert!((d.scale_real(2.0) * partner).approx_eq(&Biquaternion::ZERO, 1e-15));
        assert!(d.is_zero_divisor());
        assert!(d.try_inverse().is_err());
        assert!(!Biquaternion::E0.is_zero_divisor());
        assert!(!Biquaternion::ZERO.is_zero_divisor());
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q_up = Biquaternion::new(c(s, 0.0), c(0.0, -s), ZERO, ZERO);
        // q+ is itself a zero divisor of the quadratic form: (1/2)(1 + (-i)^2) = 0
        assert!(q_up.quadratic_form().norm() < 1e-15);
        assert!(q_up.is_zero_divisor());
    }

    #[test]
    fn complex_inverse() {
        let q = Biquaternion::new(c(1.0, 0.5), c(0.2, -0.3), c(0.0, 1.0), c(2.0, 0.0));
        let inv = q.try_inverse().unwrap();
        assert!((q * inv).approx_eq(&Biquaternion::E0, 1e-14));
        assert!((inv * q).approx_eq(&Biquaternion::E0, 1e-14));
    }
}
