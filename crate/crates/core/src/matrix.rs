//! Quaternion to 2x2 matrix maps and the ket/bra vector maps.
//!
//! [`to_matrix_linear`] is the complex-linear ring isomorphism
//! `q0 I + q1 (i sz) + q2 (i sy) + q3 (i sx)` and is the oracle every other
//! module is checked against. [`to_matrix_paper`] keeps the coefficient
//! conjugations of the original transformation; it is not complex-linear and
//! agrees with the oracle only when `q1, q2, q3` are purely imaginary.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::Biquaternion;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// 2x2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexMatrix2(pub [[Complex64; 2]; 2]);

impl ComplexMatrix2 {
    pub const ZERO: ComplexMatrix2 = ComplexMatrix2([[ZERO; 2]; 2]);
    pub const IDENTITY: ComplexMatrix2 = ComplexMatrix2([[ONE, ZERO], [ZERO, ONE]]);

    pub const fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Self {
        ComplexMatrix2([[m00, m01], [m10, m11]])
    }

    pub fn sigma_x() -> Self {
        Self::new(ZERO, ONE, ONE, ZERO)
    }

    pub fn sigma_y() -> Self {
        Self::new(ZERO, -I, I, ZERO)
    }

    pub fn sigma_z() -> Self {
        Self::new(ONE, ZERO, ZERO, -ONE)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix2(self.0.map(|row| row.map(|x| x * c)))
    }

    pub fn adjoint(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn det(&self) -> Complex64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn apply(&self, v: &ComplexVector2) -> ComplexVector2 {
        let [[a, b], [c, d]] = self.0;
        ComplexVector2([a * v.0[0] + b * v.0[1], c * v.0[0] + d * v.0[1]])
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().flatten().zip(other.0.iter().flatten()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }
}

impl Add for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (r, rr) in out.0.iter_mut().zip(rhs.0) {
            for (x, y) in r.iter_mut().zip(rr) {
                *x += y;
            }
        }
        out
    }
}

impl Sub for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = ComplexMatrix2;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::ZERO;
        for r in 0..2 {
            for c in 0..2 {
                out.0[r][c] = self.0[r][0] * rhs.0[0][c] + self.0[r][1] * rhs.0[1][c];
            }
        }
        out
    }
}

/// Column 2-vector (ket) or, when produced by [`bra_to_vector`], the entries
/// of a row vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexVector2(pub [Complex64; 2]);

impl ComplexVector2 {
    pub const fn new(v0: Complex64, v1: Complex64) -> Self {
        ComplexVector2([v0, v1])
    }

    /// Hermitian inner product `<self|other>`.
    pub fn dot(&self, other: &Self) -> Complex64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    pub fn norm_sq(&self) -> f64 {
        self.0[0].norm_sqr() + self.0[1].norm_sqr()
    }

    pub fn conj(&self) -> Self {
        ComplexVector2(self.0.map(|x| x.conj()))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexVector2(self.0.map(|x| x * c))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0[0] - other.0[0]).norm().max((self.0[1] - other.0[1]).norm())
    }
}

/// `M(q) = [[q0 + i q1, q2 + i q3], [-q2 + i q3, q0 - i q1]]`.
///
/// Under this map `-i e1 -> sz`, `-i e2 -> sy`, `-i e3 -> sx`.
pub fn to_matrix_linear(q: &Biquaternion) -> ComplexMatrix2 {
    let [q0, q1, q2, q3] = q.0;
    ComplexMatrix2::new(q0 + I * q1, q2 + I * q3, -q2 + I * q3, q0 - I * q1)
}

/// Inverse of [`to_matrix_linear`].
pub fn from_matrix_linear(m: &ComplexMatrix2) -> Biquaternion {
    let [[a, b], [c, d]] = m.0;
    Biquaternion::new((a + d) * 0.5, (a - d) * (-I * 0.5), (b - c) * 0.5, (b + c) * (-I * 0.5))
}

/// The transformation with conjugated lower-row coefficients:
/// `[[q0 + i q1, q2 + i q3], [q2* + (i q3)*, q0 - (i q1)*]]`.
pub fn to_matrix_paper(q: &Biquaternion) -> ComplexMatrix2 {
    let [q0, q1, q2, q3] = q.0;
    ComplexMatrix2::new(q0 + I * q1, q2 + I * q3, q2.conj() + (I * q3).conj(), q0 - (I * q1).conj())
}

/// A bicomplex number `a + b e1`, with `e1` playing the role of the
/// matrix-level imaginary unit.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Bicomplex {
    a: Complex64,
    b: Complex64,
}

impl Bicomplex {
    /// Read `e1` as `i`.
    fn as_complex(self) -> Complex64 {
        self.a + I * self.b
    }

    /// Conjugation of the `e1` unit: `a - b e1`.
    fn conj_e1(self) -> Self {
        Bicomplex { a: self.a, b: -self.b }
    }
}

/// Compact form `q = z + w e2` with `z = q0 + q1 e1`, `w = q2 + q3 e1`,
/// mapped to `[[z, w], [-w*, z*]]` where `*` conjugates the `e1` unit.
pub fn to_matrix_ks(q: &Biquaternion) -> ComplexMatrix2 {
    let [q0, q1, q2, q3] = q.0;
    let z = Bicomplex { a: q0, b: q1 };
    let w = Bicomplex { a: q2, b: q3 };
    ComplexMatrix2::new(z.as_complex(), w.as_complex(), -w.conj_e1().as_complex(), z.conj_e1().as_complex())
}

/// Ket map `a(q) = (sqrt2/2) (q0 + i q1, -q2 + i q3)`.
pub fn ket_to_vector(q: &Biquaternion) -> ComplexVector2 {
    let [q0, q1, q2, q3] = q.0;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexVector2([(q0 + I * q1) * h, (-q2 + I * q3) * h])
}

/// Row-vector map for a bra quaternion `b = conj_both(q)`:
/// `(sqrt2/2) (b0 + i b1, b2 + i b3)`, which equals the conjugate of
/// `ket_to_vector(q)`.
pub fn bra_to_vector(b: &Biquaternion) -> ComplexVector2 {
    let [b0, b1, b2, b3] = b.0;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexVector2([(b0 + I * b1) * h, (b2 + I * b3) * h])
}
