//! Spin-1/2 in the biquaternion representation.
//!
//! Pauli quaternions: `qx = -i e3`, `qy = -i e2`, `qz = -i e1`, `qI = e0`.
//! Kets live in the left ideal spanned by
//! `q+ = (e0 - i e1)/sqrt2` and `q- = (-e2 - i e3)/sqrt2`; bras are their
//! `conj_both` images. Operators act by left Hamilton multiplication.
//! Operator scales are in units of hbar.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::matrix::to_matrix_linear;
use crate::{Biquaternion, Error, Result, ALGEBRA_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Spatial axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Index of the quaternion unit carrying this axis: x -> e3, y -> e2, z -> e1.
    pub fn unit_index(self) -> usize {
        match self {
            Axis::X => 3,
            Axis::Y => 2,
            Axis::Z => 1,
        }
    }

    pub fn vector(self) -> [f64; 3] {
        match self {
            Axis::X => [1.0, 0.0, 0.0],
            Axis::Y => [0.0, 1.0, 0.0],
            Axis::Z => [0.0, 0.0, 1.0],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            other => Err(Error::usage(format!("unknown axis {other:?}"))),
        }
    }
}

/// Label of a Pauli quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl From<Axis> for Pauli {
    fn from(a: Axis) -> Self {
        match a {
            Axis::X => Pauli::X,
            Axis::Y => Pauli::Y,
            Axis::Z => Pauli::Z,
        }
    }
}

pub fn pauli_quaternion(p: Pauli) -> Biquaternion {
    match p {
        Pauli::I => Biquaternion::E0,
        Pauli::X => Biquaternion::imaginary_unit(3).scale(-ONE),
        Pauli::Y => Biquaternion::imaginary_unit(2).scale(-ONE),
        Pauli::Z => Biquaternion::imaginary_unit(1).scale(-ONE),
    }
}

/// `q+ = (e0 - i e1)/sqrt2`.
pub fn q_up() -> Biquaternion {
    Biquaternion::new(ONE, -I, ZERO, ZERO).scale_real(FRAC_1_SQRT_2)
}

/// `q- = (-e2 - i e3)/sqrt2`.
pub fn q_down() -> Biquaternion {
    Biquaternion::new(ZERO, ZERO, -ONE, -I).scale_real(FRAC_1_SQRT_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinLabel {
    Up,
    Down,
    Custom,
}

/// A normalized ket `c_up q+ + c_down q-`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinState {
    pub value: Biquaternion,
    pub label: SpinLabel,
}

impl SpinState {
    pub fn up() -> Self {
        SpinState { value: q_up(), label: SpinLabel::Up }
    }

    pub fn down() -> Self {
        SpinState { value: q_down(), label: SpinLabel::Down }
    }

    /// Normalized superposition of the basis kets.
    pub fn from_amplitudes(up: Complex64, down: Complex64) -> Result<Self> {
        let n = (up.norm_sqr() + down.norm_sqr()).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::domain("spin state amplitudes must be finite and not both zero"));
        }
        let value = q_up().scale(up / n) + q_down().scale(down / n);
        Ok(SpinState { value, label: SpinLabel::Custom })
    }

    /// Accepts a biquaternion that lies in the ket ideal (`q1 = -i q0`,
    /// `q3 = i q2`) and has unit norm.
    pub fn from_biquaternion(q: Biquaternion) -> Result<Self> {
        let [q0, q1, q2, q3] = q.0;
        if (q1 + I * q0).norm() > ALGEBRA_TOL || (q3 - I * q2).norm() > ALGEBRA_TOL {
            return Err(Error::domain("biquaternion is not in the span of q+ and q-"));
        }
        if (q.norm_sq() - 1.0).abs() > ALGEBRA_TOL {
            return Err(Error::domain("spin state must have unit norm"));
        }
        Ok(SpinState { value: q, label: SpinLabel::Custom })
    }

    /// Amplitudes on `(q+, q-)`.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        (inner_values(&q_up(), &self.value), inner_values(&q_down(), &self.value))
    }
}

/// Spin observable `scale * value`, `scale` in units of hbar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinOperator {
    pub value: Biquaternion,
    pub scale: f64,
}

impl SpinOperator {
    /// Requires the matrix image of `value` to be Hermitian.
    pub fn new(value: Biquaternion, scale: f64) -> Result<Self> {
        if !to_matrix_linear(&value).is_hermitian(ALGEBRA_TOL) {
            return Err(Error::domain("spin operator must map to a Hermitian matrix"));
        }
        Ok(SpinOperator { value, scale })
    }

    /// `S_a = (hbar/2) q_a`.
    pub fn along(axis: Axis) -> Self {
        SpinOperator { value: pauli_quaternion(axis.into()), scale: 0.5 }
    }

    pub fn sx() -> Self {
        Self::along(Axis::X)
    }

    pub fn sy() -> Self {
        Self::along(Axis::Y)
    }

    pub fn sz() -> Self {
        Self::along(Axis::Z)
    }

    /// The scaled quaternion `scale * value`.
    pub fn scaled(&self) -> Biquaternion {
        self.value.scale_real(self.scale)
    }
}

/// Operator action: `scale * (op.value * s.value)`.
pub fn apply(op: &SpinOperator, s: &SpinState) -> Biquaternion {
    (op.value * s.value).scale_real(op.scale)
}

/// The bra of a state, `conj_both(value)`.
pub fn bra(s: &SpinState) -> Biquaternion {
    s.value.conj_both()
}

/// For kets in the ideal, `conj_both(a) b = <a|b> (e0 - i e1)`; the inner
/// product is read off from the scalar and `e1` parts together.
pub(crate) fn inner_values(a: &Biquaternion, b: &Biquaternion) -> Complex64 {
    let p = a.conj_both() * *b;
    (p[0] + I * p[1]) * 0.5
}

/// `<a|b>`.
pub fn inner(a: &SpinState, b: &SpinState) -> Complex64 {
    inner_values(&a.value, &b.value)
}

/// Ket-bra product `|a><b|` as an operator quaternion: `(1/2) a conj_both(b)`.
/// The factor 1/2 makes its matrix image equal the matrix outer product.
pub fn outer(a: &Biquaternion, b: &Biquaternion) -> Biquaternion {
    (*a * b.conj_both()).scale_real(0.5)
}

/// Rebuilds `(2/hbar) S_a` from ket-bra products:
///
/// * z: `|+><+| - |-><-|`
/// * x: `|+><-| + |-><+|`
/// * y: `-i (|+><-| - |-><+|)`
pub fn outer_reconstruct(form: Axis) -> Biquaternion {
    let (up, down) = (q_up(), q_down());
    match form {
        Axis::Z => outer(&up, &up) - outer(&down, &down),
        Axis::X => outer(&up, &down) + outer(&down, &up),
        Axis::Y => (outer(&up, &down) - outer(&down, &up)).scale(-I),
    }
}

/// Spin rotation `D(n, phi) = e0 cos(phi/2) - (nx e3 + ny e2 + nz e1) sin(phi/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationOperator {
    pub axis: [f64; 3],
    pub angle: f64,
    pub value: Biquaternion,
}

impl RotationOperator {
    pub fn about(axis: Axis, angle: f64) -> Self {
        rotation(axis.vector(), angle).expect("coordinate axes are unit vectors")
    }

    /// `D^dagger`: the vector-part conjugate, equal to `D(n, -phi)`.
    pub fn dagger(&self) -> Self {
        RotationOperator { axis: self.axis, angle: -self.angle, value: self.value.conj_vec() }
    }

    /// Rotated ket `D s`.
    pub fn apply(&self, s: &SpinState) -> Biquaternion {
        self.value * s.value
    }
}

/// Builds `D(n, phi)`. The axis must be a unit vector within 1e-12.
pub fn rotation(axis: [f64; 3], angle: f64) -> Result<RotationOperator> {
    let len = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !angle.is_finite() || (len - 1.0).abs() > ALGEBRA_TOL {
        return Err(Error::domain(format!("rotation axis must be a unit vector (|n| = {len})")));
    }
    let (s, c) = (0.5 * angle).sin_cos();
    let [nx, ny, nz] = axis;
    let value = Biquaternion::from_real(c, -nz * s, -ny * s, -nx * s);
    Ok(RotationOperator { axis, angle, value })
}

/// `D^dagger S D`, scaled by the operator's `scale` (hbar/2 for spin).
pub fn rotate_operator(d: &RotationOperator, op: &SpinOperator) -> Biquaternion {
    (d.dagger().value * op.value * d.value).scale_real(op.scale)
}

/// Closed form for `D^dagger(n_i, phi) q_j D(n_i, phi)`:
/// `q_j cos(phi) + q_k sin(phi)` when `(i, j, k)` is cyclic in quaternion
/// unit order (`e1, e2, e3` = `z, y, x`), `q_j cos(phi) - q_k sin(phi)` for
/// the reversed order, and `q_j` when `i = j`. Unscaled.
pub fn conjugation_closed_form(rot: Axis, op: Axis, phi: f64) -> Biquaternion {
    let qj = pauli_quaternion(op.into());
    if rot == op {
        return qj;
    }
    let k = Axis::ALL.into_iter().find(|a| *a != rot && *a != op).expect("three axes");
    let (i, j) = (rot.unit_index(), op.unit_index());
    let sign = if (j + 3 - i) % 3 == 1 { 1.0 } else { -1.0 };
    let qk = pauli_quaternion(k.into());
    qj.scale_real(phi.cos()) + qk.scale_real(sign * phi.sin())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Raise,
    Lower,
}

/// Ladder quaternions with the half-normalization `S+- = (1/2)(Sx +- i Sy)`:
/// `q^+ = (e2 - i e3)/2`, `q^- = (-e2 - i e3)/2`.
pub fn ladder(which: Ladder) -> Biquaternion {
    match which {
        Ladder::Raise => Biquaternion::new(ZERO, ZERO, ONE, -I).scale_real(0.5),
        Ladder::Lower => Biquaternion::new(ZERO, ZERO, -ONE, -I).scale_real(0.5),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{ket_to_vector, ComplexMatrix2};
    use std::f64::consts::{FRAC_PI_2, PI};

    const TIGHT: f64 = 1e-14;

    #[test]
    fn pauli_table() {
        assert_eq!(pauli_quaternion(Pauli::X), Biquaternion::imaginary_unit(3).scale(-ONE));
        assert_eq!(pauli_quaternion(Pauli::I), Biquaternion::E0);
        assert_eq!(to_matrix_linear(&pauli_quaternion(Pauli::Y)), ComplexMatrix2::sigma_y());
    }

    #[test]
    fn eigen_equations() {
        let (up, down) = (SpinState::up(), SpinState::down());
        assert!(apply(&SpinOperator::sx(), &up).approx_eq(&q_down().scale_real(0.5), TIGHT));
        assert!(apply(&SpinOperator::sx(), &down).approx_eq(&q_up().scale_real(0.5), TIGHT));
        assert!(apply(&SpinOperator::sy(), &up).approx_eq(&q_down().scale(I * 0.5), TIGHT));
        assert!(apply(&SpinOperator::sy(), &down).approx_eq(&q_up().scale(-I * 0.5), TIGHT));
        assert!(apply(&SpinOperator::sz(), &up).approx_eq(&q_up().scale_real(0.5), TIGHT));
        assert!(apply(&SpinOperator::sz(), &down).approx_eq(&q_down().scale_real(-0.5), TIGHT));
    }

    #[test]
    fn bras() {
        let h = FRAC_1_SQRT_2;
        let expect_up = Biquaternion::new(ONE, -I, ZERO, ZERO).scale_real(h);
        let expect_down = Biquaternion::new(ZERO, ZERO, ONE, -I).scale_real(h);
        assert!(bra(&SpinState::up()).approx_eq(&expect_up, TIGHT));
        assert!(bra(&SpinState::down()).approx_eq(&expect_down, TIGHT));
        let s = SpinState::from_amplitudes(Complex64::new(0.6, 0.1), Complex64::new(0.0, -0.3)).unwrap();
        assert!(bra(&s).conj_both().approx_eq(&s.value, 0.0));
    }

    #[test]
    fn inner_products() {
        let (up, down) = (SpinState::up(), SpinState::down());
        assert!(inner(&up, &down).norm() < TIGHT);
        assert!((inner(&up, &up) - ONE).norm() < TIGHT);
        assert!((inner(&down, &down) - ONE).norm() < TIGHT);
        let sup = SpinState::from_amplitudes(ONE, ONE).unwrap();
        assert!((inner(&sup, &up) - FRAC_1_SQRT_2).norm() < TIGHT);
        let a = SpinState::from_amplitudes(Complex64::new(0.3, 0.4), Complex64::new(-0.2, 0.8)).unwrap();
        let b = SpinState::from_amplitudes(Complex64::new(1.0, -1.0), Complex64::new(0.5, 0.0)).unwrap();
        let via_vectors = ket_to_vector(&a.value).dot(&ket_to_vector(&b.value));
        assert!((inner(&a, &b) - via_vectors).norm() < TIGHT);
    }

    #[test]
    fn ideal_membership_is_checked() {
        assert!(SpinState::from_biquaternion(Biquaternion::E0).is_err());
        assert!(SpinState::from_biquaternion(q_up()).is_ok());
        assert!(SpinState::from_biquaternion(q_up().scale_real(2.0)).is_err());
    }

    #[test]
    fn reconstruct_from_outer_products() {
        assert!(outer_reconstruct(Axis::Z).approx_eq(&pauli_quaternion(Pauli::Z), TIGHT));
        assert!(outer_reconstruct(Axis::X).approx_eq(&pauli_quaternion(Pauli::X), TIGHT));
        assert!(outer_reconstruct(Axis::Y).approx_eq(&pauli_quaternion(Pauli::Y), TIGHT));
    }

    #[test]
    fn rotations() {
        let phi = 0.7;
        let d = RotationOperator::about(Axis::Z, phi);
        let expect = Biquaternion::from_real((phi / 2.0).cos(), -(phi / 2.0).sin(), 0.0, 0.0);
        assert!(d.value.approx_eq(&expect, TIGHT));
        let tilted = [0.6, 0.0, 0.8];
        assert!(rotation(tilted, 0.0).unwrap().value.approx_eq(&Biquaternion::E0, 0.0));
        assert!(RotationOperator::about(Axis::Z, 2.0 * PI).value.approx_eq(&-Biquaternion::E0, TIGHT));
        assert!(matches!(rotation([1.0, 1.0, 0.0], 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn rotated_operators() {
        let phi = 1.1;
        // D(z) on Sx: the matrix oracle gives sx cos - sy sin
        let got = rotate_operator(&RotationOperator::about(Axis::Z, phi), &SpinOperator::sx());
        let expect = (pauli_quaternion(Pauli::X).scale_real(phi.cos())
            - pauli_quaternion(Pauli::Y).scale_real(phi.sin()))
        .scale_real(0.5);
        assert!(got.approx_eq(&expect, 1e-15));
        // (z, y, x) is cyclic in unit order: plus sign
        let got = rotate_operator(&RotationOperator::about(Axis::Z, phi), &SpinOperator::sy());
        let expect = (pauli_quaternion(Pauli::Y).scale_real(phi.cos())
            + pauli_quaternion(Pauli::X).scale_real(phi.sin()))
        .scale_real(0.5);
        assert!(got.approx_eq(&expect, 1e-15));
        let got = rotate_operator(&RotationOperator::about(Axis::Z, phi), &SpinOperator::sz());
        assert!(got.approx_eq(&SpinOperator::sz().scaled(), 1e-15));
        // D(y, pi/2) on Sz
        let got = rotate_operator(&RotationOperator::about(Axis::Y, FRAC_PI_2), &SpinOperator::sz());
        let d = to_matrix_linear(&RotationOperator::about(Axis::Y, FRAC_PI_2).value);
        let oracle = d.adjoint() * ComplexMatrix2::sigma_z() * d;
        assert!(to_matrix_linear(&got).approx_eq(&oracle.scale(Complex64::new(0.5, 0.0)), 1e-15));
        assert!(got.approx_eq(&pauli_quaternion(Pauli::X).scale_real(-0.5), 1e-15));
    }

    #[test]
    fn ladders() {
        let raise = ladder(Ladder::Raise);
        let lower = ladder(Ladder::Lower);
        assert!((raise * q_down()).approx_eq(&q_up(), TIGHT));
        assert!((raise * q_up()).approx_eq(&Biquaternion::ZERO, TIGHT));
        assert!((lower * q_up()).approx_eq(&q_down(), TIGHT));
        assert!((lower * q_down()).approx_eq(&Biquaternion::ZERO, TIGHT));
        let from_ops = (pauli_quaternion(Pauli::X) - pauli_quaternion(Pauli::Y).scale(I)).scale_real(0.5);
        assert!(from_ops.approx_eq(&lower, TIGHT));
        assert!(raise.conj_both().approx_eq(&lower, 0.0));
        assert!((raise * raise).approx_eq(&Biquaternion::ZERO, TIGHT));
        assert!((lower * lower).approx_eq(&Biquaternion::ZERO, TIGHT));
    }
}
