//! The 8-dimensional Pauli algebra inside the biquaternions, and the Dirac
//! matrices as 2x2 arrays of biquaternion blocks.
//!
//! Gamma indices follow the listing `0: diag`, `1: sz block`, `2: sx block`,
//! `3: sy block`. In the conventional Dirac basis `g^i = (0, s_i; -s_i, 0)`
//! this means index 1 is `g^3`, index 2 is `g^1` and index 3 is `g^2`; the
//! Clifford relations do not care about the relabeling.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::matrix::{to_matrix_linear, ComplexMatrix2};
use crate::{Biquaternion, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Real coefficients on `{I, sz, sy, sx, sy sx, sx sz, sz sy, sx sy sz}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct PauliAlgebraElement(pub [f64; 8]);

impl PauliAlgebraElement {
    pub fn basis(i: usize) -> Self {
        let mut q = [0.0; 8];
        q[i] = 1.0;
        PauliAlgebraElement(q)
    }

    /// Basis matrices in coefficient order.
    pub fn basis_matrices() -> [ComplexMatrix2; 8] {
        let (x, y, z) = (ComplexMatrix2::sigma_x(), ComplexMatrix2::sigma_y(), ComplexMatrix2::sigma_z());
        [ComplexMatrix2::IDENTITY, z, y, x, y * x, x * z, z * y, x * y * z]
    }

    /// `sum q_i B_i` computed with matrices.
    pub fn matrix_sum(&self) -> ComplexMatrix2 {
        Self::basis_matrices()
            .iter()
            .zip(self.0)
            .fold(ComplexMatrix2::ZERO, |acc, (b, q)| acc + b.scale(Complex64::from(q)))
    }
}

/// `(q0 + i q7) e0 - (i q1 + q4) e1 - (i q2 + q5) e2 - (i q3 + q6) e3`: the
/// biquaternion whose matrix image is [`PauliAlgebraElement::matrix_sum`].
pub fn embed(e: &PauliAlgebraElement) -> Biquaternion {
    let q = e.0;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    Biquaternion::new(c(q[0], q[7]), -c(q[4], q[1]), -c(q[5], q[2]), -c(q[6], q[3]))
}

/// The transcription `(q0 - i q7) e0 - (i q1 + q4) e1 - (i q2 + q5) e2 - (i q3 + q7) e3`.
/// Kept for comparison; it is not an algebra homomorphism (it loses `q6`).
pub fn embed_verbatim(e: &PauliAlgebraElement) -> Biquaternion {
    let q = e.0;
    let c = |re: f64, im: f64| Complex64::new(re, im);
    Biquaternion::new(c(q[0], -q[7]), -c(q[4], q[1]), -c(q[5], q[2]), -c(q[7], q[3]))
}

/// Inverse of [`embed`]. Every biquaternion is the image of exactly one
/// element.
pub fn unembed(q: &Biquaternion) -> PauliAlgebraElement {
    let [a, b, c, d] = q.0;
    PauliAlgebraElement([a.re, -b.im, -c.im, -d.im, -b.re, -c.re, -d.re, a.im])
}

/// The Hodge element `-i e0`; left multiplication by it is multiplication by
/// `-i I` on matrices.
pub fn hodge() -> Biquaternion {
    Biquaternion::E0.scale(-I)
}

/// 4x4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexMatrix4(pub [[Complex64; 4]; 4]);

impl ComplexMatrix4 {
    pub const ZERO: ComplexMatrix4 = ComplexMatrix4([[ZERO; 4]; 4]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        for (i, row) in m.0.iter_mut().enumerate() {
            row[i] = ONE;
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        ComplexMatrix4(rows.map(|r| r.map(Complex64::from)))
    }

    pub fn from_blocks(b: [[ComplexMatrix2; 2]; 2]) -> Self {
        let mut m = Self::ZERO;
        for (bi, brow) in b.iter().enumerate() {
            for (bj, blk) in brow.iter().enumerate() {
                for i in 0..2 {
                    for j in 0..2 {
                        m.0[2 * bi + i][2 * bj + j] = blk.0[i][j];
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix4(self.0.map(|r| r.map(|x| x * c)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().flatten().zip(other.0.iter().flatten()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl Add for ComplexMatrix4 {
    type Output = Self;

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

impl Sub for ComplexMatrix4 {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + rhs.scale(-ONE)
    }
}

impl Mul for ComplexMatrix4 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::ZERO;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

/// 2x2 array of biquaternion blocks; each block stands for its
/// [`to_matrix_linear`] image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracMatrix(pub [[Biquaternion; 2]; 2]);

impl DiracMatrix {
    pub fn expand(&self) -> ComplexMatrix4 {
        ComplexMatrix4::from_blocks(self.0.map(|r| r.map(|q| to_matrix_linear(&q))))
    }
}

impl Add for DiracMatrix {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j] + rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for DiracMatrix {
    type Output = Self;

    fn neg(self) -> Self {
        DiracMatrix(self.0.map(|r| r.map(|q| -q)))
    }
}

impl Mul for DiracMatrix {
    type Output = Self;

    /// Block product with the Hamilton product inside each block.
    fn mul(self, rhs: Self) -> Self {
        let mut out = DiracMatrix([[Biquaternion::ZERO; 2]; 2]);
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

fn off_diagonal(unit: usize) -> DiracMatrix {
    let q = Biquaternion::imaginary_unit(unit);
    DiracMatrix([[Biquaternion::ZERO, -q], [q, Biquaternion::ZERO]])
}

/// Gamma matrix by listing index:
/// `0: (e0, 0; 0, -e0)`, `1: (0, -i e1; i e1, 0)`, `2: (0, -i e3; i e3, 0)`,
/// `3: (0, -i e2; i e2, 0)`.
pub fn gamma(index: usize) -> Result<DiracMatrix> {
    match index {
        0 => Ok(DiracMatrix([[Biquaternion::E0, Biquaternion::ZERO], [Biquaternion::ZERO, -Biquaternion::E0]])),
        1 => Ok(off_diagonal(1)),
        2 => Ok(off_diagonal(3)),
        3 => Ok(off_diagonal(2)),
        _ => Err(Error::domain(format!("gamma index {index} is outside 0..=3"))),
    }
}

/// Which gamma set a Clifford report is computed for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GammaSet {
    /// [`gamma`], with the diagonal block corrected to `(e0, 0; 0, -e0)`.
    Corrected,
    /// The block form with `(e0, 0; 0, e0)` as the first matrix.
    LiteralBlocks,
    /// The four explicit 4x4 arrays as transcribed.
    LiteralArrays,
}

/// The transcribed 4x4 arrays. The second one is `(0, i sy; -i sy, 0)`,
/// which is not the image of its `sz` block form.
pub fn literal_array(index: usize) -> Result<ComplexMatrix4> {
    let (o, l) = (ZERO, ONE);
    let rows = match index {
        0 => [[l, o, o, o], [o, l, o, o], [o, o, -l, o], [o, o, o, -l]],
        1 => [[o, o, o, l], [o, o, -l, o], [o, -l, o, o], [l, o, o, o]],
        2 => [[o, o, o, l], [o, o, l, o], [o, -l, o, o], [-l, o, o, o]],
        3 => [[o, o, o, -I], [o, o, I, o], [o, I, o, o], [-I, o, o, o]],
        _ => return Err(Error::domain(format!("gamma index {index} is outside 0..=3"))),
    };
    Ok(ComplexMatrix4(rows))
}

fn gammas(set: GammaSet) -> [ComplexMatrix4; 4] {
    let g = |i| match set {
        GammaSet::Corrected => gamma(i).expect("index in range").expand(),
        GammaSet::LiteralBlocks if i == 0 => ComplexMatrix4::identity(),
        GammaSet::LiteralBlocks => gamma(i).expect("index in range").expand(),
        GammaSet::LiteralArrays => literal_array(i).expect("index in range"),
    };
    [g(0), g(1), g(2), g(3)]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnticommutatorEntry {
    pub mu: usize,
    pub nu: usize,
    /// Max entry of `{g_mu, g_nu} - 2 eta_{mu nu} I`.
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliffordReport {
    pub set: GammaSet,
    pub entries: Vec<AnticommutatorEntry>,
    pub max_deviation: f64,
    /// Pairs whose deviation exceeds 1e-14.
    pub failing: Vec<(usize, usize)>,
}

impl CliffordReport {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }
}

const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// `{g_mu, g_nu} - 2 eta_{mu nu} I` for all `mu <= nu` with
/// `eta = diag(+, -, -, -)`.
pub fn verify_clifford(set: GammaSet) -> CliffordReport {
    let g = gammas(set);
    let id = ComplexMatrix4::identity();
    let mut entries = Vec::new();
    for mu in 0..4 {
        for nu in mu..4 {
            let anti = g[mu] * g[nu] + g[nu] * g[mu];
            let target = if mu == nu { id.scale(Complex64::from(2.0 * ETA[mu])) } else { ComplexMatrix4::ZERO };
            entries.push(AnticommutatorEntry { mu, nu, deviation: anti.max_abs_diff(&target) });
        }
    }
    let max_deviation = entries.iter().map(|e| e.deviation).fold(0.0, f64::max);
    let failing = entries.iter().filter(|e| e.deviation > 1e-14).map(|e| (e.mu, e.nu)).collect();
    CliffordReport { set, entries, max_deviation, failing }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&PauliAlgebraElement::basis(0)), Biquaternion::E0);
        assert_eq!(embed(&PauliAlgebraElement::basis(7)), Biquaternion::E0.scale(I));
        assert_eq!(embed(&PauliAlgebraElement::basis(1)), Biquaternion::imaginary_unit(1).scale(-ONE));
        let triple = PauliAlgebraElement::basis(7).matrix_sum();
        assert!(triple.approx_eq(&ComplexMatrix2::IDENTITY.scale(I), 1e-15));
    }

    #[test]
    fn embed_matches_matrix_sum_on_basis() {
        for i in 0..8 {
            let e = PauliAlgebraElement::basis(i);
            assert!(to_matrix_linear(&embed(&e)).approx_eq(&e.matrix_sum(), 1e-15), "basis {i}");
            assert_eq!(unembed(&embed(&e)), e);
        }
    }

    #[test]
    fn verbatim_embedding_differs() {
        let e = PauliAlgebraElement::basis(7);
        assert!(!to_matrix_linear(&embed_verbatim(&e)).approx_eq(&e.matrix_sum(), 1e-3));
        let e = PauliAlgebraElement::basis(6);
        assert_eq!(embed_verbatim(&e), Biquaternion::ZERO);
    }

    #[test]
    fn hodge_element() {
        let h = hodge();
        assert_eq!(h * Biquaternion::E0, Biquaternion::E0.scale(-I));
        assert!((h * h).approx_eq(&-Biquaternion::E0, 0.0));
        let sz = embed(&PauliAlgebraElement::basis(1));
        let m = to_matrix_linear(&(h * sz));
        assert!(m.approx_eq(&ComplexMatrix2::sigma_z().scale(-I), 1e-15));
    }

    #[test]
    fn gamma_arrays() {
        let g0 = gamma(0).unwrap().expand();
        assert_eq!(g0, literal_array(0).unwrap());
        let g2 = gamma(2).unwrap().expand();
        let expect = ComplexMatrix4::from_real([
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(g2, expect);
        assert_eq!(gamma(3).unwrap().expand(), literal_array(3).unwrap());
        assert_ne!(gamma(1).unwrap().expand(), literal_array(1).unwrap());
        assert!(gamma(4).is_err());
    }

    #[test]
    fn clifford() {
        let r = verify_clifford(GammaSet::Corrected);
        assert!(r.passed(), "{r:?}");
        let g0 = gamma(0).unwrap().expand();
        let g1 = gamma(1).unwrap().expand();
        assert_eq!(g0 * g0, ComplexMatrix4::identity());
        assert_eq!(g1 * g1, ComplexMatrix4::identity().scale(-ONE));
        assert_eq!(g0 * g1 + g1 * g0, ComplexMatrix4::ZERO);
        let blocks = verify_clifford(GammaSet::LiteralBlocks);
        assert_eq!(blocks.failing, vec![(0, 1), (0, 2), (0, 3)]);
        let arrays = verify_clifford(GammaSet::LiteralArrays);
        assert!(arrays.failing.contains(&(1, 1)));
    }

    #[test]
    fn block_product_matches_expansion() {
        let a = gamma(1).unwrap() + gamma(0).unwrap();
        let b = gamma(2).unwrap() * gamma(3).unwrap();
        assert!((a * b).expand().max_abs_diff(&(a.expand() * b.expand())) < 1e-15);
    }
}
