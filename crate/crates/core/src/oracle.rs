//! Named identities checked against the 2x2 matrix representation.
//!
//! Each check evaluates the quaternion side and the matrix side separately
//! and reports the largest entrywise deviation.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::matrix::{ket_to_vector, to_matrix_linear, ComplexMatrix2, ComplexVector2};
use crate::spin::{self, apply, outer, rotate_operator, rotation, Axis, SpinOperator, SpinState};
use crate::{Biquaternion, Error, Result};

pub const IDENTITIES: [&str; 9] = [
    "homomorphism",
    "adjoint",
    "pauli-products",
    "eigen-x",
    "eigen-y",
    "eigen-z",
    "outer-products",
    "rotation-conjugation",
    "ket-map",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub identity: String,
    pub samples: usize,
    pub max_deviation: f64,
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Coefficients uniform in the unit square of each complex plane.
pub fn random_biquaternion<R: Rng>(rng: &mut R) -> Biquaternion {
    Biquaternion::new(random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng))
}

pub fn random_state<R: Rng>(rng: &mut R) -> SpinState {
    loop {
        if let Ok(s) = SpinState::from_amplitudes(random_complex(rng), random_complex(rng)) {
            return s;
        }
    }
}

/// Uniform direction on the sphere.
pub fn random_axis<R: Rng>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).sqrt();
    [rho * phi.cos(), rho * phi.sin(), z]
}

fn outer_matrix(a: &ComplexVector2, b: &ComplexVector2) -> ComplexMatrix2 {
    let (a, b) = (a.0, b.0);
    ComplexMatrix2::new(a[0] * b[0].conj(), a[0] * b[1].conj(), a[1] * b[0].conj(), a[1] * b[1].conj())
}

/// Runs one named identity on `samples` random inputs drawn from a ChaCha8
/// stream seeded with `seed`. Unknown names are a usage error.
pub fn matrix_oracle_check(identity: &str, samples: usize, seed: u64) -> Result<OracleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    let mut worst: f64 = 0.0;
    let mut count = samples;
    match identity {
        "homomorphism" => {
            for _ in 0..samples {
                let (a, b) = (random_biquaternion(rng), random_biquaternion(rng));
                let d = to_matrix_linear(&(a * b)).max_abs_diff(&(to_matrix_linear(&a) * to_matrix_linear(&b)));
                worst = worst.max(d);
            }
        }
        "adjoint" => {
            for _ in 0..samples {
                let a = random_biquaternion(rng);
                worst = worst.max(to_matrix_linear(&a.conj_both()).max_abs_diff(&to_matrix_linear(&a).adjoint()));
            }
        }
        "pauli-products" => {
            let mats = [ComplexMatrix2::sigma_x(), ComplexMatrix2::sigma_y(), ComplexMatrix2::sigma_z()];
            count = 9;
            for (i, a) in Axis::ALL.into_iter().enumerate() {
                for (j, b) in Axis::ALL.into_iter().enumerate() {
                    let q = spin::pauli_quaternion(a.into()) * spin::pauli_quaternion(b.into());
                    worst = worst.max(to_matrix_linear(&q).max_abs_diff(&(mats[i] * mats[j])));
                }
            }
        }
        "eigen-x" | "eigen-y" | "eigen-z" => {
            let axis: Axis = identity[6..].parse()?;
            let op = SpinOperator::along(axis);
            let m = to_matrix_linear(&op.value).scale(Complex64::from(op.scale));
            for _ in 0..samples {
                let s = random_state(rng);
                let lhs = ket_to_vector(&apply(&op, &s));
                worst = worst.max(lhs.max_abs_diff(&m.apply(&ket_to_vector(&s.value))));
            }
        }
        "outer-products" => {
            for _ in 0..samples {
                let (a, b) = (random_state(rng), random_state(rng));
                let lhs = to_matrix_linear(&outer(&a.value, &b.value));
                let rhs = outer_matrix(&ket_to_vector(&a.value), &ket_to_vector(&b.value));
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        "rotation-conjugation" => {
            for _ in 0..samples {
                let d = rotation(random_axis(rng), rng.gen_range(-10.0..10.0))?;
                let op = SpinOperator::along(Axis::ALL[rng.gen_range(0..3)]);
                let lhs = to_matrix_linear(&rotate_operator(&d, &op));
                let md = to_matrix_linear(&d.value);
                let rhs = (md.adjoint() * to_matrix_linear(&op.value) * md).scale(Complex64::from(op.scale));
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        "ket-map" => {
            for _ in 0..samples {
                let (op, s) = (random_biquaternion(rng), random_state(rng));
                let lhs = ket_to_vector(&(op * s.value));
                let rhs = to_matrix_linear(&op).apply(&ket_to_vector(&s.value));
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        other => {
            return Err(Error::usage(format!("unknown identity {other:?}; known: {}", IDENTITIES.join(", "))));
        }
    }
    Ok(OracleReport { identity: identity.to_string(), samples: count, max_deviation: worst })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for name in IDENTITIES {
            let r = matrix_oracle_check(name, 200, 7).unwrap();
            assert!(r.max_deviation < 1e-12, "{name}: {}", r.max_deviation);
        }
    }

    #[test]
    fn unknown_identity() {
        assert!(matches!(matrix_oracle_check("nope", 1, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn deterministic() {
        let a = matrix_oracle_check("homomorphism", 50, 3).unwrap();
        let b = matrix_oracle_check("homomorphism", 50, 3).unwrap();
        assert_eq!(a, b);
    }
}
