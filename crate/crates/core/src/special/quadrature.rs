use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::GaussLegendre;
use serde::Serialize;

use crate::{Error, Result};

/// Gauss-Legendre rule of the given degree, cached for the two degrees the
/// adaptive integrator uses.
pub fn gauss_legendre(degree: usize) -> Result<GaussLegendre> {
    let d = NonZeroUsize::new(degree).ok_or_else(|| Error::domain("quadrature degree must be positive"))?;
    Ok(GaussLegendre::new(d))
}

fn cached(cell: &'static OnceLock<GaussLegendre>, degree: usize) -> &'static GaussLegendre {
    cell.get_or_init(|| gauss_legendre(degree).expect("nonzero degree"))
}

static LOW: OnceLock<GaussLegendre> = OnceLock::new();
static HIGH: OnceLock<GaussLegendre> = OnceLock::new();
static SPHERE: OnceLock<SphereRule> = OnceLock::new();

/// Product rule on the unit sphere: Gauss-Legendre in `cos(theta)` times the
/// uniform (trapezoid) rule in `phi`. Exact for band-limited integrands with
/// degree below `2 n_theta` in `cos(theta)` and `|m| < n_phi`.
#[derive(Debug, Clone)]
pub struct SphereRule {
    n_theta: usize,
    n_phi: usize,
    // (theta, weight) pairs
    theta: Vec<(f64, f64)>,
}

impl SphereRule {
    pub fn new(n_theta: usize, n_phi: usize) -> Result<Self> {
        if n_phi == 0 {
            return Err(Error::domain("sphere rule needs at least one phi node"));
        }
        let gl = gauss_legendre(n_theta)?;
        let theta = gl.iter().map(|(x, w)| (x.acos(), *w)).collect();
        Ok(SphereRule { n_theta, n_phi, theta })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    /// All `(theta, phi, weight)` nodes; the weights sum to `4 pi`.
    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let dphi = 2.0 * PI / self.n_phi as f64;
        self.theta.iter().flat_map(move |&(t, w)| (0..self.n_phi).map(move |j| (t, j as f64 * dphi, w * dphi)))
    }

    /// `integral f(theta, phi) dOmega`.
    pub fn integrate<F: FnMut(f64, f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes().map(|(t, p, w)| w * f(t, p)).sum()
    }
}

impl Default for SphereRule {
    /// 64 x 128 nodes.
    fn default() -> Self {
        SphereRule::new(64, 128).expect("valid default rule")
    }
}

/// Integral over the unit sphere with the default 64 x 128 rule.
pub fn quadrature_sphere<F: FnMut(f64, f64) -> f64>(f: F) -> f64 {
    SPHERE.get_or_init(SphereRule::default).integrate(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialIntegral {
    pub value: f64,
    pub error_estimate: f64,
    pub intervals: usize,
    pub evaluations: usize,
}

struct Piece {
    a: f64,
    b: f64,
    value: f64,
    abs_value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

const MAX_INTERVALS: usize = 2000;

/// Adaptive Gauss-Legendre integral of `f` over `[lo, hi]`.
///
/// Each subinterval is evaluated with 20 and 40 point rules; their difference
/// is the error estimate. The interval with the largest estimate is bisected
/// until the summed estimate falls below `rel_tol * integral |f|`. Using the
/// absolute integral as the scale keeps integrals that cancel to zero
/// (orthogonality checks) from chasing an unreachable relative target.
pub fn quadrature_radial<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, rel_tol: f64) -> Result<RadialIntegral> {
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::domain(format!("radial interval [{lo}, {hi}] must be finite and ordered")));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::domain("radial tolerance must be positive"));
    }
    let low = cached(&LOW, 20);
    let high = cached(&HIGH, 40);
    let mut evaluations = 0;
    let mut piece = |a: f64, b: f64, f: &mut F| -> Result<Piece> {
        let (half, mid) = (0.5 * (b - a), 0.5 * (a + b));
        let coarse = half * low.iter().map(|(x, w)| w * f(mid + half * x)).sum::<f64>();
        let (mut value, mut abs_value) = (0.0, 0.0);
        for (x, w) in high.iter() {
            let y = f(mid + half * x);
            value += w * y;
            abs_value += w * y.abs();
        }
        value *= half;
        abs_value *= half;
        evaluations += low.degree() + high.degree();
        if !value.is_finite() || !coarse.is_finite() {
            return Err(Error::numerical(format!("integrand is not finite on [{a}, {b}]")));
        }
        Ok(Piece { a, b, value, abs_value, error: (value - coarse).abs() })
    };
    let mut heap = BinaryHeap::new();
    heap.push(piece(lo, hi, &mut f)?);
    loop {
        let (value, abs_value, error) =
            heap.iter().fold((0.0, 0.0, 0.0), |(v, a, e), p| (v + p.value, a + p.abs_value, e + p.error));
        if error <= rel_tol * abs_value || abs_value == 0.0 {
            return Ok(RadialIntegral { value, error_estimate: error, intervals: heap.len(), evaluations });
        }
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::numerical(format!(
                "radial quadrature did not converge: value {value:e}, error estimate {error:e}, \
                 target {:e}, {} intervals",
                rel_tol * abs_value,
                heap.len()
            )));
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(piece(worst.a, mid, &mut f)?);
        heap.push(piece(mid, worst.b, &mut f)?);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::ylm;

    #[test]
    fn sphere_weights_sum_to_area() {
        let area = quadrature_sphere(|_, _| 1.0);
        assert!((area - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn harmonics_orthonormal_on_sphere() {
        let pairs = [(0, 0), (1, -1), (1, 0), (2, 1), (3, -2), (4, 4)];
        for &(l1, m1) in &pairs {
            for &(l2, m2) in &pairs {
                let re = quadrature_sphere(|t, p| (ylm(l1, m1, t, p).unwrap().conj() * ylm(l2, m2, t, p).unwrap()).re);
                let expect = if (l1, m1) == (l2, m2) { 1.0 } else { 0.0 };
                assert!((re - expect).abs() < 1e-12, "({l1},{m1}) ({l2},{m2}): {re}");
            }
        }
    }

    #[test]
    fn radial_known_integrals() {
        let r = quadrature_radial(|x| x * x * (-x).exp(), 0.0, 60.0, 1e-13).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = quadrature_radial(|x| (1.0 / x.sqrt()).min(1e8), 1e-12, 1.0, 1e-10).unwrap();
        assert!((r.value - 2.0).abs() < 1e-5);
        let r = quadrature_radial(|x| x.sin(), 0.0, 2.0 * PI, 1e-12).unwrap();
        assert!(r.value.abs() < 1e-12);
    }

    #[test]
    fn radial_rejects_bad_input() {
        assert!(quadrature_radial(|x| x, 1.0, 0.0, 1e-8).is_err());
        assert!(quadrature_radial(|x| x, 0.0, f64::INFINITY, 1e-8).is_err());
        assert!(matches!(quadrature_radial(|_| f64::NAN, 0.0, 1.0, 1e-8), Err(Error::Numerical(_))));
    }
}
