//! Independent eigenvalue check: integrate the radial system from both ends
//! and bisect on the matching condition.

use ode_solvers::{Dop853, OutputType, System, Vector2, Vector3};

use super::radial::RadialConvention;
use super::QuantumNumbers;
use crate::{Error, Result};

const RTOL: f64 = 1e-13;
const ATOL: f64 = 1e-40;
const R0: f64 = 1e-6;

/// The radial system in `x = ln r`, state `(G, F, r)`, written in terms of
/// the binding `eps = 1 - E` so nothing cancels near `E = 1`.
///
/// `r` rides along as a state variable so the system is autonomous: the
/// Dop853 stage abscissae in ode_solvers 0.6 are wrong for explicit `x`
/// dependence (it fails on `y' = cos x`), while autonomous systems are fine.
struct Radial {
    za: f64,
    k: f64,
    eps: f64,
    convention: RadialConvention,
}

impl System<f64, Vector3<f64>> for Radial {
    fn system(&self, _x: f64, y: &Vector3<f64>, dy: &mut Vector3<f64>) {
        let r = y[2];
        let (g, f) = (y[0], y[1]);
        let (dg, df) = match self.convention {
            RadialConvention::Resolved => {
                (-self.k * g - ((2.0 - self.eps) * r + self.za) * f, self.k * f + (self.za - self.eps * r) * g)
            }
            RadialConvention::AsPrinted => {
                (-self.k * g + (self.eps * r - self.za) * f, self.k * f + ((2.0 - self.eps) * r + self.za) * g)
            }
        };
        dy[0] = dg;
        dy[1] = df;
        dy[2] = r;
    }
}

fn integrate(sys: Radial, r_from: f64, r_to: f64, y0: Vector2<f64>) -> Result<Vector2<f64>> {
    let (x0, x1) = (r_from.ln(), r_to.ln());
    // The dominant solution is smooth enough in ln r that the default
    // stiffness heuristic can misfire on the recessive mode; it is disabled.
    let mut solver = Dop853::from_param(
        sys,
        x0,
        x1,
        x1 - x0,
        Vector3::new(y0[0], y0[1], r_from),
        RTOL,
        ATOL,
        0.9,
        0.0,
        0.333,
        6.0,
        0.5,
        0.0,
        100_000,
        u32::MAX,
        OutputType::Sparse,
    );
    solver.integrate().map_err(|e| Error::numerical(format!("radial integration failed: {e}")))?;
    solver
        .y_out()
        .last()
        .map(|y| Vector2::new(y[0], y[1]))
        .ok_or_else(|| Error::numerical("radial integration produced no output"))
}

struct Matching {
    za: f64,
    k: i32,
    r_match: f64,
    r_max: f64,
    convention: RadialConvention,
}

impl Matching {
    /// Normalized Wronskian `G_out F_in - G_in F_out` at the matching radius.
    fn wronskian(&self, eps: f64) -> Result<f64> {
        let (za, kf) = (self.za, f64::from(self.k));
        let c = (eps * (2.0 - eps)).sqrt();
        let sys = || Radial { za, k: kf, eps, convention: self.convention };
        // small r: G ~ r^s with F/G = -(s + k)/(Z alpha)
        let s = (kf * kf - za * za).sqrt();
        let out = integrate(sys(), R0, self.r_match, Vector2::new(1.0, -(s + kf) / za))?;
        // large r: the decaying exponential
        let tail = match self.convention {
            RadialConvention::Resolved => eps / c,
            RadialConvention::AsPrinted => -(2.0 - eps) / c,
        };
        let inn = integrate(sys(), self.r_max, self.r_match, Vector2::new(1.0, tail))?;
        let w = out[0] * inn[1] - inn[0] * out[1];
        Ok(w / (out.norm() * inn.norm()))
    }
}

/// Energy bracket `(E_lo, E_hi)` around the state from the non-relativistic
/// levels at `n +- 1/2`: binding between `(Z alpha)^2 / (2 (n + 1/2)^2)` and
/// `(Z alpha)^2 / (2 (n - 1/2)^2)`.
pub fn bohr_bracket(qn: &QuantumNumbers) -> (f64, f64) {
    let (lo, hi) = eps_bracket(qn);
    (1.0 - hi, 1.0 - lo)
}

fn eps_bracket(qn: &QuantumNumbers) -> (f64, f64) {
    let za2 = qn.coupling().powi(2);
    let n = f64::from(qn.n);
    (za2 / (2.0 * (n + 0.5).powi(2)), (za2 / (2.0 * (n - 0.5).powi(2))).min(0.999))
}

fn shoot_eps(qn: &QuantumNumbers, (mut lo, mut hi): (f64, f64), convention: RadialConvention) -> Result<f64> {
    if !(lo > 0.0 && lo < hi && hi < 1.0) {
        return Err(Error::domain(format!("binding bracket ({lo}, {hi}) must lie inside (0, mc^2)")));
    }
    let c_lo = (lo * (2.0 - lo)).sqrt();
    let mid = 0.5 * (lo + hi);
    let c_mid = (mid * (2.0 - mid)).sqrt();
    let n = f64::from(qn.n);
    let m = Matching { za: qn.coupling(), k: qn.k, r_match: n / c_mid, r_max: (40.0 + 2.0 * n) / c_lo, convention };
    let mut w_lo = m.wronskian(lo)?;
    let w_hi = m.wronskian(hi)?;
    if w_lo * w_hi > 0.0 {
        return Err(Error::numerical(format!(
            "no sign change of the matching function in binding bracket ({lo:e}, {hi:e}): {w_lo:e}, {w_hi:e}"
        )));
    }
    while hi - lo > 1e-13 * hi {
        let mid = 0.5 * (lo + hi);
        let w = m.wronskian(mid)?;
        if w == 0.0 {
            return Ok(mid);
        }
        if w * w_lo > 0.0 {
            lo = mid;
            w_lo = w;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Eigenvalue `E` (units of `mc^2`) inside the energy bracket.
pub fn shoot_eigenvalue(qn: &QuantumNumbers, bracket: (f64, f64), convention: RadialConvention) -> Result<f64> {
    let eps = shoot_eps(qn, (1.0 - bracket.1, 1.0 - bracket.0), convention)?;
    Ok(1.0 - eps)
}

/// `E - 1` found by shooting inside [`bohr_bracket`], kept at full relative
/// precision.
pub fn shoot_binding(qn: &QuantumNumbers, convention: RadialConvention) -> Result<f64> {
    Ok(-shoot_eps(qn, eps_bracket(qn), convention)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hydrogen::{binding, energy};

    fn qn(z: u32, n: u32, k: i32) -> QuantumNumbers {
        QuantumNumbers::stretched(z, n, k).unwrap()
    }

    #[test]
    fn ground_state_agrees() {
        for z in [1, 20] {
            let q = qn(z, 1, -1);
            let e = shoot_eigenvalue(&q, bohr_bracket(&q), RadialConvention::Resolved).unwrap();
            let exact = energy(&q).unwrap();
            assert!(((e - exact) / exact).abs() < 1e-10, "Z={z}: {e} vs {exact}");
        }
    }

    #[test]
    fn binding_agrees() {
        let q = qn(1, 2, -1);
        let b = shoot_binding(&q, RadialConvention::Resolved).unwrap();
        let exact = binding(&q).unwrap();
        assert!(((b - exact) / exact).abs() < 1e-8, "{b} vs {exact}");
    }

    #[test]
    fn empty_bracket_is_an_error() {
        let q = qn(1, 1, -1);
        let b = -binding(&q).unwrap();
        let r = shoot_eps(&q, (1.5 * b, 2.0 * b), RadialConvention::Resolved);
        assert!(matches!(r, Err(Error::Numerical(_))));
        assert!(shoot_eps(&q, (0.2, 0.1), RadialConvention::Resolved).is_err());
    }
}
