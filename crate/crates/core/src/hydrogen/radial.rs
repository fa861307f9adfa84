use serde::Serialize;

use super::{check_nk, QuantumNumbers};
use crate::special::laguerre_eval;
use crate::units::ALPHA;
use crate::{Error, Result};

/// Sommerfeld level in units of `mc^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    /// Total energy `E`, `0 < E < 1`.
    pub energy: f64,
    /// `E - 1`, computed without cancellation.
    pub binding: f64,
    pub s: f64,
    /// Decay constant `C = sqrt(1 - E^2)`.
    pub c: f64,
}

/// `E = [1 + (Z alpha / (n - |k| + s))^2]^(-1/2)` with `s = sqrt(k^2 - (Z alpha)^2)`.
///
/// `z` may be any nonnegative real here; [`QuantumNumbers`] restricts it to
/// integers.
pub fn sommerfeld(z: f64, n: u32, k: i32) -> Result<Level> {
    check_nk(z, n, k)?;
    let za = z * ALPHA;
    let kf = f64::from(k);
    let s = (kf * kf - za * za).sqrt();
    let ratio = za / (f64::from(n - k.unsigned_abs()) + s);
    let x = ratio * ratio;
    let root = (1.0 + x).sqrt();
    let energy = 1.0 / root;
    // 1 - 1/sqrt(1+x) = x / (sqrt(1+x) (sqrt(1+x) + 1))
    let binding = -x / (root * (root + 1.0));
    Ok(Level { energy, binding, s, c: energy * ratio })
}

pub fn energy(qn: &QuantumNumbers) -> Result<f64> {
    Ok(sommerfeld(f64::from(qn.z), qn.n, qn.k)?.energy)
}

/// `E - mc^2` in units of `mc^2`.
pub fn binding(qn: &QuantumNumbers) -> Result<f64> {
    Ok(sommerfeld(f64::from(qn.z), qn.n, qn.k)?.binding)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialParameters {
    pub s: f64,
    pub c: f64,
    /// Length unit of `rho`: `rho = r / scale`, `scale = 1/C`.
    pub scale: f64,
}

/// `s`, `C = sqrt(1 - E^2)` and the length scale for an arbitrary trial
/// energy `E` (units of `mc^2`).
pub fn radial_parameters(qn: &QuantumNumbers, e: f64) -> Result<RadialParameters> {
    if !e.is_finite() || e.abs() >= 1.0 {
        return Err(Error::domain(format!("|E| = {} is not below mc^2; no bound state", e.abs())));
    }
    check_nk(f64::from(qn.z), qn.n, qn.k)?;
    let za = qn.coupling();
    let kf = f64::from(qn.k);
    let s = (kf * kf - za * za).sqrt();
    let c = ((1.0 - e) * (1.0 + e)).sqrt();
    Ok(RadialParameters { s, c, scale: 1.0 / c })
}

/// Which form of the coupled radial system residuals are evaluated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadialConvention {
    /// Mass terms `-(1 + E) F` and `(E - 1) G`; satisfied by the closed forms.
    #[default]
    Resolved,
    /// Mass terms with the opposite sign.
    AsPrinted,
}

/// Closed-form radial pair for one state and trial energy:
///
/// ```text
/// F = rho^s e^-rho [ (s - k) 2rho L_{nr-1}^{2s+1}(2rho) + Z alpha c L_{nr}^{2s-1}(2rho) ]
/// G = rho^s e^-rho [ Z alpha 2rho L_{nr-1}^{2s+1}(2rho) + (s - k) c L_{nr}^{2s-1}(2rho) ]
/// ```
///
/// with `nr = n - |k|`, `c = (s - kE)/C`, `rho = C r`, and `L_{-1} = 0`.
/// The coefficient `c` multiplies only the second Laguerre term; the other
/// grouping fails the radial system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialFunctions {
    pub za: f64,
    pub k: i32,
    pub nr: u32,
    pub energy: f64,
    pub s: f64,
    pub c: f64,
    pub coef: f64,
}

impl RadialFunctions {
    /// Closed forms at a trial energy.
    pub fn new(qn: &QuantumNumbers, e: f64) -> Result<Self> {
        let p = radial_parameters(qn, e)?;
        Ok(Self::build(qn, e, p.s, p.c))
    }

    /// Closed forms at the Sommerfeld energy, with `C` taken from the
    /// cancellation-free level computation.
    pub fn exact(qn: &QuantumNumbers) -> Result<Self> {
        let lv = sommerfeld(f64::from(qn.z), qn.n, qn.k)?;
        Ok(Self::build(qn, lv.energy, lv.s, lv.c))
    }

    fn build(qn: &QuantumNumbers, e: f64, s: f64, c: f64) -> Self {
        let coef = (s - f64::from(qn.k) * e) / c;
        RadialFunctions { za: qn.coupling(), k: qn.k, nr: qn.radial_index(), energy: e, s, c, coef }
    }

    /// The polynomial factors `(F, G) / (rho^s e^-rho)`.
    pub fn polynomials(&self, rho: f64) -> (f64, f64) {
        let x = 2.0 * rho;
        let sk = self.s - f64::from(self.k);
        let a1 = if self.nr == 0 { 0.0 } else { x * laguerre_eval(self.nr as usize - 1, 2.0 * self.s + 1.0, x) };
        let l2 = laguerre_eval(self.nr as usize, 2.0 * self.s - 1.0, x);
        (sk * a1 + self.za * self.coef * l2, self.za * a1 + sk * self.coef * l2)
    }

    pub fn envelope(&self, rho: f64) -> f64 {
        rho.powf(self.s) * (-rho).exp()
    }

    /// `(F(rho), G(rho))`.
    pub fn fg(&self, rho: f64) -> (f64, f64) {
        let (pf, pg) = self.polynomials(rho);
        let env = self.envelope(rho);
        (pf * env, pg * env)
    }

    /// `(F(rho), G(rho)) / envelope(rho_ref)`, finite even where the
    /// envelope itself underflows.
    pub fn fg_relative(&self, rho: f64, rho_ref: f64) -> (f64, f64) {
        let (pf, pg) = self.polynomials(rho);
        let w = (self.s * (rho / rho_ref).ln() - (rho - rho_ref)).exp();
        (pf * w, pg * w)
    }

    /// `(F, G)` at radius `r` in natural units.
    pub fn at_radius(&self, r: f64) -> (f64, f64) {
        self.fg(self.c * r)
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(Error::domain(format!("rho must be finite and nonnegative, got {rho}")));
    }
    Ok(())
}

pub fn radial_f(qn: &QuantumNumbers, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(RadialFunctions::exact(qn)?.fg(rho).0)
}

pub fn radial_g(qn: &QuantumNumbers, rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok(RadialFunctions::exact(qn)?.fg(rho).1)
}

/// Normalized residuals of the two radial equations on a grid of radii
/// (natural units).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub r: Vec<f64>,
    pub res1: Vec<f64>,
    pub res2: Vec<f64>,
}

impl Residual {
    pub fn max(&self) -> f64 {
        self.res1.iter().chain(&self.res2).fold(0.0, |m, x| m.max(x.abs()))
    }
}

// Eighth-order central first derivative.
const FD: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];

/// Residuals of the closed-form `(F, G)` of `qn` at trial energy `e`.
pub fn ode_residual(qn: &QuantumNumbers, e: f64, grid: &[f64], convention: RadialConvention) -> Result<Residual> {
    let rf = RadialFunctions::new(qn, e)?;
    radial_system_residual(qn.coupling(), qn.k, e, convention, grid, rf.c.recip(), |r, r_ref| {
        rf.fg_relative(rf.c * r, rf.c * r_ref)
    })
}

/// Residuals of an arbitrary pair. `fg(r, r_ref)` must return `(F, G)` at `r`
/// divided by any positive factor that depends only on `r_ref`; derivatives
/// are taken by finite differences with step `2e-3 min(r, length)`.
///
/// Each equation is divided by `|F| + |G|` at the grid point; points where
/// both vanish report zero.
pub fn radial_system_residual<P>(
    za: f64,
    k: i32,
    e: f64,
    convention: RadialConvention,
    grid: &[f64],
    length: f64,
    fg: P,
) -> Result<Residual>
where
    P: Fn(f64, f64) -> (f64, f64),
{
    if grid.iter().any(|r| !(*r > 0.0) || !r.is_finite()) || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("residual grid must be positive and strictly ascending"));
    }
    let kf = f64::from(k);
    let mass = match convention {
        RadialConvention::Resolved => -1.0,
        RadialConvention::AsPrinted => 1.0,
    };
    let (mut res1, mut res2) = (Vec::with_capacity(grid.len()), Vec::with_capacity(grid.len()));
    for &r in grid {
        let h = 2e-3 * r.min(length);
        let (f, g) = fg(r, r);
        let (mut df, mut dg) = (0.0, 0.0);
        for (i, c) in FD.iter().enumerate() {
            let d = (i + 1) as f64 * h;
            let (fp, gp) = fg(r + d, r);
            let (fm, gm) = fg(r - d, r);
            df += c * (fp - fm);
            dg += c * (gp - gm);
        }
        df /= h;
        dg /= h;
        let v = za / r;
        let r1 = -dg - kf / r * g + mass * f - v * f - e * f;
        let r2 = df - kf / r * f - mass * g - v * g - e * g;
        let norm = f.abs() + g.abs();
        if norm == 0.0 {
            res1.push(0.0);
            res2.push(0.0);
        } else {
            res1.push(r1 / norm);
            res2.push(r2 / norm);
        }
    }
    Ok(Residual { r: grid.to_vec(), res1, res2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{bohr_to_natural, MC2_EV};

    fn qn(z: u32, n: u32, k: i32) -> QuantumNumbers {
        QuantumNumbers::stretched(z, n, k).unwrap()
    }

    #[test]
    fn ground_state_energy() {
        let e = energy(&qn(1, 1, -1)).unwrap();
        assert!((e - (1.0 - ALPHA * ALPHA).sqrt()).abs() < 1e-15);
        let b = binding(&qn(1, 1, -1)).unwrap() * MC2_EV;
        assert!((b + 13.6059).abs() < 1e-3);
        // leading Taylor term -(Z alpha)^2 mc^2 / 2
        assert!((b + ALPHA * ALPHA * MC2_EV / 2.0).abs() < 1e-3);
    }

    #[test]
    fn free_particle_limit() {
        let lv = sommerfeld(0.0, 1, -1).unwrap();
        assert_eq!(lv.energy, 1.0);
        assert_eq!(lv.binding, 0.0);
    }

    #[test]
    fn degeneracy_and_ordering() {
        for z in [1, 20, 50] {
            assert_eq!(energy(&qn(z, 2, 1)).unwrap(), energy(&qn(z, 2, -1)).unwrap());
            assert_eq!(energy(&qn(z, 3, 2)).unwrap(), energy(&qn(z, 3, -2)).unwrap());
            let e: Vec<f64> = (1..=5).map(|n| energy(&qn(z, n, -1)).unwrap()).collect();
            assert!(e.windows(2).all(|w| w[0] < w[1] && w[1] < 1.0));
        }
    }

    #[test]
    fn s_imaginary() {
        let err = sommerfeld(200.0, 1, -1).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("s imaginary")));
        assert!(sommerfeld(200.0, 2, 2).is_err());
    }

    #[test]
    fn parameters() {
        let g = qn(1, 1, -1);
        let p = radial_parameters(&g, energy(&g).unwrap()).unwrap();
        assert!((p.s - (1.0 - ALPHA * ALPHA).sqrt()).abs() < 1e-15);
        assert!((p.s - 0.99997337).abs() < 1e-8);
        let e = energy(&g).unwrap();
        assert!((p.c - (1.0 - e * e).sqrt()).abs() < 1e-15);
        assert!((p.c * p.scale - 1.0).abs() < 1e-15);
        let d = qn(1, 2, -2);
        let p = radial_parameters(&d, energy(&d).unwrap()).unwrap();
        assert!((p.s - (4.0 - ALPHA * ALPHA).sqrt()).abs() < 1e-15);
        assert!(radial_parameters(&g, 1.0).is_err());
        assert!(radial_parameters(&g, -1.5).is_err());
        // the stable C agrees with the definition
        let lv = sommerfeld(1.0, 1, -1).unwrap();
        assert!((lv.c / (1.0 - lv.energy * lv.energy).sqrt() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn ground_state_ratio() {
        let g = qn(1, 1, -1);
        let rf = RadialFunctions::exact(&g).unwrap();
        let za = ALPHA;
        let expect = (1.0 - rf.s) / za;
        for rho in [1e-3, 0.5, 3.0, 20.0] {
            let (f, gg) = rf.fg(rho);
            assert!((f / gg - expect).abs() < 1e-12 * expect.abs().max(1.0));
        }
        assert_eq!(radial_f(&g, 0.0).unwrap(), 0.0);
        assert_eq!(radial_g(&g, 0.0).unwrap(), 0.0);
        assert!(radial_f(&g, -1.0).is_err());
    }

    fn sign_changes(v: &[f64]) -> usize {
        v.windows(2).filter(|w| w[0] * w[1] < 0.0).count()
    }

    #[test]
    fn node_counts() {
        let cases =
            [((1, -1), 0, 0), ((2, -1), 1, 1), ((2, 1), 1, 0), ((2, -2), 0, 0), ((3, -1), 2, 2), ((3, -2), 1, 1)];
        for ((n, k), nf, ng) in cases {
            let rf = RadialFunctions::exact(&qn(1, n, k)).unwrap();
            let pts: Vec<(f64, f64)> = (1..40_000).map(|i| rf.polynomials(i as f64 * 1e-3)).collect();
            let f: Vec<f64> = pts.iter().map(|p| p.0).collect();
            let g: Vec<f64> = pts.iter().map(|p| p.1).collect();
            assert_eq!((sign_changes(&f), sign_changes(&g)), (nf, ng), "state ({n}, {k})");
        }
    }

    fn grid() -> Vec<f64> {
        (0..300).map(|i| bohr_to_natural(0.05 * (600f64).powf(i as f64 / 299.0))).collect()
    }

    #[test]
    fn closed_forms_solve_the_system() {
        for (n, k) in [(1, -1), (2, -1), (2, 1), (2, -2), (3, -1), (3, -2)] {
            for z in [1, 20, 50] {
                let q = qn(z, n, k);
                let res = ode_residual(&q, energy(&q).unwrap(), &grid(), RadialConvention::Resolved).unwrap();
                assert!(res.max() < 1e-6, "({n},{k}) Z={z}: {}", res.max());
            }
        }
    }

    #[test]
    fn residual_detects_wrong_input() {
        let q = qn(20, 1, -1);
        let e = energy(&q).unwrap();
        let good = ode_residual(&q, e, &grid(), RadialConvention::Resolved).unwrap().max();
        let bad = ode_residual(&q, e + 1e-3, &grid(), RadialConvention::Resolved).unwrap().max();
        assert!(bad > 1e4 * good.max(1e-12), "{good} vs {bad}");
        let q1 = qn(1, 1, -1);
        let b = binding(&q1).unwrap();
        let good = ode_residual(&q1, 1.0 + b, &grid(), RadialConvention::Resolved).unwrap().max();
        let bad = ode_residual(&q1, 1.0 + 1.1 * b, &grid(), RadialConvention::Resolved).unwrap().max();
        assert!(bad > 1e3 * good.max(1e-12), "{good} vs {bad}");
        let printed = ode_residual(&q1, 1.0 + b, &grid(), RadialConvention::AsPrinted).unwrap().max();
        assert!(printed > 1e-3);
    }

    #[test]
    fn zero_pair_has_zero_residual() {
        let res = radial_system_residual(ALPHA, -1, 0.9, RadialConvention::Resolved, &grid(), 100.0, |_, _| (0.0, 0.0))
            .unwrap();
        assert_eq!(res.max(), 0.0);
        assert!(radial_system_residual(ALPHA, -1, 0.9, RadialConvention::Resolved, &[2.0, 1.0], 1.0, |_, _| (
            0.0, 0.0
        ))
        .is_err());
    }
}
