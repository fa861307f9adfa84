use crate::{Error, Result};

/// Degree and (possibly non-integer) superscript of a generalized Laguerre
/// polynomial `L_n^(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreParams {
    degree: usize,
    alpha: f64,
}

impl LaguerreParams {
    pub fn new(degree: usize, alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -1.0 {
            return Err(Error::domain(format!("Laguerre superscript must exceed -1, got {alpha}")));
        }
        Ok(LaguerreParams { degree, alpha })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// `L_n^(alpha)(x)` by the upward three-term recurrence
/// `(k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}`.
pub fn laguerre(params: LaguerreParams, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain("Laguerre argument must be finite"));
    }
    Ok(eval(params.degree, params.alpha, x))
}

pub(crate) fn eval(n: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        for &(a, x) in &[(0.0, 0.3), (1.5, 2.0), (2.99, 11.0), (-0.5, 0.0)] {
            let p0 = LaguerreParams::new(0, a).unwrap();
            assert_eq!(laguerre(p0, x).unwrap(), 1.0);
            let p1 = LaguerreParams::new(1, a).unwrap();
            assert!((laguerre(p1, x).unwrap() - (1.0 + a - x)).abs() < 1e-15);
            // L_2 = ((x^2 - 2(a+2)x + (a+1)(a+2)) / 2
            let p2 = LaguerreParams::new(2, a).unwrap();
            let l2 = (x * x - 2.0 * (a + 2.0) * x + (a + 1.0) * (a + 2.0)) / 2.0;
            assert!((laguerre(p2, x).unwrap() - l2).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(LaguerreParams::new(2, -1.0).is_err());
        assert!(LaguerreParams::new(2, f64::NAN).is_err());
        let p = LaguerreParams::new(2, 0.5).unwrap();
        assert!(laguerre(p, f64::INFINITY).is_err());
    }
}
