use biquat::hydrogen::{self, QuantumNumbers};
use biquat::units::{bohr_to_natural, ALPHA};

fn stretched(z: u32, n: u32, k: i32) -> QuantumNumbers {
    QuantumNumbers::stretched(z, n, k).unwrap()
}

#[test]
fn fine_structure_expansion() {
    // E = 1 - x/(2n^2) - x^2/(2n^4) (n/|k| - 3/4) + O(x^3), x = (Z alpha)^2
    for (n, k) in [(1, -1), (2, -1), (2, 1), (2, -2), (3, -2), (3, 2), (4, -4)] {
        let x = ALPHA * ALPHA;
        let (nf, kf) = (f64::from(n), f64::from(k).abs());
        let approx = -x / (2.0 * nf * nf) - x * x / (2.0 * nf.powi(4)) * (nf / kf - 0.75);
        let b = hydrogen::binding(&stretched(1, n, k)).unwrap();
        assert!((b - approx).abs() < 2.0 * x.powi(3), "({n}, {k}): {b} vs {approx}");
    }
}

/// Schrodinger radial densities `r^2 R_nl^2` in Bohr units.
fn schrodinger(n: u32, l: u32, r: f64) -> f64 {
    let rr = match (n, l) {
        (1, 0) => 2.0 * (-r).exp(),
        (2, 0) => (1.0 / 8f64.sqrt()) * (2.0 - r) * (-r / 2.0).exp(),
        (2, 1) => (1.0 / 24f64.sqrt()) * r * (-r / 2.0).exp(),
        _ => unreachable!(),
    };
    r * r * rr * rr
}

#[test]
fn low_charge_matches_schrodinger() {
    for (n, k, l) in [(1, -1, 0), (2, -1, 0), (2, 1, 1), (2, -2, 1)] {
        let w = hydrogen::assemble_wavefunction(&stretched(1, n, k)).unwrap();
        for i in 1..40 {
            let r = 0.25 * f64::from(i);
            let (f, g) = w.radial_pair(bohr_to_natural(r));
            // A^2 (F^2 + G^2) dr with dr in natural units
            let dirac = (f * f + g * g) * bohr_to_natural(1.0);
            let want = schrodinger(n, l, r);
            assert!((dirac - want).abs() < 1e-3 * want.max(1e-3), "n={n} k={k} r={r}: {dirac} vs {want}");
        }
    }
}

#[test]
fn shooting_rejects_an_empty_bracket() {
    let q = stretched(1, 1, -1);
    let (lo, hi) = hydrogen::bohr_bracket(&q);
    assert!(lo < hi);
    assert!(hydrogen::shoot_eigenvalue(&q, (0.5, 0.6), hydrogen::RadialConvention::Resolved).is_err());
}
