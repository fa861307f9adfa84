//! Spinor coefficients against the Racah formula for Clebsch-Gordan
//! coefficients `<l m_l; 1/2 m_s | j m_j>`.

use biquat::spinor::{clebsch_coefficients, SpinorFunction};
use biquat::HalfInt;

fn factorial(n: i32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Racah's closed form, arguments doubled so half-integers stay integral.
fn cg(j1: i32, m1: i32, j2: i32, m2: i32, j: i32, m: i32) -> f64 {
    if m1 + m2 != m || j > j1 + j2 || j < (j1 - j2).abs() {
        return 0.0;
    }
    let h = |x: i32| x / 2;
    let pre = (f64::from(j + 1) * factorial(h(j1 + j2 - j)) * factorial(h(j1 - j2 + j)) * factorial(h(-j1 + j2 + j))
        / factorial(h(j1 + j2 + j) + 1))
    .sqrt()
        * (factorial(h(j + m))
            * factorial(h(j - m))
            * factorial(h(j1 - m1))
            * factorial(h(j1 + m1))
            * factorial(h(j2 - m2))
            * factorial(h(j2 + m2)))
        .sqrt();
    let mut sum = 0.0;
    for k in 0..=h(j1 + j2 - j) {
        let den = [k, h(j1 + j2 - j) - k, h(j1 - m1) - k, h(j2 + m2) - k, h(j - j2 + m1) + k, h(j - j1 - m2) + k];
        if den.iter().any(|d| *d < 0) {
            continue;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / den.iter().map(|d| factorial(*d)).product::<f64>();
    }
    pre * sum
}

#[test]
fn racah_formula_sanity() {
    // <1 0; 1/2 1/2 | 1/2 1/2> = -sqrt(1/3)
    assert!((cg(2, 0, 1, 1, 1, 1) + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    // <1 1; 1/2 -1/2 | 3/2 1/2> = sqrt(1/3)
    assert!((cg(2, 2, 1, -1, 3, 1) - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
}

#[test]
fn spinor_coefficients_are_clebsch_gordan() {
    for l in 0..=6u32 {
        let l2 = 2 * l as i32;
        for j2 in [l2 - 1, l2 + 1] {
            if j2 < 1 {
                continue;
            }
            for m2 in (-j2..=j2).step_by(2) {
                let (j, mj) = (HalfInt::from_twice(j2), HalfInt::from_twice(m2));
                let (c1, c2) = clebsch_coefficients(l, j, mj).unwrap();
                let want1 = cg(l2, m2 - 1, 1, 1, j2, m2);
                let want2 = cg(l2, m2 + 1, 1, -1, j2, m2);
                assert!((c1 - want1).abs() < 1e-14, "l={l} j={j} mj={mj}: {c1} vs {want1}");
                assert!((c2 - want2).abs() < 1e-14, "l={l} j={j} mj={mj}: {c2} vs {want2}");
                let s = SpinorFunction::new(l, j, mj).unwrap();
                assert_eq!((s.c1, s.c2), (c1, c2));
            }
        }
    }
}

#[test]
fn invalid_triples_are_rejected() {
    assert!(clebsch_coefficients(1, HalfInt::from_twice(5), HalfInt::from_twice(1)).is_err());
    assert!(clebsch_coefficients(1, HalfInt::from_twice(3), HalfInt::from_twice(5)).is_err());
    assert!(clebsch_coefficients(1, HalfInt::from_twice(2), HalfInt::from_twice(0)).is_err());
}
