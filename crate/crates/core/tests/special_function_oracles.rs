use std::f64::consts::PI;

use isac_sensing::specials::{gamma_fn, gauss_2f1, regularized_upper_gamma, sinc_n};
use proptest::prelude::*;
use statrs::function::gamma::gamma;

/// Composite Simpson rule on [0, 1] with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, n: usize) -> f64 {
    let h = 1.0 / n as f64;
    let mut s = f(0.0) + f(1.0);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// ₂F₁(a, b; c; z) by its Euler integral, for c = b + 1 (the only family the
/// coverage kernel uses). With t = u^(1/b) the integrand is smooth on [0, 1].
fn euler_2f1(a: f64, b: f64, z: f64) -> f64 {
    let c = b + 1.0;
    let pre = gamma(c) / (gamma(b) * gamma(c - b)) / b;
    pre * simpson(|u| (1.0 - z * u.powf(1.0 / b)).powf(-a), 20_000)
}

#[test]
fn arctan_identities() {
    assert!((gauss_2f1(1.0, 0.5, 1.5, -1.0).unwrap() - PI / 4.0).abs() < 1e-12);
    assert!((gauss_2f1(1.0, 0.5, 1.5, -100.0).unwrap() - 10f64.atan() / 10.0).abs() < 1e-12);
    assert!((euler_2f1(1.0, 0.5, -1.0) - PI / 4.0).abs() < 1e-9);
    assert!((euler_2f1(1.0, 0.5, -100.0) - 0.147_112_767_430_373_5).abs() < 1e-9);
}

#[test]
fn coverage_kernel_matches_euler_integral() {
    for alpha_c in [3.0, 3.5, 4.0, 5.0] {
        let d = 2.0 / alpha_c;
        let (a, b, c) = (1.0, 1.0 - d, 2.0 - d);
        for z in [
            0.0, -1e-3, -0.3, -0.5, -0.51, -0.9, -1.0, -3.0, -10.0, -99.0, -400.0, -1e3,
        ] {
            let got = gauss_2f1(a, b, c, z).unwrap();
            let want = euler_2f1(a, b, z);
            assert!(
                ((got - want) / want).abs() < 1e-7,
                "alpha_c {alpha_c} z {z}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn gamma_identities() {
    assert!((gamma_fn(0.5).unwrap() - PI.sqrt()).abs() < 1e-13);
    assert!((gamma_fn(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-12);
    assert!((regularized_upper_gamma(1.0, 2.0).unwrap() - (-2.0f64).exp()).abs() < 1e-14);
    assert!((sinc_n(0.25) - 0.900_316_316_157_106).abs() < 1e-12);
}

proptest! {
    #[test]
    fn gamma_agrees_with_reference(x in 0.05f64..30.0) {
        let got = gamma_fn(x).unwrap();
        prop_assert!((got / gamma(x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_is_monotone_in_z(alpha_c in 2.2f64..6.0, z in -1e3f64..-1e-3) {
        let d = 2.0 / alpha_c;
        let f = |z| gauss_2f1(1.0, 1.0 - d, 2.0 - d, z).unwrap();
        // the kernel is completely monotone in −z, hence decreasing and inside (0, 1]
        prop_assert!(f(z) > 0.0 && f(z) <= 1.0);
        prop_assert!(f(z * 1.01) <= f(z) + 1e-15);
    }
}
