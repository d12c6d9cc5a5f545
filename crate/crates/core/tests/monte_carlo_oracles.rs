use std::f64::consts::PI;

use isac_sensing::ardcp::{conditional_coverage, CoverageMode};
use isac_sensing::interference::{mean_guard_radius, sia_ccdf, InterferenceModel};
use isac_sensing::inversion::{ccdf_from_cf, InversionConfig};
use isac_sensing::mc::{
    empirical_ccdf, mc_ardcp, mc_false_alarm_rate, GuardMode, McConfig, ShotNoiseSampler,
};
use isac_sensing::{rng, NetworkParams};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1, Poisson};

fn prop2_params() -> NetworkParams {
    NetworkParams {
        lambda_b: 1.0 / (2.0 * PI),
        ..Default::default()
    }
}

fn cfg(trials: u64, seed: u64) -> McConfig {
    McConfig {
        trials,
        seed,
        ..Default::default()
    }
}

/// Exact CF of Σ w^(−4) g over a PPP outside radius `r_c`:
/// log φ(ω) = πλ √(jω) atanh(√(jω)/r_c²).
fn guarded_cf(lambda: f64, r_c: f64) -> impl Fn(f64) -> Complex64 {
    move |w| {
        let s = Complex64::new(0.0, w).sqrt();
        (PI * lambda * s * (s / (r_c * r_c)).atanh()).exp()
    }
}

fn binomial_sigma(p: f64, n: usize) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}

#[test]
fn exponential_draws_ccdf() {
    let mut r = rng::from_seed(1);
    let draws: Vec<f64> = (0..1_000_000).map(|_| Exp1.sample(&mut r)).collect();
    let got = empirical_ccdf(&draws, &[1.0]).unwrap()[0];
    let p = (-1.0f64).exp();
    assert!(
        (got - p).abs() < 3.0 * binomial_sigma(p, draws.len()),
        "{got}"
    );
}

#[test]
fn guarded_draws_match_campbell_cumulants() {
    let p = prop2_params();
    let c = cfg(1_000_000, 11);
    let draws = ShotNoiseSampler::with_guard_radius(&p, &c, 1.0)
        .unwrap()
        .sample_batch(c.trials, c.seed);
    let n = draws.len() as f64;
    let mean = draws.iter().sum::<f64>() / n;
    let var = draws.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    assert!((mean / 0.5 - 1.0).abs() < 0.02, "mean {mean}");
    assert!((var * 3.0 - 1.0).abs() < 0.05, "variance {var}");
}

#[test]
fn guarded_draws_match_exact_law() {
    let p = prop2_params();
    let c = cfg(1_000_000, 12);
    let draws = ShotNoiseSampler::with_guard_radius(&p, &c, 1.0)
        .unwrap()
        .sample_batch(c.trials, c.seed);
    let grid = [0.2, 0.35, 0.5, 1.0, 2.0, 4.0];
    let emp = empirical_ccdf(&draws, &grid).unwrap();
    let cf = guarded_cf(p.lambda_b, 1.0);
    let inv = InversionConfig::default();
    for (&x, &e) in grid.iter().zip(&emp) {
        let exact = ccdf_from_cf(&cf, x, &inv).unwrap();
        let sigma = binomial_sigma(exact, draws.len());
        assert!(
            (e - exact).abs() < 4.0 * sigma,
            "x {x}: MC {e} exact {exact}"
        );
    }

    // the cumulant-matched law is an approximation; its gap to the exact law
    // at the mean is a few parts in a thousand
    let tsd = InterferenceModel::cooperative_tsd(&p, 1.0).unwrap();
    let at_mean = tsd.ccdf(0.5, &inv).unwrap();
    let exact = ccdf_from_cf(&cf, 0.5, &inv).unwrap();
    assert!(
        (at_mean - exact).abs() < 0.01,
        "tsd {at_mean} exact {exact}"
    );
    let q_tsd = tsd.upper_quantile(0.01, &inv).unwrap();
    let mut sorted = draws;
    sorted.sort_by(f64::total_cmp);
    let q_mc = sorted[(0.99 * sorted.len() as f64) as usize];
    assert!((q_tsd / q_mc - 1.0).abs() < 0.03, "tsd {q_tsd} mc {q_mc}");
}

#[test]
fn strongest_interferer_matches_max_term() {
    let (lambda, r_c, eta, r_out) = (1e-4, 10.0, 1e-4, 200.0);
    let trials = 1_000_000;
    let mut r = rng::from_seed(77);
    let count = Poisson::new(lambda * PI * (r_out * r_out - r_c * r_c)).unwrap();
    let mut hits = 0usize;
    for _ in 0..trials {
        let n = count.sample(&mut r) as usize;
        let max = (0..n)
            .map(|_| {
                let w2 = r_c * r_c + (r_out * r_out - r_c * r_c) * r.random::<f64>();
                let g: f64 = Exp1.sample(&mut r);
                g / (w2 * w2)
            })
            .fold(0.0, f64::max);
        if max > eta {
            hits += 1;
        }
    }
    let emp = hits as f64 / trials as f64;
    let want = sia_ccdf(eta, lambda, 4.0, r_c).unwrap();
    assert!(
        (emp - want).abs() < 3.0 * binomial_sigma(want, trials),
        "MC {emp} closed form {want}"
    );
}

#[test]
fn conditional_coverage_matches_simulation() {
    let p = NetworkParams::default();
    let (t_r, r_1) = (10.0, 100.0);
    let c = cfg(1_000_000, 21);
    let interference = ShotNoiseSampler::new(&p, &c, true)
        .unwrap()
        .sample_batch(c.trials, c.seed);
    let mut r = rng::stream(21, u64::MAX);
    let link = p.processing_gain() * p.sir_constant() * p.link_distance(r_1).powf(-2.0 * p.alpha_r);
    let hits = interference
        .iter()
        .filter(|&&i| {
            let g: f64 = Exp1.sample(&mut r);
            link * g > t_r * i
        })
        .count();
    let emp = hits as f64 / interference.len() as f64;
    let analytic = conditional_coverage(t_r, r_1, &p, CoverageMode::LaplaceCorrected).unwrap();
    assert!(
        (emp / analytic - 1.0).abs() < 0.05,
        "MC {emp} analytic {analytic}"
    );
    assert!((emp - analytic).abs() < 4.0 * binomial_sigma(analytic, interference.len()));
}

#[test]
fn guard_modes_give_different_coverage() {
    let p = NetworkParams {
        lambda_b: 1e-4,
        ..Default::default()
    };
    let fixed = mc_ardcp(&p, 1e3, &cfg(200_000, 4)).unwrap();
    let random = mc_ardcp(
        &p,
        1e3,
        &McConfig {
            guard_mode: GuardMode::PerRealization,
            ..cfg(200_000, 4)
        },
    )
    .unwrap();
    let gap = (fixed.value - random.value).abs();
    println!(
        "fixed-mean {:.5e} per-realisation {:.5e}",
        fixed.value, random.value
    );
    assert!(gap > 3.0 * (fixed.std_error.powi(2) + random.std_error.powi(2)).sqrt());
}

#[test]
fn false_alarm_falls_below_target_far_above_quantile() {
    let p = NetworkParams::default();
    let r_c = mean_guard_radius(&p).unwrap();
    let q = InterferenceModel::cooperative_tsd(&p, r_c)
        .unwrap()
        .upper_quantile(1e-2, &InversionConfig::default())
        .unwrap();
    let est = mc_false_alarm_rate(&p, 10.0 * q, &cfg(100_000, 8)).unwrap();
    assert!(est.value < 1e-2);
    assert!(est.std_error >= 0.0);
}
