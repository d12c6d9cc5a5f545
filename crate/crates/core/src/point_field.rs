//! Homogeneous Poisson point process on disks and annuli, and the
//! distance order statistics derived from it.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Poisson};

use crate::error::{Error, Result};
use crate::rng::{self, SimRng};
use crate::specials::{ln_gamma, regularized_upper_gamma};

/// Default cap on the expected number of points in a single draw.
pub const DEFAULT_POINT_CAP: f64 = 1.0e7;

/// Tail probability tolerated when sizing a window for the k-th neighbour.
const WINDOW_TAIL: f64 = 1.0e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
}

impl PlanarPoint {
    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// One PPP realisation restricted to the annulus `[window_inner, window_outer]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample {
    pub points: Vec<PlanarPoint>,
    pub window_inner: f64,
    pub window_outer: f64,
    pub density: f64,
    pub seed: u64,
}

impl FieldSample {
    /// Distance of the k-th closest point to the origin (k ≥ 1), if the
    /// window holds at least k points.
    pub fn kth_nearest(&self, k: usize) -> Option<f64> {
        if k == 0 || k > self.points.len() {
            return None;
        }
        let mut d2: Vec<f64> = self.points.iter().map(PlanarPoint::norm_sq).collect();
        let (_, kth, _) = d2.select_nth_unstable_by(k - 1, f64::total_cmp);
        Some(kth.sqrt())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Draws the number of points of a PPP with the given mean.
pub fn poisson_count<R: Rng + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    if mean <= 0.0 {
        return 0;
    }
    match Poisson::new(mean) {
        Ok(p) => p.sample(rng) as u64,
        Err(_) => 0,
    }
}

/// Radius with density ∝ 2w on `[r_in, r_out]`, by inverting the CDF in w².
#[inline]
pub fn radial_sq<R: Rng + ?Sized>(r_in_sq: f64, r_out_sq: f64, rng: &mut R) -> f64 {
    r_in_sq + (r_out_sq - r_in_sq) * rng.random::<f64>()
}

fn check_annulus(density: f64, r_in: f64, r_out: f64, cap: f64) -> Result<f64> {
    if !(density > 0.0) {
        return Err(Error::domain(
            "sample_annulus",
            format!("density {density} must be positive"),
        ));
    }
    if !(r_in >= 0.0 && r_in < r_out) {
        return Err(Error::domain(
            "sample_annulus",
            format!("need 0 <= r_in < r_out, got [{r_in}, {r_out}]"),
        ));
    }
    let mean = density * PI * (r_out * r_out - r_in * r_in);
    if mean > cap {
        return Err(Error::SamplingBudget {
            expected: mean,
            cap,
        });
    }
    Ok(mean)
}

/// Appends PPP points of the annulus to `out` using the caller's generator.
pub fn fill_annulus<R: Rng + ?Sized>(
    density: f64,
    r_in: f64,
    r_out: f64,
    cap: f64,
    rng: &mut R,
    out: &mut Vec<PlanarPoint>,
) -> Result<()> {
    let mean = check_annulus(density, r_in, r_out, cap)?;
    let n = poisson_count(mean, rng);
    let (a, b) = (r_in * r_in, r_out * r_out);
    out.reserve(n as usize);
    for _ in 0..n {
        let r = radial_sq(a, b, rng).sqrt();
        let theta = 2.0 * PI * rng.random::<f64>();
        out.push(PlanarPoint {
            x: r * theta.cos(),
            y: r * theta.sin(),
        });
    }
    Ok(())
}

/// One PPP draw of the given density on the annulus `[r_in, r_out]`.
pub fn sample_annulus(density: f64, r_in: f64, r_out: f64, seed: u64) -> Result<FieldSample> {
    sample_annulus_capped(density, r_in, r_out, seed, DEFAULT_POINT_CAP)
}

pub fn sample_annulus_capped(
    density: f64,
    r_in: f64,
    r_out: f64,
    seed: u64,
    cap: f64,
) -> Result<FieldSample> {
    let mut rng = rng::from_seed(seed);
    let mut points = Vec::new();
    fill_annulus(density, r_in, r_out, cap, &mut rng, &mut points)?;
    Ok(FieldSample {
        points,
        window_inner: r_in,
        window_outer: r_out,
        density,
        seed,
    })
}

/// Radius whose disk misses the k-th point with probability at most `WINDOW_TAIL`,
/// found by doubling.
pub fn window_for_kth(density: f64, k: u32) -> f64 {
    let mut r = (f64::from(k) / (PI * density))
        .sqrt()
        .max(f64::MIN_POSITIVE);
    // P{N(disk) < k} = Q(k, μ)
    while regularized_upper_gamma(f64::from(k), density * PI * r * r).unwrap_or(1.0) > WINDOW_TAIL {
        r *= 2.0;
    }
    r
}

/// Fresh draw of the k-th nearest-point distance from the origin.
///
/// The window is sized so that it almost surely contains k points; in the
/// rare case it does not, further annuli are appended, which keeps the
/// draw exact.
pub fn kth_nearest_distance(density: f64, k: u32, rng: &mut SimRng) -> Result<f64> {
    if k == 0 {
        return Err(Error::domain(
            "kth_nearest_distance",
            "k must be at least 1",
        ));
    }
    let mut r_out = window_for_kth(density, k);
    let mut r_in = 0.0;
    let mut d2: Vec<f64> = Vec::new();
    loop {
        let mean = check_annulus(density, r_in, r_out, f64::INFINITY)?;
        let n = poisson_count(mean, rng);
        let (a, b) = (r_in * r_in, r_out * r_out);
        d2.extend((0..n).map(|_| radial_sq(a, b, rng)));
        if d2.len() >= k as usize {
            let (_, kth, _) = d2.select_nth_unstable_by(k as usize - 1, f64::total_cmp);
            return Ok(kth.sqrt());
        }
        r_in = r_out;
        r_out *= 2.0;
    }
}

/// Closed-form E[r_k] = Γ(k + ½)/(Γ(k)·√(πλ)).
pub fn expected_kth_distance(density: f64, k: u32) -> Result<f64> {
    if !(density > 0.0) {
        return Err(Error::domain(
            "expected_kth_distance",
            "density must be positive",
        ));
    }
    if k == 0 {
        return Err(Error::domain(
            "expected_kth_distance",
            "k must be at least 1",
        ));
    }
    let kf = f64::from(k);
    let ratio = (ln_gamma(kf + 0.5)? - ln_gamma(kf)?).exp();
    Ok(ratio / (PI * density).sqrt())
}

/// Density of the horizontal distance to the nearest BS, 2πλr·e^(−πλr²).
pub fn nearest_distance_pdf(r: f64, density: f64) -> f64 {
    if r < 0.0 {
        return 0.0;
    }
    2.0 * PI * density * r * (-PI * density * r * r).exp()
}

/// CDF of the k-th nearest distance, P{N(b(0, r)) ≥ k}.
pub fn kth_nearest_cdf(r: f64, density: f64, k: u32) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    1.0 - regularized_upper_gamma(f64::from(k), PI * density * r * r).unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_density_gives_empty_sample() {
        let s = sample_annulus(1e-12, 0.0, 10.0, 1).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn annulus_support_respected() {
        for seed in 0..200 {
            let s = sample_annulus(0.5, 5.0, 10.0, seed).unwrap();
            for p in &s.points {
                let r = p.norm();
                assert!((5.0..=10.0 + 1e-12).contains(&r));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = sample_annulus(1.0, 0.0, 1e4, 0).unwrap_err();
        assert!(matches!(err, Error::SamplingBudget { .. }));
        assert!(sample_annulus(1.0, 3.0, 2.0, 0).is_err());
    }

    #[test]
    fn identical_seeds_identical_samples() {
        let a = sample_annulus(0.2, 1.0, 30.0, 77).unwrap();
        let b = sample_annulus(0.2, 1.0, 30.0, 77).unwrap();
        assert_eq!(a, b);
        let c = sample_annulus(0.2, 1.0, 30.0, 78).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn kth_on_singleton() {
        let s = FieldSample {
            points: vec![PlanarPoint { x: 0.0, y: 3.0 }],
            window_inner: 0.0,
            window_outer: 5.0,
            density: 1.0,
            seed: 0,
        };
        assert_eq!(s.kth_nearest(1), Some(3.0));
        assert_eq!(s.kth_nearest(2), None);
    }

    #[test]
    fn kth_order_statistics_monotone() {
        for seed in 0..100 {
            let s = sample_annulus(1.0, 0.0, 6.0, seed).unwrap();
            if s.len() >= 6 {
                assert!(s.kth_nearest(5).unwrap() <= s.kth_nearest(6).unwrap());
            }
        }
    }

    #[test]
    fn expected_kth_examples() {
        let v = expected_kth_distance(1.0 / PI, 1).unwrap();
        assert!((v - PI.sqrt() / 2.0).abs() < 1e-12);
        assert!((expected_kth_distance(1.0, 1).unwrap() - 0.5).abs() < 1e-12);
        let v5 = expected_kth_distance(1.0, 5).unwrap();
        assert!((v5 - 52.342_777_784_553_52 / (24.0 * PI.sqrt())).abs() < 1e-10);
        assert!((v5 - 1.2304).abs() < 1e-4);
    }

    #[test]
    fn nearest_pdf_examples() {
        assert_eq!(nearest_distance_pdf(0.0, 1.0), 0.0);
        let v = nearest_distance_pdf(1.0, 1.0 / PI);
        assert!((v - 2.0 * (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn nearest_pdf_normalised() {
        // composite Simpson on a truncated range; the tail beyond r = 12 is e^(-144)
        let n = 200_000;
        let h = 12.0 / n as f64;
        let mut s = nearest_distance_pdf(0.0, 1.0) + nearest_distance_pdf(12.0, 1.0);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * nearest_distance_pdf(i as f64 * h, 1.0);
        }
        assert!((s * h / 3.0 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn window_adequate_for_kth() {
        for k in [1, 5, 9] {
            let r = window_for_kth(1e-4, k);
            assert!(regularized_upper_gamma(k as f64, 1e-4 * PI * r * r).unwrap() <= 1e-6);
        }
    }
}
