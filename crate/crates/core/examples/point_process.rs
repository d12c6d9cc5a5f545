//! PPP realisations and nearest-neighbour distances against their closed forms.

use isac_sensing::point_field::{expected_kth_distance, kth_nearest_distance, sample_annulus};
use isac_sensing::rng;

fn main() -> isac_sensing::Result<()> {
    let density = 1e-5;
    let field = sample_annulus(density, 0.0, 2_000.0, 42)?;
    println!(
        "{} base stations within 2 km (expected {:.1})",
        field.len(),
        density * std::f64::consts::PI * 2_000f64.powi(2)
    );
    for k in 1..=3 {
        if let Some(r) = field.kth_nearest(k) {
            println!("  r_{k} = {r:.1} m");
        }
    }

    let mut r = rng::from_seed(7);
    let trials = 20_000;
    println!("\n k   E[r_k] closed form   Monte Carlo ({trials} draws)");
    for k in [1, 2, 5, 9] {
        let mc = (0..trials)
            .map(|_| kth_nearest_distance(density, k, &mut r))
            .sum::<isac_sensing::Result<f64>>()?
            / f64::from(trials);
        println!(
            "{k:>2}   {:>10.2} m         {mc:>10.2} m",
            expected_kth_distance(density, k)?
        );
    }
    Ok(())
}
