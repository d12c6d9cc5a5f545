//! CCDF of the aggregated interference under the stable (no cooperation),
//! truncated-stable and strongest-interferer models.

use isac_sensing::interference::{campbell_cumulant, mean_guard_radius, InterferenceModel};
use isac_sensing::{InversionConfig, NetworkParams};

fn main() -> isac_sensing::Result<()> {
    let inv = InversionConfig::default();
    for lambda_b in [1e-4, 1e-6] {
        let params = NetworkParams {
            lambda_b,
            ..Default::default()
        };
        let r_c = mean_guard_radius(&params)?;
        let mean = campbell_cumulant(1, &params, r_c)?;
        let models = [
            InterferenceModel::noncooperative_stable(&params)?,
            InterferenceModel::cooperative_tsd(&params, r_c)?,
            InterferenceModel::strongest_interferer(&params, r_c),
        ];
        println!(
            "lambda_b = {lambda_b:e} m^-2, guard radius {r_c:.1} m, mean guarded interference {mean:.4e}"
        );
        println!(
            "{:>12} {:>10} {:>10} {:>10}",
            "x / mean",
            models[0].name(),
            models[1].name(),
            models[2].name()
        );
        for f in [0.25, 0.5, 1.0, 1.5, 2.0, 3.0] {
            let x = f * mean;
            let row = models
                .iter()
                .map(|m| m.ccdf(x, &inv).map(|p| format!("{p:>10.5}")))
                .collect::<isac_sensing::Result<Vec<_>>>()?;
            println!("{f:>12} {}", row.join(" "));
        }
        println!();
    }
    Ok(())
}
