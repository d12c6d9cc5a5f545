//! Area radar detection coverage against the cluster size and BS height,
//! with a Monte Carlo estimate beside each analytical value.

use isac_sensing::mc::mc_ardcp;
use isac_sensing::{ardcp, CoverageMode, McConfig, NetworkParams};

fn main() -> isac_sensing::Result<()> {
    let t_r = 1e3;
    let mc = McConfig {
        trials: 200_000,
        seed: 1,
        ..Default::default()
    };
    println!("cluster size at lambda_b = 1e-4 m^-2, T_r = {t_r}");
    for n_c in [1, 3, 7] {
        let p = NetworkParams {
            lambda_b: 1e-4,
            n_c,
            ..Default::default()
        };
        report(&format!("N_c = {n_c}"), &p, t_r, &mc)?;
    }
    println!("\nBS height at lambda_b = 1e-6 m^-2, target at 100 m");
    for h_b in [10.0, 30.0, 50.0] {
        let p = NetworkParams {
            lambda_b: 1e-6,
            h_b,
            ..Default::default()
        };
        report(&format!("h_B = {h_b} m"), &p, t_r, &mc)?;
    }
    Ok(())
}

fn report(label: &str, p: &NetworkParams, t_r: f64, mc: &McConfig) -> isac_sensing::Result<()> {
    let a = ardcp(t_r, p, CoverageMode::LaplaceCorrected)?;
    let printed = ardcp(t_r, p, CoverageMode::AsPrinted)?;
    let e = mc_ardcp(p, t_r, mc)?;
    println!(
        "  {label:<12} analytic {a:.5e}  MC {:.5e} ± {:.1e}  (printed-form {printed:.3e})",
        e.value, e.std_error
    );
    Ok(())
}
