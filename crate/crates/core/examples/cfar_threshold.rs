//! From a frame-level false-alarm budget to the per-bin probability, the
//! interference quantile and the SIR threshold.

use isac_sensing::cfar::resolve_cfar;
use isac_sensing::interference::{mean_guard_radius, InterferenceModel};
use isac_sensing::{Error, InversionConfig, NetworkParams};

fn main() -> isac_sensing::Result<()> {
    let params = NetworkParams::default();
    let inv = InversionConfig::default();
    let r_c = mean_guard_radius(&params)?;
    let tsd = InterferenceModel::cooperative_tsd(&params, r_c)?;

    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>10}",
        "p_frame", "p_bin", "eta", "eta'", "T_r"
    );
    for p_frame in [1e-3, 1e-2, 0.1, 0.5] {
        let c = resolve_cfar(p_frame, &params, &tsd, r_c, &inv)?;
        println!(
            "{p_frame:>8} {:>12.4e} {:>12.4e} {:>12.4e} {:>10.3}",
            c.p_bin, c.eta, c.eta_prime, c.t_r
        );
    }

    let stable = InterferenceModel::noncooperative_stable(&params)?;
    match resolve_cfar(0.1, &params, &stable, r_c, &inv) {
        Err(e @ Error::InfiniteMean { .. }) => println!("\nwithout cooperation: {e}"),
        other => println!("\nunexpected: {other:?}"),
    }
    Ok(())
}
