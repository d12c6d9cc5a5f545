//! Simulated guarded interference against the analytical laws: cumulants,
//! KS distances and the false-alarm rate at the CFAR threshold.

use isac_sensing::cfar::{bin_to_frame, resolve_cfar};
use isac_sensing::interference::{campbell_cumulant, mean_guard_radius, InterferenceModel};
use isac_sensing::mc::{
    empirical_ccdf, ks_distance, mc_false_alarm_rate, sample_interference_batch,
};
use isac_sensing::{InversionConfig, McConfig, NetworkParams};

fn main() -> isac_sensing::Result<()> {
    let params = NetworkParams {
        lambda_b: 1e-4,
        ..Default::default()
    };
    let inv = InversionConfig::default();
    let mc = McConfig {
        trials: 200_000,
        seed: 3,
        ..Default::default()
    };
    let r_c = mean_guard_radius(&params)?;
    let draws = sample_interference_batch(&params, &mc, true)?;
    let n = draws.len() as f64;
    let mean = draws.iter().sum::<f64>() / n;
    let var = draws.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    println!(
        "mean     {mean:.5e} (Campbell {:.5e})",
        campbell_cumulant(1, &params, r_c)?
    );
    println!(
        "variance {var:.5e} (Campbell {:.5e})",
        campbell_cumulant(2, &params, r_c)?
    );

    let grid: Vec<f64> = (0..60)
        .map(|i| mean * 0.25 * 16f64.powf(i as f64 / 59.0))
        .collect();
    let emp = empirical_ccdf(&draws, &grid)?;
    for model in [
        InterferenceModel::cooperative_tsd(&params, r_c)?,
        InterferenceModel::strongest_interferer(&params, r_c),
    ] {
        let ks = ks_distance(&grid, &emp, |x| model.ccdf(x, &inv))?;
        println!("KS({}) = {ks:.4}", model.name());
    }

    let tsd = InterferenceModel::cooperative_tsd(&params, r_c)?;
    let cfar = resolve_cfar(
        bin_to_frame(1e-2, params.n_sub, params.m_sym)?,
        &params,
        &tsd,
        r_c,
        &inv,
    )?;
    let fa = mc_false_alarm_rate(&params, cfar.eta, &mc)?;
    println!(
        "false alarm at eta for p_bin = 1e-2: {:.5} ± {:.5}",
        fa.value, fa.std_error
    );
    Ok(())
}
