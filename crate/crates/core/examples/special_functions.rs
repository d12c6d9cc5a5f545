//! Gamma, incomplete Gamma, sinc and the Gauss hypergeometric function on a
//! few reference arguments.

use isac_sensing::specials::{gamma_fn, gauss_2f1, sinc_n, upper_incomplete_gamma};

fn main() -> isac_sensing::Result<()> {
    for x in [0.5, -0.5, 1.5, 5.0, 10.5] {
        println!("Gamma({x:>5}) = {:.12}", gamma_fn(x)?);
    }
    println!("Gamma(0.5, 1) = {:.12}", upper_incomplete_gamma(0.5, 1.0)?);
    println!("sinc(0.25)    = {:.12}", sinc_n(0.25));

    println!("\n2F1(1, 1/2; 3/2; z) against arctan(sqrt(-z))/sqrt(-z)");
    for z in [-0.25_f64, -1.0, -4.0, -100.0, -1e4] {
        let s = (-z).sqrt();
        println!(
            "z = {z:>8}: {:.15}  {:.15}",
            gauss_2f1(1.0, 0.5, 1.5, z)?,
            s.atan() / s
        );
    }

    println!("\ncoverage kernel 2F1(1, 1-d; 2-d; z), d = 2/alpha_c");
    for alpha_c in [3.0, 4.0, 5.0] {
        let d = 2.0 / alpha_c;
        let row: Vec<String> = [-0.1, -1.0, -10.0, -1e3]
            .iter()
            .map(|&z| format!("{:.6}", gauss_2f1(1.0, 1.0 - d, 2.0 - d, z).unwrap()))
            .collect();
        println!("alpha_c = {alpha_c}: {}", row.join("  "));
    }
    Ok(())
}
