//! Runs every acceptance check at the reduced trial count.

use isac_sensing::validation::{run_all, ValidationConfig};

fn main() {
    let results = run_all(&ValidationConfig::default());
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} of {} passed", results.len() - failed, results.len());
}
