//! In/out vacuum overlap mode by mode and the effective action W with
//! ⟨0_out|0_in⟩ = e^{iW}. A periodic box of length L quantizes k = 2πn/L.
//!
//!     cargo run --example vacuum_overlap

use std::f64::consts::PI;

use postselect_cosmo::model::ModelParams;
use postselect_cosmo::weakfield::vacuum_overlap;

fn main() -> postselect_cosmo::Result<()> {
    let p = ModelParams::new(1.5, 1.2, 0.8, 1.3)?;
    for l in [10.0, 20.0, 40.0] {
        let n_max = (8.0 * l / (2.0 * PI)) as i64;
        let ks: Vec<f64> = (-n_max..=n_max).map(|n| 2.0 * PI * n as f64 / l).collect();
        let o = vacuum_overlap(&p, &ks)?;
        println!(
            "L = {l:>4}: {:>3} modes  |⟨0_out|0_in⟩| = {:.6e}  Im W = {:.6e}  Im W / L = {:.6e}",
            ks.len(),
            o.product_magnitude,
            o.w.im,
            o.w.im / l
        );
    }
    Ok(())
}
