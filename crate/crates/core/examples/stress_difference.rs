//! Weak minus expectation value of the stress tensor along the expansion,
//! summed over a symmetric k grid. The η-x component cancels pairwise.
//!
//!     cargo run --release --example stress_difference

use postselect_cosmo::model::ModelParams;
use postselect_cosmo::weakfield::{stress_difference, stress_tail_cutoff};

fn main() -> postselect_cosmo::Result<()> {
    let p = ModelParams::new(1.0, 0.5, 1.0, 1.0)?;
    let dk = 0.05;
    let k_max = 2.0 * stress_tail_cutoff(&p);
    let n = (k_max / dk) as i64;
    let ks: Vec<f64> = (-n..=n).map(|i| i as f64 * dk).collect();
    println!("{} modes, |k| ≤ {k_max:.1}\n", ks.len());

    println!(
        "{:>5} {:>25} {:>10} {:>25}",
        "ρη", "ΔT_ηη", "|ΔT_ηx|", "ΔT_xx"
    );
    for x in [-6.0, -3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0, 6.0] {
        let s = stress_difference(&p, x / p.rho, &ks)?;
        println!(
            "{x:>5} {:>25.6e} {:>10.1e} {:>25.6e}",
            s.d_t00,
            s.d_t01.norm(),
            s.d_t11
        );
    }
    Ok(())
}
