//! Particle creation by the tanh expansion: closed-form Bogoliubov
//! coefficients over a range of k, checked against the sinh form.
//!
//!     cargo run --example bogoliubov_spectrum

use postselect_cosmo::model::{frequencies, ModelParams};
use postselect_cosmo::modes::{bogoliubov_closed_form, bogoliubov_sinh_form};

fn main() -> postselect_cosmo::Result<()> {
    let p = ModelParams::new(1.0, 0.5, 1.0, 1.0)?;
    println!("C(η) = {} + {} tanh({}η), m = {}\n", p.a, p.b, p.rho, p.m);
    println!(
        "{:>5} {:>9} {:>9} {:>13} {:>13} {:>12}",
        "k", "ω_in", "ω_out", "|β|²", "|β|² (sinh)", "|α|²−|β|²−1"
    );
    for k in [0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0] {
        let f = frequencies(&p, k)?;
        let bog = bogoliubov_closed_form(&p, k)?;
        let (_, b2) = bogoliubov_sinh_form(&p, k)?;
        println!(
            "{k:>5} {:>9.5} {:>9.5} {:>13.6e} {:>13.6e} {:>12.1e}",
            f.omega_in,
            f.omega_out,
            bog.beta.norm_sqr(),
            b2,
            bog.normalization_defect()
        );
    }

    // a conformally coupled (massless) field sees no creation at all
    let bog = bogoliubov_closed_form(&p.massless(), 0.7)?;
    println!("\nm = 0, k = 0.7: α = {}, β = {}", bog.alpha, bog.beta);
    Ok(())
}
