//! Weak value of the instantaneous quasiparticle number between the in
//! and out vacua: zero in both static regions, nonzero during the
//! expansion. Compared with the ordinary expectation value |B|².
//!
//!     cargo run --release --example weak_trajectory

use postselect_cosmo::model::ModelParams;
use postselect_cosmo::weakfield::{symmetric_eta_grid, weak_number_trajectory};

fn main() -> postselect_cosmo::Result<()> {
    let p = ModelParams::new(1.0, 0.5, 1.0, 1.0)?;
    let k = 0.5;
    let grid = symmetric_eta_grid(&p, 8.0, 33);
    let t = weak_number_trajectory(&p, k, &grid)?;

    let scale = t.w_n.iter().map(|w| w.re.abs()).fold(0.0, f64::max);
    println!("k = {k}; bars show Re w_N\n");
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "ρη", "Re w_N", "Im w_N", "⟨N⟩"
    );
    for ((eta, w), e) in t.eta_grid.iter().zip(&t.w_n).zip(&t.expectation) {
        let bar = "#".repeat((30.0 * w.re.abs() / scale).round() as usize);
        println!(
            "{:>6.2} {:>12.4e} {:>12.4e} {:>12.4e}  {bar}",
            p.rho * eta,
            w.re,
            w.im,
            e
        );
    }
    let i = t.peak_index();
    println!(
        "\npeak Re w_N = {:.4e} at ρη = {:.2}",
        t.w_n[i].re,
        p.rho * t.eta_grid[i]
    );
    Ok(())
}
