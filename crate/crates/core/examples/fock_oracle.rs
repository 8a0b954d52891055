//! Brute-force check of the Gaussian formulas: build |0_in⟩ in a truncated
//! two-mode out Fock space and evaluate weak values as explicit matrix
//! elements.
//!
//!     cargo run --release --example fock_oracle

use postselect_cosmo::model::ModelParams;
use postselect_cosmo::modes::{bogoliubov_closed_form, instantaneous_bogoliubov, solve_mode_ode};
use postselect_cosmo::weakcore::{
    in_vacuum_in_out_basis, oracle_expectation, oracle_pair_weak_value, PairFockBasis,
};
use postselect_cosmo::weakfield::{
    instantaneous_number_operator, lambda_coefficient, pair_stress_bilinear, pair_stress_operators,
    weak_number_from_coefficients,
};

fn main() -> postselect_cosmo::Result<()> {
    let p = ModelParams::new(1.0, 0.8, 1.5, 1.6)?;
    let k = 0.3;
    let bog = bogoliubov_closed_form(&p, k)?;
    let basis = PairFockBasis::new(40)?;
    println!(
        "|β/α| = {:.4}, Fock dimension {}",
        bog.squeeze_ratio(),
        basis.dim()
    );

    let vac = in_vacuum_in_out_basis(&bog, &basis)?;
    println!(
        "⟨0_out|0_in⟩ = {:.12}  (1/|α| = {:.12})",
        vac.amplitudes()[0],
        1.0 / bog.alpha.norm()
    );

    let span = 8.0 / p.rho;
    let traj = solve_mode_ode(&p, k, (-span, span), 1e-10)?;
    println!("\n{:>5} {:>30} {:>10}", "ρη", "w_N (oracle)", "|Δ|");
    for x in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        let c = instantaneous_bogoliubov(&traj, &p, x / p.rho)?;
        let op = instantaneous_number_operator(&basis, &bog, &c);
        let oracle = oracle_pair_weak_value(&bog, &op, &basis)?.value;
        let d = (oracle - weak_number_from_coefficients(&c, &bog)).norm();
        println!("{x:>5} {oracle:>30.6e} {d:>10.1e}");
    }

    let lambda = lambda_coefficient(&p, k)?;
    let t = pair_stress_bilinear(&p, k, 0.0)?;
    println!("\nstress at η = 0, weak minus expectation:");
    for (c, op) in pair_stress_operators(&p, &bog, &basis, k, 0.0)?
        .iter()
        .enumerate()
    {
        let oracle = oracle_pair_weak_value(&bog, op, &basis)?.value - oracle_expectation(&vac, op);
        let closed = 2.0 * lambda * t[c];
        println!(
            "  {:<5} oracle {oracle:.6e}  closed form {closed:.6e}",
            ["T_ηη", "T_ηx", "T_xx"][c]
        );
    }
    Ok(())
}
