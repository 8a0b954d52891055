//! General weak values in a finite Hilbert space: a spin-1/2 in a field,
//! weak amplification as the post-selection approaches orthogonality, and
//! the reduction to the expectation value when nothing is post-selected.
//!
//!     cargo run --example weak_value_engine

use nalgebra::DMatrix;
use postselect_cosmo::weakcore::{evolution, weak_value, OperatorMatrix, StateVector};
use postselect_cosmo::{Complex, Error};

fn main() -> postselect_cosmo::Result<()> {
    let c = |re: f64, im: f64| Complex::new(re, im);
    let sz = OperatorMatrix::diagonal(&[1.0, -1.0]);
    let sx = OperatorMatrix::hermitian(DMatrix::from_row_slice(
        2,
        2,
        &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)],
    ))?;
    let h = sx.combine(c(0.3, 0.0), &sz, c(0.2, 0.0))?;

    // out is tilted from orthogonal to in by ε
    let theta0: f64 = 0.3;
    let input = StateVector::from_real(&[theta0.cos(), theta0.sin()])?;
    println!(
        "{:>8} {:>12} {:>26} {:>9}",
        "ε", "|⟨out|in⟩|", "(σ_z)_w", "amplified"
    );
    for eps in [0.5, 0.1, 0.03, 0.01, 1e-3] {
        let th = theta0 + std::f64::consts::FRAC_PI_2 - eps;
        let output = StateVector::from_real(&[th.cos(), th.sin()])?;
        match weak_value(
            &input,
            &output,
            &sz,
            &OperatorMatrix::zeros(2),
            0.0,
            0.5,
            1.0,
        ) {
            Ok(w) => println!(
                "{eps:>8} {:>12.4e} {:>26.6} {:>9}",
                w.overlap_magnitude, w.value, w.amplified
            ),
            Err(e @ Error::OrthogonalPostSelection { .. }) => println!("{eps:>8} {e}"),
            Err(e) => return Err(e),
        }
    }

    // post-selecting the evolved input gives back ⟨σ_z(t)⟩
    let (t_in, t, t_out) = (0.0, 1.1, 3.0);
    let evolved = StateVector::from_dvector(evolution(&h, t_out - t_in)? * input.amplitudes())?;
    let w = weak_value(&input, &evolved, &sz, &h, t_in, t, t_out)?;
    let psi = evolution(&h, t - t_in)? * input.amplitudes();
    println!(
        "\nweak value {:.15}, expectation {:.15}",
        w.value,
        psi.dotc(&sz.apply(&psi))
    );
    Ok(())
}
