//! Single-quantum pre/post-selection: a weak particle number of −1 and a
//! negative weak energy density, from the closed form and again from the
//! general weak-value engine on the same two-level system.
//!
//!     cargo run --example miracle

use postselect_cosmo::weakcore::{
    miracle_number_weak, miracle_stress_weak, weak_value, OperatorMatrix, StateVector,
};
use postselect_cosmo::Complex;

fn main() -> postselect_cosmo::Result<()> {
    let r = |x: f64| Complex::new(x, 0.0);
    let (a, b) = (3f64.sqrt() / 2.0, 0.5);
    let (g, d) = (2.0 / 7f64.sqrt(), -(3.0f64 / 7.0).sqrt());
    let (omega, k) = (2.0, 2.0);

    let w = miracle_number_weak(r(a), r(b), r(g), r(d))?;
    let (t00, t11) = miracle_stress_weak(r(a), r(b), r(g), r(d), omega, k)?;
    println!("closed form: w_N = {w}, T00 = {t00}, T11 = {t11}");

    // |0⟩, |1⟩ of one oscillator; H = ω N leaves the weak value unchanged
    let n = OperatorMatrix::diagonal(&[0.0, 1.0]);
    let h = OperatorMatrix::diagonal(&[0.0, omega]);
    let input = StateVector::from_real(&[a, b])?;
    // post-selection chosen at t = 0 and carried to t_out = 1
    let phase = |t: f64| Complex::from_polar(1.0, -omega * t);
    let output = StateVector::new(vec![r(g), r(d) * phase(1.0)])?;
    let res = weak_value(&input, &output, &n, &h, 0.0, 0.0, 1.0)?;
    println!(
        "engine:      w_N = {:.15}, |⟨out|in⟩| = {:.4}, amplified = {}",
        res.value, res.overlap_magnitude, res.amplified
    );
    Ok(())
}
