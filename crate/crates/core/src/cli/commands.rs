use std::fs;

use rayon::prelude::*;

use super::config::{Format, RunConfig};
use super::table::{render_svg, ResultTable, RowBuilder, Series};
use super::verify::run_checks;
use crate::error::Result;
use crate::model::frequencies;
use crate::modes::{bogoliubov_closed_form, bogoliubov_sinh_form};
use crate::specfun::Complex;
use crate::weakcore::{miracle_stress_weak, WeakValueResult};
use crate::weakfield::{stress_difference, vacuum_overlap, weak_number_sweep, StressDifference};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Bogoliubov coefficients over the k grid
    Spectrum,
    /// Quasiparticle-number weak value along the η grid
    Trajectory,
    /// Weak-minus-expectation stress tensor along the η grid
    Stress,
    /// Two-level pre/post-selection weak values
    Miracle,
    /// In/out vacuum overlap and effective action
    Overlap,
    /// Built-in consistency checks
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Trajectory => "trajectory",
            Command::Stress => "stress",
            Command::Miracle => "miracle",
            Command::Overlap => "overlap",
            Command::Verify => "verify",
        }
    }
}

/// Result of one command before anything is written.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: ResultTable,
    pub summary: String,
    pub svg: Option<String>,
    /// Set when `verify` finds a check out of tolerance.
    pub failed: bool,
}

pub fn run(command: Command, config: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Spectrum => spectrum(config),
        Command::Trajectory => trajectory(config),
        Command::Stress => stress(config),
        Command::Miracle => miracle(config),
        Command::Overlap => overlap(config),
        Command::Verify => verify(config),
    }
}

/// Runs `command`, writes `<command>.csv` / `.svg` and returns the exit code.
pub fn execute(command: Command, config: &RunConfig) -> i32 {
    match run(command, config).and_then(|o| write_outputs(command, config, &o).map(|_| o)) {
        Ok(o) => {
            println!("{}", o.summary);
            if o.failed {
                2
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn write_outputs(command: Command, config: &RunConfig, o: &Outcome) -> Result<()> {
    fs::create_dir_all(&config.out_dir)?;
    if config.wants(Format::Csv) {
        fs::write(
            config.out_dir.join(format!("{}.csv", command.name())),
            o.table.to_csv(),
        )?;
    }
    if let (true, Some(svg)) = (config.wants(Format::Svg), &o.svg) {
        fs::write(config.out_dir.join(format!("{}.svg", command.name())), svg)?;
    }
    Ok(())
}

fn spectrum(config: &RunConfig) -> Result<Outcome> {
    let p = config.model;
    let ks = config.k_grid.values();
    let rows: Vec<RowBuilder> = ks
        .par_iter()
        .map(|&k| {
            let f = frequencies(&p, k)?;
            let bog = bogoliubov_closed_form(&p, k)?;
            let (_, beta_sq_sinh) = bogoliubov_sinh_form(&p, k)?;
            Ok(RowBuilder::new()
                .real("k", k)
                .real("omega_in", f.omega_in)
                .real("omega_out", f.omega_out)
                .complex("alpha", bog.alpha)
                .complex("beta", bog.beta)
                .real("alpha_sq", bog.alpha.norm_sqr())
                .real("beta_sq", bog.beta.norm_sqr())
                .real("beta_sq_sinh", beta_sq_sinh))
        })
        .collect::<Result<_>>()?;
    let mut table = ResultTable::new();
    for r in rows {
        table.push(r)?;
    }
    let beta_sq = table.column("beta_sq").unwrap_or_default();
    let (imax, bmax) =
        beta_sq.iter().enumerate().fold(
            (0, 0.0),
            |acc, (i, &b)| if b > acc.1 { (i, b) } else { acc },
        );
    let svg = render_svg(
        "|beta_k|^2",
        "k",
        "beta_sq",
        &[Series {
            label: "beta_sq".into(),
            x: ks.clone(),
            y: beta_sq,
        }],
    );
    Ok(Outcome {
        summary: format!(
            "spectrum: {} modes, max |beta|^2 = {bmax:.6e} at k = {}",
            ks.len(),
            ks[imax]
        ),
        table,
        svg: Some(svg),
        failed: false,
    })
}

fn trajectory(config: &RunConfig) -> Result<Outcome> {
    let p = config.model;
    let ks = config.k_grid.values();
    let etas = config.eta_grid.values();
    let trajs = weak_number_sweep(&p, &ks, &etas, config.tol("ode"))?;
    let mut table = ResultTable::new();
    let mut peak = (f64::NEG_INFINITY, 0.0, 0.0);
    for t in &trajs {
        for ((&eta, &w), &e) in t.eta_grid.iter().zip(&t.w_n).zip(&t.expectation) {
            table.push(
                RowBuilder::new()
                    .real("k", t.k)
                    .real("eta", eta)
                    .complex("w_N", w)
                    .real("expectation", e),
            )?;
            if w.re > peak.0 {
                peak = (w.re, eta, t.k);
            }
        }
    }
    let stride = trajs.len().div_ceil(6).max(1);
    let series: Vec<Series> = trajs
        .iter()
        .step_by(stride)
        .map(|t| Series {
            label: format!("k = {}", t.k),
            x: t.eta_grid.clone(),
            y: t.w_n.iter().map(|w| w.re).collect(),
        })
        .collect();
    Ok(Outcome {
        summary: format!(
            "trajectory: {} modes x {} times, peak Re w_N = {:.6e} at eta = {} (k = {})",
            ks.len(),
            etas.len(),
            peak.0,
            peak.1,
            peak.2
        ),
        table,
        svg: Some(render_svg("Re w_N(eta)", "eta", "Re w_N", &series)),
        failed: false,
    })
}

fn stress(config: &RunConfig) -> Result<Outcome> {
    let p = config.model;
    let ks = config.k_grid.values();
    let etas = config.eta_grid.values();
    let diffs = etas
        .iter()
        .map(|&eta| stress_difference(&p, eta, &ks))
        .collect::<Result<Vec<_>>>()?;
    let mut table = ResultTable::new();
    for s in &diffs {
        table.push(
            RowBuilder::new()
                .real("eta", s.eta)
                .complex("d_T00", s.d_t00)
                .complex("d_T01", s.d_t01)
                .complex("d_T11", s.d_t11)
                .real("k_max", s.k_max)
                .int("n_modes", s.n_modes as i64),
        )?;
    }
    // report the point closest to the fastest expansion
    let mid = diffs
        .iter()
        .min_by(|a, b| a.eta.abs().total_cmp(&b.eta.abs()))
        .expect("grid is non-empty");
    let summary = format!(
        "stress: {} times, {} modes; at eta = {}: dT00 = {:.6e}{:+.6e}i, dT11 = {:.6e}{:+.6e}i",
        diffs.len(),
        mid.n_modes,
        mid.eta,
        mid.d_t00.re,
        mid.d_t00.im,
        mid.d_t11.re,
        mid.d_t11.im,
    );
    let series = |label: &str, f: fn(&StressDifference) -> f64| Series {
        label: label.into(),
        x: etas.clone(),
        y: diffs.iter().map(f).collect(),
    };
    let svg = render_svg(
        "weak minus expectation stress",
        "eta",
        "Re dT",
        &[
            series("Re d_T00", |s| s.d_t00.re),
            series("Re d_T11", |s| s.d_t11.re),
        ],
    );
    Ok(Outcome {
        table,
        summary,
        svg: Some(svg),
        failed: false,
    })
}

fn miracle(config: &RunConfig) -> Result<Outcome> {
    let m = config.miracle;
    let r = |x: f64| Complex::new(x, 0.0);
    let (t00, t11) =
        miracle_stress_weak(r(m.alpha), r(m.beta), r(m.gamma), r(m.delta), m.omega, m.k)?;
    let w = t00 / m.omega;
    let overlap = WeakValueResult::from_ratio(
        r(m.beta * m.delta),
        r(m.alpha * m.gamma + m.beta * m.delta),
        config.amplification_threshold,
    )?;
    let mut table = ResultTable::new();
    table.push(
        RowBuilder::new()
            .real("alpha", m.alpha)
            .real("beta", m.beta)
            .real("gamma", m.gamma)
            .real("delta", m.delta)
            .real("omega", m.omega)
            .real("k", m.k)
            .complex("w_N", w)
            .complex("T00", t00)
            .complex("T11", t11)
            .real("overlap", overlap.overlap_magnitude)
            .int("amplified", overlap.amplified as i64),
    )?;
    Ok(Outcome {
        summary: format!(
            "miracle: w_N = {:.12}, T00 = {:.12}, T11 = {:.12}, |<out|in>| = {:.6}",
            w.re, t00.re, t11.re, overlap.overlap_magnitude
        ),
        table,
        svg: None,
        failed: false,
    })
}

fn overlap(config: &RunConfig) -> Result<Outcome> {
    let p = config.model;
    let o = vacuum_overlap(&p, &config.k_grid.values())?;
    let mut table = ResultTable::new();
    let mut ln_cum = 0.0;
    let mut running = Vec::with_capacity(o.k.len());
    for (&k, &v) in o.k.iter().zip(&o.per_mode) {
        ln_cum += v.re.ln();
        running.push(ln_cum.exp());
        table.push(
            RowBuilder::new()
                .real("k", k)
                .complex("overlap", v)
                .real("cumulative_magnitude", ln_cum.exp())
                .complex("W_cumulative", Complex::new(0.0, -ln_cum)),
        )?;
    }
    let svg = render_svg(
        "<0_out|0_in> partial product",
        "k",
        "|product|",
        &[Series {
            label: "cumulative".into(),
            x: o.k.clone(),
            y: running,
        }],
    );
    Ok(Outcome {
        summary: format!(
            "overlap: {} grid entries, |<0_out|0_in>| = {:.12e}, W = {:.6e}{:+.6e}i",
            o.k.len(),
            o.product_magnitude,
            o.w.re,
            o.w.im
        ),
        table,
        svg: Some(svg),
        failed: false,
    })
}

fn verify(config: &RunConfig) -> Result<Outcome> {
    let checks = run_checks(config)?;
    let mut table = ResultTable::new();
    let mut passed = 0;
    for c in &checks {
        let ok = c.passed();
        passed += ok as usize;
        table.push(
            RowBuilder::new()
                .text("check", c.name)
                .real("measured", c.measured)
                .real("tolerance", c.tolerance)
                .int("passed", ok as i64),
        )?;
    }
    for c in checks.iter().filter(|c| !c.passed()) {
        eprintln!("FAIL {}: {:e} > {:e}", c.name, c.measured, c.tolerance);
    }
    let failed = passed != checks.len();
    Ok(Outcome {
        summary: format!("verify: {passed}/{} checks passed", checks.len()),
        table,
        svg: None,
        failed,
    })
}
