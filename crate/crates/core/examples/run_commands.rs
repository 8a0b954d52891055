//! The command layer used by the binary, driven from code: build a config
//! with overrides, run a command, and inspect the table it would write.
//!
//!     cargo run --release --example run_commands

use postselect_cosmo::cli::{default_config, run, Command};

fn main() -> postselect_cosmo::Result<()> {
    let overrides = [("model.B", "0.8"), ("k.list", "0.25, 0.5, 1, 2")]
        .map(|(k, v)| (k.to_string(), v.to_string()));
    let config = default_config(&overrides)?;

    let spectrum = run(Command::Spectrum, &config)?;
    println!("{}", spectrum.summary);
    print!("{}", spectrum.table.to_csv());

    let verify = run(Command::Verify, &config)?;
    println!("\n{}", verify.summary);
    print!("{}", verify.table.to_csv());
    Ok(())
}
