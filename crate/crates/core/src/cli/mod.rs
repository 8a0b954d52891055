//! Command-line front end: configuration, the six commands, CSV/SVG
//! output and the verification suite.

mod commands;
mod config;
mod table;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

pub use commands::{execute, run, Command, Outcome};
pub use config::{
    default_config, parse_config, parse_config_str, parse_override, Format, GridSpec,
    MiracleConfig, RunConfig, DEFAULT_CONFIG, TOLERANCE_KEYS,
};
pub use table::{render_svg, Cell, ResultTable, RowBuilder, Series};
pub use verify::{run_checks, Check};

#[derive(Debug, Parser)]
#[command(
    name = "postselect-cosmo",
    version,
    about = "Weak values of a scalar field in a tanh-expanding 1+1 universe"
)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Config file (`key = value` lines) layered over the built-in defaults
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Override one config key; repeatable
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Output directory (overrides output.dir)
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Also write an SVG plot
    #[arg(long)]
    pub svg: bool,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let config = cli
        .set
        .iter()
        .map(|s| parse_override(s))
        .collect::<crate::Result<Vec<_>>>()
        .and_then(|overrides| match &cli.config {
            Some(path) => parse_config(path, &overrides),
            None => default_config(&overrides),
        });
    let mut config = match config {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    if let Some(dir) = cli.out {
        config.out_dir = dir;
    }
    if cli.svg && !config.wants(Format::Svg) {
        config.formats.push(Format::Svg);
    }
    execute(cli.command, &config)
}
