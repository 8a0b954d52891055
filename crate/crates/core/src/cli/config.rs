//! `key = value` run configuration.
//!
//! Values are layered: the embedded defaults, then the config file, then
//! `--set` overrides. Keys are dotted and case-insensitive.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::model::ModelParams;

pub const DEFAULT_CONFIG: &str = include_str!("default.conf");

/// Tolerance names understood by `verify`.
pub const TOLERANCE_KEYS: [&str; 9] = [
    "ode",
    "bogoliubov",
    "relation",
    "extraction",
    "wronskian",
    "oracle",
    "endpoint",
    "exact",
    "tail",
];

#[derive(Debug, Clone, PartialEq)]
pub enum GridSpec {
    Range { min: f64, max: f64, count: usize },
    List(Vec<f64>),
}

impl GridSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            GridSpec::List(v) => v.clone(),
            GridSpec::Range { min, count: 1, .. } => vec![*min],
            GridSpec::Range { min, max, count } => (0..*count)
                .map(|i| {
                    if i + 1 == *count {
                        *max
                    } else {
                        min + (max - min) * i as f64 / (*count - 1) as f64
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiracleConfig {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub omega: f64,
    pub k: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelParams,
    pub k_grid: GridSpec,
    pub eta_grid: GridSpec,
    pub n_max: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub amplification_threshold: f64,
    pub miracle: MiracleConfig,
    pub out_dir: PathBuf,
    pub formats: Vec<Format>,
}

impl RunConfig {
    pub fn tol(&self, name: &str) -> f64 {
        self.tolerances[name]
    }

    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }
}

/// Splits `key=value` from the command line.
pub fn parse_override(s: &str) -> Result<(String, String)> {
    match s.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
        _ => Err(Error::Usage(format!("expected key=value, got '{s}'"))),
    }
}

fn parse_lines(text: &str, origin: &str, into: &mut Vec<(String, String)>) -> Result<()> {
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(Error::Usage(format!(
                "{origin}:{}: expected 'key = value', got '{line}'",
                n + 1
            )));
        };
        into.push((k.trim().to_ascii_lowercase(), v.trim().to_string()));
    }
    Ok(())
}

/// Reads `path` over the defaults and applies `overrides`.
pub fn parse_config(path: &Path, overrides: &[(String, String)]) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse_config_str(Some((&text, &path.display().to_string())), overrides)
}

/// Defaults plus overrides, no file.
pub fn default_config(overrides: &[(String, String)]) -> Result<RunConfig> {
    parse_config_str(None, overrides)
}

pub fn parse_config_str(
    file: Option<(&str, &str)>,
    overrides: &[(String, String)],
) -> Result<RunConfig> {
    let mut defaults = Vec::new();
    parse_lines(DEFAULT_CONFIG, "<defaults>", &mut defaults)?;
    let known: Vec<String> = defaults.iter().map(|(k, _)| k.clone()).collect();
    let mut kv: BTreeMap<String, String> = defaults.into_iter().collect();
    let allowed = |k: &str| known.iter().any(|x| x == k) || k == "k.list" || k == "eta.list";
    if let Some((text, origin)) = file {
        let mut file_kv = Vec::new();
        parse_lines(text, origin, &mut file_kv)?;
        layer(&mut kv, file_kv, &allowed)?;
    }
    let cli_kv = overrides
        .iter()
        .map(|(k, v)| (k.to_ascii_lowercase(), v.clone()))
        .collect();
    layer(&mut kv, cli_kv, &allowed)?;
    build(&kv)
}

fn layer(
    kv: &mut BTreeMap<String, String>,
    new: Vec<(String, String)>,
    allowed: &dyn Fn(&str) -> bool,
) -> Result<()> {
    for (k, v) in new {
        if !allowed(&k) {
            return Err(Error::Usage(format!("unknown config key '{k}'")));
        }
        // a list wins over the range keys until a later layer touches the range
        if let Some((axis @ ("k" | "eta"), "min" | "max" | "count")) = k.split_once('.') {
            kv.remove(&format!("{axis}.list"));
        }
        kv.insert(k, v);
    }
    Ok(())
}

fn real(kv: &BTreeMap<String, String>, key: &str) -> Result<f64> {
    let raw = kv
        .get(key)
        .ok_or_else(|| Error::Usage(format!("missing config key '{key}'")))?;
    let x: f64 = raw
        .parse()
        .map_err(|_| Error::Usage(format!("{key}: '{raw}' is not a number")))?;
    if !x.is_finite() {
        return Err(Error::Usage(format!("{key}: value must be finite")));
    }
    Ok(x)
}

fn grid(kv: &BTreeMap<String, String>, axis: &str) -> Result<GridSpec> {
    let list_key = format!("{axis}.list");
    let spec = if let Some(raw) = kv.get(&list_key) {
        let v = raw
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| {
                        Error::Usage(format!("{list_key}: '{}' is not a number", s.trim()))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        GridSpec::List(v)
    } else {
        let count_key = format!("{axis}.count");
        let count = kv
            .get(&count_key)
            .ok_or_else(|| Error::Usage(format!("missing config key '{count_key}'")))?
            .parse::<usize>()
            .map_err(|_| Error::Usage(format!("{count_key}: expected a non-negative integer")))?;
        let (min, max) = (
            real(kv, &format!("{axis}.min"))?,
            real(kv, &format!("{axis}.max"))?,
        );
        if count == 0 {
            return Err(Error::Usage(format!("{count_key}: grid must not be empty")));
        }
        if !(min < max || (count == 1 && min == max)) {
            return Err(Error::Usage(format!(
                "{axis}.min/{axis}.max: need min < max, got {min} and {max}"
            )));
        }
        GridSpec::Range { min, max, count }
    };
    let values = spec.values();
    if values.is_empty() {
        return Err(Error::Usage(format!("{axis} grid must not be empty")));
    }
    if values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Usage(format!(
            "{axis} grid must be strictly increasing"
        )));
    }
    Ok(spec)
}

fn build(kv: &BTreeMap<String, String>) -> Result<RunConfig> {
    let (a, b, rho, m) = (
        real(kv, "model.a")?,
        real(kv, "model.b")?,
        real(kv, "model.rho")?,
        real(kv, "model.m")?,
    );
    let model = ModelParams::new(a, b, rho, m).map_err(|e| {
        let key = if a <= b.abs() {
            "model.A/model.B"
        } else if rho <= 0.0 {
            "model.rho"
        } else {
            "model.m"
        };
        match e {
            Error::InvalidParams(msg) => Error::Usage(format!("{key}: {msg}")),
            other => other,
        }
    })?;

    let n_max = kv["fock.n_max"]
        .parse::<usize>()
        .map_err(|_| Error::Usage("fock.n_max: expected a non-negative integer".into()))?;
    if n_max < 4 {
        return Err(Error::Usage(format!(
            "fock.n_max: must be at least 4, got {n_max}"
        )));
    }

    let mut tolerances = BTreeMap::new();
    for name in TOLERANCE_KEYS {
        let key = format!("tol.{name}");
        let t = real(kv, &key)?;
        if t < 0.0 {
            return Err(Error::Usage(format!(
                "{key}: tolerance must be non-negative, got {t}"
            )));
        }
        tolerances.insert(name.to_string(), t);
    }

    let amplification_threshold = real(kv, "weak.threshold")?;
    if amplification_threshold < 0.0 {
        return Err(Error::Usage("weak.threshold: must be non-negative".into()));
    }

    let miracle = MiracleConfig {
        alpha: real(kv, "miracle.alpha")?,
        beta: real(kv, "miracle.beta")?,
        gamma: real(kv, "miracle.gamma")?,
        delta: real(kv, "miracle.delta")?,
        omega: real(kv, "miracle.omega")?,
        k: real(kv, "miracle.k")?,
    };

    let formats = kv["output.formats"]
        .split(',')
        .map(|s| match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(Error::Usage(format!(
                "output.formats: unknown format '{other}'"
            ))),
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(RunConfig {
        model,
        k_grid: grid(kv, "k")?,
        eta_grid: grid(kv, "eta")?,
        n_max,
        tolerances,
        amplification_threshold,
        miracle,
        out_dir: PathBuf::from(&kv["output.dir"]),
        formats,
    })
}
