//! Experiment configuration: built-in defaults, then an optional
//! `key = value` file, then command-line flags (flags win).

use std::path::PathBuf;
use std::str::FromStr;

use kpz_core::fredholm::{MIN_MARGIN, MIN_NODES, TW_DOMAIN};
use kpz_core::rmt::EnsembleKind;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    TwTable,
    AiryCov,
    TasepOnepoint,
    TasepShape,
    DbmCov,
    Compare,
}

impl Experiment {
    pub const ALL: [Experiment; 6] = [
        Experiment::TwTable,
        Experiment::AiryCov,
        Experiment::TasepOnepoint,
        Experiment::TasepShape,
        Experiment::DbmCov,
        Experiment::Compare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::TwTable => "tw-table",
            Experiment::AiryCov => "airy-cov",
            Experiment::TasepOnepoint => "tasep-onepoint",
            Experiment::TasepShape => "tasep-shape",
            Experiment::DbmCov => "dbm-cov",
            Experiment::Compare => "compare",
        }
    }

    fn uses_covariances(self) -> bool {
        matches!(self, Experiment::AiryCov | Experiment::DbmCov | Experiment::Compare)
    }
}

/// TASEP initial condition as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ic {
    Step,
    Flat,
    Stat,
}

impl Ic {
    pub fn name(self) -> &'static str {
        match self {
            Ic::Step => "step",
            Ic::Flat => "flat",
            Ic::Stat => "stat",
        }
    }
}

impl FromStr for Ic {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "step" => Ok(Ic::Step),
            "flat" => Ok(Ic::Flat),
            "stat" | "stationary" => Ok(Ic::Stat),
            _ => Err("expected step, flat or stat".into()),
        }
    }
}

fn parse_ensemble(s: &str) -> Result<EnsembleKind, String> {
    match s {
        "gue" => Ok(EnsembleKind::Gue),
        "goe" => Ok(EnsembleKind::Goe),
        _ => Err("expected gue or goe".into()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub seed: u64,
    /// TASEP time.
    pub t: f64,
    pub runs: usize,
    /// Matrix dimension.
    pub n: usize,
    pub rho: f64,
    pub u_max: f64,
    pub du: f64,
    /// Gauss-Legendre nodes per cut.
    pub n_quad: usize,
    /// `M - s_max` for the Fredholm truncation.
    pub margin: f64,
    pub s_min: f64,
    pub s_max: f64,
    pub ds: f64,
    /// Bin width in `ξ = x/t`.
    pub bin: f64,
    pub ic: Ic,
    pub ensemble: EnsembleKind,
    pub out: Option<PathBuf>,
}

/// Keys accepted in config files and, with `-` for `_`, as flags.
pub const KEYS: [&str; 16] = [
    "seed", "t", "runs", "n", "rho", "u_max", "du", "n_quad", "margin", "s_min", "s_max", "ds", "bin", "ic", "ensemble",
    "out",
];

impl ExperimentConfig {
    pub fn defaults(experiment: Experiment) -> Self {
        let (t, runs) = match experiment {
            Experiment::TasepShape => (2000.0, 100),
            Experiment::DbmCov | Experiment::Compare => (1000.0, 5000),
            _ => (1000.0, 10_000),
        };
        let (s_min, s_max, ds) = match experiment {
            Experiment::TwTable => (-8.0, 5.0, 0.1),
            _ => (-6.0, 4.0, 0.05),
        };
        Self {
            experiment,
            seed: 1,
            t,
            runs,
            n: 100,
            rho: 0.5,
            u_max: if experiment == Experiment::AiryCov { 3.0 } else { 2.0 },
            du: 0.5,
            n_quad: if experiment.uses_covariances() { MIN_NODES } else { 80 },
            margin: 16.0,
            s_min,
            s_max,
            ds,
            bin: 0.05,
            ic: Ic::Step,
            ensemble: EnsembleKind::Gue,
            out: None,
        }
    }

    /// Sets one key from its textual value.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let key = key.trim().replace('-', "_");
        let value = value.trim();
        let bad = |reason: String| CliError::InvalidValue { key: key.clone(), value: value.to_string(), reason };
        fn num<T: FromStr>(v: &str) -> Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            v.parse::<T>().map_err(|e| e.to_string())
        }
        match key.as_str() {
            "seed" => self.seed = num(value).map_err(bad)?,
            "t" => self.t = num(value).map_err(bad)?,
            "runs" => self.runs = num(value).map_err(bad)?,
            "n" => self.n = num(value).map_err(bad)?,
            "rho" => self.rho = num(value).map_err(bad)?,
            "u_max" => self.u_max = num(value).map_err(bad)?,
            "du" => self.du = num(value).map_err(bad)?,
            "n_quad" => self.n_quad = num(value).map_err(bad)?,
            "margin" | "m" => self.margin = num(value).map_err(bad)?,
            "s_min" => self.s_min = num(value).map_err(bad)?,
            "s_max" => self.s_max = num(value).map_err(bad)?,
            "ds" => self.ds = num(value).map_err(bad)?,
            "bin" => self.bin = num(value).map_err(bad)?,
            "ic" => self.ic = value.parse().map_err(bad)?,
            "ensemble" => self.ensemble = parse_ensemble(value).map_err(bad)?,
            "out" => self.out = Some(PathBuf::from(value)),
            _ => return Err(CliError::InvalidValue { key, value: value.to_string(), reason: "unknown key".into() }),
        }
        Ok(())
    }

    /// Defaults, overridden by `file` (contents of a config file), overridden
    /// by `flags`. Validates the result.
    pub fn resolve(experiment: Experiment, file: Option<&str>, flags: &[(String, String)]) -> Result<Self, CliError> {
        let mut cfg = Self::defaults(experiment);
        if let Some(text) = file {
            for (key, value) in parse_config_file(text)? {
                cfg.set(&key, &value)?;
            }
        }
        for (key, value) in flags {
            cfg.set(key, value)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let fail = |key: &str, value: String, reason: &str| {
            Err(CliError::InvalidValue { key: key.into(), value, reason: reason.into() })
        };
        let positive = |x: f64| x > 0.0 && x.is_finite();
        if self.runs == 0 {
            return fail("runs", self.runs.to_string(), "must be positive");
        }
        if self.n == 0 {
            return fail("n", self.n.to_string(), "must be positive");
        }
        if !positive(self.t) {
            return fail("t", self.t.to_string(), "must be positive");
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return fail("rho", self.rho.to_string(), "must lie in (0, 1)");
        }
        if !positive(self.du) {
            return fail("du", self.du.to_string(), "must be positive");
        }
        if !(self.u_max >= self.du) || !self.u_max.is_finite() {
            return fail("u_max", self.u_max.to_string(), "must be at least du");
        }
        if self.n_quad < MIN_NODES {
            return fail("n_quad", self.n_quad.to_string(), "below the minimum node count");
        }
        if !(self.margin >= MIN_MARGIN) || !self.margin.is_finite() {
            return fail("margin", self.margin.to_string(), "below the minimum truncation margin");
        }
        if !positive(self.ds) {
            return fail("ds", self.ds.to_string(), "must be positive");
        }
        if !(self.s_min < self.s_max) || self.s_min < TW_DOMAIN.0 || self.s_max > TW_DOMAIN.1 {
            return fail("s_min", format!("{}..{}", self.s_min, self.s_max), "need s_min < s_max inside [-10, 6]");
        }
        if !positive(self.bin) {
            return fail("bin", self.bin.to_string(), "must be positive");
        }
        Ok(())
    }

    /// `(key, value)` pairs for the output header, in [`KEYS`] order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        vec![
            ("seed", self.seed.to_string()),
            ("t", self.t.to_string()),
            ("runs", self.runs.to_string()),
            ("n", self.n.to_string()),
            ("rho", self.rho.to_string()),
            ("u_max", self.u_max.to_string()),
            ("du", self.du.to_string()),
            ("n_quad", self.n_quad.to_string()),
            ("margin", self.margin.to_string()),
            ("s_min", self.s_min.to_string()),
            ("s_max", self.s_max.to_string()),
            ("ds", self.ds.to_string()),
            ("bin", self.bin.to_string()),
            ("ic", self.ic.name().to_string()),
            ("ensemble", self.ensemble.name().to_string()),
            ("out", self.out.as_ref().map_or("-".into(), |p| p.display().to_string())),
        ]
    }

    /// `0, du, 2du, …` up to `u_max` (inclusive up to rounding).
    pub fn u_grid(&self) -> Vec<f64> {
        grid(0.0, self.u_max, self.du)
    }

    pub fn s_grid(&self) -> Vec<f64> {
        grid(self.s_min, self.s_max, self.ds)
    }
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let count = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=count).map(|k| lo + step * k as f64).collect()
}

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_file(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut pairs = Vec::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", number + 1)))?;
        pairs.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}
