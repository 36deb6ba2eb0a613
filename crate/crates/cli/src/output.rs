//! CSV emission. Every file starts with `#` comment lines recording the
//! driver version, the experiment, every configuration value and any
//! summary results, followed by one header row and the data rows. Floats
//! are written in Rust's shortest round-trip form; missing values are
//! `NaN`.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use crate::config::ExperimentConfig;
use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rows of one experiment plus named summary results.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub results: Vec<(String, f64)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new(), results: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    pub fn result(&self, name: &str) -> Option<f64> {
        self.results.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

pub fn render(cfg: &ExperimentConfig, table: &Table) -> String {
    let mut s = String::new();
    writeln!(s, "# kpz-lab {VERSION}").unwrap();
    writeln!(s, "# experiment = {}", cfg.experiment.name()).unwrap();
    for (key, value) in cfg.entries() {
        writeln!(s, "# {key} = {value}").unwrap();
    }
    for (key, value) in &table.results {
        writeln!(s, "# result {key} = {value}").unwrap();
    }
    writeln!(s, "{}", table.columns.join(",")).unwrap();
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(s, "{}", cells.join(",")).unwrap();
    }
    s
}

/// Writes to `path`, or to standard output when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Output { path: p.to_path_buf(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Output { path: "<stdout>".into(), source }),
    }
}
