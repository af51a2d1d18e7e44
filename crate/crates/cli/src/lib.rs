//! Command-line front end of the `hqarch` estimator.
//!
//! Each verb reads a [`RunConfig`], writes its files into the output
//! directory and returns a [`Report`]. Errors map onto process exit codes
//! through [`CliError::exit_code`].

pub mod commands;
pub mod config;
pub mod error;

use std::path::{Path, PathBuf};

pub use commands::{cmd_layout, cmd_simulate, cmd_sweep, cmd_tables, Report};
pub use config::RunConfig;
pub use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Tables,
    Sweep,
    Simulate,
    Layout,
}

impl Verb {
    pub const ALL: [Verb; 4] = [Verb::Tables, Verb::Sweep, Verb::Simulate, Verb::Layout];
}

/// Loads the config (defaults when `config` is `None`) and runs `verb`.
/// `out` overrides the configured output directory.
pub fn run(verb: Verb, config: Option<&Path>, out: Option<&Path>, strict: bool) -> Result<Report, CliError> {
    let cfg = match config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let dir: PathBuf = out.map(Path::to_path_buf).unwrap_or_else(|| cfg.outputs.dir.clone());
    run_with(verb, &cfg, &dir, strict)
}

pub fn run_with(verb: Verb, cfg: &RunConfig, dir: &Path, strict: bool) -> Result<Report, CliError> {
    match verb {
        Verb::Tables => cmd_tables(cfg, dir, strict),
        Verb::Sweep => cmd_sweep(cfg, dir, strict),
        Verb::Simulate => cmd_simulate(cfg, dir, strict),
        Verb::Layout => cmd_layout(cfg, dir, strict),
    }
}
