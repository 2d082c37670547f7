use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::{ConfigError, Mode, Origin, ProblemSpec, RootChoice};

#[derive(Debug, Parser)]
#[command(
    name = "distpf",
    version,
    about = "Distributional Laplacians of pseudofunctions and delta-sourced radial equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print the C_p, L_p and B_{ℓ,p} tables for p = 0..order.
    Coeffs,
    /// Distributional Laplacian of Pf.[r^s Σ a_k r^k]·Y_ℓ^μ (needs --s).
    Laplacian,
    /// Frobenius series of the radial equation with its resonance report.
    Solve,
    /// Decide which equation the series solution satisfies in R³.
    Classify,
    /// Oracle residual table for the Laplacian identity.
    Verify,
}

#[derive(Debug, Default, clap::Args)]
pub struct Flags {
    /// `key = value` problem file; flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    pub ell: Option<u32>,
    #[arg(long, global = true, value_name = "N", allow_negative_numbers = true)]
    pub mu: Option<i32>,
    /// Energy as `p/q` or decimal.
    #[arg(long, global = true, value_name = "Q", allow_hyphen_values = true)]
    pub energy: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub root: Option<RootChoice>,
    /// Truncation order N ≥ 1.
    #[arg(long, global = true, value_name = "N")]
    pub order: Option<usize>,
    #[arg(long = "hbar2-over-2m", global = true, value_name = "Q")]
    pub hbar2_over_2m: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,
    /// Residual tolerance (default 1e-8).
    #[arg(long, global = true, value_name = "X")]
    pub tol: Option<f64>,
    /// Write the machine-readable result here.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Leading exponent of the pseudofunction for `laplacian` and `verify`.
    #[arg(long, global = true, value_name = "N", allow_negative_numbers = true)]
    pub s: Option<i64>,
    /// Comma-separated series coefficients a_0, a_1, ...
    #[arg(long, global = true, value_name = "LIST", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Comma-separated Gaussian widths for the oracle.
    #[arg(long, global = true, value_name = "LIST")]
    pub alpha: Option<String>,
    /// Also run the oracle on the solution (`solve`, `classify`, `laplacian`).
    #[arg(long, global = true)]
    pub verify: bool,
    /// Any config field, e.g. `--set 'v[-1]=-2'`. Repeatable.
    #[arg(
        long = "set",
        global = true,
        value_name = "KEY=VALUE",
        allow_hyphen_values = true
    )]
    pub set: Vec<String>,
}

impl Flags {
    /// Config file (if any) with the flags applied on top.
    pub fn resolve(&self) -> anyhow::Result<ProblemSpec> {
        let mut spec = match &self.config {
            Some(path) => ProblemSpec::load(path)?,
            None => ProblemSpec::default(),
        };
        for item in &self.set {
            let (key, value) = item.split_once('=').ok_or_else(|| ConfigError::Syntax {
                origin: Origin::Flag,
                text: item.clone(),
            })?;
            spec.set(key.trim(), value.trim(), Origin::Flag)?;
        }
        let text_fields: [(&str, Option<String>); 10] = [
            ("ell", self.ell.map(|v| v.to_string())),
            ("mu", self.mu.map(|v| v.to_string())),
            ("energy", self.energy.clone()),
            ("order", self.order.map(|v| v.to_string())),
            ("hbar2_over_2m", self.hbar2_over_2m.clone()),
            ("tol", self.tol.map(|v| v.to_string())),
            ("s", self.s.map(|v| v.to_string())),
            ("coeffs", self.coeffs.clone()),
            ("alpha", self.alpha.clone()),
            ("verify", self.verify.then(|| "true".to_string())),
        ];
        for (key, value) in text_fields {
            if let Some(value) = value {
                spec.set(key, &value, Origin::Flag)?;
            }
        }
        if let Some(root) = self.root {
            spec.root = root;
        }
        if let Some(mode) = self.mode {
            spec.mode = mode;
        }
        spec.validate()?;
        Ok(spec)
    }
}
