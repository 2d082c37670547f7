//! Problem description: a flat `key = value` file, overridden by flags.

use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use distpf_core::{AngularLabel, BigRational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::number::parse_number;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum RootChoice {
    #[default]
    Regular,
    Singular,
    Both,
}

/// Where a bad value came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Line(usize),
    Flag,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Line(n) => write!(f, "line {n}"),
            Origin::Flag => write!(f, "command line"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("{origin}: expected `key = value`, got {text:?}")]
    Syntax { origin: Origin, text: String },
    #[error("{origin}: unknown field `{field}`")]
    UnknownField { origin: Origin, field: String },
    #[error("{origin}: field `{field}`: {message}")]
    BadValue {
        origin: Origin,
        field: String,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

/// Everything a subcommand may need.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub v_minus1: BigRational,
    /// `v_0..v_J`.
    pub v: Vec<BigRational>,
    pub ell: u32,
    pub mu: i32,
    pub energy: BigRational,
    pub root: RootChoice,
    pub order: usize,
    pub hbar2_over_2m: BigRational,
    pub mode: Mode,
    pub tol: f64,
    /// Run the oracle on the solution as well.
    pub verify: bool,
    /// Pseudofunction for `laplacian` and `verify`: exponent and coefficients.
    pub s: Option<i64>,
    pub coeffs: Vec<BigRational>,
    /// Gaussian widths for the oracle.
    pub alpha: Vec<BigRational>,
}

impl Default for ProblemSpec {
    fn default() -> Self {
        let int = |n: i64| BigRational::from_integer(n.into());
        Self {
            v_minus1: int(0),
            v: Vec::new(),
            ell: 0,
            mu: 0,
            energy: int(0),
            root: RootChoice::Regular,
            order: 8,
            hbar2_over_2m: int(1),
            mode: Mode::Exact,
            tol: 1e-8,
            verify: false,
            s: None,
            coeffs: vec![int(1)],
            alpha: vec![BigRational::new(1.into(), 2.into()), int(1), int(2)],
        }
    }
}

impl ProblemSpec {
    /// Parses config text. Later lines override earlier ones.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut spec = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let origin = Origin::Line(i + 1);
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Syntax {
                    origin,
                    text: line.to_string(),
                });
            };
            spec.set(key.trim(), value.trim(), origin)?;
        }
        Ok(spec)
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
    }

    /// Sets one field from its text form.
    pub fn set(&mut self, key: &str, value: &str, origin: Origin) -> Result<(), ConfigError> {
        let bad = |message: String| ConfigError::BadValue {
            origin: origin.clone(),
            field: key.to_string(),
            message,
        };
        let number = |v: &str| parse_number(v).ok_or_else(|| bad(format!("not a number: {v:?}")));
        let integer = |v: &str| -> Result<i64, ConfigError> {
            v.parse::<i64>()
                .map_err(|_| bad(format!("not an integer: {v:?}")))
        };
        let key_norm = key.replace('-', "_");
        if let Some(index) = potential_index(key) {
            let c = number(value)?;
            match index {
                -1 => self.v_minus1 = c,
                j if j >= 0 => {
                    let j = j as usize;
                    if self.v.len() <= j {
                        self.v.resize(j + 1, BigRational::from_integer(0.into()));
                    }
                    self.v[j] = c;
                }
                j => return Err(bad(format!("potential index {j} below -1"))),
            }
            return Ok(());
        }
        match key_norm.as_str() {
            "ell" => {
                self.ell =
                    u32::try_from(integer(value)?).map_err(|_| bad("ℓ must be ≥ 0".into()))?
            }
            "mu" => {
                self.mu =
                    i32::try_from(integer(value)?).map_err(|_| bad("μ out of range".into()))?
            }
            "energy" => self.energy = number(value)?,
            "root" => {
                self.root = RootChoice::from_str(value, true)
                    .map_err(|_| bad("expected regular, singular or both".into()))?
            }
            "order" => {
                let n = integer(value)?;
                if n < 1 {
                    return Err(bad("order must be ≥ 1".into()));
                }
                self.order = n as usize;
            }
            "hbar2_over_2m" => self.hbar2_over_2m = number(value)?,
            "mode" => {
                self.mode = Mode::from_str(value, true)
                    .map_err(|_| bad("expected exact or float".into()))?
            }
            "tol" => {
                self.tol = value
                    .parse::<f64>()
                    .ok()
                    .filter(|t| *t > 0.0)
                    .ok_or_else(|| bad(format!("not a positive number: {value:?}")))?
            }
            "verify" => {
                self.verify = match value {
                    "true" | "yes" | "1" => true,
                    "false" | "no" | "0" => false,
                    _ => return Err(bad("expected true or false".into())),
                }
            }
            "s" => self.s = Some(integer(value)?),
            "coeffs" => self.coeffs = list(value).map(number).collect::<Result<_, _>>()?,
            "alpha" => {
                let alpha: Vec<BigRational> = list(value).map(number).collect::<Result<_, _>>()?;
                if alpha
                    .iter()
                    .any(|a| *a <= BigRational::from_integer(0.into()))
                {
                    return Err(bad("widths must be positive".into()));
                }
                self.alpha = alpha;
            }
            _ => {
                return Err(ConfigError::UnknownField {
                    origin,
                    field: key.to_string(),
                })
            }
        }
        Ok(())
    }

    /// Cross-field checks that the core types would otherwise reject later.
    pub fn validate(&self) -> Result<(), ConfigError> {
        AngularLabel::new(self.ell, self.mu).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        if self.hbar2_over_2m <= BigRational::from_integer(0.into()) {
            return Err(ConfigError::Invalid(
                "hbar2_over_2m must be positive".into(),
            ));
        }
        if self.coeffs.is_empty() {
            return Err(ConfigError::Invalid("coeffs must not be empty".into()));
        }
        Ok(())
    }

    pub fn angular(&self) -> AngularLabel {
        AngularLabel::new(self.ell, self.mu).expect("validated")
    }
}

fn list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// `v[j]` → `j`.
fn potential_index(key: &str) -> Option<i64> {
    key.strip_prefix("v[")?
        .strip_suffix(']')?
        .trim()
        .parse()
        .ok()
}
