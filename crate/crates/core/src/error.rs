use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient a_0 is zero in a nonzero series")]
    ZeroLeadingCoefficient,

    #[error("invalid angular label: |mu| = {mu} exceeds ell = {ell}")]
    InvalidAngularLabel { ell: u32, mu: i32 },

    #[error("truncation order must be at least 1, got {0}")]
    InvalidOrder(usize),

    #[error("exponent {root} is not an indicial root for ell = {ell}")]
    NotIndicialRoot { ell: u32, root: i64 },

    #[error("no power-series solution: resonance at order {0} with nonzero right-hand side (logarithmic branch required)")]
    LogObstruction(usize),

    #[error("series does not satisfy the radial equation: residual at order {order} is nonzero")]
    NotRadialSolution { order: usize },

    #[error("angular momentum ell = {0} is outside the solid-harmonic table (ell <= 4)")]
    UnsupportedEll(u32),

    #[error("Gaussian width must be positive")]
    NonPositiveWidth,

    #[error("physical scale hbar^2/2m must be positive")]
    NonPositiveUnits,

    #[error("operation requires exact mode")]
    ExactModeRequired,
}

pub type Result<T> = std::result::Result<T, Error>;
