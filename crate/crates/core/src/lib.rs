//! Distributional Laplacians of pseudofunctions `Pf.[r^s Σ a_k r^k]·Y_ℓ^μ`.
//!
//! The Laplacian of such a pseudofunction in R³ differs from the termwise
//! (function-sense) Laplacian by a finite sum of iterated deltas. This crate
//! computes that sum exactly, solves the radial Schrödinger equation by
//! Frobenius series, and decides whether a series solution is a solution of
//! the Schrödinger equation in all of R³ or of a delta-sourced variant.
//!
//! The [`oracle`] module re-derives every pairing numerically with
//! Hadamard finite-part integrals and never consults the symbolic engine.

pub mod classify;
pub mod coeffs;
pub mod distlap;
mod error;
pub mod oracle;
pub mod pseudofunction;
pub mod radial;
pub mod scalar;

pub use classify::{
    classify_solution, q_nonvanishing, Candidate, Citation, OriginValue, Verdict, VerdictKind,
};
pub use coeffs::{chi, coeff_b, coeff_bc, coeff_c, coeff_l};
pub use distlap::{
    delta_source, function_laplacian, hamiltonian_apply, laplacian, laplacian_power,
    laplacian_power_real, q_s, q_sl, radial_operator, PhysicalUnits, PotentialModel, RadialExpr,
    RealPowerLaplacian, ResidualPolicy,
};
pub use error::{Error, Result};
pub use pseudofunction::{
    AngularLabel, DeltaSum, DeltaTerm, DistributionExpr, Prefactor, PseudoFunction, RadialSeries,
};
pub use radial::{
    frobenius, indicial_roots, normalizable_at_origin, FrobeniusResult, Resonance, Root,
};
pub use scalar::{parse_rational, DeltaWeight, ExactScalar, Scalar};

pub use num_rational::BigRational;
