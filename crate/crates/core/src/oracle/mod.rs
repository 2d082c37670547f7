//! Independent numerical check of the symbolic engine.
//!
//! Pseudofunctions and delta sums are paired against polynomial-Gaussian test
//! functions. Angular integrals are exact sphere moments; radial integrals are
//! Hadamard finite parts in closed form. Nothing here calls into the symbolic
//! Laplacian except [`verify_laplacian_identity`], which compares it against
//! `⟨Pf.f, Δφ⟩`.

mod finite_part;
mod harmonics;
mod pairing;
mod testfn;

pub use finite_part::{finite_part_integral, gamma_half_integer, EULER_GAMMA};
pub use harmonics::{solid_harmonic, SolidHarmonic, MAX_ELL};
pub use pairing::{
    pair_delta, pair_delta_sum, pair_distribution, pair_pseudofunction, pair_radial,
    pair_radial_expr, verify_laplacian_identity, verify_radial_identity,
};
pub use testfn::{Monomial, Polynomial, TestFunction};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::scalar::ExactScalar;

/// `(n-1)!!` for even `n ≥ 0`, i.e. `1·3···(n-1)`.
fn odd_double_factorial_below(n: u32) -> BigInt {
    (1..n)
        .step_by(2)
        .fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `∫_{S²} (x/r)^a (y/r)^b (z/r)^c dΩ`.
///
/// `4π·(a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!!` when all exponents are even, else 0.
pub fn angular_moment(a: u32, b: u32, c: u32) -> ExactScalar {
    if a % 2 == 1 || b % 2 == 1 || c % 2 == 1 {
        return ExactScalar::zero();
    }
    let numer = odd_double_factorial_below(a)
        * odd_double_factorial_below(b)
        * odd_double_factorial_below(c);
    let denom = odd_double_factorial_below(a + b + c + 2);
    ExactScalar::pi_multiple(BigRational::new(numer * BigInt::from(4), denom))
}
