//! Real solid harmonics `r^ℓ Y_ℓ^μ` for `ℓ ≤ 4`, unit-normalized on the sphere.
//!
//! Each entry is `√(K/π) · P(x, y, z)` with `P` an integer homogeneous harmonic
//! polynomial of degree `ℓ` and `K` rational. `μ > 0` are the cosine-type
//! harmonics (`x`-like), `μ < 0` the sine-type (`y`-like).

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::testfn::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::pseudofunction::AngularLabel;
use crate::scalar::ratio;

pub const MAX_ELL: u32 = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct SolidHarmonic {
    /// `K` in the prefactor `√(K/π)`.
    pub norm_sq_times_pi: BigRational,
    pub poly: Polynomial,
}

impl SolidHarmonic {
    /// `√(K/π)`.
    pub fn norm(&self) -> f64 {
        (self.norm_sq_times_pi.to_f64().unwrap_or(f64::NAN) / std::f64::consts::PI).sqrt()
    }
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

fn mono(x: u32, y: u32, z: u32) -> Monomial {
    let mut m = [0; 3];
    m[X] = x;
    m[Y] = y;
    m[Z] = z;
    m
}

fn entry(k: (i64, i64), terms: &[((u32, u32, u32), i64)]) -> SolidHarmonic {
    let terms: Vec<(Monomial, i64)> = terms
        .iter()
        .map(|&((a, b, c), coef)| (mono(a, b, c), coef))
        .collect();
    SolidHarmonic {
        norm_sq_times_pi: ratio(k.0, k.1),
        poly: Polynomial::from_int_terms(&terms),
    }
}

/// Table lookup. Fails with [`Error::UnsupportedEll`] for `ℓ > 4`.
pub fn solid_harmonic(label: AngularLabel) -> Result<SolidHarmonic> {
    let h = match (label.ell(), label.mu()) {
        (0, 0) => entry((1, 4), &[((0, 0, 0), 1)]),

        (1, -1) => entry((3, 4), &[((0, 1, 0), 1)]),
        (1, 0) => entry((3, 4), &[((0, 0, 1), 1)]),
        (1, 1) => entry((3, 4), &[((1, 0, 0), 1)]),

        (2, -2) => entry((15, 4), &[((1, 1, 0), 1)]),
        (2, -1) => entry((15, 4), &[((0, 1, 1), 1)]),
        (2, 0) => entry((5, 16), &[((0, 0, 2), 2), ((2, 0, 0), -1), ((0, 2, 0), -1)]),
        (2, 1) => entry((15, 4), &[((1, 0, 1), 1)]),
        (2, 2) => entry((15, 16), &[((2, 0, 0), 1), ((0, 2, 0), -1)]),

        (3, -3) => entry((35, 32), &[((2, 1, 0), 3), ((0, 3, 0), -1)]),
        (3, -2) => entry((105, 4), &[((1, 1, 1), 1)]),
        (3, -1) => entry(
            (21, 32),
            &[((0, 1, 2), 4), ((2, 1, 0), -1), ((0, 3, 0), -1)],
        ),
        (3, 0) => entry((7, 16), &[((0, 0, 3), 2), ((2, 0, 1), -3), ((0, 2, 1), -3)]),
        (3, 1) => entry(
            (21, 32),
            &[((1, 0, 2), 4), ((3, 0, 0), -1), ((1, 2, 0), -1)],
        ),
        (3, 2) => entry((105, 16), &[((2, 0, 1), 1), ((0, 2, 1), -1)]),
        (3, 3) => entry((35, 32), &[((3, 0, 0), 1), ((1, 2, 0), -3)]),

        (4, -4) => entry((315, 16), &[((3, 1, 0), 1), ((1, 3, 0), -1)]),
        (4, -3) => entry((315, 32), &[((2, 1, 1), 3), ((0, 3, 1), -1)]),
        (4, -2) => entry(
            (45, 16),
            &[((1, 1, 2), 6), ((3, 1, 0), -1), ((1, 3, 0), -1)],
        ),
        (4, -1) => entry(
            (45, 32),
            &[((0, 1, 3), 4), ((2, 1, 1), -3), ((0, 3, 1), -3)],
        ),
        // 35z⁴ - 30z²r² + 3r⁴
        (4, 0) => entry(
            (9, 256),
            &[
                ((0, 0, 4), 8),
                ((2, 0, 2), -24),
                ((0, 2, 2), -24),
                ((4, 0, 0), 3),
                ((0, 4, 0), 3),
                ((2, 2, 0), 6),
            ],
        ),
        (4, 1) => entry(
            (45, 32),
            &[((1, 0, 3), 4), ((3, 0, 1), -3), ((1, 2, 1), -3)],
        ),
        // (x² - y²)(6z² - x² - y²)
        (4, 2) => entry(
            (45, 64),
            &[
                ((2, 0, 2), 6),
                ((0, 2, 2), -6),
                ((4, 0, 0), -1),
                ((0, 4, 0), 1),
            ],
        ),
        (4, 3) => entry((315, 32), &[((3, 0, 1), 1), ((1, 2, 1), -3)]),
        (4, 4) => entry(
            (315, 256),
            &[((4, 0, 0), 1), ((2, 2, 0), -6), ((0, 4, 0), 1)],
        ),
        (ell, _) => return Err(Error::UnsupportedEll(ell)),
    };
    Ok(h)
}
