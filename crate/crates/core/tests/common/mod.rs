#![allow(dead_code)]

use distpf_core::oracle::{Polynomial, TestFunction};
use distpf_core::{AngularLabel, BigRational, RadialSeries};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    q(n, 1)
}

/// Nonzero small rational.
pub fn nonzero(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let n = rng.gen_range(-9..=9);
        if n != 0 {
            return q(n, rng.gen_range(1..=5));
        }
    }
}

/// Small rational, zero with probability `zero_prob`.
pub fn sparse(rng: &mut ChaCha8Rng, zero_prob: f64) -> BigRational {
    if rng.gen_bool(zero_prob) {
        int(0)
    } else {
        nonzero(rng)
    }
}

/// `r^s Σ a_k r^k` with `a_0 ≠ 0` and `len` coefficients.
pub fn series(
    rng: &mut ChaCha8Rng,
    s: i64,
    len: usize,
    zero_prob: f64,
) -> RadialSeries<BigRational> {
    let mut coeffs = vec![nonzero(rng)];
    coeffs.extend((1..len).map(|_| sparse(rng, zero_prob)));
    RadialSeries::new(s, coeffs).unwrap()
}

/// Small-integer coefficients, as in the oracle grid.
pub fn int_series(rng: &mut ChaCha8Rng, s: i64, len: usize) -> RadialSeries<BigRational> {
    let mut coeffs = Vec::with_capacity(len);
    loop {
        let a = rng.gen_range(-3..=3);
        if a != 0 {
            coeffs.push(int(a));
            break;
        }
    }
    coeffs.extend((1..len).map(|_| int(rng.gen_range(-3..=3))));
    RadialSeries::new(s, coeffs).unwrap()
}

pub fn label(rng: &mut ChaCha8Rng, ell: u32) -> AngularLabel {
    let l = ell as i32;
    AngularLabel::new(ell, rng.gen_range(-l..=l)).unwrap()
}

/// Random polynomial of total degree `≤ max_degree` with small integer coefficients.
pub fn polynomial(rng: &mut ChaCha8Rng, max_degree: u32) -> Polynomial {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let a = rng.gen_range(0..=max_degree);
        let b = rng.gen_range(0..=max_degree - a);
        let c = rng.gen_range(0..=max_degree - a - b);
        terms.push(([a, b, c], rng.gen_range(-3..=3)));
    }
    terms.push(([0, 0, 0], rng.gen_range(1..=3)));
    Polynomial::from_int_terms(&terms)
}

pub fn test_function(rng: &mut ChaCha8Rng, max_degree: u32, alpha: BigRational) -> TestFunction {
    TestFunction::new(polynomial(rng, max_degree), alpha).unwrap()
}
