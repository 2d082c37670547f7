//! Universal coefficients of the distributional Laplacian of `Pf.r^s`.
//!
//! `ΔPf.r^s = s(s+1)·Pf.r^{s-2} + χ_p·C_p·Δ^p δ` with `p = -(s+1)/2`.
//! With an angular factor the delta coefficient picks up `B_{ℓ,p}`, where
//! `B_{ℓ,p}·C_p = C_p + 2ℓ·L_p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(2n+1)!! = 1·3·5···(2n+1)`.
fn odd_double_factorial(n: u64) -> BigInt {
    (0..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * k + 1))
}

/// Rational part of `C_p`, which is always a rational multiple of `π`:
/// `C_p = -(4p+1)·2^{2-p}·π / (p!·(2p+1)!!)`.
pub fn coeff_c_rational(p: u64) -> BigRational {
    let numer = -BigInt::from(4 * p + 1);
    let denom = factorial(p) * odd_double_factorial(p);
    let q = BigRational::new(numer, denom);
    // 2^{2-p}
    if p <= 2 {
        q * BigRational::from_integer(BigInt::one() << (2 - p) as usize)
    } else {
        q / BigRational::from_integer(BigInt::one() << (p - 2) as usize)
    }
}

/// `C_p`, the coefficient of `Δ^p δ` in `ΔPf.r^{-(2p+1)}`.
pub fn coeff_c(p: u64) -> ExactScalar {
    ExactScalar::pi_multiple(coeff_c_rational(p))
}

/// `L_p = C_{p-1}/(8p(2p+1)) - C_p/4`.
///
/// At `p = 0` the first term is dropped (`C_{-1} = 0`), so `L_0 = -C_0/4 = π`.
pub fn coeff_l(p: u64) -> ExactScalar {
    let quarter = BigRational::new(BigInt::from(-1), BigInt::from(4));
    let tail = coeff_c_rational(p) * quarter;
    let q = if p == 0 {
        tail
    } else {
        let d = BigInt::from(8 * p * (2 * p + 1));
        coeff_c_rational(p - 1) / BigRational::from_integer(d) + tail
    };
    ExactScalar::pi_multiple(q)
}

/// `B_{ℓ,p} = 1 - 2ℓ/(4p+1)`. Never zero for integer `ℓ, p ≥ 0`.
pub fn coeff_b(ell: u32, p: u64) -> BigRational {
    BigRational::one() - BigRational::new(BigInt::from(2 * u64::from(ell)), BigInt::from(4 * p + 1))
}

/// `B_{ℓ,p}·C_p` as an exact scalar.
pub fn coeff_bc(ell: u32, p: u64) -> ExactScalar {
    ExactScalar::pi_multiple(coeff_b(ell, p) * coeff_c_rational(p))
}

/// Indicator of the non-negative integers: 1 iff `x ∈ {0, 1, 2, ...}`.
pub fn chi(x: &BigRational) -> u8 {
    u8::from(x.is_integer() && !x.is_negative())
}

/// `p` as a natural number when `chi(p) == 1`.
pub(crate) fn as_natural(x: &BigRational) -> Option<u64> {
    if chi(x) == 1 {
        u64::try_from(x.to_integer()).ok()
    } else {
        None
    }
}

/// Exact order `p = -(k + s + 1 - ℓ)/2` of the delta term produced by `r^{s+k}·Y_ℓ^μ`.
pub(crate) fn delta_order(s: i64, k: i64, ell: u32) -> BigRational {
    BigRational::new(BigInt::from(-(k + s + 1 - i64::from(ell))), BigInt::from(2))
}

/// `true` iff `B_{ℓ,p}` vanishes, which only happens for non-natural `p`.
pub fn b_vanishes(ell: u32, p: u64) -> bool {
    coeff_b(ell, p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    /// `Γ(p + 3/2)` as a rational multiple of `√π`, by the recurrence
    /// `Γ(x+1) = x·Γ(x)` from `Γ(1/2) = √π`.
    fn gamma_p_three_halves_over_sqrt_pi(p: u64) -> BigRational {
        let mut g = BigRational::one();
        let mut x = ratio(1, 2);
        for _ in 0..=p {
            g *= x.clone();
            x += BigRational::one();
        }
        g
    }

    /// Closed form as written with the Gamma function:
    /// `-(4p+1)·π^{3/2} / (2^{2p-1}·p!·Γ(p+3/2))`.
    fn c_from_gamma(p: u64) -> ExactScalar {
        let two_pow = if p == 0 {
            ratio(1, 2)
        } else {
            BigRational::from_integer(BigInt::one() << (2 * p - 1) as usize)
        };
        let denom = two_pow
            * BigRational::from_integer(factorial(p))
            * gamma_p_three_halves_over_sqrt_pi(p);
        // π^{3/2} / √π = π
        ExactScalar::pi_multiple(-BigRational::from_integer(BigInt::from(4 * p + 1)) / denom)
    }

    #[test]
    fn c_values() {
        assert_eq!(coeff_c(0), ExactScalar::pi_multiple(ratio(-4, 1)));
        assert_eq!(coeff_c(1), ExactScalar::pi_multiple(ratio(-10, 3)));
        assert_eq!(coeff_c(2), ExactScalar::pi_multiple(ratio(-3, 10)));
    }

    #[test]
    fn c_matches_gamma_form_up_to_fifty() {
        for p in 0..=50 {
            let c = coeff_c(p);
            assert_eq!(c.term_count(), 1);
            assert_eq!(c.as_single_term().unwrap().0, 2);
            assert_eq!(c, c_from_gamma(p), "p = {p}");
        }
    }

    #[test]
    fn l_values() {
        assert_eq!(coeff_l(0), ExactScalar::pi_multiple(ratio(1, 1)));
        assert_eq!(coeff_l(1), ExactScalar::pi_multiple(ratio(2, 3)));
    }

    #[test]
    fn l_reduces_to_scaled_c() {
        for p in 1..=25u64 {
            let expected = coeff_c(p).scale(&ratio(-1, 4 * p as i64 + 1));
            assert_eq!(coeff_l(p), expected, "p = {p}");
        }
    }

    #[test]
    fn b_values() {
        for p in 0..10 {
            assert_eq!(coeff_b(0, p), BigRational::one());
        }
        assert_eq!(coeff_b(1, 1), ratio(3, 5));
        assert_eq!(coeff_b(2, 1), ratio(1, 5));
    }

    #[test]
    fn b_never_vanishes_on_naturals() {
        for ell in 0..=20 {
            for p in 0..=20 {
                assert!(!b_vanishes(ell, p));
            }
        }
    }

    #[test]
    fn bc_is_c_plus_two_ell_l() {
        for ell in 0..=8u32 {
            for p in 0..=8u64 {
                let via_l = &coeff_c(p)
                    + &coeff_l(p).scale(&BigRational::from_integer(BigInt::from(2 * ell)));
                // p = 0 pairs only with ell = 0 in any stored term; L_0 is conventional.
                if p > 0 || ell == 0 {
                    assert_eq!(coeff_bc(ell, p), via_l, "ell = {ell}, p = {p}");
                }
            }
        }
    }

    #[test]
    fn chi_cases() {
        assert_eq!(chi(&ratio(0, 1)), 1);
        assert_eq!(chi(&ratio(3, 1)), 1);
        assert_eq!(chi(&ratio(1, 2)), 0);
        assert_eq!(chi(&ratio(-1, 1)), 0);
        assert_eq!(as_natural(&ratio(4, 2)), Some(2));
    }
}
