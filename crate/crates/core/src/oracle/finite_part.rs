//! Hadamard finite part of `∫_0^∞ r^m e^{-α r²} dr`.
//!
//! Convention: cut the integral at `ε`, drop every negative power of `ε` and
//! the `ln ε` term, keep the constant. For `m ≤ -2` one integration by parts,
//! `F(m) = 2α/(m+1)·F(m+2) + b(m, α)`, reduces the order; `b` is the constant
//! term of the boundary contribution `-ε^{m+1} e^{-αε²}/(m+1)`.

use std::f64::consts::PI;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431;

/// `Γ(n/2)` for `n ≥ 1`.
pub fn gamma_half_integer(n: u32) -> f64 {
    assert!(n >= 1, "Γ(n/2) needs n ≥ 1");
    if n.is_multiple_of(2) {
        (1..n / 2).map(f64::from).product()
    } else {
        // Γ(k + 1/2) = (2k-1)!!/2^k · √π
        let k = (n - 1) / 2;
        (0..k).map(|j| (2 * j + 1) as f64 / 2.0).product::<f64>() * PI.sqrt()
    }
}

/// `Fp ∫_0^∞ r^m e^{-α r²} dr`.
pub fn finite_part_integral(m: i64, alpha: f64) -> f64 {
    assert!(alpha > 0.0, "Gaussian width must be positive");
    if m > -1 {
        let n = (m + 1) as u32;
        return 0.5 * alpha.powf(-(m as f64 + 1.0) / 2.0) * gamma_half_integer(n);
    }
    if m == -1 {
        return -(EULER_GAMMA + alpha.ln()) / 2.0;
    }
    2.0 * alpha / (m as f64 + 1.0) * finite_part_integral(m + 2, alpha)
        + boundary_finite_part(m, alpha)
}

/// `b(m, α) = -(-α)^j / ((m+1)·j!)` with `j = (-m-1)/2` for odd `m ≤ -3`, else 0.
fn boundary_finite_part(m: i64, alpha: f64) -> f64 {
    if m % 2 == 0 || m > -3 {
        return 0.0;
    }
    let j = ((-m - 1) / 2) as i32;
    let j_factorial: f64 = (1..=j).map(f64::from).product();
    -(-alpha).powi(j) / ((m as f64 + 1.0) * j_factorial)
}
