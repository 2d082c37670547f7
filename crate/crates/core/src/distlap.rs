//! Distributional Laplacian of pseudofunctions and the Hamiltonian built on it.
//!
//! For `Pf.Ψ = Pf.[r^s Σ a_k r^k]·Y_ℓ^μ`,
//!
//! ```text
//! ΔPf.Ψ = Pf.ΔΨ + Q_{s,ℓ}(δ)
//! Q_{s,ℓ}(δ) = Σ_{k=0}^{-s-1} a_k χ_{p(k)} B_{ℓ,p(k)} C_{p(k)} r^ℓ Y_ℓ^μ Δ^{p(k)} δ,
//! p(k) = -(k + s + 1 - ℓ)/2
//! ```
//!
//! where `Pf.ΔΨ` is the Laplacian taken away from the origin. The purely radial
//! operator `(1/r)(d²/dr²)r` obeys the same rule with `Q_s(δ)` (no angular factor).
//!
//! Coefficients past a series' truncation are treated as zero.

use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

use crate::coeffs::{as_natural, chi, coeff_bc, coeff_c, delta_order};
use crate::error::{Error, Result};
use crate::pseudofunction::{
    AngularLabel, DeltaSum, DeltaTerm, DistributionExpr, Prefactor, PseudoFunction, RadialSeries,
};
use crate::radial::radial_residual;
use crate::scalar::Scalar;

/// `V(r) = v_{-1}/r + Σ_{j≥0} v_j r^j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct PotentialModel<T: Scalar> {
    #[serde(with = "crate::scalar::wire")]
    pub v_minus1: T,
    #[serde(with = "crate::scalar::wire_vec")]
    pub v: Vec<T>,
}

impl<T: Scalar> PotentialModel<T> {
    pub fn new(v_minus1: T, v: Vec<T>) -> Self {
        Self { v_minus1, v }
    }

    pub fn free() -> Self {
        Self::new(T::zero(), Vec::new())
    }

    /// `c/r`.
    pub fn coulomb(c: T) -> Self {
        Self::new(c, Vec::new())
    }

    /// `v_j`, zero past the stored polynomial.
    pub fn poly(&self, j: usize) -> T {
        self.v.get(j).cloned().unwrap_or_else(T::zero)
    }

    pub fn scaled(&self, by: &T) -> Self {
        Self {
            v_minus1: self.v_minus1.clone() * by.clone(),
            v: self.v.iter().map(|x| x.clone() * by.clone()).collect(),
        }
    }
}

/// Scale of the kinetic term, `ħ²/2m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct PhysicalUnits<T: Scalar> {
    #[serde(with = "crate::scalar::wire")]
    hbar2_over_2m: T,
}

impl<T: Scalar> PhysicalUnits<T> {
    pub fn new(hbar2_over_2m: T) -> Result<Self> {
        if hbar2_over_2m <= T::zero() {
            return Err(Error::NonPositiveUnits);
        }
        Ok(Self { hbar2_over_2m })
    }

    pub fn hbar2_over_2m(&self) -> &T {
        &self.hbar2_over_2m
    }

    /// `ħ²/m`.
    pub fn hbar2_over_m(&self) -> T {
        self.hbar2_over_2m.clone() + self.hbar2_over_2m.clone()
    }
}

impl<T: Scalar> Default for PhysicalUnits<T> {
    fn default() -> Self {
        Self {
            hbar2_over_2m: T::one(),
        }
    }
}

/// `m(m+1) - ℓ(ℓ+1)`: `Δ(r^m Y_ℓ^μ) = [m(m+1) - ℓ(ℓ+1)] r^{m-2} Y_ℓ^μ` away from the origin.
pub(crate) fn radial_eigen_factor(m: i64, l_squared: i64) -> i64 {
    m * (m + 1) - l_squared
}

/// Termwise Laplacian of `r^s Σ a_k r^k · Y_ℓ` away from the origin. Output
/// exponent is shifted by `-2`.
pub fn function_laplacian<T: Scalar>(series: &RadialSeries<T>, ell: u32) -> RadialSeries<T> {
    let l_squared = i64::from(ell) * (i64::from(ell) + 1);
    let coeffs = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let m = series.s() + k as i64;
            a.clone() * T::from_i64(radial_eigen_factor(m, l_squared))
        })
        .collect();
    RadialSeries::normalized(series.s() - 2, coeffs)
}

/// `ΔPf.(r^s Y_ℓ^μ)`.
///
/// The delta term, when present, carries the solid harmonic `r^ℓ Y_ℓ^μ`
/// unfolded, so for `ℓ = 0` its coefficient is the bare `C_p`.
pub fn laplacian_power<T: Scalar>(s: i64, angular: AngularLabel) -> DistributionExpr<T> {
    let factor = radial_eigen_factor(s, angular.l_squared());
    let pf_part = PseudoFunction::new(RadialSeries::monomial(s - 2, T::from_i64(factor)), angular);
    let mut delta_part = DeltaSum::new();
    if let Some(p) = as_natural(&delta_order(s, 0, angular.ell())) {
        delta_part.add_term(
            T::one().weight(&coeff_bc(angular.ell(), p)),
            Prefactor::SolidHarmonic(angular),
            p,
        );
    }
    DistributionExpr {
        pf_part,
        delta_part,
    }
}

/// `ΔPf.(r^s Y_ℓ)` for a real exponent, in float mode.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPowerLaplacian {
    pub pf_coefficient: f64,
    pub pf_exponent: f64,
    pub delta: Option<DeltaTerm<f64>>,
}

/// Float-mode counterpart of [`laplacian_power`] accepting non-integer `s`.
/// The delta part is empty unless `s` is an integer meeting the usual conditions.
pub fn laplacian_power_real(s: f64, angular: AngularLabel) -> RealPowerLaplacian {
    let l_squared = angular.l_squared() as f64;
    let delta = if s.fract() == 0.0 && s.abs() < 1e15 {
        laplacian_power::<f64>(s as i64, angular)
            .delta_part
            .terms()
            .first()
            .cloned()
    } else {
        None
    };
    RealPowerLaplacian {
        pf_coefficient: s * (s + 1.0) - l_squared,
        pf_exponent: s - 2.0,
        delta,
    }
}

/// `Q_s(δ) = Σ_{k=0}^{-s-1} a_k χ_{p(k)} C_{p(k)} Δ^{p(k)} δ`, `p(k) = -(k+s+1)/2`.
/// Empty for `s ≥ 0`.
pub fn q_s<T: Scalar>(series: &RadialSeries<T>) -> DeltaSum<T::Weight> {
    let mut sum = DeltaSum::new();
    let s = series.s();
    if s >= 0 {
        return sum;
    }
    let last = ((-s - 1) as usize).min(series.order());
    for k in 0..=last {
        let a = &series.coeffs()[k];
        if a.is_zero() {
            continue;
        }
        if let Some(p) = as_natural(&delta_order(s, k as i64, 0)) {
            sum.add_term(a.weight(&coeff_c(p)), Prefactor::Unit, p);
        }
    }
    sum
}

/// `Q_{s,ℓ}(δ)` with solid-harmonic prefactors, unfolded (for `ℓ = 0` it
/// coincides with [`q_s`] coefficient by coefficient).
pub fn q_sl<T: Scalar>(pf: &PseudoFunction<T>) -> DeltaSum<T::Weight> {
    let mut sum = DeltaSum::new();
    let series = &pf.radial;
    let s = series.s();
    let ell = pf.angular.ell();
    if s >= 0 {
        return sum;
    }
    // k ≤ -s-1 is exactly the condition 2p ≥ ℓ.
    let last = ((-s - 1) as usize).min(series.order());
    for k in 0..=last {
        let a = &series.coeffs()[k];
        if a.is_zero() {
            continue;
        }
        let p = delta_order(s, k as i64, ell);
        if chi(&p) == 0 {
            continue;
        }
        let p = as_natural(&p).expect("chi = 1 implies a natural order");
        sum.add_term(
            a.weight(&coeff_bc(ell, p)),
            Prefactor::SolidHarmonic(pf.angular),
            p,
        );
    }
    sum
}

/// `ΔPf.Ψ = Pf.ΔΨ + Q_{s,ℓ}(δ)`.
///
/// `ℓ = 0` delta terms are reported with `Y_0^0 = 1/√(4π)` folded into the
/// coefficient (unit prefactor).
pub fn laplacian<T: Scalar>(pf: &PseudoFunction<T>) -> DistributionExpr<T> {
    DistributionExpr {
        pf_part: PseudoFunction::new(function_laplacian(&pf.radial, pf.angular.ell()), pf.angular),
        delta_part: q_sl(pf).fold_s_wave(),
    }
}

/// Purely radial distribution: `Pf`-series without angular factor plus delta terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct RadialExpr<T: Scalar> {
    pub pf_part: RadialSeries<T>,
    pub delta_part: DeltaSum<T::Weight>,
}

impl<T: Scalar> Display for RadialExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pf.[{}] + [{}]", self.pf_part, self.delta_part)
    }
}

/// `(1/r)(d²/dr²)r` applied distributionally: `Pf.[(1/r)(rR)''] + Q_s(δ)`.
///
/// For `R = u/r` with `u(0) = a_0` the delta part is `-4π a_0 δ`.
pub fn radial_operator<T: Scalar>(series: &RadialSeries<T>) -> RadialExpr<T> {
    RadialExpr {
        pf_part: function_laplacian(series, 0),
        delta_part: q_s(series),
    }
}

/// How [`hamiltonian_apply`] treats a series that fails the radial equation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResidualPolicy {
    /// Carry the residual series into the `Pf` part.
    #[default]
    Lenient,
    /// Fail with [`Error::NotRadialSolution`].
    Strict,
}

/// `H Pf.Ψ = E·Pf.Ψ - (ħ²/2m)·Q_{s,ℓ}(δ)` for `Pf.Ψ` solving the radial
/// equation away from the origin.
///
/// The residual of the radial equation is checked through the truncation
/// order; a nonzero residual is either added to the `Pf` part or rejected,
/// depending on `policy`.
pub fn hamiltonian_apply<T: Scalar>(
    pf: &PseudoFunction<T>,
    potential: &PotentialModel<T>,
    energy: &T,
    units: &PhysicalUnits<T>,
    policy: ResidualPolicy,
) -> Result<DistributionExpr<T>> {
    let residual = radial_residual(&pf.radial, pf.angular.ell(), potential, energy, units);
    let eigen_part = pf.radial.scale(energy);
    let radial = match residual.iter().position(|r| !r.is_zero()) {
        None => eigen_part,
        Some(order) => match policy {
            ResidualPolicy::Strict => return Err(Error::NotRadialSolution { order }),
            ResidualPolicy::Lenient => {
                let residual = RadialSeries::normalized(pf.radial.s() - 2, residual);
                eigen_part.add(&residual)
            }
        },
    };
    let delta_part = delta_source(&q_sl(pf), units);
    Ok(DistributionExpr {
        pf_part: PseudoFunction::new(radial, pf.angular),
        delta_part,
    })
}

/// `-(ħ²/2m)·Q`, with `ℓ = 0` terms folded.
pub fn delta_source<T: Scalar>(
    q: &DeltaSum<T::Weight>,
    units: &PhysicalUnits<T>,
) -> DeltaSum<T::Weight> {
    let minus_kappa = -units.hbar2_over_2m().clone();
    q.map_coefficients(|w| T::scale_weight(w, &minus_kappa))
        .fold_s_wave()
}
