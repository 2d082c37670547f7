//! Pairings `⟨T, φ⟩` of pseudofunctions and delta sums with test functions.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::angular_moment;
use super::finite_part::finite_part_integral;
use super::harmonics::solid_harmonic;
use super::testfn::{Polynomial, TestFunction};
use crate::distlap::{laplacian, radial_operator, RadialExpr};
use crate::error::Result;
use crate::pseudofunction::{
    DeltaSum, DeltaTerm, DistributionExpr, Prefactor, PseudoFunction, RadialSeries,
};
use crate::scalar::{DeltaWeight, Scalar};

/// `Σ_{deg D} r^D` weights: for each total degree `D` of `poly`, the exact
/// rational `M_D` with `∫_{S²} poly(x̂)|_D dΩ = M_D·π`.
fn degree_moments(poly: &Polynomial) -> BTreeMap<u32, BigRational> {
    let mut out: BTreeMap<u32, BigRational> = BTreeMap::new();
    for (m, c) in poly.terms() {
        let moment = angular_moment(m[0], m[1], m[2]).coefficient(2);
        if moment.is_zero() {
            continue;
        }
        *out.entry(m[0] + m[1] + m[2])
            .or_insert_with(BigRational::zero) += c * moment;
    }
    out
}

/// `⟨Pf.[r^{s-shift} Σ a_k r^k]·norm·A(x), φ⟩` where `A` is homogeneous of degree `shift`.
fn pair_series<T: Scalar>(
    series: &RadialSeries<T>,
    angular_poly: &Polynomial,
    shift: i64,
    norm: f64,
    phi: &TestFunction,
) -> f64 {
    let alpha = Scalar::to_f64(phi.alpha());
    let moments = degree_moments(&(angular_poly * phi.poly()));
    let mut total = 0.0;
    for (k, a) in series.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let base = series.s() + k as i64 - shift;
        let radial: f64 = moments
            .iter()
            .map(|(d, m)| {
                // r² from the volume element.
                Scalar::to_f64(m) * finite_part_integral(base + i64::from(*d) + 2, alpha)
            })
            .sum();
        total += a.to_f64() * radial;
    }
    total * norm * std::f64::consts::PI
}

/// `⟨Pf.[R(r)·Y_ℓ^μ], φ⟩` with finite-part radial integrals.
///
/// Uses the stored coefficients as a finite sum. Fails for `ℓ > 4`.
pub fn pair_pseudofunction<T: Scalar>(pf: &PseudoFunction<T>, phi: &TestFunction) -> Result<f64> {
    let h = solid_harmonic(pf.angular)?;
    Ok(pair_series(
        &pf.radial,
        &h.poly,
        i64::from(pf.angular.ell()),
        h.norm(),
        phi,
    ))
}

/// `⟨Pf.R(r), φ⟩` for a purely radial series (no angular factor).
pub fn pair_radial<T: Scalar>(series: &RadialSeries<T>, phi: &TestFunction) -> f64 {
    pair_series(series, &Polynomial::one(), 0, 1.0, phi)
}

/// `⟨c·prefactor·Δ^p δ, φ⟩ = c·[Δ^p(prefactor·φ)](0)`, computed exactly in the
/// polynomial-Gaussian algebra before the final conversion to `f64`.
pub fn pair_delta<W: DeltaWeight>(term: &DeltaTerm<W>, phi: &TestFunction) -> Result<f64> {
    let (norm, shaped) = match term.prefactor() {
        Prefactor::Unit => (1.0, phi.clone()),
        Prefactor::SolidHarmonic(label) => {
            let h = solid_harmonic(label)?;
            (h.norm(), phi.times_poly(&h.poly))
        }
    };
    let value = shaped.laplacian_pow(term.p()).value_at_origin();
    Ok(term.coefficient().to_f64() * norm * Scalar::to_f64(&value))
}

pub fn pair_delta_sum<W: DeltaWeight>(sum: &DeltaSum<W>, phi: &TestFunction) -> Result<f64> {
    sum.terms().iter().map(|t| pair_delta(t, phi)).sum()
}

pub fn pair_distribution<T: Scalar>(expr: &DistributionExpr<T>, phi: &TestFunction) -> Result<f64> {
    Ok(pair_pseudofunction(&expr.pf_part, phi)? + pair_delta_sum(&expr.delta_part, phi)?)
}

pub fn pair_radial_expr<T: Scalar>(expr: &RadialExpr<T>, phi: &TestFunction) -> Result<f64> {
    Ok(pair_radial(&expr.pf_part, phi) + pair_delta_sum(&expr.delta_part, phi)?)
}

/// `|⟨Pf.f, Δφ⟩ - ⟨ΔPf.f, φ⟩|` with the right side taken from the symbolic
/// Laplacian.
pub fn verify_laplacian_identity<T: Scalar>(
    pf: &PseudoFunction<T>,
    phi: &TestFunction,
) -> Result<f64> {
    let lhs = pair_pseudofunction(pf, &phi.laplacian())?;
    let rhs = pair_distribution(&laplacian(pf), phi)?;
    Ok((lhs - rhs).abs())
}

/// Same check for the radial operator `(1/r)(d²/dr²)r` on a purely radial series.
pub fn verify_radial_identity<T: Scalar>(
    series: &RadialSeries<T>,
    phi: &TestFunction,
) -> Result<f64> {
    let lhs = pair_radial(series, &phi.laplacian());
    let rhs = pair_radial_expr(&radial_operator(series), phi)?;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::EULER_GAMMA;
    use crate::pseudofunction::AngularLabel;
    use crate::scalar::{ratio, ExactScalar};
    use std::f64::consts::PI;

    fn series(s: i64, coeffs: &[i64]) -> RadialSeries<BigRational> {
        RadialSeries::new(s, coeffs.iter().map(|&c| ratio(c, 1)).collect()).unwrap()
    }

    fn gauss() -> TestFunction {
        TestFunction::gaussian(ratio(1, 1)).unwrap()
    }

    #[test]
    fn radial_pairings() {
        assert!((pair_radial(&series(-1, &[1]), &gauss()) - 2.0 * PI).abs() < 1e-13);
        let expected = 4.0 * PI * 0.375 * PI.sqrt();
        assert!((pair_radial(&series(2, &[1]), &gauss()) - expected).abs() < 1e-13);
        assert!((pair_radial(&series(-3, &[1]), &gauss()) + 2.0 * PI * EULER_GAMMA).abs() < 1e-13);
    }

    #[test]
    fn delta_pairings() {
        let d = DeltaTerm::new(ExactScalar::one(), Prefactor::Unit, 0).unwrap();
        assert_eq!(pair_delta(&d, &gauss()).unwrap(), 1.0);
        let dd = DeltaTerm::new(ExactScalar::one(), Prefactor::Unit, 1).unwrap();
        assert_eq!(pair_delta(&dd, &gauss()).unwrap(), -6.0);
    }

    #[test]
    fn inverse_r_cubed_calibration() {
        let r = series(-3, &[1]);
        let phi = gauss();
        let lhs = pair_radial(&r, &phi.laplacian());
        let target = 8.0 * PI + 12.0 * PI * EULER_GAMMA;
        assert!((lhs - target).abs() < 1e-12);
        let rhs = pair_radial_expr(&radial_operator(&r), &phi).unwrap();
        assert!((rhs - target).abs() < 1e-12);
        assert!(verify_radial_identity(&r, &phi).unwrap() < 1e-12);
    }

    #[test]
    fn harmonic_polynomial_pairs_to_zero_laplacian() {
        let label = AngularLabel::new(3, -2).unwrap();
        let pf = PseudoFunction::new(series(3, &[1]), label);
        let phi = TestFunction::new(
            Polynomial::from_int_terms(&[([1, 1, 1], 2), ([0, 0, 0], 1)]),
            ratio(1, 2),
        )
        .unwrap();
        assert!(pair_pseudofunction(&pf, &phi.laplacian()).unwrap().abs() < 1e-12);
        assert!(verify_laplacian_identity(&pf, &phi).unwrap() < 1e-12);
    }

    #[test]
    fn unsupported_ell_propagates() {
        let pf = PseudoFunction::new(series(-1, &[1]), AngularLabel::new(5, 0).unwrap());
        assert!(verify_laplacian_identity(&pf, &gauss()).is_err());
    }
}
