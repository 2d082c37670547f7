//! Fixed workloads shared by the benches.

use distpf_core::oracle::{Polynomial, TestFunction};
use distpf_core::{AngularLabel, PotentialModel, PseudoFunction, RadialSeries};
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `V = -2/r`, `E = -1`.
pub fn hydrogen() -> (PotentialModel<BigRational>, BigRational) {
    (PotentialModel::coulomb(q(-2, 1)), q(-1, 1))
}

/// Anharmonic well with a Coulomb tail, float mode.
pub fn anharmonic_f64() -> (PotentialModel<f64>, f64) {
    (
        PotentialModel::new(-1.5, vec![0.0, 0.0, 1.0, 0.0, 0.25]),
        0.75,
    )
}

/// Dense pseudofunction `r^s Σ_{k<len} (k+1)/(k+2) r^k · Y_ℓ^0`.
pub fn dense_pf(s: i64, len: usize, ell: u32) -> PseudoFunction<BigRational> {
    let coeffs = (0..len as i64).map(|k| q(k + 1, k + 2)).collect();
    PseudoFunction::new(
        RadialSeries::new(s, coeffs).unwrap(),
        AngularLabel::new(ell, 0).unwrap(),
    )
}

/// Degree-3 polynomial Gaussian.
pub fn test_function(alpha: BigRational) -> TestFunction {
    let poly = Polynomial::from_int_terms(&[
        ([0, 0, 0], 2),
        ([1, 0, 0], -1),
        ([0, 1, 1], 3),
        ([1, 1, 1], 1),
        ([0, 0, 2], -2),
    ]);
    TestFunction::new(poly, alpha).unwrap()
}

pub fn half() -> BigRational {
    q(1, 2)
}
