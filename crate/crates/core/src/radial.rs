//! Frobenius series for the radial equation.
//!
//! With `κ = ħ²/2m` the reduced equation reads
//! `u'' = [ℓ(ℓ+1)/r² + V(r)/κ - E/κ]·u`. Writing `u = r^{s+1} Σ a_k r^k` with
//! `V = v_{-1}/r + Σ v_j r^j` gives, for `k ≥ 1`,
//!
//! ```text
//! D(k)·a_k = ṽ_{-1} a_{k-1} + (ṽ_0 - Ẽ) a_{k-2} + Σ_{j≥1} ṽ_j a_{k-2-j}
//! D(k) = (k+s+1)(k+s) - ℓ(ℓ+1)
//! ```
//!
//! `D(0) = 0` is the indicial equation, with roots `s = ℓ` and `s = -(ℓ+1)`.

use serde::{Deserialize, Serialize};

use crate::distlap::{PhysicalUnits, PotentialModel};
use crate::error::{Error, Result};
use crate::pseudofunction::RadialSeries;
use crate::scalar::Scalar;

/// `(ℓ, -(ℓ+1))`.
pub fn indicial_roots(ell: u32) -> (i64, i64) {
    let l = i64::from(ell);
    (l, -(l + 1))
}

/// Which indicial root to expand about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Root {
    /// `s = ℓ`
    Regular,
    /// `s = -(ℓ+1)`
    Singular,
}

impl Root {
    pub fn exponent(self, ell: u32) -> i64 {
        let (regular, singular) = indicial_roots(ell);
        match self {
            Root::Regular => regular,
            Root::Singular => singular,
        }
    }

    pub fn from_exponent(ell: u32, s: i64) -> Result<Self> {
        let (regular, singular) = indicial_roots(ell);
        if s == regular {
            Ok(Root::Regular)
        } else if s == singular {
            Ok(Root::Singular)
        } else {
            Err(Error::NotIndicialRoot { ell, root: s })
        }
    }
}

/// What happened at the order where `D(k) = 0` (only the lower root has one).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Resonance {
    None,
    /// `D(k) = 0` with a vanishing right side; `a_k` was set to zero.
    FreeParameterSetToZero(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct FrobeniusResult<T: Scalar> {
    /// `u(r)`, leading exponent `s + 1`, coefficients `a_0..a_N` with `a_0 = 1`.
    pub series: RadialSeries<T>,
    pub root: Root,
    pub resonance: Resonance,
}

impl<T: Scalar> FrobeniusResult<T> {
    /// Exponent `s` of `R = u/r`.
    pub fn s(&self) -> i64 {
        self.series.s() - 1
    }
}

fn indicial_factor(s: i64, k: i64, l_squared: i64) -> i64 {
    (k + s + 1) * (k + s) - l_squared
}

/// Solves the recurrence up to order `order` about `root`.
///
/// Fails with [`Error::LogObstruction`] when `D(k) = 0` meets a nonzero right
/// side: the second solution then needs a logarithm.
pub fn frobenius<T: Scalar>(
    potential: &PotentialModel<T>,
    ell: u32,
    energy: &T,
    root: i64,
    order: usize,
    units: &PhysicalUnits<T>,
) -> Result<FrobeniusResult<T>> {
    let root_kind = Root::from_exponent(ell, root)?;
    if order < 1 {
        return Err(Error::InvalidOrder(order));
    }
    let kappa = units.hbar2_over_2m().clone();
    let v = potential.scaled(&(T::one() / kappa.clone()));
    let e = energy.clone() / kappa;
    let l_squared = i64::from(ell) * (i64::from(ell) + 1);

    let mut a: Vec<T> = Vec::with_capacity(order + 1);
    a.push(T::one());
    let mut resonance = Resonance::None;
    for k in 1..=order {
        let (rhs, scale) = recurrence_rhs(&a, k, &v, &e);
        let d = indicial_factor(root, k as i64, l_squared);
        if d == 0 {
            if rhs.is_negligible(scale) {
                a.push(T::zero());
                resonance = Resonance::FreeParameterSetToZero(k);
            } else {
                return Err(Error::LogObstruction(k));
            }
        } else {
            a.push(rhs / T::from_i64(d));
        }
    }
    Ok(FrobeniusResult {
        series: RadialSeries::new(root + 1, a)?,
        root: root_kind,
        resonance,
    })
}

/// Right side of the recurrence at order `k` from `a_0..a_{k-1}`, plus the sum
/// of the magnitudes of its terms.
fn recurrence_rhs<T: Scalar>(a: &[T], k: usize, v: &PotentialModel<T>, e: &T) -> (T, f64) {
    let at = |i: isize| -> T {
        if i < 0 {
            T::zero()
        } else {
            a.get(i as usize).cloned().unwrap_or_else(T::zero)
        }
    };
    let k = k as isize;
    let mut terms = vec![
        v.v_minus1.clone() * at(k - 1),
        (v.poly(0) - e.clone()) * at(k - 2),
    ];
    for j in 1..v.v.len() {
        terms.push(v.v[j].clone() * at(k - 2 - j as isize));
    }
    let scale = terms.iter().map(|t| t.to_f64().abs()).sum();
    let sum = terms.into_iter().fold(T::zero(), |acc, t| acc + t);
    (sum, scale)
}

/// Coefficients of `[-κ(1/r)(d²/dr²)r + κℓ(ℓ+1)/r² + V - E]R` for
/// `R = r^s Σ a_k r^k`, as a series in `r^{s-2+j}`, for `j = 0..=N`.
///
/// These are exactly the orders the truncation determines. In float mode
/// entries that are negligible against their contributing terms are zeroed.
pub fn radial_residual<T: Scalar>(
    series: &RadialSeries<T>,
    ell: u32,
    potential: &PotentialModel<T>,
    energy: &T,
    units: &PhysicalUnits<T>,
) -> Vec<T> {
    let s = series.s();
    let kappa = units.hbar2_over_2m().clone();
    let l_squared = i64::from(ell) * (i64::from(ell) + 1);
    let at = |i: isize| -> T {
        if i < 0 {
            T::zero()
        } else {
            series.coeff(i as usize)
        }
    };
    (0..=series.order())
        .map(|j| {
            let jj = j as isize;
            // D'(j) = (s+j)(s+j+1) - ℓ(ℓ+1)
            let d = indicial_factor(s - 1, j as i64 + 1, l_squared);
            let mut terms = vec![
                -(kappa.clone() * T::from_i64(d) * at(jj)),
                potential.v_minus1.clone() * at(jj - 1),
                (potential.poly(0) - energy.clone()) * at(jj - 2),
            ];
            for i in 1..potential.v.len() {
                terms.push(potential.v[i].clone() * at(jj - 2 - i as isize));
            }
            let scale: f64 = terms.iter().map(|t| t.to_f64().abs()).sum();
            let r = terms.into_iter().fold(T::zero(), |acc, t| acc + t);
            if r.is_negligible(scale) {
                T::zero()
            } else {
                r
            }
        })
        .collect()
}

/// `∫_0 |r^s|² r² dr` converges, i.e. `s > -3/2`.
pub fn normalizable_at_origin(s: i64) -> bool {
    2 * s > -3
}
