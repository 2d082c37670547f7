//! Which equation a radial-series candidate satisfies in all of R³.
//!
//! A series solving the radial equation away from the origin yields
//! `H Pf.Ψ = E Pf.Ψ - (ħ²/2m) Q_{s,ℓ}(δ)`. When the delta sum is empty the
//! candidate solves the Schrödinger equation; otherwise it solves the
//! delta-sourced equation, and the `u(0) = 0` condition is just the `ℓ = 0`
//! face of that dichotomy.

use std::fmt::{self, Display};

use serde::{Deserialize, Serialize};

use crate::coeffs::{as_natural, delta_order};
use crate::distlap::{delta_source, q_s, q_sl, PhysicalUnits, PotentialModel};
use crate::error::Result;
use crate::pseudofunction::{AngularLabel, DeltaSum, PseudoFunction, RadialSeries};
use crate::radial::{frobenius, normalizable_at_origin, Resonance, Root};
use crate::scalar::Scalar;
use crate::Error;

/// `Q_{s,ℓ}(δ) ≠ 0` decided by scanning for `a_k ≠ 0` with
/// `k + s - ℓ = -2p - 1`, `p ∈ ℕ`, `2p ≥ ℓ`. Evaluates no coefficient.
pub fn q_nonvanishing<T: Scalar>(pf: &PseudoFunction<T>) -> bool {
    let s = pf.radial.s();
    let ell = pf.angular.ell();
    pf.radial.coeffs().iter().enumerate().any(|(k, a)| {
        if a.is_zero() {
            return false;
        }
        as_natural(&delta_order(s, k as i64, ell)).is_some_and(|p| 2 * p >= u64::from(ell))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    /// `H Pf.Ψ = E Pf.Ψ` in R³.
    SolvesSE,
    /// `H Pf.Ψ = E Pf.Ψ + source` with a nonempty delta source.
    SolvesModifiedSE,
    /// No power series exists for the requested root.
    NotRadialSolution,
}

impl Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::SolvesSE => "solves the Schrödinger equation in R³",
            VerdictKind::SolvesModifiedSE => "solves a delta-sourced Schrödinger equation",
            VerdictKind::NotRadialSolution => "no power-series radial solution",
        })
    }
}

/// Equations a verdict can point to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Citation {
    /// `H Ψ = E Ψ`.
    SchrodingerEquation,
    /// `H Pf.Ψ = E Pf.Ψ - (ħ²/2m) Q_{-(ℓ+1),ℓ}(δ)`.
    DeltaSourcedEquation,
    /// `H Ψ = E Ψ + (ħ²√π/m) u(0) δ`, the `ℓ = 0` form.
    SWaveSourceEquation,
    /// Radial equation for `Pf.R` with source `-(ħ²/2m) Q_{-(ℓ+1)}(δ)`.
    SingularRadialEquation,
    /// Reduced radial equation for `u`, holding away from the origin only.
    ReducedRadialEquation,
}

impl Citation {
    pub fn formula(self) -> &'static str {
        match self {
            Citation::SchrodingerEquation => "H Ψ = E Ψ",
            Citation::DeltaSourcedEquation => {
                "H Pf.Ψ = E Pf.Ψ - (ħ²/2m) Q_{-(ℓ+1),ℓ}(δ)"
            }
            Citation::SWaveSourceEquation => "H Ψ = E Ψ + (ħ²√π/m) u(0) δ",
            Citation::SingularRadialEquation => {
                "[-(ħ²/2m)(1/r)(d²/dr²)r + ℓ(ℓ+1)ħ²/(2mr²) + V] Pf.R = E Pf.R - (ħ²/2m) Q_{-(ℓ+1)}(δ)"
            }
            Citation::ReducedRadialEquation => {
                "[-(ħ²/2m) d²/dr² + ℓ(ℓ+1)ħ²/(2mr²) + V] u = E u  (in R³ \\ {0})"
            }
        }
    }
}

impl Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// `u(0)` for the candidate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", rename_all = "snake_case")]
pub enum OriginValue<T: Scalar> {
    Value(#[serde(with = "crate::scalar::wire")] T),
    /// `u` itself diverges at the origin (`s ≤ -2`).
    Undefined,
}

impl<T: Scalar> OriginValue<T> {
    pub fn is_zero(&self) -> bool {
        matches!(self, OriginValue::Value(v) if v.is_zero())
    }
}

impl<T: Scalar> Display for OriginValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OriginValue::Value(v) => write!(f, "{v}"),
            OriginValue::Undefined => write!(f, "undefined (u diverges at 0)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Verdict<T: Scalar> {
    pub kind: VerdictKind,
    pub angular: AngularLabel,
    pub root: Root,
    /// `-(ħ²/2m)·Q_{s,ℓ}(δ)` folded; empty iff `kind == SolvesSE`.
    pub delta_source: DeltaSum<T::Weight>,
    /// `-(ħ²/2m)·Q_s(δ)`: the source in the radial equation for `Pf.R`.
    pub radial_source: DeltaSum<T::Weight>,
    pub u_at_origin: OriginValue<T>,
    pub boundary_condition_met: bool,
    pub normalizable: bool,
    pub citations: Vec<Citation>,
    /// `u(r)` when the series exists.
    pub series: Option<RadialSeries<T>>,
    pub resonance: Option<Resonance>,
    /// Order of the log obstruction, for `NotRadialSolution`.
    pub obstruction: Option<usize>,
}

/// Everything that pins down a candidate state.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate<T: Scalar> {
    pub potential: PotentialModel<T>,
    pub angular: AngularLabel,
    pub energy: T,
    pub root: Root,
    pub order: usize,
    pub units: PhysicalUnits<T>,
}

/// Solves the radial series for the candidate and decides which equation
/// `Pf.Ψ` satisfies.
///
/// The series is computed through order `max(order, 2ℓ+1)` so that every
/// delta-producing coefficient and the resonance order are both reached.
pub fn classify_solution<T: Scalar>(c: &Candidate<T>) -> Result<Verdict<T>> {
    let ell = c.angular.ell();
    let s = c.root.exponent(ell);
    let order = c.order.max(2 * ell as usize + 1);
    let normalizable = normalizable_at_origin(s);
    let fr = match frobenius(&c.potential, ell, &c.energy, s, order, &c.units) {
        Ok(fr) => fr,
        Err(Error::LogObstruction(k)) => {
            return Ok(Verdict {
                kind: VerdictKind::NotRadialSolution,
                angular: c.angular,
                root: c.root,
                delta_source: DeltaSum::new(),
                radial_source: DeltaSum::new(),
                u_at_origin: origin_value(s, None),
                boundary_condition_met: false,
                normalizable,
                citations: vec![Citation::ReducedRadialEquation],
                series: None,
                resonance: None,
                obstruction: Some(k),
            });
        }
        Err(e) => return Err(e),
    };

    let pf = PseudoFunction::from_u(&fr.series, c.angular);
    let delta_source = delta_source(&q_sl(&pf), &c.units);
    let radial_source = delta_source_radial(&pf.radial, &c.units);
    let u_at_origin = origin_value(s, Some(&fr.series));
    let boundary_condition_met = u_at_origin.is_zero();

    let (kind, mut citations) = if delta_source.is_empty() {
        (VerdictKind::SolvesSE, vec![Citation::SchrodingerEquation])
    } else if ell == 0 {
        (
            VerdictKind::SolvesModifiedSE,
            vec![
                Citation::SWaveSourceEquation,
                Citation::DeltaSourcedEquation,
            ],
        )
    } else {
        (
            VerdictKind::SolvesModifiedSE,
            vec![Citation::DeltaSourcedEquation],
        )
    };
    if !radial_source.is_empty() {
        citations.push(Citation::SingularRadialEquation);
    }

    Ok(Verdict {
        kind,
        angular: c.angular,
        root: c.root,
        delta_source,
        radial_source,
        u_at_origin,
        boundary_condition_met,
        normalizable,
        citations,
        series: Some(fr.series),
        resonance: Some(fr.resonance),
        obstruction: None,
    })
}

fn delta_source_radial<T: Scalar>(
    radial: &RadialSeries<T>,
    units: &PhysicalUnits<T>,
) -> DeltaSum<T::Weight> {
    delta_source(&q_s(radial), units)
}

/// `u(0)` from the exponent `s` of `R = u/r`.
fn origin_value<T: Scalar>(s: i64, u: Option<&RadialSeries<T>>) -> OriginValue<T> {
    match s {
        s if s >= 0 => OriginValue::Value(T::zero()),
        -1 => match u {
            Some(u) => OriginValue::Value(u.coeff(0)),
            None => OriginValue::Value(T::one()),
        },
        _ => OriginValue::Undefined,
    }
}
