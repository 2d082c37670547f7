//! Value types: radial series, angular labels, pseudofunctions, delta sums.

use std::fmt::{self, Display};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{DeltaWeight, ExactScalar, Scalar, WireValue};

/// `r^s · Σ_{k=0}^{N} a_k r^k`, truncated at order `N = coeffs.len() - 1`.
///
/// `a_0 != 0` unless every coefficient is zero. Trailing zeros are kept:
/// they record that the series is known to vanish up to that order.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialSeries<T> {
    s: i64,
    coeffs: Vec<T>,
}

impl<T: Scalar> RadialSeries<T> {
    /// Builds a series, rejecting a zero leading coefficient on a nonzero series.
    pub fn new(s: i64, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Ok(Self::zero(s, 0));
        }
        if coeffs[0].is_zero() && coeffs.iter().any(|a| !a.is_zero()) {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(Self { s, coeffs })
    }

    /// Builds a series, absorbing leading zeros into the exponent.
    pub fn normalized(s: i64, mut coeffs: Vec<T>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(s, 0);
        }
        match coeffs.iter().position(|a| !a.is_zero()) {
            Some(first) => {
                coeffs.drain(..first);
                Self {
                    s: s + first as i64,
                    coeffs,
                }
            }
            None => Self { s, coeffs },
        }
    }

    /// Identically zero series valid through `r^{s+order}`.
    pub fn zero(s: i64, order: usize) -> Self {
        Self {
            s,
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// Single monomial `a·r^s`.
    pub fn monomial(s: i64, a: T) -> Self {
        Self::normalized(s, vec![a])
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `a_k`, zero past the truncation.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|a| a.is_zero())
    }

    /// Highest power of `r` the truncation determines.
    pub fn valid_through(&self) -> i64 {
        self.s + self.order() as i64
    }

    /// `(S_e, S_d)` with `series = r^s [S_e(r) + r·S_d(r)]`; `S_e` holds even-index
    /// coefficients, `S_d` odd-index ones.
    pub fn parity_split(&self) -> (Vec<T>, Vec<T>) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (even, odd)
    }

    /// Multiplies by `r^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            s: self.s + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, by: &T) -> Self {
        if by.is_zero() {
            return Self::zero(self.s, self.order());
        }
        Self {
            s: self.s,
            coeffs: self.coeffs.iter().map(|a| a.clone() * by.clone()).collect(),
        }
    }

    /// Sum, truncated to the lower of the two validity bounds.
    pub fn add(&self, other: &Self) -> Self {
        let s = self.s.min(other.s);
        let through = self.valid_through().min(other.valid_through());
        if through < s {
            return Self::zero(s, 0);
        }
        let len = (through - s + 1) as usize;
        let coeffs = (0..len)
            .map(|j| {
                let power = s + j as i64;
                let pick = |x: &Self| {
                    let k = power - x.s;
                    if k >= 0 {
                        x.coeff(k as usize)
                    } else {
                        T::zero()
                    }
                };
                pick(self) + pick(other)
            })
            .collect();
        Self::normalized(s, coeffs)
    }

    pub fn map_to<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RadialSeries<U> {
        RadialSeries {
            s: self.s,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar> Display for RadialSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({a})·r^{}", self.s + k as i64)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(r^{})", self.valid_through() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct WireSeries {
    s: i64,
    coeffs: Vec<WireValue>,
}

impl<T: Scalar> Serialize for RadialSeries<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WireSeries {
            s: self.s,
            coeffs: self.coeffs.iter().map(Scalar::to_wire).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for RadialSeries<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WireSeries::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|w| {
                T::from_wire(w).ok_or_else(|| D::Error::custom("coefficient has the wrong mode"))
            })
            .collect::<std::result::Result<Vec<T>, _>>()?;
        RadialSeries::new(wire.s, coeffs).map_err(D::Error::custom)
    }
}

/// `(ℓ, μ)` labelling a real spherical harmonic `Y_ℓ^μ`.
///
/// `μ > 0` selects the cosine-type real harmonic, `μ < 0` the sine-type, `μ = 0`
/// the axial one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLabel")]
pub struct AngularLabel {
    ell: u32,
    mu: i32,
}

#[derive(Deserialize)]
struct RawLabel {
    ell: u32,
    mu: i32,
}

impl TryFrom<RawLabel> for AngularLabel {
    type Error = Error;

    fn try_from(raw: RawLabel) -> Result<Self> {
        AngularLabel::new(raw.ell, raw.mu)
    }
}

impl AngularLabel {
    pub fn new(ell: u32, mu: i32) -> Result<Self> {
        if mu.unsigned_abs() > ell {
            return Err(Error::InvalidAngularLabel { ell, mu });
        }
        Ok(Self { ell, mu })
    }

    pub fn s_wave() -> Self {
        Self { ell: 0, mu: 0 }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn mu(&self) -> i32 {
        self.mu
    }

    /// `ℓ(ℓ+1)`, the `L²` eigenvalue in units of `ħ²`.
    pub fn l_squared(&self) -> i64 {
        let l = i64::from(self.ell);
        l * (l + 1)
    }
}

impl Display for AngularLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y_{}^{}", self.ell, self.mu)
    }
}

/// `Pf.[r^s Σ a_k r^k]·Y_ℓ^μ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct PseudoFunction<T> {
    pub radial: RadialSeries<T>,
    pub angular: AngularLabel,
}

impl<T: Scalar> PseudoFunction<T> {
    pub fn new(radial: RadialSeries<T>, angular: AngularLabel) -> Self {
        Self { radial, angular }
    }

    /// `Pf.[u(r)/r]·Y` from `u = r^{s_u} Σ a_k r^k`.
    pub fn from_u(u: &RadialSeries<T>, angular: AngularLabel) -> Self {
        Self {
            radial: u.shift(-1),
            angular,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.radial.is_zero()
    }
}

impl<T: Scalar> Display for PseudoFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pf.[{}]·{}", self.radial, self.angular)
    }
}

/// Angular prefactor of a delta term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Prefactor {
    /// Plain `Δ^p δ`.
    Unit,
    /// `r^ℓ Y_ℓ^μ · Δ^p δ`, a solid harmonic times the iterated delta.
    SolidHarmonic(AngularLabel),
}

impl Prefactor {
    pub fn ell(&self) -> u32 {
        match self {
            Prefactor::Unit => 0,
            Prefactor::SolidHarmonic(a) => a.ell(),
        }
    }

    pub fn mu(&self) -> i32 {
        match self {
            Prefactor::Unit => 0,
            Prefactor::SolidHarmonic(a) => a.mu(),
        }
    }

    fn sort_key(&self) -> (u32, i32, u8) {
        match self {
            Prefactor::Unit => (0, 0, 0),
            Prefactor::SolidHarmonic(a) => (a.ell(), a.mu(), 1),
        }
    }
}

/// `coefficient · prefactor · Δ^p δ`.
///
/// Never stores a zero coefficient, nor a solid-harmonic term with `2p < ℓ`
/// (`r^ℓ Y_ℓ^μ Δ^p δ` is identically zero then).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    bound = "W: DeltaWeight",
    into = "WireDeltaTerm<W>",
    try_from = "WireDeltaTerm<W>"
)]
pub struct DeltaTerm<W> {
    coefficient: W,
    prefactor: Prefactor,
    p: u64,
}

impl<W: DeltaWeight> DeltaTerm<W> {
    /// `None` when the term is identically zero.
    pub fn new(coefficient: W, prefactor: Prefactor, p: u64) -> Option<Self> {
        if coefficient.is_zero() || 2 * p < u64::from(prefactor.ell()) {
            return None;
        }
        Some(Self {
            coefficient,
            prefactor,
            p,
        })
    }

    pub fn coefficient(&self) -> &W {
        &self.coefficient
    }

    pub fn prefactor(&self) -> Prefactor {
        self.prefactor
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ell(&self) -> u32 {
        self.prefactor.ell()
    }

    pub fn mu(&self) -> i32 {
        self.prefactor.mu()
    }

    fn sort_key(&self) -> (u32, i32, u8, u64) {
        let (l, m, kind) = self.prefactor.sort_key();
        (l, m, kind, self.p)
    }
}

impl<W: DeltaWeight> Display for DeltaTerm<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coefficient)?;
        if let Prefactor::SolidHarmonic(a) = self.prefactor {
            write!(f, "·r^{}{}", a.ell(), a)?;
        }
        match self.p {
            0 => write!(f, "·δ"),
            1 => write!(f, "·Δδ"),
            p => write!(f, "·Δ^{p}δ"),
        }
    }
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(bound = "W: DeltaWeight")]
struct WireDeltaTerm<W> {
    coefficient: W,
    ell: u32,
    mu: i32,
    p: u64,
    solid_harmonic: bool,
}

impl<W: DeltaWeight> From<DeltaTerm<W>> for WireDeltaTerm<W> {
    fn from(t: DeltaTerm<W>) -> Self {
        Self {
            ell: t.ell(),
            mu: t.mu(),
            p: t.p,
            solid_harmonic: matches!(t.prefactor, Prefactor::SolidHarmonic(_)),
            coefficient: t.coefficient,
        }
    }
}

impl<W: DeltaWeight> TryFrom<WireDeltaTerm<W>> for DeltaTerm<W> {
    type Error = String;

    fn try_from(w: WireDeltaTerm<W>) -> std::result::Result<Self, String> {
        let prefactor = if w.solid_harmonic {
            Prefactor::SolidHarmonic(AngularLabel::new(w.ell, w.mu).map_err(|e| e.to_string())?)
        } else if w.ell == 0 && w.mu == 0 {
            Prefactor::Unit
        } else {
            return Err("a unit prefactor must carry ell = mu = 0".into());
        };
        DeltaTerm::new(w.coefficient, prefactor, w.p)
            .ok_or_else(|| "delta term is identically zero".to_string())
    }
}

/// Finite sum of delta terms, kept sorted by `(ℓ, μ, p)` with distinct keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    bound = "W: DeltaWeight",
    from = "Vec<DeltaTerm<W>>",
    into = "Vec<DeltaTerm<W>>"
)]
pub struct DeltaSum<W> {
    terms: Vec<DeltaTerm<W>>,
}

impl<W: DeltaWeight> Default for DeltaSum<W> {
    fn default() -> Self {
        Self { terms: Vec::new() }
    }
}

impl<W: DeltaWeight> From<Vec<DeltaTerm<W>>> for DeltaSum<W> {
    fn from(terms: Vec<DeltaTerm<W>>) -> Self {
        let mut sum = Self::default();
        for t in terms {
            sum.push(t);
        }
        sum
    }
}

impl<W: DeltaWeight> From<DeltaSum<W>> for Vec<DeltaTerm<W>> {
    fn from(sum: DeltaSum<W>) -> Self {
        sum.terms
    }
}

impl<W: DeltaWeight> DeltaSum<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[DeltaTerm<W>] {
        &self.terms
    }

    /// Adds a term, merging with an existing term of the same key.
    pub fn push(&mut self, term: DeltaTerm<W>) {
        let key = term.sort_key();
        match self.terms.binary_search_by(|t| t.sort_key().cmp(&key)) {
            Ok(i) => {
                let merged = self.terms[i].coefficient.add(&term.coefficient);
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i].coefficient = merged;
                }
            }
            Err(i) => self.terms.insert(i, term),
        }
    }

    /// Adds `coefficient · prefactor · Δ^p δ` unless it is identically zero.
    pub fn add_term(&mut self, coefficient: W, prefactor: Prefactor, p: u64) {
        if let Some(t) = DeltaTerm::new(coefficient, prefactor, p) {
            self.push(t);
        }
    }

    pub fn find(&self, prefactor: Prefactor, p: u64) -> Option<&DeltaTerm<W>> {
        self.terms
            .iter()
            .find(|t| t.prefactor == prefactor && t.p == p)
    }

    pub fn map_coefficients(&self, f: impl Fn(&W) -> W) -> Self {
        self.terms
            .iter()
            .filter_map(|t| DeltaTerm::new(f(&t.coefficient), t.prefactor, t.p))
            .collect::<Vec<_>>()
            .into()
    }

    /// Rewrites `r^0 Y_0^0 Δ^p δ` as `(1/√(4π))·Δ^p δ`, folding the constant
    /// harmonic into the coefficient.
    pub fn fold_s_wave(&self) -> Self {
        let y00 = ExactScalar::new(crate::scalar::ratio(1, 2), -1);
        self.terms
            .iter()
            .filter_map(|t| match t.prefactor {
                Prefactor::SolidHarmonic(a) if a.ell() == 0 => {
                    DeltaTerm::new(t.coefficient.mul_exact(&y00), Prefactor::Unit, t.p)
                }
                _ => Some(t.clone()),
            })
            .collect::<Vec<_>>()
            .into()
    }
}

impl<W: DeltaWeight> Display for DeltaSum<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// `Pf`-part plus a delta sum: the value of a distributional Laplacian or
/// Hamiltonian.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct DistributionExpr<T: Scalar> {
    pub pf_part: PseudoFunction<T>,
    pub delta_part: DeltaSum<T::Weight>,
}

impl<T: Scalar> Display for DistributionExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + [{}]", self.pf_part, self.delta_part)
    }
}
