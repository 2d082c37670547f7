//! Coefficient fields.
//!
//! [`ExactScalar`] is a finite sum `Σ q_h · π^{h/2}` with rational `q_h`. It is
//! the field every exact symbolic result lives in: the universal Laplacian
//! coefficients are rational multiples of `π`, and folding the constant
//! `Y_0^0 = 1/√(4π)` into a coefficient introduces `π^{-1/2}`.
//!
//! [`Scalar`] abstracts over the two series modes (exact rationals and `f64`),
//! and [`DeltaWeight`] over the matching delta-term coefficient types.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational times a half-integer power of `π`, summed over powers.
///
/// Keys are the `π` exponent in units of `1/2`. Zero rationals are never
/// stored, so derived equality is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    terms: BTreeMap<i32, BigRational>,
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    /// `q · π^{half_power/2}`.
    pub fn new(q: BigRational, half_power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(half_power, q);
        }
        Self { terms }
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(q, 0)
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::rational(ratio(numer, denom))
    }

    /// `q · π`.
    pub fn pi_multiple(q: BigRational) -> Self {
        Self::new(q, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The `(half_power, rational)` pairs in increasing power order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(h, q)| (*h, q))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The single `(half_power, rational)` pair, if the scalar has exactly one term.
    pub fn as_single_term(&self) -> Option<(i32, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// Rational coefficient of `π^{half_power/2}` (zero if absent).
    pub fn coefficient(&self, half_power: i32) -> BigRational {
        self.terms
            .get(&half_power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(h, c)| (*h, c * q)).collect(),
        }
    }

    /// Division by a nonzero single-term scalar; `None` otherwise.
    pub fn checked_div(&self, rhs: &ExactScalar) -> Option<Self> {
        let (h, q) = rhs.as_single_term()?;
        Some(Self {
            terms: self.terms.iter().map(|(hh, c)| (hh - h, c / q)).collect(),
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(h, q)| {
                ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
                    * std::f64::consts::PI.powf(*h as f64 / 2.0)
            })
            .sum()
    }

    fn insert_add(&mut self, h: i32, q: BigRational) {
        let entry = self.terms.entry(h).or_insert_with(BigRational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&h);
        }
    }
}

pub(crate) fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

impl Add for &ExactScalar {
    type Output = ExactScalar;

    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        for (h, q) in &rhs.terms {
            out.insert_add(*h, q.clone());
        }
        out
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;

    fn add(self, rhs: ExactScalar) -> ExactScalar {
        &self + &rhs
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        for (h, q) in &rhs.terms {
            self.insert_add(*h, q.clone());
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        ExactScalar {
            terms: self.terms.iter().map(|(h, q)| (*h, -q)).collect(),
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;

    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;

    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (h1, q1) in &self.terms {
            for (h2, q2) in &rhs.terms {
                out.insert_add(h1 + h2, q1 * q2);
            }
        }
        out
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

fn fmt_pi_power(f: &mut fmt::Formatter<'_>, h: i32) -> fmt::Result {
    match h {
        0 => Ok(()),
        1 => write!(f, "·√π"),
        2 => write!(f, "·π"),
        -1 => write!(f, "/√π"),
        -2 => write!(f, "/π"),
        h if h % 2 == 0 => write!(f, "·π^{}", h / 2),
        h => write!(f, "·π^({}/2)", h),
    }
}

impl Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (h, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                if q.is_negative() {
                    write!(f, " - {}", q.abs())?;
                } else {
                    write!(f, " + {q}")?;
                }
            } else {
                write!(f, "{q}")?;
            }
            fmt_pi_power(f, *h)?;
        }
        Ok(())
    }
}

impl Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

/// Wire form of one `q · π^{h/2}` term.
#[derive(Serialize, Deserialize)]
struct WireTerm {
    rational: String,
    pi_half_power: i32,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WireScalar {
    Single(WireTerm),
    Sum(Vec<WireTerm>),
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .terms
            .iter()
            .map(|(h, q)| WireTerm {
                rational: q.to_string(),
                pi_half_power: *h,
            })
            .collect();
        match wire.len() {
            0 => WireTerm {
                rational: "0".into(),
                pi_half_power: 0,
            }
            .serialize(serializer),
            1 => wire[0].serialize(serializer),
            _ => wire.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = match WireScalar::deserialize(deserializer)? {
            WireScalar::Single(t) => vec![t],
            WireScalar::Sum(ts) => ts,
        };
        let mut out = ExactScalar::zero();
        for t in terms {
            let q = parse_rational(&t.rational)
                .ok_or_else(|| D::Error::custom(format!("invalid rational `{}`", t.rational)))?;
            out.insert_add(t.pi_half_power, q);
        }
        Ok(out)
    }
}

/// Coefficient type of a delta term: exact scalars in exact mode, `f64` in float mode.
pub trait DeltaWeight:
    Clone + Debug + PartialEq + Display + Serialize + DeserializeOwned + Send + Sync + 'static
{
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_exact(&self, factor: &ExactScalar) -> Self;
    fn to_f64(&self) -> f64;
}

impl DeltaWeight for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }

    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul_exact(&self, factor: &ExactScalar) -> Self {
        self * factor
    }

    fn to_f64(&self) -> f64 {
        ExactScalar::to_f64(self)
    }
}

impl DeltaWeight for f64 {
    fn zero() -> Self {
        0.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul_exact(&self, factor: &ExactScalar) -> Self {
        self * factor.to_f64()
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Relative size below which a float-mode recurrence or residual term counts as zero.
pub const FLOAT_ZERO_TOLERANCE: f64 = 1e-12;

/// Series coefficient field. Implemented for [`BigRational`] (exact mode) and `f64` (float mode).
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + num_traits::Num
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Delta coefficients paired with this series field.
    type Weight: DeltaWeight;

    /// `true` for the exact rational field.
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// `self · c` as a delta coefficient.
    fn weight(&self, c: &ExactScalar) -> Self::Weight;

    /// Multiplies a delta coefficient by a series scalar.
    fn scale_weight(w: &Self::Weight, by: &Self) -> Self::Weight;

    /// Zero test against the magnitude of the terms that produced `self`.
    /// Exact in exact mode; relative to `scale` in float mode.
    fn is_negligible(&self, scale: f64) -> bool;

    fn to_wire(&self) -> WireValue;

    fn from_wire(w: &WireValue) -> Option<Self>;
}

/// Serialized series coefficient: `"p/q"` text in exact mode, a JSON number in float mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireValue {
    Number(f64),
    Text(String),
}

impl Scalar for BigRational {
    type Weight = ExactScalar;
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn weight(&self, c: &ExactScalar) -> ExactScalar {
        c.scale(self)
    }

    fn scale_weight(w: &ExactScalar, by: &Self) -> ExactScalar {
        w.scale(by)
    }

    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }

    fn to_wire(&self) -> WireValue {
        WireValue::Text(self.to_string())
    }

    fn from_wire(w: &WireValue) -> Option<Self> {
        match w {
            WireValue::Text(t) => parse_rational(t),
            WireValue::Number(_) => None,
        }
    }
}

impl Scalar for f64 {
    type Weight = f64;
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn weight(&self, c: &ExactScalar) -> f64 {
        self * c.to_f64()
    }

    fn scale_weight(w: &f64, by: &Self) -> f64 {
        w * by
    }

    fn is_negligible(&self, scale: f64) -> bool {
        self.abs() <= FLOAT_ZERO_TOLERANCE * scale.max(f64::MIN_POSITIVE)
    }

    fn to_wire(&self) -> WireValue {
        WireValue::Number(*self)
    }

    fn from_wire(w: &WireValue) -> Option<Self> {
        match w {
            WireValue::Number(x) => Some(*x),
            WireValue::Text(_) => None,
        }
    }
}

/// `#[serde(with = "wire")]` for a bare [`Scalar`] field.
pub mod wire {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{Scalar, WireValue};

    pub fn serialize<T: Scalar, S: Serializer>(x: &T, ser: S) -> Result<S::Ok, S::Error> {
        x.to_wire().serialize(ser)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(de: D) -> Result<T, D::Error> {
        let w = WireValue::deserialize(de)?;
        T::from_wire(&w).ok_or_else(|| D::Error::custom(format!("bad scalar {w:?}")))
    }
}

/// `#[serde(with = "wire_vec")]` for a `Vec` of [`Scalar`].
pub mod wire_vec {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{Scalar, WireValue};

    pub fn serialize<T: Scalar, S: Serializer>(xs: &[T], ser: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(T::to_wire).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(de: D) -> Result<Vec<T>, D::Error> {
        Vec::<WireValue>::deserialize(de)?
            .iter()
            .map(|w| T::from_wire(w).ok_or_else(|| D::Error::custom(format!("bad scalar {w:?}"))))
            .collect()
    }
}
