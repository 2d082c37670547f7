//! Polynomial × Gaussian test functions, `P(x, y, z)·e^{-α r²}`.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::ratio;

/// Exponents `(a, b, c)` of `x^a y^b z^c`.
pub type Monomial = [u32; 3];

/// Polynomial in `x, y, z` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn one() -> Self {
        Self::constant(ratio(1, 1))
    }

    pub fn monomial(exponents: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    /// Builds from `(exponents, integer coefficient)` pairs.
    pub fn from_int_terms(terms: &[(Monomial, i64)]) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(*e, ratio(*c, 1));
        }
        p
    }

    pub fn add_term(&mut self, exponents: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(exponents)
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m[0] + m[1] + m[2]).max()
    }

    /// Coefficient of the constant monomial, i.e. the value at the origin.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&[0, 0, 0])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * by);
        }
        out
    }

    /// `ΔP`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for axis in 0..3 {
                let e = m[axis];
                if e >= 2 {
                    let mut d = *m;
                    d[axis] -= 2;
                    out.add_term(d, c * ratio(i64::from(e) * (i64::from(e) - 1), 1));
                }
            }
        }
        out
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                c.to_f64().unwrap_or(f64::NAN)
                    * x.powi(m[0] as i32)
                    * y.powi(m[1] as i32)
                    * z.powi(m[2] as i32)
            })
            .sum()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term([m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
                write!(f, "{}", c.abs())?;
            } else {
                write!(f, "{c}")?;
            }
            for (name, e) in ["x", "y", "z"].iter().zip(m) {
                match e {
                    0 => {}
                    1 => write!(f, "·{name}")?,
                    e => write!(f, "·{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// `P(x, y, z)·e^{-α r²}` with `α > 0`. Closed under the Laplacian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestFunction {
    poly: Polynomial,
    alpha: BigRational,
}

impl TestFunction {
    pub fn new(poly: Polynomial, alpha: BigRational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveWidth);
        }
        Ok(Self { poly, alpha })
    }

    /// `e^{-α r²}`.
    pub fn gaussian(alpha: BigRational) -> Result<Self> {
        Self::new(Polynomial::one(), alpha)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// `(Q·P)·e^{-α r²}`.
    pub fn times_poly(&self, q: &Polynomial) -> Self {
        Self {
            poly: &self.poly * q,
            alpha: self.alpha.clone(),
        }
    }

    /// `Δ(P e^{-αr²}) = [ΔP - 4α(x·∇P) - 6αP + 4α²r²P]·e^{-αr²}`.
    pub fn laplacian(&self) -> Self {
        let a = &self.alpha;
        let mut out = self.poly.laplacian();
        for (m, c) in self.poly.terms() {
            let degree = i64::from(m[0] + m[1] + m[2]);
            // x·∇ acts on a monomial as multiplication by its degree.
            out.add_term(*m, c * a * ratio(-4 * degree - 6, 1));
            let a2 = c * a * a * ratio(4, 1);
            for axis in 0..3 {
                let mut up = *m;
                up[axis] += 2;
                out.add_term(up, a2.clone());
            }
        }
        Self {
            poly: out,
            alpha: self.alpha.clone(),
        }
    }

    /// `Δ^p φ`.
    pub fn laplacian_pow(&self, p: u64) -> Self {
        (0..p).fold(self.clone(), |phi, _| phi.laplacian())
    }

    /// `φ(0)`, exactly.
    pub fn value_at_origin(&self) -> BigRational {
        self.poly.constant_term()
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        let a = self.alpha.to_f64().unwrap_or(f64::NAN);
        self.poly.eval(x, y, z) * (-a * (x * x + y * y + z * z)).exp()
    }
}

impl Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·exp(-{}·r²)", self.poly, self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    #[test]
    fn gaussian_laplacian() {
        let alpha = q(3, 2);
        let phi = TestFunction::gaussian(alpha.clone()).unwrap().laplacian();
        let a2 = &alpha * &alpha * q(4, 1);
        let expected = Polynomial::from_int_terms(&[]).add_term_chain([
            ([0, 0, 0], -&alpha * q(6, 1)),
            ([2, 0, 0], a2.clone()),
            ([0, 2, 0], a2.clone()),
            ([0, 0, 2], a2),
        ]);
        assert_eq!(phi.poly(), &expected);
    }

    #[test]
    fn linear_laplacian() {
        let alpha = q(1, 1);
        let x = Polynomial::from_int_terms(&[([1, 0, 0], 1)]);
        let phi = TestFunction::new(x, alpha).unwrap().laplacian();
        let expected = Polynomial::from_int_terms(&[
            ([1, 0, 0], -10),
            ([3, 0, 0], 4),
            ([1, 2, 0], 4),
            ([1, 0, 2], 4),
        ]);
        assert_eq!(phi.poly(), &expected);
    }

    #[test]
    fn zero_width_rejected() {
        assert_eq!(
            TestFunction::gaussian(q(0, 1)),
            Err(Error::NonPositiveWidth)
        );
        assert_eq!(
            TestFunction::gaussian(q(-1, 2)),
            Err(Error::NonPositiveWidth)
        );
    }

    #[test]
    fn laplacian_matches_finite_differences() {
        let poly = Polynomial::from_int_terms(&[
            ([0, 0, 0], 2),
            ([1, 1, 0], -3),
            ([0, 1, 2], 1),
            ([3, 0, 0], 1),
        ]);
        let phi = TestFunction::new(poly, q(1, 2)).unwrap();
        let lap = phi.laplacian();
        let h = 1e-3;
        for &(x, y, z) in &[(0.3, -0.2, 0.7), (1.1, 0.4, -0.5), (0.0, 0.0, 0.0)] {
            let c = phi.eval(x, y, z);
            let fd = (phi.eval(x + h, y, z)
                + phi.eval(x - h, y, z)
                + phi.eval(x, y + h, z)
                + phi.eval(x, y - h, z)
                + phi.eval(x, y, z + h)
                + phi.eval(x, y, z - h)
                - 6.0 * c)
                / (h * h);
            assert!(
                (fd - lap.eval(x, y, z)).abs() < 1e-5,
                "{fd} vs {}",
                lap.eval(x, y, z)
            );
        }
    }

    #[test]
    fn delta_laplacian_at_origin() {
        let phi = TestFunction::gaussian(q(1, 1)).unwrap();
        assert_eq!(phi.value_at_origin(), q(1, 1));
        assert_eq!(phi.laplacian().value_at_origin(), q(-6, 1));
    }

    trait Chain {
        fn add_term_chain<const N: usize>(self, t: [(Monomial, BigRational); N]) -> Self;
    }

    impl Chain for Polynomial {
        fn add_term_chain<const N: usize>(mut self, t: [(Monomial, BigRational); N]) -> Self {
            for (m, c) in t {
                self.add_term(m, c);
            }
            self
        }
    }
}
