use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Sign;
use crate::{Error, Result};

/// A power series `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})` with exact
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

/// Builds a series from leading coefficients, zero-filling up to `order`.
pub fn make_series<I, T>(coeffs: I, order: usize) -> Result<QSeries>
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    let mut out: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
    if out.len() > order + 1 {
        return Err(Error::LengthExceedsOrder {
            len: out.len(),
            order,
        });
    }
    out.resize(order + 1, BigInt::zero());
    Ok(QSeries { coeffs: out })
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c q^exp`, or zero when `exp` is past the truncation order.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &QSeries) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QSeries { coeffs })
    }

    pub fn checked_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QSeries { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(QSeries { coeffs: out })
    }

    pub fn scale(&self, c: &BigInt) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^exp`, dropping whatever moves past the order.
    pub fn shift(&self, exp: usize) -> QSeries {
        let n = self.order();
        let mut out = Self::zero(n);
        if exp <= n {
            out.coeffs[exp..].clone_from_slice(&self.coeffs[..=n - exp]);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return Err(Error::NotInvertible);
        }
        // 1/c0 == c0 for a unit.
        let unit = c0.clone();
        let n = self.order();
        let mut out = vec![BigInt::zero(); n + 1];
        out[0] = unit.clone();
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for k in 1..=m {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &out[m - k];
                }
            }
            out[m] = -(acc * &unit);
        }
        Ok(QSeries { coeffs: out })
    }

    /// In-place multiplication by `(1 - sign q^exp)`.
    pub(crate) fn mul_binomial(&mut self, sign: Sign, exp: usize) {
        let negate = sign == Sign::Minus;
        let n = self.order();
        if exp > n {
            return;
        }
        if exp == 0 {
            // (1 - q^0) = 0 or (1 + q^0) = 2
            for c in &mut self.coeffs {
                if negate {
                    *c *= 2;
                } else {
                    c.set_zero();
                }
            }
            return;
        }
        for m in (exp..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(m);
            if negate {
                hi[0] += &lo[m - exp];
            } else {
                hi[0] -= &lo[m - exp];
            }
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        -self.clone()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
