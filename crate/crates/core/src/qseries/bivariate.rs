use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Truncated bivariate series `sum c[m][n] x^m q^n` with `m <= M`, `n <= N`.
///
/// `x` counts parts and `q` tracks weight, so the generating function of a
/// partition family restricted to at most `M` parts and weight at most `N`
/// fits exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XQSeries {
    max_parts: usize,
    order: usize,
    // row-major, (M+1) x (N+1)
    data: Vec<BigInt>,
}

impl XQSeries {
    pub fn zero(max_parts: usize, order: usize) -> Self {
        XQSeries {
            max_parts,
            order,
            data: vec![BigInt::zero(); (max_parts + 1) * (order + 1)],
        }
    }

    pub fn one(max_parts: usize, order: usize) -> Self {
        let mut s = Self::zero(max_parts, order);
        s.set(0, 0, 1.into());
        s
    }

    pub fn from_fn(
        max_parts: usize,
        order: usize,
        mut f: impl FnMut(usize, usize) -> BigInt,
    ) -> Self {
        let mut s = Self::zero(max_parts, order);
        for m in 0..=max_parts {
            for n in 0..=order {
                s.set(m, n, f(m, n));
            }
        }
        s
    }

    /// `(M, N)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.max_parts, self.order)
    }

    fn idx(&self, m: usize, n: usize) -> usize {
        assert!(
            m <= self.max_parts && n <= self.order,
            "({m}, {n}) outside {}x{} table",
            self.max_parts,
            self.order
        );
        m * (self.order + 1) + n
    }

    pub fn get(&self, m: usize, n: usize) -> &BigInt {
        &self.data[self.idx(m, n)]
    }

    pub fn set(&mut self, m: usize, n: usize, value: BigInt) {
        let i = self.idx(m, n);
        self.data[i] = value;
    }

    fn check_dims(&self, other: &XQSeries) -> Result<()> {
        if self.dims() == other.dims() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dims(),
                right: other.dims(),
            })
        }
    }

    pub fn checked_add(&self, other: &XQSeries) -> Result<XQSeries> {
        self.check_dims(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(XQSeries { data, ..*self })
    }

    pub fn checked_sub(&self, other: &XQSeries) -> Result<XQSeries> {
        self.check_dims(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(XQSeries { data, ..*self })
    }

    /// Substitutes `x -> xq`: `c'[m][n] = c[m][n-m]`.
    pub fn xq_shift(&self) -> XQSeries {
        Self::from_fn(self.max_parts, self.order, |m, n| {
            if n >= m {
                self.get(m, n - m).clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Multiplies by the monomial `xq`: `c'[m][n] = c[m-1][n-1]`.
    pub fn xq_mul_xq(&self) -> XQSeries {
        Self::from_fn(self.max_parts, self.order, |m, n| {
            if m >= 1 && n >= 1 {
                self.get(m - 1, n - 1).clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Sets `x = 1`: the univariate weight counts `sum_m c[m][n]`.
    pub fn weight_counts(&self) -> Vec<BigInt> {
        (0..=self.order)
            .map(|n| (0..=self.max_parts).map(|m| self.get(m, n)).sum())
            .collect()
    }
}
