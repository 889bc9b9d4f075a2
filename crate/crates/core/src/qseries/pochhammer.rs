use num_bigint::BigInt;

use super::QSeries;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(s: i8) -> Option<Sign> {
        match s {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `sign^n` for any integer `n`.
    pub fn pow(self, n: i64) -> Sign {
        if self == Sign::Minus && n % 2 != 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.as_i8())
    }
}

/// The Pochhammer argument `sign * q^exponent`; `-1` is `(Minus, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub sign: Sign,
    pub exponent: usize,
}

impl Monomial {
    pub const fn new(sign: Sign, exponent: usize) -> Self {
        Monomial { sign, exponent }
    }

    /// `q^exponent`
    pub const fn q(exponent: usize) -> Self {
        Monomial::new(Sign::Plus, exponent)
    }

    /// `-q^exponent`
    pub const fn neg_q(exponent: usize) -> Self {
        Monomial::new(Sign::Minus, exponent)
    }
}

/// `(arg; q^base)_n = prod_{i<n} (1 - arg q^{base i})`, truncated at `order`.
pub fn poch_finite(arg: Monomial, base: usize, n: usize, order: usize) -> QSeries {
    let mut out = QSeries::one(order);
    for i in 0..n {
        let exp = arg.exponent + base * i;
        if exp > order && base > 0 {
            // every later factor is 1 + O(q^{order+1})
            break;
        }
        out.mul_binomial(arg.sign, exp);
    }
    out
}

/// `(arg; q^base)_inf`, keeping only the factors whose exponent is at most
/// `order`; every other factor is `1 + O(q^{order+1})`.
pub fn poch_inf(arg: Monomial, base: usize, order: usize) -> Result<QSeries> {
    if base == 0 {
        return Err(Error::InvalidParameters(
            "Pochhammer base exponent must be positive",
        ));
    }
    if arg == Monomial::q(0) {
        return Err(Error::DegenerateArgument);
    }
    let mut out = QSeries::one(order);
    let mut exp = arg.exponent;
    while exp <= order {
        out.mul_binomial(arg.sign, exp);
        exp += base;
    }
    Ok(out)
}

/// `(a_1, ..., a_k; q^base)_inf`; the empty list gives `1`.
pub fn poch_multi(args: &[Monomial], base: usize, order: usize) -> Result<QSeries> {
    args.iter().try_fold(QSeries::one(order), |acc, &arg| {
        let f = poch_inf(arg, base, order)?;
        acc.checked_mul(&f)
    })
}

/// `sum_{n in Z} sign^n q^{c n^2}` over every `n` with `c n^2 <= order`.
pub fn theta_sum(sign: Sign, c: usize, order: usize) -> Result<QSeries> {
    if c == 0 {
        return Err(Error::InvalidParameters(
            "theta quadratic coefficient must be positive",
        ));
    }
    let mut coeffs = alloc::vec![BigInt::from(0); order + 1];
    coeffs[0] = BigInt::from(1);
    let mut n = 1usize;
    while c * n * n <= order {
        // n and -n share the exponent and the sign
        coeffs[c * n * n] += sign.pow(n as i64).to_bigint() * 2;
        n += 1;
    }
    super::make_series(coeffs, order)
}

/// `1/(1 + q^k) = sum_j (-1)^j q^{kj}` for `k >= 1`.
pub fn alternating_geometric(k: usize, order: usize) -> Result<QSeries> {
    if k == 0 {
        return Err(Error::InvalidParameters("1/(1+q^0) = 1/2 is not integral"));
    }
    let mut coeffs = alloc::vec![BigInt::from(0); order + 1];
    for (j, e) in (0..=order).step_by(k).enumerate() {
        coeffs[e] = if j % 2 == 0 { 1.into() } else { (-1).into() };
    }
    super::make_series(coeffs, order)
}
