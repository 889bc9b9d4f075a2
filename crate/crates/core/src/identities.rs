//! Both sides of the generating-function identities for 2-colored
//! Rogers-Ramanujan partitions, compared coefficient by coefficient.
//!
//! Product sides are q-Pochhammer quotients, sum sides are evaluated term by
//! term from their q-hypergeometric form, and every count column comes from
//! [`crate::partitions`]. Nothing here is randomized.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::partitions::{
    build_xq_table, count_2crr, count_2crr_no_red1, count_2crr_no_red1_table, count_2crr_table,
    count_c_table, count_d,
};
use crate::qseries::{
    alternating_geometric, poch_finite, poch_inf, poch_multi, theta_sum, Monomial, QSeries, Sign,
    XQSeries,
};
use crate::{Error, Result};

/// Largest weight any verification enumerates exhaustively.
pub const ENUMERATION_CAP: usize = 30;

/// Largest weight the `D_{k,a}` enumerations run to inside [`verify_thm32`].
pub const OVERPARTITION_CAP: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MismatchIndex {
    /// Coefficient of `q^n`.
    Coefficient(usize),
    /// Coefficient of `x^parts q^weight`.
    Bivariate { parts: usize, weight: usize },
}

impl fmt::Display for MismatchIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MismatchIndex::Coefficient(n) => write!(f, "{n}"),
            MismatchIndex::Bivariate { parts, weight } => write!(f, "{parts}:{weight}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: MismatchIndex,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of one coefficient-wise comparison. The status is derived from
/// `first_mismatch`, so a passing report never carries one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    /// Truncation order `N`, or the largest weight compared.
    pub order: usize,
    /// `M` for bivariate checks.
    pub max_parts: Option<usize>,
    pub first_mismatch: Option<Mismatch>,
    /// Whether some compared coefficient past the constant term was nonzero.
    pub nonzero_checked: bool,
}

impl VerificationReport {
    pub fn status(&self) -> Status {
        if self.first_mismatch.is_none() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// A pass that never compared a nonzero coefficient beyond `q^0`.
    pub fn is_vacuous(&self) -> bool {
        !self.nonzero_checked
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} order={}", self.identity, self.order)?;
        if let Some(m) = self.max_parts {
            write!(f, " m={m}")?;
        }
        write!(f, " {}", self.status())?;
        if let Some(mm) = &self.first_mismatch {
            write!(f, " at {}: lhs={} rhs={}", mm.index, mm.lhs, mm.rhs)?;
        }
        Ok(())
    }
}

/// Compares two coefficient lists of equal length.
pub fn compare_coeffs(
    identity: &str,
    lhs: &[BigInt],
    rhs: &[BigInt],
) -> Result<VerificationReport> {
    if lhs.len() != rhs.len() || lhs.is_empty() {
        return Err(Error::OrderMismatch {
            left: lhs.len().saturating_sub(1),
            right: rhs.len().saturating_sub(1),
        });
    }
    let first_mismatch = lhs
        .iter()
        .zip(rhs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(n, (a, b))| Mismatch {
            index: MismatchIndex::Coefficient(n),
            lhs: a.clone(),
            rhs: b.clone(),
        });
    let nonzero_checked = lhs[1..].iter().chain(&rhs[1..]).any(|c| !c.is_zero());
    Ok(VerificationReport {
        identity: identity.into(),
        order: lhs.len() - 1,
        max_parts: None,
        first_mismatch,
        nonzero_checked,
    })
}

pub fn compare_series(identity: &str, lhs: &QSeries, rhs: &QSeries) -> Result<VerificationReport> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch {
            left: lhs.order(),
            right: rhs.order(),
        });
    }
    compare_coeffs(identity, lhs.coeffs(), rhs.coeffs())
}

// Operands below are always built at one shared order.
fn mul(a: &QSeries, b: &QSeries) -> QSeries {
    a.checked_mul(b).expect("operands share a truncation order")
}

fn poch(arg: Monomial, base: usize, order: usize) -> QSeries {
    poch_inf(arg, base, order).expect("argument is never +q^0")
}

/// `(-q;q)_inf / (q;q)_inf`, the overpartition generating function.
fn overpartition_gf(order: usize) -> QSeries {
    let denom = poch(Monomial::q(1), 1, order)
        .invert()
        .expect("(q;q)_inf starts with 1");
    mul(&poch(Monomial::neg_q(1), 1, order), &denom)
}

fn residue_product(residues: &[usize], order: usize) -> QSeries {
    let args: Vec<Monomial> = residues.iter().map(|&r| Monomial::q(r)).collect();
    let theta = poch_multi(&args, 4, order).expect("residues are positive");
    mul(&overpartition_gf(order), &theta)
}

/// `(-q)_inf (q^2, q^2, q^4; q^4)_inf / (q)_inf`.
pub fn product_side_thm13(order: usize) -> QSeries {
    residue_product(&[2, 2, 4], order)
}

/// `(-q)_inf (q, q^3, q^4; q^4)_inf / (q)_inf`.
pub fn product_side_thm32(order: usize) -> QSeries {
    residue_product(&[1, 3, 4], order)
}

// sum_{n>=0} (-1)^n [ q^{lead(n)} (-1;q)_n (-q^{n+1};q)_inf
//                    - q^{tail(n)} (-1;q)_{n+1} (-q^{n+2};q)_inf ]
//                  / ((q)_n (q^{n+1};q)_inf)
fn displayed_sum(order: usize, lead: fn(usize) -> usize, tail: fn(usize) -> usize) -> QSeries {
    let mut total = QSeries::zero(order);
    let mut n = 0;
    while lead(n) <= order || tail(n) <= order {
        let denom = mul(
            &poch_finite(Monomial::q(1), 1, n, order),
            &poch(Monomial::q(n + 1), 1, order),
        )
        .invert()
        .expect("denominator starts with 1");
        let sign = Sign::Minus.pow(n as i64).to_bigint();
        if lead(n) <= order {
            let num = mul(
                &poch_finite(Monomial::neg_q(0), 1, n, order),
                &poch(Monomial::neg_q(n + 1), 1, order),
            );
            let term = mul(&num, &denom).shift(lead(n)).scale(&sign);
            total = total.checked_add(&term).expect("same order");
        }
        if tail(n) <= order {
            let num = mul(
                &poch_finite(Monomial::neg_q(0), 1, n + 1, order),
                &poch(Monomial::neg_q(n + 2), 1, order),
            );
            let term = mul(&num, &denom).shift(tail(n)).scale(&sign);
            total = total.checked_sub(&term).expect("same order");
        }
        n += 1;
    }
    total
}

/// `R_1(1)` from its q-hypergeometric sum, term by term.
pub fn sum_side_r1(order: usize) -> QSeries {
    displayed_sum(order, |n| n * (2 * n + 1), |n| (n + 1) * (2 * n + 2))
}

/// `R_2(1)` from its q-hypergeometric sum, term by term.
pub fn sum_side_r2(order: usize) -> QSeries {
    displayed_sum(order, |n| n * (2 * n + 2), |n| (n + 1) * (2 * n + 1))
}

// 2 (-q)_inf/(q)_inf sum_{n>=0} (-1)^n q^{lead(n)}
//     ( 1/(1+q^n) - q^{extra(n)}/(1+q^{n+1}) )
// The n = 0 factor 1/(1+q^0) = 1/2 is cancelled against the leading 2 before
// anything is expanded, so all arithmetic stays integral.
fn simplified_sum(order: usize, lead: fn(usize) -> usize, extra: fn(usize) -> usize) -> QSeries {
    let two = BigInt::from(2);
    let mut inner = QSeries::zero(order);
    let mut n = 0;
    while lead(n) <= order {
        let first = if n == 0 {
            QSeries::one(order)
        } else {
            alternating_geometric(n, order).expect("n >= 1").scale(&two)
        };
        let second = alternating_geometric(n + 1, order)
            .expect("n + 1 >= 1")
            .shift(extra(n))
            .scale(&two);
        let bracket = first.checked_sub(&second).expect("same order");
        let term = bracket
            .shift(lead(n))
            .scale(&Sign::Minus.pow(n as i64).to_bigint());
        inner = inner.checked_add(&term).expect("same order");
        n += 1;
    }
    mul(&overpartition_gf(order), &inner)
}

pub fn simplified_sum_r1(order: usize) -> QSeries {
    simplified_sum(order, |n| n * (2 * n + 1), |n| 3 * n + 2)
}

pub fn simplified_sum_r2(order: usize) -> QSeries {
    simplified_sum(order, |n| n * (2 * n + 2), |n| n + 1)
}

/// `(-q)_inf/(q)_inf sum_{n in Z} (-1)^n q^{2n^2}`.
pub fn theta_form_r1(order: usize) -> QSeries {
    let theta = theta_sum(Sign::Minus, 2, order).expect("quadratic coefficient is 2");
    mul(&overpartition_gf(order), &theta)
}

fn to_series(counts: Vec<BigInt>, order: usize) -> QSeries {
    crate::qseries::make_series(counts, order).expect("one count per coefficient")
}

fn truncated(s: &QSeries, order: usize) -> Vec<BigInt> {
    s.coeffs()[..=order.min(s.order())].to_vec()
}

/// Product side of the colored-partition identity against the three sum
/// forms, the run-recurrence counts and (up to [`ENUMERATION_CAP`])
/// exhaustive enumeration.
pub fn verify_thm13(order: usize) -> Vec<VerificationReport> {
    let product = product_side_thm13(order);
    let enum_n = order.min(ENUMERATION_CAP);
    let enumerated: Vec<BigInt> = (0..=enum_n).map(|n| count_2crr(n, 1)).collect();
    let mut out = Vec::new();
    for (tag, rhs) in [
        ("thm13:product=sum", sum_side_r1(order)),
        ("thm13:product=simplified", simplified_sum_r1(order)),
        ("thm13:product=theta", theta_form_r1(order)),
        (
            "thm13:product=count",
            to_series(count_2crr_table(order, 1), order),
        ),
    ] {
        out.push(compare_series(tag, &product, &rhs).expect("same order"));
    }
    out.push(
        compare_coeffs(
            "thm13:product=enumeration",
            &truncated(&product, enum_n),
            &enumerated,
        )
        .expect("same length"),
    );
    out
}

/// The no-red-1 family against its product side and against `D_{2,1}`.
pub fn verify_thm32(order: usize) -> Vec<VerificationReport> {
    let product = product_side_thm32(order);
    let enum_n = order.min(OVERPARTITION_CAP);
    let no_red1: Vec<BigInt> = (0..=enum_n).map(count_2crr_no_red1).collect();
    let d21: Vec<BigInt> = (0..=enum_n)
        .map(|n| count_d(2, 1, n).expect("k >= a >= 1"))
        .collect();
    let head = truncated(&product, enum_n);
    [
        compare_series(
            "thm32:product=count",
            &product,
            &to_series(count_2crr_no_red1_table(order), order),
        ),
        compare_coeffs("thm32:product=no-red-1", &head, &no_red1),
        compare_coeffs("thm32:no-red-1=D[2,1]", &no_red1, &d21),
    ]
    .into_iter()
    .map(|r| r.expect("same order"))
    .collect()
}

/// Displayed sums against their simplified forms, and `R_2(1)` against the
/// counts of partitions with parts at least 2.
pub fn verify_sum_sides(order: usize) -> Vec<VerificationReport> {
    let r2 = sum_side_r2(order);
    [
        compare_series(
            "sumsides:R1=simplified",
            &sum_side_r1(order),
            &simplified_sum_r1(order),
        ),
        compare_series("sumsides:R2=simplified", &r2, &simplified_sum_r2(order)),
        compare_series(
            "sumsides:R2=count",
            &r2,
            &to_series(count_2crr_table(order, 2), order),
        ),
    ]
    .into_iter()
    .map(|r| r.expect("same order"))
    .collect()
}

fn compare_tables(
    identity: &str,
    lhs: &XQSeries,
    rhs: &XQSeries,
    weight_limit: Option<usize>,
) -> VerificationReport {
    let (max_parts, order) = lhs.dims();
    let mut first_mismatch = None;
    let mut nonzero_checked = false;
    'scan: for m in 0..=max_parts {
        for n in 0..=weight_limit.unwrap_or(order) {
            let (a, b) = (lhs.get(m, n), rhs.get(m, n));
            nonzero_checked |= (m, n) != (0, 0) && !(a.is_zero() && b.is_zero());
            if a != b {
                first_mismatch = Some(Mismatch {
                    index: MismatchIndex::Bivariate {
                        parts: m,
                        weight: n,
                    },
                    lhs: a.clone(),
                    rhs: b.clone(),
                });
                break 'scan;
            }
        }
    }
    VerificationReport {
        identity: identity.into(),
        order,
        max_parts: Some(max_parts),
        first_mismatch,
        nonzero_checked,
    }
}

/// Checks, on the tables `r1` (parts `>= 1`) and `r2` (parts `>= 2`):
///
/// - `R_1(x) - R_2(x) = xq R_1(xq) + xq R_2(xq)`
/// - `R_2(x) = R_1(xq)`
/// - `r_1(m,n) - r_2(m,n) = r_1(m-1,n-m) + r_2(m-1,n-m)` read off the tables
///   directly, without the series operations.
///
/// Only weights `n <= N - M` are compared.
pub fn check_functional_equations(r1: &XQSeries, r2: &XQSeries) -> Result<Vec<VerificationReport>> {
    let difference = r1.checked_sub(r2)?;
    let shifted = r1.xq_shift();
    let (max_parts, order) = r1.dims();
    let window = order.checked_sub(max_parts);
    let limit = window.unwrap_or(0);
    let rhs = shifted
        .xq_mul_xq()
        .checked_add(&r2.xq_shift().xq_mul_xq())?;

    // m = 0 rows vanish on the left: the empty partition is in both families
    let recurrence_rhs = XQSeries::from_fn(max_parts, order, |m, n| {
        if m >= 1 && n >= m {
            r1.get(m - 1, n - m) + r2.get(m - 1, n - m)
        } else {
            BigInt::zero()
        }
    });

    let mut reports = alloc::vec![
        compare_tables("funceq:difference", &difference, &rhs, Some(limit)),
        compare_tables("funceq:shift", r2, &shifted, Some(limit)),
        compare_tables(
            "funceq:recurrence",
            &difference,
            &recurrence_rhs,
            Some(limit)
        ),
    ];
    if window.is_none() {
        // N < M leaves nothing uncorrupted by truncation to compare
        for r in &mut reports {
            r.nonzero_checked = false;
        }
    }
    Ok(reports)
}

/// Builds `R_1` and `R_2` part/weight tables by enumeration and runs
/// [`check_functional_equations`] on them.
pub fn verify_functional_equations(max_parts: usize, order: usize) -> Vec<VerificationReport> {
    let r1 = build_xq_table(1, max_parts, order);
    let r2 = build_xq_table(2, max_parts, order);
    check_functional_equations(&r1, &r2).expect("tables share a shape")
}

/// Jacobi triple product with `q -> q^2` and `z = sign q^shift`:
/// `sum_n sign^n q^{2n^2 + shift n}` against
/// `prod (1 - q^{4n+4})(1 + z q^{4n+2})(1 + z^{-1} q^{4n+2})`.
pub fn verify_jtp(sign: Sign, shift: i64, order: usize) -> Result<VerificationReport> {
    verify_jtp_with_base(sign, shift, 2, order)
}

/// [`verify_jtp`] for `q -> q^base`. Needs `|shift| <= base` so that no
/// negative exponent appears; `|shift| = base` with `sign = -1` makes both
/// sides vanish and is rejected too.
pub fn verify_jtp_with_base(
    sign: Sign,
    shift: i64,
    base: usize,
    order: usize,
) -> Result<VerificationReport> {
    let unsupported = Error::UnsupportedSpecialization {
        sign: sign.as_i8(),
        shift,
        base,
    };
    let b = base as i64;
    if base == 0 || shift.abs() > b || (shift.abs() == b && sign == Sign::Minus) {
        return Err(unsupported);
    }

    let mut lhs = alloc::vec![BigInt::zero(); order + 1];
    let mut n: i64 = 0;
    loop {
        let mut any = false;
        for m in if n == 0 {
            alloc::vec![0]
        } else {
            alloc::vec![n, -n]
        } {
            let e = b * m * m + shift * m;
            if e <= order as i64 {
                any = true;
                lhs[e as usize] += sign.pow(m).to_bigint();
            }
        }
        // exponents grow in |n| once |n| >= 1
        if !any && n >= 1 {
            break;
        }
        n += 1;
    }
    let lhs = crate::qseries::make_series(lhs, order)?;

    let flip = match sign {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
    };
    let step = 2 * base;
    let rhs = poch_inf(Monomial::q(step), step, order)?
        .checked_mul(&poch_inf(
            Monomial::new(flip, (b + shift) as usize),
            step,
            order,
        )?)?
        .checked_mul(&poch_inf(
            Monomial::new(flip, (b - shift) as usize),
            step,
            order,
        )?)?;

    let tag = format!("jtp:z={}q^{},q->q^{}", sign.as_i8(), shift, base);
    compare_series(&tag, &lhs, &rhs)
}

/// `C_{k,i}(n) = D_{k,i}(n)` for every `n <= n_max`.
pub fn verify_cd_equality(k: usize, i: usize, n_max: usize) -> Result<VerificationReport> {
    let c = count_c_table(k, i, n_max)?;
    let d = (0..=n_max)
        .map(|n| count_d(k, i, n))
        .collect::<Result<Vec<_>>>()?;
    compare_coeffs(&format!("cd-equal:C[{k},{i}]=D[{k},{i}]"), &c, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(s: &QSeries, upto: usize) -> Vec<i64> {
        s.coeffs()[..=upto]
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn product_side_head() {
        let p = product_side_thm13(10);
        assert_eq!(ints(&p, 6), [1, 2, 2, 4, 6, 8, 12]);
        let p = product_side_thm32(10);
        assert_eq!(ints(&p, 3), [1, 1, 2, 3]);
    }

    #[test]
    fn r2_series_head() {
        assert_eq!(
            ints(&sum_side_r2(10), 10),
            [1, 0, 2, 2, 2, 4, 6, 8, 10, 14, 18]
        );
        assert_eq!(ints(&simplified_sum_r2(10), 10), ints(&sum_side_r2(10), 10));
    }

    #[test]
    fn r1_forms_small() {
        assert_eq!(ints(&sum_side_r1(0), 0), [1]);
        assert_eq!(ints(&simplified_sum_r1(0), 0), [1]);
        assert_eq!(ints(&theta_form_r1(3), 1), [1, 2]);
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let a = vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)];
        let b = vec![BigInt::from(1), BigInt::from(5), BigInt::from(4)];
        let r = compare_coeffs("t", &a, &b).unwrap();
        assert_eq!(r.status(), Status::Fail);
        let mm = r.first_mismatch.unwrap();
        assert_eq!(mm.index, MismatchIndex::Coefficient(1));
        assert_eq!((mm.lhs, mm.rhs), (BigInt::from(2), BigInt::from(5)));
        assert!(compare_coeffs("t", &a, &b[..2]).is_err());
    }

    #[test]
    fn vacuous_window_is_flagged() {
        let r = compare_series("t", &product_side_thm13(0), &sum_side_r1(0)).unwrap();
        assert!(r.passed());
        assert!(r.is_vacuous());
        let r = compare_series("t", &product_side_thm13(3), &sum_side_r1(3)).unwrap();
        assert!(r.passed() && !r.is_vacuous());
    }

    #[test]
    fn functional_equations_small() {
        // r_1(1,1) = 2, r_2(1,1) = 0; R_2 has nothing below weight 2
        let reports = verify_functional_equations(1, 2);
        assert!(reports.iter().all(VerificationReport::passed));
        assert!(!reports[0].is_vacuous() && !reports[2].is_vacuous());
        assert!(reports[1].is_vacuous());
        for r in verify_functional_equations(3, 2) {
            assert!(r.passed() && r.is_vacuous(), "{r}");
        }
    }

    #[test]
    fn corrupted_table_fails() {
        let r1 = build_xq_table(1, 4, 12);
        let mut r2 = build_xq_table(2, 4, 12);
        let bumped = r2.get(2, 7) + 1;
        r2.set(2, 7, bumped);
        let reports = check_functional_equations(&r1, &r2).unwrap();
        assert!(reports.iter().all(|r| !r.passed()));
        let mm = reports[1].first_mismatch.as_ref().unwrap();
        assert_eq!(
            mm.index,
            MismatchIndex::Bivariate {
                parts: 2,
                weight: 7
            }
        );
        assert!(check_functional_equations(&r1, &build_xq_table(2, 3, 12)).is_err());
    }

    #[test]
    fn jtp_specializations() {
        for sign in [Sign::Plus, Sign::Minus] {
            for shift in [-1, 0, 1] {
                let r = verify_jtp(sign, shift, 60).unwrap();
                assert!(r.passed() && !r.is_vacuous(), "{r}");
            }
        }
        assert!(verify_jtp_with_base(Sign::Plus, 0, 1, 60).unwrap().passed());
        assert!(verify_jtp_with_base(Sign::Plus, 2, 2, 60).unwrap().passed());
        assert!(matches!(
            verify_jtp(Sign::Minus, 2, 10),
            Err(Error::UnsupportedSpecialization { .. })
        ));
        assert!(verify_jtp(Sign::Plus, 3, 10).is_err());
        assert!(verify_jtp_with_base(Sign::Plus, 0, 0, 10).is_err());
    }

    #[test]
    fn cd_small() {
        assert!(verify_cd_equality(2, 2, 10).unwrap().passed());
        assert!(verify_cd_equality(3, 3, 10).unwrap().passed());
        assert!(verify_cd_equality(3, 4, 10).is_err());
    }
}
