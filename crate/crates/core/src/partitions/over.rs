use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OverPart {
    pub value: usize,
    pub overlined: bool,
}

impl OverPart {
    pub const fn plain(value: usize) -> Self {
        OverPart {
            value,
            overlined: false,
        }
    }

    pub const fn overlined(value: usize) -> Self {
        OverPart {
            value,
            overlined: true,
        }
    }

    /// Whether `next` may directly follow `self` in canonical order.
    fn precedes(self, next: OverPart) -> bool {
        next.value < self.value || (next.value == self.value && !next.overlined)
    }
}

impl fmt::Display for OverPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            write!(f, "{}~", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Weakly decreasing parts where each value has at most one overlined copy.
///
/// The overlined copy of a value sorts ahead of its plain copies, so
/// `d_1 >= d_2 >= ...` also orders `v~` before `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Overpartition {
    parts: Vec<OverPart>,
}

impl Overpartition {
    pub fn new(parts: Vec<OverPart>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) || !parts.windows(2).all(|w| w[0].precedes(w[1])) {
            return Err(Error::Unsorted);
        }
        Ok(Overpartition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[OverPart] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|p| p.value).sum()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.iter().map(|p| p.value)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn check_family(k: usize, a: usize) -> Result<()> {
    if a >= 1 && k >= a {
        Ok(())
    } else {
        Err(Error::InvalidParameters(
            "family parameters need k >= a >= 1",
        ))
    }
}

// Gap rule between d_j and d_{j+k-1}.
fn gap_ok(upper: OverPart, lower: OverPart) -> bool {
    let need = if upper.overlined { 1 } else { 2 };
    upper.value >= lower.value + need
}

/// Membership in `D_{k,a}`: at most `a - 1` plain ones, and
/// `d_j - d_{j+k-1} >= 1` when `d_j` is overlined, `>= 2` otherwise.
pub fn is_valid_d(p: &Overpartition, k: usize, a: usize) -> Result<bool> {
    check_family(k, a)?;
    let plain_ones = p.parts.iter().filter(|q| **q == OverPart::plain(1)).count();
    let gaps = p.parts.windows(k).all(|w| gap_ok(w[0], w[k - 1]));
    Ok(plain_ones < a && gaps)
}

/// Visits every overpartition of `n` in canonical order, pruning with
/// `accept(prefix, candidate)` before a part is appended.
fn for_each_overpartition(
    n: usize,
    accept: &mut dyn FnMut(&[OverPart], OverPart) -> bool,
    visit: &mut dyn FnMut(&[OverPart]),
) {
    fn go(
        rem: usize,
        stack: &mut Vec<OverPart>,
        accept: &mut dyn FnMut(&[OverPart], OverPart) -> bool,
        visit: &mut dyn FnMut(&[OverPart]),
    ) {
        if rem == 0 {
            visit(stack);
            return;
        }
        let top = stack.last().map_or(rem, |p| p.value.min(rem));
        for v in (1..=top).rev() {
            for overlined in [true, false] {
                let part = OverPart {
                    value: v,
                    overlined,
                };
                if stack.last().is_some_and(|last| !last.precedes(part)) || !accept(stack, part) {
                    continue;
                }
                stack.push(part);
                go(rem - v, stack, accept, visit);
                stack.pop();
            }
        }
    }
    go(n, &mut Vec::new(), accept, visit);
}

/// All overpartitions of `n`, canonical order.
pub fn overpartitions(n: usize) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for_each_overpartition(n, &mut |_, _| true, &mut |parts| {
        out.push(Overpartition {
            parts: parts.to_vec(),
        })
    });
    out
}

fn for_each_d(k: usize, a: usize, n: usize, visit: &mut dyn FnMut(&[OverPart])) -> Result<()> {
    check_family(k, a)?;
    let mut accept = |prefix: &[OverPart], part: OverPart| {
        if part == OverPart::plain(1)
            && prefix.iter().filter(|q| **q == OverPart::plain(1)).count() + 1 >= a
        {
            return false;
        }
        // the only new (d_j, d_{j+k-1}) pair ends at the candidate
        match prefix.len().checked_sub(k - 1) {
            Some(j) if j < prefix.len() => gap_ok(prefix[j], part),
            Some(_) => gap_ok(part, part),
            None => true,
        }
    };
    for_each_overpartition(n, &mut accept, visit);
    Ok(())
}

/// Overpartitions of `n` counted by `D_{k,a}(n)`, canonical order.
pub fn enumerate_d(k: usize, a: usize, n: usize) -> Result<Vec<Overpartition>> {
    let mut out = Vec::new();
    for_each_d(k, a, n, &mut |parts| {
        out.push(Overpartition {
            parts: parts.to_vec(),
        })
    })?;
    Ok(out)
}

/// `D_{k,a}(n)` by exhaustive pruned enumeration.
pub fn count_d(k: usize, a: usize, n: usize) -> Result<BigInt> {
    let mut count = 0u64;
    for_each_d(k, a, n, &mut |_| count += 1)?;
    Ok(count.into())
}

/// Whether a plain part `v` is allowed in `C_{k,i}`.
fn c_admits_plain(k: usize, i: usize, v: usize) -> bool {
    if i == k {
        !v.is_multiple_of(k)
    } else {
        let r = v % (2 * k);
        r != 0 && r != i && r != 2 * k - i
    }
}

/// Whether an overlined part `v` is allowed in `C_{k,i}`. Only the `i = k`
/// family restricts overlined parts: none may be divisible by `k`.
fn c_admits_overlined(k: usize, i: usize, v: usize) -> bool {
    i != k || !v.is_multiple_of(k)
}

/// Membership in `C_{k,i}`.
pub fn is_valid_c(p: &Overpartition, k: usize, i: usize) -> Result<bool> {
    check_family(k, i)?;
    Ok(p.parts.iter().all(|q| {
        if q.overlined {
            c_admits_overlined(k, i, q.value)
        } else {
            c_admits_plain(k, i, q.value)
        }
    }))
}

/// `C_{k,i}(n)` for `n = 0..=n_max`, by multiplying in one part value at a
/// time: `(1 + q^v)` for an admissible overlined copy, `1/(1 - q^v)` for
/// admissible plain copies.
pub fn count_c_table(k: usize, i: usize, n_max: usize) -> Result<Vec<BigInt>> {
    check_family(k, i)?;
    let mut c = vec![BigInt::zero(); n_max + 1];
    c[0] = 1.into();
    for v in 1..=n_max {
        if c_admits_overlined(k, i, v) {
            for s in (v..=n_max).rev() {
                let (lo, hi) = c.split_at_mut(s);
                hi[0] += &lo[s - v];
            }
        }
        if c_admits_plain(k, i, v) {
            for s in v..=n_max {
                let (lo, hi) = c.split_at_mut(s);
                hi[0] += &lo[s - v];
            }
        }
    }
    Ok(c)
}

pub fn count_c(k: usize, i: usize, n: usize) -> Result<BigInt> {
    Ok(count_c_table(k, i, n)?.swap_remove(n))
}
