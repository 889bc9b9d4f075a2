use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::qseries::XQSeries;
use crate::{Error, Result};

/// Black sorts before red wherever a tie has to be broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Black,
    Red,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::Red,
            Color::Red => Color::Black,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPart {
    pub value: usize,
    pub color: Color,
}

impl ColoredPart {
    pub const fn black(value: usize) -> Self {
        ColoredPart {
            value,
            color: Color::Black,
        }
    }

    pub const fn red(value: usize) -> Self {
        ColoredPart {
            value,
            color: Color::Red,
        }
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.color {
            Color::Black => write!(f, "{}", self.value),
            Color::Red => write!(f, "{}'", self.value),
        }
    }
}

/// Parts with a color each, largest first.
///
/// Construction only enforces positive parts in non-increasing order; the
/// 2-colored Rogers-Ramanujan conditions are checked by [`is_valid_2crr`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColoredPartition {
    parts: Vec<ColoredPart>,
}

impl ColoredPartition {
    pub fn new(parts: Vec<ColoredPart>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) || parts.windows(2).any(|w| w[0].value < w[1].value) {
            return Err(Error::Unsorted);
        }
        Ok(ColoredPartition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[ColoredPart] {
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

    /// `(black, red)` part counts.
    pub fn color_counts(&self) -> (usize, usize) {
        let red = self.parts.iter().filter(|p| p.color == Color::Red).count();
        (self.parts.len() - red, red)
    }

    pub fn swap_colors(&self) -> ColoredPartition {
        ColoredPartition {
            parts: self
                .parts
                .iter()
                .map(|p| ColoredPart {
                    value: p.value,
                    color: p.color.other(),
                })
                .collect(),
        }
    }

    pub fn has_red_one(&self) -> bool {
        self.parts.contains(&ColoredPart::red(1))
    }
}

impl fmt::Display for ColoredPartition {
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

/// Same-color neighbours differ by at least two and no value appears in both
/// colors.
pub fn is_valid_2crr(p: &ColoredPartition) -> bool {
    let distinct = p.parts.windows(2).all(|w| w[0].value != w[1].value);
    let gapped = |color: Color| {
        let mut prev: Option<usize> = None;
        p.parts.iter().filter(|q| q.color == color).all(|q| {
            let ok = prev.is_none_or(|v| v >= q.value + 2);
            prev = Some(q.value);
            ok
        })
    };
    distinct && gapped(Color::Black) && gapped(Color::Red)
}

/// Visits every valid partition of `n` with all parts `>= min_part`, in
/// canonical order: larger leading parts first, black before red.
pub fn for_each_2crr(n: usize, min_part: usize, mut visit: impl FnMut(&[ColoredPart])) {
    fn go(
        rem: usize,
        below: usize,
        min_part: usize,
        stack: &mut Vec<ColoredPart>,
        visit: &mut dyn FnMut(&[ColoredPart]),
    ) {
        if rem == 0 {
            visit(stack);
            return;
        }
        let top = rem.min(below.saturating_sub(1));
        if top < min_part {
            return;
        }
        // largest reachable sum with distinct values in [min_part, top]
        let room = (top - min_part + 1) * (top + min_part) / 2;
        if room < rem {
            return;
        }
        for v in (min_part..=top).rev() {
            for color in [Color::Black, Color::Red] {
                // a neighbour one above must carry the other color
                if let Some(last) = stack.last() {
                    if last.value == v + 1 && last.color == color {
                        continue;
                    }
                }
                stack.push(ColoredPart { value: v, color });
                go(rem - v, v, min_part, stack, visit);
                stack.pop();
            }
        }
    }
    go(n, n + 1, min_part.max(1), &mut Vec::new(), &mut visit);
}

pub fn enumerate_2crr(n: usize, min_part: usize) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for_each_2crr(n, min_part, |parts| {
        out.push(ColoredPartition {
            parts: parts.to_vec(),
        })
    });
    out
}

/// Number of valid partitions of `n` with parts `>= min_part`, by enumeration.
pub fn count_2crr(n: usize, min_part: usize) -> BigInt {
    let mut count = 0u64;
    for_each_2crr(n, min_part, |_| count += 1);
    count.into()
}

/// As [`count_2crr`], restricted to exactly `m` parts.
pub fn refined_count_2crr(m: usize, n: usize, min_part: usize) -> BigInt {
    let mut count = 0u64;
    for_each_2crr(n, min_part, |parts| count += u64::from(parts.len() == m));
    count.into()
}

/// Valid partitions of `n` in which a part 1, if present, is black.
pub fn count_2crr_no_red1(n: usize) -> BigInt {
    let mut count = 0u64;
    for_each_2crr(n, 1, |parts| {
        count += u64::from(parts.last() != Some(&ColoredPart::red(1)))
    });
    count.into()
}

/// `[m][n]` = partitions of weight `n` with `m` parts, all `>= min_part`.
/// Built by enumeration.
pub fn build_xq_table(min_part: usize, max_parts: usize, order: usize) -> XQSeries {
    let mut table = XQSeries::zero(max_parts, order);
    for n in 0..=order {
        let mut by_parts = vec![0u64; max_parts + 1];
        for_each_2crr(n, min_part, |parts| {
            if let Some(c) = by_parts.get_mut(parts.len()) {
                *c += 1;
            }
        });
        for (m, c) in by_parts.into_iter().enumerate() {
            table.set(m, n, c.into());
        }
    }
    table
}

// Within a maximal run of consecutive values the colors alternate, so a run
// has exactly two colorings (one if it starts at a forced black 1). Scanning
// values upward, `open[s]` holds the weighted sets of sum `s` that contain
// the previous value, `closed[s]` those that do not.
fn run_dp(n_max: usize, min_part: usize, black_one_only: bool) -> Vec<BigInt> {
    let mut open = vec![BigInt::zero(); n_max + 1];
    let mut closed = vec![BigInt::zero(); n_max + 1];
    closed[0] = 1.into();
    for v in min_part.max(1)..=n_max {
        let fresh_weight: u32 = if black_one_only && v == 1 { 1 } else { 2 };
        let mut next_open = vec![BigInt::zero(); n_max + 1];
        for s in 0..=n_max - v {
            let extend: BigInt = &open[s] + &closed[s] * fresh_weight;
            if !extend.is_zero() {
                next_open[s + v] = extend;
            }
        }
        for s in 0..=n_max {
            let o = core::mem::take(&mut open[s]);
            closed[s] += o;
        }
        open = next_open;
    }
    open.iter().zip(closed).map(|(o, c)| o + c).collect()
}

/// Counts for `n = 0..=n_max` via the run-alternation recurrence.
pub fn count_2crr_table(n_max: usize, min_part: usize) -> Vec<BigInt> {
    run_dp(n_max, min_part, false)
}

/// [`count_2crr_no_red1`] for `n = 0..=n_max` via the run recurrence.
pub fn count_2crr_no_red1_table(n_max: usize) -> Vec<BigInt> {
    run_dp(n_max, 1, true)
}

/// Part-count refinement of [`count_2crr_table`] as an `x`/`q` table.
pub fn refined_count_2crr_table(min_part: usize, max_parts: usize, order: usize) -> XQSeries {
    let width = (max_parts + 1) * (order + 1);
    let at = |m: usize, s: usize| m * (order + 1) + s;
    let mut open = vec![BigInt::zero(); width];
    let mut closed = vec![BigInt::zero(); width];
    closed[0] = 1.into();
    for v in min_part.max(1)..=order {
        let mut next_open = vec![BigInt::zero(); width];
        for m in 0..max_parts {
            for s in 0..=order - v {
                let extend: BigInt = &open[at(m, s)] + &closed[at(m, s)] * 2u32;
                if !extend.is_zero() {
                    next_open[at(m + 1, s + v)] = extend;
                }
            }
        }
        for (c, o) in closed.iter_mut().zip(open.iter_mut()) {
            *c += core::mem::take(o);
        }
        open = next_open;
    }
    XQSeries::from_fn(max_parts, order, |m, s| &open[at(m, s)] + &closed[at(m, s)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn cp(parts: &[(usize, char)]) -> ColoredPartition {
        ColoredPartition::new(
            parts
                .iter()
                .map(|&(v, c)| {
                    if c == 'r' {
                        ColoredPart::red(v)
                    } else {
                        ColoredPart::black(v)
                    }
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_2crr(&cp(&[(3, 'b'), (2, 'r'), (1, 'b')])));
        assert!(!is_valid_2crr(&cp(&[(3, 'b'), (2, 'b')])));
        assert!(!is_valid_2crr(&cp(&[(2, 'b'), (2, 'r')])));
        assert!(is_valid_2crr(&cp(&[(5, 'r'), (3, 'r'), (1, 'r')])));
        assert!(is_valid_2crr(&ColoredPartition::empty()));
    }

    #[test]
    fn constructor_rejects_unsorted() {
        assert_eq!(
            ColoredPartition::new(vec![ColoredPart::black(1), ColoredPart::black(3)]),
            Err(Error::Unsorted)
        );
        assert_eq!(
            ColoredPartition::new(vec![ColoredPart::red(0)]),
            Err(Error::Unsorted)
        );
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_2crr(0, 1), vec![ColoredPartition::empty()]);
        assert_eq!(enumerate_2crr(0, 5), vec![ColoredPartition::empty()]);
        assert_eq!(
            enumerate_2crr(3, 1),
            vec![
                cp(&[(3, 'b')]),
                cp(&[(3, 'r')]),
                cp(&[(2, 'b'), (1, 'r')]),
                cp(&[(2, 'r'), (1, 'b')]),
            ]
        );
        assert_eq!(enumerate_2crr(6, 1).len(), 12);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_2crr(5, 2), 4.into());
        assert_eq!(count_2crr(10, 2), 18.into());
        assert_eq!(refined_count_2crr(2, 6, 2), 4.into());
        assert_eq!(count_2crr_no_red1(3), 3.into());
        assert_eq!(count_2crr_no_red1(0), 1.into());
        assert_eq!(count_2crr_no_red1(2), 2.into());
    }

    #[test]
    fn xq_table_entries() {
        let r1 = build_xq_table(1, 4, 8);
        assert_eq!(r1.get(0, 0), &BigInt::from(1));
        assert_eq!(r1.get(1, 3), &BigInt::from(2));
        assert_eq!(build_xq_table(2, 4, 8).get(2, 6), &BigInt::from(4));
    }

    #[test]
    fn dp_matches_enumeration() {
        for j in 1..=3 {
            let dp = count_2crr_table(20, j);
            let en: Vec<BigInt> = (0..=20).map(|n| count_2crr(n, j)).collect();
            assert_eq!(dp, en, "min part {j}");
        }
        let dp = count_2crr_no_red1_table(20);
        let en: Vec<BigInt> = (0..=20).map(count_2crr_no_red1).collect();
        assert_eq!(dp, en);
        assert_eq!(refined_count_2crr_table(2, 5, 18), build_xq_table(2, 5, 18));
    }
}
