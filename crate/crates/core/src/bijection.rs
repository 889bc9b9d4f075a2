//! Weight-preserving bijection between 2-colored Rogers-Ramanujan partitions
//! and `D_{2,2}` overpartitions.
//!
//! Both families have distinct part values and both carry exactly one free
//! bit per maximal run of consecutive values. On the colored side that bit is
//! the color of the run's smallest part (the rest alternate). On the
//! overpartition side every part but the smallest of a run is forced to be
//! overlined, leaving the smallest part free. Black pairs with overlined, so a
//! red 1 maps to a plain 1 and the no-red-1 family lands on `D_{2,1}`.

use alloc::vec::Vec;

use crate::partitions::{
    is_valid_2crr, is_valid_d, Color, ColoredPart, ColoredPartition, OverPart, Overpartition,
};
use crate::{Error, Result};

/// Splits distinct values into maximal runs of consecutive integers. Runs come
/// back largest first, each run in decreasing order.
pub fn runs(values: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in sorted {
        match out.last_mut() {
            Some(run) if run.last() == Some(&(v + 1)) => run.push(v),
            _ => out.push(alloc::vec![v]),
        }
    }
    out
}

pub fn colored_to_over(p: &ColoredPartition) -> Result<Overpartition> {
    if !is_valid_2crr(p) {
        return Err(Error::InvalidPartition(
            "not a 2-colored Rogers-Ramanujan partition",
        ));
    }
    let parts = p.parts();
    let image = parts
        .iter()
        .enumerate()
        .map(|(idx, part)| {
            let run_continues = parts
                .get(idx + 1)
                .is_some_and(|next| next.value + 1 == part.value);
            OverPart {
                value: part.value,
                overlined: run_continues || part.color == Color::Black,
            }
        })
        .collect();
    Overpartition::new(image)
}

pub fn over_to_colored(p: &Overpartition) -> Result<ColoredPartition> {
    if !is_valid_d(p, 2, 2)? {
        return Err(Error::InvalidPartition("not a D(2,2) overpartition"));
    }
    let parts = p.parts();
    let mut image: Vec<ColoredPart> = Vec::with_capacity(parts.len());
    // walk upward so each run's smallest part fixes the colors above it
    for (idx, part) in parts.iter().enumerate().rev() {
        let starts_run = parts
            .get(idx + 1)
            .is_none_or(|below| below.value + 1 != part.value);
        let color = if starts_run {
            if part.overlined {
                Color::Black
            } else {
                Color::Red
            }
        } else {
            image
                .last()
                .map(|below| below.color.other())
                .unwrap_or(Color::Black)
        };
        image.push(ColoredPart {
            value: part.value,
            color,
        });
    }
    image.reverse();
    ColoredPartition::new(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn run_examples() {
        assert_eq!(runs(&[5, 4, 3, 1]), vec![vec![5, 4, 3], vec![1]]);
        assert_eq!(runs(&[6]), vec![vec![6]]);
        assert_eq!(runs(&[4, 2]), vec![vec![4], vec![2]]);
        assert_eq!(runs(&[1, 3, 2, 7]), vec![vec![7], vec![3, 2, 1]]);
        assert!(runs(&[]).is_empty());
    }

    #[test]
    fn forward_examples() {
        let p = ColoredPartition::new(vec![
            ColoredPart::black(3),
            ColoredPart::red(2),
            ColoredPart::black(1),
        ])
        .unwrap();
        assert_eq!(
            colored_to_over(&p).unwrap().parts(),
            &[
                OverPart::overlined(3),
                OverPart::overlined(2),
                OverPart::overlined(1)
            ]
        );
        let p = ColoredPartition::new(vec![ColoredPart::red(6)]).unwrap();
        assert_eq!(colored_to_over(&p).unwrap().parts(), &[OverPart::plain(6)]);
        let p = ColoredPartition::new(vec![ColoredPart::black(4), ColoredPart::black(2)]).unwrap();
        assert_eq!(
            colored_to_over(&p).unwrap().parts(),
            &[OverPart::overlined(4), OverPart::overlined(2)]
        );
        assert_eq!(
            colored_to_over(&ColoredPartition::empty()).unwrap(),
            Overpartition::empty()
        );
    }

    #[test]
    fn inverse_examples() {
        let o = Overpartition::new(vec![OverPart::overlined(2), OverPart::plain(1)]).unwrap();
        assert_eq!(
            over_to_colored(&o).unwrap().parts(),
            &[ColoredPart::black(2), ColoredPart::red(1)]
        );
        let o = Overpartition::new(vec![OverPart::plain(3)]).unwrap();
        assert_eq!(over_to_colored(&o).unwrap().parts(), &[ColoredPart::red(3)]);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let bad =
            ColoredPartition::new(vec![ColoredPart::black(3), ColoredPart::black(2)]).unwrap();
        assert!(matches!(
            colored_to_over(&bad),
            Err(Error::InvalidPartition(_))
        ));
        let bad = Overpartition::new(vec![OverPart::plain(2), OverPart::plain(1)]).unwrap();
        assert!(matches!(
            over_to_colored(&bad),
            Err(Error::InvalidPartition(_))
        ));
    }
}
