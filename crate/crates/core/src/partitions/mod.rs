//! Partition families: 2-colored Rogers-Ramanujan partitions and the
//! `D_{k,a}` / `C_{k,i}` overpartition families.
//!
//! Every family has an exhaustive backtracking enumerator. Colored partitions
//! and `C_{k,i}` also have dynamic-programming counters that reach far past
//! enumeration range; tests pin the two routes against each other.

mod colored;
mod over;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

pub use colored::{
    build_xq_table, count_2crr, count_2crr_no_red1, count_2crr_no_red1_table, count_2crr_table,
    enumerate_2crr, for_each_2crr, is_valid_2crr, refined_count_2crr, refined_count_2crr_table,
    Color, ColoredPart, ColoredPartition,
};
pub use over::{
    count_c, count_c_table, count_d, enumerate_d, is_valid_c, is_valid_d, overpartitions, OverPart,
    Overpartition,
};

use crate::Result;

/// A counted family of partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// All 2-colored Rogers-Ramanujan partitions.
    R,
    /// 2-colored Rogers-Ramanujan partitions with every part at least 2.
    R2,
    /// 2-colored Rogers-Ramanujan partitions without a red 1.
    R3,
    D {
        k: usize,
        a: usize,
    },
    C {
        k: usize,
        i: usize,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::R => f.write_str("R"),
            Family::R2 => f.write_str("R2"),
            Family::R3 => f.write_str("R3"),
            Family::D { k, a } => write!(f, "D[{k},{a}]"),
            Family::C { k, i } => write!(f, "C[{k},{i}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub family: Family,
    /// `values[n]` counts the family members of weight `n`.
    pub values: Vec<BigInt>,
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Counts for `n = 0..=n_max`. `D` goes through enumeration, so callers
/// should keep `n_max` at desk scale; the other families use recurrences.
pub fn count_table(family: Family, n_max: usize) -> Result<CountTable> {
    let values = match family {
        Family::R => count_2crr_table(n_max, 1),
        Family::R2 => count_2crr_table(n_max, 2),
        Family::R3 => count_2crr_no_red1_table(n_max),
        Family::D { k, a } => (0..=n_max)
            .map(|n| count_d(k, a, n))
            .collect::<Result<_>>()?,
        Family::C { k, i } => count_c_table(k, i, n_max)?,
    };
    Ok(CountTable { family, values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_start_at_one() {
        for family in [
            Family::R,
            Family::R2,
            Family::R3,
            Family::D { k: 3, a: 2 },
            Family::C { k: 3, i: 3 },
        ] {
            let t = count_table(family, 6).unwrap();
            assert_eq!(t.values[0], 1.into(), "{family}");
            assert_eq!(t.n_max(), 6);
        }
    }

    #[test]
    fn r2_table() {
        let t = count_table(Family::R2, 10).unwrap();
        let want: Vec<BigInt> = [1, 0, 2, 2, 2, 4, 6, 8, 10, 14, 18]
            .map(BigInt::from)
            .to_vec();
        assert_eq!(t.values, want);
    }

    #[test]
    fn bad_parameters_propagate() {
        assert!(count_table(Family::D { k: 1, a: 2 }, 3).is_err());
        assert!(count_table(Family::C { k: 2, i: 0 }, 3).is_err());
    }
}
