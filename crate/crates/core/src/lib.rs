//! Exact truncated q-series arithmetic and the combinatorics of 2-colored
//! Rogers-Ramanujan partitions.
//!
//! A 2-colored Rogers-Ramanujan partition splits its parts into a black and a
//! red class. Parts of the same color differ by at least two and no value is
//! used in both colors. This crate provides:
//!
//! - [`qseries`]: integer power series modulo `q^{N+1}`, q-Pochhammer products,
//!   bilateral theta sums and the bivariate `x`/`q` tables used for
//!   functional equations.
//! - [`partitions`]: validators, backtracking enumerators and dynamic
//!   programming counters for colored partitions and the `D_{k,a}` / `C_{k,i}`
//!   overpartition families.
//! - [`bijection`]: the run-based correspondence between colored partitions and
//!   `D_{2,2}` overpartitions.
//! - [`identities`]: both sides of every generating-function identity, checked
//!   coefficient by coefficient into [`identities::VerificationReport`]s.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bijection;
mod error;
pub mod identities;
pub mod partitions;
pub mod qseries;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
