//! Command-line front end for `qpart-core`: count tables, identity
//! verification reports and the colored/overpartition bijection, rendered as
//! text, CSV or JSON.

pub mod cli;
pub mod format;
