//! Exact power series in `q` truncated at a fixed order, the q-Pochhammer
//! products and theta sums built from them, and bivariate `x`/`q` tables.
//!
//! Every [`QSeries`] carries its truncation order `N`; arithmetic is modulo
//! `q^{N+1}` and binary operations refuse operands of different orders rather
//! than silently re-truncating.

mod bivariate;
mod pochhammer;
mod series;

pub use bivariate::XQSeries;
pub use pochhammer::{
    alternating_geometric, poch_finite, poch_inf, poch_multi, theta_sum, Monomial, Sign,
};
pub use series::{make_series, QSeries};
