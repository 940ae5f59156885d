//! Exact integer arithmetic on truncated series.
//!
//! [`TruncSeries`] is a univariate Laurent series known up to a tracked
//! order; [`MultiPoly`] is a sparse multivariate polynomial truncated to
//! per-variable degree caps. Both are generic over the coefficient ring.

mod multivariate;
mod univariate;

pub use multivariate::{Monomial, MultiPoly, UNCAPPED};
pub use univariate::TruncSeries;
