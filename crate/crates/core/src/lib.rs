//! Counting, enumeration and bijections for pattern-avoiding integer
//! compositions and multiset permutations.
//!
//! Two independent routes produce every count:
//!
//! * [`avoidance`] enumerates words and tests containment directly;
//! * [`genfun`] extracts coefficients from closed-form generating functions
//!   using exact integer series arithmetic from [`series`].
//!
//! [`bijection`] maps permutations of one multiset to permutations of a
//! rearranged multiset while preserving avoidance of increasing patterns, and
//! [`asymptotics`] gives the growth constants of the composition counts.
//!
//! Series and polynomials are generic over the coefficient ring
//! ([`scalar::Coefficient`]) and the asymptotics over the float type
//! ([`scalar::Real`]); the aliases below fix the usual choices.
//!
//! ```
//! use patavoid::avoidance::count_avoiding_compositions;
//! use patavoid::genfun::composition_counts;
//! use patavoid::{CompositionQuery, Pattern};
//!
//! let p: Pattern = "231".parse()?;
//! let brute = count_avoiding_compositions(&CompositionQuery::positive(10), &p)?;
//! let series = composition_counts(10, 10)?;
//! assert_eq!(brute, series[10]);
//! # Ok::<(), patavoid::Error>(())
//! ```

pub mod asymptotics;
pub mod avoidance;
pub mod bijection;
pub mod error;
pub mod genfun;
pub mod scalar;
pub mod series;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
pub use types::{CompositionQuery, Letter, MultisetSpec, PartsFlavor, Pattern, Word};

/// Univariate series with arbitrary-precision coefficients.
pub type Series = series::TruncSeries<num_bigint::BigInt>;
/// Multivariate polynomial with arbitrary-precision coefficients.
pub type Poly = series::MultiPoly<num_bigint::BigInt>;
/// Univariate series over `i64`, for small orders where overflow is ruled out.
pub type SmallSeries = series::TruncSeries<i64>;
/// Growth estimate in double precision.
pub type Growth = asymptotics::GrowthEstimate<f64>;
