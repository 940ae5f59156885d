//! Scalar traits for the generic numeric code.
//!
//! Series and polynomial arithmetic is written once over any signed integer
//! ring ([`Coefficient`]); the asymptotic formulas are written over any IEEE
//! float ([`Real`]).

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed};

/// Exact integer coefficient ring: `BigInt` for counting, fixed-width
/// integers when the caller knows the values fit.
pub trait Coefficient: Clone + Debug + Signed + Integer + Send + Sync + 'static {}

impl<T> Coefficient for T where T: Clone + Debug + Signed + Integer + Send + Sync + 'static {}

/// Floating point scalar used by the asymptotics.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {}

pub(crate) fn real<F: Real>(v: f64) -> F {
    F::from_f64(v).expect("f64 constant representable")
}
