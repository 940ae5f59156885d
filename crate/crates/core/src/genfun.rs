//! Closed-form generating functions for the avoider counts.
//!
//! The univariate series counts compositions of `n` with parts `<= k`
//! avoiding a fixed pattern of length three:
//!
//! ```text
//! f_k(x) = sum_{i=1..k} 1/(1 - x^i) prod_{j != i} (1 - x^i) / ((1 - x^(j-i)) (1 - x^i - x^j))
//! ```
//!
//! For `j < i` the factor `1 - x^(j-i)` has a negative exponent. It is
//! rewritten as `-x^(j-i) (1 - x^(i-j))`, so summand `i` becomes
//! `(-1)^(i-1) x^(i(i-1)/2)` times a power series whose denominators all have
//! constant term 1. [`GfTermPlan`] records that bookkeeping.
//!
//! The multivariate series `g_k(x_1..x_k)` has the number of `132`-avoiding
//! permutations of `1^{a_1} .. k^{a_k}` as the coefficient of
//! `x_1^{a_1} .. x_k^{a_k}`:
//!
//! ```text
//! g_k = sum_{i=1..k} x_i^(k-1) (1 - x_i)^(k-2) / prod_{j != i} (x_i - x_j)(1 - x_i - x_j)
//! ```
//!
//! Over the common denominator `A P`, with `A` the Vandermonde product and
//! `P = prod_{p<q} (1 - x_p - x_q)`, the numerator is a polynomial divisible
//! by `A`. The summands themselves are not polynomials after dividing by
//! `A`, so the whole numerator is assembled before the single division.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::{MultiPoly, TruncSeries};
use crate::types::MultisetSpec;

/// A factor of the form `1 - x^d` or `1 - x^i - x^j` (all exponents positive).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    OneMinusPow(u32),
    Trinomial(u32, u32),
}

impl Factor {
    pub fn series<C: Coefficient>(self, order: i64) -> TruncSeries<C> {
        let one = C::one();
        match self {
            Factor::OneMinusPow(d) => {
                TruncSeries::from_terms(&[(0, one.clone()), (i64::from(d), -one)], order)
            }
            Factor::Trinomial(i, j) => TruncSeries::from_terms(
                &[
                    (0, one.clone()),
                    (i64::from(i), -one.clone()),
                    (i64::from(j), -one),
                ],
                order,
            ),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::OneMinusPow(d) => write!(f, "(1 - x^{d})"),
            Factor::Trinomial(i, j) => write!(f, "(1 - x^{i} - x^{j})"),
        }
    }
}

/// Summand `i` of the truncated composition series, as
/// `sign * x^net_shift * prod(numerator) / prod(denominator)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfTermPlan {
    pub i: u32,
    pub sign: i8,
    pub net_shift: u64,
    pub numerator: Vec<Factor>,
    pub denominator: Vec<Factor>,
}

impl GfTermPlan {
    /// Plan for summand `i` when parts are bounded by `max_part`.
    pub fn new(i: u32, max_part: u32) -> Self {
        assert!(
            1 <= i && i <= max_part,
            "summand {i} outside 1..={max_part}"
        );
        let mut numerator = Vec::new();
        let mut denominator = vec![Factor::OneMinusPow(i)];
        let mut sign = 1i8;
        let mut net_shift = 0u64;
        for j in (1..=max_part).filter(|&j| j != i) {
            numerator.push(Factor::OneMinusPow(i));
            if j < i {
                // 1/(1 - x^(j-i)) = -x^(i-j) / (1 - x^(i-j))
                sign = -sign;
                net_shift += u64::from(i - j);
            }
            denominator.push(Factor::OneMinusPow(i.abs_diff(j)));
            denominator.push(Factor::Trinomial(i.min(j), i.max(j)));
        }
        GfTermPlan {
            i,
            sign,
            net_shift,
            numerator,
            denominator,
        }
    }

    /// The summand as a series known up to `x^n_max`.
    pub fn evaluate<C: Coefficient>(&self, n_max: u32) -> Result<TruncSeries<C>> {
        let n_max = i64::from(n_max);
        let shift = self.net_shift as i64;
        if shift > n_max {
            return Ok(TruncSeries::zero(n_max));
        }
        let inner = n_max - shift;
        let mut acc = TruncSeries::<C>::one(inner);
        for f in &self.numerator {
            acc = &acc * &f.series(inner);
        }
        for f in &self.denominator {
            acc = acc.div(&f.series(inner))?;
        }
        let acc = acc.shift(shift);
        Ok(if self.sign < 0 { -acc } else { acc })
    }
}

/// All summand plans for parts bounded by `max_part`.
pub fn term_plans(max_part: u32) -> Vec<GfTermPlan> {
    (1..=max_part)
        .map(|i| GfTermPlan::new(i, max_part))
        .collect()
}

/// Generating function of compositions into positive parts `<= max_part`
/// avoiding any fixed pattern of length three, up to `x^n_max`.
///
/// Fails with [`Error::Consistency`] if the assembled series has a negative
/// exponent or a negative coefficient.
pub fn composition_series<C: Coefficient>(n_max: u32, max_part: u32) -> Result<TruncSeries<C>> {
    if max_part == 0 {
        return Err(Error::Domain("part bound must be at least 1".into()));
    }
    // no part of a composition of n exceeds n
    let k = max_part.min(n_max.max(1));
    let terms = term_plans(k)
        .par_iter()
        .map(|plan| plan.evaluate::<C>(n_max))
        .collect::<Result<Vec<_>>>()?;
    let total = terms
        .iter()
        .fold(TruncSeries::zero(i64::from(n_max)), |acc, t| &acc + t);
    if total.valuation().is_some_and(|v| v < 0) {
        return Err(Error::Consistency(format!(
            "composition series has a term x^{}",
            total.valuation().unwrap_or_default()
        )));
    }
    if !total.is_nonnegative() {
        return Err(Error::Consistency(
            "composition series has a negative coefficient".into(),
        ));
    }
    if total.order() < i64::from(n_max) {
        return Err(Error::Consistency(format!(
            "composition series only known to x^{}",
            total.order()
        )));
    }
    Ok(total)
}

/// [`composition_series`] over arbitrary-precision integers.
pub fn composition_gf(n_max: u32, max_part: u32) -> Result<TruncSeries<BigInt>> {
    composition_series(n_max, max_part)
}

/// Avoider counts `c(0, k), c(1, k), ..., c(n_max, k)`.
pub fn composition_counts(n_max: u32, max_part: u32) -> Result<Vec<BigUint>> {
    let gf = composition_gf(n_max, max_part)?;
    Ok(gf
        .coeffs_between(0, i64::from(n_max))
        .into_iter()
        .map(|c| c.to_biguint().expect("checked nonnegative"))
        .collect())
}

/// Vandermonde product `prod_{p<q} (x_p - x_q)`.
pub fn vandermonde<C: Coefficient>(k: usize) -> MultiPoly<C> {
    let mut acc = MultiPoly::one(k);
    for p in 0..k {
        for q in p + 1..k {
            acc = &acc * &(&MultiPoly::var(k, p) - &MultiPoly::var(k, q));
        }
    }
    acc
}

fn pair_trinomial<C: Coefficient>(k: usize, p: usize, q: usize) -> MultiPoly<C> {
    &(&MultiPoly::one(k) - &MultiPoly::var(k, p)) - &MultiPoly::var(k, q)
}

/// Numerator of `g_k` over the denominator `vandermonde(k) * prod (1 - x_p - x_q)`.
pub fn eq2_numerator<C: Coefficient>(k: usize) -> MultiPoly<C> {
    let mut total = MultiPoly::zero(k);
    for i in 0..k {
        let xi = MultiPoly::<C>::var(k, i);
        let mut term =
            &xi.pow(k as u32 - 1) * &(&MultiPoly::one(k) - &xi).pow(k.saturating_sub(2) as u32);
        for p in (0..k).filter(|&p| p != i) {
            for q in (p + 1..k).filter(|&q| q != i) {
                term = &term * &(&MultiPoly::var(k, p) - &MultiPoly::var(k, q));
                term = &term * &pair_trinomial(k, p, q);
            }
        }
        // (x_i - x_j) for j < i is reversed relative to the Vandermonde factor
        total = if i % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

/// Power series of `g_k` truncated to per-variable degree `caps`.
pub fn g_k_poly<C: Coefficient>(k: usize, caps: &[u32]) -> Result<MultiPoly<C>> {
    if k < 2 {
        return Err(Error::Domain(format!("g_k needs k >= 2, got {k}")));
    }
    if caps.len() != k {
        return Err(Error::Domain(format!(
            "{} degree caps given for {k} variables",
            caps.len()
        )));
    }
    let quotient = eq2_numerator::<C>(k)
        .exact_div(&vandermonde(k))
        .map_err(|e| Error::Consistency(format!("numerator of g_{k}: {e}")))?;
    let mut acc = quotient.capped(caps);
    for p in 0..k {
        for q in p + 1..k {
            acc = &acc
                * &pair_trinomial::<C>(k, p, q)
                    .capped(caps)
                    .geometric_inverse()?;
        }
    }
    if acc.terms().any(|(_, c)| c.is_negative()) {
        return Err(Error::Consistency(format!(
            "g_{k} has a negative coefficient"
        )));
    }
    Ok(acc)
}

/// [`g_k_poly`] over arbitrary-precision integers.
pub fn g_k_series(k: usize, caps: &[u32]) -> Result<MultiPoly<BigInt>> {
    g_k_poly(k, caps)
}

/// Number of `132`-avoiding permutations of the multiset, read off `g_k`.
/// Zero multiplicities are allowed.
pub fn f132_via_gf(spec: &MultisetSpec) -> Result<BigUint> {
    if spec.k() <= 1 {
        return Ok(BigUint::one());
    }
    let g = g_k_series(spec.k(), spec.mult())?;
    g.coeff(spec.mult())
        .to_biguint()
        .ok_or_else(|| Error::Consistency("negative coefficient".into()))
}

/// Substituting `x_i = x^i` into `g_k` must give the composition series
/// with parts `<= k`. Compares both up to `x^n_max`.
pub fn sanity_check_eq1_vs_eq2(n_max: u32, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let eq1 = composition_gf(n_max, k as u32)?;
    let expected: Vec<BigInt> = eq1.coeffs_between(0, i64::from(n_max));
    if k == 1 {
        return Ok(expected.iter().all(|c| c.is_one()));
    }
    let caps: Vec<u32> = (1..=k as u32).map(|i| n_max / i).collect();
    let via_g = g_k_series(k, &caps)?.substitute_powers(n_max);
    if via_g.order() < i64::from(n_max) {
        return Ok(false);
    }
    Ok(via_g.coeffs_between(0, i64::from(n_max)) == expected)
}
