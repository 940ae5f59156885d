//! Growth of `c(n, k)`, the number of pattern-avoiding compositions of `n`
//! into parts `<= k`.
//!
//! The dominant singularity of the truncated composition series is the root
//! of `x + x^2 = 1`, so `c(n, k) ~ K(k) r^n` with `r = (1 + sqrt 5) / 2`.
//! Everything here is generic over the float type; `f64` is the intended
//! instantiation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::genfun::composition_gf;
use crate::scalar::{real, Real};

/// `r = (1 + sqrt 5) / 2`.
pub fn golden_ratio<F: Real>() -> F {
    (F::one() + real::<F>(5.0).sqrt()) / real(2.0)
}

/// `s = (1 - sqrt 5) / 2`, the other root of `t^2 = t + 1`.
pub fn golden_conjugate<F: Real>() -> F {
    (F::one() - real::<F>(5.0).sqrt()) / real(2.0)
}

/// Amplitude `K(k)` of `c(n, k) ~ K(k) r^n`, for `k >= 2`.
///
/// The two products run over `j = 3..=k` and are empty for `k = 2`.
pub fn k_of_k<F: Real>(k: u32) -> Result<F> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "part bound must be at least 2, got {k}"
        )));
    }
    let one = F::one();
    let r = golden_ratio::<F>();
    let s = golden_conjugate::<F>();
    let r_inv = one / r;
    let r_inv2 = r_inv * r_inv;
    let mut first = one;
    let mut second = one;
    for j in 3..=k {
        let r_neg_j = r.powi(-(j as i32));
        first = first * (one - r_inv) / ((one - r.powi(1 - j as i32)) * (one - r_inv - r_neg_j));
        second =
            second * (one - r_inv2) / ((one - r.powi(2 - j as i32)) * (one - r_inv2 - r_neg_j));
    }
    Ok(r / ((r - one) * (r - s)) * (r * first - second))
}

/// Limit of `K(k)` as `k` grows: stops at the first `k` with
/// `|K(k) - K(k - 1)| < tolerance` and returns `K(k)`.
pub fn k_infinity<F: Real>(tolerance: F) -> Result<F> {
    if tolerance.is_nan() || tolerance <= F::zero() {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let mut prev = k_of_k::<F>(2)?;
    for k in 3..=10_000u32 {
        let next = k_of_k::<F>(k)?;
        if (next - prev).abs() < tolerance {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::Domain(format!(
        "K(k) did not settle to within {tolerance:?}"
    )))
}

/// The root of `x^i + x^j = 1` in `(0, 1)` for `1 <= i < j`, by bisection.
///
/// `x^i + x^j - 1` is increasing on `(0, 1)`, from -1 to 1, so the root is
/// unique there.
pub fn min_modulus_root<F: Real>(i: u32, j: u32) -> Result<F> {
    if i == 0 || j <= i {
        return Err(Error::Domain(format!("need 1 <= i < j, got ({i}, {j})")));
    }
    let f = |x: F| x.powi(i as i32) + x.powi(j as i32) - F::one();
    let (mut lo, mut hi) = (F::zero(), F::one());
    let tol = real::<F>(1e-13).max(F::epsilon());
    while hi - lo > tol {
        let mid = (lo + hi) / real(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < F::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / real(2.0))
}

/// Dominant-growth description of `c(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimate<F> {
    pub k: u32,
    pub amplitude: F,
    pub rate: F,
}

impl<F: Real> GrowthEstimate<F> {
    pub fn for_part_bound(k: u32) -> Result<Self> {
        Ok(GrowthEstimate {
            k,
            amplitude: k_of_k(k)?,
            rate: golden_ratio(),
        })
    }

    /// `K(k) r^n`.
    pub fn predict(&self, n: u32) -> F {
        self.amplitude * self.rate.powi(n as i32)
    }
}

/// Exact `c(n, k)` divided by the asymptotic prediction `K(k) r^n`.
pub fn growth_check<F: Real>(n: u32, k: u32) -> Result<F> {
    let estimate = GrowthEstimate::<F>::for_part_bound(k)?;
    let exact = exact_count(n, k)?;
    Ok(to_real::<F>(&exact)? / estimate.predict(n))
}

fn exact_count(n: u32, k: u32) -> Result<BigInt> {
    let gf = composition_gf(n, k)?;
    gf.coeff(i64::from(n))
        .ok_or_else(|| Error::Consistency(format!("x^{n} not computed")))
}

fn to_real<F: Real>(v: &BigInt) -> Result<F> {
    v.to_f64()
        .and_then(F::from_f64)
        .ok_or_else(|| Error::Domain(format!("{v} does not fit a float")))
}
