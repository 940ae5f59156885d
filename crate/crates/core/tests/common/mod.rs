//! Strategies and property bodies shared by the proptest suite and the
//! acceptance runner.
#![allow(dead_code)]

use patavoid::bijection::{match_parens, tau, tau_inverse};
use patavoid::series::{MultiPoly, TruncSeries, UNCAPPED};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type S = TruncSeries<i64>;
pub type P = MultiPoly<i64>;

pub fn series() -> impl Strategy<Value = S> {
    (-3i64..3, prop::collection::vec(-9i64..=9, 0..7), 0i64..4).prop_map(|(off, c, extra)| {
        let order = off + c.len() as i64 + extra;
        S::new(off, c, order)
    })
}

/// Lowest coefficient is `+1` or `-1`.
pub fn unit_series() -> impl Strategy<Value = S> {
    (
        -2i64..3,
        prop::bool::ANY,
        prop::collection::vec(-9i64..=9, 0..6),
        0i64..5,
    )
        .prop_map(|(off, neg, tail, extra)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(tail);
            let order = off + c.len() as i64 + extra;
            S::new(off, c, order)
        })
}

pub fn poly(nvars: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -5i64..=5), 0..6)
        .prop_map(move |terms| P::from_terms(vec![UNCAPPED; nvars], terms))
}

pub fn word(max_letter: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1..=max_letter, 0..=max_len)
}

pub fn series_ring_axioms((a, b, c): (S, S, S)) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    let lhs = &a * &(&b + &c);
    let rhs = &(&a * &b) + &(&a * &c);
    // the two sides are known to different orders
    let top = lhs.order().min(rhs.order());
    prop_assert_eq!(lhs.truncate(top), rhs.truncate(top));
    prop_assert_eq!(&(&a - &b) + &b, a.truncate(a.order().min(b.order())));
    prop_assert_eq!(&a + &S::zero(a.order()), a.clone());
    // a known-zero series has valuation order + 1 for precision purposes
    let unit = S::one(a.order() - a.valuation().unwrap_or(a.order() + 1));
    prop_assert_eq!(&a * &unit, a.clone());
    Ok(())
}

pub fn inversion_round_trip(a: S) -> Result<(), TestCaseError> {
    let inv = a.invert().map_err(|e| TestCaseError::fail(e.to_string()))?;
    let prod = &a * &inv;
    prop_assert_eq!(prod.clone(), S::one(prod.order()));
    prop_assert!(prod.order() >= a.order() - a.valuation().unwrap_or(0));
    let back = inv
        .invert()
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    let top = back.order().min(a.order());
    prop_assert_eq!(back.truncate(top), a.truncate(top));
    Ok(())
}

pub fn exact_division((a, b): (P, P)) -> Result<(), TestCaseError> {
    if b.is_zero() {
        prop_assert!(a.exact_div(&b).is_err());
        return Ok(());
    }
    let n = &a * &b;
    let q = n
        .exact_div(&b)
        .map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&q * &b, n);
    prop_assert_eq!(q, a);
    Ok(())
}

pub fn tau_inverse_pair((w, focus): (Vec<u32>, u32)) -> Result<(), TestCaseError> {
    let view = match_parens(&w, focus).unwrap();
    if view.unmatched_opens().is_empty() {
        prop_assert!(tau(&w, focus).is_err());
    } else {
        let y = tau(&w, focus).unwrap();
        prop_assert_eq!(tau_inverse(&y, focus).unwrap().into_letters(), w.clone());
    }
    if view.unmatched_closes().is_empty() {
        prop_assert!(tau_inverse(&w, focus).is_err());
    } else {
        let y = tau_inverse(&w, focus).unwrap();
        prop_assert_eq!(tau(&y, focus).unwrap().into_letters(), w.clone());
    }
    Ok(())
}

/// After `tau`, every old matched pair survives, the flipped letter is the
/// last unmatched close, and the remaining unmatched opens are unchanged.
pub fn matching_stability((w, focus): (Vec<u32>, u32)) -> Result<(), TestCaseError> {
    let view = match_parens(&w, focus).unwrap();
    let Some(&first_open) = view.unmatched_opens().first() else {
        return Ok(());
    };
    let y = tau(&w, focus).unwrap();
    let after = match_parens(&y, focus).unwrap();
    let new_pairs = after.pairs();
    let old_pairs = view.pairs();
    for pair in &old_pairs {
        prop_assert!(new_pairs.contains(pair));
    }
    prop_assert_eq!(new_pairs.len(), old_pairs.len());
    prop_assert_eq!(after.unmatched_closes().last(), Some(&first_open));
    prop_assert_eq!(after.unmatched_opens(), &view.unmatched_opens()[1..]);
    Ok(())
}
