use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::TruncSeries;

/// Sentinel cap meaning "no degree bound".
pub const UNCAPPED: u32 = u32::MAX;

/// Exponent vector ordered graded-lexicographically: higher total degree is
/// larger; ties are broken lexicographically with `x_1 > x_2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn over(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn within(&self, caps: &[u32]) -> bool {
        self.0.iter().zip(caps).all(|(e, c)| e <= c)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x_1 .. x_k` with per-variable degree caps.
///
/// Terms whose exponent exceeds a cap are discarded on construction and by
/// every operation, so arithmetic happens in `Z[x] / (x_i^(cap_i + 1))`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    caps: Vec<u32>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> MultiPoly<C> {
    /// The zero polynomial in `nvars` variables, without caps.
    pub fn zero(nvars: usize) -> Self {
        Self::zero_capped(vec![UNCAPPED; nvars])
    }

    pub fn zero_capped(caps: Vec<u32>) -> Self {
        MultiPoly {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_terms(vec![UNCAPPED; nvars], [(vec![0; nvars], c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(vec![UNCAPPED; nvars], [(e, C::one())])
    }

    /// Sums the given terms, dropping any that exceed `caps`.
    pub fn from_terms(caps: Vec<u32>, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero_capped(caps);
        for (e, c) in terms {
            assert_eq!(e.len(), p.nvars(), "exponent vector has wrong length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() || !m.within(&self.caps) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = slot.clone() + c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    /// Same polynomial with caps lowered to `caps` (component-wise minimum).
    pub fn capped(&self, caps: &[u32]) -> Self {
        let caps: Vec<u32> = self.caps.iter().zip(caps).map(|(a, b)| *a.min(b)).collect();
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.within(&caps))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            caps,
        }
    }

    /// Coefficient of `x^e`; zero for absent terms and exponents past the caps.
    pub fn coeff(&self, e: &[u32]) -> C {
        self.terms
            .get(&Monomial(e.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> + '_ {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.caps.clone(),
            self.terms
                .iter()
                .map(|(m, x)| (m.0.clone(), x.clone() * c.clone())),
        )
    }

    fn joint_caps(&self, rhs: &Self) -> Vec<u32> {
        assert_eq!(self.nvars(), rhs.nvars(), "variable counts differ");
        self.caps
            .iter()
            .zip(&rhs.caps)
            .map(|(a, b)| *a.min(b))
            .collect()
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Self::zero_capped(self.joint_caps(rhs));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), if negate_rhs { -c.clone() } else { c.clone() });
        }
        out
    }

    fn product_with_caps(&self, rhs: &Self, caps: Vec<u32>) -> Self {
        let mut out = Self::zero_capped(caps);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::from_terms(self.caps.clone(), [(vec![0; self.nvars()], C::one())]);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den` in the full polynomial ring.
    ///
    /// Repeatedly cancels the graded-lex leading term of the remainder with a
    /// multiple of the leading term of `den`. Caps are ignored while dividing
    /// and the quotient inherits the caps of `self`; a numerator that was
    /// already truncated will in general not divide.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        let (dm, dc) = den
            .leading_term()
            .ok_or_else(|| Error::NotDivisible("division by the zero polynomial".into()))?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let open = vec![UNCAPPED; self.nvars()];
        let mut rem = MultiPoly {
            caps: open.clone(),
            terms: self.terms.clone(),
        };
        let mut quot = Self::zero_capped(open.clone());
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return Err(Error::NotDivisible(format!(
                    "leading monomial {:?} of the remainder is not a multiple of {:?}",
                    rm.exponents(),
                    dm.exponents()
                )));
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(Error::NotDivisible(format!(
                    "coefficient {rc:?} is not a multiple of {dc:?}"
                )));
            }
            let step = MultiPoly::from_terms(open.clone(), [(rm.over(&dm).0, q)]);
            rem = &rem - &step.product_with_caps(den, open.clone());
            quot = &quot + &step;
        }
        Ok(quot.capped(&self.caps))
    }

    /// Inverse of a polynomial whose constant term is +1 or -1, as a power
    /// series truncated to the caps. All caps must be finite.
    pub fn geometric_inverse(&self) -> Result<Self> {
        if self.caps.contains(&UNCAPPED) {
            return Err(Error::NotInvertible(
                "series inverse needs finite degree caps".into(),
            ));
        }
        let unit = self.coeff(&vec![0; self.nvars()]);
        if !(unit.is_one() || (-unit.clone()).is_one()) {
            return Err(Error::NotInvertible(format!(
                "constant term {unit:?} is not a unit"
            )));
        }
        // self = unit (1 - h), so 1/self = unit (1 + h + h^2 + ...)
        let one = Self::from_terms(self.caps.clone(), [(vec![0; self.nvars()], C::one())]);
        let h = &one - &self.scale(&unit);
        let mut power = one.clone();
        let mut sum = one;
        loop {
            power = &power * &h;
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        Ok(sum.scale(&unit))
    }

    /// Substitutes `x_i = x^i` (1-based `i`) and returns the univariate
    /// series up to `x^n_max`.
    ///
    /// The declared order is lowered when the caps could hide a monomial of
    /// weighted degree `<= n_max`.
    pub fn substitute_powers(&self, n_max: u32) -> TruncSeries<C> {
        let mut order = i64::from(n_max);
        for (i, &cap) in self.caps.iter().enumerate() {
            if cap != UNCAPPED {
                order = order.min((i64::from(cap) + 1) * (i as i64 + 1) - 1);
            }
        }
        let mut coeffs = vec![C::zero(); (order.max(-1) + 1) as usize];
        for (m, c) in &self.terms {
            let weight: i64 =
                m.0.iter()
                    .enumerate()
                    .map(|(i, &e)| (i as i64 + 1) * i64::from(e))
                    .sum();
            if weight <= order {
                let slot = &mut coeffs[weight as usize];
                *slot = slot.clone() + c.clone();
            }
        }
        TruncSeries::from_coeffs(coeffs, order)
    }

    /// Renames variables: `x_{i+1}` becomes `x_{perm[i]+1}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        let mut caps = vec![UNCAPPED; self.nvars()];
        for (i, &p) in perm.iter().enumerate() {
            caps[p] = self.caps[i];
        }
        Self::from_terms(
            caps,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; m.0.len()];
                for (i, &p) in perm.iter().enumerate() {
                    e[p] = m.0[i];
                }
                (e, c.clone())
            }),
        )
    }
}

impl<C: Coefficient> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coefficient> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coefficient> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        let caps = self.joint_caps(rhs);
        self.product_with_caps(rhs, caps)
    }
}

impl<C: Coefficient> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
