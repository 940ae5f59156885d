use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Truncated Laurent series in one variable `x` over an integer ring.
///
/// The series stores the coefficients of `x^offset ..= x^order`; everything
/// above `order` is unknown. Arithmetic propagates `order` and never extends
/// it. The coefficient vector is kept trimmed: its first and last entries are
/// nonzero, and the zero series stores nothing.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries<C> {
    offset: i64,
    coeffs: Vec<C>,
    order: i64,
}

impl<C: Coefficient> TruncSeries<C> {
    /// Series `sum coeffs[n] x^(offset + n)`, known up to `x^order`.
    /// Coefficients past `order` are dropped.
    pub fn new(offset: i64, coeffs: Vec<C>, order: i64) -> Self {
        let mut s = TruncSeries {
            offset,
            coeffs,
            order,
        };
        s.trim();
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>, order: i64) -> Self {
        Self::new(0, coeffs, order)
    }

    /// A polynomial given as `(exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, C)], order: i64) -> Self {
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero(order);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.clone() + c.clone();
        }
        Self::new(lo, coeffs, order)
    }

    pub fn zero(order: i64) -> Self {
        TruncSeries {
            offset: 0,
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    pub fn monomial(c: C, exponent: i64, order: i64) -> Self {
        Self::new(exponent, vec![c], order)
    }

    fn trim(&mut self) {
        let keep = (self.order - self.offset + 1).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
    }

    /// Highest exponent whose coefficient is known exactly.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.offset)
    }

    /// Valuation treating a known-zero series as `O(x^(order+1))`.
    fn effective_valuation(&self) -> i64 {
        self.valuation().unwrap_or(self.order + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^e`, or `None` when `e` is beyond the known order.
    pub fn coeff(&self, e: i64) -> Option<C> {
        if e > self.order {
            return None;
        }
        let idx = e - self.offset;
        Some(if idx < 0 || idx as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[idx as usize].clone()
        })
    }

    /// Coefficients of `x^lo ..= x^hi`; panics if `hi` exceeds the order.
    pub fn coeffs_between(&self, lo: i64, hi: i64) -> Vec<C> {
        assert!(
            hi <= self.order,
            "x^{hi} is beyond the known order {}",
            self.order
        );
        (lo..=hi)
            .map(|e| self.coeff(e).expect("checked against order"))
            .collect()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(idx, c)| (self.offset + idx as i64, c))
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        let offset = if self.is_zero() { 0 } else { self.offset + e };
        TruncSeries {
            offset,
            coeffs: self.coeffs.clone(),
            order: self.order + e,
        }
    }

    /// Forgets everything above `x^order` (no-op if already lower).
    pub fn truncate(&self, order: i64) -> Self {
        Self::new(self.offset, self.coeffs.clone(), order.min(self.order))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(
            self.offset,
            self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
            self.order,
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    fn combine(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let order = self.order.min(rhs.order);
        if self.is_zero() && rhs.is_zero() {
            return Self::zero(order);
        }
        let lo = self.effective_valuation().min(rhs.effective_valuation());
        if lo > order {
            return Self::zero(order);
        }
        let mut out = vec![C::zero(); (order - lo + 1) as usize];
        for (e, c) in self.terms() {
            if e <= order {
                let slot = &mut out[(e - lo) as usize];
                *slot = slot.clone() + c.clone();
            }
        }
        for (e, c) in rhs.terms() {
            if e <= order {
                let slot = &mut out[(e - lo) as usize];
                *slot = if negate_rhs {
                    slot.clone() - c.clone()
                } else {
                    slot.clone() + c.clone()
                };
            }
        }
        Self::new(lo, out, order)
    }

    fn product(&self, rhs: &Self) -> Self {
        let va = self.effective_valuation();
        let vb = rhs.effective_valuation();
        let order = (self.order + vb).min(rhs.order + va);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(order);
        }
        let lo = va + vb;
        if lo > order {
            return Self::zero(order);
        }
        let len = (order - lo + 1) as usize;
        let mut out = vec![C::zero(); len];
        let b_terms: Vec<(usize, &C)> = rhs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for &(j, b) in &b_terms {
                if i + j >= len {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(lo, out, order)
    }

    /// Exact quotient `self / den`.
    ///
    /// The lowest nonzero coefficient of `den` must be +1 or -1, which keeps
    /// the quotient integral. Runs in time proportional to the number of
    /// nonzero terms of `den` per output coefficient.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let Some(v) = den.valuation() else {
            return Err(Error::NotInvertible("division by the zero series".into()));
        };
        let unit = den.coeffs[0].clone();
        if !(unit.is_one() || (-unit.clone()).is_one()) {
            return Err(Error::NotInvertible(format!(
                "leading coefficient {unit:?} is not a unit"
            )));
        }
        let va = self.effective_valuation();
        let rel = den.order - v;
        let order = (self.order - v).min(rel + va - v);
        if self.is_zero() {
            return Ok(Self::zero(order));
        }
        let lo = va - v;
        if lo > order {
            return Ok(Self::zero(order));
        }
        let len = (order - lo + 1) as usize;
        let tail: Vec<(usize, &C)> = den
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut q: Vec<C> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coeffs.get(n).cloned().unwrap_or_else(C::zero);
            for &(m, d) in &tail {
                if m > n {
                    break;
                }
                acc = acc - d.clone() * q[n - m].clone();
            }
            // unit is its own inverse
            q.push(acc * unit.clone());
        }
        Ok(Self::new(lo, q, order))
    }

    /// Multiplicative inverse; needs a leading coefficient of +1 or -1.
    pub fn invert(&self) -> Result<Self> {
        let Some(v) = self.valuation() else {
            return Err(Error::NotInvertible("the zero series".into()));
        };
        // 1 / (x^v u) is known to x^(order - 2v)
        Self::one(self.order - v).div(self)
    }
}

impl<C: Coefficient> Add for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: Self) -> TruncSeries<C> {
        self.combine(rhs, false)
    }
}

impl<C: Coefficient> Sub for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: Self) -> TruncSeries<C> {
        self.combine(rhs, true)
    }
}

impl<C: Coefficient> Mul for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: Self) -> TruncSeries<C> {
        self.product(rhs)
    }
}

impl<C: Coefficient> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($($Op:ident $op:ident),*) => {$(
        impl<C: Coefficient> $Op for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $op(self, rhs: Self) -> TruncSeries<C> {
                (&self).$op(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<C: Coefficient> Neg for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        -&self
    }
}

impl<C: Coefficient + fmt::Display> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*x^{e}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}
