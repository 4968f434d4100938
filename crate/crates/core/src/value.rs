//! Exact-or-interval real values. An exact value is an interval of width 0;
//! all endpoints are rationals so interval arithmetic never rounds.

use std::fmt;

use num::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::{format_rational, q, Ring, Scalar, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecValue {
    lo: Q,
    hi: Q,
}

/// Sign verdict for a value whose enclosure may straddle zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
    NonNegative,
    NonPositive,
    Unknown,
}

impl SpecValue {
    pub fn exact(x: Q) -> Self {
        SpecValue { lo: x.clone(), hi: x }
    }

    pub fn interval(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "interval lower bound exceeds upper bound");
        SpecValue { lo, hi }
    }

    pub fn zero() -> Self {
        Self::exact(Q::zero())
    }

    pub fn one() -> Self {
        Self::exact(Q::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(q(n))
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_exact(&self) -> Option<&Q> {
        self.is_exact().then_some(&self.lo)
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.lo.is_positive() {
            Sign::Positive
        } else if self.hi.is_negative() {
            Sign::Negative
        } else if self.lo.is_zero() {
            Sign::NonNegative
        } else if self.hi.is_zero() {
            Sign::NonPositive
        } else {
            Sign::Unknown
        }
    }

    /// Strictly below zero (the whole enclosure is negative).
    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn certainly_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    pub fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }

    pub fn add(&self, o: &Self) -> Self {
        SpecValue { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        SpecValue { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        SpecValue { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_exact() && o.is_exact() {
            return Self::exact(&self.lo * &o.lo);
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        SpecValue { lo, hi }
    }

    pub fn scale(&self, k: &Q) -> Self {
        self.mul(&Self::exact(k.clone()))
    }

    pub fn recip(&self) -> Result<Self> {
        if !self.excludes_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SpecValue { lo: Q::one() / &self.hi, hi: Q::one() / &self.lo })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn midpoint_f64(&self) -> f64 {
        crate::arith::to_f64(&((&self.lo + &self.hi) / q(2)))
    }

    pub fn to_json(&self) -> Value {
        match self.as_exact() {
            Some(x) => json!(format_rational(x)),
            None => json!({"lo": format_rational(&self.lo), "hi": format_rational(&self.hi)}),
        }
    }
}

impl From<Q> for SpecValue {
    fn from(x: Q) -> Self {
        SpecValue::exact(x)
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_exact() {
            Some(x) => write!(f, "{}", format_rational(x)),
            None => write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi)),
        }
    }
}

impl Ring for SpecValue {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl Scalar for SpecValue {
    fn from_q(x: Q) -> Self {
        SpecValue::exact(x)
    }
    fn is_exactly_zero(&self) -> bool {
        self.is_zero()
    }
    fn is_exactly_one(&self) -> bool {
        self.lo.is_one() && self.hi.is_one()
    }
    fn try_recip(&self) -> Result<Self> {
        self.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qr;

    #[test]
    fn interval_arithmetic_encloses() {
        let a = SpecValue::interval(q(-1), q(2));
        let b = SpecValue::interval(q(3), q(4));
        let p = a.mul(&b);
        assert_eq!(p.lo(), &q(-4));
        assert_eq!(p.hi(), &q(8));
        assert_eq!(a.sub(&b), SpecValue::interval(q(-5), q(-1)));
        assert!(a.recip().is_err());
        let r = b.recip().unwrap();
        assert_eq!(r, SpecValue::interval(qr(1, 4), qr(1, 3)));
    }

    #[test]
    fn signs() {
        assert_eq!(SpecValue::exact(qr(-1, 4)).sign(), Sign::Negative);
        assert_eq!(SpecValue::zero().sign(), Sign::Zero);
        assert_eq!(SpecValue::interval(q(0), q(1)).sign(), Sign::NonNegative);
        assert_eq!(SpecValue::interval(q(-1), q(1)).sign(), Sign::Unknown);
    }

    #[test]
    fn json_forms() {
        assert_eq!(SpecValue::exact(qr(-1, 4)).to_json(), json!("-1/4"));
        assert_eq!(
            SpecValue::interval(q(1), q(2)).to_json(),
            json!({"lo": "1", "hi": "2"})
        );
    }
}
