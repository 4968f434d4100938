//! Truncated formal power series in one variable `z` over exact rationals or
//! rational intervals, and Newton conversion between `h`- and `p`-values.

use num::One;

use crate::arith::{binomial, q, Scalar, Q};
use crate::error::{Error, Result};

/// `c_0 + c_1 z + … + c_cap z^cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> PowerSeries<T> {
    /// Pads with zeros or truncates to `cap + 1` coefficients.
    pub fn new(mut coeffs: Vec<T>, cap: usize) -> Self {
        coeffs.resize(cap + 1, T::zero_value());
        PowerSeries { coeffs }
    }

    pub fn zero(cap: usize) -> Self {
        Self::new(Vec::new(), cap)
    }

    pub fn one(cap: usize) -> Self {
        Self::new(vec![T::one_value()], cap)
    }

    /// `1 / (1 − a z)`.
    pub fn geometric(a: &T, cap: usize) -> Self {
        let mut c = Vec::with_capacity(cap + 1);
        let mut cur = T::one_value();
        for _ in 0..=cap {
            c.push(cur.clone());
            cur = cur.ring_mul(a);
        }
        Self::new(c, cap)
    }

    /// `1 + b z`.
    pub fn linear(b: &T, cap: usize) -> Self {
        Self::new(vec![T::one_value(), b.clone()], cap)
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero_value)
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        Self::new((0..=cap).map(|i| self.coeffs[i].ring_add(&other.coeffs[i])).collect(), cap)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        Self::new((0..=cap).map(|i| self.coeffs[i].ring_sub(&other.coeffs[i])).collect(), cap)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.ring_mul(c)).collect(), self.cap())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let mut out = vec![T::zero_value(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_exactly_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                out[i + j] = out[i + j].ring_add(&a.ring_mul(b));
            }
        }
        Self::new(out, cap)
    }

    /// `f(−z)`.
    pub fn negate_argument(&self) -> Self {
        let minus = T::from_q(q(-1));
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, x)| if i % 2 == 1 { x.ring_mul(&minus) } else { x.clone() })
            .collect();
        Self::new(c, self.cap())
    }

    /// `1 / f`; needs an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0].is_exactly_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].try_recip()?;
        let cap = self.cap();
        let mut out: Vec<T> = vec![inv0.clone()];
        for n in 1..=cap {
            let mut acc = T::zero_value();
            for k in 1..=n {
                acc = acc.ring_add(&self.coeffs[k].ring_mul(&out[n - k]));
            }
            out.push(T::zero_value().ring_sub(&acc).ring_mul(&inv0));
        }
        Ok(Self::new(out, cap))
    }

    /// `exp(f)` for `f` with zero constant term, from `n e_n = Σ k f_k e_{n−k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_exactly_zero() {
            return Err(Error::InvalidArgument("exp needs a series without constant term".into()));
        }
        let cap = self.cap();
        let mut out: Vec<T> = vec![T::one_value()];
        for n in 1..=cap {
            let mut acc = T::zero_value();
            for k in 1..=n {
                let t = self.coeffs[k].ring_mul(&out[n - k]).ring_mul(&T::from_q(q(k as i64)));
                acc = acc.ring_add(&t);
            }
            out.push(acc.ring_mul(&T::from_q(Q::one() / q(n as i64))));
        }
        Ok(Self::new(out, cap))
    }

    /// `log(f)` for `f` with constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_exactly_one() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let cap = self.cap();
        let mut out: Vec<T> = vec![T::zero_value()];
        for n in 1..=cap {
            // n l_n = n f_n − Σ_{k<n} k l_k f_{n−k}
            let mut acc = self.coeffs[n].ring_mul(&T::from_q(q(n as i64)));
            for k in 1..n {
                let t = out[k].ring_mul(&self.coeffs[n - k]).ring_mul(&T::from_q(q(k as i64)));
                acc = acc.ring_sub(&t);
            }
            out.push(acc.ring_mul(&T::from_q(Q::one() / q(n as i64))));
        }
        Ok(Self::new(out, cap))
    }

    /// `f(z / (1 − z))`.
    pub fn compose_z_over_one_minus_z(&self) -> Self {
        let cap = self.cap();
        let mut out = vec![T::zero_value(); cap + 1];
        out[0] = self.coeffs[0].clone();
        for k in 1..=cap {
            if self.coeffs[k].is_exactly_zero() {
                continue;
            }
            for (n, slot) in out.iter_mut().enumerate().skip(k) {
                let b = T::from_q(Q::from_integer(binomial(n as i64 - 1, k as i64 - 1)));
                *slot = slot.ring_add(&self.coeffs[k].ring_mul(&b));
            }
        }
        Self::new(out, cap)
    }
}

/// Power sums from complete homogeneous values `h_0 = 1, h_1, …, h_N`:
/// `Σ p_k z^k / k = log H(z)`. Index `k` of the result holds `p_k`; index 0
/// is zero.
pub fn h_to_p<T: Scalar>(h: &[T]) -> Result<Vec<T>> {
    let cap = h.len() - 1;
    let log = PowerSeries::new(h.to_vec(), cap).log()?;
    Ok((0..=cap).map(|k| log.coeff(k).ring_mul(&T::from_q(q(k as i64)))).collect())
}

/// Inverse of [`h_to_p`]: `H(z) = exp(Σ p_k z^k / k)`; `p[0]` is ignored.
pub fn p_to_h<T: Scalar>(p: &[T]) -> Result<Vec<T>> {
    let cap = p.len() - 1;
    let mut c = vec![T::zero_value()];
    for (k, pk) in p.iter().enumerate().skip(1) {
        c.push(pk.ring_mul(&T::from_q(Q::one() / q(k as i64))));
    }
    Ok(PowerSeries::new(c, cap).exp()?.coeffs().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qr;
    use crate::value::SpecValue;

    fn qs(v: &[(i64, i64)]) -> Vec<Q> {
        v.iter().map(|&(a, b)| qr(a, b)).collect()
    }

    #[test]
    fn geometric_and_reciprocal() {
        let g = PowerSeries::geometric(&qr(1, 2), 3);
        assert_eq!(g.coeffs(), qs(&[(1, 1), (1, 2), (1, 4), (1, 8)]).as_slice());
        let lin = PowerSeries::new(qs(&[(1, 1), (-1, 2)]), 3);
        assert_eq!(lin.reciprocal().unwrap(), g);
        assert!(PowerSeries::<Q>::zero(3).reciprocal().is_err());
    }

    #[test]
    fn exponentials() {
        let z = PowerSeries::new(qs(&[(0, 1), (1, 1)]), 3);
        assert_eq!(z.exp().unwrap().coeffs(), qs(&[(1, 1), (1, 1), (1, 2), (1, 6)]).as_slice());
        let w = z.compose_z_over_one_minus_z();
        assert_eq!(w.coeffs(), qs(&[(0, 1), (1, 1), (1, 1), (1, 1)]).as_slice());
        assert_eq!(w.exp().unwrap().coeffs(), qs(&[(1, 1), (1, 1), (3, 2), (13, 6)]).as_slice());
        assert!(PowerSeries::<Q>::one(3).exp().is_err());
    }

    #[test]
    fn log_inverts_exp() {
        let f = PowerSeries::new(qs(&[(0, 1), (2, 3), (-1, 5), (7, 2), (1, 9)]), 4);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
    }

    #[test]
    fn newton_examples() {
        let mut h = vec![Q::one()];
        let mut f = Q::one();
        for n in 1..=5 {
            f /= q(n);
            h.push(f.clone());
        }
        let p = h_to_p(&h).unwrap();
        assert_eq!(p, qs(&[(0, 1), (1, 1), (0, 1), (0, 1), (0, 1), (0, 1)]));
        assert_eq!(p_to_h(&p).unwrap(), h);

        let geo: Vec<Q> = PowerSeries::geometric(&qr(1, 3), 4).coeffs().to_vec();
        let p = h_to_p(&geo).unwrap();
        assert_eq!(p, qs(&[(0, 1), (1, 3), (1, 9), (1, 27), (1, 81)]));

        let eps = qs(&[(1, 1), (1, 3), (0, 1), (0, 1)]);
        assert_eq!(h_to_p(&eps).unwrap(), qs(&[(0, 1), (1, 3), (-1, 9), (1, 27)]));
    }

    #[test]
    fn interval_series() {
        let a = SpecValue::interval(qr(1, 3), qr(1, 2));
        let g = PowerSeries::geometric(&a, 2);
        assert_eq!(g.coeff(2), SpecValue::interval(qr(1, 9), qr(1, 4)));
        let e = PowerSeries::<SpecValue>::new(vec![SpecValue::one(), SpecValue::interval(q(0), q(1))], 2);
        let r = e.reciprocal().unwrap();
        assert!(r.coeff(1).contains(&qr(-1, 2)));
    }
}
