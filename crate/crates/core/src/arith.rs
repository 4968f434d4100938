//! Exact rational helpers shared by every module: parsing and printing of
//! `p/q` strings, integer binomials with the extended sign conventions the
//! determinant formulas need, and division-free determinants over any
//! commutative ring.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Lowest terms, sign on the numerator, denominator omitted when it is 1.
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `C(n, k)` for any integer `n` and `k >= 0` (falling factorial over `k!`);
/// zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow_q(x: &Q, e: usize) -> Q {
    num::pow::pow(x.clone(), e)
}

/// Minimal commutative-ring interface for determinants that must not divide
/// (symbolic polynomials, intervals).
pub trait Ring: Clone {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
}

impl Ring for Q {
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Ring elements that can be built from rationals and inverted when
/// invertible; implemented by exact rationals and rational intervals.
pub trait Scalar: Ring {
    fn from_q(x: Q) -> Self;
    fn zero_value() -> Self {
        Self::from_q(Q::zero())
    }
    fn one_value() -> Self {
        Self::from_q(Q::one())
    }
    /// True only when the value is certainly zero.
    fn is_exactly_zero(&self) -> bool;
    /// True only when the value is certainly one.
    fn is_exactly_one(&self) -> bool;
    fn try_recip(&self) -> Result<Self>;
}

impl Scalar for Q {
    fn from_q(x: Q) -> Self {
        x
    }
    fn is_exactly_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_exactly_one(&self) -> bool {
        One::is_one(self)
    }
    fn try_recip(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

/// Determinant by expansion over column subsets (`O(2^n n)` ring products).
/// `one` is the multiplicative identity; the empty matrix has determinant
/// `one`.
pub fn det_expansion<T: Ring>(m: &[Vec<T>], one: &T) -> T {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    assert!(n <= 20, "determinant too large for subset expansion");
    let full = (1usize << n) - 1;
    let mut dp: Vec<Option<T>> = vec![None; 1 << n];
    dp[0] = Some(one.clone());
    for mask in 0..full {
        let Some(cur) = dp[mask].clone() else { continue };
        let row = mask.count_ones() as usize;
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let term = cur.ring_mul(&m[row][c]);
            let next = mask | (1 << c);
            dp[next] = Some(match dp[next].take() {
                None if above % 2 == 0 => term,
                None => one.ring_sub(one).ring_sub(&term),
                Some(acc) if above % 2 == 0 => acc.ring_add(&term),
                Some(acc) => acc.ring_sub(&term),
            });
        }
    }
    dp[full].take().expect("full mask reached")
}

/// Rational determinant by fraction-free Gaussian elimination.
pub fn det_rational(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

pub fn det_integer(m: &[Vec<BigInt>]) -> BigInt {
    let mq: Vec<Vec<Q>> = m
        .iter()
        .map(|r| r.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect();
    det_rational(&mq).to_integer()
}

/// Rational interval `[lo, hi]` enclosing `e^x` for rational `x`, from a Taylor
/// partial sum and a Lagrange remainder bound; width shrinks with `terms`.
pub fn exp_enclosure(x: &Q, terms: usize) -> (Q, Q) {
    if x.is_negative() {
        let (lo, hi) = exp_enclosure(&-x, terms);
        return (Q::one() / hi, Q::one() / lo);
    }
    let mut sum = Q::zero();
    let mut term = Q::one();
    for k in 0..=terms {
        if k > 0 {
            term = term * x / q(k as i64);
        }
        sum += &term;
    }
    // remainder <= e^x x^{K+1}/(K+1)! <= 3^{ceil x} x^{K+1}/(K+1)!
    let ceil = x.ceil().to_integer();
    let three_pow = Q::from_integer(num::pow::pow(BigInt::from(3), ceil.try_into().unwrap_or(64)));
    let rem = three_pow * pow_q(x, terms + 1) / Q::from_integer(factorial(terms as u64 + 1));
    (sum.clone(), sum + rem)
}

pub fn to_f64(x: &Q) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3/4", "5/6", "12"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn extended_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, 0), BigInt::from(1));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial_u64(6, 3), 20);
    }

    #[test]
    fn determinants_agree() {
        let m = vec![
            vec![q(2), q(-1), q(0)],
            vec![qr(1, 2), q(3), q(4)],
            vec![q(1), q(1), qr(-5, 3)],
        ];
        let a = det_rational(&m);
        let b = det_expansion(&m, &Q::one());
        assert_eq!(a, b);
        assert_eq!(det_expansion::<Q>(&[], &Q::one()), Q::one());
    }

    #[test]
    fn exp_enclosure_brackets_e() {
        let (lo, hi) = exp_enclosure(&q(1), 15);
        assert!(to_f64(&lo) <= std::f64::consts::E && std::f64::consts::E <= to_f64(&hi));
        assert!(to_f64(&(hi - lo)) < 1e-11);
        let (lo, hi) = exp_enclosure(&q(-1), 15);
        let e_inv = (-1f64).exp();
        assert!(to_f64(&lo) <= e_inv && e_inv <= to_f64(&hi));
    }
}
