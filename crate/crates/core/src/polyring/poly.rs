//! Polynomials in finitely many named variables (not necessarily
//! symmetric), used for variable splitting, substitution and brute-force
//! oracles.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::arith::{binomial, pow_q, Ring, Q};
use crate::error::{Error, Result};
use crate::polyring::TruncatedSymPoly;
use crate::shapes::Partition;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    degcap: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize, degcap: usize) -> Self {
        Poly { nvars, degcap, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, degcap: usize) -> Self {
        let mut p = Self::zero(nvars, degcap);
        p.add_term(vec![0; nvars], Q::one());
        p
    }

    /// The variable `x_i` (0-indexed).
    pub fn var(i: usize, nvars: usize, degcap: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars, degcap);
        p.add_term(e, Q::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degcap(&self) -> usize {
        self.degcap
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[usize]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: Q) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() || exps.iter().sum::<usize>() > self.degcap {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn truncate(&self, degcap: usize) -> Self {
        let mut out = Self::zero(self.nvars, degcap.min(self.degcap));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.truncate(other.degcap);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.nvars, self.degcap);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.degcap.min(other.degcap));
        for (ea, ca) in &self.terms {
            let da: usize = ea.iter().sum();
            for (eb, cb) in &other.terms {
                if da + eb.iter().sum::<usize>() > out.degcap {
                    continue;
                }
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Renames variable `i` to `map[i]` in a polynomial ring with `nvars`
    /// variables.
    pub fn embed(&self, map: &[usize], nvars: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars, self.degcap);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (i, &x) in e.iter().enumerate() {
                f[map[i]] += x;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Substitutes the constant `value` for variable `i`, removing it.
    pub fn substitute(&self, i: usize, value: &Q) -> Self {
        let mut out = Self::zero(self.nvars - 1, self.degcap);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let x = f.remove(i);
            out.add_term(f, c * pow_q(value, x));
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= pow_q(x, k);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `x_i ↦ x_i / (1 − x_i)` in every variable, truncating at
    /// the cap: `(x/(1−x))^a = Σ_{n ≥ a} C(n−1, a−1) x^n`.
    pub fn substitute_geometric(&self) -> Self {
        let cap = self.degcap;
        let mut out = Self::zero(self.nvars, cap);
        for (e, c) in &self.terms {
            let mut partial: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), c.clone())];
            for &a in e {
                let mut next = Vec::new();
                for (pre, coef) in &partial {
                    let used: usize = pre.iter().sum();
                    if a == 0 {
                        let mut f = pre.clone();
                        f.push(0);
                        next.push((f, coef.clone()));
                        continue;
                    }
                    for n in a..=cap.saturating_sub(used) {
                        let b = binomial(n as i64 - 1, a as i64 - 1);
                        let mut f = pre.clone();
                        f.push(n);
                        next.push((f, coef * Q::from_integer(b)));
                    }
                }
                partial = next;
            }
            for (f, coef) in partial {
                out.add_term(f, coef);
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        let mut groups: BTreeMap<Vec<usize>, (usize, &Q)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f.sort_unstable();
            let slot = groups.entry(f).or_insert((0, c));
            if slot.1 != c {
                return false;
            }
            slot.0 += 1;
        }
        groups.iter().all(|(f, (count, _))| *count == distinct_permutations(f))
    }

    /// The symmetric polynomial with these monomial coefficients, or an
    /// error when the polynomial is not symmetric.
    pub fn to_sym(&self) -> Result<TruncatedSymPoly> {
        if !self.is_symmetric() {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
        let mut out = TruncatedSymPoly::zero(self.nvars, self.degcap);
        for (e, c) in &self.terms {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_exponents(e), c.clone());
            }
        }
        Ok(out)
    }
}

fn distinct_permutations(sorted: &[usize]) -> usize {
    let mut total: u128 = 1;
    let mut run = 0u128;
    for (i, x) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *x { run + 1 } else { 1 };
        total = total * (i as u128 + 1) / run;
    }
    total as usize
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[v={} D={}]", self.nvars, self.degcap)?;
        for (e, c) in &self.terms {
            write!(f, " {}*x^{:?}", crate::arith::format_rational(c), e)?;
        }
        Ok(())
    }
}

impl Ring for Poly {
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
