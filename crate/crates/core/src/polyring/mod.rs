//! Truncated symmetric polynomials over the rationals in the monomial
//! symmetric basis, the classical bases `h, e, p, s`, Schur extraction, and
//! finitely supported basis vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::arith::{det_expansion, q, Ring, Q};
use crate::error::{Error, Result};
use crate::shapes::{strip_classify, Partition};

pub mod chain;
pub mod poly;
pub mod series;

pub use chain::ChainSystem;
pub use poly::Poly;
pub use series::PowerSeries;

/// Symmetric polynomial in `nvars` variables, truncated above total degree
/// `degcap`, stored as coefficients of the monomial symmetric functions
/// `m_κ` (`κ` with at most `nvars` parts and size at most `degcap`).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSymPoly {
    nvars: usize,
    degcap: usize,
    terms: BTreeMap<Partition, Q>,
}

impl TruncatedSymPoly {
    pub fn zero(nvars: usize, degcap: usize) -> Self {
        TruncatedSymPoly { nvars, degcap, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, degcap: usize) -> Self {
        Self::monomial(nvars, degcap, Partition::empty(), Q::one())
    }

    pub fn constant(nvars: usize, degcap: usize, c: Q) -> Self {
        Self::monomial(nvars, degcap, Partition::empty(), c)
    }

    /// `c · m_κ`, dropped if `κ` falls outside the truncation.
    pub fn monomial(nvars: usize, degcap: usize, kappa: Partition, c: Q) -> Self {
        let mut p = Self::zero(nvars, degcap);
        p.add_term(kappa, c);
        p
    }

    pub fn from_terms(nvars: usize, degcap: usize, terms: BTreeMap<Partition, Q>) -> Self {
        let mut p = Self::zero(nvars, degcap);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degcap(&self) -> usize {
        self.degcap
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coeff(&self, kappa: &Partition) -> Q {
        self.terms.get(kappa).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn fits(&self, kappa: &Partition) -> bool {
        kappa.len() <= self.nvars && kappa.size() <= self.degcap
    }

    pub fn add_term(&mut self, kappa: Partition, c: Q) {
        if c.is_zero() || !self.fits(&kappa) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(kappa) {
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

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    /// Drops everything above degree `degcap` (which may only shrink).
    pub fn truncate(&self, degcap: usize) -> Self {
        let cap = degcap.min(self.degcap);
        Self::from_terms(self.nvars, cap, self.terms.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.truncate(other.degcap);
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Self::from_terms(self.nvars, self.degcap, terms)
    }

    /// Exact product truncated at the smaller cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let cap = self.degcap.min(other.degcap);
        let mut out = Self::zero(self.nvars, cap);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        let lo_a = self.terms.keys().map(|k| k.size()).min().unwrap();
        let lo_b = other.terms.keys().map(|k| k.size()).min().unwrap();
        for kappa in Partition::all_up_to_len(cap, self.nvars) {
            if kappa.size() < lo_a + lo_b {
                continue;
            }
            let parts = kappa.parts();
            let mut alpha = vec![0usize; parts.len()];
            let mut total = Q::zero();
            loop {
                let a = Partition::from_exponents(&alpha);
                if let Some(ca) = self.terms.get(&a) {
                    let beta: Vec<usize> = parts.iter().zip(&alpha).map(|(k, a)| k - a).collect();
                    if let Some(cb) = other.terms.get(&Partition::from_exponents(&beta)) {
                        total += ca * cb;
                    }
                }
                let mut i = 0;
                while i < alpha.len() {
                    if alpha[i] < parts[i] {
                        alpha[i] += 1;
                        break;
                    }
                    alpha[i] = 0;
                    i += 1;
                }
                if i == alpha.len() {
                    break;
                }
            }
            out.add_term(kappa, total);
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::one(self.nvars, self.degcap);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `f(x) ↦ f(−x)`.
    pub fn negate_variables(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), if k.size() % 2 == 0 { v.clone() } else { -v }))
            .collect();
        Self::from_terms(self.nvars, self.degcap, terms)
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect();
        Self::from_terms(self.nvars, self.degcap, terms)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.size()).max()
    }

    /// Expands every `m_κ` into its distinct monomials.
    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero(self.nvars, self.degcap);
        for (k, c) in &self.terms {
            let mut exps: Vec<usize> = (0..self.nvars).map(|i| k.part(i)).collect();
            exps.sort_unstable();
            loop {
                out.add_term(exps.clone(), c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        out
    }

    /// Value at a point with exactly `nvars` coordinates.
    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.nvars {
            return Err(Error::NvarsMismatch(self.nvars, point.len()));
        }
        Ok(self.to_poly().eval(point))
    }
}

impl Partition {
    /// Partition from an exponent vector in any order, zeros allowed.
    pub fn from_exponents(exps: &[usize]) -> Partition {
        let mut v: Vec<usize> = exps.iter().copied().filter(|&e| e > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(&v)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for TruncatedSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[v={} D={}]", self.nvars, self.degcap)?;
        for (k, c) in &self.terms {
            write!(f, " {}*m({})", crate::arith::format_rational(c), k)?;
        }
        Ok(())
    }
}

impl Ring for TruncatedSymPoly {
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other).expect("matching variable counts")
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other).expect("matching variable counts")
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other).expect("matching variable counts")
    }
}

/// The basis a [`BasisVector`] is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    Schur,
    Gtilde,
    Gsigned,
    Gdual,
    H,
    E,
    P,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::Gtilde => "gtilde",
            Basis::Gsigned => "gsigned",
            Basis::Gdual => "gdual",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
        }
    }
}

/// Finitely supported `partition → rational` map tagged with its basis.
#[derive(Clone, PartialEq, Eq)]
pub struct BasisVector {
    basis: Basis,
    coeffs: BTreeMap<Partition, Q>,
}

impl BasisVector {
    pub fn zero(basis: Basis) -> Self {
        BasisVector { basis, coeffs: BTreeMap::new() }
    }

    pub fn unit(basis: Basis, lambda: Partition) -> Self {
        let mut v = Self::zero(basis);
        v.add_term(lambda, Q::one());
        v
    }

    pub fn from_map(basis: Basis, map: BTreeMap<Partition, Q>) -> Self {
        let mut v = Self::zero(basis);
        for (k, c) in map {
            v.add_term(k, c);
        }
        v
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Q> {
        &self.coeffs
    }

    pub fn get(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    fn same_basis(&self, other: &Self) {
        assert_eq!(self.basis, other.basis, "vectors live in different bases");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_basis(other);
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let map = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        Self::from_map(self.basis, map)
    }

    /// Keeps only indices of size at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        let map = self.coeffs.iter().filter(|(k, _)| k.size() <= d).map(|(k, v)| (k.clone(), v.clone())).collect();
        Self::from_map(self.basis, map)
    }

    /// Reinterprets the coefficients in another basis.
    pub fn retag(&self, basis: Basis) -> Self {
        BasisVector { basis, coeffs: self.coeffs.clone() }
    }

    /// `ω(s_λ) = s_{λ'}` applied termwise to a Schur vector.
    pub fn omega(&self) -> Self {
        assert_eq!(self.basis, Basis::Schur, "omega acts on Schur vectors");
        let map = self.coeffs.iter().map(|(k, v)| (k.conjugate(), v.clone())).collect();
        Self::from_map(Basis::Schur, map)
    }

    pub fn all_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.basis.name())?;
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}): {}", k, crate::arith::format_rational(c))?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    H,
    E,
    P,
    S,
}

pub fn h_poly(n: usize, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    let terms = Partition::all_of_size(n).into_iter().map(|k| (k, Q::one())).collect();
    TruncatedSymPoly::from_terms(nvars, degcap, terms)
}

pub fn e_poly(n: usize, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    TruncatedSymPoly::monomial(nvars, degcap, Partition::column(n), Q::one())
}

pub fn p_poly(n: usize, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    if n == 0 {
        return TruncatedSymPoly::constant(nvars, degcap, q(nvars as i64));
    }
    TruncatedSymPoly::monomial(nvars, degcap, Partition::row(n), Q::one())
}

/// Skew Schur polynomial `s_{λ/μ}` as a sum over chains of horizontal
/// strips (semistandard tableaux), truncated.
pub fn skew_schur_poly(outer: &Partition, inner: &Partition, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    if !outer.contains(inner) {
        return TruncatedSymPoly::zero(nvars, degcap);
    }
    ChainSystem::new(outer, inner, degcap, |from, to, cap| {
        let info = strip_classify(to, from);
        if !info.horizontal || info.boxes > cap {
            return None;
        }
        let mut w = vec![0u128; cap + 1];
        w[info.boxes] = 1;
        Some(w)
    })
    .realize(nvars, degcap)
}

pub fn schur_poly(lambda: &Partition, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    skew_schur_poly(lambda, &Partition::empty(), nvars, degcap)
}

/// Product `f_{λ1} f_{λ2} …` for `h, e, p`; the Schur polynomial for `s`.
pub fn classical_basis(kind: ClassicalKind, index: &Partition, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    let single = |n: usize| match kind {
        ClassicalKind::H => h_poly(n, nvars, degcap),
        ClassicalKind::E => e_poly(n, nvars, degcap),
        ClassicalKind::P => p_poly(n, nvars, degcap),
        ClassicalKind::S => unreachable!(),
    };
    if kind == ClassicalKind::S {
        return schur_poly(index, nvars, degcap);
    }
    index
        .parts()
        .iter()
        .fold(TruncatedSymPoly::one(nvars, degcap), |acc, &n| acc.mul(&single(n)).unwrap())
}

/// Schur expansion of a symmetric polynomial by peeling leading monomials
/// (`s_λ = m_λ + lower terms in dominance order`). Requires
/// `nvars >= degcap` so that no Schur polynomial is truncated to zero.
pub fn to_schur(p: &TruncatedSymPoly) -> Result<BasisVector> {
    if p.nvars < p.degcap {
        return Err(Error::NotFaithful { needed: p.degcap, got: p.nvars });
    }
    let mut rest = p.clone();
    let mut out = BasisVector::zero(Basis::Schur);
    let mut cache: HashMap<Partition, TruncatedSymPoly> = HashMap::new();
    while let Some((lead, c)) = rest.terms.iter().next().map(|(k, v)| (k.clone(), v.clone())) {
        let s = cache
            .entry(lead.clone())
            .or_insert_with(|| schur_poly(&lead, p.nvars, p.degcap))
            .clone();
        rest = rest.sub(&s.scale(&c))?;
        out.add_term(lead, c);
    }
    Ok(out)
}

/// Reassembles a Schur (or other classical) vector as a polynomial.
pub fn from_basis_vector(v: &BasisVector, nvars: usize, degcap: usize) -> TruncatedSymPoly {
    let kind = match v.basis() {
        Basis::Schur => ClassicalKind::S,
        Basis::H => ClassicalKind::H,
        Basis::E => ClassicalKind::E,
        Basis::P => ClassicalKind::P,
        Basis::Monomial => {
            return TruncatedSymPoly::from_terms(nvars, degcap, v.coeffs().clone());
        }
        other => panic!("{} vectors need the Grothendieck realizations", other.name()),
    };
    let mut acc = TruncatedSymPoly::zero(nvars, degcap);
    for (k, c) in v.coeffs() {
        acc = acc.add(&classical_basis(kind, k, nvars, degcap).scale(c)).unwrap();
    }
    acc
}

/// `det[h_{λ_i − i + j}]` over any ring; `h(n)` must return zero for
/// `n < 0` and one for `n = 0`.
pub fn jacobi_trudi<T: Ring>(lambda: &Partition, h: impl Fn(i64) -> T, one: &T) -> T {
    let l = lambda.len();
    let m: Vec<Vec<T>> = (0..l)
        .map(|i| (0..l).map(|j| h(lambda.part(i) as i64 - i as i64 + j as i64)).collect())
        .collect();
    det_expansion(&m, one)
}

/// `s_λ` in the `h` basis by expanding the Jacobi–Trudi determinant over
/// permutations; keys are the multisets of `h` indices.
pub fn schur_to_h(lambda: &Partition) -> BasisVector {
    let l = lambda.len();
    let mut out = BasisVector::zero(Basis::H);
    let mut perm: Vec<usize> = (0..l).collect();
    loop {
        let mut idx = Vec::with_capacity(l);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            let n = lambda.part(i) as i64 - i as i64 + j as i64;
            if n < 0 {
                ok = false;
                break;
            }
            idx.push(n as usize);
        }
        if ok {
            let inversions = (0..l).flat_map(|a| (a + 1..l).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
            let sign = if inversions % 2 == 0 { Q::one() } else { -Q::one() };
            out.add_term(Partition::from_exponents(&idx), sign);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Expansion of a symmetric polynomial in products of complete homogeneous
/// functions (requires faithfulness like [`to_schur`]).
pub fn to_h_basis(p: &TruncatedSymPoly) -> Result<BasisVector> {
    let schur = to_schur(p)?;
    let mut out = BasisVector::zero(Basis::H);
    for (lam, c) in schur.coeffs() {
        out = out.add(&schur_to_h(lam).scale(c));
    }
    Ok(out)
}

/// Kostka number `K_{λκ}` as the `m_κ` coefficient of `s_λ`.
pub fn kostka(lambda: &Partition, kappa: &Partition) -> BigInt {
    let s = schur_poly(lambda, kappa.len().max(1), kappa.size());
    s.coeff(kappa).to_integer()
}
