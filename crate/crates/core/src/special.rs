//! Specializations: Edrei–Thoma parametrized homomorphisms of `Λ` given by
//! their `h`-values, the extensions `φ̂_α, ε̂_β, π̂_γ` to the ring spanned by
//! `G̃_λ` and their unions, induced Schur specializations, values of the
//! signed family, and positivity scans.

use std::collections::HashMap;

use num::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::arith::{exp_enclosure, format_rational, parse_rational, pow_q, q, Scalar, Q};
use crate::error::{Error, Result};
use crate::groth::{link_value, schur_expansion_of, skew_expansion, CapPolicy, Family, GrothElement};
use crate::polyring::jacobi_trudi;
use crate::polyring::series::{h_to_p, PowerSeries};
use crate::shapes::{ExtendedSkewShape, Partition};
use crate::tableaux::count_ssvt;
use crate::value::SpecValue;

/// How a parameter set turns into `h`-values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HModel {
    /// `e^{γz} ∏ (1 + β_n z)/(1 − α_n z)`.
    #[default]
    EdreiThoma,
    /// `e^{γz + δz/(1−z)} ∏ 1/(1 − α_n z) ∏ (1 + β_n z/(1 − z))`, the
    /// `g`-positive class.
    Dual,
}

impl HModel {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "edrei-thoma" | "lambda" => Ok(HModel::EdreiThoma),
            "dual" | "g" => Ok(HModel::Dual),
            _ => Err(Error::InvalidArgument(format!("unknown model {s:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HModel::EdreiThoma => "edrei-thoma",
            HModel::Dual => "dual",
        }
    }
}

/// Finitely many nonnegative rational parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdreiThomaParams {
    pub alphas: Vec<Q>,
    pub betas: Vec<Q>,
    pub gamma: Q,
    pub delta: Q,
    pub model: HModel,
}

fn json_rational(v: &Value, field: &str) -> Result<Q> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(q)
            .ok_or_else(|| Error::ParseRational(format!("{field}: {n}"))),
        _ => Err(Error::ParseRational(format!("{field}: {v}"))),
    }
}

impl EdreiThomaParams {
    pub fn alphas(alphas: &[Q]) -> Self {
        EdreiThomaParams { alphas: alphas.to_vec(), ..Self::default() }
    }

    pub fn betas(betas: &[Q]) -> Self {
        EdreiThomaParams { betas: betas.to_vec(), ..Self::default() }
    }

    pub fn gamma(gamma: Q) -> Self {
        EdreiThomaParams { gamma, ..Self::default() }
    }

    /// `{"alphas": ["1/2"], "betas": [], "gamma": "0", "delta": "0",
    /// "model": "dual"}`; every key is optional.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| Error::InvalidArgument("parameter file must be an object".into()))?;
        let list = |key: &str| -> Result<Vec<Q>> {
            match obj.get(key) {
                None => Ok(Vec::new()),
                Some(Value::Array(xs)) => xs.iter().map(|x| json_rational(x, key)).collect(),
                Some(other) => Err(Error::ParseRational(format!("{key}: {other}"))),
            }
        };
        let scalar = |key: &str| obj.get(key).map_or(Ok(Q::zero()), |x| json_rational(x, key));
        let model = match obj.get("model") {
            None => HModel::default(),
            Some(Value::String(s)) => HModel::parse(s)?,
            Some(other) => return Err(Error::InvalidArgument(format!("model: {other}"))),
        };
        let p = EdreiThomaParams {
            alphas: list("alphas")?,
            betas: list("betas")?,
            gamma: scalar("gamma")?,
            delta: scalar("delta")?,
            model,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> Value {
        let fmt = |xs: &[Q]| xs.iter().map(format_rational).collect::<Vec<_>>();
        let mut m = Map::new();
        m.insert("alphas".into(), json!(fmt(&self.alphas)));
        m.insert("betas".into(), json!(fmt(&self.betas)));
        m.insert("gamma".into(), json!(format_rational(&self.gamma)));
        m.insert("delta".into(), json!(format_rational(&self.delta)));
        m.insert("model".into(), json!(self.model.name()));
        Value::Object(m)
    }

    pub fn validate(&self) -> Result<()> {
        let all = self.alphas.iter().chain(&self.betas).chain([&self.gamma, &self.delta]);
        for x in all {
            if x.is_negative() {
                return Err(Error::ParameterRange(format!("negative parameter {}", format_rational(x))));
            }
        }
        Ok(())
    }

    /// Extension to `Γ` needs every `β < 1`.
    pub fn require_betas_below_one(&self) -> Result<()> {
        match self.betas.iter().find(|b| **b >= Q::one()) {
            Some(b) => Err(Error::ParameterRange(format!("beta = {} must be < 1", format_rational(b)))),
            None => Ok(()),
        }
    }

    /// The signed extension needs every `α ≤ 1`.
    pub fn require_alphas_at_most_one(&self) -> Result<()> {
        match self.alphas.iter().find(|a| **a > Q::one()) {
            Some(a) => Err(Error::ParameterRange(format!("alpha = {} must be <= 1", format_rational(a)))),
            None => Ok(()),
        }
    }

    /// `h_0, …, h_n` under the parameter set's own model.
    pub fn h_values(&self, n: usize) -> Vec<Q> {
        match self.model {
            HModel::EdreiThoma => lambda_h_values(self, n),
            HModel::Dual => g_spec_h_values(self, n),
        }
    }
}

/// `e^{γz}` truncated at `z^n`.
fn exp_series(gamma: &Q, n: usize) -> PowerSeries<Q> {
    let mut c = Vec::with_capacity(n + 1);
    let mut t = Q::one();
    for k in 0..=n {
        if k > 0 {
            t = t * gamma / q(k as i64);
        }
        c.push(t.clone());
    }
    PowerSeries::new(c, n)
}

/// `h_0 = 1, h_1, …, h_n` from `e^{γz} ∏ (1 + β_i z)/(1 − α_i z)`.
pub fn lambda_h_values(p: &EdreiThomaParams, n: usize) -> Vec<Q> {
    let mut s = exp_series(&p.gamma, n);
    for a in &p.alphas {
        s = s.mul(&PowerSeries::geometric(a, n));
    }
    for b in &p.betas {
        s = s.mul(&PowerSeries::linear(b, n));
    }
    s.coeffs().to_vec()
}

/// `h_0 = 1, h_1, …, h_n` from
/// `e^{γz + δz/(1−z)} ∏ 1/(1 − α_i z) ∏ (1 + β_i z/(1 − z))`.
pub fn g_spec_h_values(p: &EdreiThomaParams, n: usize) -> Vec<Q> {
    let z_over = PowerSeries::new((0..=n).map(|k| if k == 0 { Q::zero() } else { Q::one() }).collect(), n);
    let arg = PowerSeries::new(vec![Q::zero(), p.gamma.clone()], n).add(&z_over.scale(&p.delta));
    let mut s = arg.exp().expect("argument has no constant term");
    for a in &p.alphas {
        s = s.mul(&PowerSeries::geometric(a, n));
    }
    for b in &p.betas {
        s = s.mul(&PowerSeries::one(n).add(&z_over.scale(b)));
    }
    s.coeffs().to_vec()
}

/// `ρ(s_λ) = det[h_{λ_i − i + j}]`; `hvals[k]` is `ρ(h_k)` with `hvals[0] = 1`.
pub fn schur_value<T: Scalar>(hvals: &[T], lambda: &Partition) -> Result<T> {
    let needed = if lambda.is_empty() { 0 } else { lambda.first() + lambda.len() - 1 };
    if hvals.len() <= needed {
        return Err(Error::InsufficientValues { needed, have: hvals.len().saturating_sub(1) });
    }
    let h = |k: i64| {
        if k < 0 {
            T::zero_value()
        } else {
            hvals[k as usize].clone()
        }
    };
    Ok(jacobi_trudi(lambda, h, &T::one_value()))
}

/// `h`-values of the union of specializations: coefficientwise product of
/// their `H(z)` series, cut at the shortest input.
pub fn union_specs(specs: &[Vec<Q>]) -> Vec<Q> {
    let n = specs.iter().map(|s| s.len()).min().unwrap_or(1).max(1) - 1;
    specs
        .iter()
        .fold(PowerSeries::one(n), |acc, s| acc.mul(&PowerSeries::new(s.clone(), n)))
        .coeffs()
        .to_vec()
}

/// `ρ(p_1), …, ρ(p_k)` from the closed forms of each model (index 0 is 0).
pub fn p_closed_form(p: &EdreiThomaParams, k: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); k + 1];
    for (j, slot) in out.iter_mut().enumerate().skip(1) {
        let mut v = Q::zero();
        for a in &p.alphas {
            v += pow_q(a, j);
        }
        match p.model {
            HModel::EdreiThoma => {
                for b in &p.betas {
                    let t = pow_q(b, j);
                    v += if j % 2 == 1 { t } else { -t };
                }
                if j == 1 {
                    v += &p.gamma;
                }
            }
            HModel::Dual => {
                for b in &p.betas {
                    v += Q::one() - pow_q(&(Q::one() - b), j);
                }
                v += &p.delta * q(j as i64);
                if j == 1 {
                    v += &p.gamma;
                }
            }
        }
        *slot = v;
    }
    out
}

/// Newton-converted `p`-values from the `h`-series agree with the closed
/// forms up to `p_k`.
pub fn p_values_consistency(p: &EdreiThomaParams, k: usize) -> Result<bool> {
    let h = p.h_values(k);
    Ok(h_to_p(&h)? == p_closed_form(p, k))
}

/// `ρ(g_λ)` through the Schur expansion of `g_λ`.
pub fn dual_value<T: Scalar>(hvals: &[T], lambda: &Partition) -> Result<T> {
    let exp = schur_expansion_of(&GrothElement::straight(Family::Gdual, lambda.clone()), lambda.size())?;
    let mut acc = T::zero_value();
    for (mu, c) in exp.coeffs() {
        acc = acc.ring_add(&schur_value(hvals, mu)?.ring_mul(&T::from_q(c.clone())));
    }
    Ok(acc)
}

/// A generator of a specialization of `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    PhiHat(Q),
    EpsHat(Q),
    PiHat(Q),
}

/// Union of generators. Values involving `π̂` are rational intervals built
/// from series truncated at degree `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSpec {
    generators: Vec<Generator>,
    truncation: usize,
}

pub const DEFAULT_TRUNCATION: usize = 12;

impl GammaSpec {
    pub fn new(generators: Vec<Generator>, truncation: usize) -> Result<Self> {
        for g in &generators {
            let x = match g {
                Generator::PhiHat(x) | Generator::EpsHat(x) | Generator::PiHat(x) => x,
            };
            if x.is_negative() {
                return Err(Error::ParameterRange(format!("negative parameter {}", format_rational(x))));
            }
            if let Generator::EpsHat(b) = g {
                if *b >= Q::one() {
                    return Err(Error::ParameterRange(format!("eps_hat needs beta < 1, got {}", format_rational(b))));
                }
            }
        }
        Ok(GammaSpec { generators, truncation })
    }

    pub fn trivial() -> Self {
        GammaSpec { generators: Vec::new(), truncation: DEFAULT_TRUNCATION }
    }

    pub fn phi_hat(alpha: Q) -> Result<Self> {
        Self::new(vec![Generator::PhiHat(alpha)], DEFAULT_TRUNCATION)
    }

    pub fn eps_hat(beta: Q) -> Result<Self> {
        Self::new(vec![Generator::EpsHat(beta)], DEFAULT_TRUNCATION)
    }

    pub fn pi_hat(gamma: Q, truncation: usize) -> Result<Self> {
        Self::new(vec![Generator::PiHat(gamma)], truncation)
    }

    /// `φ̂_{α_i}` for each `α`, `ε̂_{β_i}` for each `β`, and `π̂_γ` when `γ > 0`.
    pub fn from_params(p: &EdreiThomaParams, truncation: usize) -> Result<Self> {
        p.validate()?;
        p.require_betas_below_one()?;
        let mut g: Vec<Generator> = p.alphas.iter().cloned().map(Generator::PhiHat).collect();
        g.extend(p.betas.iter().cloned().map(Generator::EpsHat));
        if p.gamma.is_positive() {
            g.push(Generator::PiHat(p.gamma.clone()));
        }
        Self::new(g, truncation)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        GammaSpec { generators: g, truncation: self.truncation.max(other.truncation) }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn with_truncation(&self, truncation: usize) -> Self {
        GammaSpec { generators: self.generators.clone(), truncation }
    }

    /// Sum of all `π̂` parameters; `π̂_γ ∪ π̂_γ' = π̂_{γ+γ'}`.
    pub fn total_gamma(&self) -> Q {
        self.generators
            .iter()
            .filter_map(|g| if let Generator::PiHat(x) = g { Some(x.clone()) } else { None })
            .fold(Q::zero(), |a, b| a + b)
    }

    pub fn is_exact(&self) -> bool {
        self.total_gamma().is_zero()
    }

    /// Edrei–Thoma parameters of the underlying specialization of `Λ`.
    pub fn params(&self) -> EdreiThomaParams {
        let mut p = EdreiThomaParams { gamma: self.total_gamma(), ..EdreiThomaParams::default() };
        for g in &self.generators {
            match g {
                Generator::PhiHat(a) => p.alphas.push(a.clone()),
                Generator::EpsHat(b) => p.betas.push(b.clone()),
                Generator::PiHat(_) => {}
            }
        }
        p
    }
}

/// `G̃_ν(π̂_γ) = Σ_m γ^m e^ν(m) / m!` enclosed by its partial sum up to
/// `m = M` and the tail bound `(e^γ − 1)^{|ν|} − [γ^{≤M}] (Σ_{k≤M} γ^k/k!)^{|ν|}`.
pub fn pi_hat_value(nu: &Partition, gamma: &Q, truncation: usize) -> SpecValue {
    if nu.is_empty() {
        return SpecValue::one();
    }
    if gamma.is_zero() {
        return SpecValue::zero();
    }
    let n = nu.size();
    let m = truncation;
    let mut lower = Q::zero();
    let mut term = Q::one();
    for k in 0..=m {
        if k > 0 {
            term = term * gamma / q(k as i64);
        }
        if k >= n {
            lower += &term * Q::from_integer(count_ssvt(nu, k));
        }
    }
    let base = PowerSeries::new(exp_series(gamma, m).coeffs().iter().skip(1).cloned().collect::<Vec<_>>(), m);
    let shifted = PowerSeries::new(std::iter::once(Q::zero()).chain(base.coeffs().iter().cloned()).collect(), m);
    let mut power = PowerSeries::one(m);
    for _ in 0..n {
        power = power.mul(&shifted);
    }
    let head: Q = power.coeffs().iter().fold(Q::zero(), |a, b| a + b);
    let (_, e_hi) = exp_enclosure(gamma, m + 30);
    let total_hi = pow_q(&(e_hi - Q::one()), n);
    let tail = if total_hi > head { total_hi - head } else { Q::zero() };
    SpecValue::interval(lower.clone(), lower + tail)
}

/// Evaluates `G̃_{λ//μ}` at a [`GammaSpec`], caching straight `π̂` values
/// and skew expansions.
pub struct GammaEvaluator {
    spec: GammaSpec,
    gamma: Q,
    pi_cache: HashMap<Partition, SpecValue>,
    skew_cache: HashMap<(Partition, Partition), SpecValue>,
}

impl GammaEvaluator {
    pub fn new(spec: &GammaSpec) -> Self {
        GammaEvaluator {
            gamma: spec.total_gamma(),
            spec: spec.clone(),
            pi_cache: HashMap::new(),
            skew_cache: HashMap::new(),
        }
    }

    pub fn spec(&self) -> &GammaSpec {
        &self.spec
    }

    fn pi_straight(&mut self, nu: &Partition) -> SpecValue {
        let (g, m) = (self.gamma.clone(), self.spec.truncation);
        self.pi_cache.entry(nu.clone()).or_insert_with(|| pi_hat_value(nu, &g, m)).clone()
    }

    fn pi_skew(&mut self, outer: &Partition, inner: &Partition) -> Result<SpecValue> {
        if inner.is_empty() {
            return Ok(self.pi_straight(outer));
        }
        let key = (outer.clone(), inner.clone());
        if let Some(v) = self.skew_cache.get(&key) {
            return Ok(v.clone());
        }
        let exp = skew_expansion(outer, inner, CapPolicy::default())?;
        let mut acc = SpecValue::zero();
        for (kappa, c) in exp.coeffs() {
            acc = acc.add(&self.pi_straight(kappa).scale(c));
        }
        self.skew_cache.insert(key, acc.clone());
        Ok(acc)
    }

    /// `G̃_{λ//μ}(φ)` via the branching rule, one generator per link.
    pub fn value(&mut self, shape: &ExtendedSkewShape) -> Result<SpecValue> {
        let outer = shape.outer().clone();
        let inner = shape.inner().clone();
        let states = outer.interval_from(&inner);
        let start = states.iter().position(|s| *s == inner).expect("inner lies in its interval");
        let mut dp: Vec<SpecValue> = vec![SpecValue::zero(); states.len()];
        if self.gamma.is_zero() {
            dp[start] = SpecValue::one();
        } else {
            for (j, to) in states.iter().enumerate() {
                dp[j] = self.pi_skew(to, &inner)?;
            }
        }
        let conj: Vec<Partition> = states.iter().map(|s| s.conjugate()).collect();
        for g in &self.spec.generators {
            if matches!(g, Generator::PiHat(_)) {
                continue;
            }
            let mut next = vec![SpecValue::zero(); states.len()];
            for (i, from) in states.iter().enumerate() {
                if dp[i].is_zero() {
                    continue;
                }
                for (j, to) in states.iter().enumerate().skip(i) {
                    let w: Option<Q> = match g {
                        Generator::PhiHat(a) => link_value(Family::Gtilde, from, to, a),
                        Generator::EpsHat(b) => {
                            let t = b / (Q::one() - b);
                            link_value(Family::Gtilde, &conj[i], &conj[j], &t)
                        }
                        Generator::PiHat(_) => unreachable!(),
                    };
                    if let Some(w) = w {
                        next[j] = next[j].add(&dp[i].scale(&w));
                    }
                }
            }
            dp = next;
        }
        let end = states.iter().position(|s| *s == outer).expect("outer lies in its interval");
        Ok(dp[end].clone())
    }

    pub fn straight(&mut self, lambda: &Partition) -> Result<SpecValue> {
        self.value(&ExtendedSkewShape::straight(lambda.clone()))
    }

    /// `G̃_(0) = 1, G̃_(1), …, G̃_(n)`.
    pub fn row_values(&mut self, n: usize) -> Result<Vec<SpecValue>> {
        (0..=n).map(|k| self.straight(&Partition::row(k))).collect()
    }

    /// `Δ = 1 + G̃_(1)(φ)`.
    pub fn delta(&mut self) -> Result<SpecValue> {
        Ok(SpecValue::one().add(&self.straight(&Partition::row(1))?))
    }

    /// Errors unless `G̃_(1)(φ)` is (or may be) `1`.
    pub fn check_normalized(&mut self) -> Result<()> {
        let g1 = self.straight(&Partition::row(1))?;
        if g1.contains(&Q::one()) {
            Ok(())
        } else {
            Err(Error::NotNormalized(format!("G(1) = {g1}")))
        }
    }
}

pub fn gamma_value(spec: &GammaSpec, shape: &ExtendedSkewShape) -> Result<SpecValue> {
    GammaEvaluator::new(spec).value(shape)
}

/// Like [`gamma_value`] but fails when the enclosure is wider than `tol`.
pub fn gamma_value_within(spec: &GammaSpec, shape: &ExtendedSkewShape, tol: &Q) -> Result<SpecValue> {
    let v = gamma_value(spec, shape)?;
    if v.width() > *tol {
        return Err(Error::ToleranceExceeded { width: format_rational(&v.width()), tolerance: format_rational(tol) });
    }
    Ok(v)
}

/// `h_n ↦ (G̃_(n)(φ) + G̃_(n+1)(φ)) / (1 + G̃_(1)(φ))` for `n = 0..=N`.
pub fn induced_schur_spec(spec: &GammaSpec, n: usize) -> Result<Vec<SpecValue>> {
    let mut ev = GammaEvaluator::new(spec);
    let rows = ev.row_values(n + 1)?;
    let denom = SpecValue::one().add(&rows[1]);
    if !denom.excludes_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut out = vec![SpecValue::one()];
    for k in 1..=n {
        out.push(rows[k].add(&rows[k + 1]).div(&denom)?);
    }
    Ok(out)
}

/// `−1 + e^γ ∏ (1 + α_i)/(1 − β_i)`, the value of `G̃_(1)` at the union.
pub fn g1_closed_form(p: &EdreiThomaParams) -> SpecValue {
    let mut prod = Q::one();
    for a in &p.alphas {
        prod *= Q::one() + a;
    }
    for b in &p.betas {
        prod /= Q::one() - b;
    }
    exp_value(&p.gamma).scale(&prod).sub(&SpecValue::one())
}

fn exp_value(x: &Q) -> SpecValue {
    if x.is_zero() {
        return SpecValue::one();
    }
    let (lo, hi) = exp_enclosure(x, 40);
    SpecValue::interval(lo, hi)
}

/// Checks `1 + (z+1) Σ G̃_(n)(φ) z^{n−1} = e^{γ(z+1)} ∏ (1+α)/(1−αz) ∏ (1+βz)/(1−β)`
/// for the coefficients of `z^0..z^N` (interval overlap when `γ > 0`).
pub fn row_generating_function_holds(spec: &GammaSpec, n: usize) -> Result<bool> {
    let p = spec.params();
    let rows = GammaEvaluator::new(spec).row_values(n + 1)?;
    let mut lhs = vec![SpecValue::one()];
    for k in 0..=n {
        // coefficient of z^k: G̃_(k) [k ≥ 1] + G̃_(k+1)
        let mut c = rows[k + 1].clone();
        if k >= 1 {
            c = c.add(&rows[k]);
        }
        if k == 0 {
            c = c.add(&SpecValue::one());
        }
        if k < lhs.len() {
            lhs[k] = c;
        } else {
            lhs.push(c);
        }
    }
    let mut rhs = exp_series(&p.gamma, n);
    let mut scale = Q::one();
    for a in &p.alphas {
        rhs = rhs.mul(&PowerSeries::geometric(a, n));
        scale *= Q::one() + a;
    }
    for b in &p.betas {
        rhs = rhs.mul(&PowerSeries::linear(b, n));
        scale /= Q::one() - b;
    }
    let e = exp_value(&p.gamma).scale(&scale);
    Ok((0..=n).all(|k| {
        let r = e.scale(&rhs.coeff(k));
        overlaps(&lhs[k], &r)
    }))
}

fn overlaps(a: &SpecValue, b: &SpecValue) -> bool {
    a.lo() <= b.hi() && b.lo() <= a.hi()
}

/// `G_(0) = 1, G_(1), …, G_(n)` at the signed extension, from
/// `1 + (z − 1) Σ G_(n) z^{n−1} = e^{γ(z−1)} ∏ (1−α)/(1−αz) ∏ (1+βz)/(1+β)`,
/// i.e. `G_(n) = 1 − Σ_{k<n} R_k` with `R` the right side.
pub fn signed_g_values(p: &EdreiThomaParams, n: usize) -> Result<Vec<SpecValue>> {
    p.validate()?;
    p.require_alphas_at_most_one()?;
    let mut r = PowerSeries::<SpecValue>::new(exp_series(&p.gamma, n).coeffs().iter().cloned().map(SpecValue::exact).collect(), n);
    let mut scale = exp_value(&-p.gamma.clone());
    for a in &p.alphas {
        r = r.mul(&PowerSeries::geometric(&SpecValue::exact(a.clone()), n));
        scale = scale.scale(&(Q::one() - a));
    }
    for b in &p.betas {
        r = r.mul(&PowerSeries::linear(&SpecValue::exact(b.clone()), n));
        scale = scale.scale(&(Q::one() / (Q::one() + b)));
    }
    let r = r.scale(&scale);
    let mut out = vec![SpecValue::one()];
    let mut partial = SpecValue::zero();
    for k in 0..n {
        partial = partial.add(&r.coeff(k));
        out.push(SpecValue::one().sub(&partial));
    }
    Ok(out)
}

/// `G_{λ//μ}` at the signed extension for `γ = 0` by branching: `α` links
/// are one-variable values at `α`, `β` links are conjugate-shape values at
/// `β/(1+β)`.
pub fn signed_value_by_branching(p: &EdreiThomaParams, shape: &ExtendedSkewShape) -> Result<Q> {
    if !p.gamma.is_zero() {
        return Err(Error::InvalidArgument("branching evaluation needs gamma = 0".into()));
    }
    p.require_alphas_at_most_one()?;
    let outer = shape.outer();
    let inner = shape.inner();
    let states = outer.interval_from(inner);
    let conj: Vec<Partition> = states.iter().map(|s| s.conjugate()).collect();
    let mut dp = vec![Q::zero(); states.len()];
    dp[states.iter().position(|s| s == inner).unwrap()] = Q::one();
    let links: Vec<(bool, Q)> = p
        .alphas
        .iter()
        .map(|a| (false, a.clone()))
        .chain(p.betas.iter().map(|b| (true, b / (Q::one() + b))))
        .collect();
    for (conjugated, x) in links {
        let mut next = vec![Q::zero(); states.len()];
        for i in 0..states.len() {
            if dp[i].is_zero() {
                continue;
            }
            for j in i..states.len() {
                let w = if conjugated {
                    link_value(Family::Gsigned, &conj[i], &conj[j], &x)
                } else {
                    link_value(Family::Gsigned, &states[i], &states[j], &x)
                };
                if let Some(w) = w {
                    next[j] += &dp[i] * w;
                }
            }
        }
        dp = next;
    }
    Ok(dp[states.iter().position(|s| s == outer).unwrap()].clone())
}

/// `1 − e^{−γ} ∏ (1 − α_i)/(1 + β_i)`.
pub fn gcond_value(p: &EdreiThomaParams) -> SpecValue {
    let mut prod = Q::one();
    for a in &p.alphas {
        prod *= Q::one() - a;
    }
    for b in &p.betas {
        prod /= Q::one() + b;
    }
    SpecValue::one().sub(&exp_value(&-p.gamma.clone()).scale(&prod))
}

/// `1 ≥ G_(1) ≥ G_(2) ≥ … ≥ 0`, failing only on a certain violation.
pub fn monotone_chain_holds(values: &[SpecValue]) -> bool {
    let mut prev = SpecValue::one();
    for v in values.iter().skip(1) {
        if prev.sub(v).certainly_negative() || v.certainly_negative() {
            return false;
        }
        prev = v.clone();
    }
    true
}

/// `h_n ↦ (G_(n) − G_(n+1)) / (1 − G_(1))` from `G_(0..=N+1)`.
pub fn induced_from_signed(values: &[SpecValue]) -> Result<Vec<SpecValue>> {
    if values.len() < 2 {
        return Err(Error::InsufficientValues { needed: 1, have: values.len() });
    }
    let denom = SpecValue::one().sub(&values[1]);
    if !denom.lo().is_positive() {
        return Err(Error::ParameterRange(format!("G(1) = {} must be < 1", values[1])));
    }
    let mut out = vec![SpecValue::one()];
    for k in 1..values.len() - 1 {
        out.push(values[k].sub(&values[k + 1]).div(&denom)?);
    }
    Ok(out)
}

/// `Σ_{n ≤ N} (−1)^n h_n`.
pub fn alternating_sum(h: &[SpecValue]) -> SpecValue {
    h.iter().enumerate().fold(SpecValue::zero(), |acc, (k, v)| if k % 2 == 0 { acc.add(v) } else { acc.sub(v) })
}

/// `e^γ ∏ (1 + α_i)/(1 − β_i)`; normalized `G̃`-specializations have this equal
/// to `2`.
pub fn normalization_product(p: &EdreiThomaParams) -> SpecValue {
    g1_closed_form(p).add(&SpecValue::one())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<K> {
    pub key: K,
    pub value: SpecValue,
}

/// Keys whose value lies strictly below zero.
pub fn positivity_scan<K: Clone>(
    keys: impl IntoIterator<Item = K>,
    mut valuator: impl FnMut(&K) -> Result<SpecValue>,
) -> Result<Vec<Violation<K>>> {
    let mut out = Vec::new();
    for k in keys {
        let v = valuator(&k)?;
        if v.certainly_negative() {
            out.push(Violation { key: k, value: v });
        }
    }
    Ok(out)
}

/// If the value at `μ` is zero, every `λ ⊇ μ` with `|λ| ≤ max_size` must
/// vanish as well.
pub fn vanishing_propagation_check(
    mut valuator: impl FnMut(&Partition) -> Result<SpecValue>,
    mu: &Partition,
    max_size: usize,
) -> Result<bool> {
    if !valuator(mu)?.is_zero() {
        return Ok(true);
    }
    for lam in Partition::all_up_to(max_size) {
        if lam.contains(mu) && !valuator(&lam)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_{|ρ| = m, ρ ⊇ ν, ρ_1 = ν_1} r_{ρ/ν} f^ρ`, the degree-`m` coefficient of
/// the Schur-side series for `G̃_ν(π̂)` times `m!`.
pub fn pi_hat_degree_coefficient(nu: &Partition, m: usize) -> num::BigInt {
    use crate::tableaux::{count_strict_elegant, count_syt};
    Partition::all_of_size(m)
        .into_iter()
        .filter(|rho| rho.contains(nu) && rho.first() == nu.first())
        .map(|rho| count_strict_elegant(&rho, nu) * count_syt(&rho))
        .sum()
}
