//! Upper-triangular Toeplitz matrices `[a_{j−i}]` and total nonnegativity.

use num::{One, Signed};
use serde_json::{json, Value};

use crate::arith::{det_expansion, Q};
use crate::error::{Error, Result};
use crate::special::{induced_schur_spec, schur_value, GammaSpec};
use crate::shapes::Partition;
use crate::value::SpecValue;

/// `a_0 = 1, a_1, …, a_N`; entries past `N` and at negative index are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzBand {
    values: Vec<SpecValue>,
    size: usize,
}

impl ToeplitzBand {
    /// `size` defaults to `N + 1`.
    pub fn new(values: Vec<SpecValue>, size: Option<usize>) -> Result<Self> {
        match values.first() {
            Some(a0) if a0.as_exact().is_some_and(|x| x.is_one()) => {}
            Some(a0) => return Err(Error::NotNormalized(format!("a_0 = {a0}, expected 1"))),
            None => return Err(Error::InsufficientValues { needed: 0, have: 0 }),
        }
        let size = size.unwrap_or(values.len());
        if size == 0 {
            return Err(Error::InvalidArgument("band size must be positive".into()));
        }
        Ok(ToeplitzBand { values, size })
    }

    pub fn from_rationals(values: &[Q], size: Option<usize>) -> Result<Self> {
        Self::new(values.iter().cloned().map(SpecValue::exact).collect(), size)
    }

    /// The band `H_n(φ)/H_0(φ)` of a specialization of `Γ`.
    pub fn from_gamma_spec(spec: &GammaSpec, size: usize) -> Result<Self> {
        Self::new(induced_schur_spec(spec, size.saturating_sub(1))?, Some(size))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn values(&self) -> &[SpecValue] {
        &self.values
    }

    /// `a_n` with the zero convention outside `0..=N`.
    pub fn a(&self, n: i64) -> SpecValue {
        if n < 0 {
            return SpecValue::zero();
        }
        self.values.get(n as usize).cloned().unwrap_or_else(SpecValue::zero)
    }

    pub fn entry(&self, i: usize, j: usize) -> SpecValue {
        self.a(j as i64 - i as i64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "size": self.size,
            "values": self.values.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Determinant of the submatrix on `rows × cols`.
pub fn minor(band: &ToeplitzBand, rows: &[usize], cols: &[usize]) -> Result<SpecValue> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidArgument("row and column lists differ in length".into()));
    }
    for idx in [rows, cols] {
        if idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i >= band.size) {
            return Err(Error::InvalidArgument("indices must be strictly increasing and within the band".into()));
        }
    }
    let m: Vec<Vec<SpecValue>> = rows.iter().map(|&i| cols.iter().map(|&j| band.entry(i, j)).collect()).collect();
    Ok(det_expansion(&m, &SpecValue::one()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: SpecValue,
}

impl MinorWitness {
    pub fn to_json(&self) -> Value {
        json!({"rows": self.rows, "cols": self.cols, "value": self.value.to_json()})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TnnVerdict {
    Pass,
    Fail(MinorWitness),
    /// Some minor's enclosure straddles zero and none is certainly negative.
    Indeterminate(MinorWitness),
}

impl TnnVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, TnnVerdict::Pass)
    }

    pub fn name(&self) -> &'static str {
        match self {
            TnnVerdict::Pass => "pass",
            TnnVerdict::Fail(_) => "fail",
            TnnVerdict::Indeterminate(_) => "indeterminate",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            TnnVerdict::Pass => json!({"verdict": "pass"}),
            TnnVerdict::Fail(w) => json!({"verdict": "fail", "witness": w.to_json()}),
            TnnVerdict::Indeterminate(w) => json!({"verdict": "indeterminate", "witness": w.to_json()}),
        }
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn consecutive(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..=n.saturating_sub(k)).filter(|_| k <= n).map(|s| (s..s + k).collect()).collect()
}

struct Scan {
    indeterminate: Option<MinorWitness>,
}

impl Scan {
    fn visit(&mut self, band: &ToeplitzBand, rows: &[usize], cols: &[usize]) -> Result<Option<MinorWitness>> {
        let v = minor(band, rows, cols)?;
        let w = || MinorWitness { rows: rows.to_vec(), cols: cols.to_vec(), value: v.clone() };
        if v.certainly_negative() {
            return Ok(Some(w()));
        }
        if self.indeterminate.is_none() && v.lo().is_negative() {
            self.indeterminate = Some(w());
        }
        Ok(None)
    }

    fn finish(self) -> TnnVerdict {
        match self.indeterminate {
            Some(w) => TnnVerdict::Indeterminate(w),
            None => TnnVerdict::Pass,
        }
    }
}

/// All minors of order `≤ min(order_cap, 4)`, then every minor with
/// consecutive columns up to order `order_cap`; the first certainly
/// negative one (by order, then rows, then columns) is the witness.
pub fn is_totally_nonnegative(band: &ToeplitzBand, order_cap: usize) -> Result<TnnVerdict> {
    if order_cap > band.size {
        return Err(Error::InvalidArgument(format!("order cap {order_cap} exceeds size {}", band.size)));
    }
    let n = band.size;
    let mut scan = Scan { indeterminate: None };
    for k in 1..=order_cap.min(4) {
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                if let Some(w) = scan.visit(band, &rows, &cols)? {
                    return Ok(TnnVerdict::Fail(w));
                }
            }
        }
    }
    for k in 5..=order_cap {
        for rows in subsets(n, k) {
            for cols in consecutive(n, k) {
                if let Some(w) = scan.visit(band, &rows, &cols)? {
                    return Ok(TnnVerdict::Fail(w));
                }
            }
        }
    }
    Ok(scan.finish())
}

/// Every minor of every order.
pub fn all_minors_nonneg(band: &ToeplitzBand) -> Result<TnnVerdict> {
    let n = band.size;
    let mut scan = Scan { indeterminate: None };
    for k in 1..=n {
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                if let Some(w) = scan.visit(band, &rows, &cols)? {
                    return Ok(TnnVerdict::Fail(w));
                }
            }
        }
    }
    Ok(scan.finish())
}

/// Nonsingular-matrix criterion: minors with consecutive columns or
/// consecutive rows are nonnegative and leading principal minors are
/// positive.
pub fn criterion_nonneg(band: &ToeplitzBand) -> Result<TnnVerdict> {
    let n = band.size;
    let mut scan = Scan { indeterminate: None };
    for k in 1..=n {
        let lead: Vec<usize> = (0..k).collect();
        let v = minor(band, &lead, &lead)?;
        if !v.lo().is_positive() {
            let w = MinorWitness { rows: lead.clone(), cols: lead, value: v.clone() };
            if !v.hi().is_positive() {
                return Ok(TnnVerdict::Fail(w));
            }
            scan.indeterminate.get_or_insert(w);
        }
        for other in subsets(n, k) {
            for block in consecutive(n, k) {
                if let Some(w) = scan.visit(band, &other, &block)? {
                    return Ok(TnnVerdict::Fail(w));
                }
                if let Some(w) = scan.visit(band, &block, &other)? {
                    return Ok(TnnVerdict::Fail(w));
                }
            }
        }
    }
    Ok(scan.finish())
}

/// `a_n² ≥ a_{n−1} a_{n+1}` for every `n` with both neighbours stored;
/// fails only on a certain violation. Returns the first failing `n`.
pub fn log_concavity(band: &ToeplitzBand) -> Option<usize> {
    let v = &band.values;
    (1..v.len().saturating_sub(1)).find(|&n| v[n].mul(&v[n]).sub(&v[n - 1].mul(&v[n + 1])).certainly_negative())
}

/// `det[a_{λ_i − i + j}]`, the minor on consecutive columns picked out by
/// `λ`.
pub fn jacobi_minor(band: &ToeplitzBand, lambda: &Partition) -> Result<SpecValue> {
    schur_value(band.values(), lambda)
}
