//! The filtered Young graph (arcs are nonempty rook strips), harmonic
//! functions on it, the corner growth model, and the two measures built
//! from `G̃`- and `g`-specializations.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{pow_q, q, Q};
use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::special::{dual_value, GammaEvaluator, GammaSpec};
use crate::tableaux::{count_increasing, count_ssvt};
use crate::value::SpecValue;

/// All `μ ⊋ λ` with `μ/λ` a rook strip: nonempty sets of outer corners.
pub fn rook_successors(lambda: &Partition) -> Vec<Partition> {
    let corners = lambda.outer_corners();
    let mut out = Vec::new();
    for mask in 1u32..(1 << corners.len()) {
        let mut mu = lambda.clone();
        for (k, cell) in corners.iter().enumerate() {
            if mask >> k & 1 == 1 {
                mu = mu.add_cell(*cell);
            }
        }
        out.push(mu);
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HarmonicVerdict {
    Pass,
    Fail { lambda: Partition, lhs: SpecValue, rhs: SpecValue },
}

impl HarmonicVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, HarmonicVerdict::Pass)
    }

    pub fn to_json(&self) -> Value {
        match self {
            HarmonicVerdict::Pass => json!({"verdict": "pass"}),
            HarmonicVerdict::Fail { lambda, lhs, rhs } => json!({
                "verdict": "fail",
                "partition": lambda.to_string(),
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
            }),
        }
    }
}

/// `φ(∅) = 1` and `φ(λ) = Σ_{λ→μ} φ(μ)` for every `λ` whose successors stay
/// within size `rank_cap`. Interval values fail only when the two sides
/// certainly differ.
pub fn harmonicity_check(
    mut values: impl FnMut(&Partition) -> Result<SpecValue>,
    rank_cap: usize,
) -> Result<HarmonicVerdict> {
    let empty = Partition::empty();
    let root = values(&empty)?;
    if !root.contains(&Q::one()) {
        return Ok(HarmonicVerdict::Fail { lambda: empty, lhs: root, rhs: SpecValue::one() });
    }
    for lam in Partition::all_up_to(rank_cap) {
        if lam.size() + lam.len() + 1 > rank_cap {
            continue;
        }
        let lhs = values(&lam)?;
        let mut rhs = SpecValue::zero();
        for mu in rook_successors(&lam) {
            rhs = rhs.add(&values(&mu)?);
        }
        if lhs.sub(&rhs).excludes_zero() {
            return Ok(HarmonicVerdict::Fail { lambda: lam, lhs, rhs });
        }
    }
    Ok(HarmonicVerdict::Pass)
}

/// Values of a measure on partitions, in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureTable {
    pub kind: String,
    pub meta: Value,
    pub support: BTreeMap<Partition, SpecValue>,
}

impl MeasureTable {
    fn new(kind: &str, meta: Value) -> Self {
        MeasureTable { kind: kind.to_string(), meta, support: BTreeMap::new() }
    }

    fn insert(&mut self, lambda: Partition, v: SpecValue) {
        if !(v.is_exact() && v.is_zero()) {
            self.support.insert(lambda, v);
        }
    }

    pub fn get(&self, lambda: &Partition) -> SpecValue {
        self.support.get(lambda).cloned().unwrap_or_else(SpecValue::zero)
    }

    pub fn total(&self) -> SpecValue {
        self.support.values().fold(SpecValue::zero(), |a, b| a.add(b))
    }

    pub fn is_exact(&self) -> bool {
        self.support.values().all(|v| v.is_exact())
    }

    /// Exact tables sum to exactly one; interval tables have a total
    /// enclosure containing one.
    pub fn is_normalized(&self) -> bool {
        self.total().contains(&Q::one())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.support.values().all(|v| !v.certainly_negative())
    }

    pub fn rows_json(&self) -> Value {
        Value::Array(
            self.support
                .iter()
                .map(|(k, v)| json!({"partition": k.to_string(), "value": v.to_json()}))
                .collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "meta": self.meta,
            "table": self.rows_json(),
            "total": self.total().to_json(),
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("partition\tvalue\n");
        for (k, v) in &self.support {
            s.push_str(&format!("{k}\t{v}\n"));
        }
        s
    }
}

/// `p_n(λ)`: law of the corner growth model after `n` boxes.
pub fn corner_growth(n: usize) -> Result<MeasureTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("corner growth starts at n = 1".into()));
    }
    let mut cur: BTreeMap<Partition, Q> = BTreeMap::new();
    cur.insert(Partition::row(1), Q::one());
    for _ in 1..n {
        let mut next: BTreeMap<Partition, Q> = BTreeMap::new();
        for (lam, p) in &cur {
            let corners = lam.outer_corners();
            let share = p / q(corners.len() as i64);
            for c in corners {
                *next.entry(lam.add_cell(c)).or_insert_with(Q::zero) += &share;
            }
        }
        cur = next;
    }
    let mut t = MeasureTable::new("corner", json!({"n": n}));
    for (k, v) in cur {
        t.insert(k, SpecValue::exact(v));
    }
    Ok(t)
}

/// `μ_{ρ,n}(λ) = p_n(λ) ρ(g_λ)` for a specialization given by its exact
/// `h`-values `h_0 = 1, h_1, …` with `ρ(h_1) = 1`.
pub fn corner_measure(hvals: &[Q], n: usize) -> Result<MeasureTable> {
    if hvals.get(1) != Some(&Q::one()) {
        return Err(Error::NotNormalized("rho(g_1) = rho(h_1) must equal 1".into()));
    }
    let growth = corner_growth(n)?;
    let mut t = MeasureTable::new("corner-measure", json!({"n": n}));
    for (lam, p) in &growth.support {
        let g = dual_value(hvals, lam)?;
        t.insert(lam.clone(), p.scale(&g));
    }
    Ok(t)
}

/// `M_{φ,n}(λ) = d^λ(n) G̃_λ(φ) / Δ^n` over `λ ⊆ δ_n`, `Δ = 1 + G̃_(1)(φ)`.
pub fn hecke_measure(spec: &GammaSpec, n: usize) -> Result<MeasureTable> {
    let mut ev = GammaEvaluator::new(spec);
    let delta = ev.delta()?;
    if !delta.excludes_zero() {
        return Err(Error::DivisionByZero);
    }
    let norm = delta.pow(n).recip()?;
    let mut t = MeasureTable::new("hecke", json!({"n": n, "truncation": spec.truncation()}));
    for lam in Partition::staircase(n).subpartitions() {
        let d = count_increasing(&lam, n);
        if d.is_zero() {
            continue;
        }
        let v = ev.straight(&lam)?.scale(&Q::from_integer(d)).mul(&norm);
        t.insert(lam, v);
    }
    Ok(t)
}

/// `μ_{m,n}(λ) = d^λ(n) e^λ(m) / n^m` over `λ ⊆ δ_n`, `|λ| ≤ m`.
pub fn plancherel_hecke(m: usize, n: usize) -> Result<MeasureTable> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let denom = pow_q(&q(n as i64), m);
    let mut t = MeasureTable::new("plancherel-hecke", json!({"m": m, "n": n}));
    for lam in Partition::staircase(n).subpartitions() {
        if lam.size() > m {
            continue;
        }
        let v = Q::from_integer(count_increasing(&lam, n) * count_ssvt(&lam, m)) / &denom;
        t.insert(lam, SpecValue::exact(v));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qr;
    use crate::shapes::p;
    use crate::special::{lambda_h_values, EdreiThomaParams};

    fn table(t: &MeasureTable) -> Vec<(Partition, Q)> {
        t.support.iter().map(|(k, v)| (k.clone(), v.as_exact().unwrap().clone())).collect()
    }

    #[test]
    fn successors() {
        assert_eq!(rook_successors(&Partition::empty()), vec![p(&[1])]);
        assert_eq!(rook_successors(&p(&[1])), vec![p(&[2]), p(&[1, 1]), p(&[2, 1])]);
        assert_eq!(rook_successors(&p(&[2])), vec![p(&[3]), p(&[2, 1]), p(&[3, 1])]);
    }

    #[test]
    fn harmonic_examples() {
        let spec = GammaSpec::phi_hat(qr(1, 2)).unwrap().union(&GammaSpec::phi_hat(qr(1, 3)).unwrap());
        let mut ev = GammaEvaluator::new(&spec);
        assert!(harmonicity_check(|l| ev.straight(l), 6).unwrap().is_pass());
        let rows = |l: &Partition| Ok(SpecValue::exact(if l.len() <= 1 { q(1) } else { q(0) }));
        assert!(harmonicity_check(rows, 6).unwrap().is_pass());
        match harmonicity_check(|_| Ok(SpecValue::one()), 4).unwrap() {
            HarmonicVerdict::Fail { lambda, rhs, .. } => {
                assert_eq!(lambda, p(&[1]));
                assert_eq!(rhs, SpecValue::from_int(3));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn corner_growth_tables() {
        assert_eq!(table(&corner_growth(1).unwrap()), vec![(p(&[1]), q(1))]);
        assert_eq!(table(&corner_growth(2).unwrap()), vec![(p(&[2]), qr(1, 2)), (p(&[1, 1]), qr(1, 2))]);
        assert_eq!(
            table(&corner_growth(3).unwrap()),
            vec![(p(&[3]), qr(1, 4)), (p(&[2, 1]), qr(1, 2)), (p(&[1, 1, 1]), qr(1, 4))]
        );
        for n in 1..=8 {
            assert_eq!(corner_growth(n).unwrap().total(), SpecValue::one());
        }
    }

    #[test]
    fn corner_measures() {
        let ones = vec![q(1); 8];
        for n in 1..=5 {
            assert_eq!(table(&corner_measure(&ones, n).unwrap()), table(&corner_growth(n).unwrap()));
        }
        let planch = lambda_h_values(&EdreiThomaParams::gamma(q(1)), 8);
        let t = corner_measure(&planch, 3).unwrap();
        assert!(t.is_exact());
        assert_eq!(t.total(), SpecValue::one());
        assert!(t.all_nonnegative());
        assert!(corner_measure(&[q(1), qr(1, 2)], 2).is_err());
        assert_eq!(table(&corner_measure(&planch, 1).unwrap()), vec![(p(&[1]), q(1))]);
    }

    #[test]
    fn hecke_tables() {
        let t = hecke_measure(&GammaSpec::phi_hat(qr(1, 2)).unwrap(), 2).unwrap();
        assert!(t.support.keys().all(|k| Partition::staircase(2).contains(k)));
        assert_eq!(t.total(), SpecValue::one());
        let t = hecke_measure(&GammaSpec::phi_hat(q(0)).unwrap(), 3).unwrap();
        assert_eq!(table(&t), vec![(Partition::empty(), q(1))]);
        let t = hecke_measure(&GammaSpec::pi_hat(q(1), 12).unwrap(), 2).unwrap();
        assert!(!t.is_exact());
        assert!(t.is_normalized());
    }

    #[test]
    fn plancherel_hecke_tables() {
        assert_eq!(table(&plancherel_hecke(2, 1).unwrap()), vec![(p(&[1]), q(1))]);
        assert_eq!(
            table(&plancherel_hecke(2, 2).unwrap()),
            vec![(p(&[1]), qr(2, 4)), (p(&[2]), qr(1, 4)), (p(&[1, 1]), qr(1, 4))]
        );
        assert_eq!(table(&plancherel_hecke(1, 3).unwrap()), vec![(p(&[1]), q(1))]);
    }
}
