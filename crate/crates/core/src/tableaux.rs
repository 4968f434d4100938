//! Enumerators and counters for the tableau families: set-valued tableaux,
//! reverse plane partitions, standard, strict elegant, elegant, delegant,
//! increasing, and standard set-valued tableaux.
//!
//! Sets of entries are `u32` bitmasks with bit `k - 1` standing for entry
//! `k`; ascending mask order is ascending colex order on sets.

use std::collections::{BTreeMap, HashMap};

use num::BigInt;

use crate::arith::{binomial, det_integer};
use crate::shapes::{Cell, ExtendedSkewShape, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetValuedTableau {
    pub shape: ExtendedSkewShape,
    /// Row-major cells of the shape with their entry sets.
    pub entries: Vec<(Cell, u32)>,
}

impl SetValuedTableau {
    /// Total number of entries `|T|`.
    pub fn size(&self) -> usize {
        self.entries.iter().map(|(_, m)| m.count_ones() as usize).sum()
    }

    /// Exponent vector of `x^T` over `nvars` variables.
    pub fn weight(&self, nvars: usize) -> Vec<usize> {
        let mut w = vec![0; nvars];
        for (_, m) in &self.entries {
            for (k, slot) in w.iter_mut().enumerate() {
                if m & (1 << k) != 0 {
                    *slot += 1;
                }
            }
        }
        w
    }

    pub fn entry_set(&self, cell: Cell) -> Option<Vec<usize>> {
        self.entries
            .iter()
            .find(|(c, _)| *c == cell)
            .map(|(_, m)| (1..=32).filter(|k| m & (1 << (k - 1)) != 0).collect())
    }
}

fn mask_min(m: u32) -> u32 {
    m.trailing_zeros()
}

fn mask_max(m: u32) -> u32 {
    31 - m.leading_zeros()
}

/// Visits every set-valued tableau of shape `λ//μ` with entries in
/// `1..=max_entry`, cells row-major, sets in ascending colex order.
pub fn for_each_svt<F: FnMut(&[(Cell, u32)])>(shape: &ExtendedSkewShape, max_entry: usize, mut f: F) {
    assert!(max_entry <= 31, "entry bound too large for bitmask sets");
    let cells = shape.cells_row_major();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, (c, _))| (*c, i)).collect();
    let left: Vec<Option<usize>> =
        cells.iter().map(|((r, c), _)| index.get(&(*r, c.wrapping_sub(1))).copied()).collect();
    let up: Vec<Option<usize>> =
        cells.iter().map(|((r, c), _)| index.get(&(r.wrapping_sub(1), *c)).copied()).collect();
    let limit: u32 = 1 << max_entry;
    let mut cur: Vec<(Cell, u32)> = cells.iter().map(|(c, _)| (*c, 0)).collect();

    fn rec<F: FnMut(&[(Cell, u32)])>(
        i: usize,
        cells: &[(Cell, bool)],
        left: &[Option<usize>],
        up: &[Option<usize>],
        limit: u32,
        cur: &mut Vec<(Cell, u32)>,
        f: &mut F,
    ) {
        if i == cells.len() {
            f(cur);
            return;
        }
        let start = if cells[i].1 { 0 } else { 1 };
        for m in start..limit {
            if m != 0 {
                if let Some(l) = left[i] {
                    let lm = cur[l].1;
                    if lm != 0 && mask_max(lm) > mask_min(m) {
                        continue;
                    }
                }
                if let Some(u) = up[i] {
                    let um = cur[u].1;
                    if um != 0 && mask_max(um) >= mask_min(m) {
                        continue;
                    }
                }
            }
            cur[i].1 = m;
            rec(i + 1, cells, left, up, limit, cur, f);
        }
        cur[i].1 = 0;
    }
    rec(0, &cells, &left, &up, limit, &mut cur, &mut f);
}

pub fn enumerate_svt(shape: &ExtendedSkewShape, max_entry: usize) -> Vec<SetValuedTableau> {
    let mut out = Vec::new();
    for_each_svt(shape, max_entry, |e| {
        out.push(SetValuedTableau { shape: shape.clone(), entries: e.to_vec() })
    });
    out
}

/// Visits every reverse plane partition of `λ/μ` with entries in
/// `1..=max_entry`, passing the row-major entries and the weight vector
/// (number of columns containing each value).
pub fn for_each_rpp<F: FnMut(&[usize])>(outer: &Partition, inner: &Partition, max_entry: usize, mut f: F) {
    let cells = crate::shapes::skew_cells(outer, inner);
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let left: Vec<Option<usize>> = cells.iter().map(|(r, c)| index.get(&(*r, c.wrapping_sub(1))).copied()).collect();
    let up: Vec<Option<usize>> = cells.iter().map(|(r, c)| index.get(&(r.wrapping_sub(1), *c)).copied()).collect();
    let mut cur = vec![0usize; cells.len()];
    let mut weight = vec![0usize; max_entry];

    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(&[usize])>(
        i: usize,
        cells: &[Cell],
        left: &[Option<usize>],
        up: &[Option<usize>],
        max_entry: usize,
        cur: &mut Vec<usize>,
        weight: &mut Vec<usize>,
        f: &mut F,
    ) {
        if i == cells.len() {
            for w in weight.iter_mut() {
                *w = 0;
            }
            let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
            for (k, &(_, c)) in cells.iter().enumerate() {
                if seen.insert((c, cur[k]), ()).is_none() {
                    weight[cur[k] - 1] += 1;
                }
            }
            f(weight);
            return;
        }
        let lo = [left[i], up[i]].iter().flatten().map(|&j| cur[j]).max().unwrap_or(1);
        for v in lo..=max_entry {
            cur[i] = v;
            rec(i + 1, cells, left, up, max_entry, cur, weight, f);
        }
    }
    rec(0, &cells, &left, &up, max_entry, &mut cur, &mut weight, &mut f);
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    WeakUp,
    StrictUp,
    WeakDown,
    StrictDown,
}

impl Step {
    fn ok(self, prev: i64, next: i64) -> bool {
        match self {
            Step::WeakUp => prev <= next,
            Step::StrictUp => prev < next,
            Step::WeakDown => prev >= next,
            Step::StrictDown => prev > next,
        }
    }
}

/// Counts fillings of `outer/inner` with row `i` (1-indexed) entries in
/// `range(i)` subject to the given row and column rules.
fn count_fillings(
    outer: &Partition,
    inner: &Partition,
    range: impl Fn(usize) -> (i64, i64),
    row_rule: Step,
    col_rule: Step,
) -> BigInt {
    if !outer.contains(inner) {
        return BigInt::from(0);
    }
    let cells = crate::shapes::skew_cells(outer, inner);
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let left: Vec<Option<usize>> = cells.iter().map(|(r, c)| index.get(&(*r, c.wrapping_sub(1))).copied()).collect();
    let up: Vec<Option<usize>> = cells.iter().map(|(r, c)| index.get(&(r.wrapping_sub(1), *c)).copied()).collect();
    let ranges: Vec<(i64, i64)> = cells.iter().map(|(r, _)| range(*r)).collect();
    let mut cur = vec![0i64; cells.len()];

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        left: &[Option<usize>],
        up: &[Option<usize>],
        ranges: &[(i64, i64)],
        row_rule: Step,
        col_rule: Step,
        cur: &mut Vec<i64>,
    ) -> u64 {
        if i == cur.len() {
            return 1;
        }
        let (lo, hi) = ranges[i];
        let mut total = 0;
        for v in lo..=hi {
            if left[i].is_some_and(|l| !row_rule.ok(cur[l], v)) {
                continue;
            }
            if up[i].is_some_and(|u| !col_rule.ok(cur[u], v)) {
                continue;
            }
            cur[i] = v;
            total += rec(i + 1, left, up, ranges, row_rule, col_rule, cur);
        }
        total
    }
    BigInt::from(rec(0, &left, &up, &ranges, row_rule, col_rule, &mut cur))
}

/// `r_{μ/λ}`: fillings of `μ/λ`, strictly increasing along rows and columns,
/// row `i` entries in `[1, i-1]`.
pub fn count_strict_elegant(mu: &Partition, lambda: &Partition) -> BigInt {
    count_fillings(mu, lambda, |i| (1, i as i64 - 1), Step::StrictUp, Step::StrictUp)
}

/// `f_{μ/λ}`: as strict elegant but rows only weakly increase.
pub fn count_elegant(mu: &Partition, lambda: &Partition) -> BigInt {
    count_fillings(mu, lambda, |i| (1, i as i64 - 1), Step::WeakUp, Step::StrictUp)
}

/// `d_{ν/μ}`: rows weakly decreasing, columns strictly decreasing, row `i`
/// entries in `[ν_i, ℓ + 1 + μ_i − i]` with `ℓ = ℓ(μ)`.
pub fn count_delegant(nu: &Partition, mu: &Partition) -> BigInt {
    let l = mu.len() as i64;
    count_fillings(
        nu,
        mu,
        |i| (nu.part(i - 1) as i64, l + 1 + mu.part(i - 1) as i64 - i as i64),
        Step::WeakDown,
        Step::StrictDown,
    )
}

/// `d^λ(n)`: strictly increasing rows and columns, entries in `1..=n`.
pub fn count_increasing(lambda: &Partition, n: usize) -> BigInt {
    count_fillings(lambda, &Partition::empty(), |_| (1, n as i64), Step::StrictUp, Step::StrictUp)
}

/// `f^λ` by counting saturated chains `∅ → λ` in Young's lattice.
pub fn count_syt(lambda: &Partition) -> BigInt {
    let mut memo: HashMap<Partition, BigInt> = HashMap::new();
    fn rec(l: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if l.is_empty() {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let mut total = BigInt::from(0);
        for (r, _) in l.inner_corners() {
            let mut parts = l.parts().to_vec();
            parts[r - 1] -= 1;
            total += rec(&Partition::new(parts).unwrap(), memo);
        }
        memo.insert(l.clone(), total.clone());
        total
    }
    rec(lambda, &mut memo)
}

/// `e^λ(m)`: fillings of `λ` by nonempty sets, strictly increasing along rows
/// and columns, using each of `1..=m` exactly once.
///
/// Labels are placed in increasing order: label `k` either opens a new box at
/// an outer corner of the filled region or joins a box with no filled
/// neighbour to its right or below, i.e. an inner corner.
pub fn count_ssvt(lambda: &Partition, m: usize) -> BigInt {
    let mut layer: BTreeMap<Partition, BigInt> = BTreeMap::new();
    layer.insert(Partition::empty(), BigInt::from(1));
    for _ in 0..m {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (shape, count) in &layer {
            if !lambda.contains(shape) {
                continue;
            }
            let stay = shape.inner_corners().len();
            if stay > 0 {
                *next.entry(shape.clone()).or_default() += count * BigInt::from(stay);
            }
            for c in shape.outer_corners() {
                let grown = shape.add_cell(c);
                if lambda.contains(&grown) {
                    *next.entry(grown).or_default() += count;
                }
            }
        }
        layer = next;
    }
    layer.remove(lambda).unwrap_or_default()
}

/// `e^λ(m)` by assigning each label to a cell and testing the filling.
pub fn count_ssvt_brute(lambda: &Partition, m: usize) -> BigInt {
    let cells = lambda.cells();
    let k = cells.len();
    if k == 0 {
        return BigInt::from(u8::from(m == 0));
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut assign = vec![0usize; m];
    let mut total: u64 = 0;
    loop {
        let mut sets = vec![0u32; k];
        for (label, &cell) in assign.iter().enumerate() {
            sets[cell] |= 1 << label;
        }
        let ok = sets.iter().all(|&s| s != 0)
            && cells.iter().enumerate().all(|(i, &(r, c))| {
                let right = index.get(&(r, c + 1)).map(|&j| sets[j]);
                let down = index.get(&(r + 1, c)).map(|&j| sets[j]);
                [right, down].iter().flatten().all(|&n| mask_max(sets[i]) < mask_min(n))
            });
        total += u64::from(ok);
        let mut pos = 0;
        loop {
            if pos == m {
                return BigInt::from(total);
            }
            assign[pos] += 1;
            if assign[pos] < k {
                break;
            }
            assign[pos] = 0;
            pos += 1;
        }
    }
}

/// `det[C(ℓ−i+1, ν_i−i−μ_j+j)]_{ℓ×ℓ}`, the delegant count in determinant form.
pub fn delegant_determinant(nu: &Partition, mu: &Partition) -> BigInt {
    let l = mu.len();
    if nu.len() != l {
        return BigInt::from(0);
    }
    let m: Vec<Vec<BigInt>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    binomial(
                        (l - i + 1) as i64,
                        nu.part(i - 1) as i64 - i as i64 - mu.part(j - 1) as i64 + j as i64,
                    )
                })
                .collect()
        })
        .collect();
    det_integer(&m)
}

/// `det[C(ν_i−λ_j+j−2, ν_i−i−λ_j+j)]_{ℓ(ν)×ℓ(ν)}`, the elegant count in
/// determinant form.
pub fn elegant_determinant(nu: &Partition, lambda: &Partition) -> BigInt {
    let l = nu.len();
    let m: Vec<Vec<BigInt>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let ni = nu.part(i - 1) as i64;
                    let lj = lambda.part(j - 1) as i64;
                    binomial(ni - lj + j as i64 - 2, ni - i as i64 - lj + j as i64)
                })
                .collect()
        })
        .collect();
    det_integer(&m)
}

/// Left side of the binomial convolution behind the delegant determinant:
/// `Σ_k (−1)^{a−k} C(ν_i−k−2, a−k) C(ℓ, k−b)` with `a = ν_i − i`, `b = μ_j − j`.
pub fn binomial_convolution(nu_i: i64, i: i64, mu_j: i64, j: i64, l: i64) -> BigInt {
    let a = nu_i - i;
    let b = mu_j - j;
    let mut total = BigInt::from(0);
    for k in b..=a {
        let sign = if (a - k) % 2 == 0 { 1 } else { -1 };
        total += BigInt::from(sign) * binomial(nu_i - k - 2, a - k) * binomial(l, k - b);
    }
    total
}
