//! Partitions, Young diagrams, skew shapes and the extended skew shapes
//! `λ//μ = λ/μ ∪ I(μ)` that carry the inner corners of `μ`.
//!
//! Cells are 1-indexed `(row, col)` pairs, rows top to bottom and columns
//! left to right.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Cell = (usize, usize);

/// Integer partition stored without trailing zeros.
///
/// The total order is graded: first by size, then reverse-lexicographic
/// (lexicographically larger parts come first), so `(3) < (2,1) < (1,1,1)`.
/// Within a degree this lists dominance-leading shapes first, which is the
/// order triangular eliminations consume.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Builds from parts known to be weakly decreasing; panics otherwise.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("weakly decreasing parts")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(n)`; the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_parts(&[n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn has_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.part(r - 1) >= c
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// `I(λ)`: cells `(i, λ_i)` with `λ_i > λ_{i+1}`.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i + 1, self.part(i)))
            .collect()
    }

    /// Addable cells.
    pub fn outer_corners(&self) -> Vec<Cell> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| (i + 1, self.part(i) + 1))
            .collect()
    }

    /// Adds the cell `(r, c)`, which must be an outer corner.
    pub fn add_cell(&self, (r, c): Cell) -> Partition {
        let mut parts = self.parts.clone();
        if r > parts.len() {
            parts.push(0);
        }
        parts[r - 1] += 1;
        debug_assert_eq!(parts[r - 1], c);
        Partition::new(parts).expect("outer corner keeps the shape a partition")
    }

    /// `λ̃`: the first row removed.
    pub fn drop_first_row(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        self.inner_corners().len()
    }

    /// `f^λ` by the hook length formula.
    pub fn hook_length_count(&self) -> num::BigInt {
        let conj = self.conjugate();
        let mut denom = num::BigInt::from(1);
        for (r, c) in self.cells() {
            let arm = self.part(r - 1) - c;
            let leg = conj.part(c - 1) - r;
            denom *= num::BigInt::from(arm + leg + 1);
        }
        crate::arith::factorial(self.size() as u64) / denom
    }

    /// All partitions of `n` in canonical order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with size at most `n`, canonical order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions of size `<= n` with at most `rows` parts.
    pub fn all_up_to_len(n: usize, rows: usize) -> Vec<Partition> {
        Self::all_up_to(n).into_iter().filter(|p| p.len() <= rows).collect()
    }

    /// All `ν ⊆ self` in canonical order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(lam: &Partition, i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=lam.part(i).min(max) {
                cur.push(p);
                rec(lam, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(self, 0, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All `ν` with `inner ⊆ ν ⊆ self`.
    pub fn interval_from(&self, inner: &Partition) -> Vec<Partition> {
        self.subpartitions().into_iter().filter(|nu| nu.contains(inner)).collect()
    }

    /// `δ_n = (n, n−1, …, 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition { parts: (1..=n).rev().collect() }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"5,3,3,1"`; `"-"` (or an empty string) is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "-" || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::ParsePartition(s.to_string()))
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Shorthand used throughout the tests: `p(&[2, 1])`.
pub fn p(parts: &[usize]) -> Partition {
    Partition::from_parts(parts)
}

/// Strip predicates of `λ/μ`; each is reported independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripInfo {
    pub contained: bool,
    pub horizontal: bool,
    pub vertical: bool,
    pub rook: bool,
    pub boxes: usize,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    NotContained,
    Rook,
    Horizontal,
    Vertical,
    General,
}

impl StripInfo {
    pub fn kind(&self) -> StripKind {
        match (self.contained, self.rook, self.horizontal, self.vertical) {
            (false, ..) => StripKind::NotContained,
            (true, true, _, _) => StripKind::Rook,
            (true, false, true, _) => StripKind::Horizontal,
            (true, false, false, true) => StripKind::Vertical,
            _ => StripKind::General,
        }
    }
}

/// Cells of `λ/μ` (empty if `μ ⊄ λ`).
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    if !outer.contains(inner) {
        return Vec::new();
    }
    (0..outer.len())
        .flat_map(|i| (inner.part(i) + 1..=outer.part(i)).map(move |j| (i + 1, j)))
        .collect()
}

pub fn strip_classify(outer: &Partition, inner: &Partition) -> StripInfo {
    let contained = outer.contains(inner);
    let cells = skew_cells(outer, inner);
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
    let boxes = cells.len();
    let horizontal = contained && cols.len() == boxes;
    let vertical = contained && rows.len() == boxes;
    StripInfo {
        contained,
        horizontal,
        vertical,
        rook: horizontal && vertical,
        boxes,
        rows: rows.len(),
        cols: cols.len(),
    }
}

/// `λ//μ`: the skew shape `λ/μ` together with the inner corners of `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedSkewShape {
    outer: Partition,
    inner: Partition,
    corners: Vec<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendedStats {
    /// Columns of `λ//μ` that are not columns of `λ/μ`.
    pub a: usize,
    pub c: usize,
    pub r: usize,
    pub boxes: usize,
}

impl ExtendedSkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        let corners = inner.inner_corners();
        Ok(ExtendedSkewShape { outer, inner, corners })
    }

    pub fn straight(outer: Partition) -> Self {
        Self::new(outer, Partition::empty()).unwrap()
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn corner_boxes(&self) -> &[Cell] {
        &self.corners
    }

    pub fn skew_cells(&self) -> Vec<Cell> {
        skew_cells(&self.outer, &self.inner)
    }

    /// Every cell of `λ//μ` in row-major order, flagged `true` for corner
    /// boxes (which may stay empty).
    pub fn cells_row_major(&self) -> Vec<(Cell, bool)> {
        let mut all: Vec<(Cell, bool)> = self
            .skew_cells()
            .into_iter()
            .map(|c| (c, false))
            .chain(self.corners.iter().map(|&c| (c, true)))
            .collect();
        all.sort();
        all
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.outer.conjugate(), self.inner.conjugate()).unwrap()
    }

    pub fn stats(&self) -> ExtendedStats {
        let info = strip_classify(&self.outer, &self.inner);
        let skew_cols: BTreeSet<usize> = self.skew_cells().iter().map(|c| c.1).collect();
        let a = self.corners.iter().filter(|c| !skew_cols.contains(&c.1)).count();
        ExtendedStats { a, c: info.cols, r: info.rows, boxes: info.boxes }
    }
}

impl fmt::Display for ExtendedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}//{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5, 3, 3, 1]).conjugate(), p(&[4, 3, 3, 1, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        for lam in Partition::all_up_to(8) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn corners() {
        assert_eq!(p(&[4, 3, 2]).inner_corners(), vec![(1, 4), (2, 3), (3, 2)]);
        assert!(Partition::empty().inner_corners().is_empty());
        assert_eq!(p(&[2, 2]).inner_corners(), vec![(2, 2)]);
        assert_eq!(Partition::empty().outer_corners(), vec![(1, 1)]);
        assert_eq!(p(&[2, 1]).outer_corners(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(p(&[2, 2]).outer_corners(), vec![(1, 3), (3, 1)]);
        for lam in Partition::all_up_to(8) {
            assert_eq!(lam.outer_corners().len(), lam.inner_corners().len() + 1);
            for c in lam.outer_corners() {
                assert_eq!(lam.add_cell(c).size(), lam.size() + 1);
            }
        }
    }

    #[test]
    fn strips() {
        let s = strip_classify(&p(&[5, 3, 3, 1]), &p(&[4, 3, 2]));
        assert_eq!(s.kind(), StripKind::Rook);
        let s = strip_classify(&p(&[3]), &p(&[1]));
        assert!(s.horizontal && !s.vertical);
        assert_eq!(s.kind(), StripKind::Horizontal);
        let s = strip_classify(&p(&[2, 2]), &p(&[1]));
        assert_eq!(s.kind(), StripKind::General);
        assert_eq!(strip_classify(&p(&[1]), &p(&[2])).kind(), StripKind::NotContained);
    }

    #[test]
    fn rook_implies_both_and_column_count() {
        for lam in Partition::all_up_to(6) {
            for mu in lam.subpartitions() {
                let s = strip_classify(&lam, &mu);
                if s.rook {
                    assert!(s.horizontal && s.vertical);
                    assert!(s.boxes == s.cols && s.cols == s.rows);
                }
                let sh = ExtendedSkewShape::new(lam.clone(), mu.clone()).unwrap();
                let all_cols: BTreeSet<usize> =
                    sh.cells_row_major().iter().map(|(c, _)| c.1).collect();
                assert_eq!(sh.stats().a + s.cols, all_cols.len());
            }
        }
    }

    #[test]
    fn extended_stats_examples() {
        let sh = ExtendedSkewShape::new(p(&[5, 3, 3, 1]), p(&[4, 3, 2])).unwrap();
        let st = sh.stats();
        assert_eq!((st.a, st.boxes), (2, 3));
        for lam in Partition::all_up_to(5) {
            assert_eq!(ExtendedSkewShape::straight(lam).stats().a, 0);
        }
        let sh = ExtendedSkewShape::new(p(&[2]), p(&[1])).unwrap();
        assert_eq!(sh.stats().a, 1);
        assert!(ExtendedSkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn staircases() {
        assert_eq!(Partition::staircase(0), Partition::empty());
        assert_eq!(Partition::staircase(3), p(&[3, 2, 1]));
        assert_eq!(Partition::staircase(1), p(&[1]));
    }

    #[test]
    fn canonical_order_and_text_form() {
        let v = Partition::all_of_size(3);
        assert_eq!(v, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let mut w = vec![p(&[1, 1]), p(&[1]), Partition::empty(), p(&[2])];
        w.sort();
        assert_eq!(w, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]);
        assert_eq!("5,3,3,1".parse::<Partition>().unwrap(), p(&[5, 3, 3, 1]));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(Partition::all_up_to(8).len(), 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).hook_length_count(), 2.into());
        assert_eq!(p(&[3, 2]).hook_length_count(), 5.into());
        assert_eq!(Partition::empty().hook_length_count(), 1.into());
    }
}
