//! Sums over chains `inner = ν⁰ ⊆ ν¹ ⊆ … ⊆ νᵛ = outer` in Young's lattice,
//! one link per variable, each link contributing a one-variable polynomial.
//! Every family in this crate that satisfies a branching rule (Schur,
//! `G̃`, dual `g`) is realized this way.

use std::collections::BTreeMap;

use num::BigInt;

use crate::arith::Q;
use crate::polyring::TruncatedSymPoly;
use crate::shapes::Partition;

/// One link `from → to` with `weight[e]` = coefficient of `x^e`.
#[derive(Clone, Debug)]
struct Link {
    from: usize,
    to: usize,
    weight: Vec<u128>,
}

#[derive(Clone, Debug)]
pub struct ChainSystem {
    states: Vec<Partition>,
    start: usize,
    end: usize,
    links: Vec<Link>,
    min_to_end: Vec<usize>,
}

impl ChainSystem {
    /// `link(from, to)` returns the weight vector of the one-variable factor,
    /// or `None` when the pair is not a link. Links must satisfy
    /// `weight[0] = [from == to]` so that unused variables act trivially.
    pub fn new(
        outer: &Partition,
        inner: &Partition,
        degcap: usize,
        link: impl Fn(&Partition, &Partition, usize) -> Option<Vec<u128>>,
    ) -> Self {
        let states = outer.interval_from(inner);
        let start = states.iter().position(|s| s == inner).unwrap_or(0);
        let end = states.iter().position(|s| s == outer).unwrap_or(0);
        let mut links = Vec::new();
        for (i, from) in states.iter().enumerate() {
            for (j, to) in states.iter().enumerate().skip(i) {
                if to.size() - from.size() > degcap || !to.contains(from) {
                    continue;
                }
                if let Some(weight) = link(from, to, degcap) {
                    debug_assert_eq!(weight.first().copied().unwrap_or(0), u128::from(i == j));
                    if weight.iter().any(|&w| w != 0) {
                        links.push(Link { from: i, to: j, weight });
                    }
                }
            }
        }
        let mut min_to_end = vec![usize::MAX; states.len()];
        if !states.is_empty() {
            min_to_end[end] = 0;
        }
        for i in (0..states.len()).rev() {
            for l in links.iter().filter(|l| l.from == i && l.to != i) {
                if min_to_end[l.to] == usize::MAX {
                    continue;
                }
                let e = l.weight.iter().position(|&w| w != 0).unwrap_or(0);
                min_to_end[i] = min_to_end[i].min(e + min_to_end[l.to]);
            }
        }
        ChainSystem { states, start, end, links, min_to_end }
    }

    fn step(&self, dp: &[u128], e: usize, budget: usize) -> Vec<u128> {
        let mut next = vec![0u128; dp.len()];
        for l in &self.links {
            let w = l.weight.get(e).copied().unwrap_or(0);
            if w == 0 || dp[l.from] == 0 || self.min_to_end[l.to] > budget {
                continue;
            }
            next[l.to] += dp[l.from] * w;
        }
        next
    }

    /// The chain sum over `nvars` variables as a symmetric polynomial
    /// truncated at `degcap`.
    pub fn realize(&self, nvars: usize, degcap: usize) -> TruncatedSymPoly {
        let mut out = BTreeMap::new();
        if self.states.is_empty() || self.min_to_end[self.start] > degcap {
            return TruncatedSymPoly::from_terms(nvars, degcap, out);
        }
        let mut dp = vec![0u128; self.states.len()];
        dp[self.start] = 1;
        let mut prefix = Vec::new();
        self.dfs(&dp, 0, degcap, nvars, degcap, &mut prefix, &mut out);
        TruncatedSymPoly::from_terms(nvars, degcap, out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        dp: &[u128],
        sum: usize,
        last: usize,
        nvars: usize,
        degcap: usize,
        prefix: &mut Vec<usize>,
        out: &mut BTreeMap<Partition, Q>,
    ) {
        if dp[self.end] != 0 {
            out.insert(Partition::from_parts(prefix), Q::from_integer(BigInt::from(dp[self.end])));
        }
        if prefix.len() == nvars {
            return;
        }
        for e in 1..=last.min(degcap - sum) {
            let next = self.step(dp, e, degcap - sum - e);
            if next.iter().all(|&c| c == 0) {
                continue;
            }
            prefix.push(e);
            self.dfs(&next, sum + e, e, nvars, degcap, prefix, out);
            prefix.pop();
        }
    }
}
