//! Dominating pairs of `G_{k,l}` and the two covering conditions.
//!
//! A pair `(lsets, ksets)` dominates `G_{k,l}` exactly when
//!
//! * every `k`-set outside `ksets` contains a member of `lsets` (the upper
//!   level is dominated), and
//! * every `l`-set outside `lsets` lies inside a member of `ksets` (the lower
//!   level is dominated).
//!
//! Both scans run over ranks, never materializing the graph itself.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::combinatorics::{
    binomial_u64, unrank_colex, walk_with_max, BinomTable, Family, PositionCombinations, Subset,
};
use crate::error::{invalid, Error, Result};

pub const DEFAULT_VIOLATION_CAP: usize = 100;

/// Largest level size a scan will allocate a bitmap for.
const MAX_LEVEL: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct DominatingPair {
    n: u32,
    k: u32,
    l: u32,
    lsets: Family,
    ksets: Family,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    n: u32,
    k: u32,
    l: u32,
    lsets: Vec<Subset>,
    ksets: Vec<Subset>,
}

impl TryFrom<PairRepr> for DominatingPair {
    type Error = Error;
    fn try_from(r: PairRepr) -> Result<Self> {
        let lsets = Family::new(r.n, r.l, r.lsets)?;
        let ksets = Family::new(r.n, r.k, r.ksets)?;
        DominatingPair::new(r.n, r.k, r.l, lsets, ksets)
    }
}

impl From<DominatingPair> for PairRepr {
    fn from(p: DominatingPair) -> Self {
        PairRepr {
            n: p.n,
            k: p.k,
            l: p.l,
            lsets: p.lsets.into_members(),
            ksets: p.ksets.into_members(),
        }
    }
}

/// Checks `n > k > l >= 1`.
pub fn validate_levels(n: u32, k: u32, l: u32) -> Result<()> {
    if !(n > k && k > l && l >= 1) {
        return Err(invalid(format!("need n > k > l >= 1, got n={n} k={k} l={l}")));
    }
    Ok(())
}

impl DominatingPair {
    pub fn new(n: u32, k: u32, l: u32, lsets: Family, ksets: Family) -> Result<Self> {
        validate_levels(n, k, l)?;
        if lsets.rank() != l || ksets.rank() != k {
            return Err(Error::InvalidFamily(format!(
                "family ranks ({}, {}) do not match levels (l={l}, k={k})",
                lsets.rank(),
                ksets.rank()
            )));
        }
        let lsets = lsets.with_n(n)?;
        let ksets = ksets.with_n(n)?;
        Ok(DominatingPair { n, k, l, lsets, ksets })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn lsets(&self) -> &Family {
        &self.lsets
    }

    pub fn ksets(&self) -> &Family {
        &self.ksets
    }

    pub fn lsets_mut(&mut self) -> &mut Family {
        &mut self.lsets
    }

    pub fn ksets_mut(&mut self) -> &mut Family {
        &mut self.ksets
    }

    pub fn size(&self) -> usize {
        self.lsets.len() + self.ksets.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// an `l`-set that is neither selected nor inside a selected `k`-set
    Lower,
    /// a `k`-set that is neither selected nor contains a selected `l`-set
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub side: Side,
    pub witness: Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationVerdict {
    pub dominating: bool,
    pub undominated_lsets: u64,
    pub undominated_ksets: u64,
    /// Lower-side witnesses first, each side in colex order, truncated to the cap.
    pub violations: Vec<Violation>,
}

impl DominationVerdict {
    pub fn is_dominating(&self) -> bool {
        self.dominating
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCounts {
    /// `k`-sets outside `ksets` that contain a member of `lsets`
    pub upper_via_lsets: u64,
    /// `l`-sets outside `lsets` that lie inside a member of `ksets`
    pub lower_via_ksets: u64,
}

/// Rank-indexed view of a pair, shared by both scans.
struct Scanner<'a> {
    pair: &'a DominatingPair,
    table: BinomTable,
    lset_bits: BitSet,
    kset_ranks: Vec<u64>,
    /// positions of the `l`-subsets inside a `k`-set
    sub_positions: Vec<Vec<usize>>,
}

impl<'a> Scanner<'a> {
    fn new(pair: &'a DominatingPair) -> Result<Self> {
        let (n, k, l) = (pair.n, pair.k, pair.l);
        let n_l = binomial_u64(n as u64, l as u64)?;
        let n_k = binomial_u64(n as u64, k as u64)?;
        if n_l > MAX_LEVEL || n_k > u64::MAX / 2 {
            return Err(Error::TooLarge(format!("C({n},{l}) = {n_l} lower-level vertices")));
        }
        let table = BinomTable::new(n, k);
        let mut lset_bits = BitSet::new(n_l as usize);
        for s in pair.lsets.iter() {
            lset_bits.insert(table.rank(s.elements()) as usize);
        }
        // colex order of the family is rank order
        let kset_ranks = pair.ksets.iter().map(|s| table.rank(s.elements())).collect();
        let sub_positions = PositionCombinations::new(k as usize, l as usize).collect();
        Ok(Scanner {
            pair,
            table,
            lset_bits,
            kset_ranks,
            sub_positions,
        })
    }

    #[inline]
    fn contains_lset(&self, kset: &[u32], scratch: &mut Vec<u32>) -> bool {
        self.sub_positions.iter().any(|pos| {
            scratch.clear();
            scratch.extend(pos.iter().map(|&p| kset[p]));
            self.lset_bits.get(self.table.rank(scratch) as usize)
        })
    }

    #[inline]
    fn is_kset(&self, kset: &[u32]) -> bool {
        self.kset_ranks.binary_search(&self.table.rank(kset)).is_ok()
    }

    /// `l`-ranks lying inside some selected `k`-set.
    fn lower_covered(&self) -> BitSet {
        let mut covered = BitSet::new(self.lset_bits.len());
        let mut scratch = Vec::with_capacity(self.pair.l as usize);
        for ks in self.pair.ksets.iter() {
            for pos in &self.sub_positions {
                scratch.clear();
                scratch.extend(pos.iter().map(|&p| ks.elements()[p]));
                covered.insert(self.table.rank(&scratch) as usize);
            }
        }
        covered
    }

    /// Lower-level scan: count and colex-first witnesses of undominated `l`-sets.
    fn scan_lower(&self, cap: usize) -> Result<(u64, Vec<Subset>)> {
        let covered = self.lower_covered();
        let mut count = 0u64;
        let mut witnesses = Vec::new();
        for rank in 0..self.lset_bits.len() {
            if !self.lset_bits.get(rank) && !covered.get(rank) {
                count += 1;
                if witnesses.len() < cap {
                    witnesses.push(unrank_colex(self.pair.l, rank as u64)?);
                }
            }
        }
        Ok((count, witnesses))
    }

    /// Upper-level scan, split by largest element so chunks can run in
    /// parallel and still concatenate in colex order.
    fn scan_upper(&self, cap: usize) -> (u64, Vec<Subset>) {
        let (n, k) = (self.pair.n, self.pair.k);
        let chunks: Vec<(u64, Vec<Subset>)> = (k..=n)
            .into_par_iter()
            .map(|top| {
                let mut count = 0u64;
                let mut found = Vec::new();
                let mut scratch = Vec::with_capacity(self.pair.l as usize);
                walk_with_max(top, k, |kset| {
                    if self.contains_lset(kset, &mut scratch) || self.is_kset(kset) {
                        return;
                    }
                    count += 1;
                    if found.len() < cap {
                        found.push(Subset::from_sorted_unchecked(kset.to_vec()));
                    }
                });
                (count, found)
            })
            .collect();
        let mut total = 0;
        let mut witnesses = Vec::new();
        for (c, w) in chunks {
            total += c;
            let room = cap.saturating_sub(witnesses.len());
            witnesses.extend(w.into_iter().take(room));
        }
        (total, witnesses)
    }

    fn counts(&self) -> ConditionCounts {
        let (n, k) = (self.pair.n, self.pair.k);
        let upper_via_lsets: u64 = (k..=n)
            .into_par_iter()
            .map(|top| {
                let mut count = 0u64;
                let mut scratch = Vec::with_capacity(self.pair.l as usize);
                walk_with_max(top, k, |kset| {
                    if self.contains_lset(kset, &mut scratch) && !self.is_kset(kset) {
                        count += 1;
                    }
                });
                count
            })
            .sum();
        let covered = self.lower_covered();
        let lower_via_ksets = covered.count_difference(&self.lset_bits) as u64;
        ConditionCounts {
            upper_via_lsets,
            lower_via_ksets,
        }
    }
}

/// Full check with the default witness cap.
pub fn check_domination(pair: &DominatingPair) -> Result<DominationVerdict> {
    check_domination_capped(pair, DEFAULT_VIOLATION_CAP)
}

/// Reports exact violation counts per side and at most `cap` witnesses,
/// lower side first, colex-smallest first.
pub fn check_domination_capped(pair: &DominatingPair, cap: usize) -> Result<DominationVerdict> {
    let scanner = Scanner::new(pair)?;
    let (lower, (upper_count, upper)) = rayon::join(|| scanner.scan_lower(cap), || scanner.scan_upper(cap));
    let (lower_count, lower) = lower?;
    let mut violations: Vec<Violation> = lower
        .into_iter()
        .map(|witness| Violation {
            side: Side::Lower,
            witness,
        })
        .collect();
    let room = cap.saturating_sub(violations.len());
    violations.extend(upper.into_iter().take(room).map(|witness| Violation {
        side: Side::Upper,
        witness,
    }));
    Ok(DominationVerdict {
        dominating: lower_count == 0 && upper_count == 0,
        undominated_lsets: lower_count,
        undominated_ksets: upper_count,
        violations,
    })
}

pub fn is_dominating(pair: &DominatingPair) -> Result<bool> {
    Ok(check_domination_capped(pair, 0)?.dominating)
}

/// How many vertices are dominated only through the other level.
pub fn condition_counts(pair: &DominatingPair) -> Result<ConditionCounts> {
    Ok(Scanner::new(pair)?.counts())
}
