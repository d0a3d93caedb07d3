//! The partition construction for `G_{k,2}`.
//!
//! Split `[n]` into `k - 1` near-equal parts. The pairs inside parts form
//! `E`; every `k`-set has two elements in one part, so `E` dominates the
//! upper level. The cross pairs `F` are then covered by blocks `H(A)`: a
//! `k`-set `A` meeting every part, one part twice, contributes its
//! `C(k,2) - 1` cross pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cover::{greedy_cover, subset_cover, CoverInstance};
use super::Construction;
use crate::combinatorics::{binomial_u128, complement_pairs, near_equal_partition, Family, Partition, Subset};
use crate::domination::DominatingPair;
use crate::error::{invalid, Error, Result};

/// Pairs lying inside one part of the `(k-1)`-part near-equal partition.
pub fn partition_edges(n: u32, k: u32) -> Result<Family> {
    if k < 3 || n < k - 1 {
        return Err(invalid(format!(
            "partition edges need k >= 3 and n >= k-1, got n={n} k={k}"
        )));
    }
    let part = near_equal_partition(n, k - 1)?;
    Ok(edges_within(&part))
}

fn edges_within(part: &Partition) -> Family {
    let n = part.n();
    let mut edges = Vec::new();
    for y in 1..=n {
        for x in 1..y {
            if part.same_part(x, y) {
                edges.push(Subset::from_sorted_unchecked(vec![x, y]));
            }
        }
    }
    Family::from_sorted_unchecked(n, 2, edges)
}

/// Whether a sorted `k`-set meets every part, exactly one part twice.
fn is_block_shape(part: &Partition, set: &[u32]) -> bool {
    let mut counts = [0u8; 64];
    let parts = part.num_parts();
    for &x in set {
        counts[part.part_of(x)] += 1;
    }
    let counts = &counts[..parts];
    counts.iter().all(|&c| c >= 1) && counts.iter().filter(|&&c| c == 2).count() == 1 && counts.iter().all(|&c| c <= 2)
}

/// Cover instance on the cross pairs for a given partition into `k - 1`
/// parts; works for any part sizes.
pub fn block_family_on(part: &Partition, k: u32) -> Result<CoverInstance> {
    if k < 3 || part.num_parts() != (k - 1) as usize {
        return Err(invalid(format!(
            "need k >= 3 and k-1 parts, got k={k} with {} parts",
            part.num_parts()
        )));
    }
    if part.num_parts() > 64 {
        return Err(Error::TooLarge("more than 64 parts".into()));
    }
    let cross = complement_pairs(&edges_within(part), part.n());
    subset_cover(cross, k, |set| is_block_shape(part, set))
}

/// Blocks `H(A)` over the cross pairs, for `(k-1) | n`.
pub fn block_family(n: u32, k: u32) -> Result<CoverInstance> {
    if k < 3 {
        return Err(invalid(format!("block family needs k >= 3, got {k}")));
    }
    if n == 0 || !n.is_multiple_of(k - 1) {
        return Err(invalid(format!("block family needs (k-1) | n, got n={n} k={k}")));
    }
    block_family_on(&near_equal_partition(n, k - 1)?, k)
}

/// Pair-of-points configurations for two-degrees. Two cross pairs either
/// share an element (their union has 3 elements) or not (4 elements); the
/// label records how many parts the union meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairCase {
    #[serde(rename = "overlap-2parts")]
    Overlap2Parts,
    #[serde(rename = "overlap-3parts")]
    Overlap3Parts,
    #[serde(rename = "disjoint-3parts")]
    Disjoint3Parts,
    #[serde(rename = "disjoint-4parts")]
    Disjoint4Parts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub d_point: u128,
    pub d_pair_cases: BTreeMap<PairCase, u128>,
}

fn part_size_exact(n: u32, k: u32) -> Result<u128> {
    if k < 3 || n == 0 || !n.is_multiple_of(k - 1) {
        return Err(invalid(format!(
            "degree profile needs k >= 3 and (k-1) | n, got n={n} k={k}"
        )));
    }
    Ok((n / (k - 1)) as u128)
}

/// Closed-form degrees with `q = n / (k-1)`.
///
/// A case is listed only when the parts can realize it (three parts for the
/// 3-part cases, four for the 4-part case). Terms whose coefficient
/// `k - c` vanishes are dropped, which is also where their exponent would
/// go negative.
pub fn degree_profile(n: u32, k: u32) -> Result<DegreeProfile> {
    let q = part_size_exact(n, k)?;
    let k = k as i64;
    let pairs_in_part = binomial_u128(q as u64, 2)?;
    let pow = |e: i64| -> u128 { q.pow(e as u32) };
    // lead*(q-1)*q^(k-c) + (k-c)*C(q,2)*q^(k-c-1)
    let mixed = |lead: u128, c: i64| -> u128 {
        let e1 = k - c;
        let first = lead * (q - 1) * pow(e1);
        let second = if k - c == 0 {
            0
        } else {
            (k - c) as u128 * pairs_in_part * pow(e1 - 1)
        };
        first + second
    };

    let d_point = mixed(2, 3);
    let mut cases = BTreeMap::new();
    cases.insert(PairCase::Overlap2Parts, pow(k - 3));
    if k > 3 {
        cases.insert(PairCase::Overlap3Parts, mixed(3, 4));
        cases.insert(PairCase::Disjoint3Parts, pow(k - 4));
    }
    if k > 4 {
        cases.insert(PairCase::Disjoint4Parts, mixed(4, 5));
    }
    Ok(DegreeProfile {
        d_point,
        d_pair_cases: cases,
    })
}

/// Classifies two distinct cross pairs; `None` for disjoint pairs inside
/// two parts, which no block can contain together.
fn classify(part: &Partition, u: &Subset, v: &Subset) -> Option<PairCase> {
    let union = u.union(v);
    let mut seen = [false; 64];
    for &x in union.elements() {
        seen[part.part_of(x)] = true;
    }
    let spanned = seen.iter().filter(|&&b| b).count();
    match (union.len(), spanned) {
        (3, 2) => Some(PairCase::Overlap2Parts),
        (3, 3) => Some(PairCase::Overlap3Parts),
        (4, 3) => Some(PairCase::Disjoint3Parts),
        (4, 4) => Some(PairCase::Disjoint4Parts),
        _ => None,
    }
}

/// Degrees counted over the actual blocks. Fails if a configuration is not
/// uniform or if a pair no block should contain shows up in one.
pub fn degree_bruteforce(n: u32, k: u32) -> Result<DegreeProfile> {
    part_size_exact(n, k)?;
    let part = near_equal_partition(n, k - 1)?;
    let inst = block_family(n, k)?;
    let np = inst.num_points();

    let point_deg = inst.point_degrees();
    let d_point = point_deg[0] as u128;
    if point_deg.iter().any(|&d| d as u128 != d_point) {
        return Err(Error::InvalidFamily("point degrees are not uniform".into()));
    }

    let mut co = vec![0u32; np * np];
    for b in 0..inst.num_blocks() {
        let pts = inst.block(b);
        for (i, &x) in pts.iter().enumerate() {
            for &y in &pts[i + 1..] {
                co[x as usize * np + y as usize] += 1;
            }
        }
    }

    let points = inst.universe().members();
    let mut cases: BTreeMap<PairCase, u128> = BTreeMap::new();
    for x in 0..np {
        for y in x + 1..np {
            let d = co[x * np + y] as u128;
            match classify(&part, &points[x], &points[y]) {
                Some(case) => {
                    let entry = cases.entry(case).or_insert(d);
                    if *entry != d {
                        return Err(Error::InvalidFamily(format!(
                            "two-degree of {case:?} pairs is not uniform ({} vs {d})",
                            entry
                        )));
                    }
                }
                None if d != 0 => {
                    return Err(Error::InvalidFamily(format!(
                        "pair {} {} has two-degree {d} but cannot share a block",
                        points[x], points[y]
                    )))
                }
                None => {}
            }
        }
    }
    Ok(DegreeProfile {
        d_point,
        d_pair_cases: cases,
    })
}

/// Partition edges plus a greedy cover of the cross pairs.
///
/// Any `n > k` works: the near-equal partition then has a part with two
/// elements, so every cross pair lies in some block.
pub fn gk2_construction(n: u32, k: u32) -> Result<Construction> {
    if k < 3 || n <= k {
        return Err(invalid(format!(
            "gk2 construction needs k >= 3 and n > k, got n={n} k={k}"
        )));
    }
    let part = near_equal_partition(n, k - 1)?;
    let lsets = edges_within(&part);
    let inst = block_family_on(&part, k)?;
    let sol = greedy_cover(&inst)?;
    let ksets = inst.sources_family(&sol.chosen)?;
    Ok(Construction {
        pair: DominatingPair::new(n, k, 2, lsets, ksets)?,
        cover: Some(sol.stats),
    })
}

pub fn gk2_construct(n: u32, k: u32) -> Result<DominatingPair> {
    Ok(gk2_construction(n, k)?.pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::check_domination;

    #[test]
    fn partition_edges_examples() {
        let e = partition_edges(10, 3).unwrap();
        assert_eq!(e.len(), 20);
        assert_eq!(partition_edges(6, 4).unwrap().len(), 3);
        assert!(partition_edges(6, 2).is_err());
        // every 3-subset of [10] holds an edge (two of its elements share a part)
        for t in crate::combinatorics::enumerate_ksubsets(10, 3) {
            assert!(t.subsets_of_size(2).any(|p| e.contains(&p)));
        }
    }

    #[test]
    fn block_family_examples() {
        let inst = block_family(10, 3).unwrap();
        assert_eq!(inst.num_points(), 25);
        assert_eq!(inst.num_blocks(), 2 * 10 * 5);
        assert!(inst.block_sizes().all(|s| s == 2));

        let inst = block_family(12, 4).unwrap();
        assert_eq!(inst.num_points(), 48);
        assert!(inst.block_sizes().all(|s| s == 5));
        assert_eq!(inst.design_m(), 5);

        assert!(block_family(11, 4).is_err());
    }

    #[test]
    fn degree_examples() {
        let p = degree_profile(10, 3).unwrap();
        assert_eq!(p.d_point, 8);
        let p = degree_profile(12, 4).unwrap();
        assert_eq!(p.d_point, 2 * 3 * 4 + 6);
        assert_eq!(p.d_pair_cases[&PairCase::Disjoint3Parts], 1);
        assert_eq!(degree_bruteforce(10, 3).unwrap().d_point, 8);
        assert_eq!(degree_bruteforce(12, 4).unwrap().d_point, 30);
    }

    #[test]
    fn gk2_small() {
        let c = gk2_construction(10, 3).unwrap();
        assert_eq!(c.pair.lsets().len(), 20);
        assert!(check_domination(&c.pair).unwrap().dominating);
        assert!(c.pair.ksets().len() >= 13);

        let c = gk2_construction(12, 4).unwrap();
        assert_eq!(c.pair.lsets().len(), 18);
        assert!(check_domination(&c.pair).unwrap().dominating);

        let c = gk2_construction(5, 3).unwrap();
        assert!(check_domination(&c.pair).unwrap().dominating);
        assert!(gk2_construction(3, 4).is_err());
        assert!(gk2_construction(3, 3).is_err());
    }
}
