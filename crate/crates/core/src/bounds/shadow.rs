//! The overlap graph on a `k`-uniform family (members adjacent when they
//! share at least two elements), its components, and the pair-shadow
//! estimates built on them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{c, Rational};
use crate::combinatorics::{binomial_u128, shadow2, Family, Subset};
use crate::error::{invalid, Result};

fn pair_key(a: u32, b: u32) -> u64 {
    (a as u64) << 32 | b as u64
}

/// For every pair inside some member, the indices of the members holding it.
fn pair_index(t: &Family) -> HashMap<u64, Vec<usize>> {
    let mut map: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, m) in t.iter().enumerate() {
        let e = m.elements();
        for x in 0..e.len() {
            for y in x + 1..e.len() {
                map.entry(pair_key(e[x], e[y])).or_default().push(i);
            }
        }
    }
    map
}

/// Adjacency lists (sorted) of the overlap graph on member indices.
pub fn overlap_graph(t: &Family) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); t.len()];
    for holders in pair_index(t).into_values() {
        for (x, &i) in holders.iter().enumerate() {
            for &j in &holders[x + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    adj
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Components of the overlap graph as sorted index lists, ordered by their
/// smallest index (the colex-least member).
pub fn overlap_components(t: &Family) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..t.len()).collect();
    for holders in pair_index(t).into_values() {
        for &j in &holders[1..] {
            let (a, b) = (find(&mut parent, holders[0]), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); t.len()];
    for i in 0..t.len() {
        let r = find(&mut parent, i);
        by_root[r].push(i);
    }
    by_root.into_iter().filter(|v| !v.is_empty()).collect()
}

fn subfamily(t: &Family, idx: impl IntoIterator<Item = usize>) -> Family {
    let mut members: Vec<Subset> = idx.into_iter().map(|i| t.members()[i].clone()).collect();
    members.sort();
    Family::from_sorted_unchecked(t.n(), t.rank(), members)
}

/// `K` split three ways: members containing an edge of `E` (`k0`); the rest
/// by overlap component, large components (at least `s` members) in `k2`
/// and small ones in `k1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitFamilies {
    pub k0: Family,
    pub k1: Family,
    pub k2: Family,
    pub s: u32,
}

pub fn split_families(e: &Family, kf: &Family, s: u32) -> Result<SplitFamilies> {
    if s <= 1 {
        return Err(invalid(format!("component threshold must exceed 1, got {s}")));
    }
    if e.rank() != 2 {
        return Err(invalid(format!("expected a graph, got rank {}", e.rank())));
    }
    let (mut k0, mut rest) = (Vec::new(), Vec::new());
    for m in kf.iter() {
        if m.subsets_of_size(2).any(|p| e.contains(&p)) {
            k0.push(m.clone());
        } else {
            rest.push(m.clone());
        }
    }
    let rest = Family::from_sorted_unchecked(kf.n(), kf.rank(), rest);
    let (mut small, mut large) = (Vec::new(), Vec::new());
    for comp in overlap_components(&rest) {
        if comp.len() >= s as usize {
            large.extend(comp);
        } else {
            small.extend(comp);
        }
    }
    Ok(SplitFamilies {
        k0: Family::from_sorted_unchecked(kf.n(), kf.rank(), k0),
        k1: subfamily(&rest, small),
        k2: subfamily(&rest, large),
        s,
    })
}

/// Pair-shadow of a connected family against `t (C(k,2) - 1) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedShadow {
    pub shadow_size: u128,
    pub bound: u128,
    pub holds: bool,
}

/// Fails on an empty family or one whose overlap graph is disconnected.
pub fn connected_shadow_check(t: &Family) -> Result<ConnectedShadow> {
    if t.is_empty() {
        return Err(invalid("connected shadow check needs a nonempty family"));
    }
    if t.rank() < 2 {
        return Err(invalid(format!("family rank must be at least 2, got {}", t.rank())));
    }
    let comps = overlap_components(t).len();
    if comps != 1 {
        return Err(invalid(format!("overlap graph has {comps} components, expected one")));
    }
    let shadow_size = shadow2(t).len() as u128;
    let bound = t.len() as u128 * (binomial_u128(t.rank() as u64, 2)? - 1) + 1;
    Ok(ConnectedShadow {
        shadow_size,
        bound,
        holds: shadow_size <= bound,
    })
}

/// Pair-shadow of the large components against `(C(k,2) - 1 + 1/s) |k2|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentShadow {
    pub lhs: u128,
    pub rhs: Rational,
    pub holds: bool,
}

pub fn component_shadow_check(split: &SplitFamilies, k: u32) -> Result<ComponentShadow> {
    if k < 2 {
        return Err(invalid(format!("k must be at least 2, got {k}")));
    }
    let lhs = if split.k2.is_empty() {
        0
    } else {
        shadow2(&split.k2).len() as u128
    };
    let per = &Rational::integer(c(k, 2)? - 1) + &Rational::new(1, split.s)?;
    let rhs = &per * &Rational::integer(split.k2.len());
    Ok(ComponentShadow {
        holds: Rational::integer(lhs) <= rhs,
        lhs,
        rhs,
    })
}

/// `|E| + (C(k,2) - 1)|k0| + |σ2(k1)| + |σ2(k2)|` against `C(n,2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPairCount {
    pub edges: u128,
    pub k0_term: u128,
    pub k1_shadow: u128,
    pub k2_shadow: u128,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

pub fn split_pair_counting(e: &Family, kf: &Family, s: u32, n: u32, k: u32) -> Result<SplitPairCount> {
    super::check_pairs(e, kf, n, k)?;
    let split = split_families(e, kf, s)?;
    split_pair_count_of(e, &split, n, k)
}

pub(crate) fn split_pair_count_of(e: &Family, split: &SplitFamilies, n: u32, k: u32) -> Result<SplitPairCount> {
    let shadow = |f: &Family| if f.is_empty() { 0 } else { shadow2(f).len() as u128 };
    let edges = e.len() as u128;
    let k0_term = (c(k, 2)? - 1) * split.k0.len() as u128;
    let k1_shadow = shadow(&split.k1);
    let k2_shadow = shadow(&split.k2);
    let lhs = edges + k0_term + k1_shadow + k2_shadow;
    let rhs = c(n, 2)?;
    Ok(SplitPairCount {
        edges,
        k0_term,
        k1_shadow,
        k2_shadow,
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}
