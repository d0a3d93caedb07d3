//! Exact domination numbers, Turán numbers and clique counts at small `n`.

mod search;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::bounds::counting_lower_bound;
use crate::combinatorics::{binomial_u64, enumerate_ksubsets, BinomTable, Family, PositionCombinations, Subset};
use crate::domination::{validate_levels, DominatingPair};
use crate::error::{invalid, Error, Result};
use search::{Budget, Minimum, SetCover};

/// Largest vertex count the solver will materialize.
pub const MAX_VERTICES: u64 = 4096;

/// Hard cap on the vertex count for [`exhaustive_gamma`].
pub const EXHAUSTIVE_CAP: u64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Optimal,
    BoundsOnly,
    NodeLimit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: Status,
    pub lower: u64,
    pub upper: u64,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<DominatingPair>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TuranResult {
    pub status: Status,
    pub lower: u64,
    pub upper: u64,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Family>,
}

/// The vertices of `G_{k,l}`: ids `0..L` are the `l`-sets in colex order,
/// `L..L+K` the `k`-sets.
struct LevelGraph {
    n: u32,
    k: u32,
    l: u32,
    lsets: Vec<Subset>,
    ksets: Vec<Subset>,
    /// For each `k`-set, the ids of its `l`-subsets.
    below: Vec<Vec<usize>>,
}

impl LevelGraph {
    fn new(n: u32, k: u32, l: u32) -> Self {
        let table = BinomTable::new(n, k);
        let lsets: Vec<Subset> = enumerate_ksubsets(n, l).collect();
        let ksets: Vec<Subset> = enumerate_ksubsets(n, k).collect();
        let below = ksets
            .iter()
            .map(|ks| {
                PositionCombinations::new(k as usize, l as usize)
                    .map(|pos| {
                        let sub: Vec<u32> = pos.iter().map(|&p| ks.elements()[p]).collect();
                        table.rank(&sub) as usize
                    })
                    .collect()
            })
            .collect();
        LevelGraph {
            n,
            k,
            l,
            lsets,
            ksets,
            below,
        }
    }

    fn vertices(&self) -> usize {
        self.lsets.len() + self.ksets.len()
    }

    /// Closed neighbourhoods as bitsets over vertex ids.
    fn closed_neighbourhoods(&self) -> Vec<BitSet> {
        let nl = self.lsets.len();
        let v = self.vertices();
        let mut nb: Vec<BitSet> = (0..v)
            .map(|i| {
                let mut b = BitSet::new(v);
                b.insert(i);
                b
            })
            .collect();
        for (j, subs) in self.below.iter().enumerate() {
            for &i in subs {
                nb[nl + j].insert(i);
                nb[i].insert(nl + j);
            }
        }
        nb
    }

    fn pair(&self, ids: &[usize]) -> Result<DominatingPair> {
        let nl = self.lsets.len();
        let mut lsets = Vec::new();
        let mut ksets = Vec::new();
        for &id in ids {
            if id < nl {
                lsets.push(self.lsets[id].clone());
            } else {
                ksets.push(self.ksets[id - nl].clone());
            }
        }
        DominatingPair::new(
            self.n,
            self.k,
            self.l,
            Family::from_sorted_unchecked(self.n, self.l, lsets),
            Family::from_sorted_unchecked(self.n, self.k, ksets),
        )
    }
}

fn vertex_count(n: u32, k: u32, l: u32) -> Option<u64> {
    let a = binomial_u64(n as u64, l as u64).ok()?;
    let b = binomial_u64(n as u64, k as u64).ok()?;
    a.checked_add(b)
}

/// Domination number by trying every vertex subset, smallest size first and
/// in colex order within a size, so the first hit is the colex-least
/// optimum.
pub fn exhaustive_gamma(n: u32, k: u32, l: u32) -> Result<SolveResult> {
    validate_levels(n, k, l)?;
    let v = vertex_count(n, k, l).unwrap_or(u64::MAX);
    if v > EXHAUSTIVE_CAP {
        return Err(Error::TooLarge(format!(
            "exhaustive search is capped at {EXHAUSTIVE_CAP} vertices, G_{{{k},{l}}} on n={n} has {v}"
        )));
    }
    let g = LevelGraph::new(n, k, l);
    let masks: Vec<u32> = g
        .closed_neighbourhoods()
        .iter()
        .map(|b| b.iter().fold(0u32, |m, i| m | 1 << i))
        .collect();
    let full = if v == 32 { u32::MAX } else { (1u32 << v) - 1 };
    let mut nodes = 0u64;
    for r in 0..=v as usize {
        for combo in PositionCombinations::new(v as usize, r) {
            nodes += 1;
            if combo.iter().fold(0u32, |m, &i| m | masks[i]) == full {
                let size = r as u64;
                return Ok(SolveResult {
                    status: Status::Optimal,
                    lower: size,
                    upper: size,
                    nodes,
                    certificate: Some(g.pair(&combo)?),
                });
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

fn trivial_upper(n: u32, k: u32, l: u32) -> Result<u64> {
    Ok(binomial_u64(n as u64, l as u64)?.min(binomial_u64(n as u64, k as u64).unwrap_or(u64::MAX)))
}

/// Branch and bound over closed neighbourhoods.
///
/// `budget` caps the number of search nodes. When it runs out before the
/// minimum is proven the status is `node-limit`, with the proven lower bound
/// and the best pair found. Graphs above [`MAX_VERTICES`] are not built and
/// yield `bounds-only` with the counting bound.
pub fn exact_gamma(n: u32, k: u32, l: u32, budget: Option<u64>) -> Result<SolveResult> {
    validate_levels(n, k, l)?;
    let floor = counting_lower_bound(n, k, l)?;
    let floor = u64::try_from(floor).map_err(|_| Error::Overflow("counting bound exceeds u64".into()))?;
    match vertex_count(n, k, l) {
        Some(v) if v <= MAX_VERTICES => {}
        _ => {
            return Ok(SolveResult {
                status: Status::BoundsOnly,
                lower: floor,
                upper: trivial_upper(n, k, l)?,
                nodes: 0,
                certificate: None,
            })
        }
    }
    let g = LevelGraph::new(n, k, l);
    let nb = g.closed_neighbourhoods();
    let problem = SetCover::new(g.vertices(), nb);
    let mut budget = Budget::new(budget);
    let res = match problem.minimum(floor as usize, &mut budget) {
        Minimum::Optimal(ids) => SolveResult {
            status: Status::Optimal,
            lower: ids.len() as u64,
            upper: ids.len() as u64,
            nodes: budget.used,
            certificate: Some(g.pair(&ids)?),
        },
        Minimum::Partial { best, lower } => SolveResult {
            status: Status::NodeLimit,
            lower: lower as u64,
            upper: best.len() as u64,
            nodes: budget.used,
            certificate: Some(g.pair(&best)?),
        },
        Minimum::Uncoverable => unreachable!("every vertex dominates itself"),
    };
    Ok(res)
}

/// Largest `l`-uniform family on `[n]` with no `k`-set all of whose
/// `l`-subsets are members. Solved as the complement of a minimum set of
/// `l`-sets meeting every `k`-set; the witness is the complement of the
/// colex-least such set. For `n < k` every family qualifies.
pub fn exact_turan_ex(n: u32, k: u32, l: u32, budget: Option<u64>) -> Result<TuranResult> {
    if !(k > l && l >= 1 && n >= 1) {
        return Err(invalid(format!("need n >= 1 and k > l >= 1, got n={n} k={k} l={l}")));
    }
    let total = binomial_u64(n as u64, l as u64)?;
    match vertex_count(n, k, l) {
        Some(v) if v <= MAX_VERTICES => {}
        _ => {
            return Ok(TuranResult {
                status: Status::BoundsOnly,
                lower: 0,
                upper: total,
                nodes: 0,
                witness: None,
            })
        }
    }
    let g = LevelGraph::new(n, k, l);
    let mut cands = vec![BitSet::new(g.ksets.len()); g.lsets.len()];
    for (j, subs) in g.below.iter().enumerate() {
        for &i in subs {
            cands[i].insert(j);
        }
    }
    let problem = SetCover::new(g.ksets.len(), cands);
    let mut budget = Budget::new(budget);
    let complement = |hit: &[usize]| -> Family {
        let mut keep = vec![true; g.lsets.len()];
        hit.iter().for_each(|&i| keep[i] = false);
        let members = g
            .lsets
            .iter()
            .zip(keep)
            .filter(|&(_, k)| k)
            .map(|(s, _)| s.clone())
            .collect();
        Family::from_sorted_unchecked(n, l, members)
    };
    let res = match problem.minimum(0, &mut budget) {
        Minimum::Optimal(ids) => {
            let ex = total - ids.len() as u64;
            TuranResult {
                status: Status::Optimal,
                lower: ex,
                upper: ex,
                nodes: budget.used,
                witness: Some(complement(&ids)),
            }
        }
        Minimum::Partial { best, lower } => TuranResult {
            status: Status::NodeLimit,
            lower: total - best.len() as u64,
            upper: total - lower as u64,
            nodes: budget.used,
            witness: Some(complement(&best)),
        },
        Minimum::Uncoverable => unreachable!("every k-set contains an l-set"),
    };
    Ok(res)
}

fn adjacency(edges: &Family, n: u32) -> Result<Vec<Vec<bool>>> {
    if edges.rank() != 2 {
        return Err(invalid(format!("expected a graph (rank 2), got rank {}", edges.rank())));
    }
    let mut adj = vec![vec![false; n as usize + 1]; n as usize + 1];
    for e in edges.iter() {
        let (a, b) = (e.elements()[0], e.elements()[1]);
        if b > n {
            return Err(invalid(format!("edge {e} lies outside [1, {n}]")));
        }
        adj[a as usize][b as usize] = true;
        adj[b as usize][a as usize] = true;
    }
    Ok(adj)
}

fn count_uniform(edges: &Family, n: u32, k: u32, want: bool) -> Result<u64> {
    let adj = adjacency(edges, n)?;
    let count = enumerate_ksubsets(n, k)
        .filter(|s| {
            let e = s.elements();
            (0..e.len()).all(|i| (i + 1..e.len()).all(|j| adj[e[i] as usize][e[j] as usize] == want))
        })
        .count();
    Ok(count as u64)
}

/// Number of `k`-sets spanning a complete subgraph.
pub fn count_cliques(edges: &Family, n: u32, k: u32) -> Result<u64> {
    count_uniform(edges, n, k, true)
}

/// Number of `k`-sets spanning no edge.
pub fn count_independent(edges: &Family, n: u32, k: u32) -> Result<u64> {
    count_uniform(edges, n, k, false)
}
