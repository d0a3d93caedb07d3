use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    binomial_u64, unrank_colex, walk_with_max, BinomTable, Family, PositionCombinations, Subset,
};
use crate::error::{Error, Result};

/// Points (members of `universe`) and blocks, each block listing the
/// indices of the points it covers. Blocks are stored flat; block `i`
/// covers `points[offsets[i]..offsets[i + 1]]`.
///
/// When blocks come from sets (a `k`-set covering its sub-pairs, a pair
/// hitting the sets above it, ...) the colex rank of each generating set is
/// kept in `sources`, strictly increasing, so block ids follow colex order.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    universe: Family,
    offsets: Vec<usize>,
    points: Vec<u32>,
    sources: Option<BlockSources>,
}

#[derive(Clone, Debug)]
struct BlockSources {
    rank: u32,
    colex: Vec<u64>,
}

impl CoverInstance {
    pub fn new(universe: Family, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        offsets.push(0);
        let mut points = Vec::new();
        for (id, mut b) in blocks.into_iter().enumerate() {
            b.sort_unstable();
            b.dedup();
            if let Some(&p) = b.iter().find(|&&p| p as usize >= universe.len()) {
                return Err(Error::InvalidFamily(format!(
                    "block {id} lists point {p} but the universe has {} points",
                    universe.len()
                )));
            }
            points.extend(b);
            offsets.push(points.len());
        }
        Ok(CoverInstance {
            universe,
            offsets,
            points,
            sources: None,
        })
    }

    /// Attaches generating sets: block `i` came from the `rank`-set with
    /// colex rank `colex[i]`.
    pub fn with_sources(mut self, rank: u32, colex: Vec<u64>) -> Result<Self> {
        if colex.len() != self.num_blocks() {
            return Err(Error::InvalidFamily("one source per block required".into()));
        }
        if colex.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFamily(
                "block sources must be strictly colex-increasing".into(),
            ));
        }
        self.sources = Some(BlockSources { rank, colex });
        Ok(self)
    }

    pub fn universe(&self) -> &Family {
        &self.universe
    }

    pub fn num_points(&self) -> usize {
        self.universe.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn block(&self, id: usize) -> &[u32] {
        &self.points[self.offsets[id]..self.offsets[id + 1]]
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    /// Largest block size; for the designed instances every block has it.
    pub fn design_m(&self) -> usize {
        self.block_sizes().max().unwrap_or(0)
    }

    /// The set a block was generated from, if sources are attached.
    pub fn block_source(&self, id: usize) -> Option<Subset> {
        let src = self.sources.as_ref()?;
        unrank_colex(src.rank, src.colex[id]).ok()
    }

    /// Family of the generating sets of the given blocks.
    pub fn sources_family(&self, ids: &[usize]) -> Result<Family> {
        let src = self
            .sources
            .as_ref()
            .ok_or_else(|| Error::InvalidFamily("cover instance has no block sources".into()))?;
        let members = ids
            .iter()
            .map(|&id| unrank_colex(src.rank, src.colex[id]))
            .collect::<Result<Vec<_>>>()?;
        Family::new(self.universe.n(), src.rank, members)
    }

    /// Number of blocks covering each point.
    pub fn point_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.num_points()];
        for &p in &self.points {
            deg[p as usize] += 1;
        }
        deg
    }
}

/// Builds the instance whose blocks are the `k`-subsets of `[n]` accepted by
/// `accept`, each covering the members of `universe` it contains. Blocks
/// are scanned in colex order, chunked by largest element for parallelism,
/// so block ids equal colex order whatever the schedule.
pub(crate) fn subset_cover(universe: Family, k: u32, accept: impl Fn(&[u32]) -> bool + Sync) -> Result<CoverInstance> {
    let n = universe.n();
    let t = universe.rank();
    let table = BinomTable::new(n, k.max(t));
    let level = binomial_u64(n as u64, t as u64)? as usize;
    let mut index = vec![u32::MAX; level];
    for (i, m) in universe.iter().enumerate() {
        index[table.rank(m.elements()) as usize] = i as u32;
    }
    let sub_positions: Vec<Vec<usize>> = PositionCombinations::new(k as usize, t as usize).collect();

    let chunks: Vec<(Vec<u64>, Vec<usize>, Vec<u32>)> = (k.max(1)..=n)
        .into_par_iter()
        .map(|top| {
            let mut colex = Vec::new();
            let mut lens = Vec::new();
            let mut pts = Vec::new();
            let mut scratch = Vec::with_capacity(t as usize);
            walk_with_max(top, k, |block| {
                if !accept(block) {
                    return;
                }
                let before = pts.len();
                for pos in &sub_positions {
                    scratch.clear();
                    scratch.extend(pos.iter().map(|&p| block[p]));
                    let idx = index[table.rank(&scratch) as usize];
                    if idx != u32::MAX {
                        pts.push(idx);
                    }
                }
                pts[before..].sort_unstable();
                colex.push(table.rank(block));
                lens.push(pts.len() - before);
            });
            (colex, lens, pts)
        })
        .collect();

    let mut offsets = vec![0usize];
    let mut points = Vec::new();
    let mut colex = Vec::new();
    for (c, lens, pts) in chunks {
        colex.extend(c);
        for len in lens {
            offsets.push(offsets.last().unwrap() + len);
        }
        points.extend(pts);
    }
    Ok(CoverInstance {
        universe,
        offsets,
        points,
        sources: Some(BlockSources { rank: k, colex }),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverStats {
    #[serde(rename = "N")]
    pub universe_size: usize,
    pub m: usize,
    pub blocks_chosen: usize,
    /// `blocks_chosen * m / N`; 1.0 is a perfect cover.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSolution {
    /// block ids in the order greedy picked them
    pub chosen: Vec<usize>,
    pub stats: CoverStats,
}

/// Max-coverage greedy: repeatedly take the block covering the most
/// still-uncovered points, ties to the smallest block id.
///
/// Uses lazy re-evaluation. Coverage counts only decrease, so an entry
/// whose refreshed count still equals its stored key is a true maximum
/// (with the smallest id among equals), which makes the result identical
/// to the eager rule.
pub fn greedy_cover(inst: &CoverInstance) -> Result<CoverSolution> {
    let n_points = inst.num_points();
    if let Some(p) = inst.point_degrees().iter().position(|&d| d == 0) {
        return Err(Error::Uncoverable {
            point: inst.universe.members()[p].to_string(),
        });
    }

    let mut covered = vec![false; n_points];
    let mut remaining = n_points;
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = inst
        .block_sizes()
        .enumerate()
        .filter(|&(_, size)| size > 0)
        .map(|(id, size)| (size, Reverse(id)))
        .collect();
    let mut chosen = Vec::new();

    while remaining > 0 {
        let (stored, Reverse(id)) = heap.pop().expect("every point has a block");
        let fresh = inst.block(id).iter().filter(|&&p| !covered[p as usize]).count();
        if fresh == stored {
            for &p in inst.block(id) {
                covered[p as usize] = true;
            }
            remaining -= fresh;
            chosen.push(id);
        } else if fresh > 0 {
            heap.push((fresh, Reverse(id)));
        }
    }

    let m = inst.design_m();
    let ratio = if n_points == 0 {
        0.0
    } else {
        (chosen.len() * m) as f64 / n_points as f64
    };
    Ok(CoverSolution {
        stats: CoverStats {
            universe_size: n_points,
            m,
            blocks_chosen: chosen.len(),
            ratio,
        },
        chosen,
    })
}
