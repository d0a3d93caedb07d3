//! Triple-level constructions for `G_{5,3}` and `G_{4,3}`.

use super::cover::{greedy_cover, subset_cover, CoverInstance};
use super::Construction;
use crate::combinatorics::{enumerate_ksubsets, near_equal_partition, Family, Partition};
use crate::domination::DominatingPair;
use crate::error::{invalid, Result};

fn profile_of(part: &Partition, set: &[u32]) -> [u8; 3] {
    let mut c = [0u8; 3];
    for &x in set {
        c[part.part_of(x)] += 1;
    }
    c
}

/// Whether a set with the given part profile has cyclic type `(p, q, r)`.
pub fn has_type(profile: [u8; 3], ty: [u8; 3]) -> bool {
    (0..3).any(|i| (0..3).all(|j| profile[(i + j) % 3] == ty[j]))
}

fn split(n: u32, p: u32) -> Result<(Partition, Family, Family)> {
    let part = near_equal_partition(n, p)?;
    let (mut inside, mut rest) = (Vec::new(), Vec::new());
    for t in enumerate_ksubsets(n, 3) {
        if p == 2 {
            if part.profile(&t).contains(&3) {
                inside.push(t)
            } else {
                rest.push(t)
            }
        } else {
            let prof = profile_of(&part, t.elements());
            if has_type(prof, [3, 0, 0]) || has_type(prof, [2, 1, 0]) {
                inside.push(t)
            } else {
                rest.push(t)
            }
        }
    }
    Ok((
        part,
        Family::from_sorted_unchecked(n, 3, inside),
        Family::from_sorted_unchecked(n, 3, rest),
    ))
}

/// Cover instance for `G_{5,3}`: points are the triples meeting both halves,
/// blocks are the 5-sets split 2 + 3 between the halves.
pub fn g53_instance(n: u32) -> Result<(Family, CoverInstance)> {
    if n < 10 || !n.is_multiple_of(2) {
        return Err(invalid(format!("g53 needs even n >= 10, got {n}")));
    }
    let (part, lsets, cross) = split(n, 2)?;
    let inst = subset_cover(cross, 5, |set| {
        let a = set.iter().filter(|&&x| part.part_of(x) == 0).count();
        a == 2 || a == 3
    })?;
    Ok((lsets, inst))
}

/// Cover instance for `G_{4,3}`: points are the triples of types (1,1,1)
/// and (1,2,0); blocks are all type (1,3,0) 4-sets and the type (2,1,1)
/// 4-sets whose labels sum to an even number.
pub fn g43_instance(n: u32) -> Result<(Family, CoverInstance)> {
    if n < 12 || !n.is_multiple_of(3) {
        return Err(invalid(format!("g43 needs 3 | n and n >= 12, got {n}")));
    }
    let (part, lsets, rest) = split(n, 3)?;
    let inst = subset_cover(rest, 4, |set| {
        let prof = profile_of(&part, set);
        has_type(prof, [1, 3, 0]) || (has_type(prof, [2, 1, 1]) && set.iter().map(|&x| x as u64).sum::<u64>() % 2 == 0)
    })?;
    Ok((lsets, inst))
}

fn assemble(n: u32, k: u32, lsets: Family, inst: CoverInstance) -> Result<Construction> {
    let sol = greedy_cover(&inst)?;
    let ksets = inst.sources_family(&sol.chosen)?;
    Ok(Construction {
        pair: DominatingPair::new(n, k, 3, lsets, ksets)?,
        cover: Some(sol.stats),
    })
}

pub fn g53_construction(n: u32) -> Result<Construction> {
    let (lsets, inst) = g53_instance(n)?;
    assemble(n, 5, lsets, inst)
}

pub fn g43_construction(n: u32) -> Result<Construction> {
    let (lsets, inst) = g43_instance(n)?;
    assemble(n, 4, lsets, inst)
}

pub fn g53_construct(n: u32) -> Result<DominatingPair> {
    Ok(g53_construction(n)?.pair)
}

pub fn g43_construct(n: u32) -> Result<DominatingPair> {
    Ok(g43_construction(n)?.pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Subset;
    use crate::domination::check_domination;

    #[test]
    fn cyclic_types() {
        assert!(has_type([0, 2, 1], [2, 1, 0]));
        assert!(has_type([1, 0, 2], [2, 1, 0]));
        assert!(!has_type([1, 2, 0], [2, 1, 0]));
        assert!(has_type([1, 2, 0], [1, 2, 0]));
        assert!(has_type([1, 1, 1], [1, 1, 1]));
    }

    #[test]
    fn g53_counts() {
        let (lsets, inst) = g53_instance(10).unwrap();
        assert_eq!(lsets.len(), 20);
        assert_eq!(inst.num_points(), 100);
        assert!(inst.block_sizes().all(|s| s == 9));
        assert!(g53_instance(11).is_err());
        // a 5-set always has three elements in one half
        for f in enumerate_ksubsets(10, 5) {
            assert!(f.subsets_of_size(3).any(|t| lsets.contains(&t)));
        }
        let c = g53_construction(10).unwrap();
        assert!(check_domination(&c.pair).unwrap().dominating);
    }

    #[test]
    fn g43_counts() {
        let (lsets, inst) = g43_instance(12).unwrap();
        assert_eq!(lsets.len(), 84);
        assert_eq!(inst.num_points(), 220 - 84);
        assert!(inst.block_sizes().all(|s| s == 3));
        assert!(g43_instance(13).is_err());
        assert!(g43_instance(9).is_err());
    }

    #[test]
    fn g43_degrees_at_12() {
        let (_, inst) = g43_instance(12).unwrap();
        let part = near_equal_partition(12, 3).unwrap();
        let deg = inst.point_degrees();
        for (i, t) in inst.universe().iter().enumerate() {
            let prof = profile_of(&part, t.elements());
            if prof == [1, 1, 1] {
                assert!(deg[i] == 3 || deg[i] == 5, "{t} has degree {}", deg[i]);
                // no (1,3,0) block holds a (1,1,1) triple
                for b in 0..inst.num_blocks() {
                    if inst.block(b).contains(&(i as u32)) {
                        let src = inst.block_source(b).unwrap();
                        assert!(has_type(profile_of(&part, src.elements()), [2, 1, 1]));
                    }
                }
            } else {
                assert!(has_type(prof, [1, 2, 0]));
                assert_eq!(deg[i], 4, "{t}");
            }
        }
        let t = Subset::new(vec![1, 5, 9]).unwrap();
        assert!(inst.universe().contains(&t));
    }

    #[test]
    fn g43_dominates() {
        let c = g43_construction(12).unwrap();
        assert!(check_domination(&c.pair).unwrap().dominating);
        assert_eq!(c.cover.unwrap().m, 3);
    }
}
