//! Seeded random dominating pairs and connected families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::overlap_components;
use crate::combinatorics::{enumerate_ksubsets, Family, Subset};
use crate::domination::{is_dominating, validate_levels, DominatingPair};
use crate::error::{invalid, Result};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random walk over dominating pairs of `G_{k,l}`. Starts from all
/// `l`-sets and no `k`-sets; each step toggles a random vertex, keeping the
/// change only if the pair still dominates. Removals are tried three times
/// as often as additions.
pub fn random_dominating_pair(n: u32, k: u32, l: u32, steps: usize, rng: &mut impl Rng) -> Result<DominatingPair> {
    validate_levels(n, k, l)?;
    let all_l: Vec<Subset> = enumerate_ksubsets(n, l).collect();
    let all_k: Vec<Subset> = enumerate_ksubsets(n, k).collect();
    let mut pair = DominatingPair::new(n, k, l, Family::complete(n, l), Family::empty(n, k))?;
    for _ in 0..steps {
        let upper = rng.gen_bool(0.5);
        let pool = if upper { &all_k } else { &all_l };
        let v = pool.choose(rng).expect("levels are nonempty").clone();
        let fam = if upper { pair.ksets_mut() } else { pair.lsets_mut() };
        if fam.contains(&v) {
            fam.remove(&v);
            if !is_dominating(&pair)? {
                let fam = if upper { pair.ksets_mut() } else { pair.lsets_mut() };
                fam.insert(v)?;
            }
        } else if rng.gen_ratio(1, 3) {
            fam.insert(v)?;
        }
    }
    Ok(pair)
}

/// A random `t`-member `k`-uniform family on `[n]` whose overlap graph is
/// connected: each new member keeps at least two elements of an earlier
/// one.
pub fn random_connected_family(n: u32, k: u32, t: usize, rng: &mut impl Rng) -> Result<Family> {
    if k < 2 || n < k + 1 || t == 0 || (k == 2 && t > 1) {
        return Err(invalid(format!(
            "need t >= 1, k >= 3 (k = 2 only for t = 1) and n > k, got n={n} k={k} t={t}"
        )));
    }
    let universe: Vec<u32> = (1..=n).collect();
    let first: Vec<u32> = universe.choose_multiple(rng, k as usize).copied().collect();
    let mut members = vec![Subset::new(first)?];
    let mut attempts = 0;
    while members.len() < t {
        attempts += 1;
        if attempts > 10_000 {
            return Err(invalid(format!(
                "could not grow a connected family of size {t} on [{n}]"
            )));
        }
        let base = members.choose(rng).unwrap().elements().to_vec();
        let keep = rng.gen_range(2..k as usize);
        let mut next: Vec<u32> = base.choose_multiple(rng, keep).copied().collect();
        let outside: Vec<u32> = universe.iter().copied().filter(|x| !next.contains(x)).collect();
        next.extend(outside.choose_multiple(rng, k as usize - keep));
        let next = Subset::new(next)?;
        if !members.contains(&next) {
            members.push(next);
        }
    }
    let fam = Family::new(n, k, members)?;
    debug_assert_eq!(overlap_components(&fam).len(), 1);
    Ok(fam)
}
