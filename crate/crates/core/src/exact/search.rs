//! Exact minimum set cover by depth-first branch and bound over bitsets.

use crate::bitset::BitSet;

#[derive(Debug)]
pub(crate) struct OutOfBudget;

pub(crate) struct Budget {
    limit: Option<u64>,
    pub(crate) used: u64,
}

impl Budget {
    pub(crate) fn new(limit: Option<u64>) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(OutOfBudget),
            _ => Ok(()),
        }
    }
}

/// Items `0..items` to be covered by candidates `0..cands.len()`.
pub(crate) struct SetCover {
    items: usize,
    cands: Vec<BitSet>,
    hitters: Vec<BitSet>,
}

pub(crate) enum Minimum {
    Optimal(Vec<usize>),
    /// The budget ran out; the best cover found so far, and the best lower
    /// bound proven.
    Partial {
        best: Vec<usize>,
        lower: usize,
    },
    Uncoverable,
}

impl SetCover {
    pub(crate) fn new(items: usize, cands: Vec<BitSet>) -> Self {
        let mut hitters = vec![BitSet::new(cands.len()); items];
        for (c, set) in cands.iter().enumerate() {
            for i in set.iter() {
                hitters[i].insert(c);
            }
        }
        SetCover { items, cands, hitters }
    }

    #[cfg(test)]
    fn num_cands(&self) -> usize {
        self.cands.len()
    }

    fn covered_by(&self, chosen: &[usize]) -> BitSet {
        let mut covered = BitSet::new(self.items);
        for &c in chosen {
            covered.union_with(&self.cands[c]);
        }
        covered
    }

    /// Max-marginal-gain greedy, smallest id on ties.
    pub(crate) fn greedy(&self) -> Option<Vec<usize>> {
        let mut covered = BitSet::new(self.items);
        let mut chosen = Vec::new();
        while covered.count() < self.items {
            let (best, gain) = self
                .cands
                .iter()
                .enumerate()
                .map(|(c, s)| (c, s.count_difference(&covered)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if gain == 0 {
                return None;
            }
            covered.union_with(&self.cands[best]);
            chosen.push(best);
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    /// Fewest candidates whose marginal gains could add up to the number of
    /// uncovered items; `None` when even all of them fall short.
    fn gain_bound(&self, covered: &BitSet, allowed: &BitSet) -> Option<usize> {
        let need = self.items - covered.count();
        if need == 0 {
            return Some(0);
        }
        let mut gains: Vec<usize> = allowed
            .iter()
            .map(|c| self.cands[c].count_difference(covered))
            .filter(|&g| g > 0)
            .collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let mut sum = 0;
        for (i, g) in gains.into_iter().enumerate() {
            sum += g;
            if sum >= need {
                return Some(i + 1);
            }
        }
        None
    }

    /// Lower bound on the cover size from the empty state.
    pub(crate) fn root_bound(&self) -> Option<usize> {
        self.gain_bound(&BitSet::new(self.items), &BitSet::full(self.cands.len()))
    }

    /// Searches for a cover of the items outside `covered` using at most `t`
    /// candidates from `allowed`.
    pub(crate) fn find(
        &self,
        covered: &BitSet,
        allowed: &BitSet,
        t: usize,
        budget: &mut Budget,
    ) -> Result<Option<Vec<usize>>, OutOfBudget> {
        let mut chosen = Vec::with_capacity(t);
        if self.dfs(covered, allowed.clone(), t, &mut chosen, budget)? {
            chosen.sort_unstable();
            Ok(Some(chosen))
        } else {
            Ok(None)
        }
    }

    fn dfs(
        &self,
        covered: &BitSet,
        mut allowed: BitSet,
        t: usize,
        chosen: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool, OutOfBudget> {
        budget.tick()?;
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for item in covered.iter_absent() {
            let options = self.hitters[item].count_intersection(&allowed);
            if options < fewest {
                fewest = options;
                pivot = Some(item);
                if options == 0 {
                    return Ok(false);
                }
            }
        }
        let Some(pivot) = pivot else {
            return Ok(true);
        };
        if t == 0 {
            return Ok(false);
        }
        match self.gain_bound(covered, &allowed) {
            Some(lb) if lb <= t => {}
            _ => return Ok(false),
        }
        let branches: Vec<usize> = self.hitters[pivot].iter().filter(|&c| allowed.get(c)).collect();
        for c in branches {
            allowed.remove(c);
            let mut next = covered.clone();
            next.union_with(&self.cands[c]);
            chosen.push(c);
            if self.dfs(&next, allowed.clone(), t - 1, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// Minimum cover, canonicalized to the colex-least one (compare the
    /// largest ids first) among all minimum covers.
    pub(crate) fn minimum(&self, floor: usize, budget: &mut Budget) -> Minimum {
        let Some(mut best) = self.greedy() else {
            return Minimum::Uncoverable;
        };
        let root = self.root_bound().unwrap_or(0).max(floor).min(best.len());
        let empty = BitSet::new(self.items);
        let all = BitSet::full(self.cands.len());

        let mut lower = root;
        while lower < best.len() {
            match self.find(&empty, &all, lower, budget) {
                Ok(Some(sol)) => {
                    best = sol;
                    break;
                }
                Ok(None) => lower += 1,
                Err(OutOfBudget) => return Minimum::Partial { best, lower },
            }
        }

        match self.canonicalize(best.clone(), budget) {
            Ok(sol) | Err(sol) => Minimum::Optimal(sol),
        }
    }

    /// Fixes the ids of an optimal cover from the largest down, each time
    /// lowering it while a cover of the same size still exists. On budget
    /// exhaustion returns the best cover reached so far as `Err`.
    fn canonicalize(&self, mut sol: Vec<usize>, budget: &mut Budget) -> Result<Vec<usize>, Vec<usize>> {
        let size = sol.len();
        let mut forced: Vec<usize> = Vec::with_capacity(size);
        for free in (1..=size).rev() {
            loop {
                let top = sol[free - 1];
                let mut allowed = BitSet::new(self.cands.len());
                for c in 0..top {
                    allowed.insert(c);
                }
                let covered = self.covered_by(&forced);
                match self.find(&covered, &allowed, free, budget) {
                    Ok(Some(lower)) => {
                        sol = lower;
                        sol.extend(forced.iter().rev());
                    }
                    Ok(None) => break,
                    Err(OutOfBudget) => return Err(sorted(sol)),
                }
            }
            forced.push(sol[free - 1]);
        }
        Ok(sorted(sol))
    }

    #[cfg(test)]
    fn is_cover(&self, chosen: &[usize]) -> bool {
        self.covered_by(chosen).count() == self.items
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}
