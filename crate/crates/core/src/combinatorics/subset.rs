use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of 1-based element ids, stored strictly increasing.
///
/// The ordering on `Subset` is colexicographic: compare the largest
/// elements first. For sets of equal size this is the usual colex order
/// used for ranking.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Subset(Vec<u32>);

impl Subset {
    /// Builds a subset from arbitrary-order elements. Rejects zero ids and
    /// repeated elements.
    pub fn new(mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::InvalidSubset {
                elements,
                reason: "element ids are 1-based".into(),
            });
        }
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset {
                elements,
                reason: "repeated element".into(),
            });
        }
        Ok(Subset(elements))
    }

    /// Caller guarantees the elements are strictly increasing and nonzero.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first().is_none_or(|&e| e > 0));
        Subset(elements)
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: u32, hi: u32) -> Self {
        Subset((lo.max(1)..=hi).collect())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Sorted-merge containment test.
    pub fn is_subset_of(&self, other: &Subset) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                match y.cmp(&x) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn intersection_len(&self, other: &Subset) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let take_left = j >= other.0.len() || (i < self.0.len() && self.0[i] <= other.0[j]);
            if take_left {
                if j < other.0.len() && self.0[i] == other.0[j] {
                    j += 1;
                }
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        Subset(out)
    }

    /// All `r`-element subsets of this set, in colex order.
    pub fn subsets_of_size(&self, r: usize) -> impl Iterator<Item = Subset> + '_ {
        PositionCombinations::new(self.len(), r).map(move |pos| Subset(pos.iter().map(|&p| self.0[p]).collect()))
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl TryFrom<Vec<u32>> for Subset {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Subset::new(v)
    }
}

impl From<Subset> for Vec<u32> {
    fn from(s: Subset) -> Vec<u32> {
        s.0
    }
}

/// Index combinations `0 <= p_0 < ... < p_{r-1} < n` in colex order.
#[derive(Clone, Debug)]
pub(crate) struct PositionCombinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl PositionCombinations {
    pub(crate) fn new(n: usize, r: usize) -> Self {
        PositionCombinations {
            n,
            current: (0..r).collect(),
            done: r > n,
        }
    }
}

impl Iterator for PositionCombinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // colex successor: bump the first position that has room below its
        // right neighbour, reset everything to its left.
        let r = self.current.len();
        let mut i = 0;
        loop {
            if i == r {
                self.done = true;
                break;
            }
            let limit = if i + 1 < r { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Subset {
        Subset::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(Subset::new(vec![0, 1]).is_err());
        assert!(Subset::new(vec![2, 2]).is_err());
        assert_eq!(s(&[3, 1, 2]).elements(), &[1, 2, 3]);
    }

    #[test]
    fn colex_order() {
        assert!(s(&[1, 2, 3]) < s(&[1, 2, 4]));
        assert!(s(&[3, 4]) < s(&[1, 5]));
        assert!(s(&[2, 3]) > s(&[1, 3]));
    }

    #[test]
    fn containment_and_intersections() {
        assert!(s(&[2, 4]).is_subset_of(&s(&[1, 2, 3, 4])));
        assert!(!s(&[2, 5]).is_subset_of(&s(&[1, 2, 3, 4])));
        assert!(Subset::empty().is_subset_of(&s(&[1])));
        assert_eq!(s(&[1, 2, 3]).intersection_len(&s(&[2, 3, 4])), 2);
        assert_eq!(s(&[1, 3]).union(&s(&[2, 3, 5])), s(&[1, 2, 3, 5]));
    }

    #[test]
    fn position_combinations_count_and_order() {
        let all: Vec<_> = PositionCombinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(PositionCombinations::new(3, 0).count(), 1);
        assert_eq!(PositionCombinations::new(2, 3).count(), 0);
    }
}
