use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{enumerate_ksubsets, Subset};
use crate::error::{Error, Result};

/// An `r`-uniform family over `[n]`, duplicate-free and stored in colex
/// order, so two families are equal exactly when their member lists are.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr", into = "FamilyRepr")]
pub struct Family {
    n: u32,
    rank: u32,
    members: Vec<Subset>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    n: u32,
    r: u32,
    members: Vec<Subset>,
}

impl TryFrom<FamilyRepr> for Family {
    type Error = Error;
    fn try_from(repr: FamilyRepr) -> Result<Self> {
        Family::new(repr.n, repr.r, repr.members)
    }
}

impl From<Family> for FamilyRepr {
    fn from(f: Family) -> Self {
        FamilyRepr {
            n: f.n,
            r: f.rank,
            members: f.members,
        }
    }
}

impl Family {
    /// Validates sizes, range and uniqueness, and sorts into colex order.
    pub fn new(n: u32, rank: u32, mut members: Vec<Subset>) -> Result<Self> {
        for m in &members {
            if m.len() != rank as usize {
                return Err(Error::InvalidFamily(format!(
                    "member {m} has size {} but the family rank is {rank}",
                    m.len()
                )));
            }
            if m.max_element().is_some_and(|x| x > n) {
                return Err(Error::InvalidFamily(format!("member {m} is not inside [1,{n}]")));
            }
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily(format!("duplicate member {}", w[0])));
        }
        Ok(Family { n, rank, members })
    }

    /// Like [`Family::new`] but silently drops duplicates.
    pub fn from_members_dedup(n: u32, rank: u32, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let set: BTreeSet<Subset> = members.into_iter().collect();
        Family::new(n, rank, set.into_iter().collect())
    }

    /// Members already sorted colex, distinct, of size `rank`, within `[n]`.
    pub(crate) fn from_sorted_unchecked(n: u32, rank: u32, members: Vec<Subset>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|m| m.len() == rank as usize));
        Family { n, rank, members }
    }

    pub fn empty(n: u32, rank: u32) -> Self {
        Family {
            n,
            rank,
            members: Vec::new(),
        }
    }

    /// Every `rank`-subset of `[n]`.
    pub fn complete(n: u32, rank: u32) -> Self {
        Family {
            n,
            rank,
            members: enumerate_ksubsets(n, rank).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.members.iter()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search(s).is_ok()
    }

    pub fn position(&self, s: &Subset) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn into_members(self) -> Vec<Subset> {
        self.members
    }

    /// Same members viewed over a larger ground set.
    pub fn with_n(mut self, n: u32) -> Result<Self> {
        if self.members.iter().any(|m| m.max_element().is_some_and(|x| x > n)) {
            return Err(Error::InvalidFamily(format!("members exceed [1,{n}]")));
        }
        self.n = n;
        Ok(self)
    }

    /// Adds a member, keeping colex order. Returns false if already present.
    pub fn insert(&mut self, s: Subset) -> Result<bool> {
        if s.len() != self.rank as usize || s.max_element().is_some_and(|x| x > self.n) {
            return Err(Error::InvalidFamily(format!(
                "cannot insert {s} into rank-{} family on [{}]",
                self.rank, self.n
            )));
        }
        match self.members.binary_search(&s) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.members.insert(pos, s);
                Ok(true)
            }
        }
    }

    pub fn remove(&mut self, s: &Subset) -> bool {
        match self.members.binary_search(s) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// Line-oriented text form: header `n <n> r <r>`, then one member per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {} r {}\n", self.n, self.rank);
        for m in &self.members {
            let line: Vec<String> = m.elements().iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty family text".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (n, r) = match tokens.as_slice() {
            ["n", n, "r", r] => (
                n.parse::<u32>().map_err(|e| Error::Parse(format!("bad n: {e}")))?,
                r.parse::<u32>().map_err(|e| Error::Parse(format!("bad r: {e}")))?,
            ),
            _ => return Err(Error::Parse(format!("bad header line {header:?}"))),
        };
        let mut members = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.trim().is_empty() && r > 0 {
                continue;
            }
            let elems = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse(format!("line {}: {e}", i + 2)))?;
            members.push(Subset::new(elems)?);
        }
        Family::new(n, r, members)
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;
    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All pairs contained in at least one member of `f`.
pub fn shadow2(f: &Family) -> Family {
    let pairs: BTreeSet<Subset> = f.iter().flat_map(|m| m.subsets_of_size(2)).collect();
    Family::from_sorted_unchecked(f.n(), 2, pairs.into_iter().collect())
}

/// The pairs of `[n]` that are not members of `e`.
pub fn complement_pairs(e: &Family, n: u32) -> Family {
    let members = enumerate_ksubsets(n, 2).filter(|p| !e.contains(p)).collect();
    Family::from_sorted_unchecked(n, 2, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Subset {
        Subset::new(v.to_vec()).unwrap()
    }

    fn fam(n: u32, r: u32, v: &[&[u32]]) -> Family {
        Family::new(n, r, v.iter().map(|m| s(m)).collect()).unwrap()
    }

    #[test]
    fn new_sorts_and_validates() {
        let f = fam(4, 2, &[&[3, 4], &[1, 2]]);
        assert_eq!(f.members()[0], s(&[1, 2]));
        assert!(Family::new(4, 2, vec![s(&[1, 2]), s(&[1, 2])]).is_err());
        assert!(Family::new(4, 2, vec![s(&[1, 2, 3])]).is_err());
        assert!(Family::new(4, 2, vec![s(&[1, 5])]).is_err());
    }

    #[test]
    fn shadow_examples() {
        let single = fam(4, 4, &[&[1, 2, 3, 4]]);
        assert_eq!(shadow2(&single).len(), 6);
        let two = fam(4, 3, &[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(shadow2(&two), fam(4, 2, &[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]]));
        assert!(shadow2(&Family::empty(5, 3)).is_empty());
    }

    #[test]
    fn complement_examples() {
        assert!(complement_pairs(&Family::complete(4, 2), 4).is_empty());
        assert_eq!(complement_pairs(&Family::empty(4, 2), 4).len(), 6);
        let c = complement_pairs(&fam(4, 2, &[&[1, 4]]), 4);
        assert_eq!(c.len(), 5);
        assert!(!c.contains(&s(&[1, 4])));
    }

    #[test]
    fn text_format_roundtrip() {
        let f = fam(5, 3, &[&[1, 2, 3], &[2, 4, 5], &[1, 3, 4]]);
        let text = f.to_text();
        assert_eq!(text, "n 5 r 3\n1 2 3\n1 3 4\n2 4 5\n");
        assert_eq!(Family::from_text(&text).unwrap(), f);
        assert!(Family::from_text("n 5 x 3\n").is_err());
    }

    #[test]
    fn json_format() {
        let f = fam(4, 2, &[&[1, 4], &[2, 3]]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"n":4,"r":2,"members":[[2,3],[1,4]]}"#);
        let back: Family = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Family>(r#"{"n":4,"r":2,"members":[[1,1]]}"#).is_err());
    }

    #[test]
    fn insert_and_remove_keep_order() {
        let mut f = fam(5, 2, &[&[1, 2]]);
        assert!(f.insert(s(&[3, 4])).unwrap());
        assert!(f.insert(s(&[1, 3])).unwrap());
        assert!(!f.insert(s(&[1, 3])).unwrap());
        assert_eq!(f.members(), &[s(&[1, 2]), s(&[1, 3]), s(&[3, 4])]);
        assert!(f.remove(&s(&[1, 3])));
        assert!(!f.remove(&s(&[1, 3])));
    }
}
