//! Explicit dominating pairs and the greedy cover engine behind them.

mod cover;
mod level3;
mod upper;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use cover::{greedy_cover, CoverInstance, CoverSolution, CoverStats};
pub use level3::{
    g43_construct, g43_construction, g43_instance, g53_construct, g53_construction, g53_instance, has_type,
};
pub use upper::{
    block_family, block_family_on, degree_bruteforce, degree_profile, gk2_construct, gk2_construction, partition_edges,
    DegreeProfile, PairCase,
};

use crate::combinatorics::{Family, Subset};
use crate::domination::{validate_levels, DominatingPair};
use crate::error::{invalid, Error, Result};

/// A constructed pair, with cover statistics when a greedy cover was used.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Construction {
    pub pair: DominatingPair,
    pub cover: Option<CoverStats>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gk1,
    Gk2,
    G53,
    G43,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Gk1, Method::Gk2, Method::G53, Method::G43];

    pub fn name(self) -> &'static str {
        match self {
            Method::Gk1 => "gk1",
            Method::Gk2 => "gk2",
            Method::G53 => "g53",
            Method::G43 => "g43",
        }
    }

    /// The `(k, l)` levels the method is tied to, if any.
    pub fn fixed_levels(self) -> Option<(u32, u32)> {
        match self {
            Method::G53 => Some((5, 3)),
            Method::G43 => Some((4, 3)),
            _ => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Singletons `{1}..{n-k}` plus the top `k`-set `{n-k+1..n}`.
pub fn gk1_construct(n: u32, k: u32) -> Result<DominatingPair> {
    if k < 2 || k >= n {
        return Err(invalid(format!("gk1 needs 2 <= k < n, got n={n} k={k}")));
    }
    let lsets = Family::from_sorted_unchecked(
        n,
        1,
        (1..=n - k).map(|x| Subset::from_sorted_unchecked(vec![x])).collect(),
    );
    let ksets = Family::from_sorted_unchecked(n, k, vec![Subset::range(n - k + 1, n)]);
    DominatingPair::new(n, k, 1, lsets, ksets)
}

/// Dispatches on `method`, checking that `(k, l)` fit it.
pub fn construct(method: Method, n: u32, k: u32, l: u32) -> Result<Construction> {
    validate_levels(n, k, l)?;
    let want_l = match method {
        Method::Gk1 => 1,
        Method::Gk2 => 2,
        Method::G53 | Method::G43 => 3,
    };
    if l != want_l || method.fixed_levels().is_some_and(|(fk, _)| fk != k) {
        return Err(invalid(format!("method {method} does not build pairs for k={k} l={l}")));
    }
    match method {
        Method::Gk1 => Ok(Construction {
            pair: gk1_construct(n, k)?,
            cover: None,
        }),
        Method::Gk2 => gk2_construction(n, k),
        Method::G53 => g53_construction(n),
        Method::G43 => g43_construction(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::check_domination;

    #[test]
    fn gk1_examples() {
        let p = gk1_construct(5, 3).unwrap();
        assert_eq!(p.lsets().len(), 2);
        assert_eq!(p.ksets().members(), &[Subset::new(vec![3, 4, 5]).unwrap()]);
        assert_eq!(p.size(), 3);
        let p = gk1_construct(3, 2).unwrap();
        assert_eq!(p.lsets().members(), &[Subset::new(vec![1]).unwrap()]);
        assert_eq!(p.size(), 2);
        assert_eq!(gk1_construct(10, 9).unwrap().size(), 2);
        assert!(gk1_construct(3, 3).is_err());
        assert!(gk1_construct(4, 1).is_err());
    }

    #[test]
    fn gk1_dominates_up_to_30() {
        for n in 3..=30 {
            for k in 2..n {
                let p = gk1_construct(n, k).unwrap();
                assert_eq!(p.size(), (n - k + 1) as usize);
                assert!(check_domination(&p).unwrap().dominating, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn dispatch_checks_levels() {
        assert!(construct(Method::Gk2, 10, 3, 2).is_ok());
        assert!(construct(Method::Gk2, 10, 3, 1).is_err());
        assert!(construct(Method::G53, 10, 4, 3).is_err());
        assert!(construct(Method::Gk1, 3, 3, 1).is_err());
        assert_eq!("g43".parse::<Method>().unwrap(), Method::G43);
        assert!("gk9".parse::<Method>().is_err());
    }
}
