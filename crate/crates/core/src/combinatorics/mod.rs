//! Subset arithmetic: binomials, colex enumeration and ranking, near-equal
//! partitions, Turán graphs and 2-shadows.

mod family;
mod partition;
mod subset;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub use family::{complement_pairs, shadow2, Family};
pub use partition::{near_equal_partition, turan_count, turan_graph, Partition};
pub(crate) use subset::PositionCombinations;
pub use subset::Subset;

/// Exact `C(n, r)`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::default();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        // acc * (n - i) is always divisible by (i + 1) here.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, r)` as a `u128`, or an overflow error.
pub fn binomial_u128(n: u64, r: u64) -> Result<u128> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r as u128 {
        // acc * (n - i) / (i + 1) with the division done through the gcd
        // so intermediate values stay as small as possible.
        let num = n as u128 - i;
        let den = i + 1;
        let g = gcd_u128(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a
            .checked_mul(num / d)
            .ok_or_else(|| Error::Overflow(format!("C({n},{r})")))?;
    }
    Ok(acc)
}

/// `C(n, r)` as a `u64`, or an overflow error.
pub fn binomial_u64(n: u64, r: u64) -> Result<u64> {
    let v = binomial_u128(n, r)?;
    u64::try_from(v).map_err(|_| Error::Overflow(format!("C({n},{r}) exceeds u64")))
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Pascal table of `C(i, j)` for `i <= n_max`, `j <= r_max`, in `u64`.
/// Entries that overflow are stored as `None`.
#[derive(Clone, Debug)]
pub struct BinomTable {
    r_max: usize,
    rows: Vec<Option<u64>>,
}

impl BinomTable {
    pub fn new(n_max: u32, r_max: u32) -> Self {
        let (n_max, r_max) = (n_max as usize, r_max as usize);
        let width = r_max + 1;
        let mut rows = vec![Some(0u64); (n_max + 1) * width];
        for i in 0..=n_max {
            rows[i * width] = Some(1);
            for j in 1..=r_max.min(i) {
                let up = if j < i { rows[(i - 1) * width + j] } else { Some(0) };
                let diag = rows[(i - 1) * width + j - 1];
                rows[i * width + j] = match (up, diag) {
                    (Some(a), Some(b)) => a.checked_add(b),
                    _ => None,
                };
            }
        }
        BinomTable { r_max, rows }
    }

    #[inline]
    pub fn get(&self, n: u32, r: u32) -> Option<u64> {
        let (n, r) = (n as usize, r as usize);
        if r > self.r_max {
            return None;
        }
        if r > n {
            return Some(0);
        }
        self.rows[n * (self.r_max + 1) + r]
    }

    /// Colex rank of a sorted 1-based element slice.
    #[inline]
    pub fn rank(&self, elements: &[u32]) -> u64 {
        elements
            .iter()
            .enumerate()
            .map(|(i, &e)| self.get(e - 1, i as u32 + 1).expect("binomial table too small"))
            .sum()
    }
}

/// Colex rank of `s` among subsets of the same size: `{1,..,r}` has rank 0.
pub fn rank_colex(s: &Subset) -> Result<u64> {
    let mut total: u64 = 0;
    for (i, &e) in s.elements().iter().enumerate() {
        let term = binomial_u64(e as u64 - 1, i as u64 + 1)?;
        total = total
            .checked_add(term)
            .ok_or_else(|| Error::Overflow(format!("colex rank of {s}")))?;
    }
    Ok(total)
}

/// Inverse of [`rank_colex`]. The ambient `n` is not needed: every rank
/// below `C(m, r)` lands inside `[1, m]`.
pub fn unrank_colex(r: u32, rank: u64) -> Result<Subset> {
    let mut remaining = rank;
    let mut out = vec![0u32; r as usize];
    for i in (1..=r).rev() {
        // largest c with C(c, i) <= remaining
        let mut c = i - 1;
        loop {
            let next = binomial_u64(c as u64 + 1, i as u64);
            match next {
                Ok(v) if v <= remaining => c += 1,
                Ok(_) => break,
                Err(_) => {
                    return Err(Error::RankOutOfRange {
                        rank,
                        r,
                        bound: "u64 binomials".into(),
                    })
                }
            }
        }
        remaining -= binomial_u64(c as u64, i as u64)?;
        out[i as usize - 1] = c + 1;
    }
    Ok(Subset::from_sorted_unchecked(out))
}

/// Checked variant: fails when `rank >= C(n, r)`.
pub fn unrank_colex_in(n: u32, r: u32, rank: u64) -> Result<Subset> {
    let bound = binomial_u128(n as u64, r as u64)?;
    if rank as u128 >= bound {
        return Err(Error::RankOutOfRange {
            rank,
            r,
            bound: bound.to_string(),
        });
    }
    unrank_colex(r, rank)
}

/// All `r`-subsets of `[n]` in colex order. Restartable: each call yields a
/// fresh iterator.
pub fn enumerate_ksubsets(n: u32, r: u32) -> impl Iterator<Item = Subset> {
    PositionCombinations::new(n as usize, r as usize)
        .map(|pos| Subset::from_sorted_unchecked(pos.into_iter().map(|p| p as u32 + 1).collect()))
}

/// `r`-subsets of `[n]` whose largest element is exactly `top`, in colex
/// order. Concatenating over `top = r..=n` reproduces
/// [`enumerate_ksubsets`]; used to split scans into independent chunks.
pub fn ksubsets_with_max(top: u32, r: u32) -> impl Iterator<Item = Subset> {
    let lower = if r == 0 { 0 } else { r - 1 };
    let valid = r >= 1 && top >= r;
    PositionCombinations::new(if valid { top as usize - 1 } else { 0 }, lower as usize)
        .take_while(move |_| valid)
        .map(move |pos| {
            let mut v: Vec<u32> = pos.into_iter().map(|p| p as u32 + 1).collect();
            v.push(top);
            Subset::from_sorted_unchecked(v)
        })
}

/// Visits every `r`-subset of `[top]` whose largest element is `top`, in
/// colex order, through a reused buffer.
pub(crate) fn walk_with_max(top: u32, r: u32, mut f: impl FnMut(&[u32])) {
    if r == 0 || top < r {
        return;
    }
    let low = (r - 1) as usize;
    let mut buf: Vec<u32> = (1..r).collect();
    buf.push(top);
    loop {
        f(&buf);
        let mut i = 0;
        loop {
            if i == low {
                return;
            }
            let limit = buf[i + 1];
            if buf[i] + 1 < limit {
                buf[i] += 1;
                for (j, slot) in buf[..i].iter_mut().enumerate() {
                    *slot = j as u32 + 1;
                }
                break;
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(n: usize, r: usize) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for j in 1..row.len() {
                next[j] = row[j - 1] + row[j];
            }
            row = next;
        }
        row.get(r).copied().unwrap_or(0)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(7, 0), BigUint::from(1u32));
        assert_eq!(binomial(30, 15), BigUint::from(155_117_520u64));
        assert_eq!(pascal(30, 15), 155_117_520);
        assert_eq!(binomial(3, 5), BigUint::default());
    }

    #[test]
    fn binomial_agrees_with_pascal() {
        for n in 0..70 {
            for r in 0..=n {
                let p = pascal(n, r);
                assert_eq!(binomial_u128(n as u64, r as u64).unwrap(), p);
                assert_eq!(binomial(n as u64, r as u64), BigUint::from(p));
            }
        }
    }

    #[test]
    fn binomial_overflow_is_an_error() {
        assert!(matches!(binomial_u64(100, 50), Err(Error::Overflow(_))));
        assert!(binomial_u128(200, 100).is_err());
        // the big-integer route has no bound
        assert!(binomial(200, 100) > BigUint::from(u128::MAX));
    }

    #[test]
    fn table_matches_direct() {
        let t = BinomTable::new(40, 6);
        for n in 0..=40u32 {
            for r in 0..=6u32 {
                assert_eq!(t.get(n, r).unwrap(), binomial_u64(n as u64, r as u64).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let v: Vec<_> = enumerate_ksubsets(3, 2).collect();
        assert_eq!(
            v,
            vec![
                Subset::new(vec![1, 2]).unwrap(),
                Subset::new(vec![1, 3]).unwrap(),
                Subset::new(vec![2, 3]).unwrap()
            ]
        );
        let v: Vec<_> = enumerate_ksubsets(4, 0).collect();
        assert_eq!(v, vec![Subset::empty()]);
        let v: Vec<_> = enumerate_ksubsets(6, 3).collect();
        assert_eq!(v.len(), 20);
        assert_eq!(v[0].elements(), &[1, 2, 3]);
        assert_eq!(v[19].elements(), &[4, 5, 6]);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_matches_brute_force_listing() {
        // independent listing: filter bitmasks by popcount, sort by colex key
        let (n, r) = (7u32, 3u32);
        let mut masks: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() == r).collect();
        masks.sort_unstable(); // integer order on bitmasks is colex order
        let expect: Vec<Vec<u32>> = masks
            .iter()
            .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
            .collect();
        let got: Vec<Vec<u32>> = enumerate_ksubsets(n, r).map(|s| s.elements().to_vec()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn chunked_enumeration_concatenates() {
        let whole: Vec<_> = enumerate_ksubsets(8, 3).collect();
        let chunks: Vec<_> = (1..=8).flat_map(|top| ksubsets_with_max(top, 3)).collect();
        assert_eq!(whole, chunks);
    }

    #[test]
    fn walk_matches_iterator() {
        for top in 0..=9 {
            for r in 0..=4 {
                let mut seen = Vec::new();
                walk_with_max(top, r, |s| seen.push(s.to_vec()));
                let expect: Vec<Vec<u32>> = ksubsets_with_max(top, r).map(|s| s.elements().to_vec()).collect();
                assert_eq!(seen, expect, "top={top} r={r}");
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_colex(&Subset::new(vec![1, 2, 3]).unwrap()).unwrap(), 0);
        assert_eq!(unrank_colex(2, 0).unwrap().elements(), &[1, 2]);
        assert_eq!(rank_colex(&unrank_colex(3, 17).unwrap()).unwrap(), 17);
        assert!(matches!(unrank_colex_in(5, 2, 10), Err(Error::RankOutOfRange { .. })));
        assert_eq!(unrank_colex_in(5, 2, 9).unwrap().elements(), &[4, 5]);
    }

    #[test]
    fn rank_roundtrip_exhaustive() {
        for n in 0..=12u32 {
            for r in 0..=6u32.min(n) {
                for (i, s) in enumerate_ksubsets(n, r).enumerate() {
                    let rank = rank_colex(&s).unwrap();
                    assert_eq!(rank, i as u64);
                    assert_eq!(unrank_colex(r, rank).unwrap(), s);
                }
            }
        }
    }
}
