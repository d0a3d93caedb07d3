use super::{binomial_u128, Family, Subset};
use crate::error::{invalid, Result};

/// A partition of `[n]` into consecutive runs whose sizes differ by at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: u32,
    parts: Vec<Subset>,
    /// part index of each element, `owner[x - 1]`
    owner: Vec<u32>,
}

impl Partition {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[Subset] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Subset::len).collect()
    }

    /// 0-based index of the part containing `x`.
    #[inline]
    pub fn part_of(&self, x: u32) -> usize {
        self.owner[x as usize - 1] as usize
    }

    /// How many elements of `s` fall in each part.
    pub fn profile(&self, s: &Subset) -> Vec<usize> {
        let mut counts = vec![0; self.parts.len()];
        for &x in s.elements() {
            counts[self.part_of(x)] += 1;
        }
        counts
    }

    /// Whether both elements of the pair lie in the same part.
    #[inline]
    pub fn same_part(&self, x: u32, y: u32) -> bool {
        self.part_of(x) == self.part_of(y)
    }
}

/// Splits `[n]` into `p` near-equal consecutive runs; the larger parts come
/// first, so `(7, 3)` gives sizes `(3, 2, 2)`.
pub fn near_equal_partition(n: u32, p: u32) -> Result<Partition> {
    if p == 0 || p > n {
        return Err(invalid(format!("cannot split [{n}] into {p} nonempty parts")));
    }
    let (base, extra) = (n / p, n % p);
    let mut parts = Vec::with_capacity(p as usize);
    let mut owner = Vec::with_capacity(n as usize);
    let mut next = 1;
    for i in 0..p {
        let size = base + u32::from(i < extra);
        parts.push(Subset::range(next, next + size - 1));
        owner.extend(std::iter::repeat_n(i, size as usize));
        next += size;
    }
    Ok(Partition { n, parts, owner })
}

/// Edge family of the Turán graph `T(n, s)`: the complete `s`-partite graph
/// on the near-equal partition.
pub fn turan_graph(n: u32, s: u32) -> Result<Family> {
    let part = near_equal_partition(n, s)?;
    let mut edges = Vec::new();
    for y in 1..=n {
        for x in 1..y {
            if !part.same_part(x, y) {
                edges.push(Subset::from_sorted_unchecked(vec![x, y]));
            }
        }
    }
    // generated by increasing max element, then increasing min: colex
    Ok(Family::from_sorted_unchecked(n, 2, edges))
}

/// `t(n, s)`, the number of edges of `T(n, s)`.
pub fn turan_count(n: u32, s: u32) -> Result<u128> {
    let part = near_equal_partition(n, s)?;
    let mut total = binomial_u128(n as u64, 2)?;
    for size in part.part_sizes() {
        total -= binomial_u128(size as u64, 2)?;
    }
    Ok(total)
}
