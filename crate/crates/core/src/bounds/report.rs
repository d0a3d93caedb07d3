//! Critical sets, the greedy hitting edge set and the full bound report for
//! a dominating pair of `G_{k,2}`.

use serde::{Deserialize, Serialize};

use super::shadow::{component_shadow_check, split_families, split_pair_count_of, ComponentShadow, SplitPairCount};
use super::{c, coeff_gk2, kset_counting_check, pair_counting_check, CountCheck, Rational};
use crate::combinatorics::{complement_pairs, turan_count, Family, Subset};
use crate::constructions::{greedy_cover, CoverInstance};
use crate::domination::{is_dominating, DominatingPair};
use crate::error::{invalid, Error, Result};

/// All `k`-sets of `[n]` none of whose pairs lies in `e`: the `k`-cliques of
/// the complement graph.
pub fn critical_family(e: &Family, n: u32, k: u32) -> Result<Family> {
    if e.rank() != 2 {
        return Err(invalid(format!("expected a graph, got rank {}", e.rank())));
    }
    if k < 2 || k > n {
        return Err(invalid(format!("need 2 <= k <= n, got n={n} k={k}")));
    }
    let mut adj = vec![vec![true; n as usize + 1]; n as usize + 1];
    for p in e.iter() {
        let (a, b) = (p.elements()[0] as usize, p.elements()[1] as usize);
        if b > n as usize {
            return Err(invalid(format!("edge {p} lies outside [1, {n}]")));
        }
        adj[a][b] = false;
        adj[b][a] = false;
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k as usize);
    let all: Vec<u32> = (1..=n).collect();
    extend_cliques(&adj, k as usize, &all, &mut stack, &mut out);
    out.sort();
    Ok(Family::from_sorted_unchecked(n, k, out))
}

fn extend_cliques(adj: &[Vec<bool>], k: usize, cands: &[u32], stack: &mut Vec<u32>, out: &mut Vec<Subset>) {
    if stack.len() == k {
        out.push(Subset::from_sorted_unchecked(stack.clone()));
        return;
    }
    let need = k - stack.len();
    for (i, &v) in cands.iter().enumerate() {
        if cands.len() - i < need {
            break;
        }
        let next: Vec<u32> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&w| adj[v as usize][w as usize])
            .collect();
        stack.push(v);
        extend_cliques(adj, k, &next, stack, out);
        stack.pop();
    }
}

/// Edges of `f` hitting every member of `crit`, chosen greedily (the edge
/// inside the most unhit sets first, colex-least on ties).
pub fn greedy_hitting(crit: &Family, f: &Family) -> Result<Family> {
    if f.rank() != 2 {
        return Err(invalid(format!("expected a graph, got rank {}", f.rank())));
    }
    let mut blocks = vec![Vec::new(); f.len()];
    for (i, t) in crit.iter().enumerate() {
        for p in t.subsets_of_size(2) {
            if let Some(b) = f.position(&p) {
                blocks[b].push(i as u32);
            }
        }
    }
    let inst = CoverInstance::new(crit.clone(), blocks)?;
    let sol = greedy_cover(&inst)?;
    let mut chosen: Vec<Subset> = sol.chosen.iter().map(|&b| f.members()[b].clone()).collect();
    chosen.sort();
    Ok(Family::from_sorted_unchecked(f.n(), 2, chosen))
}

/// `lhs >= rhs` over exact integers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

impl From<CountCheck> for Check {
    fn from(c: CountCheck) -> Self {
        Check {
            lhs: c.lhs,
            rhs: c.rhs,
            holds: c.holds,
        }
    }
}

/// Every quantity evaluated for one dominating pair of `G_{k,2}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    pub s: u32,
    pub edges: usize,
    pub ksets: usize,
    pub size: usize,
    /// `C(n-2,k-2)|E| + |K| >= C(n,k)`
    pub kset_count: Check,
    /// `|E| + C(k,2)|K| >= C(n,2)`
    pub pair_count: Check,
    pub split_sizes: [usize; 3],
    pub split_pair_count: SplitPairCount,
    pub component_shadow: ComponentShadow,
    /// `|K*|`, the `k`-sets with no pair in `E`
    pub critical: usize,
    /// `|H|`, greedy edges hitting every critical set
    pub hitting: usize,
    /// `|E| + |H| >= C(n,2) - t(n,k-1)`
    pub turan_edges: Check,
    /// `|E| + |H| - n^2/(2(k-1))`
    pub turan_edges_residual: Rational,
    /// `|E| + |H| + (C(k,2)-1)|K| >= C(n,2)`
    pub new_edge_count: Check,
    /// `|E| - n^2/(2(k-1))`
    pub edge_residual: Rational,
    /// `|E| + (C(k,2)-1)|K| - n^2/2`
    pub weighted_residual: Rational,
    /// `|E| + (C(k,2)-1)|K| - C(n,2)`
    pub weighted_pair_residual: Rational,
    /// every `k`-set whose pairs avoid `E` and `H` lies in `K` (vacuous when
    /// `H` hits every critical set)
    pub hitting_complete: bool,
    pub coeff: Rational,
    pub size_over_n2: Rational,
}

pub const CSV_COLUMNS: &[&str] = &[
    "n",
    "k",
    "l",
    "s",
    "E",
    "K",
    "size",
    "kset_count_lhs",
    "kset_count_rhs",
    "kset_count_ok",
    "pair_count_lhs",
    "pair_count_rhs",
    "pair_count_ok",
    "K0",
    "K1",
    "K2",
    "split_edges",
    "split_k0_term",
    "split_k1_shadow",
    "split_k2_shadow",
    "split_lhs",
    "split_rhs",
    "split_ok",
    "component_shadow_lhs",
    "component_shadow_rhs",
    "component_shadow_ok",
    "crit",
    "H",
    "turan_edges_lhs",
    "turan_edges_rhs",
    "turan_edges_ok",
    "turan_edges_residual",
    "new_edge_lhs",
    "new_edge_rhs",
    "new_edge_ok",
    "edge_residual",
    "weighted_residual",
    "weighted_pair_residual",
    "hitting_complete",
    "coeff",
    "coeff_f64",
    "size_over_n2",
    "size_over_n2_f64",
];

impl BoundReport {
    /// Values in [`CSV_COLUMNS`] order.
    pub fn csv_record(&self) -> Vec<String> {
        let b = |x: bool| x.to_string();
        vec![
            self.n.to_string(),
            self.k.to_string(),
            self.l.to_string(),
            self.s.to_string(),
            self.edges.to_string(),
            self.ksets.to_string(),
            self.size.to_string(),
            self.kset_count.lhs.to_string(),
            self.kset_count.rhs.to_string(),
            b(self.kset_count.holds),
            self.pair_count.lhs.to_string(),
            self.pair_count.rhs.to_string(),
            b(self.pair_count.holds),
            self.split_sizes[0].to_string(),
            self.split_sizes[1].to_string(),
            self.split_sizes[2].to_string(),
            self.split_pair_count.edges.to_string(),
            self.split_pair_count.k0_term.to_string(),
            self.split_pair_count.k1_shadow.to_string(),
            self.split_pair_count.k2_shadow.to_string(),
            self.split_pair_count.lhs.to_string(),
            self.split_pair_count.rhs.to_string(),
            b(self.split_pair_count.holds),
            self.component_shadow.lhs.to_string(),
            self.component_shadow.rhs.to_string(),
            b(self.component_shadow.holds),
            self.critical.to_string(),
            self.hitting.to_string(),
            self.turan_edges.lhs.to_string(),
            self.turan_edges.rhs.to_string(),
            b(self.turan_edges.holds),
            self.turan_edges_residual.to_string(),
            self.new_edge_count.lhs.to_string(),
            self.new_edge_count.rhs.to_string(),
            b(self.new_edge_count.holds),
            self.edge_residual.to_string(),
            self.weighted_residual.to_string(),
            self.weighted_pair_residual.to_string(),
            b(self.hitting_complete),
            self.coeff.to_string(),
            format!("{:.6}", self.coeff.to_f64()),
            self.size_over_n2.to_string(),
            format!("{:.6}", self.size_over_n2.to_f64()),
        ]
    }

    /// Whether every inequality guaranteed at every finite `n` holds.
    pub fn all_hold(&self) -> bool {
        self.kset_count.holds
            && self.pair_count.holds
            && self.split_pair_count.holds
            && self.component_shadow.holds
            && self.turan_edges.holds
            && self.new_edge_count.holds
            && self.hitting_complete
    }
}

/// Evaluates every bound on a dominating pair of `G_{k,2}` with component
/// threshold `s`.
pub fn bound_report(pair: &DominatingPair, s: u32) -> Result<BoundReport> {
    let (n, k) = (pair.n(), pair.k());
    if pair.l() != 2 {
        return Err(invalid(format!(
            "bound report covers pairs with l = 2, got l = {}",
            pair.l()
        )));
    }
    if k < 3 {
        return Err(invalid(format!("bound report needs k >= 3, got {k}")));
    }
    if !is_dominating(pair)? {
        return Err(Error::InvalidFamily("pair is not dominating".into()));
    }
    let e = pair.lsets();
    let kf = pair.ksets();

    let ((kset_count, pair_count), (split, crit)) = rayon::join(
        || (kset_counting_check(e, kf, n, k), pair_counting_check(e, kf, n, k)),
        || (split_families(e, kf, s), critical_family(e, n, k)),
    );
    let (kset_count, pair_count, split, crit) = (kset_count?, pair_count?, split?, crit?);
    let split_count = split_pair_count_of(e, &split, n, k)?;
    let component_shadow = component_shadow_check(&split, k)?;

    let f = complement_pairs(e, n);
    let h = greedy_hitting(&crit, &f)?;
    let hitting_complete = crit.iter().all(|t| t.subsets_of_size(2).any(|p| h.contains(&p)));

    let int = |v: u128| Rational::integer(v);
    let pairs = c(n, 2)?;
    let eh = (e.len() + h.len()) as u128;
    let weight = c(k, 2)? - 1;
    let weighted = e.len() as u128 + weight * kf.len() as u128;
    let n2 = int(n as u128 * n as u128);
    let main_edges = &n2 / &int(2 * (k as u128 - 1));
    let turan_rhs = pairs - turan_count(n, k - 1)?;
    let new_edge_lhs = eh + weight * kf.len() as u128;

    Ok(BoundReport {
        n,
        k,
        l: 2,
        s,
        edges: e.len(),
        ksets: kf.len(),
        size: pair.size(),
        kset_count: kset_count.into(),
        pair_count: pair_count.into(),
        split_sizes: [split.k0.len(), split.k1.len(), split.k2.len()],
        split_pair_count: split_count,
        component_shadow,
        critical: crit.len(),
        hitting: h.len(),
        turan_edges: Check {
            lhs: eh,
            rhs: turan_rhs,
            holds: eh >= turan_rhs,
        },
        turan_edges_residual: &int(eh) - &main_edges,
        new_edge_count: Check {
            lhs: new_edge_lhs,
            rhs: pairs,
            holds: new_edge_lhs >= pairs,
        },
        edge_residual: &int(e.len() as u128) - &main_edges,
        weighted_residual: &int(weighted) - &(&n2 / &int(2)),
        weighted_pair_residual: &int(weighted) - &int(pairs),
        hitting_complete,
        coeff: coeff_gk2(k)?,
        size_over_n2: &int(pair.size() as u128) / &n2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gk2_construct, partition_edges};

    fn fam(n: u32, rank: u32, sets: &[&[u32]]) -> Family {
        Family::new(n, rank, sets.iter().map(|s| Subset::new(s.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn critical_examples() {
        let e = fam(4, 2, &[&[1, 4]]);
        assert_eq!(critical_family(&e, 4, 3).unwrap(), fam(4, 3, &[&[1, 2, 3], &[2, 3, 4]]));
        assert_eq!(
            critical_family(&Family::empty(5, 2), 5, 3).unwrap(),
            Family::complete(5, 3)
        );
        assert!(critical_family(&partition_edges(12, 3).unwrap(), 12, 3)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn hitting_examples() {
        let crit = fam(4, 3, &[&[1, 2, 3], &[2, 3, 4]]);
        let f = complement_pairs(&fam(4, 2, &[&[1, 4]]), 4);
        assert_eq!(greedy_hitting(&crit, &f).unwrap(), fam(4, 2, &[&[2, 3]]));
        let none = greedy_hitting(&Family::empty(6, 3), &Family::complete(6, 2)).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn report_on_hand_pair() {
        let pair = DominatingPair::new(4, 3, 2, fam(4, 2, &[&[1, 4]]), fam(4, 3, &[&[1, 2, 3], &[2, 3, 4]])).unwrap();
        let r = bound_report(&pair, 2).unwrap();
        assert_eq!((r.kset_count.lhs, r.kset_count.rhs), (4, 4));
        assert_eq!((r.pair_count.lhs, r.pair_count.rhs), (7, 6));
        assert_eq!(r.split_sizes, [0, 0, 2]);
        assert_eq!((r.split_pair_count.lhs, r.split_pair_count.rhs), (6, 6));
        assert_eq!((r.critical, r.hitting), (2, 1));
        // t(4,2) = 4, so |E| + |H| = 2 >= 6 - 4
        assert_eq!((r.turan_edges.lhs, r.turan_edges.rhs), (2, 2));
        assert_eq!((r.new_edge_count.lhs, r.new_edge_count.rhs), (6, 6));
        assert!(r.all_hold());
        assert_eq!(r.csv_record().len(), CSV_COLUMNS.len());
    }

    #[test]
    fn report_on_construction() {
        let pair = gk2_construct(30, 3).unwrap();
        let r = bound_report(&pair, 10).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.critical, 0);
        assert_eq!(r.coeff, Rational::new(3, 8).unwrap());
    }

    #[test]
    fn report_with_no_ksets() {
        let pair = DominatingPair::new(6, 3, 2, Family::complete(6, 2), Family::empty(6, 3)).unwrap();
        let r = bound_report(&pair, 10).unwrap();
        assert_eq!((r.critical, r.hitting), (0, 0));
        assert!(r.all_hold());
        let bad = DominatingPair::new(6, 3, 2, Family::empty(6, 2), Family::empty(6, 3)).unwrap();
        assert!(bound_report(&bad, 10).is_err());
    }
}
