//! Exact evaluators for the counting inequalities, shadow estimates and
//! coefficients behind the lower bounds on domination numbers.

mod rational;
mod report;
mod shadow;

use serde::{Deserialize, Serialize};

pub use rational::Rational;
pub use report::{bound_report, critical_family, greedy_hitting, BoundReport, Check, CSV_COLUMNS};
pub use shadow::{
    component_shadow_check, connected_shadow_check, overlap_components, overlap_graph, split_families,
    split_pair_counting, ComponentShadow, ConnectedShadow, SplitFamilies, SplitPairCount,
};

use crate::combinatorics::{binomial_u128, Family};
use crate::domination::validate_levels;
use crate::error::{invalid, Error, Result};

fn c(n: u32, r: u32) -> Result<u128> {
    binomial_u128(n as u64, r as u64)
}

fn overflow() -> Error {
    Error::Overflow("value exceeds u128".into())
}

/// Leading coefficient `(k+3) / (2(k-1)(k+1))` of `n^2` in `γ(G_{k,2})`.
pub fn coeff_gk2(k: u32) -> Result<Rational> {
    if k < 3 {
        return Err(invalid(format!("coefficient defined for k >= 3, got {k}")));
    }
    let k = k as i64;
    Rational::new(k + 3, 2 * (k - 1) * (k + 1))
}

/// Known Turán density `α_{k,l}`: `1/(k-1)` for graphs, unknown otherwise.
pub fn alpha_known(k: u32, l: u32) -> Option<Rational> {
    (l == 2 && k >= 3).then(|| Rational::new(1, k as i64 - 1).unwrap())
}

/// Lower-bound coefficient of `C(n,l)` given a Turán density `alpha`:
/// `α + (1 - α) / (C(k,l) - 1)`.
pub fn density_lower_coeff(k: u32, l: u32, alpha: &Rational) -> Result<Rational> {
    if !(k > l && l >= 2) {
        return Err(invalid(format!("need k > l >= 2, got k={k} l={l}")));
    }
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(invalid(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let denom = Rational::integer(c(k, l)? - 1);
    Ok(alpha + &(&(&Rational::one() - alpha) / &denom))
}

/// Upper-bound coefficient `1 - (k-l)/(k-l+1) * (1 - 1/l)^(l-1)`.
pub fn simple_upper_coeff(k: u32, l: u32) -> Result<Rational> {
    if !(k > l && l >= 3) {
        return Err(invalid(format!("need k > l >= 3, got k={k} l={l}")));
    }
    let d = (k - l) as i64;
    let frac = Rational::new(d, d + 1)?;
    let base = Rational::new(l as i64 - 1, l as i64)?;
    Ok(&Rational::one() - &(&frac * &base.pow(l - 1)))
}

/// Smallest `|lsets| + |ksets|` allowed by the two counting conditions:
/// `|ksets| >= (C(n,l) - a) / C(k,l)` (every missing `l`-set lies in a chosen
/// `k`-set) and `|ksets| >= C(n,k) - C(n-l,k-l) a` (every missing `k`-set
/// contains one of the `a` chosen `l`-sets), minimized over `a`.
pub fn counting_lower_bound(n: u32, k: u32, l: u32) -> Result<u128> {
    validate_levels(n, k, l)?;
    let total_l = c(n, l)?;
    let total_k = c(n, k)?;
    let per_k = c(k, l)?;
    let per_l = c(n - l, k - l)?;

    let via_l = |a: u128| a + (total_l - a).div_ceil(per_k);
    let via_k = |a: u128| a + total_k.saturating_sub(per_l.saturating_mul(a));

    // via_l is nondecreasing; via_k - via_l is nonincreasing, so the best
    // `a` sits where the two cross.
    let (mut lo, mut hi) = (0u128, total_l);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if via_l(mid) >= via_k(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let mut best = via_l(lo).max(via_k(lo));
    if lo > 0 {
        best = best.min(via_l(lo - 1).max(via_k(lo - 1)));
    }
    Ok(best)
}

/// One side-by-side comparison `lhs >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountCheck {
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

impl CountCheck {
    fn new(lhs: u128, rhs: u128) -> Self {
        CountCheck {
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }
}

fn check_pairs(e: &Family, kf: &Family, n: u32, k: u32) -> Result<()> {
    if e.rank() != 2 || kf.rank() != k || k < 3 || k >= n {
        return Err(invalid(format!(
            "expected a graph and a {k}-uniform family on [{n}], got ranks {} and {}",
            e.rank(),
            kf.rank()
        )));
    }
    Ok(())
}

/// Counts `k`-sets: each edge lies in `C(n-2,k-2)` of them, so when every
/// `k`-set outside `K` contains an edge, `C(n-2,k-2)|E| + |K| >= C(n,k)`.
pub fn kset_counting_check(e: &Family, kf: &Family, n: u32, k: u32) -> Result<CountCheck> {
    check_pairs(e, kf, n, k)?;
    let lhs = c(n - 2, k - 2)?
        .checked_mul(e.len() as u128)
        .and_then(|x| x.checked_add(kf.len() as u128))
        .ok_or_else(overflow)?;
    Ok(CountCheck::new(lhs, c(n, k)?))
}

/// Counts pairs: when every pair outside `E` lies in a member of `K`,
/// `|E| + C(k,2)|K| >= C(n,2)`.
pub fn pair_counting_check(e: &Family, kf: &Family, n: u32, k: u32) -> Result<CountCheck> {
    check_pairs(e, kf, n, k)?;
    let lhs = e.len() as u128 + c(k, 2)? * kf.len() as u128;
    Ok(CountCheck::new(lhs, c(n, 2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Subset;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    fn fam(n: u32, rank: u32, sets: &[&[u32]]) -> Family {
        Family::new(n, rank, sets.iter().map(|s| Subset::new(s.to_vec()).unwrap()).collect()).unwrap()
    }

    #[test]
    fn coefficients() {
        assert_eq!(coeff_gk2(3).unwrap(), r(3, 8));
        assert_eq!(coeff_gk2(4).unwrap(), r(7, 30));
        assert_eq!(coeff_gk2(5).unwrap(), r(1, 6));
        assert!(coeff_gk2(2).is_err());
        assert_eq!(alpha_known(5, 2), Some(r(1, 4)));
        assert_eq!(alpha_known(3, 2), Some(r(1, 2)));
        assert_eq!(alpha_known(4, 3), None);
    }

    #[test]
    fn density_coefficients() {
        assert_eq!(density_lower_coeff(3, 2, &r(1, 2)).unwrap(), r(3, 4));
        assert_eq!(density_lower_coeff(4, 3, &r(4, 9)).unwrap(), r(17, 27));
        for k in 3..=20u32 {
            let lhs = density_lower_coeff(k, 2, &alpha_known(k, 2).unwrap()).unwrap();
            let kk = k as i64;
            assert_eq!(lhs, r(kk + 3, (kk - 1) * (kk + 1)));
            assert_eq!(lhs, &Rational::integer(2) * &coeff_gk2(k).unwrap());
        }
        assert!(density_lower_coeff(3, 2, &r(3, 2)).is_err());
        assert!(density_lower_coeff(3, 1, &r(1, 2)).is_err());
    }

    #[test]
    fn upper_coefficients() {
        assert_eq!(simple_upper_coeff(5, 3).unwrap(), r(19, 27));
        assert_eq!(simple_upper_coeff(4, 3).unwrap(), r(7, 9));
        for k in 4..12 {
            for l in 3..k {
                assert!(simple_upper_coeff(k, l).unwrap() < Rational::one());
            }
        }
        assert!(simple_upper_coeff(4, 2).is_err());
    }

    #[test]
    fn counting_bound_matches_scan() {
        for n in 3..=14u32 {
            for k in 2..n {
                for l in 1..k {
                    let total_l = c(n, l).unwrap();
                    let scan = (0..=total_l)
                        .map(|a| {
                            let via_l = a + (total_l - a).div_ceil(c(k, l).unwrap());
                            let via_k = a + c(n, k).unwrap().saturating_sub(c(n - l, k - l).unwrap() * a);
                            via_l.max(via_k)
                        })
                        .min()
                        .unwrap();
                    assert_eq!(counting_lower_bound(n, k, l).unwrap(), scan, "({n},{k},{l})");
                }
            }
        }
        // γ(G_{k,1}) = n-k+1 stays above the bound
        assert!(counting_lower_bound(10, 5, 1).unwrap() <= 6);
    }

    #[test]
    fn counting_checks_on_small_pair() {
        let e = fam(4, 2, &[&[1, 4]]);
        let kf = fam(4, 3, &[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(
            kset_counting_check(&e, &kf, 4, 3).unwrap(),
            CountCheck {
                lhs: 4,
                rhs: 4,
                holds: true
            }
        );
        assert_eq!(
            pair_counting_check(&e, &kf, 4, 3).unwrap(),
            CountCheck {
                lhs: 7,
                rhs: 6,
                holds: true
            }
        );
        let all = Family::complete(6, 2);
        let none = Family::empty(6, 3);
        let chk = kset_counting_check(&all, &none, 6, 3).unwrap();
        assert_eq!((chk.lhs, chk.rhs, chk.holds), (4 * 15, 20, true));
        let chk = pair_counting_check(&all, &none, 6, 3).unwrap();
        assert_eq!((chk.lhs, chk.rhs, chk.holds), (15, 15, true));
    }
}
