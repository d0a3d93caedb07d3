use levelcover::combinatorics::{near_equal_partition, Family};
use levelcover::constructions::{
    construct, degree_bruteforce, degree_profile, g43_construct, g53_construct, gk2_construct, gk2_construction,
    partition_edges, Method,
};
use levelcover::domination::{check_domination, is_dominating};
use levelcover::exact::{count_cliques, count_independent, exact_gamma, exhaustive_gamma, Status};

#[test]
fn gk2_dominates_across_small_n() {
    for k in 3..=5u32 {
        for n in k + 1..=k + 14 {
            let pair = gk2_construct(n, k).unwrap();
            let v = check_domination(&pair).unwrap();
            assert!(
                v.dominating,
                "gk2 n={n} k={k}: {:?}",
                &v.violations[..v.violations.len().min(3)]
            );
        }
    }
}

#[test]
fn gk2_ksets_hit_each_part_once_with_one_double() {
    for (n, k) in [(12, 3), (13, 4), (20, 4), (17, 5)] {
        let part = near_equal_partition(n, k - 1).unwrap();
        let pair = gk2_construct(n, k).unwrap();
        for m in pair.ksets().iter() {
            let mut prof = part.profile(m);
            prof.sort_unstable();
            let mut want = vec![1; k as usize - 1];
            *want.last_mut().unwrap() = 2;
            assert_eq!(prof, want, "{m} at n={n} k={k}");
        }
        assert_eq!(pair.lsets(), &partition_edges(n, k).unwrap());
    }
}

#[test]
fn level3_constructions_dominate() {
    for n in (10..=20).step_by(2) {
        assert!(is_dominating(&g53_construct(n).unwrap()).unwrap(), "g53 n={n}");
    }
    for n in [12, 15, 18, 21] {
        assert!(is_dominating(&g43_construct(n).unwrap()).unwrap(), "g43 n={n}");
    }
}

#[test]
fn construct_dispatch_matches_direct_calls() {
    assert_eq!(
        construct(Method::Gk2, 14, 3, 2).unwrap().pair,
        gk2_construct(14, 3).unwrap()
    );
    assert_eq!(
        construct(Method::G53, 12, 5, 3).unwrap().pair,
        g53_construct(12).unwrap()
    );
    let c = gk2_construction(40, 3).unwrap();
    assert_eq!(c.cover.unwrap().ratio, 1.0);
    assert!(construct(Method::G43, 13, 4, 3).is_err());
}

#[test]
fn degree_formulas_match_enumeration() {
    for (n, k) in [(8, 3), (10, 3), (12, 4), (16, 5), (15, 4), (9, 4)] {
        assert_eq!(
            degree_profile(n, k).unwrap(),
            degree_bruteforce(n, k).unwrap(),
            "n={n} k={k}"
        );
    }
    assert!(degree_profile(9, 3).is_err());
}

#[test]
fn exact_gamma_for_singletons_is_n_minus_k_plus_one() {
    for n in 3..=8u32 {
        for k in 2..n {
            let r = exact_gamma(n, k, 1, None).unwrap();
            assert_eq!(
                (r.status, r.lower, r.upper),
                (Status::Optimal, (n - k + 1) as u64, (n - k + 1) as u64)
            );
            assert!(is_dominating(&r.certificate.unwrap()).unwrap());
        }
    }
}

#[test]
fn exact_gamma_is_monotone_in_n() {
    for (k, l) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        let mut last = 0;
        for n in k + 1..=7 {
            let r = exact_gamma(n, k, l, None).unwrap();
            assert_eq!(r.status, Status::Optimal);
            assert!(r.upper >= last, "gamma({n},{k},{l}) = {} < {last}", r.upper);
            last = r.upper;
        }
    }
}

#[test]
fn exact_agrees_with_exhaustive_search() {
    for (n, k, l) in [(4, 3, 2), (4, 3, 1), (5, 3, 1), (5, 4, 2), (5, 4, 3), (5, 3, 2)] {
        let a = exhaustive_gamma(n, k, l).unwrap();
        let b = exact_gamma(n, k, l, None).unwrap();
        assert_eq!(a.upper, b.upper, "({n},{k},{l})");
        assert_eq!(a.certificate, b.certificate, "({n},{k},{l})");
    }
}

fn two_cliques(n: u32) -> Family {
    let t = levelcover::combinatorics::turan_graph(n, 2).unwrap();
    levelcover::combinatorics::complement_pairs(&t, n)
}

#[test]
fn removing_an_edge_from_two_cliques_leaves_an_independent_triple() {
    for n in [6, 8, 10] {
        let full = two_cliques(n);
        assert_eq!(count_independent(&full, n, 3).unwrap(), 0);
        for e in full.iter() {
            let mut g = full.clone();
            g.remove(e);
            assert!(count_independent(&g, n, 3).unwrap() >= 1, "n={n} without {e}");
        }
    }
}

#[test]
fn turan_graphs_have_no_large_cliques() {
    for n in 1..=12u32 {
        for s in 1..=4u32.min(n) {
            let g = levelcover::combinatorics::turan_graph(n, s).unwrap();
            assert_eq!(count_cliques(&g, n, s + 1).unwrap(), 0, "T({n},{s})");
            if n >= s {
                assert!(count_cliques(&g, n, s).unwrap() >= 1);
            }
        }
    }
}
