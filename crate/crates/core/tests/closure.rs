mod common;

use circgeo_core::closure::{
    anti_exchange_holds, brute_force_closed_sets, distinct_extensions_hold, enumerate_closed_sets, horizontal_interval,
    verify_convex_geometry, ClosureSystem, FamilyClosure, VerifyMode,
};
use circgeo_core::geometry::{end_lt, Side};
use circgeo_core::{CircleFamily, MemberSet};
use common::*;
use proptest::prelude::*;

fn closed_sets(fam: &CircleFamily) -> Vec<MemberSet> {
    enumerate_closed_sets(&FamilyClosure::new(fam), fam.len())
        .unwrap()
        .sets()
        .to_vec()
}

/// Index of the member with the least left end (or greatest right end) in `set`.
fn extreme(fam: &CircleFamily, set: MemberSet, side: Side) -> usize {
    let circles = fam.collinear_circles();
    let mut best = set.iter().next().unwrap();
    for i in set.iter() {
        let better = match side {
            Side::Left => end_lt(&circles[i], &circles[best], Side::Left),
            Side::Right => end_lt(&circles[best], &circles[i], Side::Right),
        };
        if better {
            best = i;
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_laws_and_anti_exchange(fam in collinear(8)) {
        let report = verify_convex_geometry(&FamilyClosure::new(&fam), VerifyMode::Full).unwrap();
        prop_assert!(report.is_convex_geometry(), "{:?}", report.violations);
    }

    #[test]
    fn planar_families_are_convex_geometries(fam in planar(6)) {
        let report = verify_convex_geometry(&FamilyClosure::new(&fam), VerifyMode::Full).unwrap();
        prop_assert!(report.is_convex_geometry(), "{:?}", report.violations);
    }

    #[test]
    fn both_anti_exchange_forms_agree(fam in planar(5)) {
        let sys = FamilyClosure::new(&fam);
        for closed in closed_sets(&fam) {
            for x in (0..fam.len()).filter(|&x| !closed.contains(x)) {
                for y in (0..fam.len()).filter(|&y| y != x && !closed.contains(y)) {
                    prop_assert_eq!(anti_exchange_holds(&sys, closed, x, y), distinct_extensions_hold(&sys, closed, x, y));
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(fam in collinear(10)) {
        let sys = FamilyClosure::new(&fam);
        prop_assert_eq!(enumerate_closed_sets(&sys, 12).unwrap(), brute_force_closed_sets(&sys));
    }

    #[test]
    fn planar_enumeration_matches_brute_force(fam in planar(6)) {
        let sys = FamilyClosure::new(&fam);
        prop_assert_eq!(enumerate_closed_sets(&sys, 12).unwrap(), brute_force_closed_sets(&sys));
    }

    #[test]
    fn single_circle_closures_are_the_join_irreducibles(fam in collinear(10)) {
        let l = lattice_of(&fam);
        let mut jir: Vec<String> = l.jir().into_iter().map(|x| l.label(x).to_string()).collect();
        let mut singles: Vec<String> = (0..fam.len()).map(|a| label(horizontal_interval(&fam, a, a).unwrap())).collect();
        jir.sort();
        singles.sort();
        prop_assert_eq!(jir, singles);
    }

    #[test]
    fn closed_sets_of_concave_families_are_horizontal_intervals(seeds in concave_seeds(8)) {
        let Some(fam) = grow_concave(&seeds) else { return Ok(()) };
        let n = fam.len();
        let mut intervals: Vec<MemberSet> = vec![MemberSet::EMPTY];
        for a in 0..n {
            for b in 0..n {
                intervals.push(horizontal_interval(&fam, a, b).unwrap());
            }
        }
        intervals.sort_by_key(|s| s.0);
        intervals.dedup();
        let mut closed = closed_sets(&fam);
        closed.sort_by_key(|s| s.0);
        prop_assert_eq!(closed, intervals);
    }

    #[test]
    fn closed_sets_are_spanned_by_their_extreme_ends(seeds in concave_seeds(8)) {
        let Some(fam) = grow_concave(&seeds) else { return Ok(()) };
        let sys = FamilyClosure::new(&fam);
        for x in closed_sets(&fam).into_iter().filter(|s| !s.is_empty()) {
            let a = extreme(&fam, x, Side::Left);
            let b = extreme(&fam, x, Side::Right);
            prop_assert_eq!(horizontal_interval(&fam, a, b).unwrap(), x);
            let aa = horizontal_interval(&fam, a, a).unwrap();
            let bb = horizontal_interval(&fam, b, b).unwrap();
            prop_assert_eq!(sys.closure(aa.union(bb)), x);
            // every closed set is the join of the closures of its members
            let joined = x.iter().fold(MemberSet::EMPTY, |acc, c| acc.union(horizontal_interval(&fam, c, c).unwrap()));
            prop_assert_eq!(sys.closure(joined), x);
        }
    }

    #[test]
    fn one_sided_intervals_form_chains(seeds in concave_seeds(8)) {
        let Some(fam) = grow_concave(&seeds) else { return Ok(()) };
        let all = fam.all();
        let kl = extreme(&fam, all, Side::Left);
        let kr = extreme(&fam, all, Side::Right);
        let left: Vec<MemberSet> = (0..fam.len()).map(|b| horizontal_interval(&fam, kl, b).unwrap()).collect();
        let right: Vec<MemberSet> = (0..fam.len()).map(|a| horizontal_interval(&fam, a, kr).unwrap()).collect();
        for chain in [&left, &right] {
            for s in chain.iter() {
                for t in chain.iter() {
                    prop_assert!(s.is_subset(*t) || t.is_subset(*s));
                }
            }
        }
        for x in closed_sets(&fam).into_iter().filter(|s| !s.is_empty()) {
            let found = left.iter().any(|l| right.iter().any(|r| l.intersection(*r) == x));
            prop_assert!(found, "{:?}", x);
        }
    }
}

#[test]
fn empty_family_has_one_closed_set() {
    let fam = CircleFamily::collinear(Vec::<(&str, circgeo_core::CollinearCircle)>::new()).unwrap();
    let sets = closed_sets(&fam);
    assert_eq!(sets, [MemberSet::EMPTY]);
}
