mod common;

use std::sync::OnceLock;

use circgeo_core::closure::{enumerate_closed_sets, verify_convex_geometry, VerifyMode};
use circgeo_core::lattice::{
    caratheodory, convex_dimension, cover_preserving_m3, extend_jir_bijection, is_dually_slim, is_isomorphic,
    is_lower_semimodular, is_meet_distributive, lattices_up_to, width_of, FiniteLattice, JoinIrreducibleGeometry,
    DEFAULT_CARATHEODORY_BOUND,
};
use common::*;
use proptest::prelude::*;

/// Every lattice with at most 8 elements, up to isomorphism.
fn small_lattices() -> &'static [FiniteLattice] {
    static ALL: OnceLock<Vec<FiniteLattice>> = OnceLock::new();
    ALL.get_or_init(|| lattices_up_to(8, |_| true))
}

fn meet_distributive() -> impl Iterator<Item = &'static FiniteLattice> {
    small_lattices().iter().filter(|l| is_meet_distributive(l))
}

#[test]
fn corpus_sizes() {
    // unlabeled lattices with 1..=8 elements
    assert_eq!(small_lattices().len(), 1 + 1 + 1 + 2 + 5 + 15 + 53 + 222);
}

#[test]
fn meet_distributive_implies_lower_semimodular() {
    for l in meet_distributive() {
        assert!(is_lower_semimodular(l), "{:?}", l.labels());
    }
}

#[test]
fn dually_slim_lower_semimodular_lattices_have_no_cover_preserving_m3() {
    for l in small_lattices()
        .iter()
        .filter(|l| is_lower_semimodular(l) && is_dually_slim(l))
    {
        assert!(cover_preserving_m3(l).is_none(), "{:?}", l.cover_pairs());
    }
    // the converse needs more: 2^3 is distributive with three coatoms
    let cube = FiniteLattice::boolean(3);
    assert!(is_lower_semimodular(&cube) && cover_preserving_m3(&cube).is_none());
    assert!(!is_dually_slim(&cube));
}

#[test]
fn lower_semimodular_lattices_are_dually_slim_iff_at_most_two_lower_covers() {
    for l in small_lattices().iter().filter(|l| is_lower_semimodular(l)) {
        let narrow = (0..l.len()).all(|x| l.lower_covers(x).len() <= 2);
        assert_eq!(is_dually_slim(l), narrow, "{:?}", l.cover_pairs());
    }
}

#[test]
fn join_irreducible_cancellation_in_lower_semimodular_lattices() {
    for l in small_lattices().iter().filter(|l| is_lower_semimodular(l)) {
        for a in l.jir() {
            for c in (0..l.len()).filter(|&c| l.lt(c, a)) {
                for b in 0..l.len() {
                    if l.leq(a, l.join(b, c)) {
                        assert!(l.leq(a, b), "a={a} b={b} c={c} in {:?}", l.cover_pairs());
                    }
                }
            }
        }
    }
}

#[test]
fn join_irreducible_geometry_round_trip() {
    for l in meet_distributive() {
        let geom = JoinIrreducibleGeometry::new(l).unwrap();
        let report = verify_convex_geometry(&geom, VerifyMode::Full).unwrap();
        assert!(report.is_convex_geometry());
        let cs = enumerate_closed_sets(&geom, 16).unwrap();
        let back = FiniteLattice::from_closed_sets(&cs, label).unwrap();
        assert!(is_isomorphic(l, &back).is_some());
    }
}

#[test]
fn dually_slim_convex_geometries_satisfy_c2() {
    for l in meet_distributive().filter(|l| is_dually_slim(l)) {
        assert!(caratheodory(l, 2, DEFAULT_CARATHEODORY_BOUND).unwrap().is_none());
    }
    // the converse fails: 2^3 satisfies C2
    let cube = FiniteLattice::boolean(3);
    assert!(!is_dually_slim(&cube));
    assert!(caratheodory(&cube, 2, DEFAULT_CARATHEODORY_BOUND).unwrap().is_none());
}

/// `l` with its elements relabeled and presented in the order `perm`.
fn shuffled(l: &FiniteLattice, perm: &[usize]) -> FiniteLattice {
    let labels = perm.iter().map(|&x| format!("s{x}")).collect();
    FiniteLattice::from_order(labels, |i, j| l.leq(perm[i], perm[j])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dimension_at_most_two_iff_dually_slim_and_lower_semimodular(fam in collinear(7)) {
        let l = lattice_of(&fam);
        let cdim = convex_dimension(&l).width;
        prop_assert_eq!(cdim <= 2, is_lower_semimodular(&l) && is_dually_slim(&l));
        prop_assert!(is_meet_distributive(&l));
    }

    #[test]
    fn planar_lattices_are_meet_distributive(fam in planar(5)) {
        let l = lattice_of(&fam);
        prop_assert!(is_meet_distributive(&l));
        let cdim = convex_dimension(&l).width;
        prop_assert_eq!(cdim <= 2, is_lower_semimodular(&l) && is_dually_slim(&l));
    }

    #[test]
    fn width_duality(edges in prop::collection::vec((0usize..12, 0usize..12), 0..30)) {
        // strict order: transitive closure of edges i -> j with i < j
        let n = 12;
        let mut lt = vec![vec![false; n]; n];
        for (a, b) in edges {
            if a < b {
                lt[a][b] = true;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if lt[i][k] && lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
        let elements: Vec<usize> = (0..n).collect();
        let w = width_of(&elements, |a, b| lt[a][b]);
        prop_assert_eq!(w.antichain.len(), w.width);
        prop_assert_eq!(w.chains.len(), w.width);
        for &a in &w.antichain {
            for &b in &w.antichain {
                prop_assert!(!lt[a][b]);
            }
        }
        let mut covered: Vec<usize> = w.chains.iter().flatten().copied().collect();
        covered.sort_unstable();
        prop_assert_eq!(covered, elements);
        for chain in &w.chains {
            for p in chain.windows(2) {
                prop_assert!(lt[p[0]][p[1]]);
            }
        }
    }

    #[test]
    fn join_irreducible_bijection_extends_to_isomorphism(idx in 0usize..1000, seed in any::<u64>()) {
        let corpus = small_lattices();
        let l = &corpus[idx % corpus.len()];
        let mut perm: Vec<usize> = (0..l.len()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let m = shuffled(l, &perm);
        let to_m = |x: usize| m.index_of(&format!("s{x}")).unwrap();
        let phi: Vec<(usize, usize)> = l.jir().into_iter().map(|x| (x, to_m(x))).collect();
        let map = extend_jir_bijection(l, &m, &phi).expect("extension");
        for x in 0..l.len() {
            prop_assert_eq!(map[x], to_m(x));
            for y in 0..l.len() {
                prop_assert_eq!(l.leq(x, y), m.leq(map[x], map[y]));
            }
        }
    }
}

#[test]
fn wrong_bijection_does_not_extend() {
    // in 0 < a < c < 1, 0 < b < 1, swapping the atoms a and b breaks the order
    let l = FiniteLattice::from_labeled_covers(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .unwrap();
    let i = |s: &str| l.index_of(s).unwrap();
    let phi = [(i("a"), i("b")), (i("b"), i("a")), (i("c"), i("c"))];
    assert!(extend_jir_bijection(&l, &l, &phi).is_none());
}
