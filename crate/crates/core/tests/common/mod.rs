#![allow(dead_code)]

use circgeo_core::closure::{enumerate_closed_sets, FamilyClosure, IntervalSystem};
use circgeo_core::geometry::Circle;
use circgeo_core::lattice::FiniteLattice;
use circgeo_core::rational::{frac, Rational};
use circgeo_core::synthesis::{repair_circles, DEFAULT_REPAIR_CAP};
use circgeo_core::{CircleFamily, CollinearCircle, MemberSet};
use proptest::prelude::*;

pub fn half(n: i64) -> Rational {
    frac(n, 2)
}

pub fn cc(x2: i64, r2: i64) -> CollinearCircle {
    CollinearCircle::new(half(x2), half(r2))
}

fn dedup<T: PartialEq>(items: Vec<T>) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(items.len());
    for x in items {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn collinear_family(circles: Vec<CollinearCircle>) -> CircleFamily {
    CircleFamily::collinear(
        dedup(circles)
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("c{i}"), c)),
    )
    .unwrap()
}

/// A collinear circle on the half-integer grid, center in `[-10, 10]`, radius in `[0, 6]`.
pub fn collinear_circle() -> impl Strategy<Value = CollinearCircle> {
    (-20i64..=20, 0i64..=12).prop_map(|(x, r)| cc(x, r))
}

/// Distinct collinear circles, at most `max` of them.
pub fn collinear(max: usize) -> impl Strategy<Value = CircleFamily> {
    prop::collection::vec(collinear_circle(), 1..=max).prop_map(collinear_family)
}

/// Distinct planar circles on the half-integer grid, at most `max` of them.
pub fn planar(max: usize) -> impl Strategy<Value = CircleFamily> {
    prop::collection::vec((-12i64..=12, -12i64..=12, 0i64..=8), 1..=max).prop_map(|v| {
        let circles = dedup(
            v.into_iter()
                .map(|(x, y, r)| Circle::new(half(x), half(y), half(r)))
                .collect(),
        );
        CircleFamily::planar(circles.into_iter().enumerate().map(|(i, c)| (format!("p{i}"), c))).unwrap()
    })
}

/// Grows a family circle by circle: each new circle starts at `lmpt` and
/// reaches past every earlier right endpoint, then is repaired. `None` when
/// the result is not a separated concave family of distinct circles.
pub fn grow_concave(seeds: &[(i64, i64)]) -> Option<CircleFamily> {
    let mut circles: Vec<CollinearCircle> = Vec::new();
    for &(l2, extra2) in seeds {
        let lmpt = half(l2);
        let reach = circles
            .iter()
            .map(CollinearCircle::rmpt)
            .max()
            .unwrap_or_else(|| lmpt.clone());
        let rmpt = reach.max(lmpt.clone()) + half(extra2) + frac(1, 4);
        let start = CollinearCircle::from_endpoints(&lmpt, &rmpt);
        let c = repair_circles(&circles, &start, DEFAULT_REPAIR_CAP).ok()?.circle;
        if circles.contains(&c) {
            return None;
        }
        circles.push(c);
    }
    let fam = collinear_family(circles);
    (fam.is_concave().unwrap() && fam.is_separated().unwrap()).then_some(fam)
}

pub fn concave_seeds(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-16i64..=16, 0i64..=6), 1..=max)
}

/// Endpoint pairs of `k` intervals with `2k` distinct endpoints.
pub fn interval_endpoints(max_k: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    (1..=max_k)
        .prop_flat_map(|k| Just((0..2 * k as i64).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| v.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect())
}

pub fn label(s: MemberSet) -> String {
    format!("{:?}", s.iter().collect::<Vec<_>>())
}

pub fn interval_lattice(endpoints: &[(i64, i64)]) -> FiniteLattice {
    let sys = IntervalSystem::new(endpoints.iter().map(|&(a, b)| (frac(a, 1), frac(b, 1))).collect());
    let cs = enumerate_closed_sets(&sys, endpoints.len()).unwrap();
    FiniteLattice::from_closed_sets(&cs, label).unwrap()
}

pub fn lattice_of(family: &CircleFamily) -> FiniteLattice {
    let cs = enumerate_closed_sets(&FamilyClosure::new(family), family.len()).unwrap();
    FiniteLattice::from_closed_sets(&cs, label).unwrap()
}
