//! The hull closure operator on circle families and generic closure-system tools.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{ClosureError, GeometryError};
use crate::geometry::collinear::UpperEnvelope;
use crate::geometry::{end_le, planar, CircleFamily, CollinearCircle, FloatCircle, PlanarSettings, Side};
use crate::rational::Rational;
use crate::set::MemberSet;

/// A closure operator on the ground set `0..ground_size()`.
pub trait ClosureSystem {
    fn ground_size(&self) -> usize;
    fn closure(&self, set: MemberSet) -> MemberSet;
}

impl<T: ClosureSystem + ?Sized> ClosureSystem for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn closure(&self, set: MemberSet) -> MemberSet {
        (**self).closure(set)
    }
}

enum Discs {
    Collinear(Vec<CollinearCircle>),
    Planar(Vec<FloatCircle>, PlanarSettings),
}

/// The closure `X ↦ { C ∈ F : C ⊆ conv(⋃X) }` of a circle family.
pub struct FamilyClosure<'a> {
    family: &'a CircleFamily,
    discs: Discs,
}

impl<'a> FamilyClosure<'a> {
    pub fn new(family: &'a CircleFamily) -> Self {
        let discs = if family.is_collinear() {
            Discs::Collinear(family.collinear_circles())
        } else {
            Discs::Planar(
                family.members().iter().map(|m| m.circle.to_float()).collect(),
                family.planar_settings(),
            )
        };
        FamilyClosure { family, discs }
    }

    pub fn family(&self) -> &CircleFamily {
        self.family
    }
}

impl ClosureSystem for FamilyClosure<'_> {
    fn ground_size(&self) -> usize {
        self.family.len()
    }

    fn closure(&self, set: MemberSet) -> MemberSet {
        if set.is_empty() {
            return MemberSet::EMPTY;
        }
        match &self.discs {
            Discs::Collinear(circles) => {
                let envelope = UpperEnvelope::new(set.iter().map(|i| &circles[i]));
                (0..circles.len())
                    .filter(|&i| set.contains(i) || envelope.contains(&circles[i]))
                    .collect()
            }
            Discs::Planar(circles, settings) => {
                let hull: Vec<FloatCircle> = set.iter().map(|i| circles[i]).collect();
                (0..circles.len())
                    .filter(|&i| set.contains(i) || planar::disc_in_hull(&circles[i], &hull, settings))
                    .collect()
            }
        }
    }
}

/// Closure of a member set of `family`, rejecting indices outside it.
pub fn closure(family: &CircleFamily, set: MemberSet) -> Result<MemberSet, ClosureError> {
    check_range(set, family.len())?;
    Ok(FamilyClosure::new(family).closure(set))
}

fn check_range(set: MemberSet, size: usize) -> Result<(), ClosureError> {
    match set.iter().find(|&i| i >= size) {
        Some(index) => Err(ClosureError::OutOfRange { index, size }),
        None => Ok(()),
    }
}

/// A finite set of closed intervals `[l, r]` of the real line, closed under
/// `X ↦ { I : I ⊆ [min l_X, max r_X] }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalSystem {
    intervals: Vec<(Rational, Rational)>,
}

impl IntervalSystem {
    pub fn new(intervals: Vec<(Rational, Rational)>) -> Self {
        IntervalSystem { intervals }
    }

    pub fn intervals(&self) -> &[(Rational, Rational)] {
        &self.intervals
    }
}

impl ClosureSystem for IntervalSystem {
    fn ground_size(&self) -> usize {
        self.intervals.len()
    }

    fn closure(&self, set: MemberSet) -> MemberSet {
        let Some(lo) = set.iter().map(|i| &self.intervals[i].0).min() else {
            return MemberSet::EMPTY;
        };
        let hi = set.iter().map(|i| &self.intervals[i].1).max().expect("nonempty");
        (0..self.intervals.len())
            .filter(|&i| lo <= &self.intervals[i].0 && &self.intervals[i].1 <= hi)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// Every subset of the ground set.
    Full,
    /// Random subsets drawn from a seeded generator.
    Sampled { samples: usize, seed: u64 },
}

/// Largest ground set `Full` verification accepts.
pub const FULL_VERIFY_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyNotClosed {
        closure: MemberSet,
    },
    NotExtensive {
        set: MemberSet,
        closure: MemberSet,
    },
    NotIdempotent {
        set: MemberSet,
        closure: MemberSet,
        reclosure: MemberSet,
    },
    NotMonotone {
        smaller: MemberSet,
        larger: MemberSet,
    },
    /// `closed` is closed, `x ≠ y` lie outside it and each is in the closure
    /// of `closed` plus the other.
    AntiExchange {
        closed: MemberSet,
        x: usize,
        y: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeometryReport {
    pub subsets_checked: usize,
    pub closed_sets_checked: usize,
    /// At most one witness per law, in the order the laws are listed in [`Violation`].
    pub violations: Vec<Violation>,
}

impl GeometryReport {
    pub fn is_convex_geometry(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `x ∈ Φ(X∪{y})` implies `y ∉ Φ(X∪{x})`.
pub fn anti_exchange_holds<S: ClosureSystem>(sys: &S, closed: MemberSet, x: usize, y: usize) -> bool {
    !(sys.closure(closed.with(y)).contains(x) && sys.closure(closed.with(x)).contains(y))
}

/// `Φ(X∪{x}) = Φ(X∪{y})` implies `x = y`.
pub fn distinct_extensions_hold<S: ClosureSystem>(sys: &S, closed: MemberSet, x: usize, y: usize) -> bool {
    x == y || sys.closure(closed.with(x)) != sys.closure(closed.with(y))
}

struct Checker {
    report: GeometryReport,
    seen: [bool; 5],
}

impl Checker {
    fn record(&mut self, slot: usize, v: Violation) {
        if !self.seen[slot] {
            self.seen[slot] = true;
            self.report.violations.push(v);
        }
    }

    fn finish(mut self) -> GeometryReport {
        self.report.violations.sort_by_key(|v| match v {
            Violation::EmptyNotClosed { .. } => 0,
            Violation::NotExtensive { .. } => 1,
            Violation::NotIdempotent { .. } => 2,
            Violation::NotMonotone { .. } => 3,
            Violation::AntiExchange { .. } => 4,
        });
        self.report
    }
}

/// Checks the closure-operator laws, `Φ(∅) = ∅`, and anti-exchange.
pub fn verify_convex_geometry<S: ClosureSystem>(sys: &S, mode: VerifyMode) -> Result<GeometryReport, ClosureError> {
    let n = sys.ground_size();
    let mut checker = Checker {
        report: GeometryReport::default(),
        seen: [false; 5],
    };
    let empty = sys.closure(MemberSet::EMPTY);
    if !empty.is_empty() {
        checker.record(0, Violation::EmptyNotClosed { closure: empty });
    }
    match mode {
        VerifyMode::Full => {
            if n > FULL_VERIFY_LIMIT {
                return Err(ClosureError::BoundExceeded {
                    size: n,
                    bound: FULL_VERIFY_LIMIT,
                });
            }
            let table: Vec<MemberSet> = (0..1u64 << n).map(|m| sys.closure(MemberSet(m))).collect();
            let cl = |s: MemberSet| table[s.0 as usize];
            for (m, &c) in table.iter().enumerate() {
                let set = MemberSet(m as u64);
                check_set(&mut checker, set, c, cl(c));
                for i in (0..n).filter(|&i| !set.contains(i)) {
                    if !c.is_subset(cl(set.with(i))) {
                        checker.record(
                            3,
                            Violation::NotMonotone {
                                smaller: set,
                                larger: set.with(i),
                            },
                        );
                    }
                }
                if c == set {
                    check_closed(&mut checker, set, n, &cl);
                }
            }
            checker.report.subsets_checked = table.len();
        }
        VerifyMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mask = MemberSet::full(n);
            let cl = |s: MemberSet| sys.closure(s);
            for _ in 0..samples {
                let set = MemberSet(rng.next_u64()).intersection(mask);
                let c = cl(set);
                check_set(&mut checker, set, c, cl(c));
                let larger = MemberSet(rng.next_u64()).intersection(mask).union(set);
                if !c.is_subset(cl(larger)) {
                    checker.record(3, Violation::NotMonotone { smaller: set, larger });
                }
                let closed = cl(c);
                if closed == c {
                    check_closed(&mut checker, c, n, &cl);
                }
                checker.report.subsets_checked += 1;
            }
        }
    }
    Ok(checker.finish())
}

fn check_set(checker: &mut Checker, set: MemberSet, c: MemberSet, cc: MemberSet) {
    if !set.is_subset(c) {
        checker.record(1, Violation::NotExtensive { set, closure: c });
    }
    if cc != c {
        checker.record(
            2,
            Violation::NotIdempotent {
                set,
                closure: c,
                reclosure: cc,
            },
        );
    }
}

fn check_closed(checker: &mut Checker, closed: MemberSet, n: usize, cl: &dyn Fn(MemberSet) -> MemberSet) {
    checker.report.closed_sets_checked += 1;
    let outside: Vec<usize> = (0..n).filter(|&i| !closed.contains(i)).collect();
    let ext: Vec<MemberSet> = outside.iter().map(|&i| cl(closed.with(i))).collect();
    for (a, &x) in outside.iter().enumerate() {
        for (b, &y) in outside.iter().enumerate().skip(a + 1) {
            if ext[b].contains(x) && ext[a].contains(y) {
                checker.record(4, Violation::AntiExchange { closed, x, y });
            }
        }
    }
}

/// The closed sets of a closure system, canonically ordered by size and then
/// by ascending member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSetLattice {
    ground_size: usize,
    sets: Vec<MemberSet>,
}

fn canonical_key(s: &MemberSet) -> (usize, Vec<usize>) {
    (s.len(), s.iter().collect())
}

impl ClosedSetLattice {
    pub fn new(ground_size: usize, sets: impl IntoIterator<Item = MemberSet>) -> Self {
        let mut sets: Vec<MemberSet> = sets.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        sets.sort_by_cached_key(canonical_key);
        ClosedSetLattice { ground_size, sets }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[MemberSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: MemberSet) -> bool {
        self.sets.contains(&set)
    }
}

pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// All closed sets, generated breadth first from `Φ(∅)` by adding one element
/// at a time and closing.
pub fn enumerate_closed_sets<S: ClosureSystem>(sys: &S, bound: usize) -> Result<ClosedSetLattice, ClosureError> {
    let n = sys.ground_size();
    if n > bound {
        return Err(ClosureError::BoundExceeded { size: n, bound });
    }
    let start = sys.closure(MemberSet::EMPTY);
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for i in (0..n).filter(|&i| !x.contains(i)) {
            let y = sys.closure(x.with(i));
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    Ok(ClosedSetLattice::new(n, seen))
}

/// Closure of every one of the `2^n` subsets; the oracle for [`enumerate_closed_sets`].
pub fn brute_force_closed_sets<S: ClosureSystem>(sys: &S) -> ClosedSetLattice {
    let n = sys.ground_size();
    let sets = (0..1u64 << n).map(|m| sys.closure(MemberSet(m)));
    ClosedSetLattice::new(n, sets)
}

/// `[A, B]_F = { C ∈ F : lend A ⊑ lend C, rend C ⊑ rend B }`.
pub fn horizontal_interval(family: &CircleFamily, a: usize, b: usize) -> Result<MemberSet, ClosureError> {
    if !family.is_collinear() {
        return Err(GeometryError::IntervalNeedsCollinear.into());
    }
    check_range(MemberSet::singleton(a).with(b), family.len())?;
    let circles = family.collinear_circles();
    Ok(horizontal_interval_of(&circles, a, b))
}

pub fn horizontal_interval_of(circles: &[CollinearCircle], a: usize, b: usize) -> MemberSet {
    (0..circles.len())
        .filter(|&c| end_le(&circles[a], &circles[c], Side::Left) && end_le(&circles[c], &circles[b], Side::Right))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn three_equal() -> CircleFamily {
        CircleFamily::collinear([
            ("A", CollinearCircle::new(int(0), int(1))),
            ("B", CollinearCircle::new(int(10), int(1))),
            ("C", CollinearCircle::new(int(20), int(1))),
        ])
        .unwrap()
    }

    /// A ⊆ B ⊆ ... labelled closure given by an explicit table.
    struct Table(Vec<MemberSet>);

    impl ClosureSystem for Table {
        fn ground_size(&self) -> usize {
            self.0.len().trailing_zeros() as usize
        }
        fn closure(&self, set: MemberSet) -> MemberSet {
            self.0[set.0 as usize]
        }
    }

    #[test]
    fn closure_examples() {
        let f = three_equal();
        let x = f.subset_of_ids(["A", "C"]).unwrap();
        assert_eq!(closure(&f, x).unwrap(), f.all());
        assert_eq!(closure(&f, MemberSet::EMPTY).unwrap(), MemberSet::EMPTY);
        assert_eq!(closure(&f, f.all()).unwrap(), f.all());
        assert_eq!(
            closure(&f, MemberSet::singleton(3)),
            Err(ClosureError::OutOfRange { index: 3, size: 3 })
        );
    }

    #[test]
    fn closed_sets_of_three_equal_circles() {
        let f = three_equal();
        let lat = enumerate_closed_sets(&FamilyClosure::new(&f), DEFAULT_ENUMERATION_BOUND).unwrap();
        let ids: Vec<Vec<&str>> = lat.sets().iter().map(|&s| f.ids_of(s)).collect();
        assert_eq!(
            ids,
            [
                vec![],
                vec!["A"],
                vec!["B"],
                vec!["C"],
                vec!["A", "B"],
                vec!["B", "C"],
                vec!["A", "B", "C"]
            ]
        );
    }

    #[test]
    fn closed_sets_of_small_families() {
        let disjoint = CircleFamily::collinear([
            ("A", CollinearCircle::new(int(0), int(1))),
            ("B", CollinearCircle::new(int(5), int(1))),
        ])
        .unwrap();
        assert_eq!(
            enumerate_closed_sets(&FamilyClosure::new(&disjoint), 20).unwrap().len(),
            4
        );
        let nested = CircleFamily::collinear([
            ("A", CollinearCircle::new(int(0), int(2))),
            ("B", CollinearCircle::new(int(0), int(1))),
        ])
        .unwrap();
        let lat = enumerate_closed_sets(&FamilyClosure::new(&nested), 20).unwrap();
        assert_eq!(
            lat.sets(),
            [MemberSet::EMPTY, MemberSet::singleton(1), MemberSet::full(2)]
        );
    }

    #[test]
    fn enumeration_bound() {
        let f = three_equal();
        assert_eq!(
            enumerate_closed_sets(&FamilyClosure::new(&f), 2),
            Err(ClosureError::BoundExceeded { size: 3, bound: 2 })
        );
    }

    #[test]
    fn horizontal_interval_examples() {
        let f = three_equal();
        assert_eq!(horizontal_interval(&f, 0, 2).unwrap(), f.all());
        assert_eq!(horizontal_interval(&f, 2, 0).unwrap(), MemberSet::EMPTY);
        let nested = CircleFamily::collinear([
            ("A", CollinearCircle::new(int(0), int(5))),
            ("D", CollinearCircle::new(int(0), int(1))),
        ])
        .unwrap();
        assert_eq!(horizontal_interval(&nested, 0, 0).unwrap(), MemberSet::full(2));
        assert_eq!(horizontal_interval(&nested, 1, 1).unwrap(), MemberSet::singleton(1));
    }

    #[test]
    fn three_equal_circles_form_a_convex_geometry() {
        let f = three_equal();
        let report = verify_convex_geometry(&FamilyClosure::new(&f), VerifyMode::Full).unwrap();
        assert!(report.is_convex_geometry(), "{report:?}");
        assert_eq!(report.subsets_checked, 8);
        assert_eq!(report.closed_sets_checked, 7);
    }

    #[test]
    fn exchanging_closure_is_caught() {
        // nested pair whose closure has been corrupted so that each circle
        // generates the other
        let both = MemberSet::full(2);
        let corrupted = Table(vec![MemberSet::EMPTY, both, both, both]);
        let report = verify_convex_geometry(&corrupted, VerifyMode::Full).unwrap();
        assert_eq!(
            report.violations,
            [Violation::AntiExchange {
                closed: MemberSet::EMPTY,
                x: 0,
                y: 1
            }]
        );
        assert!(!anti_exchange_holds(&corrupted, MemberSet::EMPTY, 0, 1));
        assert!(!distinct_extensions_hold(&corrupted, MemberSet::EMPTY, 0, 1));
    }

    #[test]
    fn broken_laws_are_reported() {
        // not extensive, not idempotent, and ∅ not closed
        let s0 = MemberSet::singleton(0);
        let s1 = MemberSet::singleton(1);
        let broken = Table(vec![s0, s1, MemberSet::EMPTY, MemberSet::full(2)]);
        let report = verify_convex_geometry(&broken, VerifyMode::Full).unwrap();
        let kinds: Vec<u8> = report
            .violations
            .iter()
            .map(|v| match v {
                Violation::EmptyNotClosed { .. } => 0,
                Violation::NotExtensive { .. } => 1,
                Violation::NotIdempotent { .. } => 2,
                Violation::NotMonotone { .. } => 3,
                Violation::AntiExchange { .. } => 4,
            })
            .collect();
        assert_eq!(kinds, [0, 1, 2, 3]);
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let f = three_equal();
        let sys = FamilyClosure::new(&f);
        let mode = VerifyMode::Sampled { samples: 50, seed: 7 };
        let a = verify_convex_geometry(&sys, mode).unwrap();
        assert_eq!(a, verify_convex_geometry(&sys, mode).unwrap());
        assert!(a.is_convex_geometry());
        assert_eq!(a.subsets_checked, 50);
    }

    #[test]
    fn interval_system_closure() {
        let sys = IntervalSystem::new(vec![(int(0), int(2)), (int(1), int(3)), (int(4), int(5))]);
        assert_eq!(sys.closure(MemberSet::from_indices([0, 2])), MemberSet::full(3));
        assert_eq!(sys.closure(MemberSet::singleton(1)), MemberSet::singleton(1));
        assert!(verify_convex_geometry(&sys, VerifyMode::Full)
            .unwrap()
            .is_convex_geometry());
    }
}
