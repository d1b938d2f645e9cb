//! Lattice isomorphism through join-irreducibles.
//!
//! A lattice isomorphism is determined by its restriction to `Jir`, so the
//! search only assigns join-irreducibles and then extends by joins.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteLattice;

/// Height, number of lower and upper covers, join/meet irreducibility, and
/// sizes of the ideal and filter of an element.
pub type ElementSignature = (usize, usize, usize, bool, bool, usize, usize);

/// Isomorphism invariant of an element.
pub fn lattice_signature(l: &FiniteLattice, x: usize) -> ElementSignature {
    (
        l.height(x),
        l.lower_covers(x).len(),
        l.upper_covers(x).len(),
        l.is_join_irreducible(x),
        l.is_meet_irreducible(x),
        l.ideal_size(x),
        l.filter_size(x),
    )
}

/// Representatives of isomorphism classes, bucketed by the sorted element
/// signatures.
#[derive(Clone, Debug, Default)]
pub struct IsomorphismClasses {
    buckets: BTreeMap<Vec<ElementSignature>, Vec<FiniteLattice>>,
    count: usize,
}

impl IsomorphismClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `l` unless an isomorphic lattice is already present; returns
    /// whether it was added.
    pub fn insert(&mut self, l: FiniteLattice) -> bool {
        let mut key: Vec<ElementSignature> = (0..l.len()).map(|x| lattice_signature(&l, x)).collect();
        key.sort_unstable();
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|m| is_isomorphic(m, &l).is_some()) {
            return false;
        }
        bucket.push(l);
        self.count += 1;
        true
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn into_lattices(self) -> impl Iterator<Item = FiniteLattice> {
        self.buckets.into_values().flatten()
    }
}

/// Extends a bijection between the join-irreducibles of two lattices by
/// `x ↦ ∨{ φ(a) : a ∈ Jir, a ≤ x }` and returns the extension when it is an
/// order isomorphism, indexed by elements of `l1`.
pub fn extend_jir_bijection(l1: &FiniteLattice, l2: &FiniteLattice, phi: &[(usize, usize)]) -> Option<Vec<usize>> {
    if l1.len() != l2.len() {
        return None;
    }
    let mut image: Vec<Option<usize>> = vec![None; l1.len()];
    let mut hit = vec![false; l2.len()];
    for &(a, b) in phi {
        if a >= l1.len() || b >= l2.len() || !l1.is_join_irreducible(a) || !l2.is_join_irreducible(b) {
            return None;
        }
        if image[a].is_some() || hit[b] {
            return None;
        }
        image[a] = Some(b);
        hit[b] = true;
    }
    let jir1 = l1.jir();
    if jir1.iter().any(|&a| image[a].is_none()) || phi.len() != l2.jir().len() {
        return None;
    }
    let map: Vec<usize> = (0..l1.len())
        .map(|x| l2.join_all(jir1.iter().filter(|&&a| l1.leq(a, x)).map(|&a| image[a].unwrap())))
        .collect();
    let mut seen = vec![false; l2.len()];
    for &y in &map {
        if seen[y] {
            return None;
        }
        seen[y] = true;
    }
    for x in 0..l1.len() {
        for y in 0..l1.len() {
            if l1.leq(x, y) != l2.leq(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}

/// An isomorphism `l1 → l2` as an index map, if one exists.
pub fn is_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> Option<Vec<usize>> {
    if l1.len() != l2.len() {
        return None;
    }
    let mut s1: Vec<_> = (0..l1.len()).map(|x| lattice_signature(l1, x)).collect();
    let mut s2: Vec<_> = (0..l2.len()).map(|x| lattice_signature(l2, x)).collect();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    let j1 = l1.jir();
    let j2 = l2.jir();
    let candidates: Vec<Vec<usize>> = j1
        .iter()
        .map(|&a| {
            let sig = lattice_signature(l1, a);
            let mut c: Vec<usize> = j2
                .iter()
                .copied()
                .filter(|&b| lattice_signature(l2, b) == sig)
                .collect();
            c.sort_by_key(|&b| {
                (
                    l2.height(b),
                    l2.lower_covers(b).len(),
                    l2.upper_covers(b).len(),
                    !l2.is_meet_irreducible(b),
                    b,
                )
            });
            c
        })
        .collect();
    let mut search = Search {
        l1,
        l2,
        j1: &j1,
        candidates: &candidates,
        assigned: Vec::with_capacity(j1.len()),
        used: vec![false; l2.len()],
    };
    search.run()
}

struct Search<'a> {
    l1: &'a FiniteLattice,
    l2: &'a FiniteLattice,
    j1: &'a [usize],
    candidates: &'a [Vec<usize>],
    assigned: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<usize>> {
        let i = self.assigned.len();
        if i == self.j1.len() {
            let pairs: Vec<(usize, usize)> = self.j1.iter().copied().zip(self.assigned.iter().copied()).collect();
            return extend_jir_bijection(self.l1, self.l2, &pairs);
        }
        for &b in &self.candidates[i] {
            if self.used[b] || !self.consistent(i, b) {
                continue;
            }
            self.used[b] = true;
            self.assigned.push(b);
            if let Some(map) = self.run() {
                return Some(map);
            }
            self.assigned.pop();
            self.used[b] = false;
        }
        None
    }

    /// Order and pairwise-join agreement of `j1[i] ↦ b` with earlier choices.
    fn consistent(&self, i: usize, b: usize) -> bool {
        let (l1, l2) = (self.l1, self.l2);
        let x = self.j1[i];
        let pair = |k: usize| if k == i { (x, b) } else { (self.j1[k], self.assigned[k]) };
        for k in 0..i {
            let (a, c) = pair(k);
            if l1.leq(a, x) != l2.leq(c, b) || l1.leq(x, a) != l2.leq(b, c) {
                return false;
            }
        }
        for p in 0..=i {
            let (a1, a2) = pair(p);
            for q in p..=i {
                let (b1, b2) = pair(q);
                let (j1, j2) = (l1.join(a1, b1), l2.join(a2, b2));
                for k in 0..=i {
                    if i != p && i != q && i != k {
                        continue;
                    }
                    let (c1, c2) = pair(k);
                    if l1.leq(c1, j1) != l2.leq(c2, j2) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::*;

    #[test]
    fn self_isomorphism_is_identity() {
        let l = seven();
        let map = is_isomorphic(&l, &l).unwrap();
        assert_eq!(map, (0..l.len()).collect::<Vec<_>>());
    }

    #[test]
    fn non_isomorphic_pairs() {
        assert!(is_isomorphic(&FiniteLattice::boolean(2), &FiniteLattice::chain(4)).is_none());
        assert!(is_isomorphic(&m3(), &n5()).is_none());
    }

    #[test]
    fn relabeled_lattice_is_found() {
        let a = seven();
        let b = lattice(
            &["top", "p", "q", "x", "y", "z", "bot"],
            &[
                ("bot", "x"),
                ("bot", "y"),
                ("bot", "z"),
                ("z", "p"),
                ("y", "p"),
                ("y", "q"),
                ("x", "q"),
                ("p", "top"),
                ("q", "top"),
            ],
        );
        let map = is_isomorphic(&a, &b).unwrap();
        assert_eq!(b.label(map[a.index_of("{B}").unwrap()]), "y");
        assert_eq!(map[a.top()], b.top());
    }

    #[test]
    fn extension_rejects_bad_bijections() {
        let l = seven();
        let a = l.index_of("{A}").unwrap();
        let b = l.index_of("{B}").unwrap();
        let c = l.index_of("{C}").unwrap();
        assert!(extend_jir_bijection(&l, &l, &[(a, c), (b, b), (c, a)]).is_some());
        assert!(extend_jir_bijection(&l, &l, &[(a, b), (b, a), (c, c)]).is_none());
        assert!(extend_jir_bijection(&l, &l, &[(a, a), (b, b)]).is_none());
    }
}
