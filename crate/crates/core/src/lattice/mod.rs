//! Finite lattices given by their order relation.
//!
//! Elements are stored in a linear extension of the order: `x ≤ y` implies
//! `index(x) ≤ index(y)`, so the bottom is element `0` and the top is the
//! last element. Joins are the first common upper bound in index order and
//! meets the last common lower bound.

mod analysis;
mod generate;
mod iso;
mod probe;
mod width;

pub use analysis::{
    caratheodory, convex_dimension, cover_preserving_m3, is_dually_slim, is_lower_semimodular, is_meet_distributive,
    lower_semimodularity_violation, meet_distributivity_violation, CaratheodoryFailure, DEFAULT_CARATHEODORY_BOUND,
};
pub use generate::{lattices_up_to, MAX_GENERATED_SIZE};
pub use iso::{extend_jir_bijection, is_isomorphic, lattice_signature, ElementSignature, IsomorphismClasses};
pub use probe::{
    filter_is_chain, filter_is_prime, horizontal_betweenness_violation, structural_probe, DoublyIrreducibleProbe,
    JoinIrreducibleGeometry, StructuralProbe,
};
pub use width::{width, width_of, WidthWitness};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::closure::ClosedSetLattice;
use crate::error::LatticeError;
use crate::set::MemberSet;

#[derive(Clone, Debug)]
pub struct FiniteLattice {
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    heights: Vec<usize>,
    join: Vec<u32>,
    meet: Vec<u32>,
}

impl PartialEq for FiniteLattice {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl FiniteLattice {
    /// Builds a lattice from labels and a partial order given as a predicate.
    /// The predicate is taken as is; it must be reflexive, transitive and
    /// antisymmetric.
    pub fn from_order<F>(labels: Vec<String>, leq: F) -> Result<Self, LatticeError>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        let mut below_count: Vec<usize> = vec![0; n];
        for (i, label) in labels.iter().enumerate() {
            for (j, count) in below_count.iter_mut().enumerate() {
                if i != j && leq(i, j) {
                    if leq(j, i) {
                        return Err(LatticeError::Cycle(label.clone()));
                    }
                    *count += 1;
                }
            }
        }
        // sorting by the number of strictly smaller elements is a linear extension
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&i| below_count[i]);
        let new_labels: Vec<String> = perm.iter().map(|&i| labels[i].clone()).collect();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, &i) in perm.iter().enumerate() {
            for (b, &j) in perm.iter().enumerate() {
                if leq(i, j) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        Self::from_sets(new_labels, up, down)
    }

    /// Builds a lattice from a cover (or any generating) relation given as
    /// `(lower, upper)` index pairs; the order is its reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(LatticeError::UnknownLabel(alloc::format!("#{}", a.max(b))));
            }
            succ[a].push(b);
        }
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        for (s, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![s];
            row.insert(s);
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if y == s {
                        return Err(LatticeError::Cycle(labels[s].clone()));
                    }
                    if !row.put(y) {
                        stack.push(y);
                    }
                }
            }
        }
        Self::from_order(labels, |i, j| reach[i].contains(j))
    }

    /// Same as [`from_covers`](Self::from_covers) with endpoints given by label.
    pub fn from_labeled_covers<S: AsRef<str>>(labels: Vec<String>, covers: &[(S, S)]) -> Result<Self, LatticeError> {
        let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| LatticeError::UnknownLabel(s.as_ref().to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>, LatticeError>>()?;
        Self::from_covers(labels, &pairs)
    }

    /// The containment lattice of a family of closed sets. Rejects families
    /// that are not closed under intersection.
    pub fn from_closed_sets<F>(cs: &ClosedSetLattice, mut label: F) -> Result<Self, LatticeError>
    where
        F: FnMut(MemberSet) -> String,
    {
        let sets = cs.sets();
        let lookup: BTreeSet<MemberSet> = sets.iter().copied().collect();
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                if !lookup.contains(&a.intersection(b)) {
                    return Err(LatticeError::NotIntersectionClosed(label(a), label(b)));
                }
            }
        }
        let labels = sets.iter().map(|&s| label(s)).collect();
        Self::from_order(labels, |i, j| sets[i].is_subset(sets[j]))
    }

    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_order(labels, |i, j| i <= j).expect("chain")
    }

    /// The lattice of subsets of a `k`-element set.
    pub fn boolean(k: u32) -> Self {
        let labels = (0..1u32 << k)
            .map(|m| alloc::format!("{m:0width$b}", width = k as usize))
            .collect();
        Self::from_order(labels, |i, j| i & !j == 0).expect("boolean")
    }

    fn from_sets(labels: Vec<String>, up: Vec<FixedBitSet>, down: Vec<FixedBitSet>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if down[0].count_ones(..) != 1 || up[0].count_ones(..) != n {
            return Err(LatticeError::NoBottom);
        }
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        let mut common = FixedBitSet::with_capacity(n);
        for i in 0..n {
            for j in i..n {
                common.clone_from(&up[i]);
                common.intersect_with(&up[j]);
                let Some(cand) = common.ones().next() else {
                    return Err(if i == j {
                        LatticeError::NoTop
                    } else {
                        LatticeError::NoJoin(labels[i].clone(), labels[j].clone())
                    });
                };
                if !common.is_subset(&up[cand]) {
                    return Err(LatticeError::NoJoin(labels[i].clone(), labels[j].clone()));
                }
                join[i * n + j] = cand as u32;
                join[j * n + i] = cand as u32;
                common.clone_from(&down[i]);
                common.intersect_with(&down[j]);
                let m = common.ones().next_back().expect("bottom is below everything");
                if !common.is_subset(&down[m]) {
                    return Err(LatticeError::NoBottom);
                }
                meet[i * n + j] = m as u32;
                meet[j * n + i] = m as u32;
            }
        }
        if up[n - 1].count_ones(..) != 1 || down[n - 1].count_ones(..) != n {
            return Err(LatticeError::NoTop);
        }
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for j in 0..n {
            for i in down[j].ones().filter(|&i| i != j) {
                // i ≺ j iff no k with i < k < j
                let between = down[j].ones().any(|k| k != i && k != j && up[i].contains(k));
                if !between {
                    lower_covers[j].push(i);
                    upper_covers[i].push(j);
                }
            }
        }
        let mut heights = vec![0usize; n];
        for j in 0..n {
            heights[j] = lower_covers[j].iter().map(|&i| heights[i] + 1).max().unwrap_or(0);
        }
        Ok(FiniteLattice {
            labels,
            up,
            down,
            lower_covers,
            upper_covers,
            heights,
            join,
            meet,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        self.lower_covers[upper].contains(&lower)
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|j| self.lower_covers[j].iter().map(move |&i| (i, j)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.heights[x]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// `{ y : y ≤ x }`, ascending.
    pub fn ideal(&self, x: usize) -> Vec<usize> {
        self.down[x].ones().collect()
    }

    /// `{ y : x ≤ y }`, ascending.
    pub fn filter(&self, x: usize) -> Vec<usize> {
        self.up[x].ones().collect()
    }

    pub fn ideal_size(&self, x: usize) -> usize {
        self.down[x].count_ones(..)
    }

    pub fn filter_size(&self, x: usize) -> usize {
        self.up[x].count_ones(..)
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower_covers[x].len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.upper_covers[x].len() == 1
    }

    /// Nonzero join-irreducibles: elements with exactly one lower cover.
    pub fn jir(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_join_irreducible(x)).collect()
    }

    /// Elements with exactly one upper cover.
    pub fn mir(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_meet_irreducible(x)).collect()
    }

    pub fn doubly_irreducible(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.is_join_irreducible(x) && self.is_meet_irreducible(x))
            .collect()
    }

    /// Meet of the lower covers of `x`; `x` itself for the bottom.
    pub fn lower_star(&self, x: usize) -> usize {
        if x == self.bottom() {
            x
        } else {
            self.meet_all(self.lower_covers[x].iter().copied())
        }
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|x| self.upper_covers[x].len() <= 1)
    }

    /// The interval `[a, b]` as a lattice of its own, labels preserved.
    pub fn interval(&self, a: usize, b: usize) -> Self {
        let members: Vec<usize> = (0..self.len()).filter(|&x| self.leq(a, x) && self.leq(x, b)).collect();
        let labels = members.iter().map(|&x| self.labels[x].clone()).collect();
        Self::from_order(labels, |i, j| self.leq(members[i], members[j])).expect("intervals of lattices are lattices")
    }
}
