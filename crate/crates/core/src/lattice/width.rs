//! Width of a finite poset by Dilworth's theorem.
//!
//! A maximum matching in the bipartite graph `{(x, y) : x < y}` gives a
//! minimum chain cover of size `|P| - |M|`; König's theorem turns the same
//! matching into an antichain of that size.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteLattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthWitness {
    pub width: usize,
    /// A largest antichain.
    pub antichain: Vec<usize>,
    /// A smallest cover by chains, each listed bottom-up.
    pub chains: Vec<Vec<usize>>,
}

/// Width of `elements` under the strict order `lt`.
pub fn width_of<F>(elements: &[usize], lt: F) -> WidthWitness
where
    F: Fn(usize, usize) -> bool,
{
    let n = elements.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| lt(elements[i], elements[j])).collect())
        .collect();
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for s in 0..n {
        let mut visited = vec![false; n];
        augment(s, &adj, &mut visited, &mut match_left, &mut match_right);
    }

    let mut chains = Vec::new();
    for start in (0..n).filter(|&i| match_right[i].is_none()) {
        let mut chain = vec![elements[start]];
        let mut cur = start;
        while let Some(next) = match_left[cur] {
            chain.push(elements[next]);
            cur = next;
        }
        chains.push(chain);
    }

    // König: alternating reachability from unmatched left vertices
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| match_left[i].is_none()).collect();
    for &i in &queue {
        left_seen[i] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !right_seen[v] {
                right_seen[v] = true;
                if let Some(w) = match_right[v] {
                    if !left_seen[w] {
                        left_seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..n)
        .filter(|&i| left_seen[i] && !right_seen[i])
        .map(|i| elements[i])
        .collect();

    debug_assert_eq!(antichain.len(), chains.len());
    WidthWitness {
        width: chains.len(),
        antichain,
        chains,
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if match_right[v].is_none_or(|w| augment(w, adj, visited, match_left, match_right)) {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}

/// Width of a set of lattice elements under the lattice order.
pub fn width(lattice: &FiniteLattice, elements: &[usize]) -> WidthWitness {
    width_of(elements, |x, y| lattice.lt(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::seven;

    #[test]
    fn antichain_and_chain() {
        let w = width_of(&[0, 1, 2, 3], |_, _| false);
        assert_eq!(w.width, 4);
        let w = width_of(&[0, 1, 2, 3], |a, b| a < b);
        assert_eq!(w.width, 1);
        assert_eq!(w.chains, [vec![0, 1, 2, 3]]);
    }

    #[test]
    fn mir_of_seven_has_width_two() {
        let l = seven();
        let w = width(&l, &l.mir());
        assert_eq!(w.width, 2);
        assert_eq!(w.antichain.len(), 2);
        assert!(!l.comparable(w.antichain[0], w.antichain[1]));
        let covered: usize = w.chains.iter().map(Vec::len).sum();
        assert_eq!(covered, 4);
    }

    #[test]
    fn empty_poset() {
        let w = width_of(&[], |_, _| false);
        assert_eq!(w.width, 0);
        assert!(w.antichain.is_empty() && w.chains.is_empty());
    }
}
