use alloc::vec;
use alloc::vec::Vec;

use super::width::{width, WidthWitness};
use super::FiniteLattice;
use crate::error::LatticeError;

pub const DEFAULT_CARATHEODORY_BOUND: usize = 16;

/// A pair `(a, b)` with `a ≺ a∨b` but `a∧b` not covered by `b`.
pub fn lower_semimodularity_violation(l: &FiniteLattice) -> Option<(usize, usize)> {
    for a in 0..l.len() {
        for b in 0..l.len() {
            if l.covers(a, l.join(a, b)) && !l.covers(l.meet(a, b), b) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_lower_semimodular(l: &FiniteLattice) -> bool {
    lower_semimodularity_violation(l).is_none()
}

/// An element `u` and a triple `(x, y, z)` of `[u_*, u]` with
/// `x∧(y∨z) ≠ (x∧y)∨(x∧z)`.
pub fn meet_distributivity_violation(l: &FiniteLattice) -> Option<(usize, [usize; 3])> {
    for u in 1..l.len() {
        let low = l.lower_star(u);
        let interval: Vec<usize> = l.ideal(u).into_iter().filter(|&x| l.leq(low, x)).collect();
        for &x in &interval {
            for &y in &interval {
                for &z in &interval {
                    if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                        return Some((u, [x, y, z]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_meet_distributive(l: &FiniteLattice) -> bool {
    meet_distributivity_violation(l).is_none()
}

/// A cover-preserving `M3` as `[u, a0, a1, a2, v]` with `u ≺ ai ≺ v` and
/// pairwise meets `u`; pairwise joins are then `v`.
pub fn cover_preserving_m3(l: &FiniteLattice) -> Option<[usize; 5]> {
    for v in 0..l.len() {
        let lc = l.lower_covers(v);
        for (i, &a0) in lc.iter().enumerate() {
            for (j, &a1) in lc.iter().enumerate().skip(i + 1) {
                let u = l.meet(a0, a1);
                if !l.covers(u, a0) || !l.covers(u, a1) {
                    continue;
                }
                for &a2 in &lc[j + 1..] {
                    if l.meet(a0, a2) == u && l.meet(a1, a2) == u && l.covers(u, a2) {
                        return Some([u, a0, a1, a2, v]);
                    }
                }
            }
        }
    }
    None
}

/// Width of `Mir L`.
pub fn convex_dimension(l: &FiniteLattice) -> WidthWitness {
    width(l, &l.mir())
}

pub fn is_dually_slim(l: &FiniteLattice) -> bool {
    convex_dimension(l).width <= 2
}

/// `a` lies below the join of `set` but below no join of at most `n` of its
/// members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaratheodoryFailure {
    pub a: usize,
    pub set: Vec<usize>,
}

/// Checks the condition that every join-irreducible below a join of
/// join-irreducibles is below a join of at most `n` of them. On failure returns
/// the first `(a, B)` found, scanning `a` in index order and `B` by size.
pub fn caratheodory(l: &FiniteLattice, n: usize, bound: usize) -> Result<Option<CaratheodoryFailure>, LatticeError> {
    let jir = l.jir();
    let k = jir.len();
    if k > bound {
        return Err(LatticeError::TooManyJoinIrreducibles { count: k, bound });
    }
    let masks = 1usize << k;
    let mut joins = vec![l.bottom(); masks];
    for mask in 1..masks {
        let low = mask.trailing_zeros() as usize;
        joins[mask] = l.join(joins[mask & (mask - 1)], jir[low]);
    }
    // masks in increasing size, then increasing value, for a canonical witness
    let mut order: Vec<usize> = (0..masks).collect();
    order.sort_by_key(|&m| (m.count_ones(), m));
    let mut good = vec![false; masks];
    for &a in &jir {
        for &mask in &order {
            let covers = l.leq(a, joins[mask]);
            let small = mask.count_ones() as usize <= n;
            // a mask is good once some subset of size at most n already covers a
            good[mask] = (covers && small) || bits(mask).any(|i| good[mask & !(1 << i)]);
            if covers && !good[mask] {
                let set = bits(mask).map(|i| jir[i]).collect();
                return Ok(Some(CaratheodoryFailure { a, set }));
            }
        }
    }
    Ok(None)
}

fn bits(mask: usize) -> impl Iterator<Item = usize> {
    (0..usize::BITS as usize).filter(move |i| mask >> i & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::*;

    #[test]
    fn semimodularity_examples() {
        assert!(is_lower_semimodular(&FiniteLattice::boolean(2)));
        assert!(is_lower_semimodular(&m3()));
        let n5 = n5();
        let (a, b) = lower_semimodularity_violation(&n5).unwrap();
        assert!(l_covers_join(&n5, a, b));
        // the listed witness: b ≺ b∨c = 1 while b∧c = 0 is not covered by c
        let b = n5.index_of("b").unwrap();
        let c = n5.index_of("c").unwrap();
        assert!(n5.covers(b, n5.join(b, c)));
        assert!(!n5.covers(n5.meet(b, c), c));
    }

    fn l_covers_join(l: &FiniteLattice, a: usize, b: usize) -> bool {
        l.covers(a, l.join(a, b)) && !l.covers(l.meet(a, b), b)
    }

    #[test]
    fn meet_distributivity_examples() {
        assert!(is_meet_distributive(&FiniteLattice::chain(5)));
        assert!(is_meet_distributive(&seven()));
        let (u, _) = meet_distributivity_violation(&m3()).unwrap();
        assert_eq!(u, m3().top());
        assert!(!is_meet_distributive(&n5()));
    }

    #[test]
    fn m3_examples() {
        let m = m3();
        assert_eq!(cover_preserving_m3(&m), Some([0, 1, 2, 3, 4]));
        assert_eq!(cover_preserving_m3(&FiniteLattice::boolean(3)), None);
        assert_eq!(cover_preserving_m3(&seven()), None);
    }

    #[test]
    fn dimension_and_slimness() {
        assert_eq!(convex_dimension(&FiniteLattice::boolean(5)).width, 5);
        assert_eq!(convex_dimension(&FiniteLattice::chain(4)).width, 1);
        assert_eq!(convex_dimension(&seven()).width, 2);
        assert!(is_dually_slim(&seven()));
        assert!(!is_dually_slim(&FiniteLattice::boolean(3)));
        assert!(!is_dually_slim(&m3()));
    }

    #[test]
    fn caratheodory_examples() {
        assert_eq!(caratheodory(&seven(), 2, 16), Ok(None));
        // boolean lattices satisfy every C_n: each atom is below the join of a set only if it is in it
        assert_eq!(caratheodory(&FiniteLattice::boolean(4), 1, 16), Ok(None));
        // M3: each atom lies below the join of the other two
        let f = caratheodory(&m3(), 1, 16).unwrap().unwrap();
        assert_eq!(f.set.len(), 2);
        assert_eq!(caratheodory(&m3(), 2, 16), Ok(None));
        assert_eq!(
            caratheodory(&FiniteLattice::boolean(4), 2, 3),
            Err(LatticeError::TooManyJoinIrreducibles { count: 4, bound: 3 })
        );
    }
}
