//! Enumeration of small lattices up to isomorphism.
//!
//! Posets are grown one element at a time with labels forming a linear
//! extension, so each new element picks a down-closed set of earlier
//! elements as its strict lower set. A prefix is abandoned as soon as two
//! elements have two minimal common upper bounds, since later elements can
//! never sit below earlier ones.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{FiniteLattice, IsomorphismClasses};

/// Largest lattice size accepted by [`lattices_up_to`].
pub const MAX_GENERATED_SIZE: usize = 16;

/// Every lattice with at most `max_size` elements, up to isomorphism, for which
/// `keep` holds. `keep` must be an isomorphism invariant.
pub fn lattices_up_to<F>(max_size: usize, mut keep: F) -> Vec<FiniteLattice>
where
    F: FnMut(&FiniteLattice) -> bool,
{
    assert!(max_size <= MAX_GENERATED_SIZE, "at most {MAX_GENERATED_SIZE} elements");
    let mut out = Vec::new();
    for size in 1..=max_size {
        let mut classes = IsomorphismClasses::new();
        let mut emit = |down: &[u16]| {
            let l = lattice_from_down_sets(down);
            if keep(&l) {
                classes.insert(l);
            }
        };
        if size == 1 {
            emit(&[1]);
        } else {
            let mut down = Vec::with_capacity(size);
            down.push(1u16);
            grow(size, &mut down, &mut emit);
        }
        out.extend(classes.into_lattices());
    }
    out
}

fn lattice_from_down_sets(down: &[u16]) -> FiniteLattice {
    let labels = (0..down.len()).map(|i| i.to_string()).collect();
    FiniteLattice::from_order(labels, |i, j| down[j] >> i & 1 == 1).expect("generated posets are lattices")
}

/// `down[i]` holds the elements `≤ i`; element 0 is the bottom and the last
/// element added is the top.
fn grow<E: FnMut(&[u16])>(size: usize, down: &mut Vec<u16>, emit: &mut E) {
    let i = down.len();
    if i == size - 1 {
        let all = (1u16 << size) - 1;
        down.push(all);
        emit(down);
        down.pop();
        return;
    }
    // strict lower sets among the inner elements 1..i
    let inner = ((1u32 << i) - 2) as u16;
    let mut s: u16 = 0;
    loop {
        if is_down_closed(down, s) && keeps_unique_joins(down, s) {
            down.push(s | 1 | 1 << i);
            grow(size, down, emit);
            down.pop();
        }
        if s == inner {
            break;
        }
        s = (s.wrapping_sub(inner)) & inner;
    }
}

fn is_down_closed(down: &[u16], s: u16) -> bool {
    bits(s).all(|k| down[k] & !1 & !s == 0)
}

/// Adding an element above exactly `s` keeps at most one minimal common upper
/// bound for every pair below it.
fn keeps_unique_joins(down: &[u16], s: u16) -> bool {
    let members: Vec<usize> = bits(s | 1).collect();
    for (p, &a) in members.iter().enumerate() {
        for &b in &members[p + 1..] {
            let least = (0..down.len()).find(|&c| down[c] >> a & 1 == 1 && down[c] >> b & 1 == 1);
            if let Some(c) = least {
                if s >> c & 1 == 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn bits(mask: u16) -> impl Iterator<Item = usize> {
    (0..16).filter(move |i| mask >> i & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_small_lattices() {
        // number of unlabeled lattices with n elements
        let expected = [1, 1, 1, 2, 5, 15, 53];
        let all = lattices_up_to(7, |_| true);
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(all.iter().filter(|l| l.len() == n + 1).count(), count, "size {}", n + 1);
        }
    }
}
