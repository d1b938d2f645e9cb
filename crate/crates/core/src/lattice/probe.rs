use alloc::vec::Vec;

use super::analysis::{is_dually_slim, is_lower_semimodular};
use super::FiniteLattice;
use crate::closure::ClosureSystem;
use crate::error::LatticeError;
use crate::geometry::{end_lt, CollinearCircle, Side};
use crate::set::{MemberSet, MAX_MEMBERS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublyIrreducibleProbe {
    pub element: usize,
    pub filter_is_chain: bool,
    /// The complement of the filter is nonempty and closed under joins.
    pub filter_is_prime: bool,
}

impl DoublyIrreducibleProbe {
    pub fn passes(&self) -> bool {
        self.filter_is_chain && self.filter_is_prime
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralProbe {
    pub probes: Vec<DoublyIrreducibleProbe>,
    /// Whether the lattice is dually slim and lower semimodular, in which case
    /// the list is nonempty and every probe passes.
    pub in_hypothesis: bool,
}

impl StructuralProbe {
    pub fn all_pass(&self) -> bool {
        self.probes.iter().all(DoublyIrreducibleProbe::passes)
    }
}

/// The maximal doubly irreducible elements, each with its filter tested for
/// being a chain and a prime filter. Empty for lattices with fewer than three
/// elements.
pub fn structural_probe(l: &FiniteLattice) -> StructuralProbe {
    let in_hypothesis = is_dually_slim(l) && is_lower_semimodular(l);
    if l.len() < 3 {
        return StructuralProbe {
            probes: Vec::new(),
            in_hypothesis,
        };
    }
    let doubly = l.doubly_irreducible();
    let probes: Vec<DoublyIrreducibleProbe> = doubly
        .iter()
        .copied()
        .filter(|&d| !doubly.iter().any(|&e| l.lt(d, e)))
        .map(|b| DoublyIrreducibleProbe {
            element: b,
            filter_is_chain: filter_is_chain(l, b),
            filter_is_prime: filter_is_prime(l, b),
        })
        .collect();
    let probe = StructuralProbe { probes, in_hypothesis };
    if in_hypothesis {
        assert!(
            !probe.probes.is_empty() && probe.all_pass(),
            "dually slim lower semimodular lattice failed the structural probe"
        );
    }
    probe
}

pub fn filter_is_chain(l: &FiniteLattice, b: usize) -> bool {
    let f = l.filter(b);
    f.iter().all(|&x| f.iter().all(|&y| l.comparable(x, y)))
}

pub fn filter_is_prime(l: &FiniteLattice, b: usize) -> bool {
    let rest: Vec<usize> = (0..l.len()).filter(|&x| !l.leq(b, x)).collect();
    !rest.is_empty() && rest.iter().all(|&x| rest.iter().all(|&y| !l.leq(b, l.join(x, y))))
}

/// The convex geometry on `Jir L` whose closed sets are `Jir ∩ ↓x`.
#[derive(Clone, Debug)]
pub struct JoinIrreducibleGeometry<'a> {
    lattice: &'a FiniteLattice,
    jir: Vec<usize>,
}

impl<'a> JoinIrreducibleGeometry<'a> {
    pub fn new(lattice: &'a FiniteLattice) -> Result<Self, LatticeError> {
        let jir = lattice.jir();
        if jir.len() > MAX_MEMBERS {
            return Err(LatticeError::TooManyJoinIrreducibles {
                count: jir.len(),
                bound: MAX_MEMBERS,
            });
        }
        Ok(JoinIrreducibleGeometry { lattice, jir })
    }

    /// Ground set position `i` stands for the lattice element `jir()[i]`.
    pub fn jir(&self) -> &[usize] {
        &self.jir
    }

    /// The closed set representing `x`.
    pub fn closed_set_of(&self, x: usize) -> MemberSet {
        self.jir
            .iter()
            .enumerate()
            .filter(|&(_, &j)| self.lattice.leq(j, x))
            .map(|(i, _)| i)
            .collect()
    }
}

impl ClosureSystem for JoinIrreducibleGeometry<'_> {
    fn ground_size(&self) -> usize {
        self.jir.len()
    }

    fn closure(&self, set: MemberSet) -> MemberSet {
        let top = self.lattice.join_all(set.iter().map(|i| self.jir[i]));
        self.closed_set_of(top)
    }
}

/// Checks, for circles `psi[i]` assigned to `l.jir()[i]`, that every
/// 3-antichain `{x0, x1, y}` of join-irreducibles with `y ≤ x0∨x1` has `psi(y)`
/// strictly between `psi(x0)` and `psi(x1)` in both end orders. Returns a
/// violating `(x0, x1, y)` as lattice elements.
pub fn horizontal_betweenness_violation(l: &FiniteLattice, psi: &[CollinearCircle]) -> Option<[usize; 3]> {
    let jir = l.jir();
    assert_eq!(jir.len(), psi.len(), "one circle per join-irreducible");
    let left_of = |u: usize, v: usize| end_lt(&psi[u], &psi[v], Side::Left) && end_lt(&psi[u], &psi[v], Side::Right);
    let k = jir.len();
    for p in 0..k {
        for q in p + 1..k {
            if l.comparable(jir[p], jir[q]) {
                continue;
            }
            let j = l.join(jir[p], jir[q]);
            for y in 0..k {
                if y == p || y == q || l.comparable(jir[y], jir[p]) || l.comparable(jir[y], jir[q]) {
                    continue;
                }
                if l.leq(jir[y], j) && !((left_of(p, y) && left_of(y, q)) || (left_of(q, y) && left_of(y, p))) {
                    return Some([jir[p], jir[q], jir[y]]);
                }
            }
        }
    }
    None
}
