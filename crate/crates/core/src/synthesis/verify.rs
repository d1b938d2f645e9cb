use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::Representation;
use crate::closure::{enumerate_closed_sets, ClosureSystem, FamilyClosure, IntervalSystem};
use crate::error::SynthesisError;
use crate::geometry::{concavity_violation, end_lt, separation_violation, CollinearCircle, Side};
use crate::lattice::{extend_jir_bijection, horizontal_betweenness_violation, is_isomorphic, FiniteLattice};
use crate::rational::Rational;
use crate::set::{MemberSet, MAX_MEMBERS};

/// Outcome of [`verify_representation`]; every `Option` is a failure witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepresentationReport {
    /// `psi` is a bijection from `Jir L` onto the members.
    pub psi_bijective: bool,
    /// `(u, v)` where `u ≤ v` disagrees with containment of their circles.
    pub order: Option<(String, String)>,
    /// `(u, v)` where incomparability disagrees with both end orders agreeing strictly.
    pub sides: Option<(String, String)>,
    /// `(x0, x1, y)` with `y ≤ x0∨x1` but `psi(y)` not between.
    pub betweenness: Option<[String; 3]>,
    /// Two members sharing an endpoint value.
    pub separation: Option<(String, String)>,
    /// `(C1, C2, C3)` violating concavity.
    pub concavity: Option<[String; 3]>,
    /// The closed-set lattice of the family is isomorphic to `L`.
    pub isomorphic: bool,
    /// The isomorphism is the extension of `psi` by joins.
    pub psi_extends: bool,
}

impl RepresentationReport {
    pub fn is_ok(&self) -> bool {
        self.psi_bijective
            && self.order.is_none()
            && self.sides.is_none()
            && self.betweenness.is_none()
            && self.separation.is_none()
            && self.concavity.is_none()
            && self.isomorphic
            && self.psi_extends
    }
}

/// Checks a representation of `l` independently of how it was built.
pub fn verify_representation(rep: &Representation, l: &FiniteLattice) -> Result<RepresentationReport, SynthesisError> {
    let family = &rep.family;
    let circles = family.collinear_circles();
    let jir = l.jir();
    let mut report = RepresentationReport::default();

    let mut element_seen = vec![false; l.len()];
    let mut member_seen = vec![false; family.len()];
    report.psi_bijective = rep.psi.len() == jir.len()
        && rep.psi.len() == family.len()
        && rep.psi.iter().all(|&(u, i)| {
            let fresh = u < l.len() && i < family.len() && !element_seen[u] && !member_seen[i];
            if fresh {
                element_seen[u] = true;
                member_seen[i] = true;
            }
            fresh && l.is_join_irreducible(u)
        });

    let name = |u: usize| l.label(u).to_string();
    let psi = |u: usize| rep.psi.iter().find(|&&(x, _)| x == u).map(|&(_, i)| i);
    if report.psi_bijective {
        let left_of = |a: &CollinearCircle, b: &CollinearCircle| end_lt(a, b, Side::Left) && end_lt(a, b, Side::Right);
        'pairs: for &u in &jir {
            for &v in &jir {
                let (a, b) = (&circles[psi(u).unwrap()], &circles[psi(v).unwrap()]);
                if l.leq(u, v) != b.contains(a) {
                    report.order.get_or_insert((name(u), name(v)));
                }
                let parallel = !l.comparable(u, v);
                if u != v && parallel != (left_of(a, b) || left_of(b, a)) {
                    report.sides.get_or_insert((name(u), name(v)));
                }
                if report.order.is_some() && report.sides.is_some() {
                    break 'pairs;
                }
            }
        }
        let by_jir: Vec<CollinearCircle> = jir.iter().map(|&u| circles[psi(u).unwrap()].clone()).collect();
        report.betweenness = horizontal_betweenness_violation(l, &by_jir).map(|w| w.map(name));
    }

    report.separation =
        separation_violation(&circles).map(|(i, j)| (family.id(i).to_string(), family.id(j).to_string()));
    report.concavity = concavity_violation(&circles).map(|w| w.map(|i| family.id(i).to_string()));

    let sys = FamilyClosure::new(family);
    let cs = enumerate_closed_sets(&sys, MAX_MEMBERS)?;
    let lat = FiniteLattice::from_closed_sets(&cs, |s| format!("{:x}", s.0))?;
    report.isomorphic = is_isomorphic(l, &lat).is_some();
    if report.psi_bijective {
        let pairs: Vec<(usize, usize)> = rep
            .psi
            .iter()
            .map(|&(u, i)| {
                let set = sys.closure(MemberSet::singleton(i));
                (u, lat.index_of(&format!("{:x}", set.0)).expect("closure is closed"))
            })
            .collect();
        report.psi_extends = extend_jir_bijection(l, &lat, &pairs).is_some();
    }
    Ok(report)
}

/// Each member `C` as the interval `[lmpt C, rmpt C]`, by id.
pub fn interval_projection(rep: &Representation) -> Vec<(String, Rational, Rational)> {
    rep.family
        .members()
        .iter()
        .map(|m| {
            let c = m.circle.as_collinear().expect("collinear member");
            (m.id.clone(), c.lmpt(), c.rmpt())
        })
        .collect()
}

/// The closure system of the projected intervals, members in family order.
pub fn interval_system(rep: &Representation) -> IntervalSystem {
    IntervalSystem::new(interval_projection(rep).into_iter().map(|(_, l, r)| (l, r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::CircleFamily;
    use crate::rational::int;
    use crate::synthesis::synthesize;

    #[test]
    fn projection_examples() {
        let fam = CircleFamily::collinear([
            ("a", CollinearCircle::new(int(0), int(3))),
            ("b", CollinearCircle::new(int(0), int(2))),
            ("c", CollinearCircle::new(int(0), int(1))),
        ])
        .unwrap();
        let rep = Representation {
            family: fam,
            psi: Vec::new(),
        };
        let p = interval_projection(&rep);
        assert_eq!(p[0], ("a".to_string(), int(-3), int(3)));
        assert_eq!(p[2], ("c".to_string(), int(-1), int(1)));
    }

    #[test]
    fn shrunk_circle_breaks_order() {
        let l = FiniteLattice::chain(3);
        let (mut rep, _) = synthesize(&l).unwrap();
        assert!(verify_representation(&rep, &l).unwrap().is_ok());
        // shrink the outer circle inside the inner one
        let mut circles: Vec<(String, CollinearCircle)> = rep
            .family
            .members()
            .iter()
            .map(|m| (m.id.clone(), m.circle.as_collinear().unwrap()))
            .collect();
        circles[1].1 = CollinearCircle::new(int(0), crate::rational::frac(1, 2));
        rep.family = CircleFamily::collinear(circles).unwrap();
        let report = verify_representation(&rep, &l).unwrap();
        assert!(report.order.is_some());
        assert!(!report.is_ok());
    }

    #[test]
    fn non_concave_family_is_reported() {
        // two small circles whose hull misses the middle one
        let fam = CircleFamily::collinear([
            ("a", CollinearCircle::new(int(0), int(1))),
            ("b", CollinearCircle::new(int(5), int(3))),
            ("c", CollinearCircle::new(int(10), int(1))),
        ])
        .unwrap();
        let l = FiniteLattice::boolean(3);
        let rep = Representation {
            family: fam,
            psi: Vec::new(),
        };
        let report = verify_representation(&rep, &l).unwrap();
        assert_eq!(
            report.concavity,
            Some(["a".to_string(), "b".to_string(), "c".to_string()])
        );
        assert!(!report.psi_bijective);
    }
}
