//! Circles, circle families, and the predicates the closure operator is built on.

pub mod collinear;
pub mod planar;

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::GeometryError;
use crate::rational::{self, Rational};
use crate::set::{MemberSet, MAX_MEMBERS};

pub use collinear::{end_le, end_lt, CollinearCircle, EndOrderKey, Side};
pub use planar::{FloatCircle, PlanarSettings};

/// A circle in the plane; radius 0 is a single point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circle {
    pub cx: Rational,
    pub cy: Rational,
    pub r: Rational,
}

impl Circle {
    pub fn new(cx: Rational, cy: Rational, r: Rational) -> Self {
        Circle { cx, cy, r }
    }

    pub fn collinear(x: Rational, r: Rational) -> Self {
        Circle {
            cx: x,
            cy: Rational::zero(),
            r,
        }
    }

    pub fn is_collinear(&self) -> bool {
        self.cy.is_zero()
    }

    /// The x-axis view; `None` when the center is off the axis.
    pub fn as_collinear(&self) -> Option<CollinearCircle> {
        self.is_collinear()
            .then(|| CollinearCircle::new(self.cx.clone(), self.r.clone()))
    }

    pub fn to_float(&self) -> FloatCircle {
        FloatCircle {
            cx: rational::to_f64(&self.cx),
            cy: rational::to_f64(&self.cy),
            r: rational::to_f64(&self.r),
        }
    }
}

impl From<CollinearCircle> for Circle {
    fn from(c: CollinearCircle) -> Self {
        Circle::collinear(c.x, c.r)
    }
}

/// Exact disc containment: `|m_outer - m_inner| + r_inner <= r_outer`,
/// compared in squared form.
pub fn disc_contains_disc(outer: &Circle, inner: &Circle) -> bool {
    let room = &outer.r - &inner.r;
    if room.is_negative() {
        return false;
    }
    let dx = &outer.cx - &inner.cx;
    let dy = &outer.cy - &inner.cy;
    &dx * &dx + &dy * &dy <= &room * &room
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Collinear,
    Planar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub id: String,
    pub circle: Circle,
}

/// An ordered, id-labeled finite set of circles.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleFamily {
    kind: FamilyKind,
    members: Vec<Member>,
    tolerance: Rational,
    sweep: usize,
}

impl CircleFamily {
    pub fn new(kind: FamilyKind, members: Vec<Member>) -> Result<Self, GeometryError> {
        if members.len() > MAX_MEMBERS {
            return Err(GeometryError::TooLarge {
                size: members.len(),
                limit: MAX_MEMBERS,
            });
        }
        for (i, m) in members.iter().enumerate() {
            if m.circle.r.is_negative() {
                return Err(GeometryError::NegativeRadius(m.id.clone()));
            }
            if kind == FamilyKind::Collinear && !m.circle.is_collinear() {
                return Err(GeometryError::NotCollinear(m.id.clone()));
            }
            if members[..i].iter().any(|o| o.id == m.id) {
                return Err(GeometryError::DuplicateId(m.id.clone()));
            }
        }
        let defaults = PlanarSettings::default();
        Ok(CircleFamily {
            kind,
            members,
            tolerance: rational::from_f64(defaults.tolerance).expect("finite"),
            sweep: defaults.sweep,
        })
    }

    pub fn collinear<I, S>(circles: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = (S, CollinearCircle)>,
        S: Into<String>,
    {
        let members = circles
            .into_iter()
            .map(|(id, c)| Member {
                id: id.into(),
                circle: c.into(),
            })
            .collect();
        Self::new(FamilyKind::Collinear, members)
    }

    pub fn planar<I, S>(circles: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = (S, Circle)>,
        S: Into<String>,
    {
        let members = circles
            .into_iter()
            .map(|(id, circle)| Member { id: id.into(), circle })
            .collect();
        Self::new(FamilyKind::Planar, members)
    }

    #[must_use]
    pub fn with_tolerance(mut self, tolerance: Rational) -> Self {
        self.tolerance = tolerance.abs();
        self
    }

    #[must_use]
    pub fn with_sweep(mut self, sweep: usize) -> Self {
        self.sweep = sweep;
        self
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn is_collinear(&self) -> bool {
        self.kind == FamilyKind::Collinear
    }

    pub fn tolerance(&self) -> &Rational {
        &self.tolerance
    }

    pub fn planar_settings(&self) -> PlanarSettings {
        PlanarSettings {
            tolerance: rational::to_f64(&self.tolerance),
            sweep: self.sweep,
        }
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn all(&self) -> MemberSet {
        MemberSet::full(self.len())
    }

    pub fn id(&self, index: usize) -> &str {
        &self.members[index].id
    }

    pub fn circle(&self, index: usize) -> &Circle {
        &self.members[index].circle
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.members.iter().position(|m| m.id == id)
    }

    pub fn subset_of_ids<'a, I>(&self, ids: I) -> Result<MemberSet, GeometryError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        ids.into_iter().try_fold(MemberSet::EMPTY, |set, id| {
            self.index_of(id)
                .map(|i| set.with(i))
                .ok_or_else(|| GeometryError::UnknownId(id.into()))
        })
    }

    pub fn ids_of(&self, set: MemberSet) -> Vec<&str> {
        set.iter().map(|i| self.id(i)).collect()
    }

    /// Collinear view of every member. Panics on a planar family.
    pub fn collinear_circles(&self) -> Vec<CollinearCircle> {
        assert!(self.is_collinear(), "collinear view of a planar family");
        self.members
            .iter()
            .map(|m| m.circle.as_collinear().expect("collinear member"))
            .collect()
    }

    fn require_collinear(&self, err: GeometryError) -> Result<Vec<CollinearCircle>, GeometryError> {
        if self.is_collinear() {
            Ok(self.collinear_circles())
        } else {
            Err(err)
        }
    }

    /// Whether `c` lies in the convex hull of the members in `subset`.
    ///
    /// Exact in collinear mode (where `c` must be collinear too); within the
    /// family tolerance in planar mode.
    pub fn disc_in_hull(&self, c: &Circle, subset: MemberSet) -> Result<bool, GeometryError> {
        if subset.is_empty() {
            return Err(GeometryError::EmptyHull);
        }
        match self.kind {
            FamilyKind::Collinear => {
                let query = c
                    .as_collinear()
                    .ok_or_else(|| GeometryError::NotCollinear("query".into()))?;
                let discs: Vec<CollinearCircle> = subset
                    .iter()
                    .map(|i| self.members[i].circle.as_collinear().expect("collinear member"))
                    .collect();
                Ok(collinear::disc_in_hull(&query, &discs))
            }
            FamilyKind::Planar => {
                let discs: Vec<FloatCircle> = subset.iter().map(|i| self.members[i].circle.to_float()).collect();
                Ok(planar::disc_in_hull(&c.to_float(), &discs, &self.planar_settings()))
            }
        }
    }

    /// Hull membership against the whole family.
    pub fn disc_in_hull_family(&self, c: &Circle) -> Result<bool, GeometryError> {
        self.disc_in_hull(c, self.all())
    }

    pub fn is_separated(&self) -> Result<bool, GeometryError> {
        let circles = self.require_collinear(GeometryError::SeparatedNeedsCollinear)?;
        Ok(separation_violation(&circles).is_none())
    }

    /// First ordered triple `(C1, C2, C3)` with `lend C1 ⊑ lend C2`,
    /// `rend C2 ⊑ rend C3` and `C2` outside the hull of `C1 ∪ C3`.
    pub fn concavity_violation(&self) -> Result<Option<[usize; 3]>, GeometryError> {
        let circles = self.require_collinear(GeometryError::ConcaveNeedsCollinear)?;
        Ok(concavity_violation(&circles))
    }

    pub fn is_concave(&self) -> Result<bool, GeometryError> {
        Ok(self.concavity_violation()?.is_none())
    }
}

/// A pair of distinct circles sharing an endpoint value.
pub fn separation_violation(circles: &[CollinearCircle]) -> Option<(usize, usize)> {
    for (i, a) in circles.iter().enumerate() {
        for (j, b) in circles.iter().enumerate().skip(i + 1) {
            let pts = [a.lmpt(), a.rmpt(), b.lmpt(), b.rmpt()];
            let distinct = (0..4).all(|p| (p + 1..4).all(|q| pts[p] != pts[q]));
            if !distinct {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn concavity_violation(circles: &[CollinearCircle]) -> Option<[usize; 3]> {
    let n = circles.len();
    for i in 0..n {
        for j in 0..n {
            if !end_le(&circles[i], &circles[j], Side::Left) {
                continue;
            }
            for k in 0..n {
                if end_le(&circles[j], &circles[k], Side::Right)
                    && !collinear::disc_in_hull_pair(&circles[j], &circles[i], &circles[k])
                {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// Concavity in the leftmost/rightmost point form, valid for separated families.
pub fn concavity_violation_by_points(circles: &[CollinearCircle]) -> Option<[usize; 3]> {
    let n = circles.len();
    for i in 0..n {
        for j in 0..n {
            if circles[i].lmpt() >= circles[j].lmpt() {
                continue;
            }
            for k in 0..n {
                if circles[j].rmpt() < circles[k].rmpt()
                    && !collinear::disc_in_hull_pair(&circles[j], &circles[i], &circles[k])
                {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}
