//! Exact predicates for circles centered on the x-axis.
//!
//! The support function of a disc centered at `(x, 0)` with radius `r` in
//! direction `(u, ±sqrt(1 - u^2))` is `x*u + r`, so containment in a hull of
//! collinear discs reduces to comparing lines over `u` in `[-1, 1]`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CollinearCircle {
    pub x: Rational,
    pub r: Rational,
}

/// Lexicographic key of a left or right end; comparing keys realizes `⊏`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndOrderKey {
    pub primary: Rational,
    pub secondary: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl CollinearCircle {
    pub fn new(x: Rational, r: Rational) -> Self {
        CollinearCircle { x, r }
    }

    pub fn from_endpoints(lmpt: &Rational, rmpt: &Rational) -> Self {
        CollinearCircle {
            x: rational::half(&(lmpt + rmpt)),
            r: rational::half(&(rmpt - lmpt)),
        }
    }

    pub fn lmpt(&self) -> Rational {
        &self.x - &self.r
    }

    pub fn rmpt(&self) -> Rational {
        &self.x + &self.r
    }

    /// `(lmpt, -r)`.
    pub fn left_end(&self) -> EndOrderKey {
        EndOrderKey {
            primary: self.lmpt(),
            secondary: -self.r.clone(),
        }
    }

    /// `(rmpt, r)`.
    pub fn right_end(&self) -> EndOrderKey {
        EndOrderKey {
            primary: self.rmpt(),
            secondary: self.r.clone(),
        }
    }

    pub fn end(&self, side: Side) -> EndOrderKey {
        match side {
            Side::Left => self.left_end(),
            Side::Right => self.right_end(),
        }
    }

    /// Reflection through the y-axis.
    pub fn mirrored(&self) -> Self {
        CollinearCircle {
            x: -self.x.clone(),
            r: self.r.clone(),
        }
    }

    /// Disc containment; for collinear discs this is containment of the
    /// `[lmpt, rmpt]` intervals.
    pub fn contains(&self, inner: &CollinearCircle) -> bool {
        self.lmpt() <= inner.lmpt() && inner.rmpt() <= self.rmpt()
    }
}

pub fn end_lt(a: &CollinearCircle, b: &CollinearCircle, side: Side) -> bool {
    a.end(side) < b.end(side)
}

pub fn end_le(a: &CollinearCircle, b: &CollinearCircle, side: Side) -> bool {
    a.end(side) <= b.end(side)
}

/// Whether the disc of `c` lies in the convex hull of the discs `a` and `b`.
///
/// The hull of two discs is the union of the interpolated discs
/// `D((1-t)a.x + t b.x, (1-t)a.r + t b.r)` for `t` in `[0, 1]`, and a disc lies in
/// that hull exactly when it lies in one interpolant. Both sides of
/// `|c.x - m(t)| <= R(t) - c.r` are linear in `t`, so this is an exact interval
/// intersection.
pub fn disc_in_hull_pair(c: &CollinearCircle, a: &CollinearCircle, b: &CollinearCircle) -> bool {
    let dx = &b.x - &a.x;
    let dr = &b.r - &a.r;
    let slack = &a.r - &c.r;
    let offset = &c.x - &a.x;
    let mut lo = Rational::zero();
    let mut hi = Rational::one();
    // c.x - m(t) <= R(t) - c.r  and  m(t) - c.x <= R(t) - c.r
    let constraints = [(-(&dx + &dr), &slack - &offset), (&dx - &dr, &slack + &offset)];
    for (coef, bound) in constraints {
        match coef.cmp(&Rational::zero()) {
            Ordering::Greater => {
                let t = bound / coef;
                if t < hi {
                    hi = t;
                }
            }
            Ordering::Less => {
                let t = bound / coef;
                if t > lo {
                    lo = t;
                }
            }
            Ordering::Equal => {
                if bound.is_negative() {
                    return false;
                }
            }
        }
    }
    lo <= hi
}

/// A line `slope * u + intercept`.
#[derive(Clone, Debug)]
struct Line {
    slope: Rational,
    intercept: Rational,
}

impl Line {
    fn at(&self, u: &Rational) -> Rational {
        &self.slope * u + &self.intercept
    }
}

/// `u` where two lines of distinct slopes cross.
fn crossing(a: &Line, b: &Line) -> Rational {
    (&b.intercept - &a.intercept) / (&a.slope - &b.slope)
}

/// Upper envelope of the support lines of `discs`, as the sequence of lines
/// that attain the maximum somewhere on the real line, by increasing slope.
fn upper_envelope<'a, I>(discs: I) -> Vec<Line>
where
    I: IntoIterator<Item = &'a CollinearCircle>,
{
    let mut lines: Vec<Line> = discs
        .into_iter()
        .map(|d| Line {
            slope: d.x.clone(),
            intercept: d.r.clone(),
        })
        .collect();
    lines.sort_by(|a, b| a.slope.cmp(&b.slope).then_with(|| b.intercept.cmp(&a.intercept)));
    lines.dedup_by(|later, earlier| later.slope == earlier.slope);

    let mut hull: Vec<Line> = Vec::with_capacity(lines.len());
    for line in lines {
        while hull.len() >= 2 {
            let n = hull.len();
            // hull[n-1] is useless if `line` overtakes hull[n-2] no later than hull[n-1] does.
            if crossing(&hull[n - 2], &line) <= crossing(&hull[n - 2], &hull[n - 1]) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(line);
    }
    hull
}

/// Upper envelope of the support lines of a set of collinear discs, sampled
/// at `u = -1`, `u = 1` and every breakpoint strictly between them.
///
/// The deficit `max_i (x_i*u + r_i) - (c.x*u + c.r)` is convex and piecewise
/// linear in `u`, so a disc lies in the hull iff the deficit is nonnegative at
/// those sample points.
#[derive(Clone, Debug)]
pub struct UpperEnvelope {
    samples: Vec<(Rational, Rational)>,
}

impl UpperEnvelope {
    pub fn new<'a, I>(discs: I) -> Self
    where
        I: IntoIterator<Item = &'a CollinearCircle>,
    {
        let lines = upper_envelope(discs);
        if lines.is_empty() {
            return UpperEnvelope { samples: Vec::new() };
        }
        let lower = -Rational::one();
        let upper = Rational::one();
        let value = |u: &Rational| lines.iter().map(|l| l.at(u)).max().expect("nonempty");
        let mut samples = Vec::with_capacity(lines.len() + 1);
        samples.push((lower.clone(), value(&lower)));
        for w in lines.windows(2) {
            let u = crossing(&w[0], &w[1]);
            if u > lower && u < upper {
                let v = w[0].at(&u);
                samples.push((u, v));
            }
        }
        samples.push((upper.clone(), value(&upper)));
        UpperEnvelope { samples }
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Whether `c` lies in the hull; `false` for an empty envelope.
    pub fn contains(&self, c: &CollinearCircle) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(|(u, env)| &(&c.x * u) + &c.r <= *env)
    }
}

/// Whether the disc of `c` lies in the convex hull of `discs`.
/// An empty `discs` yields `false`.
pub fn disc_in_hull<'a, I>(c: &CollinearCircle, discs: I) -> bool
where
    I: IntoIterator<Item = &'a CollinearCircle>,
{
    UpperEnvelope::new(discs).contains(c)
}
