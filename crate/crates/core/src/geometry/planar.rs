//! Tolerance-qualified hull membership for circles in general position.
//!
//! Tangent directions between circles are irrational in general, so this path
//! works in `f64`. A disc lies in the hull of a family iff its support function
//! never exceeds the upper envelope of the members' support functions
//! `h_i(θ) = cx_i cosθ + cy_i sinθ + r_i`. The minimum of the deficit
//! `max_i h_i - h_c` sits either where two members swap on the envelope or at
//! the interior minimum of one member's own deficit; both sets of angles are
//! computed in closed form and a uniform sweep is added as a safety net.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use libm::{acos, atan2, cos, hypot, sin};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatCircle {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

impl FloatCircle {
    fn support(&self, theta: f64) -> f64 {
        self.cx * cos(theta) + self.cy * sin(theta) + self.r
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanarSettings {
    /// A disc counts as contained when the deficit is at least `-tolerance`.
    pub tolerance: f64,
    /// Extra equally spaced angles checked after the candidate angles.
    pub sweep: usize,
}

impl Default for PlanarSettings {
    fn default() -> Self {
        PlanarSettings {
            tolerance: 1e-9,
            sweep: 256,
        }
    }
}

fn deficit_at(c: &FloatCircle, members: &[FloatCircle], theta: f64) -> f64 {
    let env = members
        .iter()
        .map(|m| m.support(theta))
        .fold(f64::NEG_INFINITY, f64::max);
    env - c.support(theta)
}

/// Angles where `a cosθ + b sinθ = d`.
fn solve_trig(a: f64, b: f64, d: f64, out: &mut Vec<f64>) {
    let norm = hypot(a, b);
    if norm <= f64::EPSILON {
        return;
    }
    let ratio = d / norm;
    if ratio.abs() > 1.0 + 1e-12 {
        return;
    }
    let phi = atan2(b, a);
    let spread = acos(ratio.clamp(-1.0, 1.0));
    out.push(phi + spread);
    out.push(phi - spread);
}

/// Candidate angles at which the deficit can attain its minimum.
pub fn candidate_angles(c: &FloatCircle, members: &[FloatCircle]) -> Vec<f64> {
    let mut angles = Vec::new();
    for (i, p) in members.iter().enumerate() {
        for q in &members[i + 1..] {
            solve_trig(p.cx - q.cx, p.cy - q.cy, q.r - p.r, &mut angles);
        }
        // minimum of h_p - h_c lies opposite to the center offset
        let (dx, dy) = (p.cx - c.cx, p.cy - c.cy);
        if hypot(dx, dy) > 0.0 {
            angles.push(atan2(-dy, -dx));
        } else {
            angles.push(0.0);
        }
    }
    if angles.is_empty() {
        angles.push(0.0);
    }
    angles
}

/// Minimum over all directions of `max_i h_i(θ) - h_c(θ)`, or `-inf` for an
/// empty family.
pub fn min_deficit(c: &FloatCircle, members: &[FloatCircle], sweep: usize) -> f64 {
    if members.is_empty() {
        return f64::NEG_INFINITY;
    }
    let mut best = f64::INFINITY;
    for theta in candidate_angles(c, members) {
        best = best.min(deficit_at(c, members, theta));
    }
    for k in 0..sweep {
        let theta = -PI + TAU * (k as f64) / (sweep as f64);
        best = best.min(deficit_at(c, members, theta));
    }
    best
}

pub fn disc_in_hull(c: &FloatCircle, members: &[FloatCircle], settings: &PlanarSettings) -> bool {
    min_deficit(c, members, settings.sweep) >= -settings.tolerance
}
