//! Named example families and seeded random generators.

use circgeo_core::closure::{enumerate_closed_sets, IntervalSystem};
use circgeo_core::geometry::{Circle, CircleFamily, CollinearCircle, FamilyKind, Member};
use circgeo_core::lattice::FiniteLattice;
use circgeo_core::rational::{self, frac, int, Rational};
use circgeo_core::synthesis::{repair_circles, DEFAULT_REPAIR_CAP};
use circgeo_core::MemberSet;
use rand::Rng;

/// Collinear circles internally tangent to the circle of radius 25 centered
/// at `(0, 12)`. Every member is extreme, so the closed sets form the boolean
/// lattice `2^n`. Supports `n ≤ 7`.
pub fn tangent_to_k(n: usize) -> CircleFamily {
    assert!(n <= 7, "at most 7 tangent circles");
    // |x|, and 25 - sqrt(x^2 + 144)
    let mut picks: Vec<(i64, i64)> = [(0, 13), (5, 12), (-5, 12), (9, 10), (-9, 10), (16, 5), (-16, 5)][..n].to_vec();
    picks.sort_unstable();
    CircleFamily::collinear(
        picks
            .into_iter()
            .enumerate()
            .map(|(i, (x, r))| (format!("C{}", i + 1), CollinearCircle::new(int(x), int(r)))),
    )
    .expect("valid family")
}

/// The inscribed circle of a regular `(n+1)`-gon with circumradius 1, plus a
/// circle of radius 1/100 at each vertex.
pub fn inscribed_polygon(n: usize) -> CircleFamily {
    let k = n + 1;
    let q = |v: f64| rational::from_f64(v).expect("finite");
    let step = 2.0 * std::f64::consts::PI / k as f64;
    let mut members = vec![Member {
        id: "I".into(),
        circle: Circle::new(int(0), int(0), q((std::f64::consts::PI / k as f64).cos())),
    }];
    for i in 0..k {
        let theta = std::f64::consts::FRAC_PI_2 + step * i as f64;
        members.push(Member {
            id: format!("V{i}"),
            circle: Circle::new(q(theta.cos()), q(theta.sin()), frac(1, 100)),
        });
    }
    CircleFamily::new(FamilyKind::Planar, members).expect("valid family")
}

/// Three points of a triangle and its barycenter, as radius-0 circles.
pub fn triangle_barycenter() -> CircleFamily {
    let p = |x: i64, y: i64| Circle::new(int(x), int(y), int(0));
    CircleFamily::planar([("A", p(0, 0)), ("B", p(6, 0)), ("C", p(0, 6)), ("G", p(2, 2))]).expect("valid family")
}

/// Two concentric collinear circles.
pub fn concentric_pair() -> CircleFamily {
    CircleFamily::collinear([
        ("outer", CollinearCircle::new(int(0), int(2))),
        ("inner", CollinearCircle::new(int(0), int(1))),
    ])
    .expect("valid family")
}

fn grid<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    frac(rng.random_range(lo * den..=hi * den), den)
}

fn collinear_from(circles: Vec<CollinearCircle>) -> CircleFamily {
    CircleFamily::collinear(circles.into_iter().enumerate().map(|(i, c)| (format!("c{i}"), c))).expect("valid family")
}

/// `n` distinct collinear circles with centers in `[-10, 10]` and radii in
/// `[0, 6]`, on a half-integer grid.
pub fn random_collinear<R: Rng>(rng: &mut R, n: usize) -> CircleFamily {
    let mut circles: Vec<CollinearCircle> = Vec::with_capacity(n);
    while circles.len() < n {
        let c = CollinearCircle::new(grid(rng, -10, 10, 2), grid(rng, 0, 6, 2));
        if !circles.contains(&c) {
            circles.push(c);
        }
    }
    collinear_from(circles)
}

/// `n` distinct planar circles with centers in `[-6, 6]²` and radii in
/// `[0, 4]`, on a half-integer grid.
pub fn random_planar<R: Rng>(rng: &mut R, n: usize) -> CircleFamily {
    let mut circles: Vec<Circle> = Vec::with_capacity(n);
    while circles.len() < n {
        let c = Circle::new(grid(rng, -6, 6, 2), grid(rng, -6, 6, 2), grid(rng, 0, 4, 2));
        if !circles.contains(&c) {
            circles.push(c);
        }
    }
    CircleFamily::planar(circles.into_iter().enumerate().map(|(i, c)| (format!("p{i}"), c))).expect("valid family")
}

/// `n` distinct radius-0 points on the integer grid `[0, 6]²`.
pub fn random_grid_points<R: Rng>(rng: &mut R, n: usize) -> CircleFamily {
    let mut circles: Vec<Circle> = Vec::with_capacity(n);
    while circles.len() < n {
        let c = Circle::new(int(rng.random_range(0..=6)), int(rng.random_range(0..=6)), int(0));
        if !circles.contains(&c) {
            circles.push(c);
        }
    }
    CircleFamily::planar(circles.into_iter().enumerate().map(|(i, c)| (format!("p{i}"), c))).expect("valid family")
}

/// A concave collinear family of `n` circles grown one circle at a time: each
/// new circle starts at a random left endpoint and reaches past every earlier
/// right endpoint, then is enlarged by [`repair_circles`]. Growth restarts
/// whenever the result is not concave, not separated or repeats a circle.
pub fn random_concave<R: Rng>(rng: &mut R, n: usize) -> CircleFamily {
    'restart: loop {
        let mut circles: Vec<CollinearCircle> = Vec::with_capacity(n);
        while circles.len() < n {
            let lmpt = grid(rng, -8, 8, 2);
            let reach = circles
                .iter()
                .map(CollinearCircle::rmpt)
                .max()
                .unwrap_or_else(|| lmpt.clone());
            let rmpt = reach.max(lmpt.clone()) + grid(rng, 0, 3, 2) + frac(1, 4);
            let start = CollinearCircle::from_endpoints(&lmpt, &rmpt);
            let Ok(outcome) = repair_circles(&circles, &start, DEFAULT_REPAIR_CAP) else {
                continue 'restart;
            };
            circles.push(outcome.circle);
            let fam = collinear_from(circles.clone());
            if circles[..circles.len() - 1].contains(circles.last().unwrap())
                || !fam.is_concave().expect("collinear")
                || !fam.is_separated().expect("collinear")
            {
                continue 'restart;
            }
        }
        return collinear_from(circles);
    }
}

/// The closed-set lattice of `k` random intervals whose `2k` endpoints are
/// distinct integers in `[0, 4k]`. Such lattices are exactly the dually slim
/// lower semimodular ones.
pub fn random_interval_lattice<R: Rng>(rng: &mut R, k: usize) -> FiniteLattice {
    let hi = 4 * k as i64;
    let mut used: Vec<i64> = Vec::with_capacity(2 * k);
    let mut intervals: Vec<(Rational, Rational)> = Vec::with_capacity(k);
    while intervals.len() < k {
        let a = rng.random_range(0..hi);
        let b = rng.random_range(a + 1..=hi);
        if !used.contains(&a) && !used.contains(&b) {
            used.extend([a, b]);
            intervals.push((int(a), int(b)));
        }
    }
    let sys = IntervalSystem::new(intervals);
    let cs = enumerate_closed_sets(&sys, k).expect("small");
    FiniteLattice::from_closed_sets(&cs, set_label).expect("closed sets form a lattice")
}

/// `{a,b}` style label of a member set, by index.
pub fn set_label(s: MemberSet) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
