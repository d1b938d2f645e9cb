//! Collinear circle families realizing dually slim, lower semimodular lattices.
//!
//! The lattice is taken apart from the top: a maximal doubly irreducible `c`
//! with a prime chain filter is removed together with its filter, the rest is
//! realized recursively, and a circle for `c` is inserted so that it contains
//! the circles of the join-irreducibles below `c` and lies to the right of
//! the others. Chains become concentric circles. Insertions may also happen
//! on the left, by mirroring. Every step is checked against the lattice, and
//! failed choices are retried with other elements and sides.

mod verify;

pub use verify::{interval_projection, interval_system, verify_representation, RepresentationReport};

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;

use crate::closure::{enumerate_closed_sets, ClosureSystem, FamilyClosure};
use crate::error::SynthesisError;
use crate::geometry::collinear::disc_in_hull_pair;
use crate::geometry::{CircleFamily, CollinearCircle, Side};
use crate::lattice::{extend_jir_bijection, filter_is_prime, is_dually_slim, is_lower_semimodular, FiniteLattice};
use crate::rational::{self, Rational};
use crate::set::{MemberSet, MAX_MEMBERS};

pub const DEFAULT_REPAIR_CAP: u32 = 64;
pub const DEFAULT_ATTEMPT_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisConfig {
    /// Maximum number of doublings of `rmpt - lmpt` in one repair.
    pub repair_cap: u32,
    /// Maximum number of insertion attempts before giving up.
    pub attempt_budget: usize,
    /// Also try inserting on the left when the right fails.
    pub mirror_insertions: bool,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        SynthesisConfig {
            repair_cap: DEFAULT_REPAIR_CAP,
            attempt_budget: DEFAULT_ATTEMPT_BUDGET,
            mirror_insertions: true,
        }
    }
}

/// One circle of the concentric base chain, centered at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCircle {
    pub element: String,
    pub radius: Rational,
}

/// One insertion. Coordinates are in the insertion frame, which is the plane
/// itself for [`Side::Right`] and its mirror image `x ↦ -x` for [`Side::Left`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisStep {
    pub element: String,
    pub side: Side,
    /// Join-irreducibles of the smaller lattice below `element`.
    pub below: Vec<String>,
    /// The remaining join-irreducibles of the smaller lattice.
    pub left: Vec<String>,
    /// `(max lmpt over left, min lmpt over below)`; `None` for an empty side.
    pub gap: (Option<Rational>, Option<Rational>),
    pub lmpt: Rational,
    pub rmpt_initial: Rational,
    pub rmpt: Rational,
    pub repair_iterations: u32,
}

impl SynthesisStep {
    /// The inserted circle in plane coordinates.
    pub fn circle(&self) -> CollinearCircle {
        let c = CollinearCircle::from_endpoints(&self.lmpt, &self.rmpt);
        match self.side {
            Side::Right => c,
            Side::Left => c.mirrored(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SynthesisTrace {
    pub base: Vec<BaseCircle>,
    /// Insertions in the order they are applied.
    pub steps: Vec<SynthesisStep>,
    /// Abandoned `(element, side)` choices.
    pub backtracks: usize,
}

/// A circle family with a bijection from the join-irreducibles of a lattice
/// onto its members.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub family: CircleFamily,
    /// `(lattice element, member index)` pairs, sorted by element.
    pub psi: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairOutcome {
    pub circle: CollinearCircle,
    pub iterations: u32,
}

/// Enlarges `c` with its left endpoint fixed, doubling `rmpt - lmpt`, until
/// every `C2` of `existing` lies in the hull of `C1 ∪ c` whenever
/// `lmpt C1 < lmpt C2`. On failure returns the offending `(C1, C2)` indices.
pub fn repair_circles(
    existing: &[CollinearCircle],
    c: &CollinearCircle,
    cap: u32,
) -> Result<RepairOutcome, (usize, usize)> {
    let lmpt = c.lmpt();
    let mut rmpt = c.rmpt();
    let mut iterations = 0;
    loop {
        let candidate = CollinearCircle::from_endpoints(&lmpt, &rmpt);
        let offending = existing.iter().enumerate().find_map(|(i, c1)| {
            existing
                .iter()
                .enumerate()
                .find_map(|(j, c2)| (c1.lmpt() < c2.lmpt() && !disc_in_hull_pair(c2, c1, &candidate)).then_some((i, j)))
        });
        match offending {
            None => {
                return Ok(RepairOutcome {
                    circle: candidate,
                    iterations,
                })
            }
            Some(pair) if iterations == cap => return Err(pair),
            Some(_) => {
                rmpt = &lmpt + (&rmpt - &lmpt) * rational::int(2);
                iterations += 1;
            }
        }
    }
}

/// [`repair_circles`] against the members of a collinear family.
pub fn concavity_repair(family: &CircleFamily, c: &CollinearCircle, cap: u32) -> Result<RepairOutcome, SynthesisError> {
    let existing = family.collinear_circles();
    repair_circles(&existing, c, cap).map_err(|(i, j)| SynthesisError::RepairCapExceeded {
        circle: "new".to_string(),
        outer: family.id(i).to_string(),
        inner: family.id(j).to_string(),
        cap,
    })
}

#[derive(Clone, Debug)]
struct Partial {
    labels: Vec<String>,
    circles: Vec<CollinearCircle>,
    base: Vec<BaseCircle>,
    steps: Vec<SynthesisStep>,
}

impl Partial {
    fn trace(&self, backtracks: usize) -> SynthesisTrace {
        SynthesisTrace {
            base: self.base.clone(),
            steps: self.steps.clone(),
            backtracks,
        }
    }

    fn representation(&self, l: &FiniteLattice) -> Result<Representation, SynthesisError> {
        let family = CircleFamily::collinear(self.labels.iter().cloned().zip(self.circles.iter().cloned()))?;
        let mut psi: Vec<(usize, usize)> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, label)| {
                l.index_of(label)
                    .map(|x| (x, i))
                    .ok_or_else(|| SynthesisError::Replay(format!("unknown element {label:?}")))
            })
            .collect::<Result<_, _>>()?;
        psi.sort_unstable();
        Ok(Representation { family, psi })
    }
}

fn chain_base(l: &FiniteLattice) -> Partial {
    let base: Vec<BaseCircle> = l
        .jir()
        .into_iter()
        .enumerate()
        .map(|(i, x)| BaseCircle {
            element: l.label(x).to_string(),
            radius: rational::int(i as i64 + 1),
        })
        .collect();
    Partial {
        labels: base.iter().map(|b| b.element.clone()).collect(),
        circles: base
            .iter()
            .map(|b| CollinearCircle::new(rational::zero(), b.radius.clone()))
            .collect(),
        base,
        steps: Vec::new(),
    }
}

/// Elements whose removal with their filter leaves a lattice with one
/// join-irreducible fewer: the top when it is join-irreducible, and otherwise
/// the maximal doubly irreducible elements with prime filters, by height and
/// label.
fn candidates(l: &FiniteLattice) -> Vec<usize> {
    if l.is_join_irreducible(l.top()) {
        return alloc::vec![l.top()];
    }
    let doubly = l.doubly_irreducible();
    let mut out: Vec<usize> = doubly
        .iter()
        .copied()
        .filter(|&d| !doubly.iter().any(|&e| l.lt(d, e)) && filter_is_prime(l, d))
        .collect();
    out.sort_by(|&a, &b| (l.height(a), l.label(a)).cmp(&(l.height(b), l.label(b))));
    out
}

/// `L ∖ ↑c` for a prime filter `↑c`, as the principal ideal it forms.
fn remove_filter(l: &FiniteLattice, c: usize) -> FiniteLattice {
    let top = l.join_all((0..l.len()).filter(|&x| !l.leq(c, x)));
    l.interval(l.bottom(), top)
}

struct Plan {
    gap: (Option<Rational>, Option<Rational>),
    lmpt: Rational,
    rmpt_initial: Rational,
    outcome: RepairOutcome,
}

/// Chooses the new circle in the insertion frame; `None` when the left
/// endpoints of `left` do not all precede those of `below`.
fn plan_insertion(
    frame: &[CollinearCircle],
    labels: &[String],
    below: &[usize],
    left: &[usize],
    element: &str,
    cap: u32,
) -> Result<Option<Plan>, SynthesisError> {
    let lo = left.iter().map(|&i| frame[i].lmpt()).max();
    let hi = below.iter().map(|&i| frame[i].lmpt()).min();
    let two = rational::int(2);
    let (a, b) = match (&lo, &hi) {
        (Some(a), Some(b)) if a >= b => return Ok(None),
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        (Some(a), None) => (a.clone(), a + &two),
        (None, Some(b)) => (b - &two, b.clone()),
        (None, None) => (-Rational::one(), Rational::one()),
    };
    let endpoints: Vec<Rational> = frame.iter().flat_map(|c| [c.lmpt(), c.rmpt()]).collect();
    let mut lmpt = rational::half(&(&a + &b));
    while endpoints.contains(&lmpt) {
        lmpt = rational::half(&(&a + &lmpt));
    }
    let top = frame
        .iter()
        .map(CollinearCircle::rmpt)
        .max()
        .unwrap_or_else(rational::zero);
    let rmpt_initial = core::cmp::max(top, lmpt.clone()) + Rational::one();
    let start = CollinearCircle::from_endpoints(&lmpt, &rmpt_initial);
    let outcome = repair_circles(frame, &start, cap).map_err(|(i, j)| SynthesisError::RepairCapExceeded {
        circle: element.to_string(),
        outer: labels[i].clone(),
        inner: labels[j].clone(),
        cap,
    })?;
    Ok(Some(Plan {
        gap: (lo, hi),
        lmpt,
        rmpt_initial,
        outcome,
    }))
}

/// Adds a circle for `c` to a realization of `L ∖ ↑c`.
fn insert(l: &FiniteLattice, c: usize, side: Side, p: &Partial, cap: u32) -> Result<Option<Partial>, SynthesisError> {
    let mut below = Vec::new();
    let mut left = Vec::new();
    for (i, label) in p.labels.iter().enumerate() {
        let y = l
            .index_of(label)
            .ok_or_else(|| SynthesisError::Replay(format!("unknown element {label:?}")))?;
        if l.leq(y, c) {
            below.push(i);
        } else {
            left.push(i);
        }
    }
    let frame: Vec<CollinearCircle> = match side {
        Side::Right => p.circles.clone(),
        Side::Left => p.circles.iter().map(CollinearCircle::mirrored).collect(),
    };
    let Some(plan) = plan_insertion(&frame, &p.labels, &below, &left, l.label(c), cap)? else {
        return Ok(None);
    };
    let step = SynthesisStep {
        element: l.label(c).to_string(),
        side,
        below: below.iter().map(|&i| p.labels[i].clone()).collect(),
        left: left.iter().map(|&i| p.labels[i].clone()).collect(),
        gap: plan.gap,
        lmpt: plan.lmpt,
        rmpt_initial: plan.rmpt_initial,
        rmpt: plan.outcome.circle.rmpt(),
        repair_iterations: plan.outcome.iterations,
    };
    let mut q = p.clone();
    q.labels.push(step.element.clone());
    q.circles.push(step.circle());
    q.steps.push(step);
    Ok(Some(q))
}

/// Whether `circles[i]` for `labels[i]` ranging over `Jir L` realize `L`.
fn realizes(l: &FiniteLattice, labels: &[String], circles: &[CollinearCircle]) -> Result<bool, SynthesisError> {
    let family = CircleFamily::collinear(labels.iter().cloned().zip(circles.iter().cloned()))?;
    let sys = FamilyClosure::new(&family);
    let cs = enumerate_closed_sets(&sys, MAX_MEMBERS)?;
    if cs.len() != l.len() {
        return Ok(false);
    }
    let lat = FiniteLattice::from_closed_sets(&cs, |s| format!("{:x}", s.0))?;
    let mut pairs = Vec::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        let Some(u) = l.index_of(label) else {
            return Ok(false);
        };
        let set = sys.closure(MemberSet::singleton(i));
        let v = lat.index_of(&format!("{:x}", set.0)).expect("closure is closed");
        pairs.push((u, v));
    }
    Ok(extend_jir_bijection(l, &lat, &pairs).is_some())
}

struct Ctx<'a> {
    config: &'a SynthesisConfig,
    attempts: usize,
    backtracks: usize,
    deepest: Option<Partial>,
}

type Continuation<'a> = dyn FnMut(&mut Ctx<'_>, Partial) -> Result<Option<Partial>, SynthesisError> + 'a;

fn sides(config: &SynthesisConfig) -> &'static [Side] {
    if config.mirror_insertions {
        &[Side::Right, Side::Left]
    } else {
        &[Side::Right]
    }
}

/// Feeds realizations of `l` to `k` until it accepts one.
fn solve(ctx: &mut Ctx<'_>, l: &FiniteLattice, k: &mut Continuation<'_>) -> Result<Option<Partial>, SynthesisError> {
    if l.is_chain() {
        return k(ctx, chain_base(l));
    }
    for c in candidates(l) {
        let smaller = remove_filter(l, c);
        let mut extend = |ctx: &mut Ctx<'_>, p: Partial| -> Result<Option<Partial>, SynthesisError> {
            for &side in sides(ctx.config) {
                ctx.attempts += 1;
                if ctx.attempts > ctx.config.attempt_budget {
                    return Err(SynthesisError::Exhausted {
                        attempts: ctx.attempts - 1,
                        deepest: Box::new(ctx.deepest.as_ref().unwrap_or(&p).trace(ctx.backtracks)),
                    });
                }
                if let Some(q) = insert(l, c, side, &p, ctx.config.repair_cap)? {
                    if realizes(l, &q.labels, &q.circles)? {
                        if ctx.deepest.as_ref().is_none_or(|d| d.steps.len() < q.steps.len()) {
                            ctx.deepest = Some(q.clone());
                        }
                        if let Some(done) = k(ctx, q)? {
                            return Ok(Some(done));
                        }
                    }
                }
                ctx.backtracks += 1;
            }
            Ok(None)
        };
        if let Some(done) = solve(ctx, &smaller, &mut extend)? {
            return Ok(Some(done));
        }
    }
    Ok(None)
}

fn check_hypothesis(l: &FiniteLattice) -> Result<(), SynthesisError> {
    if !is_lower_semimodular(l) {
        return Err(SynthesisError::Precondition("lower semimodular"));
    }
    if !is_dually_slim(l) {
        return Err(SynthesisError::Precondition("dually slim"));
    }
    let count = l.jir().len();
    if count > MAX_MEMBERS {
        return Err(crate::error::LatticeError::TooManyJoinIrreducibles {
            count,
            bound: MAX_MEMBERS,
        }
        .into());
    }
    Ok(())
}

/// Builds a separated, concave, collinear family whose closed-set lattice is
/// isomorphic to `l`.
pub fn synthesize(l: &FiniteLattice) -> Result<(Representation, SynthesisTrace), SynthesisError> {
    synthesize_with(l, &SynthesisConfig::default())
}

pub fn synthesize_with(
    l: &FiniteLattice,
    config: &SynthesisConfig,
) -> Result<(Representation, SynthesisTrace), SynthesisError> {
    check_hypothesis(l)?;
    let mut ctx = Ctx {
        config,
        attempts: 0,
        backtracks: 0,
        deepest: None,
    };
    let found = solve(&mut ctx, l, &mut |_, p| Ok(Some(p)))?;
    let Some(p) = found else {
        let deepest = ctx.deepest.unwrap_or_else(|| Partial {
            labels: Vec::new(),
            circles: Vec::new(),
            base: Vec::new(),
            steps: Vec::new(),
        });
        return Err(SynthesisError::Exhausted {
            attempts: ctx.attempts,
            deepest: Box::new(deepest.trace(ctx.backtracks)),
        });
    };
    Ok((p.representation(l)?, p.trace(ctx.backtracks)))
}

/// Rebuilds the family recorded in `trace` by re-running every recorded
/// choice, and checks that each recomputed value equals the recorded one.
pub fn replay(
    l: &FiniteLattice,
    trace: &SynthesisTrace,
    config: &SynthesisConfig,
) -> Result<Representation, SynthesisError> {
    let mut lattices = alloc::vec![l.clone()];
    let mut elements = Vec::with_capacity(trace.steps.len());
    for step in trace.steps.iter().rev() {
        let current = lattices.last().expect("nonempty");
        let c = current
            .index_of(&step.element)
            .ok_or_else(|| SynthesisError::Replay(format!("unknown element {:?}", step.element)))?;
        if !candidates(current).contains(&c) {
            return Err(SynthesisError::Replay(format!("{:?} cannot be removed", step.element)));
        }
        elements.push(c);
        let next = remove_filter(current, c);
        lattices.push(next);
    }
    let chain = lattices.last().expect("nonempty");
    if !chain.is_chain() {
        return Err(SynthesisError::Replay(
            "steps do not reduce the lattice to a chain".into(),
        ));
    }
    let mut p = chain_base(chain);
    if p.base != trace.base {
        return Err(SynthesisError::Replay("base chain differs".into()));
    }
    for (k, step) in trace.steps.iter().enumerate() {
        let depth = trace.steps.len() - 1 - k;
        let lat = &lattices[depth];
        let c = elements[depth];
        let q = insert(lat, c, step.side, &p, config.repair_cap)?
            .ok_or_else(|| SynthesisError::Replay(format!("no gap for {:?}", step.element)))?;
        if q.steps.last() != Some(step) {
            return Err(SynthesisError::Replay(format!("step for {:?} differs", step.element)));
        }
        p = q;
    }
    p.representation(l)
}
