//! The `analyze` report for a circle family.

use std::fmt::Write as _;

use circgeo_core::closure::{enumerate_closed_sets, verify_convex_geometry, FamilyClosure, VerifyMode, Violation};
use circgeo_core::lattice::{
    caratheodory, convex_dimension, is_lower_semimodular, is_meet_distributive, FiniteLattice,
    DEFAULT_CARATHEODORY_BOUND,
};
use circgeo_core::{CircleFamily, MemberSet};
use serde::Serialize;

use crate::error::CliError;

/// Families up to this size get every subset checked.
pub const FULL_CHECK_LIMIT: usize = 16;
/// Subsets drawn when a family is too large for a full check.
pub const SAMPLED_SUBSETS: usize = 4096;

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub max_size: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaratheodoryWitness {
    pub element: String,
    pub set: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaratheodoryStatus {
    pub n: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CaratheodoryWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub kind: String,
    pub members: usize,
    pub verification: String,
    pub convex_geometry: bool,
    pub violations: Vec<String>,
    pub closed_sets: usize,
    pub convex_dimension: usize,
    pub mir_antichain: Vec<String>,
    pub join_irreducibles: usize,
    pub meet_irreducibles: usize,
    pub lower_semimodular: bool,
    pub meet_distributive: bool,
    pub concave: Option<bool>,
    pub concavity_witness: Option<[String; 3]>,
    pub separated: Option<bool>,
    pub separation_witness: Option<(String, String)>,
    /// `C_n` from `n = 2` up to the first `n` that holds, and at least `n = 3`.
    /// Empty when there are too many join-irreducibles to check.
    pub caratheodory: Vec<CaratheodoryStatus>,
}

/// `{A,B}` label of a member set, by id.
pub fn ids_label(family: &CircleFamily, set: MemberSet) -> String {
    format!("{{{}}}", family.ids_of(set).join(","))
}

/// The closed-set lattice of a family, with elements labeled by member ids.
pub fn closed_set_lattice(family: &CircleFamily, max_size: usize) -> Result<FiniteLattice, CliError> {
    let sys = FamilyClosure::new(family);
    let cs = enumerate_closed_sets(&sys, max_size).map_err(|e| CliError::Usage(e.to_string()))?;
    FiniteLattice::from_closed_sets(&cs, |s| ids_label(family, s)).map_err(|e| CliError::Verification(e.to_string()))
}

fn describe(family: &CircleFamily, v: &Violation) -> String {
    let s = |set: &MemberSet| ids_label(family, *set);
    match v {
        Violation::EmptyNotClosed { closure } => format!("closure of the empty set is {}", s(closure)),
        Violation::NotExtensive { set, closure } => format!("{} is not inside its closure {}", s(set), s(closure)),
        Violation::NotIdempotent {
            set,
            closure,
            reclosure,
        } => {
            format!(
                "closure of {} is {} but that closes to {}",
                s(set),
                s(closure),
                s(reclosure)
            )
        }
        Violation::NotMonotone { smaller, larger } => {
            format!("closure of {} exceeds that of {}", s(smaller), s(larger))
        }
        Violation::AntiExchange { closed, x, y } => format!(
            "anti-exchange fails at {} with {} and {}",
            s(closed),
            family.id(*x),
            family.id(*y)
        ),
    }
}

pub fn analyze(family: &CircleFamily, options: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let n = family.len();
    if n > options.max_size {
        return Err(CliError::Usage(format!(
            "family has {n} circles, more than --max-size {}",
            options.max_size
        )));
    }
    let sys = FamilyClosure::new(family);
    let (mode, verification) = if n <= FULL_CHECK_LIMIT {
        (VerifyMode::Full, "full".to_string())
    } else {
        (
            VerifyMode::Sampled {
                samples: SAMPLED_SUBSETS,
                seed: options.seed,
            },
            format!("sampled {SAMPLED_SUBSETS} subsets, seed {}", options.seed),
        )
    };
    let geometry = verify_convex_geometry(&sys, mode).map_err(|e| CliError::Usage(e.to_string()))?;
    let l = closed_set_lattice(family, options.max_size)?;
    let cdim = convex_dimension(&l);
    let jir = l.jir();

    let mut carath = Vec::new();
    if jir.len() <= DEFAULT_CARATHEODORY_BOUND {
        for k in 2.. {
            let failure = caratheodory(&l, k, DEFAULT_CARATHEODORY_BOUND).expect("within bound");
            let holds = failure.is_none();
            carath.push(CaratheodoryStatus {
                n: k,
                holds,
                witness: failure.map(|f| CaratheodoryWitness {
                    element: l.label(f.a).to_string(),
                    set: f.set.iter().map(|&b| l.label(b).to_string()).collect(),
                }),
            });
            if holds && k >= 3 {
                break;
            }
        }
    }

    let collinear = family.is_collinear();
    let concavity_witness = if collinear {
        family
            .concavity_violation()
            .expect("collinear")
            .map(|w| w.map(|i| family.id(i).to_string()))
    } else {
        None
    };
    let separation_witness = if collinear {
        circgeo_core::geometry::separation_violation(&family.collinear_circles())
            .map(|(i, j)| (family.id(i).to_string(), family.id(j).to_string()))
    } else {
        None
    };

    Ok(AnalysisReport {
        kind: if collinear { "collinear" } else { "planar" }.to_string(),
        members: n,
        verification,
        convex_geometry: geometry.is_convex_geometry(),
        violations: geometry.violations.iter().map(|v| describe(family, v)).collect(),
        closed_sets: l.len(),
        convex_dimension: cdim.width,
        mir_antichain: cdim.antichain.iter().map(|&x| l.label(x).to_string()).collect(),
        join_irreducibles: jir.len(),
        meet_irreducibles: l.mir().len(),
        lower_semimodular: is_lower_semimodular(&l),
        meet_distributive: is_meet_distributive(&l),
        concave: collinear.then_some(concavity_witness.is_none()),
        concavity_witness,
        separated: collinear.then_some(separation_witness.is_none()),
        separation_witness,
        caratheodory: carath,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", r.kind);
    let _ = writeln!(out, "members: {}", r.members);
    let _ = writeln!(
        out,
        "convex geometry: {} ({})",
        yes_no(r.convex_geometry),
        r.verification
    );
    for v in &r.violations {
        let _ = writeln!(out, "  violation: {v}");
    }
    let _ = writeln!(out, "closed sets: {}", r.closed_sets);
    let _ = writeln!(out, "convex dimension: {}", r.convex_dimension);
    let _ = writeln!(out, "  Mir antichain: {}", r.mir_antichain.join(" "));
    let _ = writeln!(out, "join-irreducibles: {}", r.join_irreducibles);
    let _ = writeln!(out, "meet-irreducibles: {}", r.meet_irreducibles);
    let _ = writeln!(out, "lower semimodular: {}", yes_no(r.lower_semimodular));
    let _ = writeln!(out, "meet-distributive: {}", yes_no(r.meet_distributive));
    match r.concave {
        Some(c) => {
            let _ = write!(out, "concave: {}", yes_no(c));
            if let Some([a, b, c]) = &r.concavity_witness {
                let _ = write!(out, " ({b} lies between {a} and {c} outside their hull)");
            }
            out.push('\n');
        }
        None => out.push_str("concave: n/a\n"),
    }
    match r.separated {
        Some(s) => {
            let _ = write!(out, "separated: {}", yes_no(s));
            if let Some((a, b)) = &r.separation_witness {
                let _ = write!(out, " ({a} and {b} share an endpoint)");
            }
            out.push('\n');
        }
        None => out.push_str("separated: n/a\n"),
    }
    if r.caratheodory.is_empty() {
        out.push_str("Caratheodory: too many join-irreducibles to check\n");
    }
    for c in &r.caratheodory {
        let _ = write!(out, "C{}: {}", c.n, yes_no(c.holds));
        if let Some(w) = &c.witness {
            let _ = write!(out, " ({} <= join of {})", w.element, w.set.join(" "));
        }
        out.push('\n');
    }
    out
}
