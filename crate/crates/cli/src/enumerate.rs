//! Small-scale exploration of the classes of circle geometries.

use std::fmt::Write as _;

use circgeo_core::closure::{verify_convex_geometry, FamilyClosure, VerifyMode};
use circgeo_core::lattice::{
    caratheodory, convex_dimension, is_dually_slim, is_lower_semimodular, IsomorphismClasses,
    DEFAULT_CARATHEODORY_BOUND,
};
use circgeo_core::CircleFamily;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analyze::closed_set_lattice;
use crate::error::CliError;
use crate::families;
use crate::files::{circle_file, CircleFile};

/// Largest family size the harness accepts.
pub const MAX_FAMILY_SIZE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    ConcaveCollinear,
    Collinear,
    PlanarGrid,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::ConcaveCollinear => "concave-collinear",
            Scope::Collinear => "collinear",
            Scope::PlanarGrid => "planar-grid",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    pub scope: Scope,
    pub max_size: usize,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub property: String,
    pub family: CircleFile,
    pub convex_dimension: usize,
    pub c2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub scope: Scope,
    pub seed: u64,
    pub families: usize,
    pub max_members: usize,
    pub convex_geometries: usize,
    pub distinct_lattices: usize,
    pub max_convex_dimension: usize,
    /// Families with convex dimension above 2.
    pub cdim_above_two: usize,
    pub c2_failures: usize,
    /// Families with a join-irreducible that is not an atom.
    pub non_atom_join_irreducible: usize,
    pub dually_slim_lower_semimodular: usize,
    /// The first family found for each property.
    pub witnesses: Vec<Witness>,
}

pub const CDIM_ABOVE_TWO: &str = "convex dimension above 2";
pub const C2_FAILS: &str = "C2 fails";
pub const NON_ATOM_JIR: &str = "non-atom join-irreducible";

fn seeded(scope: Scope) -> Vec<CircleFamily> {
    match scope {
        Scope::ConcaveCollinear => vec![families::concentric_pair()],
        Scope::Collinear => vec![families::tangent_to_k(3)],
        Scope::PlanarGrid => vec![families::triangle_barycenter()],
    }
}

fn sample<R: Rng>(scope: Scope, rng: &mut R, max_size: usize) -> CircleFamily {
    let n = rng.random_range(1..=max_size);
    match scope {
        Scope::ConcaveCollinear => families::random_concave(rng, n),
        Scope::Collinear => families::random_collinear(rng, n),
        Scope::PlanarGrid => families::random_grid_points(rng, n),
    }
}

/// Examines the seeded witnesses of a scope followed by `samples` random
/// families of at most `max_size` members.
pub fn enumerate(options: &EnumerateOptions) -> Result<EnumerationSummary, CliError> {
    if options.max_size == 0 || options.max_size > MAX_FAMILY_SIZE {
        return Err(CliError::Usage(format!(
            "--max-size must be between 1 and {MAX_FAMILY_SIZE}, got {}",
            options.max_size
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut summary = EnumerationSummary {
        scope: options.scope,
        seed: options.seed,
        families: 0,
        max_members: 0,
        convex_geometries: 0,
        distinct_lattices: 0,
        max_convex_dimension: 0,
        cdim_above_two: 0,
        c2_failures: 0,
        non_atom_join_irreducible: 0,
        dually_slim_lower_semimodular: 0,
        witnesses: Vec::new(),
    };
    let mut classes = IsomorphismClasses::new();
    let fixed = seeded(options.scope);
    let mut randoms = (0..options.samples).map(|_| sample(options.scope, &mut rng, options.max_size));
    for family in fixed.into_iter().chain(&mut randoms) {
        summary.families += 1;
        summary.max_members = summary.max_members.max(family.len());
        let sys = FamilyClosure::new(&family);
        let report = verify_convex_geometry(&sys, VerifyMode::Full).map_err(|e| CliError::Usage(e.to_string()))?;
        summary.convex_geometries += usize::from(report.is_convex_geometry());
        let l = closed_set_lattice(&family, MAX_FAMILY_SIZE.max(family.len()))?;
        let cdim = convex_dimension(&l).width;
        let c2 = caratheodory(&l, 2, DEFAULT_CARATHEODORY_BOUND)
            .map_err(|e| CliError::Usage(e.to_string()))?
            .is_none();
        let non_atom = l.jir().iter().any(|&x| l.height(x) > 1);
        summary.max_convex_dimension = summary.max_convex_dimension.max(cdim);
        summary.cdim_above_two += usize::from(cdim > 2);
        summary.c2_failures += usize::from(!c2);
        summary.non_atom_join_irreducible += usize::from(non_atom);
        summary.dually_slim_lower_semimodular += usize::from(is_dually_slim(&l) && is_lower_semimodular(&l));
        for (property, holds) in [(CDIM_ABOVE_TWO, cdim > 2), (C2_FAILS, !c2), (NON_ATOM_JIR, non_atom)] {
            if holds && summary.witnesses.iter().all(|w| w.property != property) {
                summary.witnesses.push(Witness {
                    property: property.to_string(),
                    family: circle_file(&family),
                    convex_dimension: cdim,
                    c2,
                });
            }
        }
        classes.insert(l);
    }
    summary.distinct_lattices = classes.len();
    Ok(summary)
}

pub fn render_text(s: &EnumerationSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scope: {} (seed {})", s.scope.name(), s.seed);
    let rows = [
        ("families", s.families),
        ("largest family", s.max_members),
        ("convex geometries", s.convex_geometries),
        ("distinct lattices", s.distinct_lattices),
        ("max convex dimension", s.max_convex_dimension),
        ("convex dimension > 2", s.cdim_above_two),
        ("C2 failures", s.c2_failures),
        ("non-atom join-irreducible", s.non_atom_join_irreducible),
        ("dually slim lower semimodular", s.dually_slim_lower_semimodular),
    ];
    for (name, value) in rows {
        let _ = writeln!(out, "{name:<32}{value:>8}");
    }
    for w in &s.witnesses {
        let ids: Vec<&str> = w.family.circles.iter().map(|c| c.id.as_str()).collect();
        let _ = writeln!(
            out,
            "witness for {}: {} circles [{}], convex dimension {}, C2 {}",
            w.property,
            ids.len(),
            ids.join(" "),
            w.convex_dimension,
            if w.c2 { "holds" } else { "fails" }
        );
    }
    out
}
