use alloc::boxed::Box;
use alloc::string::String;

use thiserror::Error;

use crate::synthesis::SynthesisTrace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational")]
    Empty,
    #[error("malformed rational, expected p/q, an integer, or a decimal")]
    Malformed,
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("hull of empty family is empty")]
    EmptyHull,
    #[error("separated is defined for collinear families")]
    SeparatedNeedsCollinear,
    #[error("concavity is defined for collinear families")]
    ConcaveNeedsCollinear,
    #[error("horizontal intervals are defined for collinear families")]
    IntervalNeedsCollinear,
    #[error("circle {0:?} is not centered on the x-axis")]
    NotCollinear(String),
    #[error("circle {0:?} has a negative radius")]
    NegativeRadius(String),
    #[error("duplicate circle id {0:?}")]
    DuplicateId(String),
    #[error("unknown circle id {0:?}")]
    UnknownId(String),
    #[error("family has {size} members, more than the supported {limit}")]
    TooLarge { size: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("member index {index} is outside a ground set of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("ground set of size {size} exceeds the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice has no elements")]
    Empty,
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("order relation has a cycle through {0:?}")]
    Cycle(String),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
    #[error("elements {0:?} and {1:?} have no join")]
    NoJoin(String, String),
    #[error("closed sets are not closed under intersection: {0:?} and {1:?}")]
    NotIntersectionClosed(String, String),
    #[error("{count} join-irreducibles exceed the configured bound {bound}")]
    TooManyJoinIrreducibles { count: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("not convex dimension <= 2: the lattice is not {0}")]
    Precondition(&'static str),
    #[error("enlarging circle {circle:?} did not make {inner:?} fall into the hull of {outer:?} and it within {cap} doublings")]
    RepairCapExceeded {
        circle: String,
        outer: String,
        inner: String,
        cap: u32,
    },
    #[error("no insertion order produced a representation after {attempts} attempts; deepest partial trace has {} steps", deepest.steps.len())]
    Exhausted {
        attempts: usize,
        deepest: Box<SynthesisTrace>,
    },
    #[error("trace does not match the lattice: {0}")]
    Replay(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}
