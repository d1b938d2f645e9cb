//! Convex geometries of circles and their lattices.
//!
//! A family of circles carries the closure operator that sends a subfamily to
//! the members whose discs lie in its convex hull. This crate decides that
//! operator exactly for circles on a line and with a tolerance in the plane,
//! enumerates closed sets, analyzes the resulting lattices, and builds
//! collinear families realizing a given dually slim, lower semimodular
//! lattice.
//!
//! The crate is `no_std` with `alloc` when the default `std` feature is off.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod closure;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod rational;
pub mod set;
pub mod synthesis;

pub use closure::{
    closure, enumerate_closed_sets, verify_convex_geometry, ClosedSetLattice, ClosureSystem, FamilyClosure,
    GeometryReport, VerifyMode,
};
pub use error::{ClosureError, GeometryError, LatticeError, ParseRationalError, SynthesisError};
pub use geometry::{Circle, CircleFamily, CollinearCircle, FamilyKind, Member};
pub use lattice::FiniteLattice;
pub use rational::Rational;
pub use set::MemberSet;
