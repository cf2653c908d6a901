//! fivefold: Penrose-type tilings cut from the five-dimensional integer
//! lattice, in exact arithmetic.
//!
//! A tiling vertex is the planar shadow of a lattice point whose companion
//! shadow in a second plane falls inside a pentagonal acceptance window. This
//! crate builds such point patterns, their rhombus tiles, and the family of
//! scaling factors lambda for which x -> t + lambda(x - t) maps the pattern
//! into itself, all decided by exact sign computations in Q(sqrt5).

pub mod cli;
pub mod golden;
pub mod inflation;
pub mod lattice;
pub mod pattern;
pub mod window;

pub use golden::{Cyclo, GoldenError, Quad, Rational, Sign};
pub use inflation::{
    CenterResult, InflationError, InflationFactor, InflationTriple, LambdaWitness, TripleClass,
    VerifyFailure, VerifyReport,
};
pub use lattice::{IntMatrix5, LatticeError, LatticePoint, Matrix5, ProjectorKind};
pub use pattern::{Membership, PatternError, PatternPatch, Shift, TileKind};
pub use window::{Containment, WindowError};
