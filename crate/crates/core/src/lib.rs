//! Snakes (induced paths) and coils (induced cycles) in the n-dimensional
//! hypercube.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - the hypercube model and the transition-sequence encoding ([`cube`],
//!   [`sequence`]),
//! - validators that explain every defect of a claimed snake or coil
//!   ([`validate`]),
//! - an exhaustive symmetry-reduced solver for small dimensions and a naive
//!   subset-enumeration oracle ([`exact`]),
//! - a seeded stochastic beam search for long snakes and coils ([`beam`]),
//! - the table of best known bounds for `n <= 20` together with the bundled
//!   record sequences ([`records`]).
//!
//! Wall-clock limits are expressed through the [`Clock`] trait so that the
//! searches stay usable without `std`.
#![no_std]

extern crate alloc;

pub mod beam;
mod clock;
pub mod cube;
mod error;
pub mod exact;
pub mod records;
pub mod sequence;
pub mod validate;

pub use clock::{Clock, NoClock};
pub use cube::{is_adjacent, Dimension, Kind, Vertex, VertexSet};
pub use error::Error;
pub use sequence::{
    apply_dimension_permutation, canonical_relabel, complete_cycle, parse_sequence, walk,
    TransitionSequence,
};
pub use validate::{
    validate, validate_coil, validate_snake, ValidationReport, Violation, ViolationReason,
};

pub type Result<T> = core::result::Result<T, Error>;
