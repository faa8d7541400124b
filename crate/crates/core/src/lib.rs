//! Decision procedures for uniform clutters.
//!
//! The crate works with `d`-dimensional uniform clutters (families of
//! `(d+1)`-subsets of a vertex set) and the simplicial complexes built from
//! them: clique complexes, Alexander duals, links and skeletons. On top of
//! those it provides
//!
//! * chordality with replayable elimination certificates, W-chordality and
//!   vertex decomposability with shedding certificates ([`chordality`]);
//! * exact reduced homology over GF(2) and the rationals, the subset-homology
//!   linear-resolution test and graded Betti numbers ([`homology`]);
//! * admissible orders and the linear-quotients search ([`quotients`]);
//! * ascents, `d`-cycles, `d`-chordedness and CF-chordality ([`ascent`]);
//! * a seeded instance generator and theorem sweeps ([`harness`]).
//!
//! Vertices are bits of a `u64`, so every structure supports at most 64
//! vertices. Labels are 1-based at the I/O boundary and 0-based internally.

pub mod ascent;
pub mod budget;
pub mod certificate;
pub mod chordality;
pub mod clutter;
pub mod complex;
pub mod face;
pub mod fixtures;
pub mod harness;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod quotients;

pub use budget::Budget;
pub use clutter::{Clutter, GeneralClutter};
pub use complex::SimplicialComplex;
pub use face::Face;
pub use homology::FieldTag;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("at most 64 vertices are supported (got {0})")]
    CapacityExceeded(usize),
    #[error("vertex {0} appears twice")]
    DuplicateVertex(usize),
    #[error("invalid vertex label {0}")]
    InvalidLabel(usize),
    #[error("vertex {0} is not in the vertex set")]
    UnknownVertex(usize),
    #[error("{face} is not a face")]
    NotAFace { face: Face },
    #[error("expected a face of dimension {expected}, got {face} (dimension {actual})")]
    DimensionMismatch { face: Face, expected: isize, actual: isize },
    #[error("{face} is not contained in the vertex set")]
    OutsideVertexSet { face: Face },
    #[error("criterion requires pure complex")]
    NotPure,
    #[error("index {index} is out of range {min}..={max}")]
    OutOfRange { index: isize, min: isize, max: isize },
    #[error("the void complex has no faces")]
    VoidComplex,
    #[error("family is not an antichain: {0} is contained in {1}")]
    NotAntichain(Face, Face),
    #[error("faces have mixed dimensions")]
    MixedDimensions,
    #[error("repeated generator {0}")]
    RepeatedGenerator(Face),
    #[error("not a d-cycle")]
    NotACycle,
    #[error("order is not admissible at position {position} (against position {earlier})")]
    InadmissibleOrder { position: usize, earlier: usize },
    #[error("order does not match the generator set: {0}")]
    WrongGenerators(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget exhausted after {0} nodes")]
    BudgetExhausted(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
