//! Exact-arithmetic toolkit for wild Kronecker quivers.
//!
//! The quiver `K_n` has two vertices — a source `2` and a sink `1` — joined by
//! `n >= 3` parallel arrows. This crate works with its representations at two
//! levels:
//!
//! * **Dimension vectors.** Integer pairs `(a, b)` classified by the quadratic
//!   form `q(a,b) = a² + b² - n·a·b` into real roots (`q = 1`), imaginary
//!   roots (`q < 0`) and non-roots, and moved around by the Coxeter matrix
//!   `Φ`. The [`sequences`] module provides the integer sequences `A_i`, `B_i`
//!   and `s_r` that coordinatize the real roots, together with executable
//!   checks of the identities and inequalities they satisfy.
//!
//! * **Actual representations.** [`reps::Rep`] stores one exact matrix per
//!   arrow; homomorphism spaces are computed by exact linear solves, and the
//!   reflection functors give the Auslander-Reiten translate `τ` on
//!   representations, not just on dimension vectors. [`bricks`] constructs,
//!   for every imaginary root, an explicit representation with trivial
//!   endomorphism ring and re-verifies the result from scratch.
//!
//! [`components`] explores regular Auslander-Reiten components on the
//! dimension-vector level: the (τ-shift, quasi-length) grid, censuses of
//! indecomposables with a fixed length (at most two per component), searches
//! for same-length pairs across quasi-lengths, and decision of whether two
//! components have the same set of dimension vectors.
//!
//! All arithmetic is exact: arbitrary-precision integers for vectors and
//! sequences, arbitrary-precision rationals inside the linear algebra. No
//! floating point is used anywhere.

pub mod bricks;
pub mod components;
pub mod linalg;
pub mod reps;
pub mod roots;
pub mod sequences;
pub mod verify;

pub use bricks::{construct_brick, quasi_length_options, BrickCertificate};
pub use components::{length_census, ComponentSeed, NodeCoord};
pub use reps::Rep;
pub use roots::{classify, DimVector, RootClass, RootKind};
pub use sequences::SeqCache;

use num_bigint::BigInt;

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on the inputs was violated (bad `n`, bad index, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two representations with different arrow counts were combined.
    #[error("arrow count mismatch: {left} vs {right}")]
    ArrowCountMismatch { left: u32, right: u32 },

    /// An operation requiring an imaginary root was given something else.
    #[error("({a},{b}) is not an imaginary root for n={n}: q={q}")]
    NotImaginaryRoot {
        n: u32,
        a: BigInt,
        b: BigInt,
        q: BigInt,
    },

    /// A brick construction violated one of its own invariants. Carries the
    /// construction trace so the failing case can be replayed.
    #[error("construction invariant violated: {detail} (trace: {trace:?})")]
    ConstructionInvariant {
        detail: String,
        trace: Vec<bricks::CaseStep>,
    },

    /// A reflection functor was applied to a module whose dimension vector
    /// does not transform by the Coxeter matrix, i.e. the module has a
    /// projective (resp. injective) direct summand.
    #[error("reflection contract violated: {0}")]
    ReflectionContract(String),

    /// A statement the library treats as a theorem failed on concrete data.
    /// This variant must never occur; it exists so that a violation is loud.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// Malformed representation data (shape mismatch, unparsable entries).
    #[error("invalid representation data: {0}")]
    InvalidRep(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
