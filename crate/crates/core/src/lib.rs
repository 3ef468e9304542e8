//! Invariants of two-bridge knots given in Conway normal form.

pub mod diagram;
pub mod fraction;
pub mod invariants;
pub mod word;

pub use diagram::{lk, LinkDiagram, PlatDiagram};
pub use fraction::{equivalent, evaluate_fraction, EquivalenceVerdict, SchubertPair};
pub use invariants::{a2_closed, a2_skein, a2_torus2};
pub use word::ConwayWord;

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("continued-fraction value exceeds integer range")]
    Overflow,
    #[error("word closes to a two-component link (determinant {p}), not a knot")]
    NotAKnot { p: u64 },
    #[error("diagram has a single component, expected a two-component link")]
    NotALink,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("torus parameters ({p}, {q}) are not coprime")]
    NonCoprime { p: u64, q: u64 },
    #[error("consequence check failed: {0}")]
    ConsequenceViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
