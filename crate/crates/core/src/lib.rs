//! Gallai colorings of complete graphs: edge colorings without rainbow
//! triangles, and which class-size distributions they can have.
//!
//! - [`model`]: colorings, distributions, star partitions, verdicts.
//! - [`format`]: the text, JSON and DOT formats.
//! - [`verify`]: the Gallai test, the prefix-sum necessary condition and
//!   block decompositions.
//! - [`construct`]: constructions for every covered family of distributions.
//! - [`oracle`]: exhaustive search for small `n`.
//! - [`generator`]: seeded random Gallai colorings.

pub mod construct;
pub mod error;
pub mod format;
pub mod generator;
pub mod model;
pub mod oracle;
pub mod verify;

pub use error::{ConstructError, FormatError, ModelError, NotConstructedReason, VerifyError};
pub use model::{
    choose2, partitions, BalancedParams, Color, Coloring, Distribution, DivisionParams,
    GallaiPartition, StarPartition, Verdict, VerdictTag,
};
