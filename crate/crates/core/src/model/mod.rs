//! Domain types shared by every other module.

mod coloring;
mod distribution;
mod params;
mod partition;
mod star;
mod verdict;

pub use coloring::{choose2, Color, Coloring};
pub(crate) use coloring::EdgeBuffer;
pub use distribution::{partitions, Distribution};
pub use params::{BalancedParams, DivisionParams};
pub use partition::GallaiPartition;
pub use star::StarPartition;
pub use verdict::{Verdict, VerdictTag};
