//! An exact-combinatorics and simulation laboratory for shifted staircase
//! standard Young tableaux and 132-avoiding sorting networks.
//!
//! The crate has three layers:
//!
//! * exact combinatorics over arbitrary-precision integers: partitions,
//!   (shifted) hook lengths, tableau counting and a family of identity
//!   checkers ([`partition`], [`count`], [`enumerate`]);
//! * random structures: exactly-uniform tableau sampling, the transcoding
//!   between shifted staircase tableaux and 132-avoiding sorting networks,
//!   promotion and adjacency statistics ([`sampler`], [`network`],
//!   [`promotion`]);
//! * closed-form limit objects and the Monte Carlo experiment harness behind
//!   the `staircase-lab` binary ([`limit`], [`experiment`]).

pub mod count;
pub mod enumerate;
pub mod error;
pub mod experiment;
pub mod limit;
pub mod network;
pub mod partition;
pub mod promotion;
pub mod sampler;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{Cell, DiagramKind, Partition, StrictPartition};
pub use tableau::Tableau;
