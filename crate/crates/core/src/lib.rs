//! Spin characters of the double covers of the symmetric groups, reduced
//! modulo 2.
//!
//! The crate covers the combinatorics (partitions, the 2-abacus, ladders,
//! doubling and 4-bar cores), exact spin degrees, symmetric functions in the
//! Schur basis, branching of formal characters, Rouquier blocks, and a
//! classifier deciding which spin characters stay irreducible modulo 2.
//!
//! Each capability has a runnable example:
//!
//! ```text
//! cargo run --example partitions_tour
//! cargo run --example abacus_quotients
//! cargo run --example ladders_and_blocks
//! cargo run --example spin_degrees
//! cargo run --example symmetric_functions
//! cargo run --example branching
//! cargo run --example rouquier_blocks
//! cargo run --example irreducible_spin
//! ```
//!
//! The `spinmod` binary exposes the same operations on the command line.

pub mod abacus;
pub mod characters;
pub mod classify;
pub mod degrees;
pub mod error;
pub mod partitions;
pub mod regdouble;
pub mod rouquier;
pub mod symfun;

pub use error::{Error, Result};
pub use partitions::{Node, Partition, Residue};
