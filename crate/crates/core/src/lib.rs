//! Combinatorics of the type C zeta map.
//!
//! This crate implements lattice paths, ballot paths and their statistics
//! (`area`, `area'`, `dinv`, `dinv'`) in types A and C, vertically and
//! diagonally labelled paths, the classical and type C zeta maps together
//! with their sweep-map formulation, root-poset antichain encodings of Shi
//! arrangement regions, and an exact-arithmetic geometric enumeration of
//! Shi regions that cross-checks the combinatorial encodings.

pub mod error;
pub mod geometry;
pub mod labelled;
pub mod paths;
pub mod perm;
pub mod roots;
pub mod stats;
pub mod verify;
pub mod zeta;

pub use error::Error;
pub use paths::{BallotPath, DyckPath, LatticePath, Step};
pub use perm::SignedPermutation;
pub use roots::{Antichain, Root, RootSystem, RootSystemKind, ShiPair};
