//! Deciding, obstructing and certifying cubiquity of full-rank sublattices of `Z^n`.
//!
//! A sublattice `Λ ⊂ Z^n` is *cubiquitous* when every unit cube `x + {0,1}^n` with
//! `x ∈ Z^n` contains a point of `Λ`. The crate provides exact integer linear algebra
//! ([`lattice`]), subset statistics ([`subset`]), obstructions and the brute-force oracle
//! ([`obstructions`]), subset rewrites ([`transforms`]) and the classification of
//! orthogonal sublattices ([`classify`]).

pub mod classify;
pub mod error;
pub mod lattice;
pub mod obstructions;
pub mod subset;
pub mod transforms;

pub use error::{Error, Result};
pub use lattice::{BasisMatrix, SquareMatrix};
pub use obstructions::{Limits, Status, Verdict};
pub use subset::{Subset, SubsetStats};
