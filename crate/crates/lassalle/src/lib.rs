//! Stack-sorting combinatorics at desk scale.
//!
//! The crate implements West's stack-sorting map `s` together with the
//! machinery needed to count and classify its preimages exactly:
//!
//! * [`permutation`] — the permutation value type, `s` itself, descent and
//!   tail-length statistics, and a brute-force preimage oracle;
//! * [`trees`] — decreasing binary plane trees, the in-order/postorder
//!   readings realizing `s = P ∘ I⁻¹`, and lonely-tree recognition;
//! * [`vhc`] — valid hook configurations: validity, enumeration, induced
//!   colorings, the product-of-Catalans fertility formula, uniquely sorted
//!   permutations, and the top-hook decomposition;
//! * [`partitions`] — set partitions, crossing graphs, acyclic orientations
//!   with a unique source, and the Tutte-point count `T_G(1,0)`;
//! * [`bijections`] — the bijection between hook configurations on `n−1`
//!   points and oriented connected partitions of `{1,…,n}`, with its inverse
//!   and derived statistics (first entry, eye, η);
//! * [`sequences`] — exact big-integer/rational sequences: Catalan, Narayana,
//!   Lassalle, free Poisson moments and classical cumulants, and the D/E
//!   tail-length tables;
//! * [`verify`] — the cross-validation suites wired into the CLI.
//!
//! Positions are 1-indexed everywhere, matching the usual combinatorial
//! conventions for permutation plots.  All counting is exact: arbitrary
//! precision integers and rationals, no floating point.

pub mod bijections;
pub mod error;
pub mod partitions;
pub mod permutation;
pub mod sequences;
pub mod trees;
pub mod verify;
pub mod vhc;

pub use bijections::PhiImage;
pub use error::{Error, Result};
pub use partitions::{CrossingGraph, Orientation, SetPartition};
pub use permutation::Permutation;
pub use trees::DecreasingBinaryTree;
pub use vhc::{Hook, ValidHookConfiguration};
