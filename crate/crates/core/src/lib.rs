//! The s-weak order on s-decreasing trees and the s-Tamari lattice.
//!
//! A weak composition `s = (s(1), ..., s(n))` indexes a family of labeled
//! planar trees in which node `i` has `s(i) + 1` children and every labeled
//! descendant of a node carries a smaller label. Comparing the trees by
//! inclusion of their inversion multisets yields the s-weak order, a lattice
//! whose covers are tree rotations along tree-ascents. Restricting to
//! s-Tamari trees gives a sublattice, which for signatures without interior
//! zeros is also a lattice quotient, and which is always isomorphic to a
//! nu-Tamari lattice of paths (and to the rotation lattice of nu-trees).
//!
//! This crate holds the combinatorics: trees, inversion multisets and their
//! axioms, lattice operations, exhaustive structural verifiers, projections,
//! congruence classes, and the path/tree bijections. It is `no_std`
//! compatible (requires `alloc`); IO, file formats and the CLI live in the
//! companion `slattice` crate.
//!
//! ```
//! use slattice_core::{enumerate_trees, tamari, weak_order, WeakComposition};
//!
//! let s = WeakComposition::new(vec![0, 2, 2])?;
//! let trees = enumerate_trees(&s);
//! assert_eq!(trees.len(), 15);
//! assert_eq!(tamari::enumerate_tamari(&s).len(), 12);
//!
//! let join = weak_order::join(&trees[3], &trees[7])?;
//! assert!(weak_order::leq(&trees[3], &join)?);
//! assert!(weak_order::leq(&trees[7], &join)?);
//!
//! // every tree projects onto the interval of its congruence class
//! let t = &trees[9];
//! assert!(weak_order::leq(&tamari::pi_down(t), t)?);
//! assert!(weak_order::leq(t, &tamari::pi_up(t))?);
//! # Ok::<(), slattice_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod catalan;
#[cfg(test)]
pub(crate) mod testutil;
pub mod composition;
pub mod error;
pub mod inversions;
pub mod lattice;
pub mod nu;
pub mod props;
pub mod tamari;
pub mod tree;
pub mod weak_order;

pub use catalan::{rational_catalan, RationalCatalan};
pub use composition::WeakComposition;
pub use error::Error;
pub use inversions::{validate, AxiomViolation, MultiInversionSet, TreeInversionSet, Validation};
pub use lattice::{FiniteLattice, DEFAULT_ELEMENT_LIMIT};
pub use tree::{construct_tree, enumerate_trees, expected_tree_count, Node, SDecreasingTree};
pub use weak_order::{HasseDiagram, TreeAscent};
