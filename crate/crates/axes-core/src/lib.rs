//! Exact calculators for the relative algebraic K-theory and topological
//! cyclic homology of coordinate-axes rings `k[x_1, ..., x_d] / (x_i x_j)`,
//! together with the brute-force oracles (necklace enumeration, integral
//! simplicial homology, ghost-component Witt arithmetic) used to verify them.
//!
//! The crate is `no_std`-compatible: everything is exact integer arithmetic
//! over `alloc`. IO, JSON and the command line live in the companion `axesk`
//! crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod arith;
pub mod charzero;
pub mod homology;
pub mod tc;
pub mod witt;
pub mod words;
