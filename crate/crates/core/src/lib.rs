//! Binary Cayley graphs, projective cubes and an exact graph homomorphism
//! engine.
//!
//! Graphs are immutable with dense bitset adjacency. On top of them sit
//! generators for the usual families ([`families`]), the power-graph
//! construction ([`power`]), walk powers ([`walk`]), a backtracking
//! homomorphism search with sound propagation ([`hom`]) and constructive
//! embedding certificates ([`embeddings`]).
//!
//! The crate is `no_std` with `alloc`; the default `std` feature adds
//! wall-clock budgets and multi-threaded search.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bitset;
pub mod distance;
pub mod embeddings;
pub mod families;
pub mod graph;
pub mod hom;
pub mod iso;
pub mod power;
pub mod walk;

pub use bitset::BitSet;
pub use distance::{girth, odd_girth, parity_distances, Length, ParityDistances};
pub use graph::{Graph, GraphError};
pub use hom::{search, verify_hom, Homomorphism, SearchOptions, SearchOutcome, Status};
