//! Path-cycle decompositions with every element of length at least four.
//!
//! Connected triangle-free graphs whose odd-degree vertices are pairwise at
//! distance at least three either split into paths and cycles of length at
//! least four, or are hanging-square graphs, which come with a short
//! certificate of impossibility. This crate decides which, builds the witness
//! in both cases, and derives small path decompositions from the result.

pub mod canon;
pub mod decomposer;
pub mod gallai;
pub mod graph;
pub mod hanging_square;
pub mod harness;
pub mod io;
mod search;
pub mod skeleton;
