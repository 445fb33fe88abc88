//! Graph products of finite groups: normal forms, special-subgroup cosets,
//! Cayley and extension graphs, and finite-radius geometric experiments.

pub mod cayley;
pub mod coset;
pub mod dynamics;
pub mod error;
pub mod explore;
pub mod extension;
pub mod fixtures;
pub mod graph;
pub mod group;
pub mod report;
pub mod verify;
pub mod word;
pub mod wreath;

pub use error::{Error, Result};
pub use graph::{DefiningGraph, VertexId, VertexSet};
pub use group::{GroupElem, GroupTable};
pub use word::{NormalForm, Syllable, Word};
