//! Stable set rings of finite simple graphs.
//!
//! The library answers, up to configurable bounds, whether the toric ideal of
//! the stable set ring K[G] is generated by quadratic binomials. Two
//! independent deciders are provided: one walks fibers of monomials under
//! quadratic exchange moves, the other walks Kempe switchings of colorings of
//! replication graphs. Around them sit the combinatorial tools the question
//! lives on: graph constructions (induced subgraphs, complements, replications,
//! even-pair contractions), proper colorings and Kempe equivalence, stable set
//! enumeration, and detectors for the structures (odd holes, antiholes, prisms,
//! darts) that govern the known sufficient conditions.
//!
//! Vertices are labelled `1..=n` in every public interface. Graphs are capped
//! at 64 vertices so adjacency fits in one machine word per vertex; the
//! algebraic routines are exponential by nature and meant for small graphs.

#![forbid(unsafe_code)]

pub mod coloring;
pub mod graph;
pub mod iso;
pub mod structure;
#[cfg(test)]
pub(crate) mod testutil;
pub mod toric;
mod unionfind;

pub use graph::{
    parse_edge_list, parse_graph, parse_graph6, replication, to_graph6, Graph, GraphError,
    ReplicationGraph, MAX_VERTICES,
};
