//! Conflict-free colouring of interval hypergraphs.
//!
//! A conflict-free colouring assigns colours `{0, 1, ..., k}` to the points
//! `1..=n` so that every interval of the family contains some positive
//! colour exactly once. This crate computes optimal conflict-free colourings
//! in polynomial time via a dynamic program over co-occurrence graphs,
//! recognises exactly hittable interval hypergraphs and exactly hittable
//! interval graphs, converts between colourings and partitions into exactly
//! hittable sets, and ships a suite of brute-force oracles that every
//! polynomial algorithm is tested against on small instances.
//!
//! Module map:
//! - [`hypergraph`]: the interval hypergraph data model, file formats and
//!   structural queries.
//! - [`cooccurrence`]: co-occurrence graphs of representative assignments,
//!   clique numbers, exact colouring, perfectness scans.
//! - [`cfdp`]: the subproblem dynamic program behind `max_cfc`/`min_cfc`.
//! - [`ehs`]: exact-hitting-set recognition and the colouring/partition
//!   conversions.
//! - [`graphs`]: the interval-graph layer, canonical gadget models and the
//!   forbidden-pattern certificate search.
//! - [`oracle`]: exponential reference implementations (desk scale only).
//! - [`gen`]: seeded instance generators.
//!
//! Everything is a pure function over immutable inputs; values are plain
//! data with no interior mutability, so shared references can be used from
//! multiple threads freely. Search state (memo tables, backtracking stacks)
//! is confined to a single call.

mod bits;

pub mod cfdp;
pub mod cooccurrence;
pub mod ehs;
pub mod gen;
pub mod graphs;
pub mod hypergraph;
pub mod oracle;
