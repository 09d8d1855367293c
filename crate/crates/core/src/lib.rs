//! Good vertex orderings for planar graphs without 4- and 5-cycles, greedy
//! list, online and L(p,q) coloring of their squares, an exact-rational
//! discharging audit, the extremal constructions, and brute-force oracles.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod discharging;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod ordering;

pub use error::{Error, Result};
pub use graph::{square, Graph, PlaneGraph, SquareGraph};

#[cfg(test)]
pub(crate) mod testutil;
