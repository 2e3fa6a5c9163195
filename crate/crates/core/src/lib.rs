//! Exact computations and certificate checks for tree-, path- and bandwidth of
//! Hamming, Johnson, bipartite Kneser and generalized Petersen graphs.
//!
//! * [`graphs`] generates the families.
//! * [`hales`] builds the weight-slice vertex orderings and checks the Hales
//!   numbering property.
//! * [`widthcalc`] evaluates the bandwidth and block-radius formulas, both
//!   recursively and in closed form, and assembles the matrices they describe.
//! * [`decomp`] constructs and validates tree and path decompositions.
//! * [`oracles`] holds the exhaustive solvers used as ground truth.
//! * [`bounds`] holds brambles, transversals and spectral lower bounds.
//! * [`pace`] reads and writes the PACE `.gr` and `.td` formats.

pub mod bounds;
pub mod decomp;
pub mod error;
pub mod graphs;
pub mod hales;
pub mod oracles;
pub mod pace;
pub mod widthcalc;

pub use error::{Error, Result};
pub use graphs::{FamilyKind, FamilySpec, Graph, Label};
