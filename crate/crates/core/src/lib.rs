//! Homological skeletonization of weighted networks.
//!
//! Builds the threshold (Vietoris-Rips) filtration of a weighted graph up to
//! dimension two, computes persistent homology and per-step minimal
//! 1-homology bases, and aggregates them into scaffolds:
//!
//! * the loose scaffold, counting persistence generators per edge;
//! * the minimal scaffold, counting minimal basis cycles per edge and step;
//! * the minimal scaffold with draws, sharing weight among equally short
//!   homologous variants.
//!
//! Random-graph generators, null models and a statistics harness compare the
//! loose and minimal constructions.

pub mod bench;
pub mod complex;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod io;
pub mod minbasis;
pub mod persistence;
pub mod randnet;
pub mod rational;
pub mod scaffold;
pub mod stats;
pub mod union_find;
pub mod z2;

pub use error::{Error, Result};
pub use graph::{build_filtration, orient_filtration, Filtration, Orientation, WeightedGraph};
pub use rational::Rational;
