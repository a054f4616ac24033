//! Graph energy of regular graphs.
//!
//! The energy of a graph is the sum of the absolute values of its adjacency
//! eigenvalues. For a k-regular graph on n vertices it never exceeds
//! `e0 = k + sqrt(k(n-1)(n-k))`. This crate builds two families that push
//! the ratio `energy / e0` toward opposite ends of `(0, 1]`: Paley graphs
//! (ratio tends to 1) and rings of cliques (ratio tends to 0), and checks
//! the supporting inequalities numerically.

pub mod bounds;
pub mod edgelist;
pub mod error;
pub mod finitefield;
pub mod format;
pub mod graph;
pub mod spectral;
pub mod tolerance;
pub mod verify;

pub use bounds::{e0, energy_ratio, energy_report, ratio_table, Family, Mode, RatioRow};
pub use error::{Error, Result};
pub use finitefield::PrimeModulus;
pub use graph::{Edge, Graph};
pub use spectral::{eigenvalues, energy, spectral_radius, EnergyReport, Spectrum};
