//! Markov loop soups on finite weighted graphs.
//!
//! A transient symmetric Markov chain is specified by nonnegative edge
//! conductances `C` and a killing measure `κ` on the vertices. This crate
//! computes the exact potential-theoretic quantities of such a chain (Green
//! matrices, hitting kernels, determinants, trace models, loop-measure
//! functionals) and samples the random objects the theory describes (Poisson
//! loop ensembles and their occupation fields, Gaussian free fields, bridges,
//! killed paths, Wilson spanning trees with their erased loops).
//!
//! Every sampler is seeded and reproducible, and the [`harness`] module wires
//! samplers against closed forms into machine-readable verification reports.

pub mod error;
pub mod field;
pub mod graph;
pub mod green;
pub mod harness;
pub mod linalg;
pub mod measure;
pub mod permanent;
pub mod report;
pub mod rng;
pub mod soup;
pub mod special;
pub mod stats;
pub mod wilson;

pub use error::{Error, Result};
pub use graph::{Current, GraphModel};
pub use green::{PotentialBundle, TraceModel};
pub use measure::DiscreteLoopClass;
pub use report::Report;
pub use soup::{LoopSoup, MarkedLoop, NetworkSummary, OccupationField, Path, SoupSampler};
pub use wilson::{ErasureResult, SpanningTree};
