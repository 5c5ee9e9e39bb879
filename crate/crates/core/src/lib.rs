//! Colourful and induced colourful paths in properly coloured graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bit-row adjacency graphs, graph6 I/O, girth, components and
//!   the Mycielski construction.
//! * [`colouring`]: proper-colouring checks, exact chromatic number and the
//!   enumeration of proper colour partitions.
//! * [`greedy`]: the refined greedy relabelling and decreasing paths.
//! * [`paths`]: colourful path construction, induced colourful path search and
//!   the brute-force oracle used to cross-check it.
//! * [`harness`]: exhaustive verification of single graphs and graph6 streams,
//!   with checkpointing.
//!
//! Data-parallel work goes through [`exec`], which uses rayon when the
//! `parallel` feature is enabled and runs sequentially otherwise.

pub mod colouring;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod paths;

pub use colouring::{ColourPartition, Colouring};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId, MAX_VERTICES};
pub use greedy::{DecreasingPath, Labelling, OrderPolicy};
pub use paths::{Path, PathClass};
