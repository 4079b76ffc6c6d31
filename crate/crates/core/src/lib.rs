//! Exact computation of robust zeros of piecewise-linear maps.
//!
//! A map `f: |X| → ℝⁿ` on a finite simplicial complex is subdivided so that
//! every simplex attains `min |f|` at a vertex, filtered by the superlevel
//! subcomplexes `A_r = {|f| ≥ r}`, and summarised by a pointed persistence
//! module whose distinguished bar ends at the robust radius. All arithmetic is
//! exact.

pub mod classes;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod filtration;
pub mod fixtures;
pub mod harness;
pub mod io;
pub mod par;
pub mod persistence;
pub mod pipeline;
pub mod simplicial;

pub use error::{Error, Result};
pub use pipeline::{analyze, Analysis, Options, DEFAULT_SEED};
