//! Integral cochain complexes of complexes and pairs, their cohomology
//! groups, induced maps and the connecting homomorphism.

pub mod cochain;
pub mod group;

pub use cochain::{CochainComplex, Support};
pub use group::{cohomology, connecting_delta, field_dimension, induced_matrix, kernel_subgroup, Group, Subquotient};
