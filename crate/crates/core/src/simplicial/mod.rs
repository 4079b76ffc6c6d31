//! Simplicial complexes, simplexwise-linear maps and their subdivision.

pub mod complex;
pub mod plmap;
pub mod subcomplex;
pub mod subdivide;

pub use complex::{face, Complex};
pub use plmap::PLMap;
pub use subcomplex::{connected_components, Components, Subcomplex, UnionFind};
pub use subdivide::{star_subdivide, star_subdivide_traced, Subdivision};
