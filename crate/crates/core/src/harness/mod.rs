//! Perturbations and end-to-end property checks: stability, invariances
//! and exactness of the cohomological constructions.

mod exactness;
mod invariance;
mod perturb;
mod report;
mod stability;

pub use exactness::check_exactness;
pub use invariance::{check_invariances, RESAMPLES};
pub use perturb::{perturb, PerturbSpec, DEFAULT_DENOMINATOR};
pub use report::{Check, Failure, Report};
pub use stability::check_stability;
