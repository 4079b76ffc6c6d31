//! Distinguished classes in each supported mode, robust radii and the
//! assembled pointed persistence modules.

pub mod assemble;
pub mod degree;
pub mod mode;
pub mod module;
pub mod signs;
pub mod winding;

pub use assemble::{
    analyze_classes, analyze_with_probe, analyze_with_ray, assemble_pointed_module, direct_transition, ClassData, RobustRadius,
    Witness,
};
pub use degree::{choose_probe, degree_cocycle, probe_is_regular};
pub use mode::{Coefficients, Mode, ModeChoice};
pub use module::PointedModule;
pub use signs::{sign_obstruction, sign_vector, SignVector, SignWitness};
pub use winding::{choose_ray, ray_is_admissible, winding_cocycle};
