//! End-to-end analysis of one map: subdivision, filtration, classes, module
//! and pointed barcode.

use crate::classes::{analyze_classes, assemble_pointed_module, ClassData, Coefficients, Mode, ModeChoice, PointedModule};
use crate::error::Result;
use crate::exact::{ExactRadius, Field};
use crate::filtration::{build_filtration, Filtration};
use crate::par::Execution;
use crate::persistence::{barcode, PointedBarcode};
use crate::simplicial::{star_subdivide, PLMap};

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub mode: ModeChoice,
    /// Barcode coefficients; `None` picks the mode's default.
    pub field: Option<Field>,
    pub seed: u64,
    pub exec: Execution,
}

impl Default for Options {
    fn default() -> Self {
        Options { mode: ModeChoice::Auto, field: None, seed: DEFAULT_SEED, exec: Execution::default() }
    }
}

impl Options {
    pub fn with_mode(mut self, mode: Mode) -> Options {
        self.mode = ModeChoice::Fixed(mode);
        self
    }

    pub fn with_field(mut self, field: Field) -> Options {
        self.field = Some(field);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Options {
        self.seed = seed;
        self
    }

    pub fn with_exec(mut self, exec: Execution) -> Options {
        self.exec = exec;
        self
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub mode: Mode,
    pub field: Field,
    pub determinacy: bool,
    pub seed: u64,
    /// Built on the subdivided map, which is `filtration.f`.
    pub filtration: Filtration,
    pub classes: ClassData,
    /// `classes.module` tensored with `field`.
    pub module: PointedModule,
    pub barcode: PointedBarcode,
}

impl Analysis {
    pub fn robust_radius(&self) -> &ExactRadius {
        &self.classes.robust.radius
    }

    pub fn criticals(&self) -> &[ExactRadius] {
        &self.filtration.criticals.values
    }
}

/// Subdivides `f` and builds its filtration.
pub fn filtration_of(f: &PLMap) -> Result<Filtration> {
    build_filtration(&star_subdivide(f)?)
}

pub fn analyze(f: &PLMap, options: &Options) -> Result<Analysis> {
    let mode = options.mode.resolve(f.n(), f.m())?;
    let field = options.field.unwrap_or(mode.default_field());
    let filtration = filtration_of(f)?;
    let classes = analyze_classes(&filtration, mode, options.seed, options.exec)?;
    let module = assemble_pointed_module(&classes, Coefficients::Field(field))?;
    let barcode = barcode(&module)?;
    Ok(Analysis {
        mode,
        field,
        determinacy: mode.determinacy(f.n(), f.m()),
        seed: options.seed,
        filtration,
        classes,
        module,
        barcode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::persistence::Interval;

    #[test]
    fn defaults_per_mode() {
        let a = analyze(&fixtures::edge(), &Options::default()).unwrap();
        assert_eq!((a.mode, a.field), (Mode::Signs, Field::Prime(2)));
        let unit = Interval::new(ExactRadius::zero(), ExactRadius::int(1)).unwrap();
        assert_eq!(a.barcode.distinguished, Some(unit.clone()));
        let g = analyze(&fixtures::grid_identity(), &Options::default()).unwrap();
        assert_eq!((g.mode, g.field), (Mode::Hopf, Field::Rationals));
        assert_eq!(g.barcode.distinguished, Some(unit));
        assert!(g.determinacy);
    }
}
