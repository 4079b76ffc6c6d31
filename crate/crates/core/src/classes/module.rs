use num_traits::{One, Zero};

use super::mode::{Coefficients, Mode};
use crate::error::{Error, Result};
use crate::exact::{ExactRadius, Field, Int, RatMatrix, Rational};

/// A sampled pointed persistence module: one group per sample radius, the
/// transition maps between consecutive samples and a distinguished element
/// per sample.
///
/// Over ℤ entries are integers and `invariants` lists the cyclic summands
/// (`0` for ℤ, `d` for ℤ/d); over a field every invariant is `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedModule {
    pub mode: Mode,
    pub coefficients: Coefficients,
    pub samples: Vec<ExactRadius>,
    pub invariants: Vec<Vec<Int>>,
    /// `transitions[i]` maps sample `i` to sample `i + 1` (columns are sources).
    pub transitions: Vec<RatMatrix>,
    pub distinguished: Vec<Vec<Rational>>,
    /// In sign mode the distinguished bar ends at the robust radius, which is
    /// decided by extendability rather than by the sign vectors.
    pub injected: Option<ExactRadius>,
}

impl PointedModule {
    /// A module over a field, with entries reduced into the field.
    pub fn over_field(
        mode: Mode,
        field: Field,
        samples: Vec<ExactRadius>,
        transitions: Vec<RatMatrix>,
        distinguished: Vec<Vec<Rational>>,
    ) -> Result<PointedModule> {
        let invariants = distinguished.iter().map(|a| vec![Int::zero(); a.len()]).collect();
        let module = PointedModule {
            mode,
            coefficients: Coefficients::Field(field),
            samples,
            invariants,
            transitions: transitions.iter().map(|t| field.reduce_matrix(t)).collect(),
            distinguished: distinguished.iter().map(|a| a.iter().map(|x| field.reduce(x)).collect()).collect(),
            injected: None,
        };
        module.validate()?;
        Ok(module)
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.invariants.iter().map(Vec::len).collect()
    }

    pub fn field(&self) -> Option<Field> {
        match self.coefficients {
            Coefficients::Integers => None,
            Coefficients::Field(f) => Some(f),
        }
    }

    fn reduce_coords(&self, level: usize, v: &[Rational]) -> Vec<Rational> {
        match self.coefficients {
            Coefficients::Field(f) => v.iter().map(|x| f.reduce(x)).collect(),
            Coefficients::Integers => v
                .iter()
                .zip(&self.invariants[level])
                .map(|(x, d)| {
                    if d.is_zero() {
                        x.clone()
                    } else {
                        let d = d.to_rational();
                        x - (x / &d).floor() * &d
                    }
                })
                .collect(),
        }
    }

    /// Whether the coordinate vector at `level` is the zero element.
    pub fn is_zero_at(&self, level: usize, v: &[Rational]) -> bool {
        self.reduce_coords(level, v).iter().all(Zero::is_zero)
    }

    /// Shapes agree and every transition maps distinguished to distinguished.
    pub fn validate(&self) -> Result<()> {
        let k = self.samples.len();
        if self.invariants.len() != k || self.distinguished.len() != k || self.transitions.len() + 1 != k.max(1) {
            return Err(Error::Invariant("module arrays have inconsistent lengths".into()));
        }
        for (i, t) in self.transitions.iter().enumerate() {
            if t.shape() != (self.invariants[i + 1].len(), self.invariants[i].len()) {
                return Err(Error::Invariant(format!("transition {i} has shape {:?}", t.shape())));
            }
            let image = self.reduce_coords(i + 1, &t.mul_vec(&self.distinguished[i]));
            if image != self.reduce_coords(i + 1, &self.distinguished[i + 1]) {
                return Err(Error::Invariant(format!("transition {i} does not preserve the distinguished element")));
            }
        }
        for (i, a) in self.distinguished.iter().enumerate() {
            if a.len() != self.invariants[i].len() {
                return Err(Error::Invariant(format!("distinguished element {i} has the wrong length")));
            }
        }
        Ok(())
    }

    /// `φ_{j−1} ∘ … ∘ φ_i` for `i ≤ j` (the identity when `i = j`).
    pub fn composite(&self, i: usize, j: usize) -> RatMatrix {
        assert!(i <= j && j < self.samples.len(), "composite range");
        let mut m = RatMatrix::identity(self.invariants[i].len());
        for t in &self.transitions[i..j] {
            m = t.mul(&m);
            if let Some(f) = self.field() {
                m = f.reduce_matrix(&m);
            }
        }
        m
    }

    /// The module tensored with a field: free summands survive, as do `ℤ/d`
    /// summands with `p | d` over `𝔽_p`.
    pub fn tensor(&self, field: Field) -> Result<PointedModule> {
        if let Coefficients::Field(f) = self.coefficients {
            if f == field {
                return Ok(self.clone());
            }
            return Err(Error::Input(format!("module over {f} cannot be reduced to {field}")));
        }
        let keep = |d: &Int| match field {
            Field::Rationals => d.is_zero(),
            Field::Prime(p) => d.is_zero() || d.rem_u64(p) == 0,
        };
        let kept: Vec<Vec<usize>> = self
            .invariants
            .iter()
            .map(|inv| inv.iter().enumerate().filter(|(_, d)| keep(d)).map(|(i, _)| i).collect())
            .collect();
        let transitions = self
            .transitions
            .iter()
            .enumerate()
            .map(|(i, t)| t.select(&kept[i + 1], &kept[i]))
            .collect();
        let distinguished = self
            .distinguished
            .iter()
            .zip(&kept)
            .map(|(a, ks)| ks.iter().map(|&k| a[k].clone()).collect())
            .collect();
        let mut module = PointedModule::over_field(self.mode, field, self.samples.clone(), transitions, distinguished)?;
        module.injected = self.injected.clone();
        Ok(module)
    }
}

/// The inclusion-of-components matrix: column `c` has a 1 in every row whose
/// component lies in component `c`.
pub fn component_matrix(rows: usize, cols: usize, parent_of_row: impl Fn(usize) -> usize) -> RatMatrix {
    let mut m = RatMatrix::zeros(rows, cols);
    for r in 0..rows {
        m[(r, parent_of_row(r))] = Rational::one();
    }
    m
}
