use num_traits::Zero;

use super::Complex;
use crate::error::{Error, Result};
use crate::exact::{interpolate, simplex_norm_min, ExactRadius, Norm, NormMin, Rational};

/// A simplexwise-linear map `X → ℝⁿ` given by rational values on the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLMap {
    complex: Complex,
    values: Vec<Vec<Rational>>,
    n: usize,
    norm: Norm,
}

impl PLMap {
    /// `values[v]` is the value at vertex index `v` of `complex`.
    pub fn new(complex: Complex, values: Vec<Vec<Rational>>, n: usize, norm: Norm) -> Result<PLMap> {
        if n == 0 {
            return Err(Error::DimensionMismatch("codomain dimension must be at least 1".into()));
        }
        if values.len() != complex.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} vertices",
                values.len(),
                complex.vertex_count()
            )));
        }
        if let Some((v, bad)) = values.iter().enumerate().find(|(_, x)| x.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "vertex `{}` has a value with {} components, expected {n}",
                complex.vertex_id(v),
                bad.len()
            )));
        }
        Ok(PLMap { complex, values, n, norm })
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn values(&self) -> &[Vec<Rational>] {
        &self.values
    }

    pub fn value(&self, v: usize) -> &[Rational] {
        &self.values[v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the domain complex.
    pub fn m(&self) -> usize {
        self.complex.dim()
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn vertex_norm(&self, v: usize) -> ExactRadius {
        self.norm.of(&self.values[v])
    }

    pub fn simplex_values(&self, simplex: &[usize]) -> Vec<Vec<Rational>> {
        simplex.iter().map(|&v| self.values[v].clone()).collect()
    }

    /// `f` at the point with barycentric coordinates `lambda` in `simplex`.
    pub fn eval(&self, simplex: &[usize], lambda: &[Rational]) -> Vec<Rational> {
        interpolate(&self.simplex_values(simplex), lambda)
    }

    pub fn simplex_min(&self, simplex: &[usize]) -> NormMin {
        simplex_norm_min(&self.simplex_values(simplex), self.norm).expect("values share the codomain dimension")
    }

    /// The same complex with new vertex values.
    pub fn with_values(&self, values: Vec<Vec<Rational>>) -> Result<PLMap> {
        let n = values.first().map_or(self.n, Vec::len);
        PLMap::new(self.complex.clone(), values, n, self.norm)
    }

    pub fn map_values(&self, g: impl Fn(&[Rational]) -> Vec<Rational>) -> Result<PLMap> {
        self.with_values(self.values.iter().map(|v| g(v)).collect())
    }

    pub fn scaled(&self, c: &Rational) -> PLMap {
        self.map_values(|v| v.iter().map(|x| x * c).collect()).expect("same shape")
    }

    pub fn negated(&self) -> PLMap {
        self.map_values(|v| v.iter().map(|x| -x).collect()).expect("same shape")
    }

    /// Composition with a linear map `ℝⁿ → ℝⁿ` given by its matrix rows.
    pub fn composed(&self, matrix: &[Vec<Rational>]) -> Result<PLMap> {
        if matrix.len() != self.n || matrix.iter().any(|r| r.len() != self.n) {
            return Err(Error::DimensionMismatch("linear map does not match the codomain".into()));
        }
        self.map_values(|v| {
            matrix
                .iter()
                .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect()
        })
    }
}
