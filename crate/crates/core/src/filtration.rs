//! Critical values, sample radii and the nested superlevel subcomplexes.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::radius::rational_sqrt;
use crate::exact::{ExactRadius, Rational};
use crate::simplicial::{PLMap, Subcomplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSet {
    /// Distinct positive values, increasing.
    pub values: Vec<ExactRadius>,
    pub has_zero_min: bool,
}

/// Positive critical values of a subdivided map.
///
/// Fails if some simplex attains its minimum only in its interior, i.e. if
/// the map has not been through [`crate::simplicial::star_subdivide`].
pub fn critical_values(f: &PLMap) -> Result<CriticalSet> {
    for simplex in f.complex().all_simplices().filter(|s| s.len() > 1) {
        if !f.simplex_min(simplex).at_vertex {
            return Err(Error::Invariant(format!(
                "minimum of |f| on {:?} is not attained at a vertex",
                f.complex().labels(simplex)
            )));
        }
    }
    Ok(vertex_criticals(f))
}

fn vertex_criticals(f: &PLMap) -> CriticalSet {
    let mut values: Vec<ExactRadius> = (0..f.complex().vertex_count()).map(|v| f.vertex_norm(v)).collect();
    values.sort();
    values.dedup();
    let has_zero_min = values.first().is_some_and(ExactRadius::is_zero);
    values.retain(|r| !r.is_zero());
    CriticalSet { values, has_zero_min }
}

/// A radius strictly above `s`: `s + 1` when `s` is rational, otherwise the
/// next integer above it.
fn beyond(s: &ExactRadius) -> ExactRadius {
    match s {
        ExactRadius::Rat(x) => ExactRadius::rat(x + Rational::one()),
        ExactRadius::SqrtRat(q) => match rational_sqrt(q) {
            Some(root) => ExactRadius::rat(root + Rational::one()),
            None => {
                let floor: BigInt = q.floor().to_integer();
                ExactRadius::rat(Rational::from_integer(floor.sqrt() + 1))
            }
        },
    }
}

/// One representative radius per constancy interval `(sᵢ, sᵢ₊₁]` plus one
/// beyond the largest critical value.
pub fn sample_radii(c: &CriticalSet) -> Vec<ExactRadius> {
    match c.values.last() {
        None => vec![ExactRadius::int(1)],
        Some(last) => {
            let mut samples = c.values.clone();
            samples.push(beyond(last));
            samples
        }
    }
}

#[derive(Clone, Debug)]
pub struct Filtration {
    pub f: PLMap,
    pub criticals: CriticalSet,
    pub samples: Vec<ExactRadius>,
    /// `levels[i]` is spanned by the vertices with `|f(v)| ≥ samples[i]`.
    pub levels: Vec<Subcomplex>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Superlevel subcomplex at radius `r`.
pub fn level_at(f: &PLMap, r: &ExactRadius) -> Subcomplex {
    let norms: Vec<ExactRadius> = (0..f.complex().vertex_count()).map(|v| f.vertex_norm(v)).collect();
    Subcomplex::full(f.complex(), |v| norms[v] >= *r)
}

pub fn build_filtration(f: &PLMap) -> Result<Filtration> {
    let criticals = critical_values(f)?;
    let samples = sample_radii(&criticals);
    let norms: Vec<ExactRadius> = (0..f.complex().vertex_count()).map(|v| f.vertex_norm(v)).collect();
    let levels = samples.iter().map(|r| Subcomplex::full(f.complex(), |v| norms[v] >= *r)).collect();
    Ok(Filtration { f: f.clone(), criticals, samples, levels })
}
