use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// A finite abstract simplicial complex.
///
/// Vertices are stored in lexicographic order of their ids and a simplex is
/// the strictly increasing list of its vertex indices, so the index order is
/// also the orientation convention for cochains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    /// `simplices[q]` lists the q-simplices in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
}

impl Complex {
    /// Closes the given maximal simplices under taking faces.
    pub fn build<S: AsRef<str>>(maximal: &[Vec<S>]) -> Result<Complex> {
        if maximal.is_empty() {
            return Err(Error::InvalidComplex("no simplices given".into()));
        }
        let mut ids = BTreeSet::new();
        for simplex in maximal {
            if simplex.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            let mut seen = BTreeSet::new();
            for v in simplex {
                if !seen.insert(v.as_ref()) {
                    return Err(Error::InvalidComplex(format!("vertex `{}` repeated in a simplex", v.as_ref())));
                }
                ids.insert(v.as_ref().to_string());
            }
        }
        let vertices: Vec<String> = ids.into_iter().collect();
        let index: HashMap<String, usize> = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let tops = maximal.iter().map(|s| {
            let mut t: Vec<usize> = s.iter().map(|v| index[v.as_ref()]).collect();
            t.sort_unstable();
            t
        });
        Ok(Complex::from_indexed(vertices, tops))
    }

    /// Builds from vertex ids (already sorted and distinct) and simplices given
    /// as sorted index lists.
    pub(crate) fn from_indexed(vertices: Vec<String>, tops: impl IntoIterator<Item = Vec<usize>>) -> Complex {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
        for top in tops {
            let k = top.len();
            // Every non-empty subset of the simplex is a face.
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| top[i]).collect();
                let q = face.len() - 1;
                if by_dim.len() <= q {
                    by_dim.resize_with(q + 1, BTreeSet::new);
                }
                by_dim[q].insert(face);
            }
        }
        let simplices: Vec<Vec<Vec<usize>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let lookup = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Complex { vertices, index, simplices, lookup }
    }

    pub fn dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// The q-simplices in lexicographic order (empty beyond the dimension).
    pub fn simplices(&self, q: usize) -> &[Vec<usize>] {
        self.simplices.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn simplex_index(&self, simplex: &[usize]) -> Option<usize> {
        let q = simplex.len().checked_sub(1)?;
        self.lookup.get(q)?.get(simplex).copied()
    }

    /// Total number of simplices of all dimensions.
    pub fn len(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// All simplices, by increasing dimension.
    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Vec<usize>> {
        let mut covered: BTreeSet<&Vec<usize>> = BTreeSet::new();
        for level in self.simplices.iter().skip(1) {
            for s in level {
                for skip in 0..s.len() {
                    // Faces one dimension down suffice: coverage is transitive.
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    let q = face.len() - 1;
                    covered.insert(&self.simplices[q][self.lookup[q][&face]]);
                }
            }
        }
        self.all_simplices().filter(|s| !covered.contains(s)).cloned().collect()
    }

    /// Vertex ids of a simplex.
    pub fn labels(&self, simplex: &[usize]) -> Vec<String> {
        simplex.iter().map(|&v| self.vertices[v].clone()).collect()
    }
}

/// `simplex` with its `i`-th vertex removed.
pub fn face(simplex: &[usize], i: usize) -> Vec<usize> {
    let mut f = Vec::with_capacity(simplex.len().saturating_sub(1));
    f.extend_from_slice(&simplex[..i]);
    f.extend_from_slice(&simplex[i + 1..]);
    f
}
