use crate::exact::{Int, IntMatrix};
use crate::simplicial::{face, Complex, Subcomplex};

/// Which simplices carry cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support<'a> {
    /// Cochains on the subcomplex.
    Absolute(&'a Subcomplex),
    /// Cochains on the whole complex.
    Whole,
    /// Cochains on the complex that vanish on the subcomplex.
    Relative(&'a Subcomplex),
}

/// The ordered-simplex cochain complex of a complex, a subcomplex or a pair.
///
/// The basis of `Cᵠ` is the list `cells(q)` of simplex indices into the
/// parent complex; a cochain is an integer vector over that basis.
#[derive(Clone, Debug)]
pub struct CochainComplex<'a> {
    complex: &'a Complex,
    cells: Vec<Vec<usize>>,
    position: Vec<Vec<Option<usize>>>,
}

impl<'a> CochainComplex<'a> {
    pub fn new(complex: &'a Complex, support: Support<'_>) -> CochainComplex<'a> {
        let top = complex.dim() + 1;
        let cells: Vec<Vec<usize>> = (0..=top)
            .map(|q| {
                let all = 0..complex.simplices(q).len();
                match support {
                    Support::Whole => all.collect(),
                    Support::Absolute(sub) => sub.cells(q).to_vec(),
                    Support::Relative(sub) => all.filter(|&i| !sub.contains(q, i)).collect(),
                }
            })
            .collect();
        let position = cells
            .iter()
            .enumerate()
            .map(|(q, cs)| {
                let mut pos = vec![None; complex.simplices(q).len()];
                for (k, &i) in cs.iter().enumerate() {
                    pos[i] = Some(k);
                }
                pos
            })
            .collect();
        CochainComplex { complex, cells, position }
    }

    pub fn complex(&self) -> &'a Complex {
        self.complex
    }

    pub fn cells(&self, q: usize) -> &[usize] {
        self.cells.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, q: usize) -> usize {
        self.cells(q).len()
    }

    /// Basis position of the parent simplex `(q, index)`, if it carries cochains.
    pub fn position(&self, q: usize, index: usize) -> Option<usize> {
        self.position.get(q).and_then(|p| p[index])
    }

    /// `d: Cᵠ → Cᵠ⁺¹`, `(dz)(τ) = Σᵢ (−1)ⁱ z(τ with vertex i removed)`.
    pub fn coboundary(&self, q: usize) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rank(q + 1), self.rank(q));
        for (row, &t) in self.cells(q + 1).iter().enumerate() {
            let tau = &self.complex.simplices(q + 1)[t];
            for i in 0..tau.len() {
                let sigma = face(tau, i);
                let index = self.complex.simplex_index(&sigma).expect("faces are present");
                if let Some(col) = self.position(q, index) {
                    d[(row, col)] = Int::from(if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        d
    }

    /// `d: Cᵠ⁻¹ → Cᵠ` (zero for `q = 0`).
    pub fn incoming(&self, q: usize) -> IntMatrix {
        if q == 0 {
            IntMatrix::zeros(self.rank(0), 0)
        } else {
            self.coboundary(q - 1)
        }
    }

    /// Moves a q-cochain of `other` into this complex: values on shared
    /// simplices are kept, others dropped, missing ones are zero.
    pub fn transfer(&self, other: &CochainComplex<'_>, q: usize, z: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::from(0); self.rank(q)];
        for (k, &i) in other.cells(q).iter().enumerate() {
            if let Some(p) = self.position(q, i) {
                out[p] = z[k].clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn coboundary_squares_to_zero() {
        let f = fixtures::grid_identity();
        let x = f.complex();
        let boundary = Subcomplex::full(x, |v| x.vertex_id(v) != "c");
        for support in [Support::Whole, Support::Absolute(&boundary), Support::Relative(&boundary)] {
            let c = CochainComplex::new(x, support);
            for q in 0..2 {
                assert!(c.coboundary(q + 1).mul(&c.coboundary(q)).is_zero());
            }
        }
    }

    #[test]
    fn zero_extension_of_a_vertex_cochain() {
        let f = fixtures::edge();
        let x = f.complex();
        let a = Subcomplex::skeleton(x, 0);
        let on_a = CochainComplex::new(x, Support::Absolute(&a));
        let whole = CochainComplex::new(x, Support::Whole);
        let z = vec![Int::from(0), Int::from(1)];
        let ext = whole.transfer(&on_a, 0, &z);
        let delta = whole.coboundary(0).mul_vec(&ext);
        assert_eq!(delta, vec![Int::from(1)]);
        let rel = CochainComplex::new(x, Support::Relative(&a));
        assert_eq!(rel.transfer(&whole, 1, &delta), vec![Int::from(1)]);
    }
}
