use num_traits::Zero;

use super::cochain::CochainComplex;
use crate::error::{Error, Result};
use crate::exact::smith::{smith_with, Track};
use crate::exact::{EchelonBasis, Field, Int, IntMatrix};

/// The quotient `K / R` of lattices `R ⊆ K ⊆ ℤᴺ`, in Smith-adapted coordinates.
#[derive(Clone, Debug)]
pub struct Subquotient {
    k: EchelonBasis,
    u: IntMatrix,
    u_inv: IntMatrix,
    kept: Vec<usize>,
    invariants: Vec<Int>,
}

impl Subquotient {
    /// `relations` are vectors of the ambient lattice that must lie in `k`.
    pub fn new(k: EchelonBasis, relations: Vec<Vec<Int>>) -> Result<Subquotient> {
        let rels = EchelonBasis::span(k.ambient_dim(), relations);
        let rank = k.rank();
        let columns = rels
            .vectors()
            .iter()
            .map(|r| k.coords(r).ok_or_else(|| Error::Invariant("relation outside the cycle lattice".into())))
            .collect::<Result<Vec<_>>>()?;
        let rel = IntMatrix::from_columns(rank, &columns);
        let smith = smith_with(&rel, Track { left: true, left_inverse: true, ..Track::default() });
        let mut kept = Vec::new();
        let mut invariants = Vec::new();
        for i in 0..rank {
            let d = if i < smith.rank { smith.s[(i, i)].clone() } else { Int::zero() };
            if !d.is_one() {
                kept.push(i);
                invariants.push(d);
            }
        }
        Ok(Subquotient { k, u: smith.u.expect("tracked"), u_inv: smith.u_inv.expect("tracked"), kept, invariants })
    }

    /// `0` for a free summand, `d > 1` for `ℤ/d`.
    pub fn invariants(&self) -> &[Int] {
        &self.invariants
    }

    /// Ambient representatives of the generators.
    pub fn generators(&self) -> Vec<Vec<Int>> {
        self.kept.iter().map(|&i| self.k.combine(&self.u_inv.column(i))).collect()
    }

    /// Coordinates of the class of `z`, or `None` if `z ∉ K`. Torsion
    /// coordinates are reduced to `0..d`.
    pub fn coords(&self, z: &[Int]) -> Option<Vec<Int>> {
        let c = self.k.coords(z)?;
        let y = self.u.mul_vec(&c);
        Some(
            self.kept
                .iter()
                .zip(&self.invariants)
                .map(|(&i, d)| if d.is_zero() { y[i].clone() } else { y[i].mod_floor(d) })
                .collect(),
        )
    }
}

#[derive(Clone, Debug)]
enum Presentation {
    Direct(Subquotient),
    Sub { ambient: Box<Group>, inner: Subquotient },
}

/// A finitely generated abelian group of cohomology classes with explicit
/// cocycle generators.
#[derive(Clone, Debug)]
pub struct Group {
    pub degree: usize,
    pub invariants: Vec<Int>,
    /// Cocycle representatives of the generators.
    pub generators: Vec<Vec<Int>>,
    presentation: Presentation,
}

impl Group {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<Int> {
        self.invariants.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Coordinates of the class of the cocycle `z`; `None` when `z` is not a
    /// cocycle or its class is not in this group.
    pub fn coords(&self, z: &[Int]) -> Option<Vec<Int>> {
        match &self.presentation {
            Presentation::Direct(sq) => sq.coords(z),
            Presentation::Sub { ambient, inner } => inner.coords(&ambient.coords(z)?),
        }
    }

    /// Whether the coordinate vector represents the zero class.
    pub fn is_zero_class(&self, coords: &[Int]) -> bool {
        coords.iter().zip(&self.invariants).all(|(c, d)| if d.is_zero() { c.is_zero() } else { c.mod_floor(d).is_zero() })
    }

    /// Dimension of the group tensored with a field.
    pub fn dim_over(&self, field: Field) -> usize {
        match field {
            Field::Rationals => self.free_rank(),
            Field::Prime(p) => self.invariants.iter().filter(|d| d.is_zero() || d.rem_u64(p) == 0).count(),
        }
    }
}

/// `Hᵠ` of a cochain complex over ℤ.
pub fn cohomology(cc: &CochainComplex<'_>, q: usize) -> Result<Group> {
    let cycles = EchelonBasis::kernel(&cc.coboundary(q));
    let boundaries = cc.incoming(q).columns();
    let sq = Subquotient::new(cycles, boundaries)?;
    Ok(Group { degree: q, invariants: sq.invariants().to_vec(), generators: sq.generators(), presentation: Presentation::Direct(sq) })
}

/// Matrix of a cochain map on cohomology, in the groups' generators.
pub fn induced_matrix(source: &Group, target: &Group, map: impl Fn(&[Int]) -> Vec<Int>) -> Result<IntMatrix> {
    let columns = source
        .generators
        .iter()
        .map(|g| {
            target.coords(&map(g)).ok_or_else(|| Error::Invariant("image of a generator is not a cocycle of the target".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(target.rank(), &columns))
}

/// The kernel of `j: source → target` (a matrix in the groups' generators)
/// as a subgroup of `source`.
pub fn kernel_subgroup(j: &IntMatrix, source: &Group, target: &Group) -> Result<Group> {
    let (a, b) = (source.rank(), target.rank());
    assert_eq!(j.shape(), (b, a), "map shape");
    // x ∈ ker j ⇔ J·x ∈ diag(target invariants)·ℤᵇ, so project ker [J | D] to the first block.
    let mut combined = IntMatrix::zeros(b, a + b);
    for r in 0..b {
        for c in 0..a {
            combined[(r, c)] = j[(r, c)].clone();
        }
        combined[(r, a + r)] = target.invariants[r].clone();
    }
    let kernel = EchelonBasis::kernel(&combined);
    let projected: Vec<Vec<Int>> = kernel.vectors().iter().map(|v| v[..a].to_vec()).collect();
    let lattice = EchelonBasis::span(a, projected);
    let relations: Vec<Vec<Int>> = source
        .invariants
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| {
            let mut e = vec![Int::zero(); a];
            e[i] = d.clone();
            e
        })
        .collect();
    let inner = Subquotient::new(lattice, relations)?;
    let dim = source.generators.first().map_or(0, Vec::len);
    let generators = inner
        .generators()
        .iter()
        .map(|c| {
            let mut z = vec![Int::zero(); dim];
            for (coef, g) in c.iter().zip(&source.generators) {
                if !coef.is_zero() {
                    for (acc, x) in z.iter_mut().zip(g) {
                        *acc += &(coef * x);
                    }
                }
            }
            z
        })
        .collect();
    Ok(Group {
        degree: source.degree,
        invariants: inner.invariants().to_vec(),
        generators,
        presentation: Presentation::Sub { ambient: Box::new(source.clone()), inner },
    })
}

/// `dim Hᵠ(C; F)` computed directly from ranks over `F`.
pub fn field_dimension(cc: &CochainComplex<'_>, q: usize, field: Field) -> usize {
    cc.rank(q) - field.rank_int(&cc.coboundary(q)) - field.rank_int(&cc.incoming(q))
}

/// `δ[z]`: the coboundary of the zero extension of a cocycle on the
/// subcomplex, as a relative cochain.
pub fn connecting_delta(
    sub: &CochainComplex<'_>,
    whole: &CochainComplex<'_>,
    relative: &CochainComplex<'_>,
    q: usize,
    z: &[Int],
) -> Result<Vec<Int>> {
    if !sub.coboundary(q).mul_vec(z).iter().all(Int::is_zero) {
        return Err(Error::Invariant("connecting map applied to a non-cocycle".into()));
    }
    let extended = whole.transfer(sub, q, z);
    let image = whole.coboundary(q).mul_vec(&extended);
    let back = relative.transfer(whole, q + 1, &image);
    debug_assert_eq!(whole.transfer(relative, q + 1, &back), image);
    Ok(back)
}

#[cfg(test)]
mod tests {
    use super::super::cochain::Support;
    use super::*;
    use crate::exact::int_matrix;
    use crate::fixtures;
    use crate::simplicial::{Complex, Subcomplex};

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn circle_and_points() {
        let circle = Complex::build(&[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]]).unwrap();
        let cc = CochainComplex::new(&circle, Support::Whole);
        let h1 = cohomology(&cc, 1).unwrap();
        assert_eq!(h1.invariants, ints(&[0]));
        let h0 = cohomology(&cc, 0).unwrap();
        assert_eq!(h0.invariants, ints(&[0]));

        let points = Complex::build(&[vec!["a"], vec!["b"]]).unwrap();
        let cc = CochainComplex::new(&points, Support::Whole);
        assert_eq!(field_dimension(&cc, 0, Field::Prime(2)), 2);
    }

    #[test]
    fn relative_top_class_of_the_grid() {
        let f = fixtures::grid_identity();
        let x = f.complex();
        let boundary = Subcomplex::full(x, |v| x.vertex_id(v) != "c");
        let rel = CochainComplex::new(x, Support::Relative(&boundary));
        let whole = CochainComplex::new(x, Support::Whole);
        let h_rel = cohomology(&rel, 2).unwrap();
        assert_eq!(h_rel.invariants, ints(&[0]));
        let h_abs = cohomology(&whole, 2).unwrap();
        assert!(h_abs.is_trivial());
        let j = induced_matrix(&h_rel, &h_abs, |z| whole.transfer(&rel, 2, z)).unwrap();
        let ker = kernel_subgroup(&j, &h_rel, &h_abs).unwrap();
        assert_eq!(ker.invariants, ints(&[0]));
        // Any single triangle cochain generates.
        let mut z = vec![Int::zero(); rel.rank(2)];
        z[3] = Int::from(1);
        assert_eq!(ker.coords(&z).unwrap().len(), 1);
        assert_eq!(ker.coords(&z).unwrap()[0].abs(), Int::from(1));
    }

    #[test]
    fn kernel_with_torsion() {
        // Fake groups ℤ ⊕ ℤ/4 → ℤ/2 with j = [1 1]: kernel {(x, y) : x + y even}.
        let src = Group {
            degree: 0,
            invariants: ints(&[0, 4]),
            generators: vec![ints(&[1, 0]), ints(&[0, 1])],
            presentation: Presentation::Direct(
                Subquotient::new(EchelonBasis::span(2, vec![ints(&[1, 0]), ints(&[0, 1])]), vec![ints(&[0, 4])]).unwrap(),
            ),
        };
        let tgt = Group {
            degree: 0,
            invariants: ints(&[2]),
            generators: vec![ints(&[1])],
            presentation: Presentation::Direct(
                Subquotient::new(EchelonBasis::span(1, vec![ints(&[1])]), vec![ints(&[2])]).unwrap(),
            ),
        };
        let ker = kernel_subgroup(&int_matrix(&[&[1, 1]]), &src, &tgt).unwrap();
        // Generated by (1, 1) of infinite order and (0, 2) of order 2.
        assert_eq!(ker.invariants, ints(&[2, 0]));
        assert!(ker.coords(&ints(&[1, 1])).is_some());
        assert!(ker.coords(&ints(&[1, 0])).is_none());
        assert!(ker.coords(&ints(&[0, 2])).is_some());
    }

    #[test]
    fn uct_on_projective_plane() {
        // Six-vertex RP²: H¹ = 0, H² = ℤ/2, so dim H¹(𝔽₂) = dim H²(𝔽₂) = 1.
        let rp2 = [
            ["1", "2", "3"], ["1", "3", "4"], ["1", "4", "5"], ["1", "5", "6"], ["1", "2", "6"],
            ["2", "3", "5"], ["3", "4", "6"], ["2", "4", "5"], ["3", "5", "6"], ["2", "4", "6"],
        ];
        let rp2: Vec<Vec<&str>> = rp2.iter().map(|t| t.to_vec()).collect();
        let x = Complex::build(&rp2).unwrap();
        let cc = CochainComplex::new(&x, Support::Whole);
        let h1 = cohomology(&cc, 1).unwrap();
        let h2 = cohomology(&cc, 2).unwrap();
        assert!(h1.is_trivial());
        assert_eq!(h2.invariants, ints(&[2]));
        assert_eq!(field_dimension(&cc, 1, Field::Prime(2)), 1);
        assert_eq!(field_dimension(&cc, 2, Field::Prime(2)), 1);
        assert_eq!(field_dimension(&cc, 2, Field::Rationals), 0);
        assert_eq!(h2.dim_over(Field::Prime(2)), 1);
    }
}
