//! Integer elimination: Smith normal form, column echelon forms, lattice
//! bases and integral solving.

use num_traits::{One, Zero};

use super::{Int, IntMatrix};

/// Which unimodular transforms [`smith_with`] should accumulate.
#[derive(Clone, Copy, Debug, Default)]
pub struct Track {
    pub left: bool,
    pub left_inverse: bool,
    pub right: bool,
    pub right_inverse: bool,
}

impl Track {
    pub const ALL: Track = Track { left: true, left_inverse: true, right: true, right_inverse: true };
}

/// `U · M · V = S` with `S` diagonal, `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub s: IntMatrix,
    pub u: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    pub rank: usize,
}

impl Smith {
    /// Non-zero diagonal entries, in order.
    pub fn divisors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

fn row_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &Int) {
    // row_target -= q * row_source
    for j in 0..m.cols() {
        let s = &m[(source, j)];
        if !s.is_zero() {
            let delta = q * s;
            m[(target, j)] -= &delta;
        }
    }
}

fn col_axpy(m: &mut IntMatrix, target: usize, source: usize, q: &Int) {
    // col_target -= q * col_source
    for i in 0..m.rows() {
        let s = &m[(i, source)];
        if !s.is_zero() {
            let delta = q * s;
            m[(i, target)] -= &delta;
        }
    }
}

impl Work {
    fn row_axpy(&mut self, target: usize, source: usize, q: &Int) {
        row_axpy(&mut self.a, target, source, q);
        if let Some(u) = &mut self.u {
            row_axpy(u, target, source, q);
        }
        if let Some(ui) = &mut self.u_inv {
            col_axpy(ui, source, target, &-q);
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn row_negate(&mut self, i: usize) {
        for x in self.a.row_mut(i) {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in u.row_mut(i) {
                *x = -&*x;
            }
        }
        if let Some(ui) = &mut self.u_inv {
            for r in 0..ui.rows() {
                ui[(r, i)] = -&ui[(r, i)];
            }
        }
    }

    fn col_axpy(&mut self, target: usize, source: usize, q: &Int) {
        col_axpy(&mut self.a, target, source, q);
        if let Some(v) = &mut self.v {
            col_axpy(v, target, source, q);
        }
        if let Some(vi) = &mut self.v_inv {
            row_axpy(vi, source, target, &-q);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    smith_with(m, Track::ALL)
}

/// Smith normal form with minimal-absolute-value pivoting.
pub fn smith_with(m: &IntMatrix, track: Track) -> Smith {
    let (rows, cols) = m.shape();
    let mut w = Work {
        a: m.clone(),
        u: track.left.then(|| IntMatrix::identity(rows)),
        u_inv: track.left_inverse.then(|| IntMatrix::identity(rows)),
        v: track.right.then(|| IntMatrix::identity(cols)),
        v_inv: track.right_inverse.then(|| IntMatrix::identity(cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = &w.a[(i, j)];
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let pivot = w.a[(t, t)].clone();
            for i in t + 1..rows {
                if !w.a[(i, t)].is_zero() {
                    let q = w.a[(i, t)].div_floor(&pivot);
                    w.row_axpy(i, t, &q);
                }
            }
            for j in t + 1..cols {
                if !w.a[(t, j)].is_zero() {
                    let q = w.a[(t, j)].div_floor(&pivot);
                    w.col_axpy(j, t, &q);
                }
            }
            // Remainders smaller than the pivot move into the pivot position.
            let mut smaller: Option<(usize, bool)> = None;
            let mut smallest = pivot.abs();
            for i in t + 1..rows {
                let x = w.a[(i, t)].abs();
                if !x.is_zero() && x < smallest {
                    smallest = x;
                    smaller = Some((i, true));
                }
            }
            for j in t + 1..cols {
                let x = w.a[(t, j)].abs();
                if !x.is_zero() && x < smallest {
                    smallest = x;
                    smaller = Some((j, false));
                }
            }
            match smaller {
                Some((i, true)) => {
                    w.row_swap(t, i);
                    continue;
                }
                Some((j, false)) => {
                    w.col_swap(t, j);
                    continue;
                }
                None => {}
            }
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !w.a[(i, j)].mod_floor(&pivot).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.row_axpy(t, i, &-Int::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.row_negate(t);
        }
        t += 1;
    }
    Smith { s: w.a, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv, rank: t }
}

/// Some integral `x` with `M · x = b`, or `None` when none exists.
pub fn solve_integer(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let smith = smith_with(m, Track { left: true, right: true, ..Track::default() });
    let ub = smith.u.as_ref().expect("tracked").mul_vec(b);
    let mut y = vec![Int::zero(); m.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        if i < smith.rank {
            y[i] = ubi.div_exact(&smith.s[(i, i)])?;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    Some(smith.v.as_ref().expect("tracked").mul_vec(&y))
}

/// Column echelon form `M · V = E` computed on a column-major copy.
///
/// The first `rank` columns of `E` have strictly increasing pivot rows with
/// zeros above each pivot and positive pivots; the remaining columns are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub columns: Vec<Vec<Int>>,
    pub pivots: Vec<usize>,
    pub transform: Option<Vec<Vec<Int>>>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn axpy(target: &mut [Int], source: &[Int], q: &Int) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= &(q * s);
        }
    }
}

pub fn column_echelon(rows: usize, mut columns: Vec<Vec<Int>>, track: bool) -> ColumnEchelon {
    let ncols = columns.len();
    let mut transform = track.then(|| {
        (0..ncols)
            .map(|j| {
                let mut e = vec![Int::zero(); ncols];
                e[j] = Int::one();
                e
            })
            .collect::<Vec<_>>()
    });
    let mut pivots = Vec::new();
    let mut pc = 0;
    for i in 0..rows {
        if pc == ncols {
            break;
        }
        let mut found = false;
        loop {
            let mut best: Option<usize> = None;
            for j in pc..ncols {
                let x = &columns[j][i];
                if !x.is_zero() && best.is_none_or(|b| x.abs() < columns[b][i].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            found = true;
            columns.swap(pc, b);
            if let Some(v) = &mut transform {
                v.swap(pc, b);
            }
            let mut clean = true;
            for j in pc + 1..ncols {
                if columns[j][i].is_zero() {
                    continue;
                }
                let q = columns[j][i].div_floor(&columns[pc][i]);
                let (head, tail) = columns.split_at_mut(j);
                axpy(&mut tail[0], &head[pc], &q);
                if let Some(v) = &mut transform {
                    let (vh, vt) = v.split_at_mut(j);
                    axpy(&mut vt[0], &vh[pc], &q);
                }
                if !columns[j][i].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if found {
            if columns[pc][i].is_negative() {
                for x in columns[pc].iter_mut() {
                    *x = -&*x;
                }
                if let Some(v) = &mut transform {
                    for x in v[pc].iter_mut() {
                        *x = -&*x;
                    }
                }
            }
            pivots.push(i);
            pc += 1;
        }
    }
    ColumnEchelon { columns, pivots, transform }
}

/// A basis of a sublattice of `ℤ^dim` in column echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    columns: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    /// Basis of the lattice spanned by `generators` (each of length `dim`).
    pub fn span(dim: usize, generators: Vec<Vec<Int>>) -> EchelonBasis {
        let mut ech = column_echelon(dim, generators, false);
        let rank = ech.rank();
        ech.columns.truncate(rank);
        EchelonBasis { dim, columns: ech.columns, pivots: ech.pivots }
    }

    /// Basis of `{x : M·x = 0}`; the kernel of an integer matrix is saturated.
    pub fn kernel(m: &IntMatrix) -> EchelonBasis {
        let ech = column_echelon(m.rows(), m.columns(), true);
        let rank = ech.rank();
        let kernel: Vec<Vec<Int>> = ech.transform.expect("tracked").into_iter().skip(rank).collect();
        EchelonBasis::span(m.cols(), kernel)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn vectors(&self) -> &[Vec<Int>] {
        &self.columns
    }

    /// The unique integral coordinates of `z` in this basis, if `z` lies in the lattice.
    pub fn coords(&self, z: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(z.len(), self.dim, "vector length");
        let mut residual = z.to_vec();
        let mut c = Vec::with_capacity(self.columns.len());
        for (col, &p) in self.columns.iter().zip(&self.pivots) {
            // Rows above the pivot are already settled by earlier columns.
            if residual[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let q = residual[p].div_exact(&col[p])?;
            if !q.is_zero() {
                axpy(&mut residual, col, &q);
            }
            c.push(q);
        }
        residual.iter().all(Int::is_zero).then_some(c)
    }

    pub fn contains(&self, z: &[Int]) -> bool {
        self.coords(z).is_some()
    }

    /// `Σ cᵢ · bᵢ`.
    pub fn combine(&self, c: &[Int]) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.dim];
        for (q, col) in c.iter().zip(&self.columns) {
            if !q.is_zero() {
                axpy(&mut out, col, &-q);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_matrix;
    use proptest::prelude::*;

    fn check_smith(m: &IntMatrix) -> Smith {
        let s = smith_normal_form(m);
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        assert_eq!(&u.mul(m).mul(v), &s.s);
        assert_eq!(u.mul(s.u_inv.as_ref().unwrap()), IntMatrix::identity(m.rows()));
        assert_eq!(v.mul(s.v_inv.as_ref().unwrap()), IntMatrix::identity(m.cols()));
        assert_eq!(u.determinant().abs(), Int::one());
        assert_eq!(v.determinant().abs(), Int::one());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    assert!(s.s[(i, j)].is_zero());
                }
            }
        }
        let d = s.divisors();
        for w in d.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "divisibility chain {d:?}");
        }
        assert!(d.iter().all(|x| !x.is_negative() && !x.is_zero()));
        s
    }

    #[test]
    fn smith_examples() {
        let s = check_smith(&int_matrix(&[&[0]]));
        assert_eq!(s.s, int_matrix(&[&[0]]));
        assert_eq!(s.u.unwrap(), int_matrix(&[&[1]]));
        let s = check_smith(&int_matrix(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.divisors(), vec![Int::from(2), Int::from(4)]);
        let s = check_smith(&IntMatrix::identity(3));
        assert_eq!(s.s, IntMatrix::identity(3));
        let s = check_smith(&int_matrix(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.divisors(), vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_integer(&int_matrix(&[&[2]]), &[Int::from(4)]), Some(vec![Int::from(2)]));
        assert_eq!(solve_integer(&int_matrix(&[&[2]]), &[Int::from(3)]), None);
        let m = int_matrix(&[&[1, 2], &[0, 3]]);
        assert_eq!(solve_integer(&m, &[Int::from(5), Int::from(6)]), Some(vec![Int::from(1), Int::from(2)]));
    }

    #[test]
    fn kernel_of_boundary_of_triangle() {
        // Coboundary C⁰ → C¹ of a triangle: kernel is the constants.
        let d = int_matrix(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]]);
        let k = EchelonBasis::kernel(&d);
        assert_eq!(k.rank(), 1);
        assert!(k.contains(&[Int::from(3), Int::from(3), Int::from(3)]));
        assert!(!k.contains(&[Int::from(1), Int::from(0), Int::from(0)]));
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
            IntMatrix::from_rows(v.chunks(cols).map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
        })
    }

    proptest! {
        #[test]
        fn smith_invariants(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            check_smith(&m);
        }

        #[test]
        fn solve_matches_box_search(m in small_matrix(3, 3), b in proptest::collection::vec(-6i64..=6, 3)) {
            let b: Vec<Int> = b.into_iter().map(Int::from).collect();
            match solve_integer(&m, &b) {
                Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
                None => {
                    // No integral solution at all; in particular none in a box.
                    for x0 in -8i64..=8 {
                        for x1 in -8i64..=8 {
                            for x2 in -8i64..=8 {
                                let x = [Int::from(x0), Int::from(x1), Int::from(x2)];
                                prop_assert_ne!(m.mul_vec(&x), b.clone());
                            }
                        }
                    }
                }
            }
        }

        #[test]
        fn echelon_membership_agrees_with_solver(
            gens in small_matrix(3, 4),
            c in proptest::collection::vec(-3i64..=3, 4),
            z in proptest::collection::vec(-5i64..=5, 3),
        ) {
            let basis = EchelonBasis::span(3, gens.columns());
            let c: Vec<Int> = c.into_iter().map(Int::from).collect();
            let member = gens.mul_vec(&c);
            let coords = basis.coords(&member).expect("combination of generators");
            prop_assert_eq!(basis.combine(&coords), member);
            let z: Vec<Int> = z.into_iter().map(Int::from).collect();
            prop_assert_eq!(basis.contains(&z), solve_integer(&gens, &z).is_some());
        }
    }
}
