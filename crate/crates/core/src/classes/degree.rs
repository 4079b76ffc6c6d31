use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::winding::MAX_ATTEMPTS;
use crate::error::{Error, Result};
use crate::exact::normmin::solve_square;
use crate::exact::{simplex_norm_min, ExactRadius, Int, Norm, RatMatrix, Rational};
use crate::simplicial::PLMap;

/// Whether `0` lies in the image of the simplex under `f − p`.
fn hits(f: &PLMap, simplex: &[usize], p: &[Rational]) -> bool {
    let shifted: Vec<Vec<Rational>> =
        simplex.iter().map(|&v| f.value(v).iter().zip(p).map(|(x, y)| x - y).collect()).collect();
    // A coordinate of constant strict sign separates the image from 0.
    let separated = (0..p.len()).any(|j| {
        shifted.iter().all(|x| x[j].is_positive()) || shifted.iter().all(|x| x[j].is_negative())
    });
    !separated && simplex_norm_min(&shifted, Norm::Linf).expect("uniform codomain").min.is_zero()
}

/// `p` is regular when no simplex of dimension below `n` meets `f⁻¹(p)`.
pub fn probe_is_regular(f: &PLMap, p: &[Rational]) -> bool {
    (0..f.n().min(f.m() + 1)).all(|q| f.complex().simplices(q).iter().all(|s| !hits(f, s, p)))
}

/// A rational strictly between 0 and `r` (for `r > 0`).
fn rational_below(r: &ExactRadius) -> Rational {
    match r {
        ExactRadius::Rat(x) => x.clone(),
        // √q > q / (1 + q) for q > 0.
        ExactRadius::SqrtRat(q) => q / (Rational::one() + q),
    }
}

/// A random regular probe whose ℓ₁ norm (hence every supported norm) is
/// below `bound`.
pub fn choose_probe(f: &PLMap, bound: &ExactRadius, rng: &mut impl Rng) -> Result<Vec<Rational>> {
    let n = f.n();
    let limit = rational_below(bound);
    let scale = (Rational::from_integer((97 * n as i64).into()) / &limit).ceil() + Rational::one();
    for _ in 0..MAX_ATTEMPTS {
        let p: Vec<Rational> = (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-97i64..=97).into()) / &scale)
            .collect();
        if probe_is_regular(f, &p) {
            return Ok(p);
        }
    }
    Err(Error::DegenerateProbe("probe", MAX_ATTEMPTS))
}

/// Orientation sign of the affine map on each n-simplex whose image contains
/// `p` in its interior, indexed like `f.complex().simplices(n)`; all zero when `m < n`.
pub fn degree_cocycle(f: &PLMap, p: &[Rational]) -> Result<Vec<Int>> {
    let n = f.n();
    let simplices = f.complex().simplices(n);
    if f.m() < n {
        return Ok(Vec::new());
    }
    simplices
        .iter()
        .map(|s| {
            let vals = f.simplex_values(s);
            // Barycentric system: Σ λᵢ f(vᵢ) = p, Σ λᵢ = 1.
            let mut a = vec![vec![Rational::zero(); n + 1]; n + 1];
            let mut b = vec![Rational::zero(); n + 1];
            for j in 0..n {
                for (i, v) in vals.iter().enumerate() {
                    a[j][i] = v[j].clone();
                }
                b[j] = p[j].clone();
            }
            a[n] = vec![Rational::one(); n + 1];
            b[n] = Rational::one();
            let Some(lambda) = solve_square(a, b) else { return Ok(Int::from(0)) };
            if lambda.iter().any(|x| x.is_zero()) {
                return Err(Error::Invariant("probe lies on the boundary of a simplex image".into()));
            }
            if lambda.iter().any(|x| x.is_negative()) {
                return Ok(Int::from(0));
            }
            let linear = RatMatrix::from_rows(
                (0..n).map(|j| (1..=n).map(|i| &vals[i][j] - &vals[0][j]).collect()).collect(),
            );
            Ok(Int::from(determinant_sign(&linear)))
        })
        .collect()
}

fn determinant_sign(m: &RatMatrix) -> i64 {
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return 0 };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        if a[c][c].is_negative() {
            sign = -sign;
        }
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &factor * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, ratio};
    use crate::fixtures;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_on_the_grid() {
        let f = fixtures::grid_identity();
        let p = [ratio(1, 7), ratio(1, 13)];
        assert!(probe_is_regular(&f, &p));
        let z = degree_cocycle(&f, &p).unwrap();
        let hit: Vec<&Int> = z.iter().filter(|x| !x.is_zero()).collect();
        assert_eq!(hit.len(), 1);
        let neg = degree_cocycle(&f.negated(), &p).unwrap();
        // det(−I₂) = 1 but −id maps a different triangle over p.
        assert_eq!(neg.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(!probe_is_regular(&f, &[integer(0), integer(0)]));
    }

    #[test]
    fn probe_choice_is_small_and_regular() {
        let f = fixtures::grid_identity();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = choose_probe(&f, &ExactRadius::int(1), &mut rng).unwrap();
        assert!(Norm::L1.of(&p) < ExactRadius::int(1));
        assert!(probe_is_regular(&f, &p));
    }

    #[test]
    fn determinant_signs() {
        let m = RatMatrix::from_rows(vec![vec![integer(0), integer(1)], vec![integer(1), integer(0)]]);
        assert_eq!(determinant_sign(&m), -1);
        let m = RatMatrix::from_rows(vec![vec![integer(-1), integer(0)], vec![integer(0), integer(-1)]]);
        assert_eq!(determinant_sign(&m), 1);
    }
}
