//! Seeded random pointed modules for oracle and property tests.

use rand::Rng;

use crate::classes::{Mode, PointedModule};
use crate::exact::{ExactRadius, Field, RatMatrix, Rational};

fn entry<R: Rng>(rng: &mut R, field: Field) -> Rational {
    // Mostly small integers with many zeros, so that ranks drop often.
    if rng.gen_bool(0.4) {
        return Rational::from_integer(0.into());
    }
    match field {
        Field::Prime(p) => Rational::from_integer(rng.gen_range(1..p).into()),
        Field::Rationals => {
            let n: i64 = rng.gen_range(-3..=3);
            let d: i64 = if rng.gen_bool(0.2) { rng.gen_range(2..=3) } else { 1 };
            Rational::new(n.into(), d.into())
        }
    }
}

/// A random pointed module with `1..=max_samples` samples and dimensions in
/// `0..=max_dim`; the distinguished element is pushed forward from sample 0.
pub fn random_pointed_module<R: Rng>(rng: &mut R, field: Field, max_samples: usize, max_dim: usize) -> PointedModule {
    let k = rng.gen_range(1..=max_samples);
    let dims: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=max_dim)).collect();
    let transitions: Vec<RatMatrix> = (0..k - 1)
        .map(|i| {
            let rows = (0..dims[i + 1]).map(|_| (0..dims[i]).map(|_| entry(rng, field)).collect()).collect();
            if dims[i] == 0 || dims[i + 1] == 0 {
                RatMatrix::zeros(dims[i + 1], dims[i])
            } else {
                field.reduce_matrix(&RatMatrix::from_rows(rows))
            }
        })
        .collect();
    let mut distinguished = vec![(0..dims[0]).map(|_| field.reduce(&entry(rng, field))).collect::<Vec<_>>()];
    for t in &transitions {
        let next = t.mul_vec(distinguished.last().expect("non-empty")).iter().map(|x| field.reduce(x)).collect();
        distinguished.push(next);
    }
    let samples = (1..=k as i64).map(ExactRadius::int).collect();
    PointedModule::over_field(Mode::Hopf, field, samples, transitions, distinguished).expect("consistent by construction")
}
