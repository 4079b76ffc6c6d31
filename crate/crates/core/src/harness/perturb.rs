use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{Norm, Rational};
use crate::simplicial::PLMap;

/// Perturbation steps per unit of the coordinate bound.
pub const DEFAULT_DENOMINATOR: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbSpec {
    pub delta: Rational,
    pub seed: u64,
    pub denominator: u64,
}

impl PerturbSpec {
    pub fn new(delta: Rational, seed: u64) -> PerturbSpec {
        PerturbSpec { delta, seed, denominator: DEFAULT_DENOMINATOR }
    }
}

/// Moves every vertex value by a random vector of norm at most `delta`.
///
/// Each coordinate moves by `b·k/D` with `k` uniform in `[−D, D]`, where `b`
/// is `delta` under ℓ∞ and `delta / n` under ℓ₁ and ℓ₂. Since `g − f` is
/// affine on simplices and norms are convex, `‖g − f‖ ≤ delta` everywhere.
pub fn perturb(f: &PLMap, spec: &PerturbSpec) -> Result<PLMap> {
    if spec.delta.is_negative() {
        return Err(Error::Input(format!("perturbation bound {} is negative", spec.delta)));
    }
    if spec.denominator == 0 {
        return Err(Error::Input("perturbation denominator must be positive".into()));
    }
    if spec.delta.is_zero() {
        return Ok(f.clone());
    }
    let bound = match f.norm() {
        Norm::Linf => spec.delta.clone(),
        Norm::L1 | Norm::L2 => &spec.delta / Rational::from_integer(f.n().into()),
    };
    let d = spec.denominator as i64;
    let step = bound / Rational::from_integer(d.into());
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let values = f
        .values()
        .iter()
        .map(|v| v.iter().map(|x| x + &step * Rational::from_integer(rng.gen_range(-d..=d).into())).collect())
        .collect();
    f.with_values(values)
}
