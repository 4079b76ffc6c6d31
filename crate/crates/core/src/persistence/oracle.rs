use num_traits::{One, Zero};

use super::barcode::{distinguished_bar, module_field, Interval, PointedBarcode};
use crate::classes::PointedModule;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Largest total dimension accepted by [`decompose_oracle`].
pub const ORACLE_CAP: usize = 64;

struct Generator {
    birth: usize,
    vector: Vec<Rational>,
    tracked: bool,
}

fn unit(dim: usize, t: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); dim];
    e[t] = Rational::one();
    e
}

/// Explicit interval decomposition by sequential basis completion.
///
/// At each sample the images of the live generators are reduced oldest
/// first; a generator whose image lies in the span of older images dies, and
/// the survivors are completed to a basis by unit vectors, each of which
/// starts a new bar. The distinguished vector is placed first at sample 0,
/// so it spans the summand carrying the distinguished bar.
pub fn decompose_oracle(module: &PointedModule) -> Result<PointedBarcode> {
    let field = module_field(module)?;
    module.validate()?;
    let total: usize = module.dims().iter().sum();
    if total > ORACLE_CAP {
        return Err(Error::OracleSize(total, ORACLE_CAP));
    }
    let k = module.len();
    let mut out = PointedBarcode::default();
    let mut tracked_bar = None;
    let mut live: Vec<Generator> = Vec::new();
    if k > 0 && !module.distinguished[0].iter().all(Zero::is_zero) {
        live.push(Generator { birth: 0, vector: module.distinguished[0].clone(), tracked: true });
    }
    for i in 0..k {
        if i > 0 {
            let t = &module.transitions[i - 1];
            let mut kept: Vec<Generator> = Vec::new();
            for g in live.drain(..) {
                let image: Vec<Rational> = t.mul_vec(&g.vector).iter().map(|x| field.reduce(x)).collect();
                let spans: Vec<Vec<Rational>> = kept.iter().map(|h| h.vector.clone()).collect();
                if field.solve_in_span(&spans, &image).is_some() {
                    let bar = Interval::from_samples(&module.samples, g.birth, i - 1);
                    if g.tracked {
                        tracked_bar = Some(bar.clone());
                    }
                    out.add(bar, 1);
                } else {
                    kept.push(Generator { vector: image, ..g });
                }
            }
            live = kept;
        }
        let dim = module.dims()[i];
        for t in 0..dim {
            let e = unit(dim, t);
            let spans: Vec<Vec<Rational>> = live.iter().map(|h| h.vector.clone()).collect();
            if field.solve_in_span(&spans, &e).is_none() {
                live.push(Generator { birth: i, vector: e, tracked: false });
            }
        }
        if live.len() != dim {
            return Err(Error::Invariant(format!("basis completion gave {} vectors in dimension {dim}", live.len())));
        }
    }
    for g in live {
        let bar = Interval::from_samples(&module.samples, g.birth, k - 1);
        if g.tracked {
            tracked_bar = Some(bar.clone());
        }
        out.add(bar, 1);
    }
    out.distinguished = if module.injected.is_some() { distinguished_bar(module) } else { tracked_bar };
    out.validate()?;
    Ok(out)
}
