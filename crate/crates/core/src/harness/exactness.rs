use super::report::{Check, Failure, Report};
use crate::cohomology::{cohomology, connecting_delta, field_dimension, induced_matrix, kernel_subgroup, CochainComplex, Support};
use crate::error::{Error, Result};
use crate::exact::{Field, IntMatrix};
use crate::pipeline::filtration_of;
use crate::simplicial::PLMap;

const PRIMES: [u64; 3] = [2, 3, 5];

/// `d² = 0` on every cochain complex built for `f`, `Im δ ⊆ ker j*` with
/// equal rational ranks at every level, and field dimensions of all
/// cohomology groups against universal-coefficient predictions.
pub fn check_exactness(f: &PLMap) -> Result<Report> {
    let filt = filtration_of(f)?;
    let x = filt.f.complex();
    let top = x.dim();
    let n = f.n();
    let whole = CochainComplex::new(x, Support::Whole);
    let mut complexes = vec![("X".to_string(), CochainComplex::new(x, Support::Whole))];
    for (i, level) in filt.levels.iter().enumerate() {
        complexes.push((format!("A{i}"), CochainComplex::new(x, Support::Absolute(level))));
        complexes.push((format!("(X, A{i})"), CochainComplex::new(x, Support::Relative(level))));
    }

    let mut square = Vec::new();
    let mut square_trials = 0;
    for (name, cc) in &complexes {
        for q in 0..top {
            square_trials += 1;
            let dd: IntMatrix = cc.coboundary(q + 1).mul(&cc.coboundary(q));
            if !dd.is_zero() {
                square.push(Failure::new(format!("d² ≠ 0 on {name} in degree {q}")));
            }
        }
    }

    let mut inclusion = Vec::new();
    let mut ranks = Vec::new();
    if n >= 1 {
        let absolute = cohomology(&whole, n)?;
        for (i, level) in filt.levels.iter().enumerate() {
            let sub = CochainComplex::new(x, Support::Absolute(level));
            let rel = CochainComplex::new(x, Support::Relative(level));
            let h_sub = cohomology(&sub, n - 1)?;
            let h_rel = cohomology(&rel, n)?;
            let j = induced_matrix(&h_rel, &absolute, |z| whole.transfer(&rel, n, z))?;
            let kernel = kernel_subgroup(&j, &h_rel, &absolute)?;
            let mut images = Vec::new();
            for z in &h_sub.generators {
                let d = connecting_delta(&sub, &whole, &rel, n - 1, z)?;
                let coords = h_rel
                    .coords(&d)
                    .ok_or_else(|| Error::Invariant(format!("δ of a generator at A{i} is not a relative cocycle")))?;
                let restricted = absolute.coords(&whole.transfer(&rel, n, &d));
                let in_kernel = kernel.coords(&d).is_some() && restricted.is_some_and(|c| absolute.is_zero_class(&c));
                if !in_kernel {
                    inclusion.push(Failure::new(format!("δ of a generator of H^{}(A{i}) is not in ker j*", n - 1)));
                }
                images.push(coords);
            }
            // Rational rank of Im δ inside Hⁿ(X, A), on the free coordinates.
            let free: Vec<usize> = (0..h_rel.rank()).filter(|&k| h_rel.invariants[k].is_zero()).collect();
            let columns: Vec<Vec<_>> = images.iter().map(|c| free.iter().map(|&k| c[k].clone()).collect()).collect();
            let rank = Field::Rationals.rank_int(&IntMatrix::from_columns(free.len(), &columns));
            if rank != kernel.free_rank() {
                ranks.push(Failure::new(format!(
                    "at A{i}: rank of Im δ is {rank}, rank of ker j* is {}",
                    kernel.free_rank()
                )));
            }
        }
    }

    let mut uct = Vec::new();
    let mut uct_trials = 0;
    for (name, cc) in &complexes {
        let groups = (0..=top + 1).map(|q| cohomology(cc, q)).collect::<Result<Vec<_>>>()?;
        for q in 0..=top {
            for field in std::iter::once(Field::Rationals).chain(PRIMES.iter().map(|&p| Field::Prime(p))) {
                uct_trials += 1;
                let tor = match field {
                    Field::Rationals => 0,
                    Field::Prime(p) => groups[q + 1].torsion().iter().filter(|d| d.rem_u64(p) == 0).count(),
                };
                let predicted = groups[q].dim_over(field) + tor;
                let actual = field_dimension(cc, q, field);
                if predicted != actual {
                    uct.push(Failure::new(format!(
                        "dim H^{q}({name}; {field}) is {actual}, universal coefficients predict {predicted}"
                    )));
                }
            }
        }
    }

    let levels = filt.levels.len();
    let mut report = Report::default();
    report.push(Check::new("coboundary squares to zero", square_trials, square));
    report.push(Check::new("image of the connecting map lies in ker j*", levels, inclusion));
    report.push(Check::new("connecting image and ker j* have equal rational rank", levels, ranks));
    report.push(Check::new("field dimensions follow universal coefficients", uct_trials, uct));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples_are_exact() {
        for f in [fixtures::edge(), fixtures::rectangle(), fixtures::grid_identity(), fixtures::octagon()] {
            let report = check_exactness(&f).unwrap();
            assert!(report.passed(), "{report:#?}");
        }
    }
}
