use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::degree::{choose_probe, degree_cocycle};
use super::mode::{Coefficients, Mode};
use super::module::{component_matrix, PointedModule};
use super::signs::{sign_obstruction, sign_vector, SignVector};
use super::winding::{choose_ray, winding_cocycle};
use crate::cohomology::{cohomology, induced_matrix, kernel_subgroup, CochainComplex, Group, Support};
use crate::error::{Error, Result};
use crate::exact::{EchelonBasis, ExactRadius, Int, RatMatrix, Rational};
use crate::filtration::Filtration;
use crate::par::{derive_seed, map_indexed, Execution};
use crate::simplicial::{connected_components, PLMap};

/// Evidence that the distinguished class is non-zero at the robust radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    None,
    /// Vertex ids in two level components of opposite sign inside one component of `X`.
    Signs { positive: String, negative: String },
    /// Coordinates of the non-vanishing class at the sample of the robust radius.
    Class { coords: Vec<Int> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobustRadius {
    /// Supremum of the radii at which the distinguished class is non-zero (0 if none).
    pub radius: ExactRadius,
    /// Sample index attaining the radius.
    pub level: Option<usize>,
    pub witness: Witness,
}

/// Everything computed for one subdivided map in one mode.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub mode: Mode,
    /// Over ℤ for Circle and Hopf; over ℤ with free groups for Signs.
    pub module: PointedModule,
    pub robust: RobustRadius,
    pub ray: Option<Vec<Rational>>,
    pub probe: Option<Vec<Rational>>,
    pub ray_seed: u64,
    pub probe_seed: u64,
}

fn to_rational(v: &[Int]) -> Vec<Rational> {
    v.iter().map(Int::to_rational).collect()
}

fn robust_from(samples: &[ExactRadius], nontrivial: &[Option<Witness>]) -> RobustRadius {
    match nontrivial.iter().rposition(Option::is_some) {
        Some(i) => RobustRadius {
            radius: samples[i].clone(),
            level: Some(i),
            witness: nontrivial[i].clone().expect("found"),
        },
        None => RobustRadius { radius: ExactRadius::zero(), level: None, witness: Witness::None },
    }
}

fn signs(filt: &Filtration, exec: Execution) -> Result<(PointedModule, RobustRadius)> {
    let f = &filt.f;
    let vectors: Vec<SignVector> =
        map_indexed(exec, filt.len(), |i| sign_vector(f, &filt.levels[i])).into_iter().collect::<Result<_>>()?;
    let transitions = (0..filt.len() - 1)
        .map(|i| {
            let (src, tgt) = (&vectors[i].components, &vectors[i + 1].components);
            component_matrix(tgt.count(), src.count(), |r| src.label[tgt.members[r][0]].expect("nested levels"))
        })
        .collect();
    let distinguished: Vec<Vec<Rational>> =
        vectors.iter().map(|v| vec![Rational::from_integer(1.into()); v.signs.len()]).collect();
    let nontrivial: Vec<Option<Witness>> = vectors
        .iter()
        .map(|v| {
            sign_obstruction(f, v).map(|w| Witness::Signs {
                positive: f.complex().vertex_id(v.components.members[w.positive][0]).to_string(),
                negative: f.complex().vertex_id(v.components.members[w.negative][0]).to_string(),
            })
        })
        .collect();
    let robust = robust_from(&filt.samples, &nontrivial);
    let module = PointedModule {
        mode: Mode::Signs,
        coefficients: Coefficients::Integers,
        samples: filt.samples.clone(),
        invariants: vectors.iter().map(|v| vec![Int::zero(); v.signs.len()]).collect(),
        transitions,
        distinguished,
        injected: Some(robust.radius.clone()),
    };
    module.validate()?;
    Ok((module, robust))
}

fn circle(filt: &Filtration, exec: Execution, ray: &[Rational]) -> Result<(PointedModule, RobustRadius)> {
    let f = &filt.f;
    let x = f.complex();
    let whole = CochainComplex::new(x, Support::Whole);
    let cycles_x = EchelonBasis::kernel(&whole.coboundary(1));
    let levels: Vec<CochainComplex<'_>> =
        filt.levels.iter().map(|l| CochainComplex::new(x, Support::Absolute(l))).collect();
    let per_level: Vec<(Group, Vec<Int>, Option<Witness>)> = map_indexed(exec, filt.len(), |i| {
        let cc = &levels[i];
        let group = cohomology(cc, 1)?;
        let z = winding_cocycle(f, cc, ray)?;
        let coords = group.coords(&z).ok_or_else(|| Error::Invariant("winding cochain is not a cocycle".into()))?;
        // [z] is in the image of H¹(X) iff z ∈ i*Z¹(X) + B¹(A).
        let mut gens: Vec<Vec<Int>> = cycles_x.vectors().iter().map(|c| cc.transfer(&whole, 1, c)).collect();
        gens.extend(cc.incoming(1).columns());
        let extendable = EchelonBasis::span(cc.rank(1), gens).contains(&z);
        let witness = (!extendable).then(|| Witness::Class { coords: coords.clone() });
        Ok((group, coords, witness))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let transitions = map_indexed(exec, filt.len() - 1, |i| {
        induced_matrix(&per_level[i].0, &per_level[i + 1].0, |z| levels[i + 1].transfer(&levels[i], 1, z))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let nontrivial: Vec<Option<Witness>> = per_level.iter().map(|l| l.2.clone()).collect();
    let robust = robust_from(&filt.samples, &nontrivial);
    let module = PointedModule {
        mode: Mode::Circle,
        coefficients: Coefficients::Integers,
        samples: filt.samples.clone(),
        invariants: per_level.iter().map(|l| l.0.invariants.clone()).collect(),
        transitions: transitions.iter().map(|t| t.to_rational()).collect(),
        distinguished: per_level.iter().map(|l| to_rational(&l.1)).collect(),
        injected: None,
    };
    module.validate()?;
    Ok((module, robust))
}

/// `ker(Hⁿ(X, A) → Hⁿ(X))` for the relative complex of one level.
fn hopf_group(whole: &CochainComplex<'_>, absolute: &Group, rel: &CochainComplex<'_>, n: usize) -> Result<Group> {
    let group = cohomology(rel, n)?;
    let j = induced_matrix(&group, absolute, |z| whole.transfer(rel, n, z))?;
    kernel_subgroup(&j, &group, absolute)
}

fn hopf(filt: &Filtration, exec: Execution, probe: Option<&[Rational]>) -> Result<(PointedModule, RobustRadius)> {
    let f = &filt.f;
    let x = f.complex();
    let n = f.n();
    let whole = CochainComplex::new(x, Support::Whole);
    let absolute = cohomology(&whole, n)?;
    let degree = match probe {
        Some(p) => degree_cocycle(f, p)?,
        None => vec![Int::zero(); x.simplices(n).len()],
    };
    let levels: Vec<CochainComplex<'_>> =
        filt.levels.iter().map(|l| CochainComplex::new(x, Support::Relative(l))).collect();
    let per_level: Vec<(Group, Vec<Int>)> = map_indexed(exec, filt.len(), |i| {
        let rel = &levels[i];
        let kernel = hopf_group(&whole, &absolute, rel, n)?;
        let z: Vec<Int> = rel.cells(n).iter().map(|&s| degree[s].clone()).collect();
        let coords = kernel.coords(&z).ok_or_else(|| Error::Invariant("degree class outside ker j*".into()))?;
        Ok((kernel, coords))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    let transitions = map_indexed(exec, filt.len() - 1, |i| {
        induced_matrix(&per_level[i].0, &per_level[i + 1].0, |z| levels[i + 1].transfer(&levels[i], n, z))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let nontrivial: Vec<Option<Witness>> = per_level
        .iter()
        .map(|(g, c)| (!g.is_zero_class(c)).then(|| Witness::Class { coords: c.clone() }))
        .collect();
    let robust = robust_from(&filt.samples, &nontrivial);
    let module = PointedModule {
        mode: Mode::Hopf,
        coefficients: Coefficients::Integers,
        samples: filt.samples.clone(),
        invariants: per_level.iter().map(|l| l.0.invariants.clone()).collect(),
        transitions: transitions.iter().map(|t| t.to_rational()).collect(),
        distinguished: per_level.iter().map(|l| to_rational(&l.1)).collect(),
        injected: None,
    };
    module.validate()?;
    Ok((module, robust))
}

/// Builds the integral pointed module and robust radius of a filtration.
///
/// Rays and probes are drawn from streams derived from `seed`.
pub fn analyze_classes(filt: &Filtration, mode: Mode, seed: u64, exec: Execution) -> Result<ClassData> {
    let f: &PLMap = &filt.f;
    mode.check(f.n(), f.m())?;
    let ray_seed = derive_seed(seed, 1);
    let probe_seed = derive_seed(seed, 2);
    let mut ray = None;
    let mut probe = None;
    let (module, robust) = match mode {
        Mode::Signs => signs(filt, exec)?,
        Mode::Circle => {
            let e = choose_ray(f, &mut ChaCha8Rng::seed_from_u64(ray_seed))?;
            let out = circle(filt, exec, &e)?;
            ray = Some(e);
            out
        }
        Mode::Hopf => {
            if f.m() == f.n() {
                if let Some(s1) = filt.criticals.values.first() {
                    probe = Some(choose_probe(f, s1, &mut ChaCha8Rng::seed_from_u64(probe_seed))?);
                }
            }
            hopf(filt, exec, probe.as_deref())?
        }
    };
    Ok(ClassData { mode, module, robust, ray, probe, ray_seed, probe_seed })
}

/// Circle-mode data with a caller-supplied ray.
pub fn analyze_with_ray(filt: &Filtration, ray: &[Rational], exec: Execution) -> Result<(PointedModule, RobustRadius)> {
    Mode::Circle.check(filt.f.n(), filt.f.m())?;
    circle(filt, exec, ray)
}

/// Hopf-mode data with a caller-supplied probe.
pub fn analyze_with_probe(
    filt: &Filtration,
    probe: &[Rational],
    exec: Execution,
) -> Result<(PointedModule, RobustRadius)> {
    Mode::Hopf.check(filt.f.n(), filt.f.m())?;
    hopf(filt, exec, Some(probe))
}

/// The map from sample `i` to sample `j ≥ i`, induced directly by the
/// inclusion of levels rather than composed from consecutive transitions.
pub fn direct_transition(filt: &Filtration, mode: Mode, i: usize, j: usize) -> Result<RatMatrix> {
    let x = filt.f.complex();
    let (li, lj) = (&filt.levels[i], &filt.levels[j]);
    match mode {
        Mode::Signs => {
            let (src, tgt) = (connected_components(x, li), connected_components(x, lj));
            Ok(component_matrix(tgt.count(), src.count(), |r| src.label[tgt.members[r][0]].expect("nested levels")))
        }
        Mode::Circle => {
            let (ci, cj) = (CochainComplex::new(x, Support::Absolute(li)), CochainComplex::new(x, Support::Absolute(lj)));
            let (gi, gj) = (cohomology(&ci, 1)?, cohomology(&cj, 1)?);
            Ok(induced_matrix(&gi, &gj, |z| cj.transfer(&ci, 1, z))?.to_rational())
        }
        Mode::Hopf => {
            let n = filt.f.n();
            let whole = CochainComplex::new(x, Support::Whole);
            let absolute = cohomology(&whole, n)?;
            let (ci, cj) = (CochainComplex::new(x, Support::Relative(li)), CochainComplex::new(x, Support::Relative(lj)));
            let (gi, gj) = (hopf_group(&whole, &absolute, &ci, n)?, hopf_group(&whole, &absolute, &cj, n)?);
            Ok(induced_matrix(&gi, &gj, |z| cj.transfer(&ci, n, z))?.to_rational())
        }
    }
}

/// The pointed module with the requested coefficients.
pub fn assemble_pointed_module(data: &ClassData, coefficients: Coefficients) -> Result<PointedModule> {
    match (data.mode, coefficients) {
        (Mode::Signs, Coefficients::Integers) => {
            Err(Error::ModeInapplicable("sign mode works over a field (use q or f<p>)".into()))
        }
        (_, Coefficients::Integers) => Ok(data.module.clone()),
        (_, Coefficients::Field(field)) => data.module.tensor(field),
    }
}
