use std::collections::BTreeMap;

use super::report::{Check, Failure, Report};
use crate::classes::{analyze_classes, direct_transition, Mode};
use crate::error::Result;
use crate::exact::{format_rational, integer, ratio, ExactRadius, Field, Rational};
use crate::par::{derive_seed, map_indexed};
use crate::persistence::{Interval, PointedBarcode};
use crate::pipeline::{analyze, Analysis, Options};
use crate::simplicial::PLMap;

/// Number of alternative rays or probes tried by the independence check.
pub const RESAMPLES: usize = 20;

const RESAMPLE_STREAM: u64 = 1 << 33;

fn scale_barcode(b: &PointedBarcode, c: &Rational) -> PointedBarcode {
    let scale = |i: &Interval| Interval { birth: i.birth.scale(c), death: i.death.scale(c) };
    PointedBarcode {
        bars: b.bars.iter().map(|(i, &m)| (scale(i), m)).collect::<BTreeMap<_, _>>(),
        distinguished: b.distinguished.as_ref().map(scale),
    }
}

fn same_output(name: &str, base: &Analysis, other: &Result<Analysis>, scale: &Rational) -> Vec<Failure> {
    let other = match other {
        Ok(a) => a,
        Err(e) => return vec![Failure::new(format!("{name}: {e}"))],
    };
    let mut failures = Vec::new();
    let expected: Vec<ExactRadius> = base.criticals().iter().map(|r| r.scale(scale)).collect();
    if other.criticals() != expected.as_slice() {
        failures.push(Failure::new(format!("{name}: critical values changed")));
    }
    if *other.robust_radius() != base.robust_radius().scale(scale) {
        failures.push(Failure::new(format!(
            "{name}: robust radius {} but expected {}",
            other.robust_radius(),
            base.robust_radius().scale(scale)
        )));
    }
    let expected = scale_barcode(&base.barcode, scale);
    if other.barcode != expected {
        failures.push(Failure {
            barcodes: vec![expected.to_string(), other.barcode.to_string()],
            ..Failure::new(format!("{name}: barcode changed"))
        });
    }
    failures
}

fn functoriality(a: &Analysis) -> Result<Check> {
    let module = &a.classes.module;
    let k = module.len();
    let mut failures = Vec::new();
    let mut trials = 0;
    for i in 0..k {
        for j in i..k {
            trials += 1;
            let direct = direct_transition(&a.filtration, a.mode, i, j)?;
            let composite = module.composite(i, j);
            let agree = direct.shape() == composite.shape()
                && (0..direct.cols()).all(|c| {
                    let diff: Vec<Rational> = direct.column(c).iter().zip(composite.column(c)).map(|(x, y)| x - y).collect();
                    module.is_zero_at(j, &diff)
                });
            if !agree {
                failures.push(Failure::new(format!("induced map from sample {i} to {j} differs from the composite")));
            }
        }
    }
    Ok(Check::new("functoriality of transitions", trials, failures))
}

fn resampling(a: &Analysis, options: &Options) -> Check {
    let what = if a.mode == Mode::Circle { "ray" } else { "probe" };
    let base = &a.classes;
    let failures: Vec<Failure> = map_indexed(options.exec, RESAMPLES, |t| {
        let seed = derive_seed(options.seed, RESAMPLE_STREAM + t as u64);
        let fail = |message: String| Failure { trial: Some(t), seed: Some(seed), ..Failure::new(message) };
        let other = match analyze_classes(&a.filtration, a.mode, seed, options.exec) {
            Ok(d) => d,
            Err(e) => return Some(fail(format!("{e}"))),
        };
        if other.robust.radius != base.robust.radius {
            return Some(fail(format!("robust radius {} instead of {}", other.robust.radius, base.robust.radius)));
        }
        let moved = (0..base.module.len()).find(|&i| {
            let diff: Vec<Rational> =
                base.module.distinguished[i].iter().zip(&other.module.distinguished[i]).map(|(x, y)| x - y).collect();
            !base.module.is_zero_at(i, &diff)
        });
        moved.map(|i| fail(format!("distinguished class at sample {i} depends on the {what}")))
    })
    .into_iter()
    .flatten()
    .collect();
    Check::new(format!("{what} independence"), RESAMPLES, failures)
}

/// Scaling, rotation, negation, functoriality, mode cross-check and
/// probe/ray independence for one map.
pub fn check_invariances(f: &PLMap, options: &Options) -> Result<Report> {
    let a = analyze(f, options)?;
    let fixed = options.with_mode(a.mode).with_field(a.field);
    let one = integer(1);
    let mut report = Report::default();
    report.push(functoriality(&a)?);
    for c in [integer(2), integer(3), ratio(7, 2)] {
        let name = format!("scaling by {}", format_rational(&c));
        let failures = same_output(&name, &a, &analyze(&f.scaled(&c), &fixed), &c);
        report.push(Check::new(name, 1, failures));
    }
    if f.n() == 2 {
        let rotation = vec![vec![integer(0), integer(-1)], vec![integer(1), integer(0)]];
        let failures = match f.composed(&rotation) {
            Ok(g) => same_output("rotation", &a, &analyze(&g, &fixed), &one),
            Err(e) => vec![Failure::new(format!("rotation: {e}"))],
        };
        report.push(Check::new("rotation by a quarter turn", 1, failures));
    }
    if f.n() == 1 {
        let failures = same_output("negation", &a, &analyze(&f.negated(), &fixed), &one);
        report.push(Check::new("negation", 1, failures));
    }
    if f.n() == 1 && f.m() == 1 {
        let q = options.with_field(Field::Rationals);
        let failures = match (analyze(f, &q.with_mode(Mode::Signs)), analyze(f, &q.with_mode(Mode::Hopf))) {
            (Ok(s), Ok(h)) => {
                let mut out = Vec::new();
                if s.robust_radius() != h.robust_radius() {
                    out.push(Failure::new(format!(
                        "signs radius {} but hopf radius {}",
                        s.robust_radius(),
                        h.robust_radius()
                    )));
                }
                if s.barcode.distinguished != h.barcode.distinguished {
                    out.push(Failure {
                        barcodes: vec![s.barcode.to_string(), h.barcode.to_string()],
                        ..Failure::new("distinguished bars differ")
                    });
                }
                out
            }
            (Err(e), _) | (_, Err(e)) => vec![Failure::new(e.to_string())],
        };
        report.push(Check::new("signs and hopf agree", 1, failures));
    }
    if a.mode != Mode::Signs && !(a.classes.ray.is_none() && a.classes.probe.is_none()) {
        report.push(resampling(&a, options));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples_are_invariant() {
        for f in [fixtures::edge(), fixtures::rectangle(), fixtures::grid_identity(), fixtures::octagon()] {
            let report = check_invariances(&f, &Options::default()).unwrap();
            assert!(report.passed(), "{report:#?}");
        }
    }

    #[test]
    fn edge_scales_to_three() {
        let a = analyze(&fixtures::edge().scaled(&integer(3)), &Options::default()).unwrap();
        assert_eq!(a.criticals(), &[ExactRadius::int(3)]);
        assert_eq!(*a.robust_radius(), ExactRadius::int(3));
        assert!(!a.barcode.is_empty() && a.barcode.distinguished.is_some());
    }
}
