use super::perturb::{perturb, PerturbSpec};
use super::report::{Check, Failure, Report};
use crate::error::Result;
use crate::exact::{format_rational, ExactRadius, Gap, Rational};
use crate::io::InputDocument;
use crate::par::{derive_seed, map_indexed};
use crate::persistence::feasible_within;
use crate::pipeline::{analyze, Options};
use crate::simplicial::PLMap;

/// Offset separating perturbation streams from the ray and probe streams.
const PERTURB_STREAM: u64 = 1 << 32;

enum Outcome {
    Ok,
    Violations { bottleneck: bool, radius: bool, detail: Failure },
    Error(Failure),
}

/// Perturbs `f` `trials` times by at most `delta` and checks that the
/// pointed bottleneck distance and the robust radius move by at most `delta`.
///
/// The mode and field are fixed by the analysis of `f`; errors in a trial are
/// recorded as failures of that trial.
pub fn check_stability(f: &PLMap, options: &Options, delta: &Rational, trials: usize) -> Result<Report> {
    let base = analyze(f, options)?;
    let fixed = options.with_mode(base.mode).with_field(base.field);
    let bound = Gap::of(&ExactRadius::rat(delta.clone()));
    let outcomes = map_indexed(options.exec, trials, |t| {
        let seed = derive_seed(options.seed, PERTURB_STREAM + t as u64);
        let fail = |message: String| Failure { trial: Some(t), seed: Some(seed), ..Failure::new(message) };
        let g = match perturb(f, &PerturbSpec::new(delta.clone(), seed)) {
            Ok(g) => g,
            Err(e) => return Outcome::Error(fail(format!("perturbation failed: {e}"))),
        };
        let other = match analyze(&g, &fixed) {
            Ok(a) => a,
            Err(e) => {
                let mut failure = fail(format!("pipeline failed on the perturbed map: {e}"));
                failure.input = Some(InputDocument::from_map(&g));
                return Outcome::Error(failure);
            }
        };
        let bottleneck = !feasible_within(&base.barcode, &other.barcode, &bound);
        let shift = Gap::between(base.robust_radius(), other.robust_radius());
        let radius = shift > bound;
        if !bottleneck && !radius {
            return Outcome::Ok;
        }
        let mut failure = fail(format!(
            "robust radius {} vs {} (shift {shift}), bottleneck within bound: {}",
            base.robust_radius(),
            other.robust_radius(),
            !bottleneck
        ));
        failure.input = Some(InputDocument::from_map(&g));
        failure.barcodes = vec![base.barcode.to_string(), other.barcode.to_string()];
        Outcome::Violations { bottleneck, radius, detail: failure }
    });
    let mut bottleneck_failures = Vec::new();
    let mut radius_failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Outcome::Ok => {}
            Outcome::Error(failure) => {
                bottleneck_failures.push(failure.clone());
                radius_failures.push(failure);
            }
            Outcome::Violations { bottleneck, radius, detail } => {
                if bottleneck {
                    bottleneck_failures.push(detail.clone());
                }
                if radius {
                    radius_failures.push(detail);
                }
            }
        }
    }
    let d = format_rational(delta);
    let mut report = Report::default();
    report.push(Check::new(format!("bottleneck distance at most {d}"), trials, bottleneck_failures));
    report.push(Check::new(format!("robust radius shift at most {d}"), trials, radius_failures));
    Ok(report)
}
