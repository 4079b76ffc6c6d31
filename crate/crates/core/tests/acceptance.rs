//! Acceptance criteria, one line each. Runs with `cargo test --test acceptance`.
//!
//! All comparisons are exact; the only tolerances are the wall-clock limits
//! below, measured on the build profile the test runs in.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rzero_core::classes::{sign_vector, Mode};
use rzero_core::exact::{int_matrix, integer, ratio, ExactRadius, Field, Int, Rational};
use rzero_core::fixtures;
use rzero_core::harness::{check_exactness, check_invariances, check_stability, Report};
use rzero_core::par::derive_seed;
use rzero_core::persistence::random::random_pointed_module;
use rzero_core::persistence::{barcode, decompose_oracle, Interval};
use rzero_core::pipeline::{analyze, Analysis, Options};
use rzero_core::simplicial::PLMap;

const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const STABILITY_LIMIT: Duration = Duration::from_secs(120);
const ORACLE_MODULES: usize = 1000;
const STABILITY_TRIALS: usize = 200;
const SEED: u64 = 20_240_611;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: ok }
    } else {
        Outcome { passed: false, detail: failures.join("; ") }
    }
}

fn unit_bar() -> Interval {
    Interval::new(ExactRadius::zero(), ExactRadius::int(1)).unwrap()
}

fn run(f: &PLMap, mode: Mode) -> Analysis {
    analyze(f, &Options::default().with_mode(mode).with_seed(SEED)).expect("pipeline")
}

fn intermediate_value() -> Outcome {
    let mut failures = Vec::new();
    for (name, f) in [("rectangle", fixtures::rectangle()), ("edge", fixtures::edge())] {
        let a = run(&f, Mode::Signs);
        if a.criticals() != [ExactRadius::int(1)] {
            failures.push(format!("{name}: criticals {:?}", a.criticals()));
        }
        let level = a.filtration.samples.iter().position(|r| *r == ExactRadius::int(1)).expect("sample at 1");
        let signs = sign_vector(&a.filtration.f, &a.filtration.levels[level]).expect("signs");
        let mut s = signs.signs.clone();
        s.sort();
        if s != [-1, 1] {
            failures.push(format!("{name}: A_1 component signs {:?}", signs.signs));
        }
        if *a.robust_radius() != ExactRadius::int(1) {
            failures.push(format!("{name}: robust radius {}", a.robust_radius()));
        }
        if a.barcode.distinguished != Some(unit_bar()) {
            failures.push(format!("{name}: barcode {}", a.barcode));
        }
    }
    outcome(failures, "criticals {1}, A_1 signs {-1, +1}, radius 1, distinguished (0, 1] on both maps".into())
}

fn degree() -> Outcome {
    let mut failures = Vec::new();
    let id = run(&fixtures::grid_identity(), Mode::Hopf);
    let neg = run(&fixtures::grid_identity().negated(), Mode::Hopf);
    let det = int_matrix(&[&[-1, 0], &[0, -1]]).determinant();
    for (name, a) in [("id", &id), ("-id", &neg)] {
        if a.classes.module.invariants[0] != [Int::from(0)] {
            failures.push(format!("{name}: ker j* has invariants {:?}", a.classes.module.invariants[0]));
        }
        let d = &a.classes.module.distinguished[0];
        if d != &[integer(1)] && d != &[integer(-1)] {
            failures.push(format!("{name}: distinguished class {d:?} is not a generator"));
        }
        if *a.robust_radius() != ExactRadius::int(1) {
            failures.push(format!("{name}: robust radius {}", a.robust_radius()));
        }
        if a.barcode.distinguished != Some(unit_bar()) {
            failures.push(format!("{name}: barcode {}", a.barcode));
        }
    }
    let expected: Vec<Rational> = id.classes.module.distinguished[0].iter().map(|x| x * det.to_rational()).collect();
    if neg.classes.module.distinguished[0] != expected {
        failures.push(format!("-id class is not det(-I) = {det} times the identity's class"));
    }
    outcome(
        failures,
        format!("ker j* = Z, class {:?}, radius 1 for id and -id, det(-I) = {det}", id.classes.module.distinguished[0]
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()),
    )
}

fn winding() -> Outcome {
    let mut failures = Vec::new();
    let a = run(&fixtures::octagon(), Mode::Circle);
    if a.criticals() != [ExactRadius::rat(ratio(1, 2)), ExactRadius::int(1)] {
        failures.push(format!("criticals {:?}", a.criticals()));
    }
    if a.classes.module.dims() != [1, 0, 0] {
        failures.push(format!("H1 dims {:?}", a.classes.module.dims()));
    }
    let d = &a.classes.module.distinguished[0];
    if d != &[integer(2)] && d != &[integer(-2)] {
        failures.push(format!("distinguished coordinate {d:?}"));
    }
    if !a.robust_radius().is_zero() {
        failures.push(format!("robust radius {}", a.robust_radius()));
    }
    outcome(failures, format!("criticals {{1/2, 1}}, dims (1, 0, 0), class {}, radius 0", d[0]))
}

fn oracle() -> Outcome {
    let fields = [Field::Prime(2), Field::Prime(5), Field::Rationals];
    let mut failures = Vec::new();
    for i in 0..ORACLE_MODULES {
        let seed = derive_seed(SEED, i as u64);
        let field = fields[i % fields.len()];
        let module = random_pointed_module(&mut ChaCha8Rng::seed_from_u64(seed), field, 6, 5);
        match (barcode(&module), decompose_oracle(&module)) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => failures.push(format!("module {i} (seed {seed}, {field}): {a:?} vs {b:?}")),
        }
    }
    let mismatches = failures.len();
    failures.truncate(3);
    if mismatches > 0 {
        failures.insert(0, format!("{mismatches} mismatches"));
    }
    outcome(failures, format!("{ORACLE_MODULES} modules over f2/f5/q, 0 mismatches"))
}

fn examples() -> Vec<(&'static str, PLMap, Mode)> {
    vec![
        ("edge", fixtures::edge(), Mode::Signs),
        ("rectangle", fixtures::rectangle(), Mode::Signs),
        ("grid", fixtures::grid_identity(), Mode::Hopf),
        ("octagon", fixtures::octagon(), Mode::Circle),
    ]
}

fn report_failures(name: &str, report: &Report, failures: &mut Vec<String>) {
    for check in report.checks.iter().filter(|c| !c.passed) {
        let first = check.failures.first().map_or(String::new(), |f| f.message.clone());
        failures.push(format!("{name}: {} ({} failures, e.g. {first})", check.name, check.failures.len()));
    }
}

fn stability() -> Outcome {
    let mut failures = Vec::new();
    let mut trials = 0;
    for (name, f, mode) in examples() {
        for delta in [ratio(1, 10), ratio(1, 2)] {
            let options = Options::default().with_mode(mode).with_seed(SEED);
            match check_stability(&f, &options, &delta, STABILITY_TRIALS) {
                Ok(report) => {
                    trials += STABILITY_TRIALS;
                    report_failures(name, &report, &mut failures);
                }
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
    }
    outcome(failures, format!("{trials} perturbations at delta 1/10 and 1/2, 0 violations"))
}

fn invariance() -> Outcome {
    let mut failures = Vec::new();
    let mut ran = Vec::new();
    for (name, f, mode) in examples() {
        match check_invariances(&f, &Options::default().with_mode(mode).with_seed(SEED)) {
            Ok(report) => {
                report_failures(name, &report, &mut failures);
                ran.extend(report.checks.iter().map(|c| c.name.clone()));
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    for required in [
        "functoriality of transitions",
        "scaling by 2",
        "scaling by 3",
        "scaling by 7/2",
        "rotation by a quarter turn",
        "negation",
        "signs and hopf agree",
        "ray independence",
        "probe independence",
    ] {
        if !ran.iter().any(|n| n == required) {
            failures.push(format!("check `{required}` never ran"));
        }
    }
    outcome(failures, format!("{} checks over 4 maps, 0 violations", ran.len()))
}

fn exactness() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (name, f, _) in examples() {
        match check_exactness(&f) {
            Ok(report) => {
                checks += report.checks.iter().map(|c| c.trials).sum::<usize>();
                report_failures(name, &report, &mut failures);
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    outcome(failures, format!("d^2 = 0, Im delta = ker j* over Q, UCT over f2/f3/f5/q; {checks} checks"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 7] = [
        ("intermediate value", intermediate_value, EXAMPLE_LIMIT),
        ("degree", degree, EXAMPLE_LIMIT),
        ("winding", winding, EXAMPLE_LIMIT),
        ("oracle equivalence", oracle, ORACLE_LIMIT),
        ("stability", stability, STABILITY_LIMIT),
        ("invariance", invariance, Duration::MAX),
        ("exactness", exactness, Duration::MAX),
    ];
    let mut all = true;
    for (k, (name, criterion, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = criterion();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let passed = result.passed && in_time;
        all &= passed;
        let budget = if *limit == Duration::MAX { String::new() } else { format!(", limit {} s", limit.as_secs()) };
        let late = if in_time { "" } else { " [over time]" };
        println!(
            "criterion {} {name}: {} ({}; {:.2} s{budget}){late}",
            k + 1,
            if passed { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
