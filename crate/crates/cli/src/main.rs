use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rzero_core::classes::{assemble_pointed_module, Coefficients, Mode, ModeChoice};
use rzero_core::exact::{parse_rational, Field, Rational};
use rzero_core::harness::{check_exactness, check_invariances, check_stability, perturb, PerturbSpec, Report};
use rzero_core::io::{parse_input, BarcodeDocument, CriticalsDocument, DistanceDoc, InputDocument, ModuleDocument, RadiusDoc};
use rzero_core::par::{configure_threads, Execution};
use rzero_core::persistence::{bottleneck, PointedBarcode};
use rzero_core::pipeline::{analyze, filtration_of, Options, DEFAULT_SEED};
use rzero_core::simplicial::PLMap;
use rzero_core::{Error, Result};
use serde::Serialize;

/// Robust zeros of piecewise-linear maps, computed exactly.
#[derive(Parser)]
#[command(name = "rzero", version)]
struct Cli {
    /// Worker threads for per-level work (1 runs sequentially, 0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Analysis {
    /// auto, signs, circle or hopf.
    #[arg(long, default_value = "auto")]
    mode: ModeChoice,
    /// Master seed for rays and probes (defaults to RZERO_SEED, then a fixed seed).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Positive critical values and sample radii of the subdivided map.
    Criticals { input: PathBuf },
    /// Pointed barcode with robust radius and the seeds used.
    Barcode {
        input: PathBuf,
        #[command(flatten)]
        analysis: Analysis,
        /// q or f<p>; defaults to f2 in sign mode and q otherwise.
        #[arg(long)]
        field: Option<Field>,
    },
    /// The robust radius alone.
    RobustRadius {
        input: PathBuf,
        #[command(flatten)]
        analysis: Analysis,
    },
    /// The sampled pointed module.
    Module {
        input: PathBuf,
        #[command(flatten)]
        analysis: Analysis,
        /// z, q or f<p>; defaults to z, or f2 in sign mode.
        #[arg(long)]
        field: Option<Coefficients>,
    },
    /// Pointed bottleneck distance between two barcode or input documents.
    Bottleneck {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        analysis: Analysis,
        #[arg(long)]
        field: Option<Field>,
    },
    /// A random perturbation of the input by at most DELTA at every vertex.
    Perturb {
        input: PathBuf,
        #[arg(long, value_parser = rational)]
        delta: Rational,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Invariance and exactness checks.
    Check {
        input: PathBuf,
        #[command(flatten)]
        analysis: Analysis,
    },
    /// Stability of barcode and robust radius under random perturbations.
    Fuzz {
        input: PathBuf,
        #[arg(long, value_parser = rational)]
        delta: Rational,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[command(flatten)]
        analysis: Analysis,
    },
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational"))
}

enum Outcome {
    Json(Box<dyn erased::Document>),
    /// A report whose failures turn into exit code 3.
    Report(Report),
}

mod erased {
    pub trait Document {
        fn render(&self, pretty: bool) -> String;
    }

    impl<T: serde::Serialize> Document for T {
        fn render(&self, pretty: bool) -> String {
            let text = if pretty { serde_json::to_string_pretty(self) } else { serde_json::to_string(self) };
            text.expect("documents serialize")
        }
    }
}

fn json<T: Serialize + 'static>(value: T) -> Outcome {
    Outcome::Json(Box::new(value))
}

#[derive(Serialize)]
struct RobustRadiusDoc {
    robust_radius: RadiusDoc,
}

#[derive(Serialize)]
struct DistanceResult {
    distance: DistanceDoc,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<PLMap> {
    parse_input(&read(path)?).map_err(|e| match e {
        Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn seed(explicit: Option<u64>) -> Result<u64> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var("RZERO_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Input(format!("RZERO_SEED: `{v}` is not a 64-bit seed"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn options(analysis: &Analysis, exec: Execution) -> Result<Options> {
    Ok(Options { mode: analysis.mode, field: None, seed: seed(analysis.seed)?, exec })
}

/// A barcode from a barcode document, or from analysing an input document.
fn barcode_of(path: &Path, opts: &Options) -> Result<PointedBarcode> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    if value.get("bars").is_some() {
        let doc: BarcodeDocument =
            serde_json::from_value(value).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        doc.barcode()
    } else {
        let doc: InputDocument =
            serde_json::from_value(value).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Ok(analyze(&doc.to_map()?, opts)?.barcode)
    }
}

fn run(command: &Command, exec: Execution) -> Result<Outcome> {
    match command {
        Command::Criticals { input } => {
            let filt = filtration_of(&load(input)?)?;
            Ok(json(CriticalsDocument {
                criticals: filt.criticals.values.iter().map(RadiusDoc::of).collect(),
                has_zero_min: filt.criticals.has_zero_min,
                samples: filt.samples.iter().map(RadiusDoc::of).collect(),
            }))
        }
        Command::Barcode { input, analysis, field } => {
            let mut opts = options(analysis, exec)?;
            opts.field = *field;
            Ok(json(BarcodeDocument::from_analysis(&analyze(&load(input)?, &opts)?)))
        }
        Command::RobustRadius { input, analysis } => {
            let a = analyze(&load(input)?, &options(analysis, exec)?)?;
            Ok(json(RobustRadiusDoc { robust_radius: RadiusDoc::of(a.robust_radius()) }))
        }
        Command::Module { input, analysis, field } => {
            let a = analyze(&load(input)?, &options(analysis, exec)?)?;
            let coefficients = field.unwrap_or(match a.mode {
                Mode::Signs => Coefficients::Field(Field::Prime(2)),
                _ => Coefficients::Integers,
            });
            Ok(json(ModuleDocument::of(&assemble_pointed_module(&a.classes, coefficients)?)))
        }
        Command::Bottleneck { a, b, analysis, field } => {
            let mut opts = options(analysis, exec)?;
            opts.field = *field;
            let d = bottleneck(&barcode_of(a, &opts)?, &barcode_of(b, &opts)?);
            Ok(json(DistanceResult { distance: DistanceDoc::of(&d) }))
        }
        Command::Perturb { input, delta, seed: s } => {
            let g = perturb(&load(input)?, &PerturbSpec::new(delta.clone(), seed(*s)?))?;
            Ok(json(InputDocument::from_map(&g)))
        }
        Command::Check { input, analysis } => {
            let f = load(input)?;
            let mut report = check_invariances(&f, &options(analysis, exec)?)?;
            report.extend(check_exactness(&f)?);
            Ok(Outcome::Report(report))
        }
        Command::Fuzz { input, delta, trials, analysis } => {
            let report = check_stability(&load(input)?, &options(analysis, exec)?, delta, *trials)?;
            Ok(Outcome::Report(report))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let exec = if cli.threads == 1 {
        Execution::Serial
    } else {
        configure_threads(cli.threads);
        Execution::default()
    };
    match run(&cli.command, exec) {
        Ok(Outcome::Json(doc)) => {
            println!("{}", doc.render(cli.pretty));
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(report)) => {
            println!("{}", erased::Document::render(&report, cli.pretty));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("rzero: {} check(s) failed", report.checks.iter().filter(|c| !c.passed).count());
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("rzero: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
