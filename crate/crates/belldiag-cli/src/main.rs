//! Command-line front end: build states, classify them, sweep parameters
//! into phase-diagram tables, evaluate witnesses, emit separable
//! decompositions, and run the built-in invariant suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use belldiag::bell::check_symmetry;
use belldiag::classify::ppt_numeric;
use belldiag::sampling::random_phase_vector;
use belldiag::witness::{detect, evaluate, WitnessSpec};
use belldiag::Real;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use belldiag_cli::family::{params_json, resolve, resolve_sweep_point, Family, FamilyParams};
use belldiag_cli::jsonfmt::{sci17, to_json_string};
use belldiag_cli::records::{
    verdict_name, BuildRecord, ClassifyRecord, DecomposeRecord, MatrixJson, SweepRow, WitnessRecord,
};
use belldiag_cli::selftest::{self, SelftestConfig};
use belldiag_cli::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "belldiag",
    version,
    about = "Build, classify and sweep Bell-diagonal two-qudit states"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Seed for every pseudorandom draw (symmetry probes, samplers)
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Output format (csv applies to the tabular sweep command)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Eigenvalue tolerance for numeric positivity checks
    #[arg(long = "tol-eig", global = true, default_value_t = 1e-10)]
    tol_eig: f64,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct FamilySelector {
    /// State family
    #[arg(value_enum)]
    family: Family,

    /// Local qudit dimension (2..=8)
    #[arg(long)]
    d: usize,

    /// Weights for fam (l1,..,ld) or famg (l0,..,ld)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambdas: Option<Vec<f64>>,

    /// Parameter of the horodecki family
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,

    /// Parameter of the epsilon family
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,

    /// Weight of the maximally entangled component (isotropic family)
    #[arg(long = "lambda-d", allow_hyphen_values = true)]
    lambda_d: Option<f64>,
}

impl FamilySelector {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            lambdas: self.lambdas.clone(),
            alpha: self.alpha,
            epsilon: self.epsilon,
            lambda_d: self.lambda_d,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a state as a dense matrix with validity metadata
    Build(FamilySelector),
    /// Classify a state as Separable / PptEntangled / NptEntangled / Undecided
    Classify(FamilySelector),
    /// Classify along a parameter grid and emit one row per point
    Sweep(SweepArgs),
    /// Evaluate one witness against a target state
    Witness(WitnessArgs),
    /// Emit an explicit separable decomposition
    Decompose(FamilySelector),
    /// Run the built-in invariant suites
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// State family to sweep
    #[arg(value_enum)]
    family: Family,

    /// Local qudit dimension (2..=8)
    #[arg(long)]
    d: usize,

    /// Grid start
    #[arg(long, allow_hyphen_values = true)]
    start: Option<f64>,

    /// Grid stop (inclusive)
    #[arg(long, allow_hyphen_values = true)]
    stop: Option<f64>,

    /// Grid step (> 0)
    #[arg(long, allow_hyphen_values = true)]
    step: Option<f64>,

    /// Explicit parameter values instead of a start/stop/step grid
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    values: Option<Vec<f64>>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Target state family
    #[arg(value_enum)]
    family: Family,

    /// Local qudit dimension (2..=8)
    #[arg(long)]
    d: usize,

    /// Witness cutoff k in 1..=d-1
    #[arg(long)]
    k: usize,

    /// Permutation of 1..=d-1 as the images (pi(1),...,pi(d-1)); identity if omitted
    #[arg(long, value_delimiter = ',')]
    pi: Option<Vec<usize>>,

    /// Weights for fam (l1,..,ld) or famg (l0,..,ld)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambdas: Option<Vec<f64>>,

    /// Parameter of the horodecki family
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,

    /// Parameter of the epsilon family
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<f64>,

    /// Weight of the maximally entangled component (isotropic family)
    #[arg(long = "lambda-d", allow_hyphen_values = true)]
    lambda_d: Option<f64>,
}

#[derive(Args)]
struct SelftestArgs {
    /// Largest local dimension exercised (2..=6)
    #[arg(long = "d-max", default_value_t = 5)]
    d_max: usize,

    /// Cripple the eigensolver convergence threshold (negative testing)
    #[arg(long, hide = true)]
    inject_eig_fault: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::SelftestFailed) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn check_dimension(d: usize) -> Result<(), CliError> {
    if (2..=8).contains(&d) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--d must be in 2..=8, got {d}")))
    }
}

fn require_json(format: Format, cmd: &str) -> Result<(), CliError> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError::Usage(format!("{cmd} only emits json; csv applies to sweep"))),
    }
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.cmd {
        Cmd::Build(sel) => {
            require_json(cli.format, "build")?;
            check_dimension(sel.d)?;
            let params = sel.params();
            let weights = resolve(sel.family, sel.d, &params)?;
            let rho = weights.state();
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let symmetry_residuals: Vec<f64> = (0..5)
                .map(|_| {
                    let x = random_phase_vector::<f64, _>(sel.d, &mut rng);
                    check_symmetry(rho.matrix(), &x).expect("dimensions agree")
                })
                .collect();
            let trace = rho.matrix().trace();
            let record = BuildRecord {
                family: sel.family.name().to_string(),
                d: sel.d,
                params: params_json(sel.family, &params),
                matrix: MatrixJson::from_matrix(rho.matrix()),
                trace: [trace.re, trace.im],
                min_eigenvalue: rho.min_eigenvalue()?,
                symmetry_residuals,
            };
            emit(&cli.output, &(to_json_string(&record) + "\n"))
        }
        Cmd::Classify(sel) => {
            require_json(cli.format, "classify")?;
            check_dimension(sel.d)?;
            let params = sel.params();
            let weights = resolve(sel.family, sel.d, &params)?;
            let verdict = weights.classify();
            let record =
                ClassifyRecord::new(sel.family.name(), sel.d, params_json(sel.family, &params), &verdict);
            emit(&cli.output, &(to_json_string(&record) + "\n"))
        }
        Cmd::Sweep(args) => {
            check_dimension(args.d)?;
            let grid = sweep_grid(args)?;
            let mut rows = Vec::with_capacity(grid.len());
            for &param in &grid {
                let weights = resolve_sweep_point(args.family, args.d, param)?;
                let verdict = weights.classify();
                let rho = weights.state();
                let min_pt_eig = ppt_numeric(&rho)?;
                let best_witness_value = detect(&rho).best_value;
                rows.push(SweepRow {
                    param,
                    verdict: verdict_name(verdict.kind).to_string(),
                    min_pt_eig,
                    best_witness_value,
                });
            }
            let content = match cli.format {
                Format::Json => to_json_string(&rows) + "\n",
                Format::Csv => {
                    let mut out = String::from("param,verdict,min_pt_eig,best_witness_value\n");
                    for row in &rows {
                        out.push_str(&format!(
                            "{},{},{},{}\n",
                            sci17(row.param),
                            row.verdict,
                            sci17(row.min_pt_eig),
                            sci17(row.best_witness_value)
                        ));
                    }
                    out
                }
            };
            emit(&cli.output, &content)
        }
        Cmd::Witness(args) => {
            require_json(cli.format, "witness")?;
            check_dimension(args.d)?;
            let spec = match &args.pi {
                Some(pi) => WitnessSpec::new(args.d, args.k, pi.clone()),
                None => WitnessSpec::identity(args.d, args.k),
            }?;
            let params = FamilyParams {
                lambdas: args.lambdas.clone(),
                alpha: args.alpha,
                epsilon: args.epsilon,
                lambda_d: args.lambda_d,
            };
            let weights = resolve(args.family, args.d, &params)?;
            let rho = weights.state();
            let trace_value = evaluate(&rho, &spec)?;
            let record = WitnessRecord {
                d: args.d,
                k: args.k,
                pi: spec.pi().to_vec(),
                family: args.family.name().to_string(),
                params: params_json(args.family, &params),
                trace_value,
                detected: trace_value < -<f64 as Real>::TOL_DETECT,
            };
            emit(&cli.output, &(to_json_string(&record) + "\n"))
        }
        Cmd::Decompose(sel) => {
            require_json(cli.format, "decompose")?;
            check_dimension(sel.d)?;
            let params = sel.params();
            let weights = resolve(sel.family, sel.d, &params)?;
            let extended = weights.as_extended();
            let ensemble = belldiag::classify::separable_decomposition(&extended)?;
            let target = weights.state();
            let reconstruction_error = ensemble.max_error_vs(target.matrix());
            let record = DecomposeRecord::new(
                sel.family.name(),
                sel.d,
                params_json(sel.family, &params),
                &ensemble,
                reconstruction_error,
            );
            emit(&cli.output, &(to_json_string(&record) + "\n"))
        }
        Cmd::Selftest(args) => {
            if !(2..=6).contains(&args.d_max) {
                return Err(CliError::Usage(format!("--d-max must be in 2..=6, got {}", args.d_max)));
            }
            let ok = selftest::run(&SelftestConfig {
                d_max: args.d_max,
                seed: cli.seed,
                tol_eig: cli.tol_eig,
                inject_eig_fault: args.inject_eig_fault,
            });
            if ok {
                Ok(())
            } else {
                Err(CliError::SelftestFailed)
            }
        }
    }
}

fn sweep_grid(args: &SweepArgs) -> Result<Vec<f64>, CliError> {
    match (&args.values, args.start, args.stop, args.step) {
        (Some(values), None, None, None) => {
            if values.is_empty() {
                Err(CliError::Usage("--values must list at least one parameter".into()))
            } else {
                Ok(values.clone())
            }
        }
        (None, Some(start), Some(stop), Some(step)) => {
            if !step.is_finite() || step <= 0.0 {
                return Err(CliError::Usage(format!("--step must be > 0, got {step}")));
            }
            if start > stop {
                return Err(CliError::Usage(format!("--start {start} exceeds --stop {stop}")));
            }
            let mut grid = Vec::new();
            let mut i = 0usize;
            loop {
                let value = start + step * i as f64;
                if value > stop + step * 1e-9 {
                    break;
                }
                grid.push(value.min(stop));
                i += 1;
            }
            Ok(grid)
        }
        _ => Err(CliError::Usage(
            "provide either --start/--stop/--step or --values, not a mixture".into(),
        )),
    }
}
