use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;
use tanvar_core::algebra::{FieldConfig, DEFAULT_PRIME, DEFAULT_SEED};
use tanvar_core::groebner::DEFAULT_DEGREE_CAP;
use tanvar_core::runner::{self, Command, RunConfig, GOLDEN_PRIMES};
use tanvar_core::tangential::DEFAULT_TRIALS;
use tanvar_core::varieties::VarietySpec;
use tanvar_core::Error;

/// Tangent and secant varieties, tangent degrees and Severi cetos of
/// projective varieties, with JSON reports.
#[derive(Parser, Debug)]
#[command(name = "tanvar", version)]
struct Cli {
    /// implicitize, tan, sec, dims, tau, omega, omega:I, mu, sigma, severi,
    /// bounds, ff2, focal, gauss, osc, dev, report-all, or golden
    command: String,
    /// Variety spec as JSON.
    #[arg(long)]
    spec: Option<String>,
    /// File holding the variety spec.
    #[arg(long)]
    spec_file: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: u32,
    /// Rerun at a second prime and check that every integer agrees.
    #[arg(long)]
    verify: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Index for `omega`; defaults to the dimension.
    #[arg(long)]
    index: Option<usize>,
    /// Manifest for `golden`.
    #[arg(long)]
    manifest: Option<PathBuf>,
}

enum Outcome {
    Pass(Value),
    IdentityFailure(Value),
}

fn read_spec(cli: &Cli) -> Result<VarietySpec, Error> {
    let src = match (&cli.spec, &cli.spec_file) {
        (Some(s), None) => s.clone(),
        (None, Some(p)) => std::fs::read_to_string(p)
            .map_err(|e| Error::InvalidSpec(format!("{}: {e}", p.display())))?,
        (Some(_), Some(_)) => return Err(Error::InvalidSpec("give --spec or --spec-file, not both".into())),
        (None, None) => return Err(Error::InvalidSpec("missing --spec or --spec-file".into())),
    };
    VarietySpec::from_json(&src)
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let field = FieldConfig::prime_field(cli.prime, cli.seed)?;
    if cli.command == "golden" {
        let path = cli
            .manifest
            .as_ref()
            .ok_or_else(|| Error::ManifestParseError("missing --manifest".into()))?;
        let rows = runner::load_manifest(path)?;
        let summary = runner::golden_suite(&rows, &GOLDEN_PRIMES, cli.seed, cli.trials);
        let v = serde_json::to_value(&summary).expect("summaries serialize");
        return Ok(if summary.all_pass() { Outcome::Pass(v) } else { Outcome::IdentityFailure(v) });
    }
    let mut command: Command = cli.command.parse()?;
    if let (Command::Omega(None), Some(i)) = (command, cli.index) {
        command = Command::Omega(Some(i));
    }
    let cfg = RunConfig {
        spec: read_spec(cli)?,
        command,
        field,
        trials: cli.trials,
        degree_cap: cli.degree_cap,
        output_path: cli.out.clone(),
    };
    let report = if cli.verify { runner::run_verified(&cfg)? } else { runner::run(&cfg)? };
    let v = serde_json::to_value(&report).expect("reports serialize");
    Ok(if report.all_pass() { Outcome::Pass(v) } else { Outcome::IdentityFailure(v) })
}

fn emit(v: &Value, out: Option<&PathBuf>) -> bool {
    let text = format!("{v}\n");
    match out {
        Some(p) => match std::fs::write(p, &text) {
            Ok(()) => true,
            Err(e) => {
                let err = runner::error_value(&Error::Unsupported(format!("{}: {e}", p.display())));
                println!("{err}");
                false
            }
        },
        None => {
            print!("{text}");
            true
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = serde_json::json!({"error": {"kind": "UsageError", "detail": e.to_string().trim()}});
            println!("{err}");
            return ExitCode::from(1);
        }
    };
    match execute(&cli) {
        Ok(Outcome::Pass(v)) => {
            if emit(&v, cli.out.as_ref()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::IdentityFailure(v)) => {
            emit(&v, cli.out.as_ref());
            ExitCode::from(2)
        }
        Err(e) => {
            println!("{}", runner::error_value(&e));
            ExitCode::from(1)
        }
    }
}
