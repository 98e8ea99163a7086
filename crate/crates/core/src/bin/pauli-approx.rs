use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pauli_approx::frontend::{
    parse_bloch, run_counterexamples, run_solve, run_sweep, run_verify, FrontendError, StateInput, SweepMode,
    SweepSpec, VerifySpec,
};
use pauli_approx::AkPhiParams;

#[derive(Parser)]
#[command(name = "pauli-approx", version, about = "Optimal approximation of qubit states by Pauli eigenstate mixtures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single state given as (a, k, phi) or as a Bloch vector.
    Solve(SolveArgs),
    /// Write a CSV grid over a, k ∈ [0, 1] at fixed phi.
    Sweep(SweepArgs),
    /// Randomized cross-check of the closed form against the oracles.
    Verify(VerifyArgs),
    /// Print the two worked counterexamples.
    Counterexample,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, requires_all = ["k", "phi"], conflicts_with = "bloch")]
    a: Option<f64>,
    #[arg(long, requires = "a")]
    k: Option<f64>,
    #[arg(long, requires = "a", allow_negative_numbers = true)]
    phi: Option<f64>,
    /// Bloch vector as x,y,z.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "a")]
    bloch: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_3)]
    phi: f64,
    #[arg(long, default_value_t = 201)]
    grid: usize,
    /// comment | sacchi | diff
    #[arg(long, default_value = "comment")]
    mode: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 10_000)]
    boundary_samples: usize,
}

fn run(command: Command) -> Result<ExitCode, FrontendError> {
    match command {
        Command::Solve(args) => {
            let input = match (args.a, args.k, args.phi, args.bloch) {
                (Some(a), Some(k), Some(phi), None) => StateInput::AkPhi(AkPhiParams::new(a, k, phi)?),
                (None, None, None, Some(text)) => StateInput::Bloch(parse_bloch(&text)?),
                _ => return Err(FrontendError::Argument("give either --a/--k/--phi or --bloch".into())),
            };
            print!("{}", run_solve(&input)?);
        }
        Command::Sweep(args) => {
            let spec = SweepSpec { phi: args.phi, grid: args.grid, mode: args.mode.parse::<SweepMode>()? };
            let rows = run_sweep(&spec, &args.out)?;
            eprintln!("wrote {rows} rows to {}", args.out.display());
        }
        Command::Verify(args) => {
            let spec = VerifySpec {
                samples: args.samples,
                seed: args.seed,
                tol: args.tol,
                boundary_samples: args.boundary_samples,
            };
            let report = run_verify(&spec)?;
            println!("{report}");
            if !report.passed() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Counterexample => print!("{}", run_counterexamples()?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
