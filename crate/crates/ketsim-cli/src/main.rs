//! `ketsim`: run OpenQASM files and textbook algorithm demos.

mod demo;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ketsim::display::DisplayOptions;
use ketsim::executor::DEFAULT_SHOTS;
use ketsim::{emit_qasm, format_counts, format_wavefunction, parse_qasm, run_counts, run_statevector, Circuit, RunSeed};

#[derive(Parser, Debug)]
#[command(name = "ketsim", version, about = "Dense statevector quantum circuit simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simulate a qasm file and print its wavefunction or measurement counts.
    Run {
        file: PathBuf,
        /// Print the final wavefunction (the circuit must not measure).
        #[arg(long, conflicts_with = "shots")]
        statevector: bool,
        /// Number of measurement shots [default: 1024 when the circuit measures].
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        shots: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a textbook algorithm demo and print its trace.
    Demo {
        name: DemoName,
        /// Main-register size [default: 2 for qft with --marked, 3 otherwise; 4 for grover].
        #[arg(long)]
        qubits: Option<usize>,
        /// Marked state for grover, or the 2-qubit search pattern for qft, qubit 0 first (e.g. 0110).
        #[arg(long)]
        marked: Option<String>,
        /// Print the hidden structure of the blackbox.
        #[arg(long)]
        reveal: bool,
        /// Use the control-position phase table for the qft demo.
        #[arg(long)]
        paper_compat: bool,
        /// Draw constant and balanced functions with equal odds in the dj demo.
        #[arg(long)]
        balance_odds: bool,
        /// Number of coin flips for the coin demo [default: 100].
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        flips: Option<u64>,
        /// Measurement shots [default: 1024].
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        shots: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the canonical listing of a qasm file.
    Emit { file: PathBuf },
}

#[derive(Args, Debug, Clone, Copy)]
struct OutputArgs {
    /// RNG seed [default: drawn from system entropy].
    #[arg(long)]
    seed: Option<u64>,
    /// Decimal places for amplitudes.
    #[arg(long, default_value_t = 5)]
    precision: usize,
    /// One term per line.
    #[arg(long)]
    column: bool,
}

impl OutputArgs {
    fn display(&self) -> DisplayOptions {
        DisplayOptions::default()
            .with_precision(self.precision)
            .with_column(self.column)
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or_else(|| {
            let seed = rand::random();
            eprintln!("seed: {seed}");
            seed
        })
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum DemoName {
    Deutsch,
    Dj,
    Bv,
    Simon,
    Grover,
    Qft,
    Coin,
}

/// Failure with its exit status.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Usage(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Parse(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

impl From<ketsim::Error> for Failure {
    fn from(e: ketsim::Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn load(path: &Path) -> Result<Circuit, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_qasm(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn cmd_run(file: &Path, statevector: bool, shots: Option<u64>, output: OutputArgs) -> Result<String, Failure> {
    let circuit = load(file)?;
    let measures = circuit.instructions().iter().any(|i| i.is_measure());
    if statevector || (shots.is_none() && !measures) {
        let state = run_statevector(&circuit)?;
        return Ok(format_wavefunction(&state, &output.display())? + "\n");
    }
    let counts = run_counts(&circuit, shots.unwrap_or(DEFAULT_SHOTS), RunSeed(output.seed()))?;
    Ok(format_counts(&counts, output.column) + "\n")
}

fn execute(command: Command) -> Result<String, Failure> {
    match command {
        Command::Run {
            file,
            statevector,
            shots,
            output,
        } => cmd_run(&file, statevector, shots, output),
        Command::Emit { file } => Ok(emit_qasm(&load(&file)?)),
        Command::Demo {
            name,
            qubits,
            marked,
            reveal,
            paper_compat,
            balance_odds,
            flips,
            shots,
            output,
        } => {
            let request = demo::Request {
                qubits,
                marked,
                reveal,
                paper_compat,
                balance_odds,
                flips,
                shots: shots.unwrap_or(DEFAULT_SHOTS),
                display: output.display(),
                column: output.column,
            };
            request.check(name)?;
            let seed = if name == DemoName::Qft { 0 } else { output.seed() };
            demo::run(name, &request, seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
