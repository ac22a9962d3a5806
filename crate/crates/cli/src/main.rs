use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matex::verify::DEFAULT_SEARCH_BUDGET;

mod commands;
mod exit;
mod formats;

use exit::{Code, Failure};

/// Matroid base-exchange tools.
#[derive(Debug, Parser)]
#[command(name = "matex", version)]
struct Cli {
    /// Seed for randomized search
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for search-shift2
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Enumeration cap (check, enumerate-bases) or brute-force gate (--verify)
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Write the result document here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Report errors as a JSON object on stdout
    #[arg(long, global = true)]
    json_errors: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a matroid file and print its rank and basis count
    Check { matroid: PathBuf },
    /// List every basis of a matroid
    EnumerateBases { matroid: PathBuf },
    /// Compute A_2..A_k for bases B_1..B_k and a seed A_1 ⊆ B_1
    CyclicExchange {
        matroid: PathBuf,
        bases: PathBuf,
        /// A_1 as a JSON array of ascending element ids
        #[arg(long, default_value = "[]")]
        a1: String,
        /// Also check the answer against the brute-force oracle
        #[arg(long)]
        verify: bool,
    },
    /// Partition a universe across matroids, or certify that it cannot be done
    Partition { problem: PathBuf },
    /// Search for a rank-3 instance where shift-by-one and shift-by-two conflict
    SearchShift2 {
        #[arg(long)]
        k: usize,
        /// Maximum number of candidates examined
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: usize,
    },
}

fn run(cli: &Cli) -> Result<commands::Output, Failure> {
    match &cli.command {
        Command::Check { matroid } => commands::check(matroid, cli.cap),
        Command::EnumerateBases { matroid } => commands::enumerate(matroid, cli.cap),
        Command::CyclicExchange {
            matroid,
            bases,
            a1,
            verify,
        } => commands::exchange(matroid, bases, a1, *verify, cli.cap),
        Command::Partition { problem } => commands::partition(problem),
        Command::SearchShift2 { k, budget } => {
            commands::search_shift2(*k, *budget, cli.seed, cli.threads)
        }
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, format!("{body}\n"))
            .map_err(|e| Failure::parse(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{body}").map_err(|e| Failure::parse(e.to_string()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                Code::Parse.into()
            } else {
                Code::Ok.into()
            };
        }
    };

    let result = run(&cli).and_then(|out| emit(&cli, &out.body).map(|()| out.code));
    match result {
        Ok(code) => code.into(),
        Err(failure) => {
            if cli.json_errors {
                let doc = serde_json::json!({
                    "error": failure.message,
                    "code": failure.code as u8,
                });
                println!("{doc}");
            } else {
                eprintln!("error: {failure}");
            }
            failure.code.into()
        }
    }
}
