use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

#[derive(Parser, Debug)]
#[command(name = "kdecomp", version, about = "k-ideals and primary decomposition in finite commutative semirings")]
pub struct Cli {
    /// Also write the report to FILE (for `enumerate`: the output directory).
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for census sweeps; 1 runs sequentially.
    #[arg(long, global = true, env = "KDECOMP_JOBS", value_name = "N")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a semiring file.
    Check { file: PathBuf },
    /// List ideals in bitset order.
    Ideals {
        file: PathBuf,
        #[arg(long)]
        k_only: bool,
    },
    /// k-closure of the ideal generated by a set.
    Closure {
        file: PathBuf,
        #[arg(long, value_name = "ELEMS")]
        set: String,
    },
    /// Prime / primary / k-irreducible status and colon ideals.
    Classify {
        file: PathBuf,
        #[arg(long, value_name = "ELEMS")]
        set: String,
    },
    /// Reduced primary decomposition of a k-ideal.
    Decompose {
        file: PathBuf,
        #[arg(long, value_name = "ELEMS")]
        set: String,
    },
    /// Associated primes of a k-ideal.
    Primes {
        file: PathBuf,
        #[arg(long, value_name = "ELEMS")]
        set: String,
    },
    /// Full check sweep for one semiring.
    Verify { file: PathBuf },
    /// Full check sweep over every semiring of order 2..=N.
    VerifyAll {
        #[arg(long)]
        order: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Enumerate semirings of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Certificates in N and N[x].
    #[command(group(ArgGroup::new("task").required(true).args(["demo", "check_principal"])))]
    Natpoly {
        #[arg(long, value_enum)]
        demo: Option<Demo>,
        /// Bounded subtractivity check of aN on [0, BOUND].
        #[arg(long = "check-lemma210", num_args = 2, value_names = ["A", "BOUND"])]
        check_principal: Option<Vec<u64>>,
        /// Generators for `--demo sums`.
        #[arg(long, default_value_t = 2)]
        a: u64,
        #[arg(long, default_value_t = 3)]
        b: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Demo {
    Golan,
    Yoked,
    Sums,
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("usage error");
            eprintln!("kdecomp: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let code = commands::run(&cli, report::command_line(&args));
    ExitCode::from(code as u8)
}
