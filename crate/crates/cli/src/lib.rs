//! Command-line front end for `nilorbit`: problem files, command dispatch and
//! reports. The binary in `main.rs` is a thin wrapper around [`run`].

pub mod commands;
pub mod error;
pub mod problem;
pub mod report;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use nilorbit::lattice_subgroup::ClosureCheck;

pub use error::CliError;
pub use problem::Problem;
pub use report::Report;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Structured,
}

#[derive(Parser, Debug)]
#[command(name = "nilorbit", version, about = "Multiplicities and Moore's formula on compact nilmanifolds")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for the randomized lattice-closure check and sampled checks.
    #[arg(long, global = true, default_value_t = ClosureCheck::default().seed)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a problem file and verify the algebra and the lattice subgroup.
    Validate {
        /// Problem file, or "-" for standard input.
        file: PathBuf,
    },
    /// Multiplicity report for the functionals of a problem.
    Mult {
        file: PathBuf,
        /// Only the functional with this name.
        #[arg(long)]
        functional: Option<String>,
    },
    /// Group the dual-lattice points of a box into coadjoint orbits.
    Spectrum {
        file: PathBuf,
        /// Coordinates in the dual-lattice basis range over [-bound, bound].
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// The four-dimensional filiform group where Moore's formula fails.
    Counterexample {
        /// Also list seeded spot checks of the coadjoint action formula.
        #[arg(long)]
        verify_action: bool,
    },
    /// Moore-formula verdict for the functionals of a problem.
    MooreCheck {
        file: PathBuf,
        #[arg(long)]
        functional: Option<String>,
    },
}

/// Reads a problem from a path, or from standard input for "-".
pub fn load(path: &std::path::Path) -> Result<Problem, CliError> {
    let (text, label) = if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Usage(format!("<stdin>: {e}")))?;
        (text, "<stdin>".to_string())
    } else {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        (text, path.display().to_string())
    };
    Problem::parse(&text, &label)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let check = ClosureCheck { seed: cli.seed, ..ClosureCheck::default() };
    match &cli.command {
        Command::Validate { file } => commands::validate(&load(file)?, &check),
        Command::Mult { file, functional } => commands::mult(&load(file)?, &check, functional.as_deref()),
        Command::Spectrum { file, bound } => commands::spectrum(&load(file)?, &check, *bound),
        Command::Counterexample { verify_action } => commands::counterexample(*verify_action, cli.seed),
        Command::MooreCheck { file, functional } => commands::moore_check(&load(file)?, &check, functional.as_deref()),
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Table => report.to_table(),
        Format::Structured => report.to_json() + "\n",
    }
}
