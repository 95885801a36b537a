//! `frl` — fuzzy rough set approximation and lattice verification.
//!
//! Exit codes: 0 when every requested verification passes, 1 when a
//! verification is falsified (or the relation fails validation), 2 on
//! input errors.

use frl_cli::commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use frl_core::TNorm;

#[derive(Parser)]
#[command(
    name = "frl",
    version,
    about = "Fuzzy rough set approximation over finite universes, with exact rational arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// T-norm used for validation
    #[arg(long, global = true, value_enum, default_value_t = TNormArg::Min)]
    tnorm: TNormArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TNormArg {
    Min,
    Product,
    Lukasiewicz,
}

impl From<TNormArg> for TNorm {
    fn from(arg: TNormArg) -> TNorm {
        match arg {
            TNormArg::Min => TNorm::Minimum,
            TNormArg::Product => TNorm::Product,
            TNormArg::Lukasiewicz => TNorm::Lukasiewicz,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a relation; report spectrum and core/support classes
    Check {
        /// Relation file (JSON document or labelled CSV matrix)
        relation: PathBuf,
    },
    /// Approximate a reference set and verify the crisp/fuzzy bridges
    Approx {
        relation: PathBuf,
        /// Reference set as comma-separated labels
        #[arg(long)]
        set: String,
    },
    /// Enumerate both approximation lattices and verify their structure
    Lattice {
        relation: PathBuf,
        /// Write the Hasse diagram as Graphviz DOT to this path
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Scan all reference sets for exactness
    Exact { relation: PathBuf },
    /// Check the alpha-cut approximation identities for one set and alpha
    Alpha {
        relation: PathBuf,
        #[arg(long)]
        set: String,
        /// Threshold, e.g. "1/2" or "0.5"
        #[arg(long)]
        alpha: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tnorm = TNorm::from(cli.tnorm);
    let result = match &cli.command {
        Command::Check { relation } => commands::check(relation, tnorm),
        Command::Approx { relation, set } => commands::approx(relation, set, tnorm),
        Command::Lattice { relation, dot } => commands::lattice(relation, dot.as_deref(), tnorm),
        Command::Exact { relation } => commands::exact(relation, tnorm),
        Command::Alpha {
            relation,
            set,
            alpha,
        } => commands::alpha(relation, set, alpha, tnorm),
    };
    match result {
        Ok(report) => {
            match cli.format {
                OutputFormat::Text => print!("{report}"),
                OutputFormat::Machine => print!("{}", report.to_machine()),
            }
            if report.verified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
