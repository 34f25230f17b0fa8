//! `colgraph`: command-line front end for colored graphs, pairings, stacked
//! maps, gluing enumeration, series and SYK maps.
//!
//! Reports are `key=value` lines in a fixed order. Exit status 0 means
//! success, 1 invalid input, 2 an exceeded cap and 3 a failed certificate.
//! The thread count is read from `COLGRAPH_THREADS`.

mod commands;
mod error;
mod input;
mod regress;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use colgraph_pairings::DEFAULT_CAP;

use crate::input::PairingChoice;

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "COLGRAPH_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "colgraph",
    version,
    about = "Colored graphs, pairings, stacked maps and gluings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Caps shared by the exhaustive commands.
#[derive(Debug, Clone, Copy, Args)]
struct Caps {
    /// Largest number of black vertices in an exhaustive search.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural validation: bipartiteness, regularity class, connectivity.
    Validate { file: PathBuf },
    /// Scores, Gurau degree, jacket genera and, for bubbles, pairing counts.
    Stats {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Pairings of a bubble with the 0-score and `L_m` of each covering.
    Pairings {
        file: PathBuf,
        /// Also print a human-readable table.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Scaling coefficients of a bubble.
    Coefficients {
        file: PathBuf,
        /// Replace the tree assumption by enumeration up to this many copies.
        #[arg(long, value_name = "B_MAX")]
        enumerate: Option<usize>,
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// The stacked map of a paired graph.
    Psi {
        file: PathBuf,
        /// `optimal`, `color<k>` or a pairing index.
        #[arg(long, default_value = "optimal")]
        pairing: PairingChoice,
        /// Print the map in DOT format instead of the report.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Applies a script of moves, one per line, reporting each step.
    Move { file: PathBuf, script: PathBuf },
    /// Gluings of copies of the given bubbles along color 0.
    Enumerate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Largest number of bubbles.
        #[arg(long = "b")]
        b: usize,
        /// Count gluings with a fixed root edge.
        #[arg(long)]
        rooted: bool,
        /// Report the maximal 0-score at each size with its witnesses.
        #[arg(long)]
        maximal: bool,
        /// Estimate the scaling exponent from the maximal gluings.
        #[arg(long)]
        tilde_a: bool,
        /// Certify `Φ₀ ≤ D + ã·b` for the given `ã` (exit 3 on failure).
        #[arg(long, value_name = "TILDE_A")]
        verify: Option<String>,
        /// Write maximal witnesses as `.gem` files into this directory.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Power-series solution of an equation such as `1+3zG^4`.
    Series {
        equation: String,
        #[arg(long)]
        order: usize,
    },
    /// Maps of the colored SYK model.
    Syk {
        #[command(subcommand)]
        command: SykCommand,
    },
    /// DOT export of a graph or of its stacked map.
    ExportDot {
        file: PathBuf,
        /// Export the stacked map for this pairing instead of the graph.
        #[arg(long)]
        pairing: Option<PairingChoice>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Recomputes the coefficient rows of the bundled fixtures.
    Regress {
        /// Fixture directory holding `.gem` files and `expected.txt`.
        dir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum SykCommand {
    /// Order `L` of a bubble under a pairing, or of a covering graph.
    Classify {
        file: PathBuf,
        #[arg(long, default_value = "optimal")]
        pairing: PairingChoice,
        #[command(flatten)]
        caps: Caps,
    },
    /// Brute-force counts of rooted maps of a given order.
    Count {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        marks: usize,
        /// Largest number of pairs.
        #[arg(long)]
        vmax: usize,
        #[arg(long = "d", default_value_t = 3)]
        d: usize,
        /// Split next-to-leading two-point counts by scheme shape.
        #[arg(long)]
        by_scheme: bool,
    },
    /// Coefficients of a named generating function.
    Gf {
        name: String,
        #[arg(long)]
        order: usize,
        #[arg(long = "d", default_value_t = 3)]
        d: usize,
    },
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var(THREADS_VAR) {
        let n: usize = value.parse().map_err(|_| {
            error::Invalid(format!(
                "{THREADS_VAR} must be a positive integer, got {value:?}"
            ))
        })?;
        if n == 0 {
            anyhow::bail!(error::Invalid(format!("{THREADS_VAR} must be positive")));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Validate { file } => commands::validate(&file),
        Command::Stats { file, caps } => commands::stats(&file, caps.cap),
        Command::Pairings { file, table, caps } => commands::pairings(&file, table, caps.cap),
        Command::Coefficients {
            file,
            enumerate,
            table,
            caps,
        } => commands::coefficients(&file, enumerate, table, caps.cap),
        Command::Psi {
            file,
            pairing,
            dot,
            caps,
        } => commands::psi(&file, pairing, dot, caps.cap),
        Command::Move { file, script } => commands::moves(&file, &script),
        Command::Enumerate {
            files,
            b,
            rooted,
            maximal,
            tilde_a,
            verify,
            dump,
            caps,
        } => commands::enumerate(&commands::EnumerateArgs {
            files,
            b,
            rooted,
            maximal,
            tilde_a,
            verify,
            dump,
            cap: caps.cap,
        }),
        Command::Series { equation, order } => commands::series(&equation, order),
        Command::Syk { command } => match command {
            SykCommand::Classify {
                file,
                pairing,
                caps,
            } => commands::syk_classify(&file, pairing, caps.cap),
            SykCommand::Count {
                order,
                marks,
                vmax,
                d,
                by_scheme,
            } => commands::syk_count(d, order, marks, vmax, by_scheme),
            SykCommand::Gf { name, order, d } => commands::syk_gf(&name, d, order),
        },
        Command::ExportDot {
            file,
            pairing,
            caps,
        } => commands::export_dot(&file, pairing, caps.cap),
        Command::Regress { dir } => regress::run(dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let code = error::exit_code(&err);
            eprintln!("error={}", format!("{err:#}").replace('\n', " "));
            eprintln!("exit_status={code}");
            ExitCode::from(code)
        }
    }
}
