//! Command-line front end for `smallvol`.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the rendered output together with an exit code: 0 on success, 1 when an
//! identity check fails, 2 on bad input.

mod commands;
mod grid;
pub mod table;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

pub use grid::Grid;
pub use table::{Format, Table};

/// Default caps; `--no-limits` lifts them. `h^0` cost grows like the product
/// of the coordinates, so large inputs can run for a very long time.
pub const MAX_DIM: usize = 8;
pub const MAX_MULTIPLE: u32 = 64;

#[derive(Debug, Parser)]
#[command(name = "smallvol", version, about = "Exact invariants of towers of P^1-bundles and their double covers")]
struct Cli {
    /// Output format for tables.
    #[arg(long, value_enum, global = true, default_value_t = Format::Markdown)]
    format: Format,
    /// Lift the caps on dimension (8), multiples (64) and the verify grid.
    #[arg(long, global = true)]
    no_limits: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical class, twisting classes and Δ-genus of a tower file.
    Tower {
        #[arg(long)]
        spec: PathBuf,
    },
    /// h^0 of a line bundle, or of its multiples with `--table`.
    H0 {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long)]
        table: bool,
        /// Largest multiple in the table.
        #[arg(long, requires = "table", default_value_t = 8)]
        multiples: u32,
    },
    /// Intersection number of `dim` classes separated by `;`.
    Intersect {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        classes: String,
    },
    /// First family: double covers of W branched in |2B|.
    ExampleA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: i64,
        /// Also list P_1 ..= P_M.
        #[arg(long)]
        pluri: Option<u32>,
    },
    /// Second family: double covers of W_k, k >= 1.
    ExampleB {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pluri: Option<u32>,
    },
    /// Run every identity check over a parameter grid.
    Verify {
        #[arg(long, default_value = "n=2..5,e=2..5,k=0..3")]
        grid: String,
        /// Largest even multiple for the plurigenus checks.
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Slope coefficients (a, b) of the second family for k = 0 ..= kmax.
    SlopeTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: usize,
    },
    /// General hypersurface of degree `degree` in weighted projective space.
    Wps {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        #[arg(long)]
        degree: u64,
        /// Also report the product with a curve of this genus.
        #[arg(long)]
        times_curve: Option<u64>,
    },
}

/// Closed form to perturb by one, to check that `verify` notices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    Genus,
    Volume,
    Slope,
}

/// A failed identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
    pub diagnostics: Vec<Diagnostic>,
}

/// Bad input; reported with exit code 2.
#[derive(Debug)]
pub(crate) struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub(crate) struct Output {
    pub text: String,
    pub diagnostics: Vec<Diagnostic>,
}

pub(crate) struct Options {
    pub format: Format,
    pub no_limits: bool,
}

pub fn run<I, T>(argv: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => finish(0, text, String::new(), vec![]),
                _ => finish(2, String::new(), text, vec![]),
            };
        }
    };
    let opts = Options {
        format: cli.format,
        no_limits: cli.no_limits,
    };
    let result = match cli.command {
        Command::Tower { spec } => commands::tower(&opts, &spec),
        Command::H0 {
            spec,
            divisor,
            table,
            multiples,
        } => commands::sections(&opts, &spec, &divisor, table.then_some(multiples)),
        Command::Intersect { spec, classes } => commands::intersect(&spec, &classes),
        Command::ExampleA { n, e, pluri } => commands::example(&opts, n, e, 0, pluri, false),
        Command::ExampleB { n, e, k, pluri } => commands::example(&opts, n, e, k, pluri, true),
        Command::Verify {
            grid,
            max_m,
            inject_fault,
        } => commands::verify(&opts, &grid, max_m, inject_fault),
        Command::SlopeTable { n, kmax } => commands::slope_table(&opts, n, kmax),
        Command::Wps {
            weights,
            degree,
            times_curve,
        } => commands::wps(&opts, weights, degree, times_curve),
    };
    match result {
        Ok(out) => {
            let code = if out.diagnostics.is_empty() { 0 } else { 1 };
            let stderr = out
                .diagnostics
                .iter()
                .map(|d| format!("check failed: {} (expected {}, actual {})\n", d.name, d.expected, d.actual))
                .collect();
            finish(code, out.text, stderr, out.diagnostics)
        }
        Err(InputError(msg)) => finish(2, String::new(), format!("error: {msg}\n"), vec![]),
    }
}

fn finish(exit_code: i32, stdout: String, stderr: String, diagnostics: Vec<Diagnostic>) -> RunResult {
    RunResult {
        exit_code,
        stdout,
        stderr,
        diagnostics,
    }
}
