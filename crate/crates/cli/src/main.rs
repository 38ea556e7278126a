use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cubiq_core::lattice::{format::parse_inline, format::parse_matrix, DEFAULT_RESOURCE_CAP};
use cubiq_core::obstructions::DEFAULT_PERMUTATION_CAP;
use cubiq_core::{Error, Limits, SquareMatrix};

mod commands;
mod exit;

use exit::Failure;

#[derive(Parser, Debug)]
#[command(name = "cubiq", version, about = "Decide, obstruct and certify cubiquity of sublattices of Z^n")]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    /// Maximum |det| * 2^n for the brute-force oracle.
    #[arg(long, global = true, env = "CUBIQ_RESOURCE_CAP", default_value_t = DEFAULT_RESOURCE_CAP,
          value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,

    /// Maximum dimension for the Hajós row-order search.
    #[arg(long, global = true, default_value_t = DEFAULT_PERMUTATION_CAP)]
    perm_cap: usize,

    /// Output format (default: text for `torus` and `det4`, json otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Matrix file (`-` for stdin).
    #[arg(short, long, global = true, conflicts_with = "matrix")]
    input: Option<PathBuf>,

    /// Inline matrix, rows separated by `;`, e.g. "2 0; 0 2".
    #[arg(short, long, global = true)]
    matrix: Option<String>,

    /// Treat rows, not columns, as the basis vectors.
    #[arg(long, global = true)]
    rows_as_vectors: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Determinant gate, then the brute-force oracle.
    Check,
    /// Wu obstruction of a non-acute (or, with --orthogonal, orthogonal) subset.
    Wu {
        #[arg(long)]
        orthogonal: bool,
    },
    /// Incidence statistics and the counting identity.
    Stats,
    /// Search for a Hajós basis.
    Hajos,
    /// Block decomposition and verdict for an orthogonal subset.
    Classify,
    /// Whether a same-sign connected sum of T(2,k) torus links bounds a rational ball.
    Torus {
        #[arg(required = true, allow_negative_numbers = true)]
        ks: Vec<i64>,
    },
    /// Projections and double projections until none applies.
    Reduce,
    /// Contract three vectors at a coordinate (all indices 1-based).
    Contract {
        #[arg(long)]
        coord: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        u: usize,
    },
    /// Determinant of the 4x4 form with diagonal (a, b, c, d), or its zero-solution table.
    Det4 {
        #[arg(num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true,
              conflicts_with = "bound")]
        values: Vec<i64>,
        /// List solutions with 1 <= a <= b <= c <= d <= BOUND.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// The two exceptional 8x8 blocks.
    Catalog {
        #[arg(long, value_enum)]
        block: Option<CatalogChoice>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CatalogChoice {
    First,
    Second,
}

impl InputArgs {
    fn read(&self) -> Result<SquareMatrix<i64>, Failure> {
        match (&self.input, &self.matrix) {
            (Some(path), None) => {
                let text = if path.as_os_str() == "-" {
                    let mut buf = String::new();
                    io::stdin().read_to_string(&mut buf).map_err(|e| Failure::input(format!("stdin: {e}")))?;
                    buf
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?
                };
                Ok(parse_matrix(&text, self.rows_as_vectors)?)
            }
            (None, Some(inline)) => Ok(parse_inline(inline, self.rows_as_vectors)?),
            (None, None) => Err(Failure::usage("no input: pass --input PATH, --input - or --matrix")),
            (Some(_), Some(_)) => Err(Failure::usage("--input and --matrix are exclusive")),
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let limits = Limits { resource_cap: cli.cap, permutation_cap: cli.perm_cap };
    let fmt = |default| cli.format.unwrap_or(default);
    match cli.command {
        Command::Torus { ks } => commands::torus(&ks, fmt(Format::Text), out),
        Command::Det4 { values, bound } => commands::det4(&values, bound, fmt(Format::Text), out),
        Command::Catalog { block } => commands::catalog(block, fmt(Format::Json), out),
        cmd => {
            let m = cli.input.read()?;
            let f = fmt(Format::Json);
            match cmd {
                Command::Check => commands::check(m, limits, f, out),
                Command::Wu { orthogonal } => commands::wu(m, orthogonal, f, out),
                Command::Stats => commands::stats(m, f, out),
                Command::Hajos => commands::hajos(m, limits, f, out),
                Command::Classify => commands::classify(m, limits, f, out),
                Command::Reduce => commands::reduce(m, f, out),
                Command::Contract { coord, s, t, u } => commands::contract(m, [coord, s, t, u], f, out),
                _ => unreachable!(),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(f) => {
            let _ = out.flush();
            eprintln!("cubiq: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit::for_error(&e), message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: exit::IO, message: e.to_string() }
    }
}
