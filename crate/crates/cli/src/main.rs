//! `mosaic`: count, bound and inspect knot mosaics.
//!
//! Exit codes: 0 success (or a valid knot mosaic), 1 verification failure,
//! 2 usage/size/parse error, 3 suitably connected but not a knot mosaic,
//! 4 not suitably connected.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mosaic_core::bounds::format_rational;
use mosaic_core::growth::{growth_table, GROWTH_MAX_N};
use mosaic_core::{
    count_with, delta_bounds, enumerate, verify, Error, Method, Mosaic, PowerStrategy, Tile,
    TileSet, TransferConfig, VerifyConfig,
};

const THREADS_VAR: &str = "MOSAIC_THREADS";

#[derive(Parser, Debug)]
#[command(name = "mosaic", version, about = "Exact enumeration of knot mosaics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the number of knot (m,n)-mosaics.
    Count {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Square-and-multiply instead of repeated multiplication (transfer only).
        #[arg(long)]
        binary_power: bool,
    },
    /// Print D_n and D_n^(1/n^2) for n = 1..=max-n.
    Table {
        #[arg(long, default_value_t = 9)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print lower bound, earlier rational bounds, D_n and upper bound for n = 3..=max-n.
    Bounds {
        #[arg(long, default_value_t = 9)]
        max_n: u32,
    },
    /// Print the bounds on the growth constant.
    Delta {
        #[arg(long, default_value_t = 6)]
        precision: u32,
    },
    /// Cross-check the counting routes and the properties of the counts.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 16)]
        exhaustive_area: usize,
        /// Fault injection: drop a crossing tile from the brute-force tile table.
        #[arg(long, hide = true)]
        corrupt_tile_table: bool,
    },
    /// Classify a mosaic grid file.
    Validate { path: PathBuf },
    /// Echo a mosaic grid file, optionally with tile glyphs.
    Render {
        path: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// List knot (m,n)-mosaics in grid format, separated by blank lines.
    Enumerate {
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(short, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Transfer,
    Frontier,
    Backtrack,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Transfer => Method::Transfer,
            MethodArg::Frontier => Method::Frontier,
            MethodArg::Backtrack => Method::Backtrack,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
}

/// Anything that ends the program early, with its exit code.
enum Failure {
    Usage(String),
    Verification(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CrossCheck(_) => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("mosaic: {msg}");
        return ExitCode::from(2);
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("mosaic: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("mosaic: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("mosaic: {e}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn read_mosaic(path: &PathBuf) -> Result<Mosaic, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Mosaic::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Count {
            m,
            n,
            method,
            binary_power,
        } => {
            let config = TransferConfig {
                strategy: if binary_power {
                    PowerStrategy::Binary
                } else {
                    PowerStrategy::Iterated
                },
                ..Default::default()
            };
            let d = count_with(m as usize, n as usize, method.into(), &config)?;
            writeln!(out, "{d}")?;
        }
        Command::Table { max_n, format } => {
            let rows = growth_table(max_n)?;
            match format {
                Format::Csv => {
                    writeln!(out, "n,D_n,d_n")?;
                    for r in &rows {
                        writeln!(out, "{},{},{}", r.n, r.count, r.growth)?;
                    }
                }
                Format::Plain => {
                    let width = rows
                        .iter()
                        .map(|r| r.count.to_string().len())
                        .max()
                        .unwrap_or(0)
                        .max(3);
                    writeln!(out, "{:>2}  {:>width$}  d_n", "n", "D_n")?;
                    for r in &rows {
                        writeln!(
                            out,
                            "{:>2}  {:>width$}  {}",
                            r.n,
                            r.count.to_string(),
                            r.growth
                        )?;
                    }
                }
            }
        }
        Command::Bounds { max_n } => {
            if max_n > GROWTH_MAX_N {
                return Err(Failure::Usage(format!(
                    "max-n = {max_n} exceeds the cap of {GROWTH_MAX_N}"
                )));
            }
            writeln!(out, "n,lower,hllo_lo,D_n,hllo_hi,upper")?;
            if max_n >= 3 {
                for r in growth_table(max_n)?.into_iter().filter(|r| r.n >= 3) {
                    let (lower, upper) = r.bounds.expect("bounds exist for n >= 3");
                    let (lo, hi) = r.hllo.expect("bounds exist for n >= 3");
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        r.n,
                        lower,
                        format_rational(&lo),
                        r.count,
                        format_rational(&hi),
                        upper
                    )?;
                }
            }
        }
        Command::Delta { precision } => {
            writeln!(out, "{}", delta_bounds(precision)?)?;
        }
        Command::Verify {
            max_m,
            max_n,
            exhaustive_area,
            corrupt_tile_table,
        } => {
            let tiles = if corrupt_tile_table {
                TileSet::without(Tile::CROSSING_HORIZONTAL_OVER)
            } else {
                TileSet::canonical()
            };
            let report = verify(&VerifyConfig {
                max_m,
                max_n,
                exhaustive_area,
                tiles,
            })?;
            for check in &report.checks {
                writeln!(out, "{check}")?;
            }
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
        Command::Validate { path } => {
            let mosaic = read_mosaic(&path)?;
            let (label, code) = if mosaic.is_knot_mosaic() {
                ("knot-mosaic", 0)
            } else if mosaic.is_suitably_connected() {
                ("suitably-connected", 3)
            } else {
                ("invalid", 4)
            };
            writeln!(out, "{label}")?;
            return Ok(code);
        }
        Command::Render { path, pretty } => {
            write!(out, "{}", read_mosaic(&path)?.render(pretty))?;
        }
        Command::Enumerate { m, n, limit } => {
            for (i, mosaic) in enumerate(m as usize, n as usize, limit)?.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{mosaic}")?;
            }
        }
    }
    Ok(0)
}
