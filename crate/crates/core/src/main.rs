use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use graph_energy::bounds::{energy_report, ratio_table, Family, Mode};
use graph_energy::edgelist::{read_edge_list, write_edge_list};
use graph_energy::format::{sig, write_csv};
use graph_energy::verify::{self, paley_primes, Suite};
use graph_energy::{Error, Graph, PrimeModulus};

const EXIT_VALIDATION: u8 = 1;
const EXIT_NUMERICAL: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "graph-energy", version, about = "Energy of Paley graphs, rings of cliques and other regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as an edge list
    Gen {
        family: GenFamily,
        param: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the energy report of an edge-list file
    Energy { input: PathBuf },
    /// Sweep a family over an inclusive range `lo..hi` and emit CSV
    RatioTable {
        family: TableFamily,
        #[arg(value_parser = parse_range)]
        range: RangeInclusive<u64>,
        #[arg(long, value_enum, default_value = "numeric")]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(conflicts_with = "trials")]
        trials_pos: Option<usize>,
        #[arg(conflicts_with = "seed")]
        seed_pos: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenFamily {
    Paley,
    RingClique,
    Complete,
    Cycle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFamily {
    Paley,
    RingClique,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Numeric,
    Closed,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| format!("{x:?} is not a nonnegative integer"))
    };
    Ok(parse(lo)?..=parse(hi)?)
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A failure with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_numerical() {
            EXIT_NUMERICAL
        } else {
            EXIT_VALIDATION
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: e.to_string(),
        }
    }
}

fn validation(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message: message.into(),
    }
}

fn to_usize(param: u64) -> Result<usize, Failure> {
    usize::try_from(param).map_err(|_| validation(format!("{param} is too large")))
}

fn open_output(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            validation(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn generate(family: GenFamily, param: u64) -> Result<Graph, Failure> {
    Ok(match family {
        GenFamily::Paley => Graph::paley(PrimeModulus::new(param)?)?,
        GenFamily::RingClique => Graph::ring_of_cliques(to_usize(param)?)?,
        GenFamily::Complete => {
            if param == 0 {
                return Err(validation("complete graph requires n >= 1"));
            }
            Graph::complete(to_usize(param)?)
        }
        GenFamily::Cycle => Graph::cycle(to_usize(param)?)?,
    })
}

fn gen(family: GenFamily, param: u64, out: Option<&Path>) -> Result<(), Failure> {
    let g = generate(family, param)?;
    // with no --out the edge list goes to stdout and the summary to stderr
    let summary = format!(
        "n {}\nm {}\nk {}",
        g.n(),
        g.m(),
        g.regularity()
            .map_or_else(|| "not regular".to_string(), |k| k.to_string())
    );
    write_edge_list(&g, open_output(out)?)?;
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn energy(input: &Path) -> Result<(), Failure> {
    let file = File::open(input)
        .map_err(|e| validation(format!("cannot open {}: {e}", input.display())))?;
    let g = read_edge_list(BufReader::new(file))?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    let report = energy_report(&g)?;
    let mut out = io::stdout().lock();
    writeln!(out, "n {}", report.n)?;
    writeln!(out, "m {}", report.m)?;
    match report.k {
        Some(k) => writeln!(out, "k {k}")?,
        None => writeln!(out, "k not regular")?,
    }
    writeln!(out, "energy {}", sig(report.energy))?;
    writeln!(out, "spectral_radius {}", sig(report.spectral_radius))?;
    if let (Some(e0), Some(ratio)) = (report.e0, report.ratio) {
        writeln!(out, "e0 {}", sig(e0))?;
        writeln!(out, "ratio {}", sig(ratio))?;
    }
    Ok(())
}

fn table(
    family: TableFamily,
    range: RangeInclusive<u64>,
    mode: ModeArg,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let (family, params): (Family, Vec<u64>) = match family {
        TableFamily::Paley => (
            Family::Paley,
            paley_primes(*range.start(), *range.end()).collect(),
        ),
        TableFamily::RingClique => (
            Family::RingOfCliques,
            range.clone().filter(|&q| q >= 3).collect(),
        ),
    };
    if params.is_empty() {
        return Err(validation(format!(
            "no valid {family} parameters in {}..{}",
            range.start(),
            range.end()
        )));
    }
    let mode = match mode {
        ModeArg::Numeric => Mode::Numeric,
        ModeArg::Closed => Mode::Closed,
    };
    let rows = ratio_table(family, &params, mode)?;
    write_csv(&rows, open_output(out)?)?;
    Ok(())
}

fn run_verify(suite: Suite, trials: usize, seed: u64) -> Result<(), Failure> {
    let reports = verify::run(suite, trials, seed)?;
    let mut out = io::stdout().lock();
    let mut failed = 0;
    for report in &reports {
        writeln!(out, "{report}")?;
        for failure in &report.failures {
            writeln!(out, "  FAIL {failure}")?;
        }
        failed += report.failures.len();
    }
    if failed > 0 {
        return Err(validation(format!("{failed} invariant check(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { family, param, out } => gen(family, param, out.as_deref()),
        Command::Energy { input } => energy(&input),
        Command::RatioTable {
            family,
            range,
            mode,
            out,
        } => table(family, range, mode, out.as_deref()),
        Command::Verify {
            suite,
            trials_pos,
            seed_pos,
            trials,
            seed,
        } => {
            let trials = trials.or(trials_pos).unwrap_or(100);
            let seed = seed.or(seed_pos).unwrap_or(0);
            if trials == 0 {
                return Err(validation("usage: trials must be at least 1"));
            }
            run_verify(suite, trials, seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_VALIDATION)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
