mod data;
mod report;
mod suites;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use siegel5_core::gendata::{FORM_NAMES, TABLE_PRECISION};
use siegel5_core::hilbert::{siegel_series, MAX_EXPANSION};
use siegel5_core::invariants::{molien_series, Character, GroupAction};
use siegel5_core::ranks::weight_rank;

use data::Dataset;
use report::{write_reports, Format, SuiteReport};
use suites::Suite;

/// Largest weight `rank` accepts; monomial counts grow quickly beyond it.
const MAX_RANK_WEIGHT: u32 = 16;

#[derive(Parser)]
#[command(
    name = "siegel5",
    version,
    about = "Exact checks for Siegel modular forms of degree two and level 5"
)]
struct Cli {
    /// Directory holding generators.tsv and jacobian_square.tsv
    /// (defaults to the embedded copies).
    #[arg(long, global = true, env = "SIEGEL5_DATA_DIR")]
    data_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Fourier coefficients of a form for a + c <= PREC.
    Expand {
        /// f1, f2, g1, g2, h1, h2, e2, phi1..phi4 or J
        form: String,
        #[arg(long, default_value_t = TABLE_PRECISION)]
        prec: u32,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[arg(long = "suite", value_enum, conflicts_with = "suite")]
        suite_flag: Option<Suite>,
        /// Run suites on separate threads (output order is unchanged).
        #[arg(long)]
        parallel: bool,
    },
    /// dim M_k(Γ0(5)) for k = 1..=UPTO from the Hilbert–Poincaré series.
    Dims {
        #[arg(long)]
        upto: u32,
    },
    /// Isotypic dimensions of C[F1, F2, G1, G2] under a group action.
    Molien {
        #[arg(long, value_enum, default_value_t = CharacterArg::Trivial)]
        character: CharacterArg,
        #[arg(long, value_enum, default_value_t = GroupArg::Eps2)]
        group: GroupArg,
        #[arg(long)]
        upto: u32,
    },
    /// Rank of the weight-K monomials in the eighteen generators.
    Rank {
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = TABLE_PRECISION)]
        prec: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CharacterArg {
    Trivial,
    DetJ,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Eps2,
    Eps4,
    Trivial,
}

enum Failure {
    /// Exit 1.
    Verification,
    /// Exit 2.
    Usage(String),
    /// The reader went away (e.g. `| head`); stop quietly.
    Closed,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Usage(format!("write error: {e}"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("siegel5: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let format = cli.format;
    match cli.command {
        Command::Expand { form, prec } => {
            let ds = Dataset::load(cli.data_dir.as_deref()).map_err(Failure::Usage)?;
            expand(&mut out, format, &ds, &form, prec)
        }
        Command::Verify {
            suite,
            suite_flag,
            parallel,
        } => {
            let ds = Dataset::load(cli.data_dir.as_deref()).map_err(Failure::Usage)?;
            let suites = suite.or(suite_flag).unwrap_or(Suite::All).expand();
            let reports = run_suites(&ds, &suites, parallel);
            write_reports(&mut out, format, &ds.header(), &reports)?;
            if reports.iter().any(|r| r.failures() > 0) {
                Err(Failure::Verification)
            } else {
                Ok(())
            }
        }
        Command::Dims { upto } => dims(&mut out, format, upto),
        Command::Molien {
            character,
            group,
            upto,
        } => molien(&mut out, format, character, group, upto),
        Command::Rank { weight, prec } => {
            let ds = Dataset::load(cli.data_dir.as_deref()).map_err(Failure::Usage)?;
            rank(&mut out, format, &ds, weight, prec)
        }
    }
}

fn run_suites(ds: &Dataset, suites: &[Suite], parallel: bool) -> Vec<SuiteReport> {
    if !parallel {
        return suites.iter().map(|s| s.run(ds)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|s| scope.spawn(move || s.run(ds))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn expand(out: &mut impl Write, format: Format, ds: &Dataset, form: &str, prec: u32) -> Result<(), Failure> {
    if prec > TABLE_PRECISION {
        return Err(Failure::Usage(format!(
            "precision {prec} exceeds the table precision {TABLE_PRECISION}"
        )));
    }
    let series = ds.gens.by_name(form).ok_or_else(|| {
        Failure::Usage(format!("unknown form '{form}' (expected one of {})", FORM_NAMES.join(", ")))
    })?;
    let rows: Vec<_> = series
        .table_terms()
        .into_iter()
        .filter(|(e, _)| e.order() <= prec)
        .collect();
    if format == Format::Jsonl {
        ds.header().write(out, format)?;
    }
    for (e, v) in rows {
        match format {
            Format::Text => writeln!(out, "{:>3} {:>3} {:>3}  {v}", e.a, e.b, e.c)?,
            Format::Jsonl => {
                let line = json!({
                    "kind": "coefficient",
                    "form": form,
                    "a": e.a,
                    "b": e.b,
                    "c": e.c,
                    "value": v.to_string(),
                });
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn write_table(
    out: &mut impl Write,
    format: Format,
    kind: &str,
    key: &str,
    rows: impl Iterator<Item = (u32, String)>,
) -> io::Result<()> {
    for (k, v) in rows {
        match format {
            Format::Text => writeln!(out, "{k:>3}  {v}")?,
            Format::Jsonl => writeln!(out, "{}", json!({ "kind": kind, key: k, "value": v }))?,
        }
    }
    Ok(())
}

fn dims(out: &mut impl Write, format: Format, upto: u32) -> Result<(), Failure> {
    let c = siegel_series()
        .expand(upto)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    write_table(
        out,
        format,
        "dimension",
        "k",
        (1..=upto).map(|k| (k, c[k as usize].to_string())),
    )?;
    Ok(())
}

fn molien(
    out: &mut impl Write,
    format: Format,
    character: CharacterArg,
    group: GroupArg,
    upto: u32,
) -> Result<(), Failure> {
    if upto > MAX_EXPANSION {
        return Err(Failure::Usage(format!("--upto is capped at {MAX_EXPANSION}")));
    }
    let action = match group {
        GroupArg::Eps2 => GroupAction::eps2(),
        GroupArg::Eps4 => GroupAction::eps4(),
        GroupArg::Trivial => GroupAction::trivial(),
    };
    let chi = match character {
        CharacterArg::Trivial => Character::Trivial,
        CharacterArg::DetJ => Character::DetJ,
    };
    let series = molien_series(&action, chi, upto).map_err(|e| Failure::Usage(e.to_string()))?;
    write_table(
        out,
        format,
        "molien",
        "weight",
        series.iter().enumerate().map(|(d, n)| (d as u32, n.to_string())),
    )?;
    Ok(())
}

fn rank(out: &mut impl Write, format: Format, ds: &Dataset, weight: u32, prec: u32) -> Result<(), Failure> {
    if weight > MAX_RANK_WEIGHT {
        return Err(Failure::Usage(format!("--weight is capped at {MAX_RANK_WEIGHT}")));
    }
    if prec > TABLE_PRECISION {
        return Err(Failure::Usage(format!(
            "precision {prec} exceeds the table precision {TABLE_PRECISION}"
        )));
    }
    let r = weight_rank(&ds.gens, weight, prec).map_err(|e| Failure::Usage(e.to_string()))?;
    match format {
        Format::Text => writeln!(
            out,
            "weight {}: {} monomials, plain rank {}, certified rank {}, dim M_k = {}",
            r.weight, r.monomials, r.plain_rank, r.certified_rank, r.expected
        )?,
        Format::Jsonl => writeln!(
            out,
            "{}",
            json!({
                "kind": "rank",
                "weight": r.weight,
                "input_precision": r.input_trunc,
                "monomials": r.monomials,
                "plain_rank": r.plain_rank,
                "certified_rank": r.certified_rank,
                "expected": r.expected,
            })
        )?,
    }
    if r.matches() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
