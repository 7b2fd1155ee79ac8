use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use genus_forge::catalog::{Catalog, ValidationOptions};
use genus_forge::embedding::{Engine, ParameterProfile};
use genus_forge::graph::{parse_records, GraphRecord, TerminalGraph};
use genus_forge::torus::{
    enumerate_all_gluings, enumerate_torus_c2, enumerate_unchecked, verify_all, write_dot, write_json, write_records,
    ObstructionRecord, ValidatedCatalog, Verification,
};
use genus_forge::Error;

#[derive(Parser)]
#[command(name = "genus-forge", version, about = "Exact orientable genus and connectivity-2 torus obstructions")]
struct Cli {
    /// Search every component whole instead of splitting into blocks.
    #[arg(long, global = true)]
    no_decompose: bool,
    /// Profile cache file, read before and written after the command.
    #[arg(long, global = true, env = "GENUSFORGE_CACHE")]
    cache: Option<PathBuf>,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Cat,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    None,
    Formula,
    Search,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum orientable genus of every record in a file.
    Genus {
        file: PathBuf,
        /// Also print a minimum-genus rotation system.
        #[arg(long)]
        witness: bool,
    },
    /// The parameter profile of every two-terminal record in a file.
    Profile { file: PathBuf },
    /// Class labels of a minor-tight part for a partner profile.
    Classify {
        part: PathBuf,
        /// Partner part as a two-terminal record.
        #[arg(long, conflicts_with = "partner_profile", required_unless_present = "partner_profile")]
        partner: Option<PathBuf>,
        /// Partner profile as `g,g+,eps,eps+`.
        #[arg(long)]
        partner_profile: Option<String>,
        #[arg(long)]
        with_edge: bool,
    },
    /// Whether every record is an obstruction for the surface of genus k.
    VerifyObstruction {
        file: PathBuf,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// Re-derive every claim in a catalog (default: the shipped one).
    ValidateCatalog {
        catalog: Option<PathBuf>,
        /// Skip the raw-search cross-check.
        #[arg(long)]
        quick: bool,
    },
    /// Build the connectivity-2 torus obstructions.
    EnumerateTorus {
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also glue every pair all four ways and compare.
        #[arg(long)]
        paranoid: bool,
        #[arg(long, value_enum, default_value = "formula")]
        verify: Mode,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
        /// Output file, or a directory for `--emit dot`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Domain failures exit 1, malformed input exits 2.
enum Failure {
    Domain(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Io(_) => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_records(path: &Path) -> Result<Vec<GraphRecord>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_records(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn terminal(record: &GraphRecord, path: &Path) -> Result<TerminalGraph, Failure> {
    record.terminal_graph().ok_or_else(|| Failure::Input(format!("{}: record needs terminals", path.display())))
}

fn load_catalog(path: Option<&Path>) -> Result<Catalog, Failure> {
    match path {
        None => Ok(Catalog::shipped()),
        Some(p) => Catalog::load(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
    }
}

fn parse_profile(s: &str) -> Result<ParameterProfile, Failure> {
    let nums: Vec<usize> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Input(format!("bad profile {s:?}, expected g,g+,eps,eps+")))?;
    match nums.as_slice() {
        [g, gp, e, ep] => ParameterProfile::from_parts(*g, *gp, *e, *ep)
            .ok_or_else(|| Failure::Input(format!("{s:?} is not a consistent profile"))),
        _ => Err(Failure::Input(format!("bad profile {s:?}, expected g,g+,eps,eps+"))),
    }
}

fn genus(engine: &Engine, file: &Path, witness: bool, out: &mut impl Write) -> Outcome {
    for r in read_records(file)? {
        let g = r.simple_graph();
        let _ = writeln!(out, "{}", engine.min_genus(&g));
        if witness {
            match engine.genus_witness(&g) {
                Ok(rs) => {
                    let _ = write!(out, "{rs}");
                }
                Err(e) => {
                    let _ = writeln!(out, "# no witness: {e}");
                }
            }
        }
    }
    Ok(())
}

fn profile(engine: &Engine, file: &Path, out: &mut impl Write) -> Outcome {
    for r in read_records(file)? {
        let _ = writeln!(out, "{}", engine.profile(&terminal(&r, file)?));
    }
    Ok(())
}

fn classify(
    engine: &Engine,
    part: &Path,
    partner: Option<&Path>,
    partner_profile: Option<&str>,
    with_edge: bool,
    out: &mut impl Write,
) -> Outcome {
    let p2 = match (partner, partner_profile) {
        (Some(path), _) => {
            let records = read_records(path)?;
            let first = records.first().ok_or_else(|| Failure::Input(format!("{}: empty", path.display())))?;
            engine.profile(&terminal(first, path)?)
        }
        (None, Some(s)) => parse_profile(s)?,
        (None, None) => return Err(Failure::Input("a partner is required".into())),
    };
    let mut failed = false;
    for r in read_records(part)? {
        let g1 = terminal(&r, part)?;
        if !engine.part_is_minor_tight(&g1, &p2, with_edge)? {
            let _ = writeln!(out, "not minor-tight");
            failed = true;
            continue;
        }
        let labels: Vec<String> = engine.classify_part(&g1, &p2, with_edge)?.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    if failed {
        Err(Failure::Domain("some parts are not minor-tight".into()))
    } else {
        Ok(())
    }
}

fn verify_obstruction(engine: &Engine, file: &Path, k: usize, out: &mut impl Write) -> Outcome {
    let mut bad = 0;
    for (i, r) in read_records(file)?.iter().enumerate() {
        let ok = engine.is_obstruction(&r.simple_graph(), k);
        let _ = writeln!(out, "{i}: {}", if ok { "obstruction" } else { "not an obstruction" });
        bad += usize::from(!ok);
    }
    if bad > 0 {
        return Err(Failure::Domain(format!("{bad} records are not obstructions for genus {k}")));
    }
    Ok(())
}

fn validate(engine: &Engine, path: Option<&Path>, quick: bool, out: &mut impl Write) -> Outcome {
    let catalog = load_catalog(path)?;
    let mut opts = ValidationOptions::default();
    if quick {
        opts.raw_cross_check_max_vertices = 0;
    }
    let report = genus_forge::catalog::validate_catalog(engine, &catalog, &opts);
    let _ = writeln!(out, "{report}");
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::Domain(format!("{} discrepancies", report.discrepancies.len())))
    }
}

fn emit(records: &[ObstructionRecord], how: Option<Emit>, output: Option<&Path>, out: &mut impl Write) -> Outcome {
    let io_err = |p: &Path, e: io::Error| Failure::Input(format!("{}: {e}", p.display()));
    match (how, output) {
        (None, _) => {}
        (Some(Emit::Dot), Some(dir)) => {
            fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
            for (i, r) in records.iter().enumerate() {
                let p = dir.join(format!("obstruction_{i:02}.dot"));
                fs::write(&p, write_dot(i, r)).map_err(|e| io_err(&p, e))?;
            }
        }
        (Some(kind), dest) => {
            let text = match kind {
                Emit::Cat => write_records(records),
                Emit::Json => write_json(records),
                Emit::Dot => records.iter().enumerate().map(|(i, r)| write_dot(i, r)).collect(),
            };
            match dest {
                Some(p) => fs::write(p, text).map_err(|e| io_err(p, e))?,
                None => {
                    let _ = out.write_all(text.as_bytes());
                }
            }
        }
    }
    Ok(())
}

fn enumerate(
    engine: &Engine,
    catalog: Option<&Path>,
    paranoid: bool,
    mode: Mode,
    how: Option<Emit>,
    output: Option<&Path>,
    out: &mut impl Write,
) -> Outcome {
    let validated = ValidatedCatalog::new(engine, load_catalog(catalog)?, &ValidationOptions::default())?;
    let mut e = match enumerate_torus_c2(engine, &validated) {
        Ok(e) => e,
        Err(err) => {
            let counts = enumerate_unchecked(engine, &validated).counts;
            let _ = writeln!(out, "{counts}");
            return Err(err.into());
        }
    };
    let mut problems = Vec::new();
    if paranoid {
        let all = enumerate_all_gluings(engine, &validated);
        let _ = writeln!(out, "paranoid gluings={}", all.len());
        if all.len() != e.records.len() {
            problems.push(format!("all gluings give {} graphs, straight gluing {}", all.len(), e.records.len()));
        }
    }
    let modes = match mode {
        Mode::None => vec![],
        Mode::Formula => vec![Verification::Formula],
        Mode::Search => vec![Verification::Search],
        Mode::Both => vec![Verification::Formula, Verification::Search],
    };
    for m in modes {
        let report = verify_all(engine, &mut e.records, m);
        problems.extend(report.failures.iter().map(|(i, msg)| format!("record {i}: {msg}")));
    }
    emit(&e.records, how, output, out)?;
    let _ = writeln!(out, "{}", e.counts.summary());
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(problems.join("\n")))
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Input(format!("--workers: {e}")))?;
    }
    let engine = Engine::new(!cli.no_decompose);
    if let Some(p) = &cli.cache {
        engine.load_cache_file(p).map_err(Failure::from)?;
    }
    let result = match &cli.command {
        Command::Genus { file, witness } => genus(&engine, file, *witness, out),
        Command::Profile { file } => profile(&engine, file, out),
        Command::Classify { part, partner, partner_profile, with_edge } => {
            classify(&engine, part, partner.as_deref(), partner_profile.as_deref(), *with_edge, out)
        }
        Command::VerifyObstruction { file, k } => verify_obstruction(&engine, file, *k, out),
        Command::ValidateCatalog { catalog, quick } => validate(&engine, catalog.as_deref(), *quick, out),
        Command::EnumerateTorus { catalog, paranoid, verify, emit, output } => {
            enumerate(&engine, catalog.as_deref(), *paranoid, *verify, *emit, output.as_deref(), out)
        }
    };
    if let Some(p) = &cli.cache {
        if let Err(e) = engine.save_cache_file(p) {
            eprintln!("warning: could not write cache {}: {e}", p.display());
        }
    }
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
