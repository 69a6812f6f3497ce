mod bench;
mod document;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nanocone::closed_forms::{closed_form, formula};
use nanocone::compute::{compute, Index, Method};
use nanocone::error::Error;
use nanocone::families::{Family, FamilySpec};
use nanocone::verify::{domain_grid, fit_target, run_suite, FitComparison, Limits, Suite};

use crate::document::{to_csv, to_dot, GraphDocument};

/// Environment variable holding the worker thread count.
const THREADS_VAR: &str = "NANOCONE_THREADS";

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_usage() => 2,
            _ => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "nanocone", version, about = "Distance indices of honeycomb strips and one-pentagon nanocones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct FamilyArgs {
    /// One of a, z, m, zl, cone.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    l: Option<i64>,
}

impl FamilyArgs {
    fn spec(self) -> CliResult<FamilySpec> {
        let given = [("n", self.n), ("k", self.k), ("l", self.l)];
        let mut params = Vec::new();
        for name in self.family.parameter_names() {
            let value = given.iter().find(|(g, _)| g == name).and_then(|(_, v)| *v);
            params.push(value.ok_or_else(|| CliError::Usage(format!("family {} needs --{name}", self.family)))?);
        }
        if let Some((extra, _)) = given[params.len()..].iter().find(|(_, v)| v.is_some()) {
            return Err(CliError::Usage(format!("family {} takes no --{extra}", self.family)));
        }
        Ok(FamilySpec::new(self.family, &params)?)
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    Wiener,
    Hyper,
    Wlambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and print it.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate a distance index.
    Compute {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "wiener")]
        index: IndexArg,
        /// Exponent for --index wlambda.
        #[arg(long)]
        lambda: Option<u32>,
        /// bfs, cuts, closed or sectors (alias theorem3).
        #[arg(long, value_parser = parse_method, default_value = "bfs")]
        method: Method,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        /// cone, sectors (alias theorem3), formulas, cuts, structure, dlambda, fit or all.
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        /// Size bound for every family; defaults to 6 (8 for A and the cone).
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Interpolate a closed form from computed values and compare with the table.
    Fit {
        /// Formula id, e.g. ww_cone or w_z.
        #[arg(long)]
        target: String,
        /// Inclusive range `lo..hi` for every parameter.
        #[arg(long, value_parser = parse_range)]
        points: (i64, i64),
        /// Total degree; defaults to the table's degree.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Time several methods on growing instances and check they agree.
    Bench {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Comma-separated sizes; see the README for the size-to-instance map.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u32>,
        #[arg(long, value_delimiter = ',', value_parser = parse_method, default_value = "bfs,cuts,closed")]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value = "wiener")]
        index: IndexArg,
        #[arg(long)]
        lambda: Option<u32>,
    },
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn index_of(index: IndexArg, lambda: Option<u32>) -> CliResult<Index> {
    match (index, lambda) {
        (IndexArg::Wiener, None) => Ok(Index::Wiener),
        (IndexArg::Hyper, None) => Ok(Index::Hyper),
        (IndexArg::Wlambda, Some(l)) => Ok(Index::WLambda(l)),
        (IndexArg::Wlambda, None) => Err(CliError::Usage("--index wlambda needs --lambda".into())),
        (_, Some(_)) => Err(CliError::Usage("--lambda only applies to --index wlambda".into())),
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Build { family, format, output } => {
            let inst = family.spec()?.build();
            let text = match format {
                GraphFormat::Json => {
                    let doc = GraphDocument::from_instance(&inst);
                    if doc.to_graph()? != *inst.graph() {
                        return Err(Error::Invariant("graph document does not rebuild the graph".into()).into());
                    }
                    serde_json::to_string_pretty(&doc)? + "\n"
                }
                GraphFormat::Dot => to_dot(&inst),
                GraphFormat::Csv => to_csv(inst.graph()),
            };
            emit(output.as_ref(), &text)
        }
        Command::Compute { family, index, lambda, method } => {
            let spec = family.spec()?;
            let index = index_of(index, lambda)?;
            if method == Method::Closed {
                let closed = closed_form(spec, index)?;
                if !closed.trusted {
                    for id in &closed.formulas {
                        if let Some(note) = formula(id)?.note {
                            eprintln!("warning: {id} {note}");
                        }
                    }
                }
            }
            println!("{}", compute(spec, index, method)?);
            Ok(())
        }
        Command::Verify { suite, max_n, format, output } => {
            let limits = max_n.map_or_else(Limits::default, Limits::uniform);
            let report = run_suite(suite, limits);
            let text = match format {
                ReportFormat::Text => format!("{report}\n"),
                ReportFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
            };
            emit(output.as_ref(), &text)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(CliError::Failed(format!("{} of {} checks failed", report.failed, report.checks.len())))
            }
        }
        Command::Fit { target, points, degree, format } => {
            let f = formula(&target)?;
            let grid = domain_grid(f.domain, points.0, points.1);
            let fitted = match degree {
                None => fit_target(f.id, &grid),
                Some(d) => {
                    let samples = grid
                        .iter()
                        .map(|p| Ok((p.clone(), nanocone::verify::oracle_value(f.id, p)?)))
                        .collect::<nanocone::error::Result<Vec<_>>>()?;
                    nanocone::fit::fit_multivariate(&samples, f.variables, d)
                }
            };
            let fitted = match fitted {
                Err(e @ Error::NotPolynomial { .. }) => return Err(CliError::Failed(e.to_string())),
                other => other?,
            };
            let cmp = FitComparison::new(f.id, &fitted, &f.polynomial());
            match format {
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&cmp)?),
                ReportFormat::Text => {
                    println!("target: {}", f.id);
                    println!("samples: {} ({} held out)", cmp.samples, cmp.held_out);
                    println!("fitted: {}", cmp.fitted);
                    if cmp.agrees() {
                        println!("diff: none");
                    } else {
                        println!("table: {}", cmp.table);
                        println!("diff (fitted - table): {}", cmp.difference);
                    }
                }
            }
            if cmp.agrees() {
                Ok(())
            } else {
                Err(CliError::Failed(format!("fitted polynomial differs from the {} table", f.id)))
            }
        }
        Command::Bench { family, sizes, methods, index, lambda } => {
            let index = index_of(index, lambda)?;
            let mut out = std::io::stdout().lock();
            bench::run(&mut out, family, &sizes, &methods, index)
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Failed(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
