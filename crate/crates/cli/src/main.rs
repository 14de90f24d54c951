//! `covtype`: covering-type lower bounds from cohomology presentations.

mod document;
mod render;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covtype::catalog::{self, Params, Status};
use covtype::oracle::brute_force_dmax;
use covtype::{apply_refinements, swct_lower, wct, SearchBudget, WctReport, WeightedSequence};

use document::{InputError, Problem};

#[derive(Parser)]
#[command(name = "covtype", version, about = "Lower bounds for covering type and triangulation size")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cross-check every table against brute-force subset enumeration.
    #[arg(long, global = true)]
    oracle: bool,
    /// Refinements to apply, comma separated (wct only).
    #[arg(long, global = true, value_enum, value_delimiter = ',')]
    refine: Vec<Refine>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Refine {
    Hdim,
    Indep,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the sequence of a problem document.
    Wct { file: PathBuf },
    /// Search all monomial sequences of a problem document's algebra.
    Swct {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        max_factors: Option<u32>,
    },
    /// Run a catalog entry, e.g. `catalog lens n=3 p=5`.
    Catalog {
        name: Option<String>,
        params: Vec<String>,
        /// Run the whole catalog grid.
        #[arg(long)]
        all: bool,
    },
}

enum Failure {
    Input(InputError),
    /// Oracle disagreement or a catalog value that misses its reference.
    Internal(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<covtype::Error> for Failure {
    fn from(e: covtype::Error) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Input(e))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Wct { file } => cmd_wct(cli, file),
        Command::Swct {
            file,
            max_degree,
            max_factors,
        } => {
            no_refine(cli, "swct")?;
            cmd_swct(cli, file, *max_degree, *max_factors)
        }
        Command::Catalog { name, params, all } => {
            no_refine(cli, "catalog")?;
            match (name, *all) {
                (None, true) => cmd_catalog_all(cli),
                (Some(name), false) => cmd_catalog(cli, name, params),
                (Some(_), true) => Err(usage("--all takes no entry name")),
                (None, false) => Err(usage(&format!(
                    "missing entry name; known entries: {}",
                    catalog::ENTRY_NAMES.join(", ")
                ))),
            }
        }
    }
}

fn usage(message: &str) -> Failure {
    Failure::Input(InputError::new("BAD_PARAM", None, message))
}

fn no_refine(cli: &Cli, command: &str) -> Result<(), Failure> {
    if cli.refine.is_empty() {
        Ok(())
    } else {
        Err(usage(&format!("--refine does not apply to {command}")))
    }
}

fn load(file: &Path) -> Result<Problem, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        InputError::new("IO_ERROR", Some(file.display().to_string()), e.to_string())
    })?;
    Ok(Problem::parse(&text)?)
}

fn check_oracle(sequence: &WeightedSequence, report: &WctReport) -> Result<(), Failure> {
    let brute = brute_force_dmax(&sequence.items())?;
    for (row, b) in report.dmax_table.iter().zip(&brute) {
        if row.dimension != *b {
            return Err(Failure::Internal(format!(
                "oracle mismatch at k = {}: table {}, brute force {}",
                row.k, row.dimension, b
            )));
        }
    }
    let base = 1 + sequence.weight() as i64 + brute.iter().sum::<i64>();
    if brute.len() != report.dmax_table.len() || base != report.base_value {
        return Err(Failure::Internal(format!(
            "oracle mismatch: value {}, brute force {base}",
            report.base_value
        )));
    }
    Ok(())
}

fn cmd_wct(cli: &Cli, file: &Path) -> Outcome {
    let problem = load(file)?;
    let sequence = problem
        .sequence
        .as_ref()
        .ok_or_else(|| InputError::new("BAD_PARAM", Some("sequence".into()), "the document has no sequence"))?;
    let refinements = problem.refinements(
        cli.refine.contains(&Refine::Hdim),
        cli.refine.contains(&Refine::Indep),
    )?;
    let report = wct(sequence);
    if cli.oracle {
        check_oracle(sequence, &report)?;
    }
    let report = apply_refinements(&report, sequence, refinements)?;
    Ok(match cli.format {
        Format::Table => render::wct_table(sequence, &report),
        Format::Json => render::json(&report),
    })
}

fn cmd_swct(cli: &Cli, file: &Path, max_degree: Option<u32>, max_factors: Option<u32>) -> Outcome {
    let problem = load(file)?;
    if max_degree.is_some_and(|d| u64::from(d) > document::MAX_TOP_DEGREE) {
        return Err(usage(&format!("--max-degree is limited to {}", document::MAX_TOP_DEGREE)));
    }
    let mut budget = match max_degree {
        Some(d) => SearchBudget::with_degree(&problem.algebra, &problem.weights, d)?,
        None => SearchBudget::for_algebra(&problem.algebra, &problem.weights)?,
    };
    if let Some(f) = max_factors {
        budget = SearchBudget::new(budget.max_total_degree, f)?;
    }
    let outcome = swct_lower(&problem.algebra, &problem.weights, budget)?;
    let report = wct(&outcome.witness);
    if cli.oracle {
        check_oracle(&outcome.witness, &report)?;
    }
    Ok(match cli.format {
        Format::Table => render::swct_table(&outcome, &report),
        Format::Json => render::json(&render::SwctJson {
            value: outcome.value,
            bound_target: report.bound_target,
            witness: outcome.witness.describe(),
            classes_examined: outcome.classes_examined,
            max_total_degree: budget.max_total_degree,
            max_factors: budget.max_factors,
            report: &report,
        }),
    })
}

fn evaluate(
    cli: &Cli,
    name: &str,
    params: &[String],
) -> Result<(catalog::CatalogEntry, catalog::Evaluation), Failure> {
    let params = Params::parse(params.iter().map(String::as_str))?;
    let entry = catalog::build(name, params)?;
    let ev = entry.evaluate()?;
    if cli.oracle {
        check_oracle(&ev.sequence, &ev.report)?;
    }
    Ok((entry, ev))
}

fn cmd_catalog(cli: &Cli, name: &str, params: &[String]) -> Outcome {
    let (entry, ev) = evaluate(cli, name, params)?;
    let out = match cli.format {
        Format::Table => render::catalog_table(&entry, &ev),
        Format::Json => render::json(&render::catalog_json(&entry, &ev)),
    };
    if ev.status == Status::Fail {
        print!("{out}");
        return Err(Failure::Internal(format!(
            "{} computed {} but expected {}",
            render::entry_title(&entry),
            ev.computed,
            entry.expected.unwrap_or_default()
        )));
    }
    Ok(out)
}

fn cmd_catalog_all(cli: &Cli) -> Outcome {
    let mut lines = String::new();
    let mut reports = Vec::new();
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for (name, params) in catalog::standard_grid() {
        let (entry, ev) = evaluate(cli, &name, &params)?;
        *tally.entry(ev.status.to_string()).or_default() += 1;
        match cli.format {
            Format::Table => lines.push_str(&render::catalog_line(&entry, &ev)),
            Format::Json => reports.push(serde_json::to_value(render::catalog_json(&entry, &ev)).expect("serializes")),
        }
    }
    let failed = tally.get("FAIL").copied().unwrap_or(0);
    let out = match cli.format {
        Format::Table => {
            let summary: Vec<String> = tally.iter().map(|(k, v)| format!("{v} {k}")).collect();
            format!("{lines}\n{} entries: {}\n", tally.values().sum::<usize>(), summary.join(", "))
        }
        Format::Json => render::json(&reports),
    };
    if failed > 0 {
        print!("{out}");
        return Err(Failure::Internal(format!("{failed} catalog entries missed their expected value")));
    }
    Ok(out)
}
