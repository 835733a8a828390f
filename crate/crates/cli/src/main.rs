//! `noetherlab`: verify, list, inspect the catalog, parse permutations and
//! build constructions.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use noetherlab::verifier::{emit_report, nearest_scenarios, run_selected, skip_list_from_env};
use noetherlab::{construct, list_scenarios, parse_cycles, Catalog, OutputMode};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "noetherlab",
    version,
    about = "Exact verifier for constructive rationality certificates"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification scenarios.
    Verify(VerifyArgs),
    /// List registered scenarios, optionally filtered by a substring.
    List { filter: Option<String> },
    /// Inspect the transitive-group catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Work with permutations in cycle notation.
    Perm {
        #[command(subcommand)]
        action: PermAction,
    },
    /// Build a named construction and print it with its checked claims.
    Construct {
        name: String,
        /// Comma-separated `key=value` pairs.
        #[arg(long, value_parser = parse_params)]
        params: Option<BTreeMap<String, String>>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("target").required(true).args(["all", "scenario"])))]
struct VerifyArgs {
    /// Run every registered scenario.
    #[arg(long)]
    all: bool,
    /// Run the named scenario; may be repeated.
    #[arg(long)]
    scenario: Vec<String>,
    /// Worker threads (default: available cores).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Element and group definitions to use instead of the bundled table.
    #[arg(long, hide = true)]
    definitions: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print every catalog entry with its computed order.
    Dump,
}

#[derive(Subcommand)]
enum PermAction {
    /// Parse a product of cycles and print its image array.
    Parse {
        expr: String,
        #[arg(long)]
        degree: usize,
    },
}

fn parse_params(text: &str) -> Result<BTreeMap<String, String>, String> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| match pair.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => {
                Ok((k.trim().to_string(), v.trim().to_string()))
            }
            _ => Err(format!("`{pair}` is not of the form key=value")),
        })
        .collect()
}

/// Failure exit for usage problems.
fn usage(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("values serialize")
    ));
}

fn verify(args: VerifyArgs, json: bool) -> ExitCode {
    let registered = list_scenarios(None);
    for name in &args.scenario {
        if !registered.contains(&name.as_str()) {
            return usage(format!(
                "unknown scenario `{name}`; nearest: {}",
                nearest_scenarios(name, 3).join(", ")
            ));
        }
    }
    let jobs = args
        .jobs
        .map(usize::from)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let names: Vec<&str> = args.scenario.iter().map(String::as_str).collect();
    let custom = match &args.definitions {
        None => None,
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| Catalog::from_definitions(&text).map_err(|e| e.to_string()))
        {
            Ok(c) => Some(c),
            Err(e) => return usage(format!("{}: {e}", path.display())),
        },
    };
    let catalog = custom.as_ref().unwrap_or_else(|| Catalog::standard());
    let report = match run_selected(catalog, &names, jobs, &skip_list_from_env()) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let mode = if json {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    emit(&emit_report(&report, mode));
    ExitCode::from(report.exit_code() as u8)
}

fn list(filter: Option<String>, json: bool) -> ExitCode {
    let names = list_scenarios(filter.as_deref());
    let registry = noetherlab::verifier::registry();
    let found: Vec<_> = names
        .iter()
        .filter_map(|n| registry.iter().find(|s| s.name == *n))
        .collect();
    if json {
        let rows: Vec<Value> = found
            .iter()
            .map(|s| json!({"name": s.name, "anchor": s.anchor, "characteristics": s.characteristics, "summary": s.summary}))
            .collect();
        print_json(&Value::Array(rows));
    } else {
        let width = found.iter().map(|s| s.name.len()).max().unwrap_or(0);
        let awidth = found.iter().map(|s| s.anchor.len()).max().unwrap_or(0);
        let text: String = found
            .iter()
            .map(|s| format!("{:width$}  {:awidth$}  {}\n", s.name, s.anchor, s.summary))
            .collect();
        emit(&text);
    }
    ExitCode::SUCCESS
}

fn catalog_dump(json: bool) -> ExitCode {
    let dump = Catalog::standard().dump();
    if json {
        print_json(&dump);
        return ExitCode::SUCCESS;
    }
    let mut text = format!(
        "{:>3}  {:>5}  {:>12}  {:>8}  {:>10}  structure\n",
        "id", "class", "order", "solvable", "transitive"
    );
    for row in dump.as_array().into_iter().flatten() {
        let transitive = match &row["transitive"] {
            Value::Bool(b) => b.to_string(),
            _ => "-".into(),
        };
        text += &format!(
            "{:>3}  {:>5}  {:>12}  {:>8}  {:>10}  {}\n",
            row["id"].as_u64().unwrap_or(0),
            row["class"].as_u64().unwrap_or(0),
            row["order"].as_str().unwrap_or("?"),
            row["solvable"].as_bool().unwrap_or(false).to_string(),
            transitive,
            row["structure"].as_str().unwrap_or("")
        );
    }
    emit(&text);
    ExitCode::SUCCESS
}

fn perm_parse(expr: &str, degree: usize, json: bool) -> ExitCode {
    let p = match parse_cycles(expr, degree) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    if json {
        print_json(&json!({
            "degree": p.degree(),
            "images": p.images1(),
            "cycles": p.to_cycle_string(),
            "order": p.order(),
        }));
    } else {
        let images: Vec<String> = p.images1().iter().map(usize::to_string).collect();
        emit(&format!("[{}]\n", images.join(", ")));
    }
    ExitCode::SUCCESS
}

fn run_construct(name: &str, params: Option<BTreeMap<String, String>>) -> ExitCode {
    let out = match construct(name, &params.unwrap_or_default()) {
        Ok(v) => v,
        Err(noetherlab::Error::UnknownName(n)) => {
            let known: Vec<&str> = noetherlab::constructions::CONSTRUCTION_NAMES
                .iter()
                .map(|(n, _)| *n)
                .collect();
            return usage(format!(
                "unknown construction `{n}`; known: {}",
                known.join(", ")
            ));
        }
        Err(e) => return usage(e),
    };
    print_json(&out);
    let failed = out["outcomes"]
        .as_array()
        .is_some_and(|os| os.iter().any(|o| o["holds"] == false))
        || out
            .get("checks")
            .and_then(Value::as_array)
            .is_some_and(|cs| cs.iter().any(|c| c["holds"] == false));
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify(args) => verify(args, cli.json),
        Command::List { filter } => list(filter, cli.json),
        Command::Catalog {
            action: CatalogAction::Dump,
        } => catalog_dump(cli.json),
        Command::Perm {
            action: PermAction::Parse { expr, degree },
        } => perm_parse(&expr, degree, cli.json),
        Command::Construct { name, params } => run_construct(&name, params),
    }
}
