use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use splitcryst::catalog::{catalog, find};
use splitcryst::domain::Domain;
use splitcryst::kgroup::FiniteKTable;
use splitcryst::lines::line_data;
use splitcryst::Error;
use splitcryst_cli::goldens::run_goldens;
use splitcryst_cli::report::{self, compute_all, group_data};

#[derive(Parser)]
#[command(name = "splitcryst", version, about = "Lower algebraic K-theory of the 73 split 3D crystallographic groups")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog.
    Catalog,
    /// Lattice, point group and integral representation of one group.
    Classify { label: String },
    /// Fundamental polyhedron `i` (1-7) with its ridge cycles.
    Domain { index: usize },
    /// Non-negligible cells and the homology of the finite part.
    Stabilizers { label: String },
    /// Non-negligible lines and their virtually cyclic stabilizers.
    Lines { label: String },
    /// Final K-theory for one group, or every group with --all.
    Ktheory {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        label: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Recompute every table and diff it against the embedded goldens.
    Verify,
}

enum Failure {
    Usage(String),
    Mismatch,
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInCatalog(_) | Error::UnknownName(_) => Failure::Usage(e.to_string()),
            e => Failure::Internal(e),
        }
    }
}

fn emit(json: bool, v: Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cat = catalog()?;
    let table = FiniteKTable::default();
    match cli.command {
        Command::Catalog => emit(cli.json, report::catalog_json(&cat), report::catalog_text(&cat)),
        Command::Classify { label } => {
            let g = find(&cat, &label)?;
            emit(cli.json, report::classify_json(g)?, report::classify_text(g)?);
        }
        Command::Domain { index } => {
            if !(1..=7).contains(&index) {
                return Err(Failure::Usage(format!("domain index {index} is not in 1..=7")));
            }
            let d = Domain::gamma(index)?;
            emit(cli.json, report::domain_json(&d)?, report::domain_text(&d)?);
        }
        Command::Stabilizers { label } => {
            let d = group_data(&table, &cat, &label)?;
            emit(cli.json, report::stabilizers_json(&d), report::stabilizers_text(&d));
        }
        Command::Lines { label } => {
            let g = find(&cat, &label)?;
            let lines = line_data(&cat, &label)?;
            emit(cli.json, report::lines_json(g, &lines), report::lines_text(g, &lines));
        }
        Command::Ktheory { label: Some(label), .. } => {
            let d = group_data(&table, &cat, &label)?;
            emit(cli.json, report::ktheory_json(&d.k), format!("{}\n", d.k));
        }
        Command::Ktheory { label: None, .. } => {
            let all = compute_all(&table)?;
            let v = Value::Array(all.iter().map(|d| report::ktheory_json(&d.k)).collect());
            let text: String = all.iter().map(|d| format!("{:<14} {}\n", d.k.label, d.k)).collect();
            emit(cli.json, v, text);
        }
        Command::Verify => {
            let r = run_goldens()?;
            let mut text = String::new();
            for m in &r.mismatches {
                text += &format!("MISMATCH [{}] {}: expected {}, got {}\n", m.table, m.key, m.expected, m.actual);
            }
            text += &format!("{} checks, {} mismatches\n", r.checked, r.mismatches.len());
            let v = json!({"checked": r.checked, "mismatches": r.mismatches});
            emit(cli.json, v, text);
            if !r.ok() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
