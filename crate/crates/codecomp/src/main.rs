//! Command-line front end: reproduce the built-in scenario registry, run a
//! user-supplied JSON scenario file, or print an orbit.
//!
//! Exit codes are a function of the verdicts only: `reproduce` exits 0 when
//! every scenario passes, 1 on any mismatch (or an empty filter match), 2 when
//! any result is undecided; `check` exits 0 when every check is decided, 2
//! when any is undecided, 3 on a parse or schema error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use codecomp::action::orbit;
use codecomp::scenario_file::{
    parse_family_arg, parse_point_arg, parse_space_arg, FileError, RunReport, ScenarioFile,
};
use codecomp::scenarios::{self, ScenarioResult};
use codecomp::Budgets;

#[derive(Parser)]
#[command(
    name = "codecomp",
    version,
    about = "Exact checkers for decompositions of transformation semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in scenarios and compare against their expected outcomes
    Reproduce {
        /// Only run scenarios whose id starts with this prefix
        #[arg(long, default_value = "")]
        filter: String,
        /// Emit the results as JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Run the checks declared in a JSON scenario file
    Check {
        /// Path to the scenario file
        file: PathBuf,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the orbit of a point under an element family
    Orbit {
        /// Phase space: b, circle, circle:N or finite:p1,p2,...
        #[arg(long)]
        space: String,
        /// Family: a named id (t_n:3, t, g, sigma, sigma_star, dihedral_t:4,
        /// cyclic_rotation:1/3), gen:ELEMS or enum:ELEMS with a
        /// semicolon-separated element list
        #[arg(long)]
        family: String,
        /// Starting point in the space's notation
        #[arg(long)]
        point: String,
        /// Maximum number of new points to visit
        #[arg(long)]
        budget: Option<usize>,
        /// Emit the orbit as JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budgets = Budgets::from_env();
    let code = match cli.command {
        Command::Reproduce { filter, json } => cmd_reproduce(&filter, json, budgets),
        Command::Check { file, json } => cmd_check(&file, json, budgets),
        Command::Orbit {
            space,
            family,
            point,
            budget,
            json,
        } => cmd_orbit(&space, &family, &point, budget, json, budgets),
    };
    ExitCode::from(code)
}

fn cmd_reproduce(filter: &str, json: bool, budgets: Budgets) -> u8 {
    let results = scenarios::reproduce(filter, budgets);
    if results.is_empty() {
        eprintln!("no scenario id matches prefix {filter:?}");
        return 1;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&results).expect("results serialize")
        );
    } else {
        print_reproduce_table(&results);
    }
    if results.iter().any(|r| r.actual == "undecided") {
        2
    } else if results.iter().any(|r| !r.pass) {
        1
    } else {
        0
    }
}

fn print_reproduce_table(results: &[ScenarioResult]) {
    let id_width = results.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in results {
        let status = if r.pass { "pass" } else { "FAIL" };
        print!(
            "{status}  {id:<id_width$}  expected {expected}, got {actual}",
            id = r.id,
            expected = r.expected,
            actual = r.actual
        );
        match &r.witness {
            Some(w) => println!("  [{w}]"),
            None => println!(),
        }
    }
    let passed = results.iter().filter(|r| r.pass).count();
    println!("{passed}/{} scenarios passed", results.len());
}

fn cmd_check(path: &PathBuf, json: bool, budgets: Budgets) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("cannot read {}: {e}", path.display());
            return 3;
        }
    };
    let report = ScenarioFile::parse(&text).and_then(|file| {
        codecomp::scenario_file::run_checks(&file, budgets)
    });
    match report {
        Ok(report) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print_report(&report);
            }
            report.exit_code() as u8
        }
        Err(e) => {
            print_file_error(&e);
            3
        }
    }
}

fn print_report(report: &RunReport) {
    for c in &report.checks {
        print!("{}: {}", c.name, c.verdict);
        if let Some(w) = &c.witness {
            print!("  [{w}]");
        }
        println!("  ({} ms)", c.elapsed_ms);
    }
    println!("overall: {}", report.overall);
}

fn print_file_error(e: &FileError) {
    match e {
        FileError::Json(inner) => eprintln!(
            "scenario file is not valid JSON at line {}, column {}: {inner}",
            inner.line(),
            inner.column()
        ),
        other => eprintln!("{other}"),
    }
}

fn cmd_orbit(
    space: &str,
    family: &str,
    point: &str,
    budget: Option<usize>,
    json: bool,
    budgets: Budgets,
) -> u8 {
    let run = || -> Result<(), FileError> {
        let space = parse_space_arg(space)?;
        let family = parse_family_arg(family, &space, budgets.closure)?;
        let start = parse_point_arg(point, &space)?;
        let result = orbit(&space, &family, &start, budget.unwrap_or(budgets.orbit))?;
        let rendered: Vec<String> = result.points.iter().map(|p| p.to_string()).collect();
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "point": start.to_string(),
                    "orbit": rendered,
                    "complete": result.complete,
                }))
                .expect("orbit serializes")
            );
        } else {
            let tag = if result.complete {
                "complete"
            } else {
                "incomplete (budget exhausted)"
            };
            println!("orbit of {start}: {{{}}}  {tag}", rendered.join(", "));
        }
        Ok(())
    };
    match run() {
        Ok(()) => 0,
        Err(e) => {
            print_file_error(&e);
            3
        }
    }
}
