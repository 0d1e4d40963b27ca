//! `ccf`: build the catalog groups, run the verification suites,
//! evaluate quaternion expressions, and export group dumps and subgroup
//! lattices.
//!
//! Exit codes: 0 on success (discrepancies included), 1 on a check
//! failure or evaluation error, 2 on usage errors such as an unknown
//! group name.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use ccf::catalog::{self, CatalogName};
use ccf::error::Error;
use ccf::expr::{self, EvalValue};
use ccf::quat::RatioConvention;
use ccf::report::CheckStatus;
use ccf::verify::{self, Scope};
use ccf::braid;

#[derive(Parser)]
#[command(name = "ccf", version, about = "Exact checks for the quaternionic canonical-formula model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog of built-in groups.
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
    /// Inspect one catalog group.
    Group(GroupArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Evaluate a quaternion expression.
    Eval(EvalArgs),
    /// Analyze a 3-strand braid word (Burau matrix, Sl2(Z) image,
    /// strand permutation).
    Braid(BraidArgs),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// One line per group: name, order, realization kind.
    List,
}

#[derive(Args)]
struct GroupArgs {
    /// What to show: show | table | aut | subgroups | lattice-dot.
    action: String,
    /// Catalog name, e.g. Q, V, 2T, 2O, S4, C6, SL2(3).
    name: String,
    /// Output format: markdown | json.
    #[arg(long, default_value = "markdown")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Scope: all | cf | sequences | aut | braid | matrix-iso | jordan.
    scope: String,
    /// Ratio convention(s) to run: plain | star | both.
    #[arg(long, default_value = "both")]
    convention: String,
    /// Write the JSON report to this path (stdout shows Markdown).
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Expression, e.g. "cf(1,i,j,k)" or "{1-i : j-k}".
    expr: String,
    /// Ratio convention: plain | star.
    #[arg(long, default_value = "plain")]
    convention: String,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BraidArgs {
    /// Braid word in compact (aAbB) or caret (a^-1 b) notation.
    word: String,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn conventions_from_flag(flag: &str) -> Result<Vec<RatioConvention>, Error> {
    match flag {
        "both" => Ok(vec![RatioConvention::Plain, RatioConvention::Star]),
        other => Ok(vec![RatioConvention::from_str(other)?]),
    }
}

fn quat_json(q: &ccf::Quat) -> serde_json::Value {
    json!({"value": q, "label": q.label()})
}

fn run_group(args: &GroupArgs) -> Result<(), Error> {
    let name: CatalogName = args.name.parse()?;
    let group = catalog::build(name)?;
    let as_json = args.format == "json";
    match args.action.as_str() {
        "show" => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&group.dump_json()).unwrap());
            } else {
                println!("# {} (order {})\n", group.name(), group.order());
                for (id, e) in group.elements() {
                    println!(
                        "- {:>3}: {}  (order {}, {})",
                        id,
                        e.label,
                        group.element_order(id),
                        e.realization.kind()
                    );
                }
            }
        }
        "table" => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&group.dump_json()["table"]).unwrap());
            } else {
                print!("{}", group.cayley_markdown());
            }
        }
        "aut" => {
            let aut = group.automorphism_group()?;
            let iso = catalog::iso_type_label(&aut);
            if as_json {
                let mut dump = aut.dump_json();
                dump["iso_type"] = json!(iso);
                println!("{}", serde_json::to_string_pretty(&dump).unwrap());
            } else {
                match iso {
                    Some(ty) => println!("Aut({}): order {}, isomorphic to {}", group.name(), aut.order(), ty),
                    None => println!("Aut({}): order {}", group.name(), aut.order()),
                }
            }
        }
        "subgroups" => {
            let subs = group.subgroups()?;
            if as_json {
                let rows: Vec<serde_json::Value> = subs
                    .iter()
                    .map(|s| {
                        let sub = group.subgroup_group(s, "H").unwrap();
                        json!({
                            "order": s.len(),
                            "elements": s.iter().map(|&g| group.label(g)).collect::<Vec<_>>(),
                            "iso_type": catalog::iso_type_label(&sub),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).unwrap());
            } else {
                println!("{} has {} subgroups:", group.name(), subs.len());
                for s in &subs {
                    let sub = group.subgroup_group(s, "H").unwrap();
                    let ty = catalog::iso_type_label(&sub)
                        .map(|t| format!(" ({t})"))
                        .unwrap_or_default();
                    let members: Vec<&str> = s.iter().map(|&g| group.label(g)).collect();
                    println!("- order {}{}: {{{}}}", s.len(), ty, members.join(", "));
                }
            }
        }
        "lattice-dot" => {
            print!("{}", catalog::lattice_dot(&group)?);
        }
        other => {
            return Err(Error::Unsupported(format!(
                "unknown group action {other:?} (expected show, table, aut, subgroups or lattice-dot)"
            )))
        }
    }
    Ok(())
}

fn run_eval(args: &EvalArgs) -> Result<(), Error> {
    let convention = RatioConvention::from_str(&args.convention)?;
    let value = expr::eval_str(&args.expr, convention)?;
    match value {
        EvalValue::Value(q) => {
            if args.json {
                println!("{}", serde_json::to_string_pretty(&quat_json(&q)).unwrap());
            } else {
                println!("{}", q.label());
            }
        }
        EvalValue::Cf(outcome) => {
            if args.json {
                let payload = json!({
                    "holds": outcome.holds,
                    "lhs": quat_json(&outcome.lhs),
                    "rhs": quat_json(&outcome.rhs),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!(
                    "{}; lhs={} rhs={}",
                    outcome.holds,
                    outcome.lhs.label(),
                    outcome.rhs.label()
                );
            }
        }
    }
    Ok(())
}

fn run_braid(args: &BraidArgs) -> Result<(), Error> {
    let word = braid::parse_braid(&args.word)?;
    let burau = braid::burau(&word);
    let sl2 = braid::sl2_image(&word);
    let perm = braid::braid_permutation(&word);
    if args.json {
        let payload = json!({
            "word": word.to_string(),
            "burau": burau.to_json(),
            "sl2": sl2.to_json(),
            "permutation": perm.cycle_label(),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("word (reduced): {word}");
        println!("burau:          {burau}");
        println!("sl2(t=-1):      {sl2}");
        println!("permutation:    {}", perm.cycle_label());
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Error> {
    let scope = Scope::from_str(&args.scope)?;
    let conventions = conventions_from_flag(&args.convention)?;
    let report = verify::run(scope, &conventions);
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&report.to_json()).unwrap();
        std::fs::write(path, text)
            .map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", path.display())))?;
    }
    print!("{}", report.to_markdown());
    let discrepancies: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Discrepancy)
        .map(|c| c.id.as_str())
        .collect();
    if !discrepancies.is_empty() {
        println!(
            "\nDiscrepancies (documented claims contradicted by computation): {}",
            discrepancies.join(", ")
        );
    }
    Ok(report.exit_code())
}

fn classify_error(err: &Error) -> u8 {
    match err {
        Error::UnknownName(_) | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<i32, Error> = match &cli.command {
        Command::Catalog { sub: CatalogCmd::List } => {
            for line in catalog::list_lines() {
                println!("{line}");
            }
            Ok(0)
        }
        Command::Group(args) => run_group(args).map(|()| 0),
        Command::Verify(args) => run_verify(args),
        Command::Eval(args) => run_eval(args).map(|()| 0),
        Command::Braid(args) => run_braid(args).map(|()| 0),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify_error(&err))
        }
    }
}
