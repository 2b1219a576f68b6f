use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use knotcolor::moves::promote_to_five;
use knotcolor::notation::{emit_coloring, emit_diagram, parse_coloring, parse_diagram, parse_family};
use knotcolor::solver::{classify, determinant, enumerate_colorings, fox_coloring_count};
use knotcolor::verify::{self, Report, DEFAULT_MAX_CROSSINGS, DEFAULT_SAMPLES};
use knotcolor::{Coloring, Diagram, Exec};
use serde_json::json;

/// S3-colorings of link diagrams.
#[derive(Parser)]
#[command(name = "knotcolor", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Family notation (`C(2,4,-2)`, `J(3,5)`, `T(2,q)`) or a diagram file.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Achievable palette sizes with counts and one witness per size.
    Classify(Input),
    /// Determinant and Fox 3-/5-coloring counts.
    Det(Input),
    /// List every coloring.
    Solve(Input),
    /// Write the diagram of a family in the text format.
    Gen {
        /// Family notation.
        family: String,
    },
    /// Turn a 4-color coloring into a 5-color one by R2 insertions.
    Promote {
        #[command(flatten)]
        input: Input,
        /// Coloring file; defaults to the first 4-color coloring found.
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Check the T(2,q) statements for q = 2..=q_max.
    VerifyTorus {
        #[arg(long, default_value_t = 20)]
        q_max: i64,
    },
    /// Check the J(k,l) statements over odd k <= k_max, l <= l_max.
    VerifyJ {
        #[arg(long, default_value_t = 7)]
        k_max: i64,
        #[arg(long, default_value_t = 7)]
        l_max: i64,
    },
    /// Check the Conway normal form statements on seeded samples.
    VerifyConway {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
        max_crossings: usize,
    },
}

fn load(input: &str) -> Result<(String, Diagram)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let d = parse_diagram(&text).with_context(|| format!("parsing {input}"))?;
        return Ok((input.to_string(), d));
    }
    let spec = parse_family(input).with_context(|| format!("{input:?} is neither a diagram file nor a family"))?;
    let d = spec.diagram().with_context(|| format!("generating {spec}"))?;
    Ok((spec.to_string(), d))
}

fn tokens(c: &Coloring) -> String {
    c.colors().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn print_json(value: serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(&value)?);
    Ok(())
}

fn summary(label: &str, d: &Diagram) -> Result<String> {
    Ok(format!(
        "{label}: {} arcs, {} crossings, {} components",
        d.num_arcs(),
        d.num_crossings(),
        d.components()?.count()
    ))
}

fn cmd_classify(input: &str, as_json: bool) -> Result<()> {
    let (label, d) = load(input)?;
    let c = classify(&d)?;
    if as_json {
        let witnesses: serde_json::Map<String, serde_json::Value> =
            c.witnesses.iter().map(|(n, w)| (n.to_string(), json!(w))).collect();
        return print_json(json!({
            "input": label,
            "n": c.n,
            "counts": c.counts,
            "witnesses": witnesses,
        }));
    }
    println!("{}", summary(&label, &d)?);
    let sizes: Vec<String> = c.n.iter().map(ToString::to_string).collect();
    println!("n = {{{}}}", sizes.join(", "));
    for (n, count) in &c.counts {
        println!("  n={n}: {count} colorings, e.g. {}", tokens(&c.witnesses[n]));
    }
    Ok(())
}

fn cmd_det(input: &str, as_json: bool) -> Result<()> {
    let (label, d) = load(input)?;
    let det = determinant(&d)?;
    let fox3 = fox_coloring_count(&d, 3)?;
    let fox5 = fox_coloring_count(&d, 5)?;
    if as_json {
        return print_json(json!({ "input": label, "determinant": det, "fox3": fox3, "fox5": fox5 }));
    }
    println!("{label}: det {det}, Fox 3-colorings {fox3}, Fox 5-colorings {fox5}");
    Ok(())
}

fn cmd_solve(input: &str, as_json: bool) -> Result<()> {
    let (label, d) = load(input)?;
    let all = enumerate_colorings(&d)?;
    if as_json {
        return print_json(json!({ "input": label, "colorings": all }));
    }
    for c in &all {
        println!("{}", tokens(c));
    }
    println!("# {label}: {} colorings", all.len());
    Ok(())
}

fn cmd_gen(family: &str, as_json: bool) -> Result<()> {
    let spec = parse_family(family)?;
    let d = spec.diagram()?;
    if as_json {
        return print_json(json!({ "input": spec.to_string(), "diagram": d }));
    }
    print!("# {spec}\n{}", emit_diagram(&d));
    Ok(())
}

fn cmd_promote(input: &str, coloring: Option<&str>, as_json: bool) -> Result<()> {
    let (label, d) = load(input)?;
    let start = match coloring {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            parse_coloring(&text, &d).with_context(|| format!("parsing {path}"))?
        }
        None => match classify(&d)?.witnesses.remove(&4) {
            Some(w) => w,
            None => bail!("no 4-coloring: {label} admits no coloring with exactly 4 colors"),
        },
    };
    let p = promote_to_five(&d, &start)?;
    if as_json {
        return print_json(json!({
            "input": label,
            "start": start,
            "moves": p.moves,
            "diagram": p.diagram,
            "coloring": p.coloring,
            "palette": p.coloring.palette(),
        }));
    }
    println!("# {label}: {} R2 insertion(s), palette {}", p.moves.len(), p.coloring.palette());
    print!("{}", emit_diagram(&p.diagram));
    println!();
    print!("{}", emit_coloring(&p.coloring));
    Ok(())
}

fn print_report(r: &Report, as_json: bool) -> Result<()> {
    if as_json {
        return print_json(serde_json::to_value(r)?);
    }
    for item in &r.items {
        let tag = if item.passed { "PASS" } else { "FAIL" };
        let sizes: Vec<String> = item.n_set.iter().map(ToString::to_string).collect();
        let det = item.determinant.map_or("-".to_string(), |d| d.to_string());
        let mut line = format!("{tag} {} n={{{}}} det={det}", item.label, sizes.join(","));
        if item.link_n_set != item.n_set {
            let link: Vec<String> = item.link_n_set.iter().map(ToString::to_string).collect();
            line.push_str(&format!(" with-R2 n={{{}}}", link.join(",")));
        }
        println!("{line}");
        for check in item.checks.iter().filter(|c| !c.passed) {
            println!("  failed: {}: {}", check.name, check.detail);
        }
        if let Some(cx) = &item.counterexample {
            for line in cx.lines() {
                println!("  | {line}");
            }
        }
    }
    let failed = r.failures().count();
    println!("{}: {} items, {failed} failed", r.command, r.items.len());
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let exec = Exec::default();
    let report = match cli.command {
        Command::Classify(i) => return cmd_classify(&i.input, cli.json).map(|_| true),
        Command::Det(i) => return cmd_det(&i.input, cli.json).map(|_| true),
        Command::Solve(i) => return cmd_solve(&i.input, cli.json).map(|_| true),
        Command::Gen { family } => return cmd_gen(&family, cli.json).map(|_| true),
        Command::Promote { input, coloring } => {
            return cmd_promote(&input.input, coloring.as_deref(), cli.json).map(|_| true)
        }
        Command::VerifyTorus { q_max } => verify::verify_torus(q_max, exec)?,
        Command::VerifyJ { k_max, l_max } => verify::verify_double_twist(k_max, l_max, exec)?,
        Command::VerifyConway { seed, samples, max_crossings } => {
            verify::verify_conway(seed, samples, max_crossings, exec)?
        }
    };
    print_report(&report, cli.json)?;
    Ok(report.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
