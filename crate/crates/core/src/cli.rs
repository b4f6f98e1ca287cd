//! The `asmprism` command line.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::asm::{Asm, GridCell, PartialAsm};
use crate::error::Error;
use crate::ideal::{initial_ideal, multidegree, stanley_reisner_facets};
use crate::perm::{deg, min_perm_set, perm_set, Perm};
use crate::pipedream::{delta_facets, delta_fmax};
use crate::prism::{
    asm_polynomial_with, enumerate_all_prism, has_unstable_triple, min_prism_degree,
    prism_set_with, prism_weight, Model, UnstableRule,
};
use crate::verify::{run_check, schubert_sum, with_jobs, CHECKS};

#[derive(Parser, Debug)]
#[command(name = "asmprism", version, about = "ASM polynomials, prism tableaux and pipe dreams")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Matrix file; standard input when omitted
    #[arg(long, global = true, value_name = "FILE")]
    asm: Option<String>,

    #[arg(long, global = true, value_name = "K")]
    n: Option<usize>,

    /// Worker threads for exhaustive checks
    #[arg(long, global = true, value_name = "J")]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[arg(long, global = true)]
    verbose: bool,

    /// Let a single occurrence of the smaller label form an unstable triple
    #[arg(long, global = true)]
    relaxed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PolyModel {
    Bigr,
    Parabolic,
    SchubertSum,
    Multidegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PrismModel {
    Bigr,
    Parabolic,
}

impl From<PrismModel> for Model {
    fn from(m: PrismModel) -> Model {
        match m {
            PrismModel::Bigr => Model::BiGrassmannian,
            PrismModel::Parabolic => Model::Parabolic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PrismAction {
    List,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ASM polynomial of the input matrix
    Poly {
        #[arg(long, value_enum, default_value_t = PolyModel::Parabolic)]
        model: PolyModel,
    },
    /// Prism tableaux of a model
    Prism {
        #[arg(value_enum)]
        action: PrismAction,
        #[arg(long, value_enum, default_value_t = PrismModel::Parabolic)]
        model: PrismModel,
        /// List every filling, not only the prism set
        #[arg(long)]
        all: bool,
    },
    /// Facets of the subword complex, as plus diagrams
    Facets {
        /// Only facets of maximal dimension
        #[arg(long)]
        max: bool,
    },
    /// Bruhat-minimal permutations above the ASM
    PermSet,
    /// Shortest permutations above the ASM
    MinPerm,
    /// Minimum length over the permutations above the ASM
    Deg,
    /// Rothe diagram cells
    Diagram,
    /// Essential set cells
    Essential,
    /// Monotone triangle rows
    Triangle,
    /// Initial ideal generators or Stanley-Reisner facets
    Ideal {
        #[arg(long, conflicts_with = "facets")]
        init: bool,
        #[arg(long)]
        facets: bool,
    },
    /// Number of ASMs of size N
    Count { size: Option<usize> },
    /// Run an exhaustive check over ASM(n)
    Verify { check: String },
    /// Canonical completion of a partial ASM
    Complete,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx<'a> {
    global: &'a Global,
    stdin: &'a mut dyn Read,
    out: Vec<String>,
}

enum Failure {
    Invalid(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Invalid(e.to_string())
    }
}

impl Ctx<'_> {
    fn structured(&self) -> bool {
        self.global.format == Format::Structured
    }

    fn emit(&mut self, text: String, value: Value) {
        if self.structured() {
            self.out.push(value.to_string());
        } else {
            self.out.push(text);
        }
    }

    fn rule(&self) -> UnstableRule {
        if self.global.relaxed {
            UnstableRule::Relaxed
        } else {
            UnstableRule::DistinctColors
        }
    }

    fn read_input(&mut self) -> Result<String, Failure> {
        match &self.global.asm {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Invalid(format!("cannot read {path}: {e}"))),
            None => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::Invalid(format!("cannot read standard input: {e}")))?;
                Ok(s)
            }
        }
    }

    fn read_asm(&mut self) -> Result<Asm, Failure> {
        let text = self.read_input()?;
        Ok(Asm::parse(&text)?)
    }
}

fn cells_text(cells: impl IntoIterator<Item = GridCell>) -> String {
    cells
        .into_iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cells_json(cells: impl IntoIterator<Item = GridCell>) -> Value {
    Value::Array(cells.into_iter().map(|c| json!([c.row, c.col])).collect())
}

fn perm_json(w: &Perm) -> Value {
    json!(w.one_line())
}

/// Run the command line on `argv` (including the program name), reading
/// matrices from `stdin` when no `--asm` file is given.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Ctx {
        global: &cli.global,
        stdin,
        out: Vec::new(),
    };
    let result = execute(&cli.command, &mut ctx);
    let mut stdout = ctx.out.join("\n");
    if !stdout.is_empty() {
        stdout.push('\n');
    }
    match result {
        Ok(()) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Invalid(msg)) => Outcome {
            code: 1,
            stdout,
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Verification) => Outcome {
            code: 2,
            stdout,
            stderr: String::new(),
        },
    }
}

fn execute(command: &Command, ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    match command {
        Command::Poly { model } => {
            let a = ctx.read_asm()?;
            let rule = ctx.rule();
            let p = match model {
                PolyModel::Bigr => asm_polynomial_with(&Model::BiGrassmannian.spec(&a), rule),
                PolyModel::Parabolic => asm_polynomial_with(&Model::Parabolic.spec(&a), rule),
                PolyModel::SchubertSum => schubert_sum(&a),
                PolyModel::Multidegree => multidegree(&a),
            };
            ctx.emit(p.to_string(), json!({ "polynomial": p.to_string() }));
        }
        Command::Prism { action: PrismAction::List, model, all } => {
            let a = ctx.read_asm()?;
            let spec = Model::from(*model).spec(&a);
            let rule = ctx.rule();
            let tableaux: Vec<_> = if *all {
                enumerate_all_prism(&spec).collect()
            } else {
                prism_set_with(&spec, rule)
            };
            let min = min_prism_degree(&spec);
            if ctx.global.verbose && !ctx.structured() {
                ctx.out.push(format!("shape {spec}"));
            }
            for t in tableaux {
                let w = prism_weight(&t);
                let minimal = w.total_degree() == min;
                let unstable = has_unstable_triple(&t, rule);
                let text = if ctx.global.verbose || *all {
                    format!(
                        "{t}  {w}{}{}",
                        if minimal { "" } else { "  not-minimal" },
                        if unstable { "  unstable" } else { "" }
                    )
                } else {
                    t.to_string()
                };
                ctx.emit(
                    text,
                    json!({
                        "tableau": t.to_string(),
                        "weight": w.to_string(),
                        "minimal": minimal,
                        "unstable": unstable,
                    }),
                );
            }
        }
        Command::Facets { max } => {
            let a = ctx.read_asm()?;
            let facets = if *max { delta_fmax(&a) } else { delta_facets(&a) };
            for f in facets {
                let text = if ctx.global.verbose {
                    format!("{}  {}\n{}", cells_text(f.diagram.cells()), f.weight(), f.diagram)
                        .trim_end()
                        .to_string()
                } else {
                    cells_text(f.diagram.cells())
                };
                let value = json!({
                    "plus": cells_json(f.diagram.cells()),
                    "weight": f.weight().to_string(),
                    "permutation": perm_json(&f.diagram.word().product()),
                });
                ctx.emit(text, value);
            }
        }
        Command::PermSet | Command::MinPerm => {
            let a = ctx.read_asm()?;
            let perms = if matches!(command, Command::PermSet) {
                perm_set(&a)
            } else {
                min_perm_set(&a)
            };
            for w in perms {
                let w = w.embed_to(a.n());
                ctx.emit(w.to_string(), json!({ "perm": perm_json(&w), "length": w.length() }));
            }
        }
        Command::Deg => {
            let a = ctx.read_asm()?;
            let d = deg(&a);
            ctx.emit(d.to_string(), json!({ "deg": d }));
        }
        Command::Diagram => {
            let a = ctx.read_asm()?;
            let d = a.rothe_diagram();
            ctx.emit(cells_text(d.iter().copied()), json!({ "cells": cells_json(d) }));
        }
        Command::Essential => {
            let a = ctx.read_asm()?;
            let r = a.corner_sum();
            let e = a.essential_set();
            if ctx.structured() {
                let rows: Vec<Value> = e
                    .iter()
                    .map(|c| json!({ "cell": [c.row, c.col], "rank": r.get(c.row, c.col) }))
                    .collect();
                ctx.out.push(Value::Array(rows).to_string());
            } else if ctx.global.verbose {
                for c in e {
                    ctx.out.push(format!("{c} rank {}", r.get(c.row, c.col)));
                }
            } else {
                ctx.out.push(cells_text(e));
            }
        }
        Command::Triangle => {
            let a = ctx.read_asm()?;
            let m = a.monotone_triangle();
            for row in &m.rows {
                let text = row.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                ctx.emit(text, json!(row));
            }
        }
        Command::Ideal { facets, .. } => {
            let a = ctx.read_asm()?;
            let gens = initial_ideal(&a);
            if *facets {
                let sr = stanley_reisner_facets(&gens, a.n());
                for f in &sr.facets {
                    ctx.emit(cells_text(f.cells()), json!({ "facet": cells_json(f.cells()) }));
                }
            } else {
                for g in gens {
                    ctx.emit(g.to_string(), json!({ "generator": cells_json(g.support.cells()) }));
                }
            }
        }
        Command::Count { size } => {
            let n = size
                .or(ctx.global.n)
                .ok_or_else(|| Failure::Invalid("count needs a size".into()))?;
            let c = Asm::count(n);
            ctx.emit(c.to_string(), json!({ "n": n, "count": c }));
        }
        Command::Verify { check } => {
            let n = ctx.global.n.unwrap_or(3);
            let rule = ctx.rule();
            let name = check.as_str();
            if !CHECKS.contains(&name) {
                return Err(Failure::Invalid(format!(
                    "unknown check {name:?}; expected one of {}",
                    CHECKS.join(", ")
                )));
            }
            let report = with_jobs(ctx.global.jobs, || run_check(name, n, rule))
                .expect("known check");
            let value = json!({
                "check": report.name,
                "n": n,
                "ok": report.ok(),
                "passed": report.passed,
                "total": report.total,
                "failures": report.failures,
            });
            if ctx.structured() {
                ctx.out.push(value.to_string());
            } else {
                ctx.out.push(report.to_string());
                ctx.out.extend(report.failures.iter().cloned());
            }
            if !report.ok() {
                return Err(Failure::Verification);
            }
        }
        Command::Complete => {
            let text = ctx.read_input()?;
            let p = PartialAsm::parse(&text)?;
            let c = p.canonical_completion();
            if ctx.structured() {
                ctx.out.push(json!({ "n": c.n(), "rows": c.rows() }).to_string());
            } else {
                ctx.out.push(c.to_string().trim_end().to_string());
            }
        }
    }
    Ok(())
}
