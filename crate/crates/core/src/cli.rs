//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 oracle budget exceeded.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::element::{GarsideElement, Word};
use crate::error::Error;
use crate::invariants::{braid_rank2_lookup, classify_isomorphic, explicit_iso_map};
use crate::oracle::{Ball, DEFAULT_WORD_LIMIT};
use crate::periodic::{PeriodicWitness, Periodicity};
use crate::presentation::Presentation;
use crate::roots::RootsVerdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "garside",
    version,
    about = "Normal forms, conjugacy, roots and homology of circular groups and their Δ-products"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left-weighted factorization of a word (JSON unless --text).
    Nf {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        word: String,
        /// Human-readable output.
        #[arg(long)]
        text: bool,
    },
    /// Decide conjugacy of two words.
    Conj {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        w1: String,
        w2: String,
    },
    /// Super-summit set of a word.
    Sss {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        word: String,
        /// Write the conjugacy graph in DOT format to this file.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Periodicity of a word.
    Periodic {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        word: String,
    },
    /// Generator of the center.
    Center {
        #[arg(short = 'p', long = "pres")]
        pres: String,
    },
    /// Integral homology.
    Homology {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Given w1^n = w2^n, decide whether w1 and w2 are conjugate.
    Roots {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        w1: String,
        w2: String,
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
    },
    /// Isomorphism of two circular groups, with the explicit map.
    Iso {
        #[arg(long = "p1")]
        p1: String,
        #[arg(long = "p2")]
        p2: String,
        /// Word of the first group to send through the isomorphism.
        #[arg(long)]
        map: Option<String>,
    },
    /// Circular group of a rank-2 complex braid group.
    Braid { label: String },
    /// Cross-check normal forms against the brute-force oracle.
    Verify {
        #[arg(short = 'p', long = "pres")]
        pres: String,
        #[arg(long)]
        radius: usize,
    },
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

type CmdResult = Result<i32, Error>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args
        .into_iter()
        .map(|a| {
            let a: OsString = a.into();
            match a.to_str() {
                Some("-p1") => "--p1".into(),
                Some("-p2") => "--p2".into(),
                _ => a,
            }
        })
        .collect();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        json: cli.json,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit(ctx: &mut Ctx, text: &str, value: serde_json::Value) -> Result<(), Error> {
    if ctx.json {
        writeln!(ctx.out, "{value}").map_err(io)
    } else {
        writeln!(ctx.out, "{text}").map_err(io)
    }
}

fn parse_pres(s: &str) -> Result<Presentation, Error> {
    s.parse()
}

fn parse_element(p: &Presentation, w: &str) -> Result<GarsideElement, Error> {
    Ok(p.to_left_weighted(&Word::parse(p, w)?))
}

fn element_value(p: &Presentation, x: &GarsideElement) -> serde_json::Value {
    serde_json::to_value(p.to_canonical_json(x)).expect("plain data serializes")
}

fn element_word(p: &Presentation, x: &GarsideElement) -> String {
    let w = p.element_to_word(x);
    if w.is_empty() {
        "1".into()
    } else {
        w.display(p).to_string()
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> CmdResult {
    match command {
        Command::Nf { pres, word, text } => {
            let p = parse_pres(&pres)?;
            let x = parse_element(&p, &word)?;
            if text && !ctx.json {
                writeln!(ctx.out, "{}", p.format_element(&x)).map_err(io)?;
            } else {
                writeln!(ctx.out, "{}", p.element_json(&x)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Conj { pres, w1, w2 } => {
            let p = parse_pres(&pres)?;
            let (x, y) = (parse_element(&p, &w1)?, parse_element(&p, &w2)?);
            match p.are_conjugate(&x, &y).witness() {
                Some(w) => {
                    let text = format!(
                        "conjugate\nwitness: {}\nwitness word: {}",
                        p.format_element(w),
                        element_word(&p, w)
                    );
                    let value = json!({
                        "conjugate": true,
                        "witness": element_value(&p, w),
                        "witness_word": element_word(&p, w),
                    });
                    emit(ctx, &text, value)?;
                    Ok(EXIT_OK)
                }
                None => {
                    emit(ctx, "not conjugate", json!({ "conjugate": false }))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Sss { pres, word, dot } => {
            let p = parse_pres(&pres)?;
            let x = parse_element(&p, &word)?;
            let g = p.super_summit_set(&x);
            if let Some(path) = dot {
                std::fs::write(&path, g.to_dot(&p))
                    .map_err(|e| Error::Io(format!("cannot write {path}: {e}")))?;
            }
            let mut text = format!("super-summit set: {} elements", g.len());
            for (k, v) in g.vertices().iter().enumerate() {
                let mark = if k == g.base() { " (base)" } else { "" };
                text.push_str(&format!("\n  v{k}: {}{mark}", p.format_element(v)));
            }
            for a in g.arrows() {
                text.push_str(&format!(
                    "\n  v{} -> v{} by {}",
                    a.from,
                    a.to,
                    p.simple_label(a.label)
                ));
            }
            let value = serde_json::to_value(g.to_json(&p)).expect("plain data serializes");
            emit(ctx, &text, value)?;
            Ok(EXIT_OK)
        }
        Command::Periodic { pres, word } => {
            let p = parse_pres(&pres)?;
            let x = parse_element(&p, &word)?;
            match p.periodicity(&x) {
                Periodicity::Periodic { p: pp, q, witness } => {
                    let factor = match witness {
                        PeriodicWitness::DeltaPower => None,
                        PeriodicWitness::Factor(j) => Some(j + 1),
                    };
                    let text = match factor {
                        None => format!("periodic p={pp} q={q} (Δ-power)"),
                        Some(j) => format!("periodic p={pp} q={q} (factor {j})"),
                    };
                    let value = json!({ "periodic": true, "p": pp, "q": q, "factor": factor });
                    emit(ctx, &text, value)?;
                    Ok(EXIT_OK)
                }
                Periodicity::NotPeriodic => {
                    emit(ctx, "not periodic", json!({ "periodic": false }))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Center { pres } => {
            let p = parse_pres(&pres)?;
            let c = p.center();
            let mut text = format!("center generated by {}", p.format_element(&c.generator));
            if c.whole_group {
                text.push_str("\ngroup is abelian: the center is the whole group");
            }
            let value = json!({
                "generator": element_value(&p, &c.generator),
                "whole_group": c.whole_group,
            });
            emit(ctx, &text, value)?;
            Ok(EXIT_OK)
        }
        Command::Homology { pres, n } => {
            let p = parse_pres(&pres)?;
            let degrees: Vec<usize> = match n {
                Some(n) => vec![n],
                None => vec![0, 1, 2, 3],
            };
            let groups: Vec<_> = degrees.iter().map(|&d| (d, p.homology(d))).collect();
            let text = groups
                .iter()
                .map(|(d, h)| format!("H{d} = {h}"))
                .collect::<Vec<_>>()
                .join("\n");
            let value = json!({
                "homology": groups
                    .iter()
                    .map(|(d, h)| json!({ "n": d, "free_rank": h.free_rank, "torsion": h.torsion }))
                    .collect::<Vec<_>>(),
                "dl_cells": p.dl_cells(),
            });
            emit(ctx, &text, value)?;
            Ok(EXIT_OK)
        }
        Command::Roots { pres, w1, w2, n } => {
            let p = parse_pres(&pres)?;
            let (a, b) = (parse_element(&p, &w1)?, parse_element(&p, &w2)?);
            match p.same_power_conjugate(&a, &b, n) {
                RootsVerdict::Conjugate(w) => {
                    let text = format!(
                        "conjugate\nwitness: {}\nwitness word: {}",
                        p.format_element(&w),
                        element_word(&p, &w)
                    );
                    let value = json!({
                        "verdict": "conjugate",
                        "witness": element_value(&p, &w),
                        "witness_word": element_word(&p, &w),
                    });
                    emit(ctx, &text, value)?;
                    Ok(EXIT_OK)
                }
                RootsVerdict::NonconjugatePeriodic => {
                    emit(
                        ctx,
                        "not conjugate (nonconjugate periodic elements)",
                        json!({ "verdict": "nonconjugate_periodic" }),
                    )?;
                    Ok(EXIT_NEGATIVE)
                }
                RootsVerdict::PreconditionFailed => {
                    emit(
                        ctx,
                        "precondition failed: the n-th powers differ or n = 0",
                        json!({ "verdict": "precondition_failed" }),
                    )?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Iso { p1, p2, map } => {
            let (a, b) = (parse_pres(&p1)?, parse_pres(&p2)?);
            let iso = classify_isomorphic(&a, &b)?;
            let mut text = if iso { "isomorphic" } else { "not isomorphic" }.to_string();
            let mut value = json!({ "isomorphic": iso });
            if let Some(w) = map {
                let (fa, fb) = (a.factor(0), b.factor(0));
                if (fb.m, fb.l) != (fa.l, fa.m) && fa != fb {
                    return Err(Error::InvalidPresentation(format!(
                        "--map needs the second group to be G({},{}) or G({},{})",
                        fa.l, fa.m, fa.m, fa.l
                    )));
                }
                let word = Word::parse(&a, &w)?;
                let image = if fa == fb {
                    word
                } else {
                    explicit_iso_map(fa.m, fa.l, &word)?
                };
                let x = b.to_left_weighted(&image);
                let shown = if image.is_empty() {
                    "1".to_string()
                } else {
                    image.display(&b).to_string()
                };
                text.push_str(&format!(
                    "\nimage: {shown}\nnormal form: {}",
                    b.format_element(&x)
                ));
                value["image"] = json!(shown);
                value["normal_form"] = element_value(&b, &x);
            }
            emit(ctx, &text, value)?;
            Ok(if iso { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Braid { label } => {
            let (m, l) = braid_rank2_lookup(&label)?;
            emit(ctx, &format!("{m},{l}"), json!({ "m": m, "l": l }))?;
            Ok(EXIT_OK)
        }
        Command::Verify { pres, radius } => {
            let p = parse_pres(&pres)?;
            let ball = Ball::build_with_limit(&p, radius, DEFAULT_WORD_LIMIT)?;
            let mut by_class: HashMap<usize, GarsideElement> = HashMap::new();
            let mut by_form: HashMap<GarsideElement, usize> = HashMap::new();
            let mut mismatches = 0usize;
            for w in ball.words() {
                let x = p.normalize_positive(&Word::from_atoms(w))?;
                let class = ball.class_of(w).expect("ball words have classes");
                let seen_form = by_class.entry(class).or_insert_with(|| x.clone());
                let seen_class = by_form.entry(x.clone()).or_insert(class);
                if *seen_form != x || *seen_class != class {
                    mismatches += 1;
                }
            }
            let text = format!(
                "checked {} words in {} classes up to weight {radius}: {mismatches} mismatches",
                ball.words().len(),
                by_class.len()
            );
            let value = json!({
                "words": ball.words().len(),
                "classes": by_class.len(),
                "radius": radius,
                "mismatches": mismatches,
            });
            emit(ctx, &text, value)?;
            Ok(if mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}
