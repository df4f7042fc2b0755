//! Command-line front end for the cluster-crystal engine.
//!
//! Exit codes: `0` success, `1` verification mismatch, `2` usage error,
//! `3` internal invariant failure.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cluster_crystal::cluster::{diagram, enumerate_from, initial_seed, Seed};
use cluster_crystal::crystal::{crystal_component, crystal_stats, demazure_monomials};
use cluster_crystal::laurent::{LaurentPoly, Monomial, TorusWeight};
use cluster_crystal::minor::evaluate_minor;
use cluster_crystal::rootdata::{CartanData, Kind};
use cluster_crystal::verifier::{full_verification, run_case, theorem_cases, CaseOutcome};

#[derive(Parser)]
#[command(
    name = "cluster-crystal",
    version,
    about = "Exact cluster variables, generalized minors, and monomial crystals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads; accepted for compatibility, all computations are
    /// single-threaded.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the initial seed: variables, exchange matrix, mutation diagram.
    Seed {
        /// Cartan type letter: B, C, or D.
        kind: String,
        /// Rank (B/C: at least 2, D: at least 3).
        rank: usize,
        /// Emit the mutation diagram in DOT format.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a generalized minor of the factorized chart.
    Minor {
        /// Cartan type letter: A, B, C, or D.
        kind: String,
        /// Rank (at least 2; D: at least 3).
        rank: usize,
        /// Fundamental-weight index of the minor.
        #[arg(long)]
        fund: usize,
        /// Comma-separated Weyl word, applied left to right (omit for the
        /// identity).
        #[arg(long, value_name = "WORD")]
        w: Option<String>,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Mutate the initial seed along a sequence of mutable indices.
    Mutate {
        /// Cartan type letter: B, C, or D.
        kind: String,
        /// Rank (B/C: at least 2, D: at least 3).
        rank: usize,
        /// Comma-separated mutable indices in [1, rank], applied left to
        /// right (index k mutates vertex rank+k).
        #[arg(long, value_name = "SEQ")]
        seq: String,
        /// Emit the mutation diagram in DOT format.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all seeds and cluster variables by exhaustive mutation.
    Enumerate {
        /// Cartan type letter: B, C, or D.
        kind: String,
        /// Rank (B/C: at least 2, D: at least 3).
        rank: usize,
        /// Cap on the number of seeds explored.
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Generate the crystal component of a monomial, with per-node data.
    Crystal {
        /// Cartan type letter: A, B, C, or D.
        kind: String,
        /// Rank (at least 2; D: at least 3).
        rank: usize,
        /// The monomial, e.g. "Y[1,1]" or "Y[2,2]*Y[2,1]^-1".
        #[arg(long)]
        monomial: String,
        /// Cap on the component size.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Generate the monomial Demazure crystal of a highest monomial.
    Demazure {
        /// Cartan type letter: A, B, C, or D.
        kind: String,
        /// Rank (at least 2; D: at least 3).
        rank: usize,
        /// The highest monomial, e.g. "Y[1,2]".
        #[arg(long)]
        highest: String,
        /// Comma-separated Weyl word, applied left to right (omit for the
        /// identity).
        #[arg(long, value_name = "WORD")]
        word: Option<String>,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
    /// Verify the cluster-variable formulas against the engine.
    Verify {
        /// Cartan type letter: B, C, or D.
        kind: String,
        /// Rank (B/C: at least 2, D: at least 3).
        rank: usize,
        /// Run only the cases whose label starts with this prefix, e.g.
        /// "C.iii" (coverage is then not checked).
        #[arg(long, value_name = "ID")]
        item: Option<String>,
        /// Emit JSON.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    /// A verification mismatch: the output is still printed, exit code 1.
    Mismatch(String),
    /// A usage error, exit code 2.
    Usage(String),
    /// An internal invariant failure, exit code 3.
    Internal(String),
}

fn parse_kind(s: &str, allow_a: bool) -> Result<Kind, Failure> {
    match s {
        "A" | "a" if allow_a => Ok(Kind::A),
        "B" | "b" => Ok(Kind::B),
        "C" | "c" => Ok(Kind::C),
        "D" | "d" => Ok(Kind::D),
        "A" | "a" => Err(Failure::Usage(String::from(
            "type A is supported only by the minor, crystal, and demazure commands",
        ))),
        other => Err(Failure::Usage(format!("unknown Cartan type `{other}`"))),
    }
}

fn cartan(kind: Kind, rank: usize) -> Result<CartanData, Failure> {
    let min = if kind == Kind::D { 3 } else { 2 };
    if rank < min {
        return Err(Failure::Usage(format!("type {kind} needs rank at least {min}")));
    }
    Ok(CartanData::new(kind, rank))
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<u32>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: u32 = t
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad Weyl-word letter `{t}`")))?;
            if i == 0 || i as usize > rank {
                return Err(Failure::Usage(format!("letter {i} outside [1, {rank}]")));
            }
            Ok(i)
        })
        .collect()
}

/// Parses the `Y[s,i]^e` grammar with `*` separators.
fn parse_monomial(s: &str, rank: usize) -> Result<Monomial, Failure> {
    let bad = |s: &str| Failure::Usage(format!("bad monomial factor `{s}`"));
    let mut triples: Vec<(i32, u32, i64)> = Vec::new();
    for factor in s.split('*') {
        let f = factor.trim();
        if f == "1" {
            continue;
        }
        let rest = f.strip_prefix("Y[").ok_or_else(|| bad(f))?;
        let (inside, tail) = rest.split_once(']').ok_or_else(|| bad(f))?;
        let (row_s, col_s) = inside.split_once(',').ok_or_else(|| bad(f))?;
        let row: i32 = row_s.trim().parse().map_err(|_| bad(f))?;
        let color: u32 = col_s.trim().parse().map_err(|_| bad(f))?;
        if color == 0 || color as usize > rank {
            return Err(Failure::Usage(format!("color {color} outside [1, {rank}]")));
        }
        let exp: i64 = match tail.strip_prefix('^') {
            None if tail.is_empty() => 1,
            Some(e) => e.trim().parse().map_err(|_| bad(f))?,
            None => return Err(bad(f)),
        };
        triples.push((row, color, exp));
    }
    Ok(Monomial::from_exps(rank, &triples))
}

fn weight_json(w: &TorusWeight) -> Value {
    Value::Array((1..=w.rank()).map(|i| json!(w.pair_coroot(i))).collect())
}

fn monomial_exps_json(m: &Monomial) -> Value {
    Value::Array(
        m.exps().map(|(v, e)| json!([v.row, v.color, e])).collect(),
    )
}

fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "coeff": c.to_string(),
                "aweight": weight_json(m.aweight()),
                "exps": monomial_exps_json(m),
            })
        })
        .collect();
    json!({ "terms": terms, "text": p.to_string() })
}

fn seed_text(cd: &CartanData, seed: &Seed) -> Result<String, Failure> {
    let mut s = String::new();
    let _ = writeln!(s, "type {} rank {}", cd.kind, cd.rank);
    let cols = seed.columns();
    let _ = writeln!(
        s,
        "mutable vertices: {}",
        cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    );
    for &v in seed.vertices() {
        let _ = writeln!(s, "x[{v}] = {}", seed.var(v));
    }
    let _ = writeln!(
        s,
        "exchange matrix (rows = vertices, columns = {}):",
        cols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    );
    for &v in seed.vertices() {
        let row: Vec<String> = cols.iter().map(|&c| seed.entry(v, c).to_string()).collect();
        let _ = writeln!(s, "  {v:>3}: {}", row.join(" "));
    }
    let d = diagram(seed).map_err(|e| Failure::Internal(format!("diagram: {e:?}")))?;
    let _ = writeln!(s, "diagram:");
    for ((u, v), l) in &d.arrows {
        let _ = writeln!(s, "  {u} -> {v} [{l}]");
    }
    Ok(s)
}

fn seed_dot(seed: &Seed) -> Result<String, Failure> {
    let d = diagram(seed).map_err(|e| Failure::Internal(format!("diagram: {e:?}")))?;
    let mut s = String::from("digraph seed {\n");
    for &v in seed.vertices() {
        let shape = if seed.is_mutable(v) { "ellipse" } else { "box" };
        let _ = writeln!(s, "  \"x[{v}]\" [shape={shape}];");
    }
    for ((u, v), l) in &d.arrows {
        let _ = writeln!(s, "  \"x[{u}]\" -> \"x[{v}]\" [label=\"{l}\"];");
    }
    s.push_str("}\n");
    Ok(s)
}

fn seed_json(cd: &CartanData, seed: &Seed) -> Result<Value, Failure> {
    let d = diagram(seed).map_err(|e| Failure::Internal(format!("diagram: {e:?}")))?;
    let vars: Vec<Value> = seed
        .vertices()
        .iter()
        .map(|&v| {
            json!({
                "vertex": v,
                "mutable": seed.is_mutable(v),
                "variable": poly_json(seed.var(v)),
            })
        })
        .collect();
    let matrix: Vec<Value> = seed
        .vertices()
        .iter()
        .map(|&v| {
            Value::Array(seed.columns().iter().map(|&c| json!(seed.entry(v, c))).collect())
        })
        .collect();
    let arrows: Vec<Value> =
        d.arrows.iter().map(|((u, v), l)| json!([u, v, l])).collect();
    Ok(json!({
        "type": cd.kind.to_string(),
        "rank": cd.rank,
        "vertices": seed.vertices(),
        "columns": seed.columns(),
        "variables": vars,
        "matrix": matrix,
        "diagram": arrows,
    }))
}

fn render_seed(cd: &CartanData, seed: &Seed, dot: bool, json_out: bool) -> Result<String, Failure> {
    if dot {
        seed_dot(seed)
    } else if json_out {
        Ok(format!("{:#}\n", seed_json(cd, seed)?))
    } else {
        seed_text(cd, seed)
    }
}

fn monomial_set_output(
    cd: &CartanData,
    set: &BTreeSet<Monomial>,
    extra: &[(&str, Value)],
    json_out: bool,
) -> String {
    if json_out {
        let mut obj = serde_json::Map::new();
        obj.insert("type".into(), json!(cd.kind.to_string()));
        obj.insert("rank".into(), json!(cd.rank));
        obj.insert("count".into(), json!(set.len()));
        obj.insert(
            "monomials".into(),
            Value::Array(
                set.iter()
                    .map(|m| json!({"exps": monomial_exps_json(m), "text": m.to_string()}))
                    .collect(),
            ),
        );
        for (k, v) in extra {
            obj.insert((*k).into(), v.clone());
        }
        format!("{:#}\n", Value::Object(obj))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "{} monomials:", set.len());
        for m in set {
            let _ = writeln!(s, "  {m}");
        }
        for (k, v) in extra {
            let _ = writeln!(s, "{k}: {v}");
        }
        s
    }
}

fn outcome_json(o: &CaseOutcome) -> Value {
    json!({
        "label": o.label,
        "ok": o.ok,
        "message": o.message,
        "profile": o.profile.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "collisions": o.collisions,
        "variable": poly_json(&o.variable),
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.cmd {
        Cmd::Seed { kind, rank, dot, json } => {
            let cd = cartan(parse_kind(kind, false)?, *rank)?;
            let seed = initial_seed(&cd);
            render_seed(&cd, &seed, *dot, *json)
        }
        Cmd::Minor { kind, rank, fund, w, json } => {
            let cd = cartan(parse_kind(kind, true)?, *rank)?;
            if *fund == 0 || *fund > cd.rank {
                return Err(Failure::Usage(format!(
                    "fundamental index {fund} outside [1, {}]",
                    cd.rank
                )));
            }
            let word = parse_word(w.as_deref().unwrap_or(""), cd.rank)?;
            let m = evaluate_minor(&cd, *fund, &word)
                .map_err(|e| Failure::Internal(format!("minor evaluation: {e:?}")))?;
            if *json {
                Ok(format!(
                    "{:#}\n",
                    json!({
                        "type": cd.kind.to_string(),
                        "rank": cd.rank,
                        "fund": fund,
                        "word": word,
                        "negated": m.negated,
                        "minor": poly_json(&m.poly),
                    })
                ))
            } else {
                Ok(format!("{}\n", m.poly))
            }
        }
        Cmd::Mutate { kind, rank, seq, dot, json } => {
            let cd = cartan(parse_kind(kind, false)?, *rank)?;
            let indices = parse_word(seq, cd.rank)?;
            if indices.is_empty() {
                return Err(Failure::Usage(String::from("--seq must not be empty")));
            }
            let mut seed = initial_seed(&cd);
            for k in indices {
                seed = seed.mutate((cd.rank + k as usize) as i64);
            }
            render_seed(&cd, &seed, *dot, *json)
        }
        Cmd::Enumerate { kind, rank, cap, json } => {
            let cd = cartan(parse_kind(kind, false)?, *rank)?;
            let en = enumerate_from(initial_seed(&cd), *cap);
            if *json {
                Ok(format!(
                    "{:#}\n",
                    json!({
                        "type": cd.kind.to_string(),
                        "rank": cd.rank,
                        "seeds": en.num_seeds,
                        "capped": en.capped,
                        "variables": en.variables.iter().map(poly_json).collect::<Vec<_>>(),
                    })
                ))
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "seeds: {}{}", en.num_seeds, if en.capped { " (capped)" } else { "" });
                let _ = writeln!(s, "cluster variables: {}", en.variables.len());
                for v in &en.variables {
                    let _ = writeln!(s, "  {v}");
                }
                Ok(s)
            }
        }
        Cmd::Crystal { kind, rank, monomial, cap, json } => {
            let cd = cartan(parse_kind(kind, true)?, *rank)?;
            let m = parse_monomial(monomial, cd.rank)?;
            let (set, capped) = crystal_component(&cd, &m, *cap);
            let stats: Vec<Value> = (1..=cd.rank)
                .map(|i| {
                    let (phi, eps) = crystal_stats(cd.rank, &m, i);
                    json!([i, phi, eps])
                })
                .collect();
            Ok(monomial_set_output(
                &cd,
                &set,
                &[("capped", json!(capped)), ("phi_eps", Value::Array(stats))],
                *json,
            ))
        }
        Cmd::Demazure { kind, rank, highest, word, json } => {
            let cd = cartan(parse_kind(kind, true)?, *rank)?;
            let m = parse_monomial(highest, cd.rank)?;
            let w = parse_word(word.as_deref().unwrap_or(""), cd.rank)?;
            for i in 1..=cd.rank {
                let (_, eps) = crystal_stats(cd.rank, &m, i);
                if eps != 0 {
                    return Err(Failure::Usage(format!(
                        "`{m}` is not a highest-weight monomial (node {i})"
                    )));
                }
            }
            let d = demazure_monomials(&cd, &m, &w);
            Ok(monomial_set_output(
                &cd,
                &d.monomials,
                &[("collisions", json!(d.collisions.len()))],
                *json,
            ))
        }
        Cmd::Verify { kind, rank, item, json } => {
            let cd = cartan(parse_kind(kind, false)?, *rank)?;
            let (outcomes, coverage): (Vec<CaseOutcome>, Option<(bool, usize, usize)>) =
                match item {
                    Some(prefix) => {
                        let cases: Vec<_> = theorem_cases(&cd)
                            .into_iter()
                            .filter(|c| c.label.starts_with(prefix.as_str()))
                            .collect();
                        if cases.is_empty() {
                            return Err(Failure::Usage(format!(
                                "no case label starts with `{prefix}`"
                            )));
                        }
                        let initial = initial_seed(&cd);
                        (cases.iter().map(|c| run_case(&cd, &initial, c)).collect(), None)
                    }
                    None => {
                        let rep = full_verification(&cd);
                        let cov =
                            (rep.coverage_ok, rep.distinct_variables, rep.expected_count);
                        (rep.outcomes, Some(cov))
                    }
                };
            let all_ok =
                outcomes.iter().all(|o| o.ok) && coverage.is_none_or(|(ok, _, _)| ok);
            let output = if *json {
                format!(
                    "{:#}\n",
                    json!({
                        "type": cd.kind.to_string(),
                        "rank": cd.rank,
                        "cases": outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
                        "coverage": coverage.map(|(ok, got, want)| json!({
                            "ok": ok, "distinct": got, "expected": want
                        })),
                        "all_ok": all_ok,
                    })
                )
            } else {
                let mut s = String::new();
                for o in &outcomes {
                    let status = if o.ok { "PASS" } else { "FAIL" };
                    let _ = write!(s, "{}: {status}", o.label);
                    if !o.message.is_empty() {
                        let _ = write!(s, " ({})", o.message);
                    }
                    let _ = writeln!(s);
                }
                if let Some((ok, got, want)) = coverage {
                    let _ = writeln!(
                        s,
                        "coverage: {got}/{want} distinct variables, {}",
                        if ok { "exact" } else { "MISMATCH" }
                    );
                }
                let _ = writeln!(s, "{}", if all_ok { "PASS" } else { "FAIL" });
                s
            };
            if all_ok {
                Ok(output)
            } else {
                Err(Failure::Mismatch(output))
            }
        }
    }
}

fn emit(cli: &Cli, output: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, output)
            .map_err(|e| Failure::Internal(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => match emit(&cli, &output) {
            Ok(()) => ExitCode::from(0),
            Err(Failure::Internal(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
            Err(_) => unreachable!(),
        },
        Err(Failure::Mismatch(output)) => {
            let _ = emit(&cli, &output);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
