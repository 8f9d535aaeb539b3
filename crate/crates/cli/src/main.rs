//! Command-line front end. Every command reads files and flags, prints to
//! stdout, and exits; there is no state between invocations, and output is
//! byte-for-byte deterministic for fixed inputs and flags.
//!
//! Exit codes: 0 success; 1 a checked assertion failed (law violations,
//! corpus mismatches, spaces that parse but break the axioms); 2 usage
//! errors and malformed files; 3 refused scale or budget.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use auraspace::classify::{classify_with, ClosureMode};
use auraspace::continuity::{
    comparison_chain_check, decomposition_check, ia_continuity_profile, SpaceMap,
};
use auraspace::enumerate::{SearchConfig, SearchError};
use auraspace::io::{self, ParseError};
use auraspace::laws::{self, LawError, LawKind, LawReport, LawStatus, SpaceSource};
use auraspace::ops;
use auraspace::fixtures;
use auraspace::search::{find_witness, serialize_witness, witness_to_json, Predicate, Witness};
use auraspace::set::{PointSet, SetFamily, Universe};
use auraspace::space::IdealAuraSpace;
use auraspace::topologies;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_SCALE: u8 = 3;

#[derive(Parser)]
#[command(name = "auraspace")]
#[command(about = "Finite-model workbench for ideal-aura topological spaces")]
#[command(version)]
struct Cli {
    /// Output format: text | json
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Worker-thread cap for check and search (0 picks automatically)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Check that space files parse and satisfy the axioms
    Validate {
        /// Space files to validate
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },

    /// Apply one operator to a subset of a space
    Compute {
        /// Space file
        space: PathBuf,
        /// Operator: star | auralocal | clstar | claura | intaura | clsa | psi | intsa | trace
        op: String,
        /// Subset expression such as {a,c}; the empty set is {}
        set: String,
    },

    /// Print a derived topology or basis of a space, one set per line
    Topology {
        /// Space file
        space: PathBuf,
        /// Generator: tau_aura | tau_star | tausa | tausa_c | beta
        generator: String,
    },

    /// Tabulate openness classes of subsets of a space
    Classify {
        /// Space file
        space: PathBuf,
        /// Classify only this subset instead of the whole powerset
        #[arg(long)]
        set: Option<String>,
        /// Classify against the iterated closure instead of the single step
        #[arg(long)]
        iterated: bool,
    },

    /// Evaluate continuity notions for a map file
    Continuity {
        /// Map file naming a source space, a target space, and a point map
        map: PathBuf,
    },

    /// Run the law suite over a corpus of spaces
    Check {
        /// Law id to run (see --list)
        #[arg(long, conflicts_with_all = ["all", "list"])]
        law: Option<String>,
        /// Run every registered law
        #[arg(long, conflicts_with = "list")]
        all: bool,
        /// Corpus: enum:n=<k>, sample:n=<a,b,..>, fixtures, or a space file
        #[arg(long, default_value = "enum:n=3")]
        spaces: String,
        /// Seed for sampled corpora
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Spaces drawn per size for sampled corpora
        #[arg(long, default_value_t = 2000)]
        count: u64,
        /// List the registered laws and exit
        #[arg(long)]
        list: bool,
    },

    /// Replay the built-in fixture corpus
    Repro {
        /// Replay a single fixture by name
        #[arg(long)]
        only: Option<String>,
    },

    /// Scan spaces for a named phenomenon and print the first witness
    Search {
        /// Predicate name, for example STRICT_STAR_AURA or NONIDEMPOTENT_K(3)
        #[arg(long)]
        predicate: String,
        /// Universe size to scan
        #[arg(long)]
        n: usize,
        /// Scan mode: exhaustive | random
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        /// Seed for random mode
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Draw budget for random mode
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// Restrict the scan to the discrete topology
        #[arg(long)]
        discrete: bool,
        /// Deduplicate scanned spaces up to point relabeling
        #[arg(long)]
        canonical: bool,
        /// Write the witness file here when one is found
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn scale(e: SearchError) -> Failure {
    Failure {
        code: EXIT_SCALE,
        message: e.to_string(),
    }
}

/// Axiom violations are failed assertions about content (exit 1); everything
/// else about a broken file is a usage-level problem (exit 2).
fn file_failure(path: &Path, e: ParseError) -> Failure {
    Failure {
        code: if e.is_axiom_failure() {
            EXIT_FAILURE
        } else {
            EXIT_USAGE
        },
        message: format!("{}: {e}", path.display()),
    }
}

fn read_space(path: &Path) -> Result<IdealAuraSpace, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    io::parse_space(&text).map_err(|e| file_failure(path, e))
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serialization")
    );
}

fn set_json(u: &Universe, s: PointSet) -> Value {
    Value::Array(
        io::set_to_names(u, s)
            .into_iter()
            .map(Value::String)
            .collect(),
    )
}

fn family_json(u: &Universe, family: &SetFamily) -> Value {
    Value::Array(family.iter().map(|s| set_json(u, s)).collect())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`auraspace topology ... | head`) instead
    // of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let format = match cli.format.as_str() {
        "text" => Format::Text,
        "json" => Format::Json,
        other => {
            eprintln!("unknown format {other:?}; use text or json");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let outcome = match cli.command {
        Commands::Validate { files } => cmd_validate(&files, format),
        Commands::Compute { space, op, set } => cmd_compute(&space, &op, &set, format),
        Commands::Topology { space, generator } => cmd_topology(&space, &generator, format),
        Commands::Classify {
            space,
            set,
            iterated,
        } => cmd_classify(&space, set.as_deref(), iterated, format),
        Commands::Continuity { map } => cmd_continuity(&map, format),
        Commands::Check {
            law,
            all,
            spaces,
            seed,
            count,
            list,
        } => cmd_check(law.as_deref(), all, &spaces, seed, count, list, format),
        Commands::Repro { only } => cmd_repro(only.as_deref(), format),
        Commands::Search {
            predicate,
            n,
            mode,
            seed,
            budget,
            discrete,
            canonical,
            out,
        } => cmd_search(
            &predicate,
            n,
            &mode,
            seed,
            budget,
            discrete,
            canonical,
            out.as_deref(),
            format,
        ),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("{}", f.message.trim_end());
            ExitCode::from(f.code)
        }
    }
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

fn cmd_validate(files: &[PathBuf], format: Format) -> Result<u8, Failure> {
    let mut worst = 0u8;
    let mut rows = Vec::new();
    for path in files {
        let shown = path.display().to_string();
        let outcome = fs::read_to_string(path)
            .map_err(|e| (EXIT_USAGE, "unreadable", e.to_string()))
            .and_then(|text| {
                io::parse_space(&text).map_err(|e| {
                    if e.is_axiom_failure() {
                        (EXIT_FAILURE, "invalid", e.to_string())
                    } else {
                        (EXIT_USAGE, "malformed", e.to_string())
                    }
                })
            });
        match outcome {
            Ok(space) => {
                let summary = format!(
                    "n={}, {} opens, {} ideal members, {} scope",
                    space.n(),
                    space.topology().opens().len(),
                    space.ideal().members().len(),
                    if space.is_transitive() {
                        "transitive"
                    } else {
                        "non-transitive"
                    },
                );
                if format == Format::Text {
                    println!("{shown}: ok ({summary})");
                }
                rows.push(json!({ "file": shown, "ok": true, "summary": summary }));
            }
            Err((code, status, message)) => {
                worst = worst.max(code);
                if format == Format::Text {
                    // Axiom reports span multiple lines; keep their shape.
                    println!("{shown}: {status}: {}", message.trim_end());
                }
                rows.push(json!({
                    "file": shown,
                    "ok": false,
                    "status": status,
                    "error": message.trim_end(),
                }));
            }
        }
    }
    if format == Format::Json {
        print_json(&json!({ "files": rows, "ok": worst == 0 }));
    }
    Ok(worst)
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn cmd_compute(path: &Path, op: &str, set: &str, format: Format) -> Result<u8, Failure> {
    let space = read_space(path)?;
    let u = space.universe();
    let a = u
        .parse_set(set)
        .map_err(|e| usage(format!("bad set expression {set:?}: {e}")))?;
    if op == "trace" {
        let trace = ops::ia_closure_trace(&space, a);
        match format {
            Format::Text => println!("{}", ops::format_trace(&space, &trace)),
            Format::Json => print_json(&json!({
                "op": "trace",
                "input": set_json(u, a),
                "steps": Value::Array(trace.steps().iter().map(|s| set_json(u, *s)).collect()),
                "stabilized_at": trace.stabilized_at(),
            })),
        }
        return Ok(0);
    }
    let f = ops::op_by_name(op).ok_or_else(|| {
        usage(format!(
            "unknown operator {op:?}; one of star, auralocal, clstar, claura, intaura, clsa, psi, intsa, trace"
        ))
    })?;
    let result = f(&space, a);
    match format {
        Format::Text => println!("{}", u.format_set(result)),
        Format::Json => print_json(&json!({
            "op": op,
            "input": set_json(u, a),
            "result": set_json(u, result),
        })),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

fn cmd_topology(path: &Path, generator: &str, format: Format) -> Result<u8, Failure> {
    let space = read_space(path)?;
    let family = match generator {
        "tau_aura" => topologies::gen_tau_aura(&space).opens().clone(),
        "tau_star" => topologies::gen_tau_star(&space).opens().clone(),
        "tausa" => topologies::gen_tausa(&space).opens().clone(),
        "tausa_c" => topologies::gen_tausa_c(&space).opens().clone(),
        "beta" => topologies::gen_basis_beta(&space),
        other => {
            return Err(usage(format!(
                "unknown generator {other:?}; one of tau_aura, tau_star, tausa, tausa_c, beta"
            )))
        }
    };
    match format {
        Format::Text => {
            for s in family.iter() {
                println!("{}", space.universe().format_set(s));
            }
        }
        Format::Json => print_json(&json!({
            "generator": generator,
            "sets": family_json(space.universe(), &family),
        })),
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

fn cmd_classify(
    path: &Path,
    set: Option<&str>,
    iterated: bool,
    format: Format,
) -> Result<u8, Failure> {
    let space = read_space(path)?;
    let u = space.universe();
    let mode = if iterated {
        ClosureMode::Iterated
    } else {
        ClosureMode::SingleStep
    };
    let subjects: Vec<PointSet> = match set {
        Some(expr) => vec![u
            .parse_set(expr)
            .map_err(|e| usage(format!("bad set expression {expr:?}: {e}")))?],
        None => u.subsets().collect(),
    };
    let rows: Vec<(String, auraspace::classify::OpennessProfile)> = subjects
        .iter()
        .map(|&a| (u.format_set(a), classify_with(&space, a, mode)))
        .collect();
    match format {
        Format::Text => {
            let width = rows
                .iter()
                .map(|(s, _)| s.len())
                .chain(["subset".len()])
                .max()
                .unwrap_or(6);
            println!(
                "{:<width$}  ia_open  semi  pre  alpha  beta  b_set",
                "subset"
            );
            for (name, p) in &rows {
                println!(
                    "{:<width$}  {:<7}  {:<4}  {:<3}  {:<5}  {:<4}  {}",
                    name,
                    yes_no(p.ia_open),
                    yes_no(p.semi),
                    yes_no(p.pre),
                    yes_no(p.alpha),
                    yes_no(p.beta),
                    yes_no(p.b_set),
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = subjects
                .iter()
                .zip(&rows)
                .map(|(&a, (_, p))| {
                    json!({
                        "subset": set_json(u, a),
                        "ia_open": p.ia_open,
                        "semi": p.semi,
                        "pre": p.pre,
                        "alpha": p.alpha,
                        "beta": p.beta,
                        "b_set": p.b_set,
                    })
                })
                .collect();
            print_json(&json!({
                "closure": if iterated { "iterated" } else { "single-step" },
                "rows": rows,
            }));
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// continuity
// ---------------------------------------------------------------------------

fn render_map(map: &SpaceMap) -> String {
    let src = map.source().universe();
    let tgt = map.target().universe();
    map.table()
        .iter()
        .enumerate()
        .map(|(i, &j)| format!("{}↦{}", src.name(i), tgt.name(j)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_continuity(path: &Path, format: Format) -> Result<u8, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let map = io::parse_map(&text, |rel| {
        fs::read_to_string(base.join(rel)).map_err(|e| e.to_string())
    })
    .map_err(|e| file_failure(path, e))?;

    let profile = ia_continuity_profile(&map);
    let comparison = comparison_chain_check(&map);
    let decomposition = decomposition_check(&map).ok();

    match format {
        Format::Text => {
            println!("map: {}", render_map(&map));
            println!(
                "derived-topology continuity: {}",
                yes_no(profile.continuous)
            );
            println!(
                "preimage classes: semi={} pre={} alpha={} beta={}",
                yes_no(profile.semi),
                yes_no(profile.pre),
                yes_no(profile.alpha),
                yes_no(profile.beta),
            );
            println!(
                "comparison: aura={} derived={} star={} base={}",
                yes_no(comparison.aura_continuous),
                yes_no(comparison.tausa_continuous),
                yes_no(comparison.star_continuous),
                yes_no(comparison.tau_continuous),
            );
            println!(
                "implications: aura->derived {}, derived->star {}, star->base {}",
                if comparison.step_one_holds { "holds" } else { "fails" },
                if comparison.step_two_holds { "holds" } else { "fails" },
                if comparison.step_three_holds { "holds" } else { "fails" },
            );
            match &decomposition {
                None => println!("decomposition: source scope is not transitive; not applicable"),
                Some(d) => {
                    let mut line = format!(
                        "decomposition: derived={} semi={} pre={} alpha={}; semi+pre equivalence {}, alpha equivalence {}",
                        yes_no(d.tausa_continuous),
                        yes_no(d.semi_continuous),
                        yes_no(d.pre_continuous),
                        yes_no(d.alpha_continuous),
                        if d.semi_pre_equivalence_holds { "holds" } else { "fails" },
                        if d.alpha_equivalence_holds { "holds" } else { "fails" },
                    );
                    if let Some(w) = d.witness {
                        let _ = write!(
                            line,
                            " (separating open {})",
                            map.target().universe().format_set(w)
                        );
                    }
                    println!("{line}");
                }
            }
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert(
                "map".into(),
                Value::Object(
                    map.table()
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| {
                            (
                                map.source().universe().name(i).to_string(),
                                Value::String(map.target().universe().name(j).to_string()),
                            )
                        })
                        .collect(),
                ),
            );
            obj.insert(
                "profile".into(),
                json!({
                    "continuous": profile.continuous,
                    "semi": profile.semi,
                    "pre": profile.pre,
                    "alpha": profile.alpha,
                    "beta": profile.beta,
                }),
            );
            obj.insert(
                "comparison".into(),
                json!({
                    "aura_continuous": comparison.aura_continuous,
                    "tausa_continuous": comparison.tausa_continuous,
                    "star_continuous": comparison.star_continuous,
                    "tau_continuous": comparison.tau_continuous,
                    "step_one_holds": comparison.step_one_holds,
                    "step_two_holds": comparison.step_two_holds,
                    "step_three_holds": comparison.step_three_holds,
                }),
            );
            obj.insert(
                "decomposition".into(),
                match &decomposition {
                    None => Value::Null,
                    Some(d) => json!({
                        "tausa_continuous": d.tausa_continuous,
                        "semi_continuous": d.semi_continuous,
                        "pre_continuous": d.pre_continuous,
                        "alpha_continuous": d.alpha_continuous,
                        "semi_pre_equivalence_holds": d.semi_pre_equivalence_holds,
                        "alpha_equivalence_holds": d.alpha_equivalence_holds,
                        "witness": d.witness.map(|w| set_json(map.target().universe(), w)),
                    }),
                },
            );
            print_json(&Value::Object(obj));
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn kind_str(kind: LawKind) -> &'static str {
    match kind {
        LawKind::Asserted => "asserted",
        LawKind::Probe => "probe",
        LawKind::Corpus => "corpus",
    }
}

fn parse_space_source(expr: &str, seed: u64, count: u64) -> Result<SpaceSource, Failure> {
    if expr == "fixtures" {
        return Ok(SpaceSource::Fixtures);
    }
    if let Some(rest) = expr.strip_prefix("enum:") {
        let n = rest
            .strip_prefix("n=")
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| usage(format!("bad corpus {expr:?}; expected enum:n=<k>")))?;
        return Ok(SpaceSource::Enumerated { n_max: n });
    }
    if let Some(rest) = expr.strip_prefix("sample:") {
        let ns = rest
            .strip_prefix("n=")
            .map(|list| {
                list.split(',')
                    .map(|v| v.trim().parse::<usize>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()
            .ok()
            .flatten()
            .filter(|ns| !ns.is_empty())
            .ok_or_else(|| usage(format!("bad corpus {expr:?}; expected sample:n=<a,b,..>")))?;
        return Ok(SpaceSource::Sampled {
            ns,
            count_per_n: count,
            seed,
        });
    }
    let space = read_space(Path::new(expr))?;
    Ok(SpaceSource::Spaces(vec![space]))
}

fn report_json(r: &LawReport) -> Value {
    json!({
        "law": r.law_id,
        "kind": kind_str(r.kind),
        "status": r.status.to_string(),
        "spaces_checked": r.spaces_checked,
        "violation_count": r.violation_count,
        "violations": r.violations.iter().map(|v| json!({
            "space": v.space,
            "detail": v.detail,
        })).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn cmd_check(
    law: Option<&str>,
    all: bool,
    spaces: &str,
    seed: u64,
    count: u64,
    list: bool,
    format: Format,
) -> Result<u8, Failure> {
    if list {
        match format {
            Format::Text => {
                for l in laws::registry() {
                    println!("{:<42} {:<8} {}", l.id, kind_str(l.kind), l.summary);
                }
            }
            Format::Json => {
                let rows: Vec<Value> = laws::registry()
                    .iter()
                    .map(|l| json!({ "id": l.id, "kind": kind_str(l.kind), "summary": l.summary }))
                    .collect();
                print_json(&Value::Array(rows));
            }
        }
        return Ok(0);
    }
    if law.is_none() && !all {
        return Err(usage("pass --law <id>, --all, or --list"));
    }
    let source = parse_space_source(spaces, seed, count)?;
    let reports: Vec<LawReport> = match law {
        Some(id) => vec![laws::run_law(id, &source).map_err(|e| match e {
            LawError::UnknownLaw(_) => usage(format!("{e}; try --list")),
            LawError::Search(s) => scale(s),
        })?],
        None => laws::run_all(&source).map_err(scale)?,
    };
    let failed = reports.iter().filter(|r| r.failed()).count();
    match format {
        Format::Text => {
            for r in &reports {
                println!("{}", r.one_line());
            }
            let pass = reports
                .iter()
                .filter(|r| matches!(r.status, LawStatus::Pass))
                .count();
            let probes = reports
                .iter()
                .filter(|r| matches!(r.status, LawStatus::ProbeOnly))
                .count();
            println!(
                "laws: {}  pass: {pass}  fail: {failed}  probe-only: {probes}",
                reports.len()
            );
        }
        Format::Json => {
            print_json(&json!({
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
                "ok": failed == 0,
            }));
        }
    }
    Ok(if failed > 0 { EXIT_FAILURE } else { 0 })
}

// ---------------------------------------------------------------------------
// repro
// ---------------------------------------------------------------------------

fn cmd_repro(only: Option<&str>, format: Format) -> Result<u8, Failure> {
    if let Some(name) = only {
        if fixtures::fixture(name).is_none() {
            let names: Vec<&str> = fixtures::all_fixtures().iter().map(|f| f.name).collect();
            return Err(usage(format!(
                "unknown fixture {name:?}; fixtures: {}",
                names.join(", ")
            )));
        }
    }
    let report = fixtures::run_corpus(only);
    let mismatches = report.failures();
    match format {
        Format::Text => {
            let headers = ["fixture", "check", "expected", "got", "status"];
            let mut w = headers.map(str::len);
            for e in &report.entries {
                w[0] = w[0].max(e.fixture.len());
                w[1] = w[1].max(e.check.len());
                w[2] = w[2].max(e.expected.len());
                w[3] = w[3].max(e.got.len());
            }
            println!(
                "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}",
                headers[0],
                headers[1],
                headers[2],
                headers[3],
                headers[4],
                w0 = w[0],
                w1 = w[1],
                w2 = w[2],
                w3 = w[3],
            );
            for e in &report.entries {
                println!(
                    "{:<w0$}  {:<w1$}  {:<w2$}  {:<w3$}  {}",
                    e.fixture,
                    e.check,
                    e.expected,
                    e.got,
                    if e.ok { "ok" } else { "MISMATCH" },
                    w0 = w[0],
                    w1 = w[1],
                    w2 = w[2],
                    w3 = w[3],
                );
            }
            println!();
            println!("{} checks, {} mismatches", report.entries.len(), mismatches);
            let mut named: Vec<&str> = Vec::new();
            for e in &report.entries {
                if !named.contains(&e.fixture) {
                    named.push(e.fixture);
                }
            }
            for f in fixtures::all_fixtures() {
                if named.contains(&f.name) {
                    println!("{}: {}", f.name, f.note);
                }
            }
        }
        Format::Json => {
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "fixture": e.fixture,
                        "check": e.check,
                        "expected": e.expected,
                        "got": e.got,
                        "ok": e.ok,
                    })
                })
                .collect();
            print_json(&json!({ "entries": entries, "ok": mismatches == 0 }));
        }
    }
    Ok(if mismatches > 0 { EXIT_FAILURE } else { 0 })
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

/// Two predicates probe claims stated and then withdrawn at their source;
/// their outcome lines say what a hit or a miss means for the claim.
fn claim_relation(p: Predicate, found: bool) -> Option<String> {
    let claim = match p {
        Predicate::TausacNotInTau => {
            "every single-step derived open set is open in the base topology"
        }
        Predicate::ComparisonIiiFail => "star continuity implies base-topology continuity",
        _ => return None,
    };
    Some(if found {
        format!("refutes the claim that {claim}")
    } else {
        format!("consistent with the claim that {claim}; absence at this scale is not a proof")
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    predicate: &str,
    n: usize,
    mode: &str,
    seed: u64,
    budget: u64,
    discrete: bool,
    canonical: bool,
    out: Option<&Path>,
    format: Format,
) -> Result<u8, Failure> {
    let p = Predicate::parse(predicate).map_err(|e| usage(e.to_string()))?;
    let mut config = match mode {
        "exhaustive" => SearchConfig::exhaustive(n),
        "random" => SearchConfig::random(n, seed, budget),
        other => {
            return Err(usage(format!(
                "unknown mode {other:?}; use exhaustive or random"
            )))
        }
    };
    if discrete {
        config = config.discrete_only();
    }
    config.canonicalize = canonical;

    let mode_line = match mode {
        "exhaustive" => "exhaustive".to_string(),
        _ => format!("random, seed={seed}, budget={budget}"),
    };
    let found: Option<Witness> = find_witness(p, &config).map_err(scale)?;
    let note = claim_relation(p, found.is_some());

    match &found {
        Some(w) => {
            if !w.verify() {
                return Err(Failure {
                    code: EXIT_FAILURE,
                    message: format!("witness for {p} at index {} failed re-verification", w.index),
                });
            }
            let written = match out {
                Some(path) => {
                    fs::write(path, serialize_witness(w)).map_err(|e| {
                        usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Some(path.display().to_string())
                }
                None => None,
            };
            match format {
                Format::Text => {
                    println!("found {p} at index {} ({mode_line})", w.index);
                    println!("space: {}", laws::describe_space(&w.space));
                    if let Some(s) = w.subset {
                        println!("subset: {}", w.space.universe().format_set(s));
                    }
                    if let (Some(target), Some(table)) = (&w.target, &w.map) {
                        println!("target: {}", laws::describe_space(target));
                        let rendered: Vec<String> = table
                            .iter()
                            .enumerate()
                            .map(|(i, &j)| {
                                format!(
                                    "{}↦{}",
                                    w.space.universe().name(i),
                                    target.universe().name(j)
                                )
                            })
                            .collect();
                        println!("map: {}", rendered.join(", "));
                    }
                    println!("detail: {}", w.detail);
                    if let Some(note) = &note {
                        println!("{note}");
                    }
                    if let Some(path) = &written {
                        println!("wrote {path}");
                    }
                }
                Format::Json => {
                    let mut obj = Map::new();
                    obj.insert("predicate".into(), Value::String(p.to_string()));
                    obj.insert("n".into(), Value::Number(n.into()));
                    obj.insert("mode".into(), Value::String(mode_line));
                    obj.insert("found".into(), Value::Bool(true));
                    obj.insert("index".into(), Value::Number(w.index.into()));
                    obj.insert("witness".into(), witness_to_json(w));
                    if let Some(note) = &note {
                        obj.insert("note".into(), Value::String(note.clone()));
                    }
                    if let Some(path) = &written {
                        obj.insert("out".into(), Value::String(path.clone()));
                    }
                    print_json(&Value::Object(obj));
                }
            }
        }
        None => match format {
            Format::Text => {
                println!("no witness for {p} at n={n} ({mode_line})");
                if let Some(note) = &note {
                    println!("{note}");
                }
                if out.is_some() {
                    println!("no witness file written");
                }
            }
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("predicate".into(), Value::String(p.to_string()));
                obj.insert("n".into(), Value::Number(n.into()));
                obj.insert("mode".into(), Value::String(mode_line));
                obj.insert("found".into(), Value::Bool(false));
                if let Some(note) = &note {
                    obj.insert("note".into(), Value::String(note.clone()));
                }
                print_json(&Value::Object(obj));
            }
        },
    }
    Ok(0)
}
