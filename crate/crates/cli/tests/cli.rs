//! End-to-end tests driving the compiled binary: output bytes, exit codes,
//! and the round trips between commands (search writes a file that validate
//! accepts).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_auraspace"));
    c.current_dir(repo_root());
    c
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn compute_prints_canonical_sets_and_traces() {
    let out = run(&["compute", "fixtures/nonidem4.json", "trace", "{d}"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "{d} ⊂ {c,d} ⊂ {b,c,d} ⊂ {a,b,c,d}  [stabilized at 3]\n"
    );

    let out = run(&["compute", "fixtures/hier.json", "intsa", "{a,c}"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out), "{c}\n");

    let out = run(&["compute", "fixtures/nonidem4.json", "auralocal", "{}"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out), "{}\n");

    let out = run(&["compute", "fixtures/strict.json", "warp", "{}"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown operator"));

    let out = run(&["compute", "fixtures/strict.json", "star", "{a,z}"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("bad set expression"));
}

#[test]
fn validate_separates_axiom_failures_from_malformed_files() {
    let out = run(&["validate", "fixtures/strict.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("ok (n=3, 5 opens, 2 ideal members, transitive scope)"));

    // Well-formed file, but the open family is missing the full set.
    let broken = tmp("axiom_broken.json");
    fs::write(
        &broken,
        r#"{ "points": ["a", "b"], "opens": [[], ["a"]], "ideal": { "members": [[]] },
             "aura": { "a": ["a"], "b": ["a"] } }"#,
    )
    .unwrap();
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout_of(&out).contains("invalid"));

    let garbled = tmp("garbled.json");
    fs::write(&garbled, "{ not json").unwrap();
    let out = run(&["validate", garbled.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stdout_of(&out).contains("malformed"));

    // The worst outcome wins the exit code: 2 beats 1 beats 0.
    let out = run(&[
        "validate",
        "fixtures/strict.json",
        broken.to_str().unwrap(),
        garbled.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);

    let out = run(&["validate", tmp("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stdout_of(&out).contains("unreadable"));
}

#[test]
fn topology_lists_the_generated_family() {
    let out = run(&["topology", "fixtures/chain2.json", "tausa"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "{}\n{a}\n{b}\n{a,b}\n{c}\n{a,c}\n{b,c}\n{a,b,c}\n"
    );

    let out = run(&["topology", "fixtures/chain2.json", "sigma"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown generator"));
}

#[test]
fn classify_emits_the_flag_table() {
    let out = run(&["classify", "fixtures/strict.json", "--set", "{b}"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "subset  ia_open  semi  pre  alpha  beta  b_set\n\
         {b}     no       no    no   no     no    no\n"
    );

    // Without --set, one row per subset of a 3-point space plus the header.
    let out = run(&["classify", "fixtures/strict.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out).lines().count(), 9);
}

#[test]
fn continuity_reads_map_files_with_relative_space_paths() {
    let dir = tmp("maps");
    fs::create_dir_all(&dir).unwrap();
    fs::copy(repo_root().join("fixtures/chain2.json"), dir.join("src.json")).unwrap();
    fs::copy(repo_root().join("fixtures/chain1.json"), dir.join("tgt.json")).unwrap();
    let map = dir.join("identity.json");
    fs::write(
        &map,
        r#"{ "source": "src.json", "target": "tgt.json",
             "map": { "a": "a", "b": "b", "c": "c" } }"#,
    )
    .unwrap();

    let out = run(&["continuity", map.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("map: a↦a, b↦b, c↦c"));
    assert!(text.contains("derived-topology continuity: yes"));
    assert!(text.contains("decomposition: derived=yes semi=yes pre=yes alpha=yes"));

    let out = run(&["continuity", map.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["profile"]["continuous"], serde_json::Value::Bool(true));
    assert_eq!(
        v["decomposition"]["semi_pre_equivalence_holds"],
        serde_json::Value::Bool(true)
    );
}

#[test]
fn check_runs_laws_and_reports_failures_in_the_exit_code() {
    let out = run(&["check", "--all", "--spaces", "enum:n=2"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("laws: 33  pass: 25  fail: 0  probe-only: 8"));

    // The decomposition equivalences genuinely fail on the three-point grid;
    // the command reports that honestly and exits nonzero.
    let out = run(&[
        "check",
        "--law",
        "continuity_decomposition",
        "--spaces",
        "enum:n=3",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout_of(&out).starts_with("fail"));

    let out = run(&["check", "--law", "no_such_law"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("try --list"));

    let out = run(&["check", "--list"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("cech_axioms"));

    let out = run(&["check", "--all", "--spaces", "enum:n=4"]);
    assert_eq!(code(&out), 3);
    assert!(stderr_of(&out).contains("refusing the requested scale"));

    let out = run(&["check", "--law", "duality", "--spaces", "fixtures"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("checked=11"));

    // A single space file is a corpus of one.
    let out = run(&["check", "--law", "duality", "--spaces", "fixtures/hier.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("checked=1"));
}

#[test]
fn check_json_reports_parse() {
    let out = run(&[
        "check",
        "--law",
        "duality",
        "--spaces",
        "enum:n=2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["ok"], serde_json::Value::Bool(true));
    assert_eq!(v["reports"][0]["law"], "duality");
    assert_eq!(v["reports"][0]["spaces_checked"], 38);
}

#[test]
fn repro_replays_the_corpus() {
    let out = run(&["repro"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("48 checks, 0 mismatches"));
    assert!(text.contains("fixture"));
    assert!(text.contains("hierarchy"));

    let out = run(&["repro", "--only", "strict-inclusion"]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("strict-inclusion"));
    assert!(!text.contains("hierarchy"));
    assert!(text.contains("0 mismatches"));

    let out = run(&["repro", "--only", "no-such-fixture"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown fixture"));
}

#[test]
fn search_writes_witness_files_that_validate_accepts() {
    let witness = tmp("tausac_witness.json");
    let out = run(&[
        "search",
        "--predicate",
        "TAUSAC_NOT_IN_TAU",
        "--n",
        "2",
        "--out",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("found TAUSAC_NOT_IN_TAU at index 1"));
    assert!(text.contains("refutes the claim"));

    let out = run(&["validate", witness.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("ok (n=2"));

    let out = run(&[
        "search",
        "--predicate",
        "NONIDEMPOTENT_K(3)",
        "--n",
        "4",
        "--discrete",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("found NONIDEMPOTENT_K(3) at index 84"));

    // Not finding anything is an ordinary reported outcome.
    let out = run(&["search", "--predicate", "NONIDEMPOTENT_K(3)", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout_of(&out).contains("no witness for NONIDEMPOTENT_K(3) at n=3"));

    let out = run(&["search", "--predicate", "STRICT_STAR_AURA", "--n", "5"]);
    assert_eq!(code(&out), 3);
    assert!(stderr_of(&out).contains("refusing the requested scale"));

    let out = run(&["search", "--predicate", "NO_SUCH_THING", "--n", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_of(&out).contains("unknown predicate"));
}

#[test]
fn search_json_embeds_the_witness() {
    let out = run(&[
        "search",
        "--predicate",
        "STRICT_STAR_AURA",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["found"], serde_json::Value::Bool(true));
    assert_eq!(v["index"], 9);
    assert_eq!(v["witness"]["format"], "auraspace/1");
    assert_eq!(v["witness"]["witness"]["predicate"], "STRICT_STAR_AURA");
}

#[test]
fn random_mode_is_seed_deterministic() {
    let args = [
        "search",
        "--predicate",
        "STRICT_STAR_AURA",
        "--n",
        "3",
        "--mode",
        "random",
        "--seed",
        "7",
        "--budget",
        "10000",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout_of(&a), stdout_of(&b));
}

#[test]
fn jobs_flag_caps_workers_without_changing_output() {
    let base = run(&["check", "--all", "--spaces", "enum:n=2"]);
    let capped = run(&["check", "--all", "--spaces", "enum:n=2", "--jobs", "1"]);
    assert_eq!(code(&capped), 0);
    assert_eq!(stdout_of(&base), stdout_of(&capped));
}
