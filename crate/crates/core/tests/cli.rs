// SPDX-License-Identifier: Apache-2.0

use std::io::Write as _;
use std::process::Command;

use strongeq::cli::{
    run_cli, Outcome, EXIT_CAPACITY, EXIT_NOT_EQUIVALENT, EXIT_OK, EXIT_USAGE, SCHEMA_VERSION,
};

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (Outcome, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("strongeq".to_string()).chain(args.iter().map(|a| a.to_string()));
    let outcome = run_cli(argv, &mut out, &mut err);
    (
        outcome,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_program(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("strongeq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn strongly_equivalent_pair_exits_zero() {
    let (outcome, out, _) = run(&[
        "strong-equiv",
        "--method",
        "all",
        &data("p1.lp"),
        &data("p2.lp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert!(out.contains("method direct: strongly equivalent"));
    assert!(out.contains("method pl: strongly equivalent"));
    assert!(out.ends_with("strongly equivalent: yes\n"));
}

#[test]
fn wc_method_on_weight_constraint_files() {
    let (outcome, out, _) = run(&[
        "strong-equiv",
        "--method",
        "wc",
        &data("choice.wcp"),
        &data("evenloop.wcp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_OK, "{out}");
    let report = outcome.report.unwrap();
    assert_eq!(report.methods.len(), 1);
    assert_eq!(report.methods[0].name, "wc");
}

#[test]
fn witness_in_human_output() {
    let (outcome, out, _) = run(&[
        "strong-equiv",
        "--witness",
        &data("disj.lp"),
        &data("evenloop.lp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_NOT_EQUIVALENT);
    assert!(out.contains("strongly equivalent: no"));
    assert!(out.contains("mismatch: ({}, {p, q}) is an SE-model of the second program only"));
    assert!(out.contains("  p :- q.\n  q :- p.\n"), "{out}");
    assert!(out.contains("separating set: {p, q}"));
}

#[test]
fn json_report_schema() {
    let (outcome, out, _) = run(&[
        "--json",
        "strong-equiv",
        "--witness",
        &data("disj.lp"),
        &data("evenloop.lp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_NOT_EQUIVALENT);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["schema_version"], SCHEMA_VERSION);
    assert_eq!(value["command"], "strong-equiv");
    assert_eq!(value["verdict"], false);
    assert_eq!(value["mismatch"]["pair"]["here"], serde_json::json!([]));
    assert_eq!(
        value["mismatch"]["pair"]["there"],
        serde_json::json!(["p", "q"])
    );
    assert_eq!(value["mismatch"]["model_of"], "second");
    assert_eq!(value["witness"]["case"], "subset-breaks-minimality");
    assert_eq!(value["witness"]["context"], "p :- q.\nq :- p.\n");
    assert_eq!(value["witness"]["answer_set_of"], "first");
    assert!(value["timing_ms"].is_number());
    assert!(value.get("error").is_none());
}

#[test]
fn answer_sets_and_equiv() {
    let (outcome, out, _) = run(&["answer-sets", &data("evenloop.lp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert_eq!(out, "answer set: {p}\nanswer set: {q}\nanswer sets: 2\n");

    let (outcome, out, _) = run(&["equiv", &data("disj.lp"), &data("evenloop.lp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert_eq!(out.trim_end(), "equivalent: yes");
}

#[test]
fn se_models_json() {
    let (outcome, out, _) = run(&["--json", "se-models", "--positive", &data("disj.lp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["se_models"].as_array().unwrap().len(), 5);
}

// a free atom is absent, in the there-set only, or in both: 5 * 3 pairs
#[test]
fn extra_atoms_extend_the_signature() {
    let (_, out, _) = run(&["--atoms", "r", "se-models", "--positive", &data("disj.lp")]);
    assert_eq!(
        out.lines().filter(|l| l.starts_with("se-model:")).count(),
        15
    );
}

#[test]
fn translate_outputs() {
    let (outcome, out, _) = run(&["translate", "--to", "pl", &data("evenloop.lp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert_eq!(
        out,
        "~q -> p\n~p -> q\n~q -> p__prime\n~p -> q__prime\np__prime -> p\nq__prime -> q\n"
    );

    let (outcome, out, _) = run(&["translate", "--to", "dimacs", &data("disj.lp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("p cnf ")));

    let (outcome, out, _) = run(&["translate", "--to", "wc", &data("choice.wcp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert!(out.contains("1 {p__prime, q__prime} 1."), "{out}");
    assert!(out.contains(":- p__prime, not p."));

    let (outcome, out, _) = run(&["translate", "--to", "not", &data("choice.wcp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert!(out.contains("__witness"));
}

#[test]
fn dimacs_sidecar_file() {
    let map = temp_program("map.txt", "");
    let (outcome, _, _) = run(&[
        "translate",
        "--to",
        "dimacs",
        "--map",
        &map,
        &data("disj.lp"),
        &data("evenloop.lp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    let sidecar = std::fs::read_to_string(&map).unwrap();
    assert!(sidecar.lines().any(|l| l.ends_with("p | q")), "{sidecar}");
}

#[test]
fn formula_equivalence_relative_to_program() {
    let (outcome, out, _) = run(&["formula-equiv", "--program", &data("p1.lp"), "not p", "q"]);
    assert_eq!(outcome.exit_code, EXIT_OK);
    assert_eq!(out.trim_end(), "equivalent relative to the program: yes");

    let (outcome, _, _) = run(&[
        "formula-equiv",
        "--program",
        &data("evenloop.lp"),
        "not not p",
        "p",
    ]);
    assert_eq!(outcome.exit_code, EXIT_NOT_EQUIVALENT);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let (outcome, _, err) = run(&["answer-sets", "/nonexistent/x.lp"]);
    assert_eq!(outcome.exit_code, EXIT_USAGE);
    assert!(err.starts_with("error:"));

    let bad = temp_program("bad.lp", "p :- q\n");
    let (outcome, out, _) = run(&["--json", "answer-sets", &bad]);
    assert_eq!(outcome.exit_code, EXIT_USAGE);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["error"]["kind"], "parse");

    let reserved = temp_program("reserved.lp", "p__prime.\n");
    let (outcome, _, _) = run(&["answer-sets", &reserved]);
    assert_eq!(outcome.exit_code, EXIT_USAGE);

    let classical = temp_program("classical.lp", "-p.\n");
    let (outcome, _, _) = run(&[
        "strong-equiv",
        "--method",
        "pl",
        &classical,
        &data("disj.lp"),
    ]);
    assert_eq!(outcome.exit_code, EXIT_USAGE);

    let (outcome, _, _) = run(&["no-such-command"]);
    assert_eq!(outcome.exit_code, EXIT_USAGE);
}

#[test]
fn capacity_exceeded_exits_three() {
    let (outcome, out, _) = run(&["--json", "--max-atoms", "1", "se-models", &data("disj.lp")]);
    assert_eq!(outcome.exit_code, EXIT_CAPACITY);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["error"]["kind"], "capacity");
}

#[test]
fn mixed_languages_are_converted() {
    let (outcome, _, _) = run(&["strong-equiv", &data("evenloop.lp"), &data("evenloop.wcp")]);
    assert_eq!(outcome.exit_code, EXIT_NOT_EQUIVALENT);
    let (outcome, _, _) = run(&["strong-equiv", &data("p2.lp"), &data("evenloop.wcp")]);
    assert_eq!(outcome.exit_code, EXIT_OK);
}

#[test]
fn self_check_finds_no_disagreement() {
    let (outcome, out, _) = run(&["--seed", "11", "self-check", "--count", "40"]);
    assert_eq!(outcome.exit_code, EXIT_OK, "{out}");
    assert!(out.contains("pairs: 40"));
    assert!(out.contains("disagreements: 0"), "{out}");
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_strongeq");
    let status = Command::new(bin)
        .args(["strong-equiv", &data("disj.lp"), &data("evenloop.lp")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_NOT_EQUIVALENT));
    let status = Command::new(bin)
        .args(["equiv", &data("p1.lp"), &data("p2.lp")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
}
