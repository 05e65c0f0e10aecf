// SPDX-License-Identifier: Apache-2.0

//! Driving the command-line front end from code and reading its report.

use strongeq::cli::run_cli;

pub fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let args = [
        "strongeq".to_string(),
        "strong-equiv".into(),
        "--method".into(),
        "all".into(),
        format!("{data}/p1.lp"),
        format!("{data}/p2.lp"),
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let outcome = run_cli(args, &mut out, &mut err);
    print!("{}", String::from_utf8(out).unwrap());
    let report = outcome.report.unwrap();
    assert_eq!(outcome.exit_code, 0);
    assert_eq!(report.verdict, Some(true));
    let methods: Vec<&str> = report.methods.iter().map(|m| m.name.as_str()).collect();
    assert_eq!(methods, ["direct", "pl"]);
}
