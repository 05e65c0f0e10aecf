// SPDX-License-Identifier: Apache-2.0

//! In the n-queens program, "exactly one queen per row" can be weakened to
//! "at most one queen per row" without changing the meaning in any
//! context, because every column already holds exactly one queen.

use strongeq::equivalence::{se_models, strongly_equivalent_direct};
use strongeq::parse::parse_wcp;
use strongeq::{Limits, WcpProgram};

fn columns(n: usize) -> String {
    (1..=n)
        .map(|j| {
            let cells: Vec<String> = (1..=n).map(|i| format!("q({i},{j})")).collect();
            format!("1 {{{}}} 1.\n", cells.join(", "))
        })
        .collect()
}

fn rows_exactly_one(n: usize) -> String {
    (1..=n)
        .map(|i| {
            let cells: Vec<String> = (1..=n).map(|j| format!("q({i},{j})")).collect();
            format!("1 {{{}}} 1.\n", cells.join(", "))
        })
        .collect()
}

fn rows_at_most_one(n: usize) -> String {
    let mut out = String::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in j + 1..=n {
                out.push_str(&format!(":- q({i},{j}), q({i},{k}).\n"));
            }
        }
    }
    out
}

pub fn main() {
    let n = 4;
    let limits = Limits::default();
    let q1: WcpProgram = parse_wcp(&columns(n)).unwrap();
    let p = parse_wcp(&(columns(n) + &rows_exactly_one(n))).unwrap();
    let q = parse_wcp(&(columns(n) + &rows_at_most_one(n))).unwrap();

    let models = se_models(&q1, true, &limits).unwrap();
    assert_eq!(models.len(), 4usize.pow(4));
    assert!(models.iter().all(|m| m.here() == m.there()));
    println!(
        "column rules: {} positive SE-models, all of the form (X, X)",
        models.len()
    );

    let verdict = strongly_equivalent_direct(&p, &q, &limits).unwrap();
    println!(
        "exactly-one rows vs at-most-one rows: strongly equivalent = {}",
        verdict.equivalent
    );
    assert!(verdict.equivalent);
}
