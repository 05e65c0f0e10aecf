// SPDX-License-Identifier: Apache-2.0

//! The propositional encoding of a program and its models read back as
//! SE-models.

use strongeq::encodings::pl::pl_program;
use strongeq::encodings::pl::{pl_theory, strongly_equivalent_via_pl};
use strongeq::encodings::prop::prop_models;
use strongeq::equivalence::se_models;
use strongeq::parse::parse_nested;
use strongeq::Limits;

pub fn main() {
    let limits = Limits::default();
    let program = parse_nested("p :- not q.").unwrap();
    for f in pl_theory(&program).unwrap() {
        println!("{f}");
    }

    let mut decoded: Vec<_> = prop_models(&pl_program(&program).unwrap(), &limits)
        .unwrap()
        .iter()
        .map(|i| i.decode().unwrap())
        .collect();
    decoded.sort();
    assert_eq!(decoded, se_models(&program, true, &limits).unwrap());
    println!("{} models, one per SE-model", decoded.len());

    let disj = parse_nested("p ; q.").unwrap();
    let even = parse_nested("p :- not q. q :- not p.").unwrap();
    let verdict = strongly_equivalent_via_pl(&disj, &even, &limits).unwrap();
    println!(
        "p ; q. vs even loop: mismatch {}",
        verdict.mismatch.unwrap().model
    );
}
