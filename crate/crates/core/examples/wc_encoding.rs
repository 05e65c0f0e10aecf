// SPDX-License-Identifier: Apache-2.0

//! The weight constraint encodings: SE-models as answer sets, failing sets
//! as answer sets, and the combined program that is consistent iff two
//! programs differ.

use strongeq::encodings::decode_pair;
use strongeq::encodings::wc::{not_encode, restrict, se_difference_program, wc_encode};
use strongeq::parse::parse_wcp;
use strongeq::Limits;

pub fn main() {
    let limits = Limits::default();
    let program = parse_wcp("1 {p, q} 1.").unwrap();

    let wc = wc_encode(&program).unwrap();
    println!("wc:\n{wc}");
    for x in wc.answer_sets(&limits).unwrap() {
        println!("  answer set {x} is SE-model {}", decode_pair(&x).unwrap());
    }

    let not = not_encode(&program).unwrap();
    let failing: Vec<String> = not
        .answer_sets(&limits)
        .unwrap()
        .iter()
        .map(|y| restrict(y, &program).to_string())
        .collect();
    println!("sets falsifying the program: {}", failing.join(" "));
    assert_eq!(failing, ["{}", "{p, q}"]);

    let even = parse_wcp("p :- not q. q :- not p. :- p, q.").unwrap();
    let combined = se_difference_program(&program, &even).unwrap();
    println!(
        "combined program: {} rules over {} atoms, consistent = {}",
        combined.program.rules().len(),
        combined.program.signature().len(),
        combined
            .program
            .first_answer_set(&limits)
            .unwrap()
            .is_some()
    );
}
