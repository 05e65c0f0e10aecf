// SPDX-License-Identifier: Apache-2.0

//! Two programs with the same answer sets that are not strongly
//! equivalent, and a context program that tells them apart.

use strongeq::equivalence::{equivalent, strongly_equivalent_direct, WitnessCase};
use strongeq::parse::parse_nested;
use strongeq::{Limits, LiteralSet};

pub fn main() {
    let limits = Limits::default();
    let disj = parse_nested(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/disj.lp"
    )))
    .unwrap();
    let even = parse_nested(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/evenloop.lp"
    )))
    .unwrap();

    assert!(equivalent(&disj, &even, &limits).unwrap());
    let verdict = strongly_equivalent_direct(&disj, &even, &limits).unwrap();
    assert!(!verdict.equivalent);

    let witness = verdict.witness.unwrap();
    println!("mismatch: {}", verdict.mismatch.unwrap().model);
    println!("context:\n{}", witness.context_program);
    assert_eq!(witness.case, WitnessCase::SubsetBreaksMinimality);
    assert_eq!(witness.context_program.to_string(), "p :- q.\nq :- p.\n");

    let with_disj = disj
        .union(&witness.context_program)
        .answer_sets(&limits)
        .unwrap();
    let with_even = even
        .union(&witness.context_program)
        .answer_sets(&limits)
        .unwrap();
    println!("with the context: {with_disj:?} vs {with_even:?}");
    assert!(with_disj.contains(&LiteralSet::of(["p", "q"])));
    assert!(!with_even.contains(&LiteralSet::of(["p", "q"])));
}
