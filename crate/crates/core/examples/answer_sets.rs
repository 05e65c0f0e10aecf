// SPDX-License-Identifier: Apache-2.0

//! Answer sets of a nested program and of a weight constraint program.

use strongeq::parse::{parse_nested, parse_wcp};
use strongeq::{Limits, LiteralSet};

pub fn main() {
    let limits = Limits::default();

    let even = parse_nested(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/evenloop.lp"
    )))
    .unwrap();
    let sets = even.answer_sets(&limits).unwrap();
    println!("{even}");
    for x in &sets {
        println!("  answer set {x}");
    }
    assert_eq!(sets, vec![LiteralSet::of(["p"]), LiteralSet::of(["q"])]);

    // double negation makes p optional; classical negation is a separate literal
    let nested = parse_nested("p :- not not p. -q :- not p.").unwrap();
    let sets = nested.answer_sets(&limits).unwrap();
    println!("{nested}");
    for x in &sets {
        println!("  answer set {x}");
    }
    assert_eq!(sets, vec![LiteralSet::of(["p"]), LiteralSet::of(["-q"])]);

    let choice = parse_wcp("0 {p, q, r=2} 2. :- not p.").unwrap();
    let sets = choice.answer_sets(&limits).unwrap();
    println!("{choice}");
    for x in &sets {
        println!("  answer set {x}");
    }
    assert_eq!(
        sets,
        vec![LiteralSet::of(["p"]), LiteralSet::of(["p", "q"])]
    );
}
