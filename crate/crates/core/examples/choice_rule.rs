// SPDX-License-Identifier: Apache-2.0

//! The choice rule `1 {p, q} 1.` against an even loop with a constraint,
//! decided directly and through the weight constraint encoding.

use strongeq::encodings::wc::strongly_equivalent_via_wc;
use strongeq::equivalence::strongly_equivalent_direct;
use strongeq::parse::parse_wcp;
use strongeq::Limits;

pub fn main() {
    let limits = Limits::default();
    let choice = parse_wcp(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/choice.wcp"
    )))
    .unwrap();
    let even = parse_wcp(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/evenloop.wcp"
    )))
    .unwrap();

    let direct = strongly_equivalent_direct(&choice, &even, &limits).unwrap();
    let wc = strongly_equivalent_via_wc(&choice, &even, &limits).unwrap();
    println!("direct: {}, wc: {}", direct.equivalent, wc.equivalent);
    assert!(direct.equivalent && wc.equivalent);

    // without the constraint the even loop also accepts {p, q} in context
    let loose = parse_wcp("p :- not q. q :- not p.").unwrap();
    let verdict = strongly_equivalent_via_wc(&choice, &loose, &limits).unwrap();
    let mismatch = verdict.mismatch.unwrap();
    println!(
        "without the constraint: {} belongs to the {} program only",
        mismatch.model,
        mismatch.model_of.as_str()
    );
    assert_eq!(mismatch.model.to_string(), "({}, {p, q})");
}
