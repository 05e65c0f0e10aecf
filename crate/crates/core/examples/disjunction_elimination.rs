// SPDX-License-Identifier: Apache-2.0

//! A disjunction with a constraint is strongly equivalent to an even loop
//! with the same constraint; the two methods agree.

use strongeq::encodings::pl::strongly_equivalent_via_pl;
use strongeq::equivalence::{se_models, strongly_equivalent_direct};
use strongeq::parse::parse_nested;
use strongeq::Limits;

pub fn main() {
    let limits = Limits::default();
    let p1 = parse_nested(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/p1.lp"
    )))
    .unwrap();
    let p2 = parse_nested(include_str!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/data/p2.lp"
    )))
    .unwrap();

    let m1 = se_models(&p1, true, &limits).unwrap();
    let m2 = se_models(&p2, true, &limits).unwrap();
    for m in &m1 {
        println!("SE-model {m}");
    }
    assert_eq!(m1, m2);

    assert!(
        strongly_equivalent_direct(&p1, &p2, &limits)
            .unwrap()
            .equivalent
    );
    assert!(
        strongly_equivalent_via_pl(&p1, &p2, &limits)
            .unwrap()
            .equivalent
    );
    println!("strongly equivalent by both methods");
}
