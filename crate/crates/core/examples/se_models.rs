// SPDX-License-Identifier: Apache-2.0

//! SE-models of a disjunctive fact, with and without classical negation in
//! the candidate sets.

use strongeq::equivalence::{is_se_model, se_models};
use strongeq::parse::parse_nested;
use strongeq::{Limits, LiteralSet, SeModel};

pub fn main() {
    let limits = Limits::default();
    let disj = parse_nested("p ; q.").unwrap();

    let positive = se_models(&disj, true, &limits).unwrap();
    for m in &positive {
        println!("positive SE-model {m}");
    }
    assert_eq!(positive.len(), 5);

    // over all consistent literal sets every there-set is one of 3^2 = 9
    let all = se_models(&disj, false, &limits).unwrap();
    println!("{} SE-models over literals", all.len());
    assert!(all.len() > positive.len());
    assert!(positive.iter().all(|m| all.contains(m)));

    let empty_here = SeModel::new(LiteralSet::new(), LiteralSet::of(["p", "q"])).unwrap();
    assert!(!is_se_model(&empty_here, &disj));
    let even = parse_nested("p :- not q. q :- not p.").unwrap();
    assert!(is_se_model(&empty_here, &even));
    println!("{empty_here} is an SE-model of the even loop only");
}
