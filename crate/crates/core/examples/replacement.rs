// SPDX-License-Identifier: Apache-2.0

//! Replacing a subformula by one equivalent relative to the rest of the
//! program preserves strong equivalence.

use strongeq::equivalence::{formula_equiv_relative, replace_regular, strongly_equivalent_direct};
use strongeq::parse::{parse_formula, parse_nested};
use strongeq::Limits;

pub fn main() {
    let limits = Limits::default();
    let program = parse_nested("p ; q. :- p, q. r :- not p.").unwrap();
    let f = parse_formula("not p").unwrap();
    let g = parse_formula("q").unwrap();

    // relative to `p ; q. :- p, q.`, `not p` and `q` are interchangeable
    let context = parse_nested("p ; q. :- p, q.").unwrap();
    assert!(formula_equiv_relative(&context, &f, &g, &limits).unwrap());

    let replaced = replace_regular(&program, &f, &g);
    println!("{replaced}");
    assert!(
        strongly_equivalent_direct(&program, &replaced, &limits)
            .unwrap()
            .equivalent
    );

    // outside that context the replacement changes the program
    let bare = parse_nested("r :- not p.").unwrap();
    assert!(!formula_equiv_relative(&bare, &f, &g, &limits).unwrap());
    let replaced = replace_regular(&bare, &f, &g);
    assert!(
        !strongly_equivalent_direct(&bare, &replaced, &limits)
            .unwrap()
            .equivalent
    );
    println!("{replaced}is not a safe rewrite of\n{bare}");
}
