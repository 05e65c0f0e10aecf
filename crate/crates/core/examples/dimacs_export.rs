// SPDX-License-Identifier: Apache-2.0

//! CNF export of the formula that is satisfiable iff two programs are not
//! strongly equivalent, for use with an external SAT solver.

use strongeq::encodings::dimacs::tseitin;
use strongeq::encodings::pl::pl_program;
use strongeq::encodings::prop::PropFormula;
use strongeq::equivalence::joint;
use strongeq::parse::parse_nested;

pub fn main() {
    let (p, q) = joint(
        &parse_nested("p ; q.").unwrap(),
        &parse_nested("p :- not q. q :- not p.").unwrap(),
    );
    let formula = PropFormula::xor(pl_program(&p).unwrap(), pl_program(&q).unwrap());
    let cnf = tseitin(&formula);
    print!("{}", cnf.to_dimacs());
    println!("c --- sidecar ---");
    for line in cnf.sidecar().lines().take(4) {
        println!("c {line}");
    }
    assert_eq!(cnf.atoms.len(), 4);
}
