// SPDX-License-Identifier: Apache-2.0

//! DIMACS CNF export through the Tseitin transformation.
//!
//! Variables `1..=n` are the formula's atoms in sorted order; every other
//! distinct subformula gets one auxiliary variable, equivalent to it. The
//! root variable is asserted by a unit clause, so the CNF is satisfiable
//! iff the formula is, and models project onto the formula's models.

use std::collections::HashMap;
use std::fmt::Write;

use crate::encodings::prop::PropFormula;
use crate::literal::Atom;

#[derive(Clone, Debug)]
pub struct Cnf {
    pub atoms: Vec<Atom>,
    /// Auxiliary variables with the subformula each one names.
    pub aux: Vec<(usize, PropFormula)>,
    pub clauses: Vec<Vec<i64>>,
}

impl Cnf {
    pub fn num_vars(&self) -> usize {
        self.atoms.len() + self.aux.len()
    }

    /// DIMACS text; comment lines name the atom variables.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (i, atom) in self.atoms.iter().enumerate() {
            writeln!(out, "c {} {}", i + 1, atom).unwrap();
        }
        writeln!(out, "p cnf {} {}", self.num_vars(), self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ").unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// One `aux original-subformula` line per auxiliary variable.
    pub fn sidecar(&self) -> String {
        let mut out = String::new();
        for (var, formula) in &self.aux {
            writeln!(out, "{var} {formula}").unwrap();
        }
        out
    }
}

struct Tseitin {
    atoms: Vec<Atom>,
    aux: Vec<(usize, PropFormula)>,
    names: HashMap<PropFormula, usize>,
    clauses: Vec<Vec<i64>>,
}

impl Tseitin {
    fn var(&mut self, f: &PropFormula) -> i64 {
        if let PropFormula::Atom(a) = f {
            return self.atoms.binary_search(a).expect("atom collected") as i64 + 1;
        }
        if let Some(v) = self.names.get(f) {
            return *v as i64;
        }
        let children: Vec<i64> = match f {
            PropFormula::Neg(g) => vec![self.var(g)],
            PropFormula::Conj(l, r)
            | PropFormula::Disj(l, r)
            | PropFormula::Impl(l, r)
            | PropFormula::Equiv(l, r) => {
                vec![self.var(l), self.var(r)]
            }
            _ => vec![],
        };
        let x = (self.atoms.len() + self.aux.len() + 1) as i64;
        self.aux.push((x as usize, f.clone()));
        self.names.insert(f.clone(), x as usize);
        let c = &mut self.clauses;
        match (f, children.as_slice()) {
            (PropFormula::Top, _) => c.push(vec![x]),
            (PropFormula::Bottom, _) => c.push(vec![-x]),
            (PropFormula::Neg(_), &[g]) => {
                c.push(vec![-x, -g]);
                c.push(vec![x, g]);
            }
            (PropFormula::Conj(..), &[a, b]) => {
                c.push(vec![-x, a]);
                c.push(vec![-x, b]);
                c.push(vec![x, -a, -b]);
            }
            (PropFormula::Disj(..), &[a, b]) => {
                c.push(vec![-x, a, b]);
                c.push(vec![x, -a]);
                c.push(vec![x, -b]);
            }
            (PropFormula::Impl(..), &[a, b]) => {
                c.push(vec![-x, -a, b]);
                c.push(vec![x, a]);
                c.push(vec![x, -b]);
            }
            (PropFormula::Equiv(..), &[a, b]) => {
                c.push(vec![-x, -a, b]);
                c.push(vec![-x, a, -b]);
                c.push(vec![x, a, b]);
                c.push(vec![x, -a, -b]);
            }
            _ => unreachable!("arity matches connective"),
        }
        x
    }
}

pub fn tseitin(formula: &PropFormula) -> Cnf {
    let mut t = Tseitin {
        atoms: formula.atoms().into_iter().collect(),
        aux: Vec::new(),
        names: HashMap::new(),
        clauses: Vec::new(),
    };
    let root = t.var(formula);
    t.clauses.push(vec![root]);
    Cnf {
        atoms: t.atoms,
        aux: t.aux,
        clauses: t.clauses,
    }
}
