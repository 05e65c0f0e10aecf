// SPDX-License-Identifier: Apache-2.0

//! Seeded generators of small programs for property tests and self-checks.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::literal::{Atom, Literal};
use crate::nested::{Formula, NestedProgram, Rule};
use crate::wcp::{Bound, Rational, RuleElement, WcpProgram, WcpRule, WeightConstraint};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `p, q, r, ...`, then `x8, x9, ...`.
pub fn atom_names(count: usize) -> Vec<Atom> {
    const NAMES: [&str; 8] = ["p", "q", "r", "s", "t", "u", "v", "w"];
    (0..count)
        .map(|i| match NAMES.get(i) {
            Some(name) => Atom::new(name),
            None => Atom::new(format!("x{i}")),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NestedShape {
    /// Arbitrary nesting, classical negation included.
    General,
    /// Arbitrary nesting without classical negation.
    NegationFree,
    /// Heads elementary or a negated elementary formula.
    Nondisjunctive,
    /// Literal or `bot` heads, bodies conjunctions of literals and
    /// `not`-literals; expressible in both languages.
    Overlap,
}

#[derive(Clone, Copy, Debug)]
pub struct NestedParams {
    pub atoms: usize,
    pub max_rules: usize,
    pub max_depth: usize,
    pub shape: NestedShape,
}

impl NestedParams {
    pub fn new(atoms: usize, max_rules: usize, shape: NestedShape) -> Self {
        NestedParams {
            atoms,
            max_rules,
            max_depth: 3,
            shape,
        }
    }
}

fn literal(rng: &mut StdRng, atoms: &[Atom], classical: bool) -> Literal {
    let atom = atoms.choose(rng).expect("nonempty signature").clone();
    if classical && rng.gen_bool(0.25) {
        Literal::negative(atom)
    } else {
        Literal::positive(atom)
    }
}

fn formula(rng: &mut StdRng, atoms: &[Atom], depth: usize, classical: bool) -> Formula {
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..12) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::Literal(literal(rng, atoms, classical)),
        };
    }
    match rng.gen_range(0..3) {
        0 => Formula::not(formula(rng, atoms, depth - 1, classical)),
        1 => Formula::and(
            formula(rng, atoms, depth - 1, classical),
            formula(rng, atoms, depth - 1, classical),
        ),
        _ => Formula::or(
            formula(rng, atoms, depth - 1, classical),
            formula(rng, atoms, depth - 1, classical),
        ),
    }
}

fn overlap_body(rng: &mut StdRng, atoms: &[Atom]) -> Formula {
    let items = (0..rng.gen_range(0..=3)).map(|_| {
        let l = Formula::Literal(literal(rng, atoms, false));
        if rng.gen_bool(0.4) {
            Formula::not(l)
        } else {
            l
        }
    });
    Formula::conjunction(items.collect::<Vec<_>>())
}

pub fn nested_rule(rng: &mut StdRng, atoms: &[Atom], params: &NestedParams) -> Rule {
    let depth = params.max_depth;
    match params.shape {
        NestedShape::General | NestedShape::NegationFree => {
            let classical = params.shape == NestedShape::General;
            let body = if rng.gen_bool(0.25) {
                Formula::Top
            } else {
                formula(rng, atoms, depth, classical)
            };
            Rule::new(
                formula(rng, atoms, depth.saturating_sub(1), classical),
                body,
            )
        }
        NestedShape::Nondisjunctive => {
            let elementary = match rng.gen_range(0..8) {
                0 => Formula::Bottom,
                1 => Formula::Top,
                _ => Formula::Literal(literal(rng, atoms, false)),
            };
            let head = if rng.gen_bool(0.3) {
                Formula::not(elementary)
            } else {
                elementary
            };
            Rule::new(head, formula(rng, atoms, depth, false))
        }
        NestedShape::Overlap => {
            let head = if rng.gen_bool(0.15) {
                Formula::Bottom
            } else {
                Formula::Literal(literal(rng, atoms, false))
            };
            Rule::new(head, overlap_body(rng, atoms))
        }
    }
}

/// A program over the first `params.atoms` names with up to
/// `params.max_rules` rules, extended to that whole signature.
pub fn nested_program(rng: &mut StdRng, params: &NestedParams) -> NestedProgram {
    let atoms = atom_names(params.atoms);
    let count = rng.gen_range(0..=params.max_rules);
    let rules = (0..count)
        .map(|_| nested_rule(rng, &atoms, params))
        .collect();
    NestedProgram::new(rules).with_atoms(atoms)
}

/// A second program close to `program`: one rule dropped, replaced, added
/// or duplicated. Close pairs are strongly equivalent more often than
/// independent ones.
pub fn mutate_nested(
    rng: &mut StdRng,
    program: &NestedProgram,
    params: &NestedParams,
) -> NestedProgram {
    let atoms: Vec<Atom> = program.signature().iter().cloned().collect();
    let mut rules = program.rules().to_vec();
    match rng.gen_range(0..4) {
        0 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules.remove(i);
        }
        1 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules[i] = nested_rule(rng, &atoms, params);
        }
        2 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules.push(rules[i].clone());
        }
        _ => rules.push(nested_rule(rng, &atoms, params)),
    }
    NestedProgram::new(rules).with_atoms(atoms)
}

#[derive(Clone, Copy, Debug)]
pub struct WcpParams {
    pub atoms: usize,
    pub max_rules: usize,
    pub max_elements: usize,
    pub max_body: usize,
    /// Allow `not` elements in bodies.
    pub default_negation: bool,
    /// Allow classically negated literals.
    pub classical_negation: bool,
}

impl WcpParams {
    pub fn new(atoms: usize, max_rules: usize) -> Self {
        WcpParams {
            atoms,
            max_rules,
            max_elements: 3,
            max_body: 2,
            default_negation: true,
            classical_negation: false,
        }
    }
}

fn weight(rng: &mut StdRng) -> Rational {
    match rng.gen_range(0..6) {
        0 => Rational::new(1, 2),
        1 => Rational::from_integer(2),
        2 => Rational::new(3, 2),
        _ => Rational::from_integer(1),
    }
}

fn bound(rng: &mut StdRng, infinite: Bound, missing: f64) -> Bound {
    if rng.gen_bool(missing) {
        infinite
    } else {
        Bound::Finite(Rational::new(rng.gen_range(0..=6), 2))
    }
}

fn constraint(
    rng: &mut StdRng,
    atoms: &[Atom],
    params: &WcpParams,
    head: bool,
) -> WeightConstraint {
    if rng.gen_bool(0.45) {
        let negative = !head && params.default_negation && rng.gen_bool(0.35);
        let l = literal(rng, atoms, params.classical_negation);
        return WeightConstraint::singleton(if negative {
            RuleElement::neg(l)
        } else {
            RuleElement::pos(l)
        });
    }
    let count = rng.gen_range(0..=params.max_elements);
    let elements: Vec<(RuleElement, Rational)> = (0..count)
        .map(|_| {
            let l = literal(rng, atoms, params.classical_negation);
            let negative = !head && params.default_negation && rng.gen_bool(0.35);
            let e = if negative {
                RuleElement::neg(l)
            } else {
                RuleElement::pos(l)
            };
            (e, weight(rng))
        })
        .collect();
    let lower = bound(rng, Bound::NegInf, 0.2);
    let upper = bound(rng, Bound::PosInf, 0.6);
    WeightConstraint::new(lower, upper, elements).expect("nonnegative weights")
}

pub fn wcp_rule(rng: &mut StdRng, atoms: &[Atom], params: &WcpParams) -> WcpRule {
    let head = if rng.gen_bool(0.1) {
        WeightConstraint::bottom()
    } else {
        constraint(rng, atoms, params, true)
    };
    let body = (0..rng.gen_range(0..=params.max_body))
        .map(|_| constraint(rng, atoms, params, false))
        .collect();
    WcpRule::new(head, body).expect("positive head elements")
}

pub fn wcp_program(rng: &mut StdRng, params: &WcpParams) -> WcpProgram {
    let atoms = atom_names(params.atoms);
    let count = rng.gen_range(0..=params.max_rules);
    let rules = (0..count).map(|_| wcp_rule(rng, &atoms, params)).collect();
    WcpProgram::new(rules).with_atoms(atoms)
}

pub fn mutate_wcp(rng: &mut StdRng, program: &WcpProgram, params: &WcpParams) -> WcpProgram {
    let atoms: Vec<Atom> = program.signature().iter().cloned().collect();
    let mut rules = program.rules().to_vec();
    match rng.gen_range(0..4) {
        0 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules.remove(i);
        }
        1 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules[i] = wcp_rule(rng, &atoms, params);
        }
        2 if !rules.is_empty() => {
            let i = rng.gen_range(0..rules.len());
            rules.push(rules[i].clone());
        }
        _ => rules.push(wcp_rule(rng, &atoms, params)),
    }
    WcpProgram::new(rules).with_atoms(atoms)
}
