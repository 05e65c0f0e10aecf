// SPDX-License-Identifier: Apache-2.0

//! Classical propositional formulas and a small satisfiability kernel.

use std::collections::BTreeSet;
use std::fmt;

use crate::equivalence::SeModel;
use crate::error::{Error, Result};
use crate::literal::{Atom, Literal, LiteralSet};
use crate::Limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropFormula {
    Atom(Atom),
    Top,
    Bottom,
    Neg(Box<PropFormula>),
    Conj(Box<PropFormula>, Box<PropFormula>),
    Disj(Box<PropFormula>, Box<PropFormula>),
    Impl(Box<PropFormula>, Box<PropFormula>),
    Equiv(Box<PropFormula>, Box<PropFormula>),
}

impl PropFormula {
    pub fn atom(atom: impl Into<Atom>) -> Self {
        PropFormula::Atom(atom.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: PropFormula) -> Self {
        PropFormula::Neg(Box::new(f))
    }

    pub fn conj(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Conj(Box::new(f), Box::new(g))
    }

    pub fn disj(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Disj(Box::new(f), Box::new(g))
    }

    pub fn implies(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Impl(Box::new(f), Box::new(g))
    }

    pub fn equiv(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::Equiv(Box::new(f), Box::new(g))
    }

    /// `(f ∧ ¬g) ∨ (¬f ∧ g)`.
    pub fn xor(f: PropFormula, g: PropFormula) -> Self {
        PropFormula::disj(
            PropFormula::conj(f.clone(), PropFormula::neg(g.clone())),
            PropFormula::conj(PropFormula::neg(f), g),
        )
    }

    /// Right-folded conjunction; empty is `⊤`.
    pub fn conjunction(items: impl IntoIterator<Item = PropFormula>) -> Self {
        let mut items: Vec<PropFormula> = items.into_iter().collect();
        let Some(mut acc) = items.pop() else {
            return PropFormula::Top;
        };
        while let Some(f) = items.pop() {
            acc = PropFormula::conj(f, acc);
        }
        acc
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            PropFormula::Atom(a) => {
                out.insert(a.clone());
            }
            PropFormula::Top | PropFormula::Bottom => {}
            PropFormula::Neg(f) => f.collect_atoms(out),
            PropFormula::Conj(f, g)
            | PropFormula::Disj(f, g)
            | PropFormula::Impl(f, g)
            | PropFormula::Equiv(f, g) => {
                f.collect_atoms(out);
                g.collect_atoms(out);
            }
        }
    }

    /// Truth under the interpretation that makes exactly `true_atoms` true.
    pub fn eval(&self, true_atoms: &BTreeSet<Atom>) -> bool {
        match self {
            PropFormula::Atom(a) => true_atoms.contains(a),
            PropFormula::Top => true,
            PropFormula::Bottom => false,
            PropFormula::Neg(f) => !f.eval(true_atoms),
            PropFormula::Conj(f, g) => f.eval(true_atoms) && g.eval(true_atoms),
            PropFormula::Disj(f, g) => f.eval(true_atoms) || g.eval(true_atoms),
            PropFormula::Impl(f, g) => !f.eval(true_atoms) || g.eval(true_atoms),
            PropFormula::Equiv(f, g) => f.eval(true_atoms) == g.eval(true_atoms),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            PropFormula::Equiv(..) => 1,
            PropFormula::Impl(..) => 2,
            PropFormula::Disj(..) => 3,
            PropFormula::Conj(..) => 4,
            _ => 5,
        }
    }
}

impl fmt::Display for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // every binary child of a binary node is parenthesised unless it
        // binds strictly tighter
        let child = |f: &mut fmt::Formatter<'_>, c: &PropFormula, parent: u8| {
            if c.precedence() <= parent {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        };
        let binary = |f: &mut fmt::Formatter<'_>, l: &PropFormula, op: &str, r: &PropFormula| {
            let p = self.precedence();
            child(f, l, p)?;
            write!(f, " {op} ")?;
            child(f, r, p)
        };
        match self {
            PropFormula::Atom(a) => write!(f, "{a}"),
            PropFormula::Top => f.write_str("true"),
            PropFormula::Bottom => f.write_str("false"),
            PropFormula::Neg(g) => {
                f.write_str("~")?;
                child(f, g, 4)
            }
            PropFormula::Conj(l, r) => binary(f, l, "&", r),
            PropFormula::Disj(l, r) => binary(f, l, "|", r),
            PropFormula::Impl(l, r) => binary(f, l, "->", r),
            PropFormula::Equiv(l, r) => binary(f, l, "<->", r),
        }
    }
}

impl fmt::Debug for PropFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A model over the doubled signature, as the set of its true atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AugmentedInterp {
    pub true_atoms: BTreeSet<Atom>,
}

impl AugmentedInterp {
    /// `(I_new, I_old)`: atoms with a true twin, and true original atoms.
    pub fn decode(&self) -> Result<SeModel> {
        let literals: Vec<Literal> = self
            .true_atoms
            .iter()
            .cloned()
            .map(Literal::positive)
            .collect();
        super::decode_pair(&literals)
    }

    pub fn as_literal_set(&self) -> LiteralSet {
        LiteralSet::of(self.true_atoms.iter().cloned().map(Literal::positive))
    }
}

/// Index-based copy of a formula for fast partial evaluation.
enum Node {
    Var(usize),
    Const(bool),
    Neg(Box<Node>),
    Conj(Box<Node>, Box<Node>),
    Disj(Box<Node>, Box<Node>),
    Impl(Box<Node>, Box<Node>),
    Equiv(Box<Node>, Box<Node>),
}

impl Node {
    fn compile(f: &PropFormula, vars: &[Atom]) -> Node {
        let bin = |l: &PropFormula, r: &PropFormula| {
            (
                Box::new(Node::compile(l, vars)),
                Box::new(Node::compile(r, vars)),
            )
        };
        match f {
            PropFormula::Atom(a) => Node::Var(vars.binary_search(a).expect("atom collected")),
            PropFormula::Top => Node::Const(true),
            PropFormula::Bottom => Node::Const(false),
            PropFormula::Neg(g) => Node::Neg(Box::new(Node::compile(g, vars))),
            PropFormula::Conj(l, r) => {
                let (l, r) = bin(l, r);
                Node::Conj(l, r)
            }
            PropFormula::Disj(l, r) => {
                let (l, r) = bin(l, r);
                Node::Disj(l, r)
            }
            PropFormula::Impl(l, r) => {
                let (l, r) = bin(l, r);
                Node::Impl(l, r)
            }
            PropFormula::Equiv(l, r) => {
                let (l, r) = bin(l, r);
                Node::Equiv(l, r)
            }
        }
    }

    /// Kleene three-valued evaluation; `None` is undetermined.
    fn eval(&self, assign: &[Option<bool>]) -> Option<bool> {
        match self {
            Node::Var(v) => assign[*v],
            Node::Const(b) => Some(*b),
            Node::Neg(f) => f.eval(assign).map(|b| !b),
            Node::Conj(l, r) => match (l.eval(assign), r.eval(assign)) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
            Node::Disj(l, r) => match (l.eval(assign), r.eval(assign)) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            },
            Node::Impl(l, r) => match (l.eval(assign), r.eval(assign)) {
                (Some(false), _) | (_, Some(true)) => Some(true),
                (Some(true), Some(false)) => Some(false),
                _ => None,
            },
            Node::Equiv(l, r) => Some(l.eval(assign)? == r.eval(assign)?),
        }
    }
}

struct Kernel {
    vars: Vec<Atom>,
    root: Node,
}

impl Kernel {
    fn new(formula: &PropFormula, limits: &Limits) -> Result<Self> {
        let vars: Vec<Atom> = formula.atoms().into_iter().collect();
        if vars.len() > limits.max_prop_atoms {
            return Err(Error::TooManyAtoms {
                atoms: vars.len(),
                cap: limits.max_prop_atoms,
            });
        }
        let root = Node::compile(formula, &vars);
        Ok(Kernel { vars, root })
    }

    /// Models in lexicographic order of the assignment vector, false before
    /// true. Undetermined atoms at a satisfied node are still branched on.
    fn search(
        &self,
        assign: &mut Vec<Option<bool>>,
        depth: usize,
        emit: &mut dyn FnMut(&[Option<bool>]) -> bool,
    ) -> bool {
        match self.root.eval(assign) {
            Some(false) => return true,
            Some(true) if depth == self.vars.len() => return emit(assign),
            _ => {}
        }
        for value in [false, true] {
            assign[depth] = Some(value);
            if !self.search(assign, depth + 1, emit) {
                assign[depth] = None;
                return false;
            }
        }
        assign[depth] = None;
        true
    }

    fn interp(&self, assign: &[Option<bool>]) -> AugmentedInterp {
        AugmentedInterp {
            true_atoms: self
                .vars
                .iter()
                .zip(assign)
                .filter(|(_, v)| **v == Some(true))
                .map(|(a, _)| a.clone())
                .collect(),
        }
    }
}

/// Every model of `formula`, restricted to its own atoms, in a fixed order.
pub fn prop_models(formula: &PropFormula, limits: &Limits) -> Result<Vec<AugmentedInterp>> {
    let kernel = Kernel::new(formula, limits)?;
    let mut out = Vec::new();
    let mut assign = vec![None; kernel.vars.len()];
    kernel.search(&mut assign, 0, &mut |a| {
        out.push(kernel.interp(a));
        true
    });
    Ok(out)
}

/// The first model in the order of [`prop_models`].
pub fn first_model(formula: &PropFormula, limits: &Limits) -> Result<Option<AugmentedInterp>> {
    let kernel = Kernel::new(formula, limits)?;
    let mut found = None;
    let mut assign = vec![None; kernel.vars.len()];
    kernel.search(&mut assign, 0, &mut |a| {
        found = Some(kernel.interp(a));
        false
    });
    Ok(found)
}

pub fn satisfiable(formula: &PropFormula, limits: &Limits) -> Result<bool> {
    Ok(first_model(formula, limits)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(name: &str) -> PropFormula {
        PropFormula::atom(name)
    }

    fn truth_table(f: &PropFormula) -> Vec<BTreeSet<Atom>> {
        let atoms: Vec<Atom> = f.atoms().into_iter().collect();
        let mut out: Vec<BTreeSet<Atom>> = (0u32..1 << atoms.len())
            .map(|mask| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, a)| a.clone())
                    .collect()
            })
            .filter(|set| f.eval(set))
            .collect();
        out.sort();
        out
    }

    fn kernel_models(f: &PropFormula) -> Vec<BTreeSet<Atom>> {
        let mut out: Vec<BTreeSet<Atom>> = prop_models(f, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|i| i.true_atoms)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn contradiction_has_no_models() {
        assert!(kernel_models(&PropFormula::conj(a("p"), PropFormula::neg(a("p")))).is_empty());
    }

    #[test]
    fn prime_implication_models() {
        let f = PropFormula::implies(a("p__prime"), a("p"));
        let models: Vec<String> = prop_models(&f, &Limits::default())
            .unwrap()
            .iter()
            .map(|i| i.as_literal_set().to_string())
            .collect();
        assert_eq!(models, ["{}", "{p}", "{p, p__prime}"]);
    }

    #[test]
    fn top_has_the_empty_model() {
        assert_eq!(kernel_models(&PropFormula::Top), vec![BTreeSet::new()]);
        assert!(kernel_models(&PropFormula::Bottom).is_empty());
    }

    #[test]
    fn agrees_with_truth_table() {
        let formulas = [
            PropFormula::xor(a("p"), PropFormula::disj(a("q"), a("r"))),
            PropFormula::equiv(
                PropFormula::implies(a("p"), a("q")),
                PropFormula::neg(a("r")),
            ),
            PropFormula::conjunction([
                a("p"),
                PropFormula::disj(a("q"), PropFormula::neg(a("p"))),
                a("s"),
            ]),
        ];
        for f in &formulas {
            assert_eq!(kernel_models(f), truth_table(f), "{f}");
        }
    }

    #[test]
    fn atom_cap() {
        let f = PropFormula::conjunction((0..25).map(|i| a(&format!("x{i}"))));
        assert!(matches!(
            prop_models(&f, &Limits::default()),
            Err(Error::TooManyAtoms { atoms: 25, cap: 24 })
        ));
    }

    #[test]
    fn display() {
        let f = PropFormula::implies(
            PropFormula::conj(
                PropFormula::neg(a("q")),
                PropFormula::disj(a("p"), PropFormula::Top),
            ),
            PropFormula::neg(PropFormula::conj(a("p"), a("q"))),
        );
        assert_eq!(f.to_string(), "~q & (p | true) -> ~(p & q)");
    }

    #[test]
    fn decode() {
        let i = AugmentedInterp {
            true_atoms: [Atom::new("p"), Atom::new("q"), Atom::new("q__prime")].into(),
        };
        assert_eq!(i.decode().unwrap().to_string(), "({q}, {p, q})");
    }
}
