// SPDX-License-Identifier: Apache-2.0

//! Nested logic programs: formulas built from literals, `top`, `bot`, `not`,
//! conjunction and disjunction; rules `F <- G`; satisfaction, the reduct and
//! brute-force answer sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::literal::{consistent_sets_from, Atom, Literal, LiteralSet};
use crate::Limits;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Literal(Literal),
    Top,
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn lit(literal: impl Into<Literal>) -> Formula {
        Formula::Literal(literal.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: Formula) -> Formula {
        Formula::Not(Box::new(inner))
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    /// Right-folded conjunction; `top` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Formula {
        fold_right(items.into_iter().collect(), Formula::and).unwrap_or(Formula::Top)
    }

    /// Right-folded disjunction; `bot` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Formula {
        fold_right(items.into_iter().collect(), Formula::or).unwrap_or(Formula::Bottom)
    }

    pub fn is_elementary(&self) -> bool {
        matches!(self, Formula::Literal(_) | Formula::Top | Formula::Bottom)
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        match self {
            Formula::Literal(l) => x.contains(l),
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Not(g) => !g.satisfied_by(x),
            Formula::And(f, g) => f.satisfied_by(x) && g.satisfied_by(x),
            Formula::Or(f, g) => f.satisfied_by(x) || g.satisfied_by(x),
        }
    }

    /// `F^X`: each maximal `not G` becomes `bot` when `X ⊨ G`, else `top`.
    /// Descent stops at the first `not` on every path, so only maximal
    /// occurrences are ever evaluated.
    pub fn reduct(&self, x: &LiteralSet) -> Formula {
        match self {
            Formula::Not(g) => {
                if g.satisfied_by(x) {
                    Formula::Bottom
                } else {
                    Formula::Top
                }
            }
            Formula::And(f, g) => Formula::and(f.reduct(x), g.reduct(x)),
            Formula::Or(f, g) => Formula::or(f.reduct(x), g.reduct(x)),
            elementary => elementary.clone(),
        }
    }

    pub fn contains_not(&self) -> bool {
        match self {
            Formula::Not(_) => true,
            Formula::And(f, g) | Formula::Or(f, g) => f.contains_not() || g.contains_not(),
            _ => false,
        }
    }

    pub fn is_negation_free(&self) -> bool {
        self.literals().iter().all(|l| !l.is_negated())
    }

    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        self.collect_literals(&mut out);
        out
    }

    fn collect_literals(&self, out: &mut BTreeSet<Literal>) {
        match self {
            Formula::Literal(l) => {
                out.insert(l.clone());
            }
            Formula::Not(g) => g.collect_literals(out),
            Formula::And(f, g) | Formula::Or(f, g) => {
                f.collect_literals(out);
                g.collect_literals(out);
            }
            Formula::Top | Formula::Bottom => {}
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.literals()
            .into_iter()
            .map(|l| l.atom().clone())
            .collect()
    }

    /// Replaces every occurrence of `from` by `to`, outside-in, without
    /// revisiting replaced material. Matching is syntactic, so an atom `p`
    /// never matches inside the literal `-p`.
    pub fn replace(&self, from: &Formula, to: &Formula) -> Formula {
        if self == from {
            return to.clone();
        }
        match self {
            Formula::Not(g) => Formula::not(g.replace(from, to)),
            Formula::And(f, g) => Formula::and(f.replace(from, to), g.replace(from, to)),
            Formula::Or(f, g) => Formula::or(f.replace(from, to), g.replace(from, to)),
            elementary => elementary.clone(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: u8) -> fmt::Result {
        let (own, open) = match self {
            Formula::Or(..) => (1, prec > 1),
            Formula::And(..) => (2, prec > 2),
            _ => (3, false),
        };
        if open {
            f.write_str("(")?;
        }
        match self {
            Formula::Literal(l) => write!(f, "{l}")?,
            Formula::Top => f.write_str("top")?,
            Formula::Bottom => f.write_str("bot")?,
            Formula::Not(g) => {
                f.write_str("not ")?;
                g.fmt_prec(f, 3)?;
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, own + 1)?;
                f.write_str(", ")?;
                r.fmt_prec(f, own)?;
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, own + 1)?;
                f.write_str(" ; ")?;
                r.fmt_prec(f, own)?;
            }
        }
        if open {
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn fold_right(mut items: Vec<Formula>, join: fn(Formula, Formula) -> Formula) -> Option<Formula> {
    let mut acc = items.pop()?;
    while let Some(item) = items.pop() {
        acc = join(item, acc);
    }
    Some(acc)
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 1)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `head <- body`. A bare formula `F` is the rule `F <- top`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rule {
    pub head: Formula,
    pub body: Formula,
}

impl Rule {
    pub fn new(head: Formula, body: Formula) -> Self {
        Rule { head, body }
    }

    pub fn fact(head: Formula) -> Self {
        Rule::new(head, Formula::Top)
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        !self.body.satisfied_by(x) || self.head.satisfied_by(x)
    }

    pub fn reduct(&self, x: &LiteralSet) -> Rule {
        Rule::new(self.head.reduct(x), self.body.reduct(x))
    }

    /// Head is elementary, possibly under a single `not`.
    pub fn is_nondisjunctive(&self) -> bool {
        match &self.head {
            Formula::Not(inner) => inner.is_elementary(),
            head => head.is_elementary(),
        }
    }

    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = self.head.literals();
        out.extend(self.body.literals());
        out
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.head, &self.body) {
            (head, Formula::Top) => write!(f, "{head}."),
            (Formula::Bottom, body) => write!(f, ":- {body}."),
            (head, body) => write!(f, "{head} :- {body}."),
        }
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An ordered collection of rules over an explicit signature that contains
/// at least every atom occurring in the rules.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NestedProgram {
    rules: Vec<Rule>,
    signature: BTreeSet<Atom>,
}

impl NestedProgram {
    pub fn new(rules: Vec<Rule>) -> Self {
        let signature = rules
            .iter()
            .flat_map(|r| r.literals())
            .map(|l| l.atom().clone())
            .collect();
        NestedProgram { rules, signature }
    }

    /// Adds `atoms` to the signature.
    pub fn with_atoms(mut self, atoms: impl IntoIterator<Item = Atom>) -> Self {
        self.signature.extend(atoms);
        self
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn signature(&self) -> &BTreeSet<Atom> {
        &self.signature
    }

    pub fn is_nondisjunctive(&self) -> bool {
        self.rules.iter().all(Rule::is_nondisjunctive)
    }

    pub fn is_negation_free(&self) -> bool {
        self.rules
            .iter()
            .all(|r| r.head.is_negation_free() && r.body.is_negation_free())
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        self.rules.iter().all(|r| r.satisfied_by(x))
    }

    pub fn reduct(&self, x: &LiteralSet) -> NestedProgram {
        NestedProgram {
            rules: self.rules.iter().map(|r| r.reduct(x)).collect(),
            signature: self.signature.clone(),
        }
    }

    pub fn union(&self, other: &NestedProgram) -> NestedProgram {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        let mut signature = self.signature.clone();
        signature.extend(other.signature.iter().cloned());
        NestedProgram { rules, signature }
    }

    /// Literals occurring anywhere in a rule head.
    pub fn head_literals(&self) -> BTreeSet<Literal> {
        self.rules.iter().flat_map(|r| r.head.literals()).collect()
    }

    /// Answer sets by exhaustive enumeration, sorted.
    ///
    /// A literal that occurs in no head never belongs to an answer set
    /// (dropping it keeps the reduct satisfied), so candidates range over
    /// consistent sets of head literals; each candidate is then checked
    /// against every proper subset.
    pub fn answer_sets(&self, limits: &Limits) -> Result<Vec<LiteralSet>> {
        let cap = if self.is_negation_free() {
            limits.max_positive_atoms
        } else {
            limits.max_atoms
        };
        if self.signature.len() > cap {
            return Err(Error::SignatureTooLarge {
                atoms: self.signature.len(),
                cap,
            });
        }
        let mut found: Vec<LiteralSet> = consistent_sets_from(&self.head_literals())
            .filter(|x| self.is_answer_set(x))
            .collect();
        found.sort();
        Ok(found)
    }

    /// `X` is minimal among consistent sets satisfying `P^X`.
    pub fn is_answer_set(&self, x: &LiteralSet) -> bool {
        if !self.satisfied_by(x) {
            return false;
        }
        let reduct = self.reduct(x);
        !x.subsets()
            .any(|z| z.len() < x.len() && reduct.satisfied_by(&z))
    }
}

impl fmt::Display for NestedProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NestedProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "NestedProgram {{ {} }}",
            self.to_string().trim_end().replace('\n', " ")
        )
    }
}
