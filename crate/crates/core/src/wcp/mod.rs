// SPDX-License-Identifier: Apache-2.0

//! Weight constraint programs.
//!
//! A weight constraint `L <= {e1 = w1, ..., en = wn} <= U` is satisfied by
//! `X` when the total weight of the rule elements `X` satisfies lies within
//! the bounds. Weights and bounds are exact rationals.

mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::literal::{consistent_sets, Atom, Literal, LiteralSet};
use crate::nested::{Formula, NestedProgram, Rule};
use crate::Limits;

/// Exact rational used for weights, weight sums and bounds.
pub type Rational = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Positive,
    Negative,
}

/// A literal (positive element) or a literal under `not` (negative element).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleElement {
    pub literal: Literal,
    pub polarity: Polarity,
}

impl RuleElement {
    pub fn pos(literal: impl Into<Literal>) -> Self {
        RuleElement {
            literal: literal.into(),
            polarity: Polarity::Positive,
        }
    }

    pub fn neg(literal: impl Into<Literal>) -> Self {
        RuleElement {
            literal: literal.into(),
            polarity: Polarity::Negative,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.polarity == Polarity::Positive
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        match self.polarity {
            Polarity::Positive => x.contains(&self.literal),
            Polarity::Negative => !x.contains(&self.literal),
        }
    }

    fn map_atom(&self, f: impl FnOnce(&Atom) -> Atom) -> RuleElement {
        RuleElement {
            literal: self.literal.map_atom(f),
            polarity: self.polarity,
        }
    }
}

impl fmt::Display for RuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "{}", self.literal),
            Polarity::Negative => write!(f, "not {}", self.literal),
        }
    }
}

impl fmt::Debug for RuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bound of a weight constraint. Variant order gives `-inf < q < +inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn int(value: i128) -> Bound {
        Bound::Finite(Rational::from_integer(value))
    }

    /// `self <= value`
    pub fn at_most(&self, value: &Rational) -> bool {
        match self {
            Bound::NegInf => true,
            Bound::Finite(b) => b <= value,
            Bound::PosInf => false,
        }
    }

    /// `value <= self`
    pub fn at_least(&self, value: &Rational) -> bool {
        match self {
            Bound::NegInf => false,
            Bound::Finite(b) => value <= b,
            Bound::PosInf => true,
        }
    }

    fn minus(&self, amount: &Rational) -> Bound {
        match self {
            Bound::Finite(b) => Bound::Finite(b - amount),
            infinite => infinite.clone(),
        }
    }
}

/// `lower <= {element = weight, ...} <= upper` with unique elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightConstraint {
    pub lower: Bound,
    pub upper: Bound,
    elements: BTreeMap<RuleElement, Rational>,
}

impl WeightConstraint {
    /// Builds a constraint, summing the weights of repeated elements.
    pub fn new(
        lower: Bound,
        upper: Bound,
        assignments: impl IntoIterator<Item = (RuleElement, Rational)>,
    ) -> Result<Self> {
        let mut elements = BTreeMap::new();
        for (element, weight) in assignments {
            if weight < Rational::zero() {
                return Err(Error::NegativeWeight(weight.to_string()));
            }
            *elements.entry(element).or_insert_with(Rational::zero) += weight;
        }
        Ok(WeightConstraint {
            lower,
            upper,
            elements,
        })
    }

    /// Unit-weight constraint, for fixtures and generated rules.
    pub fn unit(
        lower: Bound,
        upper: Bound,
        elements: impl IntoIterator<Item = RuleElement>,
    ) -> Self {
        Self::new(
            lower,
            upper,
            elements.into_iter().map(|e| (e, Rational::one())),
        )
        .expect("unit weights are nonnegative")
    }

    /// `1 <= {e}`: the constraint a bare rule element stands for.
    pub fn singleton(element: RuleElement) -> Self {
        Self::unit(Bound::int(1), Bound::PosInf, [element])
    }

    /// `1 <= {}`, never satisfied.
    pub fn bottom() -> Self {
        Self::unit(Bound::int(1), Bound::PosInf, [])
    }

    /// `0 <= {a} <= 1`: makes `a` freely choosable.
    pub fn choice(atom: Atom) -> Self {
        Self::unit(
            Bound::int(0),
            Bound::int(1),
            [RuleElement::pos(Literal::positive(atom))],
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = (&RuleElement, &Rational)> + '_ {
        self.elements.iter()
    }

    pub fn is_bottom(&self) -> bool {
        self.elements.is_empty() && self.lower == Bound::int(1) && self.upper == Bound::PosInf
    }

    /// The element `e` when this constraint is exactly `1 <= {e = 1}`.
    pub fn as_singleton(&self) -> Option<&RuleElement> {
        if self.lower != Bound::int(1) || self.upper != Bound::PosInf || self.elements.len() != 1 {
            return None;
        }
        let (element, weight) = self.elements.iter().next()?;
        weight.is_one().then_some(element)
    }

    /// `v(S, X)`.
    pub fn weight_sum(&self, x: &LiteralSet) -> Rational {
        weight_sum(self.elements.iter(), x)
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        let v = self.weight_sum(x);
        self.lower.at_most(&v) && self.upper.at_least(&v)
    }

    /// `X ⊨ S <= U`, the upper half alone.
    pub fn upper_satisfied_by(&self, x: &LiteralSet) -> bool {
        self.upper.at_least(&self.weight_sum(x))
    }

    /// `L <= S`: the same constraint with the upper bound dropped.
    pub fn without_upper(&self) -> WeightConstraint {
        WeightConstraint {
            lower: self.lower.clone(),
            upper: Bound::PosInf,
            elements: self.elements.clone(),
        }
    }

    /// `S <= U`: the same constraint with the lower bound dropped.
    pub fn without_lower(&self) -> WeightConstraint {
        WeightConstraint {
            lower: Bound::NegInf,
            upper: self.upper.clone(),
            elements: self.elements.clone(),
        }
    }

    /// `(L <= S)^X = L^X <= S'` where `S'` keeps the positive elements and
    /// `L^X = L - v(S \ S', X)`. `L^X` is never clamped.
    pub fn lower_reduct(&self, x: &LiteralSet) -> Result<WeightConstraint> {
        if self.upper != Bound::PosInf {
            return Err(Error::UpperBoundPresent);
        }
        let negative_sum = weight_sum(self.elements.iter().filter(|(e, _)| !e.is_positive()), x);
        Ok(WeightConstraint {
            lower: self.lower.minus(&negative_sum),
            upper: Bound::PosInf,
            elements: self
                .elements
                .iter()
                .filter(|(e, _)| e.is_positive())
                .map(|(e, w)| (e.clone(), *w))
                .collect(),
        })
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.elements.keys().map(|e| &e.literal)
    }

    pub fn has_negative_element(&self) -> bool {
        self.elements.keys().any(|e| !e.is_positive())
    }

    /// Applies `f` to every positive element's atom.
    pub fn map_positive_atoms(&self, f: &impl Fn(&Atom) -> Atom) -> WeightConstraint {
        WeightConstraint {
            lower: self.lower.clone(),
            upper: self.upper.clone(),
            elements: self
                .elements
                .iter()
                .map(|(e, w)| {
                    let e = if e.is_positive() {
                        e.map_atom(f)
                    } else {
                        e.clone()
                    };
                    (e, *w)
                })
                .collect(),
        }
    }
}

/// `v(S, X)`: total weight of the assignments whose element `X` satisfies.
pub fn weight_sum<'a>(
    assignments: impl IntoIterator<Item = (&'a RuleElement, &'a Rational)>,
    x: &LiteralSet,
) -> Rational {
    assignments
        .into_iter()
        .filter(|(e, _)| e.satisfied_by(x))
        .fold(Rational::zero(), |acc, (_, w)| acc + w)
}

impl fmt::Display for WeightConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            return f.write_str("bot");
        }
        if let Some(element) = self.as_singleton() {
            return write!(f, "{element}");
        }
        if let Bound::Finite(l) = &self.lower {
            write!(f, "{l} ")?;
        }
        f.write_str("{")?;
        for (i, (element, weight)) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if weight.is_one() {
                write!(f, "{element}")?;
            } else {
                write!(f, "{element}={weight}")?;
            }
        }
        f.write_str("}")?;
        if let Bound::Finite(u) = &self.upper {
            write!(f, " {u}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeightConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `C0 <- C1, ..., Cn` whose head has no negative rule elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WcpRule {
    head: WeightConstraint,
    body: Vec<WeightConstraint>,
}

impl WcpRule {
    pub fn new(head: WeightConstraint, body: Vec<WeightConstraint>) -> Result<Self> {
        if let Some((e, _)) = head.elements().find(|(e, _)| !e.is_positive()) {
            return Err(Error::NegativeHeadElement(e.literal.to_string()));
        }
        Ok(WcpRule { head, body })
    }

    /// `e <- body` for a literal `e`.
    pub fn literal_rule(head: Literal, body: Vec<WeightConstraint>) -> Self {
        WcpRule {
            head: WeightConstraint::singleton(RuleElement::pos(head)),
            body,
        }
    }

    pub fn fact(head: WeightConstraint) -> Result<Self> {
        Self::new(head, Vec::new())
    }

    pub fn head(&self) -> &WeightConstraint {
        &self.head
    }

    pub fn body(&self) -> &[WeightConstraint] {
        &self.body
    }

    pub fn head_literals(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.head.literals()
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        !self.body.iter().all(|c| c.satisfied_by(x)) || self.head.satisfied_by(x)
    }

    /// The rules `e <- (L1 <= S1)^X, ..., (Ln <= Sn)^X`, one per head
    /// literal `e` with `X ⊨ e`, provided `X ⊨ Si <= Ui` for every body
    /// constraint.
    pub fn reduct(&self, x: &LiteralSet) -> Vec<WcpRule> {
        if !self.body.iter().all(|c| c.upper_satisfied_by(x)) {
            return Vec::new();
        }
        let body: Vec<WeightConstraint> = self
            .body
            .iter()
            .map(|c| {
                c.without_upper()
                    .lower_reduct(x)
                    .expect("upper bound dropped")
            })
            .collect();
        self.head
            .literals()
            .filter(|e| x.contains(e))
            .map(|e| WcpRule::literal_rule(e.clone(), body.clone()))
            .collect()
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.head
            .literals()
            .chain(self.body.iter().flat_map(|c| c.literals()))
    }

    /// Adds `constraint` to the end of the body.
    pub fn with_body_constraint(&self, constraint: WeightConstraint) -> WcpRule {
        let mut rule = self.clone();
        rule.body.push(constraint);
        rule
    }

    fn map_positive_atoms(&self, f: &impl Fn(&Atom) -> Atom) -> WcpRule {
        WcpRule {
            head: self.head.map_positive_atoms(f),
            body: self.body.iter().map(|c| c.map_positive_atoms(f)).collect(),
        }
    }
}

impl fmt::Display for WcpRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            return write!(f, "{}.", self.head);
        }
        if !self.head.is_bottom() {
            write!(f, "{} ", self.head)?;
        }
        f.write_str(":- ")?;
        for (i, c) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(".")
    }
}

impl fmt::Debug for WcpRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WcpProgram {
    rules: Vec<WcpRule>,
    signature: BTreeSet<Atom>,
}

impl WcpProgram {
    pub fn new(rules: Vec<WcpRule>) -> Self {
        let signature = rules
            .iter()
            .flat_map(|r| r.literals())
            .map(|l| l.atom().clone())
            .collect();
        WcpProgram { rules, signature }
    }

    pub fn with_atoms(mut self, atoms: impl IntoIterator<Item = Atom>) -> Self {
        self.signature.extend(atoms);
        self
    }

    pub fn rules(&self) -> &[WcpRule] {
        &self.rules
    }

    pub fn signature(&self) -> &BTreeSet<Atom> {
        &self.signature
    }

    pub fn is_negation_free(&self) -> bool {
        self.rules
            .iter()
            .flat_map(|r| r.literals())
            .all(|l| !l.is_negated())
    }

    pub fn satisfied_by(&self, x: &LiteralSet) -> bool {
        self.rules.iter().all(|r| r.satisfied_by(x))
    }

    /// `P^X`: the union of the rule reducts. Keeps the signature.
    pub fn reduct(&self, x: &LiteralSet) -> WcpProgram {
        WcpProgram {
            rules: self.rules.iter().flat_map(|r| r.reduct(x)).collect(),
            signature: self.signature.clone(),
        }
    }

    pub fn union(&self, other: &WcpProgram) -> WcpProgram {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        let mut signature = self.signature.clone();
        signature.extend(other.signature.iter().cloned());
        WcpProgram { rules, signature }
    }

    pub fn head_literals(&self) -> BTreeSet<Literal> {
        self.rules
            .iter()
            .flat_map(|r| r.head_literals())
            .cloned()
            .collect()
    }

    /// `X ⊨ P` and no proper subset of `X` satisfies `P^X`, checked
    /// literally against every proper subset.
    pub fn is_answer_set(&self, x: &LiteralSet) -> bool {
        if !self.satisfied_by(x) {
            return false;
        }
        let reduct = self.reduct(x);
        !x.subsets()
            .any(|z| z.len() < x.len() && reduct.satisfied_by(&z))
    }

    /// Answer sets found by backtracking search with propagation, sorted.
    pub fn answer_sets(&self, limits: &Limits) -> Result<Vec<LiteralSet>> {
        self.check_search_cap(limits)?;
        let mut found = search::Solver::new(self).all();
        found.sort();
        Ok(found)
    }

    /// The first answer set in search order, if any.
    pub fn first_answer_set(&self, limits: &Limits) -> Result<Option<LiteralSet>> {
        self.check_search_cap(limits)?;
        Ok(search::Solver::new(self).first())
    }

    /// Answer sets by enumerating every consistent set over the signature
    /// and testing the definition directly. Reference implementation for
    /// the search.
    pub fn answer_sets_exhaustive(&self, limits: &Limits) -> Result<Vec<LiteralSet>> {
        let positive = self.is_negation_free();
        let cap = if positive {
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
        let mut found: Vec<LiteralSet> = consistent_sets(&self.signature, positive)
            .filter(|x| self.is_answer_set(x))
            .collect();
        found.sort();
        Ok(found)
    }

    fn check_search_cap(&self, limits: &Limits) -> Result<()> {
        if self.signature.len() > limits.max_search_atoms {
            return Err(Error::SignatureTooLarge {
                atoms: self.signature.len(),
                cap: limits.max_search_atoms,
            });
        }
        Ok(())
    }

    /// `P'`: every atom not preceded by `not` replaced by `f(atom)`.
    pub fn map_positive_atoms(&self, f: impl Fn(&Atom) -> Atom) -> WcpProgram {
        WcpProgram::new(
            self.rules
                .iter()
                .map(|r| r.map_positive_atoms(&f))
                .collect(),
        )
    }

    /// The same program in nested syntax, when every constraint is a bare
    /// rule element or `bot` (heads) and bodies are such elements.
    pub fn to_nested(&self) -> Option<NestedProgram> {
        let element = |c: &WeightConstraint| -> Option<Formula> {
            if c.is_bottom() {
                return Some(Formula::Bottom);
            }
            let e = c.as_singleton()?;
            let lit = Formula::Literal(e.literal.clone());
            Some(if e.is_positive() {
                lit
            } else {
                Formula::not(lit)
            })
        };
        let mut rules = Vec::new();
        for rule in &self.rules {
            let head = element(&rule.head)?;
            let body = rule.body.iter().map(element).collect::<Option<Vec<_>>>()?;
            rules.push(Rule::new(head, Formula::conjunction(body)));
        }
        Some(NestedProgram::new(rules).with_atoms(self.signature.iter().cloned()))
    }

    /// The same program in weight constraint syntax, when heads are
    /// literals or `bot` and bodies are conjunctions of literals,
    /// `not`-literals, `top` and `bot`.
    pub fn from_nested(program: &NestedProgram) -> Option<WcpProgram> {
        fn body_items(f: &Formula, out: &mut Vec<WeightConstraint>) -> Option<()> {
            match f {
                Formula::Top => {}
                Formula::Bottom => out.push(WeightConstraint::bottom()),
                Formula::Literal(l) => {
                    out.push(WeightConstraint::singleton(RuleElement::pos(l.clone())))
                }
                Formula::Not(inner) => match inner.as_ref() {
                    Formula::Literal(l) => {
                        out.push(WeightConstraint::singleton(RuleElement::neg(l.clone())))
                    }
                    _ => return None,
                },
                Formula::And(a, b) => {
                    body_items(a, out)?;
                    body_items(b, out)?;
                }
                Formula::Or(..) => return None,
            }
            Some(())
        }
        let mut rules = Vec::new();
        for rule in program.rules() {
            let head = match &rule.head {
                Formula::Literal(l) => WeightConstraint::singleton(RuleElement::pos(l.clone())),
                Formula::Bottom => WeightConstraint::bottom(),
                _ => return None,
            };
            let mut body = Vec::new();
            body_items(&rule.body, &mut body)?;
            rules.push(WcpRule::new(head, body).ok()?);
        }
        Some(WcpProgram::new(rules).with_atoms(program.signature().iter().cloned()))
    }
}

impl fmt::Display for WcpProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WcpProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WcpProgram {{ {} }}",
            self.to_string().trim_end().replace('\n', " ")
        )
    }
}
