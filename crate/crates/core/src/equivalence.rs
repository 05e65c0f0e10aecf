// SPDX-License-Identifier: Apache-2.0

//! SE-models, equivalence and strong equivalence.
//!
//! `(X, Y)` is an SE-model of `P` when `X ⊆ Y`, `Y ⊨ P` and `X ⊨ P^Y`.
//! Programs are strongly equivalent iff their SE-model sets coincide, and
//! for negation-free programs it suffices to compare SE-models built from
//! atoms only. Both program languages implement [`LogicProgram`], so every
//! operation here works for either.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::literal::{consistent_sets, Atom, Literal, LiteralSet};
use crate::nested::{Formula, NestedProgram, Rule};
use crate::wcp::{RuleElement, WcpProgram, WcpRule, WeightConstraint};
use crate::Limits;

/// What SE-model enumeration and witness construction need from a program.
pub trait LogicProgram: Clone + fmt::Display + fmt::Debug {
    fn signature(&self) -> &BTreeSet<Atom>;
    fn with_atoms(self, atoms: impl IntoIterator<Item = Atom>) -> Self;
    fn satisfied_by(&self, x: &LiteralSet) -> bool;
    fn reduct(&self, x: &LiteralSet) -> Self;
    fn is_negation_free(&self) -> bool;
    fn union(&self, other: &Self) -> Self;
    fn answer_sets(&self, limits: &Limits) -> Result<Vec<LiteralSet>>;
    /// The program made of the facts `L` and the rules `L <- L'`.
    fn context(facts: &[Literal], implications: &[(Literal, Literal)]) -> Self;
}

impl LogicProgram for NestedProgram {
    fn signature(&self) -> &BTreeSet<Atom> {
        NestedProgram::signature(self)
    }
    fn with_atoms(self, atoms: impl IntoIterator<Item = Atom>) -> Self {
        NestedProgram::with_atoms(self, atoms)
    }
    fn satisfied_by(&self, x: &LiteralSet) -> bool {
        NestedProgram::satisfied_by(self, x)
    }
    fn reduct(&self, x: &LiteralSet) -> Self {
        NestedProgram::reduct(self, x)
    }
    fn is_negation_free(&self) -> bool {
        NestedProgram::is_negation_free(self)
    }
    fn union(&self, other: &Self) -> Self {
        NestedProgram::union(self, other)
    }
    fn answer_sets(&self, limits: &Limits) -> Result<Vec<LiteralSet>> {
        NestedProgram::answer_sets(self, limits)
    }
    fn context(facts: &[Literal], implications: &[(Literal, Literal)]) -> Self {
        let facts = facts
            .iter()
            .map(|l| Rule::fact(Formula::Literal(l.clone())));
        let implications = implications
            .iter()
            .map(|(l, m)| Rule::new(Formula::Literal(l.clone()), Formula::Literal(m.clone())));
        NestedProgram::new(facts.chain(implications).collect())
    }
}

impl LogicProgram for WcpProgram {
    fn signature(&self) -> &BTreeSet<Atom> {
        WcpProgram::signature(self)
    }
    fn with_atoms(self, atoms: impl IntoIterator<Item = Atom>) -> Self {
        WcpProgram::with_atoms(self, atoms)
    }
    fn satisfied_by(&self, x: &LiteralSet) -> bool {
        WcpProgram::satisfied_by(self, x)
    }
    fn reduct(&self, x: &LiteralSet) -> Self {
        WcpProgram::reduct(self, x)
    }
    fn is_negation_free(&self) -> bool {
        WcpProgram::is_negation_free(self)
    }
    fn union(&self, other: &Self) -> Self {
        WcpProgram::union(self, other)
    }
    fn answer_sets(&self, limits: &Limits) -> Result<Vec<LiteralSet>> {
        WcpProgram::answer_sets(self, limits)
    }
    fn context(facts: &[Literal], implications: &[(Literal, Literal)]) -> Self {
        let facts = facts
            .iter()
            .map(|l| WcpRule::literal_rule(l.clone(), vec![]));
        let implications = implications.iter().map(|(l, m)| {
            WcpRule::literal_rule(
                l.clone(),
                vec![WeightConstraint::singleton(RuleElement::pos(m.clone()))],
            )
        });
        WcpProgram::new(facts.chain(implications).collect())
    }
}

/// A pair `(X, Y)` of consistent literal sets with `X ⊆ Y`. Ordered by
/// there-set first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeModel {
    here: LiteralSet,
    there: LiteralSet,
}

impl SeModel {
    pub fn new(here: LiteralSet, there: LiteralSet) -> Result<Self> {
        if !here.is_subset(&there) {
            return Err(Error::NotSubset {
                here: here.to_string(),
                there: there.to_string(),
            });
        }
        Ok(SeModel { here, there })
    }

    pub fn here(&self) -> &LiteralSet {
        &self.here
    }

    pub fn there(&self) -> &LiteralSet {
        &self.there
    }

    pub fn is_positive(&self) -> bool {
        self.there.is_positive()
    }

    /// `(X⁺, Y⁺)`.
    pub fn positive_part(&self) -> SeModel {
        SeModel {
            here: self.here.positive_part(),
            there: self.there.positive_part(),
        }
    }
}

impl Ord for SeModel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.there
            .cmp(&other.there)
            .then_with(|| self.here.cmp(&other.here))
    }
}

impl PartialOrd for SeModel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.here, self.there)
    }
}

impl fmt::Debug for SeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn is_se_model<P: LogicProgram>(pair: &SeModel, program: &P) -> bool {
    program.satisfied_by(&pair.there) && program.reduct(&pair.there).satisfied_by(&pair.here)
}

/// All SE-models over the program's signature, sorted. Candidate there-sets
/// are filtered by `Y ⊨ P` before any here-set is tried.
pub fn se_models<P: LogicProgram>(
    program: &P,
    positive_only: bool,
    limits: &Limits,
) -> Result<Vec<SeModel>> {
    if positive_only && !program.is_negation_free() {
        return Err(Error::PositiveOnlyOnNegatedProgram);
    }
    let cap = if positive_only {
        limits.max_positive_atoms
    } else {
        limits.max_atoms
    };
    let atoms = program.signature().len();
    if atoms > cap {
        return Err(Error::SignatureTooLarge { atoms, cap });
    }
    let mut models = Vec::new();
    for there in consistent_sets(program.signature(), positive_only) {
        if !program.satisfied_by(&there) {
            continue;
        }
        let reduct = program.reduct(&there);
        for here in there.subsets() {
            if reduct.satisfied_by(&here) {
                models.push(SeModel {
                    here,
                    there: there.clone(),
                });
            }
        }
    }
    models.sort();
    Ok(models)
}

/// Whether `(X, Y)` and `(X⁺, Y⁺)` agree on SE-model membership. Always
/// true for negation-free programs.
pub fn positive_projection_agrees<P: LogicProgram>(program: &P, pair: &SeModel) -> bool {
    is_se_model(pair, program) == is_se_model(&pair.positive_part(), program)
}

/// Extends both programs to the union of their signatures.
pub fn joint<P: LogicProgram>(first: &P, second: &P) -> (P, P) {
    let atoms: BTreeSet<Atom> = first
        .signature()
        .iter()
        .chain(second.signature())
        .cloned()
        .collect();
    (
        first.clone().with_atoms(atoms.iter().cloned()),
        second.clone().with_atoms(atoms),
    )
}

/// Same answer sets.
pub fn equivalent<P: LogicProgram>(first: &P, second: &P, limits: &Limits) -> Result<bool> {
    let (first, second) = joint(first, second);
    Ok(first.answer_sets(limits)? == second.answer_sets(limits)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::First => "first",
            Side::Second => "second",
        }
    }
}

/// An SE-model of one program that is not an SE-model of the other.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mismatch {
    pub model: SeModel,
    pub model_of: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// `Y` fails the other program; the context is `Y` itself.
    ContextFalsifiesOneProgram,
    /// `Y` satisfies both; the context pins `X` and ties `Y \ X` together.
    SubsetBreaksMinimality,
}

impl WitnessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessCase::ContextFalsifiesOneProgram => "context-falsifies-one-program",
            WitnessCase::SubsetBreaksMinimality => "subset-breaks-minimality",
        }
    }
}

/// A context `R` such that `Y` is an answer set of exactly one of
/// `P ∪ R` and `Q ∪ R`. `R` has literal heads and literal-or-empty bodies.
#[derive(Clone, Debug)]
pub struct DistinguishingContext<P> {
    pub context_program: P,
    pub separating_set: LiteralSet,
    pub case: WitnessCase,
    /// The side whose union with the context has `separating_set` as an
    /// answer set.
    pub answer_set_of: Side,
}

#[derive(Clone, Debug)]
pub struct Verdict<P> {
    pub equivalent: bool,
    pub mismatch: Option<Mismatch>,
    pub witness: Option<DistinguishingContext<P>>,
}

impl<P: LogicProgram> Verdict<P> {
    pub fn equivalent() -> Self {
        Verdict {
            equivalent: true,
            mismatch: None,
            witness: None,
        }
    }

    /// Non-equivalence verdict with a verified distinguishing context built
    /// from `mismatch`.
    pub fn from_mismatch(
        first: &P,
        second: &P,
        mismatch: Mismatch,
        limits: &Limits,
    ) -> Result<Self> {
        let witness = distinguishing_context(first, second, &mismatch, limits)?;
        Ok(Verdict {
            equivalent: false,
            mismatch: Some(mismatch),
            witness: Some(witness),
        })
    }
}

fn pick<'a, P>(first: &'a P, second: &'a P, side: Side) -> &'a P {
    match side {
        Side::First => first,
        Side::Second => second,
    }
}

/// Builds the context program of the classic separation argument and
/// checks it by recomputing both answer-set sets.
pub fn distinguishing_context<P: LogicProgram>(
    first: &P,
    second: &P,
    mismatch: &Mismatch,
    limits: &Limits,
) -> Result<DistinguishingContext<P>> {
    let (first, second) = joint(first, second);
    let (here, there) = (&mismatch.model.here, &mismatch.model.there);
    let other = pick(&first, &second, mismatch.model_of.other());

    let (context_program, case, answer_set_of) = if !other.satisfied_by(there) {
        let facts: Vec<Literal> = there.iter().cloned().collect();
        (
            P::context(&facts, &[]),
            WitnessCase::ContextFalsifiesOneProgram,
            mismatch.model_of,
        )
    } else {
        let facts: Vec<Literal> = here.iter().cloned().collect();
        let gap = there.difference(here);
        let implications: Vec<(Literal, Literal)> = gap
            .iter()
            .flat_map(|l| {
                gap.iter()
                    .filter(move |m| *m != l)
                    .map(move |m| (l.clone(), m.clone()))
            })
            .collect();
        (
            P::context(&facts, &implications),
            WitnessCase::SubsetBreaksMinimality,
            mismatch.model_of.other(),
        )
    };

    let with_first = first.union(&context_program).answer_sets(limits)?;
    let with_second = second.union(&context_program).answer_sets(limits)?;
    let (winner, loser) = match answer_set_of {
        Side::First => (&with_first, &with_second),
        Side::Second => (&with_second, &with_first),
    };
    if !winner.contains(there) || loser.contains(there) {
        return Err(Error::UnsoundWitness(format!(
            "{there} does not separate the programs extended by the context"
        )));
    }
    Ok(DistinguishingContext {
        context_program,
        separating_set: there.clone(),
        case,
        answer_set_of,
    })
}

/// Strong equivalence by comparing SE-model sets over the joint signature.
/// Negation-free pairs compare positive SE-models only.
///
/// On a mismatch the reported pair is chosen by [`preferred_mismatch`].
pub fn strongly_equivalent_direct<P: LogicProgram>(
    first: &P,
    second: &P,
    limits: &Limits,
) -> Result<Verdict<P>> {
    let (first, second) = joint(first, second);
    let positive = first.is_negation_free() && second.is_negation_free();
    let models_first: BTreeSet<SeModel> =
        se_models(&first, positive, limits)?.into_iter().collect();
    let models_second: BTreeSet<SeModel> =
        se_models(&second, positive, limits)?.into_iter().collect();
    if models_first == models_second {
        return Ok(Verdict::equivalent());
    }
    let mismatches = models_first
        .difference(&models_second)
        .map(|m| Mismatch {
            model: m.clone(),
            model_of: Side::First,
        })
        .chain(models_second.difference(&models_first).map(|m| Mismatch {
            model: m.clone(),
            model_of: Side::Second,
        }));
    let chosen =
        preferred_mismatch(&first, &second, mismatches).expect("differing sets have a mismatch");
    Verdict::from_mismatch(&first, &second, chosen, limits)
}

/// The mismatch every method reports: the least one whose there-set fails
/// the other program, or failing that the least one overall.
pub fn preferred_mismatch<P: LogicProgram>(
    first: &P,
    second: &P,
    candidates: impl IntoIterator<Item = Mismatch>,
) -> Option<Mismatch> {
    let falsifies_other =
        |m: &Mismatch| !pick(first, second, m.model_of.other()).satisfied_by(&m.model.there);
    candidates.into_iter().min_by(|a, b| {
        falsifies_other(b)
            .cmp(&falsifies_other(a))
            .then_with(|| a.cmp(b))
    })
}

/// `F` and `G` are equivalent relative to `P`: `X ⊨ F^Y` iff `X ⊨ G^Y`
/// for every SE-model `(X, Y)` of `P` over the joint signature.
pub fn formula_equiv_relative(
    program: &NestedProgram,
    f: &Formula,
    g: &Formula,
    limits: &Limits,
) -> Result<bool> {
    let program = program.clone().with_atoms(f.atoms()).with_atoms(g.atoms());
    Ok(se_models(&program, false, limits)?.iter().all(|m| {
        f.reduct(&m.there).satisfied_by(&m.here) == g.reduct(&m.there).satisfied_by(&m.here)
    }))
}

/// Replaces the regular occurrences of `from` by `to` in every head and
/// body. An atom directly under classical negation is not an occurrence of
/// that atom.
pub fn replace_regular(program: &NestedProgram, from: &Formula, to: &Formula) -> NestedProgram {
    let rules = program
        .rules()
        .iter()
        .map(|r| Rule::new(r.head.replace(from, to), r.body.replace(from, to)))
        .collect();
    NestedProgram::new(rules)
        .with_atoms(program.signature().iter().cloned())
        .with_atoms(to.atoms())
}
