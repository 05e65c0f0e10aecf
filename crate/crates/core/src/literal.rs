// SPDX-License-Identifier: Apache-2.0

//! Atoms, literals and consistent literal sets.
//!
//! Every semantic notion in this crate is evaluated against a [`LiteralSet`]:
//! a finite set of literals that never contains both `a` and `-a`. The
//! total order on literal sets is `(size, lexicographic literal sequence)`,
//! which makes every enumeration in the crate deterministic.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Suffix marking the primed twin `A'` of an atom in generated encodings.
pub const PRIME_SUFFIX: &str = "__prime";

/// A ground propositional atom. Argument tuples such as `q(1,2)` are part of
/// the flat name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: impl AsRef<str>) -> Self {
        Atom(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Names containing `__` belong to generated atoms (primed twins,
    /// auxiliary heads, selectors) and are rejected in user input.
    pub fn is_reserved(&self) -> bool {
        self.0.contains("__")
    }

    pub fn primed(&self) -> Atom {
        Atom::new(format!("{}{}", self.0, PRIME_SUFFIX))
    }

    /// Inverse of [`Atom::primed`].
    pub fn unprimed(&self) -> Option<Atom> {
        self.0.strip_suffix(PRIME_SUFFIX).map(Atom::new)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for Atom {
    fn from(name: &str) -> Self {
        Atom::new(name)
    }
}

/// An atom or its classical negation. Positive literals sort before negated
/// ones over the same atom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    atom: Atom,
    negated: bool,
}

impl Literal {
    pub fn positive(atom: impl Into<Atom>) -> Self {
        Literal {
            atom: atom.into(),
            negated: false,
        }
    }

    pub fn negative(atom: impl Into<Atom>) -> Self {
        Literal {
            atom: atom.into(),
            negated: true,
        }
    }

    pub fn atom(&self) -> &Atom {
        &self.atom
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn complement(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }

    /// Same sign, atom replaced by `f(atom)`.
    pub fn map_atom(&self, f: impl FnOnce(&Atom) -> Atom) -> Literal {
        Literal {
            atom: f(&self.atom),
            negated: self.negated,
        }
    }
}

impl From<&str> for Literal {
    /// `"-a"` is the classical negation of `a`.
    fn from(text: &str) -> Self {
        match text.strip_prefix('-') {
            Some(rest) => Literal::negative(rest),
            None => Literal::positive(text),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A consistent finite set of literals.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LiteralSet(BTreeSet<Literal>);

impl LiteralSet {
    pub fn new() -> Self {
        LiteralSet(BTreeSet::new())
    }

    pub fn try_from_iter<I, L>(literals: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: Into<Literal>,
    {
        let mut set = LiteralSet::new();
        for literal in literals {
            set.insert(literal.into())?;
        }
        Ok(set)
    }

    /// Panicking constructor for fixtures; use [`LiteralSet::try_from_iter`]
    /// on untrusted input.
    pub fn of<L: Into<Literal>>(literals: impl IntoIterator<Item = L>) -> Self {
        Self::try_from_iter(literals).expect("consistent literal set")
    }

    /// Inserts `literal`, refusing to make the set inconsistent.
    pub fn insert(&mut self, literal: Literal) -> Result<bool> {
        if self.0.contains(&literal.complement()) {
            return Err(Error::Inconsistent(literal.atom().to_string()));
        }
        Ok(self.0.insert(literal))
    }

    pub fn contains(&self, literal: &Literal) -> bool {
        self.0.contains(literal)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> + '_ {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn difference(&self, other: &LiteralSet) -> Vec<Literal> {
        self.0.difference(&other.0).cloned().collect()
    }

    /// `X⁺`: the atoms of the set, dropping negated literals.
    pub fn positive_part(&self) -> LiteralSet {
        LiteralSet(self.0.iter().filter(|l| !l.is_negated()).cloned().collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.is_negated())
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.0.iter().map(|l| l.atom().clone()).collect()
    }

    /// Keeps only the literals accepted by `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&Literal) -> bool) -> LiteralSet {
        LiteralSet(self.0.iter().filter(|l| keep(l)).cloned().collect())
    }

    /// All subsets, proper or not, in unspecified order.
    pub fn subsets(&self) -> Subsets {
        let items: Vec<Literal> = self.0.iter().cloned().collect();
        assert!(
            items.len() < 64,
            "subset enumeration over {} literals",
            items.len()
        );
        Subsets {
            end: 1u64 << items.len(),
            items,
            next: 0,
        }
    }

    pub fn into_inner(self) -> BTreeSet<Literal> {
        self.0
    }
}

impl Ord for LiteralSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for LiteralSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, literal) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{literal}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a LiteralSet {
    type Item = &'a Literal;
    type IntoIter = std::collections::btree_set::Iter<'a, Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub struct Subsets {
    items: Vec<Literal>,
    next: u64,
    end: u64,
}

impl Iterator for Subsets {
    type Item = LiteralSet;

    fn next(&mut self) -> Option<LiteralSet> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let set = self
            .items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, l)| l.clone())
            .collect();
        Some(LiteralSet(set))
    }
}

/// Every consistent literal set over `atoms`, in unspecified order. With
/// `positive_only` the sets contain atoms only (`2^n` sets instead of `3^n`).
pub fn consistent_sets(atoms: &BTreeSet<Atom>, positive_only: bool) -> ConsistentSets {
    ConsistentSets {
        atoms: atoms.iter().cloned().collect(),
        radix: if positive_only { 2 } else { 3 },
        digits: vec![0; atoms.len()],
        done: false,
    }
}

/// Every consistent set built from `literals` (which may contain
/// complementary pairs), in unspecified order.
pub fn consistent_sets_from(literals: &BTreeSet<Literal>) -> impl Iterator<Item = LiteralSet> {
    let items: Vec<Literal> = literals.iter().cloned().collect();
    assert!(
        items.len() < 64,
        "enumeration over {} literals",
        items.len()
    );
    (0u64..1 << items.len()).filter_map(move |mask| {
        let mut set = BTreeSet::new();
        for (i, literal) in items.iter().enumerate() {
            if mask & (1 << i) != 0 {
                if set.contains(&literal.complement()) {
                    return None;
                }
                set.insert(literal.clone());
            }
        }
        Some(LiteralSet(set))
    })
}

pub struct ConsistentSets {
    atoms: Vec<Atom>,
    radix: u8,
    digits: Vec<u8>,
    done: bool,
}

impl Iterator for ConsistentSets {
    type Item = LiteralSet;

    fn next(&mut self) -> Option<LiteralSet> {
        if self.done {
            return None;
        }
        let set = self
            .atoms
            .iter()
            .zip(&self.digits)
            .filter_map(|(atom, digit)| match digit {
                1 => Some(Literal::positive(atom.clone())),
                2 => Some(Literal::negative(atom.clone())),
                _ => None,
            })
            .collect();
        // odometer increment
        self.done = true;
        for digit in self.digits.iter_mut() {
            *digit += 1;
            if *digit < self.radix {
                self.done = false;
                break;
            }
            *digit = 0;
        }
        Some(LiteralSet(set))
    }
}
