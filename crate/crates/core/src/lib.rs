// SPDX-License-Identifier: Apache-2.0

//! Answer sets, SE-models and strong equivalence for ground nested logic
//! programs and weight constraint programs.
//!
//! Two programs are strongly equivalent when adding any third program to
//! both leaves them with the same answer sets. They are strongly equivalent
//! exactly when they have the same SE-models, pairs `(X, Y)` with `X ⊆ Y`,
//! `Y ⊨ P` and `X ⊨ P^Y`. This crate decides the question three ways:
//!
//! * [`equivalence::strongly_equivalent_direct`] compares SE-model sets and,
//!   on a mismatch, builds a small context program that separates the two
//!   programs;
//! * [`encodings::pl::strongly_equivalent_via_pl`] reduces the question for
//!   negation-free nested programs to propositional unsatisfiability;
//! * [`encodings::wc::strongly_equivalent_via_wc`] reduces it for
//!   negation-free weight constraint programs to the inconsistency of a
//!   single weight constraint program.
//!
//! Everything is exhaustive or backtracking search over small signatures;
//! [`Limits`] caps the sizes that are attempted.

pub mod cli;
pub mod encodings;
pub mod equivalence;
pub mod error;
pub mod literal;
pub mod nested;
pub mod parse;
pub mod random;
pub mod wcp;

pub use equivalence::{LogicProgram, SeModel, Verdict};
pub use error::{Error, Result};
pub use literal::{Atom, Literal, LiteralSet};
pub use nested::{Formula, NestedProgram, Rule};
pub use wcp::{Bound, Polarity, Rational, RuleElement, WcpProgram, WcpRule, WeightConstraint};

/// Enumeration caps, in atoms of the signature being enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Enumeration over all consistent literal sets (`3^n`).
    pub max_atoms: usize,
    /// Enumeration over sets of atoms only (`2^n`), for negation-free input.
    pub max_positive_atoms: usize,
    /// Signature size accepted by the weight constraint answer-set search.
    pub max_search_atoms: usize,
    /// Atoms of a propositional formula handed to the satisfiability kernel.
    pub max_prop_atoms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: 12,
            max_positive_atoms: 16,
            max_search_atoms: 160,
            max_prop_atoms: 24,
        }
    }
}

impl Limits {
    /// Every enumeration cap set to `atoms`; the search cap never drops
    /// below its default.
    pub fn with_max_atoms(atoms: usize) -> Self {
        let default = Limits::default();
        Limits {
            max_atoms: atoms,
            max_positive_atoms: atoms,
            max_search_atoms: default.max_search_atoms.max(atoms),
            max_prop_atoms: default.max_prop_atoms.max(2 * atoms),
        }
    }
}
