// SPDX-License-Identifier: Apache-2.0

//! Reductions of strong equivalence to propositional satisfiability and to
//! the consistency of a weight constraint program.
//!
//! Both reductions double the signature: each atom `a` gets a primed twin
//! `a__prime`. A set over the doubled signature stands for the pair
//! `(X, Y)` where `Y` holds the original atoms and `X` the atoms whose
//! twins are true.

pub mod dimacs;
pub mod pl;
pub mod prop;
pub mod wc;

use crate::equivalence::SeModel;
use crate::error::Result;
use crate::literal::{Literal, LiteralSet};

/// Reads `(X, Y)` off a set of atoms over the doubled signature. Other
/// generated atoms are ignored.
pub fn decode_pair<'a>(true_atoms: impl IntoIterator<Item = &'a Literal>) -> Result<SeModel> {
    let mut here = LiteralSet::new();
    let mut there = LiteralSet::new();
    for literal in true_atoms {
        if literal.is_negated() {
            continue;
        }
        if let Some(original) = literal.atom().unprimed() {
            here.insert(Literal::positive(original))?;
        } else if !literal.atom().is_reserved() {
            there.insert(literal.clone())?;
        }
    }
    SeModel::new(here, there)
}

/// The inverse of [`decode_pair`].
pub fn encode_pair(pair: &SeModel) -> LiteralSet {
    let primed = pair
        .here()
        .iter()
        .map(|l| Literal::positive(l.atom().primed()));
    LiteralSet::of(pair.there().iter().cloned().chain(primed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn pair_round_trip() {
        let pair = SeModel::new(LiteralSet::of(["p"]), LiteralSet::of(["p", "q"])).unwrap();
        let encoded = encode_pair(&pair);
        assert_eq!(encoded.to_string(), "{p, p__prime, q}");
        assert_eq!(decode_pair(&encoded).unwrap(), pair);
    }

    #[test]
    fn decode_ignores_generated_atoms_and_checks_inclusion() {
        let set = LiteralSet::of(["p", "__witness", "h__00ff", "__selp"]);
        assert_eq!(
            decode_pair(&set).unwrap(),
            SeModel::new(LiteralSet::new(), LiteralSet::of(["p"])).unwrap()
        );
        let bad = LiteralSet::of(["q__prime"]);
        assert!(matches!(decode_pair(&bad), Err(Error::NotSubset { .. })));
    }
}
