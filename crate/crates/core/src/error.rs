// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature has {atoms} atoms but the enumeration cap is {cap}")]
    SignatureTooLarge { atoms: usize, cap: usize },

    #[error("formula ranges over {atoms} atoms but the satisfiability cap is {cap}")]
    TooManyAtoms { atoms: usize, cap: usize },

    #[error("positive SE-models requested for a program that contains classical negation")]
    PositiveOnlyOnNegatedProgram,

    #[error("program contains classical negation; this encoding needs a negation-free program")]
    NotNegationFree,

    #[error("constraint has an upper bound; only `L <= S` constraints have a lower reduct")]
    UpperBoundPresent,

    #[error("literal set would contain both {0} and -{0}")]
    Inconsistent(String),

    #[error("here-set {here} is not a subset of there-set {there}")]
    NotSubset { here: String, there: String },

    #[error("rule head contains the negative rule element `not {0}`")]
    NegativeHeadElement(String),

    #[error("negative weight {0}")]
    NegativeWeight(String),

    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: `{name}` is reserved for generated atoms")]
    ReservedName {
        line: usize,
        column: usize,
        name: String,
    },

    #[error("distinct head constraints hash to the same generated atom `{0}`")]
    HashCollision(String),

    #[error("distinguishing context failed verification: {0}")]
    UnsoundWitness(String),
}

impl Error {
    /// True for errors caused by enumeration or search caps.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::SignatureTooLarge { .. } | Error::TooManyAtoms { .. }
        )
    }
}
