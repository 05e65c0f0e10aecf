// SPDX-License-Identifier: Apache-2.0

//! Strong equivalence of negation-free nested programs as propositional
//! unsatisfiability.
//!
//! `pl` reads `not` as `¬`, `,` as `∧`, `;` as `∨` and a rule as the
//! implication from its body to its head. The theory of `P` is `pl(P)`,
//! its primed copy `pl(P)'` and `a' ⊃ a` for every atom; its models are
//! exactly the SE-models of `P` under the pair decoding.

use crate::encodings::prop::{prop_models, PropFormula};
use crate::equivalence::{joint, preferred_mismatch, Mismatch, Side, Verdict};
use crate::error::{Error, Result};
use crate::nested::{Formula, NestedProgram, Rule};
use crate::Limits;

pub fn pl_formula(formula: &Formula) -> Result<PropFormula> {
    Ok(match formula {
        Formula::Literal(l) if l.is_negated() => return Err(Error::NotNegationFree),
        Formula::Literal(l) => PropFormula::Atom(l.atom().clone()),
        Formula::Top => PropFormula::Top,
        Formula::Bottom => PropFormula::Bottom,
        Formula::Not(f) => PropFormula::neg(pl_formula(f)?),
        Formula::And(f, g) => PropFormula::conj(pl_formula(f)?, pl_formula(g)?),
        Formula::Or(f, g) => PropFormula::disj(pl_formula(f)?, pl_formula(g)?),
    })
}

/// `pl(body) ⊃ pl(head)`.
pub fn pl_rule(rule: &Rule) -> Result<PropFormula> {
    Ok(PropFormula::implies(
        pl_formula(&rule.body)?,
        pl_formula(&rule.head)?,
    ))
}

/// Primes every atom occurrence outside the scope of `¬`.
pub fn prime(formula: &PropFormula) -> PropFormula {
    match formula {
        PropFormula::Atom(a) => PropFormula::Atom(a.primed()),
        PropFormula::Top | PropFormula::Bottom | PropFormula::Neg(_) => formula.clone(),
        PropFormula::Conj(f, g) => PropFormula::conj(prime(f), prime(g)),
        PropFormula::Disj(f, g) => PropFormula::disj(prime(f), prime(g)),
        PropFormula::Impl(f, g) => PropFormula::implies(prime(f), prime(g)),
        PropFormula::Equiv(f, g) => PropFormula::equiv(prime(f), prime(g)),
    }
}

/// `⊤ ⊃ φ` becomes `φ`.
fn simplify(formula: PropFormula) -> PropFormula {
    match formula {
        PropFormula::Impl(body, head) if *body == PropFormula::Top => *head,
        other => other,
    }
}

/// The formulas of `pl(P)`, then `pl(P)'`, then `a' ⊃ a` over the
/// signature.
pub fn pl_theory(program: &NestedProgram) -> Result<Vec<PropFormula>> {
    let rules: Vec<PropFormula> = program
        .rules()
        .iter()
        .map(|r| pl_rule(r).map(simplify))
        .collect::<Result<_>>()?;
    let primed: Vec<PropFormula> = rules.iter().map(prime).collect();
    let links = program
        .signature()
        .iter()
        .map(|a| PropFormula::implies(PropFormula::Atom(a.primed()), PropFormula::Atom(a.clone())));
    Ok(rules.iter().cloned().chain(primed).chain(links).collect())
}

pub fn pl_program(program: &NestedProgram) -> Result<PropFormula> {
    Ok(PropFormula::conjunction(pl_theory(program)?))
}

/// Decides strong equivalence by testing `pl(P) ≢ pl(Q)` for
/// satisfiability over the joint signature. Each model decodes to an
/// SE-model of exactly one program; the preferred one becomes a verified
/// witness.
pub fn strongly_equivalent_via_pl(
    first: &NestedProgram,
    second: &NestedProgram,
    limits: &Limits,
) -> Result<Verdict<NestedProgram>> {
    let (first, second) = joint(first, second);
    let pl_first = pl_program(&first)?;
    let pl_second = pl_program(&second)?;
    let formula = PropFormula::xor(pl_first.clone(), pl_second);
    let mut mismatches = Vec::new();
    for model in prop_models(&formula, limits)? {
        let model_of = if pl_first.eval(&model.true_atoms) {
            Side::First
        } else {
            Side::Second
        };
        mismatches.push(Mismatch {
            model: model.decode()?,
            model_of,
        });
    }
    let Some(mismatch) = preferred_mismatch(&first, &second, mismatches) else {
        return Ok(Verdict::equivalent());
    };
    Verdict::from_mismatch(&first, &second, mismatch, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::se_models;
    use crate::parse::{parse_formula, parse_nested};

    fn rule(text: &str) -> Rule {
        parse_nested(text).unwrap().rules()[0].clone()
    }

    #[test]
    fn rule_translation() {
        assert_eq!(
            pl_rule(&rule("p :- not q.")).unwrap().to_string(),
            "~q -> p"
        );
        assert_eq!(
            pl_rule(&rule("p ; q.")).unwrap().to_string(),
            "true -> p | q"
        );
        assert_eq!(
            pl_rule(&rule(":- p, q.")).unwrap().to_string(),
            "p & q -> false"
        );
        assert_eq!(pl_rule(&rule("p :- -q.")), Err(Error::NotNegationFree));
    }

    #[test]
    fn priming_skips_negated_scopes() {
        let f = pl_rule(&rule("p :- not q.")).unwrap();
        assert_eq!(prime(&f).to_string(), "~q -> p__prime");
        let f = pl_rule(&rule(":- p, q.")).unwrap();
        assert_eq!(prime(&f).to_string(), "p__prime & q__prime -> false");
        let f = pl_formula(&parse_formula("not p").unwrap()).unwrap();
        assert_eq!(prime(&f), f);
    }

    #[test]
    fn program_translation() {
        let p = parse_nested("p :- not q.").unwrap();
        let theory: Vec<String> = pl_theory(&p)
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(
            theory,
            [
                "~q -> p",
                "~q -> p__prime",
                "p__prime -> p",
                "q__prime -> q"
            ]
        );

        let empty = NestedProgram::default().with_atoms(["p".into()]);
        assert_eq!(pl_program(&empty).unwrap().to_string(), "p__prime -> p");

        let disj = parse_nested("p ; q.").unwrap();
        let theory: Vec<String> = pl_theory(&disj)
            .unwrap()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(
            theory,
            [
                "p | q",
                "p__prime | q__prime",
                "p__prime -> p",
                "q__prime -> q"
            ]
        );
    }

    #[test]
    fn models_are_se_models() {
        for text in [
            "p :- not q.",
            "p ; q.",
            "p :- not not p.",
            "p :- q, not r. r ; q :- not p.",
        ] {
            let p = parse_nested(text).unwrap();
            let formula = pl_program(&p).unwrap();
            let mut decoded: Vec<_> = prop_models(&formula, &Limits::default())
                .unwrap()
                .iter()
                .map(|i| i.decode().unwrap())
                .collect();
            decoded.sort();
            assert_eq!(
                decoded,
                se_models(&p, true, &Limits::default()).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn verdicts() {
        let limits = Limits::default();
        let p1 = parse_nested("p ; q. :- p, q.").unwrap();
        let p2 = parse_nested("p :- not q. q :- not p. :- p, q.").unwrap();
        assert!(
            strongly_equivalent_via_pl(&p1, &p2, &limits)
                .unwrap()
                .equivalent
        );

        let disj = parse_nested("p ; q.").unwrap();
        let even = parse_nested("p :- not q. q :- not p.").unwrap();
        let verdict = strongly_equivalent_via_pl(&disj, &even, &limits).unwrap();
        assert!(!verdict.equivalent);
        let mismatch = verdict.mismatch.unwrap();
        assert_eq!(mismatch.model.to_string(), "({}, {p, q})");
        assert_eq!(mismatch.model_of, Side::Second);

        assert!(
            strongly_equivalent_via_pl(&even, &even, &limits)
                .unwrap()
                .equivalent
        );
    }
}
