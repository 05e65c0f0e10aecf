// SPDX-License-Identifier: Apache-2.0

//! Strong equivalence of negation-free weight constraint programs as the
//! inconsistency of a single weight constraint program.
//!
//! * `wc(P)` has an answer set for every SE-model of `P`: it is `P`, its
//!   primed copy `P'`, the rule `⊥ ← a', not a` and the choices `{a}` and
//!   `{a'}` for every atom. In `P'` upper bounds of body constraints stay
//!   on the original atoms, and a head with several elements also gets one
//!   rule `e' ← e, body'` per head atom; plain priming misjudges some pairs
//!   once either feature occurs.
//! * `not(P)` has an answer set `Y` with `Y ∩ A = X` for every `X ⊆ A`
//!   that falsifies `P`.
//! * `or(P, Q)` guards the rules of each side with a selector atom and
//!   picks exactly one selector, so it is consistent iff `P` or `Q` is.
//!
//! `or(not(wc(P)) ∪ wc(Q), wc(P) ∪ not(wc(Q)))` is then consistent iff
//! some SE-model belongs to one program only.

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::equivalence::{is_se_model, joint, preferred_mismatch, Mismatch, Side, Verdict};
use crate::error::{Error, Result};
use crate::literal::{Atom, Literal, LiteralSet};
use crate::wcp::{Bound, RuleElement, WcpProgram, WcpRule, WeightConstraint};
use crate::Limits;

pub const WITNESS: &str = "__witness";
pub const SELECT_FIRST: &str = "__selp";
pub const SELECT_SECOND: &str = "__selq";

/// Hex digits of the constraint digest kept in `h__` atom names.
const HASH_PREFIX: usize = 12;

fn require_negation_free(program: &WcpProgram) -> Result<()> {
    if program.is_negation_free() {
        Ok(())
    } else {
        Err(Error::NotNegationFree)
    }
}

/// The primed body of a rule: each `L <= S <= U` becomes `(L <= S)'`, read
/// on the here-set, and `S <= U`, read on the there-set.
fn primed_body(body: &[WeightConstraint]) -> Vec<WeightConstraint> {
    let mut out = Vec::new();
    for c in body {
        out.push(c.without_upper().map_positive_atoms(&Atom::primed));
        if c.upper != Bound::PosInf {
            out.push(c.without_lower());
        }
    }
    out
}

/// The rules of `P'` for one rule of `P`. A head other than `bot` or a
/// single element also gets `e' <- e, body'` for each head atom `e`, since
/// the reduct requires every head atom of the there-set on its own.
fn primed_rules(rule: &WcpRule) -> Vec<WcpRule> {
    let body = primed_body(rule.body());
    let head = rule.head().map_positive_atoms(&Atom::primed);
    let mut rules = vec![WcpRule::new(head, body.clone()).expect("positive head")];
    if rule.head().is_bottom() || rule.head().as_singleton().is_some() {
        return rules;
    }
    for e in rule.head_literals() {
        let mut guarded = vec![WeightConstraint::singleton(RuleElement::pos(e.clone()))];
        guarded.extend(body.iter().cloned());
        rules.push(WcpRule::literal_rule(e.map_atom(Atom::primed), guarded));
    }
    rules
}

pub fn wc_encode(program: &WcpProgram) -> Result<WcpProgram> {
    require_negation_free(program)?;
    let mut rules: Vec<WcpRule> = program.rules().to_vec();
    rules.extend(program.rules().iter().flat_map(primed_rules));
    for atom in program.signature() {
        let twin = atom.primed();
        rules.push(
            WcpRule::new(
                WeightConstraint::bottom(),
                vec![
                    WeightConstraint::singleton(RuleElement::pos(Literal::positive(twin.clone()))),
                    WeightConstraint::singleton(RuleElement::neg(Literal::positive(atom.clone()))),
                ],
            )
            .expect("bottom head"),
        );
        rules.push(WcpRule::fact(WeightConstraint::choice(atom.clone())).expect("positive head"));
        rules.push(WcpRule::fact(WeightConstraint::choice(twin)).expect("positive head"));
    }
    let atoms = program
        .signature()
        .iter()
        .flat_map(|a| [a.clone(), a.primed()]);
    Ok(WcpProgram::new(rules).with_atoms(atoms))
}

/// The name `h__<digest>` of the atom standing for "`constraint` holds".
pub fn head_atom(constraint: &WeightConstraint) -> Atom {
    let digest = Sha256::digest(constraint.to_string().as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    Atom::new(format!("h__{}", &hex[..HASH_PREFIX]))
}

pub fn not_encode(program: &WcpProgram) -> Result<WcpProgram> {
    require_negation_free(program)?;
    let witness = Literal::positive(Atom::new(WITNESS));
    let mut heads: BTreeMap<Atom, &WeightConstraint> = BTreeMap::new();
    let mut rules = Vec::new();
    for rule in program.rules() {
        let h = head_atom(rule.head());
        match heads.get(&h) {
            Some(seen) if *seen != rule.head() => return Err(Error::HashCollision(h.to_string())),
            Some(_) => {}
            None => {
                heads.insert(h.clone(), rule.head());
                rules.push(WcpRule::literal_rule(
                    Literal::positive(h.clone()),
                    vec![rule.head().clone()],
                ));
            }
        }
        let mut body = vec![WeightConstraint::singleton(RuleElement::neg(
            Literal::positive(h),
        ))];
        body.extend(rule.body().iter().cloned());
        rules.push(WcpRule::literal_rule(witness.clone(), body));
    }
    for atom in program.signature() {
        rules.push(WcpRule::fact(WeightConstraint::choice(atom.clone())).expect("positive head"));
    }
    rules.push(
        WcpRule::new(
            WeightConstraint::bottom(),
            vec![WeightConstraint::singleton(RuleElement::neg(witness))],
        )
        .expect("bottom head"),
    );
    Ok(WcpProgram::new(rules).with_atoms(program.signature().iter().cloned()))
}

#[derive(Clone, Debug)]
pub struct OrCombined {
    pub program: WcpProgram,
    pub select_first: Atom,
    pub select_second: Atom,
    /// True when a default selector name was taken and a fresh one used.
    pub renamed: bool,
}

fn fresh(base: &str, taken: impl Fn(&Atom) -> bool) -> Atom {
    let mut candidate = Atom::new(base);
    let mut n = 1;
    while taken(&candidate) {
        candidate = Atom::new(format!("{base}{n}"));
        n += 1;
    }
    candidate
}

pub fn or_combine(first: &WcpProgram, second: &WcpProgram) -> OrCombined {
    let taken = |a: &Atom| first.signature().contains(a) || second.signature().contains(a);
    let select_first = fresh(SELECT_FIRST, taken);
    let select_second = fresh(SELECT_SECOND, |a| taken(a) || *a == select_first);
    let renamed = select_first.name() != SELECT_FIRST || select_second.name() != SELECT_SECOND;
    let guard = |program: &WcpProgram, selector: &Atom| {
        let condition =
            WeightConstraint::singleton(RuleElement::pos(Literal::positive(selector.clone())));
        program
            .rules()
            .iter()
            .map(|r| r.with_body_constraint(condition.clone()))
            .collect::<Vec<_>>()
    };
    let mut rules = guard(first, &select_first);
    rules.extend(guard(second, &select_second));
    let exactly_one = WeightConstraint::unit(
        Bound::int(1),
        Bound::int(1),
        [
            RuleElement::pos(Literal::positive(select_first.clone())),
            RuleElement::pos(Literal::positive(select_second.clone())),
        ],
    );
    rules.push(WcpRule::fact(exactly_one).expect("positive head"));
    let atoms = first.signature().iter().chain(second.signature()).cloned();
    OrCombined {
        program: WcpProgram::new(rules).with_atoms(atoms),
        select_first,
        select_second,
        renamed,
    }
}

/// The program that is consistent iff the arguments are not strongly
/// equivalent. Both are first extended to their joint signature.
pub fn se_difference_program(first: &WcpProgram, second: &WcpProgram) -> Result<OrCombined> {
    let (first, second) = joint(first, second);
    let (wc_first, wc_second) = (wc_encode(&first)?, wc_encode(&second)?);
    let left = not_encode(&wc_first)?.union(&wc_second);
    let right = wc_first.union(&not_encode(&wc_second)?);
    Ok(or_combine(&left, &right))
}

/// Decides strong equivalence through the consistency of
/// [`se_difference_program`]. An answer set on the first branch holds an
/// SE-model of the second program only, and vice versa; every answer set is
/// decoded and checked, and the preferred mismatch becomes the witness.
pub fn strongly_equivalent_via_wc(
    first: &WcpProgram,
    second: &WcpProgram,
    limits: &Limits,
) -> Result<Verdict<WcpProgram>> {
    let (first, second) = joint(first, second);
    let combined = se_difference_program(&first, &second)?;
    let mut mismatches = Vec::new();
    for answer_set in combined.program.answer_sets(limits)? {
        let model_of = if answer_set.contains(&Literal::positive(combined.select_first.clone())) {
            Side::Second
        } else {
            Side::First
        };
        let model = super::decode_pair(&answer_set)?;
        let (owner, other) = match model_of {
            Side::First => (&first, &second),
            Side::Second => (&second, &first),
        };
        if !is_se_model(&model, owner) || is_se_model(&model, other) {
            return Err(Error::UnsoundWitness(format!(
                "decoded pair {model} does not separate the programs"
            )));
        }
        mismatches.push(Mismatch { model, model_of });
    }
    let Some(mismatch) = preferred_mismatch(&first, &second, mismatches) else {
        return Ok(Verdict::equivalent());
    };
    Verdict::from_mismatch(&first, &second, mismatch, limits)
}

/// Restriction of `set` to the atoms of `program`'s signature.
pub fn restrict(set: &LiteralSet, program: &WcpProgram) -> LiteralSet {
    set.filtered(|l| program.signature().contains(l.atom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::decode_pair;
    use crate::equivalence::se_models;
    use crate::parse::parse_wcp;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn wc_of_choice_rule() {
        let p = parse_wcp("1 {p, q} 1.").unwrap();
        let wc = wc_encode(&p).unwrap();
        let expected = "\
1 {p, q} 1.
1 {p__prime, q__prime} 1.
p__prime :- p.
q__prime :- q.
:- p__prime, not p.
0 {p} 1.
0 {p__prime} 1.
:- q__prime, not q.
0 {q} 1.
0 {q__prime} 1.
";
        assert_eq!(wc.to_string(), expected);
        let mut decoded: Vec<_> = wc
            .answer_sets(&limits())
            .unwrap()
            .iter()
            .map(|x| decode_pair(x).unwrap())
            .collect();
        decoded.sort();
        assert_eq!(decoded, se_models(&p, true, &limits()).unwrap());
    }

    fn assert_wc_matches_se_models(text: &str) {
        let p = parse_wcp(text).unwrap();
        let mut decoded: Vec<_> = wc_encode(&p)
            .unwrap()
            .answer_sets(&limits())
            .unwrap()
            .iter()
            .map(|x| decode_pair(x).unwrap())
            .collect();
        decoded.sort();
        assert_eq!(decoded, se_models(&p, true, &limits()).unwrap(), "{text}");
    }

    #[test]
    fn body_upper_bounds_are_read_on_the_there_set() {
        // ({}, {q}) is an SE-model: {q} violates `{q} 0`, so the reduct is empty
        assert_wc_matches_se_models("p :- {q} 0.");
        assert_wc_matches_se_models("p :- 1 {q, not r} 1.");
    }

    #[test]
    fn every_head_atom_of_the_there_set_is_required() {
        // ({p}, {p, q}) is not an SE-model: the reduct holds `p.` and `q.`
        assert_wc_matches_se_models("1 {p, q}.");
        assert_wc_matches_se_models("0 {p} 1 :- q.");
        assert_wc_matches_se_models("{p=2, q} 2 :- r.");
    }

    #[test]
    fn wc_of_empty_program() {
        let p = WcpProgram::default().with_atoms(["p".into()]);
        let wc = wc_encode(&p).unwrap();
        assert_eq!(
            wc.to_string(),
            ":- p__prime, not p.\n0 {p} 1.\n0 {p__prime} 1.\n"
        );
    }

    #[test]
    fn decode_single_fact() {
        let wc = wc_encode(&parse_wcp("p.").unwrap()).unwrap();
        let sets = wc.answer_sets(&limits()).unwrap();
        assert_eq!(sets, vec![LiteralSet::of(["p", "p__prime"])]);
        assert_eq!(decode_pair(&sets[0]).unwrap().to_string(), "({p}, {p})");
    }

    #[test]
    fn not_of_a_fact() {
        let p = parse_wcp("p.").unwrap();
        let n = not_encode(&p).unwrap();
        let h = head_atom(&WeightConstraint::singleton(RuleElement::pos("p")));
        let expected = format!("{h} :- p.\n__witness :- not {h}.\n0 {{p}} 1.\n:- not __witness.\n");
        assert_eq!(n.to_string(), expected);
        assert_eq!(
            n.answer_sets(&limits()).unwrap(),
            vec![LiteralSet::of(["__witness"])]
        );
    }

    #[test]
    fn not_of_empty_program_is_inconsistent() {
        let p = WcpProgram::default().with_atoms(["p".into()]);
        assert!(not_encode(&p)
            .unwrap()
            .answer_sets(&limits())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn not_of_a_constraint() {
        let p = parse_wcp(":- p.").unwrap();
        let n = not_encode(&p).unwrap();
        let restricted: Vec<LiteralSet> = n
            .answer_sets(&limits())
            .unwrap()
            .iter()
            .map(|y| restrict(y, &p))
            .collect();
        assert_eq!(restricted, vec![LiteralSet::of(["p"])]);
    }

    #[test]
    fn shared_heads_share_an_atom() {
        let p = parse_wcp("p :- q. p :- r.").unwrap();
        let n = not_encode(&p).unwrap();
        let h_rules = n
            .rules()
            .iter()
            .filter(|r| {
                r.head()
                    .as_singleton()
                    .is_some_and(|e| e.literal.atom().name().starts_with("h__"))
            })
            .count();
        assert_eq!(h_rules, 1);
    }

    #[test]
    fn or_consistency() {
        let consistent = parse_wcp("p.").unwrap();
        let inconsistent = parse_wcp("bot.").unwrap();
        let check = |a: &WcpProgram, b: &WcpProgram| {
            !or_combine(a, b)
                .program
                .answer_sets(&limits())
                .unwrap()
                .is_empty()
        };
        assert!(check(&consistent, &inconsistent));
        assert!(check(&inconsistent, &consistent));
        assert!(!check(&inconsistent, &inconsistent));
        let both = or_combine(&consistent, &parse_wcp("q.").unwrap());
        let sets = both.program.answer_sets(&limits()).unwrap();
        assert_eq!(
            sets,
            vec![
                LiteralSet::of(["p", "__selp"]),
                LiteralSet::of(["q", "__selq"])
            ]
        );
        assert!(!both.renamed);
    }

    #[test]
    fn selector_collisions_are_renamed() {
        let a = parse_wcp("__selp.").map(|_| ()).unwrap_err();
        assert!(matches!(a, Error::Syntax { .. }));
        let taken = WcpProgram::default().with_atoms([Atom::new(SELECT_FIRST)]);
        let combined = or_combine(&taken, &WcpProgram::default());
        assert!(combined.renamed);
        assert_eq!(combined.select_first.name(), "__selp1");
        assert_eq!(combined.select_second.name(), SELECT_SECOND);
    }

    #[test]
    fn verdicts() {
        let choice = parse_wcp("1 {p, q} 1.").unwrap();
        let even = parse_wcp("p :- not q. q :- not p. :- p, q.").unwrap();
        assert!(
            strongly_equivalent_via_wc(&choice, &even, &limits())
                .unwrap()
                .equivalent
        );

        let loose = parse_wcp("p :- not q. q :- not p.").unwrap();
        let verdict = strongly_equivalent_via_wc(&choice, &loose, &limits()).unwrap();
        assert!(!verdict.equivalent);
        let mismatch = verdict.mismatch.unwrap();
        assert_eq!(mismatch.model.to_string(), "({}, {p, q})");
        assert_eq!(mismatch.model_of, Side::Second);

        assert!(
            strongly_equivalent_via_wc(&loose, &loose, &limits())
                .unwrap()
                .equivalent
        );
    }

    #[test]
    fn classical_negation_is_rejected() {
        let p = parse_wcp("-p.").unwrap();
        assert_eq!(wc_encode(&p).unwrap_err(), Error::NotNegationFree);
        assert_eq!(not_encode(&p).unwrap_err(), Error::NotNegationFree);
    }
}
