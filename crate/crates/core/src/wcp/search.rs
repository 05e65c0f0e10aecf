// SPDX-License-Identifier: Apache-2.0

//! Backtracking search for answer sets of weight constraint programs.
//!
//! Variables are the head literals of the program; every other literal is
//! false in every answer set. Each node propagates three sound rules until
//! fixpoint:
//!
//! * consistency: a true literal makes its complement false;
//! * rule closure: a rule whose body is certainly satisfied needs its head,
//!   and a rule whose head certainly fails needs some body constraint to
//!   fail;
//! * support: an answer set equals the least model of its reduct, so it is
//!   contained in an optimistic over-approximation of that least model, and
//!   literals outside the approximation are false.
//!
//! Leaves are checked against the definition.

use num_traits::Zero;

use super::{Bound, Rational, WcpProgram};
use crate::literal::{Literal, LiteralSet};

#[derive(Clone, Debug)]
struct Elem {
    var: usize,
    negative: bool,
    weight: Rational,
}

#[derive(Clone, Debug)]
struct Constraint {
    lower: Bound,
    upper: Bound,
    /// Weight of negative elements over literals that are never true.
    constant: Rational,
    elems: Vec<Elem>,
}

#[derive(Clone, Debug)]
struct CompiledRule {
    head: Constraint,
    body: Vec<Constraint>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Sat,
    Unsat,
    Open,
}

type Assignment = Vec<Option<bool>>;

struct Conflict;

impl Elem {
    fn satisfied(&self, value: Option<bool>) -> Option<bool> {
        value.map(|v| v != self.negative)
    }
}

impl Constraint {
    /// Smallest and largest weight sums over all completions.
    fn range(&self, assign: &Assignment) -> (Rational, Rational) {
        let mut min = self.constant;
        let mut open = Rational::zero();
        for e in &self.elems {
            match e.satisfied(assign[e.var]) {
                Some(true) => min += e.weight,
                Some(false) => {}
                None => open += e.weight,
            }
        }
        (min, min + open)
    }

    fn status(&self, assign: &Assignment) -> Status {
        let (min, max) = self.range(assign);
        if self.lower.at_most(&min) && self.upper.at_least(&max) {
            Status::Sat
        } else if !self.lower.at_most(&max) || !self.upper.at_least(&min) {
            Status::Unsat
        } else {
            Status::Open
        }
    }
}

pub(super) struct Solver {
    vars: Vec<Literal>,
    complement: Vec<Option<usize>>,
    rules: Vec<CompiledRule>,
    order: Vec<usize>,
}

impl Solver {
    pub(super) fn new(program: &WcpProgram) -> Self {
        let vars: Vec<Literal> = program.head_literals().into_iter().collect();
        let index = |l: &Literal| vars.binary_search(l).ok();
        let complement = vars.iter().map(|l| index(&l.complement())).collect();

        let compile = |c: &super::WeightConstraint| {
            let mut constant = Rational::zero();
            let mut elems = Vec::new();
            for (e, w) in c.elements() {
                match index(&e.literal) {
                    Some(var) => elems.push(Elem {
                        var,
                        negative: !e.is_positive(),
                        weight: *w,
                    }),
                    None if !e.is_positive() => constant += w,
                    None => {}
                }
            }
            Constraint {
                lower: c.lower.clone(),
                upper: c.upper.clone(),
                constant,
                elems,
            }
        };
        let rules: Vec<CompiledRule> = program
            .rules()
            .iter()
            .map(|r| CompiledRule {
                head: compile(r.head()),
                body: r.body().iter().map(compile).collect(),
            })
            .collect();

        // branch first on the literals that occur in the most bodies
        let mut occurrences = vec![0usize; vars.len()];
        for rule in &rules {
            for c in &rule.body {
                for e in &c.elems {
                    occurrences[e.var] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(occurrences[v]));

        Solver {
            vars,
            complement,
            rules,
            order,
        }
    }

    pub(super) fn all(&self) -> Vec<LiteralSet> {
        let mut found = Vec::new();
        self.search(vec![None; self.vars.len()], &mut |x| {
            found.push(x);
            true
        });
        found
    }

    pub(super) fn first(&self) -> Option<LiteralSet> {
        let mut found = None;
        self.search(vec![None; self.vars.len()], &mut |x| {
            found = Some(x);
            false
        });
        found
    }

    /// Depth-first search; `emit` returns false to stop.
    fn search(&self, mut assign: Assignment, emit: &mut dyn FnMut(LiteralSet) -> bool) -> bool {
        if self.propagate(&mut assign).is_err() {
            return true;
        }
        match self.order.iter().copied().find(|&v| assign[v].is_none()) {
            None => {
                if self.is_answer_set(&assign) {
                    let x = self
                        .vars
                        .iter()
                        .zip(&assign)
                        .filter(|(_, v)| **v == Some(true))
                        .map(|(l, _)| l.clone());
                    return emit(LiteralSet::of(x));
                }
                true
            }
            Some(var) => {
                for value in [true, false] {
                    let mut next = assign.clone();
                    next[var] = Some(value);
                    if !self.search(next, emit) {
                        return false;
                    }
                }
                true
            }
        }
    }

    fn set(
        assign: &mut Assignment,
        var: usize,
        value: bool,
        changed: &mut bool,
    ) -> Result<(), Conflict> {
        match assign[var] {
            Some(v) if v != value => Err(Conflict),
            Some(_) => Ok(()),
            None => {
                assign[var] = Some(value);
                *changed = true;
                Ok(())
            }
        }
    }

    fn propagate(&self, assign: &mut Assignment) -> Result<(), Conflict> {
        loop {
            let mut changed = false;

            for var in 0..self.vars.len() {
                if assign[var] == Some(true) {
                    if let Some(c) = self.complement[var] {
                        Self::set(assign, c, false, &mut changed)?;
                    }
                }
            }

            for rule in &self.rules {
                let statuses: Vec<Status> = rule.body.iter().map(|c| c.status(assign)).collect();
                if statuses.contains(&Status::Unsat) {
                    continue;
                }
                let head = rule.head.status(assign);
                if statuses.iter().all(|s| *s == Status::Sat) {
                    if head == Status::Unsat {
                        return Err(Conflict);
                    }
                    if head == Status::Open {
                        self.force_satisfied(&rule.head, assign, &mut changed)?;
                    }
                } else if head == Status::Unsat {
                    let open: Vec<usize> = (0..statuses.len())
                        .filter(|&i| statuses[i] == Status::Open)
                        .collect();
                    if let [only] = open[..] {
                        self.force_lower_unsatisfied(&rule.body[only], assign, &mut changed)?;
                    }
                }
            }

            let support = self.support(assign);
            for (var, supported) in support.into_iter().enumerate() {
                if !supported {
                    Self::set(assign, var, false, &mut changed)?;
                }
            }

            if !changed {
                return Ok(());
            }
        }
    }

    /// Fixes open elements whose value is implied by the constraint holding.
    fn force_satisfied(
        &self,
        c: &Constraint,
        assign: &mut Assignment,
        changed: &mut bool,
    ) -> Result<(), Conflict> {
        let (min, max) = c.range(assign);
        for e in &c.elems {
            if assign[e.var].is_some() {
                continue;
            }
            let needed = !c.lower.at_most(&(max - e.weight));
            let excluded = !c.upper.at_least(&(min + e.weight));
            match (needed, excluded) {
                (true, true) => return Err(Conflict),
                (true, false) => Self::set(assign, e.var, !e.negative, changed)?,
                (false, true) => Self::set(assign, e.var, e.negative, changed)?,
                (false, false) => {}
            }
        }
        Ok(())
    }

    /// For a constraint that must fail through its lower bound alone: any
    /// open element whose satisfaction would reach the bound must fail.
    fn force_lower_unsatisfied(
        &self,
        c: &Constraint,
        assign: &mut Assignment,
        changed: &mut bool,
    ) -> Result<(), Conflict> {
        if c.upper != Bound::PosInf {
            return Ok(());
        }
        let (min, _) = c.range(assign);
        for e in &c.elems {
            if assign[e.var].is_none() && c.lower.at_most(&(min + e.weight)) {
                Self::set(assign, e.var, e.negative, changed)?;
            }
        }
        Ok(())
    }

    /// Over-approximates the least model of `P^X` for every completion `X`.
    fn support(&self, assign: &Assignment) -> Vec<bool> {
        let possible = |v: usize| assign[v] != Some(false);
        let mut derived = vec![false; self.vars.len()];
        loop {
            let mut grew = false;
            for rule in &self.rules {
                let mut heads = rule
                    .head
                    .elems
                    .iter()
                    .filter(|e| !derived[e.var] && possible(e.var))
                    .peekable();
                if heads.peek().is_none() {
                    continue;
                }
                let body_ok = rule.body.iter().all(|c| {
                    let (min, _) = c.range(assign);
                    if !c.upper.at_least(&min) {
                        return false;
                    }
                    let mut best = c.constant;
                    for e in &c.elems {
                        let counts = if e.negative {
                            assign[e.var] != Some(true)
                        } else {
                            derived[e.var]
                        };
                        if counts {
                            best += e.weight;
                        }
                    }
                    c.lower.at_most(&best)
                });
                if body_ok {
                    let vars: Vec<usize> = heads.map(|e| e.var).collect();
                    for v in vars {
                        derived[v] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return derived;
            }
        }
    }

    /// Full assignment: `X ⊨ P` and `X` is the least model of `P^X`.
    fn is_answer_set(&self, assign: &Assignment) -> bool {
        for rule in &self.rules {
            if rule.body.iter().all(|c| c.status(assign) == Status::Sat)
                && rule.head.status(assign) != Status::Sat
            {
                return false;
            }
        }
        let truth = |v: usize| assign[v] == Some(true);
        let mut reduct: Vec<(usize, Vec<(Bound, &Constraint)>)> = Vec::new();
        for rule in &self.rules {
            if !rule.body.iter().all(|c| {
                let (v, _) = c.range(assign);
                c.upper.at_least(&v)
            }) {
                continue;
            }
            let body: Vec<(Bound, &Constraint)> = rule
                .body
                .iter()
                .map(|c| {
                    let mut negative = c.constant;
                    for e in c.elems.iter().filter(|e| e.negative && !truth(e.var)) {
                        negative += e.weight;
                    }
                    (c.lower.minus(&negative), c)
                })
                .collect();
            for e in &rule.head.elems {
                if truth(e.var) {
                    reduct.push((e.var, body.clone()));
                }
            }
        }
        let mut model = vec![false; self.vars.len()];
        loop {
            let mut grew = false;
            for (head, body) in &reduct {
                if model[*head] {
                    continue;
                }
                let fires = body.iter().all(|(lower, c)| {
                    let mut sum = Rational::zero();
                    for e in c.elems.iter().filter(|e| !e.negative && model[e.var]) {
                        sum += e.weight;
                    }
                    lower.at_most(&sum)
                });
                if fires {
                    model[*head] = true;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        (0..self.vars.len()).all(|v| model[v] == truth(v))
    }
}
