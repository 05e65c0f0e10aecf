// SPDX-License-Identifier: Apache-2.0

//! Text formats for both program languages.
//!
//! Nested programs (`.lp`):
//!
//! ```text
//! p ; q.            % disjunctive fact
//! :- p, q.          % constraint, same as `bot :- p, q.`
//! r :- not (p ; q), -s.
//! ```
//!
//! `not` binds tighter than `,`, which binds tighter than `;`; both binary
//! connectives fold to the right. `-a` is classical negation.
//!
//! Weight constraint programs (`.wcp`):
//!
//! ```text
//! 1 {p, q} 1.
//! p :- not q.
//! :- 2 {p=1.5, q}.
//! ```
//!
//! Either bound may be omitted, `=w` defaults to 1, and a bare rule element
//! `e` stands for `1 {e}`. Weights and bounds are integers, decimals or
//! fractions `n/d`. `%` starts a comment.

use std::path::Path;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::literal::{Atom, Literal};
use crate::nested::{Formula, NestedProgram, Rule};
use crate::wcp::{Bound, Rational, RuleElement, WcpProgram, WcpRule, WeightConstraint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Language {
    Nested,
    Wcp,
}

impl Language {
    /// `.lp` is nested, `.wcp` is weight constraint syntax.
    pub fn from_path(path: &Path) -> Option<Language> {
        match path.extension()?.to_str()? {
            "lp" => Some(Language::Nested),
            "wcp" => Some(Language::Wcp),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Accept generated names containing `__`, as printed by the encodings.
    pub allow_reserved: bool,
}

pub fn parse_nested(text: &str) -> Result<NestedProgram> {
    parse_nested_with(text, ParseOptions::default())
}

pub fn parse_nested_with(text: &str, options: ParseOptions) -> Result<NestedProgram> {
    let mut parser = Parser::new(text, options)?;
    let mut rules = Vec::new();
    while !parser.at_end() {
        rules.push(parser.nested_rule()?);
    }
    Ok(NestedProgram::new(rules))
}

/// A single formula, optionally followed by `.`.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut parser = Parser::new(text, ParseOptions::default())?;
    let formula = parser.formula()?;
    parser.eat(&Tok::Dot);
    parser.expect_end()?;
    Ok(formula)
}

pub fn parse_wcp(text: &str) -> Result<WcpProgram> {
    parse_wcp_with(text, ParseOptions::default())
}

pub fn parse_wcp_with(text: &str, options: ParseOptions) -> Result<WcpProgram> {
    let mut parser = Parser::new(text, options)?;
    let mut rules = Vec::new();
    while !parser.at_end() {
        rules.push(parser.wcp_rule()?);
    }
    Ok(WcpProgram::new(rules))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Atom(String),
    Number(Rational),
    Not,
    Top,
    Bot,
    If,
    Dot,
    Comma,
    Semi,
    Minus,
    Eq,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(name) => format!("atom `{name}`"),
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Not => "`not`".into(),
            Tok::Top => "`top`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::If => "`:-`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Eq => "`=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn syntax(pos: Pos, message: impl Into<String>) -> Error {
    Error::Syntax {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.char_indices().peekable(),
            text,
            line: 1,
            column: 1,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.column,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|(_, c)| *c)
    }

    fn peek_second(&self) -> Option<char> {
        let mut ahead = self.chars.clone();
        ahead.next();
        ahead.next().map(|(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |(i, _)| *i)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.offset();
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
        let end = self.offset();
        &self.text[start..end]
    }

    fn tokens(mut self) -> Result<Vec<(Tok, Pos)>> {
        let mut out = Vec::new();
        loop {
            while self.peek().is_some_and(char::is_whitespace) {
                self.bump();
            }
            let pos = self.pos();
            let Some(c) = self.peek() else {
                return Ok(out);
            };
            let tok = match c {
                '%' => {
                    self.take_while(|c| c != '\n');
                    continue;
                }
                'a'..='z' => self.word(pos)?,
                '0'..='9' => Tok::Number(self.number(pos)?),
                '-' if self.peek_second().is_some_and(|c| c.is_ascii_digit()) => {
                    self.bump();
                    Tok::Number(-self.number(pos)?)
                }
                ':' => {
                    self.bump();
                    if self.bump() != Some('-') {
                        return Err(syntax(pos, "expected `:-`"));
                    }
                    Tok::If
                }
                _ => {
                    self.bump();
                    match c {
                        '.' => Tok::Dot,
                        ',' => Tok::Comma,
                        ';' => Tok::Semi,
                        '-' => Tok::Minus,
                        '=' => Tok::Eq,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '{' => Tok::LBrace,
                        '}' => Tok::RBrace,
                        other => {
                            return Err(syntax(pos, format!("unexpected character `{other}`")))
                        }
                    }
                }
            };
            out.push((tok, pos));
        }
    }

    fn identifier(&mut self) -> &'a str {
        self.take_while(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    fn word(&mut self, pos: Pos) -> Result<Tok> {
        let name = self.identifier();
        match name {
            "not" => return Ok(Tok::Not),
            "top" => return Ok(Tok::Top),
            "bot" => return Ok(Tok::Bot),
            _ => {}
        }
        if self.peek() != Some('(') {
            return Ok(Tok::Atom(name.to_string()));
        }
        // ground arguments are flattened into the atom name
        self.bump();
        let mut args = Vec::new();
        loop {
            self.take_while(|c| c == ' ' || c == '\t');
            let arg_pos = self.pos();
            let negative = self.peek() == Some('-');
            if negative {
                self.bump();
            }
            let arg = match self.peek() {
                Some('0'..='9') => self.take_while(|c| c.is_ascii_digit()),
                Some('a'..='z') if !negative => self.identifier(),
                _ => {
                    return Err(syntax(
                        arg_pos,
                        "expected an integer or identifier argument",
                    ))
                }
            };
            args.push(if negative {
                format!("-{arg}")
            } else {
                arg.to_string()
            });
            self.take_while(|c| c == ' ' || c == '\t');
            match self.bump() {
                Some(',') => continue,
                Some(')') => break,
                _ => return Err(syntax(self.pos(), "expected `,` or `)` in atom arguments")),
            }
        }
        let _ = pos;
        Ok(Tok::Atom(format!("{}({})", name, args.join(","))))
    }

    fn number(&mut self, pos: Pos) -> Result<Rational> {
        let int = |digits: &str| -> Result<i128> {
            digits
                .parse::<i128>()
                .map_err(|_| syntax(pos, format!("number `{digits}` out of range")))
        };
        let whole = self.take_while(|c| c.is_ascii_digit());
        let whole_value = int(whole)?;
        if self.peek() == Some('.') && self.peek_second().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            let frac = self.take_while(|c| c.is_ascii_digit());
            let scale = 10i128
                .checked_pow(frac.len() as u32)
                .ok_or_else(|| syntax(pos, "too many decimal places"))?;
            let numerator = whole_value
                .checked_mul(scale)
                .and_then(|n| n.checked_add(int(frac).ok()?))
                .ok_or_else(|| syntax(pos, "number out of range"))?;
            return Ok(Rational::new(numerator, scale));
        }
        if self.peek() == Some('/') && self.peek_second().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
            let denominator = int(self.take_while(|c| c.is_ascii_digit()))?;
            if denominator == 0 {
                return Err(syntax(pos, "zero denominator"));
            }
            return Ok(Rational::new(whole_value, denominator));
        }
        Ok(Rational::from_integer(whole_value))
    }
}

struct Parser {
    tokens: Vec<(Tok, Pos)>,
    next: usize,
    end: Pos,
    options: ParseOptions,
}

impl Parser {
    fn new(text: &str, options: ParseOptions) -> Result<Self> {
        let lexer = Lexer::new(text);
        let mut end_lexer = Lexer::new(text);
        while end_lexer.bump().is_some() {}
        let end = end_lexer.pos();
        Ok(Parser {
            tokens: lexer.tokens()?,
            next: 0,
            end,
            options,
        })
    }

    fn at_end(&self) -> bool {
        self.next == self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.next).map(|(t, _)| t)
    }

    fn peek_at(&self, ahead: usize) -> Option<&Tok> {
        self.tokens.get(self.next + ahead).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.tokens.get(self.next).map_or(self.end, |(_, p)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.next += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Tok::describe);
        syntax(self.pos(), format!("expected {wanted}, found {found}"))
    }

    fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn literal(&mut self) -> Result<Literal> {
        let negated = self.eat(&Tok::Minus);
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Atom(name)) => {
                self.next += 1;
                let atom = Atom::new(&name);
                if atom.is_reserved() && !self.options.allow_reserved {
                    return Err(Error::ReservedName {
                        line: pos.line,
                        column: pos.column,
                        name,
                    });
                }
                Ok(if negated {
                    Literal::negative(atom)
                } else {
                    Literal::positive(atom)
                })
            }
            _ => Err(self.unexpected("an atom")),
        }
    }

    // --- nested syntax ---

    fn nested_rule(&mut self) -> Result<Rule> {
        let head = if self.peek() == Some(&Tok::If) {
            Formula::Bottom
        } else {
            self.formula()?
        };
        let body = if self.eat(&Tok::If) {
            self.formula()?
        } else {
            Formula::Top
        };
        self.expect(&Tok::Dot)?;
        Ok(Rule::new(head, body))
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut items = vec![self.conjunction()?];
        while self.eat(&Tok::Semi) {
            items.push(self.conjunction()?);
        }
        Ok(Formula::disjunction(items))
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut items = vec![self.unary()?];
        while self.eat(&Tok::Comma) {
            items.push(self.unary()?);
        }
        Ok(Formula::conjunction(items))
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Not) => {
                self.next += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.next += 1;
                let inner = self.formula()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Top) => {
                self.next += 1;
                Ok(Formula::Top)
            }
            Some(Tok::Bot) => {
                self.next += 1;
                Ok(Formula::Bottom)
            }
            Some(Tok::Atom(_)) | Some(Tok::Minus) => Ok(Formula::Literal(self.literal()?)),
            _ => Err(self.unexpected("a formula")),
        }
    }

    // --- weight constraint syntax ---

    fn wcp_rule(&mut self) -> Result<WcpRule> {
        let head = if self.peek() == Some(&Tok::If) {
            WeightConstraint::bottom()
        } else {
            self.constraint()?
        };
        let mut body = Vec::new();
        if self.eat(&Tok::If) {
            body.push(self.constraint()?);
            while self.eat(&Tok::Comma) {
                body.push(self.constraint()?);
            }
        }
        self.expect(&Tok::Dot)?;
        WcpRule::new(head, body)
    }

    fn element(&mut self) -> Result<RuleElement> {
        if self.eat(&Tok::Not) {
            Ok(RuleElement::neg(self.literal()?))
        } else {
            Ok(RuleElement::pos(self.literal()?))
        }
    }

    fn number(&mut self) -> Option<Rational> {
        match self.peek() {
            Some(Tok::Number(n)) => {
                let n = *n;
                self.next += 1;
                Some(n)
            }
            _ => None,
        }
    }

    fn constraint(&mut self) -> Result<WeightConstraint> {
        if self.eat(&Tok::Bot) {
            return Ok(WeightConstraint::bottom());
        }
        let braced = matches!(self.peek(), Some(Tok::LBrace))
            || matches!(
                (self.peek(), self.peek_at(1)),
                (Some(Tok::Number(_)), Some(Tok::LBrace))
            );
        if !braced {
            if matches!(self.peek(), Some(Tok::Number(_))) {
                return Err(syntax(self.pos(), "a lower bound must be followed by `{`"));
            }
            return Ok(WeightConstraint::singleton(self.element()?));
        }
        let lower = self.number().map_or(Bound::NegInf, Bound::Finite);
        self.expect(&Tok::LBrace)?;
        let mut assignments = Vec::new();
        if !self.eat(&Tok::RBrace) {
            loop {
                let element = self.element()?;
                let weight = if self.eat(&Tok::Eq) {
                    self.number().ok_or_else(|| self.unexpected("a weight"))?
                } else {
                    Rational::from_integer(1)
                };
                if weight < Rational::zero() {
                    return Err(Error::NegativeWeight(weight.to_string()));
                }
                assignments.push((element, weight));
                if self.eat(&Tok::RBrace) {
                    break;
                }
                self.expect(&Tok::Comma)?;
            }
        }
        let upper = self.number().map_or(Bound::PosInf, Bound::Finite);
        WeightConstraint::new(lower, upper, assignments)
    }
}
