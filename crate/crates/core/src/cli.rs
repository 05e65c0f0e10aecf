// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run_cli`] does all the work; the binary only
//! forwards the process arguments and exit code.
//!
//! Exit codes: 0 success or equivalent, 1 not equivalent, 2 usage, input
//! or parse error, 3 capacity exceeded or internal disagreement.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::encodings::dimacs::tseitin;
use crate::encodings::pl::{pl_program, pl_theory, strongly_equivalent_via_pl};
use crate::encodings::prop::PropFormula;
use crate::encodings::wc::{
    not_encode, se_difference_program, strongly_equivalent_via_wc, wc_encode,
};
use crate::equivalence::{
    self, formula_equiv_relative, joint, se_models, strongly_equivalent_direct, LogicProgram,
    Mismatch, Verdict,
};
use crate::error::Error;
use crate::literal::{Atom, LiteralSet};
use crate::nested::{Formula, NestedProgram};
use crate::parse::{parse_formula, parse_nested_with, parse_wcp_with, Language, ParseOptions};
use crate::random;
use crate::wcp::WcpProgram;
use crate::Limits;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "strongeq",
    version,
    about = "Answer sets and strong equivalence of ground logic programs"
)]
struct Cli {
    /// Print a JSON report on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Extra atoms added to the joint signature.
    #[arg(long, global = true, value_delimiter = ',', value_name = "A,B,...")]
    atoms: Vec<String>,
    /// Enumeration cap in atoms (default 12, or 16 for negation-free input).
    #[arg(long, global = true, value_name = "N")]
    max_atoms: Option<usize>,
    /// Input language; inferred from `.lp` / `.wcp` when absent.
    #[arg(long, global = true, value_enum)]
    lang: Option<LangArg>,
    /// Seed for randomized entry points.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LangArg {
    Nested,
    Wcp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    Pl,
    Wc,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Pl,
    Wc,
    Not,
    Dimacs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the answer sets of a program.
    AnswerSets { file: PathBuf },
    /// List the SE-models of a program.
    SeModels {
        /// Sets of atoms only; the program must be free of classical negation.
        #[arg(long)]
        positive: bool,
        file: PathBuf,
    },
    /// Decide whether two programs have the same answer sets.
    Equiv { first: PathBuf, second: PathBuf },
    /// Decide strong equivalence.
    StrongEquiv {
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
        /// Print a context program that separates non-equivalent programs.
        #[arg(long)]
        witness: bool,
        first: PathBuf,
        second: PathBuf,
    },
    /// Print an encoding; with two files, the encoding of their difference.
    Translate {
        #[arg(long, value_enum)]
        to: TargetArg,
        /// Write the auxiliary-variable mapping of a DIMACS export here.
        #[arg(long, value_name = "PATH")]
        map: Option<PathBuf>,
        file: PathBuf,
        second: Option<PathBuf>,
    },
    /// Decide whether two formulas are equivalent relative to a program.
    FormulaEquiv {
        #[arg(long)]
        program: PathBuf,
        f: String,
        g: String,
    },
    /// Cross-check the decision methods on random program pairs.
    SelfCheck {
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub methods: Vec<MethodReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub answer_sets: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub se_models: Option<Vec<PairReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MethodReport {
    pub name: String,
    pub equivalent: bool,
    pub timing_ms: f64,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct PairReport {
    pub here: Vec<String>,
    pub there: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct MismatchReport {
    pub pair: PairReport,
    pub model_of: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct WitnessReport {
    pub case: String,
    pub context: String,
    pub separating_set: Vec<String>,
    pub answer_set_of: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Option<Report>,
}

fn set_strings(set: &LiteralSet) -> Vec<String> {
    set.iter().map(|l| l.to_string()).collect()
}

fn pair_report(pair: &equivalence::SeModel) -> PairReport {
    PairReport {
        here: set_strings(pair.here()),
        there: set_strings(pair.there()),
    }
}

/// A failure together with its exit code.
struct Failure {
    exit_code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (exit_code, kind) = match &e {
            Error::SignatureTooLarge { .. } | Error::TooManyAtoms { .. } => {
                (EXIT_CAPACITY, "capacity")
            }
            Error::UnsoundWitness(_) | Error::HashCollision(_) => (EXIT_CAPACITY, "internal"),
            Error::Syntax { .. } | Error::ReservedName { .. } => (EXIT_USAGE, "parse"),
            _ => (EXIT_USAGE, "input"),
        };
        Failure {
            exit_code,
            kind,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: EXIT_USAGE,
        kind: "usage",
        message: message.into(),
    }
}

#[derive(Clone, Debug)]
enum Loaded {
    Nested(NestedProgram),
    Wcp(WcpProgram),
}

impl Loaded {
    fn language(&self) -> Language {
        match self {
            Loaded::Nested(_) => Language::Nested,
            Loaded::Wcp(_) => Language::Wcp,
        }
    }

    fn as_nested(&self) -> Option<NestedProgram> {
        match self {
            Loaded::Nested(p) => Some(p.clone()),
            Loaded::Wcp(p) => p.to_nested(),
        }
    }

    fn as_wcp(&self) -> Option<WcpProgram> {
        match self {
            Loaded::Nested(p) => WcpProgram::from_nested(p),
            Loaded::Wcp(p) => Some(p.clone()),
        }
    }
}

struct Context {
    limits: Limits,
    extra_atoms: Vec<Atom>,
    lang: Option<Language>,
}

impl Context {
    fn load(&self, path: &Path) -> Result<Loaded, Failure> {
        let language = self
            .lang
            .or_else(|| Language::from_path(path))
            .ok_or_else(|| {
                usage(format!(
                    "{}: cannot infer the language; use --lang",
                    path.display()
                ))
            })?;
        let text =
            std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let located = |e: Error| {
            let mut f = Failure::from(e);
            f.message = format!("{}:{}", path.display(), f.message);
            f
        };
        let options = ParseOptions::default();
        Ok(match language {
            Language::Nested => Loaded::Nested(
                parse_nested_with(&text, options)
                    .map_err(located)?
                    .with_atoms(self.extra_atoms.iter().cloned()),
            ),
            Language::Wcp => Loaded::Wcp(
                parse_wcp_with(&text, options)
                    .map_err(located)?
                    .with_atoms(self.extra_atoms.iter().cloned()),
            ),
        })
    }

    /// Two programs in one language; a mixed pair is converted where the
    /// shared fragment allows.
    fn load_pair(&self, first: &Path, second: &Path) -> Result<(Loaded, Loaded), Failure> {
        let (a, b) = (self.load(first)?, self.load(second)?);
        if a.language() == b.language() {
            return Ok((a, b));
        }
        if let (Some(x), Some(y)) = (a.as_nested(), b.as_nested()) {
            return Ok((Loaded::Nested(x), Loaded::Nested(y)));
        }
        if let (Some(x), Some(y)) = (a.as_wcp(), b.as_wcp()) {
            return Ok((Loaded::Wcp(x), Loaded::Wcp(y)));
        }
        Err(usage(
            "the programs are in different languages and neither converts to the other",
        ))
    }
}

/// A verdict stripped of its program type.
struct Summary {
    equivalent: bool,
    mismatch: Option<Mismatch>,
    witness: Option<WitnessReport>,
}

impl<P: LogicProgram> From<Verdict<P>> for Summary {
    fn from(v: Verdict<P>) -> Self {
        Summary {
            equivalent: v.equivalent,
            mismatch: v.mismatch,
            witness: v.witness.map(|w| WitnessReport {
                case: w.case.as_str().to_string(),
                context: w.context_program.to_string(),
                separating_set: set_strings(&w.separating_set),
                answer_set_of: w.answer_set_of.as_str().to_string(),
            }),
        }
    }
}

type MethodFn = Box<dyn Fn(&Limits) -> Result<Summary, Error>>;

/// Methods applicable to the pair, direct first.
fn applicable_methods(first: &Loaded, second: &Loaded) -> Vec<(&'static str, MethodFn)> {
    let mut methods: Vec<(&'static str, MethodFn)> = Vec::new();
    match (first, second) {
        (Loaded::Nested(p), Loaded::Nested(q)) => {
            let (p1, q1) = (p.clone(), q.clone());
            methods.push((
                "direct",
                Box::new(move |l| Ok(strongly_equivalent_direct(&p1, &q1, l)?.into())),
            ));
        }
        (Loaded::Wcp(p), Loaded::Wcp(q)) => {
            let (p1, q1) = (p.clone(), q.clone());
            methods.push((
                "direct",
                Box::new(move |l| Ok(strongly_equivalent_direct(&p1, &q1, l)?.into())),
            ));
        }
        _ => unreachable!("pairs share a language"),
    }
    if let (Some(p), Some(q)) = (first.as_nested(), second.as_nested()) {
        if p.is_negation_free() && q.is_negation_free() {
            methods.push((
                "pl",
                Box::new(move |l| Ok(strongly_equivalent_via_pl(&p, &q, l)?.into())),
            ));
        }
    }
    if let (Some(p), Some(q)) = (first.as_wcp(), second.as_wcp()) {
        if p.is_negation_free() && q.is_negation_free() {
            methods.push((
                "wc",
                Box::new(move |l| Ok(strongly_equivalent_via_wc(&p, &q, l)?.into())),
            ));
        }
    }
    methods
}

fn parse_extra_atoms(names: &[String]) -> Result<Vec<Atom>, Failure> {
    names
        .iter()
        .map(|name| match parse_formula(name) {
            Ok(Formula::Literal(l)) if !l.is_negated() => Ok(l.atom().clone()),
            Ok(_) => Err(usage(format!("--atoms: `{name}` is not an atom"))),
            Err(e) => Err(Failure::from(e)),
        })
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if informational {
                let _ = out.write_all(rendered.as_bytes());
                return Outcome {
                    exit_code: EXIT_OK,
                    report: None,
                };
            }
            let _ = err.write_all(rendered.as_bytes());
            return Outcome {
                exit_code: EXIT_USAGE,
                report: None,
            };
        }
    };
    let start = Instant::now();
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        command: command_name(&cli.command).to_string(),
        ..Report::default()
    };
    let mut text = String::new();
    let exit_code = match execute(&cli, &mut report, &mut text, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            report.error = Some(ErrorReport {
                kind: failure.kind.to_string(),
                message: failure.message,
            });
            failure.exit_code
        }
    };
    report.timing_ms = elapsed_ms(start);
    if cli.json {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        let _ = writeln!(out, "{json}");
    } else {
        let _ = out.write_all(text.as_bytes());
    }
    Outcome {
        exit_code,
        report: Some(report),
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::AnswerSets { .. } => "answer-sets",
        Command::SeModels { .. } => "se-models",
        Command::Equiv { .. } => "equiv",
        Command::StrongEquiv { .. } => "strong-equiv",
        Command::Translate { .. } => "translate",
        Command::FormulaEquiv { .. } => "formula-equiv",
        Command::SelfCheck { .. } => "self-check",
    }
}

fn execute(
    cli: &Cli,
    report: &mut Report,
    text: &mut String,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let ctx = Context {
        limits: cli
            .max_atoms
            .map_or_else(Limits::default, Limits::with_max_atoms),
        extra_atoms: parse_extra_atoms(&cli.atoms)?,
        lang: cli.lang.map(|l| match l {
            LangArg::Nested => Language::Nested,
            LangArg::Wcp => Language::Wcp,
        }),
    };
    match &cli.command {
        Command::AnswerSets { file } => {
            let sets = match ctx.load(file)? {
                Loaded::Nested(p) => p.answer_sets(&ctx.limits)?,
                Loaded::Wcp(p) => p.answer_sets(&ctx.limits)?,
            };
            for set in &sets {
                writeln!(text, "answer set: {set}").unwrap();
            }
            writeln!(text, "answer sets: {}", sets.len()).unwrap();
            report.answer_sets = Some(sets.iter().map(set_strings).collect());
            Ok(EXIT_OK)
        }
        Command::SeModels { positive, file } => {
            let models = match ctx.load(file)? {
                Loaded::Nested(p) => se_models(&p, *positive, &ctx.limits)?,
                Loaded::Wcp(p) => se_models(&p, *positive, &ctx.limits)?,
            };
            for m in &models {
                writeln!(text, "se-model: {m}").unwrap();
            }
            writeln!(text, "se-models: {}", models.len()).unwrap();
            report.se_models = Some(models.iter().map(pair_report).collect());
            Ok(EXIT_OK)
        }
        Command::Equiv { first, second } => {
            let equivalent = match ctx.load_pair(first, second)? {
                (Loaded::Nested(p), Loaded::Nested(q)) => {
                    equivalence::equivalent(&p, &q, &ctx.limits)?
                }
                (Loaded::Wcp(p), Loaded::Wcp(q)) => equivalence::equivalent(&p, &q, &ctx.limits)?,
                _ => unreachable!("pairs share a language"),
            };
            writeln!(text, "equivalent: {}", yes_no(equivalent)).unwrap();
            report.verdict = Some(equivalent);
            Ok(if equivalent {
                EXIT_OK
            } else {
                EXIT_NOT_EQUIVALENT
            })
        }
        Command::StrongEquiv {
            method,
            witness,
            first,
            second,
        } => strong_equiv(&ctx, *method, *witness, first, second, report, text, err),
        Command::Translate {
            to,
            map,
            file,
            second,
        } => translate(
            &ctx,
            *to,
            map.as_deref(),
            file,
            second.as_deref(),
            report,
            text,
        ),
        Command::FormulaEquiv { program, f, g } => {
            let program = match ctx.load(program)? {
                Loaded::Nested(p) => p,
                Loaded::Wcp(p) => p.to_nested().ok_or_else(|| {
                    usage("formula-equiv needs a program expressible in nested syntax")
                })?,
            };
            let f = parse_formula(f)?;
            let g = parse_formula(g)?;
            let equivalent = formula_equiv_relative(&program, &f, &g, &ctx.limits)?;
            writeln!(
                text,
                "equivalent relative to the program: {}",
                yes_no(equivalent)
            )
            .unwrap();
            report.verdict = Some(equivalent);
            Ok(if equivalent {
                EXIT_OK
            } else {
                EXIT_NOT_EQUIVALENT
            })
        }
        Command::SelfCheck { count } => {
            self_check(&ctx, cli.seed.unwrap_or(0), *count, report, text)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn strong_equiv(
    ctx: &Context,
    method: MethodArg,
    show_witness: bool,
    first: &Path,
    second: &Path,
    report: &mut Report,
    text: &mut String,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let (a, b) = ctx.load_pair(first, second)?;
    let available = applicable_methods(&a, &b);
    let wanted: Vec<&'static str> = match method {
        MethodArg::Direct => vec!["direct"],
        MethodArg::Pl => vec!["pl"],
        MethodArg::Wc => vec!["wc"],
        MethodArg::All => available.iter().map(|(n, _)| *n).collect(),
    };
    let mut reported: Option<Summary> = None;
    for name in wanted {
        let Some((_, run)) = available.iter().find(|(n, _)| *n == name) else {
            return Err(usage(format!(
                "method {name} does not apply: it needs programs without classical negation{}",
                if name == "wc" {
                    " that are expressible as weight constraint programs"
                } else if name == "pl" {
                    " that are expressible in nested syntax"
                } else {
                    ""
                }
            )));
        };
        let start = Instant::now();
        let summary = run(&ctx.limits)?;
        let timing_ms = elapsed_ms(start);
        writeln!(
            text,
            "method {name}: {} ({timing_ms} ms)",
            if summary.equivalent {
                "strongly equivalent"
            } else {
                "not strongly equivalent"
            }
        )
        .unwrap();
        report.methods.push(MethodReport {
            name: name.to_string(),
            equivalent: summary.equivalent,
            timing_ms,
        });
        match &reported {
            None => reported = Some(summary),
            Some(previous) if previous.equivalent != summary.equivalent => {
                let _ = writeln!(err, "methods disagree: {:?}", report.methods);
                return Err(Failure {
                    exit_code: EXIT_CAPACITY,
                    kind: "disagreement",
                    message: "decision methods disagree".to_string(),
                });
            }
            Some(_) => {}
        }
    }
    let summary = reported.expect("at least one method ran");
    report.verdict = Some(summary.equivalent);
    writeln!(text, "strongly equivalent: {}", yes_no(summary.equivalent)).unwrap();
    if let Some(m) = &summary.mismatch {
        writeln!(
            text,
            "mismatch: {} is an SE-model of the {} program only",
            m.model,
            m.model_of.as_str()
        )
        .unwrap();
        report.mismatch = Some(MismatchReport {
            pair: pair_report(&m.model),
            model_of: m.model_of.as_str().to_string(),
        });
    }
    if show_witness {
        if let Some(w) = summary.witness {
            writeln!(text, "witness case: {}", w.case).unwrap();
            writeln!(text, "context:").unwrap();
            for line in w.context.lines() {
                writeln!(text, "  {line}").unwrap();
            }
            writeln!(text, "separating set: {{{}}}", w.separating_set.join(", ")).unwrap();
            writeln!(
                text,
                "answer set of: {} program with the context",
                w.answer_set_of
            )
            .unwrap();
            report.witness = Some(w);
        }
    }
    Ok(if summary.equivalent {
        EXIT_OK
    } else {
        EXIT_NOT_EQUIVALENT
    })
}

fn nested_for(loaded: &Loaded) -> Result<NestedProgram, Failure> {
    loaded
        .as_nested()
        .ok_or_else(|| usage("the pl encoding needs a program expressible in nested syntax"))
}

fn wcp_for(loaded: &Loaded) -> Result<WcpProgram, Failure> {
    loaded.as_wcp().ok_or_else(|| {
        usage("this encoding needs a program expressible as a weight constraint program")
    })
}

fn translate(
    ctx: &Context,
    to: TargetArg,
    map: Option<&Path>,
    file: &Path,
    second: Option<&Path>,
    report: &mut Report,
    text: &mut String,
) -> Result<i32, Failure> {
    let pair = match second {
        Some(second) => Some(ctx.load_pair(file, second)?),
        None => None,
    };
    let single = match &pair {
        Some(_) => None,
        None => Some(ctx.load(file)?),
    };
    let pl_formula = || -> Result<PropFormula, Failure> {
        Ok(match (&pair, &single) {
            (Some((a, b)), _) => {
                let (p, q) = joint(&nested_for(a)?, &nested_for(b)?);
                PropFormula::xor(pl_program(&p)?, pl_program(&q)?)
            }
            (None, Some(a)) => pl_program(&nested_for(a)?)?,
            _ => unreachable!(),
        })
    };
    let output = match to {
        TargetArg::Pl => match (&pair, &single) {
            (None, Some(a)) => {
                let mut s = String::new();
                for f in pl_theory(&nested_for(a)?)? {
                    writeln!(s, "{f}").unwrap();
                }
                s
            }
            _ => format!("{}\n", pl_formula()?),
        },
        TargetArg::Dimacs => {
            let cnf = tseitin(&pl_formula()?);
            if let Some(path) = map {
                std::fs::write(path, cnf.sidecar())
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                report
                    .notes
                    .push(format!("auxiliary variables written to {}", path.display()));
            }
            cnf.to_dimacs()
        }
        TargetArg::Wc => match (&pair, &single) {
            (Some((a, b)), _) => {
                let combined = se_difference_program(&wcp_for(a)?, &wcp_for(b)?)?;
                if combined.renamed {
                    report.notes.push(format!(
                        "selector atoms renamed to {} and {}",
                        combined.select_first, combined.select_second
                    ));
                }
                combined.program.to_string()
            }
            (None, Some(a)) => wc_encode(&wcp_for(a)?)?.to_string(),
            _ => unreachable!(),
        },
        TargetArg::Not => match (&pair, &single) {
            (None, Some(a)) => not_encode(&wcp_for(a)?)?.to_string(),
            _ => return Err(usage("--to not takes a single program")),
        },
    };
    text.push_str(&output);
    report.output = Some(output);
    Ok(EXIT_OK)
}

/// Runs every applicable method on random pairs and counts disagreements.
fn self_check(
    ctx: &Context,
    seed: u64,
    count: usize,
    report: &mut Report,
    text: &mut String,
) -> Result<i32, Failure> {
    use random::{
        mutate_nested, mutate_wcp, nested_program, wcp_program, NestedParams, NestedShape,
        WcpParams,
    };
    let mut rng = random::rng(seed);
    let mut disagreements = 0;
    let mut equivalent_pairs = 0;
    let shapes = [
        NestedShape::Overlap,
        NestedShape::NegationFree,
        NestedShape::General,
    ];
    for i in 0..count {
        let pair = if i % 4 == 3 {
            let params = WcpParams::new(3, 3);
            let p = wcp_program(&mut rng, &params);
            let q = mutate_wcp(&mut rng, &p, &params);
            (Loaded::Wcp(p), Loaded::Wcp(q))
        } else {
            let params = NestedParams::new(3, 4, shapes[i % 4]);
            let p = nested_program(&mut rng, &params);
            let q = mutate_nested(&mut rng, &p, &params);
            (Loaded::Nested(p), Loaded::Nested(q))
        };
        let mut verdicts = Vec::new();
        for (name, run) in applicable_methods(&pair.0, &pair.1) {
            verdicts.push((name, run(&ctx.limits)?.equivalent));
        }
        if verdicts.iter().any(|(_, v)| *v != verdicts[0].1) {
            disagreements += 1;
            writeln!(text, "disagreement on pair {i}: {verdicts:?}").unwrap();
        }
        equivalent_pairs += usize::from(verdicts[0].1);
    }
    writeln!(text, "pairs: {count}").unwrap();
    writeln!(text, "strongly equivalent pairs: {equivalent_pairs}").unwrap();
    writeln!(text, "disagreements: {disagreements}").unwrap();
    report.verdict = Some(disagreements == 0);
    report.notes.push(format!("seed {seed}"));
    Ok(if disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_CAPACITY
    })
}
