//! Command-line front end.

mod kb;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use kb::KbFile;
pub use report::{Inputs, Output, RunReport};

use crate::base_change::{
    base_infra_contraction, base_infra_remainders, base_kernel_contraction, base_kernels, base_partial_meet,
    base_remainders, saturated_base_kernel_contraction, BeliefBase, IncisionSpec, InfraSpec, SelectionSpec,
};
use crate::beliefset_change::{
    bs_contract, bs_infra_remainders, bs_kernels, bs_remainders, BsMethod, Presentation, PropBeliefSet,
};
use crate::error::{Error, Result};
use crate::formula::{render, Formula, Signature};
use crate::horn_change::{
    e_contract, e_remainders, horn_kernel_e_contraction, horn_kernels, infra_e_contraction, infra_e_remainders,
    EMethod, HornBeliefSet, HornInfraSpec, OrderSpec,
};
use crate::postulates::{check, ContractionTable, Outcome, Postulate, Subject, SubjectKind};
use crate::semantics::ModelSet;

#[derive(Parser, Debug)]
#[command(
    name = "belief-change",
    version,
    about = "Partial meet, kernel and infra contraction for belief bases, belief sets and Horn belief sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// What the knowledge base denotes.
    #[arg(long, value_enum, default_value = "base")]
    mode: Mode,
    /// Knowledge-base file: a `sig:` line, then one formula per line.
    #[arg(long)]
    kb: Option<PathBuf>,
    /// The formula to contract by.
    #[arg(long)]
    phi: Option<String>,
    /// Emit the run report as JSON.
    #[arg(long)]
    json: bool,
    /// Maximum number of family members listed.
    #[arg(long, default_value_t = 100)]
    limit: usize,
}

#[derive(Args, Debug, Clone, Default)]
struct Choices {
    /// all | first | idx:0,2
    #[arg(long)]
    selection: Option<String>,
    /// max | min-first | set:"p -> q","q -> r"
    #[arg(long)]
    incision: Option<String>,
    /// meet | rem:1 | set:"p & q -> r","p & r -> q"
    #[arg(long)]
    infra: Option<String>,
    /// How a belief set is presented to kernel constructions.
    #[arg(long, value_enum, default_value = "representatives")]
    presentation: PresentationArg,
    /// Generators of a preferred Horn belief set, most plausible first;
    /// repeat the flag to rank several.
    #[arg(long)]
    prefer: Vec<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Base,
    PropSet,
    HornSet,
}

impl From<Mode> for SubjectKind {
    fn from(m: Mode) -> SubjectKind {
        match m {
            Mode::Base => SubjectKind::Base,
            Mode::PropSet => SubjectKind::PropSet,
            Mode::HornSet => SubjectKind::HornSet,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
enum PresentationArg {
    #[default]
    Representatives,
    HornFragment,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    PartialMeet,
    Maxichoice,
    FullMeet,
    Kernel,
    SaturatedKernel,
    Infra,
    OrderlyMaxichoice,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Contract the knowledge base by a formula.
    Contract {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        method: Method,
        #[command(flatten)]
        choices: Choices,
    },
    /// List the remainders.
    Remainders {
        #[command(flatten)]
        common: Common,
    },
    /// List the kernels.
    Kernels {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "representatives")]
        presentation: PresentationArg,
    },
    /// List the infra remainders, or test one set for membership.
    Infra {
        #[command(flatten)]
        common: Common,
        /// "f1","f2": report whether this set (its closure, for set modes) is a member.
        #[arg(long)]
        member: Option<String>,
    },
    /// Check postulates against a contraction table or a built-in operator.
    Check {
        #[command(flatten)]
        common: Common,
        /// Postulate name (K-1 … K-6, B-1 … B-5, H-e6, H-e7, an alias, or `all`).
        #[arg(long, required = true)]
        postulate: Vec<String>,
        /// JSON contraction table.
        #[arg(long, conflicts_with = "operator")]
        table: Option<PathBuf>,
        /// Contraction method tabulated over the default grid; explicit
        /// choices apply at --phi and defaults apply elsewhere.
        #[arg(long, value_enum)]
        operator: Option<Method>,
        #[command(flatten)]
        choices: Choices,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Show the closure of the knowledge base.
    Closure {
        #[command(flatten)]
        common: Common,
    },
}

/// Runs the command line, printing to the standard streams; returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let json = match &cli.command {
        Command::Verify { json, .. } => *json,
        Command::Contract { common, .. }
        | Command::Remainders { common }
        | Command::Kernels { common, .. }
        | Command::Infra { common, .. }
        | Command::Check { common, .. }
        | Command::Closure { common } => common.json,
    };
    let command = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(cli, command) {
        Ok(report) => {
            let printed = if json {
                serde_json::to_string_pretty(&report).map(|s| s + "\n").map_err(Error::from)
            } else {
                Ok(report.output.to_string())
            };
            match printed {
                Ok(text) => {
                    let _ = out.write_all(text.as_bytes());
                    if report.output.failed() {
                        3
                    } else {
                        0
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, command: Vec<String>) -> Result<RunReport> {
    let start = Instant::now();
    let (inputs, output) = match cli.command {
        Command::Verify { suite, .. } => (
            Inputs::default(),
            Output::Suites {
                suites: crate::verify::run(&suite)?,
            },
        ),
        Command::Check {
            common,
            postulate,
            table,
            operator,
            choices,
        } => check_command(&common, &postulate, table, operator, &choices)?,
        Command::Contract {
            common,
            method,
            choices,
        } => {
            let (subject, inputs) = load(&common)?;
            let phi = required_phi(&common, subject.signature())?;
            let out = contract(&subject, &phi, method, &choices)?;
            (
                inputs,
                Output::Contract {
                    result: render_result(&subject, &out),
                },
            )
        }
        Command::Remainders { common } => {
            let (subject, inputs) = load(&common)?;
            let phi = required_phi(&common, subject.signature())?;
            let members = remainders(&subject, &phi)?;
            (inputs, listing("remainders", members, common.limit, None))
        }
        Command::Kernels { common, presentation } => {
            let (subject, inputs) = load(&common)?;
            let phi = required_phi(&common, subject.signature())?;
            let members = kernels(&subject, &phi, presentation)?;
            (inputs, listing("kernels", members, common.limit, None))
        }
        Command::Infra { common, member } => {
            let (subject, inputs) = load(&common)?;
            let phi = required_phi(&common, subject.signature())?;
            let candidate = member
                .map(|text| parse_formula_list(&text, subject.signature()))
                .transpose()?;
            let (members, is_member) = infra(&subject, &phi, candidate.as_deref())?;
            (inputs, listing("infra remainders", members, common.limit, is_member))
        }
        Command::Closure { common } => {
            let (subject, inputs) = load(&common)?;
            (inputs, closure(&subject))
        }
    };
    Ok(RunReport {
        command,
        inputs,
        output,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn load(common: &Common) -> Result<(Subject, Inputs)> {
    let path = common
        .kb
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("--kb is required".into()))?;
    let kb = KbFile::read(path)?;
    let subject = Subject::from_formulas(common.mode.into(), &kb.signature, &kb.formulas)?;
    let inputs = Inputs {
        mode: Some(SubjectKind::from(common.mode).to_string()),
        signature: kb.signature.atoms().iter().map(|a| a.name().to_string()).collect(),
        kb: kb.formulas.iter().map(render).collect(),
        phi: common
            .phi
            .as_ref()
            .map(|t| kb.signature.parse(t).map(|f| render(&f)))
            .transpose()?,
    };
    Ok((subject, inputs))
}

fn required_phi(common: &Common, sig: &Signature) -> Result<Formula> {
    let text = common
        .phi
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("--phi is required".into()))?;
    sig.parse(text)
}

/// Splits `"a","b"` or `a, b` into formulas.
fn parse_formula_list(text: &str, sig: &Signature) -> Result<Vec<Formula>> {
    text.split(',')
        .map(|part| part.trim().trim_matches('"').trim())
        .filter(|part| !part.is_empty())
        .map(|part| sig.parse(part))
        .collect()
}

fn parse_selection(text: Option<&str>, default: SelectionSpec) -> Result<SelectionSpec> {
    let Some(text) = text else { return Ok(default) };
    match text.trim() {
        "all" => Ok(SelectionSpec::All),
        "first" => Ok(SelectionSpec::First),
        other => {
            let list = other
                .strip_prefix("idx:")
                .ok_or_else(|| Error::InvalidSelection(format!("`{other}` (expected all, first or idx:i,j)")))?;
            let idx = list
                .split(',')
                .map(|i| {
                    i.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidSelection(format!("bad index `{i}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SelectionSpec::Indices(idx))
        }
    }
}

fn parse_incision(text: Option<&str>, sig: &Signature) -> Result<IncisionSpec> {
    match text.map(str::trim) {
        None | Some("max") => Ok(IncisionSpec::Maximum),
        Some("min-first") => Ok(IncisionSpec::MinimalFirst),
        Some(other) => match other.strip_prefix("set:") {
            Some(list) => Ok(IncisionSpec::Explicit(parse_formula_list(list, sig)?)),
            None => Err(Error::InvalidParameter(format!(
                "incision `{other}` (expected max, min-first or set:...)"
            ))),
        },
    }
}

enum InfraChoice {
    Meet,
    Remainder(usize),
    Set(Vec<Formula>),
}

fn parse_infra(text: Option<&str>, sig: &Signature) -> Result<InfraChoice> {
    match text.map(str::trim) {
        None | Some("meet") => Ok(InfraChoice::Meet),
        Some(other) => {
            if let Some(i) = other.strip_prefix("rem:") {
                let i = i
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInfraChoice(format!("bad remainder index `{i}`")))?;
                Ok(InfraChoice::Remainder(i))
            } else if let Some(list) = other.strip_prefix("set:") {
                Ok(InfraChoice::Set(parse_formula_list(list, sig)?))
            } else {
                Err(Error::InvalidInfraChoice(format!(
                    "`{other}` (expected meet, rem:i or set:...)"
                )))
            }
        }
    }
}

/// The position picked by a maxichoice selection.
fn single_index(spec: &SelectionSpec) -> Result<usize> {
    match spec {
        SelectionSpec::First => Ok(0),
        SelectionSpec::Indices(idx) if idx.len() == 1 => Ok(idx[0]),
        _ => Err(Error::InvalidSelection(
            "maxichoice needs `first` or a single `idx:i`".into(),
        )),
    }
}

fn presentation(p: PresentationArg) -> Presentation {
    match p {
        PresentationArg::Representatives => Presentation::Representatives,
        PresentationArg::HornFragment => Presentation::HornFragment,
    }
}

fn unsupported(method: Method, kind: SubjectKind) -> Error {
    let name = method.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Error::InvalidParameter(format!("method {name} is not available in {kind} mode"))
}

/// Contracts `subject` by `phi` with a method named as on the command line
/// (`full-meet`, `kernel`, ...) and default choices; returns the rendered result.
pub fn contract_by_name(subject: &Subject, phi: &Formula, method: &str) -> Result<Vec<String>> {
    let method = Method::from_str(method, false)
        .map_err(|_| Error::InvalidParameter(format!("unknown method `{method}`")))?;
    let out = contract(subject, phi, method, &Choices::default())?;
    Ok(render_result(subject, &out))
}

/// Lists a family (`remainders`, `kernels` or `infra`) as rendered members.
pub fn family_by_name(subject: &Subject, phi: &Formula, family: &str) -> Result<Vec<Vec<String>>> {
    match family {
        "remainders" => remainders(subject, phi),
        "kernels" => kernels(subject, phi, PresentationArg::Representatives),
        "infra" => infra(subject, phi, None).map(|(members, _)| members),
        other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
    }
}

fn contract(subject: &Subject, phi: &Formula, method: Method, ch: &Choices) -> Result<Outcome> {
    let sig = subject.signature();
    let default_selection = match method {
        Method::Maxichoice => SelectionSpec::First,
        _ => SelectionSpec::All,
    };
    let selection = parse_selection(ch.selection.as_deref(), default_selection)?;
    let incision = || parse_incision(ch.incision.as_deref(), sig);
    let infra = || parse_infra(ch.infra.as_deref(), sig);
    match subject {
        Subject::Base(b) => {
            let out = match method {
                Method::PartialMeet => base_partial_meet(b, phi, &selection)?,
                Method::Maxichoice => {
                    let spec = SelectionSpec::Indices(vec![single_index(&selection)?]);
                    if base_remainders(b, phi)?.is_empty() {
                        b.clone()
                    } else {
                        base_partial_meet(b, phi, &spec)?
                    }
                }
                Method::FullMeet => base_partial_meet(b, phi, &SelectionSpec::All)?,
                Method::Kernel => base_kernel_contraction(b, phi, &incision()?)?,
                Method::SaturatedKernel => saturated_base_kernel_contraction(b, phi, &incision()?)?,
                Method::Infra => {
                    let spec = match infra()? {
                        InfraChoice::Meet => InfraSpec::MeetOfAll,
                        InfraChoice::Remainder(i) => InfraSpec::RemainderIndex(i),
                        InfraChoice::Set(fs) => InfraSpec::Explicit(fs),
                    };
                    base_infra_contraction(b, phi, &spec)?
                }
                Method::OrderlyMaxichoice => return Err(unsupported(method, SubjectKind::Base)),
            };
            Ok(Outcome::from(&out))
        }
        Subject::PropSet(k) => Ok(Outcome::from(&prop_contract(k, phi, method, &selection, ch)?)),
        Subject::HornSet(h) => {
            let out = match method {
                Method::PartialMeet => e_contract(h, phi, &EMethod::PartialMeet(selection))?,
                Method::Maxichoice => e_contract(h, phi, &EMethod::Maxichoice(single_index(&selection)?))?,
                Method::FullMeet => e_contract(h, phi, &EMethod::FullMeet)?,
                Method::OrderlyMaxichoice => {
                    let order = if ch.prefer.is_empty() {
                        OrderSpec::GeneratorRender
                    } else {
                        OrderSpec::Preference(
                            ch.prefer
                                .iter()
                                .map(|p| parse_formula_list(p, sig))
                                .collect::<Result<_>>()?,
                        )
                    };
                    e_contract(h, phi, &EMethod::OrderlyMaxichoice(order))?
                }
                Method::Infra => {
                    let spec = match infra()? {
                        InfraChoice::Meet => HornInfraSpec::MeetOfAll,
                        InfraChoice::Remainder(i) => HornInfraSpec::RemainderIndex(i),
                        InfraChoice::Set(fs) => HornInfraSpec::Explicit(fs),
                    };
                    infra_e_contraction(h, phi, &spec)?
                }
                Method::Kernel => horn_kernel_e_contraction(h, phi, &incision()?)?,
                Method::SaturatedKernel => return Err(unsupported(method, SubjectKind::HornSet)),
            };
            Ok(Outcome::from(&out))
        }
    }
}

/// Propositional contraction with remainders addressed by position: the
/// `i`-th remainder adds the `i`-th countermodel of `phi`.
fn prop_contract(
    k: &PropBeliefSet,
    phi: &Formula,
    method: Method,
    selection: &SelectionSpec,
    ch: &Choices,
) -> Result<PropBeliefSet> {
    let sig = k.signature();
    let rem = bs_remainders(k, phi)?;
    if rem.is_empty() || rem == [k.clone()] {
        return match method {
            Method::OrderlyMaxichoice | Method::SaturatedKernel => Err(unsupported(method, SubjectKind::PropSet)),
            _ => Ok(k.clone()),
        };
    }
    let counter: Vec<_> = k.countermodels(phi)?.iter().collect();
    let picked = |idx: &[usize]| -> Result<ModelSet> {
        if let Some(bad) = idx.iter().find(|&&i| i >= counter.len()) {
            return Err(Error::InvalidSelection(format!(
                "index {bad} out of range for {} remainders",
                counter.len()
            )));
        }
        Ok(ModelSet::from_valuations(sig.len(), idx.iter().map(|&i| counter[i])))
    };
    let method = match method {
        Method::PartialMeet => match selection {
            SelectionSpec::All => BsMethod::FullMeet,
            SelectionSpec::First => BsMethod::Maxichoice(counter[0]),
            SelectionSpec::Indices(idx) => {
                if idx.is_empty() {
                    return Err(Error::InvalidSelection("no remainder selected".into()));
                }
                BsMethod::PartialMeet(picked(idx)?)
            }
        },
        Method::Maxichoice => BsMethod::PartialMeet(picked(&[single_index(selection)?])?),
        Method::FullMeet => BsMethod::FullMeet,
        Method::Kernel => BsMethod::Kernel {
            incision: parse_incision(ch.incision.as_deref(), sig)?,
            presentation: presentation(ch.presentation),
        },
        Method::Infra => match parse_infra(ch.infra.as_deref(), sig)? {
            InfraChoice::Meet => BsMethod::FullMeet,
            InfraChoice::Remainder(i) => BsMethod::Infra(
                picked(&[i]).map_err(|e| Error::InvalidInfraChoice(e.to_string()))?,
            ),
            InfraChoice::Set(fs) => {
                let x = PropBeliefSet::cn(sig, &fs)?;
                if !bs_infra_remainders(k, phi)?.contains(&x) {
                    return Err(Error::InvalidInfraChoice(format!("{x} is not an infra remainder")));
                }
                return Ok(x);
            }
        },
        Method::OrderlyMaxichoice | Method::SaturatedKernel => return Err(unsupported(method, SubjectKind::PropSet)),
    };
    bs_contract(k, phi, &method)
}

fn render_result(subject: &Subject, out: &Outcome) -> Vec<String> {
    match (subject, out) {
        (Subject::HornSet(h), Outcome::HornSet(s)) => HornBeliefSet::from_closed(h.universe().clone(), *s)
            .map(|x| x.rendered_generators())
            .unwrap_or_else(|_| h.universe().rendered(s)),
        _ => subject.render_outcome(out),
    }
}

fn remainders(subject: &Subject, phi: &Formula) -> Result<Vec<Vec<String>>> {
    Ok(match subject {
        Subject::Base(b) => {
            let fam = base_remainders(b, phi)?;
            fam.rendered(b)
        }
        Subject::PropSet(k) => bs_remainders(k, phi)?
            .iter()
            .map(|r| vec![render(&r.generator())])
            .collect(),
        Subject::HornSet(h) => e_remainders(h, phi)?.iter().map(|r| r.rendered_generators()).collect(),
    })
}

fn kernels(subject: &Subject, phi: &Formula, p: PresentationArg) -> Result<Vec<Vec<String>>> {
    Ok(match subject {
        Subject::Base(b) => base_kernels(b, phi)?.rendered(b),
        Subject::PropSet(k) => {
            let (base, fam) = bs_kernels(k, phi, presentation(p))?;
            fam.rendered(&base)
        }
        Subject::HornSet(h) => {
            let (base, fam) = horn_kernels(h, phi)?;
            fam.rendered(&base)
        }
    })
}

fn infra(
    subject: &Subject,
    phi: &Formula,
    candidate: Option<&[Formula]>,
) -> Result<(Vec<Vec<String>>, Option<bool>)> {
    let sig = subject.signature();
    let limit = sig.limits().infra_family;
    Ok(match subject {
        Subject::Base(b) => {
            let fam = base_infra_remainders(b, phi)?;
            let member = candidate.map(|fs| b.set_of(fs).map(|x| fam.contains(&x)).unwrap_or(false));
            let members = fam.enumerate(limit)?.iter().map(|x| b.rendered(x)).collect();
            (members, member)
        }
        Subject::PropSet(k) => {
            let fam = bs_infra_remainders(k, phi)?;
            let member = candidate
                .map(|fs| PropBeliefSet::cn(sig, fs).map(|x| fam.contains(&x)))
                .transpose()?;
            let members = fam
                .enumerate(limit)?
                .iter()
                .map(|x| vec![render(&x.generator())])
                .collect();
            (members, member)
        }
        Subject::HornSet(h) => {
            let fam = infra_e_remainders(h, phi)?;
            let member = candidate
                .map(|fs| HornBeliefSet::cn(sig, fs).map(|x| fam.contains(&x)))
                .transpose()?;
            let members = fam.enumerate(limit)?.iter().map(|x| x.rendered_generators()).collect();
            (members, member)
        }
    })
}

fn listing(family: &str, mut members: Vec<Vec<String>>, limit: usize, member: Option<bool>) -> Output {
    let total = members.len();
    members.truncate(limit);
    Output::Family {
        family: family.to_string(),
        total,
        members,
        truncated: total > limit,
        member,
    }
}

fn closure(subject: &Subject) -> Output {
    let (formulas, models) = match subject {
        Subject::Base(b) => (b.rendered(&b.all()), b.models()),
        Subject::PropSet(k) => (vec![render(&k.generator())], k.models()),
        Subject::HornSet(h) => (h.rendered(), h.models()),
    };
    Output::Closure {
        formulas,
        models: models.to_strings(),
    }
}

fn base_of(subject: &Subject) -> Option<&BeliefBase> {
    match subject {
        Subject::Base(b) => Some(b),
        _ => None,
    }
}

fn check_command(
    common: &Common,
    names: &[String],
    table_path: Option<PathBuf>,
    operator: Option<Method>,
    choices: &Choices,
) -> Result<(Inputs, Output)> {
    let (table, inputs) = match (table_path, operator) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Input {
                path: path.display().to_string(),
                line: 0,
                message: e.to_string(),
            })?;
            let table = ContractionTable::from_json(&text)?;
            let file = table.to_file();
            let inputs = Inputs {
                mode: Some(file.kind.to_string()),
                signature: file.signature,
                kb: file.subject,
                phi: None,
            };
            (table, inputs)
        }
        (None, Some(method)) => {
            let (subject, inputs) = load(common)?;
            let sig = subject.signature().clone();
            let special = common.phi.as_ref().map(|t| sig.parse(t)).transpose()?;
            let grid = subject.default_grid()?;
            let defaults = Choices::default();
            let table = ContractionTable::from_operator(subject.clone(), &grid, |f| {
                let ch = if special.as_ref() == Some(f) { choices } else { &defaults };
                contract(&subject, f, method, ch)
            })?;
            (table, inputs)
        }
        (None, None) => {
            return Err(Error::InvalidParameter("check needs --table or --operator".into()));
        }
    };
    let kind = table.subject().kind();
    let mut postulates = Vec::new();
    for name in names {
        if name == "all" {
            postulates.extend(Postulate::ALL.into_iter().filter(|p| p.applies_to(kind)));
        } else {
            postulates.push(name.parse::<Postulate>()?);
        }
    }
    debug_assert!(base_of(table.subject()).is_some() == (kind == SubjectKind::Base));
    let reports = postulates
        .iter()
        .map(|p| check(&table, *p))
        .collect::<Result<Vec<_>>>()?;
    Ok((inputs, Output::Postulates { reports }))
}
