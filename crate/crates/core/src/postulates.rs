//! Postulate checking for contraction functions given as finite tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::base_change::{base_families, subset_models, BeliefBase, ElemSet, Engine};
use crate::beliefset_change::PropBeliefSet;
use crate::error::{Error, Result};
use crate::formula::{formula_order, render, sort_formulas, Formula, Signature};
use crate::horn_change::HornBeliefSet;
use crate::semantics::{formula_mask, full_mask, representatives, synthesize, ModelSet};

/// Which kind of body of beliefs a table contracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubjectKind {
    Base,
    PropSet,
    HornSet,
}

impl SubjectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SubjectKind::Base => "base",
            SubjectKind::PropSet => "prop-set",
            SubjectKind::HornSet => "horn-set",
        }
    }
}

impl FromStr for SubjectKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubjectKind> {
        match s {
            "base" => Ok(SubjectKind::Base),
            "prop-set" => Ok(SubjectKind::PropSet),
            "horn-set" => Ok(SubjectKind::HornSet),
            other => Err(Error::InvalidParameter(format!(
                "unknown mode `{other}` (expected base, prop-set or horn-set)"
            ))),
        }
    }
}

impl fmt::Display for SubjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub enum Subject {
    Base(BeliefBase),
    PropSet(PropBeliefSet),
    HornSet(HornBeliefSet),
}

/// The result of contracting a subject by one formula.
///
/// Horn outcomes are clause sets over the universe and need not be closed,
/// so that closure itself can be checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Base(Vec<Formula>),
    PropSet(ModelSet),
    HornSet(ElemSet),
}

impl Outcome {
    pub fn base(mut formulas: Vec<Formula>) -> Outcome {
        sort_formulas(&mut formulas);
        Outcome::Base(formulas)
    }
}

impl From<&BeliefBase> for Outcome {
    fn from(b: &BeliefBase) -> Outcome {
        Outcome::base(b.elements().to_vec())
    }
}

impl From<&PropBeliefSet> for Outcome {
    fn from(k: &PropBeliefSet) -> Outcome {
        Outcome::PropSet(k.models())
    }
}

impl From<&HornBeliefSet> for Outcome {
    fn from(h: &HornBeliefSet) -> Outcome {
        Outcome::HornSet(h.members())
    }
}

/// A subject seen as a finite set of sentences, with the outcome and
/// entailment machinery the postulates need.
struct View {
    base: BeliefBase,
    masks: Vec<u64>,
    full: u64,
}

impl Subject {
    pub fn kind(&self) -> SubjectKind {
        match self {
            Subject::Base(_) => SubjectKind::Base,
            Subject::PropSet(_) => SubjectKind::PropSet,
            Subject::HornSet(_) => SubjectKind::HornSet,
        }
    }

    pub fn signature(&self) -> &Signature {
        match self {
            Subject::Base(b) => b.signature(),
            Subject::PropSet(k) => k.signature(),
            Subject::HornSet(h) => h.signature(),
        }
    }

    /// Reads a subject from formulas: the base itself, `Cn` or `Cn_HL`.
    pub fn from_formulas(kind: SubjectKind, sig: &Signature, formulas: &[Formula]) -> Result<Subject> {
        Ok(match kind {
            SubjectKind::Base => Subject::Base(BeliefBase::new(sig, formulas.iter().cloned())?),
            SubjectKind::PropSet => Subject::PropSet(PropBeliefSet::cn(sig, formulas)?),
            SubjectKind::HornSet => Subject::HornSet(HornBeliefSet::cn(sig, formulas)?),
        })
    }

    /// The subject left untouched.
    pub fn unchanged(&self) -> Outcome {
        match self {
            Subject::Base(b) => b.into(),
            Subject::PropSet(k) => k.into(),
            Subject::HornSet(h) => h.into(),
        }
    }

    /// Formulas presenting the subject: the base, a generator, or the
    /// irredundant Horn generators.
    pub fn rendered(&self) -> Vec<String> {
        match self {
            Subject::Base(b) => b.rendered(&b.all()),
            Subject::PropSet(k) => vec![render(&k.generator())],
            Subject::HornSet(h) => h.rendered_generators(),
        }
    }

    /// Every Horn clause plus `T` when the clause universe is available,
    /// otherwise one formula per equivalence class. Propositional subjects
    /// always use equivalence classes.
    pub fn default_grid(&self) -> Result<Vec<Formula>> {
        let sig = self.signature();
        let classes = || representatives(&ModelSet::empty(sig.len()), sig);
        match self {
            Subject::PropSet(_) => classes(),
            Subject::Base(_) if sig.len() <= 2 => classes(),
            _ => {
                let universe = crate::horn_change::ClauseUniverse::of(sig)?;
                let mut grid = vec![Formula::Top];
                grid.extend(universe.base().elements().iter().cloned());
                Ok(grid)
            }
        }
    }

    /// Renders an outcome exactly: base elements, a generator, or every
    /// clause of a Horn outcome.
    pub fn render_outcome(&self, out: &Outcome) -> Vec<String> {
        match (self, out) {
            (_, Outcome::Base(fs)) => fs.iter().map(render).collect(),
            (_, Outcome::PropSet(m)) => vec![render(&synthesize(m, self.signature()))],
            (Subject::HornSet(h), Outcome::HornSet(s)) => h.universe().rendered(s),
            (_, Outcome::HornSet(s)) => s.iter().map(|i| i.to_string()).collect(),
        }
    }

    /// Reads an outcome given as a formula list.
    pub fn outcome_from_formulas(&self, formulas: &[Formula]) -> Result<Outcome> {
        let sig = self.signature();
        for f in formulas {
            sig.check(f)?;
        }
        Ok(match self {
            Subject::Base(_) => Outcome::base(formulas.to_vec()),
            Subject::PropSet(_) => Outcome::PropSet(crate::semantics::models(formulas, sig)?),
            Subject::HornSet(h) => {
                let mut s = ElemSet::EMPTY;
                for f in formulas {
                    s = s.union(&h.universe().formula_set(f)?);
                }
                Outcome::HornSet(s)
            }
        })
    }

    fn check_outcome(&self, out: &Outcome) -> Result<()> {
        let ok = matches!(
            (self, out),
            (Subject::Base(_), Outcome::Base(_))
                | (Subject::PropSet(_), Outcome::PropSet(_))
                | (Subject::HornSet(_), Outcome::HornSet(_))
        );
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "outcome does not match a {} subject",
                self.kind()
            )));
        }
        if let Outcome::PropSet(m) = out {
            if m.width() != self.signature().len() {
                return Err(Error::InvalidParameter("outcome over a different signature".into()));
            }
        }
        Ok(())
    }

    fn view(&self) -> Result<View> {
        let sig = self.signature();
        let base = match self {
            Subject::Base(b) => b.clone(),
            Subject::PropSet(k) => BeliefBase::new(sig, k.representatives()?)?,
            Subject::HornSet(h) => BeliefBase::new(sig, h.formulas())?,
        };
        let masks = base
            .elements()
            .iter()
            .map(|f| formula_mask(f, sig))
            .collect::<Result<Vec<_>>>()?;
        Ok(View {
            base,
            masks,
            full: full_mask(sig.len()),
        })
    }

    /// Models of an outcome.
    fn outcome_models(&self, out: &Outcome) -> Result<u64> {
        let sig = self.signature();
        match (self, out) {
            (_, Outcome::Base(fs)) => Ok(crate::semantics::models(fs, sig)?.mask()),
            (_, Outcome::PropSet(m)) => Ok(m.mask()),
            (Subject::HornSet(h), Outcome::HornSet(s)) => Ok(h.universe().models_of(s)),
            _ => unreachable!("outcome kind checked"),
        }
    }

    /// Whether `f` is a member of the outcome: syntactic for bases and Horn
    /// clause sets, semantic for closed theories.
    fn outcome_contains(&self, out: &Outcome, f: &Formula) -> Result<bool> {
        match (self, out) {
            (_, Outcome::Base(fs)) => Ok(fs.contains(f)),
            (_, Outcome::PropSet(m)) => Ok(m.mask() & !formula_mask(f, self.signature())? == 0),
            (Subject::HornSet(h), Outcome::HornSet(s)) => match h.universe().formula_set(f) {
                Ok(cs) => Ok(cs.is_subset(s)),
                Err(Error::NotHorn(_)) => Ok(false),
                Err(e) => Err(e),
            },
            _ => unreachable!("outcome kind checked"),
        }
    }

    /// Elements of the subject's view that belong to the outcome.
    fn outcome_in_view(&self, view: &View, out: &Outcome) -> Result<ElemSet> {
        let mut s = ElemSet::EMPTY;
        for (i, f) in view.base.elements().iter().enumerate() {
            if self.outcome_contains(out, f)? {
                s.insert(i);
            }
        }
        Ok(s)
    }

    /// A sentence in the outcome but outside the subject, if any.
    fn outside_subject(&self, out: &Outcome) -> Result<Option<String>> {
        Ok(match (self, out) {
            (Subject::Base(b), Outcome::Base(fs)) => {
                fs.iter().find(|f| b.index_of(f).is_none()).map(render)
            }
            (Subject::PropSet(k), Outcome::PropSet(m)) => {
                let km = k.models();
                (!km.is_subset(m)).then(|| render(&synthesize(m, self.signature())))
            }
            (Subject::HornSet(h), Outcome::HornSet(s)) => {
                let extra = s.difference(&h.members());
                extra.first().map(|i| h.universe().clauses()[i].render(self.signature()))
            }
            _ => unreachable!("outcome kind checked"),
        })
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Base(b) => write!(f, "{b}"),
            Subject::PropSet(k) => write!(f, "{k}"),
            Subject::HornSet(h) => write!(f, "{h}"),
        }
    }
}

/// A contraction function restricted to a finite grid of inputs.
#[derive(Clone, Debug)]
pub struct ContractionTable {
    subject: Subject,
    grid: Vec<Formula>,
    outcomes: Vec<Outcome>,
}

impl ContractionTable {
    /// Builds a table; the grid is sorted into the global order and must not
    /// repeat a formula.
    pub fn new(subject: Subject, mut entries: Vec<(Formula, Outcome)>) -> Result<ContractionTable> {
        entries.sort_by(|a, b| formula_order(&a.0, &b.0));
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::InvalidParameter(format!(
                    "input `{}` appears twice in the table",
                    pair[0].0
                )));
            }
        }
        for (f, out) in &entries {
            subject.signature().check(f)?;
            subject.check_outcome(out)?;
        }
        let (grid, outcomes) = entries.into_iter().unzip();
        Ok(ContractionTable {
            subject,
            grid,
            outcomes,
        })
    }

    /// Tabulates `op` over `grid`.
    pub fn from_operator(
        subject: Subject,
        grid: &[Formula],
        mut op: impl FnMut(&Formula) -> Result<Outcome>,
    ) -> Result<ContractionTable> {
        let entries = grid
            .iter()
            .map(|f| Ok((f.clone(), op(f)?)))
            .collect::<Result<Vec<_>>>()?;
        ContractionTable::new(subject, entries)
    }

    pub fn subject(&self) -> &Subject {
        &self.subject
    }

    pub fn grid(&self) -> &[Formula] {
        &self.grid
    }

    pub fn outcome(&self, f: &Formula) -> Option<&Outcome> {
        self.grid.iter().position(|g| g == f).map(|i| &self.outcomes[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Formula, &Outcome)> {
        self.grid.iter().zip(&self.outcomes)
    }

    pub fn from_json(text: &str) -> Result<ContractionTable> {
        let file: TableFile = serde_json::from_str(text)?;
        let sig = Signature::new(file.signature.iter().map(String::as_str))?;
        let parse_all = |texts: &[String]| texts.iter().map(|t| sig.parse(t)).collect::<Result<Vec<_>>>();
        let subject = Subject::from_formulas(file.kind, &sig, &parse_all(&file.subject)?)?;
        let entries = file
            .entries
            .iter()
            .map(|(phi, out)| Ok((sig.parse(phi)?, subject.outcome_from_formulas(&parse_all(out)?)?)))
            .collect::<Result<Vec<_>>>()?;
        ContractionTable::new(subject, entries)
    }

    pub fn to_file(&self) -> TableFile {
        TableFile {
            kind: self.subject.kind(),
            signature: self
                .subject
                .signature()
                .atoms()
                .iter()
                .map(|a| a.name().to_string())
                .collect(),
            subject: self.subject.rendered(),
            entries: self
                .entries()
                .map(|(f, out)| (render(f), self.subject.render_outcome(out)))
                .collect(),
        }
    }
}

/// The on-disk form of a contraction table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub kind: SubjectKind,
    pub signature: Vec<String>,
    pub subject: Vec<String>,
    pub entries: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Postulate {
    Closure,
    Inclusion,
    Vacuity,
    Success,
    Extensionality,
    Recovery,
    BaseSuccess,
    BaseInclusion,
    Uniformity,
    Relevance,
    CoreRetainment,
    HornRelevance,
    Failure,
}

impl Postulate {
    pub const ALL: [Postulate; 13] = [
        Postulate::Closure,
        Postulate::Inclusion,
        Postulate::Vacuity,
        Postulate::Success,
        Postulate::Extensionality,
        Postulate::Recovery,
        Postulate::BaseSuccess,
        Postulate::BaseInclusion,
        Postulate::Uniformity,
        Postulate::Relevance,
        Postulate::CoreRetainment,
        Postulate::HornRelevance,
        Postulate::Failure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Postulate::Closure => "K-1",
            Postulate::Inclusion => "K-2",
            Postulate::Vacuity => "K-3",
            Postulate::Success => "K-4",
            Postulate::Extensionality => "K-5",
            Postulate::Recovery => "K-6",
            Postulate::BaseSuccess => "B-1",
            Postulate::BaseInclusion => "B-2",
            Postulate::Uniformity => "B-3",
            Postulate::Relevance => "B-4",
            Postulate::CoreRetainment => "B-5",
            Postulate::HornRelevance => "H-e6",
            Postulate::Failure => "H-e7",
        }
    }

    pub fn alias(self) -> Option<&'static str> {
        match self {
            Postulate::Closure => Some("closure"),
            Postulate::Vacuity => Some("vacuity"),
            Postulate::Extensionality => Some("extensionality"),
            Postulate::Recovery => Some("recovery"),
            Postulate::Uniformity => Some("uniformity"),
            Postulate::Relevance => Some("relevance"),
            Postulate::CoreRetainment => Some("core-retainment"),
            Postulate::Failure => Some("failure"),
            _ => None,
        }
    }

    pub fn applies_to(self, kind: SubjectKind) -> bool {
        use Postulate::*;
        match self {
            Closure | Inclusion | Vacuity | Success | Extensionality | Recovery => kind != SubjectKind::Base,
            BaseSuccess | BaseInclusion | Uniformity | Relevance | CoreRetainment => true,
            HornRelevance | Failure => kind == SubjectKind::HornSet,
        }
    }

    /// Whether the postulate constrains each input separately.
    pub fn is_pointwise(self) -> bool {
        !matches!(self, Postulate::Extensionality | Postulate::Uniformity)
    }
}

impl FromStr for Postulate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Postulate> {
        let key: String = s
            .trim()
            .to_lowercase()
            .chars()
            .filter(|c| !matches!(c, '-' | '−' | '–' | ' ' | '(' | ')' | '_'))
            .collect();
        Postulate::ALL
            .into_iter()
            .find(|p| {
                let name: String = p.name().to_lowercase().replace('-', "");
                let alias = p.alias().map(|a| a.replace('-', ""));
                key == name || Some(&key) == alias.as_ref()
            })
            .ok_or_else(|| Error::UnknownPostulate(s.to_string()))
    }
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete violation: the contracted input, the offending sentence when
/// there is one, and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub phi: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub psi: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PostulateReport {
    pub postulate: String,
    pub pass: bool,
    /// Grid inputs (or pairs of inputs) examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

fn counterexample(phi: &Formula, psi: Option<String>, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        phi: render(phi),
        psi,
        detail: detail.into(),
    }
}

/// Entailment of `target` by every subset of a view, bounded by the
/// exhaustive-base limit.
struct SubsetTable {
    models: Vec<u64>,
}

impl SubsetTable {
    fn new(view: &View, limit: usize) -> Result<SubsetTable> {
        let m = view.masks.len();
        if m > limit {
            return Err(Error::limit("subset enumeration", limit, m));
        }
        Ok(SubsetTable {
            models: subset_models(&view.masks, view.full),
        })
    }

    fn entails(&self, s: u64, target: u64) -> bool {
        self.models[s as usize] & !target == 0
    }

    /// Some subset `B'` with `lower ⊆ B' ⊆ upper` that does not entail
    /// `target` while `B' ∪ {psi}` does.
    fn blames(&self, lower: u64, upper: u64, psi: usize, target: u64) -> bool {
        let free = upper & !lower;
        let mut t = free;
        loop {
            let s = lower | t;
            if !self.entails(s, target) && self.entails(s | 1 << psi, target) {
                return true;
            }
            if t == 0 {
                return false;
            }
            t = (t - 1) & free;
        }
    }
}

struct Checker<'a> {
    subject: &'a Subject,
    sig: &'a Signature,
    view: View,
    table: Option<SubsetTable>,
}

impl<'a> Checker<'a> {
    fn new(subject: &'a Subject) -> Result<Checker<'a>> {
        Ok(Checker {
            subject,
            sig: subject.signature(),
            view: subject.view()?,
            table: None,
        })
    }

    fn subsets(&mut self) -> Result<&SubsetTable> {
        if self.table.is_none() {
            self.table = Some(SubsetTable::new(&self.view, self.sig.limits().exhaustive_base)?);
        }
        Ok(self.table.as_ref().expect("just built"))
    }

    fn subject_models(&self) -> u64 {
        self.view.masks.iter().fold(self.view.full, |m, x| m & x)
    }

    fn point(&mut self, p: Postulate, phi: &Formula, out: &Outcome) -> Result<Option<Counterexample>> {
        let subject = self.subject;
        let target = formula_mask(phi, self.sig)?;
        let tautology = target == self.view.full;
        let unchanged = subject.unchanged();
        let cx = |psi: Option<String>, detail: &str| Ok(Some(counterexample(phi, psi, detail)));
        match p {
            Postulate::Closure => {
                if let (Subject::HornSet(h), Outcome::HornSet(s)) = (subject, out) {
                    let missing = h.universe().close(s).difference(s);
                    if let Some(i) = missing.first() {
                        let psi = h.universe().clauses()[i].render(self.sig);
                        return cx(Some(psi), "entailed by the outcome but not a member");
                    }
                }
                Ok(None)
            }
            Postulate::Inclusion | Postulate::BaseInclusion => match subject.outside_subject(out)? {
                Some(psi) => cx(Some(psi), "member of the outcome but not of the subject"),
                None => Ok(None),
            },
            Postulate::Vacuity => {
                let in_subject = self.subject_models() & !target == 0;
                if !in_subject && *out != unchanged {
                    return cx(None, "input not believed, yet the subject changed");
                }
                Ok(None)
            }
            Postulate::Success => {
                if !tautology && subject.outcome_contains(out, phi)? {
                    return cx(None, "contingent input is still a member");
                }
                Ok(None)
            }
            Postulate::BaseSuccess => {
                if !tautology && subject.outcome_models(out)? & !target == 0 {
                    return cx(None, "contingent input is still entailed");
                }
                Ok(None)
            }
            Postulate::Recovery => {
                let k = self.subject_models();
                if k & !target != 0 {
                    return Ok(None);
                }
                match (subject, out) {
                    (Subject::HornSet(h), Outcome::HornSet(s)) => {
                        let u = h.universe();
                        let restored = u.close(&s.union(&u.formula_set(phi)?));
                        let missing = h.members().difference(&restored);
                        if let Some(i) = missing.first() {
                            let psi = u.clauses()[i].render(self.sig);
                            return cx(Some(psi), "not recovered by adding the input back");
                        }
                        Ok(None)
                    }
                    _ => {
                        let restored = subject.outcome_models(out)? & target;
                        if restored != k {
                            let psi = render(&synthesize(&ModelSet::from_mask(self.sig.len(), k), self.sig));
                            return cx(Some(psi), "not recovered by adding the input back");
                        }
                        Ok(None)
                    }
                }
            }
            Postulate::Failure => {
                if tautology && *out != unchanged {
                    return cx(None, "tautology contraction changed the subject");
                }
                Ok(None)
            }
            Postulate::Relevance | Postulate::CoreRetainment | Postulate::HornRelevance => {
                self.blame(p, phi, target, out)
            }
            Postulate::Extensionality | Postulate::Uniformity => Err(Error::InvalidParameter(format!(
                "{p} relates pairs of inputs and has no pointwise form"
            ))),
        }
    }

    /// The existential postulates: every removed element must be blamable.
    fn blame(&mut self, p: Postulate, phi: &Formula, target: u64, out: &Outcome) -> Result<Option<Counterexample>> {
        self.subsets()?;
        let kept = self.subject.outcome_in_view(&self.view, out)?.low_bits();
        let all = ElemSet::full(self.view.masks.len()).low_bits();
        let lower = match p {
            Postulate::Relevance => kept,
            Postulate::HornRelevance => {
                let (_, remainders) = base_families(&self.view.base, phi, Engine::Auto)?;
                remainders.meet().map_or(all, |m| m.low_bits())
            }
            _ => 0,
        };
        let removed = all & !kept;
        let table = self.subsets()?;
        for psi in (0..64).filter(|i| removed >> i & 1 == 1) {
            if lower >> psi & 1 == 1 || !table.blames(lower, all & !(1 << psi), psi, target) {
                let text = render(&self.view.base.elements()[psi]);
                let detail = "removed but no admissible subset is blamed by it";
                return Ok(Some(counterexample(phi, Some(text), detail)));
            }
        }
        Ok(None)
    }
}

fn ensure_applicable(p: Postulate, kind: SubjectKind) -> Result<()> {
    if p.applies_to(kind) {
        Ok(())
    } else {
        Err(Error::InapplicablePostulate {
            postulate: p.name(),
            subject: kind.as_str(),
        })
    }
}

/// Checks one input/outcome pair against a pointwise postulate.
pub fn check_point(subject: &Subject, phi: &Formula, out: &Outcome, p: Postulate) -> Result<Option<Counterexample>> {
    ensure_applicable(p, subject.kind())?;
    subject.signature().check(phi)?;
    subject.check_outcome(out)?;
    Checker::new(subject)?.point(p, phi, out)
}

/// Checks a postulate over the whole table; the first violation in grid
/// order is reported.
pub fn check(table: &ContractionTable, p: Postulate) -> Result<PostulateReport> {
    let subject = &table.subject;
    ensure_applicable(p, subject.kind())?;
    let mut checker = Checker::new(subject)?;
    let sig = subject.signature();
    let report = |checked, counterexample: Option<Counterexample>| PostulateReport {
        postulate: p.name().to_string(),
        pass: counterexample.is_none(),
        checked,
        counterexample,
    };
    if p.is_pointwise() {
        for (i, (phi, out)) in table.entries().enumerate() {
            if let Some(c) = checker.point(p, phi, out)? {
                return Ok(report(i + 1, Some(c)));
            }
        }
        return Ok(report(table.grid.len(), None));
    }
    let keys: Vec<Vec<u64>> = match p {
        Postulate::Extensionality => table
            .grid
            .iter()
            .map(|f| Ok(vec![formula_mask(f, sig)?]))
            .collect::<Result<_>>()?,
        _ => {
            let masks = table
                .grid
                .iter()
                .map(|f| formula_mask(f, sig))
                .collect::<Result<Vec<_>>>()?;
            let subsets = checker.subsets()?;
            masks
                .iter()
                .map(|&t| {
                    let bits: Vec<bool> = subsets.models.iter().map(|&m| m & !t == 0).collect();
                    bits.chunks(64)
                        .map(|c| c.iter().enumerate().fold(0u64, |w, (i, &b)| w | (b as u64) << i))
                        .collect()
                })
                .collect()
        }
    };
    let mut first_with: HashMap<&[u64], usize> = HashMap::new();
    let mut pairs = 0;
    for (j, key) in keys.iter().enumerate() {
        match first_with.get(key.as_slice()) {
            Some(&i) => {
                pairs += 1;
                if table.outcomes[i] != table.outcomes[j] {
                    let detail = match p {
                        Postulate::Extensionality => "equivalent inputs give different outcomes",
                        _ => "inputs entailed by the same subsets give different outcomes",
                    };
                    let c = counterexample(&table.grid[i], Some(render(&table.grid[j])), detail);
                    return Ok(report(pairs, Some(c)));
                }
            }
            None => {
                first_with.insert(key, j);
            }
        }
    }
    Ok(report(pairs, None))
}
