//! Contraction of finite belief bases: remainders, kernels, selection and
//! incision functions, partial meet, kernel and infra contraction.

use std::fmt;

use crate::error::{Error, IncisionViolation, Result};
use crate::formula::{render, sort_formulas, Formula, Signature};
use crate::semantics::{self, full_mask, ModelSet};

mod elemset;
mod enumerate;
mod hitting;

pub use elemset::{family_order, ElemSet};
pub use hitting::minimal_hitting_sets;

pub(crate) use enumerate::{subset_models, Families, Problem};

/// A finite set of formulas, kept in the global formula order.
#[derive(Clone)]
pub struct BeliefBase {
    sig: Signature,
    elements: Vec<Formula>,
    masks: Vec<u64>,
}

impl BeliefBase {
    pub fn new<I: IntoIterator<Item = Formula>>(sig: &Signature, formulas: I) -> Result<BeliefBase> {
        let mut elements: Vec<Formula> = formulas.into_iter().collect();
        for f in &elements {
            sig.check(f)?;
        }
        sort_formulas(&mut elements);
        if elements.len() > ElemSet::CAPACITY {
            return Err(Error::limit("belief base size", ElemSet::CAPACITY, elements.len()));
        }
        semantics::models([], sig)?;
        let masks = elements
            .iter()
            .map(|f| semantics::formula_mask(f, sig))
            .collect::<Result<Vec<u64>>>()?;
        Ok(BeliefBase {
            sig: sig.clone(),
            elements,
            masks,
        })
    }

    pub fn parse<S: AsRef<str>>(sig: &Signature, texts: &[S]) -> Result<BeliefBase> {
        let formulas = texts
            .iter()
            .map(|t| sig.parse(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        BeliefBase::new(sig, formulas)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn elements(&self) -> &[Formula] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.elements.iter().position(|e| e == f)
    }

    /// The element indices of `formulas`; fails on a formula outside the base.
    pub fn set_of(&self, formulas: &[Formula]) -> Result<ElemSet> {
        formulas
            .iter()
            .map(|f| {
                self.index_of(f)
                    .ok_or_else(|| Error::InvalidParameter(format!("`{f}` is not a member of the base")))
            })
            .collect()
    }

    pub fn formulas(&self, s: &ElemSet) -> Vec<Formula> {
        s.iter().map(|i| self.elements[i].clone()).collect()
    }

    pub fn rendered(&self, s: &ElemSet) -> Vec<String> {
        s.iter().map(|i| render(&self.elements[i])).collect()
    }

    /// The sub-base selected by `s`.
    pub fn restrict(&self, s: &ElemSet) -> BeliefBase {
        let keep: Vec<usize> = s.iter().collect();
        BeliefBase {
            sig: self.sig.clone(),
            elements: keep.iter().map(|&i| self.elements[i].clone()).collect(),
            masks: keep.iter().map(|&i| self.masks[i]).collect(),
        }
    }

    pub fn models(&self) -> ModelSet {
        ModelSet::from_mask(self.sig.len(), self.models_of(&self.all()))
    }

    pub(crate) fn models_of(&self, s: &ElemSet) -> u64 {
        s.iter().fold(full_mask(self.sig.len()), |m, i| m & self.masks[i])
    }

    pub fn entails(&self, f: &Formula) -> Result<bool> {
        self.subset_entails(&self.all(), f)
    }

    pub fn subset_entails(&self, s: &ElemSet, f: &Formula) -> Result<bool> {
        let target = semantics::formula_mask(f, &self.sig)?;
        Ok(self.models_of(s) & !target == 0)
    }
}

impl PartialEq for BeliefBase {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.elements == other.elements
    }
}

impl Eq for BeliefBase {}

impl fmt::Debug for BeliefBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter().map(render)).finish()
    }
}

impl fmt::Display for BeliefBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements.iter().map(render).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Remainder,
    Kernel,
    Infra,
}

/// An ordered family of subsets of a base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub kind: FamilyKind,
    pub members: Vec<ElemSet>,
}

impl SubsetFamily {
    pub fn new(kind: FamilyKind, members: Vec<ElemSet>) -> SubsetFamily {
        SubsetFamily { kind, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElemSet> {
        self.members.iter()
    }

    pub fn union(&self) -> ElemSet {
        self.members.iter().fold(ElemSet::EMPTY, |a, s| a.union(s))
    }

    /// Intersection of all members; `None` for an empty family.
    pub fn meet(&self) -> Option<ElemSet> {
        self.members.iter().copied().reduce(|a, s| a.intersection(&s))
    }

    pub fn rendered(&self, base: &BeliefBase) -> Vec<Vec<String>> {
        self.members.iter().map(|s| base.rendered(s)).collect()
    }
}

/// Which enumeration strategy computes kernels and remainders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Exhaustive up to the configured base size, duality beyond it.
    #[default]
    Auto,
    Exhaustive,
    Duality,
}

/// Kernels and remainders of `b` with respect to `f`.
pub fn base_families(b: &BeliefBase, f: &Formula, engine: Engine) -> Result<(SubsetFamily, SubsetFamily)> {
    let target = semantics::formula_mask(f, &b.sig)?;
    let problem = Problem {
        masks: &b.masks,
        target,
        full: full_mask(b.sig.len()),
    };
    let limit = b.sig.limits().exhaustive_base;
    let Families { kernels, remainders } = match engine {
        Engine::Exhaustive if b.len() > limit => {
            return Err(Error::limit("exhaustively scanned base size", limit, b.len()))
        }
        Engine::Exhaustive => enumerate::exhaustive(&problem),
        Engine::Auto if b.len() <= limit => enumerate::exhaustive(&problem),
        Engine::Auto | Engine::Duality => enumerate::duality(&problem),
    };
    Ok((
        SubsetFamily::new(FamilyKind::Kernel, kernels),
        SubsetFamily::new(FamilyKind::Remainder, remainders),
    ))
}

/// `B ⊥ f`: the maximal subsets of `b` not entailing `f`.
pub fn base_remainders(b: &BeliefBase, f: &Formula) -> Result<SubsetFamily> {
    Ok(base_families(b, f, Engine::Auto)?.1)
}

/// `B ⊥⊥ f`: the minimal subsets of `b` entailing `f`.
pub fn base_kernels(b: &BeliefBase, f: &Formula) -> Result<SubsetFamily> {
    Ok(base_families(b, f, Engine::Auto)?.0)
}

/// Which remainders a selection function picks, by position in family order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectionSpec {
    All,
    First,
    Indices(Vec<usize>),
}

/// Applies a selection; an empty family selects the whole base.
pub fn apply_selection(fam: &SubsetFamily, spec: &SelectionSpec, b: &BeliefBase) -> Result<Vec<ElemSet>> {
    if fam.is_empty() {
        return Ok(vec![b.all()]);
    }
    match spec {
        SelectionSpec::All => Ok(fam.members.clone()),
        SelectionSpec::First => Ok(vec![fam.members[0]]),
        SelectionSpec::Indices(idx) => {
            if idx.is_empty() {
                return Err(Error::InvalidSelection("no remainder selected".into()));
            }
            let mut picked: Vec<usize> = idx.clone();
            picked.sort_unstable();
            picked.dedup();
            if let Some(bad) = picked.iter().find(|&&i| i >= fam.len()) {
                return Err(Error::InvalidSelection(format!(
                    "index {bad} out of range for {} remainders",
                    fam.len()
                )));
            }
            Ok(picked.into_iter().map(|i| fam.members[i]).collect())
        }
    }
}

pub(crate) fn meet_of(sets: &[ElemSet]) -> Result<ElemSet> {
    sets.iter()
        .copied()
        .reduce(|a, s| a.intersection(&s))
        .ok_or_else(|| Error::Precondition("meet of an empty selection".into()))
}

/// Partial meet contraction: the meet of the selected remainders.
pub fn base_partial_meet(b: &BeliefBase, f: &Formula, spec: &SelectionSpec) -> Result<BeliefBase> {
    let fam = base_remainders(b, f)?;
    let selected = apply_selection(&fam, spec, b)?;
    Ok(b.restrict(&meet_of(&selected)?))
}

/// All minimal hitting sets of the non-empty kernels.
pub fn minimal_incisions(kernels: &SubsetFamily) -> Vec<ElemSet> {
    minimal_hitting_sets(&kernels.members)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncisionSpec {
    /// The union of all kernels.
    Maximum,
    /// The first minimal hitting set in family order.
    MinimalFirst,
    Explicit(Vec<Formula>),
}

/// Checks that `cut` lies within the kernels and meets every non-empty one.
pub fn validate_incision(kernels: &SubsetFamily, cut: &ElemSet, b: &BeliefBase) -> Result<()> {
    let outside = cut.difference(&kernels.union());
    if let Some(i) = outside.iter().next() {
        return Err(Error::InvalidIncision(IncisionViolation::OutsideKernels {
            formula: render(&b.elements[i]),
        }));
    }
    if let Some(k) = kernels.iter().find(|k| !k.is_empty() && !k.intersects(cut)) {
        return Err(Error::InvalidIncision(IncisionViolation::UnhitKernel {
            kernel: b.rendered(k),
        }));
    }
    Ok(())
}

pub fn apply_incision(kernels: &SubsetFamily, spec: &IncisionSpec, b: &BeliefBase) -> Result<ElemSet> {
    match spec {
        IncisionSpec::Maximum => Ok(kernels.union()),
        IncisionSpec::MinimalFirst => Ok(minimal_incisions(kernels)[0]),
        IncisionSpec::Explicit(formulas) => {
            let mut cut = ElemSet::EMPTY;
            for f in formulas {
                match b.index_of(f) {
                    Some(i) => cut.insert(i),
                    None => {
                        return Err(Error::InvalidIncision(IncisionViolation::OutsideKernels {
                            formula: render(f),
                        }))
                    }
                }
            }
            validate_incision(kernels, &cut, b)?;
            Ok(cut)
        }
    }
}

/// Every valid incision for `kernels`, i.e. every subset of their union that
/// meets each non-empty kernel, in family order.
pub fn valid_incisions(kernels: &SubsetFamily, b: &BeliefBase) -> Result<Vec<ElemSet>> {
    let union = kernels.union();
    let limit = b.sig.limits().exhaustive_base;
    if union.len() > limit {
        return Err(Error::limit("kernel union size", limit, union.len()));
    }
    let mut out: Vec<ElemSet> = union
        .subsets()
        .filter(|s| kernels.iter().all(|k| k.is_empty() || k.intersects(s)))
        .collect();
    out.sort_by(family_order);
    Ok(out)
}

/// Kernel contraction: `b` minus the incision.
pub fn base_kernel_contraction(b: &BeliefBase, f: &Formula, spec: &IncisionSpec) -> Result<BeliefBase> {
    let kernels = base_kernels(b, f)?;
    let cut = apply_incision(&kernels, spec, b)?;
    Ok(b.restrict(&b.all().difference(&cut)))
}

/// Saturated kernel contraction: the members of `b` entailed by the kernel
/// contraction outcome.
pub fn saturated_base_kernel_contraction(
    b: &BeliefBase,
    f: &Formula,
    spec: &IncisionSpec,
) -> Result<BeliefBase> {
    let kernels = base_kernels(b, f)?;
    let cut = apply_incision(&kernels, spec, b)?;
    Ok(b.restrict(&saturate(b, &b.all().difference(&cut))))
}

pub(crate) fn saturate(b: &BeliefBase, kept: &ElemSet) -> ElemSet {
    let models = b.models_of(kept);
    (0..b.len()).filter(|&i| models & !b.masks[i] == 0).collect()
}

/// `B ↓ f`: every set between the meet of all remainders and some remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfraFamily {
    remainders: Vec<ElemSet>,
    meet: Option<ElemSet>,
}

impl InfraFamily {
    pub fn from_remainders(remainders: Vec<ElemSet>) -> InfraFamily {
        let meet = remainders.iter().copied().reduce(|a, s| a.intersection(&s));
        InfraFamily { remainders, meet }
    }

    pub fn remainders(&self) -> &[ElemSet] {
        &self.remainders
    }

    /// The meet of all remainders; `None` when there are none.
    pub fn meet(&self) -> Option<ElemSet> {
        self.meet
    }

    pub fn is_empty(&self) -> bool {
        self.remainders.is_empty()
    }

    pub fn contains(&self, x: &ElemSet) -> bool {
        match self.meet {
            Some(meet) => meet.is_subset(x) && self.remainders.iter().any(|r| x.is_subset(r)),
            None => false,
        }
    }

    /// All members in family order, failing beyond `limit` members.
    pub fn enumerate(&self, limit: usize) -> Result<Vec<ElemSet>> {
        let Some(meet) = self.meet else {
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for r in &self.remainders {
            let free = r.difference(&meet);
            if free.len() >= usize::BITS as usize - 1 || 1usize << free.len() > limit {
                return Err(Error::limit("infra family size", limit, 1 << free.len().min(62)));
            }
            out.extend(free.subsets().map(|s| meet.union(&s)));
        }
        out.sort_by(family_order);
        out.dedup();
        if out.len() > limit {
            return Err(Error::limit("infra family size", limit, out.len()));
        }
        Ok(out)
    }
}

pub fn base_infra_remainders(b: &BeliefBase, f: &Formula) -> Result<InfraFamily> {
    Ok(InfraFamily::from_remainders(base_remainders(b, f)?.members))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfraSpec {
    MeetOfAll,
    RemainderIndex(usize),
    Explicit(Vec<Formula>),
}

/// Infra contraction: the chosen infra remainder, or `b` when there is none.
pub fn base_infra_contraction(b: &BeliefBase, f: &Formula, spec: &InfraSpec) -> Result<BeliefBase> {
    let family = base_infra_remainders(b, f)?;
    if family.is_empty() {
        return Ok(b.clone());
    }
    let chosen = match spec {
        InfraSpec::MeetOfAll => family.meet().expect("non-empty family"),
        InfraSpec::RemainderIndex(i) => *family.remainders().get(*i).ok_or_else(|| {
            Error::InvalidInfraChoice(format!(
                "remainder index {i} out of range for {} remainders",
                family.remainders().len()
            ))
        })?,
        InfraSpec::Explicit(formulas) => {
            let x = b
                .set_of(formulas)
                .map_err(|e| Error::InvalidInfraChoice(e.to_string()))?;
            if !family.contains(&x) {
                return Err(Error::InvalidInfraChoice(format!(
                    "{{{}}} is not an infra remainder",
                    b.rendered(&x).join(", ")
                )));
            }
            x
        }
    };
    Ok(b.restrict(&chosen))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(["p", "q", "r"]).unwrap()
    }

    fn base(texts: &[&str]) -> BeliefBase {
        BeliefBase::parse(&sig(), texts).unwrap()
    }

    fn f(text: &str) -> Formula {
        sig().parse(text).unwrap()
    }

    fn fam(b: &BeliefBase, fam: &SubsetFamily) -> Vec<Vec<String>> {
        fam.rendered(b)
    }

    fn chain() -> BeliefBase {
        base(&["p -> q", "q -> r", "p & q -> r", "p & r -> q"])
    }

    fn mixed() -> BeliefBase {
        base(&["p", "p | q", "p <-> q"])
    }

    #[test]
    fn chain_remainders_and_kernels() {
        let b = chain();
        let rem = base_remainders(&b, &f("p -> r")).unwrap();
        assert_eq!(
            fam(&b, &rem),
            [vec!["p -> q", "p & r -> q"], vec!["q -> r", "p & q -> r", "p & r -> q"]]
        );
        let ker = base_kernels(&b, &f("p -> r")).unwrap();
        assert_eq!(fam(&b, &ker), [vec!["p -> q", "q -> r"], vec!["p -> q", "p & q -> r"]]);
    }

    #[test]
    fn mixed_remainders_and_kernels() {
        let b = mixed();
        let rem = base_remainders(&b, &f("p & q")).unwrap();
        assert_eq!(fam(&b, &rem), [vec!["p <-> q"], vec!["p", "p | q"]]);
        let ker = base_kernels(&b, &f("p & q")).unwrap();
        assert_eq!(fam(&b, &ker), [vec!["p", "p <-> q"], vec!["p | q", "p <-> q"]]);
    }

    #[test]
    fn tautology_and_non_consequence() {
        let b = chain();
        assert!(base_remainders(&b, &Formula::Top).unwrap().is_empty());
        assert_eq!(base_kernels(&b, &Formula::Top).unwrap().members, vec![ElemSet::EMPTY]);
        let single = base(&["p"]);
        assert!(base_kernels(&single, &f("q")).unwrap().is_empty());
        assert_eq!(base_remainders(&single, &f("q")).unwrap().members, vec![single.all()]);
        let out = base_partial_meet(&b, &f("p"), &SelectionSpec::All).unwrap();
        assert_eq!(out, b);
    }

    #[test]
    fn selections() {
        let b = chain();
        let phi = f("p -> r");
        let rem = base_remainders(&b, &phi).unwrap();
        assert_eq!(apply_selection(&rem, &SelectionSpec::All, &b).unwrap().len(), 2);
        let first = apply_selection(&rem, &SelectionSpec::Indices(vec![0]), &b).unwrap();
        assert_eq!(b.rendered(&first[0]), ["p -> q", "p & r -> q"]);
        let empty = SubsetFamily::new(FamilyKind::Remainder, vec![]);
        assert_eq!(apply_selection(&empty, &SelectionSpec::First, &b).unwrap(), vec![b.all()]);
        assert!(apply_selection(&rem, &SelectionSpec::Indices(vec![2]), &b).is_err());
        assert!(apply_selection(&rem, &SelectionSpec::Indices(vec![]), &b).is_err());
    }

    #[test]
    fn full_meets() {
        let b = chain();
        let out = base_partial_meet(&b, &f("p -> r"), &SelectionSpec::All).unwrap();
        assert_eq!(out.to_string(), "{p & r -> q}");
        let m = mixed();
        let out = base_partial_meet(&m, &f("p & q"), &SelectionSpec::All).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn minimal_incision_lists() {
        let m = mixed();
        let inc = minimal_incisions(&base_kernels(&m, &f("p & q")).unwrap());
        let rendered: Vec<Vec<String>> = inc.iter().map(|s| m.rendered(s)).collect();
        assert_eq!(rendered, [vec!["p <-> q"], vec!["p", "p | q"]]);
        let b = chain();
        let inc = minimal_incisions(&base_kernels(&b, &f("p -> r")).unwrap());
        let rendered: Vec<Vec<String>> = inc.iter().map(|s| b.rendered(s)).collect();
        assert_eq!(rendered, [vec!["p -> q"], vec!["q -> r", "p & q -> r"]]);
        let none = SubsetFamily::new(FamilyKind::Kernel, vec![]);
        assert_eq!(minimal_incisions(&none), vec![ElemSet::EMPTY]);
    }

    #[test]
    fn explicit_incisions_are_validated() {
        let m = mixed();
        let ker = base_kernels(&m, &f("p & q")).unwrap();
        let ok = IncisionSpec::Explicit(vec![f("p | q"), f("p <-> q")]);
        assert!(apply_incision(&ker, &ok, &m).is_ok());
        let bad = IncisionSpec::Explicit(vec![f("p")]);
        match apply_incision(&ker, &bad, &m) {
            Err(Error::InvalidIncision(IncisionViolation::UnhitKernel { kernel })) => {
                assert_eq!(kernel, ["p | q", "p <-> q"])
            }
            other => panic!("{other:?}"),
        }
        let foreign = IncisionSpec::Explicit(vec![f("q")]);
        assert!(matches!(
            apply_incision(&ker, &foreign, &m),
            Err(Error::InvalidIncision(IncisionViolation::OutsideKernels { .. }))
        ));
    }

    #[test]
    fn kernel_contractions() {
        let m = mixed();
        let spec = IncisionSpec::Explicit(vec![f("p | q"), f("p <-> q")]);
        assert_eq!(base_kernel_contraction(&m, &f("p & q"), &spec).unwrap().to_string(), "{p}");
        let b = chain();
        let spec = IncisionSpec::Explicit(vec![f("p -> q"), f("q -> r")]);
        assert_eq!(
            base_kernel_contraction(&b, &f("p -> r"), &spec).unwrap().to_string(),
            "{p & q -> r, p & r -> q}"
        );
        let max = base_kernel_contraction(&b, &f("p -> r"), &IncisionSpec::Maximum).unwrap();
        assert_eq!(max.to_string(), "{p & r -> q}");
    }

    #[test]
    fn saturation_of_independent_atoms() {
        let b = base(&["p", "q"]);
        let spec = IncisionSpec::Explicit(vec![f("p")]);
        let out = saturated_base_kernel_contraction(&b, &f("p"), &spec).unwrap();
        assert_eq!(out.to_string(), "{q}");
    }

    #[test]
    fn saturation_restores_entailed_members() {
        let b = base(&["p -> q", "q -> r", "p -> r", "p & q -> r"]);
        let spec = IncisionSpec::Explicit(vec![f("p -> r"), f("p -> q"), f("p & q -> r")]);
        let plain = base_kernel_contraction(&b, &f("p -> r"), &spec).unwrap();
        assert_eq!(plain.to_string(), "{q -> r}");
        let sat = saturated_base_kernel_contraction(&b, &f("p -> r"), &spec).unwrap();
        assert_eq!(sat.to_string(), "{q -> r, p & q -> r}");
    }

    #[test]
    fn infra_membership_and_enumeration() {
        let b = chain();
        let phi = f("p -> r");
        let infra = base_infra_remainders(&b, &phi).unwrap();
        let x = b.set_of(&[f("p & q -> r"), f("p & r -> q")]).unwrap();
        assert!(infra.contains(&x));
        let y = b.set_of(&[f("p -> q"), f("q -> r")]).unwrap();
        assert!(!infra.contains(&y));
        // 2 sets below the first remainder and 4 below the second, sharing the meet.
        assert_eq!(infra.enumerate(4096).unwrap().len(), 5);
        assert!(matches!(infra.enumerate(3), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn infra_contractions() {
        let b = chain();
        let phi = f("p -> r");
        let x = vec![f("p & q -> r"), f("p & r -> q")];
        let out = base_infra_contraction(&b, &phi, &InfraSpec::Explicit(x)).unwrap();
        assert_eq!(out.to_string(), "{p & q -> r, p & r -> q}");
        assert_eq!(base_infra_contraction(&b, &Formula::Top, &InfraSpec::MeetOfAll).unwrap(), b);
        assert_eq!(
            base_infra_contraction(&b, &phi, &InfraSpec::MeetOfAll).unwrap(),
            base_partial_meet(&b, &phi, &SelectionSpec::All).unwrap()
        );
        let bad = InfraSpec::Explicit(vec![f("p -> q"), f("q -> r")]);
        assert!(matches!(
            base_infra_contraction(&b, &phi, &bad),
            Err(Error::InvalidInfraChoice(_))
        ));
    }

    #[test]
    fn engines_agree_beyond_exhaustive_range() {
        let s = sig();
        let universe = crate::formula::enumerate_clauses(&s).unwrap();
        let b = BeliefBase::new(&s, universe.iter().map(|c| c.to_formula(&s))).unwrap();
        assert_eq!(b.len(), 20);
        let phi = f("p -> r");
        let ex = base_families(&b, &phi, Engine::Exhaustive).unwrap();
        let du = base_families(&b, &phi, Engine::Duality).unwrap();
        assert_eq!(ex, du);
    }
}
