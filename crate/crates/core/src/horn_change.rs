//! Contraction of Horn belief sets.
//!
//! A Horn belief set is stored as the set of all non-tautological clauses it
//! entails, a subset of the finite clause universe of its signature.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::base_change::{
    apply_incision, apply_selection, base_families, family_order, meet_of, valid_incisions,
    BeliefBase, ElemSet, Engine, IncisionSpec, SelectionSpec, SubsetFamily,
};
use crate::error::{Error, Result};
use crate::formula::{
    as_horn_clauses, enumerate_clauses, text_order, Formula, HornClause, HornVerdict, Signature,
};
use crate::semantics::{self, clause_mask, full_mask, horn_entails, is_meet_closed, ModelSet};

/// The canonical clauses over a signature, indexed in the global order.
pub struct ClauseUniverse {
    sig: Signature,
    clauses: Vec<HornClause>,
    masks: Vec<u64>,
    index: HashMap<HornClause, usize>,
    base: BeliefBase,
}

impl ClauseUniverse {
    /// The shared universe of `sig`.
    pub fn of(sig: &Signature) -> Result<Arc<ClauseUniverse>> {
        static CACHE: OnceLock<Mutex<HashMap<Signature, Arc<ClauseUniverse>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(u) = cache.lock().expect("cache poisoned").get(sig) {
            if u.sig.limits() == sig.limits() {
                return Ok(u.clone());
            }
        }
        let universe = Arc::new(ClauseUniverse::build(sig)?);
        cache
            .lock()
            .expect("cache poisoned")
            .insert(sig.clone(), universe.clone());
        Ok(universe)
    }

    fn build(sig: &Signature) -> Result<ClauseUniverse> {
        let clauses = enumerate_clauses(sig)?;
        let n = sig.len();
        let masks = clauses.iter().map(|c| clause_mask(c, n)).collect();
        let index = clauses.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let base = BeliefBase::new(sig, clauses.iter().map(|c| c.to_formula(sig)))?;
        debug_assert!(base
            .elements()
            .iter()
            .zip(&clauses)
            .all(|(f, c)| *f == c.to_formula(sig)));
        Ok(ClauseUniverse {
            sig: sig.clone(),
            clauses,
            masks,
            index,
            base,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn clauses(&self) -> &[HornClause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn index_of(&self, c: &HornClause) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// The universe as a belief base; element `i` is clause `i`.
    pub fn base(&self) -> &BeliefBase {
        &self.base
    }

    pub fn set_of(&self, clauses: &[HornClause]) -> ElemSet {
        clauses
            .iter()
            .filter_map(|c| self.index_of(c))
            .collect()
    }

    /// Clause indices of a Horn formula; fails when `f` is not Horn.
    pub fn formula_set(&self, f: &Formula) -> Result<ElemSet> {
        match as_horn_clauses(f, &self.sig)? {
            HornVerdict::Horn(cs) => Ok(self.set_of(&cs)),
            HornVerdict::NotHorn(sub) => Err(Error::NotHorn(sub)),
        }
    }

    pub fn models_of(&self, s: &ElemSet) -> u64 {
        s.iter()
            .fold(full_mask(self.sig.len()), |m, i| m & self.masks[i])
    }

    /// Every clause whose models include `models`.
    pub(crate) fn clauses_true_in(&self, models: u64) -> ElemSet {
        (0..self.len())
            .filter(|&i| models & !self.masks[i] == 0)
            .collect()
    }

    /// `Cn_HL(s)` computed from model masks.
    pub fn close(&self, s: &ElemSet) -> ElemSet {
        self.clauses_true_in(self.models_of(s))
    }

    /// `Cn_HL(s)` computed by forward chaining.
    pub fn close_by_chaining(&self, s: &ElemSet) -> ElemSet {
        let premises: Vec<HornClause> = s.iter().map(|i| self.clauses[i]).collect();
        (0..self.len())
            .filter(|&i| horn_entails(&premises, &self.clauses[i]))
            .collect()
    }

    pub fn is_closed(&self, s: &ElemSet) -> bool {
        self.close(s) == *s
    }

    pub fn rendered(&self, s: &ElemSet) -> Vec<String> {
        s.iter().map(|i| self.clauses[i].render(&self.sig)).collect()
    }
}

impl fmt::Debug for ClauseUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClauseUniverse({:?}, {} clauses)", self.sig, self.len())
    }
}

/// A Horn-closed theory, stored as the clauses it entails.
#[derive(Clone)]
pub struct HornBeliefSet {
    universe: Arc<ClauseUniverse>,
    members: ElemSet,
}

impl HornBeliefSet {
    /// `Cn_HL(formulas)`; every formula must be Horn.
    pub fn cn(sig: &Signature, formulas: &[Formula]) -> Result<HornBeliefSet> {
        let universe = ClauseUniverse::of(sig)?;
        let mut generators = ElemSet::EMPTY;
        for f in formulas {
            sig.check(f)?;
            generators = generators.union(&universe.formula_set(f)?);
        }
        Ok(HornBeliefSet::closure_of(universe, &generators))
    }

    pub fn parse<S: AsRef<str>>(sig: &Signature, texts: &[S]) -> Result<HornBeliefSet> {
        let formulas = texts
            .iter()
            .map(|t| sig.parse(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        HornBeliefSet::cn(sig, &formulas)
    }

    pub fn closure_of(universe: Arc<ClauseUniverse>, generators: &ElemSet) -> HornBeliefSet {
        let members = universe.close(generators);
        HornBeliefSet { universe, members }
    }

    /// Wraps an already closed clause set.
    pub fn from_closed(universe: Arc<ClauseUniverse>, members: ElemSet) -> Result<HornBeliefSet> {
        if !universe.is_closed(&members) {
            return Err(Error::InvalidParameter("clause set is not Horn-closed".into()));
        }
        Ok(HornBeliefSet { universe, members })
    }

    /// The Horn theory of a meet-closed model set.
    pub fn from_models(sig: &Signature, models: &ModelSet) -> Result<HornBeliefSet> {
        if !is_meet_closed(models) {
            return Err(Error::InvalidParameter(format!("{models} is not closed under meets")));
        }
        let universe = ClauseUniverse::of(sig)?;
        let members = universe.clauses_true_in(models.mask());
        Ok(HornBeliefSet { universe, members })
    }

    pub fn universe(&self) -> &Arc<ClauseUniverse> {
        &self.universe
    }

    pub fn signature(&self) -> &Signature {
        &self.universe.sig
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn clauses(&self) -> Vec<HornClause> {
        self.members.iter().map(|i| self.universe.clauses[i]).collect()
    }

    pub fn formulas(&self) -> Vec<Formula> {
        self.members
            .iter()
            .map(|i| self.universe.base.elements()[i].clone())
            .collect()
    }

    pub fn rendered(&self) -> Vec<String> {
        self.universe.rendered(&self.members)
    }

    pub fn models(&self) -> ModelSet {
        ModelSet::from_mask(self.signature().len(), self.universe.models_of(&self.members))
    }

    /// Whether the Horn formula `f` belongs to the theory.
    pub fn contains(&self, f: &Formula) -> Result<bool> {
        Ok(self.universe.formula_set(f)?.is_subset(&self.members))
    }

    pub fn is_subset(&self, other: &HornBeliefSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `Cn_HL(H ∪ {f})`.
    pub fn expand(&self, f: &Formula) -> Result<HornBeliefSet> {
        let extra = self.universe.formula_set(f)?;
        Ok(HornBeliefSet::closure_of(
            self.universe.clone(),
            &self.members.union(&extra),
        ))
    }

    /// An irredundant generating set: clauses are dropped, latest in the
    /// global order first, while the rest still entail them.
    pub fn generators(&self) -> Vec<HornClause> {
        let mut kept = self.members;
        for i in self.members.iter().collect::<Vec<_>>().into_iter().rev() {
            let rest = kept.without(i);
            if self.universe.models_of(&rest) & !self.universe.masks[i] == 0 {
                kept = rest;
            }
        }
        kept.iter().map(|i| self.universe.clauses[i]).collect()
    }

    pub fn rendered_generators(&self) -> Vec<String> {
        self.generators()
            .iter()
            .map(|c| c.render(self.signature()))
            .collect()
    }

    fn with_members(&self, members: ElemSet) -> HornBeliefSet {
        HornBeliefSet {
            universe: self.universe.clone(),
            members,
        }
    }

    /// The clause base of the theory and the universe index of each element.
    fn clause_base(&self) -> (BeliefBase, Vec<usize>) {
        let positions: Vec<usize> = self.members.iter().collect();
        (self.universe.base.restrict(&self.members), positions)
    }
}

impl PartialEq for HornBeliefSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.universe.sig == other.universe.sig
    }
}

impl Eq for HornBeliefSet {}

impl std::hash::Hash for HornBeliefSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Display for HornBeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn_HL({{{}}})", self.rendered_generators().join(", "))
    }
}

impl fmt::Debug for HornBeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn lift(local: &ElemSet, positions: &[usize]) -> ElemSet {
    local.iter().map(|j| positions[j]).collect()
}

fn sort_theories(sets: &mut Vec<HornBeliefSet>) {
    sets.sort_by(|a, b| family_order(&a.members, &b.members));
    sets.dedup();
}

/// Kernels and remainders of the clause base of `h`, in universe indices.
fn e_families(h: &HornBeliefSet, f: &Formula) -> Result<(Vec<ElemSet>, Vec<ElemSet>)> {
    let target = h.universe.formula_set(f)?;
    let target_formula = Formula::conjunction(target.iter().map(|i| h.universe.base.elements()[i].clone()));
    let (base, positions) = h.clause_base();
    let (kernels, remainders) = base_families(&base, &target_formula, Engine::Auto)?;
    let lift_all = |fam: SubsetFamily| fam.members.iter().map(|s| lift(s, &positions)).collect();
    Ok((lift_all(kernels), lift_all(remainders)))
}

/// `H ⊥e f`: maximal subsets of `h` not entailing the Horn formula `f`.
pub fn e_remainders(h: &HornBeliefSet, f: &Formula) -> Result<Vec<HornBeliefSet>> {
    let (_, remainders) = e_families(h, f)?;
    Ok(remainders.into_iter().map(|r| h.with_members(r)).collect())
}

/// A ranking of Horn belief sets for orderly maxichoice contraction.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum OrderSpec {
    /// Sets compare by their rendered generators under the global order;
    /// the largest is the most plausible.
    #[default]
    GeneratorRender,
    /// Generator lists, most plausible first; unlisted sets rank below all
    /// listed ones and compare among themselves as in `GeneratorRender`.
    Preference(Vec<Vec<Formula>>),
}

fn generator_key(h: &HornBeliefSet) -> String {
    h.rendered_generators().join(", ")
}

impl OrderSpec {
    /// The most plausible member of a non-empty family.
    pub fn pick(&self, family: &[HornBeliefSet]) -> Result<HornBeliefSet> {
        if let OrderSpec::Preference(ranked) = self {
            for generators in ranked {
                let Some(first) = family.first() else { break };
                let candidate = HornBeliefSet::cn(first.signature(), generators)?;
                if let Some(hit) = family.iter().find(|h| **h == candidate) {
                    return Ok(hit.clone());
                }
            }
        }
        family
            .iter()
            .max_by(|a, b| text_order(&generator_key(a), &generator_key(b)))
            .cloned()
            .ok_or_else(|| Error::Precondition("orderly choice from an empty family".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EMethod {
    PartialMeet(SelectionSpec),
    /// The remainder at this position in family order.
    Maxichoice(usize),
    FullMeet,
    OrderlyMaxichoice(OrderSpec),
}

/// Partial meet e-contraction and its special cases.
pub fn e_contract(h: &HornBeliefSet, f: &Formula, method: &EMethod) -> Result<HornBeliefSet> {
    let (_, remainders) = e_families(h, f)?;
    if remainders.is_empty() {
        return Ok(h.clone());
    }
    let family = SubsetFamily::new(crate::base_change::FamilyKind::Remainder, remainders);
    let selected = match method {
        EMethod::PartialMeet(spec) => apply_selection(&family, spec, h.universe.base())?,
        EMethod::Maxichoice(i) => {
            apply_selection(&family, &SelectionSpec::Indices(vec![*i]), h.universe.base())?
        }
        EMethod::FullMeet => family.members.clone(),
        EMethod::OrderlyMaxichoice(order) => {
            let sets: Vec<HornBeliefSet> = family.iter().map(|r| h.with_members(*r)).collect();
            return order.pick(&sets);
        }
    };
    Ok(h.with_members(meet_of(&selected)?))
}

/// `H ↓e f`: Horn belief sets between the meet of all e-remainders and some
/// e-remainder.
#[derive(Clone, Debug)]
pub struct HornInfraFamily {
    h: HornBeliefSet,
    remainders: Vec<ElemSet>,
    meet: Option<ElemSet>,
}

impl HornInfraFamily {
    pub fn is_empty(&self) -> bool {
        self.remainders.is_empty()
    }

    pub fn remainders(&self) -> Vec<HornBeliefSet> {
        self.remainders.iter().map(|r| self.h.with_members(*r)).collect()
    }

    pub fn meet(&self) -> Option<HornBeliefSet> {
        self.meet.map(|m| self.h.with_members(m))
    }

    pub fn contains(&self, x: &HornBeliefSet) -> bool {
        let Some(meet) = self.meet else { return false };
        x.universe.sig == self.h.universe.sig
            && self.h.universe.is_closed(&x.members)
            && meet.is_subset(&x.members)
            && self.remainders.iter().any(|r| x.members.is_subset(r))
    }

    /// All members in family order, walking only closed sets.
    pub fn enumerate(&self, limit: usize) -> Result<Vec<HornBeliefSet>> {
        let Some(meet) = self.meet else { return Ok(Vec::new()) };
        let universe = &self.h.universe;
        let mut out: Vec<ElemSet> = Vec::new();
        for r in &self.remainders {
            let free: Vec<usize> = r.difference(&meet).iter().collect();
            next_closure(&free, |a| universe.close(&meet.union(a)).difference(&meet), |a| {
                out.push(meet.union(a));
                if out.len() > limit * self.remainders.len().max(1) {
                    return Err(Error::limit("infra family size", limit, out.len()));
                }
                Ok(())
            })?;
        }
        out.sort_by(family_order);
        out.dedup();
        if out.len() > limit {
            return Err(Error::limit("infra family size", limit, out.len()));
        }
        Ok(out.into_iter().map(|m| self.h.with_members(m)).collect())
    }

    /// Reference enumeration: every subset between the bounds, kept when closed.
    pub fn enumerate_naive(&self, limit: usize) -> Result<Vec<HornBeliefSet>> {
        let Some(meet) = self.meet else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        for r in &self.remainders {
            let free = r.difference(&meet);
            if free.len() > 24 {
                return Err(Error::limit("naive infra scan width", 24, free.len()));
            }
            out.extend(
                free.subsets()
                    .map(|s| meet.union(&s))
                    .filter(|s| self.h.universe.is_closed(s)),
            );
        }
        out.sort_by(family_order);
        out.dedup();
        if out.len() > limit {
            return Err(Error::limit("infra family size", limit, out.len()));
        }
        Ok(out.into_iter().map(|m| self.h.with_members(m)).collect())
    }
}

/// Ganter's NextClosure: visits every set `A ⊆ free` with `close(A) = A` in
/// lectic order. `close` must be a closure operator on subsets of `free`.
fn next_closure(
    free: &[usize],
    close: impl Fn(&ElemSet) -> ElemSet,
    mut visit: impl FnMut(&ElemSet) -> Result<()>,
) -> Result<()> {
    let all: ElemSet = free.iter().copied().collect();
    let below = |i: usize| -> ElemSet { free[..i].iter().copied().collect() };
    let mut a = close(&ElemSet::EMPTY);
    visit(&a)?;
    while a != all {
        let mut advanced = false;
        for i in (0..free.len()).rev() {
            let e = free[i];
            if a.contains(e) {
                continue;
            }
            let prefix = a.intersection(&below(i));
            let b = close(&prefix.with(e));
            if b.intersection(&below(i)) == prefix {
                a = b;
                visit(&a)?;
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Ok(())
}

pub fn infra_e_remainders(h: &HornBeliefSet, f: &Formula) -> Result<HornInfraFamily> {
    let (_, remainders) = e_families(h, f)?;
    let meet = remainders.iter().copied().reduce(|a, r| a.intersection(&r));
    Ok(HornInfraFamily {
        h: h.clone(),
        remainders,
        meet,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornInfraSpec {
    MeetOfAll,
    RemainderIndex(usize),
    /// Generators of the chosen theory.
    Explicit(Vec<Formula>),
}

/// Infra e-contraction: the chosen infra e-remainder, or `h` when none exists.
pub fn infra_e_contraction(h: &HornBeliefSet, f: &Formula, choice: &HornInfraSpec) -> Result<HornBeliefSet> {
    let family = infra_e_remainders(h, f)?;
    if family.is_empty() {
        return Ok(h.clone());
    }
    match choice {
        HornInfraSpec::MeetOfAll => Ok(family.meet().expect("non-empty family")),
        HornInfraSpec::RemainderIndex(i) => family.remainders().get(*i).cloned().ok_or_else(|| {
            Error::InvalidInfraChoice(format!(
                "remainder index {i} out of range for {} remainders",
                family.remainders.len()
            ))
        }),
        HornInfraSpec::Explicit(generators) => {
            let x = HornBeliefSet::cn(h.signature(), generators)
                .map_err(|e| Error::InvalidInfraChoice(e.to_string()))?;
            if family.contains(&x) {
                Ok(x)
            } else {
                Err(Error::InvalidInfraChoice(format!("{x} is not an infra e-remainder")))
            }
        }
    }
}

/// Kernels of the clause base of `h` with respect to `f`, as a base family.
pub fn horn_kernels(h: &HornBeliefSet, f: &Formula) -> Result<(BeliefBase, SubsetFamily)> {
    let target = h.universe.formula_set(f)?;
    let target_formula = Formula::conjunction(target.iter().map(|i| h.universe.base.elements()[i].clone()));
    let (base, _) = h.clause_base();
    let (kernels, _) = base_families(&base, &target_formula, Engine::Auto)?;
    Ok((base, kernels))
}

/// Rewrites explicit incision formulas into the canonical clause formulas
/// that make up a clause base.
fn canonical_incision(spec: &IncisionSpec, sig: &Signature) -> Result<IncisionSpec> {
    match spec {
        IncisionSpec::Explicit(formulas) => {
            let canonical = formulas
                .iter()
                .map(|f| Ok(HornClause::from_formula(f, sig)?.to_formula(sig)))
                .collect::<Result<Vec<_>>>()?;
            Ok(IncisionSpec::Explicit(canonical))
        }
        other => Ok(other.clone()),
    }
}

/// Kernel e-contraction: the Horn closure of the clause base of `h` minus
/// the incision.
pub fn horn_kernel_e_contraction(h: &HornBeliefSet, f: &Formula, spec: &IncisionSpec) -> Result<HornBeliefSet> {
    let (base, kernels) = horn_kernels(h, f)?;
    let spec = canonical_incision(spec, h.signature())?;
    let cut = apply_incision(&kernels, &spec, &base)?;
    let kept = lift(&base.all().difference(&cut), &h.clause_base().1);
    Ok(HornBeliefSet::closure_of(h.universe.clone(), &kept))
}

/// Outcomes of kernel e-contraction over every valid incision, deduplicated
/// and in family order.
pub fn horn_kernel_outcomes(h: &HornBeliefSet, f: &Formula) -> Result<Vec<HornBeliefSet>> {
    let (base, kernels) = horn_kernels(h, f)?;
    let positions = h.clause_base().1;
    let mut out: Vec<HornBeliefSet> = valid_incisions(&kernels, &base)?
        .into_iter()
        .map(|cut| {
            let kept = lift(&base.all().difference(&cut), &positions);
            HornBeliefSet::closure_of(h.universe.clone(), &kept)
        })
        .collect();
    sort_theories(&mut out);
    Ok(out)
}

/// Searches for `X″` with `Cn(X″) ⊂ Cn(X)` and `Cn(X′ ∪ X″) = Cn(X)`, trying
/// subsets of `Cn(X)` smallest first. `Ok(None)` means no such set exists.
pub fn decomposability_witness(
    x: &[Formula],
    xp: &[Formula],
    sig: &Signature,
) -> Result<Option<Vec<HornClause>>> {
    let cx = HornBeliefSet::cn(sig, x)?;
    let cxp = HornBeliefSet::cn(sig, xp)?;
    if cxp.members.is_empty() || !cxp.is_subset(&cx) || cxp == cx {
        return Err(Error::Precondition(
            "the consequences of X' must lie strictly between those of the empty set and of X".into(),
        ));
    }
    let limit = sig.limits().exhaustive_base;
    if cx.members.len() > limit {
        return Err(Error::limit("witness search space", limit, cx.members.len()));
    }
    let universe = &cx.universe;
    let mut candidates: Vec<ElemSet> = cx.members.subsets().collect();
    candidates.sort_by(family_order);
    for cand in candidates {
        let closed = universe.close(&cand);
        if closed != cx.members && universe.close(&cxp.members.union(&cand)) == cx.members {
            return Ok(Some(cand.iter().map(|i| universe.clauses[i]).collect()));
        }
    }
    Ok(None)
}

/// Every Horn belief set over `sig`, one per meet-closed model set, ordered
/// by model-set bitmask.
pub fn all_horn_belief_sets(sig: &Signature) -> Result<Vec<HornBeliefSet>> {
    let universe = ClauseUniverse::of(sig)?;
    semantics::models(std::iter::empty::<&Formula>(), sig)?;
    let n = sig.len();
    Ok((0..=full_mask(n))
        .map(|bits| ModelSet::from_mask(n, bits))
        .filter(is_meet_closed)
        .map(|m| HornBeliefSet {
            universe: universe.clone(),
            members: universe.clauses_true_in(m.mask()),
        })
        .collect())
}
