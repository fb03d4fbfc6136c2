//! Contraction of logically closed propositional theories, represented by
//! their model sets.

use std::fmt;

use crate::base_change::{
    apply_incision, base_kernels, BeliefBase, IncisionSpec, SubsetFamily,
};
use crate::error::{Error, Result};
use crate::formula::{enumerate_clauses, Formula, Signature};
use crate::semantics::{self, clause_mask, formula_mask, is_meet_closed, synthesize, ModelSet, Valuation};

/// A closed theory `Cn(X)`, identified with its set of models.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PropBeliefSet {
    sig: Signature,
    models: ModelSet,
}

impl PropBeliefSet {
    pub fn from_models(sig: &Signature, models: ModelSet) -> Result<PropBeliefSet> {
        semantics::models([], sig)?;
        if models.width() != sig.len() {
            return Err(Error::InvalidParameter(format!(
                "model set over {} atoms used with a signature of {}",
                models.width(),
                sig.len()
            )));
        }
        Ok(PropBeliefSet {
            sig: sig.clone(),
            models,
        })
    }

    /// `Cn(xs)`.
    pub fn cn<'a, I: IntoIterator<Item = &'a Formula>>(sig: &Signature, xs: I) -> Result<PropBeliefSet> {
        PropBeliefSet::from_models(sig, semantics::models(xs, sig)?)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn models(&self) -> ModelSet {
        self.models
    }

    pub fn contains(&self, f: &Formula) -> Result<bool> {
        Ok(self.models.mask() & !formula_mask(f, &self.sig)? == 0)
    }

    pub fn is_subset(&self, other: &PropBeliefSet) -> bool {
        other.models.is_subset(&self.models)
    }

    /// A single formula axiomatizing the theory.
    pub fn generator(&self) -> Formula {
        synthesize(&self.models, &self.sig)
    }

    /// One formula per equivalence class of members.
    pub fn representatives(&self) -> Result<Vec<Formula>> {
        semantics::representatives(&self.models, &self.sig)
    }

    /// `Cn(K ∪ {f})`.
    pub fn expand(&self, f: &Formula) -> Result<PropBeliefSet> {
        let models = self.models.mask() & formula_mask(f, &self.sig)?;
        Ok(PropBeliefSet {
            sig: self.sig.clone(),
            models: ModelSet::from_mask(self.sig.len(), models),
        })
    }

    fn with_models(&self, bits: u64) -> PropBeliefSet {
        PropBeliefSet {
            sig: self.sig.clone(),
            models: ModelSet::from_mask(self.sig.len(), bits),
        }
    }

    /// Countermodels of `f`, i.e. `[¬f]`.
    pub fn countermodels(&self, f: &Formula) -> Result<ModelSet> {
        Ok(ModelSet::from_mask(self.sig.len(), formula_mask(f, &self.sig)?).complement())
    }
}

impl fmt::Display for PropBeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({})", self.generator())
    }
}

impl fmt::Debug for PropBeliefSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({}) {}", self.generator(), self.models)
    }
}

/// How `f` relates to `K` for contraction purposes.
enum Case {
    /// `⊨ f` or `f ∉ K`: every contraction returns `K`.
    Vacuous,
    /// `f ∈ K` and `f` is contingent; carries `[¬f]`.
    Proper(ModelSet),
}

fn classify(k: &PropBeliefSet, f: &Formula) -> Result<Case> {
    let counter = k.countermodels(f)?;
    if counter.is_empty() || !k.contains(f)? {
        Ok(Case::Vacuous)
    } else {
        Ok(Case::Proper(counter))
    }
}

/// `K ⊥ f`: one remainder `Th([K] ∪ {w})` per countermodel `w` of `f`.
pub fn bs_remainders(k: &PropBeliefSet, f: &Formula) -> Result<Vec<PropBeliefSet>> {
    let counter = k.countermodels(f)?;
    if counter.is_empty() {
        return Ok(Vec::new());
    }
    if !k.contains(f)? {
        return Ok(vec![k.clone()]);
    }
    Ok(counter
        .iter()
        .map(|w| k.with_models(k.models.mask() | 1u64 << w.bits()))
        .collect())
}

/// Which finite set of sentences stands in for a belief set in kernel work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Presentation {
    /// One formula per equivalence class of members.
    #[default]
    Representatives,
    /// The non-tautological Horn clauses the theory contains; only faithful
    /// for theories whose model set is closed under meets.
    HornFragment,
}

/// The finite base standing in for `K`.
pub fn presentation(k: &PropBeliefSet, p: Presentation) -> Result<BeliefBase> {
    match p {
        Presentation::Representatives => BeliefBase::new(&k.sig, k.representatives()?),
        Presentation::HornFragment => {
            if !is_meet_closed(&k.models) {
                return Err(Error::Precondition(format!(
                    "{k} is not a Horn theory, so its Horn fragment does not present it"
                )));
            }
            let n = k.sig.len();
            let clauses = enumerate_clauses(&k.sig)?
                .into_iter()
                .filter(|c| k.models.mask() & !clause_mask(c, n) == 0)
                .map(|c| c.to_formula(&k.sig));
            BeliefBase::new(&k.sig, clauses)
        }
    }
}

/// `K ⊥⊥ f` over the chosen presentation of `K`.
pub fn bs_kernels(k: &PropBeliefSet, f: &Formula, p: Presentation) -> Result<(BeliefBase, SubsetFamily)> {
    let base = presentation(k, p)?;
    let kernels = base_kernels(&base, f)?;
    Ok((base, kernels))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BsMethod {
    /// `Th([K] ∪ V)` for a non-empty set `V` of countermodels.
    PartialMeet(ModelSet),
    Maxichoice(Valuation),
    FullMeet,
    /// The infra remainder `Th([K] ∪ V)`.
    Infra(ModelSet),
    /// `Cn(P \ σ(P ⊥⊥ f))` over a presentation `P` of `K`.
    Kernel {
        incision: IncisionSpec,
        presentation: Presentation,
    },
}

pub fn bs_contract(k: &PropBeliefSet, f: &Formula, method: &BsMethod) -> Result<PropBeliefSet> {
    let counter = match classify(k, f)? {
        Case::Vacuous => return Ok(k.clone()),
        Case::Proper(counter) => counter,
    };
    let check_width = |v: &ModelSet| {
        if v.width() != k.sig.len() {
            return Err(Error::InvalidParameter(format!(
                "valuations must have {} bits",
                k.sig.len()
            )));
        }
        Ok(())
    };
    match method {
        BsMethod::PartialMeet(v) | BsMethod::Infra(v) => {
            check_width(v)?;
            if v.is_empty() || !v.is_subset(&counter) {
                return Err(Error::InvalidParameter(format!(
                    "{v} must be a non-empty subset of the countermodels {counter}"
                )));
            }
            Ok(k.with_models(k.models.mask() | v.mask()))
        }
        BsMethod::Maxichoice(w) => {
            let v = ModelSet::from_valuations(w.width(), [*w]);
            check_width(&v)?;
            if !counter.contains(*w) {
                return Err(Error::InvalidParameter(format!("{w} is not a countermodel")));
            }
            Ok(k.with_models(k.models.mask() | v.mask()))
        }
        BsMethod::FullMeet => Ok(k.with_models(k.models.mask() | counter.mask())),
        BsMethod::Kernel {
            incision,
            presentation: p,
        } => {
            let (base, kernels) = bs_kernels(k, f, *p)?;
            let cut = apply_incision(&kernels, incision, &base)?;
            let kept = base.all().difference(&cut);
            Ok(k.with_models(base.models_of(&kept)))
        }
    }
}

/// `K ↓ f`, represented by the countermodels available for extension.
#[derive(Clone, Debug)]
pub struct PropInfraFamily {
    k: PropBeliefSet,
    /// `None` when `⊨ f` (empty family); empty when `f ∉ K` (family `{K}`).
    counter: Option<ModelSet>,
}

impl PropInfraFamily {
    pub fn contains(&self, x: &PropBeliefSet) -> bool {
        let Some(counter) = self.counter else {
            return false;
        };
        if counter.is_empty() {
            return x.models == self.k.models;
        }
        let extra = x.models.difference(&self.k.models);
        self.k.models.is_subset(&x.models) && !extra.is_empty() && extra.is_subset(&counter)
    }

    pub fn is_empty(&self) -> bool {
        self.counter.is_none()
    }

    /// Members ordered by their added countermodels as a bitmask.
    pub fn enumerate(&self, limit: usize) -> Result<Vec<PropBeliefSet>> {
        let Some(counter) = self.counter else {
            return Ok(Vec::new());
        };
        if counter.is_empty() {
            return Ok(vec![self.k.clone()]);
        }
        let ws: Vec<Valuation> = counter.iter().collect();
        let size = (1usize << ws.len()) - 1;
        if size > limit {
            return Err(Error::limit("infra family size", limit, size));
        }
        Ok((1..(1u64 << ws.len()))
            .map(|pick| {
                let added = ws
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick >> i & 1 == 1)
                    .fold(0u64, |m, (_, w)| m | 1 << w.bits());
                self.k.with_models(self.k.models.mask() | added)
            })
            .collect())
    }
}

pub fn bs_infra_remainders(k: &PropBeliefSet, f: &Formula) -> Result<PropInfraFamily> {
    let counter = k.countermodels(f)?;
    let counter = if counter.is_empty() {
        None
    } else if !k.contains(f)? {
        Some(ModelSet::empty(k.sig.len()))
    } else {
        Some(counter)
    };
    Ok(PropInfraFamily {
        k: k.clone(),
        counter,
    })
}

/// Every closed theory over `sig`, ordered by model-set bitmask.
pub fn all_belief_sets(sig: &Signature) -> Result<Vec<PropBeliefSet>> {
    semantics::models([], sig)?;
    let n = sig.len();
    if n > 4 {
        return Err(Error::limit("belief set enumeration signature size", 4, n));
    }
    Ok((0..=semantics::full_mask(n))
        .map(|bits| PropBeliefSet {
            sig: sig.clone(),
            models: ModelSet::from_mask(n, bits),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig2() -> Signature {
        Signature::new(["p", "q"]).unwrap()
    }

    fn sig3() -> Signature {
        Signature::new(["p", "q", "r"]).unwrap()
    }

    fn cn(sig: &Signature, texts: &[&str]) -> PropBeliefSet {
        let fs: Vec<Formula> = texts.iter().map(|t| sig.parse(t).unwrap()).collect();
        PropBeliefSet::cn(sig, &fs).unwrap()
    }

    #[test]
    fn remainders_of_conjunction() {
        let s = sig2();
        let k = cn(&s, &["p & q"]);
        let rem = bs_remainders(&k, &s.parse("p").unwrap()).unwrap();
        assert_eq!(rem, vec![cn(&s, &["p <-> q"]), cn(&s, &["q"])]);
        assert!(bs_remainders(&k, &Formula::Top).unwrap().is_empty());
        let weak = cn(&s, &["q"]);
        assert_eq!(bs_remainders(&weak, &s.parse("p").unwrap()).unwrap(), vec![weak.clone()]);
    }

    #[test]
    fn contraction_methods() {
        let s = sig2();
        let k = cn(&s, &["p & q"]);
        let p = s.parse("p").unwrap();
        let full = bs_contract(&k, &p, &BsMethod::FullMeet).unwrap();
        assert_eq!(full, cn(&s, &["p -> q"]));
        assert_eq!(full.models().to_strings(), ["00", "01", "11"]);
        let w = Valuation::parse("01").unwrap();
        assert_eq!(bs_contract(&k, &p, &BsMethod::Maxichoice(w)).unwrap(), cn(&s, &["q"]));
        let bad = Valuation::parse("11").unwrap();
        assert!(bs_contract(&k, &p, &BsMethod::Maxichoice(bad)).is_err());
        let empty = BsMethod::PartialMeet(ModelSet::empty(2));
        assert!(bs_contract(&k, &p, &empty).is_err());
        assert_eq!(bs_contract(&k, &Formula::Top, &BsMethod::FullMeet).unwrap(), k);
    }

    #[test]
    fn kernel_over_horn_fragment() {
        let s = sig3();
        let k = cn(&s, &["p -> q", "q -> r"]);
        let phi = s.parse("p -> r").unwrap();
        let (base, kernels) = bs_kernels(&k, &phi, Presentation::HornFragment).unwrap();
        assert_eq!(
            kernels.rendered(&base),
            [vec!["p -> r"], vec!["p -> q", "q -> r"], vec!["p -> q", "p & q -> r"]]
        );
        let cut = ["p -> r", "p -> q", "p & q -> r"].map(|t| s.parse(t).unwrap()).to_vec();
        let method = BsMethod::Kernel {
            incision: IncisionSpec::Explicit(cut),
            presentation: Presentation::HornFragment,
        };
        let out = bs_contract(&k, &phi, &method).unwrap();
        assert!(out.contains(&s.parse("p & q -> r").unwrap()).unwrap());
        assert!(!out.contains(&phi).unwrap());
    }

    #[test]
    fn horn_fragment_requires_horn_theory() {
        let s = sig2();
        let k = cn(&s, &["p | q"]);
        assert!(matches!(
            presentation(&k, Presentation::HornFragment),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn full_representative_kernels_contain_fragment_kernels() {
        let s = sig3();
        let k = cn(&s, &["p -> q", "q -> r"]);
        let phi = s.parse("p -> r").unwrap();
        // The full representative set of this theory has 2^4 classes.
        let (base, kernels) = bs_kernels(&k, &phi, Presentation::Representatives).unwrap();
        assert_eq!(base.len(), 16);
        let rendered = kernels.rendered(&base);
        assert!(rendered.contains(&vec!["p -> r".to_string()]));
        assert!(kernels.len() > 3);
    }

    #[test]
    fn infra_family_of_conjunction() {
        let s = sig2();
        let k = cn(&s, &["p & q"]);
        let p = s.parse("p").unwrap();
        let fam = bs_infra_remainders(&k, &p).unwrap();
        let members = fam.enumerate(4096).unwrap();
        assert_eq!(members.len(), 3);
        for expected in [cn(&s, &["q"]), cn(&s, &["p <-> q"]), cn(&s, &["p -> q"])] {
            assert!(members.contains(&expected));
            assert!(fam.contains(&expected));
        }
        assert!(!fam.contains(&k));
        for r in bs_remainders(&k, &p).unwrap() {
            assert!(fam.contains(&r));
        }
        for a in &members {
            for b in &members {
                let meet = PropBeliefSet::from_models(&s, a.models().union(&b.models())).unwrap();
                assert!(fam.contains(&meet));
            }
        }
    }

    #[test]
    fn kernel_outcomes_follow_incision() {
        let s = sig2();
        let k = cn(&s, &["p & q"]);
        let p = s.parse("p").unwrap();
        let (base, kernels) = bs_kernels(&k, &p, Presentation::Representatives).unwrap();
        assert!(kernels.iter().all(|ker| !ker.is_empty()));
        let max = bs_contract(
            &k,
            &p,
            &BsMethod::Kernel {
                incision: IncisionSpec::Maximum,
                presentation: Presentation::Representatives,
            },
        )
        .unwrap();
        assert_eq!(max, bs_contract(&k, &p, &BsMethod::FullMeet).unwrap());
        assert!(base.len() >= kernels.union().len());
    }
}
