use proptest::prelude::*;

use belief_change::base_change::{
    base_kernels, base_partial_meet, base_remainders, minimal_incisions, BeliefBase, ElemSet, SelectionSpec,
};
use belief_change::formula::{render, HornClause, Head};
use belief_change::horn_change::{e_contract, ClauseUniverse, EMethod, HornBeliefSet};
use belief_change::semantics::{entails, horn_entails, is_meet_closed, models};
use belief_change::{Formula, Signature};

fn sig() -> Signature {
    Signature::new(["p", "q", "r"]).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let s = sig();
    let leaf = prop_oneof![
        (0..3usize).prop_map(move |i| Formula::atom(s.atom(i).clone())),
        Just(Formula::top()),
        Just(Formula::bottom()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

fn clause(n: usize) -> impl Strategy<Value = HornClause> {
    (0u8..(1 << n), prop_oneof![(0..n as u8).prop_map(Head::Atom), Just(Head::Bottom)])
        .prop_map(|(body, head)| HornClause::raw(body, head))
}

fn mask(f: &Formula, sig: &Signature) -> u64 {
    models([f], sig).unwrap().mask()
}

proptest! {
    #[test]
    fn rendering_round_trips(f in formula()) {
        let sig = sig();
        let text = render(&f);
        let back = sig.parse(&text).unwrap();
        prop_assert_eq!(mask(&back, &sig), mask(&f, &sig));
        prop_assert_eq!(render(&back), text);
    }

    #[test]
    fn chaining_agrees_with_truth_tables(
        n in 1usize..=4,
        seed in prop::collection::vec((0u8..16, 0u8..5), 0..6),
        goal in (0u8..16, 0u8..5),
    ) {
        let names = ["p", "q", "r", "s"];
        let sig = Signature::new(&names[..n]).unwrap();
        let mk = |(b, h): (u8, u8)| {
            let head = if (h as usize) < n { Head::Atom(h) } else { Head::Bottom };
            HornClause::raw(b & ((1 << n) - 1), head)
        };
        let xs: Vec<HornClause> = seed.into_iter().map(mk).collect();
        let c = mk(goal);
        let fs: Vec<Formula> = xs.iter().map(|x| x.to_formula(&sig)).collect();
        let classical = entails(fs.iter(), &c.to_formula(&sig), &sig).unwrap();
        prop_assert_eq!(horn_entails(&xs, &c), classical);
    }

    #[test]
    fn horn_closure_is_a_closure_operator(
        xs in prop::collection::vec(clause(3), 0..5),
        ys in prop::collection::vec(clause(3), 0..3),
    ) {
        let sig = sig();
        let u = ClauseUniverse::of(&sig).unwrap();
        let canon = |v: &[HornClause]| -> Vec<HornClause> { v.iter().copied().filter(|c| !c.is_tautology()).collect() };
        let a = u.set_of(&canon(&xs));
        let mut both = canon(&xs);
        both.extend(canon(&ys));
        let b = u.set_of(&both);
        let ca = u.close(&a);
        prop_assert!(a.is_subset(&ca));
        prop_assert_eq!(u.close(&ca), ca);
        prop_assert!(ca.is_subset(&u.close(&b)));
        prop_assert_eq!(u.close_by_chaining(&a), ca);
    }

    #[test]
    fn horn_models_are_meet_closed(xs in prop::collection::vec(clause(3), 0..6)) {
        let sig = sig();
        let fs: Vec<Formula> = xs.iter().map(|x| x.to_formula(&sig)).collect();
        let h = HornBeliefSet::cn(&sig, &fs).unwrap();
        prop_assert!(is_meet_closed(&h.models()));
        prop_assert_eq!(h.models(), models(fs.iter(), &sig).unwrap());
    }

    #[test]
    fn kernels_and_remainders_are_dual(fs in prop::collection::vec(formula(), 1..7), phi in formula()) {
        let sig = sig();
        let b = BeliefBase::new(&sig, fs).unwrap();
        let kernels = base_kernels(&b, &phi).unwrap();
        let remainders = base_remainders(&b, &phi).unwrap();
        let mut hit = ElemSet::default();
        for k in kernels.iter() {
            hit = hit.union(k);
        }
        let mut meet = b.all();
        for r in remainders.iter() {
            meet = meet.intersection(r);
        }
        if !remainders.is_empty() {
            prop_assert_eq!(b.all().difference(&hit), meet);
        }
        let mut complements: Vec<ElemSet> = minimal_incisions(&kernels).iter().map(|s| b.all().difference(s)).collect();
        let mut rems: Vec<ElemSet> = remainders.iter().cloned().collect();
        complements.sort_by(belief_change::base_change::family_order);
        rems.sort_by(belief_change::base_change::family_order);
        if !kernels.iter().any(|k| k.is_empty()) {
            prop_assert_eq!(complements, rems);
        }
    }

    #[test]
    fn partial_meet_is_successful_and_inclusive(fs in prop::collection::vec(formula(), 1..6), phi in formula()) {
        let sig = sig();
        let b = BeliefBase::new(&sig, fs).unwrap();
        let out = base_partial_meet(&b, &phi, &SelectionSpec::All).unwrap();
        prop_assert!(out.elements().iter().all(|f| b.elements().contains(f)));
        let tautology = mask(&phi, &sig) == models(std::iter::empty::<&Formula>(), &sig).unwrap().mask();
        if !tautology {
            prop_assert!(!entails(out.elements().iter(), &phi, &sig).unwrap());
        }
    }

    #[test]
    fn full_meet_e_contraction_is_inclusive_and_successful(
        xs in prop::collection::vec(clause(3), 1..5),
        goal in clause(3),
    ) {
        let sig = sig();
        let fs: Vec<Formula> = xs.iter().map(|x| x.to_formula(&sig)).collect();
        let h = HornBeliefSet::cn(&sig, &fs).unwrap();
        let phi = goal.to_formula(&sig);
        let out = e_contract(&h, &phi, &EMethod::FullMeet).unwrap();
        prop_assert!(out.is_subset(&h));
        if !goal.is_tautology() {
            prop_assert!(!out.contains(&phi).unwrap());
        }
    }
}
