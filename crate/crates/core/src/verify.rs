//! Named verification suites: worked examples with frozen expected values
//! and exhaustive or sampled checks of the representation results.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::base_change::{
    apply_selection, base_families, base_infra_remainders, base_kernel_contraction, base_kernels,
    base_partial_meet, base_remainders, meet_of, minimal_incisions, valid_incisions, BeliefBase, ElemSet,
    Engine, IncisionSpec, SelectionSpec, SubsetFamily,
};
use crate::beliefset_change::{
    all_belief_sets, bs_contract, bs_infra_remainders, bs_kernels, bs_remainders, BsMethod, Presentation,
    PropBeliefSet,
};
use crate::error::{Error, Result};
use crate::formula::{enumerate_clauses, render, Formula, HornClause, Signature};
use crate::horn_change::{
    all_horn_belief_sets, decomposability_witness, e_contract, e_remainders, horn_kernel_e_contraction,
    horn_kernel_outcomes, infra_e_remainders, ClauseUniverse, EMethod, HornBeliefSet,
};
use crate::postulates::{check, check_point, ContractionTable, Outcome, Postulate, Subject};
use crate::semantics::{entails, horn_entails, intersection_closure, models, synthesize, ModelSet};

/// Suite names accepted by [`run`], in execution order for `all`.
pub const SUITES: [&str; 12] = [
    "example1",
    "example2",
    "example3",
    "example4",
    "example5",
    "thm7",
    "thm3",
    "thm8",
    "thm9",
    "lemmaA3-duality",
    "horn-entailment-oracle",
    "non-decomposability",
];

const SEED: u64 = 0x5eed_2011;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.cases {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "  {mark} {}", c.name)?;
            if let Some(d) = &c.detail {
                writeln!(f, "       {d}")?;
            }
        }
        writeln!(f, "{}: {}/{} passed", self.suite, self.passed(), self.cases.len())
    }
}

/// Runs one suite, or every suite for `all`.
pub fn run(name: &str) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s)).collect();
    }
    Ok(vec![run_one(name)?])
}

pub fn run_one(name: &str) -> Result<SuiteReport> {
    let mut s = Cases::new(name);
    match name {
        "example1" => horn_fragment_kernels(&mut s)?,
        "example2" => base_infra_beyond_partial_meet(&mut s)?,
        "example3" => kernel_beyond_partial_meet(&mut s)?,
        "example4" => horn_chain(&mut s)?,
        "example5" => horn_conjunction(&mut s)?,
        "thm7" => base_kernels_match_infra(&mut s)?,
        "thm3" => belief_set_constructions_agree(&mut s)?,
        "thm8" => horn_kernels_match_infra(&mut s)?,
        "thm9" => horn_infra_postulates(&mut s)?,
        "lemmaA3-duality" => duality(&mut s)?,
        "horn-entailment-oracle" => horn_oracle(&mut s)?,
        "non-decomposability" => non_decomposability(&mut s)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(s.finish())
}

struct Cases {
    report: SuiteReport,
}

impl Cases {
    fn new(name: &str) -> Cases {
        Cases {
            report: SuiteReport {
                suite: name.to_string(),
                cases: Vec::new(),
            },
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl FnOnce() -> String) {
        let detail = (!pass).then(detail);
        self.report.cases.push(CaseResult {
            name: name.into(),
            pass,
            detail,
        });
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, actual: T, expected: T) {
        let pass = actual == expected;
        self.check(name, pass, || format!("expected {expected:?}, got {actual:?}"));
    }

    /// A tally case over many sub-checks, reporting the first failure.
    fn tally(&mut self, name: &str, total: usize, failures: Vec<String>) {
        let pass = failures.is_empty();
        let label = format!("{name} ({} of {total} cases)", total - failures.len());
        let first = failures.first().cloned().unwrap_or_default();
        let count = failures.len();
        self.check(label, pass, || format!("{count} failures; first: {first}"));
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

fn sig(names: &[&str]) -> Signature {
    Signature::new(names.iter().copied()).expect("fixed signature")
}

fn parse(s: &Signature, text: &str) -> Formula {
    s.parse(text).expect("fixed formula")
}

fn family(b: &BeliefBase, sets: &[ElemSet]) -> Vec<Vec<String>> {
    sets.iter().map(|s| b.rendered(s)).collect()
}

fn strings(items: &[&[&str]]) -> Vec<Vec<String>> {
    items
        .iter()
        .map(|set| set.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn generators(sets: &[HornBeliefSet]) -> Vec<Vec<String>> {
    sets.iter().map(|h| h.rendered_generators()).collect()
}

fn horn_fragment_kernels(s: &mut Cases) -> Result<()> {
    let sg = sig(&["p", "q", "r"]);
    let k = PropBeliefSet::cn(&sg, &[parse(&sg, "p -> q"), parse(&sg, "q -> r")])?;
    let phi = parse(&sg, "p -> r");
    let (base, kernels) = bs_kernels(&k, &phi, Presentation::HornFragment)?;
    s.eq(
        "kernels of p -> r over the Horn fragment",
        family(&base, &kernels.members),
        strings(&[&["p -> r"], &["p -> q", "q -> r"], &["p -> q", "p & q -> r"]]),
    );
    let cut: Vec<Formula> = ["p -> r", "p -> q", "p & q -> r"].iter().map(|t| parse(&sg, t)).collect();
    let spec = IncisionSpec::Explicit(cut);
    let raw = base_kernel_contraction(&base, &phi, &spec)?;
    let pqr = parse(&sg, "p & q -> r");
    s.eq("incision output without closure", raw.rendered(&raw.all()), vec![
        "q -> r".to_string(),
        "p & r -> q".to_string(),
    ]);
    s.check("p & q -> r is not a member without closure", raw.index_of(&pqr).is_none(), String::new);
    s.check("p & q -> r is entailed without closure", raw.entails(&pqr)?, String::new);
    let closed = bs_contract(&k, &phi, &BsMethod::Kernel {
        incision: spec.clone(),
        presentation: Presentation::HornFragment,
    })?;
    s.check("p & q -> r is a member after closure", closed.contains(&pqr)?, || closed.to_string());
    let h = HornBeliefSet::cn(&sg, &[parse(&sg, "p -> q"), parse(&sg, "q -> r")])?;
    let horn = horn_kernel_e_contraction(&h, &phi, &spec)?;
    s.check("Horn kernel e-contraction keeps p & q -> r", horn.contains(&pqr)?, || horn.to_string());
    Ok(())
}

fn chain_base() -> (Signature, BeliefBase, Formula) {
    let sg = sig(&["p", "q", "r"]);
    let b = BeliefBase::parse(&sg, &["p -> q", "q -> r", "p & q -> r", "p & r -> q"]).expect("fixed base");
    let phi = parse(&sg, "p -> r");
    (sg, b, phi)
}

/// Every partial meet outcome over every selection function.
fn partial_meet_outcomes(b: &BeliefBase, remainders: &SubsetFamily) -> Result<Vec<ElemSet>> {
    if remainders.is_empty() {
        return Ok(vec![b.all()]);
    }
    let n = remainders.len();
    if n > 16 {
        return Err(Error::limit("selection functions", 1 << 16, 1usize << n.min(63)));
    }
    let mut out = Vec::new();
    for pick in 1..(1u32 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| pick >> i & 1 == 1).collect();
        let selected = apply_selection(remainders, &SelectionSpec::Indices(idx), b)?;
        out.push(meet_of(&selected)?);
    }
    out.sort_by(crate::base_change::family_order);
    out.dedup();
    Ok(out)
}

fn base_infra_beyond_partial_meet(s: &mut Cases) -> Result<()> {
    let (sg, b, phi) = chain_base();
    let rem = base_remainders(&b, &phi)?;
    s.eq(
        "remainders of p -> r",
        family(&b, &rem.members),
        strings(&[&["p -> q", "p & r -> q"], &["q -> r", "p & q -> r", "p & r -> q"]]),
    );
    let full = base_partial_meet(&b, &phi, &SelectionSpec::All)?;
    s.eq("full meet", full.rendered(&full.all()), vec!["p & r -> q".to_string()]);
    let x = b.set_of(&[parse(&sg, "p & q -> r"), parse(&sg, "p & r -> q")])?;
    let infra = base_infra_remainders(&b, &phi)?;
    s.check("X is an infra remainder", infra.contains(&x), String::new);
    let cut = IncisionSpec::Explicit(vec![parse(&sg, "p -> q"), parse(&sg, "q -> r")]);
    let via_kernel = base_kernel_contraction(&b, &phi, &cut)?;
    s.eq("X is reached by kernel contraction", via_kernel.rendered(&via_kernel.all()), b.rendered(&x));
    let outcomes = partial_meet_outcomes(&b, &rem)?;
    s.eq("partial meet outcomes over all selections", outcomes.len(), 3);
    s.check("no partial meet yields X", !outcomes.contains(&x), || format!("{:?}", family(&b, &outcomes)));
    Ok(())
}

fn kernel_beyond_partial_meet(s: &mut Cases) -> Result<()> {
    let sg = sig(&["p", "q"]);
    let b = BeliefBase::parse(&sg, &["p", "p | q", "p <-> q"])?;
    let phi = parse(&sg, "p & q");
    let kernels = base_kernels(&b, &phi)?;
    s.eq(
        "kernels of p & q",
        family(&b, &kernels.members),
        strings(&[&["p", "p <-> q"], &["p | q", "p <-> q"]]),
    );
    let rem = base_remainders(&b, &phi)?;
    s.eq("remainders of p & q", family(&b, &rem.members), strings(&[&["p <-> q"], &["p", "p | q"]]));
    let cut = IncisionSpec::Explicit(vec![parse(&sg, "p | q"), parse(&sg, "p <-> q")]);
    let out = base_kernel_contraction(&b, &phi, &cut)?;
    s.eq("kernel contraction with the given incision", out.rendered(&out.all()), vec!["p".to_string()]);
    let outcomes = partial_meet_outcomes(&b, &rem)?;
    let kept = b.set_of(out.elements())?;
    s.eq(
        "partial meet outcomes",
        family(&b, &outcomes),
        strings(&[&[], &["p <-> q"], &["p", "p | q"]]),
    );
    s.check("{p} is not a partial meet outcome", !outcomes.contains(&kept), String::new);
    let subject = Subject::Base(b.clone());
    let outcome = Outcome::from(&out);
    let relevance = check_point(&subject, &phi, &outcome, Postulate::Relevance)?;
    s.check("the kernel outcome violates relevance", relevance.is_some(), String::new);
    let core = check_point(&subject, &phi, &outcome, Postulate::CoreRetainment)?;
    s.check("the kernel outcome satisfies core-retainment", core.is_none(), || format!("{core:?}"));
    Ok(())
}

fn chain_h() -> (Signature, HornBeliefSet) {
    let sg = sig(&["p", "q", "r"]);
    let h = HornBeliefSet::parse(&sg, &["p -> q", "q -> r"]).expect("fixed theory");
    (sg, h)
}

fn conjunction_h() -> (Signature, HornBeliefSet) {
    let sg = sig(&["p", "q", "r"]);
    let h = HornBeliefSet::parse(&sg, &["p & q"]).expect("fixed theory");
    (sg, h)
}

fn horn_chain(s: &mut Cases) -> Result<()> {
    let (sg, h) = chain_h();
    let phi = parse(&sg, "p -> r");
    let rem = e_remainders(&h, &phi)?;
    let mut outcomes: Vec<HornBeliefSet> = Vec::new();
    for pick in 1..(1usize << rem.len()) {
        let idx = (0..rem.len()).filter(|i| pick >> i & 1 == 1).collect();
        outcomes.push(e_contract(&h, &phi, &EMethod::PartialMeet(SelectionSpec::Indices(idx)))?);
    }
    s.eq(
        "partial meet e-contraction outcomes",
        generators(&outcomes),
        strings(&[&["p -> q"], &["q -> r", "p & r -> q"], &["p & r -> q"]]),
    );
    let full = e_contract(&h, &phi, &EMethod::FullMeet)?;
    s.eq("full meet e-contraction", full.rendered_generators(), vec!["p & r -> q".to_string()]);
    let family = infra_e_remainders(&h, &phi)?;
    let h_prime = HornBeliefSet::parse(&sg, &["p & q -> r", "p & r -> q"])?;
    s.check("H' is an infra e-remainder", family.contains(&h_prime), String::new);
    s.check("H' is not a partial meet outcome", !outcomes.contains(&h_prime), String::new);
    let qr = HornBeliefSet::parse(&sg, &["q -> r"])?;
    s.check("Cn_HL(q -> r) is not an infra e-remainder", !family.contains(&qr), String::new);
    Ok(())
}

fn horn_conjunction(s: &mut Cases) -> Result<()> {
    let (sg, h) = conjunction_h();
    let phi = parse(&sg, "p & q");
    let rem = e_remainders(&h, &phi)?;
    let mut expected = vec![
        HornBeliefSet::parse(&sg, &["p", "r -> q"])?,
        HornBeliefSet::parse(&sg, &["q", "r -> p"])?,
        HornBeliefSet::parse(&sg, &["p -> q", "q -> p", "r -> p", "r -> q"])?,
    ];
    let mut actual = rem.clone();
    let key = |x: &HornBeliefSet| x.rendered_generators();
    expected.sort_by_key(key);
    actual.sort_by_key(key);
    s.eq("the three e-remainders", generators(&actual), generators(&expected));
    let family = infra_e_remainders(&h, &phi)?;
    let members = family.enumerate(sg.limits().infra_family)?;
    let floor = [parse(&sg, "r -> p"), parse(&sg, "r -> q")];
    let mut missing = Vec::new();
    for m in &members {
        for f in &floor {
            if !m.contains(f)? {
                missing.push(format!("{m} lacks {f}"));
            }
        }
    }
    s.tally("every infra e-remainder contains r -> p and r -> q", members.len(), missing);
    let with_101 = h.models().union(&ModelSet::parse(3, ["101"])?);
    let closure = intersection_closure(&with_101);
    let models_p = models([&parse(&sg, "p")], &sg)?;
    s.eq("meet closure of [H] with 101", closure.to_strings(), models_p.to_strings());
    Ok(())
}

fn base_kernels_match_infra(s: &mut Cases) -> Result<()> {
    let sg = sig(&["p", "q", "r"]);
    let pool = ["p -> q", "q -> r", "p & q -> r", "p & r -> q", "p -> r"];
    let targets = ["p -> r", "q -> r", "p -> q"];
    let mut failures = Vec::new();
    let mut total = 0;
    for pick in 0..(1u32 << pool.len()) {
        let texts: Vec<&str> = (0..pool.len()).filter(|i| pick >> i & 1 == 1).map(|i| pool[i]).collect();
        let b = BeliefBase::parse(&sg, &texts)?;
        for t in targets {
            total += 1;
            let phi = parse(&sg, t);
            let kernels = base_kernels(&b, &phi)?;
            let mut kernel_outcomes: Vec<ElemSet> = valid_incisions(&kernels, &b)?
                .iter()
                .map(|cut| b.all().difference(cut))
                .collect();
            kernel_outcomes.sort_by(crate::base_change::family_order);
            kernel_outcomes.dedup();
            let infra = base_infra_remainders(&b, &phi)?.enumerate(sg.limits().infra_family)?;
            if kernel_outcomes != infra {
                failures.push(format!(
                    "{b} / {t}: kernel {:?} vs infra {:?}",
                    family(&b, &kernel_outcomes),
                    family(&b, &infra)
                ));
            }
        }
    }
    s.tally("kernel outcomes equal infra remainders", total, failures);
    Ok(())
}

/// Compares the infra family, the partial meet outcomes and the sandwich of
/// closed theories for one `(K, f)`.
fn belief_set_case(k: &PropBeliefSet, f: &Formula, theories: &[PropBeliefSet]) -> Result<Option<String>> {
    let sg = k.signature();
    let mut infra = bs_infra_remainders(k, f)?.enumerate(1 << 16)?;
    let counter = k.countermodels(f)?;
    let mut pm = Vec::new();
    if k.contains(f)? {
        let ws: Vec<_> = counter.iter().collect();
        for pick in 1..(1u64 << ws.len()) {
            let v = ModelSet::from_valuations(sg.len(), (0..ws.len()).filter(|i| pick >> i & 1 == 1).map(|i| ws[i]));
            pm.push(bs_contract(k, f, &BsMethod::PartialMeet(v))?);
        }
    } else {
        pm.push(k.clone());
    }
    let rem = bs_remainders(k, f)?;
    let meet = rem.iter().map(|r| r.models()).reduce(|a, m| a.union(&m));
    let mut sandwich: Vec<PropBeliefSet> = match meet {
        None => Vec::new(),
        Some(meet_models) => theories
            .iter()
            .filter(|x| x.models().is_subset(&meet_models) && rem.iter().any(|r| x.is_subset(r)))
            .cloned()
            .collect(),
    };
    let key = |x: &PropBeliefSet| x.models().mask();
    infra.sort_by_key(key);
    pm.sort_by_key(key);
    pm.dedup();
    sandwich.sort_by_key(key);
    if infra == pm && pm == sandwich {
        Ok(None)
    } else {
        Ok(Some(format!(
            "{k} / {}: infra {} vs partial meet {} vs sandwich {}",
            render(f),
            infra.len(),
            pm.len(),
            sandwich.len()
        )))
    }
}

fn contingent_formulas(sg: &Signature) -> Result<Vec<Formula>> {
    let n = sg.len();
    let full = ModelSet::all(n).mask();
    Ok((1..full)
        .map(|bits| synthesize(&ModelSet::from_mask(n, bits), sg))
        .collect())
}

fn belief_set_constructions_agree(s: &mut Cases) -> Result<()> {
    let two = sig(&["p", "q"]);
    let theories = all_belief_sets(&two)?;
    let mut failures = Vec::new();
    let mut total = 0;
    for k in &theories {
        for f in contingent_formulas(&two)? {
            total += 1;
            failures.extend(belief_set_case(k, &f, &theories)?);
        }
    }
    s.tally("exhaustive over two atoms", total, failures);

    let three = sig(&["p", "q", "r"]);
    let theories = all_belief_sets(&three)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for _ in 0..200 {
        let k = &theories[rng.gen_range(0..theories.len())];
        let f = synthesize(&ModelSet::from_mask(3, rng.gen_range(1..255)), &three);
        failures.extend(belief_set_case(k, &f, &theories)?);
    }
    s.tally("sampled over three atoms", 200, failures);
    Ok(())
}

/// Infra e-contraction outcomes: the family, or `H` itself when it is empty.
fn infra_outcomes(h: &HornBeliefSet, f: &Formula) -> Result<Vec<HornBeliefSet>> {
    let family = infra_e_remainders(h, f)?;
    if family.is_empty() {
        return Ok(vec![h.clone()]);
    }
    family.enumerate(h.signature().limits().infra_family)
}

fn horn_kernels_match_infra(s: &mut Cases) -> Result<()> {
    for (name, (_, h)) in [("chain", chain_h()), ("conjunction", conjunction_h())] {
        let mut failures = Vec::new();
        let clauses = h.formulas();
        for f in &clauses {
            let kernel = horn_kernel_outcomes(&h, f)?;
            let infra = infra_e_remainders(&h, f)?.enumerate(h.signature().limits().infra_family)?;
            if kernel != infra {
                failures.push(format!(
                    "{}: kernel {:?} vs infra {:?}",
                    render(f),
                    generators(&kernel),
                    generators(&infra)
                ));
            }
        }
        s.tally(&format!("{name}: kernel e-contraction outcomes equal infra e-remainders"), clauses.len(), failures);
    }
    Ok(())
}

const INFRA_POSTULATES: [Postulate; 4] = [
    Postulate::Closure,
    Postulate::Inclusion,
    Postulate::Success,
    Postulate::CoreRetainment,
];

fn passes_all(subject: &Subject, phi: &Formula, out: &Outcome, ps: &[Postulate]) -> Result<bool> {
    for p in ps {
        if check_point(subject, phi, out, *p)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn horn_infra_postulates(s: &mut Cases) -> Result<()> {
    for (name, (sg, h)) in [("chain", chain_h()), ("conjunction", conjunction_h())] {
        let subject = Subject::HornSet(h.clone());
        let grid = subject.default_grid()?;

        let mut failures = Vec::new();
        let mut total = 0;
        for f in h.formulas() {
            for x in infra_outcomes(&h, &f)? {
                total += 1;
                if !passes_all(&subject, &f, &Outcome::from(&x), &INFRA_POSTULATES)? {
                    failures.push(format!("{} -> {x}", render(&f)));
                }
            }
        }
        s.tally(&format!("{name}: infra outcomes satisfy the five postulates"), total, failures);

        let meet_table = ContractionTable::from_operator(subject.clone(), &grid, |f| {
            Ok(Outcome::from(&crate::horn_change::infra_e_contraction(
                &h,
                f,
                &crate::horn_change::HornInfraSpec::MeetOfAll,
            )?))
        })?;
        let ext = check(&meet_table, Postulate::Extensionality)?;
        s.check(format!("{name}: meet-of-all operator satisfies K-5"), ext.pass, || format!("{:?}", ext.counterexample));

        let theories = all_horn_belief_sets(&sg)?;
        let mut failures = Vec::new();
        let mut total = 0;
        let derived = [Postulate::Vacuity, Postulate::Failure];
        let tenth = [
            Postulate::Closure,
            Postulate::Inclusion,
            Postulate::Vacuity,
            Postulate::Success,
            Postulate::HornRelevance,
            Postulate::Failure,
        ];
        for f in &grid {
            let members = infra_outcomes(&h, f)?;
            for x in &theories {
                total += 1;
                let out = Outcome::from(x);
                let five = passes_all(&subject, f, &out, &INFRA_POSTULATES)?;
                let member = members.contains(x);
                if five != member {
                    failures.push(format!("{} -> {x}: postulates {five}, member {member}", render(f)));
                }
                if five && !passes_all(&subject, f, &out, &derived)? {
                    failures.push(format!("{} -> {x}: derived postulates fail", render(f)));
                }
                if five != passes_all(&subject, f, &out, &tenth)? {
                    failures.push(format!("{} -> {x}: the two characterizations disagree", render(f)));
                }
            }
        }
        s.tally(&format!("{name}: postulates characterize the infra family"), total, failures);
    }

    let (sg, h) = chain_h();
    let subject = Subject::HornSet(h.clone());
    let grid = subject.default_grid()?;
    let table = ContractionTable::from_operator(subject, &grid, |f| {
        Ok(Outcome::from(&e_contract(&h, f, &EMethod::FullMeet)?))
    })?;
    let recovery = check(&table, Postulate::Recovery)?;
    let cx = recovery.counterexample.as_ref().map(|c| (c.phi.clone(), c.psi.clone()));
    s.eq(
        "full meet on the chain fails recovery",
        cx,
        Some((render(&parse(&sg, "p -> r")), Some("q -> r".to_string()))),
    );
    Ok(())
}

fn random_formula(rng: &mut ChaCha8Rng, sg: &Signature, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::bottom(),
            _ => Formula::atom(sg.atom(rng.gen_range(0..sg.len())).clone()),
        };
    }
    let a = random_formula(rng, sg, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(a),
        1 => Formula::and(a, random_formula(rng, sg, depth - 1)),
        2 => Formula::or(a, random_formula(rng, sg, depth - 1)),
        3 => Formula::implies(a, random_formula(rng, sg, depth - 1)),
        _ => Formula::iff(a, random_formula(rng, sg, depth - 1)),
    }
}

fn duality(s: &mut Cases) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sigs = [sig(&["p"]), sig(&["p", "q"]), sig(&["p", "q", "r"])];
    let (mut meet_fail, mut incision_fail, mut maxi_fail, mut engine_fail) = (vec![], vec![], vec![], vec![]);
    let cases = 500;
    for _ in 0..cases {
        let sg = &sigs[rng.gen_range(0..sigs.len())];
        let size = rng.gen_range(0..=8);
        let b = BeliefBase::new(sg, (0..size).map(|_| random_formula(&mut rng, sg, 3)))?;
        let phi = random_formula(&mut rng, sg, 3);
        let label = || format!("{b} / {}", render(&phi));
        let (kernels, rem) = base_families(&b, &phi, Engine::Exhaustive)?;
        if base_families(&b, &phi, Engine::Duality)? != (kernels.clone(), rem.clone()) {
            engine_fail.push(label());
        }
        let max = base_kernel_contraction(&b, &phi, &IncisionSpec::Maximum)?;
        let full = base_partial_meet(&b, &phi, &SelectionSpec::All)?;
        let set_identity = rem.meet().is_none_or(|m| b.all().difference(&kernels.union()) == m);
        if max.elements() != full.elements() || !set_identity {
            meet_fail.push(label());
        }
        if crate::semantics::is_tautology(&phi, sg)? {
            continue;
        }
        let incisions = minimal_incisions(&kernels);
        let mut complements: Vec<ElemSet> = incisions.iter().map(|h| b.all().difference(h)).collect();
        complements.sort_by(crate::base_change::family_order);
        if complements != rem.members {
            incision_fail.push(label());
        }
        for h in &incisions {
            let out = base_kernel_contraction(&b, &phi, &IncisionSpec::Explicit(b.formulas(h)))?;
            let kept = b.set_of(out.elements())?;
            if !rem.members.contains(&kept) {
                maxi_fail.push(label());
            }
        }
    }
    s.tally("full meet equals maximum incision and B minus kernel union equals the meet", cases, meet_fail);
    s.tally("complements of minimal incisions are the remainders", cases, incision_fail);
    s.tally("minimal incisions give maxichoice outcomes", cases, maxi_fail);
    s.tally("duality engine agrees with exhaustive scan", cases, engine_fail);
    Ok(())
}

fn horn_oracle_pair(premises: &[HornClause], c: &HornClause, sg: &Signature) -> Result<bool> {
    let fs: Vec<Formula> = premises.iter().map(|x| x.to_formula(sg)).collect();
    Ok(horn_entails(premises, c) == entails(&fs, &c.to_formula(sg), sg)?)
}

fn horn_oracle(s: &mut Cases) -> Result<()> {
    let two = sig(&["p", "q"]);
    let clauses = enumerate_clauses(&two)?;
    let mut failures = Vec::new();
    let mut total = 0;
    for pick in 0..(1u32 << clauses.len()) {
        let premises: Vec<HornClause> = (0..clauses.len()).filter(|i| pick >> i & 1 == 1).map(|i| clauses[i]).collect();
        for c in &clauses {
            total += 1;
            if !horn_oracle_pair(&premises, c, &two)? {
                failures.push(format!("{pick:#x} / {}", c.render(&two)));
            }
        }
    }
    s.tally("exhaustive over two atoms", total, failures);

    let four = sig(&["p", "q", "r", "s"]);
    let clauses = enumerate_clauses(&four)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let density = rng.gen_range(0.02..0.25);
        let premises: Vec<HornClause> = clauses.iter().copied().filter(|_| rng.gen_bool(density)).collect();
        let c = clauses[rng.gen_range(0..clauses.len())];
        if !horn_oracle_pair(&premises, &c, &four)? {
            failures.push(c.render(&four));
        }
    }
    s.tally("sampled over four atoms", 1000, failures);
    Ok(())
}

fn non_decomposability(s: &mut Cases) -> Result<()> {
    let sg = sig(&["p", "q"]);
    let w = decomposability_witness(&[parse(&sg, "q")], &[parse(&sg, "p -> q")], &sg)?;
    let shown = w.map(|cs| cs.iter().map(|c| c.render(&sg)).collect::<Vec<_>>());
    s.eq("no complement of p -> q regenerates q", shown, None);
    let w = decomposability_witness(&[parse(&sg, "p & q")], &[parse(&sg, "p")], &sg)?;
    let u = ClauseUniverse::of(&sg)?;
    let valid = match &w {
        Some(cs) => {
            let x = u.close(&u.set_of(&[HornClause::from_formula(&parse(&sg, "p"), &sg)?, HornClause::from_formula(&parse(&sg, "q"), &sg)?]));
            let extra = u.set_of(cs);
            u.close(&extra) != x && u.close(&extra.with(u.index_of(&HornClause::from_formula(&parse(&sg, "p"), &sg)?).expect("clause"))) == x
        }
        None => false,
    };
    s.check("p is complemented within p & q", valid, || format!("{w:?}"));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(run("nope"), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn worked_examples_pass() {
        for name in ["example1", "example2", "example3", "example4", "example5", "non-decomposability"] {
            let r = run_one(name).unwrap();
            assert!(r.pass(), "{r}");
        }
    }
}
