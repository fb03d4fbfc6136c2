//! Acceptance criteria: each named verification suite plus spot checks
//! through the public API, run against a wall-clock budget.

use std::time::{Duration, Instant};

use belief_change::base_change::base_kernels;
use belief_change::base_change::BeliefBase;
use belief_change::beliefset_change::{bs_kernels, Presentation, PropBeliefSet};
use belief_change::horn_change::{decomposability_witness, e_contract, infra_e_remainders, EMethod, HornBeliefSet};
use belief_change::verify::run_one;
use belief_change::{Result, Signature};

struct Criterion {
    number: usize,
    suite: &'static str,
    budget: Duration,
    extra: fn() -> Result<Vec<String>>,
}

fn sig3() -> Signature {
    Signature::new(["p", "q", "r"]).unwrap()
}

fn sorted(mut v: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for x in v.iter_mut() {
        x.sort();
    }
    v.sort();
    v
}

fn expect(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn horn_fragment_kernels() -> Result<Vec<String>> {
    let sig = sig3();
    let k = PropBeliefSet::cn(&sig, &[sig.parse("p -> q")?, sig.parse("q -> r")?])?;
    let (base, fam) = bs_kernels(&k, &sig.parse("p -> r")?, Presentation::HornFragment)?;
    let want = sorted(vec![
        vec!["p -> r".into()],
        vec!["p -> q".into(), "q -> r".into()],
        vec!["p -> q".into(), "p & q -> r".into()],
    ]);
    let mut f = Vec::new();
    expect(&mut f, sorted(fam.rendered(&base)) == want, "Horn-fragment kernels of p -> r");
    Ok(f)
}

fn nothing() -> Result<Vec<String>> {
    Ok(Vec::new())
}

fn base_kernels_of_conjunction() -> Result<Vec<String>> {
    let sig = Signature::new(["p", "q"]).unwrap();
    let b = BeliefBase::parse(&sig, &["p", "p | q", "p <-> q"])?;
    let fam = base_kernels(&b, &sig.parse("p & q")?)?;
    let shown = sorted(fam.rendered(&b));
    let mut f = Vec::new();
    expect(&mut f, shown.len() == 2, "two kernels of p & q");
    expect(
        &mut f,
        shown.contains(&vec!["p".to_string(), "p <-> q".to_string()])
            && shown.contains(&vec!["p <-> q".to_string(), "p | q".to_string()]),
        "kernels {p, p <-> q} and {p | q, p <-> q}",
    );
    Ok(f)
}

fn chain_full_meet() -> Result<Vec<String>> {
    let sig = sig3();
    let h = HornBeliefSet::parse(&sig, &["p -> q", "q -> r"])?;
    let phi = sig.parse("p -> r")?;
    let fm = e_contract(&h, &phi, &EMethod::FullMeet)?;
    let infra = infra_e_remainders(&h, &phi)?;
    let h_prime = HornBeliefSet::parse(&sig, &["p & q -> r", "p & r -> q"])?;
    let qr = HornBeliefSet::parse(&sig, &["q -> r"])?;
    let mut f = Vec::new();
    expect(&mut f, fm.rendered_generators() == ["p & r -> q"], "full meet keeps only p & r -> q");
    expect(&mut f, infra.contains(&h_prime), "{p & q -> r, p & r -> q} is an infra remainder");
    expect(&mut f, !infra.contains(&qr), "Cn(q -> r) is not an infra remainder");
    Ok(f)
}

fn conjunction_infra() -> Result<Vec<String>> {
    let sig = sig3();
    let h = HornBeliefSet::parse(&sig, &["p & q"])?;
    let fam = infra_e_remainders(&h, &sig.parse("p & q")?)?;
    let rp = sig.parse("r -> p")?;
    let rq = sig.parse("r -> q")?;
    let members = fam.enumerate(4096)?;
    let mut f = Vec::new();
    expect(&mut f, !members.is_empty(), "non-empty infra family");
    for m in &members {
        if !(m.contains(&rp)? && m.contains(&rq)?) {
            f.push(format!("member {m} lacks r -> p or r -> q"));
        }
    }
    Ok(f)
}

fn no_decomposition() -> Result<Vec<String>> {
    let sig = Signature::new(["p", "q"]).unwrap();
    let w = decomposability_witness(&[sig.parse("q")?], &[sig.parse("p -> q")?], &sig)?;
    let mut f = Vec::new();
    expect(&mut f, w.is_none(), "no complement regenerates Cn(q) from Cn(p -> q)");
    Ok(f)
}

const CRITERIA: [Criterion; 12] = [
    Criterion { number: 1, suite: "example1", budget: Duration::from_secs(1), extra: horn_fragment_kernels },
    Criterion { number: 2, suite: "example2", budget: Duration::from_secs(1), extra: nothing },
    Criterion { number: 3, suite: "example3", budget: Duration::from_secs(1), extra: base_kernels_of_conjunction },
    Criterion { number: 4, suite: "example4", budget: Duration::from_secs(5), extra: chain_full_meet },
    Criterion { number: 5, suite: "example5", budget: Duration::from_secs(30), extra: conjunction_infra },
    Criterion { number: 6, suite: "thm7", budget: Duration::from_secs(60), extra: nothing },
    Criterion { number: 7, suite: "thm3", budget: Duration::from_secs(60), extra: nothing },
    Criterion { number: 8, suite: "thm8", budget: Duration::from_secs(120), extra: nothing },
    Criterion { number: 9, suite: "thm9", budget: Duration::from_secs(120), extra: nothing },
    Criterion { number: 10, suite: "lemmaA3-duality", budget: Duration::from_secs(60), extra: nothing },
    Criterion { number: 11, suite: "horn-entailment-oracle", budget: Duration::from_secs(30), extra: nothing },
    Criterion { number: 12, suite: "non-decomposability", budget: Duration::from_secs(5), extra: no_decomposition },
];

fn evaluate(c: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let mut problems = Vec::new();
    match run_one(c.suite) {
        Ok(report) => {
            for case in report.cases.iter().filter(|x| !x.pass) {
                problems.push(case.name.clone());
            }
        }
        Err(e) => problems.push(format!("suite error: {e}")),
    }
    match (c.extra)() {
        Ok(mut v) => problems.append(&mut v),
        Err(e) => problems.push(format!("spot check error: {e}")),
    }
    let took = start.elapsed();
    if took > c.budget {
        problems.push(format!("took {:.2?}, budget {:?}", took, c.budget));
    }
    let line = format!(
        "{} criterion {:>2} {:<24} {:>9.3?}{}",
        if problems.is_empty() { "PASS" } else { "FAIL" },
        c.number,
        c.suite,
        took,
        if problems.is_empty() { String::new() } else { format!("  [{}]", problems.join("; ")) }
    );
    (problems.is_empty(), line)
}

fn main() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let (ok, line) = evaluate(c);
        println!("{line}");
        if !ok {
            failed.push(c.number);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria pass", CRITERIA.len(), CRITERIA.len());
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
