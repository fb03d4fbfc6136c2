use std::cmp::Ordering;

use super::{text_order, Formula, Signature};
use crate::error::{Error, Result};

/// Head of a Horn clause: an atom (by signature index) or `⊥`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Head {
    Atom(u8),
    Bottom,
}

/// A Horn clause `p1 ∧ … ∧ pk → q` with the body stored as a bitmask over
/// signature indices (bit `i` is atom `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HornClause {
    body: u8,
    head: Head,
}

impl HornClause {
    /// Builds a clause without rejecting tautologies such as `p -> p`.
    pub fn raw(body: u8, head: Head) -> HornClause {
        HornClause { body, head }
    }

    /// Builds a clause for canonical storage; `None` for a tautology.
    pub fn canonical(body: u8, head: Head) -> Option<HornClause> {
        let clause = HornClause { body, head };
        (!clause.is_tautology()).then_some(clause)
    }

    /// The single clause expressed by `f`.
    pub fn from_formula(f: &Formula, sig: &Signature) -> Result<HornClause> {
        match as_horn_clauses(f, sig)? {
            HornVerdict::Horn(clauses) if clauses.len() == 1 => Ok(clauses[0]),
            HornVerdict::Horn(_) => Err(Error::InvalidParameter(format!(
                "`{f}` is not a single non-tautological Horn clause"
            ))),
            HornVerdict::NotHorn(sub) => Err(Error::NotHorn(sub)),
        }
    }

    pub fn body(&self) -> u8 {
        self.body
    }

    pub fn head(&self) -> Head {
        self.head
    }

    pub fn body_atoms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..8).filter(move |i| self.body & (1 << i) != 0)
    }

    pub fn is_tautology(&self) -> bool {
        match self.head {
            Head::Atom(a) => self.body & (1 << a) != 0,
            Head::Bottom => false,
        }
    }

    pub fn to_formula(&self, sig: &Signature) -> Formula {
        let head = match self.head {
            Head::Atom(a) => Formula::Atom(sig.atom(a as usize).clone()),
            Head::Bottom => Formula::bottom(),
        };
        if self.body == 0 {
            return head;
        }
        let body = self
            .body_atoms()
            .map(|i| Formula::Atom(sig.atom(i).clone()));
        Formula::implies(Formula::conjunction(body), head)
    }

    pub fn render(&self, sig: &Signature) -> String {
        super::render(&self.to_formula(sig))
    }
}

/// Orders clauses by the global order of their renderings.
pub(crate) fn clause_order(sig: &Signature) -> impl Fn(&HornClause, &HornClause) -> Ordering + '_ {
    move |a, b| text_order(&a.render(sig), &b.render(sig))
}

/// Outcome of Horn-form recognition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HornVerdict {
    /// Canonical clauses, sorted by the global order; empty for a tautology.
    Horn(Vec<HornClause>),
    /// The first conjunct that is not a Horn clause.
    NotHorn(Formula),
}

fn strip_double_negation(mut f: &Formula) -> &Formula {
    while let Formula::Not(inner) = f {
        match inner.as_ref() {
            Formula::Not(g) => f = g,
            _ => break,
        }
    }
    f
}

fn conjuncts<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match strip_double_negation(f) {
        Formula::And(a, b) => {
            conjuncts(a, out);
            conjuncts(b, out);
        }
        other => out.push(other),
    }
}

enum Clause {
    Clause(HornClause),
    Tautology,
    NotHorn,
}

fn atom_index(f: &Formula, sig: &Signature) -> Result<u8> {
    match f {
        Formula::Atom(a) => sig
            .index_of(a.name())
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownAtom {
                name: a.name().to_string(),
                column: None,
            }),
        _ => unreachable!("atom_index on a non-atom"),
    }
}

/// Classifies one conjunct. A negated conjunction `¬(l1 ∧ … ∧ lk)` is a clause
/// when at most one `li` is a negated atom (the head) and the rest are atoms.
fn classify(f: &Formula, sig: &Signature) -> Result<Clause> {
    match f {
        Formula::Atom(_) => Ok(Clause::Clause(HornClause::raw(0, Head::Atom(atom_index(f, sig)?)))),
        Formula::Top => Ok(Clause::Tautology),
        Formula::And(..) => unreachable!("conjunctions are flattened first"),
        Formula::Not(inner) => {
            let mut leaves = Vec::new();
            conjuncts(inner, &mut leaves);
            let mut body = 0u8;
            let mut heads = Vec::new();
            let mut tautology = false;
            for leaf in leaves {
                match leaf {
                    Formula::Atom(_) => body |= 1 << atom_index(leaf, sig)?,
                    Formula::Top => {}
                    Formula::Not(g) => match g.as_ref() {
                        Formula::Top => tautology = true,
                        Formula::Atom(_) => heads.push(atom_index(g, sig)?),
                        _ => return Ok(Clause::NotHorn),
                    },
                    Formula::And(..) => unreachable!("flattened"),
                }
            }
            if tautology || heads.iter().any(|h| body & (1 << h) != 0) {
                return Ok(Clause::Tautology);
            }
            match heads.as_slice() {
                [] => Ok(Clause::Clause(HornClause::raw(body, Head::Bottom))),
                [h] => Ok(Clause::Clause(HornClause::raw(body, Head::Atom(*h)))),
                _ => Ok(Clause::NotHorn),
            }
        }
    }
}

/// Decomposes `f` into canonical Horn clauses, dropping tautological conjuncts.
pub fn as_horn_clauses(f: &Formula, sig: &Signature) -> Result<HornVerdict> {
    let mut parts = Vec::new();
    conjuncts(f, &mut parts);
    let mut clauses = Vec::new();
    for part in parts {
        match classify(part, sig)? {
            Clause::Clause(c) => clauses.push(c),
            Clause::Tautology => {}
            Clause::NotHorn => return Ok(HornVerdict::NotHorn(part.clone())),
        }
    }
    clauses.sort_by(clause_order(sig));
    clauses.dedup();
    Ok(HornVerdict::Horn(clauses))
}

/// Every canonical non-tautological clause over `sig`, in the global order.
pub fn enumerate_clauses(sig: &Signature) -> Result<Vec<HornClause>> {
    let n = sig.len();
    let limit = sig.limits().clause_atoms;
    if n > limit {
        return Err(Error::limit("clause-universe signature size", limit, n));
    }
    let mut clauses = Vec::new();
    for body in 0..(1u16 << n) {
        let body = body as u8;
        clauses.push(HornClause::raw(body, Head::Bottom));
        for a in 0..n as u8 {
            if body & (1 << a) == 0 {
                clauses.push(HornClause::raw(body, Head::Atom(a)));
            }
        }
    }
    clauses.sort_by(clause_order(sig));
    Ok(clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(names: &[&str]) -> Signature {
        Signature::new(names).unwrap()
    }

    fn rendered(verdict: HornVerdict, s: &Signature) -> Vec<String> {
        match verdict {
            HornVerdict::Horn(cs) => cs.iter().map(|c| c.render(s)).collect(),
            HornVerdict::NotHorn(f) => panic!("unexpected not-Horn verdict on `{f}`"),
        }
    }

    #[test]
    fn rule_with_two_body_atoms() {
        let s = sig(&["p", "q", "r"]);
        let f = s.parse("p & q -> r").unwrap();
        let v = as_horn_clauses(&f, &s).unwrap();
        assert_eq!(v, HornVerdict::Horn(vec![HornClause::raw(0b011, Head::Atom(2))]));
    }

    #[test]
    fn biimplication_splits() {
        let s = sig(&["p", "q"]);
        let f = s.parse("p <-> q").unwrap();
        assert_eq!(rendered(as_horn_clauses(&f, &s).unwrap(), &s), ["p -> q", "q -> p"]);
    }

    #[test]
    fn positive_disjunction_is_not_horn() {
        let s = sig(&["p", "q"]);
        let f = s.parse("p | q").unwrap();
        assert!(matches!(as_horn_clauses(&f, &s).unwrap(), HornVerdict::NotHorn(_)));
        let g = s.parse("p & (p | q)").unwrap();
        match as_horn_clauses(&g, &s).unwrap() {
            HornVerdict::NotHorn(sub) => assert_eq!(sub.to_string(), "p | q"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tautologies_vanish() {
        let s = sig(&["p", "q"]);
        for text in ["T", "p -> p", "p & q -> q", "F -> p", "p -> T", "~F"] {
            let f = s.parse(text).unwrap();
            assert_eq!(as_horn_clauses(&f, &s).unwrap(), HornVerdict::Horn(vec![]), "{text}");
        }
    }

    #[test]
    fn negative_literals_and_constants() {
        let s = sig(&["p", "q"]);
        let cases = [
            ("~p", vec!["p -> F"]),
            ("F", vec!["F"]),
            ("T & q -> p", vec!["q -> p"]),
            ("~(p & q)", vec!["p & q -> F"]),
            ("~~p & q", vec!["p", "q"]),
            ("~p | q", vec!["p -> q"]),
        ];
        for (text, expected) in cases {
            let f = s.parse(text).unwrap();
            assert_eq!(rendered(as_horn_clauses(&f, &s).unwrap(), &s), expected, "{text}");
        }
    }

    #[test]
    fn single_atom_universe() {
        let s = sig(&["p"]);
        let rendered: Vec<String> = enumerate_clauses(&s).unwrap().iter().map(|c| c.render(&s)).collect();
        assert_eq!(rendered, ["F", "p", "p -> F"]);
    }

    #[test]
    fn universe_sizes_follow_closed_form() {
        let names = ["a", "b", "c", "d"];
        for n in 1..=4 {
            let s = sig(&names[..n]);
            let clauses = enumerate_clauses(&s).unwrap();
            // Each body of size k pairs with ⊥ or any of the n - k atoms outside it.
            let closed: usize = (0..=n).map(|k| binomial(n, k) * (n - k + 1)).sum();
            assert_eq!(clauses.len(), closed);
            assert!(clauses.iter().all(|c| !c.is_tautology()));
            let mut dedup = clauses.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), clauses.len());
        }
        assert_eq!(enumerate_clauses(&sig(&["p", "q"])).unwrap().len(), 8);
        assert_eq!(enumerate_clauses(&sig(&["p", "q", "r"])).unwrap().len(), 20);
    }

    #[test]
    fn universe_respects_limit() {
        let s = sig(&["a", "b", "c", "d", "e"]);
        assert!(matches!(enumerate_clauses(&s), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn clause_round_trips_through_formula() {
        let s = sig(&["p", "q", "r"]);
        for c in enumerate_clauses(&s).unwrap() {
            assert_eq!(HornClause::from_formula(&c.to_formula(&s), &s).unwrap(), c);
        }
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
