//! Truth-table semantics over small signatures.
//!
//! A valuation over `n` atoms is an `n`-bit pattern where atom `i` sits at bit
//! `n - 1 - i`, so the pattern read as a binary numeral matches its string
//! form (`"101"` makes `p` and `r` true over `p, q, r`). A model set is a
//! 64-bit mask indexed by valuation, which caps signatures at six atoms.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::beliefset_change::PropBeliefSet;
use crate::error::{Error, Result};
use crate::formula::{enumerate_clauses, render, text_order, Formula, Head, HornClause, Signature};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    n: u8,
    bits: u8,
}

impl Valuation {
    pub fn new(n: usize, bits: u8) -> Valuation {
        debug_assert!(n <= Signature::MAX_ATOMS && (bits as usize) < (1 << n));
        Valuation { n: n as u8, bits }
    }

    /// Parses a bit string such as `"101"`.
    pub fn parse(text: &str) -> Result<Valuation> {
        let n = text.len();
        if n == 0 || n > Signature::MAX_ATOMS || !text.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidParameter(format!("`{text}` is not a valuation bit string")));
        }
        Ok(Valuation::new(n, u8::from_str_radix(text, 2).expect("validated")))
    }

    pub fn width(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn get(&self, atom: usize) -> bool {
        self.bits & (1 << (self.n as usize - 1 - atom)) != 0
    }

    pub fn satisfies(&self, f: &Formula, sig: &Signature) -> Result<bool> {
        Ok(formula_mask(f, sig)? & (1u64 << self.bits) != 0)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n as usize)
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `v1 ⊓ v2`: an atom is true iff it is true in both.
pub fn valuation_meet(v1: Valuation, v2: Valuation) -> Valuation {
    assert_eq!(v1.n, v2.n, "valuations over different signatures");
    Valuation::new(v1.width(), v1.bits & v2.bits)
}

/// A set of valuations over one signature.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelSet {
    n: u8,
    bits: u64,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << n)) - 1
    }
}

impl ModelSet {
    pub fn empty(n: usize) -> ModelSet {
        ModelSet { n: n as u8, bits: 0 }
    }

    pub fn all(n: usize) -> ModelSet {
        ModelSet {
            n: n as u8,
            bits: full_mask(n),
        }
    }

    pub fn from_mask(n: usize, bits: u64) -> ModelSet {
        debug_assert_eq!(bits & !full_mask(n), 0);
        ModelSet { n: n as u8, bits }
    }

    pub fn from_valuations<I: IntoIterator<Item = Valuation>>(n: usize, vs: I) -> ModelSet {
        let mut set = ModelSet::empty(n);
        for v in vs {
            set.insert(v);
        }
        set
    }

    /// Parses bit strings, e.g. `["11", "01"]`.
    pub fn parse<I, S>(n: usize, items: I) -> Result<ModelSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = ModelSet::empty(n);
        for item in items {
            let v = Valuation::parse(item.as_ref().trim())?;
            if v.width() != n {
                return Err(Error::InvalidParameter(format!(
                    "valuation `{v}` does not have {n} bits"
                )));
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn width(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_all(&self) -> bool {
        self.bits == full_mask(self.width())
    }

    pub fn contains(&self, v: Valuation) -> bool {
        self.bits & (1u64 << v.bits) != 0
    }

    pub fn insert(&mut self, v: Valuation) {
        assert_eq!(v.n, self.n, "valuation width differs from model set");
        self.bits |= 1u64 << v.bits;
    }

    pub fn union(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_mask(self.width(), self.bits | other.bits)
    }

    pub fn intersection(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_mask(self.width(), self.bits & other.bits)
    }

    pub fn difference(&self, other: &ModelSet) -> ModelSet {
        ModelSet::from_mask(self.width(), self.bits & !other.bits)
    }

    pub fn complement(&self) -> ModelSet {
        ModelSet::from_mask(self.width(), !self.bits & full_mask(self.width()))
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Valuations in ascending bit-pattern order.
    pub fn iter(&self) -> impl Iterator<Item = Valuation> + '_ {
        let n = self.width();
        (0..(1u16 << n))
            .filter(move |v| self.bits & (1u64 << v) != 0)
            .map(move |v| Valuation::new(n, v as u8))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Model mask of atom `i` over `n` atoms.
pub(crate) fn atom_mask(n: usize, i: usize) -> u64 {
    let shift = n - 1 - i;
    (0..(1u64 << n))
        .filter(|v| v >> shift & 1 == 1)
        .fold(0, |m, v| m | 1 << v)
}

fn mask_of(f: &Formula, sig: &Signature, atoms: &[u64], full: u64) -> Result<u64> {
    Ok(match f {
        Formula::Atom(a) => match sig.index_of(a.name()) {
            Some(i) => atoms[i],
            None => {
                return Err(Error::UnknownAtom {
                    name: a.name().to_string(),
                    column: None,
                })
            }
        },
        Formula::Top => full,
        Formula::Not(g) => !mask_of(g, sig, atoms, full)? & full,
        Formula::And(a, b) => mask_of(a, sig, atoms, full)? & mask_of(b, sig, atoms, full)?,
    })
}

/// Model mask of one formula, without the propositional size limit.
pub(crate) fn formula_mask(f: &Formula, sig: &Signature) -> Result<u64> {
    let n = sig.len();
    let atoms: Vec<u64> = (0..n).map(|i| atom_mask(n, i)).collect();
    mask_of(f, sig, &atoms, full_mask(n))
}

/// Model mask of a Horn clause over `n` atoms.
pub(crate) fn clause_mask(c: &HornClause, n: usize) -> u64 {
    let mut body = full_mask(n);
    for i in c.body_atoms() {
        body &= atom_mask(n, i);
    }
    let head = match c.head() {
        Head::Atom(a) => atom_mask(n, a as usize),
        Head::Bottom => 0,
    };
    (!body | head) & full_mask(n)
}

fn check_prop_limit(sig: &Signature) -> Result<()> {
    let limit = sig.limits().prop_atoms;
    if sig.len() > limit {
        return Err(Error::limit("propositional signature size", limit, sig.len()));
    }
    Ok(())
}

/// The valuations satisfying every member of `xs`.
pub fn models<'a, I>(xs: I, sig: &Signature) -> Result<ModelSet>
where
    I: IntoIterator<Item = &'a Formula>,
{
    check_prop_limit(sig)?;
    let mut bits = full_mask(sig.len());
    for f in xs {
        bits &= formula_mask(f, sig)?;
    }
    Ok(ModelSet::from_mask(sig.len(), bits))
}

pub fn entails<'a, I>(xs: I, f: &Formula, sig: &Signature) -> Result<bool>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let m = models(xs, sig)?;
    Ok(m.bits & !formula_mask(f, sig)? == 0)
}

pub fn is_tautology(f: &Formula, sig: &Signature) -> Result<bool> {
    entails([], f, sig)
}

/// Forward-chaining entailment between Horn clauses.
///
/// Asserts the body of `c`, fires every rule whose body is derived, and
/// succeeds once the head of `c` is derived or `⊥` is.
pub fn horn_entails(xs: &[HornClause], c: &HornClause) -> bool {
    let mut facts = c.body();
    if let Head::Atom(a) = c.head() {
        if facts & (1 << a) != 0 {
            return true;
        }
    }
    let mut fired = vec![false; xs.len()];
    loop {
        let mut changed = false;
        for (i, rule) in xs.iter().enumerate() {
            if fired[i] || rule.body() & !facts != 0 {
                continue;
            }
            fired[i] = true;
            changed = true;
            match rule.head() {
                Head::Bottom => return true,
                Head::Atom(a) => facts |= 1 << a,
            }
        }
        if let Head::Atom(a) = c.head() {
            if facts & (1 << a) != 0 {
                return true;
            }
        }
        if !changed {
            return false;
        }
    }
}

/// All canonical clauses over `sig` entailed by `xs`, in the global order.
pub fn horn_closure(xs: &[HornClause], sig: &Signature) -> Result<Vec<HornClause>> {
    Ok(enumerate_clauses(sig)?
        .into_iter()
        .filter(|c| horn_entails(xs, c))
        .collect())
}

/// Least superset of `v` closed under pairwise valuation meets.
pub fn intersection_closure(v: &ModelSet) -> ModelSet {
    let n = v.width();
    let mut bits = v.bits;
    loop {
        let members: Vec<u8> = ModelSet::from_mask(n, bits).iter().map(|m| m.bits).collect();
        let mut next = bits;
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                next |= 1u64 << (a & b);
            }
        }
        if next == bits {
            return ModelSet::from_mask(n, bits);
        }
        bits = next;
    }
}

pub fn is_meet_closed(v: &ModelSet) -> bool {
    intersection_closure(v) == *v
}

/// The closed theory whose models are exactly `v`.
pub fn theory_of(v: &ModelSet, sig: &Signature) -> Result<PropBeliefSet> {
    PropBeliefSet::from_models(sig, *v)
}

/// One formula per equivalence class of the theory with models `v`, i.e. per
/// model set `W ⊇ v`, sorted by the global order.
pub fn representatives(v: &ModelSet, sig: &Signature) -> Result<Vec<Formula>> {
    check_prop_limit(sig)?;
    let n = sig.len();
    let free = (1usize << n) - v.len();
    let limit = sig.limits().representatives;
    if free >= usize::BITS as usize || (1usize << free) > limit {
        let actual = if free >= usize::BITS as usize { usize::MAX } else { 1 << free };
        return Err(Error::limit("representative set", limit, actual));
    }
    let outside: Vec<u32> = v.complement().iter().map(|w| w.bits as u32).collect();
    let mut out: Vec<(String, Formula)> = (0..(1u64 << free))
        .map(|pick| {
            let mut bits = v.bits;
            for (k, w) in outside.iter().enumerate() {
                if pick >> k & 1 == 1 {
                    bits |= 1u64 << w;
                }
            }
            let f = synthesize(&ModelSet::from_mask(n, bits), sig);
            (render(&f), f)
        })
        .collect();
    out.sort_by(|a, b| text_order(&a.0, &b.0));
    Ok(out.into_iter().map(|(_, f)| f).collect())
}

/// A short formula whose models are exactly `w`.
///
/// Up to three atoms the result is the shortest rendering found by a
/// uniform-cost search over the connectives; beyond that it is the shorter of
/// an irredundant prime-implicant DNF and the dual CNF.
pub fn synthesize(w: &ModelSet, sig: &Signature) -> Formula {
    if sig.len() <= 3 {
        let table = shortest_table(sig);
        return table[w.bits as usize].clone();
    }
    let dnf = cover_formula(w.bits, sig, false);
    let cnf = cover_formula(!w.bits & full_mask(sig.len()), sig, true);
    if text_order(&render(&dnf), &render(&cnf)).is_le() {
        dnf
    } else {
        cnf
    }
}

type ShortestTables = Mutex<HashMap<Signature, Arc<Vec<Formula>>>>;

fn shortest_table(sig: &Signature) -> Arc<Vec<Formula>> {
    static CACHE: OnceLock<ShortestTables> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache poisoned").get(sig) {
        return t.clone();
    }
    let table = Arc::new(search_shortest(sig));
    cache
        .lock()
        .expect("cache poisoned")
        .entry(sig.clone())
        .or_insert(table)
        .clone()
}

const LEVEL_IFF: usize = 1;
const LEVEL_IMP: usize = 2;
const LEVEL_OR: usize = 3;
const LEVEL_AND: usize = 4;
const LEVEL_UNARY: usize = 5;

struct Entry {
    len: usize,
    text: String,
    formula: Formula,
}

const MAX_SEARCH_LEN: usize = 48;

struct Frontier {
    best: Vec<Option<Entry>>,
    done: Vec<bool>,
    heap: BinaryHeap<Reverse<(usize, String, usize)>>,
}

impl Frontier {
    /// Records a candidate for `key` if it can beat the current best; the
    /// formula is only built once the length estimate leaves a chance.
    fn offer(&mut self, key: usize, estimate: usize, build: impl FnOnce() -> Formula) {
        if estimate > MAX_SEARCH_LEN || self.done[key] {
            return;
        }
        if self.best[key].as_ref().is_some_and(|e| e.len < estimate) {
            return;
        }
        let formula = build();
        let text = render(&formula);
        if text.len() > MAX_SEARCH_LEN {
            return;
        }
        if self.best[key].as_ref().is_some_and(|e| !text_order(&text, &e.text).is_lt()) {
            return;
        }
        self.heap.push(Reverse((text.len(), text.clone(), key)));
        self.best[key] = Some(Entry {
            len: text.len(),
            text,
            formula,
        });
    }
}

/// Uniform-cost search over truth tables, keyed by (table, binding level) so
/// that tight-binding forms are kept when a loose one is shorter overall.
fn search_shortest(sig: &Signature) -> Vec<Formula> {
    let n = sig.len();
    let full = full_mask(n);
    let tables = 1usize << (1 << n);
    let key = |tt: u64, level: usize| tt as usize * 6 + level;
    let mut frontier = Frontier {
        best: (0..tables * 6).map(|_| None).collect(),
        done: vec![false; tables * 6],
        heap: BinaryHeap::new(),
    };
    // Finalized entries: (table, level, length) alongside their formulas.
    let mut fin: Vec<(u64, usize, usize)> = Vec::new();
    let mut fin_formulas: Vec<Formula> = Vec::new();

    for (i, atom) in sig.atoms().iter().enumerate() {
        frontier.offer(key(atom_mask(n, i), LEVEL_UNARY), 0, || Formula::Atom(atom.clone()));
    }
    frontier.offer(key(full, LEVEL_UNARY), 0, || Formula::Top);
    frontier.offer(key(0, LEVEL_UNARY), 0, Formula::bottom);

    let paren = |level: usize, op: usize, left: bool| usize::from(if left { level <= op } else { level < op });

    while let Some(Reverse((len, text, k))) = frontier.heap.pop() {
        if frontier.done[k] || frontier.best[k].as_ref().is_none_or(|e| e.text != text) {
            continue;
        }
        frontier.done[k] = true;
        let (tt, level) = ((k / 6) as u64, k % 6);
        let a = frontier.best[k].as_ref().expect("present").formula.clone();
        fin.push((tt, level, len));
        fin_formulas.push(a.clone());

        // ¬(x ∧ ¬y) renders as an implication, which is generated directly.
        let renders_as_not = match &a {
            Formula::And(_, r) => !matches!(r.as_ref(), Formula::Not(_)),
            Formula::Top => false,
            _ => true,
        };
        if renders_as_not {
            let estimate = len + 1 + 2 * usize::from(level < LEVEL_UNARY);
            frontier.offer(key(!tt & full, LEVEL_UNARY), estimate, || Formula::not(a.clone()));
        }

        let ai = fin.len() - 1;
        for bi in 0..fin.len() {
            for (xi, yi) in [(ai, bi), (bi, ai)] {
                let (xt, xl, xn) = fin[xi];
                let (yt, yl, yn) = fin[yi];
                let (xf, yf) = (&fin_formulas[xi], &fin_formulas[yi]);
                let cost = |op: usize, width: usize| xn + yn + width + 2 * (paren(xl, op, true) + paren(yl, op, false));
                frontier.offer(key(xt & yt, LEVEL_AND), cost(LEVEL_AND, 3), || {
                    Formula::and(xf.clone(), yf.clone())
                });
                frontier.offer(key((xt | yt) & full, LEVEL_OR), cost(LEVEL_OR, 3), || {
                    Formula::or(xf.clone(), yf.clone())
                });
                if !matches!(xf, Formula::Not(_)) {
                    frontier.offer(key((!xt | yt) & full, LEVEL_IMP), cost(LEVEL_IMP, 4), || {
                        Formula::implies(xf.clone(), yf.clone())
                    });
                }
                frontier.offer(key(!(xt ^ yt) & full, LEVEL_IFF), cost(LEVEL_IFF, 5), || {
                    Formula::iff(xf.clone(), yf.clone())
                });
            }
        }
    }

    (0..tables as u64)
        .map(|tt| {
            (1..=LEVEL_UNARY)
                .filter_map(|l| frontier.best[key(tt, l)].as_ref())
                .min_by(|a, b| text_order(&a.text, &b.text))
                .map(|e| e.formula.clone())
                .unwrap_or_else(|| cover_formula(tt, sig, false))
        })
        .collect()
}

/// A cube over `n` atoms: `care` marks fixed atoms, `value` their polarity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cube {
    care: u8,
    value: u8,
}

impl Cube {
    fn mask(&self, n: usize) -> u64 {
        (0..(1u16 << n) as u64)
            .filter(|v| (*v as u8) & self.care == self.value)
            .fold(0, |m, v| m | 1 << v)
    }
}

fn prime_implicants(on: u64, n: usize) -> Vec<Cube> {
    let mut current: Vec<Cube> = (0..(1u16 << n))
        .filter(|v| on >> v & 1 == 1)
        .map(|v| Cube {
            care: ((1u16 << n) - 1) as u8,
            value: v as u8,
        })
        .collect();
    let mut primes = Vec::new();
    while !current.is_empty() {
        let mut merged = vec![false; current.len()];
        let mut next = Vec::new();
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let (a, b) = (current[i], current[j]);
                let diff = a.value ^ b.value;
                if a.care == b.care && diff.count_ones() == 1 {
                    merged[i] = true;
                    merged[j] = true;
                    next.push(Cube {
                        care: a.care & !diff,
                        value: a.value & !diff,
                    });
                }
            }
        }
        for (i, c) in current.iter().enumerate() {
            if !merged[i] {
                primes.push(*c);
            }
        }
        next.sort();
        next.dedup();
        current = next;
    }
    primes.sort();
    primes.dedup();
    primes
}

/// Greedy irredundant cover of `on` by prime implicants, rendered as a DNF,
/// or as the CNF of the complement when `negate` is set.
fn cover_formula(on: u64, sig: &Signature, negate: bool) -> Formula {
    let n = sig.len();
    let full = full_mask(n);
    if on == 0 {
        return if negate { Formula::Top } else { Formula::bottom() };
    }
    if on == full {
        return if negate { Formula::bottom() } else { Formula::Top };
    }
    let primes = prime_implicants(on, n);
    let mut left = on;
    let mut chosen: Vec<Cube> = Vec::new();
    while left != 0 {
        let best = primes
            .iter()
            .filter(|c| !chosen.contains(c))
            .max_by_key(|c| ((c.mask(n) & left).count_ones(), Reverse(c.care.count_ones())))
            .expect("primes cover the on-set");
        left &= !best.mask(n);
        chosen.push(*best);
    }
    let literal = |i: usize, positive: bool| {
        let atom = Formula::Atom(sig.atom(i).clone());
        if positive {
            atom
        } else {
            Formula::not(atom)
        }
    };
    let terms = chosen.iter().map(|c| {
        let lits = (0..n)
            .filter(|i| c.care >> (n - 1 - i) & 1 == 1)
            .map(|i| (i, c.value >> (n - 1 - i) & 1 == 1));
        if negate {
            Formula::disjunction(lits.map(|(i, v)| literal(i, !v)))
        } else {
            Formula::conjunction(lits.map(|(i, v)| literal(i, v)))
        }
    });
    if negate {
        Formula::conjunction(terms)
    } else {
        Formula::disjunction(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{as_horn_clauses, HornVerdict};

    fn sig(names: &[&str]) -> Signature {
        Signature::new(names).unwrap()
    }

    fn fs(s: &Signature, texts: &[&str]) -> Vec<Formula> {
        texts.iter().map(|t| s.parse(t).unwrap()).collect()
    }

    fn clauses(s: &Signature, texts: &[&str]) -> Vec<HornClause> {
        texts
            .iter()
            .map(|t| HornClause::from_formula(&s.parse(t).unwrap(), s).unwrap())
            .collect()
    }

    #[test]
    fn models_of_conjunction() {
        let s = sig(&["p", "q"]);
        assert_eq!(models(&fs(&s, &["p & q"]), &s).unwrap().to_strings(), ["11"]);
        assert_eq!(models(&[], &s).unwrap().to_strings(), ["00", "01", "10", "11"]);
    }

    #[test]
    fn models_of_chain() {
        let s = sig(&["p", "q", "r"]);
        let m = models(&fs(&s, &["p -> q", "q -> r"]), &s).unwrap();
        assert_eq!(m.to_strings(), ["000", "001", "011", "111"]);
    }

    #[test]
    fn entailment_examples() {
        let s = sig(&["p", "q", "r"]);
        let p_r = s.parse("p -> r").unwrap();
        assert!(entails(&fs(&s, &["p -> q", "q -> r"]), &p_r, &s).unwrap());
        assert!(!entails(&[], &s.parse("p").unwrap(), &s).unwrap());
        assert!(entails(&fs(&s, &["p", "~p"]), &s.parse("q").unwrap(), &s).unwrap());
    }

    #[test]
    fn prop_limit_is_enforced() {
        let s = sig(&["a", "b", "c", "d", "e"]);
        assert!(matches!(models(&[], &s), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn forward_chaining_examples() {
        let s = sig(&["p", "q", "r"]);
        let p_r = clauses(&s, &["p -> r"])[0];
        assert!(horn_entails(&clauses(&s, &["p -> q", "q -> r"]), &p_r));
        assert!(!horn_entails(&clauses(&s, &["q -> r", "p & r -> q"]), &p_r));
        let taut = HornClause::raw(0b001, Head::Atom(0));
        assert!(horn_entails(&[], &taut));
        let bottom = clauses(&s, &["F"]);
        assert!(horn_entails(&bottom, &p_r));
    }

    #[test]
    fn closure_of_chain() {
        let s = sig(&["p", "q", "r"]);
        let closed = horn_closure(&clauses(&s, &["p -> q", "q -> r"]), &s).unwrap();
        let rendered: Vec<String> = closed.iter().map(|c| c.render(&s)).collect();
        assert_eq!(rendered, ["p -> q", "p -> r", "q -> r", "p & q -> r", "p & r -> q"]);
    }

    #[test]
    fn closure_edge_cases() {
        let p = sig(&["p"]);
        assert!(horn_closure(&[], &p).unwrap().is_empty());
        let pq = sig(&["p", "q"]);
        assert_eq!(horn_closure(&clauses(&pq, &["F"]), &pq).unwrap().len(), 8);
    }

    #[test]
    fn valuation_meets() {
        let v = |t| Valuation::parse(t).unwrap();
        assert_eq!(valuation_meet(v("110"), v("011")), v("010"));
        assert_eq!(valuation_meet(v("101"), v("101")), v("101"));
        assert_eq!(valuation_meet(v("101"), v("010")), v("000"));
    }

    #[test]
    fn intersection_closure_examples() {
        let m = ModelSet::parse(3, ["110", "011"]).unwrap();
        assert_eq!(intersection_closure(&m).to_strings(), ["010", "011", "110"]);
        let closed = intersection_closure(&m);
        assert_eq!(intersection_closure(&closed), closed);

        let s = sig(&["p", "q", "r"]);
        let h = models(&fs(&s, &["p & q"]), &s).unwrap();
        let mut extended = h;
        extended.insert(Valuation::parse("101").unwrap());
        assert_eq!(intersection_closure(&extended), models(&fs(&s, &["p"]), &s).unwrap());
    }

    #[test]
    fn horn_model_sets_are_meet_closed() {
        let s = sig(&["p", "q"]);
        let universe = enumerate_clauses(&s).unwrap();
        for pick in 0u32..(1 << universe.len()) {
            let xs: Vec<Formula> = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, c)| c.to_formula(&s))
                .collect();
            assert!(is_meet_closed(&models(&xs, &s).unwrap()));
        }
    }

    #[test]
    fn representative_counts() {
        let s = sig(&["p", "q"]);
        let eleven = ModelSet::parse(2, ["11"]).unwrap();
        let reps = representatives(&eleven, &s).unwrap();
        assert_eq!(reps.len(), 8);
        let masks: std::collections::BTreeSet<u64> =
            reps.iter().map(|f| formula_mask(f, &s).unwrap()).collect();
        assert_eq!(masks.len(), 8);
        assert!(masks.iter().all(|m| m & eleven.mask() == eleven.mask()));
        assert_eq!(representatives(&ModelSet::all(2), &s).unwrap().len(), 1);
        assert_eq!(representatives(&ModelSet::empty(1), &sig(&["p"])).unwrap().len(), 4);
    }

    #[test]
    fn representative_limit() {
        let s = sig(&["p", "q", "r", "t"]);
        assert!(matches!(
            representatives(&ModelSet::empty(4), &s),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn shortest_forms_for_small_tables() {
        let s = sig(&["p", "q"]);
        let render_of = |texts: &[&str]| {
            let m = ModelSet::parse(2, texts).unwrap();
            render(&synthesize(&m, &s))
        };
        assert_eq!(render_of(&["11"]), "p & q");
        assert_eq!(render_of(&["00", "01", "11"]), "p -> q");
        assert_eq!(render_of(&["00", "11"]), "p <-> q");
        assert_eq!(render_of(&["01", "10", "11"]), "p | q");
        assert_eq!(render_of(&[]), "F");
        assert_eq!(render_of(&["00", "01", "10", "11"]), "T");
        assert_eq!(render_of(&["00", "01"]), "~p");
    }

    #[test]
    fn synthesis_is_exact_for_every_table() {
        let s = sig(&["p", "q", "r"]);
        for bits in 0..=u8::MAX as u64 {
            let w = ModelSet::from_mask(3, bits);
            assert_eq!(formula_mask(&synthesize(&w, &s), &s).unwrap(), bits);
        }
        let s4 = sig(&["p", "q", "r", "t"]);
        for bits in [0u64, 1, 0xffff, 0x8001, 0x1234, 0xfffe, 0x6996] {
            let w = ModelSet::from_mask(4, bits);
            assert_eq!(formula_mask(&synthesize(&w, &s4), &s4).unwrap(), bits);
        }
    }

    #[test]
    fn clause_masks_match_formula_masks() {
        let s = sig(&["p", "q", "r"]);
        for c in enumerate_clauses(&s).unwrap() {
            assert_eq!(clause_mask(&c, 3), formula_mask(&c.to_formula(&s), &s).unwrap());
        }
    }

    #[test]
    fn horn_closure_is_sound_conjunction() {
        let s = sig(&["p", "q", "r"]);
        let f = s.parse("(p -> q) & (q -> r)").unwrap();
        let HornVerdict::Horn(cs) = as_horn_clauses(&f, &s).unwrap() else {
            panic!("Horn input");
        };
        let closed = horn_closure(&cs, &s).unwrap();
        let closed_formulas: Vec<Formula> = closed.iter().map(|c| c.to_formula(&s)).collect();
        assert_eq!(models(&closed_formulas, &s).unwrap(), models([&f], &s).unwrap());
    }
}
