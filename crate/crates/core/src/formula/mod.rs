//! Propositional formulas over a finite signature.
//!
//! The AST only has the four core connectives (`p`, `⊤`, `¬`, `∧`). Every
//! other connective is a smart constructor that expands into them, and the
//! renderer folds the expansions back into sugar, so `parse(render(f)) == f`
//! holds structurally.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::Limits;

mod horn;
mod parse;
mod render;

pub use horn::{as_horn_clauses, enumerate_clauses, Head, HornClause, HornVerdict};
pub use parse::parse;
pub use render::render;

/// A propositional atom, identified by its name.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom> {
        if is_atom_name(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::Signature(format!("`{name}` is not a valid atom name")))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// An ordered, duplicate-free list of atoms together with the enumeration
/// limits that apply to everything built over it.
#[derive(Clone)]
pub struct Signature {
    atoms: Arc<[Atom]>,
    limits: Limits,
}

impl Signature {
    /// Hard cap imposed by the 64-bit model-set encoding.
    pub const MAX_ATOMS: usize = 6;

    pub fn new<I, S>(names: I) -> Result<Signature>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut atoms: Vec<Atom> = Vec::new();
        for name in names {
            let atom = Atom::new(name.as_ref().trim())?;
            if atoms.contains(&atom) {
                return Err(Error::Signature(format!("duplicate atom `{atom}`")));
            }
            atoms.push(atom);
        }
        if atoms.is_empty() {
            return Err(Error::Signature("a signature needs at least one atom".into()));
        }
        if atoms.len() > Self::MAX_ATOMS {
            return Err(Error::limit("signature size", Self::MAX_ATOMS, atoms.len()));
        }
        Ok(Signature {
            atoms: atoms.into(),
            limits: Limits::DEFAULT,
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Result<Signature> {
        if limits.prop_atoms > Self::MAX_ATOMS || limits.clause_atoms > Self::MAX_ATOMS {
            return Err(Error::Signature(format!(
                "atom limits cannot exceed {}",
                Self::MAX_ATOMS
            )));
        }
        self.limits = limits;
        Ok(self)
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, index: usize) -> &Atom {
        &self.atoms[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.name() == name)
    }

    pub fn parse(&self, text: &str) -> Result<Formula> {
        parse(text, self)
    }

    /// Fails with [`Error::UnknownAtom`] if `f` mentions an atom outside the signature.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f.atoms().into_iter().find(|a| self.index_of(a.name()).is_none()) {
            Some(a) => Err(Error::UnknownAtom {
                name: a.name().to_string(),
                column: None,
            }),
            None => Ok(()),
        }
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
    }
}

impl Eq for Signature {}

impl std::hash::Hash for Signature {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.atoms.hash(state);
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.atoms.iter()).finish()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.atoms.iter().map(Atom::name).collect();
        f.write_str(&names.join(", "))
    }
}

/// Propositional formula over the core connectives.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Atom(Atom),
    Top,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(atom: Atom) -> Formula {
        Formula::Atom(atom)
    }

    pub fn top() -> Formula {
        Formula::Top
    }

    /// `⊥`, i.e. `¬⊤`.
    pub fn bottom() -> Formula {
        Formula::not(Formula::Top)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    /// `a ∨ b` as `¬(¬a ∧ ¬b)`.
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(Formula::not(a), Formula::not(b)))
    }

    /// `a → b` as `¬(a ∧ ¬b)`.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(a, Formula::not(b)))
    }

    /// `a ↔ b` as `(a → b) ∧ (b → a)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::implies(a.clone(), b.clone()), Formula::implies(b, a))
    }

    /// Right-nested conjunction; `⊤` when empty.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        let items: Vec<Formula> = items.into_iter().collect();
        items
            .into_iter()
            .rev()
            .reduce(|acc, f| Formula::and(f, acc))
            .unwrap_or(Formula::Top)
    }

    /// Right-nested disjunction; `⊥` when empty.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        let items: Vec<Formula> = items.into_iter().collect();
        items
            .into_iter()
            .rev()
            .reduce(|acc, f| Formula::or(f, acc))
            .unwrap_or_else(Formula::bottom)
    }

    pub fn atoms(&self) -> BTreeSet<&Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a);
            }
            Formula::Top => {}
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Top => 0,
            Formula::Not(f) => 1 + f.depth(),
            Formula::And(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

/// The global order on rendered formulas: shorter first, then lexicographic.
pub fn text_order(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The global order on formulas, keyed by their canonical rendering.
pub fn formula_order(a: &Formula, b: &Formula) -> Ordering {
    text_order(&render(a), &render(b))
}

/// Sorts formulas by the global order and drops structural duplicates.
pub fn sort_formulas(formulas: &mut Vec<Formula>) {
    let mut keyed: Vec<(String, Formula)> =
        formulas.drain(..).map(|f| (render(&f), f)).collect();
    keyed.sort_by(|a, b| text_order(&a.0, &b.0));
    keyed.dedup_by(|a, b| a.1 == b.1);
    formulas.extend(keyed.into_iter().map(|(_, f)| f));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signature_rejects_duplicates_and_bad_names() {
        assert!(Signature::new(["p", "q", "p"]).is_err());
        assert!(Signature::new(["P"]).is_err());
        assert!(Signature::new(["1p"]).is_err());
        assert!(Signature::new(Vec::<&str>::new()).is_err());
        assert!(Signature::new(["p", "q_2", "r1"]).is_ok());
    }

    #[test]
    fn signature_size_is_capped() {
        let names: Vec<String> = (0..7).map(|i| format!("a{i}")).collect();
        assert!(matches!(
            Signature::new(&names),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn check_reports_foreign_atoms() {
        let big = Signature::new(["p", "q"]).unwrap();
        let small = Signature::new(["p"]).unwrap();
        let f = big.parse("p & q").unwrap();
        assert!(big.check(&f).is_ok());
        assert!(matches!(small.check(&f), Err(Error::UnknownAtom { name, .. }) if name == "q"));
    }

    #[test]
    fn global_order_is_length_then_lexicographic() {
        let sig = Signature::new(["p", "q", "r"]).unwrap();
        let mut fs: Vec<Formula> = ["q -> r", "p", "p & q -> r", "p -> q", "p"]
            .iter()
            .map(|t| sig.parse(t).unwrap())
            .collect();
        sort_formulas(&mut fs);
        let rendered: Vec<String> = fs.iter().map(render).collect();
        assert_eq!(rendered, ["p", "p -> q", "q -> r", "p & q -> r"]);
    }
}
