use super::{Atom, Formula};

/// A formula node seen through the derived connectives.
enum View<'a> {
    Atom(&'a Atom),
    Top,
    Bottom,
    Not(&'a Formula),
    And(&'a Formula, &'a Formula),
    Or(&'a Formula, &'a Formula),
    Implies(&'a Formula, &'a Formula),
    Iff(&'a Formula, &'a Formula),
}

/// Matches the expansion of `a → b`, i.e. `¬(a ∧ ¬b)`.
fn as_implication(f: &Formula) -> Option<(&Formula, &Formula)> {
    match f {
        Formula::Not(inner) => match inner.as_ref() {
            Formula::And(a, nb) => match nb.as_ref() {
                Formula::Not(b) => Some((a, b)),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

fn view(f: &Formula) -> View<'_> {
    match f {
        Formula::Atom(a) => View::Atom(a),
        Formula::Top => View::Top,
        Formula::And(l, r) => match (as_implication(l), as_implication(r)) {
            (Some((a, b)), Some((c, d))) if a == d && b == c => View::Iff(a, b),
            _ => View::And(l, r),
        },
        Formula::Not(inner) => match inner.as_ref() {
            Formula::Top => View::Bottom,
            Formula::And(l, r) => match (l.as_ref(), r.as_ref()) {
                (Formula::Not(a), Formula::Not(b)) => View::Or(a, b),
                (a, Formula::Not(b)) => View::Implies(a, b),
                _ => View::Not(inner),
            },
            _ => View::Not(inner),
        },
    }
}

const IFF: u8 = 1;
const IMPLIES: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

fn level(f: &Formula) -> u8 {
    match view(f) {
        View::Atom(_) | View::Top | View::Bottom | View::Not(_) => UNARY,
        View::And(..) => AND,
        View::Or(..) => OR,
        View::Implies(..) => IMPLIES,
        View::Iff(..) => IFF,
    }
}

fn write_child(out: &mut String, f: &Formula, parens: bool) {
    if parens {
        out.push('(');
        write(out, f);
        out.push(')');
    } else {
        write(out, f);
    }
}

// Binary operators are right-associative: the left operand must bind
// strictly tighter than the operator, the right one at least as tight.
fn write_binary(out: &mut String, op: &str, op_level: u8, a: &Formula, b: &Formula) {
    write_child(out, a, level(a) <= op_level);
    out.push_str(op);
    write_child(out, b, level(b) < op_level);
}

fn write(out: &mut String, f: &Formula) {
    match view(f) {
        View::Atom(a) => out.push_str(a.name()),
        View::Top => out.push('T'),
        View::Bottom => out.push('F'),
        View::Not(g) => {
            out.push('~');
            write_child(out, g, level(g) < UNARY);
        }
        View::And(a, b) => write_binary(out, " & ", AND, a, b),
        View::Or(a, b) => write_binary(out, " | ", OR, a, b),
        View::Implies(a, b) => write_binary(out, " -> ", IMPLIES, a, b),
        View::Iff(a, b) => write_binary(out, " <-> ", IFF, a, b),
    }
}

/// Canonical concrete syntax of `f`.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(&mut out, f);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, Signature};

    fn sig() -> Signature {
        Signature::new(["p", "q", "r"]).unwrap()
    }

    fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).unwrap())
    }

    #[test]
    fn implication_renders_with_arrow() {
        assert_eq!(render(&Formula::implies(atom("p"), atom("q"))), "p -> q");
    }

    #[test]
    fn bottom_renders_as_f() {
        assert_eq!(render(&Formula::bottom()), "F");
    }

    #[test]
    fn right_nested_conjunction_is_flat() {
        let f = Formula::and(atom("p"), Formula::and(atom("q"), atom("r")));
        assert_eq!(render(&f), "p & q & r");
        let g = Formula::and(Formula::and(atom("p"), atom("q")), atom("r"));
        assert_eq!(render(&g), "(p & q) & r");
    }

    #[test]
    fn sugar_is_recovered() {
        for text in [
            "p | q",
            "p <-> q",
            "~(p & q)",
            "~~p",
            "~F",
            "p & q -> r",
            "(p <-> q) -> r",
            "p & ~q | r",
            "p -> q -> r",
            "~p | q",
            "(p <-> q) <-> r",
            "T",
            "p -> F",
        ] {
            let f = parse(text, &sig()).unwrap();
            assert_eq!(render(&f), text);
        }
    }

    #[test]
    fn round_trip_of_ambiguous_expansions() {
        // ¬(¬p ∧ ¬q) is both `p | q` and `~p -> q`; either text must parse back to it.
        let f = Formula::implies(Formula::not(atom("p")), atom("q"));
        let text = render(&f);
        assert_eq!(text, "p | q");
        assert_eq!(parse(&text, &sig()).unwrap(), f);
    }
}
