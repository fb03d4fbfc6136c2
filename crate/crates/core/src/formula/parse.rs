use super::{is_atom_name, Formula, Signature};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Top,
    Bottom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::Top => "`T`".into(),
            Token::Bottom => "`F`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

/// Tokens paired with their 1-based character column.
fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let rest = |s: &str| chars[i..].iter().take(s.chars().count()).copied().eq(s.chars());
        let (token, width) = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => (Token::LParen, 1),
            ')' => (Token::RParen, 1),
            '~' | '¬' => (Token::Not, 1),
            '&' | '∧' => (Token::And, 1),
            '|' | '∨' => (Token::Or, 1),
            '→' => (Token::Implies, 1),
            '↔' => (Token::Iff, 1),
            '⊤' => (Token::Top, 1),
            '⊥' => (Token::Bottom, 1),
            '-' if rest("->") => (Token::Implies, 2),
            '<' if rest("<->") => (Token::Iff, 3),
            c if c.is_ascii_alphabetic() => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == '_')
                    .count();
                let word: String = chars[i..i + len].iter().collect();
                let token = match word.as_str() {
                    "T" => Token::Top,
                    "F" => Token::Bottom,
                    w if is_atom_name(w) => Token::Ident(word.clone()),
                    _ => {
                        return Err(Error::Syntax {
                            column,
                            message: format!("`{word}` is not an atom or constant"),
                        })
                    }
                };
                (token, len)
            }
            other => {
                return Err(Error::Syntax {
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((token, column));
        i += width;
    }
    out.push((Token::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn column(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.pos].0.clone();
        if token != Token::End {
            self.pos += 1;
        }
        token
    }

    fn unexpected(&self, expected: &str) -> Error {
        Error::Syntax {
            column: self.column(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        }
    }

    // iff := imp ('<->' iff)?
    fn iff(&mut self) -> Result<Formula> {
        let left = self.implication()?;
        if *self.peek() == Token::Iff {
            self.bump();
            let right = self.iff()?;
            return Ok(Formula::iff(left, right));
        }
        Ok(left)
    }

    // imp := or ('->' imp)?
    fn implication(&mut self) -> Result<Formula> {
        let left = self.disjunction()?;
        if *self.peek() == Token::Implies {
            self.bump();
            let right = self.implication()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let left = self.conjunction()?;
        if *self.peek() == Token::Or {
            self.bump();
            let right = self.disjunction()?;
            return Ok(Formula::or(left, right));
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let left = self.unary()?;
        if *self.peek() == Token::And {
            self.bump();
            let right = self.conjunction()?;
            return Ok(Formula::and(left, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        let column = self.column();
        if matches!(self.peek(), Token::RParen | Token::End | Token::And | Token::Or | Token::Implies | Token::Iff) {
            return Err(self.unexpected("a formula"));
        }
        match self.bump() {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::Top => Ok(Formula::Top),
            Token::Bottom => Ok(Formula::bottom()),
            Token::Ident(name) => match self.sig.index_of(&name) {
                Some(i) => Ok(Formula::Atom(self.sig.atom(i).clone())),
                None => Err(Error::UnknownAtom {
                    name,
                    column: Some(column),
                }),
            },
            Token::LParen => {
                let inner = self.iff()?;
                if *self.peek() != Token::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!("binary operators and closers are rejected above"),
        }
    }
}

/// Parses `text` over `sig`, expanding derived connectives.
///
/// Precedence from tightest: `~`, `&`, `|`, `->`, `<->`; binary operators
/// associate to the right.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
        sig,
    };
    let f = parser.iff()?;
    if *parser.peek() != Token::End {
        return Err(parser.unexpected("end of input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::new(["p", "q", "r"]).unwrap()
    }

    fn atom(name: &str) -> Formula {
        Formula::Atom(crate::formula::Atom::new(name).unwrap())
    }

    #[test]
    fn implication_of_conjunction() {
        let f = parse("p & q -> r", &sig()).unwrap();
        assert_eq!(
            f,
            Formula::implies(Formula::and(atom("p"), atom("q")), atom("r"))
        );
    }

    #[test]
    fn negated_top_is_bottom() {
        assert_eq!(parse("~T", &sig()).unwrap(), Formula::bottom());
        assert_eq!(parse("F", &sig()).unwrap(), Formula::bottom());
    }

    #[test]
    fn unknown_atom_is_reported_with_column() {
        let only_p = Signature::new(["p"]).unwrap();
        match parse("p <-> q", &only_p) {
            Err(Error::UnknownAtom { name, column }) => {
                assert_eq!(name, "q");
                assert_eq!(column, Some(7));
            }
            other => panic!("expected unknown atom, got {other:?}"),
        }
    }

    #[test]
    fn implication_is_right_associative() {
        let f = parse("p -> q -> r", &sig()).unwrap();
        assert_eq!(
            f,
            Formula::implies(atom("p"), Formula::implies(atom("q"), atom("r")))
        );
    }

    #[test]
    fn precedence_ladder() {
        let f = parse("~p & q | r -> p <-> q", &sig()).unwrap();
        let expected = Formula::iff(
            Formula::implies(
                Formula::or(Formula::and(Formula::not(atom("p")), atom("q")), atom("r")),
                atom("p"),
            ),
            atom("q"),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn unicode_connectives() {
        let ascii = parse("~p & q -> r | F", &sig()).unwrap();
        let unicode = parse("¬p ∧ q → r ∨ ⊥", &sig()).unwrap();
        assert_eq!(ascii, unicode);
    }

    #[test]
    fn syntax_errors_carry_columns() {
        for (text, column) in [("p &", 4), ("(p", 3), ("p q", 3), ("p # q", 3), ("Q", 1), ("", 1)] {
            match parse(text, &sig()) {
                Err(Error::Syntax { column: c, .. }) => assert_eq!(c, column, "{text}"),
                other => panic!("{text}: expected syntax error, got {other:?}"),
            }
        }
    }
}
