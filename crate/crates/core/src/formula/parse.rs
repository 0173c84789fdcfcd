// Recursive-descent parser for the ASCII surface syntax.
//
//   implication := disjunction ( "->" implication )?
//   disjunction := conjunction ( "|" conjunction )*
//   conjunction := unary ( "&" unary )*
//   unary       := "~" unary | primary
//   primary     := "0" | "1" | identifier | "(" implication ")"
//
// Positions reported in errors are 1-based character columns.

use super::Proposition;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Not,
    And,
    Or,
    Implies,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '~' => out.push((Tok::Not, col)),
            '&' => out.push((Tok::And, col)),
            '|' => out.push((Tok::Or, col)),
            '(' => out.push((Tok::LParen, col)),
            ')' => out.push((Tok::RParen, col)),
            '0' => out.push((Tok::Zero, col)),
            '1' => out.push((Tok::One, col)),
            '-' => {
                if chars.get(i + 1) != Some(&'>') {
                    return Err(syntax(col, "expected `->`"));
                }
                out.push((Tok::Implies, col));
                i += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => return Err(syntax(col, format!("unknown token `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Proposition> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication()?;
            return Ok(Proposition::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Proposition> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Or) {
            acc = Proposition::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Proposition> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::And) {
            acc = Proposition::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Proposition> {
        if self.eat(&Tok::Not) {
            return Ok(Proposition::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Proposition> {
        let col = self.col();
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(syntax(col, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Ident(name) => Ok(Proposition::Var(name)),
            Tok::Zero => Ok(Proposition::Const(false)),
            Tok::One => Ok(Proposition::Const(true)),
            Tok::LParen => {
                let inner = self.implication()?;
                if !self.eat(&Tok::RParen) {
                    return Err(match self.peek() {
                        None => syntax(col, "unclosed `(`"),
                        Some(t) => {
                            syntax(self.col(), format!("expected `)`, found {}", t.describe()))
                        }
                    });
                }
                Ok(inner)
            }
            other => Err(syntax(col, format!("unexpected {}", other.describe()))),
        }
    }
}

/// Parses the ASCII syntax (`~ & | -> 0 1`, identifiers, parentheses).
///
/// Precedence is `~` over `&` over `|` over `->`; `&` and `|` associate to
/// the left and `->` to the right. An unclosed parenthesis is reported at
/// the column of the opening `(`.
pub fn parse_proposition(text: &str) -> Result<Proposition> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(1, "empty input"));
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let phi = parser.implication()?;
    if let Some(t) = parser.peek() {
        let msg = if *t == Tok::RParen {
            "unmatched `)`".to_string()
        } else {
            format!("unexpected {}", t.describe())
        };
        return Err(syntax(parser.col(), msg));
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Proposition as P;

    fn v(s: &str) -> P {
        P::var(s)
    }

    fn err_pos(text: &str) -> usize {
        match parse_proposition(text) {
            Err(Error::Syntax { position, .. }) => position,
            other => panic!("expected syntax error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn peirce() {
        let expected = P::implies(P::implies(P::implies(v("p"), v("q")), v("p")), v("p"));
        assert_eq!(parse_proposition("((p->q)->p)->p").unwrap(), expected);
    }

    #[test]
    fn single_variable() {
        assert_eq!(parse_proposition("p").unwrap(), v("p"));
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_proposition("~a & b | c -> d -> e").unwrap(),
            P::implies(
                P::or(P::and(P::not(v("a")), v("b")), v("c")),
                P::implies(v("d"), v("e"))
            )
        );
        assert_eq!(
            parse_proposition("a & b & c").unwrap(),
            P::and(P::and(v("a"), v("b")), v("c"))
        );
        assert_eq!(
            parse_proposition("a | b | c").unwrap(),
            P::or(P::or(v("a"), v("b")), v("c"))
        );
    }

    #[test]
    fn constants_and_identifiers() {
        assert_eq!(
            parse_proposition("x_1 | 0 & 1").unwrap(),
            P::or(v("x_1"), P::and(P::Const(false), P::Const(true)))
        );
    }

    #[test]
    fn unbalanced_parenthesis_reports_opening_column() {
        assert_eq!(err_pos("p & (q"), 5);
    }

    #[test]
    fn error_cases() {
        assert_eq!(err_pos(""), 1);
        assert_eq!(err_pos("   "), 1);
        assert_eq!(err_pos("p $ q"), 3);
        assert_eq!(err_pos("p)"), 2);
        assert_eq!(err_pos("p -"), 3);
        assert_eq!(err_pos("p &"), 4);
        assert_eq!(err_pos("(p q)"), 4);
        assert_eq!(err_pos("2"), 1);
    }

    #[test]
    fn printer_output() {
        let phi = parse_proposition("((p->q)->p)->p").unwrap();
        assert_eq!(phi.to_string(), "((p -> q) -> p) -> p");
        let phi = parse_proposition("~(a & b) | ~~c").unwrap();
        assert_eq!(phi.to_string(), "~(a & b) | ~~c");
    }
}
