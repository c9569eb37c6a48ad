//! LL(1) recursive-descent parser.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'i' | VAR | DIFF | '(' expr ')'
//!         | 'rat' '(' expr ',' expr ')' | 'exp' '(' expr ')'
//! ```

use num_bigint::BigUint;

use super::ast::Expr;
use crate::algebra::Var;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigUint),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1usize, 1usize);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let (l0, c0) = (line, column);
        let single = match c {
            '\n' => {
                line += 1;
                column = 1;
                k += 1;
                continue;
            }
            c if c.is_whitespace() => {
                column += 1;
                k += 1;
                continue;
            }
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00b7}' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, line: l0, column: c0 });
            k += 1;
            column += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            column += k - start;
            out.push(Spanned {
                tok: Tok::Int(text.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            column += k - start;
            out.push(Spanned {
                tok: Tok::Ident(text),
                line: l0,
                column: c0,
            });
            continue;
        }
        return Err(Error::Syntax {
            line: l0,
            column: c0,
            found: format!("`{c}`"),
            expected: vec!["an expression".into()],
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const ATOM_START: &[&str] = &["integer", "`i`", "variable", "differential", "`(`", "`rat`", "`exp`", "`-`"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> Error {
        let s = &self.toks[self.pos];
        Error::Syntax {
            line: s.line,
            column: s.column,
            found: s.tok.describe(),
            expected: expected.iter().map(|e| e.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&tok.describe()]))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let parenthesized = *self.peek() == Tok::LParen;
        if parenthesized {
            self.bump();
        }
        let e = match self.peek().clone() {
            Tok::Int(n) => {
                let e = u32::try_from(&n).map_err(|_| self.error(&["exponent below 2^32"]))?;
                self.bump();
                e
            }
            _ => return Err(self.error(&["non-negative integer exponent"])),
        };
        if parenthesized {
            self.expect(Tok::RParen)?;
        }
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(n))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if name == "i" {
                    self.bump();
                    return Ok(Expr::I);
                }
                if name == "rat" || name == "exp" {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let a = self.expr()?;
                    let out = if name == "rat" {
                        self.expect(Tok::Comma)?;
                        let b = self.expr()?;
                        Expr::Rat(Box::new(a), Box::new(b))
                    } else {
                        Expr::Exp(Box::new(a))
                    };
                    self.expect(Tok::RParen)?;
                    return Ok(out);
                }
                if let Ok(v) = name.parse::<Var>() {
                    self.bump();
                    return Ok(Expr::Var(v));
                }
                if let Some(rest) = name.strip_prefix('d') {
                    if let Ok(v) = rest.parse::<Var>() {
                        self.bump();
                        return Ok(Expr::Diff(v));
                    }
                }
                Err(self.error(ATOM_START))
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses a single expression.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Parses a comma-separated list such as a point `1, 1/2+i`.
pub fn parse_list(src: &str) -> Result<Vec<Expr>> {
    let trimmed = src.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .filter(|s| !s.contains(['(', ')']) || balanced(s))
        .unwrap_or(trimmed);
    let mut p = Parser {
        toks: lex(inner)?,
        pos: 0,
    };
    let mut out = vec![p.expr()?];
    while *p.peek() == Tok::Comma {
        p.bump();
        out.push(p.expr()?);
    }
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["`,`", "end of input"]));
    }
    Ok(out)
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corollary_form_parses() {
        let e = parse("x^2*dx + y^2*(x*dy − y*dx)").unwrap();
        assert_eq!(e.to_string(), "x^2*dx + y^2*(x*dy - y*dx)");
    }

    #[test]
    fn double_plus_is_rejected_at_second_plus() {
        match parse("x*dy + + y") {
            Err(Error::Syntax { line, column, found, .. }) => {
                assert_eq!((line, column), (1, 8));
                assert_eq!(found, "`+`");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("-x^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var(Var::X)), 2))));
        assert!(parse("a").unwrap_err().to_string().contains("1:1"));
        assert_eq!(parse("1 - (2 - 3)").unwrap().to_string(), "1 - (2 - 3)");
        assert_eq!(parse("(1 - 2) - 3").unwrap().to_string(), "1 - 2 - 3");
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("(1, 1/2)").unwrap().len(), 2);
        assert_eq!(parse_list("(x+1)*(y), 2").unwrap().len(), 2);
        assert!(parse_list("1,").is_err());
    }
}
