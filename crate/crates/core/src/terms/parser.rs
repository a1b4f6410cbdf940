//! Recursive-descent parser for terms and equations.
//!
//! ```text
//! join    := meet ('|' meet)*
//! meet    := product ('&' product)*
//! product := postfix (['*'] postfix)*
//! postfix := primary ('^' [lr]+)*
//! primary := '1' | ident | macro '(' args ')' | '(' join ')'
//! ```
//!
//! Macros (`sigma_k`, `gamma_k`, `norm_k`, `delta`, `sh`, `conj`) are expanded
//! while parsing, so the resulting tree only contains the seven basic nodes.

use super::ast::{Equation, Relation, Term};
use super::builders;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Post(String),
    LParen,
    RParen,
    Comma,
    Amp,
    Pipe,
    Star,
    Eq,
    Le,
    End,
}

struct Lexer;

impl Lexer {
    fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
        let bytes = src.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            let start = i;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '&' => Tok::Amp,
                '|' => Tok::Pipe,
                '*' => Tok::Star,
                '=' => Tok::Eq,
                '<' => {
                    if bytes.get(i + 1) == Some(&b'=') {
                        i += 1;
                        Tok::Le
                    } else {
                        return Err(syntax(start, "expected `<=`"));
                    }
                }
                '^' => {
                    let mut j = i + 1;
                    while j < bytes.len() && matches!(bytes[j], b'l' | b'r') {
                        j += 1;
                    }
                    if j == i + 1 {
                        return Err(syntax(start, "expected `l` or `r` after `^`"));
                    }
                    let letters = src[i + 1..j].to_string();
                    i = j;
                    out.push((start, Tok::Post(letters)));
                    continue;
                }
                '-' | '0'..='9' => {
                    let mut j = i + 1;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    let v = src[i..j]
                        .parse()
                        .map_err(|_| syntax(start, "malformed integer"))?;
                    i = j;
                    out.push((start, Tok::Int(v)));
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut j = i + 1;
                    while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                        j += 1;
                    }
                    let name = src[i..j].to_string();
                    i = j;
                    out.push((start, Tok::Ident(name)));
                    continue;
                }
                other => return Err(syntax(start, &format!("unexpected character `{other}`"))),
            };
            i += 1;
            out.push((start, tok));
        }
        out.push((src.len(), Tok::End));
        Ok(out)
    }
}

/// Names that expand as macros when followed by `(`. Variables with these
/// names cannot be followed directly by a parenthesized factor.
pub fn is_macro(name: &str) -> bool {
    let indexed = |p: &str| {
        name.strip_prefix(p)
            .is_some_and(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()))
    };
    matches!(name, "delta" | "sh" | "conj") || ["sigma_", "gamma_", "norm_"].into_iter().any(indexed)
}

fn syntax(pos: usize, msg: &str) -> Error {
    Error::Syntax { pos, msg: msg.to_string() }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: Lexer::tokenize(src)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), &format!("expected {what}")))
        }
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.meet()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            t = t.join(self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term> {
        let mut t = self.product()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            t = t.meet(self.product()?);
        }
        Ok(t)
    }

    fn starts_primary(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_) | Tok::LParen | Tok::Int(_))
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = self.postfix()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
            } else if !self.starts_primary() {
                break;
            }
            t = t.mul(self.postfix()?);
        }
        Ok(t)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.primary()?;
        while let Tok::Post(letters) = self.peek().clone() {
            self.bump();
            for c in letters.chars() {
                t = if c == 'l' { t.resl() } else { t.resr() };
            }
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(1) => Ok(Term::One),
            Tok::Int(_) => Err(syntax(pos, "the only numeric constant is `1`")),
            Tok::LParen => {
                let t = self.join()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen && is_macro(&name) {
                    self.bump();
                    self.call(&name, pos)
                } else {
                    Ok(Term::Var(name))
                }
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            other => Err(syntax(pos, &format!("unexpected token {other:?}"))),
        }
    }

    fn int_arg(&mut self) -> Result<i64> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(v) => Ok(v),
            _ => Err(syntax(pos, "expected an integer")),
        }
    }

    /// Parses the arguments of a macro after its `(` and expands it.
    fn call(&mut self, name: &str, pos: usize) -> Result<Term> {
        let indexed = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix)
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
        };
        let t = if let Some(k) = indexed("sigma_") {
            builders::sigma_term(k, &self.join()?)
        } else if let Some(k) = indexed("gamma_") {
            builders::gamma_term(k, &self.join()?)
        } else if let Some(k) = indexed("norm_") {
            builders::norm_term(k, &self.join()?)
        } else {
            match name {
                "delta" => builders::delta_term(&self.join()?),
                "sh" => {
                    let t = self.join()?;
                    self.expect(Tok::Comma, "`,`")?;
                    builders::bracket(&t, self.int_arg()?)
                }
                "conj" => {
                    let a = self.join()?;
                    self.expect(Tok::Comma, "`,`")?;
                    builders::conj(&a, &self.join()?)
                }
                _ => return Err(syntax(pos, &format!("`{name}` needs an index of at least 1"))),
            }
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(t)
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(syntax(self.pos(), "trailing input"))
        }
    }
}

/// Parses a term.
pub fn parse(src: &str) -> Result<Term> {
    let mut p = Parser::new(src)?;
    let t = p.join()?;
    p.finish()?;
    Ok(t)
}

/// Parses `s = t` or `s <= t`.
pub fn parse_equation(src: &str) -> Result<Equation> {
    let mut p = Parser::new(src)?;
    let lhs = p.join()?;
    let pos = p.pos();
    let kind = match p.bump() {
        Tok::Eq => Relation::Eq,
        Tok::Le => Relation::Leq,
        _ => return Err(syntax(pos, "expected `=` or `<=`")),
    };
    let rhs = p.join()?;
    p.finish()?;
    Ok(Equation { lhs, rhs, kind })
}

impl std::str::FromStr for Term {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl std::str::FromStr for Equation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_equation(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn precedence() {
        assert_eq!(parse("x * y ^l").unwrap(), v("x").mul(v("y").resl()));
        assert_eq!(parse("x y^l").unwrap(), v("x").mul(v("y").resl()));
        assert_eq!(
            parse("a | b & c d").unwrap(),
            v("a").join(v("b").meet(v("c").mul(v("d"))))
        );
        assert_eq!(parse("a b c").unwrap(), v("a").mul(v("b")).mul(v("c")));
        assert_eq!(parse("(a b)^lr").unwrap(), v("a").mul(v("b")).resl().resr());
        assert_eq!(parse("x^l^l").unwrap(), parse("x^ll").unwrap());
        assert_eq!(parse("1 & x").unwrap(), Term::One.meet(v("x")));
    }

    #[test]
    fn macros() {
        assert_eq!(parse("sigma_2(y)").unwrap(), v("y").meet(v("y").resl().resl()));
        assert_eq!(parse("sigma_1(y)").unwrap(), v("y"));
        assert_eq!(parse("sh(x, -1)").unwrap(), v("x").resr().resr());
        assert_eq!(
            parse("conj(x, y)").unwrap(),
            v("y").resr().mul(v("x")).mul(v("y")).meet(Term::One)
        );
        assert!(parse("delta(x)").is_ok());
        assert!(parse("gamma_3(x y)").is_ok());
        assert!(parse("norm_2(x)").is_ok());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("x & ("), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse("x ^ y"), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(parse("foo(x)").unwrap(), v("foo").mul(v("x")));
        assert!(matches!(parse("x )"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("sigma_0(x)"), Err(Error::Syntax { .. })));
        assert!(parse("").is_err());
    }

    #[test]
    fn equations() {
        let e = parse_equation("x <= x^llll").unwrap();
        assert_eq!(e.kind, Relation::Leq);
        assert_eq!(e.to_string(), "x <= x^llll");
        let e: Equation = "x y = y x".parse().unwrap();
        assert_eq!(e.kind, Relation::Eq);
        assert_eq!(e.to_string().parse::<Equation>().unwrap(), e);
        assert!(parse_equation("x y").is_err());
    }

    #[test]
    fn printing_reparses() {
        for s in [
            "x (y z)",
            "(x | y) & z",
            "x & (y & z)",
            "(x y)^l",
            "x^lr (y | 1)^rr",
            "((x | y) | z) w",
        ] {
            let t = parse(s).unwrap();
            assert_eq!(parse(&t.to_string()).unwrap(), t, "{s} printed as {t}");
        }
        assert_eq!(parse("x (y z)").unwrap().to_string(), "x (y z)");
    }
}
