//! Recursive-descent parser for the surface syntax.
//!
//! Grammar (whitespace between tokens is insignificant):
//!
//! ```text
//! term    ::= "0" | "f" term | var1 | "Z[" digits "]"
//! atom    ::= varN "(" arg ")"            arg one type level below varN
//! formula ::= atom | "~" formula | "(" formula "|" formula ")"
//!           | "all" var ":" formula
//! ```
//!
//! On input only, `( f -> g )` and `( f & g )` are accepted and expanded to
//! the ¬/∨ core. Variables are written `x1..x3` (type 1), `X1..X3` (type 2)
//! or `v{k}.{n}` in general.

use num_bigint::BigUint;
use thiserror::Error;

use super::{mk_conjunction, mk_implication, Arg, Formula, Term, VarSym};

/// Largest variable index accepted by the parser. Keeps the prime table that
/// backs variable codes at a sane size.
pub(crate) const MAX_VAR_INDEX: u32 = 1_000_000;
/// Largest type level accepted by the parser.
pub(crate) const MAX_VAR_LEVEL: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("type error at byte {pos}: {msg}")]
    Type { pos: usize, msg: String },
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text);
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text);
    let t = p.term()?;
    p.expect_end()?;
    Ok(t)
}

/// Parses a formula, falling back to a term; used where either is welcome.
/// Reports the formula error when neither parse succeeds.
pub fn parse_object(text: &str) -> Result<crate::codec::SyntaxObject, ParseError> {
    match parse_formula(text) {
        Ok(f) => Ok(crate::codec::SyntaxObject::Formula(f)),
        Err(formula_err) => match parse_term(text) {
            Ok(t) => Ok(crate::codec::SyntaxObject::Term(t)),
            Err(_) => Err(formula_err),
        },
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            got => Err(self.syntax(format!(
                "expected `{}`, found {}",
                c as char,
                describe(got)
            ))),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.syntax(format!("unexpected trailing input starting at `{}`", c as char))),
        }
    }

    fn syntax(&self, msg: String) -> ParseError {
        ParseError::Syntax { pos: self.pos, msg }
    }

    fn type_err(&self, msg: String) -> ParseError {
        ParseError::Type { pos: self.pos, msg }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(Formula::not(self.formula()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.formula()?;
                let f = match self.peek() {
                    Some(b'|') => {
                        self.pos += 1;
                        Formula::or(left, self.formula()?)
                    }
                    Some(b'-') => {
                        self.pos += 1;
                        self.expect(b'>')?;
                        mk_implication(left, self.formula()?)
                    }
                    Some(b'&') => {
                        self.pos += 1;
                        mk_conjunction(left, self.formula()?)
                    }
                    got => {
                        return Err(self.syntax(format!(
                            "expected `|`, `->` or `&`, found {}",
                            describe(got)
                        )))
                    }
                };
                self.expect(b')')?;
                Ok(f)
            }
            Some(b'a') => {
                self.keyword_all()?;
                let v = self.variable()?;
                self.expect(b':')?;
                let body = self.formula()?;
                Ok(Formula::forall(v, body))
            }
            Some(c) if c == b'x' || c == b'X' || c == b'v' => self.atom(),
            got => Err(self.syntax(format!("expected a formula, found {}", describe(got)))),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let head_pos = self.pos;
        let head = self.variable()?;
        if head.level() < 2 {
            return Err(ParseError::Type {
                pos: head_pos,
                msg: format!(
                    "{} has type level 1 and cannot head an application",
                    head.name()
                ),
            });
        }
        self.expect(b'(')?;
        let arg = if head.level() == 2 {
            Arg::Term(self.term()?)
        } else {
            let arg_pos = self.pos;
            let v = self.variable()?;
            if v.level() + 1 != head.level() {
                return Err(ParseError::Type {
                    pos: arg_pos,
                    msg: format!(
                        "{} has type level {}, but {} requires an argument of level {}",
                        v.name(),
                        v.level(),
                        head.name(),
                        head.level() - 1
                    ),
                });
            }
            Arg::from_var(v)
        };
        self.expect(b')')?;
        Formula::apply(head, arg).map_err(|e| self.type_err(e.msg))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(b'f') => {
                self.pos += 1;
                Ok(Term::succ(self.term()?))
            }
            Some(b'Z') => {
                self.pos += 1;
                self.expect(b'[')?;
                let n = self.digits()?;
                self.expect(b']')?;
                Ok(Term::numeral(n))
            }
            Some(c) if c == b'x' || c == b'v' || c == b'X' => {
                let pos = self.pos;
                let v = self.variable()?;
                if v.level() != 1 {
                    return Err(ParseError::Type {
                        pos,
                        msg: format!("{} has type level {}, terms are type 1", v.name(), v.level()),
                    });
                }
                Ok(Term::var(v))
            }
            got => Err(self.syntax(format!("expected a term, found {}", describe(got)))),
        }
    }

    fn keyword_all(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(b"all") {
            let after = self.bytes.get(self.pos + 3).copied();
            if after.map_or(false, |c| c.is_ascii_alphanumeric()) {
                return Err(self.syntax("expected keyword `all` followed by a variable".into()));
            }
            self.pos += 3;
            Ok(())
        } else {
            Err(self.syntax("expected keyword `all`".into()))
        }
    }

    fn variable(&mut self) -> Result<VarSym, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let k = self.small_index()?;
                Ok(VarSym::new(k, 1))
            }
            Some(b'X') => {
                self.pos += 1;
                let k = self.small_index()?;
                Ok(VarSym::new(k, 2))
            }
            Some(b'v') => {
                self.pos += 1;
                let k = self.bounded_number("variable index", MAX_VAR_INDEX)?;
                self.expect(b'.')?;
                let n = self.bounded_number("type level", MAX_VAR_LEVEL)?;
                Ok(VarSym::new(k, n))
            }
            got => Err(self.syntax(format!("expected a variable, found {}", describe(got)))),
        }
    }

    /// Index of an `x`/`X` short name; only 1..=3 have short names.
    fn small_index(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.raw_digits()?;
        let k: u32 = n.parse().map_err(|_| ParseError::Syntax {
            pos: start,
            msg: "variable index out of range".into(),
        })?;
        if !(1..=3).contains(&k) {
            return Err(ParseError::Syntax {
                pos: start,
                msg: format!("short variable names stop at index 3; write v{k}.1 or v{k}.2"),
            });
        }
        Ok(k)
    }

    fn bounded_number(&mut self, what: &str, max: u32) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.raw_digits()?;
        match n.parse::<u32>() {
            Ok(k) if (1..=max).contains(&k) => Ok(k),
            _ => Err(ParseError::Syntax {
                pos: start,
                msg: format!("{what} must be between 1 and {max}"),
            }),
        }
    }

    fn digits(&mut self) -> Result<BigUint, ParseError> {
        let s = self.raw_digits()?;
        Ok(s.parse().expect("digit run parses as BigUint"))
    }

    fn raw_digits(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax { pos: start, msg: "expected digits".into() });
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap().to_owned())
    }
}

fn describe(c: Option<u8>) -> String {
    match c {
        Some(c) => format!("`{}`", c as char),
        None => "end of input".into(),
    }
}

// Silence an unused-method lint when `bump` is only used under cfg(test).
impl<'a> Parser<'a> {
    #[allow(dead_code)]
    fn remaining(&self) -> usize {
        self.bytes.len() - self.pos
    }
}
