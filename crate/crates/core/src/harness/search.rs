//! Predicate language for corpus search.
//!
//! ```text
//! expr  := unary ('&' unary)*
//! unary := '!' unary | '(' expr ')' | atom
//! atom  := well_covered | alpha_critical | triangle_free
//!        | locally_triangle_free | connected
//!        | wp '>=' INT | alpha '=' INT | mindeg '>=' INT
//! ```

use std::fmt;
use std::str::FromStr;

use crate::criticality::is_alpha_critical;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::alpha;
use crate::wp::{is_well_covered, wp_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    WellCovered,
    WpAtLeast(usize),
    AlphaCritical,
    TriangleFree,
    LocallyTriangleFree,
    Connected,
    AlphaEq(usize),
    MinDegreeAtLeast(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Atom(Atom),
    Not(Box<Predicate>),
    And(Vec<Predicate>),
}

impl Atom {
    fn eval(&self, g: &Graph) -> Result<bool> {
        Ok(match *self {
            Atom::WellCovered => is_well_covered(g)?,
            Atom::WpAtLeast(k) => wp_order(g)? >= k,
            Atom::AlphaCritical => is_alpha_critical(g).alpha_critical,
            Atom::TriangleFree => g.is_triangle_free(),
            Atom::LocallyTriangleFree => g.is_locally_triangle_free(),
            Atom::Connected => g.is_connected(),
            Atom::AlphaEq(k) => alpha(g) == k,
            Atom::MinDegreeAtLeast(k) => g.min_degree().unwrap_or(0) >= k,
        })
    }
}

impl Predicate {
    pub fn eval(&self, g: &Graph) -> Result<bool> {
        match self {
            Predicate::Atom(a) => a.eval(g),
            Predicate::Not(p) => p.eval(g).map(|b| !b),
            Predicate::And(ps) => {
                for p in ps {
                    if !p.eval(g)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::WellCovered => write!(f, "well_covered"),
            Atom::WpAtLeast(k) => write!(f, "wp>={k}"),
            Atom::AlphaCritical => write!(f, "alpha_critical"),
            Atom::TriangleFree => write!(f, "triangle_free"),
            Atom::LocallyTriangleFree => write!(f, "locally_triangle_free"),
            Atom::Connected => write!(f, "connected"),
            Atom::AlphaEq(k) => write!(f, "alpha={k}"),
            Atom::MinDegreeAtLeast(k) => write!(f, "mindeg>={k}"),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Atom(a) => write!(f, "{a}"),
            Predicate::Not(p) => write!(f, "!{p}"),
            Predicate::And(ps) => {
                write!(f, "(")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, " & ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    And,
    Not,
    Open,
    Close,
    Ge,
    Eq,
}

fn grammar(position: usize, message: impl Into<String>) -> Error {
    Error::Grammar {
        position,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'&' => Tok::And,
            b'!' => Tok::Not,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b'=' => Tok::Eq,
            b'>' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                Tok::Ge
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..=i];
                Tok::Int(text.parse().map_err(|_| grammar(start, format!("number {text} out of range")))?)
            }
            b'a'..=b'z' | b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_lowercase() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                Tok::Ident(src[start..=i].to_string())
            }
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(grammar(start, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expr(&mut self) -> Result<Predicate> {
        let mut parts = vec![self.unary()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            parts.push(self.unary()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Predicate::And(parts)
        })
    }

    fn unary(&mut self) -> Result<Predicate> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Predicate::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(grammar(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Ident(_)) => self.atom(),
            Some(_) => Err(grammar(self.offset(), "expected a predicate")),
            None => Err(grammar(self.end, "unexpected end of expression")),
        }
    }

    fn number_after(&mut self, op: Tok, op_text: &str) -> Result<usize> {
        if self.peek() != Some(&op) {
            return Err(grammar(self.offset(), format!("expected '{op_text}'")));
        }
        self.pos += 1;
        match self.peek() {
            Some(&Tok::Int(k)) => {
                self.pos += 1;
                Ok(k)
            }
            _ => Err(grammar(self.offset(), "expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<Predicate> {
        let at = self.offset();
        let Some(Tok::Ident(name)) = self.peek().cloned() else {
            unreachable!()
        };
        self.pos += 1;
        let atom = match name.as_str() {
            "well_covered" => Atom::WellCovered,
            "alpha_critical" => Atom::AlphaCritical,
            "triangle_free" => Atom::TriangleFree,
            "locally_triangle_free" => Atom::LocallyTriangleFree,
            "connected" => Atom::Connected,
            "wp" => Atom::WpAtLeast(self.number_after(Tok::Ge, ">=")?),
            "mindeg" => Atom::MinDegreeAtLeast(self.number_after(Tok::Ge, ">=")?),
            "alpha" => Atom::AlphaEq(self.number_after(Tok::Eq, "=")?),
            other => return Err(grammar(at, format!("unknown predicate {other:?}"))),
        };
        Ok(Predicate::Atom(atom))
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(src: &str) -> Result<Predicate> {
        let mut parser = Parser {
            toks: lex(src)?,
            pos: 0,
            end: src.len(),
        };
        let pred = parser.expr()?;
        if parser.pos < parser.toks.len() {
            return Err(grammar(parser.offset(), "unexpected trailing input"));
        }
        Ok(pred)
    }
}
