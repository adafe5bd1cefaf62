//! Properties for counterexample search: a statement id from the suite, or a
//! universally quantified identity / inequality between terms.
//!
//! Term syntax, loosest first: `->` (right associative), `|`, `*`; atoms are
//! variables, `1`, `0` and parenthesized terms. The Unicode spellings `→`,
//! `⊔`, `·` and `⪯` are accepted too. `s <= t` means `s|t = t` when the model
//! has a join and `(s, t) ∈ R` otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::Model;
use crate::props;
use crate::report::Status;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Term {
    Var(usize),
    One,
    Zero,
    Mul(Box<Term>, Box<Term>),
    Arrow(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    Eq,
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Statement(String),
    Atomic { lhs: Term, rel: Relation, rhs: Term },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Property {
    source: String,
    kind: Kind,
    vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    One,
    Zero,
    Star,
    Arrow,
    Bar,
    Eq,
    Le,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(c) = it.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '*' | '·' => Tok::Star,
            '|' | '⊔' => Tok::Bar,
            '→' => Tok::Arrow,
            '⪯' | '≤' => Tok::Le,
            '=' => Tok::Eq,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '1' => Tok::One,
            '0' => Tok::Zero,
            '-' if it.peek() == Some(&'>') => {
                it.next();
                Tok::Arrow
            }
            '<' if it.peek() == Some(&'=') => {
                it.next();
                Tok::Le
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = c.to_string();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        name.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                Tok::Var(name)
            }
            other => return Err(Error::PropertyParse(format!("unexpected character {other:?}"))),
        };
        out.push(tok);
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn arrow(&mut self) -> Result<Term> {
        let lhs = self.join()?;
        if self.eat(&Tok::Arrow) {
            Ok(Term::Arrow(Box::new(lhs), Box::new(self.arrow()?)))
        } else {
            Ok(lhs)
        }
    }

    fn join(&mut self) -> Result<Term> {
        let mut t = self.mul()?;
        while self.eat(&Tok::Bar) {
            t = Term::Join(Box::new(t), Box::new(self.mul()?));
        }
        Ok(t)
    }

    fn mul(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Star) {
            t = Term::Mul(Box::new(t), Box::new(self.atom()?));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        let tok = self.peek().cloned().ok_or_else(|| Error::PropertyParse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::One => Ok(Term::One),
            Tok::Zero => Ok(Term::Zero),
            Tok::Var(name) => {
                let idx = match self.vars.iter().position(|v| *v == name) {
                    Some(i) => i,
                    None => {
                        self.vars.push(name);
                        self.vars.len() - 1
                    }
                };
                Ok(Term::Var(idx))
            }
            Tok::Open => {
                let t = self.arrow()?;
                if !self.eat(&Tok::Close) {
                    return Err(Error::PropertyParse("missing ')'".into()));
                }
                Ok(t)
            }
            other => Err(Error::PropertyParse(format!("unexpected token {other:?}"))),
        }
    }
}

fn looks_like_id(s: &str) -> bool {
    s.contains('.') && s.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '.' || c == '-')
}

impl Property {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if looks_like_id(s) {
            if !props::is_statement_id(s) {
                return Err(Error::UnknownStatement(s.to_string()));
            }
            return Ok(Property { source: s.to_string(), kind: Kind::Statement(s.to_string()), vars: Vec::new() });
        }
        let mut p = Parser { toks: tokenize(s)?, pos: 0, vars: Vec::new() };
        let lhs = p.arrow()?;
        let rel = if p.eat(&Tok::Eq) {
            Relation::Eq
        } else if p.eat(&Tok::Le) {
            Relation::Le
        } else {
            return Err(Error::PropertyParse("expected '=' or '<='".into()));
        };
        let rhs = p.arrow()?;
        if p.pos != p.toks.len() {
            return Err(Error::PropertyParse(format!("trailing input after token {}", p.pos)));
        }
        Ok(Property { source: s.to_string(), kind: Kind::Atomic { lhs, rel, rhs }, vars: p.vars })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Variables in order of first occurrence; witnesses list their values in this order.
    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn statement_id(&self) -> Option<&str> {
        match &self.kind {
            Kind::Statement(id) => Some(id),
            Kind::Atomic { .. } => None,
        }
    }

    pub fn uses_join(&self) -> bool {
        match &self.kind {
            Kind::Atomic { lhs, rhs, .. } => {
                has(lhs, &|t| matches!(t, Term::Join(..))) || has(rhs, &|t| matches!(t, Term::Join(..)))
            }
            Kind::Statement(_) => false,
        }
    }

    pub fn uses_zero(&self) -> bool {
        match &self.kind {
            Kind::Atomic { lhs, rhs, .. } => has(lhs, &|t| *t == Term::Zero) || has(rhs, &|t| *t == Term::Zero),
            Kind::Statement(_) => false,
        }
    }

    /// First failing assignment (variables ascending, lexicographic), or for
    /// a statement id its witness when it fails. `None` means the property holds.
    pub fn violation(&self, m: &Model) -> Result<Option<Vec<usize>>> {
        match &self.kind {
            Kind::Statement(id) => {
                let r = props::report_for(id, m)?;
                let s = r.get(id).expect("group reports its ids");
                Ok((s.status == Status::Fails).then(|| s.witness.clone().unwrap_or_default()))
            }
            Kind::Atomic { lhs, rel, rhs } => {
                if self.uses_join() && m.join_table().is_none() {
                    return Err(Error::MissingJoin);
                }
                if self.uses_zero() && m.zero().is_none() {
                    return Err(Error::MissingZero);
                }
                let n = m.size();
                let k = self.vars.len();
                let mut env = vec![0usize; k];
                loop {
                    let (a, b) = (eval(lhs, m, &env), eval(rhs, m, &env));
                    let ok = match rel {
                        Relation::Eq => a == b,
                        Relation::Le => match m.join_table() {
                            Some(j) => j.get(a, b) == b,
                            None => m.rel(a, b),
                        },
                    };
                    if !ok {
                        return Ok(Some(env));
                    }
                    let mut i = k;
                    loop {
                        if i == 0 {
                            return Ok(None);
                        }
                        i -= 1;
                        env[i] += 1;
                        if env[i] < n {
                            break;
                        }
                        env[i] = 0;
                    }
                }
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn has(t: &Term, pred: &dyn Fn(&Term) -> bool) -> bool {
    pred(t)
        || match t {
            Term::Mul(a, b) | Term::Arrow(a, b) | Term::Join(a, b) => has(a, pred) || has(b, pred),
            _ => false,
        }
}

fn eval(t: &Term, m: &Model, env: &[usize]) -> usize {
    match t {
        Term::Var(i) => env[*i],
        Term::One => m.unit(),
        Term::Zero => m.zero().expect("checked before evaluation"),
        Term::Mul(a, b) => m.mul(eval(a, m, env), eval(b, m, env)),
        Term::Arrow(a, b) => m.arrow(eval(a, m, env), eval(b, m, env)),
        Term::Join(a, b) => m.join_table().expect("checked before evaluation").get(eval(a, m, env), eval(b, m, env)),
    }
}
