//! The plain-text polynomial system format (version 1).
//!
//! ```text
//! # comment
//! ring: p=32003 vars=x,y order=grevlex
//! x^2 - y
//! x*y - 1
//! ```
//!
//! Terms are joined by `+` or `-`; a term is a `*`-separated product of
//! integers, variables and powers `v^k`. Coefficients are reduced mod `p`.

use std::fmt::Write as _;

use sigbasis_core::{FieldElem, FieldSpec, Monomial, MonomialOrder, Polynomial, Ring, Term};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown variable `{name}`")]
    UnknownVariable { line: usize, col: usize, name: String },
    #[error("line {line}: invalid modulus: {source}")]
    Modulus {
        line: usize,
        #[source]
        source: sigbasis_core::Error,
    },
    #[error("missing `ring:` header line")]
    MissingHeader,
}

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub ring: Ring,
    pub vars: Vec<String>,
    pub polys: Vec<Polynomial>,
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let mut header: Option<(Ring, Vec<String>)> = None;
    let mut polys = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        match &header {
            None => header = Some(parse_header(body, line)?),
            Some((ring, vars)) => polys.push(parse_polynomial(body, line, ring, vars)?),
        }
    }
    let (ring, vars) = header.ok_or(ParseError::MissingHeader)?;
    Ok(Input { ring, vars, polys })
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_header(body: &str, line: usize) -> Result<(Ring, Vec<String>), ParseError> {
    let lead = body.len() - body.trim_start().len();
    let rest = body.trim_start();
    let Some(fields) = rest.strip_prefix("ring:") else {
        return Err(syntax(line, lead + 1, "expected `ring:` header"));
    };
    let (mut p, mut vars, mut order) = (None, None, MonomialOrder::Grevlex);
    let mut offset = lead + "ring:".len();
    for piece in fields.split(char::is_whitespace) {
        let col = offset + 1;
        offset += piece.len() + 1;
        if piece.is_empty() {
            continue;
        }
        let Some((key, value)) = piece.split_once('=') else {
            return Err(syntax(line, col, format!("expected key=value, found `{piece}`")));
        };
        match key {
            "p" => {
                let v: u64 =
                    value.parse().map_err(|_| syntax(line, col, format!("invalid modulus `{value}`")))?;
                p = Some(FieldSpec::new(v).map_err(|source| ParseError::Modulus { line, source })?);
            }
            "vars" => {
                let names: Vec<String> = value.split(',').map(str::to_owned).collect();
                if let Some(bad) = names.iter().find(|v| !is_ident(v)) {
                    return Err(syntax(line, col, format!("invalid variable name `{bad}`")));
                }
                if let Some(dup) = names.iter().enumerate().find(|(i, v)| names[..*i].contains(v)) {
                    return Err(syntax(line, col, format!("variable `{}` declared twice", dup.1)));
                }
                vars = Some(names);
            }
            "order" => {
                order = match value {
                    "grevlex" => MonomialOrder::Grevlex,
                    "lex" => MonomialOrder::Lex,
                    _ => return Err(syntax(line, col, format!("unknown order `{value}`"))),
                }
            }
            _ => return Err(syntax(line, col, format!("unknown header key `{key}`"))),
        }
    }
    let p = p.ok_or_else(|| syntax(line, lead + 1, "header lacks p=<prime>"))?;
    let vars = vars.ok_or_else(|| syntax(line, lead + 1, "header lacks vars=<v1,...>"))?;
    Ok((Ring::new(vars.len(), p, order), vars))
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    ring: &'a Ring,
    vars: &'a [String],
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        syntax(self.line, self.pos + 1, msg)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// A `*`-separated product of factors.
    fn term(&mut self) -> Result<(FieldElem, Monomial), ParseError> {
        let f = &self.ring.field;
        let mut coeff = FieldElem::ONE;
        let mut mono = self.ring.one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = reduce_decimal(f, &self.digits());
                    coeff = f.mul(coeff, v);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let col = self.pos + 1;
                    let name = self.ident();
                    let Some(i) = self.vars.iter().position(|v| *v == name) else {
                        return Err(ParseError::UnknownVariable { line: self.line, col, name });
                    };
                    let mut k = 1u16;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        let d = self.digits();
                        if d.is_empty() {
                            return Err(self.err("expected exponent after `^`"));
                        }
                        k = d.parse().map_err(|_| self.err(format!("exponent `{d}` too large")))?;
                    }
                    mono = mono
                        .try_mul(&self.ring.var(i, k))
                        .map_err(|_| syntax(self.line, col, "exponent overflow"))?;
                }
                Some(c) => return Err(self.err(format!("unexpected `{c}`"))),
                None => return Err(self.err("expected a term")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((coeff, mono));
            }
        }
    }
}

fn reduce_decimal(f: &FieldSpec, digits: &str) -> FieldElem {
    digits.bytes().fold(FieldElem::ZERO, |acc, d| f.add(f.mul(acc, f.elem(10)), f.elem(u64::from(d - b'0'))))
}

/// Parses one polynomial line against a declared ring.
pub fn parse_polynomial(
    body: &str,
    line: usize,
    ring: &Ring,
    vars: &[String],
) -> Result<Polynomial, ParseError> {
    let mut cur = Cursor { chars: body.chars().collect(), pos: 0, line, ring, vars };
    let mut terms = Vec::new();
    loop {
        let mut negative = false;
        match cur.peek() {
            Some('+') => cur.pos += 1,
            Some('-') => {
                cur.pos += 1;
                negative = true;
            }
            None if !terms.is_empty() => break,
            Some(c) if !terms.is_empty() => return Err(cur.err(format!("expected `+` or `-`, found `{c}`"))),
            _ => {}
        }
        let (c, m) = cur.term()?;
        terms.push(Term::new(m, if negative { ring.field.neg(c) } else { c }));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Renders polynomials in the input grammar.
#[derive(Clone, Copy, Debug)]
pub struct Printer<'a> {
    pub vars: &'a [String],
    pub field: FieldSpec,
    /// Print coefficients as residues in `[0, p)` instead of symmetric.
    pub raw: bool,
}

impl Printer<'_> {
    pub fn polynomial(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_owned();
        }
        let p = self.field.modulus();
        let mut out = String::new();
        for (k, t) in f.terms().iter().enumerate() {
            let c = t.coeff.value();
            let (neg, mag) = if !self.raw && c > p / 2 { (true, p - c) } else { (false, c) };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            self.term(&mut out, mag, &t.mono);
        }
        out
    }

    fn term(&self, out: &mut String, mag: u32, m: &Monomial) {
        if m.is_one() {
            let _ = write!(out, "{mag}");
            return;
        }
        if mag != 1 {
            let _ = write!(out, "{mag}*");
        }
        let mut sep = "";
        for (name, &e) in self.vars.iter().zip(m.exps()) {
            match e {
                0 => continue,
                1 => {
                    let _ = write!(out, "{sep}{name}");
                }
                _ => {
                    let _ = write!(out, "{sep}{name}^{e}");
                }
            }
            sep = "*";
        }
    }
}

/// The header line for `ring` with the given variable names.
pub fn header(ring: &Ring, vars: &[String]) -> String {
    format!("ring: p={} vars={} order={}", ring.field.modulus(), vars.join(","), ring.order.name())
}

/// Name for the homogenizing variable: `h`, or `h` with trailing
/// underscores when that is already taken.
pub fn homogenizing_name(vars: &[String]) -> String {
    let mut name = "h".to_owned();
    while vars.contains(&name) {
        name.push('_');
    }
    name
}
