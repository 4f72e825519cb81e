//! The session language: one ring declaration followed by named bindings.
//!
//! ```text
//! ring p=2 vars=x,y order=grevlex
//! poly u = x^2*y + y^3
//! ideal I = {x^3*y, y^2}
//! matrix M = [[x, 0], [0, y]]
//! presentation P = (A=[[x]], B=[[x^2]])
//! splitting S = M
//! ```
//!
//! A statement ends at a newline outside brackets; `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use frobkit::{MonomialOrder, PolyMatrix, Polynomial, Ring};

/// Largest exponent accepted on a polynomial with more than one term.
const MAX_EXPANDED_EXPONENT: u64 = 4096;

/// Largest exponent of a single variable anywhere in a session.
const MAX_VARIABLE_EXPONENT: u64 = 1 << 20;

fn max_exponent(f: &Polynomial) -> u64 {
    f.terms()
        .iter()
        .flat_map(|(m, _)| m.exps().iter().copied())
        .max()
        .unwrap_or(0) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message} (at '{token}')")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Binding {
    Poly(Polynomial),
    Ideal(Vec<Polynomial>),
    Matrix(PolyMatrix),
    Presentation { a: PolyMatrix, b: PolyMatrix },
    Splitting(PolyMatrix),
}

impl Binding {
    pub fn kind(&self) -> &'static str {
        match self {
            Binding::Poly(_) => "poly",
            Binding::Ideal(_) => "ideal",
            Binding::Matrix(_) => "matrix",
            Binding::Presentation { .. } => "presentation",
            Binding::Splitting(_) => "splitting",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Session {
    pub ring: Arc<Ring>,
    pub bindings: Vec<(String, Binding)>,
}

impl Session {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ident,
    Int,
    Sym(char),
    Newline,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let tok = |kind, text: String| Token {
                kind,
                text,
                line: li + 1,
                col,
            };
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(tok(Kind::Ident, chars[start..i].iter().collect()));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(tok(Kind::Int, chars[start..i].iter().collect()));
            } else if "=,{}[]()+-*^".contains(c) {
                match c {
                    '[' | '(' | '{' => depth += 1,
                    ']' | ')' | '}' => depth -= 1,
                    _ => {}
                }
                out.push(tok(Kind::Sym(c), c.to_string()));
                i += 1;
            } else {
                return Err(ParseError {
                    line: li + 1,
                    col,
                    token: c.to_string(),
                    message: "unexpected character".into(),
                });
            }
        }
        if depth <= 0 {
            depth = 0;
            out.push(Token {
                kind: Kind::Newline,
                text: "end of line".into(),
                line: li + 1,
                col: chars.len() + 1,
            });
        }
    }
    let last = text.lines().count().max(1);
    out.push(Token {
        kind: Kind::Eof,
        text: "end of input".into(),
        line: last,
        col: 1,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    ring: Option<Arc<Ring>>,
    bindings: Vec<(String, Binding)>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != Kind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, tok: &Token, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: tok.line,
            col: tok.col,
            token: tok.text.clone(),
            message: message.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        let t = self.next();
        if t.kind == Kind::Sym(c) {
            Ok(t)
        } else {
            self.error(&t, format!("expected '{c}'"))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<Token, ParseError> {
        let t = self.next();
        if t.kind == Kind::Ident {
            Ok(t)
        } else {
            self.error(&t, format!("expected {what}"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().kind == Kind::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ring(&self) -> &Arc<Ring> {
        self.ring.as_ref().expect("ring declared")
    }

    fn session(mut self) -> Result<Session, ParseError> {
        loop {
            let t = self.next();
            match t.kind {
                Kind::Eof => break,
                Kind::Newline => continue,
                Kind::Ident => {}
                _ => return self.error(&t, "expected a declaration"),
            }
            match t.text.as_str() {
                "ring" => {
                    if self.ring.is_some() {
                        return self.error(&t, "ring declared twice");
                    }
                    self.ring_decl()?;
                }
                kw @ ("poly" | "ideal" | "matrix" | "presentation" | "splitting") => {
                    if self.ring.is_none() {
                        return self.error(&t, "ring must be declared before any binding");
                    }
                    let kw = kw.to_string();
                    self.binding(&kw)?;
                }
                _ => return self.error(&t, "unknown declaration"),
            }
            let end = self.next();
            if !matches!(end.kind, Kind::Newline | Kind::Eof) {
                return self.error(&end, "expected end of line");
            }
        }
        let Some(ring) = self.ring else {
            let t = self.tokens.last().expect("eof").clone();
            return Err(ParseError {
                line: t.line,
                col: t.col,
                token: t.text,
                message: "missing ring declaration".into(),
            });
        };
        Ok(Session {
            ring,
            bindings: self.bindings,
        })
    }

    fn ring_decl(&mut self) -> Result<(), ParseError> {
        let mut p: Option<(u32, Token)> = None;
        let mut vars: Vec<String> = Vec::new();
        let mut order = MonomialOrder::GrevLex;
        while self.peek().kind == Kind::Ident {
            let key = self.next();
            self.expect_sym('=')?;
            match key.text.as_str() {
                "p" => {
                    let t = self.next();
                    if t.kind != Kind::Int {
                        return self.error(&t, "expected an integer characteristic");
                    }
                    let Ok(v) = t.text.parse::<u32>() else {
                        return self.error(&t, "characteristic out of range");
                    };
                    p = Some((v, t));
                }
                "vars" => {
                    loop {
                        let v = self.expect_ident("a variable name")?;
                        if vars.contains(&v.text) {
                            return self.error(&v, "duplicate variable");
                        }
                        vars.push(v.text);
                        if !self.eat(',') {
                            break;
                        }
                    }
                }
                "order" => {
                    let t = self.expect_ident("lex or grevlex")?;
                    order = match t.text.as_str() {
                        "lex" => MonomialOrder::Lex,
                        "grevlex" => MonomialOrder::GrevLex,
                        _ => return self.error(&t, "unknown monomial order"),
                    };
                }
                _ => return self.error(&key, "unknown ring option"),
            }
        }
        let here = self.peek().clone();
        let Some((p, ptok)) = p else {
            return self.error(&here, "ring needs p=<prime>");
        };
        if vars.is_empty() {
            return self.error(&here, "ring needs vars=<names>");
        }
        if !frobkit::field::is_prime(p) {
            return self.error(&ptok, format!("{p} is not prime"));
        }
        match Ring::new(p, vars, order) {
            Ok(r) => {
                self.ring = Some(r);
                Ok(())
            }
            Err(e) => self.error(&ptok, e.to_string()),
        }
    }

    fn binding(&mut self, kw: &str) -> Result<(), ParseError> {
        let name = self.expect_ident("a name")?;
        if self.bindings.iter().any(|(n, _)| *n == name.text) {
            return self.error(&name, "duplicate name");
        }
        if self.ring().var_index(&name.text).is_some() {
            return self.error(&name, "name clashes with a variable");
        }
        self.expect_sym('=')?;
        let value = match kw {
            "poly" => Binding::Poly(self.expr()?),
            "ideal" => {
                self.expect_sym('{')?;
                let mut gens = Vec::new();
                if !self.eat('}') {
                    loop {
                        gens.push(self.expr()?);
                        if self.eat('}') {
                            break;
                        }
                        self.expect_sym(',')?;
                    }
                }
                Binding::Ideal(gens)
            }
            "matrix" => Binding::Matrix(self.matrix_expr()?.0),
            "presentation" => {
                self.expect_sym('(')?;
                let ka = self.expect_ident("A")?;
                if ka.text != "A" {
                    return self.error(&ka, "expected A");
                }
                self.expect_sym('=')?;
                let (a, _) = self.matrix_expr()?;
                self.expect_sym(',')?;
                let kb = self.expect_ident("B")?;
                if kb.text != "B" {
                    return self.error(&kb, "expected B");
                }
                self.expect_sym('=')?;
                let (b, btok) = self.matrix_expr()?;
                self.expect_sym(')')?;
                if !b.is_square() || b.rows() != a.rows() {
                    return self.error(
                        &btok,
                        format!("B must be {0}x{0} to match A, got {1}x{2}", a.rows(), b.rows(), b.cols()),
                    );
                }
                Binding::Presentation { a, b }
            }
            "splitting" => {
                let (b, tok) = self.matrix_expr()?;
                if !b.is_square() {
                    return self.error(&tok, "splitting matrix must be square");
                }
                Binding::Splitting(b)
            }
            _ => unreachable!("checked by caller"),
        };
        self.bindings.push((name.text, value));
        Ok(())
    }

    /// A matrix literal or the name of a matrix binding.
    fn matrix_expr(&mut self) -> Result<(PolyMatrix, Token), ParseError> {
        let start = self.peek().clone();
        if start.kind == Kind::Ident {
            self.next();
            return match self.bindings.iter().find(|(n, _)| *n == start.text) {
                Some((_, Binding::Matrix(m))) | Some((_, Binding::Splitting(m))) => Ok((m.clone(), start)),
                Some(_) => self.error(&start, "not a matrix"),
                None => self.error(&start, "unknown name"),
            };
        }
        self.expect_sym('[')?;
        let mut rows: Vec<Vec<Polynomial>> = Vec::new();
        loop {
            let rt = self.expect_sym('[')?;
            let mut row = Vec::new();
            loop {
                row.push(self.expr()?);
                if self.eat(']') {
                    break;
                }
                self.expect_sym(',')?;
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return self.error(&rt, "rows have different lengths");
                }
            }
            rows.push(row);
            if self.eat(']') {
                break;
            }
            self.expect_sym(',')?;
        }
        let m = PolyMatrix::from_rows(self.ring(), rows).expect("rows checked");
        Ok((m, start))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peek().kind == Kind::Sym('*') {
            let star = self.next();
            let rhs = self.unary()?;
            if max_exponent(&acc) + max_exponent(&rhs) > MAX_VARIABLE_EXPONENT {
                return self.error(&star, "exponent too large");
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.next();
        if t.kind != Kind::Int {
            return self.error(&t, "malformed exponent");
        }
        let Ok(e) = t.text.parse::<u64>() else {
            return self.error(&t, "malformed exponent");
        };
        let too_big = max_exponent(&base).max(1).checked_mul(e).is_none_or(|m| m > MAX_VARIABLE_EXPONENT);
        if too_big || (base.num_terms() > 1 && e > MAX_EXPANDED_EXPONENT) {
            return self.error(&t, "exponent too large");
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.next();
        let ring = self.ring().clone();
        match t.kind {
            Kind::Int => {
                let p = ring.p() as u64;
                let c = t.text.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(Polynomial::constant(&ring, c as i64))
            }
            Kind::Ident => {
                if let Some(i) = ring.var_index(&t.text) {
                    return Ok(Polynomial::var(&ring, i));
                }
                match self.bindings.iter().find(|(n, _)| *n == t.text) {
                    Some((_, Binding::Poly(f))) => Ok(f.clone()),
                    Some(_) => self.error(&t, "not a polynomial"),
                    None => self.error(&t, "unknown variable"),
                }
            }
            Kind::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => self.error(&t, "expected an expression"),
        }
    }
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let tokens = tokenize(text)?;
    Parser {
        tokens,
        pos: 0,
        ring: None,
        bindings: Vec::new(),
    }
    .session()
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &PolyMatrix) -> fmt::Result {
    write!(f, "{m}")
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.ring.order() {
            MonomialOrder::Lex => "lex",
            _ => "grevlex",
        };
        writeln!(
            f,
            "ring p={} vars={} order={}",
            self.ring.p(),
            self.ring.var_names().join(","),
            order
        )?;
        for (name, b) in &self.bindings {
            write!(f, "{} {} = ", b.kind(), name)?;
            match b {
                Binding::Poly(p) => write!(f, "{p}")?,
                Binding::Ideal(gens) => {
                    let g: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
                    write!(f, "{{{}}}", g.join(", "))?
                }
                Binding::Matrix(m) | Binding::Splitting(m) => write_matrix(f, m)?,
                Binding::Presentation { a, b } => write!(f, "(A={a}, B={b})")?,
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
