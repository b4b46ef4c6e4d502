//! N-Triples parsing and serialization.
//!
//! The parser accepts the N-Triples core with generalized positions (any term
//! anywhere) plus a few Turtle conveniences: `@prefix`/`PREFIX` directives,
//! prefixed names, the default prefixes `rdf:`, `rdfs:`, `xsd:` and `owl:`,
//! and the keyword `a` for `rdf:type` in predicate position. Statements may
//! span lines; `#` starts a comment.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::{Graph, Term, Triple};
use crate::ns::{rdf, DEFAULT_PREFIXES};

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    prefixes: BTreeMap<String, String>,
}

type PResult<T> = std::result::Result<T, Error>;

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            prefixes: DEFAULT_PREFIXES
                .iter()
                .map(|(p, iri)| (p.to_string(), iri.to_string()))
                .collect(),
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.bump();
                Ok(())
            }
            Some(x) => self.err(format!("expected '{c}', found '{x}'")),
            None => self.err(format!("expected '{c}', found end of input")),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c))
    }

    fn iri_ref(&mut self) -> PResult<String> {
        self.expect('<')?;
        let mut out = String::new();
        loop {
            match self.peek() {
                None => return self.err("unterminated IRI"),
                Some('>') => {
                    self.bump();
                    break;
                }
                Some('\\') => {
                    self.bump();
                    out.push(self.unicode_escape()?);
                }
                Some(c) if c.is_whitespace() || "<\"{}|^`".contains(c) => {
                    return self.err(format!("character '{}' not allowed in IRI", c.escape_default()));
                }
                Some(c) => {
                    self.bump();
                    out.push(c);
                }
            }
        }
        if out.is_empty() {
            return self.err("empty IRI");
        }
        Ok(out)
    }

    fn hex(&mut self, n: usize) -> PResult<char> {
        let mut v = 0u32;
        for _ in 0..n {
            match self.peek().and_then(|c| c.to_digit(16)) {
                Some(d) => {
                    self.bump();
                    v = v * 16 + d;
                }
                None => return self.err("invalid hexadecimal escape"),
            }
        }
        char::from_u32(v).map_or_else(|| self.err("escape is not a Unicode scalar value"), Ok)
    }

    /// After a backslash: `uXXXX` or `UXXXXXXXX`.
    fn unicode_escape(&mut self) -> PResult<char> {
        match self.bump() {
            Some('u') => self.hex(4),
            Some('U') => self.hex(8),
            _ => self.err("invalid escape"),
        }
    }

    fn string(&mut self) -> PResult<String> {
        self.expect('"')?;
        let mut out = String::new();
        loop {
            match self.bump() {
                None | Some('\n') => return self.err("unterminated string"),
                Some('"') => return Ok(out),
                Some('\\') => {
                    let c = match self.peek() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u' | 'U') => {
                            out.push(self.unicode_escape()?);
                            continue;
                        }
                        _ => return self.err("invalid string escape"),
                    };
                    self.bump();
                    out.push(c);
                }
                Some(c) => out.push(c),
            }
        }
    }

    fn name_chars(&mut self, allow_dot: bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            let inner_dot = c == '.'
                && allow_dot
                && self
                    .peek_at(1)
                    .is_some_and(|n| n.is_alphanumeric() || n == '_' || n == '-' || n == ':');
            if c.is_alphanumeric() || c == '_' || c == '-' || c == '%' || inner_dot {
                self.bump();
                out.push(c);
            } else {
                break;
            }
        }
        out
    }

    fn prefixed_name(&mut self) -> PResult<String> {
        let (line, column) = (self.line, self.column);
        let prefix = self.name_chars(false);
        if self.peek() != Some(':') {
            return self.err(format!("expected a term, found '{prefix}'"));
        }
        self.bump();
        let local = self.name_chars(true);
        match self.prefixes.get(&prefix) {
            Some(iri) => Ok(format!("{iri}{local}")),
            None => Err(Error::Parse {
                line,
                column,
                message: format!("undeclared prefix '{prefix}:'"),
            }),
        }
    }

    fn term(&mut self, predicate: bool) -> PResult<Term> {
        match self.peek() {
            Some('<') => Ok(Term::uri(self.iri_ref()?)),
            Some('_') if self.peek_at(1) == Some(':') => {
                self.bump();
                self.bump();
                let id = self.name_chars(true);
                if id.is_empty() {
                    return self.err("empty blank node label");
                }
                Ok(Term::blank(id))
            }
            Some('"') => {
                let s = self.string()?;
                match self.peek() {
                    Some('@') => {
                        self.bump();
                        let tag = self.name_chars(false);
                        if tag.is_empty() {
                            return self.err("empty language tag");
                        }
                        Ok(Term::lang(s, &tag))
                    }
                    Some('^') => {
                        self.expect('^')?;
                        self.expect('^')?;
                        let dt = if self.peek() == Some('<') {
                            self.iri_ref()?
                        } else {
                            self.prefixed_name()?
                        };
                        Ok(Term::typed(s, dt))
                    }
                    _ => Ok(Term::plain(s)),
                }
            }
            Some('a') if predicate && self.peek_at(1).is_some_and(char::is_whitespace) => {
                self.bump();
                Ok(Term::uri(rdf::TYPE))
            }
            Some(c) if c.is_alphabetic() || c == ':' => Ok(Term::uri(self.prefixed_name()?)),
            Some(c) => self.err(format!("unexpected character '{}'", c.escape_default())),
            None => self.err("unexpected end of input"),
        }
    }

    fn prefix_directive(&mut self, turtle: bool) -> PResult<()> {
        self.skip_ws();
        let prefix = self.name_chars(false);
        self.expect(':')?;
        self.skip_ws();
        let iri = self.iri_ref()?;
        self.prefixes.insert(prefix, iri);
        if turtle {
            self.skip_ws();
            self.expect('.')?;
        }
        Ok(())
    }

    fn document(&mut self) -> PResult<Graph> {
        let mut g = Graph::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(g);
            }
            if self.starts_with("@prefix") {
                self.pos += 7;
                self.column += 7;
                self.prefix_directive(true)?;
                continue;
            }
            if self.starts_with("PREFIX") && self.peek_at(6).is_some_and(char::is_whitespace) {
                self.pos += 6;
                self.column += 6;
                self.prefix_directive(false)?;
                continue;
            }
            let s = self.term(false)?;
            self.skip_ws();
            let p = self.term(true)?;
            self.skip_ws();
            let o = self.term(false)?;
            self.skip_ws();
            self.expect('.')?;
            g.insert(Triple::new(s, p, o));
        }
    }
}

/// Parse a graph. Duplicate triples collapse.
pub fn parse_ntriples(text: &str) -> Result<Graph> {
    Parser::new(text).document()
}

/// Rename blank nodes to `b0, b1, …` in order of first occurrence.
pub fn canonical_blank_names(g: &Graph) -> Graph {
    let mut names: BTreeMap<String, String> = BTreeMap::new();
    let mut rename = |t: &Term| match t {
        Term::Blank(id) => {
            let n = names.len();
            Term::blank(names.entry(id.clone()).or_insert_with(|| format!("b{n}")).clone())
        }
        other => other.clone(),
    };
    g.iter()
        .map(|t| Triple::new(rename(&t.subject), rename(&t.predicate), rename(&t.object)))
        .collect()
}

/// One triple per line, sorted, with canonical blank-node labels.
pub fn serialize(g: &Graph) -> String {
    let lines: BTreeSet<String> = canonical_blank_names(g).iter().map(Triple::to_string).collect();
    let mut out = String::new();
    for l in lines {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
