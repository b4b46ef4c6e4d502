//! RDF terms, triples, graphs and vocabularies.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ns::{self, rdf, rdfs};

/// An RDF term.
///
/// The four variants are disjoint: a URI never equals a literal with the
/// same text, and a typed literal is an opaque `(lexical, datatype)` pair at
/// this layer. URI and blank-node text is non-empty; language tags are
/// stored lowercase.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Uri(String),
    PlainLiteral(String, Option<String>),
    TypedLiteral { lexical: String, datatype: String },
    Blank(String),
}

impl Term {
    pub fn uri(s: impl Into<String>) -> Self {
        Term::Uri(s.into())
    }

    pub fn blank(id: impl Into<String>) -> Self {
        Term::Blank(id.into())
    }

    pub fn plain(s: impl Into<String>) -> Self {
        Term::PlainLiteral(s.into(), None)
    }

    pub fn lang(s: impl Into<String>, tag: &str) -> Self {
        Term::PlainLiteral(s.into(), Some(tag.to_lowercase()))
    }

    pub fn typed(lexical: impl Into<String>, datatype: impl Into<String>) -> Self {
        Term::TypedLiteral {
            lexical: lexical.into(),
            datatype: datatype.into(),
        }
    }

    pub fn is_uri(&self) -> bool {
        matches!(self, Term::Uri(_))
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::PlainLiteral(..) | Term::TypedLiteral { .. })
    }

    pub fn as_uri(&self) -> Option<&str> {
        match self {
            Term::Uri(u) => Some(u),
            _ => None,
        }
    }

    pub fn is_uri_eq(&self, uri: &str) -> bool {
        self.as_uri() == Some(uri)
    }
}

pub(crate) fn escape_literal(s: &str, out: &mut impl fmt::Write) -> fmt::Result {
    for c in s.chars() {
        match c {
            '"' => out.write_str("\\\"")?,
            '\\' => out.write_str("\\\\")?,
            '\n' => out.write_str("\\n")?,
            '\r' => out.write_str("\\r")?,
            '\t' => out.write_str("\\t")?,
            c if (c as u32) < 0x20 => write!(out, "\\u{:04X}", c as u32)?,
            c => out.write_char(c)?,
        }
    }
    Ok(())
}

/// Terms serialize as their N-Triples text.
impl serde::Serialize for Term {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Uri(u) => write!(f, "<{u}>"),
            Term::Blank(b) => write!(f, "_:{b}"),
            Term::PlainLiteral(s, tag) => {
                f.write_str("\"")?;
                escape_literal(s, f)?;
                f.write_str("\"")?;
                if let Some(tag) = tag {
                    write!(f, "@{tag}")?;
                }
                Ok(())
            }
            Term::TypedLiteral { lexical, datatype } => {
                f.write_str("\"")?;
                escape_literal(lexical, f)?;
                write!(f, "\"^^<{datatype}>")
            }
        }
    }
}

/// A generalized triple: any term may occur in any position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Self {
        Triple {
            subject,
            predicate,
            object,
        }
    }

    /// Shorthand for a triple made of three URIs.
    pub fn uris(s: &str, p: &str, o: &str) -> Self {
        Triple::new(Term::uri(s), Term::uri(p), Term::uri(o))
    }

    pub fn terms(&self) -> [&Term; 3] {
        [&self.subject, &self.predicate, &self.object]
    }

    /// Subject is a URI or blank node and predicate a URI.
    pub fn is_normal(&self) -> bool {
        matches!(self.subject, Term::Uri(_) | Term::Blank(_)) && self.predicate.is_uri()
    }

    pub fn is_ground(&self) -> bool {
        self.terms().iter().all(|t| !t.is_blank())
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} .", self.subject, self.predicate, self.object)
    }
}

/// A finite set of generalized triples, iterated in sorted order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    triples: BTreeSet<Triple>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: Triple) -> bool {
        self.triples.insert(t)
    }

    pub fn contains(&self, t: &Triple) -> bool {
        self.triples.contains(t)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// The blank nodes of the graph, sorted by id.
    pub fn blank_nodes(&self) -> BTreeSet<String> {
        self.iter()
            .flat_map(|t| t.terms())
            .filter_map(|t| match t {
                Term::Blank(b) => Some(b.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn is_ground(&self) -> bool {
        self.iter().all(Triple::is_ground)
    }

    pub fn is_normal(&self) -> bool {
        self.iter().all(Triple::is_normal)
    }

    pub fn terms(&self) -> BTreeSet<&Term> {
        self.iter().flat_map(|t| t.terms()).collect()
    }

    pub fn union(&self, other: &Graph) -> Graph {
        self.iter().chain(other.iter()).cloned().collect()
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        Graph {
            triples: iter.into_iter().collect(),
        }
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        self.triples.extend(iter)
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

/// The names used by a set of graphs, partitioned into URIs, plain literals
/// and typed literals.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub uris: BTreeSet<String>,
    pub plain: BTreeSet<Term>,
    pub typed: BTreeSet<Term>,
}

impl Vocabulary {
    pub fn add(&mut self, t: &Term) {
        match t {
            Term::Uri(u) => {
                self.uris.insert(u.clone());
            }
            Term::PlainLiteral(..) => {
                self.plain.insert(t.clone());
            }
            Term::TypedLiteral { .. } => {
                self.typed.insert(t.clone());
            }
            Term::Blank(_) => {}
        }
    }

    pub fn literals(&self) -> impl Iterator<Item = &Term> {
        self.plain.iter().chain(self.typed.iter())
    }

    /// Every name of the vocabulary as a term.
    pub fn constants(&self) -> impl Iterator<Item = Term> + '_ {
        self.uris
            .iter()
            .map(|u| Term::Uri(u.clone()))
            .chain(self.literals().cloned())
    }
}

/// Collect the vocabulary of `graphs`; the RDF and RDFS vocabularies are
/// always included.
pub fn collect_vocabulary<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Vocabulary {
    let mut vocab = Vocabulary::default();
    for uri in rdf::VOCABULARY.iter().chain(rdfs::VOCABULARY) {
        vocab.uris.insert(uri.to_string());
    }
    for g in graphs {
        for t in g.iter().flat_map(|t| t.terms()) {
            vocab.add(t);
        }
    }
    vocab
}

/// Largest `i` such that `rdf:_i` occurs in one of the graphs; at least 1.
pub fn max_container_index<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> usize {
    graphs
        .into_iter()
        .flat_map(|g| g.iter().flat_map(|t| t.terms()))
        .filter_map(|t| t.as_uri().and_then(ns::container_index))
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Base entailment regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseRegime {
    Simple,
    Rdf,
    Rdfs,
    Erdfs,
}

/// Datatype semantics layered on top of a base regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum DatatypeMode {
    #[default]
    None,
    DStar,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Regime {
    pub base: BaseRegime,
    pub datatypes: DatatypeMode,
}

impl Regime {
    pub const SIMPLE: Regime = Regime::new(BaseRegime::Simple, DatatypeMode::None);
    pub const RDF: Regime = Regime::new(BaseRegime::Rdf, DatatypeMode::None);
    pub const RDFS: Regime = Regime::new(BaseRegime::Rdfs, DatatypeMode::None);
    pub const ERDFS: Regime = Regime::new(BaseRegime::Erdfs, DatatypeMode::None);

    pub const fn new(base: BaseRegime, datatypes: DatatypeMode) -> Self {
        Regime { base, datatypes }
    }

    pub const fn with_datatypes(self, datatypes: DatatypeMode) -> Self {
        Regime { datatypes, ..self }
    }
}

impl fmt::Display for BaseRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseRegime::Simple => "simple",
            BaseRegime::Rdf => "rdf",
            BaseRegime::Rdfs => "rdfs",
            BaseRegime::Erdfs => "erdfs",
        })
    }
}

impl fmt::Display for DatatypeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DatatypeMode::None => "none",
            DatatypeMode::DStar => "dstar",
            DatatypeMode::D => "d",
        })
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.datatypes {
            DatatypeMode::None => write!(f, "{}", self.base),
            DatatypeMode::DStar => write!(f, "{}-D*", self.base),
            DatatypeMode::D => write!(f, "{}-D", self.base),
        }
    }
}

impl FromStr for BaseRegime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "simple" | "s" => Ok(BaseRegime::Simple),
            "rdf" => Ok(BaseRegime::Rdf),
            "rdfs" => Ok(BaseRegime::Rdfs),
            "erdfs" => Ok(BaseRegime::Erdfs),
            other => Err(Error::Regime(other.to_string())),
        }
    }
}

impl FromStr for DatatypeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(DatatypeMode::None),
            "dstar" | "d*" => Ok(DatatypeMode::DStar),
            "d" => Ok(DatatypeMode::D),
            other => Err(Error::Unsupported(format!("datatype mode {other}"))),
        }
    }
}
