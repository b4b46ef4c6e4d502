//! Datatype maps: lexical spaces, lexical-to-value mappings, value-space
//! relations, definiteness, and literal normalization.

mod config;
mod normalize;
pub mod xml;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::model::Term;
use crate::ns::{rdf, xsd};

pub use config::{DatatypeConfig, DatatypeSpec, EnumValues, KindSpec, RelationSpec, RewriteSpec};
pub use normalize::{normalize_graph, LiteralClass, Normalizer};

/// Canonical representation of a data value. Two lexical forms denote the
/// same value iff their tokens are equal. `space` separates values that can
/// never coincide (strings, numbers, booleans, XML, custom spaces).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ValueToken {
    pub space: String,
    pub key: String,
}

impl ValueToken {
    pub fn new(space: &str, key: impl Into<String>) -> Self {
        ValueToken {
            space: space.to_string(),
            key: key.into(),
        }
    }
}

impl fmt::Display for ValueToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.space, self.key)
    }
}

pub const STRING_SPACE: &str = "string";
pub const NUMBER_SPACE: &str = "number";
pub const BOOLEAN_SPACE: &str = "boolean";
pub const XML_SPACE: &str = "xml";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Typedness {
    WellTyped(ValueToken),
    IllTyped,
    /// The datatype URI is not in the domain of the map.
    Unknown,
}

#[derive(Debug, Clone)]
enum Kind {
    Xml,
    String,
    Integer,
    Decimal,
    Boolean,
    Regex {
        pattern: Regex,
        rewrite: Vec<(Regex, String)>,
        space: String,
    },
    Enum {
        values: BTreeMap<String, String>,
        space: String,
    },
}

/// A datatype: lexical space, lexical-to-value mapping and value space.
#[derive(Debug, Clone)]
pub struct Datatype {
    pub uri: String,
    kind: Kind,
    infinite: bool,
    /// Datatype URIs whose denotation lies in this datatype's value space.
    contains_datatypes: Vec<String>,
}

fn integer_key(s: &str) -> Option<String> {
    let (neg, digits) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let trimmed = digits.trim_start_matches('0');
    Some(match (trimmed.is_empty(), neg) {
        (true, _) => "0".to_string(),
        (false, true) => format!("-{trimmed}"),
        (false, false) => trimmed.to_string(),
    })
}

fn decimal_key(s: &str) -> Option<String> {
    let (neg, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let int = int.trim_start_matches('0');
    let frac = frac.trim_end_matches('0');
    let int = if int.is_empty() { "0" } else { int };
    let magnitude = if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    };
    Some(if neg && magnitude != "0" {
        format!("-{magnitude}")
    } else {
        magnitude
    })
}

fn boolean_key(s: &str) -> Option<String> {
    match s {
        "true" | "1" => Some("true".into()),
        "false" | "0" => Some("false".into()),
        _ => None,
    }
}

impl Datatype {
    pub fn xml_literal() -> Self {
        Self::builtin(rdf::XML_LITERAL, Kind::Xml, true)
    }

    pub fn string() -> Self {
        Self::builtin(xsd::STRING, Kind::String, true)
    }

    pub fn integer() -> Self {
        Self::builtin(xsd::INTEGER, Kind::Integer, true)
    }

    pub fn decimal() -> Self {
        Self::builtin(xsd::DECIMAL, Kind::Decimal, true)
    }

    pub fn boolean() -> Self {
        Self::builtin(xsd::BOOLEAN, Kind::Boolean, false)
    }

    /// The built-in datatype named by `uri`, if any.
    pub fn by_uri(uri: &str) -> Option<Self> {
        match uri {
            rdf::XML_LITERAL => Some(Self::xml_literal()),
            xsd::STRING => Some(Self::string()),
            xsd::INTEGER => Some(Self::integer()),
            xsd::DECIMAL => Some(Self::decimal()),
            xsd::BOOLEAN => Some(Self::boolean()),
            _ => None,
        }
    }

    fn builtin(uri: &str, kind: Kind, infinite: bool) -> Self {
        Datatype {
            uri: uri.to_string(),
            kind,
            infinite,
            contains_datatypes: Vec::new(),
        }
    }

    /// A datatype whose lexical space is the full match of `pattern` and
    /// whose value key is obtained by applying `rewrite` in order.
    pub fn regex(
        uri: &str,
        pattern: &str,
        rewrite: Vec<(String, String)>,
        space: Option<&str>,
        infinite: bool,
    ) -> Result<Self, regex::Error> {
        let pattern = Regex::new(&format!("^(?:{pattern})$"))?;
        let rewrite = rewrite
            .into_iter()
            .map(|(find, replace)| Regex::new(&find).map(|r| (r, replace)))
            .collect::<Result<_, _>>()?;
        Ok(Datatype {
            uri: uri.to_string(),
            kind: Kind::Regex {
                pattern,
                rewrite,
                space: space.unwrap_or(uri).to_string(),
            },
            infinite,
            contains_datatypes: Vec::new(),
        })
    }

    /// A finite datatype; `values` maps each lexical form to its value key.
    pub fn enumeration(uri: &str, values: BTreeMap<String, String>, space: Option<&str>) -> Self {
        Datatype {
            uri: uri.to_string(),
            kind: Kind::Enum {
                values,
                space: space.unwrap_or(uri).to_string(),
            },
            infinite: false,
            contains_datatypes: Vec::new(),
        }
    }

    pub fn with_contained_datatypes(mut self, uris: Vec<String>) -> Self {
        self.contains_datatypes = uris;
        self
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self.kind, Kind::Regex { .. } | Kind::Enum { .. })
    }

    pub fn is_infinite(&self) -> bool {
        self.infinite
    }

    pub fn space(&self) -> &str {
        match &self.kind {
            Kind::Xml => XML_SPACE,
            Kind::String => STRING_SPACE,
            Kind::Integer | Kind::Decimal => NUMBER_SPACE,
            Kind::Boolean => BOOLEAN_SPACE,
            Kind::Regex { space, .. } | Kind::Enum { space, .. } => space,
        }
    }

    pub fn lexical_test(&self, s: &str) -> bool {
        self.value_key(s).is_some()
    }

    /// The value of lexical form `s`, or `None` if `s` is not in the lexical space.
    pub fn value_key(&self, s: &str) -> Option<ValueToken> {
        let key = match &self.kind {
            Kind::Xml => xml::is_well_formed_content(s).then(|| s.to_string()),
            Kind::String => Some(s.to_string()),
            Kind::Integer => integer_key(s),
            Kind::Decimal => decimal_key(s),
            Kind::Boolean => boolean_key(s),
            Kind::Regex { pattern, rewrite, .. } => pattern.is_match(s).then(|| {
                rewrite
                    .iter()
                    .fold(s.to_string(), |acc, (re, rep)| re.replace_all(&acc, rep.as_str()).into_owned())
            }),
            Kind::Enum { values, .. } => values.get(s).cloned(),
        }?;
        Some(ValueToken::new(self.space(), key))
    }

    /// Whether `v` is in the value space of this datatype.
    pub fn contains_value(&self, v: &ValueToken) -> bool {
        if v.space != self.space() {
            return false;
        }
        match &self.kind {
            Kind::Xml | Kind::String | Kind::Decimal | Kind::Boolean => true,
            Kind::Integer => !v.key.contains('.'),
            Kind::Regex { .. } => self.value_key(&v.key).is_some_and(|t| t == *v),
            Kind::Enum { values, .. } => values.values().any(|k| *k == v.key),
        }
    }
}

/// Relation between the value spaces of two datatypes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueRelation {
    Disjoint,
    InfiniteOverlap,
    FiniteOverlap,
}

/// Partial map from URIs to datatypes, with declared value-space relations.
#[derive(Debug, Clone, Default)]
pub struct DatatypeMap {
    entries: BTreeMap<String, Datatype>,
    relations: BTreeMap<(String, String), ValueRelation>,
}

/// Definiteness check outcome; definite iff there are no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefinitenessReport {
    pub violations: Vec<String>,
}

impl DefinitenessReport {
    pub fn is_definite(&self) -> bool {
        self.violations.is_empty()
    }
}

fn ordered_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl DatatypeMap {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `rdf:XMLLiteral`, `xsd:string`, `xsd:integer` and `xsd:decimal`.
    pub fn xsd() -> Self {
        let mut m = Self::empty();
        for dt in [
            Datatype::xml_literal(),
            Datatype::string(),
            Datatype::integer(),
            Datatype::decimal(),
        ] {
            m.insert(dt);
        }
        m
    }

    pub fn insert(&mut self, dt: Datatype) {
        self.entries.insert(dt.uri.clone(), dt);
    }

    pub fn set_relation(&mut self, a: &str, b: &str, rel: ValueRelation) {
        self.relations.insert(ordered_pair(a, b), rel);
    }

    pub fn get(&self, uri: &str) -> Option<&Datatype> {
        self.entries.get(uri)
    }

    pub fn contains(&self, uri: &str) -> bool {
        self.entries.contains_key(uri)
    }

    pub fn uris(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_xml_literal(&self) -> bool {
        self.get(rdf::XML_LITERAL).is_some_and(|d| matches!(d.kind, Kind::Xml))
    }

    /// Typedness of a typed literal; other terms are `Unknown`.
    pub fn well_typed(&self, lit: &Term) -> Typedness {
        let Term::TypedLiteral { lexical, datatype } = lit else {
            return Typedness::Unknown;
        };
        match self.get(datatype) {
            None => Typedness::Unknown,
            Some(dt) => match dt.value_key(lexical) {
                Some(v) => Typedness::WellTyped(v),
                None => Typedness::IllTyped,
            },
        }
    }

    /// The value denoted by a literal: untagged plain literals denote
    /// strings, well-typed literals their L2V image. Tagged plain literals,
    /// ill-typed and unknown-typed literals have no value here.
    pub fn literal_value(&self, lit: &Term) -> Option<ValueToken> {
        match lit {
            Term::PlainLiteral(s, None) => Some(ValueToken::new(STRING_SPACE, s.clone())),
            Term::TypedLiteral { .. } => match self.well_typed(lit) {
                Typedness::WellTyped(v) => Some(v),
                _ => None,
            },
            _ => None,
        }
    }

    /// Whether value `v` is in the value space of the datatype named `uri`.
    pub fn member(&self, v: &ValueToken, uri: &str) -> bool {
        self.get(uri).is_some_and(|d| d.contains_value(v))
    }

    /// Relation between the value spaces of two mapped datatypes. Values in
    /// different spaces never coincide; two built-ins are related by their
    /// kinds; otherwise the declared relation is used.
    pub fn relation(&self, a: &str, b: &str) -> Option<ValueRelation> {
        let (da, db) = (self.get(a)?, self.get(b)?);
        if a == b {
            return Some(if da.infinite {
                ValueRelation::InfiniteOverlap
            } else {
                ValueRelation::FiniteOverlap
            });
        }
        if let Some(r) = self.relations.get(&ordered_pair(a, b)) {
            return Some(*r);
        }
        if da.space() != db.space() {
            return Some(ValueRelation::Disjoint);
        }
        match (&da.kind, &db.kind) {
            (Kind::Integer | Kind::Decimal, Kind::Integer | Kind::Decimal)
            | (Kind::String, Kind::String)
            | (Kind::Xml, Kind::Xml) => Some(ValueRelation::InfiniteOverlap),
            (Kind::Boolean, Kind::Boolean) => Some(ValueRelation::FiniteOverlap),
            _ => None,
        }
    }

    pub fn disjoint(&self, a: &str, b: &str) -> bool {
        self.relation(a, b) == Some(ValueRelation::Disjoint)
    }

    /// Check the definiteness conditions: infinite value spaces, pairwise
    /// disjoint or infinitely overlapping value spaces, and no datatype in
    /// another's value space.
    pub fn definiteness(&self) -> DefinitenessReport {
        let mut violations = Vec::new();
        for dt in self.entries.values() {
            if !dt.infinite {
                violations.push(format!("finite value space: <{}>", dt.uri));
            }
            for inner in &dt.contains_datatypes {
                violations.push(format!("datatype <{inner}> is in the value space of <{}>", dt.uri));
            }
        }
        let uris: Vec<&String> = self.entries.keys().collect();
        for (i, a) in uris.iter().enumerate() {
            for b in &uris[i + 1..] {
                match self.relation(a, b) {
                    Some(ValueRelation::Disjoint | ValueRelation::InfiniteOverlap) => {}
                    Some(ValueRelation::FiniteOverlap) => {
                        violations.push(format!("finite overlap: <{a}> and <{b}>"))
                    }
                    None => violations.push(format!("undeclared value-space relation: <{a}> and <{b}>")),
                }
            }
        }
        DefinitenessReport { violations }
    }

    pub fn is_definite(&self) -> bool {
        self.definiteness().is_definite()
    }
}

fn literal_rank(t: &Term) -> u8 {
    match t {
        Term::PlainLiteral(_, None) => 0,
        Term::PlainLiteral(_, Some(_)) => 1,
        Term::TypedLiteral { .. } => 2,
        Term::Uri(_) => 3,
        Term::Blank(_) => 4,
    }
}

fn literal_parts(t: &Term) -> (&str, &str) {
    match t {
        Term::PlainLiteral(s, tag) => (s, tag.as_deref().unwrap_or("")),
        Term::TypedLiteral { lexical, datatype } => (lexical, datatype),
        Term::Uri(u) | Term::Blank(u) => (u, ""),
    }
}

/// Strict total order on literals: untagged plain < tagged plain < typed,
/// then lexicographic on (string, tag or datatype URI).
pub fn literal_order(a: &Term, b: &Term) -> Ordering {
    literal_rank(a)
        .cmp(&literal_rank(b))
        .then_with(|| literal_parts(a).cmp(&literal_parts(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn well_typed_examples() {
        let d = DatatypeMap::xsd();
        assert_eq!(
            d.well_typed(&Term::typed("1", xsd::INTEGER)),
            Typedness::WellTyped(ValueToken::new(NUMBER_SPACE, "1"))
        );
        assert_eq!(d.well_typed(&Term::typed("<notXML", rdf::XML_LITERAL)), Typedness::IllTyped);
        assert_eq!(d.well_typed(&Term::typed("1", "http://example.org/myBool")), Typedness::Unknown);
        assert_eq!(d.well_typed(&Term::typed("1.5", xsd::INTEGER)), Typedness::IllTyped);
    }

    #[test]
    fn numeric_keys() {
        assert_eq!(integer_key("007").as_deref(), Some("7"));
        assert_eq!(integer_key("-0").as_deref(), Some("0"));
        assert_eq!(integer_key("+12").as_deref(), Some("12"));
        assert_eq!(integer_key("-12").as_deref(), Some("-12"));
        assert_eq!(integer_key(""), None);
        assert_eq!(integer_key("-"), None);
        assert_eq!(decimal_key("1.0").as_deref(), Some("1"));
        assert_eq!(decimal_key(".5").as_deref(), Some("0.5"));
        assert_eq!(decimal_key("-0.00").as_deref(), Some("0"));
        assert_eq!(decimal_key("010.250").as_deref(), Some("10.25"));
        assert_eq!(decimal_key("1.").as_deref(), Some("1"));
        assert_eq!(decimal_key("."), None);
        assert_eq!(decimal_key("1e3"), None);
    }

    #[test]
    fn integer_embeds_into_decimal() {
        let d = DatatypeMap::xsd();
        let i = d.literal_value(&Term::typed("1", xsd::INTEGER)).unwrap();
        let a = d.literal_value(&Term::typed("1", xsd::DECIMAL)).unwrap();
        let b = d.literal_value(&Term::typed("1.0", xsd::DECIMAL)).unwrap();
        assert_eq!(i, a);
        assert_eq!(a, b);
        assert!(d.member(&b, xsd::INTEGER));
        let half = d.literal_value(&Term::typed("0.5", xsd::DECIMAL)).unwrap();
        assert!(!d.member(&half, xsd::INTEGER));
        assert!(d.member(&half, xsd::DECIMAL));
    }

    #[test]
    fn strings_and_plain_literals() {
        let d = DatatypeMap::xsd();
        assert_eq!(d.literal_value(&Term::plain("a")), d.literal_value(&Term::typed("a", xsd::STRING)));
        assert_eq!(d.literal_value(&Term::lang("a", "en")), None);
    }

    #[test]
    fn definiteness_examples() {
        let mut m = DatatypeMap::empty();
        for dt in [Datatype::string(), Datatype::integer(), Datatype::decimal()] {
            m.insert(dt);
        }
        assert!(m.is_definite());
        assert!(DatatypeMap::xsd().is_definite());
        assert!(DatatypeMap::empty().is_definite());

        let mut b = DatatypeMap::xsd();
        b.insert(Datatype::boolean());
        let report = b.definiteness();
        assert!(!report.is_definite());
        assert!(report.violations.iter().any(|v| v.contains("finite value space")));
    }

    #[test]
    fn builtin_relations() {
        let d = DatatypeMap::xsd();
        assert_eq!(d.relation(xsd::INTEGER, xsd::DECIMAL), Some(ValueRelation::InfiniteOverlap));
        assert!(d.disjoint(xsd::STRING, xsd::INTEGER));
        assert!(d.disjoint(xsd::STRING, rdf::XML_LITERAL));
        assert!(d.disjoint(rdf::XML_LITERAL, xsd::DECIMAL));
    }

    #[test]
    fn custom_relation_needed() {
        let mut m = DatatypeMap::xsd();
        m.insert(Datatype::regex("urn:dt:even", "[0-9]*[02468]", vec![], Some(NUMBER_SPACE), true).unwrap());
        assert!(!m.is_definite());
        m.set_relation("urn:dt:even", xsd::INTEGER, ValueRelation::InfiniteOverlap);
        m.set_relation("urn:dt:even", xsd::DECIMAL, ValueRelation::InfiniteOverlap);
        assert!(m.is_definite());
        m.insert(
            Datatype::regex("urn:dt:code", "[A-Z]+", vec![], None, true)
                .unwrap()
                .with_contained_datatypes(vec![xsd::STRING.to_string()]),
        );
        assert!(m.definiteness().violations.iter().any(|v| v.contains("is in the value space")));
    }

    #[test]
    fn ordering_examples() {
        let a = Term::plain("a");
        let a_str = Term::typed("a", xsd::STRING);
        assert_eq!(literal_order(&a, &a_str), Ordering::Less);
        assert_eq!(
            literal_order(&Term::typed("01", xsd::INTEGER), &Term::typed("1", xsd::INTEGER)),
            Ordering::Less
        );
        assert_eq!(literal_order(&a, &a), Ordering::Equal);
        assert_eq!(literal_order(&Term::plain("z"), &Term::lang("a", "en")), Ordering::Less);
    }

    fn arb_literal() -> impl Strategy<Value = Term> {
        prop_oneof![
            "[a-c]{0,2}".prop_map(Term::plain),
            ("[a-c]{0,2}", "en|fr").prop_map(|(s, t)| Term::lang(s, &t)),
            ("[+-]?[0-9]{1,3}", prop_oneof![Just(xsd::INTEGER), Just(xsd::DECIMAL)])
                .prop_map(|(s, u)| Term::typed(s, u)),
            "[+-]?[0-9]{0,2}\\.?[0-9]{0,2}".prop_map(|s| Term::typed(s, xsd::DECIMAL)),
            "[a-c1]{0,2}".prop_map(|s| Term::typed(s, xsd::STRING)),
        ]
    }

    proptest! {
        #[test]
        fn order_is_total_and_antisymmetric(a in arb_literal(), b in arb_literal(), c in arb_literal()) {
            prop_assert_eq!(literal_order(&a, &b), literal_order(&b, &a).reverse());
            prop_assert_eq!(literal_order(&a, &b) == Ordering::Equal, a == b);
            if literal_order(&a, &b) == Ordering::Less && literal_order(&b, &c) == Ordering::Less {
                prop_assert_eq!(literal_order(&a, &c), Ordering::Less);
            }
        }

        #[test]
        fn well_typed_values_are_members(lit in arb_literal()) {
            let d = DatatypeMap::xsd();
            if let (Typedness::WellTyped(v), Term::TypedLiteral { datatype, .. }) = (d.well_typed(&lit), &lit) {
                prop_assert!(d.member(&v, datatype));
            }
        }

        #[test]
        fn decimal_keys_are_canonical(s in "[+-]?[0-9]{0,3}(\\.[0-9]{0,3})?") {
            if let Some(k) = decimal_key(&s) {
                prop_assert_eq!(decimal_key(&k), Some(k.clone()));
                let parsed: f64 = s.parse().unwrap_or_else(|_| format!("0{s}").parse().unwrap_or(0.0));
                let canon: f64 = k.parse().unwrap();
                prop_assert!((parsed - canon).abs() < 1e-9);
            }
        }
    }
}
