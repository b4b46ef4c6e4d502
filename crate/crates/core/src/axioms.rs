//! RDF and RDFS axiomatic triples.
//!
//! The triples are transcribed from the RDF and RDFS interpretation
//! conditions: `IS(s) ∈ IP` becomes `⟨s, rdf:type, rdf:Property⟩`,
//! `IS(s) ∈ ICEXT(IS(c))` becomes `⟨s, rdf:type, c⟩` and
//! `⟨IS(s), IS(o)⟩ ∈ IEXT(IS(p))` becomes `⟨s, p, o⟩`. Rows whose subject is
//! `rdf:_i` are templates instantiated for every container-membership index
//! up to the requested bound.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{BaseRegime, Triple};
use crate::ns::{container_property, expand_curie};

/// Placeholder subject for container-membership templates.
const CMP_I: &str = "rdf:_i";

/// RDF interpretation conditions, first row group.
const RDF_AXIOMS: &[(&str, &str, &str)] = &[
    ("rdf:type", "rdf:type", "rdf:Property"),
    ("rdf:subject", "rdf:type", "rdf:Property"),
    ("rdf:predicate", "rdf:type", "rdf:Property"),
    ("rdf:object", "rdf:type", "rdf:Property"),
    ("rdf:first", "rdf:type", "rdf:Property"),
    ("rdf:rest", "rdf:type", "rdf:Property"),
    ("rdf:value", "rdf:type", "rdf:Property"),
    (CMP_I, "rdf:type", "rdf:Property"),
    ("rdf:nil", "rdf:type", "rdf:List"),
];

/// RDFS interpretation conditions, axiomatic part.
const RDFS_AXIOMS: &[(&str, &str, &str)] = &[
    ("rdf:type", "rdfs:domain", "rdfs:Resource"),
    ("rdfs:domain", "rdfs:domain", "rdf:Property"),
    ("rdfs:range", "rdfs:domain", "rdf:Property"),
    ("rdfs:subPropertyOf", "rdfs:domain", "rdf:Property"),
    ("rdfs:subClassOf", "rdfs:domain", "rdfs:Class"),
    ("rdf:subject", "rdfs:domain", "rdf:Statement"),
    ("rdf:predicate", "rdfs:domain", "rdf:Statement"),
    ("rdf:object", "rdfs:domain", "rdf:Statement"),
    ("rdfs:member", "rdfs:domain", "rdfs:Resource"),
    ("rdf:first", "rdfs:domain", "rdf:List"),
    ("rdf:rest", "rdfs:domain", "rdf:List"),
    ("rdfs:seeAlso", "rdfs:domain", "rdfs:Resource"),
    ("rdfs:isDefinedBy", "rdfs:domain", "rdfs:Resource"),
    ("rdfs:comment", "rdfs:domain", "rdfs:Resource"),
    ("rdfs:label", "rdfs:domain", "rdfs:Resource"),
    ("rdf:value", "rdfs:domain", "rdfs:Resource"),
    (CMP_I, "rdfs:domain", "rdfs:Resource"),
    ("rdf:type", "rdfs:range", "rdfs:Class"),
    ("rdfs:domain", "rdfs:range", "rdfs:Class"),
    ("rdfs:range", "rdfs:range", "rdfs:Class"),
    ("rdfs:subPropertyOf", "rdfs:range", "rdf:Property"),
    ("rdfs:subClassOf", "rdfs:range", "rdfs:Class"),
    ("rdf:subject", "rdfs:range", "rdfs:Resource"),
    ("rdf:predicate", "rdfs:range", "rdfs:Resource"),
    ("rdf:object", "rdfs:range", "rdfs:Resource"),
    ("rdfs:member", "rdfs:range", "rdfs:Resource"),
    ("rdf:first", "rdfs:range", "rdfs:Resource"),
    ("rdf:rest", "rdfs:range", "rdf:List"),
    ("rdfs:seeAlso", "rdfs:range", "rdfs:Resource"),
    ("rdfs:isDefinedBy", "rdfs:range", "rdfs:Resource"),
    ("rdfs:comment", "rdfs:range", "rdfs:Literal"),
    ("rdfs:label", "rdfs:range", "rdfs:Literal"),
    ("rdf:value", "rdfs:range", "rdfs:Resource"),
    (CMP_I, "rdfs:range", "rdfs:Resource"),
    ("rdf:Alt", "rdfs:subClassOf", "rdfs:Container"),
    ("rdf:Bag", "rdfs:subClassOf", "rdfs:Container"),
    ("rdf:Seq", "rdfs:subClassOf", "rdfs:Container"),
    ("rdfs:ContainerMembershipProperty", "rdfs:subClassOf", "rdf:Property"),
    ("rdfs:isDefinedBy", "rdfs:subPropertyOf", "rdfs:seeAlso"),
    ("rdf:XMLLiteral", "rdf:type", "rdfs:Datatype"),
    ("rdf:XMLLiteral", "rdfs:subClassOf", "rdfs:Literal"),
    ("rdfs:Datatype", "rdfs:subClassOf", "rdfs:Class"),
    (CMP_I, "rdf:type", "rdfs:ContainerMembershipProperty"),
];

fn instantiate(rows: &[(&str, &str, &str)], max_container_index: usize, out: &mut BTreeSet<Triple>) {
    for row in rows {
        let (p, o) = (expand_curie(row.1), expand_curie(row.2));
        if row.0 == CMP_I {
            for i in 1..=max_container_index.max(1) {
                out.insert(Triple::uris(&container_property(i), &p, &o));
            }
        } else {
            out.insert(Triple::uris(&expand_curie(row.0), &p, &o));
        }
    }
}

/// The axiomatic triples of `regime`, with container-membership properties
/// `rdf:_1 … rdf:_n` for `n = max(max_container_index, 1)`.
pub fn axiomatic_triples(regime: BaseRegime, max_container_index: usize) -> Result<BTreeSet<Triple>> {
    let mut out = BTreeSet::new();
    match regime {
        BaseRegime::Rdf => instantiate(RDF_AXIOMS, max_container_index, &mut out),
        BaseRegime::Rdfs => {
            instantiate(RDF_AXIOMS, max_container_index, &mut out);
            instantiate(RDFS_AXIOMS, max_container_index, &mut out);
        }
        other => return Err(Error::Regime(other.to_string())),
    }
    Ok(out)
}

/// A regime together with a container-membership bound; see [`axiomatic_triples`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomaticTripleSet {
    pub regime: BaseRegime,
    pub max_container_index: usize,
}

impl AxiomaticTripleSet {
    pub fn triples(&self) -> Result<BTreeSet<Triple>> {
        axiomatic_triples(self.regime, self.max_container_index)
    }
}
