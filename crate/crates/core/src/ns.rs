//! Well-known namespaces and vocabulary URIs.

pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
pub const OWL: &str = "http://www.w3.org/2002/07/owl#";

/// Namespace for constants the embeddings introduce themselves.
pub const INTERNAL: &str = "urn:rdfent:";

/// Prefixes understood without an explicit `@prefix` declaration.
pub const DEFAULT_PREFIXES: &[(&str, &str)] = &[("rdf", RDF), ("rdfs", RDFS), ("xsd", XSD), ("owl", OWL)];

pub mod rdf {
    pub const TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const PROPERTY: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
    pub const XML_LITERAL: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#XMLLiteral";
    pub const NIL: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
    pub const LIST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#List";
    pub const STATEMENT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement";
    pub const SUBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#subject";
    pub const PREDICATE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate";
    pub const OBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#object";
    pub const FIRST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
    pub const REST: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
    pub const SEQ: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Seq";
    pub const BAG: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Bag";
    pub const ALT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Alt";
    pub const VALUE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#value";

    /// The fixed (non container-membership) RDF vocabulary.
    pub const VOCABULARY: &[&str] = &[
        TYPE, PROPERTY, XML_LITERAL, NIL, LIST, STATEMENT, SUBJECT, PREDICATE, OBJECT, FIRST,
        REST, SEQ, BAG, VALUE, ALT,
    ];
}

pub mod rdfs {
    pub const DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
    pub const RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";
    pub const RESOURCE: &str = "http://www.w3.org/2000/01/rdf-schema#Resource";
    pub const LITERAL: &str = "http://www.w3.org/2000/01/rdf-schema#Literal";
    pub const DATATYPE: &str = "http://www.w3.org/2000/01/rdf-schema#Datatype";
    pub const CLASS: &str = "http://www.w3.org/2000/01/rdf-schema#Class";
    pub const SUB_CLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
    pub const SUB_PROPERTY_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
    pub const MEMBER: &str = "http://www.w3.org/2000/01/rdf-schema#member";
    pub const CONTAINER: &str = "http://www.w3.org/2000/01/rdf-schema#Container";
    pub const LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
    pub const CONTAINER_MEMBERSHIP_PROPERTY: &str =
        "http://www.w3.org/2000/01/rdf-schema#ContainerMembershipProperty";
    pub const COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";
    pub const SEE_ALSO: &str = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
    pub const IS_DEFINED_BY: &str = "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";

    pub const VOCABULARY: &[&str] = &[
        DOMAIN,
        RANGE,
        RESOURCE,
        LITERAL,
        DATATYPE,
        CLASS,
        SUB_CLASS_OF,
        SUB_PROPERTY_OF,
        MEMBER,
        CONTAINER,
        LABEL,
        CONTAINER_MEMBERSHIP_PROPERTY,
        COMMENT,
        SEE_ALSO,
        IS_DEFINED_BY,
    ];
}

pub mod xsd {
    pub const STRING: &str = "http://www.w3.org/2001/XMLSchema#string";
    pub const INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";
    pub const DECIMAL: &str = "http://www.w3.org/2001/XMLSchema#decimal";
    pub const BOOLEAN: &str = "http://www.w3.org/2001/XMLSchema#boolean";
}

/// Class of ill-typed XML literals used by the extensional embedding.
pub const ILL_XML: &str = "urn:rdfent:illxml";

/// URI of the container-membership property `rdf:_i`.
pub fn container_property(i: usize) -> String {
    format!("{RDF}_{i}")
}

/// Index `i` if `uri` is `rdf:_i` with `i` a positive integer in canonical form.
pub fn container_index(uri: &str) -> Option<usize> {
    let digits = uri.strip_prefix(RDF)?.strip_prefix('_')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Expand `prefix:local` against the default prefixes; other strings are returned as-is.
pub fn expand_curie(s: &str) -> String {
    if let Some((prefix, local)) = s.split_once(':') {
        for (p, iri) in DEFAULT_PREFIXES {
            if *p == prefix {
                return format!("{iri}{local}");
            }
        }
    }
    s.to_string()
}
