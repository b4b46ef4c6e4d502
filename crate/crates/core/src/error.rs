use thiserror::Error;

/// Errors raised anywhere in the entailment pipeline.
///
/// Every variant carries a stable short code (see [`Error::code`]) which the
/// CLI prints alongside the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("axiomatic triples are only defined for the rdf and rdfs regimes, got {0}")]
    Regime(String),

    #[error("skolem constant {0} already occurs in the input")]
    Clash(String),

    #[error("formula is not Horn: {0}")]
    NotHorn(String),

    #[error("equality atom {0} cannot be evaluated; normalize datatypes first")]
    EqUnsupported(String),

    #[error("unsafe rule: variable {var} of the head does not occur in the body of {rule}")]
    Unsafe { var: String, rule: String },

    #[error("datatype map is not definite: {}", .0.join("; "))]
    NotDefinite(Vec<String>),

    #[error("datatype map does not map rdf:XMLLiteral")]
    NoXmlLiteral,

    #[error("graph does not use the RDF(S) vocabulary in the standard way: {}", .0.join("; "))]
    NotStandard(Vec<String>),

    #[error("entailed graph is not within the vocabulary of the entailing graph: {}", .0.join("; "))]
    Precondition(Vec<String>),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("graph is not ground: {0}")]
    NotGround(String),

    #[error("graph is higher-order: {}", .0.join("; "))]
    HigherOrder(Vec<String>),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("resource limit exceeded: {limit} (after {facts} facts, {rounds} rounds)")]
    ResourceLimit {
        limit: String,
        facts: usize,
        rounds: usize,
    },

    #[error("invalid datatype configuration: {0}")]
    Config(String),

    #[error("unsupported atom arity {0} (at most 3)")]
    Arity(usize),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Regime(_) => "E_REGIME",
            Error::Clash(_) => "E_CLASH",
            Error::NotHorn(_) => "E_NOT_HORN",
            Error::EqUnsupported(_) => "E_EQ_UNSUPPORTED",
            Error::Unsafe { .. } => "E_UNSAFE",
            Error::NotDefinite(_) => "E_NOT_DEFINITE",
            Error::NoXmlLiteral => "E_NO_XMLLITERAL",
            Error::NotStandard(_) => "E_NOT_STANDARD",
            Error::Precondition(_) => "E_PRECONDITION",
            Error::Unsupported(_) => "E_UNSUPPORTED",
            Error::NotGround(_) => "E_NOT_GROUND",
            Error::HigherOrder(_) => "E_HIGHER_ORDER",
            Error::Parse { .. } => "E_PARSE",
            Error::ResourceLimit { .. } => "E_RESOURCE_LIMIT",
            Error::Config(_) => "E_CONFIG",
            Error::Arity(_) => "E_ARITY",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
