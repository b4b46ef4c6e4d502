//! JSON datatype-map configuration.
//!
//! ```json
//! {
//!   "datatypes": [
//!     {"uri": "rdf:XMLLiteral", "kind": "builtin"},
//!     {"uri": "http://example.org/even", "kind": "regex",
//!      "pattern": "[0-9]*[02468]", "rewrite": [{"find": "^0+(.)", "replace": "$1"}],
//!      "space": "number"},
//!     {"uri": "http://example.org/color", "kind": "enum", "values": ["red", "green"]}
//!   ],
//!   "relations": [
//!     {"between": ["http://example.org/even", "xsd:integer"], "relation": "infinite-overlap"}
//!   ]
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Datatype, DatatypeMap, ValueRelation};
use crate::error::{Error, Result};
use crate::ns::expand_curie;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindSpec {
    Builtin,
    Regex,
    Enum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteSpec {
    pub find: String,
    pub replace: String,
}

/// Enumerated lexical forms, either each its own value or mapped to a value key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EnumValues {
    List(Vec<String>),
    Map(BTreeMap<String, String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatatypeSpec {
    pub uri: String,
    pub kind: KindSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rewrite: Vec<RewriteSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<EnumValues>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contains_datatypes: Vec<String>,
}

impl DatatypeSpec {
    pub fn builtin(uri: &str) -> Self {
        DatatypeSpec {
            uri: uri.to_string(),
            kind: KindSpec::Builtin,
            pattern: None,
            rewrite: Vec::new(),
            space: None,
            infinite: None,
            values: None,
            contains_datatypes: Vec::new(),
        }
    }

    pub fn enumeration(uri: &str, values: Vec<String>) -> Self {
        DatatypeSpec {
            kind: KindSpec::Enum,
            values: Some(EnumValues::List(values)),
            ..Self::builtin(uri)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub between: [String; 2],
    pub relation: ValueRelation,
}

/// Serializable description of a [`DatatypeMap`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatatypeConfig {
    #[serde(default)]
    pub datatypes: Vec<DatatypeSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
}

impl DatatypeConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    fn build_datatype(spec: &DatatypeSpec) -> Result<Datatype> {
        let uri = expand_curie(&spec.uri);
        let contained = spec.contains_datatypes.iter().map(|u| expand_curie(u)).collect();
        let dt = match spec.kind {
            KindSpec::Builtin => Datatype::by_uri(&uri)
                .ok_or_else(|| Error::Config(format!("<{uri}> is not a built-in datatype")))?,
            KindSpec::Regex => {
                let pattern = spec
                    .pattern
                    .as_deref()
                    .ok_or_else(|| Error::Config(format!("regex datatype <{uri}> needs a pattern")))?;
                let rewrite = spec.rewrite.iter().map(|r| (r.find.clone(), r.replace.clone())).collect();
                Datatype::regex(&uri, pattern, rewrite, spec.space.as_deref(), spec.infinite.unwrap_or(true))
                    .map_err(|e| Error::Config(format!("<{uri}>: {e}")))?
            }
            KindSpec::Enum => {
                let values = match &spec.values {
                    Some(EnumValues::List(vs)) => vs.iter().map(|v| (v.clone(), v.clone())).collect(),
                    Some(EnumValues::Map(m)) => m.clone(),
                    None => return Err(Error::Config(format!("enum datatype <{uri}> needs values"))),
                };
                if spec.infinite == Some(true) {
                    return Err(Error::Config(format!("enum datatype <{uri}> cannot be infinite")));
                }
                Datatype::enumeration(&uri, values, spec.space.as_deref())
            }
        };
        Ok(dt.with_contained_datatypes(contained))
    }

    pub fn build(&self) -> Result<DatatypeMap> {
        let mut map = DatatypeMap::empty();
        for spec in &self.datatypes {
            let dt = Self::build_datatype(spec)?;
            if map.contains(&dt.uri) {
                return Err(Error::Config(format!("datatype <{}> declared twice", dt.uri)));
            }
            map.insert(dt);
        }
        for rel in &self.relations {
            let [a, b] = &rel.between;
            let (a, b) = (expand_curie(a), expand_curie(b));
            for u in [&a, &b] {
                if !map.contains(u) {
                    return Err(Error::Config(format!("relation mentions undeclared datatype <{u}>")));
                }
            }
            map.set_relation(&a, &b, rel.relation);
        }
        Ok(map)
    }
}

impl DatatypeMap {
    /// Load a map from its JSON configuration.
    pub fn from_json(text: &str) -> Result<Self> {
        DatatypeConfig::from_json(text)?.build()
    }
}
