//! Generators for the PATH SYSTEM ACCESSIBILITY and k-colorability
//! reductions, with brute-force oracles.
//!
//! Instances are described by a JSON document:
//!
//! ```json
//! {"nodes": ["a", "b"], "sources": ["a"], "terminals": ["b"], "relations": [["b", "a", "a"]]}
//! {"nodes": 4, "edges": [["n0", "n1"], ["n1", "n2"]], "k": 3}
//! ```
//!
//! `nodes` is a list of names or a count (names `n0`, `n1`, …). Missing
//! sources, terminals, relations or edges are drawn at random from `seed`
//! (default 0) with edge probability `density`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::datatype::{DatatypeConfig, DatatypeSpec};
use crate::error::{Error, Result};
use crate::model::{Graph, Term, Triple};
use crate::ns::{rdf, rdfs, INTERNAL};

/// URI of a node name: names containing `:` are taken as URIs.
pub fn node_term(name: &str) -> Term {
    if name.contains(':') {
        Term::uri(name)
    } else {
        Term::uri(format!("urn:node:{name}"))
    }
}

/// The fixed URI linked to every terminal node.
pub fn anchor() -> Term {
    Term::uri(format!("{INTERNAL}anchor"))
}

fn sp() -> Term {
    Term::uri(rdfs::SUB_PROPERTY_OF)
}

/// An instance `(X, Srcs, T, R)` of PATH SYSTEM ACCESSIBILITY.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathSystem {
    pub nodes: Vec<String>,
    pub sources: BTreeSet<String>,
    pub terminals: BTreeSet<String>,
    pub relations: Vec<[String; 3]>,
}

impl PathSystem {
    /// Sources, terminals and relations range over the nodes, and no node
    /// collides with the anchor or with `rdfs:subPropertyOf`.
    pub fn validate(&self) -> Result<()> {
        let nodes: BTreeSet<&String> = self.nodes.iter().collect();
        let missing = self
            .sources
            .iter()
            .chain(&self.terminals)
            .chain(self.relations.iter().flatten())
            .find(|n| !nodes.contains(n));
        if let Some(n) = missing {
            return Err(Error::Config(format!("{n} is not a node")));
        }
        if nodes.len() != self.nodes.len() {
            return Err(Error::Config("duplicate node names".into()));
        }
        for n in &self.nodes {
            let t = node_term(n);
            if t == anchor() || t == sp() {
                return Err(Error::Config(format!("node {n} collides with a reserved URI")));
            }
        }
        Ok(())
    }

    /// Random instance over `n` nodes; each triple of nodes is a relation
    /// with probability `density`.
    pub fn random(rng: &mut impl Rng, n: usize, density: f64) -> Self {
        let nodes: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let mut ps = PathSystem {
            nodes: nodes.clone(),
            ..Default::default()
        };
        for x in &nodes {
            if rng.gen_bool(0.2) {
                ps.sources.insert(x.clone());
            }
            if rng.gen_bool(0.3) {
                ps.terminals.insert(x.clone());
            }
        }
        for x in &nodes {
            for y in &nodes {
                for z in &nodes {
                    if rng.gen_bool(density) {
                        ps.relations.push([x.clone(), y.clone(), z.clone()]);
                    }
                }
            }
        }
        ps
    }
}

/// The graph `G` of the reduction and one query per terminal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystemReduction {
    pub graph: Graph,
    /// `(t, ⟨t, sp, sp⟩)` for every terminal `t`.
    pub queries: Vec<(String, Triple)>,
    /// `⟨a, sp, sp⟩`: some terminal is accessible.
    pub any_terminal: Triple,
}

/// `⟨t, sp, sp⟩`: entailed under rdfs iff `t` is accessible.
pub fn accessibility_query(node: &str) -> Triple {
    Triple::new(node_term(node), sp(), sp())
}

/// `⟨x, sp, sp⟩` per source, `⟨a, sp, x⟩` per terminal and every relation
/// tuple as a triple. The instance is assumed valid.
pub fn gen_path_system(ps: &PathSystem) -> PathSystemReduction {
    let mut graph = Graph::new();
    for x in &ps.sources {
        graph.insert(accessibility_query(x));
    }
    for x in &ps.terminals {
        graph.insert(Triple::new(anchor(), sp(), node_term(x)));
    }
    for [x, y, z] in &ps.relations {
        graph.insert(Triple::new(node_term(x), node_term(y), node_term(z)));
    }
    PathSystemReduction {
        graph,
        queries: ps.terminals.iter().map(|t| (t.clone(), accessibility_query(t))).collect(),
        any_terminal: Triple::new(anchor(), sp(), sp()),
    }
}

/// Least fixpoint of: sources are accessible; `x` is accessible if
/// `(x, y, z) ∈ R` for accessible `y` and `z`.
pub fn accessibility_oracle(ps: &PathSystem) -> BTreeSet<String> {
    let mut acc: BTreeSet<String> = ps.sources.clone();
    loop {
        let before = acc.len();
        for [x, y, z] in &ps.relations {
            if acc.contains(y) && acc.contains(z) {
                acc.insert(x.clone());
            }
        }
        if acc.len() == before {
            return acc;
        }
    }
}

/// A graph `(V, E)` and a number of colors `k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoringProblem {
    pub nodes: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub k: usize,
}

impl ColoringProblem {
    pub fn validate(&self) -> Result<()> {
        if self.k < 3 {
            return Err(Error::Config(format!("k must be at least 3, got {}", self.k)));
        }
        let nodes: BTreeSet<&String> = self.nodes.iter().collect();
        if nodes.len() != self.nodes.len() {
            return Err(Error::Config("duplicate node names".into()));
        }
        if let Some(n) = self.edges.iter().flatten().find(|n| !nodes.contains(n)) {
            return Err(Error::Config(format!("{n} is not a node")));
        }
        Ok(())
    }

    pub fn random(rng: &mut impl Rng, n: usize, density: f64, k: usize) -> Self {
        let nodes: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    edges.push([nodes[i].clone(), nodes[j].clone()]);
                }
            }
        }
        ColoringProblem { nodes, edges, k }
    }

    pub fn complete(n: usize, k: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        Self::random(&mut rng, n, 1.0, k)
    }
}

/// URI of the enumerated color datatype.
pub fn color_datatype() -> String {
    format!("{INTERNAL}color")
}

/// URI of the edge property.
pub fn edge_property() -> String {
    format!("{INTERNAL}edge")
}

#[derive(Debug, Clone)]
pub struct ColoringReduction {
    pub s: Graph,
    pub h: Graph,
    /// `rdf:XMLLiteral` and a datatype with exactly `k` values.
    pub datatypes: DatatypeConfig,
}

/// `⟨v, type, d⟩` per node and `⟨u, R, v⟩` per edge; `H = {⟨_:x, R, _:x⟩}`.
pub fn gen_k_coloring(p: &ColoringProblem) -> Result<ColoringReduction> {
    p.validate()?;
    let (d, r) = (Term::uri(color_datatype()), Term::uri(edge_property()));
    let mut s = Graph::new();
    for v in &p.nodes {
        s.insert(Triple::new(node_term(v), Term::uri(rdf::TYPE), d.clone()));
    }
    for [u, v] in &p.edges {
        s.insert(Triple::new(node_term(u), r.clone(), node_term(v)));
    }
    let h = [Triple::new(Term::blank("x"), r, Term::blank("x"))].into_iter().collect();
    let datatypes = DatatypeConfig {
        datatypes: vec![
            DatatypeSpec::builtin(rdf::XML_LITERAL),
            DatatypeSpec::enumeration(&color_datatype(), (0..p.k).map(|i| format!("c{i}")).collect()),
        ],
        relations: Vec::new(),
    };
    Ok(ColoringReduction { s, h, datatypes })
}

/// Exhaustive search over all `k^|V|` assignments.
pub fn colorable(p: &ColoringProblem) -> bool {
    let idx = |name: &String| p.nodes.iter().position(|n| n == name).expect("edge endpoint is a node");
    let edges: Vec<(usize, usize)> = p.edges.iter().map(|[u, v]| (idx(u), idx(v))).collect();
    let n = p.nodes.len();
    let mut colors = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < p.k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodesSpec {
    Count(usize),
    Names(Vec<String>),
}

/// JSON description of a reduction instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionSpec {
    pub nodes: NodesSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sources: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terminals: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<f64>,
}

impl ReductionSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    fn node_names(&self) -> Vec<String> {
        match &self.nodes {
            NodesSpec::Count(n) => (0..*n).map(|i| format!("n{i}")).collect(),
            NodesSpec::Names(ns) => ns.clone(),
        }
    }

    fn rng(&self, seed: Option<u64>) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed.or(self.seed).unwrap_or(0))
    }

    fn density(&self, default: f64) -> Result<f64> {
        let d = self.density.unwrap_or(default);
        if (0.0..=1.0).contains(&d) {
            Ok(d)
        } else {
            Err(Error::Config(format!("density {d} is not in [0, 1]")))
        }
    }

    /// A path system; `seed` overrides the seed of the document.
    pub fn path_system(&self, seed: Option<u64>) -> Result<PathSystem> {
        let nodes = self.node_names();
        let mut rng = self.rng(seed);
        let density = self.density(0.05)?;
        let mut pick = |p: f64| -> BTreeSet<String> { nodes.iter().filter(|_| rng.gen_bool(p)).cloned().collect() };
        let sources = match &self.sources {
            Some(s) => s.iter().cloned().collect(),
            None => pick(0.2),
        };
        let terminals = match &self.terminals {
            Some(t) => t.iter().cloned().collect(),
            None => pick(0.3),
        };
        let relations = match &self.relations {
            Some(r) => r.clone(),
            None => {
                let mut out = Vec::new();
                for x in &nodes {
                    for y in &nodes {
                        for z in &nodes {
                            if rng.gen_bool(density) {
                                out.push([x.clone(), y.clone(), z.clone()]);
                            }
                        }
                    }
                }
                out
            }
        };
        let ps = PathSystem {
            nodes,
            sources,
            terminals,
            relations,
        };
        ps.validate()?;
        Ok(ps)
    }

    pub fn coloring(&self, seed: Option<u64>) -> Result<ColoringProblem> {
        let nodes = self.node_names();
        let k = self.k.ok_or_else(|| Error::Config("k-coloring needs k".into()))?;
        let p = match &self.edges {
            Some(e) => ColoringProblem {
                nodes,
                edges: e.clone(),
                k,
            },
            None => {
                let density = self.density(0.5)?;
                let mut rng = self.rng(seed);
                let mut p = ColoringProblem::random(&mut rng, nodes.len(), density, k);
                let rename = |n: &String| nodes[n[1..].parse::<usize>().expect("generated name")].clone();
                p.edges = p.edges.iter().map(|[u, v]| [rename(u), rename(v)]).collect();
                p.nodes = nodes;
                p
            }
        };
        p.validate()?;
        Ok(p)
    }
}
