//! Literal normalization: every literal is replaced by the least literal
//! (under [`literal_order`]) denoting the same value.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{literal_order, DatatypeMap, ValueToken};
use crate::logic::{Atom, ExistentialConjunction, HornRule, HornTheory, LTerm};
use crate::model::{Graph, Term, Triple};

/// Literals sharing one value, with their representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralClass {
    pub value: ValueToken,
    pub representative: Term,
    pub members: BTreeSet<Term>,
}

/// Maps literals to the representative of their value class. Literals
/// without a value (tagged, ill-typed, unknown datatype) map to themselves.
#[derive(Debug, Clone, Default)]
pub struct Normalizer {
    classes: Vec<LiteralClass>,
    rep: HashMap<Term, Term>,
}

impl Normalizer {
    pub fn new<'a>(dtmap: &DatatypeMap, literals: impl IntoIterator<Item = &'a Term>) -> Self {
        let mut by_value: BTreeMap<ValueToken, BTreeSet<Term>> = BTreeMap::new();
        for lit in literals {
            if let Some(v) = dtmap.literal_value(lit) {
                by_value.entry(v).or_default().insert(lit.clone());
            }
        }
        let mut rep = HashMap::new();
        let mut classes = Vec::new();
        for (value, members) in by_value {
            let representative = members
                .iter()
                .min_by(|a, b| literal_order(a, b))
                .expect("class is non-empty")
                .clone();
            for m in &members {
                if *m != representative {
                    rep.insert(m.clone(), representative.clone());
                }
            }
            classes.push(LiteralClass {
                value,
                representative,
                members,
            });
        }
        Normalizer { classes, rep }
    }

    /// Normalizer over the literals of `graphs`.
    pub fn for_graphs<'a>(dtmap: &DatatypeMap, graphs: impl IntoIterator<Item = &'a Graph>) -> Self {
        let lits: BTreeSet<&Term> = graphs
            .into_iter()
            .flat_map(|g| g.iter().flat_map(|t| t.terms()))
            .filter(|t| t.is_literal())
            .collect();
        Self::new(dtmap, lits)
    }

    pub fn classes(&self) -> &[LiteralClass] {
        &self.classes
    }

    pub fn term(&self, t: &Term) -> Term {
        self.rep.get(t).unwrap_or(t).clone()
    }

    pub fn triple(&self, t: &Triple) -> Triple {
        Triple::new(self.term(&t.subject), self.term(&t.predicate), self.term(&t.object))
    }

    pub fn graph(&self, g: &Graph) -> Graph {
        g.iter().map(|t| self.triple(t)).collect()
    }

    fn lterm(&self, t: &LTerm) -> LTerm {
        match t {
            LTerm::Const(c) => LTerm::Const(self.term(c)),
            v => v.clone(),
        }
    }

    /// Normalize an atom; equalities between members of one class become
    /// trivial and are kept as such for the caller to discard.
    pub fn atom(&self, a: &Atom) -> Atom {
        a.map_terms(|t| self.lterm(t))
    }

    pub fn rule(&self, r: &HornRule) -> HornRule {
        HornRule::new(r.body.iter().map(|a| self.atom(a)).collect(), self.atom(&r.head))
    }

    pub fn theory(&self, t: &HornTheory) -> HornTheory {
        t.map_rules(|r| self.rule(r))
    }

    pub fn conjunction(&self, q: &ExistentialConjunction) -> ExistentialConjunction {
        q.map_atoms(|a| self.atom(a))
    }
}

/// Normalize a graph with classes computed over its own literals.
pub fn normalize_graph(g: &Graph, dtmap: &DatatypeMap) -> Graph {
    Normalizer::for_graphs(dtmap, [g]).graph(g)
}
