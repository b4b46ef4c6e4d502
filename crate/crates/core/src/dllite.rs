//! Export of ground, non-higher-order graphs with standard use of the RDFS
//! vocabulary as DL-Lite_R knowledge bases, and a small assertion and
//! inclusion checker for such knowledge bases.
//!
//! The export works on the Horn form `tr^erdfs(S) ∪ Ψ^{erdfs-V}`: facts become
//! assertions, and each rule shape becomes one inclusion (sub-class,
//! sub-property, domain as `∃P ⊑ A`, range as `∃P⁻ ⊑ A`, and the disjointness
//! constraint as `A ⊑ ¬B`).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rustc_hash::FxHashSet;

use crate::embedding::{psi_erdfs_v, tr_erdfs, Positions};
use crate::error::{Error, Result};
use crate::logic::{Atom, HornRule, LTerm};
use crate::model::{collect_vocabulary, max_container_index, Graph, Term};
use crate::ns;

/// A role name or its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Named(Term),
    Inverse(Term),
}

impl Role {
    fn inverse(&self) -> Role {
        match self {
            Role::Named(p) => Role::Inverse(p.clone()),
            Role::Inverse(p) => Role::Named(p.clone()),
        }
    }
}

/// Concepts allowed on the left of an inclusion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicConcept {
    Atomic(Term),
    Exists(Role),
}

/// Concepts allowed on the right of an inclusion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneralConcept {
    Basic(BasicConcept),
    Not(BasicConcept),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TBoxAxiom {
    ConceptInclusion(BasicConcept, GeneralConcept),
    RoleInclusion(Role, Role),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assertion {
    /// `A(a)`: concept, individual.
    Concept(Term, Term),
    /// `P(a, b)`: role, subject, object.
    Role(Term, Term, Term),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DlKnowledgeBase {
    pub tbox: Vec<TBoxAxiom>,
    pub abox: Vec<Assertion>,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Named(p) => write!(f, "{p}"),
            Role::Inverse(p) => write!(f, "Inverse({p})"),
        }
    }
}

impl fmt::Display for BasicConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicConcept::Atomic(a) => write!(f, "{a}"),
            BasicConcept::Exists(r) => write!(f, "Exists({r})"),
        }
    }
}

impl fmt::Display for GeneralConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneralConcept::Basic(b) => write!(f, "{b}"),
            GeneralConcept::Not(b) => write!(f, "Not({b})"),
        }
    }
}

impl fmt::Display for TBoxAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TBoxAxiom::ConceptInclusion(l, r) => write!(f, "SubClassOf({l} {r})"),
            TBoxAxiom::RoleInclusion(l, r) => write!(f, "SubPropertyOf({l} {r})"),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assertion::Concept(c, a) => write!(f, "Type({a} {c})"),
            Assertion::Role(p, a, b) => write!(f, "Rel({p} {a} {b})"),
        }
    }
}

/// One axiom per line, TBox first.
impl fmt::Display for DlKnowledgeBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ax in &self.tbox {
            writeln!(f, "{ax}")?;
        }
        for a in &self.abox {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

fn constant(t: &LTerm) -> Option<&Term> {
    match t {
        LTerm::Const(c) => Some(c),
        LTerm::Var(_) => None,
    }
}

fn unsupported(rule: &HornRule) -> Error {
    Error::Unsupported(format!("rule {rule} has no DL-Lite counterpart"))
}

fn fact_to_assertion(atom: &Atom) -> Option<Assertion> {
    match atom {
        Atom::Isa(a, c) => Some(Assertion::Concept(constant(c)?.clone(), constant(a)?.clone())),
        Atom::Data(a, p, b) => Some(Assertion::Role(
            constant(p)?.clone(),
            constant(a)?.clone(),
            constant(b)?.clone(),
        )),
        _ => None,
    }
}

/// The inclusion expressed by a one- or two-atom Horn rule over `x`, `y`.
fn rule_to_axiom(rule: &HornRule) -> Result<TBoxAxiom> {
    let err = || unsupported(rule);
    let atomic = |t: &LTerm| constant(t).cloned().ok_or_else(err);
    match (rule.body.as_slice(), &rule.head) {
        ([Atom::Isa(x, a)], Atom::Isa(x2, b)) if x.as_var().is_some() && x == x2 => Ok(TBoxAxiom::ConceptInclusion(
            BasicConcept::Atomic(atomic(a)?),
            GeneralConcept::Basic(BasicConcept::Atomic(atomic(b)?)),
        )),
        ([Atom::Data(x, p, y)], head) if x.as_var().is_some() && y.as_var().is_some() && x != y => {
            let p = atomic(p)?;
            match head {
                Atom::Data(x2, q, y2) if x2 == x && y2 == y => {
                    Ok(TBoxAxiom::RoleInclusion(Role::Named(p), Role::Named(atomic(q)?)))
                }
                Atom::Isa(z, a) if z == x => Ok(TBoxAxiom::ConceptInclusion(
                    BasicConcept::Exists(Role::Named(p)),
                    GeneralConcept::Basic(BasicConcept::Atomic(atomic(a)?)),
                )),
                Atom::Isa(z, a) if z == y => Ok(TBoxAxiom::ConceptInclusion(
                    BasicConcept::Exists(Role::Inverse(p)),
                    GeneralConcept::Basic(BasicConcept::Atomic(atomic(a)?)),
                )),
                _ => Err(err()),
            }
        }
        ([Atom::Isa(x, a), Atom::Isa(x2, b)], Atom::Bottom) if x.as_var().is_some() && x == x2 => {
            Ok(TBoxAxiom::ConceptInclusion(
                BasicConcept::Atomic(atomic(a)?),
                GeneralConcept::Not(BasicConcept::Atomic(atomic(b)?)),
            ))
        }
        _ => Err(err()),
    }
}

fn push_rule(kb: &mut DlKnowledgeBase, rule: &HornRule) -> Result<()> {
    if rule.is_fact() {
        kb.abox.push(fact_to_assertion(&rule.head).ok_or_else(|| unsupported(rule))?);
    } else {
        kb.tbox.push(rule_to_axiom(rule)?);
    }
    Ok(())
}

fn check_exportable(s: &Graph) -> Result<()> {
    // Standard use first; tr_erdfs reports the offending triples.
    tr_erdfs(s)?;
    let pos = Positions::of(s.iter());
    let mut bad: Vec<String> = Vec::new();
    for p in &pos.properties {
        if !p.is_uri() {
            bad.push(format!("{p} in a property position"));
        }
    }
    for c in &pos.classes {
        if !c.is_uri() {
            bad.push(format!("{c} in a class position"));
        }
    }
    if !bad.is_empty() {
        return Err(Error::HigherOrder(bad));
    }
    if let Some(b) = s.blank_nodes().into_iter().next() {
        return Err(Error::NotGround(format!("blank node _:{b}")));
    }
    Ok(())
}

/// The axioms contributed by the triples of `g` alone, in graph order.
pub fn graph_axioms(g: &Graph) -> Result<DlKnowledgeBase> {
    check_exportable(g)?;
    let tr = tr_erdfs(g)?;
    let mut kb = DlKnowledgeBase::default();
    for rule in &tr.rules {
        push_rule(&mut kb, rule)?;
    }
    for atom in &tr.atoms {
        push_rule(&mut kb, &HornRule::fact(atom.clone()))?;
    }
    Ok(kb)
}

/// Export `S` with `Ψ^{erdfs-V}` over its vocabulary, keeping only the
/// container-membership axioms up to the largest index used in `S`.
pub fn export_dllite(s: &Graph) -> Result<DlKnowledgeBase> {
    let mut kb = graph_axioms(s)?;
    let psi = psi_erdfs_v(&collect_vocabulary([s]), max_container_index([s]));
    for rule in psi.rules() {
        push_rule(&mut kb, rule)?;
    }
    Ok(kb)
}

/// Closure of an ABox under the positive inclusions of a TBox.
struct Closure {
    concepts: FxHashSet<(BasicConcept, Term)>,
    roles: FxHashSet<(Term, Term, Term)>,
}

/// Forward-chaining checker for DL-Lite_R knowledge bases.
pub struct DlChecker {
    /// `B ⊑ B'` including those implied by role inclusions.
    concept_incl: Vec<(BasicConcept, BasicConcept)>,
    negative: Vec<(BasicConcept, BasicConcept)>,
    /// Role inclusions with a named role on the left.
    role_incl: Vec<(Term, Role)>,
    abox: Vec<Assertion>,
    base: Closure,
    inconsistent: bool,
    individuals: BTreeSet<Term>,
}

impl DlChecker {
    pub fn new(kb: &DlKnowledgeBase) -> Self {
        let mut concept_incl = Vec::new();
        let mut negative = Vec::new();
        let mut role_incl = Vec::new();
        for ax in &kb.tbox {
            match ax {
                TBoxAxiom::ConceptInclusion(l, GeneralConcept::Basic(r)) => concept_incl.push((l.clone(), r.clone())),
                TBoxAxiom::ConceptInclusion(l, GeneralConcept::Not(r)) => negative.push((l.clone(), r.clone())),
                TBoxAxiom::RoleInclusion(l, r) => {
                    let (p, r) = match l {
                        Role::Named(p) => (p.clone(), r.clone()),
                        Role::Inverse(p) => (p.clone(), r.inverse()),
                    };
                    concept_incl.push((
                        BasicConcept::Exists(Role::Named(p.clone())),
                        BasicConcept::Exists(r.clone()),
                    ));
                    concept_incl.push((
                        BasicConcept::Exists(Role::Inverse(p.clone())),
                        BasicConcept::Exists(r.inverse()),
                    ));
                    role_incl.push((p, r));
                }
            }
        }
        let mut individuals = BTreeSet::new();
        for a in &kb.abox {
            match a {
                Assertion::Concept(_, x) => {
                    individuals.insert(x.clone());
                }
                Assertion::Role(_, x, y) => {
                    individuals.insert(x.clone());
                    individuals.insert(y.clone());
                }
            }
        }
        let mut checker = DlChecker {
            concept_incl,
            negative,
            role_incl,
            abox: kb.abox.clone(),
            base: Closure {
                concepts: FxHashSet::default(),
                roles: FxHashSet::default(),
            },
            inconsistent: false,
            individuals,
        };
        let (base, inconsistent) = checker.close(&[]);
        checker.base = base;
        checker.inconsistent = inconsistent;
        checker
    }

    /// Saturate the ABox plus `extra` and report inconsistency.
    fn close(&self, extra: &[Assertion]) -> (Closure, bool) {
        let mut cl = Closure {
            concepts: FxHashSet::default(),
            roles: FxHashSet::default(),
        };
        enum Item {
            C(BasicConcept, Term),
            R(Term, Term, Term),
        }
        let mut queue: VecDeque<Item> = self
            .abox
            .iter()
            .chain(extra)
            .map(|a| match a {
                Assertion::Concept(c, x) => Item::C(BasicConcept::Atomic(c.clone()), x.clone()),
                Assertion::Role(p, x, y) => Item::R(p.clone(), x.clone(), y.clone()),
            })
            .collect();
        while let Some(item) = queue.pop_front() {
            match item {
                Item::C(c, x) => {
                    if !cl.concepts.insert((c.clone(), x.clone())) {
                        continue;
                    }
                    for (l, r) in &self.concept_incl {
                        if *l == c {
                            queue.push_back(Item::C(r.clone(), x.clone()));
                        }
                    }
                }
                Item::R(p, x, y) => {
                    if !cl.roles.insert((p.clone(), x.clone(), y.clone())) {
                        continue;
                    }
                    queue.push_back(Item::C(BasicConcept::Exists(Role::Named(p.clone())), x.clone()));
                    queue.push_back(Item::C(BasicConcept::Exists(Role::Inverse(p.clone())), y.clone()));
                    for (l, r) in &self.role_incl {
                        if *l == p {
                            match r {
                                Role::Named(q) => queue.push_back(Item::R(q.clone(), x.clone(), y.clone())),
                                Role::Inverse(q) => queue.push_back(Item::R(q.clone(), y.clone(), x.clone())),
                            }
                        }
                    }
                }
            }
        }
        let inconsistent = self.negative.iter().any(|(l, r)| {
            cl.concepts
                .iter()
                .any(|(c, x)| c == l && cl.concepts.contains(&(r.clone(), x.clone())))
        });
        (cl, inconsistent)
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    fn fresh(&self, name: &str) -> Term {
        let mut i = 0;
        loop {
            let t = Term::uri(format!("{}dl:{name}{i}", ns::INTERNAL));
            if !self.individuals.contains(&t) {
                return t;
            }
            i += 1;
        }
    }

    /// Assertions making `x` an instance of `b`, with `y` as a fresh witness.
    fn instance_of(b: &BasicConcept, x: &Term, y: &Term) -> Assertion {
        match b {
            BasicConcept::Atomic(a) => Assertion::Concept(a.clone(), x.clone()),
            BasicConcept::Exists(Role::Named(p)) => Assertion::Role(p.clone(), x.clone(), y.clone()),
            BasicConcept::Exists(Role::Inverse(p)) => Assertion::Role(p.clone(), y.clone(), x.clone()),
        }
    }

    pub fn entails_assertion(&self, a: &Assertion) -> bool {
        if self.inconsistent {
            return true;
        }
        match a {
            Assertion::Concept(c, x) => self.base.concepts.contains(&(BasicConcept::Atomic(c.clone()), x.clone())),
            Assertion::Role(p, x, y) => self.base.roles.contains(&(p.clone(), x.clone(), y.clone())),
        }
    }

    /// Inclusion entailment: the left-hand side is instantiated by fresh
    /// individuals and the right-hand side must follow, or the extension
    /// must be inconsistent.
    pub fn entails_axiom(&self, ax: &TBoxAxiom) -> bool {
        if self.inconsistent {
            return true;
        }
        let (x, y) = (self.fresh("x"), self.fresh("y"));
        match ax {
            TBoxAxiom::ConceptInclusion(l, r) => {
                let mut extra = vec![Self::instance_of(l, &x, &y)];
                let target = match r {
                    GeneralConcept::Basic(b) => b,
                    GeneralConcept::Not(b) => {
                        extra.push(Self::instance_of(b, &x, &self.fresh("z")));
                        return self.close(&extra).1;
                    }
                };
                let (cl, inconsistent) = self.close(&extra);
                inconsistent || cl.concepts.contains(&(target.clone(), x))
            }
            TBoxAxiom::RoleInclusion(l, r) => {
                let (a, b) = match l {
                    Role::Named(_) => (x.clone(), y.clone()),
                    Role::Inverse(_) => (y.clone(), x.clone()),
                };
                let p = match l {
                    Role::Named(p) | Role::Inverse(p) => p,
                };
                let (cl, inconsistent) = self.close(&[Assertion::Role(p.clone(), a, b)]);
                let want = match r {
                    Role::Named(q) => (q.clone(), x, y),
                    Role::Inverse(q) => (q.clone(), y, x),
                };
                inconsistent || cl.roles.contains(&want)
            }
        }
    }

    /// Every axiom and assertion of `other` follows.
    pub fn entails(&self, other: &DlKnowledgeBase) -> bool {
        other.tbox.iter().all(|ax| self.entails_axiom(ax)) && other.abox.iter().all(|a| self.entails_assertion(a))
    }
}
