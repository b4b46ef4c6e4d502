//! Translation of graphs into frame logic and the regime axiomatizations.
//!
//! `tr` maps each triple `⟨s, p, o⟩` to the data atom `s[p → o]` with blank
//! nodes existentially quantified. `psi` builds the Horn axiomatization of a
//! regime over a finite vocabulary. The extensional regime has its own
//! translation `tr_erdfs`, which embeds ontology triples directly as rules,
//! together with the residual theory `psi_erdfs_v`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::axioms::axiomatic_triples;
use crate::datatype::{xml, DatatypeMap, Typedness};
use crate::error::{Error, Result};
use crate::logic::{horn_normalize, Atom, ExistentialConjunction, Formula, HornRule, HornTheory, LTerm, DT, ILL_D};
use crate::model::{BaseRegime, DatatypeMode, Graph, Regime, Term, Triple, Vocabulary};
use crate::ns::{self, rdf, rdfs};

fn c(uri: &str) -> LTerm {
    LTerm::uri(uri)
}

fn v(name: &str) -> LTerm {
    LTerm::var(name)
}

fn fa(a: Atom) -> Formula {
    Formula::atom(a)
}

fn data(s: LTerm, p: LTerm, o: LTerm) -> Atom {
    Atom::Data(s, p, o)
}

fn ty(s: LTerm, class: LTerm) -> Atom {
    Atom::Data(s, c(rdf::TYPE), class)
}

fn ill_d(x: impl Into<LTerm>) -> Atom {
    Atom::pred(ILL_D, vec![x.into()])
}

fn dt(x: impl Into<LTerm>, u: &str) -> Atom {
    Atom::pred(DT, vec![x.into(), c(u)])
}

/// Name of the variable standing for blank node `id`. Blank-node variables
/// print as in N-Triples and never collide with rule variables.
pub fn blank_var(id: &str) -> String {
    format!("_:{id}")
}

/// A term as a logic term: blank nodes become variables.
pub fn lterm(t: &Term) -> LTerm {
    match t {
        Term::Blank(id) => LTerm::Var(blank_var(id)),
        other => LTerm::Const(other.clone()),
    }
}

fn sorted_blank_vars(g: &Graph) -> Vec<String> {
    g.blank_nodes().iter().map(|b| blank_var(b)).collect()
}

/// `tr(G)`: one data atom per triple, blank nodes existentially quantified.
pub fn tr(g: &Graph) -> ExistentialConjunction {
    ExistentialConjunction {
        variables: sorted_blank_vars(g),
        atoms: g
            .iter()
            .map(|t| data(lterm(&t.subject), lterm(&t.predicate), lterm(&t.object)))
            .collect(),
    }
}

/// An axiomatization: Horn rules, classes every individual belongs to (the
/// unsafe axiom `∀x x[type → Resource]`, grounded by the caller over the
/// final constant set), and formulas that have no Horn form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Axiomatization {
    pub theory: HornTheory,
    pub universal_types: Vec<Term>,
    pub non_horn: Vec<Formula>,
}

impl Axiomatization {
    /// Whether the axiomatization can be evaluated by materialization.
    pub fn is_evaluable(&self) -> bool {
        self.non_horn.is_empty()
    }

    /// Facts instantiating the universal type axioms over `constants`.
    pub fn universal_facts<'a>(&'a self, constants: impl IntoIterator<Item = &'a Term> + 'a) -> Vec<Atom> {
        let constants: Vec<&Term> = constants.into_iter().collect();
        self.universal_types
            .iter()
            .flat_map(|class| constants.iter().map(move |x| ty(LTerm::from(*x), LTerm::from(class))))
            .collect()
    }
}

impl fmt::Display for Axiomatization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.theory)?;
        for class in &self.universal_types {
            writeln!(f, "forall x . {}", ty(v("x"), LTerm::from(class)))?;
        }
        for phi in &self.non_horn {
            writeln!(f, "# not Horn: {phi}")?;
        }
        Ok(())
    }
}

fn add_formula(theory: &mut HornTheory, phi: &Formula) {
    for rule in horn_normalize(phi).expect("regime axioms are Horn") {
        theory.add(rule);
    }
}

/// The Horn rules of the rdf axiomatization (without facts).
fn rdf_rules() -> Vec<Formula> {
    vec![
        Formula::forall(
            &["x"],
            Formula::implies(
                Formula::exists(&["y", "z"], fa(data(v("y"), v("x"), v("z")))),
                fa(ty(v("x"), c(rdf::PROPERTY))),
            ),
        ),
        Formula::forall(
            &["x"],
            Formula::implies(
                Formula::and(vec![fa(ty(v("x"), c(rdf::XML_LITERAL))), fa(ill_d(v("x")))]),
                fa(Atom::Bottom),
            ),
        ),
    ]
}

/// The Horn rules added by the rdfs axiomatization (without facts and
/// without the universal `Resource` typing).
fn rdfs_rules() -> Vec<Formula> {
    let sp = || c(rdfs::SUB_PROPERTY_OF);
    let sc = || c(rdfs::SUB_CLASS_OF);
    let imp = |body: Vec<Atom>, head: Formula| Formula::implies(Formula::and(body.into_iter().map(fa).collect()), head);
    vec![
        Formula::forall(
            &["u", "v", "x", "y"],
            imp(
                vec![data(v("x"), c(rdfs::DOMAIN), v("y")), data(v("u"), v("x"), v("v"))],
                fa(ty(v("u"), v("y"))),
            ),
        ),
        Formula::forall(
            &["u", "v", "x", "y"],
            imp(
                vec![data(v("x"), c(rdfs::RANGE), v("y")), data(v("u"), v("x"), v("v"))],
                fa(ty(v("v"), v("y"))),
            ),
        ),
        Formula::forall(
            &["x"],
            imp(vec![ty(v("x"), c(rdf::PROPERTY))], fa(data(v("x"), sp(), v("x")))),
        ),
        Formula::forall(
            &["x", "y", "z"],
            imp(
                vec![data(v("x"), sp(), v("y")), data(v("y"), sp(), v("z"))],
                fa(data(v("x"), sp(), v("z"))),
            ),
        ),
        Formula::forall(
            &["x", "y"],
            imp(
                vec![data(v("x"), sp(), v("y"))],
                Formula::forall(
                    &["z1", "z2"],
                    imp(vec![data(v("z1"), v("x"), v("z2"))], fa(data(v("z1"), v("y"), v("z2")))),
                ),
            ),
        ),
        Formula::forall(
            &["x"],
            imp(vec![ty(v("x"), c(rdfs::CLASS))], fa(data(v("x"), sc(), c(rdfs::RESOURCE)))),
        ),
        Formula::forall(
            &["x", "y"],
            imp(
                vec![data(v("x"), sc(), v("y"))],
                Formula::forall(&["z"], imp(vec![ty(v("z"), v("x"))], fa(ty(v("z"), v("y"))))),
            ),
        ),
        Formula::forall(&["x"], imp(vec![ty(v("x"), c(rdfs::CLASS))], fa(data(v("x"), sc(), v("x"))))),
        Formula::forall(
            &["x", "y", "z"],
            imp(
                vec![data(v("x"), sc(), v("y")), data(v("y"), sc(), v("z"))],
                fa(data(v("x"), sc(), v("z"))),
            ),
        ),
        Formula::forall(
            &["x"],
            imp(
                vec![ty(v("x"), c(rdfs::CONTAINER_MEMBERSHIP_PROPERTY))],
                fa(data(v("x"), sp(), c(rdfs::MEMBER))),
            ),
        ),
        Formula::forall(
            &["x"],
            imp(vec![ty(v("x"), c(rdfs::DATATYPE))], fa(data(v("x"), sc(), c(rdfs::LITERAL)))),
        ),
        Formula::forall(
            &["x"],
            imp(vec![ty(v("x"), c(rdfs::LITERAL)), ill_d(v("x"))], fa(Atom::Bottom)),
        ),
    ]
}

/// The four extensional conditions. They have universal quantifiers in their
/// antecedents and therefore no Horn form.
pub fn erdfs_extensional_axioms() -> Vec<Formula> {
    let prop = |x: &str| fa(ty(v(x), c(rdf::PROPERTY)));
    let class = |x: &str| fa(ty(v(x), c(rdfs::CLASS)));
    vec![
        Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::forall(
                    &["u", "v"],
                    Formula::implies(fa(data(v("u"), v("x"), v("v"))), fa(ty(v("u"), v("y")))),
                ),
                fa(data(v("x"), c(rdfs::DOMAIN), v("y"))),
            ),
        ),
        Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::forall(
                    &["u", "v"],
                    Formula::implies(fa(data(v("u"), v("x"), v("v"))), fa(ty(v("v"), v("y")))),
                ),
                fa(data(v("x"), c(rdfs::RANGE), v("y"))),
            ),
        ),
        Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::and(vec![
                    prop("x"),
                    prop("y"),
                    Formula::forall(
                        &["u", "v"],
                        Formula::implies(fa(data(v("u"), v("x"), v("v"))), fa(data(v("u"), v("y"), v("v")))),
                    ),
                ]),
                fa(data(v("x"), c(rdfs::SUB_PROPERTY_OF), v("y"))),
            ),
        ),
        Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::and(vec![
                    class("x"),
                    class("y"),
                    Formula::forall(&["u"], Formula::implies(fa(ty(v("u"), v("x"))), fa(ty(v("u"), v("y"))))),
                ]),
                fa(data(v("x"), c(rdfs::SUB_CLASS_OF), v("y"))),
            ),
        ),
    ]
}

fn xml_typedness(lit: &Term) -> Option<bool> {
    match lit {
        Term::TypedLiteral { lexical, datatype } if datatype == rdf::XML_LITERAL => {
            Some(xml::is_well_formed_content(lexical))
        }
        _ => None,
    }
}

fn ground(t: &Triple) -> Atom {
    data(LTerm::from(&t.subject), LTerm::from(&t.predicate), LTerm::from(&t.object))
}

/// The axiomatization of `regime` over `vocab`, with container-membership
/// axioms up to `max_idx`. Datatype modes use `dtmap`.
///
/// Value equalities between literals are not emitted; callers normalize the
/// resulting theory instead.
pub fn psi(regime: Regime, dtmap: Option<&DatatypeMap>, vocab: &Vocabulary, max_idx: usize) -> Result<Axiomatization> {
    let mut ax = Axiomatization::default();
    let base = regime.base;
    if matches!(base, BaseRegime::Rdf | BaseRegime::Rdfs | BaseRegime::Erdfs) {
        for t in axiomatic_triples(BaseRegime::Rdf, max_idx)? {
            ax.theory.add_fact(ground(&t));
        }
        for lit in &vocab.typed {
            match xml_typedness(lit) {
                Some(true) => {
                    ax.theory.add_fact(ty(lit.into(), c(rdf::XML_LITERAL)));
                }
                Some(false) => {
                    ax.theory.add_fact(ill_d(lit));
                }
                None => {}
            }
        }
        for phi in rdf_rules() {
            add_formula(&mut ax.theory, &phi);
        }
    }
    if matches!(base, BaseRegime::Rdfs | BaseRegime::Erdfs) {
        for t in axiomatic_triples(BaseRegime::Rdfs, max_idx)? {
            ax.theory.add_fact(ground(&t));
        }
        for lit in &vocab.plain {
            ax.theory.add_fact(ty(lit.into(), c(rdfs::LITERAL)));
        }
        ax.universal_types.push(Term::uri(rdfs::RESOURCE));
        for phi in rdfs_rules() {
            add_formula(&mut ax.theory, &phi);
        }
    }
    if base == BaseRegime::Erdfs {
        ax.non_horn = erdfs_extensional_axioms();
    }
    if regime.datatypes != DatatypeMode::None {
        let dtmap = dtmap.ok_or_else(|| Error::Config("datatype mode requires a datatype map".into()))?;
        datatype_axioms(&mut ax.theory, base, regime.datatypes, dtmap, vocab)?;
    }
    Ok(ax)
}

fn datatype_axioms(
    theory: &mut HornTheory,
    base: BaseRegime,
    mode: DatatypeMode,
    dtmap: &DatatypeMap,
    vocab: &Vocabulary,
) -> Result<()> {
    if base != BaseRegime::Simple && !dtmap.has_xml_literal() {
        return Err(Error::NoXmlLiteral);
    }
    if mode == DatatypeMode::D {
        let report = dtmap.definiteness();
        if !report.is_definite() {
            return Err(Error::NotDefinite(report.violations));
        }
    }
    let uris: Vec<&str> = dtmap.uris().collect();
    for lit in &vocab.typed {
        let Term::TypedLiteral { datatype, .. } = lit else { continue };
        match dtmap.well_typed(lit) {
            Typedness::WellTyped(_) => {
                theory.add_fact(ty(lit.into(), c(datatype)));
            }
            Typedness::IllTyped => {
                theory.add_fact(ill_d(lit));
            }
            Typedness::Unknown => {}
        }
    }
    for u in &uris {
        theory.add_fact(ty(c(u), c(rdfs::DATATYPE)));
        theory.add(HornRule::constraint(vec![ill_d(v("x")), ty(v("x"), c(u))]));
    }
    if mode != DatatypeMode::D {
        return Ok(());
    }
    for lit in vocab.literals() {
        let value = dtmap.literal_value(lit);
        let is_plain = matches!(lit, Term::PlainLiteral(..));
        if !is_plain && value.is_none() {
            continue;
        }
        for u in &uris {
            let member = value.as_ref().is_some_and(|val| dtmap.member(val, u));
            if member {
                theory.add_fact(ty(lit.into(), c(u)));
            } else {
                theory.add(HornRule::constraint(vec![dt(lit, u)]));
            }
        }
    }
    for (i, a) in uris.iter().enumerate() {
        theory.add(HornRule::new(vec![ty(v("x"), c(a))], dt(v("x"), a)));
        for b in &uris[i + 1..] {
            if dtmap.disjoint(a, b) {
                theory.add(HornRule::constraint(vec![dt(v("x"), a), dt(v("x"), b)]));
            }
        }
    }
    Ok(())
}

/// Whether a single triple uses the RDF(S) vocabulary in the standard way.
pub fn triple_has_standard_use(t: &Triple) -> bool {
    const ONTOLOGY: [&str; 5] = [
        rdf::TYPE,
        rdfs::SUB_CLASS_OF,
        rdfs::DOMAIN,
        rdfs::RANGE,
        rdfs::SUB_PROPERTY_OF,
    ];
    const CLASSES: [&str; 5] = [
        rdfs::CONTAINER_MEMBERSHIP_PROPERTY,
        rdfs::RESOURCE,
        rdfs::CLASS,
        rdfs::DATATYPE,
        rdf::PROPERTY,
    ];
    let is = |term: &Term, set: &[&str]| term.as_uri().is_some_and(|u| set.contains(&u));
    if is(&t.subject, &ONTOLOGY) || is(&t.object, &ONTOLOGY) {
        return false;
    }
    if is(&t.subject, &CLASSES) || is(&t.predicate, &CLASSES) {
        return false;
    }
    !(is(&t.object, &CLASSES) && !t.predicate.is_uri_eq(rdf::TYPE))
}

/// Triples of `g` that violate standard use.
pub fn standard_use_violations(g: &Graph) -> Vec<Triple> {
    g.iter().filter(|t| !triple_has_standard_use(t)).cloned().collect()
}

pub fn standard_use(g: &Graph) -> bool {
    g.iter().all(triple_has_standard_use)
}

fn require_standard(g: &Graph) -> Result<()> {
    let bad = standard_use_violations(g);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::NotStandard(bad.iter().map(Triple::to_string).collect()))
    }
}

/// Terms in property and class positions of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Positions {
    pub properties: BTreeSet<Term>,
    pub classes: BTreeSet<Term>,
}

impl Positions {
    pub fn of<'a>(triples: impl IntoIterator<Item = &'a Triple>) -> Self {
        let mut pos = Positions::default();
        for t in triples {
            pos.properties.insert(t.predicate.clone());
            let p = t.predicate.as_uri().unwrap_or("");
            match p {
                rdfs::SUB_PROPERTY_OF => {
                    pos.properties.insert(t.subject.clone());
                    pos.properties.insert(t.object.clone());
                }
                rdfs::SUB_CLASS_OF => {
                    pos.classes.insert(t.subject.clone());
                    pos.classes.insert(t.object.clone());
                }
                rdfs::DOMAIN | rdfs::RANGE => {
                    pos.properties.insert(t.subject.clone());
                    pos.classes.insert(t.object.clone());
                }
                rdf::TYPE => {
                    pos.classes.insert(t.object.clone());
                    match t.object.as_uri() {
                        Some(rdf::PROPERTY | rdfs::CONTAINER_MEMBERSHIP_PROPERTY) => {
                            pos.properties.insert(t.subject.clone());
                        }
                        Some(rdfs::CLASS | rdfs::DATATYPE) => {
                            pos.classes.insert(t.subject.clone());
                        }
                        _ => {}
                    }
                }
                _ => {}
            }
        }
        pos
    }
}

/// The axiomatic triples (rdfs, up to `max_idx`) that have standard use.
pub fn standard_axiomatic_triples(max_idx: usize) -> Vec<Triple> {
    axiomatic_triples(BaseRegime::Rdfs, max_idx)
        .expect("rdfs has axiomatic triples")
        .into_iter()
        .filter(triple_has_standard_use)
        .collect()
}

/// Violations of `E ⊴ S`: class and property vocabularies of `E` within
/// those of `S` (which include the standard-use axiomatic triples), no blank
/// nodes in class or property positions of `E`, and no `rdfs:Resource`,
/// `rdfs:Class` or `rdf:Property` in `E`. Both graphs must have standard use.
pub fn entailment_precondition_erdfs(s: &Graph, e: &Graph) -> Result<Vec<String>> {
    require_standard(s)?;
    require_standard(e)?;
    let max_idx = crate::model::max_container_index([s, e]);
    let axioms = standard_axiomatic_triples(max_idx);
    let ps = Positions::of(s.iter().chain(axioms.iter()));
    let pe = Positions::of(e.iter());
    let mut report = Vec::new();
    for p in &pe.properties {
        if p.is_blank() {
            report.push(format!("blank node {p} in a property position"));
        } else if !ps.properties.contains(p) {
            report.push(format!("{p} is not in the property vocabulary of the entailing graph"));
        }
    }
    for cl in &pe.classes {
        if cl.is_blank() {
            report.push(format!("blank node {cl} in a class position"));
        } else if !ps.classes.contains(cl) {
            report.push(format!("{cl} is not in the class vocabulary of the entailing graph"));
        }
    }
    for forbidden in [rdfs::RESOURCE, rdfs::CLASS, rdf::PROPERTY] {
        if e.iter().any(|t| t.terms().iter().any(|x| x.is_uri_eq(forbidden))) {
            report.push(format!("<{forbidden}> occurs in the entailed graph"));
        }
    }
    Ok(report)
}

/// `tr^erdfs(G)`: rules for ontology triples and atoms for the rest, with
/// blank nodes existentially quantified over both.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ErdfsTranslation {
    pub variables: Vec<String>,
    pub rules: Vec<HornRule>,
    pub atoms: Vec<Atom>,
}

impl ErdfsTranslation {
    fn all_atoms(&self) -> impl Iterator<Item = &Atom> {
        self.atoms
            .iter()
            .chain(self.rules.iter().flat_map(|r| r.body.iter().chain([&r.head])))
    }

    /// The atoms as an existential conjunction (the query part).
    pub fn conjunction(&self) -> ExistentialConjunction {
        ExistentialConjunction {
            variables: self.variables.clone(),
            atoms: self.atoms.clone(),
        }
    }

    /// Replace every blank-node variable by a Skolem constant.
    pub fn skolemize(&self, namespace: &str, reserved: &BTreeSet<Term>) -> Result<(Vec<HornRule>, Vec<Atom>)> {
        let phi = ExistentialConjunction {
            variables: self.variables.clone(),
            atoms: self.all_atoms().cloned().collect(),
        };
        let map = crate::logic::skolem_map(&phi, namespace, reserved)?;
        let rules = self
            .rules
            .iter()
            .map(|r| r.substitute(&map).validate())
            .collect::<Result<_>>()?;
        Ok((rules, self.atoms.iter().map(|a| a.substitute(&map)).collect()))
    }
}

impl fmt::Display for ErdfsTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.variables.is_empty() {
            writeln!(f, "exists {} .", self.variables.join(","))?;
        }
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        for a in &self.atoms {
            writeln!(f, "{a} .")?;
        }
        Ok(())
    }
}

fn tr_erdfs_triple(t: &Triple, out: &mut ErdfsTranslation) {
    let (s, o) = (lterm(&t.subject), lterm(&t.object));
    let x = || v("x");
    let y = || v("y");
    match t.predicate.as_uri() {
        Some(rdf::TYPE) => {
            out.atoms.push(Atom::Isa(s.clone(), o));
            match t.object.as_uri() {
                Some(rdfs::DATATYPE) => out.rules.push(HornRule::new(
                    vec![Atom::Isa(x(), s)],
                    Atom::Isa(x(), c(rdfs::LITERAL)),
                )),
                Some(rdfs::CONTAINER_MEMBERSHIP_PROPERTY) => out.rules.push(HornRule::new(
                    vec![Atom::Data(x(), s, y())],
                    Atom::Data(x(), c(rdfs::MEMBER), y()),
                )),
                _ => {}
            }
        }
        Some(rdfs::SUB_CLASS_OF) => out.rules.push(HornRule::new(vec![Atom::Isa(x(), s)], Atom::Isa(x(), o))),
        Some(rdfs::SUB_PROPERTY_OF) => out
            .rules
            .push(HornRule::new(vec![Atom::Data(x(), s, y())], Atom::Data(x(), o, y()))),
        Some(rdfs::DOMAIN) => out.rules.push(HornRule::new(vec![Atom::Data(x(), s, y())], Atom::Isa(x(), o))),
        Some(rdfs::RANGE) => out.rules.push(HornRule::new(vec![Atom::Data(x(), s, y())], Atom::Isa(y(), o))),
        _ => out.atoms.push(Atom::Data(s, lterm(&t.predicate), o)),
    }
}

/// `tr^erdfs(G)` for a graph with standard use of the RDF(S) vocabulary.
pub fn tr_erdfs(g: &Graph) -> Result<ErdfsTranslation> {
    require_standard(g)?;
    let mut out = ErdfsTranslation {
        variables: sorted_blank_vars(g),
        ..Default::default()
    };
    for t in g.iter() {
        tr_erdfs_triple(t, &mut out);
    }
    Ok(out)
}

/// `Ψ^{erdfs-V}` over `vocab` with container-membership axioms up to `max_idx`.
pub fn psi_erdfs_v(vocab: &Vocabulary, max_idx: usize) -> HornTheory {
    let mut theory = HornTheory::new();
    let mut tr = ErdfsTranslation::default();
    for t in standard_axiomatic_triples(max_idx) {
        tr_erdfs_triple(&t, &mut tr);
    }
    theory.extend(tr.rules);
    for a in tr.atoms {
        theory.add_fact(a);
    }
    for lit in &vocab.typed {
        match xml_typedness(lit) {
            Some(true) => {
                theory.add_fact(Atom::isa(lit, c(rdf::XML_LITERAL)));
            }
            Some(false) => {
                theory.add_fact(Atom::isa(lit, c(ns::ILL_XML)));
            }
            None => {}
        }
    }
    for lit in &vocab.plain {
        theory.add_fact(Atom::isa(lit, c(rdfs::LITERAL)));
    }
    theory.add(HornRule::constraint(vec![
        Atom::isa(v("x"), c(rdfs::LITERAL)),
        Atom::isa(v("x"), c(ns::ILL_XML)),
    ]));
    theory
}

/// Assignment of blank-node variables, keyed by the blank-node label.
pub fn blank_assignment(witness: &BTreeMap<String, Term>) -> BTreeMap<String, Term> {
    witness
        .iter()
        .map(|(k, t)| (k.strip_prefix("_:").unwrap_or(k).to_string(), t.clone()))
        .collect()
}
