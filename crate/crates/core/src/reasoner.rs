//! Entailment and satisfiability decisions.
//!
//! For the simple, rdf and rdfs regimes (optionally with datatypes) the
//! entailing graph is translated, Skolemized and materialized together with
//! the regime axiomatization; the entailed graph is then evaluated as a
//! boolean conjunctive query. In datatype modes every literal is first
//! replaced by the representative of its value class, which removes the
//! need for equality reasoning. The extensional regime uses the direct
//! embedding instead; rules of the entailed graph are checked by freezing
//! their bodies with fresh constants.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::datatype::{DatatypeMap, Normalizer};
use crate::embedding::{self, Axiomatization};
use crate::engine::{query, Limits, Materializer, Stats, Witness};
use crate::error::{Error, Result};
use crate::logic::{skolem_map, Atom, ExistentialConjunction, HornRule, HornTheory, LTerm, SKOLEM_NAMESPACE};
use crate::model::{collect_vocabulary, max_container_index, BaseRegime, DatatypeMode, Graph, Regime, Term};
use crate::ns;

/// Settings shared by all decisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Prefix of Skolem constants.
    pub skolem_namespace: String,
    /// Append a random UUID to the Skolem namespace.
    pub unique_skolem: bool,
    pub limits: Limits,
    /// Extra container-membership indexes beyond the largest occurring one.
    pub container_padding: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            skolem_namespace: SKOLEM_NAMESPACE.to_string(),
            unique_skolem: false,
            limits: Limits::none(),
            container_padding: 0,
        }
    }
}

impl Config {
    fn namespace(&self) -> String {
        if self.unique_skolem {
            format!("{}{}:", self.skolem_namespace, uuid::Uuid::new_v4())
        } else {
            self.skolem_namespace.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Entailed,
    NotEntailed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Entailed => "ENTAILED",
            Verdict::NotEntailed => "NOT-ENTAILED",
        })
    }
}

/// Outcome of an entailment check. A witness is present exactly when the
/// verdict is constructive (entailed, and not because the entailing graph is
/// unsatisfiable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntailmentResult {
    pub verdict: Verdict,
    pub via_inconsistency: bool,
    pub witness: Option<Witness>,
    pub stats: Stats,
}

impl EntailmentResult {
    pub fn is_entailed(&self) -> bool {
        self.verdict == Verdict::Entailed
    }

    /// The machine-readable verdict line.
    pub fn verdict_line(&self) -> String {
        if self.via_inconsistency {
            format!("VERDICT: {} via-inconsistency", self.verdict)
        } else {
            format!("VERDICT: {}", self.verdict)
        }
    }
}

/// A decision problem compiled to Horn logic: materialize `theory`, then
/// answer `query` and check every rule of `rules_to_check`.
#[derive(Debug, Clone)]
pub struct Problem {
    pub regime: Regime,
    pub theory: HornTheory,
    pub query: ExistentialConjunction,
    pub rules_to_check: Vec<HornRule>,
    /// The regime axiomatization as generated, before grounding and
    /// normalization (for inspection).
    pub axiomatization: Axiomatization,
}

impl Problem {
    /// Textual dump in the debug syntax of the logic module.
    pub fn dump(&self) -> String {
        let mut out = format!("# regime {}\n# axiomatization\n{}", self.regime, self.axiomatization);
        out.push_str("# theory\n");
        out.push_str(&self.theory.to_string());
        out.push_str("# query\n");
        out.push_str(&format!("{}\n", self.query));
        for r in &self.rules_to_check {
            out.push_str(&format!("# check {r}\n"));
        }
        out
    }
}

fn regime_check(regime: Regime) -> Result<()> {
    if regime.base == BaseRegime::Erdfs && regime.datatypes != DatatypeMode::None {
        return Err(Error::Unsupported(format!(
            "{regime}: datatype modes are only evaluable for simple, rdf and rdfs"
        )));
    }
    Ok(())
}

/// Compile `S ⊨ E` under `regime`. Datatype modes use `dtmap`, or the XSD map
/// when none is given.
pub fn prepare(s: &Graph, e: &Graph, regime: Regime, dtmap: Option<&DatatypeMap>, config: &Config) -> Result<Problem> {
    regime_check(regime)?;
    if regime.base == BaseRegime::Erdfs {
        return prepare_erdfs(s, e, config);
    }
    let default_map;
    let dtmap = match (regime.datatypes, dtmap) {
        (DatatypeMode::None, _) => None,
        (_, Some(d)) => Some(d),
        (_, None) => {
            default_map = DatatypeMap::xsd();
            Some(&default_map)
        }
    };
    let vocab = collect_vocabulary([s, e]);
    let max_idx = max_container_index([s, e]) + config.container_padding;
    let axiomatization = embedding::psi(regime, dtmap, &vocab, max_idx)?;

    let tr_s = embedding::tr(s);
    let mut query = embedding::tr(e);
    let mut reserved = axiomatization.theory.constants();
    reserved.extend(query.atoms.iter().flat_map(Atom::constants).cloned());
    let map = skolem_map(&tr_s, &config.namespace(), &reserved)?;
    let mut theory = axiomatization.theory.clone();
    for a in &tr_s.atoms {
        theory.add_fact(a.substitute(&map));
    }
    if let Some(d) = dtmap {
        let normalizer = Normalizer::new(d, vocab.literals());
        theory = normalizer.theory(&theory);
        query = normalizer.conjunction(&query);
    }
    if !axiomatization.universal_types.is_empty() {
        let mut constants = theory.constants();
        constants.extend(query.atoms.iter().flat_map(Atom::constants).cloned());
        for fact in axiomatization.universal_facts(&constants) {
            theory.add_fact(fact);
        }
    }
    Ok(Problem {
        regime,
        theory,
        query,
        rules_to_check: Vec::new(),
        axiomatization,
    })
}

fn prepare_erdfs(s: &Graph, e: &Graph, config: &Config) -> Result<Problem> {
    let report = embedding::entailment_precondition_erdfs(s, e)?;
    if !report.is_empty() {
        return Err(Error::Precondition(report));
    }
    let tr_s = embedding::tr_erdfs(s)?;
    let tr_e = embedding::tr_erdfs(e)?;
    let vocab = collect_vocabulary([s, e]);
    let max_idx = max_container_index([s, e]) + config.container_padding;
    let psi_v = embedding::psi_erdfs_v(&vocab, max_idx);

    let mut reserved = psi_v.constants();
    reserved.extend(tr_e.rules.iter().flat_map(HornRule::constants).cloned());
    reserved.extend(tr_e.atoms.iter().flat_map(Atom::constants).cloned());
    let (rules, atoms) = tr_s.skolemize(&config.namespace(), &reserved)?;
    let mut theory = psi_v.clone();
    theory.extend(rules);
    for a in atoms {
        theory.add_fact(a);
    }
    let rules_to_check = tr_e
        .rules
        .iter()
        .cloned()
        .map(HornRule::validate)
        .collect::<Result<Vec<_>>>()?;
    Ok(Problem {
        regime: Regime::ERDFS,
        theory,
        query: tr_e.conjunction(),
        rules_to_check,
        axiomatization: Axiomatization {
            theory: psi_v,
            ..Default::default()
        },
    })
}

/// Freeze the body of `rule` with fresh constants, add it to a copy of the
/// materialized theory, and check the head (or inconsistency).
fn check_rule(m: &Materializer, rule: &HornRule) -> Result<bool> {
    let vars: BTreeSet<&str> = rule.body.iter().flat_map(Atom::vars).collect();
    let map = vars
        .into_iter()
        .map(|v| (v.to_string(), LTerm::Const(Term::uri(format!("{}frozen:{v}", ns::INTERNAL)))))
        .collect();
    let frozen = rule.substitute(&map);
    let mut m = m.clone();
    m.extend(&frozen.body)?;
    if m.is_inconsistent() {
        return Ok(true);
    }
    Ok(match &frozen.head {
        Atom::Bottom => false,
        Atom::Top => true,
        head => m.store().contains(head),
    })
}

/// Materialize and answer a compiled problem.
pub fn solve(problem: &Problem, limits: Limits) -> Result<EntailmentResult> {
    let mut m = Materializer::new(&problem.theory, limits)?;
    m.run()?;
    let inconsistent = m.is_inconsistent();
    let entailed_by_inconsistency = EntailmentResult {
        verdict: Verdict::Entailed,
        via_inconsistency: true,
        witness: None,
        stats: m.stats().clone(),
    };
    if inconsistent {
        return Ok(entailed_by_inconsistency);
    }
    for rule in &problem.rules_to_check {
        if !check_rule(&m, rule)? {
            return Ok(EntailmentResult {
                verdict: Verdict::NotEntailed,
                via_inconsistency: false,
                witness: None,
                stats: m.stats().clone(),
            });
        }
    }
    let deadline = m.deadline();
    let witness = query(m.store_mut(), &problem.query, deadline)?;
    Ok(EntailmentResult {
        verdict: if witness.is_some() {
            Verdict::Entailed
        } else {
            Verdict::NotEntailed
        },
        via_inconsistency: false,
        witness,
        stats: m.stats().clone(),
    })
}

/// Decide `S ⊨ E` under `regime`.
pub fn decide(s: &Graph, e: &Graph, regime: Regime, dtmap: Option<&DatatypeMap>, config: &Config) -> Result<EntailmentResult> {
    let problem = prepare(s, e, regime, dtmap, config)?;
    solve(&problem, config.limits)
}

/// Whether `S` is satisfiable under `regime`.
pub fn satisfiable(s: &Graph, regime: Regime, dtmap: Option<&DatatypeMap>, config: &Config) -> Result<bool> {
    let problem = prepare(s, &Graph::new(), regime, dtmap, config)?;
    let mut m = Materializer::new(&problem.theory, config.limits)?;
    m.run()?;
    Ok(!m.is_inconsistent())
}
