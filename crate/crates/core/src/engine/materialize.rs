//! Semi-naive fixpoint evaluation.
//!
//! Every rule is compiled once per body position into a join plan that
//! starts from that position's delta (facts new in the previous round).
//! Atoms left of the delta position read only facts older than the delta,
//! atoms right of it read everything, so each body instantiation is found
//! exactly once over the whole run.
//!
//! Transitive properties get a linear encoding. When the theory contains
//! `data(X,c,Y) & data(Y,c,Z) -> data(X,c,Z)` for a constant `c`, the engine
//! keeps an internal relation `base_c` holding every `c`-edge that was not
//! produced by that transitivity rule. All `c`-edges lie in the transitive
//! closure of `base_c`, so any two-atom rule of the shape
//! `data(X,c,Y) & A(X) -> A(Y)` (transitivity itself included) can read
//! `base_c(X,Y)` instead of `data(X,c,Y)` without changing the fixpoint.
//! This keeps closure computation over long chains quadratic instead of
//! cubic.

use std::collections::BTreeMap;
use std::time::Instant;

use rustc_hash::FxHashMap;

use super::store::{Fact, FactStore, Mask, RelId, TermId, DATA, ISA};
use super::{check_deadline, Limits, Stats};
use crate::error::{Error, Result};
use crate::logic::{Atom, HornRule, HornTheory, LTerm};
use crate::model::Term;

const UNBOUND: TermId = TermId::MAX;
/// Derived facts staged per round before each candidate is checked
/// against the store.
const UNCHECKED_STAGE: usize = 1 << 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arg {
    Const(TermId),
    Var(usize),
}

#[derive(Debug, Clone)]
struct CAtom {
    rel: RelId,
    arity: usize,
    args: [Arg; 3],
}

#[derive(Debug, Clone, Copy)]
enum Range {
    Old,
    Delta,
    All,
}

#[derive(Debug, Clone)]
struct Step {
    atom: usize,
    mask: Mask,
    range: Range,
}

#[derive(Debug, Clone)]
struct CRule {
    body: Vec<CAtom>,
    /// `None` for constraints.
    head: Option<CAtom>,
    nvars: usize,
    plans: Vec<Vec<Step>>,
    /// Whether `data` facts derived by this rule feed the base relation of
    /// their property.
    feeds_base: bool,
}

fn is_var(t: &LTerm) -> bool {
    t.as_var().is_some()
}

/// `c` if `rule` is `data(X,c,Y) & data(Y,c,Z) -> data(X,c,Z)` (either body order).
fn transitivity_constant(rule: &HornRule) -> Option<Term> {
    let [a, b] = rule.body.as_slice() else { return None };
    let Atom::Data(hx, LTerm::Const(c), hz) = &rule.head else { return None };
    for (first, second) in [(a, b), (b, a)] {
        if let (Atom::Data(x, LTerm::Const(c1), y1), Atom::Data(y2, LTerm::Const(c2), z)) = (first, second) {
            let vars = [x, y1, z];
            if c1 == c
                && c2 == c
                && y1 == y2
                && x == hx
                && z == hz
                && vars.iter().all(|v| is_var(v))
                && x != y1
                && y1 != z
                && x != z
            {
                return Some(c.clone());
            }
        }
    }
    None
}

/// A two-atom rule `data(X,c,Y) & A -> A[X:=Y]` with `Y` absent from `A`.
/// Returns the index of the `data(X,c,Y)` atom and `c`.
fn propagation_shape(rule: &HornRule) -> Option<(usize, Term)> {
    let [_, _] = rule.body.as_slice() else { return None };
    for p in 0..2 {
        let Atom::Data(x @ LTerm::Var(xv), LTerm::Const(c), y @ LTerm::Var(yv)) = &rule.body[p] else {
            continue;
        };
        if xv == yv {
            continue;
        }
        let a = &rule.body[1 - p];
        if a.vars().any(|v| v == yv) || !a.vars().any(|v| v == xv) {
            continue;
        }
        let moved = a.map_terms(|t| if t == x { y.clone() } else { t.clone() });
        if moved == rule.head {
            return Some((p, c.clone()));
        }
    }
    None
}

/// Whether `rule` (of propagation shape on `c`) derives `c`-edges by
/// extending an existing `c`-edge: `data(W,c,X) & data(X,c,Y) -> data(W,c,Y)`.
fn extends_edge(rule: &HornRule, p: usize, c: &Term) -> bool {
    let Atom::Data(x, _, _) = &rule.body[p] else { return false };
    match &rule.body[1 - p] {
        Atom::Data(w, LTerm::Const(c2), x2) => c2 == c && x2 == x && w != x,
        _ => false,
    }
}

/// Incremental semi-naive evaluator owning its fact store.
#[derive(Debug, Clone)]
pub struct Materializer {
    store: FactStore,
    rules: Vec<CRule>,
    /// Base relation per transitive property id.
    base_of: FxHashMap<TermId, RelId>,
    limits: Limits,
    deadline: Option<Instant>,
    started: Instant,
    stats: Stats,
}

struct Compiler<'a> {
    store: &'a mut FactStore,
    vars: BTreeMap<String, usize>,
}

impl Compiler<'_> {
    fn arg(&mut self, t: &LTerm) -> Arg {
        match t {
            LTerm::Const(c) => Arg::Const(self.store.interner.intern(c)),
            LTerm::Var(v) => {
                let n = self.vars.len();
                Arg::Var(*self.vars.entry(v.clone()).or_insert(n))
            }
        }
    }

    fn atom(&mut self, a: &Atom) -> Result<CAtom> {
        let rel = match a {
            Atom::Data(..) => DATA,
            Atom::Isa(..) => ISA,
            Atom::Pred { name, args } => self.store.pred_relation(name, args.len())?,
            other => return Err(Error::Unsupported(format!("atom {other} in rule"))),
        };
        let terms = a.args();
        let mut args = [Arg::Const(0); 3];
        for (i, t) in terms.iter().enumerate() {
            args[i] = self.arg(t);
        }
        Ok(CAtom {
            rel,
            arity: terms.len(),
            args,
        })
    }
}

fn plan(body: &[CAtom], delta: usize) -> Vec<Step> {
    let mut bound = vec![false; body.iter().flat_map(|a| a.args).filter_map(var_of).max().map_or(0, |m| m + 1)];
    let mask_of = |a: &CAtom, bound: &[bool]| -> Mask {
        let mut m = 0;
        for i in 0..a.arity {
            match a.args[i] {
                Arg::Const(_) => m |= 1 << i,
                Arg::Var(v) if bound[v] => m |= 1 << i,
                Arg::Var(_) => {}
            }
        }
        m
    };
    let range = |j: usize| match j.cmp(&delta) {
        std::cmp::Ordering::Less => Range::Old,
        std::cmp::Ordering::Equal => Range::Delta,
        std::cmp::Ordering::Greater => Range::All,
    };
    let mut steps = vec![Step {
        atom: delta,
        mask: mask_of(&body[delta], &bound),
        range: Range::Delta,
    }];
    let bind = |a: &CAtom, bound: &mut Vec<bool>| {
        for arg in &a.args[..a.arity] {
            if let Arg::Var(v) = arg {
                bound[*v] = true;
            }
        }
    };
    bind(&body[delta], &mut bound);
    let mut remaining: Vec<usize> = (0..body.len()).filter(|&j| j != delta).collect();
    while !remaining.is_empty() {
        let (pos, &j) = remaining
            .iter()
            .enumerate()
            .max_by_key(|(_, &j)| {
                let m = mask_of(&body[j], &bound);
                // Prefer more bound positions, then fewer free variables, then order.
                (m.count_ones(), std::cmp::Reverse(body[j].arity), std::cmp::Reverse(j))
            })
            .expect("non-empty");
        remaining.remove(pos);
        steps.push(Step {
            atom: j,
            mask: mask_of(&body[j], &bound),
            range: range(j),
        });
        bind(&body[j], &mut bound);
    }
    steps
}

fn var_of(a: Arg) -> Option<usize> {
    match a {
        Arg::Var(v) => Some(v),
        Arg::Const(_) => None,
    }
}

/// Search state shared by the recursive join.
struct Join<'a> {
    store: &'a FactStore,
    rule: &'a CRule,
    steps: &'a [Step],
    env: Vec<TermId>,
    /// Fact matched at each step of the current partial solution.
    matched: Vec<Fact>,
}

impl Join<'_> {
    fn key(&self, atom: &CAtom, mask: Mask) -> Fact {
        let mut k = [0; 3];
        for i in 0..atom.arity {
            if mask & (1 << i) != 0 {
                k[i] = match atom.args[i] {
                    Arg::Const(c) => c,
                    Arg::Var(v) => self.env[v],
                };
            }
        }
        k
    }

    /// Bind the free variables of `atom` against `f`; returns the variables
    /// bound here, or `None` on mismatch (bindings undone).
    fn unify(&mut self, atom: &CAtom, f: &Fact) -> Option<[usize; 3]> {
        let mut newly = [usize::MAX; 3];
        for i in 0..atom.arity {
            match atom.args[i] {
                Arg::Const(c) => {
                    if c != f[i] {
                        self.undo(&newly);
                        return None;
                    }
                }
                Arg::Var(v) => {
                    if self.env[v] == UNBOUND {
                        self.env[v] = f[i];
                        newly[i] = v;
                    } else if self.env[v] != f[i] {
                        self.undo(&newly);
                        return None;
                    }
                }
            }
        }
        Some(newly)
    }

    fn undo(&mut self, newly: &[usize; 3]) {
        for &v in newly {
            if v != usize::MAX {
                self.env[v] = UNBOUND;
            }
        }
    }

    /// Enumerate all solutions; `emit` returns false to stop early.
    fn run(&mut self, k: usize, emit: &mut dyn FnMut(&[TermId], &[Fact]) -> bool) -> bool {
        if k == self.steps.len() {
            return emit(&self.env, &self.matched);
        }
        let step = &self.steps[k];
        let atom = &self.rule.body[step.atom];
        let rel = &self.store.relations[atom.rel];
        let (lo, hi) = match step.range {
            Range::Old => (0, rel.mark),
            Range::Delta => (rel.mark, rel.facts.len()),
            Range::All => (0, rel.facts.len()),
        };
        if lo >= hi {
            return true;
        }
        let key = self.key(atom, step.mask);
        match rel.lookup(step.mask, &key) {
            None => {
                for i in lo..hi {
                    let f = rel.facts[i];
                    if let Some(newly) = self.unify(atom, &f) {
                        self.matched[k] = f;
                        let go = self.run(k + 1, emit);
                        self.undo(&newly);
                        if !go {
                            return false;
                        }
                    }
                }
            }
            Some(ids) => {
                let start = ids.partition_point(|&i| (i as usize) < lo);
                let end = ids.partition_point(|&i| (i as usize) < hi);
                for &i in &ids[start..end] {
                    let f = rel.facts[i as usize];
                    if let Some(newly) = self.unify(atom, &f) {
                        self.matched[k] = f;
                        let go = self.run(k + 1, emit);
                        self.undo(&newly);
                        if !go {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn instantiate(atom: &CAtom, env: &[TermId]) -> Fact {
    let mut f = [0; 3];
    for i in 0..atom.arity {
        f[i] = match atom.args[i] {
            Arg::Const(c) => c,
            Arg::Var(v) => env[v],
        };
    }
    f
}

impl Materializer {
    /// Compile `theory`: facts are loaded, rules validated and planned.
    pub fn new(theory: &HornTheory, limits: Limits) -> Result<Self> {
        let started = Instant::now();
        let mut store = FactStore::new();
        let mut rules = Vec::new();
        let mut facts = Vec::new();

        let validated: Vec<HornRule> = theory.rules().cloned().map(HornRule::validate).collect::<Result<_>>()?;
        let transitive: Vec<Term> = validated.iter().filter_map(transitivity_constant).collect();
        let mut base_of: FxHashMap<TermId, RelId> = FxHashMap::default();
        for c in &transitive {
            let id = store.interner.intern(c);
            if !base_of.contains_key(&id) {
                let rel = store.internal_relation(&format!("base:{c}"), 2);
                base_of.insert(id, rel);
            }
        }

        for rule in &validated {
            if rule.body.is_empty() {
                facts.push(rule.head.clone());
                continue;
            }
            let mut compiler = Compiler {
                store: &mut store,
                vars: BTreeMap::new(),
            };
            let mut body = rule.body.iter().map(|a| compiler.atom(a)).collect::<Result<Vec<_>>>()?;
            let head = match &rule.head {
                Atom::Bottom => None,
                h => Some(compiler.atom(h)?),
            };
            let mut feeds_base = true;
            if let Some((p, c)) = propagation_shape(rule) {
                let cid = compiler.store.interner.intern(&c);
                if let Some(&base) = base_of.get(&cid) {
                    let CAtom { args, .. } = body[p];
                    body[p] = CAtom {
                        rel: base,
                        arity: 2,
                        args: [args[0], args[2], Arg::Const(0)],
                    };
                    feeds_base = !extends_edge(rule, p, &c);
                }
            }
            let nvars = compiler.vars.len();
            let plans: Vec<Vec<Step>> = (0..body.len()).map(|d| plan(&body, d)).collect();
            for steps in &plans {
                for s in steps {
                    store.relations[body[s.atom].rel].ensure_index(s.mask);
                }
            }
            rules.push(CRule {
                body,
                head,
                nvars,
                plans,
                feeds_base,
            });
        }
        // Constraints are checked first in every round.
        rules.sort_by_key(|r| r.head.is_some());

        let mut m = Materializer {
            store,
            stats: Stats {
                rules: rules.len(),
                ..Stats::default()
            },
            rules,
            base_of,
            limits,
            deadline: limits.deadline(started),
            started,
        };
        m.add_facts(&facts)?;
        Ok(m)
    }

    fn insert_derived(&mut self, rel: RelId, f: Fact, feeds_base: bool) {
        if self.store.insert(rel, f) && rel == DATA && feeds_base {
            if let Some(&base) = self.base_of.get(&f[1]) {
                self.store.insert(base, [f[0], f[2], 0]);
            }
        }
    }

    fn add_facts(&mut self, facts: &[Atom]) -> Result<()> {
        for a in facts {
            match a {
                Atom::Bottom => self.store.bottom = true,
                Atom::Top => {}
                _ => {
                    let (rel, f) = self
                        .store
                        .encode(a)?
                        .ok_or_else(|| Error::Unsupported(format!("fact {a}")))?;
                    self.insert_derived(rel, f, true);
                }
            }
        }
        self.check_size()
    }

    fn check_size(&self) -> Result<()> {
        if let Some(max) = self.limits.max_facts {
            let n = self.store.len();
            if n > max {
                return Err(Error::ResourceLimit {
                    limit: format!("max-facts {max}"),
                    facts: n,
                    rounds: self.stats.rounds,
                });
            }
        }
        Ok(())
    }

    /// Add ground facts and re-run to the fixpoint.
    pub fn extend(&mut self, facts: &[Atom]) -> Result<()> {
        self.add_facts(facts)?;
        self.run()
    }

    /// Run to the least fixpoint, or until a constraint fires.
    pub fn run(&mut self) -> Result<()> {
        let result = self.run_inner();
        self.stats.facts = self.store.len();
        self.stats.elapsed_ms = self.started.elapsed().as_millis();
        result
    }

    fn run_inner(&mut self) -> Result<()> {
        while !self.store.bottom {
            if self.store.relations.iter().all(|r| r.mark == r.facts.len()) {
                return Ok(());
            }
            self.stats.rounds += 1;
            check_deadline(self.deadline, self.store.len(), self.stats.rounds)?;

            let mut new: Vec<(RelId, Fact, bool)> = Vec::new();
            let mut fired = false;
            let mut firings = 0u64;
            let mut limit_hit: Option<Error> = None;
            let budget = self.limits.max_facts.map(|m| m.saturating_sub(self.store.len()));
            let deadline = self.deadline;
            let rounds = self.stats.rounds;
            let store_len = self.store.len();

            'rules: for rule in &self.rules {
                for steps in &rule.plans {
                    let delta_rel = &self.store.relations[rule.body[steps[0].atom].rel];
                    if delta_rel.mark == delta_rel.facts.len() {
                        continue;
                    }
                    let mut join = Join {
                        store: &self.store,
                        rule,
                        steps,
                        env: vec![UNBOUND; rule.nvars],
                        matched: vec![[0; 3]; steps.len()],
                    };
                    let head_in_body: Vec<usize> = match &rule.head {
                        Some(h) => (0..steps.len()).filter(|&k| rule.body[steps[k].atom].rel == h.rel).collect(),
                        None => Vec::new(),
                    };
                    let store = &self.store;
                    let completed = join.run(0, &mut |env, matched| {
                        firings += 1;
                        let Some(head) = &rule.head else {
                            fired = true;
                            return false;
                        };
                        let f = instantiate(head, env);
                        if head_in_body.iter().any(|&k| matched[k] == f) {
                            return true;
                        }
                        // Small rounds defer duplicate detection to insertion.
                        if (budget.is_none() && new.len() < UNCHECKED_STAGE) || !store.relations[head.rel].contains(&f) {
                            new.push((head.rel, f, rule.feeds_base));
                            if budget.is_some_and(|b| new.len() > b.saturating_mul(2).max(1 << 16)) {
                                limit_hit = Some(Error::ResourceLimit {
                                    limit: "max-facts".into(),
                                    facts: store_len + new.len(),
                                    rounds,
                                });
                                return false;
                            }
                        }
                        if firings % 8192 == 0 {
                            if let Err(e) = check_deadline(deadline, store_len + new.len(), rounds) {
                                limit_hit = Some(e);
                                return false;
                            }
                        }
                        true
                    });
                    if fired {
                        break 'rules;
                    }
                    if let Some(e) = limit_hit.take() {
                        self.stats.firings += firings;
                        return Err(e);
                    }
                    debug_assert!(completed);
                }
            }
            self.stats.firings += firings;
            if fired {
                self.store.bottom = true;
                return Ok(());
            }
            for r in &mut self.store.relations {
                r.mark = r.facts.len();
            }
            for (rel, f, feeds) in new {
                self.insert_derived(rel, f, feeds);
            }
            self.check_size()?;
        }
        Ok(())
    }

    pub fn store(&self) -> &FactStore {
        &self.store
    }

    pub fn store_mut(&mut self) -> &mut FactStore {
        &mut self.store
    }

    pub fn into_store(self) -> FactStore {
        self.store
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn is_inconsistent(&self) -> bool {
        self.store.bottom
    }

    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.deadline
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::materialize as run_to_fixpoint;
    use crate::ns::{rdf, rdfs};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn v(n: &str) -> LTerm {
        LTerm::var(n)
    }

    fn c(n: &str) -> LTerm {
        LTerm::uri(&format!("urn:{n}"))
    }

    fn sc() -> LTerm {
        LTerm::uri(rdfs::SUB_CLASS_OF)
    }

    fn ty() -> LTerm {
        LTerm::uri(rdf::TYPE)
    }

    fn transitivity(p: LTerm) -> HornRule {
        HornRule::new(
            vec![Atom::data(v("x"), p.clone(), v("y")), Atom::data(v("y"), p.clone(), v("z"))],
            Atom::data(v("x"), p, v("z")),
        )
    }

    /// Independent naive evaluator: apply every rule to every combination of
    /// facts until nothing changes.
    fn naive(theory: &HornTheory) -> (BTreeSet<Atom>, bool) {
        let mut facts: BTreeSet<Atom> = theory.rules().filter(|r| r.is_fact()).map(|r| r.head.clone()).collect();
        let rules: Vec<&HornRule> = theory.rules().filter(|r| !r.is_fact()).collect();
        loop {
            let mut added = Vec::new();
            for r in &rules {
                let mut envs = vec![BTreeMap::<String, LTerm>::new()];
                for b in &r.body {
                    let mut next = Vec::new();
                    for env in &envs {
                        let pattern = b.substitute(env);
                        for f in &facts {
                            if let Some(ext) = match_atom(&pattern, f, env) {
                                next.push(ext);
                            }
                        }
                    }
                    envs = next;
                }
                for env in envs {
                    let h = r.head.substitute(&env);
                    if h == Atom::Bottom {
                        return (facts, true);
                    }
                    if !facts.contains(&h) {
                        added.push(h);
                    }
                }
            }
            if added.is_empty() {
                return (facts, false);
            }
            facts.extend(added);
        }
    }

    fn match_atom(p: &Atom, f: &Atom, env: &BTreeMap<String, LTerm>) -> Option<BTreeMap<String, LTerm>> {
        let (pa, fa) = (p.args(), f.args());
        if std::mem::discriminant(p) != std::mem::discriminant(f) || pa.len() != fa.len() {
            return None;
        }
        if let (Atom::Pred { name: n1, .. }, Atom::Pred { name: n2, .. }) = (p, f) {
            if n1 != n2 {
                return None;
            }
        }
        let mut env = env.clone();
        for (x, y) in pa.into_iter().zip(fa) {
            match x {
                LTerm::Var(name) => match env.get(name) {
                    Some(bound) if bound != y => return None,
                    Some(_) => {}
                    None => {
                        env.insert(name.clone(), y.clone());
                    }
                },
                k if k != y => return None,
                _ => {}
            }
        }
        Some(env)
    }

    fn engine_facts(theory: &HornTheory) -> (BTreeSet<Atom>, bool) {
        let store = run_to_fixpoint(theory, Limits::none()).unwrap();
        (store.atoms().collect(), store.is_inconsistent())
    }

    #[test]
    fn transitive_subclass() {
        let mut t = HornTheory::new();
        t.add_fact(Atom::data(c("A"), sc(), c("B")));
        t.add_fact(Atom::data(c("B"), sc(), c("C")));
        t.add(transitivity(sc()));
        let store = run_to_fixpoint(&t, Limits::none()).unwrap();
        assert!(store.contains(&Atom::data(c("A"), sc(), c("C"))));
        assert_eq!(store.len(), 3);
    }

    #[test]
    fn facts_only_unchanged() {
        let mut t = HornTheory::new();
        t.add_fact(Atom::data(c("a"), c("p"), c("b")));
        t.add_fact(Atom::isa(c("a"), c("A")));
        let store = run_to_fixpoint(&t, Limits::none()).unwrap();
        assert_eq!(store.len(), 2);
        assert!(!store.is_inconsistent());
    }

    #[test]
    fn constraint_sets_bottom() {
        let mut t = HornTheory::new();
        t.add_fact(Atom::isa(c("a"), c("A")));
        t.add(HornRule::new(vec![Atom::isa(v("x"), c("A"))], Atom::isa(v("x"), c("B"))));
        t.add(HornRule::constraint(vec![Atom::isa(v("x"), c("B")), Atom::isa(v("x"), c("A"))]));
        assert!(run_to_fixpoint(&t, Limits::none()).unwrap().is_inconsistent());
    }

    #[test]
    fn repeated_variables() {
        let mut t = HornTheory::new();
        t.add_fact(Atom::data(c("a"), c("p"), c("a")));
        t.add_fact(Atom::data(c("a"), c("p"), c("b")));
        t.add(HornRule::new(vec![Atom::data(v("x"), c("p"), v("x"))], Atom::isa(v("x"), c("Loop"))));
        let (facts, _) = engine_facts(&t);
        assert!(facts.contains(&Atom::isa(c("a"), c("Loop"))));
        assert!(!facts.contains(&Atom::isa(c("b"), c("Loop"))));
    }

    #[test]
    fn fact_limit_is_an_error() {
        let mut t = HornTheory::new();
        for i in 0..50 {
            t.add_fact(Atom::data(c(&format!("n{i}")), sc(), c(&format!("n{}", i + 1))));
        }
        t.add(transitivity(sc()));
        let limits = Limits {
            max_facts: Some(100),
            timeout: None,
        };
        let err = run_to_fixpoint(&t, limits).unwrap_err();
        assert_eq!(err.code(), "E_RESOURCE_LIMIT");
    }

    #[test]
    fn incremental_extension() {
        let mut t = HornTheory::new();
        t.add(HornRule::new(vec![Atom::isa(v("x"), c("A"))], Atom::isa(v("x"), c("B"))));
        let mut m = Materializer::new(&t, Limits::none()).unwrap();
        m.run().unwrap();
        m.extend(&[Atom::isa(c("k"), c("A"))]).unwrap();
        assert!(m.store().contains(&Atom::isa(c("k"), c("B"))));
    }

    #[test]
    fn rewrite_shapes_detected() {
        assert_eq!(transitivity_constant(&transitivity(sc())), Some(Term::uri(rdfs::SUB_CLASS_OF)));
        let prop = HornRule::new(
            vec![Atom::data(v("x"), sc(), v("y")), Atom::data(v("z"), ty(), v("x"))],
            Atom::data(v("z"), ty(), v("y")),
        );
        assert_eq!(propagation_shape(&prop).map(|(p, _)| p), Some(0));
        let (p, cst) = propagation_shape(&transitivity(sc())).unwrap();
        assert!(extends_edge(&transitivity(sc()), p, &cst));
        assert!(!extends_edge(&prop, 0, &cst));
    }

    /// A small rdfs-like rule set over a random graph: the semi-naive engine
    /// with the linear transitivity encoding agrees with the naive evaluator.
    fn rule_set() -> HornTheory {
        let sp = LTerm::uri(rdfs::SUB_PROPERTY_OF);
        let dom = LTerm::uri(rdfs::DOMAIN);
        let mut t = HornTheory::new();
        t.add(transitivity(sc()));
        t.add(transitivity(sp.clone()));
        t.add(HornRule::new(
            vec![Atom::data(v("x"), sc(), v("y")), Atom::data(v("z"), ty(), v("x"))],
            Atom::data(v("z"), ty(), v("y")),
        ));
        t.add(HornRule::new(
            vec![Atom::data(v("x"), sp.clone(), v("y")), Atom::data(v("z1"), v("x"), v("z2"))],
            Atom::data(v("z1"), v("y"), v("z2")),
        ));
        t.add(HornRule::new(
            vec![Atom::data(v("x"), dom, v("y")), Atom::data(v("u"), v("x"), v("w"))],
            Atom::data(v("u"), ty(), v("y")),
        ));
        t.add(HornRule::new(
            vec![Atom::data(v("y"), v("x"), v("z"))],
            Atom::data(v("x"), ty(), c("Property")),
        ));
        t.add(HornRule::new(
            vec![Atom::data(v("x"), ty(), c("Property"))],
            Atom::data(v("x"), sp, v("x")),
        ));
        t.add(HornRule::constraint(vec![
            Atom::data(v("x"), ty(), c("Bad")),
            Atom::data(v("x"), ty(), c("Worse")),
        ]));
        t
    }

    fn arb_fact() -> impl Strategy<Value = Atom> {
        let node = prop_oneof![
            (0..5u8).prop_map(|i| c(&format!("n{i}"))),
            Just(sc()),
            Just(LTerm::uri(rdfs::SUB_PROPERTY_OF)),
            Just(LTerm::uri(rdfs::DOMAIN)),
            Just(ty()),
            Just(c("Bad")),
            Just(c("Worse")),
        ];
        (node.clone(), node.clone(), node).prop_map(|(s, p, o)| Atom::Data(s, p, o))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_naive(facts in proptest::collection::vec(arb_fact(), 0..25)) {
            let mut t = rule_set();
            for f in facts {
                t.add_fact(f);
            }
            let (nf, nb) = naive(&t);
            let (ef, eb) = engine_facts(&t);
            prop_assert_eq!(nb, eb);
            if !nb {
                prop_assert_eq!(nf, ef);
            }
        }
    }

    #[test]
    fn long_chain_is_fast() {
        let n = 1000;
        let mut t = HornTheory::new();
        for i in 0..n {
            t.add_fact(Atom::data(c(&format!("C{i}")), sc(), c(&format!("C{}", i + 1))));
        }
        t.add(transitivity(sc()));
        let store = run_to_fixpoint(&t, Limits::none()).unwrap();
        assert_eq!(store.len(), n * (n + 1) / 2);
    }
}
