//! Horn frame logic: atoms, rules, theories, Skolemization and Horn
//! normalization of nested implications.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::model::Term;

/// Auxiliary predicate marking ill-typed literals.
pub const ILL_D: &str = "illD";
/// Auxiliary predicate linking a value to a datatype whose class it belongs to.
pub const DT: &str = "dt";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LTerm {
    Const(Term),
    Var(String),
}

impl LTerm {
    pub fn var(name: impl Into<String>) -> Self {
        LTerm::Var(name.into())
    }

    pub fn uri(s: &str) -> Self {
        LTerm::Const(Term::uri(s))
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            LTerm::Var(v) => Some(v),
            LTerm::Const(_) => None,
        }
    }
}

impl From<Term> for LTerm {
    fn from(t: Term) -> Self {
        LTerm::Const(t)
    }
}

impl From<&Term> for LTerm {
    fn from(t: &Term) -> Self {
        LTerm::Const(t.clone())
    }
}

impl fmt::Display for LTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LTerm::Const(t) => write!(f, "{t}"),
            LTerm::Var(v) => f.write_str(v),
        }
    }
}

/// A frame-logic atom. `Data(s, p, o)` is the data molecule `s[p → o]` and
/// `Isa(s, c)` the is-a molecule `s : c`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Data(LTerm, LTerm, LTerm),
    Isa(LTerm, LTerm),
    Pred { name: String, args: Vec<LTerm> },
    Eq(LTerm, LTerm),
    Top,
    Bottom,
}

impl Atom {
    pub fn data(s: impl Into<LTerm>, p: impl Into<LTerm>, o: impl Into<LTerm>) -> Self {
        Atom::Data(s.into(), p.into(), o.into())
    }

    pub fn isa(s: impl Into<LTerm>, c: impl Into<LTerm>) -> Self {
        Atom::Isa(s.into(), c.into())
    }

    pub fn pred(name: &str, args: Vec<LTerm>) -> Self {
        Atom::Pred {
            name: name.to_string(),
            args,
        }
    }

    pub fn args(&self) -> Vec<&LTerm> {
        match self {
            Atom::Data(a, b, c) => vec![a, b, c],
            Atom::Isa(a, b) | Atom::Eq(a, b) => vec![a, b],
            Atom::Pred { args, .. } => args.iter().collect(),
            Atom::Top | Atom::Bottom => vec![],
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.args().into_iter().filter_map(LTerm::as_var)
    }

    pub fn constants(&self) -> impl Iterator<Item = &Term> {
        self.args().into_iter().filter_map(|t| match t {
            LTerm::Const(c) => Some(c),
            LTerm::Var(_) => None,
        })
    }

    pub fn is_ground(&self) -> bool {
        self.vars().next().is_none()
    }

    /// Apply `f` to every argument.
    pub fn map_terms(&self, mut f: impl FnMut(&LTerm) -> LTerm) -> Atom {
        match self {
            Atom::Data(a, b, c) => Atom::Data(f(a), f(b), f(c)),
            Atom::Isa(a, b) => Atom::Isa(f(a), f(b)),
            Atom::Eq(a, b) => Atom::Eq(f(a), f(b)),
            Atom::Pred { name, args } => Atom::Pred {
                name: name.clone(),
                args: args.iter().map(f).collect(),
            },
            Atom::Top => Atom::Top,
            Atom::Bottom => Atom::Bottom,
        }
    }

    pub fn substitute(&self, map: &BTreeMap<String, LTerm>) -> Atom {
        self.map_terms(|t| match t {
            LTerm::Var(v) => map.get(v).cloned().unwrap_or_else(|| t.clone()),
            c => c.clone(),
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Data(s, p, o) => write!(f, "data({s},{p},{o})"),
            Atom::Isa(s, c) => write!(f, "isa({s},{c})"),
            Atom::Eq(a, b) => write!(f, "{a} = {b}"),
            Atom::Top => f.write_str("true"),
            Atom::Bottom => f.write_str("false"),
            Atom::Pred { name, args } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// `body ⊃ head`, all variables universally quantified. A fact has an empty
/// body; a constraint has head `Bottom`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HornRule {
    pub body: Vec<Atom>,
    pub head: Atom,
}

impl HornRule {
    pub fn new(body: Vec<Atom>, head: Atom) -> Self {
        HornRule { body, head }
    }

    pub fn fact(head: Atom) -> Self {
        HornRule { body: vec![], head }
    }

    pub fn constraint(body: Vec<Atom>) -> Self {
        HornRule {
            body,
            head: Atom::Bottom,
        }
    }

    pub fn is_fact(&self) -> bool {
        self.body.is_empty()
    }

    pub fn is_constraint(&self) -> bool {
        self.head == Atom::Bottom
    }

    /// Check safety and the absence of non-trivial equality; drops trivial
    /// `t = t` body atoms.
    pub fn validate(mut self) -> Result<HornRule> {
        if self.head == Atom::Top {
            return Err(Error::NotHorn(format!("{self} has head true")));
        }
        for atom in self.body.iter().chain([&self.head]) {
            if let Atom::Eq(a, b) = atom {
                if a != b || a.as_var().is_some() {
                    return Err(Error::EqUnsupported(atom.to_string()));
                }
            }
        }
        self.body.retain(|a| !matches!(a, Atom::Eq(..) | Atom::Top));
        if matches!(self.head, Atom::Eq(..)) {
            return Err(Error::EqUnsupported(self.head.to_string()));
        }
        let bound: BTreeSet<&str> = self.body.iter().flat_map(Atom::vars).collect();
        if let Some(v) = self.head.vars().find(|v| !bound.contains(v)) {
            return Err(Error::Unsafe {
                var: v.to_string(),
                rule: self.to_string(),
            });
        }
        Ok(self)
    }

    pub fn constants(&self) -> impl Iterator<Item = &Term> {
        self.body.iter().chain([&self.head]).flat_map(Atom::constants)
    }

    pub fn substitute(&self, map: &BTreeMap<String, LTerm>) -> HornRule {
        HornRule {
            body: self.body.iter().map(|a| a.substitute(map)).collect(),
            head: self.head.substitute(map),
        }
    }
}

impl fmt::Display for HornRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_empty() {
            return write!(f, "{} .", self.head);
        }
        for (i, a) in self.body.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, " -> {} .", self.head)
    }
}

/// A finite, deduplicated set of Horn rules in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HornTheory {
    rules: IndexSet<HornRule>,
}

impl HornTheory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, rule: HornRule) -> bool {
        self.rules.insert(rule)
    }

    pub fn add_fact(&mut self, atom: Atom) -> bool {
        self.add(HornRule::fact(atom))
    }

    pub fn extend(&mut self, rules: impl IntoIterator<Item = HornRule>) {
        self.rules.extend(rules)
    }

    pub fn rules(&self) -> impl Iterator<Item = &HornRule> {
        self.rules.iter()
    }

    pub fn contains(&self, rule: &HornRule) -> bool {
        self.rules.contains(rule)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_subset(&self, other: &HornTheory) -> bool {
        self.rules.iter().all(|r| other.contains(r))
    }

    /// Every constant mentioned by some rule.
    pub fn constants(&self) -> BTreeSet<Term> {
        self.rules.iter().flat_map(HornRule::constants).cloned().collect()
    }

    pub fn map_rules(&self, f: impl FnMut(&HornRule) -> HornRule) -> HornTheory {
        HornTheory {
            rules: self.rules.iter().map(f).collect(),
        }
    }
}

impl FromIterator<HornRule> for HornTheory {
    fn from_iter<I: IntoIterator<Item = HornRule>>(iter: I) -> Self {
        HornTheory {
            rules: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for HornTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// `∃ variables. ⋀ atoms`; a boolean conjunctive query on the entailed
/// side, the input of Skolemization on the entailing side.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExistentialConjunction {
    pub variables: Vec<String>,
    pub atoms: Vec<Atom>,
}

impl ExistentialConjunction {
    pub fn is_ground(&self) -> bool {
        self.variables.is_empty()
    }

    pub fn map_atoms(&self, f: impl FnMut(&Atom) -> Atom) -> Self {
        ExistentialConjunction {
            variables: self.variables.clone(),
            atoms: self.atoms.iter().map(f).collect(),
        }
    }
}

impl fmt::Display for ExistentialConjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.variables.is_empty() {
            write!(f, "exists {} . ", self.variables.join(","))?;
        }
        if self.atoms.is_empty() {
            return f.write_str("true");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Default namespace for Skolem constants.
pub const SKOLEM_NAMESPACE: &str = "urn:sk:";

/// The Skolem constant for the `i`-th (1-based) existential variable.
pub fn skolem_constant(namespace: &str, i: usize) -> Term {
    Term::uri(format!("{namespace}sk_{i}"))
}

/// Replace the `i`-th variable of `phi` (in its sorted order) with the
/// constant `{namespace}sk_{i}`. Fails with `E_CLASH` if such a constant
/// occurs in `phi` or in `reserved`.
pub fn skolem_map(
    phi: &ExistentialConjunction,
    namespace: &str,
    reserved: &BTreeSet<Term>,
) -> Result<BTreeMap<String, LTerm>> {
    let mut vars: Vec<&String> = phi.variables.iter().collect();
    vars.sort();
    vars.dedup();
    let occurring: BTreeSet<&Term> = phi.atoms.iter().flat_map(Atom::constants).collect();
    let mut map = BTreeMap::new();
    for (i, v) in vars.into_iter().enumerate() {
        let c = skolem_constant(namespace, i + 1);
        if reserved.contains(&c) || occurring.contains(&c) {
            return Err(Error::Clash(c.to_string()));
        }
        map.insert(v.clone(), LTerm::Const(c));
    }
    Ok(map)
}

/// Skolemize an existential conjunction into ground atoms.
pub fn skolemize(
    phi: &ExistentialConjunction,
    namespace: &str,
    reserved: &BTreeSet<Term>,
) -> Result<Vec<Atom>> {
    let map = skolem_map(phi, namespace, reserved)?;
    Ok(phi.atoms.iter().map(|a| a.substitute(&map)).collect())
}

/// First-order formulas over frame atoms, restricted to the shapes needed
/// to state the regime axiomatizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Atom(Atom),
    And(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
    Exists(Vec<String>, Box<Formula>),
}

impl Formula {
    pub fn atom(a: Atom) -> Self {
        Formula::Atom(a)
    }

    pub fn implies(body: Formula, head: Formula) -> Self {
        Formula::Implies(Box::new(body), Box::new(head))
    }

    pub fn forall(vars: &[&str], f: Formula) -> Self {
        Formula::Forall(vars.iter().map(|v| v.to_string()).collect(), Box::new(f))
    }

    pub fn exists(vars: &[&str], f: Formula) -> Self {
        Formula::Exists(vars.iter().map(|v| v.to_string()).collect(), Box::new(f))
    }

    pub fn and(fs: Vec<Formula>) -> Self {
        Formula::And(fs)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::And(fs) => {
                f.write_str("(")?;
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            Formula::Implies(b, h) => write!(f, "({b} -> {h})"),
            Formula::Forall(vs, g) => write!(f, "forall {} . {g}", vs.join(",")),
            Formula::Exists(vs, g) => write!(f, "exists {} . {g}", vs.join(",")),
        }
    }
}

/// Flatten a body into a list of atoms. Existentials in a body are
/// equivalent to universals over the whole implication; a universal inside
/// a body is not Horn.
fn body_atoms(f: &Formula, out: &mut Vec<Atom>, whole: &Formula) -> Result<()> {
    match f {
        Formula::Atom(Atom::Top) => Ok(()),
        Formula::Atom(a) => {
            out.push(a.clone());
            Ok(())
        }
        Formula::And(fs) => fs.iter().try_for_each(|g| body_atoms(g, out, whole)),
        Formula::Exists(_, g) => body_atoms(g, out, whole),
        Formula::Forall(..) | Formula::Implies(..) => Err(Error::NotHorn(whole.to_string())),
    }
}

fn normalize_into(f: &Formula, body: &[Atom], out: &mut Vec<HornRule>, whole: &Formula) -> Result<()> {
    match f {
        Formula::Atom(Atom::Top) => Ok(()),
        Formula::Atom(a) => {
            out.push(HornRule::new(body.to_vec(), a.clone()));
            Ok(())
        }
        Formula::And(fs) => fs.iter().try_for_each(|g| normalize_into(g, body, out, whole)),
        Formula::Forall(_, g) => normalize_into(g, body, out, whole),
        Formula::Implies(b, h) => {
            let mut extended = body.to_vec();
            body_atoms(b, &mut extended, whole)?;
            normalize_into(h, &extended, out, whole)
        }
        Formula::Exists(..) => Err(Error::NotHorn(whole.to_string())),
    }
}

/// Rewrite a formula into equivalent Horn rules: conjunctive heads are split,
/// nested implications in heads are flattened into the body. Every output
/// rule is validated.
pub fn horn_normalize(f: &Formula) -> Result<Vec<HornRule>> {
    let mut out = Vec::new();
    normalize_into(f, &[], &mut out, f)?;
    out.into_iter().map(HornRule::validate).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ns::{rdf, rdfs};

    fn v(n: &str) -> LTerm {
        LTerm::var(n)
    }

    fn c(n: &str) -> LTerm {
        LTerm::uri(&format!("http://example.org/{n}"))
    }

    #[test]
    fn skolemize_single_variable() {
        let phi = ExistentialConjunction {
            variables: vec!["x".into()],
            atoms: vec![Atom::data(v("x"), LTerm::uri(rdf::TYPE), c("B"))],
        };
        let out = skolemize(&phi, SKOLEM_NAMESPACE, &BTreeSet::new()).unwrap();
        assert_eq!(
            out,
            vec![Atom::data(Term::uri("urn:sk:sk_1"), LTerm::uri(rdf::TYPE), c("B"))]
        );
    }

    #[test]
    fn skolemize_ground_and_cycle() {
        let ground = ExistentialConjunction {
            variables: vec![],
            atoms: vec![Atom::data(c("a"), c("p"), c("b"))],
        };
        assert_eq!(skolemize(&ground, SKOLEM_NAMESPACE, &BTreeSet::new()).unwrap(), ground.atoms);

        let cyc = ExistentialConjunction {
            variables: vec!["y".into(), "x".into()],
            atoms: vec![Atom::data(v("x"), c("p"), v("y")), Atom::data(v("y"), c("p"), v("x"))],
        };
        let out = skolemize(&cyc, SKOLEM_NAMESPACE, &BTreeSet::new()).unwrap();
        let s1 = LTerm::Const(Term::uri("urn:sk:sk_1"));
        let s2 = LTerm::Const(Term::uri("urn:sk:sk_2"));
        assert_eq!(
            out,
            vec![Atom::data(s1.clone(), c("p"), s2.clone()), Atom::data(s2, c("p"), s1)]
        );
    }

    #[test]
    fn skolem_clash() {
        let phi = ExistentialConjunction {
            variables: vec!["x".into()],
            atoms: vec![Atom::data(v("x"), c("p"), Term::uri("urn:sk:sk_1"))],
        };
        assert_eq!(skolemize(&phi, SKOLEM_NAMESPACE, &BTreeSet::new()).unwrap_err().code(), "E_CLASH");
        let phi = ExistentialConjunction {
            variables: vec!["x".into()],
            atoms: vec![Atom::data(v("x"), c("p"), c("o"))],
        };
        let reserved = [Term::uri("urn:sk:sk_1")].into_iter().collect();
        assert_eq!(skolemize(&phi, SKOLEM_NAMESPACE, &reserved).unwrap_err().code(), "E_CLASH");
    }

    #[test]
    fn nested_implication_flattened() {
        let sp = LTerm::uri(rdfs::SUB_PROPERTY_OF);
        let f = Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::atom(Atom::data(v("x"), sp.clone(), v("y"))),
                Formula::forall(
                    &["z1", "z2"],
                    Formula::implies(
                        Formula::atom(Atom::data(v("z1"), v("x"), v("z2"))),
                        Formula::atom(Atom::data(v("z1"), v("y"), v("z2"))),
                    ),
                ),
            ),
        );
        let rules = horn_normalize(&f).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].body.len(), 2);
        assert_eq!(rules[0].head, Atom::data(v("z1"), v("y"), v("z2")));
    }

    #[test]
    fn conjunctive_head_split() {
        let f = Formula::forall(
            &["x"],
            Formula::implies(
                Formula::atom(Atom::isa(v("x"), c("A"))),
                Formula::and(vec![
                    Formula::atom(Atom::isa(v("x"), c("B"))),
                    Formula::atom(Atom::isa(v("x"), c("C"))),
                ]),
            ),
        );
        assert_eq!(horn_normalize(&f).unwrap().len(), 2);
    }

    #[test]
    fn universal_in_body_rejected() {
        // forall x,y ((forall u,v (u[x->v] -> u[type->y])) -> x[domain->y])
        let f = Formula::forall(
            &["x", "y"],
            Formula::implies(
                Formula::forall(
                    &["u", "v"],
                    Formula::implies(
                        Formula::atom(Atom::data(v("u"), v("x"), v("v"))),
                        Formula::atom(Atom::data(v("u"), LTerm::uri(rdf::TYPE), v("y"))),
                    ),
                ),
                Formula::atom(Atom::data(v("x"), LTerm::uri(rdfs::DOMAIN), v("y"))),
            ),
        );
        assert_eq!(horn_normalize(&f).unwrap_err().code(), "E_NOT_HORN");
    }

    #[test]
    fn existential_body_and_safety() {
        // forall x (exists y,z y[x->z]) -> x[type->Property]
        let f = Formula::forall(
            &["x"],
            Formula::implies(
                Formula::exists(&["y", "z"], Formula::atom(Atom::data(v("y"), v("x"), v("z")))),
                Formula::atom(Atom::data(v("x"), LTerm::uri(rdf::TYPE), LTerm::uri(rdf::PROPERTY))),
            ),
        );
        assert_eq!(horn_normalize(&f).unwrap().len(), 1);

        let unsafe_rule = Formula::forall(&["x"], Formula::atom(Atom::isa(v("x"), c("A"))));
        assert_eq!(horn_normalize(&unsafe_rule).unwrap_err().code(), "E_UNSAFE");
    }

    #[test]
    fn equality_handling() {
        let trivial = HornRule::new(
            vec![Atom::isa(v("x"), c("A")), Atom::Eq(c("l"), c("l"))],
            Atom::isa(v("x"), c("B")),
        );
        assert_eq!(trivial.validate().unwrap().body.len(), 1);
        let real = HornRule::fact(Atom::Eq(c("l"), c("m")));
        assert_eq!(real.validate().unwrap_err().code(), "E_EQ_UNSUPPORTED");
    }

    #[test]
    fn debug_syntax() {
        let a = Atom::data(c("s"), c("p"), v("x"));
        assert_eq!(a.to_string(), "data(<http://example.org/s>,<http://example.org/p>,x)");
        assert_eq!(Atom::isa(c("s"), c("A")).to_string(), "isa(<http://example.org/s>,<http://example.org/A>)");
    }

    /// Brute-force model check: over every Herbrand structure on a small
    /// domain, the input formula holds iff all normalized rules hold.
    mod model_check {
        use super::*;

        type Structure = BTreeSet<(u8, u8, u8)>;

        fn eval_term(t: &LTerm, env: &BTreeMap<String, u8>) -> u8 {
            match t {
                LTerm::Var(v) => env[v],
                LTerm::Const(Term::Uri(u)) => u.as_bytes()[u.len() - 1] - b'0',
                LTerm::Const(_) => unreachable!(),
            }
        }

        fn eval_atom(a: &Atom, s: &Structure, env: &BTreeMap<String, u8>) -> bool {
            match a {
                Atom::Data(x, y, z) => s.contains(&(eval_term(x, env), eval_term(y, env), eval_term(z, env))),
                Atom::Top => true,
                Atom::Bottom => false,
                _ => unreachable!(),
            }
        }

        fn eval(f: &Formula, s: &Structure, env: &mut BTreeMap<String, u8>, n: u8) -> bool {
            match f {
                Formula::Atom(a) => eval_atom(a, s, env),
                Formula::And(fs) => fs.iter().all(|g| eval(g, s, env, n)),
                Formula::Implies(b, h) => !eval(b, s, env, n) || eval(h, s, env, n),
                Formula::Forall(vs, g) => quantify(vs, g, s, env, n, true),
                Formula::Exists(vs, g) => quantify(vs, g, s, env, n, false),
            }
        }

        fn quantify(vs: &[String], g: &Formula, s: &Structure, env: &mut BTreeMap<String, u8>, n: u8, all: bool) -> bool {
            let Some((first, rest)) = vs.split_first() else {
                return eval(g, s, env, n);
            };
            let saved = env.get(first).copied();
            let mut result = all;
            for d in 0..n {
                env.insert(first.clone(), d);
                let r = quantify(rest, g, s, env, n, all);
                if r != all {
                    result = r;
                    break;
                }
            }
            match saved {
                Some(d) => env.insert(first.clone(), d),
                None => env.remove(first),
            };
            result
        }

        fn rule_holds(r: &HornRule, s: &Structure, n: u8) -> bool {
            let vars: BTreeSet<String> = r.body.iter().chain([&r.head]).flat_map(Atom::vars).map(String::from).collect();
            let vars: Vec<String> = vars.into_iter().collect();
            let body = Formula::And(r.body.iter().cloned().map(Formula::Atom).collect());
            let f = Formula::Forall(vars, Box::new(Formula::implies(body, Formula::Atom(r.head.clone()))));
            eval(&f, s, &mut BTreeMap::new(), n)
        }

        #[test]
        fn normalization_preserves_models() {
            let k = |i: u8| LTerm::uri(&format!("urn:c{i}"));
            let formulas = vec![
                // subPropertyOf propagation with constant 0 as subPropertyOf
                Formula::forall(
                    &["x", "y"],
                    Formula::implies(
                        Formula::atom(Atom::data(v("x"), k(0), v("y"))),
                        Formula::forall(
                            &["z1", "z2"],
                            Formula::implies(
                                Formula::atom(Atom::data(v("z1"), v("x"), v("z2"))),
                                Formula::atom(Atom::data(v("z1"), v("y"), v("z2"))),
                            ),
                        ),
                    ),
                ),
                Formula::forall(
                    &["x"],
                    Formula::implies(
                        Formula::exists(&["y", "z"], Formula::atom(Atom::data(v("y"), v("x"), v("z")))),
                        Formula::and(vec![
                            Formula::atom(Atom::data(v("x"), k(1), k(0))),
                            Formula::atom(Atom::data(v("x"), k(0), v("x"))),
                        ]),
                    ),
                ),
                Formula::forall(
                    &["x"],
                    Formula::implies(
                        Formula::and(vec![
                            Formula::atom(Atom::data(v("x"), k(1), k(1))),
                            Formula::atom(Atom::data(v("x"), k(0), k(1))),
                        ]),
                        Formula::atom(Atom::Bottom),
                    ),
                ),
            ];
            // Domain {0,1}: structures are subsets of the 8 possible data facts.
            let n = 2u8;
            let all: Vec<(u8, u8, u8)> = (0..n)
                .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
                .collect();
            for f in &formulas {
                let rules = horn_normalize(f).unwrap();
                for mask in 0u32..(1 << all.len()) {
                    let s: Structure = all.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, t)| *t).collect();
                    let lhs = eval(f, &s, &mut BTreeMap::new(), n);
                    let rhs = rules.iter().all(|r| rule_holds(r, &s, n));
                    assert_eq!(lhs, rhs, "formula {f} on structure {s:?}");
                }
            }
        }
    }
}
