//! Conjunctive-query evaluation by backtracking over the fact store.

use std::collections::BTreeMap;
use std::time::Instant;

use super::check_deadline;
use super::store::{masked_key, Fact, FactStore, Mask, RelId, TermId, DATA, ISA};
use crate::error::Result;
use crate::logic::{Atom, ExistentialConjunction, LTerm};
use crate::model::Term;

/// A satisfying assignment of the query variables.
pub type Witness = BTreeMap<String, Term>;

#[derive(Debug, Clone, Copy)]
enum QArg {
    Const(TermId),
    Var(usize),
}

struct QAtom {
    rel: RelId,
    arity: usize,
    args: [QArg; 3],
}

struct Search<'a> {
    store: &'a FactStore,
    atoms: Vec<QAtom>,
    env: Vec<Option<TermId>>,
    done: Vec<bool>,
    steps: u64,
    deadline: Option<Instant>,
}

impl Search<'_> {
    fn mask_and_key(&self, a: &QAtom) -> (Mask, Fact) {
        let mut mask = 0;
        let mut key = [0; 3];
        for i in 0..a.arity {
            let v = match a.args[i] {
                QArg::Const(c) => Some(c),
                QArg::Var(v) => self.env[v],
            };
            if let Some(v) = v {
                mask |= 1 << i;
                key[i] = v;
            }
        }
        (mask, key)
    }

    fn candidates(&self, a: &QAtom) -> Vec<Fact> {
        let rel = &self.store.relations[a.rel];
        let (mask, key) = self.mask_and_key(a);
        if mask == 0 {
            return rel.facts.clone();
        }
        if mask == (1u8 << a.arity) - 1 {
            return if rel.contains(&key) { vec![key] } else { Vec::new() };
        }
        match rel.lookup(mask, &key) {
            Some(ids) => ids.iter().map(|&i| rel.facts[i as usize]).collect(),
            None => rel.facts.iter().filter(|f| masked_key(f, mask) == key).copied().collect(),
        }
    }

    fn solve(&mut self, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        self.steps += 1;
        if self.steps % 4096 == 0 {
            check_deadline(self.deadline, self.store.len(), 0)?;
        }
        // Most constrained atom first.
        let mut best: Option<(usize, Vec<Fact>)> = None;
        for j in 0..self.atoms.len() {
            if self.done[j] {
                continue;
            }
            let c = self.candidates(&self.atoms[j]);
            if best.as_ref().is_none_or(|(_, b)| c.len() < b.len()) {
                let empty = c.is_empty();
                best = Some((j, c));
                if empty {
                    break;
                }
            }
        }
        let (j, cands) = best.expect("an atom remains");
        self.done[j] = true;
        for f in cands {
            let mut bound = [usize::MAX; 3];
            let mut ok = true;
            let (arity, args) = (self.atoms[j].arity, self.atoms[j].args);
            for i in 0..arity {
                if let QArg::Var(v) = args[i] {
                    match self.env[v] {
                        None => {
                            self.env[v] = Some(f[i]);
                            bound[i] = v;
                        }
                        Some(x) if x != f[i] => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                    }
                }
            }
            if ok && self.solve(remaining - 1)? {
                return Ok(true);
            }
            for v in bound {
                if v != usize::MAX {
                    self.env[v] = None;
                }
            }
        }
        self.done[j] = false;
        Ok(false)
    }
}

/// Find an assignment of the variables of `q` making every atom a fact of
/// `store`. `true` atoms are skipped; a `false` atom has no solution.
pub fn query(store: &mut FactStore, q: &ExistentialConjunction, deadline: Option<Instant>) -> Result<Option<Witness>> {
    let mut vars: Vec<String> = Vec::new();
    let mut atoms = Vec::new();
    for a in &q.atoms {
        let rel = match a {
            Atom::Top => continue,
            Atom::Bottom => return Ok(None),
            Atom::Eq(x, y) => {
                if x == y {
                    continue;
                }
                return Ok(None);
            }
            Atom::Data(..) => DATA,
            Atom::Isa(..) => ISA,
            Atom::Pred { name, args } => match store.lookup_pred(name, args.len()) {
                Some(r) => r,
                None => return Ok(None),
            },
        };
        let terms = a.args();
        let mut args = [QArg::Const(0); 3];
        for (i, t) in terms.iter().enumerate() {
            args[i] = match t {
                LTerm::Const(c) => match store.interner.get(c) {
                    Some(id) => QArg::Const(id),
                    None => return Ok(None),
                },
                LTerm::Var(v) => {
                    let idx = vars.iter().position(|x| x == v).unwrap_or_else(|| {
                        vars.push(v.clone());
                        vars.len() - 1
                    });
                    QArg::Var(idx)
                }
            };
        }
        atoms.push(QAtom {
            rel,
            arity: terms.len(),
            args,
        });
    }
    // Any partially bound pattern may be looked up; build indexes up front.
    for a in &atoms {
        let full = (1u8 << a.arity) - 1;
        for mask in 1..full {
            store.relations[a.rel].ensure_index(mask);
        }
    }
    let n = atoms.len();
    let mut search = Search {
        store,
        atoms,
        env: vec![None; vars.len()],
        done: vec![false; n],
        steps: 0,
        deadline,
    };
    if !search.solve(n)? {
        return Ok(None);
    }
    let witness = vars
        .into_iter()
        .zip(&search.env)
        .map(|(v, id)| (v, store_term(search.store, id.expect("all variables bound"))))
        .collect();
    Ok(Some(witness))
}

fn store_term(store: &FactStore, id: TermId) -> Term {
    store.interner.term(id).clone()
}
