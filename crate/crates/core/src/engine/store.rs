//! Interned ground-atom storage with per-relation hash indexes.

use std::collections::hash_map::Entry;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::logic::{Atom, LTerm};
use crate::model::Term;

pub type TermId = u32;
pub type RelId = usize;
pub type Fact = [TermId; 3];

pub const DATA: RelId = 0;
pub const ISA: RelId = 1;

/// Bidirectional map between terms and dense integer ids.
#[derive(Debug, Clone, Default)]
pub struct Interner {
    terms: Vec<Term>,
    ids: FxHashMap<Term, TermId>,
}

impl Interner {
    pub fn intern(&mut self, t: &Term) -> TermId {
        if let Some(&id) = self.ids.get(t) {
            return id;
        }
        let id = self.terms.len() as TermId;
        self.terms.push(t.clone());
        self.ids.insert(t.clone(), id);
        id
    }

    pub fn get(&self, t: &Term) -> Option<TermId> {
        self.ids.get(t).copied()
    }

    pub fn term(&self, id: TermId) -> &Term {
        &self.terms[id as usize]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Bitmask of bound argument positions.
pub type Mask = u8;

pub fn masked_key(f: &Fact, mask: Mask) -> Fact {
    let mut k = [0; 3];
    for (i, slot) in k.iter_mut().enumerate() {
        if mask & (1 << i) != 0 {
            *slot = f[i];
        }
    }
    k
}

#[derive(Debug, Clone)]
pub(crate) struct Relation {
    pub name: String,
    pub arity: usize,
    /// Engine-internal relations are excluded from counts and output.
    pub internal: bool,
    pub facts: Vec<Fact>,
    /// Position of every fact in `facts`; serves fully bound lookups.
    positions: FxHashMap<Fact, u32>,
    indexes: FxHashMap<Mask, FxHashMap<Fact, Vec<u32>>>,
    /// Facts `[0, mark)` were known before the current round.
    pub mark: usize,
}

impl Relation {
    fn new(name: String, arity: usize, internal: bool) -> Self {
        Relation {
            name,
            arity,
            internal,
            facts: Vec::new(),
            positions: FxHashMap::default(),
            indexes: FxHashMap::default(),
            mark: 0,
        }
    }

    pub fn contains(&self, f: &Fact) -> bool {
        self.positions.contains_key(f)
    }

    fn full_mask(&self) -> Mask {
        (1 << self.arity) - 1
    }

    fn insert(&mut self, f: Fact) -> bool {
        let idx = self.facts.len() as u32;
        match self.positions.entry(f) {
            Entry::Occupied(_) => return false,
            Entry::Vacant(v) => {
                v.insert(idx);
            }
        }
        self.facts.push(f);
        for (mask, index) in self.indexes.iter_mut() {
            index.entry(masked_key(&f, *mask)).or_default().push(idx);
        }
        true
    }

    pub fn ensure_index(&mut self, mask: Mask) {
        if mask == 0 || mask == self.full_mask() || self.indexes.contains_key(&mask) {
            return;
        }
        let mut index: FxHashMap<Fact, Vec<u32>> = FxHashMap::default();
        for (i, f) in self.facts.iter().enumerate() {
            index.entry(masked_key(f, mask)).or_default().push(i as u32);
        }
        self.indexes.insert(mask, index);
    }

    /// Ascending indices of facts matching `key` on `mask`; `None` when the
    /// mask is empty (every fact matches).
    pub fn lookup(&self, mask: Mask, key: &Fact) -> Option<&[u32]> {
        if mask == 0 {
            return None;
        }
        if mask == self.full_mask() {
            return Some(self.positions.get(key).map(std::slice::from_ref).unwrap_or(&[]));
        }
        let index = self.indexes.get(&mask).expect("index registered before lookup");
        Some(index.get(key).map(Vec::as_slice).unwrap_or(&[]))
    }
}

/// The set of ground atoms derived by materialization.
#[derive(Debug, Clone)]
pub struct FactStore {
    pub(crate) interner: Interner,
    pub(crate) relations: Vec<Relation>,
    rel_ids: FxHashMap<(String, usize, bool), RelId>,
    pub(crate) bottom: bool,
}

impl Default for FactStore {
    fn default() -> Self {
        Self::new()
    }
}

/// Relation key of a non-frame predicate.
fn pred_key(name: &str, arity: usize) -> (String, usize, bool) {
    (name.to_string(), arity, false)
}

impl FactStore {
    pub fn new() -> Self {
        let mut s = FactStore {
            interner: Interner::default(),
            relations: Vec::new(),
            rel_ids: FxHashMap::default(),
            bottom: false,
        };
        s.relations.push(Relation::new("data".into(), 3, false));
        s.relations.push(Relation::new("isa".into(), 2, false));
        s
    }

    pub(crate) fn pred_relation(&mut self, name: &str, arity: usize) -> Result<RelId> {
        if arity > 3 {
            return Err(Error::Arity(arity));
        }
        let key = pred_key(name, arity);
        if let Some(&id) = self.rel_ids.get(&key) {
            return Ok(id);
        }
        let id = self.relations.len();
        self.relations.push(Relation::new(name.to_string(), arity, false));
        self.rel_ids.insert(key, id);
        Ok(id)
    }

    pub(crate) fn internal_relation(&mut self, name: &str, arity: usize) -> RelId {
        let key = (name.to_string(), arity, true);
        if let Some(&id) = self.rel_ids.get(&key) {
            return id;
        }
        let id = self.relations.len();
        self.relations.push(Relation::new(name.to_string(), arity, true));
        self.rel_ids.insert(key, id);
        id
    }

    pub(crate) fn lookup_pred(&self, name: &str, arity: usize) -> Option<RelId> {
        self.rel_ids.get(&pred_key(name, arity)).copied()
    }

    pub(crate) fn insert(&mut self, rel: RelId, f: Fact) -> bool {
        self.relations[rel].insert(f)
    }

    /// Relation and interned arguments of a ground atom, interning as needed.
    pub(crate) fn encode(&mut self, atom: &Atom) -> Result<Option<(RelId, Fact)>> {
        let rel = match atom {
            Atom::Data(..) => DATA,
            Atom::Isa(..) => ISA,
            Atom::Pred { name, args } => self.pred_relation(name, args.len())?,
            _ => return Ok(None),
        };
        let mut f = [0; 3];
        for (i, a) in atom.args().into_iter().enumerate() {
            match a {
                LTerm::Const(t) => f[i] = self.interner.intern(t),
                LTerm::Var(v) => return Err(Error::Unsafe { var: v.clone(), rule: atom.to_string() }),
            }
        }
        Ok(Some((rel, f)))
    }

    /// Relation and arguments of a ground atom without interning; `None` if
    /// some constant or the relation is unknown (the atom cannot be a fact).
    pub(crate) fn encode_existing(&self, atom: &Atom) -> Option<(RelId, Fact)> {
        let rel = match atom {
            Atom::Data(..) => DATA,
            Atom::Isa(..) => ISA,
            Atom::Pred { name, args } => self.lookup_pred(name, args.len())?,
            _ => return None,
        };
        let mut f = [0; 3];
        for (i, a) in atom.args().into_iter().enumerate() {
            match a {
                LTerm::Const(t) => f[i] = self.interner.get(t)?,
                LTerm::Var(_) => return None,
            }
        }
        Some((rel, f))
    }

    fn decode(&self, rel: RelId, f: &Fact) -> Atom {
        let r = &self.relations[rel];
        let arg = |i: usize| LTerm::Const(self.interner.term(f[i]).clone());
        match rel {
            DATA => Atom::Data(arg(0), arg(1), arg(2)),
            ISA => Atom::Isa(arg(0), arg(1)),
            _ => Atom::Pred {
                name: r.name.clone(),
                args: (0..r.arity).map(arg).collect(),
            },
        }
    }

    /// Whether a ground atom is in the store.
    pub fn contains(&self, atom: &Atom) -> bool {
        self.encode_existing(atom)
            .is_some_and(|(rel, f)| self.relations[rel].contains(&f))
    }

    /// Whether a constraint fired.
    pub fn is_inconsistent(&self) -> bool {
        self.bottom
    }

    /// Number of facts, excluding engine-internal relations.
    pub fn len(&self) -> usize {
        self.relations.iter().filter(|r| !r.internal).map(|r| r.facts.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn data_len(&self) -> usize {
        self.relations[DATA].facts.len()
    }

    /// All facts as atoms, excluding engine-internal relations.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.relations
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.internal)
            .flat_map(move |(id, r)| r.facts.iter().map(move |f| self.decode(id, f)))
    }

    pub fn interner(&self) -> &Interner {
        &self.interner
    }
}
