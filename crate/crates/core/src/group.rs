//! Generic machinery for finite groups given by exact elements.
//!
//! A [`FiniteGroup`] is an immutable element list plus a full Cayley
//! table. Construction always audits the table: Latin-square property,
//! identity, inverses, and associativity (exhaustive up to order 48,
//! random sampling above). Searches over groups work on small integer
//! ids, so the cost of exact coordinates is paid once at construction.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quat::Quat;

/// Default cap on closure size; a run past this signals a non-finite or
/// wrong generator set.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Search bound for subgroup and automorphism enumeration.
pub const SEARCH_BOUND: usize = 48;

/// Orders up to which associativity is audited exhaustively.
const EXHAUSTIVE_ASSOC_BOUND: usize = 48;

/// How an abstract element id is realized concretely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Realization {
    Quaternion(Quat),
    /// Permutation of n points, images 0-based.
    Permutation(Vec<u8>),
    /// 2x2 matrix over the prime field F_p, row-major entries.
    MatrixFp { p: u8, entries: [u8; 4] },
    /// Element of a (semi)direct product: ids into the two factors.
    Pair(u16, u16),
    /// Residue class modulo n.
    Residue { value: u32, modulus: u32 },
    /// Coset of a quotient group: representative and sorted member ids
    /// in the parent group.
    Coset { rep: u16, members: Vec<u16> },
    /// Automorphism of a parent group, as the image vector on its ids.
    AutMap(Vec<u16>),
}

impl Realization {
    pub fn kind(&self) -> &'static str {
        match self {
            Realization::Quaternion(_) => "quaternion",
            Realization::Permutation(_) => "permutation",
            Realization::MatrixFp { .. } => "matrix",
            Realization::Pair(_, _) => "pair",
            Realization::Residue { .. } => "residue",
            Realization::Coset { .. } => "coset",
            Realization::AutMap(_) => "automorphism",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Realization::Quaternion(q) => json!({"kind": "quaternion", "coords": q}),
            Realization::Permutation(images) => {
                let one_based: Vec<u16> = images.iter().map(|&x| x as u16 + 1).collect();
                json!({"kind": "permutation", "images": one_based})
            }
            Realization::MatrixFp { p, entries } => json!({
                "kind": "matrix",
                "p": p,
                "entries": [[entries[0], entries[1]], [entries[2], entries[3]]],
            }),
            Realization::Pair(h, k) => json!({"kind": "pair", "ids": [h, k]}),
            Realization::Residue { value, modulus } => {
                json!({"kind": "residue", "value": value, "modulus": modulus})
            }
            Realization::Coset { rep, members } => {
                json!({"kind": "coset", "rep": rep, "members": members})
            }
            Realization::AutMap(images) => json!({"kind": "automorphism", "images": images}),
        }
    }
}

/// One group element: a display label plus its concrete realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub label: String,
    pub realization: Realization,
}

/// A concrete element type a group can be generated from or built over.
pub trait ConcreteElement: Clone + Eq + std::hash::Hash {
    fn compose(&self, other: &Self) -> Self;
    fn label(&self) -> String;
    fn realization(&self) -> Realization;
    /// Canonical ordering used to fix element ids deterministically.
    fn canonical_cmp(&self, other: &Self) -> Ordering;
}

impl ConcreteElement for Quat {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn label(&self) -> String {
        Quat::label(self)
    }

    fn realization(&self) -> Realization {
        Realization::Quaternion(self.clone())
    }

    /// Descending coordinate order, so 1, i, j, k lead in unit groups.
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.cmp(self)
    }
}

/// Permutation of {0, .., n-1}; composition applies `self` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(a, b);
        Perm(v)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Cycle notation on 1-based points, fixed points omitted; "e" for
    /// the identity.
    pub fn cycle_label(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.0[x] as usize;
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl ConcreteElement for Perm {
    fn compose(&self, other: &Self) -> Self {
        // apply self, then other
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    fn label(&self) -> String {
        self.cycle_label()
    }

    fn realization(&self) -> Realization {
        Realization::Permutation(self.0.clone())
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// 2x2 matrix over F_p, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2Fp {
    pub p: u8,
    pub entries: [u8; 4],
}

impl Mat2Fp {
    pub fn new(p: u8, entries: [u8; 4]) -> Self {
        let entries = entries.map(|x| x % p);
        Mat2Fp { p, entries }
    }

    pub fn identity(p: u8) -> Self {
        Mat2Fp::new(p, [1, 0, 0, 1])
    }

    pub fn det(&self) -> u8 {
        let p = self.p as u32;
        let [a, b, c, d] = self.entries.map(|x| x as u32);
        (((a * d) % p + p * p - (b * c) % p) % p) as u8
    }
}

impl ConcreteElement for Mat2Fp {
    fn compose(&self, other: &Self) -> Self {
        let p = self.p as u32;
        let [a, b, c, d] = self.entries.map(|x| x as u32);
        let [e, f, g, h] = other.entries.map(|x| x as u32);
        Mat2Fp::new(
            self.p,
            [
                ((a * e + b * g) % p) as u8,
                ((a * f + b * h) % p) as u8,
                ((c * e + d * g) % p) as u8,
                ((c * f + d * h) % p) as u8,
            ],
        )
    }

    fn label(&self) -> String {
        let [a, b, c, d] = self.entries;
        format!("[[{a},{b}],[{c},{d}]]")
    }

    fn realization(&self) -> Realization {
        Realization::MatrixFp {
            p: self.p,
            entries: self.entries,
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

/// Automorphism of a parent group as its image vector; composition is
/// (f.compose(g))(x) = f(g(x)), matching left actions on the parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutElem(pub Vec<u16>);

impl AutElem {
    pub fn identity(n: usize) -> Self {
        AutElem((0..n as u16).collect())
    }

    pub fn apply(&self, x: u16) -> u16 {
        self.0[x as usize]
    }
}

impl ConcreteElement for AutElem {
    fn compose(&self, other: &Self) -> Self {
        AutElem(
            (0..self.0.len())
                .map(|x| self.0[other.0[x] as usize])
                .collect(),
        )
    }

    fn label(&self) -> String {
        // placeholder; automorphism groups are relabeled by generator
        // images once the parent context is known
        format!(
            "[{}]",
            self.0
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }

    fn realization(&self) -> Realization {
        Realization::AutMap(self.0.clone())
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct GroupInner {
    name: String,
    elems: Vec<Element>,
    /// Row-major Cayley table: table[a * n + b] = a * b.
    table: Vec<u16>,
    identity: u16,
    inverse: Vec<u16>,
}

/// An immutable finite group: elements, Cayley table, identity and
/// inverse map. Cloning is cheap (shared storage).
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FiniteGroup {}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name(), self.order())
    }
}

impl FiniteGroup {
    /// Builds a group from explicit elements and a full table, running
    /// every audit.
    pub fn from_table(name: impl Into<String>, elems: Vec<Element>, table: Vec<u16>) -> Result<Self> {
        let n = elems.len();
        if n == 0 {
            return Err(Error::BadTable("empty element list".into()));
        }
        if table.len() != n * n {
            return Err(Error::BadTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        if let Some(bad) = table.iter().find(|&&x| x as usize >= n) {
            return Err(Error::BadTable(format!("entry {bad} out of range")));
        }

        // Latin square: every row and column is a permutation
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let v = table[r * n + c] as usize;
                if seen[v] {
                    return Err(Error::BadTable(format!("row {r} repeats entry {v}")));
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let v = table[c * n + r] as usize;
                if seen[v] {
                    return Err(Error::BadTable(format!("column {r} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }

        // identity
        let mut identity = None;
        'outer: for e in 0..n {
            for x in 0..n {
                if table[e * n + x] as usize != x || table[x * n + e] as usize != x {
                    continue 'outer;
                }
            }
            identity = Some(e as u16);
            break;
        }
        let identity = identity.ok_or_else(|| Error::BadTable("no identity element".into()))?;

        // inverses
        let mut inverse = vec![0u16; n];
        for g in 0..n {
            let mut found = None;
            for h in 0..n {
                if table[g * n + h] == identity && table[h * n + g] == identity {
                    found = Some(h as u16);
                    break;
                }
            }
            inverse[g] =
                found.ok_or_else(|| Error::BadTable(format!("element {g} has no inverse")))?;
        }

        // associativity: exhaustive when small, sampled otherwise
        let assoc = |a: usize, b: usize, c: usize| -> bool {
            let ab = table[a * n + b] as usize;
            let bc = table[b * n + c] as usize;
            table[ab * n + c] == table[a * n + bc]
        };
        if n <= EXHAUSTIVE_ASSOC_BOUND {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::BadTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xA550C);
            for _ in 0..100_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::BadTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }

        Ok(FiniteGroup {
            inner: Arc::new(GroupInner {
                name: name.into(),
                elems,
                table,
                identity,
                inverse,
            }),
        })
    }

    /// Builds a group from a multiplicatively closed set of concrete
    /// elements, in canonical order. Also returns the ordered elements.
    pub fn from_concrete_set<E: ConcreteElement>(
        name: impl Into<String>,
        mut set: Vec<E>,
    ) -> Result<(Self, Vec<E>)> {
        set.sort_by(|a, b| a.canonical_cmp(b));
        set.dedup();
        let n = set.len();
        let index: HashMap<&E, u16> = set.iter().zip(0..).collect();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = set[a].compose(&set[b]);
                let id = *index
                    .get(&prod)
                    .ok_or_else(|| Error::BadTable("set not closed under multiplication".into()))?;
                table[a * n + b] = id;
            }
        }
        let elems = set
            .iter()
            .map(|e| Element {
                label: e.label(),
                realization: e.realization(),
            })
            .collect();
        Ok((Self::from_table(name, elems, table)?, set))
    }

    /// Closes a generator set under multiplication (inverses arise from
    /// powers since every element has finite order) and builds the group.
    pub fn from_closure<E: ConcreteElement>(
        name: impl Into<String>,
        generators: &[E],
        cap: usize,
    ) -> Result<(Self, Vec<E>)> {
        if generators.is_empty() {
            return Err(Error::BadTable("empty generator set".into()));
        }
        let mut elems: Vec<E> = Vec::new();
        let mut seen: HashMap<E, ()> = HashMap::new();
        for g in generators {
            if seen.insert(g.clone(), ()).is_none() {
                elems.push(g.clone());
            }
        }
        let mut frontier: Vec<E> = elems.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for y in &elems {
                    for prod in [x.compose(y), y.compose(x)] {
                        if !seen.contains_key(&prod) {
                            seen.insert(prod.clone(), ());
                            next.push(prod);
                            if seen.len() > cap {
                                return Err(Error::CapExceeded { cap });
                            }
                        }
                    }
                }
            }
            elems.extend(next.iter().cloned());
            frontier = next;
        }
        Self::from_concrete_set(name, elems)
    }

    pub fn order(&self) -> usize {
        self.inner.elems.len()
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn identity(&self) -> u16 {
        self.inner.identity
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        let n = self.order();
        self.inner.table[a as usize * n + b as usize]
    }

    pub fn inverse_of(&self, a: u16) -> u16 {
        self.inner.inverse[a as usize]
    }

    pub fn conjugate(&self, g: u16, h: u16) -> u16 {
        // h g h^{-1}
        self.mul(self.mul(h, g), self.inverse_of(h))
    }

    pub fn element(&self, id: u16) -> &Element {
        &self.inner.elems[id as usize]
    }

    pub fn label(&self, id: u16) -> &str {
        &self.inner.elems[id as usize].label
    }

    pub fn elements(&self) -> impl Iterator<Item = (u16, &Element)> {
        self.inner.elems.iter().enumerate().map(|(i, e)| (i as u16, e))
    }

    pub fn ids(&self) -> impl Iterator<Item = u16> {
        0..self.order() as u16
    }

    /// Replaces the display name, keeping everything else.
    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let mut inner = self.clone_inner();
        inner.name = name.into();
        FiniteGroup {
            inner: Arc::new(inner),
        }
    }

    /// Replaces all element labels, keeping order and realizations.
    pub fn with_labels(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        let mut inner = self.clone_inner();
        for (e, l) in inner.elems.iter_mut().zip(labels) {
            e.label = l;
        }
        FiniteGroup {
            inner: Arc::new(inner),
        }
    }

    fn clone_inner(&self) -> GroupInner {
        GroupInner {
            name: self.inner.name.clone(),
            elems: self.inner.elems.clone(),
            table: self.inner.table.clone(),
            identity: self.inner.identity,
            inverse: self.inner.inverse.clone(),
        }
    }

    /// Least n >= 1 with g^n = e.
    pub fn element_order(&self, g: u16) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity() {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    /// Multiset of element orders, as order -> count.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for g in self.ids() {
            *counts.entry(self.element_order(g)).or_insert(0) += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort();
        v
    }

    /// Closure of a subset under the group multiplication.
    pub fn subset_closure(&self, seed: &[u16]) -> Vec<u16> {
        let n = self.order();
        let mut in_set = vec![false; n];
        let mut stack: Vec<u16> = Vec::new();
        in_set[self.identity() as usize] = true;
        stack.push(self.identity());
        for &g in seed {
            if !in_set[g as usize] {
                in_set[g as usize] = true;
                stack.push(g);
            }
        }
        let mut members: Vec<u16> = stack.clone();
        while let Some(x) = stack.pop() {
            for idx in 0..members.len() {
                let y = members[idx];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !in_set[p as usize] {
                        in_set[p as usize] = true;
                        stack.push(p);
                        members.push(p);
                    }
                }
            }
        }
        members.sort();
        members
    }

    pub fn is_subgroup(&self, subset: &[u16]) -> bool {
        let mut sorted = subset.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.is_empty() {
            return false;
        }
        self.subset_closure(&sorted) == sorted
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<u16> {
        self.ids()
            .filter(|&z| self.ids().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<u16>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in self.ids() {
            if assigned[g as usize] {
                continue;
            }
            let mut class: Vec<u16> = self.ids().map(|h| self.conjugate(g, h)).collect();
            class.sort();
            class.dedup();
            for &x in &class {
                assigned[x as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// (element order, conjugacy class size) per element; isomorphism
    /// invariants used to prune searches.
    pub fn fingerprints(&self) -> Vec<(usize, usize)> {
        let classes = self.conjugacy_classes();
        let mut fp = vec![(0usize, 0usize); self.order()];
        for class in &classes {
            for &g in class {
                fp[g as usize] = (self.element_order(g), class.len());
            }
        }
        fp
    }

    /// True iff g H g^{-1} = H for every g. Errors when H is not a
    /// subgroup.
    pub fn is_normal(&self, subset: &[u16]) -> Result<bool> {
        let mut sorted = subset.to_vec();
        sorted.sort();
        sorted.dedup();
        if !self.is_subgroup(&sorted) {
            return Err(Error::NotASubgroup);
        }
        for g in self.ids() {
            let mut conj: Vec<u16> = sorted.iter().map(|&h| self.conjugate(h, g)).collect();
            conj.sort();
            if conj != sorted {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The quotient G/N with its projection. Errors when N is not a
    /// normal subgroup.
    pub fn quotient(&self, normal: &[u16]) -> Result<(FiniteGroup, GroupHom)> {
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal);
        }
        let mut sorted = normal.to_vec();
        sorted.sort();
        sorted.dedup();
        let n = self.order();
        let mut coset_of = vec![u16::MAX; n];
        let mut cosets: Vec<Vec<u16>> = Vec::new();
        for g in self.ids() {
            if coset_of[g as usize] != u16::MAX {
                continue;
            }
            let mut members: Vec<u16> = sorted.iter().map(|&h| self.mul(g, h)).collect();
            members.sort();
            let idx = cosets.len() as u16;
            for &m in &members {
                coset_of[m as usize] = idx;
            }
            cosets.push(members);
        }
        let q = cosets.len();
        let mut table = vec![0u16; q * q];
        for (a, ca) in cosets.iter().enumerate() {
            for (b, cb) in cosets.iter().enumerate() {
                table[a * q + b] = coset_of[self.mul(ca[0], cb[0]) as usize];
            }
        }
        let elems: Vec<Element> = cosets
            .iter()
            .map(|members| Element {
                label: format!("[{}]", self.label(members[0])),
                realization: Realization::Coset {
                    rep: members[0],
                    members: members.clone(),
                },
            })
            .collect();
        let quotient = FiniteGroup::from_table(
            format!("{}/{}", self.name(), subset_label(self, &sorted)),
            elems,
            table,
        )?;
        let projection = GroupHom::new(self.clone(), quotient.clone(), coset_of)?;
        debug_assert_eq!(self.order(), sorted.len() * quotient.order());
        debug_assert_eq!(projection.kernel(), sorted);
        Ok((quotient, projection))
    }

    /// The group In(G) of conjugation maps, together with the
    /// homomorphism g -> alpha_g.
    pub fn inner_automorphism_group(&self) -> Result<(FiniteGroup, GroupHom)> {
        let n = self.order();
        let mut maps: Vec<AutElem> = Vec::new();
        let mut seen: HashMap<AutElem, ()> = HashMap::new();
        for h in self.ids() {
            let m = AutElem((0..n as u16).map(|g| self.conjugate(g, h)).collect());
            if seen.insert(m.clone(), ()).is_none() {
                maps.push(m);
            }
        }
        let (group, ordered) = FiniteGroup::from_concrete_set(format!("In({})", self.name()), maps)?;
        let group = relabel_automorphisms(group, &ordered, self);
        let index: HashMap<&AutElem, u16> = ordered.iter().zip(0..).collect();
        let map: Vec<u16> = self
            .ids()
            .map(|h| {
                let m = AutElem((0..n as u16).map(|g| self.conjugate(g, h)).collect());
                index[&m]
            })
            .collect();
        let hom = GroupHom::new(self.clone(), group.clone(), map)?;
        Ok((group, hom))
    }

    /// JSON dump per the group schema.
    pub fn dump_json(&self) -> Value {
        let elements: Vec<Value> = self
            .elements()
            .map(|(id, e)| {
                json!({
                    "id": id,
                    "label": e.label,
                    "realization": e.realization.to_json(),
                })
            })
            .collect();
        let n = self.order();
        let table: Vec<Vec<u16>> = (0..n)
            .map(|r| self.inner.table[r * n..(r + 1) * n].to_vec())
            .collect();
        json!({
            "name": self.name(),
            "order": n,
            "identity": self.identity(),
            "elements": elements,
            "table": table,
        })
    }

    /// Markdown Cayley table.
    pub fn cayley_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| * |");
        for g in self.ids() {
            out.push_str(&format!(" {} |", self.label(g)));
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in self.ids() {
            out.push_str("---|");
        }
        out.push('\n');
        for a in self.ids() {
            out.push_str(&format!("| **{}** |", self.label(a)));
            for b in self.ids() {
                out.push_str(&format!(" {} |", self.label(self.mul(a, b))));
            }
            out.push('\n');
        }
        out
    }

    /// The subgroup on the given ids as a standalone group, keeping
    /// parent labels and realizations.
    pub fn subgroup_group(&self, ids: &[u16], name: impl Into<String>) -> Result<FiniteGroup> {
        let mut sorted = ids.to_vec();
        sorted.sort();
        sorted.dedup();
        if !self.is_subgroup(&sorted) {
            return Err(Error::NotASubgroup);
        }
        let pos: HashMap<u16, u16> = sorted.iter().copied().zip(0..).collect();
        let m = sorted.len();
        let mut table = vec![0u16; m * m];
        for (a, &ga) in sorted.iter().enumerate() {
            for (b, &gb) in sorted.iter().enumerate() {
                table[a * m + b] = pos[&self.mul(ga, gb)];
            }
        }
        let elems: Vec<Element> = sorted.iter().map(|&g| self.element(g).clone()).collect();
        FiniteGroup::from_table(name, elems, table)
    }
}

fn subset_label(g: &FiniteGroup, subset: &[u16]) -> String {
    if subset.len() <= 4 {
        format!(
            "{{{}}}",
            subset
                .iter()
                .map(|&x| g.label(x).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    } else {
        format!("H{}", subset.len())
    }
}

/// Relabels an automorphism group by generator images of the parent,
/// e.g. "i->j, j->i".
pub(crate) fn relabel_automorphisms(
    group: FiniteGroup,
    ordered: &[AutElem],
    parent: &FiniteGroup,
) -> FiniteGroup {
    let gens = parent.minimal_generating_sequence();
    let labels: Vec<String> = ordered
        .iter()
        .map(|m| {
            gens.iter()
                .map(|&g| format!("{}->{}", parent.label(g), parent.label(m.apply(g))))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    group.with_labels(labels)
}

/// A verified homomorphism between finite groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<u16>,
}

impl GroupHom {
    /// Validates totality and the homomorphism property on all pairs.
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<u16>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotAHomomorphism(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x as usize >= target.order()) {
            return Err(Error::NotAHomomorphism(format!("image {bad} out of range")));
        }
        for a in source.ids() {
            for b in source.ids() {
                let lhs = map[source.mul(a, b) as usize];
                let rhs = target.mul(map[a as usize], map[b as usize]);
                if lhs != rhs {
                    return Err(Error::NotAHomomorphism(format!(
                        "phi({}*{}) = {} but phi({})*phi({}) = {}",
                        source.label(a),
                        source.label(b),
                        target.label(lhs),
                        source.label(a),
                        source.label(b),
                        target.label(rhs),
                    )));
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map,
        })
    }

    /// Extends generator images to the whole source by word
    /// decomposition, then validates. Errors if the chosen elements do
    /// not generate the source or the extension is inconsistent.
    pub fn from_generator_images(
        source: FiniteGroup,
        target: FiniteGroup,
        images: &[(u16, u16)],
    ) -> Result<Self> {
        let n = source.order();
        let mut map = vec![u16::MAX; n];
        map[source.identity() as usize] = target.identity();
        let mut frontier = vec![source.identity()];
        while let Some(x) = frontier.pop() {
            for &(g, img) in images {
                let y = source.mul(x, g);
                let fy = target.mul(map[x as usize], img);
                if map[y as usize] == u16::MAX {
                    map[y as usize] = fy;
                    frontier.push(y);
                } else if map[y as usize] != fy {
                    return Err(Error::NotAHomomorphism(
                        "inconsistent extension of generator images".into(),
                    ));
                }
            }
        }
        if map.contains(&u16::MAX) {
            return Err(Error::DoesNotGenerate);
        }
        Self::new(source, target, map)
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[u16] {
        &self.map
    }

    pub fn apply(&self, g: u16) -> u16 {
        self.map[g as usize]
    }

    pub fn image(&self) -> Vec<u16> {
        let mut v = self.map.clone();
        v.sort();
        v.dedup();
        v
    }

    pub fn kernel(&self) -> Vec<u16> {
        self.source
            .ids()
            .filter(|&g| self.apply(g) == self.target.identity())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel() == vec![self.source.identity()]
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective() && self.is_surjective()
    }

    pub fn is_identity_map(&self) -> bool {
        self.source == self.target && self.map.iter().zip(0u16..).all(|(&img, g)| img == g)
    }

    /// self: A -> B composed with other: B -> C.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target != other.source {
            return Err(Error::NotComposable);
        }
        let map = self.map.iter().map(|&m| other.apply(m)).collect();
        GroupHom::new(self.source.clone(), other.target.clone(), map)
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverted(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::NotAHomomorphism("not bijective".into()));
        }
        let mut inv = vec![0u16; self.target.order()];
        for g in self.source.ids() {
            inv[self.apply(g) as usize] = g;
        }
        GroupHom::new(self.target.clone(), self.source.clone(), inv)
    }
}

/// A composable chain of homomorphisms, read as a sequence with formal
/// trivial groups at both ends.
#[derive(Debug, Clone)]
pub struct SequenceSpec {
    homs: Vec<GroupHom>,
}

/// Exactness datum at one junction.
#[derive(Debug, Clone)]
pub struct Junction {
    pub at: String,
    pub expected: Vec<u16>,
    pub actual: Vec<u16>,
    pub exact: bool,
}

/// Per-junction exactness report for a sequence.
#[derive(Debug, Clone)]
pub struct ExactnessReport {
    pub junctions: Vec<Junction>,
}

impl ExactnessReport {
    pub fn exact(&self) -> bool {
        self.junctions.iter().all(|j| j.exact)
    }

    /// Exactness at the head junction = the first map is one-to-one.
    pub fn head_injective(&self) -> bool {
        self.junctions.first().map(|j| j.exact).unwrap_or(true)
    }

    /// Exactness at the tail junction = the last map is onto.
    pub fn tail_surjective(&self) -> bool {
        self.junctions.last().map(|j| j.exact).unwrap_or(true)
    }
}

impl SequenceSpec {
    pub fn new(homs: Vec<GroupHom>) -> Result<Self> {
        if homs.is_empty() {
            return Err(Error::NotComposable);
        }
        for pair in homs.windows(2) {
            if pair[0].target() != pair[1].source() {
                return Err(Error::NotComposable);
            }
        }
        Ok(SequenceSpec { homs })
    }

    pub fn homs(&self) -> &[GroupHom] {
        &self.homs
    }

    /// Compares image and kernel at every junction, including the formal
    /// ends: the head junction asks the first map to be injective, the
    /// tail junction asks the last to be surjective.
    pub fn is_exact(&self) -> ExactnessReport {
        let mut junctions = Vec::new();
        let first = &self.homs[0];
        junctions.push(Junction {
            at: first.source().name().to_string(),
            expected: vec![first.source().identity()],
            actual: first.kernel(),
            exact: first.kernel() == vec![first.source().identity()],
        });
        for pair in self.homs.windows(2) {
            let image = pair[0].image();
            let kernel = pair[1].kernel();
            junctions.push(Junction {
                at: pair[0].target().name().to_string(),
                exact: image == kernel,
                expected: image,
                actual: kernel,
            });
        }
        let last = self.homs.last().unwrap();
        let image = last.image();
        let all: Vec<u16> = last.target().ids().collect();
        junctions.push(Junction {
            at: last.target().name().to_string(),
            exact: image == all,
            expected: all,
            actual: image,
        });
        ExactnessReport { junctions }
    }
}

/// A semidirect product H x| K together with its canonical split
/// sequence 1 -> H -> G -> K -> 1.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub group: FiniteGroup,
    pub inclusion: GroupHom,
    pub projection: GroupHom,
    pub section: GroupHom,
}

/// Builds H x| K for a twist epsilon : K -> Aut(H), where Aut(H) is
/// materialized as a group of automorphism maps of H.
pub fn semidirect_product(
    name: impl Into<String>,
    h: &FiniteGroup,
    k: &FiniteGroup,
    epsilon: &GroupHom,
) -> Result<Semidirect> {
    if epsilon.source() != k {
        return Err(Error::InvalidTwist);
    }
    let nh = h.order();
    let nk = k.order();
    // every element of the twist target must be a genuine automorphism of H
    let mut auts: Vec<Vec<u16>> = Vec::new();
    for (_, e) in epsilon.target().elements() {
        let Realization::AutMap(m) = &e.realization else {
            return Err(Error::InvalidTwist);
        };
        if m.len() != nh {
            return Err(Error::InvalidTwist);
        }
        let mut seen = vec![false; nh];
        for &img in m {
            if img as usize >= nh || seen[img as usize] {
                return Err(Error::InvalidTwist);
            }
            seen[img as usize] = true;
        }
        for a in h.ids() {
            for b in h.ids() {
                if m[h.mul(a, b) as usize] != h.mul(m[a as usize], m[b as usize]) {
                    return Err(Error::InvalidTwist);
                }
            }
        }
        auts.push(m.clone());
    }

    let n = nh * nk;
    if n > u16::MAX as usize {
        return Err(Error::Unsupported(format!(
            "semidirect product of order {n} is too large"
        )));
    }
    let pair_id = |hh: u16, kk: u16| -> u16 { (hh as usize * nk + kk as usize) as u16 };
    let mut table = vec![0u16; n * n];
    for h0 in h.ids() {
        for k0 in k.ids() {
            let twist = &auts[epsilon.apply(k0) as usize];
            for h1 in h.ids() {
                for k1 in k.ids() {
                    let hh = h.mul(h0, twist[h1 as usize]);
                    let kk = k.mul(k0, k1);
                    table[pair_id(h0, k0) as usize * n + pair_id(h1, k1) as usize] =
                        pair_id(hh, kk);
                }
            }
        }
    }
    let mut elems = Vec::with_capacity(n);
    for hh in h.ids() {
        for kk in k.ids() {
            elems.push(Element {
                label: format!("({},{})", h.label(hh), k.label(kk)),
                realization: Realization::Pair(hh, kk),
            });
        }
    }
    let group = FiniteGroup::from_table(name, elems, table)?;
    let inclusion = GroupHom::new(
        h.clone(),
        group.clone(),
        h.ids().map(|hh| pair_id(hh, k.identity())).collect(),
    )?;
    let projection = GroupHom::new(
        group.clone(),
        k.clone(),
        (0..n).map(|id| (id % nk) as u16).collect(),
    )?;
    let section = GroupHom::new(
        k.clone(),
        group.clone(),
        k.ids().map(|kk| pair_id(h.identity(), kk)).collect(),
    )?;
    Ok(Semidirect {
        group,
        inclusion,
        projection,
        section,
    })
}

/// The one-element automorphism group {id_H}, a valid twist target for
/// untwisted products.
pub fn trivial_automorphism_group(h: &FiniteGroup) -> Result<FiniteGroup> {
    let (g, _) =
        FiniteGroup::from_concrete_set(format!("1(Aut {})", h.name()), vec![AutElem::identity(h.order())])?;
    Ok(g.with_labels(vec!["id".into()]))
}

/// Direct product H x K, as the semidirect product along the trivial
/// twist.
pub fn direct_product(
    name: impl Into<String>,
    h: &FiniteGroup,
    k: &FiniteGroup,
) -> Result<Semidirect> {
    let triv = trivial_automorphism_group(h)?;
    let eps = GroupHom::new(k.clone(), triv, vec![0; k.order()])?;
    semidirect_product(name, h, k, &eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CatalogName};
    use crate::scalar::{Rat, ScalarQ};

    fn quat_half(s0: i64, s1: i64, s2: i64, s3: i64) -> Quat {
        Quat::from_ints(s0, s1, s2, s3)
            .scale(&ScalarQ::new(Rat::new(1, 2).unwrap(), Rat::zero()))
    }

    #[test]
    fn closure_of_i_j_is_q() {
        let (g, elems) =
            FiniteGroup::from_closure("G", &[Quat::i(), Quat::j()], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 8);
        // brute-force oracle: compare element sets against the 8 units
        let mut expect = catalog::lipschitz_units();
        expect.sort();
        let mut got = elems;
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn closure_of_omega_i_is_2t() {
        let (g, _) = FiniteGroup::from_closure(
            "G",
            &[quat_half(1, 1, 1, 1), Quat::i()],
            DEFAULT_CLOSURE_CAP,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn closure_of_special_is_c8() {
        let s = Quat::from_ints(1, 1, 0, 0).scale(&ScalarQ::inv_sqrt2());
        // s^2 = i, so s generates a cyclic group of order 8
        assert_eq!(s.mul(&s), Quat::i());
        let (g, _) = FiniteGroup::from_closure("G", &[s], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 8);
        let gens = g.minimal_generating_sequence();
        assert_eq!(gens.len(), 1);
    }

    #[test]
    fn closure_cap_exceeded() {
        let err = FiniteGroup::from_closure("G", &[Quat::i(), Quat::j()], 4).unwrap_err();
        assert_eq!(err, Error::CapExceeded { cap: 4 });
    }

    #[test]
    fn center_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let z = q.center();
        let labels: Vec<&str> = z.iter().map(|&g| q.label(g)).collect();
        assert_eq!(labels, vec!["1", "-1"]);

        let v = catalog::build(CatalogName::V).unwrap();
        assert_eq!(v.center().len(), 4);

        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        assert_eq!(s3.center(), vec![s3.identity()]);
    }

    #[test]
    fn element_orders() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let i = catalog::quat_id(&q, &Quat::i()).unwrap();
        assert_eq!(q.element_order(i), 4);
        assert_eq!(q.element_order(q.identity()), 1);

        let t2 = catalog::build(CatalogName::T2).unwrap();
        let w = catalog::quat_id(&t2, &quat_half(1, 1, 1, 1)).unwrap();
        assert_eq!(t2.element_order(w), 6);
    }

    #[test]
    fn normality_examples() {
        let o2 = catalog::build(CatalogName::O2).unwrap();
        let q_ids: Vec<u16> = catalog::lipschitz_units()
            .iter()
            .map(|u| catalog::quat_id(&o2, u).unwrap())
            .collect();
        assert!(o2.is_normal(&q_ids).unwrap());

        let q = catalog::build(CatalogName::Q).unwrap();
        let i = catalog::quat_id(&q, &Quat::i()).unwrap();
        let sub = q.subset_closure(&[i]);
        assert_eq!(sub.len(), 4);
        assert!(q.is_normal(&sub).unwrap()); // index 2

        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let t = s3
            .ids()
            .find(|&g| s3.label(g) == "(1 2)")
            .unwrap();
        let sub = s3.subset_closure(&[t]);
        assert!(!s3.is_normal(&sub).unwrap());

        // not a subgroup at all
        let err = q.is_normal(&[i]).unwrap_err();
        assert_eq!(err, Error::NotASubgroup);
    }

    #[test]
    fn quotient_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let minus_one = catalog::quat_id(&q, &(-&Quat::one())).unwrap();
        let (qv, proj) = q.quotient(&[q.identity(), minus_one]).unwrap();
        assert_eq!(qv.order(), 4);
        assert!(proj.is_surjective());
        let v = catalog::build(CatalogName::V).unwrap();
        assert!(crate::search::isomorphic(&qv, &v).is_some());

        let (same, _) = q.quotient(&[q.identity()]).unwrap();
        assert_eq!(same.order(), q.order());

        let o2 = catalog::build(CatalogName::O2).unwrap();
        let m1 = catalog::quat_id(&o2, &(-&Quat::one())).unwrap();
        let (p, _) = o2.quotient(&[o2.identity(), m1]).unwrap();
        assert_eq!(p.order(), 24);
        let s4 = catalog::build(CatalogName::Sym(4)).unwrap();
        assert!(crate::search::isomorphic(&p, &s4).is_some());
    }

    #[test]
    fn inner_automorphism_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let (inn, hom) = q.inner_automorphism_group().unwrap();
        assert_eq!(inn.order(), 4);
        assert!(hom.is_surjective());
        let v = catalog::build(CatalogName::V).unwrap();
        assert!(crate::search::isomorphic(&inn, &v).is_some());

        let (inn_v, _) = v.inner_automorphism_group().unwrap();
        assert_eq!(inn_v.order(), 1);

        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let (inn_s3, _) = s3.inner_automorphism_group().unwrap();
        assert_eq!(inn_s3.order(), 6);
    }

    #[test]
    fn exactness_examples() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let c2 = catalog::build(CatalogName::Cyclic(2)).unwrap();
        let minus_one = catalog::quat_id(&q, &(-&Quat::one())).unwrap();
        let incl = GroupHom::from_generator_images(c2.clone(), q.clone(), &[(1, minus_one)]).unwrap();
        let (_, proj) = q.inner_automorphism_group().unwrap();
        let seq = SequenceSpec::new(vec![incl, proj]).unwrap();
        assert!(seq.is_exact().exact());

        // replacing the sign map by the trivial map breaks exactness
        let s3 = catalog::build(CatalogName::Sym(3)).unwrap();
        let c3 = catalog::build(CatalogName::Cyclic(3)).unwrap();
        let three_cycle = s3.ids().find(|&g| s3.element_order(g) == 3).unwrap();
        let incl = GroupHom::from_generator_images(c3, s3.clone(), &[(1, three_cycle)]).unwrap();
        let trivial = GroupHom::new(s3.clone(), c2.clone(), vec![0; 6]).unwrap();
        let seq = SequenceSpec::new(vec![incl, trivial]).unwrap();
        let report = seq.is_exact();
        assert!(!report.exact());
        // the failure is at the middle junction and at the tail
        assert!(report.junctions[0].exact);
        assert!(!report.junctions[1].exact);
        assert!(!report.junctions[2].exact);
    }

    #[test]
    fn semidirect_trivial_twist_is_direct_product() {
        let c2 = catalog::build(CatalogName::Cyclic(2)).unwrap();
        let c3 = catalog::build(CatalogName::Cyclic(3)).unwrap();
        let prod = direct_product("C3xC2", &c3, &c2, ).unwrap();
        assert_eq!(prod.group.order(), 6);
        let c6 = catalog::build(CatalogName::Cyclic(6)).unwrap();
        assert!(crate::search::isomorphic(&prod.group, &c6).is_some());
        let seq = SequenceSpec::new(vec![prod.inclusion, prod.projection.clone()]).unwrap();
        assert!(seq.is_exact().exact());
        assert!(prod.section.then(&prod.projection).unwrap().is_identity_map());
    }

    #[test]
    fn hom_validation_rejects_non_homs() {
        let c3 = catalog::build(CatalogName::Cyclic(3)).unwrap();
        let c2 = catalog::build(CatalogName::Cyclic(2)).unwrap();
        assert!(GroupHom::new(c3.clone(), c2.clone(), vec![0, 1, 0]).is_err());
        assert!(GroupHom::new(c3, c2, vec![0, 0, 0]).is_ok());
    }

    #[test]
    fn subgroup_group_keeps_labels() {
        let q = catalog::build(CatalogName::Q).unwrap();
        let i = catalog::quat_id(&q, &Quat::i()).unwrap();
        let sub = q.subset_closure(&[i]);
        let c4 = q.subgroup_group(&sub, "<i>").unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.ids().any(|g| c4.label(g) == "-i"));
    }
}
