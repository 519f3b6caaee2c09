//! Finite semigroups as composition tables, invariant fingerprints, and
//! isomorphism search by fingerprint-pruned backtracking with closure
//! propagation.

use std::collections::BTreeMap;

use crate::endo::EndoMonoidExport;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("table is not square")]
    NotSquare,
    #[error("entry out of range at ({0}, {1})")]
    EntryRange(usize, usize),
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subset is not closed under composition")]
    NotClosed,
}

/// Finite semigroup given by a k x k composition table. `comp[i][j]` is the
/// product "i then j", matching the endomorphism composition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    comp: Vec<usize>,
    /// Optional per-element metadata carried over from an endomorphism
    /// monoid: (is_idempotent, is_unit).
    flags: Option<Vec<(bool, bool)>>,
}

/// Per-element invariant: idempotency, index and period of the generated
/// cyclic subsemigroup, and the sizes of the left- and right-multiplication
/// images. Isomorphic semigroups have equal sorted fingerprint multisets.
pub type ElementFingerprint = (bool, u32, u32, u32, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub elements: Vec<ElementFingerprint>,
    pub sorted: Vec<ElementFingerprint>,
}

impl FiniteSemigroup {
    /// Validate and wrap a composition table. Associativity is checked
    /// exhaustively up to 200 elements and on a deterministic stride sample
    /// above that.
    pub fn new(rows: &[Vec<usize>]) -> Result<FiniteSemigroup, SemigroupError> {
        let k = rows.len();
        let mut comp = Vec::with_capacity(k * k);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(SemigroupError::NotSquare);
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= k {
                    return Err(SemigroupError::EntryRange(i, j));
                }
                comp.push(v);
            }
        }
        let s = FiniteSemigroup { size: k, comp, flags: None };
        s.check_associativity()?;
        Ok(s)
    }

    fn check_associativity(&self) -> Result<(), SemigroupError> {
        let k = self.size;
        let idxs: Vec<usize> = if k <= 200 {
            (0..k).collect()
        } else {
            (0..k).step_by(k / 64 + 1).collect()
        };
        for &a in &idxs {
            for &b in &idxs {
                let ab = self.mul(a, b);
                for &c in &idxs {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// The multiplicative monoid (Z_m, *): the concrete model of the
    /// endomorphism monoid of a cyclic group of order m.
    pub fn cyclic_monoid_model(m: u64) -> FiniteSemigroup {
        assert!(m >= 1);
        let k = m as usize;
        let mut comp = Vec::with_capacity(k * k);
        for a in 0..m {
            for b in 0..m {
                comp.push((a * b % m) as usize);
            }
        }
        FiniteSemigroup { size: k, comp, flags: None }
    }

    /// The full composition table of an exported endomorphism monoid.
    pub fn from_endo_export(export: &EndoMonoidExport) -> Result<FiniteSemigroup, SemigroupError> {
        let mut s = FiniteSemigroup::new(&export.comp)?;
        s.flags = Some(
            export
                .is_idem
                .iter()
                .zip(&export.is_auto)
                .map(|(&i, &a)| (i, a))
                .collect(),
        );
        Ok(s)
    }

    /// Subsemigroup on a subset of elements, reindexed in the given order.
    /// Fails if the subset is not closed.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteSemigroup, SemigroupError> {
        let pos: BTreeMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let k = subset.len();
        let mut comp = Vec::with_capacity(k * k);
        for &a in subset {
            for &b in subset {
                match pos.get(&self.mul(a, b)) {
                    Some(&c) => comp.push(c),
                    None => return Err(SemigroupError::NotClosed),
                }
            }
        }
        Ok(FiniteSemigroup {
            size: k,
            comp,
            flags: self.flags.as_ref().map(|f| subset.iter().map(|&e| f[e]).collect()),
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.comp[a * self.size + b]
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotent_count(&self) -> usize {
        (0..self.size).filter(|&a| self.is_idempotent(a)).count()
    }

    /// Index and period of the cyclic subsemigroup generated by `a`: the
    /// least (i, p) with a^(i+p) = a^i, i >= 1.
    fn cycle_shape(&self, a: usize) -> (u32, u32) {
        let mut seen: BTreeMap<usize, u32> = BTreeMap::new();
        let mut acc = a;
        let mut step = 1u32;
        loop {
            if let Some(&first) = seen.get(&acc) {
                return (first, step - first);
            }
            seen.insert(acc, step);
            acc = self.mul(acc, a);
            step += 1;
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let k = self.size;
        let elements: Vec<ElementFingerprint> = (0..k)
            .map(|a| {
                let (idx, period) = self.cycle_shape(a);
                let mut left: Vec<usize> = (0..k).map(|x| self.mul(a, x)).collect();
                left.sort_unstable();
                left.dedup();
                let mut right: Vec<usize> = (0..k).map(|x| self.mul(x, a)).collect();
                right.sort_unstable();
                right.dedup();
                (self.is_idempotent(a), idx, period, left.len() as u32, right.len() as u32)
            })
            .collect();
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        Fingerprint { elements, sorted }
    }

    /// A semigroup isomorphism onto `other` as an image array, or None.
    /// With `anchor = Some((i, j))` the search only considers bijections
    /// sending i to j.
    ///
    /// Elements are assigned in decreasing fingerprint rarity; every
    /// assignment propagates closure (images of known products) and fails
    /// fast on conflicts. Candidates are scanned in canonical order, so the
    /// returned bijection is deterministic.
    pub fn isomorphic_to(
        &self,
        other: &FiniteSemigroup,
        anchor: Option<(usize, usize)>,
    ) -> Option<Vec<usize>> {
        if self.size != other.size {
            return None;
        }
        if self.size == 0 {
            return Some(vec![]);
        }
        let fp1 = self.fingerprint();
        let fp2 = other.fingerprint();
        if fp1.sorted != fp2.sorted {
            return None;
        }
        // rarity of each fingerprint value
        let mut rarity: BTreeMap<ElementFingerprint, usize> = BTreeMap::new();
        for f in &fp1.elements {
            *rarity.entry(*f).or_insert(0) += 1;
        }
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&a| (rarity[&fp1.elements[a]], a));
        let mut state = MatchState {
            fwd: vec![usize::MAX; self.size],
            bwd: vec![usize::MAX; self.size],
        };
        if let Some((i, j)) = anchor {
            if fp1.elements[i] != fp2.elements[j] {
                return None;
            }
            if !state.assign_and_propagate(self, other, i, j) {
                return None;
            }
        }
        if search_iso(self, other, &fp1, &fp2, &order, &mut state, 0) {
            Some(state.fwd)
        } else {
            None
        }
    }
}

struct MatchState {
    fwd: Vec<usize>,
    bwd: Vec<usize>,
}

impl MatchState {
    fn snapshot(&self) -> (Vec<usize>, Vec<usize>) {
        (self.fwd.clone(), self.bwd.clone())
    }

    fn restore(&mut self, snap: (Vec<usize>, Vec<usize>)) {
        self.fwd = snap.0;
        self.bwd = snap.1;
    }

    /// Record fwd[a] = b and close under products with all previously
    /// assigned elements. Returns false on any conflict.
    fn assign_and_propagate(
        &mut self,
        s1: &FiniteSemigroup,
        s2: &FiniteSemigroup,
        a: usize,
        b: usize,
    ) -> bool {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            match (self.fwd[a], self.bwd[b]) {
                (x, y) if x == b && y == a => continue,
                (usize::MAX, usize::MAX) => {}
                _ => return false,
            }
            self.fwd[a] = b;
            self.bwd[b] = a;
            let assigned: Vec<usize> =
                (0..s1.len()).filter(|&u| self.fwd[u] != usize::MAX).collect();
            for &u in &assigned {
                let pairs = [
                    (s1.mul(a, u), s2.mul(b, self.fwd[u])),
                    (s1.mul(u, a), s2.mul(self.fwd[u], b)),
                ];
                for (p1, p2) in pairs {
                    match (self.fwd[p1], self.bwd[p2]) {
                        (x, y) if x == p2 && y == p1 => {}
                        (usize::MAX, usize::MAX) => queue.push((p1, p2)),
                        _ => return false,
                    }
                }
            }
        }
        true
    }
}

fn search_iso(
    s1: &FiniteSemigroup,
    s2: &FiniteSemigroup,
    fp1: &Fingerprint,
    fp2: &Fingerprint,
    order: &[usize],
    state: &mut MatchState,
    depth: usize,
) -> bool {
    // skip already-propagated elements
    let mut depth = depth;
    while depth < order.len() && state.fwd[order[depth]] != usize::MAX {
        depth += 1;
    }
    if depth == order.len() {
        // all assigned; propagation kept every product consistent
        return verify(s1, s2, &state.fwd);
    }
    let a = order[depth];
    for b in 0..s2.len() {
        if state.bwd[b] != usize::MAX || fp2.elements[b] != fp1.elements[a] {
            continue;
        }
        let snap = state.snapshot();
        if state.assign_and_propagate(s1, s2, a, b)
            && search_iso(s1, s2, fp1, fp2, order, state, depth + 1)
        {
            return true;
        }
        state.restore(snap);
    }
    false
}

fn verify(s1: &FiniteSemigroup, s2: &FiniteSemigroup, map: &[usize]) -> bool {
    for a in 0..s1.len() {
        for b in 0..s1.len() {
            if map[s1.mul(a, b)] != s2.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}
