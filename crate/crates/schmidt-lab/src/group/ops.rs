//! Structural operations: generated subgroups, centers and centralizers,
//! derived subgroups, Sylow subgroups, nilpotency, quotients, semidirect and
//! direct products, inner automorphisms.

use super::{Group, GroupError, GroupHom, Subgroup};
use crate::num;

/// Closure of a seed set under products; sorted element list.
pub(crate) fn subgroup_closure(group: &Group, seeds: &[usize]) -> Vec<usize> {
    let n = group.order();
    let mut member = vec![false; n];
    member[group.identity()] = true;
    let mut stack: Vec<usize> = vec![group.identity()];
    for &s in seeds {
        if !member[s] {
            member[s] = true;
            stack.push(s);
        }
    }
    let mut elems: Vec<usize> = stack.clone();
    while let Some(v) = stack.pop() {
        // products with everything collected so far, both orders
        let snapshot: Vec<usize> = elems.clone();
        for w in snapshot {
            for t in [group.mul(v, w), group.mul(w, v)] {
                if !member[t] {
                    member[t] = true;
                    stack.push(t);
                    elems.push(t);
                }
            }
        }
    }
    let mut out: Vec<usize> = member
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(e, _)| e)
        .collect();
    out.sort_unstable();
    out
}

impl Group {
    /// Smallest subgroup containing the seeds.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Subgroup<'_> {
        for &s in seeds {
            assert!(s < self.order(), "seed {s} out of range");
        }
        Subgroup::from_sorted_unchecked(self, subgroup_closure(self, seeds))
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup<'_> {
        let elems: Vec<usize> = self
            .elements()
            .filter(|&g| set.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
            .collect();
        Subgroup::from_sorted_unchecked(self, elems)
    }

    /// Z(G).
    pub fn center(&self) -> Subgroup<'_> {
        let all: Vec<usize> = self.elements().collect();
        self.centralizer(&all)
    }

    /// Elements g with g^-1 H g = H.
    pub fn normalizer(&self, subgroup: &Subgroup<'_>) -> Subgroup<'_> {
        let elems: Vec<usize> = self
            .elements()
            .filter(|&g| {
                subgroup
                    .elements()
                    .iter()
                    .all(|&h| subgroup.contains(self.conjugate(h, g)))
            })
            .collect();
        Subgroup::from_sorted_unchecked(self, elems)
    }

    /// Subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> Subgroup<'_> {
        let mut comms: Vec<usize> = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_generated(&comms)
    }

    /// Derived subgroup of the derived subgroup, computed inside the parent.
    pub fn second_derived_subgroup(&self) -> Subgroup<'_> {
        let d = self.derived_subgroup();
        let mut comms: Vec<usize> = Vec::new();
        for &a in d.elements() {
            for &b in d.elements() {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_generated(&comms)
    }

    /// One Sylow r-subgroup ({e} when r does not divide |G|): greedily close
    /// over r-elements, always trying the smallest eligible element first, so
    /// the choice is deterministic.
    pub fn sylow_subgroup(&self, r: u64) -> Subgroup<'_> {
        assert!(num::is_prime(r), "{r} must be prime");
        let mut target = 1usize;
        while self.order().is_multiple_of(target * r as usize) {
            target *= r as usize;
        }
        let orders = self.element_orders();
        let r_elements: Vec<usize> = self
            .elements()
            .filter(|&g| {
                let mut o = orders[g] as u64;
                while o.is_multiple_of(r) {
                    o /= r;
                }
                o == 1
            })
            .collect();
        let mut current = vec![self.identity()];
        while current.len() < target {
            let mut extended = false;
            for &x in &r_elements {
                if current.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = current.clone();
                seed.push(x);
                let closed = subgroup_closure(self, &seed);
                if is_prime_power_order(closed.len(), r) {
                    current = closed;
                    extended = true;
                    break;
                }
            }
            assert!(extended, "an r-subgroup below full Sylow order always extends");
        }
        Subgroup::from_sorted_unchecked(self, current)
    }

    /// Standard finite criterion: nilpotent iff every Sylow subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        num::prime_factorization(self.order() as u64)
            .iter()
            .all(|&(r, _)| self.sylow_subgroup(r).is_normal())
    }

    /// Quotient by a normal subgroup: group on cosets (represented by their
    /// least element, listed in ascending representative order) plus the
    /// natural projection.
    pub fn quotient(&self, normal: &Subgroup<'_>) -> Result<(Group, GroupHom), GroupError> {
        if !normal.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            // right coset Ng; g is its least unseen element, hence the rep
            let idx = reps.len();
            reps.push(g);
            for &h in normal.elements() {
                coset_of[self.mul(h, g)] = idx;
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let quotient = Group::from_flat(k, table)?;
        let hom = GroupHom::new_unchecked(coset_of);
        debug_assert!(super::is_homomorphism(self, &quotient, hom.map()));
        Ok((quotient, hom))
    }

    /// Map h -> g^-1 h g as a homomorphism.
    pub fn inner_automorphism(&self, g: usize) -> GroupHom {
        GroupHom::new_unchecked(self.elements().map(|h| self.conjugate(h, g)).collect())
    }
}

fn is_prime_power_order(n: usize, r: u64) -> bool {
    let mut n = n as u64;
    while n.is_multiple_of(r) {
        n /= r;
    }
    n == 1
}

/// External semidirect product N x| H for an action H -> Aut(N).
///
/// `action[h]` is the automorphism of N applied when conjugating by h; the
/// pair law is `(n1, h1) * (n2, h2) = (action[h2](n1) * n2, h1 * h2)`, and the
/// action must be a homomorphism under left-to-right composition:
/// `action[h1 * h2]` = `action[h1]` followed by `action[h2]`. Pairs (n, h) are
/// indexed as n * |H| + h.
#[allow(clippy::needless_range_loop)] // indices are the group elements
pub fn semidirect_product(n_grp: &Group, h_grp: &Group, action: &[Vec<usize>]) -> Result<Group, GroupError> {
    if action.len() != h_grp.order() {
        return Err(GroupError::BadAction(format!(
            "expected {} automorphisms, got {}",
            h_grp.order(),
            action.len()
        )));
    }
    for (h, a) in action.iter().enumerate() {
        if a.len() != n_grp.order() {
            return Err(GroupError::BadAction(format!("map {h} has wrong length")));
        }
        let mut seen = vec![false; n_grp.order()];
        for &v in a {
            if v >= n_grp.order() || std::mem::replace(&mut seen[v], true) {
                return Err(GroupError::BadAction(format!("map {h} is not a bijection")));
            }
        }
        if !super::is_homomorphism(n_grp, n_grp, a) {
            return Err(GroupError::BadAction(format!("map {h} is not an automorphism")));
        }
    }
    for h1 in h_grp.elements() {
        for h2 in h_grp.elements() {
            let h12 = h_grp.mul(h1, h2);
            let composed: Vec<usize> = (0..n_grp.order())
                .map(|x| action[h2][action[h1][x]])
                .collect();
            if action[h12] != composed {
                return Err(GroupError::BadAction(format!(
                    "action is not a homomorphism at ({h1}, {h2})"
                )));
            }
        }
    }
    let nn = n_grp.order();
    let nh = h_grp.order();
    let total = nn * nh;
    let idx = |n: usize, h: usize| n * nh + h;
    let mut table = Vec::with_capacity(total * total);
    for n1 in 0..nn {
        for h1 in 0..nh {
            for n2 in 0..nn {
                for h2 in 0..nh {
                    let n = n_grp.mul(action[h2][n1], n2);
                    let h = h_grp.mul(h1, h2);
                    table.push(idx(n, h));
                }
            }
        }
    }
    // reorder: the loop above emits rows indexed by (n1, h1) in idx order
    // already, since idx(n1, h1) increases with the loop nesting
    Group::from_flat(total, table)
}

/// Direct product on pairs (a, b) indexed as a * |B| + b.
pub fn direct_product(a_grp: &Group, b_grp: &Group) -> Group {
    let na = a_grp.order();
    let nb = b_grp.order();
    let total = na * nb;
    let mut table = Vec::with_capacity(total * total);
    for a1 in 0..na {
        for b1 in 0..nb {
            for a2 in 0..na {
                for b2 in 0..nb {
                    table.push(a_grp.mul(a1, a2) * nb + b_grp.mul(b1, b2));
                }
            }
        }
    }
    Group::from_flat(total, table).expect("direct product of groups is a group")
}
