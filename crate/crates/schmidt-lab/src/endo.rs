//! Brute-force enumeration of End(G): all endomorphisms of a Cayley-table
//! group, their composition table, idempotents, and the stabilizer sets
//! attached to an idempotent.
//!
//! Enumeration backtracks over generator images (an image's order must divide
//! its generator's order), extends each assignment through the word tree, and
//! keeps the assignments that verify as homomorphisms on all pairs. Branches
//! under the first generator are independent and may run in parallel; the
//! final element list is sorted lexicographically by map array, so results
//! never depend on the schedule.

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::group::{is_homomorphism, minimal_generating_sequence, Group, GroupError, WordTree};
use crate::par;

/// An endomorphism of a fixed group, as an image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Endomorphism {
    pub map: Vec<usize>,
}

/// End(G) with its composition table. `comp[i][j]` is the index of
/// "apply element i, then element j".
#[derive(Clone, Debug)]
pub struct EndoMonoid<'g> {
    group: &'g Group,
    maps: Vec<Vec<usize>>,
    comp: Vec<usize>,
    is_auto: Vec<bool>,
    is_idem: Vec<bool>,
    zero_index: usize,
    identity_index: usize,
}

/// Serializable form of an [`EndoMonoid`]: element maps, composition table,
/// and flags.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EndoMonoidExport {
    pub schema: u32,
    pub group_order: usize,
    pub elements: Vec<Vec<usize>>,
    pub comp: Vec<Vec<usize>>,
    pub is_auto: Vec<bool>,
    pub is_idem: Vec<bool>,
    pub zero_index: usize,
    pub identity_index: usize,
}

/// Enumerate End(G). Fails when |G| exceeds the configured cap.
pub fn enumerate_end<'g>(group: &'g Group, cfg: &RunConfig) -> Result<EndoMonoid<'g>, GroupError> {
    let n = group.order();
    if n > cfg.end_cap {
        return Err(GroupError::CapExceeded { order: n, cap: cfg.end_cap });
    }
    let mut maps = if n == 1 {
        vec![vec![group.identity()]]
    } else {
        let gens = minimal_generating_sequence(group);
        let tree = WordTree::build(group, &gens);
        let orders = group.element_orders();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = orders[g];
                group.elements().filter(|&h| o.is_multiple_of(orders[h])).collect()
            })
            .collect();
        let first = candidates[0].clone();
        let branches = par::map_collect(cfg.parallel, first, |img0| {
            let mut found = Vec::new();
            let mut images = vec![0usize; gens.len()];
            images[0] = img0;
            extend_images(group, &tree, &candidates, &mut images, 1, &mut found);
            found
        });
        branches.into_iter().flatten().collect()
    };
    maps.sort_unstable();
    maps.dedup();
    EndoMonoid::from_maps(group, maps, cfg.parallel)
}

fn extend_images(
    group: &Group,
    tree: &WordTree,
    candidates: &[Vec<usize>],
    images: &mut [usize],
    depth: usize,
    found: &mut Vec<Vec<usize>>,
) {
    if depth == candidates.len() {
        let map = tree.extend(group, group, images);
        if is_homomorphism(group, group, &map) {
            found.push(map);
        }
        return;
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        extend_images(group, tree, candidates, images, depth + 1, found);
    }
}

/// Reference enumeration: depth-first scan of the full n^n map space with
/// early rejection of violated constraints. Exponential; only sensible for
/// tiny groups, where it cross-checks the generator-based enumeration. It
/// shares no code path with [`enumerate_end`] beyond the group itself.
pub fn exhaustive_end_scan(group: &Group, cfg: &RunConfig) -> Vec<Vec<usize>> {
    let n = group.order();
    assert!(n <= 8, "exhaustive scan is n^n; refusing n > 8");
    // pairs (a, b) become checkable once max(a, b, a*b) is assigned
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            ready[a.max(b).max(group.mul(a, b))].push((a, b));
        }
    }
    let branches = par::map_collect(cfg.parallel, (0..n).collect::<Vec<_>>(), |first| {
        let mut map = vec![usize::MAX; n];
        map[0] = first;
        let mut found = Vec::new();
        if consistent(group, &map, &ready[0]) {
            scan(group, &ready, &mut map, 1, &mut found);
        }
        found
    });
    // positions are assigned in ascending element order with ascending
    // values, so the concatenation is already lexicographically sorted
    branches.into_iter().flatten().collect()
}

fn consistent(group: &Group, map: &[usize], pairs: &[(usize, usize)]) -> bool {
    pairs
        .iter()
        .all(|&(a, b)| map[group.mul(a, b)] == group.mul(map[a], map[b]))
}

fn scan(
    group: &Group,
    ready: &[Vec<(usize, usize)>],
    map: &mut Vec<usize>,
    pos: usize,
    found: &mut Vec<Vec<usize>>,
) {
    let n = group.order();
    if pos == n {
        found.push(map.clone());
        return;
    }
    for v in 0..n {
        map[pos] = v;
        if consistent(group, map, &ready[pos]) {
            scan(group, ready, map, pos + 1, found);
        }
    }
    map[pos] = usize::MAX;
}

impl<'g> EndoMonoid<'g> {
    fn from_maps(
        group: &'g Group,
        maps: Vec<Vec<usize>>,
        parallel: bool,
    ) -> Result<EndoMonoid<'g>, GroupError> {
        let k = maps.len();
        let index_of = |m: &[usize]| -> usize {
            maps.binary_search_by(|probe| probe.as_slice().cmp(m))
                .expect("composition of endomorphisms is an endomorphism")
        };
        // rows of the composition table are independent
        let rows = par::map_collect(parallel, (0..k).collect::<Vec<_>>(), |i| {
            let mut row = Vec::with_capacity(k);
            let mut composed = vec![0usize; group.order()];
            for j in 0..k {
                for (slot, &g) in composed.iter_mut().zip(&maps[i]) {
                    *slot = maps[j][g];
                }
                row.push(index_of(&composed));
            }
            row
        });
        let comp: Vec<usize> = rows.into_iter().flatten().collect();
        let is_auto: Vec<bool> = maps
            .iter()
            .map(|m| {
                let mut seen = vec![false; m.len()];
                m.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            })
            .collect();
        let is_idem: Vec<bool> = (0..k).map(|i| comp[i * k + i] == i).collect();
        let zero_map = vec![group.identity(); group.order()];
        let zero_index = index_of(&zero_map);
        let identity_map: Vec<usize> = group.elements().collect();
        let identity_index = index_of(&identity_map);
        let monoid = EndoMonoid {
            group,
            maps,
            comp,
            is_auto,
            is_idem,
            zero_index,
            identity_index,
        };
        monoid.spot_check_associativity();
        Ok(monoid)
    }

    /// Composition is associative by construction; verify the table anyway
    /// (fully up to 200 elements, on a deterministic sample above).
    fn spot_check_associativity(&self) {
        let k = self.len();
        let idxs: Vec<usize> = if k <= 200 {
            (0..k).collect()
        } else {
            let stride = k / 64 + 1;
            (0..k).step_by(stride).collect()
        };
        for &a in &idxs {
            for &b in &idxs {
                let ab = self.compose(a, b);
                for &c in &idxs {
                    assert_eq!(
                        self.compose(ab, c),
                        self.compose(a, self.compose(b, c)),
                        "composition table must be associative"
                    );
                }
            }
        }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map(&self, i: usize) -> &[usize] {
        &self.maps[i]
    }

    pub fn endomorphism(&self, i: usize) -> Endomorphism {
        Endomorphism { map: self.maps[i].clone() }
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    /// Index of "apply i, then j".
    #[inline]
    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.comp[i * self.maps.len() + j]
    }

    /// z composed with itself k times (k >= 1).
    pub fn power(&self, z: usize, k: u32) -> usize {
        assert!(k >= 1);
        let mut acc = z;
        for _ in 1..k {
            acc = self.compose(acc, z);
        }
        acc
    }

    pub fn is_auto(&self, i: usize) -> bool {
        self.is_auto[i]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.is_idem[i]
    }

    pub fn zero_index(&self) -> usize {
        self.zero_index
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn automorphism_count(&self) -> usize {
        self.is_auto.iter().filter(|&&a| a).count()
    }

    /// Indices of maps in the sorted element list.
    pub fn index_of_map(&self, m: &[usize]) -> Option<usize> {
        self.maps
            .binary_search_by(|probe| probe.as_slice().cmp(m))
            .ok()
    }

    /// Nontrivial idempotents: all idempotents except the zero map and the
    /// identity map.
    pub fn nontrivial_idempotents(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.is_idem[i] && i != self.zero_index && i != self.identity_index)
            .collect()
    }

    /// Idempotents y with x*y = y and y*x = x.
    pub fn bracket_class(&self, x: usize) -> Vec<usize> {
        assert!(self.is_idem[x], "bracket class is defined for idempotents");
        (0..self.len())
            .filter(|&y| self.is_idem[y] && self.compose(x, y) == y && self.compose(y, x) == x)
            .collect()
    }

    /// K(x) = endomorphisms y with y*x = x*y = y.
    pub fn k_set(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.compose(y, x) == y && self.compose(x, y) == y)
            .collect()
    }

    /// V(x) = automorphisms y with y*x = x.
    pub fn v_set(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.is_auto[y] && self.compose(y, x) == x)
            .collect()
    }

    /// D(x) = automorphisms y with y*x = x*y = x.
    pub fn d_set(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| {
                self.is_auto[y] && self.compose(y, x) == x && self.compose(x, y) == x
            })
            .collect()
    }

    /// H(x) = endomorphisms y with x*y = y and y*x = 0.
    pub fn h_set(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.compose(x, y) == y && self.compose(y, x) == self.zero_index)
            .collect()
    }

    /// Image and kernel of an element, as sorted element sets. For an
    /// idempotent this also asserts the semidirect decomposition
    /// G = Ker x| Im: trivial intersection, full product, normal kernel.
    pub fn image_kernel(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        let g = self.group;
        let m = &self.maps[i];
        let mut image: Vec<usize> = m.clone();
        image.sort_unstable();
        image.dedup();
        let kernel: Vec<usize> = g.elements().filter(|&x| m[x] == g.identity()).collect();
        if self.is_idem[i] {
            let inter: Vec<usize> = image
                .iter()
                .copied()
                .filter(|e| kernel.binary_search(e).is_ok())
                .collect();
            assert_eq!(inter, vec![g.identity()], "Ker and Im intersect trivially");
            assert_eq!(kernel.len() * image.len(), g.order(), "Ker * Im covers G");
            let kernel_sub = crate::group::Subgroup::new(g, kernel.clone())
                .expect("kernel of an endomorphism is a subgroup");
            assert!(kernel_sub.is_normal(), "kernels are normal");
        }
        (image, kernel)
    }

    /// Indices of all inner automorphisms within the element list.
    pub fn inner_automorphism_indices(&self) -> Vec<usize> {
        let g = self.group;
        let mut out: Vec<usize> = g
            .elements()
            .map(|x| {
                let m = g.inner_automorphism(x);
                self.index_of_map(m.map())
                    .expect("inner automorphisms are endomorphisms")
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn export(&self) -> EndoMonoidExport {
        let k = self.len();
        EndoMonoidExport {
            schema: 1,
            group_order: self.group.order(),
            elements: self.maps.clone(),
            comp: (0..k).map(|i| self.comp[i * k..(i + 1) * k].to_vec()).collect(),
            is_auto: self.is_auto.clone(),
            is_idem: self.is_idem.clone(),
            zero_index: self.zero_index,
            identity_index: self.identity_index,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{catalog, miller_moreno, MmParams};

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn end_counts(name: &str) -> (usize, usize, usize) {
        let g = catalog(name).unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        (m.len(), m.automorphism_count(), m.nontrivial_idempotents().len())
    }

    #[test]
    fn counts_for_c2() {
        assert_eq!(end_counts("C2"), (2, 1, 0));
    }

    #[test]
    fn counts_for_s3() {
        assert_eq!(end_counts("S3"), (10, 6, 3));
    }

    #[test]
    fn counts_for_a4() {
        assert_eq!(end_counts("A4"), (33, 24, 4));
    }

    #[test]
    fn s3_idempotents_project_onto_order_two_subgroups() {
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        for x in m.nontrivial_idempotents() {
            let (im, ker) = m.image_kernel(x);
            assert_eq!(im.len(), 2);
            assert_eq!(ker.len(), 3);
        }
    }

    #[test]
    fn composition_order_is_left_to_right() {
        // (g)(st) = ((g)s)t must hold for the composition table
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        for s in 0..m.len() {
            for t in 0..m.len() {
                let st = m.endomorphism(m.compose(s, t));
                for x in g.elements() {
                    assert_eq!(st.map[x], m.map(t)[m.map(s)[x]]);
                }
            }
        }
    }

    #[test]
    fn bracket_class_examples() {
        // in End(S3) the bracket class of any projection is all of I_0
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        let i0 = m.nontrivial_idempotents();
        for &x in &i0 {
            assert_eq!(m.bracket_class(x), i0);
            assert!(m.bracket_class(x).contains(&x));
        }

        // in End(C6) the complement of each factor is unique: singleton class
        let c6 = catalog("C6").unwrap();
        let mc = enumerate_end(&c6, &cfg()).unwrap();
        let i0 = mc.nontrivial_idempotents();
        assert_eq!(i0.len(), 2);
        for &x in &i0 {
            assert_eq!(mc.bracket_class(x), vec![x]);
        }
    }

    #[test]
    fn stabilizer_sets_at_the_identity() {
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        let one = m.identity_index();
        // K(1) = End(G)
        assert_eq!(m.k_set(one), (0..m.len()).collect::<Vec<_>>());
        // y*1 = y, so y*1 = 1 forces y = 1: V(1) = D(1) = {1}
        assert_eq!(m.v_set(one), vec![one]);
        assert_eq!(m.d_set(one), vec![one]);
        // H(1) = {0}
        assert_eq!(m.h_set(one), vec![m.zero_index()]);
    }

    #[test]
    fn stabilizer_counts_for_projections() {
        // S3: |V| = 6, |D| = 2 for each projection idempotent
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        for x in m.nontrivial_idempotents() {
            assert_eq!(m.v_set(x).len(), 6);
            assert_eq!(m.d_set(x).len(), 2);
        }
        // A4: |V| = 12, |D| = 3
        let a4 = catalog("A4").unwrap();
        let m = enumerate_end(&a4, &cfg()).unwrap();
        for x in m.nontrivial_idempotents() {
            assert_eq!(m.v_set(x).len(), 12);
            assert_eq!(m.d_set(x).len(), 3);
        }
    }

    #[test]
    fn image_kernel_trivial_cases() {
        let g = catalog("S3").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        let (im, ker) = m.image_kernel(m.identity_index());
        assert_eq!(im.len(), 6);
        assert_eq!(ker, vec![g.identity()]);
        let (im, ker) = m.image_kernel(m.zero_index());
        assert_eq!(im, vec![g.identity()]);
        assert_eq!(ker.len(), 6);
    }

    #[test]
    fn inner_automorphisms_located() {
        // abelian: only the identity
        let c6 = catalog("C6").unwrap();
        let m = enumerate_end(&c6, &cfg()).unwrap();
        assert_eq!(m.inner_automorphism_indices(), vec![m.identity_index()]);
        // S3: all six automorphisms are inner
        let s3 = catalog("S3").unwrap();
        let m = enumerate_end(&s3, &cfg()).unwrap();
        assert_eq!(m.inner_automorphism_indices().len(), 6);
        // Q8: Q8/Z has order 4
        let q8 = catalog("Q8").unwrap();
        let m = enumerate_end(&q8, &cfg()).unwrap();
        assert_eq!(m.inner_automorphism_indices().len(), 4);
    }

    #[test]
    fn distinct_idempotents_differ_in_image_kernel_pair() {
        for name in ["S3", "A4", "C6", "C12", "D4"] {
            let g = catalog(name).unwrap();
            let m = enumerate_end(&g, &cfg()).unwrap();
            let idems: Vec<usize> = (0..m.len()).filter(|&i| m.is_idempotent(i)).collect();
            for (a, &x) in idems.iter().enumerate() {
                for &y in &idems[a + 1..] {
                    assert_ne!(m.image_kernel(x), m.image_kernel(y), "{name}: {x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let g = catalog("S4").unwrap();
        let small = RunConfig { end_cap: 10, ..RunConfig::default() };
        assert!(matches!(
            enumerate_end(&g, &small),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn scan_agrees_on_small_groups() {
        for name in ["C1", "C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"] {
            let g = catalog(name).unwrap();
            let m = enumerate_end(&g, &cfg()).unwrap();
            let scanned = exhaustive_end_scan(&g, &cfg());
            assert_eq!(m.maps(), &scanned[..], "{name}");
        }
    }

    #[test]
    fn mm_232_endomorphism_counts() {
        let mm = miller_moreno(MmParams::new(2, 3, 2).unwrap(), &cfg()).unwrap();
        let m = enumerate_end(&mm.group, &cfg()).unwrap();
        // proper endomorphism count p^u (q^v - q^(v-1)) + q^(v-1) = 27
        assert_eq!(m.len() - m.automorphism_count(), 27);
        assert_eq!(m.nontrivial_idempotents().len(), 4);
    }

    #[test]
    fn export_schema() {
        let g = catalog("C6").unwrap();
        let m = enumerate_end(&g, &cfg()).unwrap();
        let ex = m.export();
        assert_eq!(ex.schema, 1);
        assert_eq!(ex.elements.len(), 6);
        let json = serde_json::to_string(&ex).unwrap();
        let back: EndoMonoidExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.elements, ex.elements);
        assert_eq!(back.comp, ex.comp);
    }
}
