//! Generating sequences and word trees: the shared machinery behind
//! homomorphism enumeration and isomorphism search. A candidate map is fixed
//! by its images on a generating sequence; the word tree extends those images
//! to the whole group, and a full table scan verifies the result.

use super::Group;

/// Breadth-first expression of every element as identity * g_{i1} * g_{i2}...
/// `steps[k] = (element, parent, generator position)` in discovery order.
#[derive(Clone, Debug)]
pub struct WordTree {
    steps: Vec<(usize, usize, usize)>,
}

impl WordTree {
    pub fn build(group: &Group, gens: &[usize]) -> WordTree {
        let n = group.order();
        let mut seen = vec![false; n];
        seen[group.identity()] = true;
        let mut queue = std::collections::VecDeque::from([group.identity()]);
        let mut steps = Vec::with_capacity(n.saturating_sub(1));
        while let Some(v) = queue.pop_front() {
            for (gi, &g) in gens.iter().enumerate() {
                let w = group.mul(v, g);
                if !seen[w] {
                    seen[w] = true;
                    steps.push((w, v, gi));
                    queue.push_back(w);
                }
            }
        }
        assert!(
            steps.len() == n - 1,
            "generators must generate the whole group"
        );
        WordTree { steps }
    }

    /// Extend generator images to a total map. The result satisfies the
    /// homomorphism property on the tree edges by construction; callers must
    /// still verify it on all pairs.
    pub fn extend(&self, group: &Group, target: &Group, images: &[usize]) -> Vec<usize> {
        let mut map = vec![usize::MAX; group.order()];
        map[group.identity()] = target.identity();
        for &(elem, parent, gi) in &self.steps {
            map[elem] = target.mul(map[parent], images[gi]);
        }
        map
    }
}

/// Greedy minimal generating sequence: repeatedly add the element whose join
/// with the current closure is largest, breaking ties by smallest index.
pub fn minimal_generating_sequence(group: &Group) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = super::ops::subgroup_closure(group, &[]);
    while closure.len() < group.order() {
        let mut best: Option<(usize, usize)> = None; // (gain, element)
        for g in group.elements() {
            if closure.binary_search(&g).is_ok() {
                continue;
            }
            let mut seed = closure.clone();
            seed.push(g);
            let size = super::ops::subgroup_closure(group, &seed).len();
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, g));
            }
        }
        let (_, g) = best.expect("non-full closure has a missing element");
        gens.push(g);
        let mut seed = closure;
        seed.push(g);
        closure = super::ops::subgroup_closure(group, &seed);
    }
    gens
}

/// Full check of map(a*b) = map(a)*map(b) over all pairs.
pub fn is_homomorphism(source: &Group, target: &Group, map: &[usize]) -> bool {
    let n = source.order();
    for a in 0..n {
        for b in 0..n {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog;

    #[test]
    fn generators_of_s3() {
        let s3 = catalog("S3").unwrap();
        let gens = minimal_generating_sequence(&s3);
        assert_eq!(gens.len(), 2);
        let tree = WordTree::build(&s3, &gens);
        let id_map: Vec<usize> = s3.elements().collect();
        let extended = tree.extend(&s3, &s3, &gens);
        assert_eq!(extended, id_map);
    }

    #[test]
    fn cyclic_groups_have_one_generator() {
        for name in ["C2", "C5", "C12", "C24"] {
            let g = catalog(name).unwrap();
            assert_eq!(minimal_generating_sequence(&g).len(), 1, "{name}");
        }
    }

    #[test]
    fn elementary_abelian_rank_three_needs_three() {
        let g = catalog("C2xC2xC2").unwrap();
        assert_eq!(minimal_generating_sequence(&g).len(), 3);
    }
}
