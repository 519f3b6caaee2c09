//! Group isomorphism by backtracking over generator images with
//! order-profile pruning.

use super::gens::{is_homomorphism, minimal_generating_sequence, WordTree};
use super::Group;

/// An isomorphism from `g1` onto `g2` as an image array, or None.
///
/// Search: fix a greedy generating sequence of `g1`; try as images only
/// elements of `g2` of equal order; extend each assignment through the word
/// tree and keep the first bijective homomorphism. Candidates are scanned in
/// ascending index order, so the result is deterministic.
pub fn are_isomorphic(g1: &Group, g2: &Group) -> Option<Vec<usize>> {
    if g1.order() != g2.order() {
        return None;
    }
    let mut profile1 = g1.element_orders();
    let orders2 = g2.element_orders();
    let mut profile2 = orders2.clone();
    profile1.sort_unstable();
    profile2.sort_unstable();
    if profile1 != profile2 {
        return None;
    }
    if g1.order() == 1 {
        return Some(vec![g2.identity()]);
    }
    let gens = minimal_generating_sequence(g1);
    let tree = WordTree::build(g1, &gens);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = g1.element_order(g);
            g2.elements().filter(|&h| orders2[h] == o).collect()
        })
        .collect();
    let mut images = vec![0usize; gens.len()];
    search(g1, g2, &tree, &candidates, &mut images, 0)
}

fn search(
    g1: &Group,
    g2: &Group,
    tree: &WordTree,
    candidates: &[Vec<usize>],
    images: &mut [usize],
    depth: usize,
) -> Option<Vec<usize>> {
    if depth == candidates.len() {
        let map = tree.extend(g1, g2, images);
        let mut seen = vec![false; g2.order()];
        let bijective = map.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
        if bijective && is_homomorphism(g1, g2, &map) {
            return Some(map);
        }
        return None;
    }
    for &cand in &candidates[depth] {
        // distinct generators need distinct images under any injection
        if images[..depth].contains(&cand) {
            continue;
        }
        images[depth] = cand;
        if let Some(found) = search(g1, g2, tree, candidates, images, depth + 1) {
            return Some(found);
        }
    }
    None
}
