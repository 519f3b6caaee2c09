//! Complete subgroup enumeration by iterative closure: seed with all cyclic
//! subgroups, join pairs until no new subgroup appears. Complete and simple
//! at desk scale; guarded by an order cap.

use std::collections::BTreeSet;

use super::{Group, GroupError};

/// Every subgroup of `g`, as sorted element sets in lexicographic order.
pub fn all_subgroups(g: &Group, cap: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::CapExceeded { order: g.order(), cap });
    }
    let mut subs: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in g.elements() {
        subs.insert(g.subgroup_generated(&[x]).elements().to_vec());
    }
    loop {
        let current: Vec<Vec<usize>> = subs.iter().cloned().collect();
        let mut grew = false;
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let mut seed = current[i].clone();
                seed.extend_from_slice(&current[j]);
                let join = g.subgroup_generated(&seed).elements().to_vec();
                if subs.insert(join) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(subs.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog;

    #[test]
    fn counts_on_known_groups() {
        // S3: 1, three C2, one C3, S3 itself
        let s3 = catalog("S3").unwrap();
        assert_eq!(all_subgroups(&s3, 200).unwrap().len(), 6);
        // Q8: 1, Z, three C4, Q8
        let q8 = catalog("Q8").unwrap();
        assert_eq!(all_subgroups(&q8, 200).unwrap().len(), 6);
        // A4: 1, three C2, V4, four C3, A4
        let a4 = catalog("A4").unwrap();
        assert_eq!(all_subgroups(&a4, 200).unwrap().len(), 10);
        // S4 has 30 subgroups
        let s4 = catalog("S4").unwrap();
        assert_eq!(all_subgroups(&s4, 200).unwrap().len(), 30);
        // elementary abelian of rank 3: 16 subspaces
        let e8 = catalog("C2xC2xC2").unwrap();
        assert_eq!(all_subgroups(&e8, 200).unwrap().len(), 16);
    }

    #[test]
    fn cap_is_enforced() {
        let s3 = catalog("S3").unwrap();
        assert!(matches!(
            all_subgroups(&s3, 5),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn every_result_is_a_subgroup() {
        let a4 = catalog("A4").unwrap();
        for elems in all_subgroups(&a4, 200).unwrap() {
            assert!(crate::group::Subgroup::new(&a4, elems).is_ok());
        }
    }
}
