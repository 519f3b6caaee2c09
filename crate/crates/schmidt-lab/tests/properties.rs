//! Property tests for the structural invariants: closure behavior of
//! generated subgroups, file-format round trips, ring axioms, and symmetry
//! of the semigroup isomorphism search.

use proptest::prelude::*;

use schmidt_lab::cayley;
use schmidt_lab::construct::{catalog, catalog_names};
use schmidt_lab::endo::enumerate_end;
use schmidt_lab::group::Group;
use schmidt_lab::poly::ResidueRing;
use schmidt_lab::semigroup::FiniteSemigroup;
use schmidt_lab::RunConfig;

fn arb_catalog_group() -> impl Strategy<Value = Group> {
    let names = catalog_names();
    (0..names.len()).prop_map(move |i| catalog(names[i]).unwrap())
}

fn rings() -> Vec<ResidueRing> {
    [(3u64, 2u64), (2, 3), (2, 7), (7, 3), (2, 5)]
        .iter()
        .map(|&(p, q)| ResidueRing::build(p, q).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_subgroups_are_idempotent_and_monotone(
        g in arb_catalog_group(),
        seed_bits in prop::collection::vec(any::<bool>(), 24),
        extra in 0usize..24,
    ) {
        let seeds: Vec<usize> = g
            .elements()
            .filter(|&e| seed_bits.get(e).copied().unwrap_or(false))
            .collect();
        let sub = g.subgroup_generated(&seeds);
        // idempotent: generating from the result gives the result
        let again = g.subgroup_generated(sub.elements());
        prop_assert_eq!(sub.elements(), again.elements());
        // monotone: enlarging the seed set never shrinks the subgroup
        let mut larger = seeds.clone();
        larger.push(extra % g.order());
        let bigger = g.subgroup_generated(&larger);
        prop_assert!(sub.elements().iter().all(|e| bigger.elements().contains(e)));
    }

    #[test]
    fn cayley_roundtrip_is_identity(g in arb_catalog_group()) {
        let text = cayley::format_group(&g);
        let back = cayley::parse_group(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(cayley::format_group(&back), text);
    }

    #[test]
    fn ring_axioms_hold_on_sampled_elements(
        ring_idx in 0usize..5,
        ai in 0usize..4096,
        bi in 0usize..4096,
        ci in 0usize..4096,
        n in 0u64..64,
    ) {
        let ring = &rings()[ring_idx];
        let a = ring.from_index(ai % ring.size());
        let b = ring.from_index(bi % ring.size());
        let c = ring.from_index(ci % ring.size());
        // commutativity and associativity
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(
            ring.mul(&ring.mul(&a, &b), &c),
            ring.mul(&a, &ring.mul(&b, &c))
        );
        // distributivity
        prop_assert_eq!(
            ring.mul(&a, &ring.add(&b, &c)),
            ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
        );
        // substitution is additive, fixes constants, and is the identity at n = 1
        let fa = ring.substitute_power(&a, n);
        let fb = ring.substitute_power(&b, n);
        prop_assert_eq!(ring.substitute_power(&ring.add(&a, &b), n), ring.add(&fa, &fb));
        prop_assert_eq!(ring.substitute_power(&ring.one(), n), ring.one());
        prop_assert_eq!(ring.substitute_power(&a, 1), a.clone());
        // it is multiplicative exactly when x^n is again a root of psi
        // (Frobenius powers n = p^k mod q); checked where that holds
        let psi_at_xn = {
            let xn = ring.x_pow(n);
            let coeffs = ring.psi().coeffs().to_vec();
            let mut acc = ring.zero();
            for &c in coeffs.iter().rev() {
                acc = ring.mul(&acc, &xn);
                let c_elem = ring.from_index(c as usize % ring.size());
                // constant term c as a ring element: index c in base-p order
                acc = ring.add(&acc, &c_elem);
            }
            acc
        };
        if psi_at_xn.is_zero() {
            prop_assert_eq!(ring.substitute_power(&ring.mul(&a, &b), n), ring.mul(&fa, &fb));
        }
        // field inverse
        if !a.is_zero() {
            let inv = ring.inv(&a).unwrap();
            prop_assert_eq!(ring.mul(&a, &inv), ring.one());
        }
    }

    #[test]
    fn semigroup_isomorphism_is_symmetric(i in 0usize..6, j in 0usize..6) {
        let names = ["C4", "C6", "S3", "C2xC2", "D4", "Q8"];
        let cfg = RunConfig::default();
        let ga = catalog(names[i]).unwrap();
        let gb = catalog(names[j]).unwrap();
        let a = enumerate_end(&ga, &cfg).unwrap();
        let b = enumerate_end(&gb, &cfg).unwrap();
        let sa = FiniteSemigroup::from_endo_export(&a.export()).unwrap();
        let sb = FiniteSemigroup::from_endo_export(&b.export()).unwrap();
        prop_assert_eq!(
            sa.isomorphic_to(&sb, None).is_some(),
            sb.isomorphic_to(&sa, None).is_some()
        );
    }
}
