//! Schmidt and Miller-Moreno group predicates.
//!
//! Two independent routes are provided and cross-checked:
//!
//! * subgroup-lattice oracles: a Schmidt group is non-nilpotent with every
//!   proper subgroup nilpotent; a Miller-Moreno group is nonabelian with
//!   every proper subgroup abelian;
//! * an endomorphism-semigroup characterization: a finite group is a Schmidt
//!   group with parameters (p, q, v) exactly when some nontrivial idempotent
//!   x of End(G) satisfies eight semigroup-theoretic properties.
//!
//! The eight properties evaluated for a candidate idempotent x:
//!
//! 1. K(x) is isomorphic to the endomorphism monoid of the cyclic group of
//!    order q^v, concretized as the multiplicative monoid of Z_{q^v};
//! 2. H(x) = {0};
//! 3. the nontrivial idempotents form the bracket class of x;
//! 4. there are exactly p^u of them, u the order of p mod q;
//! 5. the non-automorphisms are the union of the K(y) over nontrivial
//!    idempotents y;
//! 6. z lies in the intersection of those K(y) iff z^v = 0;
//! 7. p does not divide |D(x)|;
//! 8. every Sylow p-subgroup of V(x) is elementary abelian of order p^u.

use serde::Serialize;

use crate::config::RunConfig;
use crate::endo::{enumerate_end, EndoMonoid};
use crate::group::{all_subgroups, Group, GroupError, Subgroup};
use crate::num;
use crate::par;
use crate::semigroup::FiniteSemigroup;

/// Parameters (p, q, v) together with the derived u = ord_q(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SchmidtParams {
    pub p: u64,
    pub q: u64,
    pub v: u32,
    pub u: u32,
}

impl SchmidtParams {
    pub fn new(p: u64, q: u64, v: u32) -> SchmidtParams {
        SchmidtParams { p, q, v, u: num::multiplicative_order(p, q) as u32 }
    }
}

/// Verdict of the subgroup-lattice oracles.
#[derive(Clone, Debug, Serialize)]
pub struct SchmidtVerdict {
    pub is_schmidt: bool,
    pub is_miller_moreno: bool,
    pub params: Option<SchmidtParams>,
    /// A proper subgroup witnessing failure: non-nilpotent for the Schmidt
    /// predicate, nonabelian for the Miller-Moreno predicate.
    pub witness: Option<Vec<usize>>,
}

/// Decide both lattice predicates by enumerating every subgroup.
///
/// For a Schmidt group the parameters are extracted structurally: p is the
/// prime of the derived subgroup, q^v its cyclic complement order.
pub fn lattice_oracle(g: &Group, cfg: &RunConfig) -> Result<SchmidtVerdict, GroupError> {
    let subs = all_subgroups(g, cfg.subgroup_cap)?;
    let mut nonabelian_witness: Option<Vec<usize>> = None;
    let mut nonnilpotent_witness: Option<Vec<usize>> = None;
    for elems in &subs {
        if elems.len() == g.order() {
            continue;
        }
        let sub = Subgroup::new(g, elems.clone()).expect("enumerated sets are subgroups");
        if nonabelian_witness.is_none() && !sub.is_abelian() {
            nonabelian_witness = Some(elems.clone());
        }
        if nonnilpotent_witness.is_none() && !sub.as_group().0.is_nilpotent() {
            nonnilpotent_witness = Some(elems.clone());
        }
        if nonabelian_witness.is_some() && nonnilpotent_witness.is_some() {
            break;
        }
    }
    let is_schmidt = !g.is_nilpotent() && nonnilpotent_witness.is_none();
    let is_miller_moreno = !g.is_abelian() && nonabelian_witness.is_none();
    let params = if is_schmidt { extract_params(g) } else { None };
    let witness = if is_schmidt {
        None
    } else {
        nonnilpotent_witness.or(nonabelian_witness)
    };
    Ok(SchmidtVerdict { is_schmidt, is_miller_moreno, params, witness })
}

/// p from the derived subgroup, q^v from the cyclic complement order.
fn extract_params(g: &Group) -> Option<SchmidtParams> {
    let derived = g.derived_subgroup();
    let d_factors = num::prime_factorization(derived.order() as u64);
    if d_factors.len() != 1 {
        return None;
    }
    let p = d_factors[0].0;
    let cofactor = (g.order() / derived.order()) as u64;
    let c_factors = num::prime_factorization(cofactor);
    if c_factors.len() != 1 {
        return None;
    }
    let (q, v) = c_factors[0];
    if p == q {
        return None;
    }
    // G/G' must be cyclic of order q^v
    let (quot, _) = g.quotient(&derived).ok()?;
    if !quot.elements().any(|e| quot.element_order(e) == quot.order()) {
        return None;
    }
    Some(SchmidtParams::new(p, q, v))
}

/// Per-candidate row of the characterization report.
#[derive(Clone, Debug, Serialize)]
pub struct CandidateRow {
    pub x_index: usize,
    pub params: Option<SchmidtParams>,
    pub props: [bool; 8],
    pub witnesses: Vec<String>,
}

/// Result of evaluating the eight properties over every nontrivial
/// idempotent.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterizationReport {
    pub group: GroupIdent,
    /// Parameters used by the winning candidate; `inferred` records whether
    /// they were derived from the group rather than supplied.
    pub inferred_params: Option<ReportedParams>,
    pub candidates: Vec<CandidateRow>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupIdent {
    pub order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportedParams {
    pub p: u64,
    pub q: u64,
    pub v: u32,
    pub u: u32,
    pub inferred: bool,
}

/// Evaluate the eight-property characterization.
///
/// With `params = None`, parameters are inferred per candidate: q^v must be
/// the order of the (cyclic, prime-power) image of x, and p the unique prime
/// with |I_0| = p^u where u = ord_q(p). Candidates are ranked by (q, v)
/// ascending and the first all-true row decides the verdict.
pub fn characterize(
    g: &Group,
    params: Option<SchmidtParams>,
    cfg: &RunConfig,
) -> Result<CharacterizationReport, GroupError> {
    let monoid = enumerate_end(g, cfg)?;
    Ok(characterize_with_monoid(g, &monoid, params, cfg))
}

/// Same as [`characterize`] for a pre-enumerated monoid.
pub fn characterize_with_monoid(
    g: &Group,
    monoid: &EndoMonoid<'_>,
    params: Option<SchmidtParams>,
    cfg: &RunConfig,
) -> CharacterizationReport {
    let i0 = monoid.nontrivial_idempotents();
    let mut candidates: Vec<CandidateRow> =
        par::map_collect(cfg.parallel, i0.clone(), |x| {
            let cand_params = match params {
                Some(p) => Some(p),
                None => infer_params(g, monoid, &i0, x),
            };
            match cand_params {
                None => CandidateRow {
                    x_index: x,
                    params: None,
                    props: [false; 8],
                    witnesses: vec![
                        "no consistent (p, q, v): image must be cyclic of prime power \
                         order q^v and |I_0| = p^(ord_q(p))"
                            .to_string(),
                    ],
                },
                Some(sp) => evaluate_candidate(monoid, &i0, x, sp),
            }
        });
    // rank by (q, v) ascending, then candidate index, for the winning row
    candidates.sort_by_key(|c| {
        (
            c.params.map_or((u64::MAX, u32::MAX), |p| (p.q, p.v)),
            c.x_index,
        )
    });
    let winner = candidates.iter().find(|c| c.props.iter().all(|&b| b));
    let inferred_params = winner.and_then(|c| c.params).map(|p| ReportedParams {
        p: p.p,
        q: p.q,
        v: p.v,
        u: p.u,
        inferred: params.is_none(),
    });
    let verdict = winner.is_some();
    CharacterizationReport {
        group: GroupIdent { order: g.order() },
        inferred_params,
        candidates,
        verdict,
    }
}

fn infer_params(
    g: &Group,
    monoid: &EndoMonoid<'_>,
    i0: &[usize],
    x: usize,
) -> Option<SchmidtParams> {
    let (image, _) = monoid.image_kernel(x);
    let image_sub = Subgroup::new(g, image).ok()?;
    let (img_group, _) = image_sub.as_group();
    // image must be cyclic of prime-power order q^v
    if !img_group.elements().any(|e| img_group.element_order(e) == img_group.order()) {
        return None;
    }
    let factors = num::prime_factorization(img_group.order() as u64);
    if factors.len() != 1 {
        return None;
    }
    let (q, v) = factors[0];
    // |I_0| = p^u with u = ord_q(p)
    let count = i0.len() as u64;
    let pf = num::prime_factorization(count);
    if pf.len() != 1 {
        return None;
    }
    let (p, k) = pf[0];
    if p == q || num::multiplicative_order(p, q) != k as u64 {
        return None;
    }
    Some(SchmidtParams::new(p, q, v))
}

fn evaluate_candidate(
    monoid: &EndoMonoid<'_>,
    i0: &[usize],
    x: usize,
    sp: SchmidtParams,
) -> CandidateRow {
    let mut props = [false; 8];
    let mut witnesses = Vec::new();
    // q^v and p^u can only match anything when they stay within the monoid,
    // so oversized or overflowing parameters fail cheaply
    let qv = match sp.q.checked_pow(sp.v).filter(|&n| n <= monoid.len() as u64) {
        Some(n) => n,
        None => {
            return CandidateRow {
                x_index: x,
                params: Some(sp),
                props,
                witnesses: vec!["q^v exceeds |End(G)|".to_string()],
            }
        }
    };
    let pu = match (sp.p as usize)
        .checked_pow(sp.u)
        .filter(|&n| n <= monoid.len())
    {
        Some(n) => n,
        None => {
            return CandidateRow {
                x_index: x,
                params: Some(sp),
                props,
                witnesses: vec!["p^u exceeds |End(G)|".to_string()],
            }
        }
    };

    // 1: K(x) isomorphic to the multiplicative monoid of Z_{q^v}
    let k_set = monoid.k_set(x);
    let k_semigroup = endo_subsemigroup(monoid, &k_set);
    let model = FiniteSemigroup::cyclic_monoid_model(qv);
    props[0] = k_semigroup.isomorphic_to(&model, None).is_some();
    if !props[0] {
        witnesses.push(format!(
            "prop1: |K(x)| = {} does not match End(C({qv}))",
            k_set.len()
        ));
    }

    // 2: H(x) = {0}
    let h = monoid.h_set(x);
    props[1] = h == vec![monoid.zero_index()];
    if !props[1] {
        witnesses.push(format!("prop2: H(x) has {} elements", h.len()));
    }

    // 3: I_0 equals the bracket class of x
    let bracket = monoid.bracket_class(x);
    props[2] = bracket == i0;
    if !props[2] {
        witnesses.push(format!(
            "prop3: bracket class has {} elements, I_0 has {}",
            bracket.len(),
            i0.len()
        ));
    }

    // 4: |I_0| = p^u
    props[3] = i0.len() == pu;
    if !props[3] {
        witnesses.push(format!("prop4: |I_0| = {} but p^u = {pu}", i0.len()));
    }

    // 5: End \ Aut = union of K(y) over y in I_0
    let mut union = vec![false; monoid.len()];
    for &y in i0 {
        for z in monoid.k_set(y) {
            union[z] = true;
        }
    }
    props[4] = (0..monoid.len()).all(|z| union[z] == !monoid.is_auto(z));
    if !props[4] {
        let bad = (0..monoid.len()).find(|&z| union[z] != !monoid.is_auto(z)).unwrap();
        witnesses.push(format!("prop5: mismatch at endomorphism {bad}"));
    }

    // 6: z in intersection of K(y) iff z^v = 0, both directions
    let mut prop6 = true;
    let mut bad6 = None;
    for z in 0..monoid.len() {
        let in_all = i0
            .iter()
            .all(|&y| monoid.compose(z, y) == z && monoid.compose(y, z) == z);
        let nilpotent_v = monoid.power(z, sp.v) == monoid.zero_index();
        if in_all != nilpotent_v {
            prop6 = false;
            bad6 = Some(z);
            break;
        }
    }
    props[5] = prop6;
    if let Some(z) = bad6 {
        witnesses.push(format!("prop6: equivalence fails at endomorphism {z}"));
    }

    // 7: D(x) is a p'-group, i.e. p does not divide |D(x)|
    let d = monoid.d_set(x);
    props[6] = !(d.len() as u64).is_multiple_of(sp.p);
    if !props[6] {
        witnesses.push(format!("prop7: p = {} divides |D(x)| = {}", sp.p, d.len()));
    }

    // 8: every Sylow p-subgroup of V(x) is elementary abelian of order p^u
    let v_set = monoid.v_set(x);
    match stabilizer_group(monoid, &v_set) {
        Some(v_group) => {
            let sylow = v_group.sylow_subgroup(sp.p);
            let mut ok = is_elementary_abelian(&v_group, sylow.elements(), sp.p)
                && sylow.order() == pu;
            // conjugacy makes one representative sufficient; small V gets all
            if ok && v_group.order() <= 5000 {
                for t in v_group.elements() {
                    let conj: Vec<usize> = sylow
                        .elements()
                        .iter()
                        .map(|&s| v_group.conjugate(s, t))
                        .collect();
                    if !is_elementary_abelian(&v_group, &conj, sp.p) {
                        ok = false;
                        break;
                    }
                }
            }
            props[7] = ok;
            if !props[7] {
                witnesses.push(format!(
                    "prop8: Sylow {}-subgroup of V(x) has order {} and is not \
                     elementary abelian of order {pu}",
                    sp.p,
                    sylow.order()
                ));
            }
        }
        None => {
            witnesses.push("prop8: V(x) is not closed as a group".to_string());
        }
    }

    CandidateRow { x_index: x, params: Some(sp), props, witnesses }
}

/// Composition table of a subset of End(G) as an abstract semigroup.
fn endo_subsemigroup(monoid: &EndoMonoid<'_>, subset: &[usize]) -> FiniteSemigroup {
    FiniteSemigroup::from_endo_export(&monoid.export())
        .expect("endomorphism composition tables are associative")
        .restrict(subset)
        .expect("stabilizer sets are closed under composition")
}

/// V(x) is a subgroup of Aut(G); materialize it as a group.
fn stabilizer_group(monoid: &EndoMonoid<'_>, subset: &[usize]) -> Option<Group> {
    let pos = |e: usize| subset.binary_search(&e).ok();
    let k = subset.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in subset {
        for &b in subset {
            table.push(pos(monoid.compose(a, b))?);
        }
    }
    Group::from_flat(k, table).ok()
}

fn is_elementary_abelian(g: &Group, elems: &[usize], p: u64) -> bool {
    let mut sorted = elems.to_vec();
    sorted.sort_unstable();
    let abelian = sorted
        .iter()
        .all(|&a| sorted.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    abelian
        && sorted
            .iter()
            .all(|&e| e == g.identity() || g.element_order(e) == p as usize)
}

/// Structural clause check: P nonabelian, P = H x| \<d\> with H a p-group and
/// d of order q^v, d^q central, H abelian, and \<h, d\> = P for every
/// nontrivial h in H. Groups passing it are Miller-Moreno.
pub fn miller_moreno_clauses(g: &Group, h_elems: &[usize], d: usize) -> bool {
    let Some(shape) = split_shape(g, h_elems, d) else {
        return false;
    };
    let h = shape;
    !g.is_abelian()
        && h.is_abelian()
        && h.elements()
            .iter()
            .all(|&x| x == g.identity() || g.subgroup_generated(&[x, d]).is_whole_group())
}

/// Structural clause check for the Schmidt variant: P non-nilpotent,
/// P = H x| \<d\>, d^q central, C_H(d) central in P, and \<h, d\> = P for every
/// h in H outside C_H(d).
pub fn schmidt_clauses(g: &Group, h_elems: &[usize], d: usize) -> bool {
    let Some(h) = split_shape(g, h_elems, d) else {
        return false;
    };
    let centralizer_of_d: Vec<usize> = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| g.mul(x, d) == g.mul(d, x))
        .collect();
    let center = g.center();
    !g.is_nilpotent()
        && centralizer_of_d.iter().all(|&x| center.contains(x))
        && h.elements()
            .iter()
            .filter(|x| centralizer_of_d.binary_search(x).is_err())
            .all(|&x| g.subgroup_generated(&[x, d]).is_whole_group())
}

/// Common clauses b) and c): H normal p-group, <d> cyclic of coprime
/// prime-power order q^v complementing H, d^q central.
fn split_shape<'g>(g: &'g Group, h_elems: &[usize], d: usize) -> Option<Subgroup<'g>> {
    let h = Subgroup::new(g, h_elems.to_vec()).ok()?;
    if !h.is_normal() {
        return None;
    }
    let hp = num::prime_factorization(h.order() as u64);
    if hp.len() != 1 {
        return None;
    }
    let p = hp[0].0;
    let d_order = g.element_order(d) as u64;
    let dq = num::prime_factorization(d_order);
    if dq.len() != 1 || dq[0].0 == p {
        return None;
    }
    let q = dq[0].0;
    // complement: trivial intersection, full product
    let d_cyclic = g.subgroup_generated(&[d]);
    let inter = h.elements().iter().filter(|&&e| d_cyclic.contains(e)).count();
    if inter != 1 || h.order() * d_cyclic.order() != g.order() {
        return None;
    }
    // d^q central
    if !g.center().contains(g.power(d, q as usize)) {
        return None;
    }
    Some(h)
}

/// One row of an oracle-agreement run.
#[derive(Clone, Debug, Serialize)]
pub struct AgreementRow {
    pub name: String,
    pub order: usize,
    pub lattice_is_schmidt: bool,
    pub lattice_params: Option<SchmidtParams>,
    pub characterization_verdict: bool,
    pub agree: bool,
}

/// Run both routes over a corpus: the lattice oracle decides Schmidt-ness
/// and supplies parameters; the characterization must agree (with those
/// parameters when Schmidt, with inferred parameters otherwise). Any
/// disagreement indicates a bug.
pub fn oracle_agreement(
    corpus: &[(String, Group)],
    cfg: &RunConfig,
) -> Result<Vec<AgreementRow>, GroupError> {
    let items: Vec<(String, Group)> = corpus.to_vec();
    let rows = par::map_collect(cfg.parallel, items, |(name, g)| {
        let inner = cfg.clone().sequential();
        let verdict = lattice_oracle(&g, &inner)?;
        let params = if verdict.is_schmidt { verdict.params } else { None };
        let report = characterize(&g, params, &inner)?;
        Ok::<AgreementRow, GroupError>(AgreementRow {
            name,
            order: g.order(),
            lattice_is_schmidt: verdict.is_schmidt,
            lattice_params: verdict.params,
            characterization_verdict: report.verdict,
            agree: verdict.is_schmidt == report.verdict,
        })
    });
    rows.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{catalog, miller_moreno, MmParams};

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn lattice_oracle_examples() {
        let s3 = catalog("S3").unwrap();
        let v = lattice_oracle(&s3, &cfg()).unwrap();
        assert!(v.is_schmidt && v.is_miller_moreno);
        assert_eq!(v.params.map(|p| (p.p, p.q, p.v)), Some((3, 2, 1)));

        let a4 = catalog("A4").unwrap();
        let v = lattice_oracle(&a4, &cfg()).unwrap();
        assert!(v.is_schmidt && v.is_miller_moreno);
        assert_eq!(v.params.map(|p| (p.p, p.q, p.v)), Some((2, 3, 1)));

        // S4 contains the non-nilpotent S3
        let s4 = catalog("S4").unwrap();
        let v = lattice_oracle(&s4, &cfg()).unwrap();
        assert!(!v.is_schmidt);
        assert_eq!(v.witness.as_ref().map(|w| w.len()), Some(6));

        // Q8 is nilpotent
        let q8 = catalog("Q8").unwrap();
        let v = lattice_oracle(&q8, &cfg()).unwrap();
        assert!(!v.is_schmidt);

        // SL23 is Schmidt but not Miller-Moreno (Q8 inside)
        let sl = catalog("SL23").unwrap();
        let v = lattice_oracle(&sl, &cfg()).unwrap();
        assert!(v.is_schmidt);
        assert!(!v.is_miller_moreno);
        assert_eq!(v.params.map(|p| (p.p, p.q, p.v)), Some((2, 3, 1)));

        // abelian groups are neither
        let c6 = catalog("C6").unwrap();
        let v = lattice_oracle(&c6, &cfg()).unwrap();
        assert!(!v.is_schmidt && !v.is_miller_moreno);
    }

    #[test]
    fn characterization_passes_on_schmidt_groups() {
        for (name, p, q, v) in [("S3", 3u64, 2u64, 1u32), ("SL23", 2, 3, 1)] {
            let g = catalog(name).unwrap();
            let report = characterize(&g, Some(SchmidtParams::new(p, q, v)), &cfg()).unwrap();
            assert!(report.verdict, "{name} should pass");
            // all candidates pass, not just one
            for c in &report.candidates {
                assert!(c.props.iter().all(|&b| b), "{name} candidate {}", c.x_index);
            }
        }
    }

    #[test]
    fn characterization_fails_on_non_schmidt_groups() {
        for name in ["C12", "D4", "Q8", "C6", "C3xC3", "S4", "D6", "C2xC2xC2"] {
            let g = catalog(name).unwrap();
            let report = characterize(&g, None, &cfg()).unwrap();
            assert!(!report.verdict, "{name} should fail");
        }
    }

    #[test]
    fn characterization_infers_parameters() {
        let a4 = catalog("A4").unwrap();
        let report = characterize(&a4, None, &cfg()).unwrap();
        assert!(report.verdict);
        let p = report.inferred_params.unwrap();
        assert!(p.inferred);
        assert_eq!((p.p, p.q, p.v, p.u), (2, 3, 1, 2));
    }

    #[test]
    fn wrong_explicit_parameters_fail() {
        let a4 = catalog("A4").unwrap();
        let report = characterize(&a4, Some(SchmidtParams::new(3, 2, 1)), &cfg()).unwrap();
        assert!(!report.verdict);
        // right primes, wrong exponent: the K(x) model has the wrong size
        let mm = miller_moreno(MmParams::new(2, 3, 2).unwrap(), &cfg()).unwrap();
        let report =
            characterize(&mm.group, Some(SchmidtParams::new(2, 3, 1)), &cfg()).unwrap();
        assert!(!report.verdict);
        for c in &report.candidates {
            assert!(!c.props[0], "the cyclic-monoid match must fail at v = 1");
        }
    }

    #[test]
    fn structural_clause_checks() {
        // Miller-Moreno and Schmidt clauses hold on every constructed group,
        // with H the derived subgroup and d = b
        for mm in crate::construct::miller_moreno_up_to(40, &cfg()) {
            let h = mm.group.derived_subgroup().elements().to_vec();
            assert!(miller_moreno_clauses(&mm.group, &h, mm.b));
            assert!(schmidt_clauses(&mm.group, &h, mm.b));
        }

        // SL23 = Q8 x| C3 satisfies the Schmidt clauses but not the
        // Miller-Moreno ones (H = Q8 is nonabelian)
        let sl = catalog("SL23").unwrap();
        let h = sl.derived_subgroup().elements().to_vec();
        let d = sl
            .elements()
            .find(|&d| {
                sl.element_order(d) == 3 && !h.contains(&d)
            })
            .unwrap();
        assert!(schmidt_clauses(&sl, &h, d));
        assert!(!miller_moreno_clauses(&sl, &h, d));

        // direct product shape fails: C6 = C3 x C2 is nilpotent
        let c6 = catalog("C6").unwrap();
        let h = c6.sylow_subgroup(3).elements().to_vec();
        let d = c6.elements().find(|&g| c6.element_order(g) == 2).unwrap();
        assert!(!schmidt_clauses(&c6, &h, d));
        assert!(!miller_moreno_clauses(&c6, &h, d));
    }

    #[test]
    fn k_set_of_m322_matches_the_mod_4_monoid() {
        // M(3,2,2) has order 12 and cyclic complement C4; K(x) for any
        // nontrivial idempotent is the endomorphism monoid of C4, i.e. the
        // multiplicative monoid of Z_4
        let mm = miller_moreno(MmParams::new(3, 2, 2).unwrap(), &cfg()).unwrap();
        assert_eq!(mm.group.order(), 12);
        let monoid = crate::endo::enumerate_end(&mm.group, &cfg()).unwrap();
        let model = FiniteSemigroup::cyclic_monoid_model(4);
        for x in monoid.nontrivial_idempotents() {
            let k = monoid.k_set(x);
            assert_eq!(k.len(), 4);
            let sub = FiniteSemigroup::from_endo_export(&monoid.export())
                .unwrap()
                .restrict(&k)
                .unwrap();
            assert!(sub.isomorphic_to(&model, None).is_some());
        }
        // M(3,2,2) is in the same class as the dicyclic group of order 12
        assert!(crate::group::are_isomorphic(&mm.group, &catalog("Dic3").unwrap()).is_some());
    }

    #[test]
    fn agreement_on_a_small_corpus() {
        let corpus: Vec<(String, Group)> = ["C6", "S3", "D4", "A4", "C3xC3"]
            .iter()
            .map(|n| (n.to_string(), catalog(n).unwrap()))
            .collect();
        let rows = oracle_agreement(&corpus, &cfg()).unwrap();
        assert!(rows.iter().all(|r| r.agree));
        assert_eq!(
            rows.iter().filter(|r| r.lattice_is_schmidt).count(),
            2 // S3 and A4
        );
    }
}
