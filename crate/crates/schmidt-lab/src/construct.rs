//! Group constructions: a catalog of named comparison groups and the
//! Miller-Moreno group M(p, q, v) built from residue-field data.
//!
//! M(p, q, v) lives on pairs (f, n) with f in the field Z_p\[x\]/(psi) and n in
//! Z_{q^v}, multiplying by (f1, n1) * (f2, n2) = (f1 * x^n2 + f2, n1 + n2).
//! Its derived subgroup is the additive group of the field, the complement is
//! the cyclic group generated by b = (0, 1), and every proper subgroup is
//! abelian.

use crate::config::RunConfig;
use crate::group::{all_subgroups, direct_product as dp, semidirect_product, Group, GroupError, Subgroup};
use crate::num;
use crate::poly::{PolyError, ResidueRing};

#[derive(Debug, thiserror::Error)]
pub enum ConstructError {
    #[error("p and q must be distinct primes, got p={p} q={q}")]
    BadPrimes { p: u64, q: u64 },
    #[error("v must be at least 1")]
    BadExponent,
    #[error("ring construction failed: {0}")]
    Ring(#[from] PolyError),
    #[error("order {order} exceeds construction cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("group error: {0}")]
    Group(#[from] GroupError),
}

/// Parameters (p, q, v) of a Miller-Moreno group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MmParams {
    pub p: u64,
    pub q: u64,
    pub v: u32,
}

impl MmParams {
    pub fn new(p: u64, q: u64, v: u32) -> Result<MmParams, ConstructError> {
        if !num::is_prime(p) || !num::is_prime(q) || p == q {
            return Err(ConstructError::BadPrimes { p, q });
        }
        if v == 0 {
            return Err(ConstructError::BadExponent);
        }
        Ok(MmParams { p, q, v })
    }

    /// u = multiplicative order of p mod q = deg(psi).
    pub fn u(&self) -> usize {
        num::multiplicative_order(self.p, self.q) as usize
    }

    /// p^u * q^v, or None on overflow.
    pub fn checked_group_order(&self) -> Option<usize> {
        let pu = (self.p as usize).checked_pow(self.u() as u32)?;
        let qv = (self.q as usize).checked_pow(self.v)?;
        pu.checked_mul(qv)
    }

    pub fn group_order(&self) -> usize {
        self.checked_group_order().expect("group order overflows usize")
    }
}

/// A constructed Miller-Moreno group together with its distinguished data:
/// the generator b = (0, 1) of the cyclic complement and the projection onto
/// that complement (the canonical nontrivial idempotent endomorphism).
#[derive(Clone, Debug)]
pub struct MillerMoreno {
    pub params: MmParams,
    pub ring: ResidueRing,
    pub group: Group,
    /// Index of b = (0, 1).
    pub b: usize,
    /// Endomorphism map (f, n) -> (0, n).
    pub projection_b: Vec<usize>,
    /// Whether the every-proper-subgroup-abelian postcondition was verified
    /// (skipped above the subgroup enumeration cap).
    pub proper_subgroups_verified: bool,
}

/// Build M(p, q, v) and verify its structural postconditions.
pub fn miller_moreno(params: MmParams, cfg: &RunConfig) -> Result<MillerMoreno, ConstructError> {
    // order check before the ring: factoring is infeasible long before the
    // table is
    match params.checked_group_order() {
        Some(order) if order <= cfg.construct_cap => {}
        _ => {
            return Err(ConstructError::CapExceeded {
                order: params.checked_group_order().unwrap_or(usize::MAX),
                cap: cfg.construct_cap,
            })
        }
    }
    let ring = ResidueRing::build(params.p, params.q)?;
    miller_moreno_with_ring(params, ring, cfg)
}

/// Same construction with a caller-supplied ring, so the dependence on the
/// choice of irreducible factor can be tested rather than assumed.
#[allow(clippy::needless_range_loop)] // indices are the group elements
pub fn miller_moreno_with_ring(
    params: MmParams,
    ring: ResidueRing,
    cfg: &RunConfig,
) -> Result<MillerMoreno, ConstructError> {
    let qv = (params.q as usize).pow(params.v);
    let r = ring.size();
    let order = r * qv;
    if order > cfg.construct_cap {
        return Err(ConstructError::CapExceeded { order, cap: cfg.construct_cap });
    }

    let elems = ring.elements();
    let xpow: Vec<Vec<usize>> = (0..params.q as usize)
        .map(|j| {
            let xj = ring.x_pow(j as u64);
            elems.iter().map(|f| ring.index_of(&ring.mul(f, &xj))).collect()
        })
        .collect();
    let idx = |f: usize, n: usize| f * qv + n;
    let mut table = Vec::with_capacity(order * order);
    for f1 in 0..r {
        for n1 in 0..qv {
            for f2 in 0..r {
                for n2 in 0..qv {
                    let f = ring.index_of(&ring.add(
                        &ring.from_index(xpow[n2 % params.q as usize][f1]),
                        &elems[f2],
                    ));
                    table.push(idx(f, (n1 + n2) % qv));
                }
            }
        }
    }
    let group = Group::from_flat(order, table)?;

    // structural postconditions
    let u = ring.u();
    assert_eq!(order, (params.p as usize).pow(u as u32) * qv);
    let derived = group.derived_subgroup();
    let expected_derived: Vec<usize> = (0..r).map(|f| idx(f, 0)).collect();
    assert_eq!(derived.elements(), &expected_derived[..], "derived subgroup is the field part");
    assert!(derived.is_abelian());
    assert!(
        derived.elements().iter().all(|&g| g == group.identity() || group.element_order(g) == params.p as usize),
        "derived subgroup is elementary abelian"
    );
    assert!(group.second_derived_subgroup().is_trivial());
    let center = group.center();
    let expected_center: Vec<usize> = (0..qv)
        .step_by(params.q as usize)
        .map(|n| idx(0, n))
        .collect();
    assert_eq!(center.elements(), &expected_center[..], "center is <b^q>");
    assert_eq!(center.order(), qv / params.q as usize);
    let b = idx(0, 1);
    assert_eq!(group.element_order(b), qv);
    assert!(center.contains(group.power(b, params.q as usize)));
    assert!(!group.is_nilpotent());

    let mut verified = false;
    if order <= cfg.subgroup_cap {
        for sub in all_subgroups(&group, cfg.subgroup_cap)? {
            if sub.len() == order {
                continue;
            }
            let s = Subgroup::new(&group, sub).expect("enumerated subgroups are subgroups");
            assert!(s.is_abelian(), "every proper subgroup of M(p,q,v) is abelian");
        }
        verified = true;
    }

    let projection_b: Vec<usize> = (0..order).map(|g| idx(0, g % qv)).collect();
    assert!(crate::group::is_homomorphism(&group, &group, &projection_b));

    Ok(MillerMoreno {
        params,
        ring,
        group,
        b,
        projection_b,
        proper_subgroups_verified: verified,
    })
}

/// A named catalog group with the recipe that produced it.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: Group,
    pub provenance: String,
}

fn cyclic(n: usize) -> Group {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push((a + b) % n);
        }
    }
    Group::from_flat(n, table).expect("cyclic tables are groups")
}

/// Dihedral group of order 2m: elements eps*m + i stand for s^eps r^i.
fn dihedral(m: usize) -> Group {
    let n = 2 * m;
    let idx = |eps: usize, i: usize| eps * m + i;
    let mut table = vec![0usize; n * n];
    for e1 in 0..2 {
        for i1 in 0..m {
            for e2 in 0..2 {
                for i2 in 0..m {
                    // s^e1 r^i1 * s^e2 r^i2; r^i s = s r^{-i}
                    let (eps, i) = if e2 == 0 {
                        (e1, (i1 + i2) % m)
                    } else {
                        ((e1 + 1) % 2, (m + i2 - i1) % m)
                    };
                    table[idx(e1, i1) * n + idx(e2, i2)] = idx(eps, i);
                }
            }
        }
    }
    Group::from_flat(n, table).expect("dihedral tables are groups")
}

/// Dicyclic group of order 4m: elements eps*2m + i stand for a^i b^eps with
/// a^2m = 1, b^2 = a^m, b^-1 a b = a^-1. Dic(2) is the quaternion group.
fn dicyclic(m: usize) -> Group {
    let tm = 2 * m;
    let n = 4 * m;
    let idx = |i: usize, eps: usize| eps * tm + i;
    let mut table = vec![0usize; n * n];
    for i1 in 0..tm {
        for e1 in 0..2 {
            for i2 in 0..tm {
                for e2 in 0..2 {
                    let (i, eps) = match (e1, e2) {
                        (0, _) => ((i1 + i2) % tm, e2),
                        (1, 0) => ((tm + i1 - i2) % tm, 1),
                        (1, 1) => ((tm + i1 - i2 + m) % tm, 0),
                        _ => unreachable!(),
                    };
                    table[idx(i1, e1) * n + idx(i2, e2)] = idx(i, eps);
                }
            }
        }
    }
    Group::from_flat(n, table).expect("dicyclic tables are groups")
}

/// The quaternion group in the i, j, k presentation used by the SL23 recipe:
/// 0..7 = 1, i, -1, -i, j, k, -j, -k (dicyclic(2) with a = i, b = j).
fn quaternion() -> Group {
    dicyclic(2)
}

/// Permutations of 0..k in lexicographic order, multiplied left to right
/// (x under pi*sigma is sigma applied to pi applied to x).
fn perm_group(k: usize, even_only: bool) -> Group {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in out {
                for v in 0..k {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            out = next;
        }
        out
    }
    fn parity(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    }
    let all: Vec<Vec<usize>> = perms(k)
        .into_iter()
        .filter(|p| !even_only || parity(p) == 0)
        .collect();
    let n = all.len();
    let pos = |p: &[usize]| all.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let mut table = Vec::with_capacity(n * n);
    for p in &all {
        for s in &all {
            let prod: Vec<usize> = (0..k).map(|x| s[p[x]]).collect();
            table.push(pos(&prod));
        }
    }
    Group::from_flat(n, table).expect("permutation tables are groups")
}

fn sl23() -> Group {
    // Q8 x| C3, the action cycling i -> j -> k
    let q8 = quaternion();
    // indices: 0=1, 1=i, 2=-1, 3=-i, 4=j, 5=k, 6=-j, 7=-k
    let alpha: Vec<usize> = vec![0, 4, 2, 6, 5, 1, 7, 3];
    let alpha2: Vec<usize> = (0..8).map(|x| alpha[alpha[x]]).collect();
    let id: Vec<usize> = (0..8).collect();
    semidirect_product(&q8, &cyclic(3), &[id, alpha, alpha2])
        .expect("the i->j->k action is an order-3 automorphism")
}

fn c3_by_c4() -> Group {
    // C3 x| C4, the generator of C4 acting by inversion
    let c3 = cyclic(3);
    let id: Vec<usize> = (0..3).collect();
    let inv: Vec<usize> = (0..3).map(|x| (3 - x) % 3).collect();
    semidirect_product(&c3, &cyclic(4), &[id.clone(), inv.clone(), id, inv])
        .expect("inversion through C4 is an action")
}

/// All catalog entries. Names are stable public identifiers.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut push = |name: &'static str, group: Group, provenance: String| {
        debug_assert!(entries.iter().all(|e| e.name != name));
        entries.push(CatalogEntry { name, group, provenance });
    };
    const CYCLIC_NAMES: [&str; 24] = [
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
        "C15", "C16", "C17", "C18", "C19", "C20", "C21", "C22", "C23", "C24",
    ];
    for (i, name) in CYCLIC_NAMES.iter().enumerate() {
        push(name, cyclic(i + 1), format!("cyclic({})", i + 1));
    }
    push("C2xC2", dp(&cyclic(2), &cyclic(2)), "C2 x C2".into());
    push("C3xC3", dp(&cyclic(3), &cyclic(3)), "C3 x C3".into());
    push("C2xC4", dp(&cyclic(2), &cyclic(4)), "C2 x C4".into());
    push(
        "C2xC2xC2",
        dp(&dp(&cyclic(2), &cyclic(2)), &cyclic(2)),
        "C2 x C2 x C2".into(),
    );
    push("S3", dihedral(3), "dihedral(3)".into());
    push("D4", dihedral(4), "dihedral(4)".into());
    push("Q8", quaternion(), "dicyclic(2)".into());
    push("D5", dihedral(5), "dihedral(5)".into());
    push("D6", dihedral(6), "dihedral(6)".into());
    push("A4", perm_group(4, true), "even permutations of 4 points".into());
    push("Dic3", dicyclic(3), "dicyclic(3)".into());
    push("S4", perm_group(4, false), "permutations of 4 points".into());
    push("SL23", sl23(), "Q8 x| C3, action cycling i->j->k".into());
    push("C3:C4", c3_by_c4(), "C3 x| C4, C4 acting by inversion".into());
    entries
}

pub fn catalog_names() -> Vec<&'static str> {
    catalog_entries().iter().map(|e| e.name).collect()
}

/// Look up a catalog group by name.
pub fn catalog(name: &str) -> Result<Group, ConstructError> {
    catalog_entries()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.group)
        .ok_or_else(|| ConstructError::UnknownName(name.to_string()))
}

/// Re-export of the direct product for callers that come through this module.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    dp(a, b)
}

/// Display name for a constructed group, e.g. "M(2,3,1)".
pub fn mm_name(params: MmParams) -> String {
    format!("M({},{},{})", params.p, params.q, params.v)
}

/// Every M(p, q, v) of order at most `max_order`, sorted by (order, name).
pub fn miller_moreno_up_to(max_order: usize, cfg: &RunConfig) -> Vec<MillerMoreno> {
    let mut out = Vec::new();
    for p in 2..=max_order as u64 {
        if !num::is_prime(p) {
            continue;
        }
        for q in 2..=max_order as u64 {
            if p == q || !num::is_prime(q) {
                continue;
            }
            for v in 1.. {
                let Ok(params) = MmParams::new(p, q, v) else { break };
                match params.checked_group_order() {
                    Some(order) if order <= max_order => {}
                    _ => break,
                }
                out.push(miller_moreno(params, cfg).expect("within caps"));
            }
        }
    }
    out.sort_by_key(|m| (m.group.order(), mm_name(m.params)));
    out
}
