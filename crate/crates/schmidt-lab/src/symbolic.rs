//! Closed-form model of the proper endomorphisms and automorphisms of a
//! Miller-Moreno group with trivial second derived subgroup.
//!
//! Proper endomorphisms are pairs [n; f(x)] with n in Z_{q^v} and f in the
//! residue field; automorphisms are triplets [n; a(x); b(x)] with q not
//! dividing n and b nonzero. Composition:
//!
//! ```text
//! [n; f] * [m; g]       = [nm; g]
//! [n; a; b] * [m; f]    = [nm; f]
//! [m; f] * [n; a; b]    = [nm; a*(x-1)^-1 + b*f(x^n)]
//! ```
//!
//! Two pairs are equal iff their n parts agree and either the f parts agree
//! or q divides n; pairs are therefore kept in a canonical form that rewrites
//! f to 0 whenever q divides n. Triplet-with-triplet composition is not part
//! of the model and is intentionally not provided.

use std::fmt;

use serde::Serialize;

use crate::config::RunConfig;
use crate::construct::{MillerMoreno, MmParams};
use crate::endo::EndoMonoid;
use crate::poly::{ResidueElem, ResidueRing};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, thiserror::Error)]
pub enum SymbolicError {
    #[error("cardinality mismatch: brute-force proper part has {brute}, model has {model}")]
    CardinalityMismatch { brute: usize, model: usize },
    #[error("no anchored isomorphism between the brute-force and symbolic models")]
    NoIsomorphism,
    #[error("the group's second derived subgroup must be trivial")]
    SecondDerivedNontrivial,
}

/// Proper endomorphism in pair form, canonicalized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairEndo {
    pub n: u64,
    pub f: ResidueElem,
}

impl fmt::Display for PairEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.n, self.f)
    }
}

/// Automorphism in triplet form: q does not divide n, b != 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripletAuto {
    pub n: u64,
    pub a: ResidueElem,
    pub b: ResidueElem,
}

impl fmt::Display for TripletAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}; {}]", self.n, self.a, self.b)
    }
}

/// Serializable dump of the pair model.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicModelExport {
    pub schema: u32,
    pub p: u64,
    pub q: u64,
    pub v: u32,
    pub u: usize,
    pub pairs: Vec<PairExport>,
    pub comp: Vec<Vec<usize>>,
    pub distinguished: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairExport {
    pub n: u64,
    pub f: Vec<u64>,
    pub text: String,
}

/// The pair model of the proper-endomorphism semigroup for parameters
/// (p, q, v), with its composition table and the distinguished projection
/// [1; 0].
#[derive(Clone, Debug)]
pub struct SymbolicModel {
    pub params: MmParams,
    pub ring: ResidueRing,
    qv: u64,
    pairs: Vec<PairEndo>,
    comp: Vec<usize>,
    distinguished: usize,
}

impl SymbolicModel {
    /// Enumerate the canonical pairs and build the full composition table.
    pub fn build(params: MmParams, ring: ResidueRing) -> SymbolicModel {
        let qv = params.q.pow(params.v);
        let mut pairs = Vec::new();
        for n in 0..qv {
            if n % params.q == 0 {
                pairs.push(PairEndo { n, f: ring.zero() });
            } else {
                for f in ring.elements() {
                    pairs.push(PairEndo { n, f });
                }
            }
        }
        // p^u * (q^v - q^(v-1)) + q^(v-1) elements
        let expected = ring.size() * (qv - qv / params.q) as usize + (qv / params.q) as usize;
        assert_eq!(pairs.len(), expected, "pair count formula");
        pairs.sort();
        let index_of = |pe: &PairEndo| -> usize {
            pairs
                .binary_search_by(|probe| probe.cmp(pe))
                .expect("canonical pairs are closed under composition")
        };
        let k = pairs.len();
        let mut comp = vec![0usize; k * k];
        let mut model = SymbolicModel {
            params,
            ring,
            qv,
            pairs: pairs.clone(),
            comp: vec![],
            distinguished: 0,
        };
        for (i, e1) in pairs.iter().enumerate() {
            for (j, e2) in pairs.iter().enumerate() {
                comp[i * k + j] = index_of(&model.compose_pairs(e1, e2));
            }
        }
        model.comp = comp;
        model.distinguished = index_of(&PairEndo { n: 1, f: model.ring.zero() });
        model.verify();
        model
    }

    /// Canonical form: when q divides n the f part is rewritten to 0.
    pub fn canonicalize(&self, n: u64, f: ResidueElem) -> PairEndo {
        let n = n % self.qv;
        if n.is_multiple_of(self.params.q) {
            PairEndo { n, f: self.ring.zero() }
        } else {
            PairEndo { n, f }
        }
    }

    /// [n; f] * [m; g] = [nm; g].
    pub fn compose_pairs(&self, e1: &PairEndo, e2: &PairEndo) -> PairEndo {
        self.canonicalize(e1.n * e2.n % self.qv, e2.f.clone())
    }

    /// [n; a; b] * [m; f] = [nm; f].
    pub fn compose_triplet_pair(&self, z: &TripletAuto, e: &PairEndo) -> PairEndo {
        self.canonicalize(z.n * e.n % self.qv, e.f.clone())
    }

    /// [m; f] * [n; a; b] = [nm; a*(x-1)^-1 + b*f(x^n)].
    pub fn compose_pair_triplet(&self, e: &PairEndo, z: &TripletAuto) -> PairEndo {
        let ring = &self.ring;
        let xm1 = ring.sub(&ring.x(), &ring.one());
        let xm1_inv = ring.inv(&xm1).expect("x - 1 is invertible in the ring");
        let part1 = ring.mul(&z.a, &xm1_inv);
        let part2 = ring.mul(&z.b, &ring.substitute_power(&e.f, z.n));
        self.canonicalize(e.n * z.n % self.qv, ring.add(&part1, &part2))
    }

    /// All triplets [n; a; b]: q not dividing n, b nonzero.
    pub fn triplets(&self) -> Vec<TripletAuto> {
        let mut out = Vec::new();
        for n in 0..self.qv {
            if n % self.params.q == 0 {
                continue;
            }
            for a in self.ring.elements() {
                for b in self.ring.elements() {
                    if b.is_zero() {
                        continue;
                    }
                    out.push(TripletAuto { n, a: a.clone(), b });
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[PairEndo] {
        &self.pairs
    }

    pub fn index_of(&self, e: &PairEndo) -> Option<usize> {
        self.pairs.binary_search_by(|probe| probe.cmp(e)).ok()
    }

    /// Index of the distinguished projection [1; 0].
    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.comp[i * self.pairs.len() + j]
    }

    /// The model as an abstract semigroup.
    pub fn as_semigroup(&self) -> FiniteSemigroup {
        let k = self.pairs.len();
        let rows: Vec<Vec<usize>> = (0..k).map(|i| self.comp[i * k..(i + 1) * k].to_vec()).collect();
        FiniteSemigroup::new(&rows).expect("model composition is associative")
    }

    /// Idempotent pairs other than the zero [0; 0].
    pub fn nontrivial_idempotents(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.compose(i, i) == i && self.pairs[i] != self.zero_pair())
            .collect()
    }

    pub fn zero_pair(&self) -> PairEndo {
        PairEndo { n: 0, f: self.ring.zero() }
    }

    /// Triplets fixing the distinguished projection on the left:
    /// z * [1; 0] = [1; 0]. By the composition rule this forces n = 1.
    pub fn v_triplets(&self) -> Vec<TripletAuto> {
        let x_star = &self.pairs[self.distinguished];
        self.triplets()
            .into_iter()
            .filter(|z| &self.compose_triplet_pair(z, x_star) == x_star)
            .collect()
    }

    /// Triplets commuting with the distinguished projection:
    /// additionally [1; 0] * z = [1; 0], forcing a = 0.
    pub fn d_triplets(&self) -> Vec<TripletAuto> {
        let x_star = &self.pairs[self.distinguished];
        self.v_triplets()
            .into_iter()
            .filter(|z| &self.compose_pair_triplet(x_star, z) == x_star)
            .collect()
    }

    pub fn export(&self) -> SymbolicModelExport {
        let k = self.pairs.len();
        SymbolicModelExport {
            schema: 1,
            p: self.params.p,
            q: self.params.q,
            v: self.params.v,
            u: self.ring.u(),
            pairs: self
                .pairs
                .iter()
                .map(|e| PairExport {
                    n: e.n,
                    f: e.f.rep().coeffs().to_vec(),
                    text: e.to_string(),
                })
                .collect(),
            comp: (0..k).map(|i| self.comp[i * k..(i + 1) * k].to_vec()).collect(),
            distinguished: self.distinguished,
        }
    }

    fn verify(&self) {
        let k = self.pairs.len();
        // zero is two-sided
        let zero = self.index_of(&self.zero_pair()).expect("zero pair present");
        for i in 0..k {
            assert_eq!(self.compose(zero, i), zero);
            assert_eq!(self.compose(i, zero), zero);
        }
        // associativity of the pair table
        for a in 0..k {
            for b in 0..k {
                let ab = self.compose(a, b);
                for c in 0..k {
                    assert_eq!(self.compose(ab, c), self.compose(a, self.compose(b, c)));
                }
            }
        }
    }
}

/// Match the proper-endomorphism subsemigroup of a brute-force End(G) with
/// the pair model via an anchored isomorphism sending the projection onto
/// \<b\> to `[1; 0]`. The match is structural: the model never defines how a
/// pair acts on group elements.
pub fn match_with_bruteforce(
    mm: &MillerMoreno,
    monoid: &EndoMonoid<'_>,
    model: &SymbolicModel,
    _cfg: &RunConfig,
) -> Result<Vec<usize>, SymbolicError> {
    if !mm.group.second_derived_subgroup().is_trivial() {
        return Err(SymbolicError::SecondDerivedNontrivial);
    }
    let proper: Vec<usize> = (0..monoid.len()).filter(|&i| !monoid.is_auto(i)).collect();
    if proper.len() != model.len() {
        return Err(SymbolicError::CardinalityMismatch {
            brute: proper.len(),
            model: model.len(),
        });
    }
    let brute = FiniteSemigroup::from_endo_export(&monoid.export())
        .expect("endomorphism composition is associative")
        .restrict(&proper)
        .expect("proper endomorphisms are closed under composition");
    let projection_index = monoid
        .index_of_map(&mm.projection_b)
        .expect("the projection onto <b> is an endomorphism");
    let anchor_src = proper
        .binary_search(&projection_index)
        .expect("the projection onto <b> is proper");
    brute
        .isomorphic_to(&model.as_semigroup(), Some((anchor_src, model.distinguished())))
        .ok_or(SymbolicError::NoIsomorphism)
}
