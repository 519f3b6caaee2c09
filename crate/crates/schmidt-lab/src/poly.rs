//! Univariate polynomial arithmetic over a prime field Z_p, factorization of
//! (x^q - 1)/(x - 1), and the residue field Z_p\[x\]/(psi(x)).
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty vector. Moduli are small primes, so plain
//! `u64` arithmetic never overflows.

use std::fmt;

use crate::num;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p and q must be distinct primes, got {0}")]
    EqualPrimes(u64),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("mixed moduli: {0} vs {1}")]
    MixedModuli(u64, u64),
}

/// Polynomial over Z_p, coefficients ascending by degree, normalized.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = PolyModP {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: vec![] }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    /// c * x^k
    pub fn monomial(p: u64, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(p, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, coeffs)
    }

    pub fn mul_scalar(&self, c: u64) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| a * (c % self.p) % self.p).collect();
        Self::new(self.p, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % self.p;
        }
        acc
    }

    /// Division with remainder by a polynomial whose leading coefficient is a
    /// unit. Returns (quotient, remainder).
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        debug_assert_eq!(self.p, divisor.p);
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = num::inv_mod(*divisor.coeffs.last().unwrap(), self.p)
            .expect("leading coefficient must be a unit");
        let mut rem = self.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            let factor = rem.coeff(rd) * lead_inv % self.p;
            quot[shift] = factor;
            let sub = divisor.mul(&Self::monomial(self.p, factor, shift));
            rem = rem.sub(&sub);
        }
        (Self::new(self.p, quot), rem)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divmod(self).1.is_zero()
    }

    /// Extended Euclid over Z_p\[x\]: (g, s, t) with s*a + t*b = g.
    pub fn egcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let p = a.p;
        let (mut old_r, mut r) = (a.clone(), b.clone());
        let (mut old_s, mut s) = (Self::constant(p, 1), Self::zero(p));
        let (mut old_t, mut t) = (Self::zero(p), Self::constant(p, 1));
        while !r.is_zero() {
            let (q, rem) = old_r.divmod(&r);
            old_r = std::mem::replace(&mut r, rem);
            let ns = old_s.sub(&q.mul(&s));
            old_s = std::mem::replace(&mut s, ns);
            let nt = old_t.sub(&q.mul(&t));
            old_t = std::mem::replace(&mut t, nt);
        }
        (old_r, old_s, old_t)
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Enumerate monic polynomials of the given degree over Z_p in ascending
/// lexicographic order of the coefficient vector (constant term compared
/// first).
fn monic_polys(p: u64, degree: usize) -> Vec<PolyModP> {
    let mut out = Vec::new();
    let mut free = vec![0u64; degree];
    loop {
        let mut coeffs = free.clone();
        coeffs.push(1);
        out.push(PolyModP::new(p, coeffs));
        // odometer: last coefficient cycles fastest so c0 stays most significant
        let mut pos = degree;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            free[pos] += 1;
            if free[pos] < p {
                break;
            }
            free[pos] = 0;
        }
    }
}

/// Factor a squarefree monic polynomial into monic irreducibles by trial
/// division, smallest degree first and lexicographically least within a
/// degree. Exhaustive and deterministic; adequate for desk-scale moduli.
pub fn factor_monic(f: &PolyModP) -> Vec<PolyModP> {
    assert!(f.is_monic(), "factor_monic expects a monic polynomial");
    let p = f.modulus();
    let mut rest = f.clone();
    let mut factors = Vec::new();
    'outer: while rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        for d in 1..=deg / 2 {
            for cand in monic_polys(p, d) {
                if cand.divides(&rest) {
                    let (q, _) = rest.divmod(&cand);
                    factors.push(cand);
                    rest = q;
                    continue 'outer;
                }
            }
        }
        // no divisor of degree <= deg/2: rest is irreducible
        factors.push(rest);
        rest = PolyModP::constant(p, 1);
    }
    factors.sort();
    factors
}

fn is_irreducible(f: &PolyModP) -> bool {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        for cand in monic_polys(f.modulus(), d) {
            if cand.divides(f) {
                return false;
            }
        }
    }
    true
}

/// (x^q - 1)/(x - 1) = x^(q-1) + ... + x + 1 over Z_p.
pub fn cyclotomic_quotient(p: u64, q: u64) -> PolyModP {
    PolyModP::new(p, vec![1; q as usize])
}

/// The field Z_p\[x\]/(psi(x)) where psi is a fixed monic irreducible divisor
/// of x^(q-1) + ... + x + 1 over Z_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueRing {
    p: u64,
    q: u64,
    psi: PolyModP,
    u: usize,
}

/// Element of a [`ResidueRing`]: a representative of degree below deg(psi).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueElem(PolyModP);

impl ResidueElem {
    pub fn rep(&self) -> &PolyModP {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for ResidueElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl ResidueRing {
    /// Build the ring for distinct primes p, q: factor x^(q-1)+...+x+1 over
    /// Z_p and pick the lexicographically least monic irreducible factor
    /// (coefficient vectors compared from the constant term up) as psi.
    pub fn build(p: u64, q: u64) -> Result<ResidueRing, PolyError> {
        if !num::is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        if !num::is_prime(q) {
            return Err(PolyError::NotPrime(q));
        }
        if p == q {
            return Err(PolyError::EqualPrimes(p));
        }
        let u = num::multiplicative_order(p, q) as usize;
        let phi = cyclotomic_quotient(p, q);
        let factors = factor_monic(&phi);
        assert_eq!(
            factors.len(),
            (q as usize - 1) / u,
            "factor count must be (q-1)/u"
        );
        for f in &factors {
            assert_eq!(f.degree(), Some(u), "every irreducible factor has degree u");
        }
        let psi = factors.into_iter().min().expect("q >= 2 gives a factor");
        let ring = ResidueRing { p, q, psi, u };
        ring.verify_invariants();
        Ok(ring)
    }

    /// Same ring with an explicitly chosen irreducible factor of
    /// x^(q-1)+...+x+1; used to test that constructions do not depend on the
    /// factor choice.
    pub fn with_psi(p: u64, q: u64, psi: PolyModP) -> Result<ResidueRing, PolyError> {
        if !num::is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        if !num::is_prime(q) {
            return Err(PolyError::NotPrime(q));
        }
        if p == q {
            return Err(PolyError::EqualPrimes(p));
        }
        if psi.modulus() != p {
            return Err(PolyError::MixedModuli(psi.modulus(), p));
        }
        let u = num::multiplicative_order(p, q) as usize;
        assert!(
            psi.is_monic() && psi.degree() == Some(u),
            "psi must be monic of degree u"
        );
        assert!(
            psi.divides(&cyclotomic_quotient(p, q)),
            "psi must divide x^(q-1)+...+x+1"
        );
        let ring = ResidueRing { p, q, psi, u };
        ring.verify_invariants();
        Ok(ring)
    }

    fn verify_invariants(&self) {
        assert!(is_irreducible(&self.psi), "psi must be irreducible");
        assert_eq!(self.psi.degree(), Some(self.u));
        // x - 1 must be invertible, i.e. psi(1) != 0
        assert_ne!(self.psi.eval(1), 0, "psi(1) must be nonzero");
        // the residue of x has multiplicative order exactly q
        let x = self.reduce(&PolyModP::x(self.p));
        let one = self.one();
        let mut pow = x.clone();
        for k in 1..self.q {
            assert_ne!(pow, one, "x^{k} = 1 before exponent q");
            pow = self.mul(&pow, &x);
        }
        assert_eq!(pow, one, "x^q must equal 1");
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// deg(psi) = multiplicative order of p modulo q.
    pub fn u(&self) -> usize {
        self.u
    }

    pub fn psi(&self) -> &PolyModP {
        &self.psi
    }

    /// p^u, the number of ring elements.
    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.u as u32)
    }

    pub fn reduce(&self, poly: &PolyModP) -> ResidueElem {
        ResidueElem(poly.divmod(&self.psi).1)
    }

    pub fn zero(&self) -> ResidueElem {
        ResidueElem(PolyModP::zero(self.p))
    }

    pub fn one(&self) -> ResidueElem {
        ResidueElem(PolyModP::constant(self.p, 1))
    }

    pub fn x(&self) -> ResidueElem {
        self.reduce(&PolyModP::x(self.p))
    }

    pub fn add(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        ResidueElem(a.0.add(&b.0))
    }

    pub fn sub(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        ResidueElem(a.0.sub(&b.0))
    }

    pub fn mul(&self, a: &ResidueElem, b: &ResidueElem) -> ResidueElem {
        self.reduce(&a.0.mul(&b.0))
    }

    /// Field inverse via extended Euclid.
    pub fn inv(&self, a: &ResidueElem) -> Result<ResidueElem, PolyError> {
        if a.is_zero() {
            return Err(PolyError::ZeroInverse);
        }
        let (g, s, _) = PolyModP::egcd(&a.0, &self.psi);
        let c = g
            .degree()
            .filter(|&d| d == 0)
            .map(|_| g.coeff(0))
            .expect("gcd with an irreducible modulus is a unit");
        let scale = num::inv_mod(c, self.p).expect("nonzero scalar in a prime field");
        Ok(self.reduce(&s.mul_scalar(scale)))
    }

    /// x^n in the ring; the exponent only matters modulo q.
    pub fn x_pow(&self, n: u64) -> ResidueElem {
        let mut acc = self.one();
        let x = self.x();
        for _ in 0..(n % self.q) {
            acc = self.mul(&acc, &x);
        }
        acc
    }

    /// f(x^n), reduced.
    pub fn substitute_power(&self, f: &ResidueElem, n: u64) -> ResidueElem {
        let t = self.x_pow(n);
        // Horner on the representative's coefficients
        let mut acc = self.zero();
        for &c in f.0.coeffs().iter().rev() {
            acc = self.mul(&acc, &t);
            acc = self.add(&acc, &ResidueElem(PolyModP::constant(self.p, c)));
        }
        acc
    }

    /// All p^u elements, ordered by base-p value of the coefficient vector
    /// (constant term least significant). This is the canonical element order
    /// used everywhere downstream.
    pub fn elements(&self) -> Vec<ResidueElem> {
        (0..self.size()).map(|i| self.from_index(i)).collect()
    }

    pub fn from_index(&self, mut idx: usize) -> ResidueElem {
        let mut coeffs = Vec::with_capacity(self.u);
        for _ in 0..self.u {
            coeffs.push((idx % self.p as usize) as u64);
            idx /= self.p as usize;
        }
        ResidueElem(PolyModP::new(self.p, coeffs))
    }

    pub fn index_of(&self, e: &ResidueElem) -> usize {
        let mut idx = 0usize;
        for (k, &c) in e.0.coeffs().iter().enumerate() {
            idx += c as usize * (self.p as usize).pow(k as u32);
        }
        idx
    }
}
