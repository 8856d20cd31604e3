//! Sparse multivariate polynomials with exact rational coefficients,
//! monomial orders, and a per-variable multigrading by integer weight
//! vectors (coordinates on the simple roots).

pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod interp;
pub mod mdeg;
pub mod parse;

use crate::error::{Error, Result};
use crate::Rat;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Monomial order tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic, first variable largest.
    DegRevLex,
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Elimination order: the first `split` variables form the front block.
    /// Compares by front-block degree, then degrevlex within the front block,
    /// then degrevlex on the rest.
    Block { split: usize },
}

/// Exponent vector with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub exps: Vec<u16>,
    deg: u32,
}

impl Mono {
    pub fn new(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Mono { exps, deg }
    }

    pub fn one(nvars: usize) -> Self {
        Mono { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Mono { exps, deg: 1 }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Mono { exps, deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Mono) -> Mono {
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Mono { exps, deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A polynomial ring: named variables, a monomial order, and an optional
/// weight vector per variable (coordinates on alpha_1..alpha_rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub weights: Vec<Vec<i64>>,
    pub alpha_rank: usize,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { vars, order, weights: Vec::new(), alpha_rank: 0 }
    }

    pub fn with_weights(
        vars: Vec<String>,
        order: MonomialOrder,
        weights: Vec<Vec<i64>>,
        alpha_rank: usize,
    ) -> Self {
        assert_eq!(vars.len(), weights.len());
        assert!(weights.iter().all(|w| w.len() == alpha_rank));
        PolyRing { vars, order, weights, alpha_rank }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn reordered(&self, order: MonomialOrder) -> PolyRing {
        let mut r = self.clone();
        r.order = order;
        r
    }

    fn degrevlex(a: &[u16], b: &[u16], da: u32, db: u32) -> Ordering {
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                // smaller exponent in the last differing slot wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// Compare monomials under this ring's order; `Greater` means `a` is the
    /// larger monomial.
    pub fn cmp_mono(&self, a: &Mono, b: &Mono) -> Ordering {
        match self.order {
            MonomialOrder::DegRevLex => Self::degrevlex(&a.exps, &b.exps, a.deg, b.deg),
            MonomialOrder::Lex => {
                for i in 0..a.exps.len() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split } => {
                let da: u32 = a.exps[..split].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..split].iter().map(|&e| e as u32).sum();
                match Self::degrevlex(&a.exps[..split], &b.exps[..split], da, db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                Self::degrevlex(&a.exps[split..], &b.exps[split..], a.deg - da, b.deg - db)
            }
        }
    }

    /// Multigraded weight of a monomial, as a vector in Z^alpha_rank.
    pub fn mono_weight(&self, m: &Mono) -> Vec<i64> {
        let mut w = vec![0i64; self.alpha_rank];
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                for (j, c) in self.weights[i].iter().enumerate() {
                    w[j] += c * e as i64;
                }
            }
        }
        w
    }
}

/// Sparse polynomial: term list sorted strictly descending under the ring's
/// monomial order, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn one(ring: &PolyRing) -> Self {
        Poly::constant(ring, Rat::one())
    }

    pub fn constant(ring: &PolyRing, c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(ring.nvars()), c)] }
        }
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Poly { terms: vec![(Mono::var(ring.nvars(), i), Rat::one())] }
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from an unsorted term list, combining duplicates.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<(Mono, Rat)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        let mut out: Vec<(Mono, Rat)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((m, c));
            }
        }
        Poly { terms: out }
    }

    pub fn leading(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg()).max().unwrap_or(0)
    }

    pub fn add(&self, ring: &PolyRing, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.cmp_mono(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, ring: &PolyRing, other: &Poly) -> Poly {
        self.add(ring, &other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect() }
    }

    pub fn mul(&self, ring: &PolyRing, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: std::collections::HashMap<Mono, Rat> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                let e = acc.entry(m).or_insert_with(Rat::zero);
                *e += c;
            }
        }
        Poly::from_terms(ring, acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn pow(&self, ring: &PolyRing, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(ring, &base);
            }
        }
        acc
    }

    pub fn monic(&self, _ring: &PolyRing) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Re-sort the term list; needed after the ring's order changed or after
    /// a variable re-mapping.
    pub fn resort(&self, ring: &PolyRing) -> Poly {
        Poly::from_terms(ring, self.terms.clone())
    }

    /// Map this polynomial into another ring: old variable `i` becomes new
    /// variable `map[i]`.
    pub fn map_vars(&self, new_ring: &PolyRing, map: &[usize]) -> Poly {
        let n = new_ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u16; n];
                for (i, &e) in m.exps.iter().enumerate() {
                    if e > 0 {
                        exps[map[i]] += e;
                    }
                }
                (Mono::new(exps), c.clone())
            })
            .collect();
        Poly::from_terms(new_ring, terms)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// If every term has the same multigraded weight, return it.
    pub fn homogeneous_weight(&self, ring: &PolyRing) -> Option<Vec<i64>> {
        let mut it = self.terms.iter();
        let w = ring.mono_weight(&it.next()?.0);
        for (m, _) in it {
            if ring.mono_weight(m) != w {
                return None;
            }
        }
        Some(w)
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, ring: &PolyRing, var: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps[var] > 0)
            .map(|(m, c)| {
                let mut exps = m.exps.clone();
                let e = exps[var];
                exps[var] -= 1;
                (Mono::new(exps), c * Rat::from_integer(crate::Int::from(e)))
            })
            .collect();
        Poly::from_terms(ring, terms)
    }

    /// Homogeneous component of the given total degree.
    pub fn degree_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.deg() == d)
                .cloned()
                .collect(),
        }
    }

    /// Exact division; returns None when `divisor` does not divide `self`.
    pub fn try_div_exact(&self, ring: &PolyRing, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.leading() {
            if !dm.divides(m) {
                return None;
            }
            let qm = dm.quotient_into(m);
            let qc = c / dc;
            rem = rem.sub(ring, &divisor.mul_term(&qm, &qc));
            q.push((qm, qc));
        }
        Some(Poly::from_terms(ring, q))
    }

    pub fn display<'a>(&'a self, ring: &'a PolyRing) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }

    pub fn to_string_in(&self, ring: &PolyRing) -> String {
        format!("{}", self.display(ring))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    ring: &'a PolyRing,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(format!("{}", abs));
            }
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 1 {
                    parts.push(self.ring.vars[i].clone());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.ring.vars[i], e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Convenience: parse a polynomial in this ring (see `parse`).
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<Poly> {
    parse::parse(ring, text)
}

/// Errors when mixing polynomials from different rings.
pub fn check_same_ring(a: &PolyRing, b: &PolyRing) -> Result<()> {
    if a.vars != b.vars {
        return Err(Error::RingMismatch(format!(
            "[{}] vs [{}]",
            a.vars.join(","),
            b.vars.join(",")
        )));
    }
    Ok(())
}
