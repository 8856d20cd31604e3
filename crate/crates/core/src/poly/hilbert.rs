//! K-polynomials of monomial ideals and Hilbert series/functions.
//!
//! The numerator N satisfies HS(P/M) = N / prod_v (1 - t_v). It is computed
//! by the splitting recursion N(M + (m)) = N(M) - t^m * N(M : m) with
//! memoization, either fully multigraded (one t per variable), coarsely
//! (single t), or directly as a truncated polynomial in the alpha weights
//! (used for multidegrees).

use super::ideal::Ideal;
use super::{Mono, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::{Int, Rat};
use num::traits::{One, Zero};
use std::collections::HashMap;

/// Remove generators divisible by another generator; sort canonically.
pub fn minimalize(gens: &[Mono]) -> Vec<Mono> {
    let mut out: Vec<Mono> = Vec::new();
    let mut sorted: Vec<&Mono> = gens.iter().collect();
    sorted.sort_by_key(|m| (m.deg(), m.exps.clone()));
    for m in sorted {
        if m.is_one() {
            return vec![Mono::one(m.exps.len())];
        }
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

fn colon_mono(gens: &[Mono], m: &Mono) -> Vec<Mono> {
    minimalize(
        &gens
            .iter()
            .map(|g| g.gcd(m).quotient_into(g))
            .collect::<Vec<_>>(),
    )
}

/// Values the K-polynomial recursion can accumulate into.
pub trait KValue: Clone {
    fn one(&self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    /// self * t^m
    fn mul_tm(&self, m: &Mono) -> Self;
    fn zero_value(&self) -> Self;
}

fn k_recurse<V: KValue>(
    gens: Vec<Mono>,
    seed: &V,
    memo: &mut HashMap<Vec<Mono>, V>,
) -> V {
    if gens.is_empty() {
        return seed.one();
    }
    if gens.len() == 1 && gens[0].is_one() {
        return seed.zero_value();
    }
    if gens.len() == 1 {
        // N = 1 - t^m
        return seed.one().sub(&seed.one().mul_tm(&gens[0]));
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // split on the largest generator
    let mut rest = gens.clone();
    let m = rest.pop().unwrap();
    let colon = colon_mono(&rest, &m);
    let a = k_recurse(rest, seed, memo);
    let b = k_recurse(colon, seed, memo);
    let v = a.sub(&b.mul_tm(&m));
    memo.insert(gens, v.clone());
    v
}

/// Coarse value: univariate polynomial in t as coefficient vector.
#[derive(Clone, Debug)]
struct UniValue(Vec<Int>);

impl KValue for UniValue {
    fn one(&self) -> Self {
        UniValue(vec![Int::one()])
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Int::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        while out.last().map(|c| c.is_zero()).unwrap_or(false) {
            out.pop();
        }
        UniValue(out)
    }
    fn mul_tm(&self, m: &Mono) -> Self {
        let d = m.deg() as usize;
        if self.0.is_empty() {
            return self.clone();
        }
        let mut out = vec![Int::zero(); self.0.len() + d];
        for (i, c) in self.0.iter().enumerate() {
            out[i + d] = c.clone();
        }
        UniValue(out)
    }
    fn zero_value(&self) -> Self {
        UniValue(Vec::new())
    }
}

/// Univariate K-polynomial (coefficients of t^0, t^1, ...) of a monomial ideal.
pub fn k_poly_coarse(gens: &[Mono]) -> Vec<Int> {
    let gens = minimalize(gens);
    let seed = UniValue(Vec::new());
    let mut memo = HashMap::new();
    k_recurse(gens, &seed, &mut memo).0
}

/// Multigraded value: polynomial in one formal variable per ring variable.
#[derive(Clone)]
struct MultiValue {
    ring: PolyRing,
    poly: Poly,
}

impl KValue for MultiValue {
    fn one(&self) -> Self {
        MultiValue { ring: self.ring.clone(), poly: Poly::one(&self.ring) }
    }
    fn sub(&self, other: &Self) -> Self {
        MultiValue { ring: self.ring.clone(), poly: self.poly.sub(&self.ring, &other.poly) }
    }
    fn mul_tm(&self, m: &Mono) -> Self {
        MultiValue { ring: self.ring.clone(), poly: self.poly.mul_term(m, &Rat::one()) }
    }
    fn zero_value(&self) -> Self {
        MultiValue { ring: self.ring.clone(), poly: Poly::zero() }
    }
}

/// The multigraded K-polynomial numerator, expressed in the same ring (each
/// ring variable read as its own formal series variable t_v).
pub fn k_polynomial(ring: &PolyRing, gens: &[Mono]) -> Poly {
    let gens = minimalize(gens);
    let seed = MultiValue { ring: ring.clone(), poly: Poly::zero() };
    let mut memo = HashMap::new();
    k_recurse(gens, &seed, &mut memo).poly
}

/// Multiplicity of the root t = 1 of a univariate integer polynomial.
pub fn vanishing_order_at_one(k: &[Int]) -> usize {
    let mut coeffs: Vec<Int> = k.to_vec();
    let mut ord = 0;
    loop {
        if coeffs.is_empty() {
            // the zero polynomial: treat as fully vanishing (unit ideal)
            return ord;
        }
        let value: Int = coeffs.iter().sum();
        if !value.is_zero() {
            return ord;
        }
        // divide by (1 - t): if k = (1-t) q then q_i = sum_{j<=i} k_j
        let mut q = Vec::with_capacity(coeffs.len().saturating_sub(1));
        let mut acc = Int::zero();
        for c in &coeffs[..coeffs.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        coeffs = q;
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        ord += 1;
    }
}

/// Graded dimensions of P/I for a homogeneous ideal I, per total degree.
pub fn hilbert_values(ideal: &Ideal, degrees: &[usize]) -> Result<Vec<(usize, Int)>> {
    for g in &ideal.gens {
        let degs: Vec<u32> = g.terms.iter().map(|(m, _)| m.deg()).collect();
        if !degs.windows(2).all(|w| w[0] == w[1]) {
            return Err(Error::RingMismatch(
                "hilbert_values requires a degree-homogeneous ideal".into(),
            ));
        }
    }
    let init = ideal.initial_ideal(ideal.ring.order);
    let monos: Vec<Mono> = init.gens.iter().map(|g| g.leading().unwrap().0.clone()).collect();
    let k = k_poly_coarse(&monos);
    let n = ideal.ring.nvars();
    let top = degrees.iter().copied().max().unwrap_or(0);
    let series = series_from_k(&k, n, top);
    Ok(degrees.iter().map(|&d| (d, series[d].clone())).collect())
}

/// Expand K(t)/(1-t)^n as a power series up to degree `top` (inclusive).
pub fn series_from_k(k: &[Int], nvars: usize, top: usize) -> Vec<Int> {
    let mut out = vec![Int::zero(); top + 1];
    for d in 0..=top {
        let mut acc = Int::zero();
        for (j, c) in k.iter().enumerate() {
            if j > d {
                break;
            }
            acc += c * binomial(nvars - 1 + d - j, nvars - 1);
        }
        out[d] = acc;
    }
    out
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..k {
        num *= Int::from(n - i);
        den *= Int::from(i + 1);
    }
    num / den
}

/// All monomials of total degree `d` not divisible by any generator.
pub fn standard_monomials(gens: &[Mono], nvars: usize, d: u32) -> Vec<Mono> {
    let gens = minimalize(gens);
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(
        gens: &[Mono],
        exps: &mut Vec<u16>,
        pos: usize,
        left: u32,
        out: &mut Vec<Mono>,
    ) {
        if pos == exps.len() {
            if left == 0 {
                let m = Mono::new(exps.clone());
                if !gens.iter().any(|g| g.divides(&m)) {
                    out.push(m);
                }
            }
            return;
        }
        for e in 0..=left {
            exps[pos] = e as u16;
            // prune: partial divisibility by a generator supported on a prefix
            rec(gens, exps, pos + 1, left - e, out);
        }
        exps[pos] = 0;
    }
    rec(&gens, &mut exps, 0, d, &mut out);
    out
}

/// Dimensions of graded pieces of P/M for a monomial ideal, by brute-force
/// enumeration; used as an independent oracle for the K-polynomial.
pub fn graded_dims_by_enumeration(gens: &[Mono], nvars: usize, top: u32) -> Vec<usize> {
    (0..=top)
        .map(|d| standard_monomials(gens, nvars, d).len())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn t_ring(n: usize) -> PolyRing {
        PolyRing::new(
            (0..n).map(|i| format!("t{}", i + 1)).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    #[test]
    fn k_poly_single_var() {
        // M = (x) in one variable: N = 1 - t
        let r = t_ring(1);
        let k = k_polynomial(&r, &[Mono::var(1, 0)]);
        assert_eq!(k.to_string_in(&r), "-t1 + 1");
    }

    #[test]
    fn k_poly_xy() {
        let r = t_ring(2);
        let k = k_polynomial(&r, &[Mono::new(vec![1, 1])]);
        assert_eq!(k.to_string_in(&r), "-t1*t2 + 1");
    }

    #[test]
    fn k_poly_x_y() {
        // M = (x, y): N = (1 - t_x)(1 - t_y)
        let r = t_ring(2);
        let k = k_polynomial(&r, &[Mono::var(2, 0), Mono::var(2, 1)]);
        assert_eq!(k.to_string_in(&r), "t1*t2 - t1 - t2 + 1");
    }

    #[test]
    fn series_matches_enumeration() {
        // random-ish monomial ideals in <= 4 variables, degrees <= 6
        let cases: Vec<(usize, Vec<Vec<u16>>)> = vec![
            (2, vec![vec![2, 0], vec![1, 1]]),
            (3, vec![vec![1, 1, 0], vec![0, 2, 1]]),
            (4, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![2, 0, 0, 0]]),
            (3, vec![vec![3, 0, 0]]),
        ];
        for (n, gens) in cases {
            let monos: Vec<Mono> = gens.into_iter().map(Mono::new).collect();
            let k = k_poly_coarse(&monos);
            let series = series_from_k(&k, n, 6);
            let brute = graded_dims_by_enumeration(&monos, n, 6);
            for d in 0..=6 {
                assert_eq!(series[d], Int::from(brute[d]), "degree {d}");
            }
        }
    }

    #[test]
    fn vanishing_order() {
        // (1-t)^2 = 1 - 2t + t^2
        let k = vec![Int::from(1), Int::from(-2), Int::from(1)];
        assert_eq!(vanishing_order_at_one(&k), 2);
        let k2 = vec![Int::from(1)];
        assert_eq!(vanishing_order_at_one(&k2), 0);
    }
}
