//! Multidegrees of weighted-multigraded ideals.
//!
//! Main path: K-polynomial of the initial ideal, substitute t_v -> 1 - w_v
//! (w_v the weight linear form of variable v), and take the lowest nonzero
//! homogeneous component; its degree equals the codimension.
//!
//! Oracle path (tests, monomial ideals only): additivity over top-dimensional
//! coordinate components, with multiplicities from localized standard
//! monomial counts. The two paths are independent.

use super::hilbert::{k_poly_coarse, minimalize, vanishing_order_at_one, KValue};
use super::ideal::Ideal;
use super::{Mono, MonomialOrder, Poly, PolyRing};
use crate::alpha::alpha_ring;
use crate::error::{Error, Result};
use crate::Rat;

use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone)]
struct AlphaTrunc {
    ring: Arc<PolyRing>,
    /// 1 - w_v for each base-ring variable, as alpha polynomials
    subs: Arc<Vec<Poly>>,
    maxdeg: u32,
    poly: Poly,
}

impl AlphaTrunc {
    fn truncate(&self, p: Poly) -> Poly {
        Poly {
            terms: p
                .terms
                .into_iter()
                .filter(|(m, _)| m.deg() <= self.maxdeg)
                .collect(),
        }
    }
}

impl KValue for AlphaTrunc {
    fn one(&self) -> Self {
        AlphaTrunc { poly: Poly::one(&self.ring), ..self.clone() }
    }
    fn sub(&self, other: &Self) -> Self {
        AlphaTrunc { poly: self.poly.sub(&self.ring, &other.poly), ..self.clone() }
    }
    fn mul_tm(&self, m: &Mono) -> Self {
        let mut acc = self.poly.clone();
        for (v, &e) in m.exps.iter().enumerate() {
            for _ in 0..e {
                acc = self.truncate(acc.mul(&self.ring, &self.subs[v]));
                if acc.is_zero() {
                    break;
                }
            }
        }
        AlphaTrunc { poly: acc, ..self.clone() }
    }
    fn zero_value(&self) -> Self {
        AlphaTrunc { poly: Poly::zero(), ..self.clone() }
    }
}

/// Weight linear form of a base-ring variable, as an alpha polynomial.
pub fn weight_form(aring: &PolyRing, w: &[i64]) -> Poly {
    let terms = w
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (Mono::var(aring.nvars(), j), Rat::from_integer(c.into())))
        .collect();
    Poly::from_terms(aring, terms)
}

/// Product of the weights of all ring variables (the multidegree of the
/// origin), as an alpha polynomial.
pub fn weight_product(ring: &PolyRing) -> Poly {
    let aring = alpha_ring(ring.alpha_rank);
    let mut acc = Poly::one(&aring);
    for w in &ring.weights {
        acc = acc.mul(&aring, &weight_form(&aring, w));
    }
    acc
}

fn check_weights(ring: &PolyRing) -> Result<()> {
    if ring.weights.len() != ring.nvars() {
        return Err(Error::ZeroWeight("ring carries no weight data".into()));
    }
    for (i, w) in ring.weights.iter().enumerate() {
        if w.iter().all(|&c| c == 0) {
            return Err(Error::ZeroWeight(ring.vars[i].clone()));
        }
    }
    Ok(())
}

/// Multidegree of an ideal in a weighted ring, in the alpha variables.
pub fn multidegree(ideal: &Ideal) -> Result<Poly> {
    check_weights(&ideal.ring)?;
    let init = ideal.initial_ideal(MonomialOrder::DegRevLex);
    let monos: Vec<Mono> = init.gens.iter().map(|g| g.leading().unwrap().0.clone()).collect();
    multidegree_of_monomial_ideal(&ideal.ring, &monos)
}

/// Multidegree of a monomial ideal given by its generators.
pub fn multidegree_of_monomial_ideal(ring: &PolyRing, monos: &[Mono]) -> Result<Poly> {
    check_weights(ring)?;
    let gens = minimalize(monos);
    let codim = vanishing_order_at_one(&k_poly_coarse(&gens)) as u32;
    let aring = Arc::new(alpha_ring(ring.alpha_rank));
    let subs: Vec<Poly> = ring
        .weights
        .iter()
        .map(|w| Poly::one(&aring).sub(&aring, &weight_form(&aring, w)))
        .collect();
    let seed = AlphaTrunc {
        ring: aring.clone(),
        subs: Arc::new(subs),
        maxdeg: codim,
        poly: Poly::zero(),
    };
    let mut memo = HashMap::new();
    let val = k_recurse_pub(gens, &seed, &mut memo);
    // everything below the codimension must cancel
    for d in 0..codim {
        if !val.poly.degree_component(d).is_zero() {
            return Err(Error::RingMismatch(format!(
                "multidegree: unexpected nonzero component in degree {d}"
            )));
        }
    }
    Ok(val.poly.degree_component(codim))
}

// re-export the private recursion from hilbert via a local shim
fn k_recurse_pub<V: KValue>(gens: Vec<Mono>, seed: &V, memo: &mut HashMap<Vec<Mono>, V>) -> V {
    // identical splitting recursion as hilbert::k_recurse
    if gens.is_empty() {
        return seed.one();
    }
    if gens.len() == 1 && gens[0].is_one() {
        return seed.zero_value();
    }
    if gens.len() == 1 {
        return seed.one().sub(&seed.one().mul_tm(&gens[0]));
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let mut rest = gens.clone();
    let m = rest.pop().unwrap();
    let colon = minimalize(
        &rest
            .iter()
            .map(|g| g.gcd(&m).quotient_into(g))
            .collect::<Vec<_>>(),
    );
    let a = k_recurse_pub(rest, seed, memo);
    let b = k_recurse_pub(colon, seed, memo);
    let v = a.sub(&b.mul_tm(&m));
    memo.insert(gens, v.clone());
    v
}

/// Independent oracle for monomial ideals: sum over top-dimensional
/// coordinate components (minimal covers of the generator supports of
/// minimal size) of multiplicity times the product of the covered weights.
pub fn mdeg_monomial_oracle(ring: &PolyRing, monos: &[Mono]) -> Result<Poly> {
    check_weights(ring)?;
    let gens = minimalize(monos);
    let aring = alpha_ring(ring.alpha_rank);
    if gens.is_empty() {
        return Ok(Poly::one(&aring));
    }
    if gens.len() == 1 && gens[0].is_one() {
        return Err(Error::RingMismatch("unit ideal has no multidegree".into()));
    }
    let supports: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            g.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut covers: Vec<Vec<usize>> = Vec::new();
    enumerate_minimal_covers(&supports, &mut Vec::new(), 0, &mut covers);
    let codim = covers.iter().map(|c| c.len()).min().unwrap();
    let mut total = Poly::zero();
    for cover in covers.iter().filter(|c| c.len() == codim) {
        let mult = local_multiplicity(&gens, cover);
        let mut term = Poly::constant(&aring, Rat::from_integer(mult.into()));
        for &v in cover {
            term = term.mul(&aring, &weight_form(&aring, &ring.weights[v]));
        }
        total = total.add(&aring, &term);
    }
    Ok(total)
}

/// All minimal hitting sets of the support hypergraph.
fn enumerate_minimal_covers(
    supports: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<Vec<usize>>,
) {
    // first uncovered support
    let uncovered = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)));
    match uncovered {
        None => {
            // minimality: every chosen var must be necessary
            let minimal = chosen.iter().all(|&v| {
                supports.iter().any(|s| {
                    s.contains(&v) && !s.iter().any(|u| *u != v && chosen.contains(u))
                })
            });
            if minimal {
                let mut c = chosen.clone();
                c.sort_unstable();
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        Some(s) => {
            for &v in s {
                if v >= from || !chosen.is_empty() {
                    chosen.push(v);
                    enumerate_minimal_covers(supports, chosen, from, out);
                    chosen.pop();
                }
            }
        }
    }
}

/// Length of the localization at the coordinate prime of `cover`: count
/// standard monomials of the ideal restricted to the cover variables.
fn local_multiplicity(gens: &[Mono], cover: &[usize]) -> usize {
    let restricted: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| cover.iter().map(|&v| g.exps[v]).collect())
        .collect();
    let k = cover.len();
    let bound: Vec<u16> = (0..k)
        .map(|i| restricted.iter().map(|g| g[i]).max().unwrap_or(0))
        .collect();
    let mut count = 0usize;
    let mut exps = vec![0u16; k];
    loop {
        let divisible = restricted
            .iter()
            .any(|g| g.iter().zip(&exps).all(|(a, b)| a <= b));
        if !divisible {
            count += 1;
        }
        // odometer
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            if exps[i] < bound[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ideal::ideal_from_strings;

    fn weighted_ring(vars: &[&str], weights: &[&[i64]], rank: usize) -> PolyRing {
        PolyRing::with_weights(
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
            weights.iter().map(|w| w.to_vec()).collect(),
            rank,
        )
    }

    #[test]
    fn point_is_product_of_weights() {
        let r = weighted_ring(&["x", "y"], &[&[1, 0], &[0, 1]], 2);
        let i = ideal_from_strings(&r, &["x", "y"]).unwrap();
        let m = multidegree(&i).unwrap();
        let aring = alpha_ring(2);
        assert_eq!(m.to_string_in(&aring), "a1*a2");
    }

    #[test]
    fn zero_ideal_is_one() {
        let r = weighted_ring(&["x"], &[&[1]], 1);
        let i = Ideal::zero(r);
        let m = multidegree(&i).unwrap();
        assert_eq!(m.to_string_in(&alpha_ring(1)), "1");
    }

    #[test]
    fn hypersurface_additivity() {
        // (xy): union of two hyperplanes, mdeg = w_x + w_y
        let r = weighted_ring(&["x", "y"], &[&[1, 0], &[0, 1]], 2);
        let i = ideal_from_strings(&r, &["x*y"]).unwrap();
        let m = multidegree(&i).unwrap();
        assert_eq!(m.to_string_in(&alpha_ring(2)), "a1 + a2");
        let oracle = mdeg_monomial_oracle(&r, &[Mono::new(vec![1, 1])]).unwrap();
        assert_eq!(m, oracle);
    }

    #[test]
    fn oracle_agrees_with_main_path() {
        let r = weighted_ring(
            &["x", "y", "z"],
            &[&[1, 0], &[1, 1], &[0, 1]],
            2,
        );
        let cases: Vec<Vec<Vec<u16>>> = vec![
            vec![vec![2, 0, 0], vec![0, 1, 1]],
            vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
            vec![vec![3, 0, 0]],
            vec![vec![1, 0, 0], vec![0, 2, 0]],
        ];
        for gens in cases {
            let monos: Vec<Mono> = gens.into_iter().map(Mono::new).collect();
            let main = multidegree_of_monomial_ideal(&r, &monos).unwrap();
            let oracle = mdeg_monomial_oracle(&r, &monos).unwrap();
            assert_eq!(main, oracle);
        }
    }

    #[test]
    fn zero_weight_rejected() {
        let r = weighted_ring(&["x", "y"], &[&[1, 0], &[0, 0]], 2);
        let i = ideal_from_strings(&r, &["x"]).unwrap();
        assert!(multidegree(&i).is_err());
    }

    #[test]
    fn hyperplane_and_containment_rules() {
        let aring = alpha_ring(2);
        // containment: M = (x) + M'' has mdeg = w_x * mdeg(M'' in P/(x))
        let r = weighted_ring(&["x", "y", "z"], &[&[1, 0], &[0, 1], &[1, 1]], 2);
        let m = multidegree_of_monomial_ideal(
            &r,
            &[Mono::new(vec![1, 0, 0]), Mono::new(vec![0, 1, 1])],
        )
        .unwrap();
        let small = weighted_ring(&["y", "z"], &[&[0, 1], &[1, 1]], 2);
        let m2 = multidegree_of_monomial_ideal(&small, &[Mono::new(vec![1, 1])]).unwrap();
        let wx = weight_form(&aring, &[1, 0]);
        assert_eq!(m, wx.mul(&aring, &m2));
        // section: a variable absent from the generators does not change mdeg
        let r3 = weighted_ring(&["x", "y"], &[&[1, 0], &[0, 1]], 2);
        let m3 = multidegree_of_monomial_ideal(&r3, &[Mono::new(vec![2, 0])]).unwrap();
        let r1 = weighted_ring(&["x"], &[&[1, 0]], 2);
        let m1 = multidegree_of_monomial_ideal(&r1, &[Mono::new(vec![2])]).unwrap();
        assert_eq!(m3, m1);
    }
}
