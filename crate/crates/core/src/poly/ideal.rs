//! Ideals with cached reduced Groebner bases and the operations the orbital
//! and Pluecker pipelines are built from: quotient, saturation, elimination,
//! homogenization, initial ideals.

use super::groebner::{buchberger, normal_form};
use super::{Mono, MonomialOrder, Poly, PolyRing};
use crate::error::Result;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

#[derive(Debug)]
pub struct Ideal {
    pub ring: PolyRing,
    pub gens: Vec<Poly>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Poly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl Ideal {
    pub fn new(ring: PolyRing, gens: Vec<Poly>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, Vec::new())
    }

    /// Reduced Groebner basis under the ring's own order, cached.
    pub fn gb(&self) -> Arc<Vec<Poly>> {
        self.gb_for(self.ring.order)
    }

    /// Reduced Groebner basis under an arbitrary order, cached per order.
    pub fn gb_for(&self, order: MonomialOrder) -> Arc<Vec<Poly>> {
        if let Some(b) = self.cache.lock().unwrap().get(&order) {
            return b.clone();
        }
        let ring = self.ring.reordered(order);
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.resort(&ring)).collect();
        let basis = Arc::new(buchberger(&ring, &gens));
        self.cache.lock().unwrap().insert(order, basis.clone());
        basis
    }

    pub fn seed_gb(&self, order: MonomialOrder, basis: Vec<Poly>) {
        self.cache.lock().unwrap().insert(order, Arc::new(basis));
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gb().is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        let gb = self.gb();
        gb.len() == 1 && gb[0].leading().map(|(m, _)| m.is_one()).unwrap_or(false)
    }

    /// Normal form against the cached basis (membership iff zero).
    pub fn normal_form(&self, f: &Poly) -> Poly {
        let gb = self.gb();
        if gb.is_empty() {
            return f.clone();
        }
        normal_form(&self.ring, f, &gb)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Two-way membership of generators.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(&g.resort(&other.ring)))
            && other.gens.iter().all(|g| self.contains(&g.resort(&self.ring)))
    }

    pub fn sum(&self, extra: &[Poly]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Extend the ring by tag variables placed in front (so a Block order can
    /// eliminate them) and return the extended ring plus the index shift for
    /// old variables.
    fn tagged_ring(&self, tags: &[&str]) -> (PolyRing, Vec<usize>) {
        let mut vars: Vec<String> = tags.iter().map(|s| s.to_string()).collect();
        vars.extend(self.ring.vars.iter().cloned());
        let ring = PolyRing::new(vars, MonomialOrder::Block { split: tags.len() });
        let map: Vec<usize> = (0..self.ring.nvars()).map(|i| i + tags.len()).collect();
        (ring, map)
    }

    /// Generators of the contraction to the subring on the variables *not*
    /// listed in `drop`, as an ideal of that subring.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        // build a reordered ring with dropped variables first
        let mut perm: Vec<usize> = Vec::with_capacity(self.ring.nvars());
        perm.extend(drop.iter().cloned());
        let kept: Vec<usize> =
            (0..self.ring.nvars()).filter(|i| !drop.contains(i)).collect();
        perm.extend(kept.iter().cloned());
        // old index -> new position
        let mut map = vec![0usize; self.ring.nvars()];
        for (newpos, &old) in perm.iter().enumerate() {
            map[old] = newpos;
        }
        let vars: Vec<String> = perm.iter().map(|&i| self.ring.vars[i].clone()).collect();
        let big = PolyRing::new(vars, MonomialOrder::Block { split: drop.len() });
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.map_vars(&big, &map)).collect();
        let gb = buchberger(&big, &gens);
        // contract: keep basis elements free of the front block
        let sub_vars: Vec<String> = kept.iter().map(|&i| self.ring.vars[i].clone()).collect();
        let sub_weights: Vec<Vec<i64>> = if self.ring.weights.is_empty() {
            Vec::new()
        } else {
            kept.iter().map(|&i| self.ring.weights[i].clone()).collect()
        };
        let sub = if sub_weights.is_empty() {
            PolyRing::new(sub_vars, MonomialOrder::DegRevLex)
        } else {
            PolyRing::with_weights(
                sub_vars,
                MonomialOrder::DegRevLex,
                sub_weights,
                self.ring.alpha_rank,
            )
        };
        // new position in big ring -> index in subring (front block unused)
        let mut submap = vec![usize::MAX; big.nvars()];
        for (k, _) in kept.iter().enumerate() {
            submap[drop.len() + k] = k;
        }
        let mut out = Vec::new();
        for g in gb {
            let free = g
                .terms
                .iter()
                .all(|(m, _)| m.exps[..drop.len()].iter().all(|&e| e == 0));
            if free {
                out.push(g.map_vars(&sub, &submap_checked(&submap)));
            }
        }
        Ideal::new(sub, out)
    }

    /// Ideal quotient I : (f) by a single polynomial, via the tag-variable
    /// intersection: I cap (f) = (t*I + (1-t)*f) cap R, then divide by f.
    pub fn quotient_single(&self, f: &Poly) -> Ideal {
        if f.is_zero() {
            // I : (0) = (1)
            return Ideal::new(self.ring.clone(), vec![Poly::one(&self.ring)]);
        }
        let (big, map) = self.tagged_ring(&["__t"]);
        let t = Poly::var(&big, 0);
        let one_minus_t = Poly::one(&big).sub(&big, &t);
        let mut gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&big, &map).mul(&big, &t))
            .collect();
        gens.push(f.map_vars(&big, &map).mul(&big, &one_minus_t));
        let inter = Ideal::new(big, gens).eliminate(&[0]);
        // inter lives on self.ring's vars again; divide each generator by f
        let ring = inter.ring.clone();
        let out: Vec<Poly> = inter
            .gens
            .iter()
            .map(|g| {
                g.try_div_exact(&ring, &f.resort(&ring))
                    .expect("intersection generator not divisible by f")
            })
            .collect();
        Ideal::new(ring, out)
    }

    /// Intersection of two ideals in the same ring.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let (big, map) = self.tagged_ring(&["__t"]);
        let t = Poly::var(&big, 0);
        let one_minus_t = Poly::one(&big).sub(&big, &t);
        let mut gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&big, &map).mul(&big, &t))
            .collect();
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| g.map_vars(&big, &map).mul(&big, &one_minus_t)),
        );
        let mut out = Ideal::new(big, gens).eliminate(&[0]);
        out.ring.order = self.ring.order;
        out.ring.weights = self.ring.weights.clone();
        out.ring.alpha_rank = self.ring.alpha_rank;
        let gens = out.gens.iter().map(|g| g.resort(&out.ring)).collect();
        Ideal::new(out.ring, gens)
    }

    /// I : J computed per generator of J and intersected.
    pub fn quotient(&self, j_gens: &[Poly]) -> Ideal {
        let nonzero: Vec<&Poly> = j_gens.iter().filter(|f| !f.is_zero()).collect();
        if nonzero.is_empty() {
            return Ideal::new(self.ring.clone(), vec![Poly::one(&self.ring)]);
        }
        let mut acc: Option<Ideal> = None;
        for f in nonzero {
            let q = self.quotient_single(f);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap()
    }

    /// Saturation I : f^infinity via a Rabinowitsch tag.
    pub fn saturate_single(&self, f: &Poly) -> Ideal {
        if f.is_zero() {
            return Ideal::new(self.ring.clone(), vec![Poly::one(&self.ring)]);
        }
        let (big, map) = self.tagged_ring(&["__y"]);
        let y = Poly::var(&big, 0);
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.map_vars(&big, &map)).collect();
        let rel = Poly::one(&big).sub(&big, &y.mul(&big, &f.map_vars(&big, &map)));
        gens.push(rel);
        let mut out = Ideal::new(big, gens).eliminate(&[0]);
        out.ring.order = self.ring.order;
        out.ring.weights = self.ring.weights.clone();
        out.ring.alpha_rank = self.ring.alpha_rank;
        let gens = out.gens.iter().map(|g| g.resort(&out.ring)).collect();
        Ideal::new(out.ring, gens)
    }

    /// Saturation I : J^infinity = intersection over generators of J of the
    /// single-generator saturations.
    pub fn saturate(&self, j_gens: &[Poly]) -> Ideal {
        let nonzero: Vec<&Poly> = j_gens.iter().filter(|f| !f.is_zero()).collect();
        if nonzero.is_empty() {
            return Ideal::new(self.ring.clone(), vec![Poly::one(&self.ring)]);
        }
        let mut sats: Vec<Ideal> = Vec::new();
        for f in nonzero {
            let s = self.saturate_single(f);
            if !sats.iter().any(|t| t.equals(&s)) {
                sats.push(s);
            }
        }
        let mut acc = sats.remove(0);
        for s in sats {
            acc = acc.intersect(&s);
        }
        acc
    }

    /// Initial ideal: the monomial ideal of leading terms under `order`.
    pub fn initial_ideal(&self, order: MonomialOrder) -> Ideal {
        let gb = self.gb_for(order);
        let ring = self.ring.reordered(order);
        let gens = gb
            .iter()
            .map(|g| Poly::monomial(g.leading().unwrap().0.clone(), num::One::one()))
            .collect();
        Ideal::new(ring, gens)
    }

    /// Homogenize with a fresh variable (prepended, weight zero): compute a
    /// degrevlex basis first and homogenize each element.
    pub fn homogenize(&self, new_var: &str) -> Ideal {
        let gb = self.gb_for(MonomialOrder::DegRevLex);
        let mut vars = vec![new_var.to_string()];
        vars.extend(self.ring.vars.iter().cloned());
        let ring = if self.ring.weights.is_empty() {
            PolyRing::new(vars, MonomialOrder::DegRevLex)
        } else {
            let mut weights = vec![vec![0i64; self.ring.alpha_rank]];
            weights.extend(self.ring.weights.iter().cloned());
            PolyRing::with_weights(vars, MonomialOrder::DegRevLex, weights, self.ring.alpha_rank)
        };
        let gens = gb.iter().map(|g| homogenize_poly(&ring, g)).collect();
        Ideal::new(ring, gens)
    }

    /// Krull dimension of R/I from the univariate K-polynomial of the initial
    /// ideal: nvars minus the order of vanishing at t = 1.
    pub fn dimension(&self) -> usize {
        let init = self.initial_ideal(self.ring.order);
        let monos: Vec<Mono> =
            init.gens.iter().map(|g| g.leading().unwrap().0.clone()).collect();
        let k = super::hilbert::k_poly_coarse(&monos);
        let codim = super::hilbert::vanishing_order_at_one(&k);
        self.ring.nvars() - codim
    }

    pub fn codimension(&self) -> usize {
        self.ring.nvars() - self.dimension()
    }

    /// Pretty list of generator strings.
    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_in(&self.ring)).collect()
    }
}

fn submap_checked(map: &[usize]) -> Vec<usize> {
    map.iter().map(|&i| if i == usize::MAX { 0 } else { i }).collect()
}

/// Homogenize `g` (expressed in the un-extended ring) into `ring`, whose
/// variable 0 is the homogenization variable.
fn homogenize_poly(ring: &PolyRing, g: &Poly) -> Poly {
    let d = g.total_degree();
    let terms = g
        .terms
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u16; ring.nvars()];
            exps[0] = (d - m.deg()) as u16;
            exps[1..].copy_from_slice(&m.exps);
            (Mono::new(exps), c.clone())
        })
        .collect();
    Poly::from_terms(ring, terms)
}

/// Parse helper so tests and pipelines can construct ideals from strings.
pub fn ideal_from_strings(ring: &PolyRing, gens: &[&str]) -> Result<Ideal> {
    let polys = gens
        .iter()
        .map(|s| super::parse::parse(ring, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring.clone(), polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn quotient_ab_by_a_is_b() {
        let r = ring(&["a", "b"]);
        let i = ideal_from_strings(&r, &["a*b"]).unwrap();
        let q = i.quotient(&[parse_poly(&r, "a").unwrap()]);
        let expected = ideal_from_strings(&q.ring, &["b"]).unwrap();
        assert!(q.equals(&expected));
    }

    #[test]
    fn quotient_by_one_is_identity() {
        let r = ring(&["a", "b"]);
        let i = ideal_from_strings(&r, &["a^2 - b"]).unwrap();
        let q = i.quotient(&[Poly::one(&r)]);
        assert!(q.equals(&i));
    }

    #[test]
    fn saturate_a2b_by_a_is_b() {
        let r = ring(&["a", "b"]);
        let i = ideal_from_strings(&r, &["a^2*b"]).unwrap();
        let s = i.saturate(&[parse_poly(&r, "a").unwrap()]);
        let expected = ideal_from_strings(&s.ring, &["b"]).unwrap();
        assert!(s.equals(&expected));
    }

    #[test]
    fn saturate_by_var_outside_support() {
        let r = ring(&["a", "b", "c"]);
        let i = ideal_from_strings(&r, &["a*b"]).unwrap();
        let s = i.saturate(&[parse_poly(&r, "c").unwrap()]);
        assert!(s.equals(&i.clone()));
    }

    #[test]
    fn eliminate_examples() {
        // (x - y^2) eliminate x -> (0)
        let r = ring(&["x", "y"]);
        let i = ideal_from_strings(&r, &["x - y^2"]).unwrap();
        let e = i.eliminate(&[0]);
        assert!(e.gens.is_empty());
        // (u - a, v - a^2) eliminate a -> (v - u^2)
        let r2 = ring(&["a", "u", "v"]);
        let i2 = ideal_from_strings(&r2, &["u - a", "v - a^2"]).unwrap();
        let e2 = i2.eliminate(&[0]);
        let expected = ideal_from_strings(&e2.ring, &["v - u^2"]).unwrap();
        assert!(e2.equals(&expected));
    }

    #[test]
    fn homogenize_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal_from_strings(&r, &["y - x^2"]).unwrap();
        let h = i.homogenize("h");
        let expected = ideal_from_strings(&h.ring, &["y*h - x^2"]).unwrap();
        assert!(h.equals(&expected));
        let i2 = ideal_from_strings(&r, &["x - 1"]).unwrap();
        let h2 = i2.homogenize("h");
        let expected2 = ideal_from_strings(&h2.ring, &["x - h"]).unwrap();
        assert!(h2.equals(&expected2));
    }

    #[test]
    fn initial_ideal_examples() {
        let r = PolyRing::new(vec!["x".into(), "y".into()], MonomialOrder::Lex);
        let i = ideal_from_strings(&r, &["x + y"]).unwrap();
        let init = i.initial_ideal(MonomialOrder::Lex);
        assert_eq!(init.gens.len(), 1);
        assert_eq!(init.gens[0].to_string_in(&init.ring), "x");
        // degrevlex tie rule: in (x*y + z^2), lead is x*y
        let r2 = ring(&["x", "y", "z"]);
        let i2 = ideal_from_strings(&r2, &["x*y + z^2"]).unwrap();
        let init2 = i2.initial_ideal(MonomialOrder::DegRevLex);
        assert_eq!(init2.gens[0].to_string_in(&init2.ring), "x*y");
    }

    #[test]
    fn quotient_saturation_laws() {
        // (I : J) : K == I : (J*K) and saturation idempotence on a worked example
        let r = ring(&["x", "y", "z"]);
        let i = ideal_from_strings(&r, &["x^2*y*z", "y^2*z"]).unwrap();
        let j = parse_poly(&r, "x*y").unwrap();
        let k = parse_poly(&r, "z").unwrap();
        let q1 = i.quotient(&[j.clone()]).quotient(&[k.clone()]);
        let q2 = i.quotient(&[j.mul(&r, &k)]);
        assert!(q1.equals(&q2));
        let s = i.saturate(&[parse_poly(&r, "y*z").unwrap()]);
        let s2 = s.saturate(&[parse_poly(&r, "y*z").unwrap()]);
        assert!(s.equals(&s2));
    }

    #[test]
    fn dimension_of_hypersurface() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal_from_strings(&r, &["x*y - z^2"]).unwrap();
        assert_eq!(i.dimension(), 2);
        let pt = ideal_from_strings(&r, &["x", "y", "z"]).unwrap();
        assert_eq!(pt.dimension(), 0);
    }
}
