//! Buchberger's algorithm with the product and chain criteria, full
//! inter-reduction to the unique reduced basis, and an on-disk basis cache
//! keyed by a content hash of (variables, order, generators).

use super::{Mono, Poly, PolyRing};
use crate::Rat;
use num::traits::One;
use sha2::{Digest, Sha256};
use std::cmp::Ordering;
use std::path::PathBuf;

/// Remainder of multivariate division of `f` by `basis`. Every term of the
/// result is reduced. Ties among possible reducers go to the smallest basis
/// index, which keeps the computation deterministic.
pub fn normal_form(ring: &PolyRing, f: &Poly, basis: &[Poly]) -> Poly {
    let leads: Vec<(&Mono, &Rat)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading().expect("zero polynomial in basis");
            (m, c)
        })
        .collect();
    let mut work = f.clone();
    let mut rem: Vec<(Mono, Rat)> = Vec::new();
    'outer: while let Some((m, c)) = work.leading() {
        for (i, (lm, lc)) in leads.iter().enumerate() {
            if lm.divides(m) {
                let qm = lm.quotient_into(m);
                let qc = c / *lc;
                work = work.sub(ring, &basis[i].mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        rem.push((m.clone(), c.clone()));
        work.terms.remove(0);
    }
    Poly { terms: rem }
}

pub fn s_polynomial(ring: &PolyRing, f: &Poly, g: &Poly) -> Poly {
    let (fm, fc) = f.leading().expect("zero polynomial");
    let (gm, gc) = g.leading().expect("zero polynomial");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_into(&l), &(Rat::one() / fc.clone()));
    let b = g.mul_term(&gm.quotient_into(&l), &(Rat::one() / gc.clone()));
    a.sub(ring, &b)
}

/// Compute the unique reduced Groebner basis of the given generators under
/// `ring.order`. The zero ideal gives an empty basis; a unit ideal gives `[1]`.
pub fn buchberger(ring: &PolyRing, gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.monic(ring));
        }
    }
    if basis.is_empty() {
        return Vec::new();
    }
    // seed pairs
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            let (i, j) = pairs[k];
            let (bi, bj) = pairs[best];
            let lk = basis[i].leading().unwrap().0.lcm(&basis[j].leading().unwrap().0);
            let lb = basis[bi].leading().unwrap().0.lcm(&basis[bj].leading().unwrap().0);
            if ring.cmp_mono(&lk, &lb) == Ordering::Less {
                best = k;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        let (lmi, lmj) = (
            basis[i].leading().unwrap().0.clone(),
            basis[j].leading().unwrap().0.clone(),
        );
        // product criterion
        if lmi.is_coprime(&lmj) {
            continue;
        }
        // chain criterion: some k whose lead divides the lcm, with both
        // subordinate pairs already handled (not pending)
        let l = lmi.lcm(&lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().unwrap().0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = normal_form(ring, &s, &basis);
        if !r.is_zero() {
            let r = r.monic(ring);
            let n = basis.len();
            for k in 0..n {
                pairs.push((k, n));
            }
            basis.push(r);
        }
    }
    reduce_basis(ring, basis)
}

/// Minimalize and tail-reduce a Groebner basis to the unique reduced one,
/// sorted by increasing leading monomial.
fn reduce_basis(ring: &PolyRing, mut basis: Vec<Poly>) -> Vec<Poly> {
    // minimalize: drop elements whose lead is divisible by another lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && basis[j]
                    .leading()
                    .unwrap()
                    .0
                    .divides(&basis[i].leading().unwrap().0)
            {
                // prefer the one with the smaller lead; on equal leads keep lower index
                let cmp = ring.cmp_mono(
                    &basis[j].leading().unwrap().0,
                    &basis[i].leading().unwrap().0,
                );
                if cmp == Ordering::Less || (cmp == Ordering::Equal && j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // tail-reduce each against the others until stable
    let mut reduced: Vec<Poly> = minimal.clone();
    loop {
        let mut changed = false;
        for i in 0..reduced.len() {
            let others: Vec<Poly> = reduced
                .iter()
                .enumerate()
                .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
                .collect();
            if others.is_empty() {
                continue;
            }
            let nf = normal_form(ring, &reduced[i], &others);
            let nf = nf.monic(ring);
            if nf != reduced[i] {
                reduced[i] = nf;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| ring.cmp_mono(&a.leading().unwrap().0, &b.leading().unwrap().0));
    reduced
}

/// Check the Buchberger criterion: every S-polynomial reduces to zero.
pub fn is_groebner(ring: &PolyRing, basis: &[Poly]) -> bool {
    for i in 0..basis.len() {
        for j in 0..i {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !normal_form(ring, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Content hash identifying a Groebner computation.
pub fn content_key(ring: &PolyRing, gens: &[Poly]) -> String {
    let mut h = Sha256::new();
    h.update(ring.vars.join(",").as_bytes());
    h.update(format!("|{:?}|", ring.order).as_bytes());
    let mut gs: Vec<String> = gens.iter().map(|g| g.to_string_in(ring)).collect();
    gs.sort();
    for g in gs {
        h.update(g.as_bytes());
        h.update(b";");
    }
    hex::encode(h.finalize())
}

/// On-disk Groebner basis cache. Files are JSON lists of generator strings
/// named by the content key.
#[derive(Debug, Clone)]
pub struct GbCache {
    pub dir: Option<PathBuf>,
}

impl GbCache {
    pub fn disabled() -> Self {
        GbCache { dir: None }
    }

    pub fn at(dir: PathBuf) -> Self {
        GbCache { dir: Some(dir) }
    }

    pub fn load(&self, ring: &PolyRing, key: &str) -> Option<Vec<Poly>> {
        let dir = self.dir.as_ref()?;
        let path = dir.join(format!("{key}.json"));
        let data = std::fs::read_to_string(path).ok()?;
        let strs: Vec<String> = serde_json::from_str(&data).ok()?;
        strs.iter()
            .map(|s| super::parse::parse(ring, s).ok())
            .collect::<Option<Vec<_>>>()
    }

    pub fn store(&self, ring: &PolyRing, key: &str, basis: &[Poly]) {
        let Some(dir) = self.dir.as_ref() else { return };
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        let strs: Vec<String> = basis.iter().map(|g| g.to_string_in(ring)).collect();
        let path = dir.join(format!("{key}.json"));
        let _ = std::fs::write(path, serde_json::to_string(&strs).unwrap());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, MonomialOrder};

    fn ring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn gb_of_xy_and_x_is_x() {
        let r = ring(&["x", "y"]);
        let gens = vec![parse_poly(&r, "x*y").unwrap(), parse_poly(&r, "x").unwrap()];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string_in(&r), "x");
    }

    #[test]
    fn gb_principal() {
        let r = ring(&["a", "b"]);
        let gens = vec![parse_poly(&r, "a*b").unwrap()];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string_in(&r), "a*b");
    }

    #[test]
    fn zero_ideal_empty_basis() {
        let r = ring(&["x"]);
        assert!(buchberger(&r, &[]).is_empty());
        assert!(buchberger(&r, &[Poly::zero()]).is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["a6", "a7", "a8", "a9"]);
        let g = parse_poly(&r, "a7*a8 - a6*a9").unwrap();
        let gb = buchberger(&r, &[g]);
        let f = parse_poly(&r, "a7*a8").unwrap();
        let nf = normal_form(&r, &f, &gb);
        assert_eq!(nf.to_string_in(&r), "a6*a9");
        // 1 vs GB of (a6) stays 1
        let gb2 = buchberger(&r, &[parse_poly(&r, "a6").unwrap()]);
        let one = Poly::one(&r);
        assert_eq!(normal_form(&r, &one, &gb2), one);
    }

    #[test]
    fn textbook_gb() {
        // (x^2 - y, x^3 - z) in degrevlex: implicitization of the twisted cubic
        let r = ring(&["x", "y", "z"]);
        let gens = vec![
            parse_poly(&r, "x^2 - y").unwrap(),
            parse_poly(&r, "x^3 - z").unwrap(),
        ];
        let gb = buchberger(&r, &gens);
        assert!(is_groebner(&r, &gb));
        // y^3 - z^2 lies in the ideal
        let f = parse_poly(&r, "y^3 - z^2").unwrap();
        assert!(normal_form(&r, &f, &gb).is_zero());
    }

    mod properties {
        use super::*;
        use crate::poly::Mono;
        use crate::ratio;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Poly> {
            // up to five terms in three variables, small exponents and
            // rational coefficients
            prop::collection::vec(
                (
                    prop::collection::vec(0u16..4, 3),
                    -9i64..=9,
                    1i64..=4,
                ),
                0..5,
            )
            .prop_map(|terms| {
                let ring = PolyRing::new(
                    vec!["x".into(), "y".into(), "z".into()],
                    crate::poly::MonomialOrder::DegRevLex,
                );
                Poly::from_terms(
                    &ring,
                    terms
                        .into_iter()
                        .map(|(e, n, d)| (Mono::new(e), ratio(n, d)))
                        .collect(),
                )
            })
        }

        proptest! {
            // f - normal_form(f, G) lies in the ideal of G, and the normal
            // form is idempotent
            #[test]
            fn division_invariant(f in arb_poly()) {
                let ring = PolyRing::new(
                    vec!["x".into(), "y".into(), "z".into()],
                    crate::poly::MonomialOrder::DegRevLex,
                );
                let gens = vec![
                    crate::poly::parse_poly(&ring, "x*y - z").unwrap(),
                    crate::poly::parse_poly(&ring, "y^2 - x").unwrap(),
                ];
                let gb = buchberger(&ring, &gens);
                let nf = normal_form(&ring, &f, &gb);
                let diff = f.sub(&ring, &nf);
                prop_assert!(normal_form(&ring, &diff, &gb).is_zero());
                prop_assert_eq!(normal_form(&ring, &nf, &gb), nf);
            }

            // ring axioms survive the sparse representation
            #[test]
            fn distributivity(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
                let ring = PolyRing::new(
                    vec!["x".into(), "y".into(), "z".into()],
                    crate::poly::MonomialOrder::DegRevLex,
                );
                let lhs = f.add(&ring, &g).mul(&ring, &h);
                let rhs = f.mul(&ring, &h).add(&ring, &g.mul(&ring, &h));
                prop_assert_eq!(lhs, rhs);
            }

            // display and parse are mutually inverse
            #[test]
            fn parse_display_roundtrip(f in arb_poly()) {
                let ring = PolyRing::new(
                    vec!["x".into(), "y".into(), "z".into()],
                    crate::poly::MonomialOrder::DegRevLex,
                );
                let text = f.to_string_in(&ring);
                let back = crate::poly::parse_poly(&ring, &text).unwrap();
                prop_assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn determinism_under_permutation() {
        let r = ring(&["x", "y", "z"]);
        let gens = vec![
            parse_poly(&r, "x*y - z").unwrap(),
            parse_poly(&r, "y*z - x").unwrap(),
            parse_poly(&r, "x^2 - y^2").unwrap(),
        ];
        let gb1 = buchberger(&r, &gens);
        let mut permuted = gens.clone();
        permuted.rotate_left(1);
        permuted.swap(0, 1);
        let gb2 = buchberger(&r, &permuted);
        assert_eq!(gb1, gb2);
        assert!(is_groebner(&r, &gb1));
    }
}
