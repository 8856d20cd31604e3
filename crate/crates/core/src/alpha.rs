//! Rational functions in the simple-root variables alpha_1..alpha_rank.
//!
//! Denominators are kept factored as multisets of integer linear forms;
//! equality is decided by cross-multiplication, never by polynomial gcd.
//! After arithmetic we cancel denominator factors that divide the numerator
//! exactly, which is all the reduction the pipelines need.

use crate::poly::{Mono, MonomialOrder, Poly, PolyRing};
use crate::{Int, Rat};
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The polynomial ring Q[a1..a_rank], degrevlex with a1 largest.
pub fn alpha_ring(rank: usize) -> PolyRing {
    PolyRing::new(
        (1..=rank).map(|i| format!("a{i}")).collect(),
        MonomialOrder::DegRevLex,
    )
}

/// Primitive integer linear form in the alpha variables. Normalized so the
/// first nonzero coefficient is positive and the gcd of coefficients is 1;
/// the normalization sign is returned alongside.
pub type LinearForm = Vec<i64>;

pub fn normalize_form(mut v: LinearForm) -> (LinearForm, i64) {
    let mut g: i64 = 0;
    for &c in &v {
        g = num::integer::gcd(g, c.abs());
    }
    if g == 0 {
        return (v, 1);
    }
    if g > 1 {
        for c in v.iter_mut() {
            *c /= g;
        }
    }
    let sign = match v.iter().find(|&&c| c != 0) {
        Some(&c) if c < 0 => {
            for c in v.iter_mut() {
                *c = -*c;
            }
            -1
        }
        _ => 1,
    };
    (v, sign * g)
}

/// The linear form alpha_a + ... + alpha_b (1-indexed, inclusive).
pub fn root_form(rank: usize, a: usize, b: usize) -> LinearForm {
    let mut v = vec![0i64; rank];
    for i in a..=b {
        v[i - 1] = 1;
    }
    v
}

/// All positive roots of A_rank as linear forms.
pub fn positive_roots(rank: usize) -> Vec<LinearForm> {
    let mut out = Vec::new();
    for a in 1..=rank {
        for b in a..=rank {
            out.push(root_form(rank, a, b));
        }
    }
    out
}

pub fn form_to_poly(ring: &PolyRing, f: &LinearForm) -> Poly {
    let terms = f
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (Mono::var(ring.nvars(), i), Rat::from_integer(Int::from(c))))
        .collect();
    Poly::from_terms(ring, terms)
}

/// A rational function num / prod f_i^{e_i} with linear-form denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRational {
    pub rank: usize,
    pub num: Poly,
    pub den: BTreeMap<LinearForm, u32>,
}

impl WeightRational {
    pub fn zero(rank: usize) -> Self {
        WeightRational { rank, num: Poly::zero(), den: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        let ring = alpha_ring(rank);
        WeightRational { rank, num: Poly::one(&ring), den: BTreeMap::new() }
    }

    pub fn from_poly(rank: usize, p: Poly) -> Self {
        WeightRational { rank, num: p, den: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// 1 / (product of the given linear forms), with multiplicity.
    pub fn inverse_of_forms(rank: usize, forms: &[LinearForm]) -> Self {
        let ring = alpha_ring(rank);
        let mut num = Poly::one(&ring);
        let mut den: BTreeMap<LinearForm, u32> = BTreeMap::new();
        let mut scale = Rat::one();
        for f in forms {
            let (nf, s) = normalize_form(f.clone());
            assert!(nf.iter().any(|&c| c != 0), "zero linear form in denominator");
            scale *= Rat::from_integer(Int::from(s));
            *den.entry(nf).or_insert(0) += 1;
        }
        num = num.scale(&(Rat::one() / scale));
        WeightRational { rank, num, den }
    }

    fn den_poly(&self, ring: &PolyRing) -> Poly {
        let mut acc = Poly::one(ring);
        for (f, &e) in &self.den {
            let fp = form_to_poly(ring, f);
            for _ in 0..e {
                acc = acc.mul(ring, &fp);
            }
        }
        acc
    }

    /// Cancel denominator factors that divide the numerator exactly.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let ring = alpha_ring(self.rank);
        let forms: Vec<LinearForm> = self.den.keys().cloned().collect();
        for f in forms {
            let fp = form_to_poly(&ring, &f);
            while *self.den.get(&f).unwrap_or(&0) > 0 {
                match self.num.try_div_exact(&ring, &fp) {
                    Some(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&f).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&f);
                            break;
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn add(&self, other: &WeightRational) -> WeightRational {
        assert_eq!(self.rank, other.rank);
        let ring = alpha_ring(self.rank);
        // lcm of denominators
        let mut den: BTreeMap<LinearForm, u32> = self.den.clone();
        for (f, &e) in &other.den {
            let cur = den.entry(f.clone()).or_insert(0);
            *cur = (*cur).max(e);
        }
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        for (f, &e) in &den {
            let fp = form_to_poly(&ring, f);
            let ea = e - self.den.get(f).copied().unwrap_or(0);
            for _ in 0..ea {
                a = a.mul(&ring, &fp);
            }
            let eb = e - other.den.get(f).copied().unwrap_or(0);
            for _ in 0..eb {
                b = b.mul(&ring, &fp);
            }
        }
        let mut out = WeightRational { rank: self.rank, num: a.add(&ring, &b), den };
        out.reduce();
        out
    }

    pub fn neg(&self) -> WeightRational {
        WeightRational { rank: self.rank, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &WeightRational) -> WeightRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &WeightRational) -> WeightRational {
        assert_eq!(self.rank, other.rank);
        let ring = alpha_ring(self.rank);
        let mut den = self.den.clone();
        for (f, &e) in &other.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        let mut out = WeightRational {
            rank: self.rank,
            num: self.num.mul(&ring, &other.num),
            den,
        };
        out.reduce();
        out
    }

    pub fn scale(&self, c: &Rat) -> WeightRational {
        WeightRational { rank: self.rank, num: self.num.scale(c), den: self.den.clone() }
    }

    /// Equality by cross-multiplication: n1 * d2 == n2 * d1.
    pub fn eq_cross(&self, other: &WeightRational) -> bool {
        assert_eq!(self.rank, other.rank);
        let ring = alpha_ring(self.rank);
        let lhs = self.num.mul(&ring, &other.den_poly(&ring));
        let rhs = other.num.mul(&ring, &self.den_poly(&ring));
        lhs == rhs
    }

    /// The cross-multiplied difference n1*d2 - n2*d1 (zero iff equal).
    pub fn difference_poly(&self, other: &WeightRational) -> Poly {
        let ring = alpha_ring(self.rank);
        let lhs = self.num.mul(&ring, &other.den_poly(&ring));
        let rhs = other.num.mul(&ring, &self.den_poly(&ring));
        lhs.sub(&ring, &rhs)
    }

    /// Evaluate at a rational point of the alpha space; None if a denominator
    /// factor vanishes there.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        assert_eq!(point.len(), self.rank);
        let mut den = Rat::one();
        for (f, &e) in &self.den {
            let mut v = Rat::zero();
            for (i, &c) in f.iter().enumerate() {
                if c != 0 {
                    v += &point[i] * Rat::from_integer(Int::from(c));
                }
            }
            if v.is_zero() {
                return None;
            }
            for _ in 0..e {
                den *= &v;
            }
        }
        Some(self.num.eval(point) / den)
    }

    pub fn display_string(&self) -> String {
        format!("{}", self)
    }
}

impl fmt::Display for WeightRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = alpha_ring(self.rank);
        if self.den.is_empty() {
            return write!(f, "{}", self.num.display(&ring));
        }
        let mut den_parts = Vec::new();
        for (form, &e) in &self.den {
            let fp = form_to_poly(&ring, form);
            let s = if fp.terms.len() > 1 {
                format!("({})", fp.display(&ring))
            } else {
                format!("{}", fp.display(&ring))
            };
            if e == 1 {
                den_parts.push(s);
            } else {
                den_parts.push(format!("{s}^{e}"));
            }
        }
        write!(f, "({}) / ({})", self.num.display(&ring), den_parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    #[test]
    fn cross_multiplication_equality() {
        // 1/a1 + 1/a2 == (a1 + a2) / (a1 a2)
        let lhs = WeightRational::inverse_of_forms(2, &[vec![1, 0]])
            .add(&WeightRational::inverse_of_forms(2, &[vec![0, 1]]));
        let ring = alpha_ring(2);
        let num = crate::poly::parse_poly(&ring, "a1 + a2").unwrap();
        let mut rhs = WeightRational::inverse_of_forms(2, &[vec![1, 0], vec![0, 1]]);
        rhs.num = rhs.num.mul(&ring, &num);
        assert!(lhs.eq_cross(&rhs));
    }

    #[test]
    fn reduction_cancels_linear_factors() {
        let ring = alpha_ring(2);
        // (a1^2 + a1*a2) / a1 -> a1 + a2
        let num = crate::poly::parse_poly(&ring, "a1^2 + a1*a2").unwrap();
        let mut w = WeightRational::inverse_of_forms(2, &[vec![1, 0]]);
        w.num = num;
        w.reduce();
        assert!(w.den.is_empty());
        assert_eq!(w.num.to_string_in(&ring), "a1 + a2");
    }

    #[test]
    fn eval_and_denormalization() {
        // 1/(2*a1) stores the 2 in the numerator scale
        let w = WeightRational::inverse_of_forms(1, &[vec![2]]);
        let v = w.eval(&[rat(3)]).unwrap();
        assert_eq!(v, ratio(1, 6));
        // vanishing denominator detected
        assert!(w.eval(&[rat(0)]).is_none());
    }
}
