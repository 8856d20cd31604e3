//! Exact univariate Lagrange interpolation with an integrality check.
//! Supports the finite-field point-count -> Euler characteristic pipeline:
//! a non-integer coefficient signals that the counts are not polynomial.

use crate::error::{Error, Result};
use crate::{Int, Rat};
use num::traits::{One, Zero};

/// Interpolate the unique polynomial through all `(x, y)` points and verify
/// it has integer coefficients. Returns coefficients in ascending degree with
/// trailing zeros removed.
pub fn interpolate_univariate(points: &[(Int, Int)]) -> Result<Vec<Int>> {
    assert!(!points.is_empty(), "need at least one point");
    for i in 0..points.len() {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                if points[i].1 != points[j].1 {
                    return Err(Error::InconsistentInterpolation);
                }
            }
        }
    }
    // Newton divided differences
    let xs: Vec<Rat> = points.iter().map(|(x, _)| Rat::from_integer(x.clone())).collect();
    let mut diffs: Vec<Rat> = points.iter().map(|(_, y)| Rat::from_integer(y.clone())).collect();
    let n = points.len();
    let mut coeffs_newton: Vec<Rat> = vec![diffs[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = &xs[i] - &xs[i - level];
            if denom.is_zero() {
                // duplicate x with equal y: drop by treating difference as zero
                diffs[i] = Rat::zero();
            } else {
                diffs[i] = (&diffs[i] - &diffs[i - 1]) / denom;
            }
        }
        coeffs_newton.push(diffs[level].clone());
    }
    // expand: p(x) = sum_k c_k * prod_{j<k} (x - x_j)
    let mut poly: Vec<Rat> = vec![Rat::zero(); n];
    let mut basis: Vec<Rat> = vec![Rat::one()];
    for (k, c) in coeffs_newton.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            poly[d] += c * b;
        }
        // basis *= (x - x_k)
        let mut next = vec![Rat::zero(); basis.len() + 1];
        for (d, b) in basis.iter().enumerate() {
            next[d + 1] += b;
            next[d] -= b * &xs[k];
        }
        basis = next;
    }
    let mut out = Vec::with_capacity(n);
    for c in poly {
        if !c.denom().is_one() {
            return Err(Error::NonIntegerInterpolation);
        }
        out.push(c.numer().clone());
    }
    while out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    if out.is_empty() {
        out.push(Int::zero());
    }
    Ok(out)
}

/// Evaluate integer coefficients at an integer argument.
pub fn eval_int_poly(coeffs: &[Int], x: &Int) -> Int {
    let mut acc = Int::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(p: &[(i64, i64)]) -> Vec<(Int, Int)> {
        p.iter().map(|&(a, b)| (Int::from(a), Int::from(b))).collect()
    }

    #[test]
    fn projective_line_count() {
        let c = interpolate_univariate(&pts(&[(2, 3), (3, 4), (5, 6)])).unwrap();
        assert_eq!(c, vec![Int::from(1), Int::from(1)]); // q + 1
    }

    #[test]
    fn constant() {
        let c = interpolate_univariate(&pts(&[(2, 1), (3, 1)])).unwrap();
        assert_eq!(c, vec![Int::from(1)]);
    }

    #[test]
    fn projective_plane_count() {
        let c = interpolate_univariate(&pts(&[(2, 7), (3, 13), (5, 31)])).unwrap();
        assert_eq!(c, vec![Int::from(1), Int::from(1), Int::from(1)]); // q^2 + q + 1
    }

    #[test]
    fn non_integer_rejected() {
        // counts 1, 2 at q = 2, 4 would need coefficient 1/2
        let e = interpolate_univariate(&pts(&[(2, 1), (4, 2)]));
        assert!(matches!(e, Err(Error::NonIntegerInterpolation)));
    }

    #[test]
    fn eval_at_one() {
        let c = interpolate_univariate(&pts(&[(2, 3), (3, 4), (5, 6)])).unwrap();
        assert_eq!(eval_int_poly(&c, &Int::from(1)), Int::from(2));
    }
}
