//! Sequence enumeration, the barD data of measures, flag functions of
//! modules, multidegree-based barD of cycle basis elements, equality
//! verdicts, and the unitriangular conjugation solver.

use crate::alpha::{alpha_ring, LinearForm, WeightRational};
use crate::error::{Error, Result};
use crate::fp::Fp;
use crate::orbital::{jordan_point_mdeg, SlicePattern};
use crate::poly::ideal::Ideal;
use crate::poly::mdeg::multidegree;
use crate::poly::Poly;
use crate::preproj::{all_submodules, QuiverModule, Submodule};
use crate::tableaux::Tableau;
use crate::{rat, Rat};
use num::traits::{One, Zero};

/// All sequences (i_1..i_p) with sum of alpha_{i_k} equal to nu, in
/// lexicographic order. Letters are 1-indexed vertices.
pub fn seq(nu: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = nu.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(total);
    let mut left = nu.to_vec();
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<usize>, total: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i + 1);
                rec(left, cur, total, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    rec(&mut left, &mut cur, total, &mut out);
    out
}

/// All interleavings of vj and vk preserving the relative order of each,
/// with multiplicity: the result has (a+b choose a) entries.
pub fn shuffle(vj: &[usize], vk: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for positions in combinations_of(vj.len() + vk.len(), vj.len()) {
        let mut s = vec![0usize; vj.len() + vk.len()];
        let mut jj = 0;
        let mut kk = 0;
        for (idx, slot) in s.iter_mut().enumerate() {
            if positions.contains(&idx) {
                *slot = vj[jj];
                jj += 1;
            } else {
                *slot = vk[kk];
                kk += 1;
            }
        }
        out.push(s);
    }
    out
}

/// k-subsets of 0..n, lexicographic.
pub fn combinations_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Partial sums of a sequence as linear forms.
pub fn partial_sums(rank: usize, vi: &[usize]) -> Vec<LinearForm> {
    let mut acc = vec![0i64; rank];
    let mut out = Vec::with_capacity(vi.len());
    for &i in vi {
        acc[i - 1] += 1;
        out.push(acc.clone());
    }
    out
}

/// barD of a sequence: the product of the reciprocals of its partial sums.
pub fn bar_d_vi(rank: usize, vi: &[usize]) -> WeightRational {
    WeightRational::inverse_of_forms(rank, &partial_sums(rank, vi))
}

/// One term of the Fourier-transform expansion: the exponential weight
/// beta_j and its coefficient 1 / prod_{k != j} (beta_k - beta_j).
#[derive(Debug, Clone)]
pub struct FtTerm {
    pub beta: LinearForm,
    pub coeff: WeightRational,
}

/// The symbolic Fourier-transform sum over j = 0..p; requires the partial
/// sums (with 0 prepended) to be pairwise distinct.
pub fn ft_d_terms(rank: usize, vi: &[usize]) -> Result<Vec<FtTerm>> {
    let mut betas = vec![vec![0i64; rank]];
    betas.extend(partial_sums(rank, vi));
    ft_d_from_sums(rank, &betas)
}

/// Variant on raw exponent lists, used to surface the degenerate-input error.
pub fn ft_d_from_sums(rank: usize, betas: &[LinearForm]) -> Result<Vec<FtTerm>> {
    for i in 0..betas.len() {
        for j in 0..i {
            if betas[i] == betas[j] {
                return Err(Error::Measures(format!(
                    "repeated partial sum {:?}",
                    betas[i]
                )));
            }
        }
    }
    let mut out = Vec::new();
    for (j, bj) in betas.iter().enumerate() {
        let diffs: Vec<LinearForm> = betas
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(_, bk)| bk.iter().zip(bj).map(|(a, b)| a - b).collect())
            .collect();
        out.push(FtTerm {
            beta: bj.clone(),
            coeff: WeightRational::inverse_of_forms(rank, &diffs),
        });
    }
    Ok(out)
}

/// Flag function of a module: sum over Seq(dimvec) of chi times barD.
/// Assembled from the submodule lattice over several primes, with the
/// per-prime lattice sums combined by Lagrange interpolation at q = 1
/// (checked for consistency by the extra prime).
pub fn flag_function(m: &QuiverModule, primes: &[u64]) -> Result<WeightRational> {
    assert!(primes.len() >= 3, "need at least three primes");
    let rank = m.rank();
    if m.dims.iter().all(|&d| d == 0) {
        return Ok(WeightRational::one(rank));
    }
    let per_prime: Vec<WeightRational> = {
        use rayon::prelude::*;
        primes
            .par_iter()
            .map(|&p| lattice_flag_sum(m, p))
            .collect::<Result<Vec<_>>>()?
    };
    // Lagrange combination at q = 1 over all primes, and separately over all
    // but the last; the two must agree (degree check)
    let full = lagrange_at_one(primes, &per_prime);
    let reduced = lagrange_at_one(&primes[..primes.len() - 1], &per_prime[..primes.len() - 1]);
    if !full.eq_cross(&reduced) {
        return Err(Error::NonPolynomialCount(
            "flag function not stable under adding a prime".into(),
        ));
    }
    Ok(full)
}

/// Naive assembly from an explicit census (used for cross-checks).
pub fn flag_function_from_census(
    rank: usize,
    census: &[(Vec<usize>, i64)],
) -> WeightRational {
    // divide and conquer keeps the intermediate denominators shared
    fn sum_range(rank: usize, census: &[(Vec<usize>, i64)]) -> WeightRational {
        match census.len() {
            0 => WeightRational::zero(rank),
            1 => {
                let (vi, chi) = &census[0];
                bar_d_vi(rank, vi).scale(&rat(*chi))
            }
            n => {
                let (a, b) = census.split_at(n / 2);
                sum_range(rank, a).add(&sum_range(rank, b))
            }
        }
    }
    let nonzero: Vec<(Vec<usize>, i64)> =
        census.iter().filter(|(_, chi)| *chi != 0).cloned().collect();
    sum_range(rank, &nonzero)
}

/// Per-prime lattice sum: G(M) = sum over composition series over F_p of the
/// product of reciprocals of the running quotient weights.
fn lattice_flag_sum(m: &QuiverModule, p: u64) -> Result<WeightRational> {
    let rank = m.rank();
    let mp = m.reduce_mod(p);
    let f = Fp::new(p);
    let subs: Vec<Submodule> = all_submodules(&mp);
    let nu = m.dimvec();
    // index submodules; bucket by total dimension so the cover scan only
    // looks one level down
    let mut order: Vec<usize> = (0..subs.len()).collect();
    order.sort_by_key(|&i| subs[i].dims().iter().sum::<usize>());
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        let total: usize = subs[i].dims().iter().sum();
        if levels.len() <= total {
            levels.resize(total + 1, Vec::new());
        }
        levels[total].push(i);
    }
    let mut g: Vec<Option<WeightRational>> = vec![None; subs.len()];
    for &i in &order {
        let total: usize = subs[i].dims().iter().sum();
        if total == 0 {
            g[i] = Some(WeightRational::one(rank));
            continue;
        }
        let mut acc = WeightRational::zero(rank);
        let di = subs[i].dims();
        for &j in &levels[total - 1] {
            let cand = &subs[j];
            let dj = cand.dims();
            if di.iter().zip(&dj).any(|(a, b)| a < b) {
                continue;
            }
            if !subs[i].contains(&f, cand) {
                continue;
            }
            // weight of the prefix ending just above cand: nu - dimvec(cand)
            let w: LinearForm = nu
                .iter()
                .zip(cand.dimvec())
                .map(|(a, b)| a - b)
                .collect();
            let factor = WeightRational::inverse_of_forms(rank, &[w]);
            let gj = g[j].clone().ok_or_else(|| {
                Error::Measures("lattice order broken".into())
            })?;
            acc = acc.add(&factor.mul(&gj));
        }
        g[i] = Some(acc);
    }
    // the top node is the full module (a subspace tuple of full dimensions)
    let full: Vec<usize> = mp.dims.clone();
    let top = subs
        .iter()
        .position(|s| s.dims() == full)
        .ok_or_else(|| Error::Measures("top of lattice missing".into()))?;
    g[top].clone().ok_or_else(|| Error::Measures("top not computed".into()))
}

fn lagrange_at_one(primes: &[u64], values: &[WeightRational]) -> WeightRational {
    let rank = values[0].rank;
    let mut acc = WeightRational::zero(rank);
    for (s, vs) in values.iter().enumerate() {
        let mut w = Rat::one();
        for (t, &qt) in primes.iter().enumerate() {
            if t == s {
                continue;
            }
            let qs = primes[s];
            w *= (Rat::one() - rat(qt as i64)) / (rat(qs as i64) - rat(qt as i64));
        }
        acc = acc.add(&vs.scale(&w));
    }
    acc
}

/// barD of the cycle labeled by a tableau: multidegree of its orbital ideal
/// divided by the multidegree of the Jordan point.
pub fn bar_d_mv(t: &Tableau) -> Result<WeightRational> {
    let (pattern, ideal) = crate::orbital::orbital_ideal(t)?;
    bar_d_from_ideal(&pattern, &ideal)
}

pub fn bar_d_from_ideal(pattern: &SlicePattern, ideal: &Ideal) -> Result<WeightRational> {
    let rank = pattern.m() - 1;
    let md = multidegree(ideal)?;
    let forms = crate::orbital::weight_multiset(pattern);
    let mut w = WeightRational::inverse_of_forms(rank, &forms);
    let ring = alpha_ring(rank);
    w.num = w.num.mul(&ring, &md);
    w.reduce();
    Ok(w)
}

/// Outcome of a symbolic comparison.
#[derive(Debug, Clone)]
pub enum Verdict {
    Equal,
    NotEqual {
        /// cross-multiplied difference polynomial
        difference: Poly,
        /// a rational evaluation point where the two sides differ
        witness: Vec<Rat>,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// Compare two rational functions; on inequality produce the difference and
/// an explicit regular point where the values differ.
pub fn compare(lhs: &WeightRational, rhs: &WeightRational) -> Verdict {
    if lhs.eq_cross(rhs) {
        return Verdict::Equal;
    }
    let difference = lhs.difference_poly(rhs);
    let rank = lhs.rank;
    // deterministic search over regular points with distinct coordinates
    for salt in 1i64..200 {
        let point: Vec<Rat> = (0..rank)
            .map(|i| rat(salt + 7 * i as i64 + (i as i64) * (i as i64)))
            .collect();
        if let (Some(a), Some(b)) = (lhs.eval(&point), rhs.eval(&point)) {
            if a != b {
                return Verdict::NotEqual { difference, witness: point };
            }
        }
    }
    // fall back to reporting the difference without a witness point
    Verdict::NotEqual { difference, witness: Vec::new() }
}

/// The unitriangular matrix conjugating x + e to x (x regular diagonal):
/// u_{ij} = prod_{k=i+1..j} 1/(x_i - x_k), verified by multiplication.
pub fn solve_ux(x: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    let m = x.len();
    for i in 0..m {
        for j in 0..i {
            if x[i] == x[j] {
                return Err(Error::Measures(format!(
                    "not regular: x_{} = x_{}",
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    let mut u = vec![vec![Rat::zero(); m]; m];
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    for i in 0..m {
        for j in (i + 1)..m {
            let prev = u[i][j - 1].clone();
            u[i][j] = prev / (x[i].clone() - x[j].clone());
        }
    }
    // verify x u - u x = u shifted (the conjugation u^{-1} x u = x + e)
    for i in 0..m {
        for j in 0..m {
            let lhs = (x[i].clone() - x[j].clone()) * u[i][j].clone();
            let rhs = if j > 0 { u[i][j - 1].clone() } else { Rat::zero() };
            let rhs = if i == j { Rat::zero() } else { rhs };
            if i < j && lhs != rhs {
                return Err(Error::Measures("conjugation identity failed".into()));
            }
        }
    }
    Ok(u)
}

/// p(mu) * barD as a cleared polynomial identity check helper: returns the
/// polynomial p(mu) of a slice pattern.
pub fn p_mu(pattern: &SlicePattern) -> Poly {
    jordan_point_mdeg(pattern)
}

/// Multiply a rational function by a polynomial and return the result when
/// the denominator clears completely (used to pin p(mu)-cleared values).
pub fn cleared_numerator(w: &WeightRational, p: &Poly) -> Option<Poly> {
    let mut prod = w.mul(&WeightRational::from_poly(w.rank, p.clone()));
    prod.reduce();
    if prod.den.is_empty() {
        Some(prod.num)
    } else {
        None
    }
}
