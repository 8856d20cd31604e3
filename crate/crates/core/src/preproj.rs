//! Finite-dimensional modules over the preprojective algebra of the doubled
//! A-type quiver: relation checking, composition-series point counts over
//! prime fields with q-interpolation, flag counts, submodule lattices, and
//! the case-study module constructors.

use crate::error::{Error, Result};
use crate::fp::{Fp, FpMat};
use crate::poly::interp::{eval_int_poly, interpolate_univariate};
use crate::{Int, Rat};
use num::traits::Zero;
use std::collections::BTreeMap;

/// Module over the preprojective algebra of A_{m-1}: one vector space per
/// vertex 1..m-1, one matrix per oriented edge between adjacent vertices,
/// and a sign per edge with eps(h) + eps(hbar) = 0.
#[derive(Debug, Clone)]
pub struct QuiverModule {
    pub m: usize,
    pub dims: Vec<usize>,
    /// arrows keyed by (source, target) vertex pairs, |source-target| = 1;
    /// matrix shape dims[target-1] x dims[source-1]
    pub arrows: BTreeMap<(usize, usize), Vec<Vec<Rat>>>,
    /// signs keyed by (i, j); defaults alternate: eps(i, i+1) = (-1)^(i+1)
    pub signs: BTreeMap<(usize, usize), i64>,
}

impl QuiverModule {
    pub fn new(m: usize, dims: Vec<usize>) -> Self {
        assert_eq!(dims.len(), m - 1);
        let mut signs = BTreeMap::new();
        for i in 1..m - 1 {
            let s = if i % 2 == 1 { 1 } else { -1 };
            signs.insert((i, i + 1), s);
            signs.insert((i + 1, i), -s);
        }
        QuiverModule { m, dims, arrows: BTreeMap::new(), signs }
    }

    pub fn zero_module(m: usize) -> Self {
        QuiverModule::new(m, vec![0; m - 1])
    }

    pub fn rank(&self) -> usize {
        self.m - 1
    }

    pub fn set_arrow(&mut self, from: usize, to: usize, mat: Vec<Vec<Rat>>) {
        assert_eq!(from.abs_diff(to), 1);
        assert_eq!(mat.len(), self.dims[to - 1]);
        for row in &mat {
            assert_eq!(row.len(), self.dims[from - 1]);
        }
        self.arrows.insert((from, to), mat);
    }

    pub fn arrow(&self, from: usize, to: usize) -> Vec<Vec<Rat>> {
        self.arrows.get(&(from, to)).cloned().unwrap_or_else(|| {
            vec![vec![Rat::zero(); self.dims[from - 1]]; self.dims[to - 1]]
        })
    }

    /// Dimension vector in alpha coordinates.
    pub fn dimvec(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// Per-vertex residues of the preprojective relation
    /// sum_j eps(i,j) M_(j,i) M_(i,j).
    pub fn preprojective_residues(&self) -> Vec<Vec<Vec<Rat>>> {
        let mut out = Vec::new();
        for i in 1..self.m {
            let d = self.dims[i - 1];
            let mut acc = vec![vec![Rat::zero(); d]; d];
            for j in [i.wrapping_sub(1), i + 1] {
                if j < 1 || j >= self.m {
                    continue;
                }
                let eps = *self.signs.get(&(i, j)).unwrap_or(&0);
                if eps == 0 {
                    continue;
                }
                let back = self.arrow(j, i);
                let fwd = self.arrow(i, j);
                for r in 0..d {
                    for c in 0..d {
                        let mut v = Rat::zero();
                        for k in 0..self.dims[j - 1] {
                            v += &back[r][k] * &fwd[k][c];
                        }
                        acc[r][c] += v * Rat::from_integer(Int::from(eps));
                    }
                }
            }
            out.push(acc);
        }
        out
    }

    pub fn check_preprojective(&self) -> Result<()> {
        for (i, res) in self.preprojective_residues().iter().enumerate() {
            if res.iter().any(|row| row.iter().any(|v| !v.is_zero())) {
                return Err(Error::Preproj(format!(
                    "preprojective relation fails at vertex {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Direct sum; sign functions must agree.
    pub fn direct_sum(&self, other: &QuiverModule) -> Result<QuiverModule> {
        if self.m != other.m || self.signs != other.signs {
            return Err(Error::Preproj("direct sum needs matching quiver data".into()));
        }
        let dims: Vec<usize> =
            self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let mut out = QuiverModule {
            m: self.m,
            dims,
            arrows: BTreeMap::new(),
            signs: self.signs.clone(),
        };
        for i in 1..self.m {
            for j in [i.wrapping_sub(1), i + 1] {
                if j < 1 || j >= self.m {
                    continue;
                }
                let a = self.arrow(i, j);
                let b = other.arrow(i, j);
                let rows = out.dims[j - 1];
                let cols = out.dims[i - 1];
                let mut mm = vec![vec![Rat::zero(); cols]; rows];
                for (r, row) in a.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        mm[r][c] = v.clone();
                    }
                }
                let (ro, co) = (self.dims[j - 1], self.dims[i - 1]);
                for (r, row) in b.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        mm[ro + r][co + c] = v.clone();
                    }
                }
                out.arrows.insert((i, j), mm);
            }
        }
        Ok(out)
    }

    /// Reduce mod p; panics if a denominator collapses.
    pub fn reduce_mod(&self, p: u64) -> FpModule {
        let f = Fp::new(p);
        let mut arrows = BTreeMap::new();
        for (&(i, j), m) in &self.arrows {
            let mut mat = FpMat::zero(self.dims[j - 1], self.dims[i - 1]);
            for (r, row) in m.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    mat.set(r, c, f.from_rat(v));
                }
            }
            arrows.insert((i, j), mat);
        }
        FpModule { p, m: self.m, dims: self.dims.clone(), arrows }
    }

    /// Weight-consistency of a declared Lusztig datum: dimvec = sum n_k beta_k.
    pub fn datum_weight_check(&self, n: &crate::tableaux::LusztigDatum) -> bool {
        n.m == self.m && n.weight() == self.dimvec()
    }
}

/// The same module data over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpModule {
    pub p: u64,
    pub m: usize,
    pub dims: Vec<usize>,
    pub arrows: BTreeMap<(usize, usize), FpMat>,
}

impl FpModule {
    fn arrow(&self, from: usize, to: usize) -> FpMat {
        self.arrows
            .get(&(from, to))
            .cloned()
            .unwrap_or_else(|| FpMat::zero(self.dims[to - 1], self.dims[from - 1]))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Submodule given by row-echelon bases per vertex; must be arrow-closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    pub bases: Vec<FpMat>,
}

impl Submodule {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.rows).collect()
    }

    pub fn dimvec(&self) -> Vec<i64> {
        self.bases.iter().map(|b| b.rows as i64).collect()
    }

    pub fn contains(&self, f: &Fp, other: &Submodule) -> bool {
        self.bases.iter().zip(&other.bases).all(|(big, small)| {
            (0..small.rows).all(|r| {
                let v: Vec<u64> = (0..small.cols).map(|c| small.get(r, c)).collect();
                big.row_space_contains(f, &v)
            })
        })
    }
}

/// Express a submodule as a standalone module in its own bases.
pub fn submodule_as_module(m: &FpModule, sub: &Submodule) -> FpModule {
    let f = Fp::new(m.p);
    let dims: Vec<usize> = sub.dims();
    let mut arrows = BTreeMap::new();
    for (&(i, j), mat) in &m.arrows {
        let bi = &sub.bases[i - 1];
        let bj = &sub.bases[j - 1];
        let mut out = FpMat::zero(bj.rows, bi.rows);
        for r in 0..bi.rows {
            let mut img = vec![0u64; m.dims[j - 1]];
            for (c, val) in img.iter_mut().enumerate() {
                let mut acc = 0u64;
                for k in 0..m.dims[i - 1] {
                    acc = f.add(acc, f.mul(mat.get(c, k), bi.get(r, k)));
                }
                *val = acc;
            }
            let x = solve_in_rows(&f, bj, &img).expect("submodule not closed under arrows");
            for (row, v) in x.iter().enumerate() {
                out.set(row, r, *v);
            }
        }
        arrows.insert((i, j), out);
    }
    FpModule { p: m.p, m: m.m, dims, arrows }
}

/// Coefficients expressing `v` in the rows of `basis`, if possible.
fn solve_in_rows(f: &Fp, basis: &FpMat, v: &[u64]) -> Option<Vec<u64>> {
    let k = basis.rows;
    let n = basis.cols;
    let mut aug = FpMat::zero(n, k + 1);
    for r in 0..n {
        for c in 0..k {
            aug.set(r, c, basis.get(c, r));
        }
        aug.set(r, k, v[r]);
    }
    let (rr, pivots) = aug.rref(f);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![0u64; k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = rr.get(row, k);
    }
    Some(x)
}

/// Submodules N of M with M/N simple at vertex i: kernels of the nonzero
/// functionals on M_i that vanish on every incoming arrow image.
pub fn top_quotients(m: &FpModule, vertex: usize) -> Vec<Submodule> {
    let f = Fp::new(m.p);
    let d = m.dims[vertex - 1];
    if d == 0 {
        return Vec::new();
    }
    let mut img_rows: Vec<Vec<u64>> = Vec::new();
    for j in [vertex.wrapping_sub(1), vertex + 1] {
        if j < 1 || j >= m.m {
            continue;
        }
        let a = m.arrow(j, vertex);
        for c in 0..m.dims[j - 1] {
            img_rows.push((0..d).map(|r| a.get(r, c)).collect());
        }
    }
    let mut img = FpMat::zero(img_rows.len(), d);
    for (r, row) in img_rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            img.set(r, c, v);
        }
    }
    let phi_space = img.kernel(&f);
    let t = phi_space.rows;
    if t == 0 {
        return Vec::new();
    }
    let mut reps: Vec<Vec<u64>> = Vec::new();
    enumerate_projective(&f, t, &mut reps);
    let mut out = Vec::new();
    for coeffs in reps {
        let mut phi = vec![0u64; d];
        for (k, &ck) in coeffs.iter().enumerate() {
            if ck == 0 {
                continue;
            }
            for c in 0..d {
                phi[c] = f.add(phi[c], f.mul(ck, phi_space.get(k, c)));
            }
        }
        let mut phimat = FpMat::zero(1, d);
        for (c, &v) in phi.iter().enumerate() {
            phimat.set(0, c, v);
        }
        let ker = phimat.kernel(&f).row_space(&f);
        let mut bases: Vec<FpMat> =
            (0..m.m - 1).map(|v| FpMat::identity(m.dims[v])).collect();
        bases[vertex - 1] = ker;
        out.push(Submodule { bases });
    }
    out
}

/// Canonical representatives of lines in F_p^t: first nonzero coordinate 1.
fn enumerate_projective(f: &Fp, t: usize, out: &mut Vec<Vec<u64>>) {
    for lead in 0..t {
        let free = t - lead - 1;
        let total = (f.p as usize).pow(free as u32);
        for mut idx in 0..total {
            let mut v = vec![0u64; t];
            v[lead] = 1;
            for slot in 0..free {
                v[lead + 1 + slot] = (idx % f.p as usize) as u64;
                idx /= f.p as usize;
            }
            out.push(v);
        }
    }
}

/// Number of F_p points of the composition-series variety of type `vi`.
pub fn count_flags_of_type(m: &FpModule, vi: &[usize]) -> u64 {
    if vi.is_empty() {
        return u64::from(m.is_zero());
    }
    let mut need = vec![0usize; m.m - 1];
    for &i in vi {
        need[i - 1] += 1;
    }
    if need != m.dims {
        return 0;
    }
    let mut total = 0u64;
    for sub in top_quotients(m, vi[0]) {
        let n = submodule_as_module(m, &sub);
        total += count_flags_of_type(&n, &vi[1..]);
    }
    total
}

/// Euler characteristic of the composition-series variety by point counts
/// over the given primes and interpolation at q = 1. The interpolant must
/// have degree at most (number of primes - 2): the last prime acts as the
/// consistency check.
pub fn chi_composition_series(m: &QuiverModule, vi: &[usize], primes: &[u64]) -> Result<i64> {
    assert!(primes.len() >= 3, "need at least three primes");
    let points: Vec<(Int, Int)> = primes
        .iter()
        .map(|&p| {
            let mp = m.reduce_mod(p);
            (Int::from(p), Int::from(count_flags_of_type(&mp, vi)))
        })
        .collect();
    let coeffs = interpolate_univariate(&points)
        .map_err(|_| Error::NonPolynomialCount(format!("sequence {vi:?}")))?;
    if coeffs.len() > primes.len().saturating_sub(1) {
        return Err(Error::NonPolynomialCount(format!(
            "sequence {vi:?}: degree exceeds prime budget"
        )));
    }
    let v = eval_int_poly(&coeffs, &Int::from(1));
    Ok(i64::try_from(v).expect("chi fits in i64"))
}

/// chi for every sequence in Seq(nu) of the module's dimension vector,
/// in canonical order.
pub fn chi_census(m: &QuiverModule, primes: &[u64]) -> Result<Vec<(Vec<usize>, i64)>> {
    use rayon::prelude::*;
    let nu: Vec<usize> = m.dims.clone();
    let seqs = crate::measures::seq(&nu);
    let out: Vec<Result<(Vec<usize>, i64)>> = seqs
        .into_par_iter()
        .map(|vi| {
            let chi = chi_composition_series(m, &vi, primes)?;
            Ok((vi, chi))
        })
        .collect();
    out.into_iter().collect()
}

/// All subspaces of F_p^d as echelon row bases (including 0 and the whole).
pub fn all_subspaces(f: &Fp, d: usize) -> Vec<FpMat> {
    let mut out = vec![FpMat::zero(0, d)];
    for k in 1..=d {
        for pivots in crate::measures::combinations_of(d, k) {
            let mut free_pos = Vec::new();
            for (r, &pc) in pivots.iter().enumerate() {
                for c in (pc + 1)..d {
                    if !pivots.contains(&c) {
                        free_pos.push((r, c));
                    }
                }
            }
            let total = (f.p as usize).pow(free_pos.len() as u32);
            for mut idx in 0..total {
                let mut mat = FpMat::zero(k, d);
                for (r, &pc) in pivots.iter().enumerate() {
                    mat.set(r, pc, 1);
                }
                for &(r, c) in &free_pos {
                    mat.set(r, c, (idx % f.p as usize) as u64);
                    idx /= f.p as usize;
                }
                out.push(mat);
            }
        }
    }
    out
}

/// All submodules of M over F_p, as echelon basis tuples.
pub fn all_submodules(m: &FpModule) -> Vec<Submodule> {
    let f = Fp::new(m.p);
    let per_vertex: Vec<Vec<FpMat>> = m.dims.iter().map(|&d| all_subspaces(&f, d)).collect();
    fn closed_so_far(m: &FpModule, f: &Fp, current: &[FpMat]) -> bool {
        let chosen = current.len();
        for (&(i, j), mat) in &m.arrows {
            if i <= chosen && j <= chosen {
                let bi = &current[i - 1];
                let bj = &current[j - 1];
                for r in 0..bi.rows {
                    let mut img = vec![0u64; m.dims[j - 1]];
                    for (c, val) in img.iter_mut().enumerate() {
                        let mut acc = 0u64;
                        for k in 0..m.dims[i - 1] {
                            acc = f.add(acc, f.mul(mat.get(c, k), bi.get(r, k)));
                        }
                        *val = acc;
                    }
                    if !bj.row_space_contains(f, &img) {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn rec(
        m: &FpModule,
        f: &Fp,
        per_vertex: &[Vec<FpMat>],
        current: &mut Vec<FpMat>,
        out: &mut Vec<Submodule>,
    ) {
        if current.len() == per_vertex.len() {
            out.push(Submodule { bases: current.clone() });
            return;
        }
        let v = current.len();
        for cand in &per_vertex[v] {
            current.push(cand.clone());
            if closed_so_far(m, f, current) {
                rec(m, f, per_vertex, current, out);
            }
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<FpMat> = Vec::new();
    rec(m, &f, &per_vertex, &mut current, &mut out);
    out
}

/// Dimension vectors of submodules over the primes 2 and 3 (union); the
/// union is flagged experimental at the interface level.
pub fn submodule_dimvecs(m: &QuiverModule) -> Vec<Vec<i64>> {
    let mut set: Vec<Vec<i64>> = Vec::new();
    for p in [2u64, 3u64] {
        let mp = m.reduce_mod(p);
        for s in all_submodules(&mp) {
            let dv = s.dimvec();
            if !set.contains(&dv) {
                set.push(dv);
            }
        }
    }
    set.sort();
    set
}

/// Lattice points nu - dimvec(N) spanning the polytope of the module.
pub fn hn_polytope_points(m: &QuiverModule) -> Vec<Vec<i64>> {
    let nu = m.dimvec();
    let mut pts: Vec<Vec<i64>> = submodule_dimvecs(m)
        .into_iter()
        .map(|dv| nu.iter().zip(&dv).map(|(a, b)| a - b).collect())
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

/// F_p count of flag chains M >= N_1 >= ... >= N_n >= 0 bucketed by the
/// weight of the chain: the sum over the middles of dimvec(M) - dimvec(N_j)
/// (the torus weight carried by the matching sections of the cycle).
pub fn count_flag_chains_by_weight(m: &FpModule, n: usize) -> BTreeMap<Vec<i64>, u64> {
    let f = Fp::new(m.p);
    let nu: Vec<i64> = m.dims.iter().map(|&d| d as i64).collect();
    let subs = all_submodules(m);
    let k = subs.len();
    let codim = |s: &Submodule| -> Vec<i64> {
        nu.iter().zip(s.dimvec()).map(|(a, b)| a - b).collect()
    };
    let mut leq = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            if subs[a]
                .dims()
                .iter()
                .zip(subs[b].dims())
                .all(|(x, y)| *x <= y)
            {
                leq[a][b] = subs[b].contains(&f, &subs[a]);
            }
        }
    }
    let mut h: Vec<BTreeMap<Vec<i64>, u64>> = subs
        .iter()
        .map(|s| {
            let mut t = BTreeMap::new();
            t.insert(codim(s), 1u64);
            t
        })
        .collect();
    for _ in 1..n {
        let mut next: Vec<BTreeMap<Vec<i64>, u64>> = vec![BTreeMap::new(); k];
        for top in 0..k {
            let base = codim(&subs[top]);
            for inner in 0..k {
                if !leq[inner][top] {
                    continue;
                }
                for (w, c) in &h[inner] {
                    let key: Vec<i64> = base.iter().zip(w).map(|(a, b)| a + b).collect();
                    *next[top].entry(key).or_insert(0) += c;
                }
            }
        }
        h = next;
    }
    let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for table in &h {
        for (w, c) in table {
            *out.entry(w.clone()).or_insert(0) += c;
        }
    }
    out
}

/// chi of F_{n,nu}(M) for all nu at once, via q-interpolation over `primes`.
pub fn chi_flags(m: &QuiverModule, n: usize, primes: &[u64]) -> Result<BTreeMap<Vec<i64>, i64>> {
    if n == 0 {
        let mut out = BTreeMap::new();
        out.insert(vec![0i64; m.rank()], 1);
        return Ok(out);
    }
    let tables: Vec<BTreeMap<Vec<i64>, u64>> = primes
        .iter()
        .map(|&p| count_flag_chains_by_weight(&m.reduce_mod(p), n))
        .collect();
    let mut keys: Vec<Vec<i64>> = Vec::new();
    for t in &tables {
        for k in t.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let mut out = BTreeMap::new();
    for key in keys {
        let points: Vec<(Int, Int)> = primes
            .iter()
            .zip(&tables)
            .map(|(&p, t)| (Int::from(p), Int::from(t.get(&key).copied().unwrap_or(0))))
            .collect();
        let coeffs = interpolate_univariate(&points)
            .map_err(|_| Error::NonPolynomialCount(format!("weight {key:?}")))?;
        if coeffs.len() > primes.len().saturating_sub(1) {
            return Err(Error::NonPolynomialCount(format!(
                "weight {key:?}: degree exceeds prime budget"
            )));
        }
        let v = eval_int_poly(&coeffs, &Int::from(1));
        let v = i64::try_from(v).expect("chi fits in i64");
        if v != 0 {
            out.insert(key, v);
        }
    }
    Ok(out)
}

/// Total chi of F_n(M): sum over weights.
pub fn chi_flags_total(m: &QuiverModule, n: usize, primes: &[u64]) -> Result<i64> {
    Ok(chi_flags(m, n, primes)?.values().sum())
}

// ---------------------------------------------------------------------------
// case-study modules

fn q(v: i64) -> Rat {
    crate::rat(v)
}

/// The rigid (1,2,2,1)-module on A4 whose kernel and two incoming images in
/// the middle vertex are three distinct lines.
pub fn case1_module() -> QuiverModule {
    let mut m = QuiverModule::new(5, vec![1, 2, 2, 1]);
    m.set_arrow(1, 2, vec![vec![q(1)], vec![q(0)]]);
    m.set_arrow(3, 2, vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
    m.set_arrow(2, 3, vec![vec![q(0), q(0)], vec![q(1), q(1)]]);
    m.set_arrow(3, 4, vec![vec![q(1), q(0)]]);
    m.set_arrow(4, 3, vec![vec![q(0)], vec![q(-1)]]);
    m.check_preprojective().expect("case-1 module relation");
    m
}

/// The one-parameter family of (1,2,2,2,1)-modules on A5; rejects the
/// degenerate parameters 0 and 1.
pub fn case2_module(a: i64) -> Result<QuiverModule> {
    if a == 0 || a == 1 {
        return Err(Error::Preproj(format!("parameter a = {a} is degenerate")));
    }
    let mut m = QuiverModule::new(6, vec![1, 2, 2, 2, 1]);
    m.set_arrow(2, 1, vec![vec![q(1), q(0)]]);
    m.set_arrow(1, 2, vec![vec![q(0)], vec![q(-a)]]);
    m.set_arrow(2, 3, vec![vec![q(1), q(0)], vec![q(0), q(0)]]);
    m.set_arrow(3, 2, vec![vec![q(0), q(0)], vec![q(a), q(1)]]);
    m.set_arrow(4, 3, vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
    m.set_arrow(3, 4, vec![vec![q(0), q(0)], vec![q(1), q(1)]]);
    m.set_arrow(4, 5, vec![vec![q(1), q(0)]]);
    m.set_arrow(5, 4, vec![vec![q(0)], vec![q(-1)]]);
    m.check_preprojective()?;
    Ok(m)
}

/// Primes usable for counting over the case-2 family at parameter a.
pub fn case2_valid_primes(a: i64, how_many: usize) -> Vec<u64> {
    [2u64, 3, 5, 7, 11, 13, 17]
        .into_iter()
        .filter(|&p| {
            let r = a.rem_euclid(p as i64);
            r != 0 && r != 1
        })
        .take(how_many)
        .collect()
}

/// Standard injective module at omega_2 for A5.
pub fn injective_omega2() -> QuiverModule {
    let mut m = QuiverModule::new(6, vec![1, 2, 2, 2, 1]);
    m.set_arrow(1, 2, vec![vec![q(1)], vec![q(0)]]);
    m.set_arrow(2, 1, vec![vec![q(0), q(1)]]);
    m.set_arrow(2, 3, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    m.set_arrow(3, 2, vec![vec![q(0), q(-1)], vec![q(0), q(0)]]);
    m.set_arrow(3, 4, vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    m.set_arrow(4, 3, vec![vec![q(0), q(1)], vec![q(0), q(0)]]);
    m.set_arrow(4, 5, vec![vec![q(0), q(1)]]);
    m.set_arrow(5, 4, vec![vec![q(-1)], vec![q(0)]]);
    m.check_preprojective().expect("injective omega2 relation");
    m
}

/// Standard injective module at omega_4 for A5 (the mirror picture).
pub fn injective_omega4() -> QuiverModule {
    let mut m = QuiverModule::new(6, vec![1, 2, 2, 2, 1]);
    m.set_arrow(2, 1, vec![vec![q(1), q(0)]]);
    m.set_arrow(1, 2, vec![vec![q(0)], vec![q(1)]]);
    m.set_arrow(3, 2, vec![vec![q(1), q(0)], vec![q(0), q(-1)]]);
    m.set_arrow(2, 3, vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
    m.set_arrow(4, 3, vec![vec![q(1), q(0)], vec![q(0), q(-1)]]);
    m.set_arrow(3, 4, vec![vec![q(0), q(0)], vec![q(1), q(0)]]);
    m.set_arrow(5, 4, vec![vec![q(0)], vec![q(-1)]]);
    m.set_arrow(4, 5, vec![vec![q(1), q(0)]]);
    m.check_preprojective().expect("injective omega4 relation");
    m
}

/// Simple module at a vertex.
pub fn simple_module(m: usize, vertex: usize) -> QuiverModule {
    let mut dims = vec![0usize; m - 1];
    dims[vertex - 1] = 1;
    QuiverModule::new(m, dims)
}

/// The A2 module 1 -> 2.
pub fn module_one_to_two() -> QuiverModule {
    let mut m = QuiverModule::new(3, vec![1, 1]);
    m.set_arrow(1, 2, vec![vec![q(1)]]);
    m.check_preprojective().expect("1->2 relation");
    m
}

/// The A2 module 1 <- 2.
pub fn module_two_to_one() -> QuiverModule {
    let mut m = QuiverModule::new(3, vec![1, 1]);
    m.set_arrow(2, 1, vec![vec![q(1)]]);
    m.check_preprojective().expect("1<-2 relation");
    m
}
