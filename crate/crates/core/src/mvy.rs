//! The slice-to-lattice map: exact polynomial-in-t matrix representatives of
//! slice points, valuation minors and Lusztig data of lattice points, and
//! the Pluecker frame / homogenization pipeline that produces projective
//! cycle ideals.
//!
//! Convention note. The map sends the slice entry block (s, a) of A (s < a)
//! to the (a, s) entry of g, so g = t^mu + a(t) is lower triangular; the
//! valuation minors Delta act on this g directly. The Pluecker frame is
//! built from the transpose (upper triangular) representative; that choice
//! reproduces the published coordinate tables.

use crate::error::{Error, Result};
use crate::orbital::{minor_det, SlicePattern};
use crate::poly::groebner::normal_form;
use crate::poly::ideal::Ideal;
use crate::poly::{Mono, MonomialOrder, Poly, PolyRing};
use crate::tableaux::{root_order, LusztigDatum, Tableau};
use crate::Rat;
use itertools::Itertools;
use num::traits::{One, Zero};

/// Univariate polynomial in t over Q, dense ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPoly(pub Vec<Rat>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            TPoly::zero()
        } else {
            TPoly(vec![c])
        }
    }

    pub fn t_power(k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = Rat::one();
        TPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    fn trim(mut self) -> Self {
        while self.0.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![Rat::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        TPoly(v).trim()
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        TPoly(v).trim()
    }

    /// t-adic valuation; None for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }
}

/// m x m matrix of polynomials in t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub m: usize,
    pub entries: Vec<Vec<TPoly>>,
}

impl LaurentMatrix {
    pub fn t_mu(mu: &[usize]) -> Self {
        let m = mu.len();
        let mut entries = vec![vec![TPoly::zero(); m]; m];
        for (i, &k) in mu.iter().enumerate() {
            entries[i][i] = TPoly::t_power(k);
        }
        LaurentMatrix { m, entries }
    }
}

/// g = t^mu + a(t), with the block (s, a) slice coordinates feeding the
/// (a, s) entry: a_{as}(t) = -(v_1 + v_2 t + ...).
pub fn mvy_map(pattern: &SlicePattern, point: &[Rat]) -> LaurentMatrix {
    let mut g = LaurentMatrix::t_mu(&pattern.mu);
    for (idx, c) in pattern.coords.iter().enumerate() {
        let (s, a) = c.block;
        let v = &point[idx];
        if v.is_zero() {
            continue;
        }
        let row = a - 1;
        let col = s - 1;
        let mut coeffs = vec![Rat::zero(); c.k];
        coeffs[c.k - 1] = -v.clone();
        g.entries[row][col] = g.entries[row][col].add(&TPoly(coeffs).trim());
    }
    g
}

/// Invert the lattice map: the matrix of left multiplication by t on
/// L0 / g L0 in the basis ([e_i t^j], j < mu_i), transposed back into slice
/// coordinates. Rejects representatives outside the slice form.
pub fn inverse_mvy(g: &LaurentMatrix, mu: &[usize]) -> Result<Vec<Rat>> {
    let m = mu.len();
    for i in 0..m {
        for j in 0..m {
            let e = &g.entries[i][j];
            if i == j {
                if e != &TPoly::t_power(mu[i]) {
                    return Err(Error::Mvy(format!(
                        "diagonal entry ({i},{i}) is not t^{}",
                        mu[i]
                    )));
                }
            } else if i < j {
                if !e.is_zero() {
                    return Err(Error::Mvy("representative is not lower triangular".into()));
                }
            } else if e.0.len() > mu[j] {
                return Err(Error::Mvy(
                    "quotient L0/gL0 is not N-dimensional (entry degree too big)".into(),
                ));
            }
        }
    }
    let offsets: Vec<usize> = {
        let mut v = vec![0usize];
        for &x in mu {
            v.push(v.last().unwrap() + x);
        }
        v
    };
    let n: usize = mu.iter().sum();
    let mut t_action = vec![vec![Rat::zero(); n]; n];
    for i in 0..m {
        for j in 0..mu[i] {
            let src = offsets[i] + j;
            if j + 1 < mu[i] {
                t_action[offsets[i] + j + 1][src] = Rat::one();
            } else {
                // [t^{mu_i} e_i] = -sum_{r > i} g_{ri}(t) [e_r t^*] mod g L0
                for r in (i + 1)..m {
                    let e = &g.entries[r][i];
                    for (k, c) in e.0.iter().enumerate() {
                        if !c.is_zero() {
                            t_action[offsets[r] + k][src] -= c;
                        }
                    }
                }
            }
        }
    }
    let pattern = SlicePattern::new(mu)?;
    let mut out = Vec::with_capacity(pattern.coords.len());
    for c in &pattern.coords {
        out.push(t_action[c.col][c.row].clone());
    }
    Ok(out)
}

/// Delta_[a,b](g): minimum over column subsets K of size b-a+1 of the
/// t-valuation of the minor on rows a..b and columns K. None encodes
/// +infinity (all minors vanish).
pub fn delta_valuation(g: &LaurentMatrix, a: usize, b: usize) -> Option<i64> {
    if b < a {
        return Some(0);
    }
    let i = b - a + 1;
    let rows: Vec<usize> = (a - 1..b).collect();
    let mut best: Option<i64> = None;
    for cols in (0..g.m).combinations(i) {
        let det = tpoly_det(&g.entries, &rows, &cols);
        if let Some(v) = det.valuation() {
            best = Some(best.map_or(v as i64, |b| b.min(v as i64)));
        }
    }
    best
}

fn tpoly_det(m: &[Vec<TPoly>], rows: &[usize], cols: &[usize]) -> TPoly {
    if rows.is_empty() {
        return TPoly::constant(Rat::one());
    }
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut best_c = 0;
    let mut best = usize::MAX;
    for (ci, &c) in cols.iter().enumerate() {
        let cnt = rows.iter().filter(|&&r| !m[r][c].is_zero()).count();
        if cnt < best {
            best = cnt;
            best_c = ci;
        }
    }
    if best == 0 {
        return TPoly::zero();
    }
    let c = cols[best_c];
    let rest_cols: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != best_c)
        .map(|(_, &x)| x)
        .collect();
    let mut acc = TPoly::zero();
    for (ri, &r) in rows.iter().enumerate() {
        if m[r][c].is_zero() {
            continue;
        }
        let rest_rows: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != ri)
            .map(|(_, &x)| x)
            .collect();
        let sub = tpoly_det(m, &rest_rows, &rest_cols);
        if sub.is_zero() {
            continue;
        }
        let term = m[r][c].mul(&sub);
        acc = if (ri + best_c) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Lusztig datum of a lattice point by inclusion-exclusion of the valuation
/// minors: the entry at alpha_a + ... + alpha_b reads the interval data
/// [a, b+1], [a, b], [a+1, b+1], [a+1, b].
pub fn lusztig_datum_of_point(g: &LaurentMatrix) -> Result<LusztigDatum> {
    let m = g.m;
    let mut entries = Vec::new();
    for (a, b) in root_order(m) {
        let d = |x: usize, y: usize| -> Result<i64> {
            delta_valuation(g, x, y)
                .ok_or_else(|| Error::Mvy(format!("all minors vanish for [{x},{y}]")))
        };
        let n = d(a, b + 1)? - d(a, b)? - d(a + 1, b + 1)? + d(a + 1, b)?;
        if n < 0 {
            return Err(Error::Mvy(format!("negative entry n_({a},{b}) = {n}")));
        }
        entries.push(n as u64);
    }
    LusztigDatum::new(m, entries)
}

/// Column label of the frame: (i, j) stands for the basis vector [e_i t^j].
pub type ColId = (usize, usize);

/// The lattice point modulo t^p L0 as a row frame with symbolic entries in
/// the slice ring. Row block i has p - mu_i rows spanning [t^r g e_i] for
/// the transposed (upper triangular) representative.
#[derive(Debug, Clone)]
pub struct PlueckerFrame {
    pub p: usize,
    pub m: usize,
    pub rows: Vec<Vec<Poly>>,
    pub cols: Vec<ColId>,
    pub pivots: Vec<ColId>,
}

impl PlueckerFrame {
    pub fn col_index(&self, id: &ColId) -> Option<usize> {
        self.cols.iter().position(|c| c == id)
    }
}

/// Build the symbolic frame for a slice pattern with the given p >= mu_i.
pub fn pluecker_frame(pattern: &SlicePattern, ring: &PolyRing, p: usize) -> Result<PlueckerFrame> {
    let m = pattern.m();
    if pattern.mu.iter().any(|&x| x > p) {
        return Err(Error::Mvy("p must be at least every part of mu".into()));
    }
    let cols: Vec<ColId> = (1..=m)
        .flat_map(|i| (0..p).map(move |j| (i, j)))
        .collect();
    // upper-triangular representative: entry (s, a) for s < a collects the
    // block (s, a) coordinates; diagonal t^{mu_i}
    let mut gt = vec![vec![Vec::<(usize, Poly)>::new(); m]; m];
    for i in 0..m {
        gt[i][i].push((pattern.mu[i], Poly::one(ring)));
    }
    for (idx, c) in pattern.coords.iter().enumerate() {
        let (s, a) = c.block;
        gt[s - 1][a - 1].push((c.k - 1, Poly::var(ring, idx).neg()));
    }
    let mut rows = Vec::new();
    let mut pivots = Vec::new();
    for i in 1..=m {
        for r in 0..p - pattern.mu[i - 1] {
            let mut row = vec![Poly::zero(); m * p];
            for (j, col_entries) in (0..m).map(|j| (j, &gt[j][i - 1])) {
                for (tp, coef) in col_entries {
                    let l = tp + r;
                    if l < p {
                        let pos = j * p + l;
                        row[pos] = row[pos].add(ring, coef);
                    }
                }
            }
            pivots.push((i, pattern.mu[i - 1] + r));
            rows.push(row);
        }
    }
    Ok(PlueckerFrame { p, m, rows, cols, pivots })
}

/// Minor of the frame on the listed columns, in the given order (the order
/// fixes the sign).
pub fn frame_minor(frame: &PlueckerFrame, ring: &PolyRing, cols: &[ColId]) -> Result<Poly> {
    let k = frame.rows.len();
    if cols.len() != k {
        return Err(Error::Mvy(format!("minor needs {k} columns")));
    }
    let idx: Vec<usize> = cols
        .iter()
        .map(|c| {
            frame
                .col_index(c)
                .ok_or_else(|| Error::Mvy(format!("unknown column {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<usize> = (0..k).collect();
    Ok(minor_det(ring, &frame.rows, &rows, &idx))
}

/// Evaluate the symbolic frame at a rational slice point.
pub fn frame_at(frame: &PlueckerFrame, point: &[Rat]) -> Vec<Vec<Rat>> {
    frame
        .rows
        .iter()
        .map(|row| row.iter().map(|p| p.eval(point)).collect())
        .collect()
}

/// A named projective coordinate: a column set and its restriction to the
/// cycle (normal form of the frame minor mod the orbital ideal).
#[derive(Debug, Clone)]
pub struct CycleCoordinate {
    pub name: String,
    pub cols: Vec<ColId>,
    pub value: Poly,
}

/// Output of the projective pipeline.
#[derive(Debug)]
pub struct ProjectiveCycle {
    pub frame: PlueckerFrame,
    pub coords: Vec<CycleCoordinate>,
    /// ring of the b-variables (b0 first, weight zero)
    pub ring: PolyRing,
    /// homogeneous ideal of the cycle in that ring
    pub ideal: Ideal,
    /// the affine kernel before homogenization, in the same ring
    pub affine_kernel: Ideal,
}

/// Compose: orbital ideal -> frame minors -> kernel by elimination ->
/// homogenize. Coordinates are the distinct nonvanishing minor classes; the
/// pivot minor (identically 1 on the slice) is the homogenization variable.
pub fn projective_cycle_ideal(t: &Tableau) -> Result<ProjectiveCycle> {
    let (pattern, ideal) = crate::orbital::orbital_ideal(t)?;
    let shape = t.shape();
    let p = shape.first().copied().unwrap_or(0);
    if p == 0 {
        return Err(Error::Mvy("empty tableau has no projective cycle".into()));
    }
    projective_cycle_from_ideal(&pattern, &ideal, p)
}

/// The distinct nonvanishing minor classes of a cycle, up to sign; the pivot
/// class comes first.
pub fn nonvanishing_classes(
    pattern: &SlicePattern,
    ideal: &Ideal,
    p: usize,
) -> Result<(PlueckerFrame, Vec<CycleCoordinate>)> {
    let ring = ideal.ring.clone();
    let frame = pluecker_frame(pattern, &ring, p)?;
    let k = frame.rows.len();
    let gb = ideal.gb();
    let mut coords: Vec<CycleCoordinate> = Vec::new();
    let pivot_cols = frame.pivots.clone();
    coords.push(CycleCoordinate {
        name: "b0".into(),
        cols: pivot_cols.clone(),
        value: Poly::one(&ring),
    });
    for cols in frame.cols.clone().into_iter().combinations(k) {
        if cols == pivot_cols {
            continue;
        }
        let minor = frame_minor(&frame, &ring, &cols)?;
        if minor.is_zero() {
            continue;
        }
        let nf = if gb.is_empty() { minor } else { normal_form(&ring, &minor, &gb) };
        if nf.is_zero() {
            continue;
        }
        let neg = nf.neg();
        if coords.iter().any(|c| c.value == nf || c.value == neg) {
            continue;
        }
        let name = format!("b{}", coords.len());
        coords.push(CycleCoordinate { name, cols, value: nf });
    }
    Ok((frame, coords))
}

pub fn projective_cycle_from_ideal(
    pattern: &SlicePattern,
    ideal: &Ideal,
    p: usize,
) -> Result<ProjectiveCycle> {
    let (frame, coords) = nonvanishing_classes(pattern, ideal, p)?;
    cycle_from_coords(pattern, ideal, frame, coords)
}

/// Build the cycle over an explicitly given coordinate list: name, columns,
/// and a sign fixing the basis vector +-v_C. The first entry must restrict
/// to the unit.
pub fn projective_cycle_with_coords(
    pattern: &SlicePattern,
    ideal: &Ideal,
    p: usize,
    given: &[(String, Vec<ColId>, i8)],
) -> Result<ProjectiveCycle> {
    let ring = ideal.ring.clone();
    let frame = pluecker_frame(pattern, &ring, p)?;
    let gb = ideal.gb();
    let mut coords = Vec::new();
    for (idx, (name, cols, sign)) in given.iter().enumerate() {
        let minor = frame_minor(&frame, &ring, cols)?;
        let minor = if *sign < 0 { minor.neg() } else { minor };
        let nf = if gb.is_empty() { minor } else { normal_form(&ring, &minor, &gb) };
        if idx == 0 {
            if !nf.leading().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
                || nf.terms.len() != 1
            {
                return Err(Error::Mvy("first coordinate must restrict to 1".into()));
            }
        } else if nf.is_zero() {
            return Err(Error::Mvy(format!("coordinate {name} vanishes on the cycle")));
        }
        coords.push(CycleCoordinate { name: name.clone(), cols: cols.clone(), value: nf });
    }
    cycle_from_coords(pattern, ideal, frame, coords)
}

fn cycle_from_coords(
    pattern: &SlicePattern,
    ideal: &Ideal,
    frame: PlueckerFrame,
    coords: Vec<CycleCoordinate>,
) -> Result<ProjectiveCycle> {
    let ring = ideal.ring.clone();
    let rank = pattern.m() - 1;
    let mut weights: Vec<Vec<i64>> = vec![vec![0; rank]];
    for c in &coords[1..] {
        let w = c
            .value
            .homogeneous_weight(&ring)
            .ok_or_else(|| Error::Mvy(format!("minor class {} not weight-homogeneous", c.name)))?;
        weights.push(w);
    }
    let b_ring = PolyRing::with_weights(
        coords.iter().map(|c| c.name.clone()).collect(),
        MonomialOrder::DegRevLex,
        weights,
        rank,
    );
    // eliminate the slice variables from I + (b_C - f_C)
    let n_a = ring.nvars();
    let mut vars = ring.vars.clone();
    vars.extend(coords[1..].iter().map(|c| c.name.clone()));
    let elim_ring = PolyRing::new(vars, MonomialOrder::Block { split: n_a });
    let a_map: Vec<usize> = (0..n_a).collect();
    let mut gens: Vec<Poly> =
        ideal.gens.iter().map(|g| g.map_vars(&elim_ring, &a_map)).collect();
    for (bi, c) in coords[1..].iter().enumerate() {
        let b_var = Poly::var(&elim_ring, n_a + bi);
        let val = c.value.map_vars(&elim_ring, &a_map);
        gens.push(b_var.sub(&elim_ring, &val));
    }
    let big = Ideal::new(elim_ring, gens);
    let affine = big.eliminate(&(0..n_a).collect::<Vec<_>>());
    let hom = affine.homogenize("b0");
    let map: Vec<usize> = (0..hom.ring.nvars())
        .map(|i| {
            b_ring
                .var_index(&hom.ring.vars[i])
                .expect("homogenized variable missing from b-ring")
        })
        .collect();
    let gens: Vec<Poly> = hom.gens.iter().map(|g| g.map_vars(&b_ring, &map)).collect();
    let proj = Ideal::new(b_ring.clone(), gens);
    let amap: Vec<usize> = (0..affine.ring.nvars())
        .map(|i| b_ring.var_index(&affine.ring.vars[i]).expect("kernel variable"))
        .collect();
    let a_in_b: Vec<Poly> = affine.gens.iter().map(|g| g.map_vars(&b_ring, &amap)).collect();
    let affine_kernel = Ideal::new(b_ring.clone(), a_in_b);
    Ok(ProjectiveCycle { frame, coords, ring: b_ring, ideal: proj, affine_kernel })
}

/// Graded dimensions of the projective coordinate ring per degree.
pub fn cycle_hilbert_values(
    cycle: &ProjectiveCycle,
    degrees: &[usize],
) -> Result<Vec<(usize, crate::Int)>> {
    crate::poly::hilbert::hilbert_values(&cycle.ideal, degrees)
}

/// Per-alpha-weight dimensions in a fixed degree, from standard monomials of
/// the initial ideal (valid because the ideal is weight homogeneous).
pub fn cycle_weight_dims(cycle: &ProjectiveCycle, degree: u32) -> Vec<(Vec<i64>, usize)> {
    use std::collections::BTreeMap;
    let init = cycle.ideal.initial_ideal(MonomialOrder::DegRevLex);
    let monos: Vec<Mono> =
        init.gens.iter().map(|g| g.leading().unwrap().0.clone()).collect();
    let std = crate::poly::hilbert::standard_monomials(&monos, cycle.ring.nvars(), degree);
    let mut buckets: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for s in std {
        *buckets.entry(cycle.ring.mono_weight(&s)).or_insert(0) += 1;
    }
    buckets.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn mvy_image_published_223() {
        let p = SlicePattern::new(&[2, 2, 1]).unwrap();
        let (a, b, c, d) = (rat(0), rat(3), rat(5), rat(0));
        let g = mvy_map(&p, &[a.clone(), b.clone(), c.clone(), d.clone()]);
        assert_eq!(g.entries[0][0], TPoly::t_power(2));
        assert_eq!(g.entries[1][1], TPoly::t_power(2));
        assert_eq!(g.entries[2][2], TPoly::t_power(1));
        assert_eq!(g.entries[1][0], TPoly(vec![rat(0), rat(-3)]));
        assert_eq!(g.entries[2][0], TPoly(vec![rat(-5)]));
        assert_eq!(g.entries[2][1], TPoly::zero());
        let back = inverse_mvy(&g, &[2, 2, 1]).unwrap();
        assert_eq!(back, vec![a, b, c, d]);
    }

    #[test]
    fn jordan_point_maps_to_t_mu() {
        let p = SlicePattern::new(&[3, 1]).unwrap();
        let zeros = vec![rat(0); p.coords.len()];
        let g = mvy_map(&p, &zeros);
        assert_eq!(g, LaurentMatrix::t_mu(&[3, 1]));
        assert_eq!(inverse_mvy(&g, &[3, 1]).unwrap(), zeros);
    }

    #[test]
    fn delta_on_t_mu_and_identity() {
        let g = LaurentMatrix::t_mu(&[3, 2, 1]);
        assert_eq!(delta_valuation(&g, 1, 1), Some(3));
        assert_eq!(delta_valuation(&g, 1, 2), Some(5));
        assert_eq!(delta_valuation(&g, 2, 3), Some(3));
        assert_eq!(delta_valuation(&g, 1, 3), Some(6));
        let id = LaurentMatrix::t_mu(&[0, 0, 0]);
        assert_eq!(delta_valuation(&id, 1, 2), Some(0));
        assert_eq!(
            lusztig_datum_of_point(&LaurentMatrix::t_mu(&[2, 2, 1])).unwrap(),
            LusztigDatum::zero(3)
        );
    }

    #[test]
    fn leitfaden_point_datum() {
        let p = SlicePattern::new(&[1, 1, 1]).unwrap();
        let g = mvy_map(&p, &[rat(2), rat(7), rat(0)]);
        let n = lusztig_datum_of_point(&g).unwrap();
        assert_eq!(n.entries, vec![1, 0, 1]);
    }

    #[test]
    fn ad2_sampling_small_cases() {
        use rand::{Rng, SeedableRng};
        for seed in [7u64, 20260809u64] {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut draw = |exclude_zero: bool| -> Rat {
                loop {
                    let v: i64 = rng.gen_range(-9..=9);
                    if !(exclude_zero && v == 0) {
                        return rat(v);
                    }
                }
            };
            for _ in 0..20 {
                let t = tab(&[&[1, 2], &[3]]);
                let p = SlicePattern::new(&[1, 1, 1]).unwrap();
                let point = vec![draw(true), draw(true), rat(0)];
                let g = mvy_map(&p, &point);
                assert_eq!(
                    lusztig_datum_of_point(&g).unwrap(),
                    crate::tableaux::lusztig_datum(&t, 3).unwrap()
                );
                let t2 = tab(&[&[1, 2], &[3, 4]]);
                let p2 = SlicePattern::new(&[1, 1, 1, 1]).unwrap();
                let (a, b, c, f) = (draw(true), draw(true), draw(true), draw(true));
                let e = -(b.clone() * f.clone()) / a.clone();
                let point2 = vec![a, b, c, rat(0), e, f];
                let g2 = mvy_map(&p2, &point2);
                assert_eq!(
                    lusztig_datum_of_point(&g2).unwrap(),
                    crate::tableaux::lusztig_datum(&t2, 4).unwrap()
                );
            }
        }
    }

    #[test]
    fn frame_for_ups_example() {
        let pat = SlicePattern::new(&[2, 2, 1]).unwrap();
        let ring = pat.ring();
        let frame = pluecker_frame(&pat, &ring, 3).unwrap();
        assert_eq!(frame.rows.len(), 4);
        assert_eq!(frame.cols.len(), 9);
        assert_eq!(frame.pivots, vec![(1, 2), (2, 2), (3, 1), (3, 2)]);
        let pivot_minor = frame_minor(&frame, &ring, &frame.pivots.clone()).unwrap();
        assert_eq!(pivot_minor, Poly::one(&ring));
        for row in &frame.rows {
            for (ci, entry) in row.iter().enumerate() {
                if frame.pivots.contains(&frame.cols[ci]) {
                    continue;
                }
                assert!(
                    entry.is_zero() || entry.terms.len() == 1,
                    "non-monomial frame entry"
                );
            }
        }
    }

    #[test]
    fn frame_at_jordan_point_is_pivot_matrix() {
        let pat = SlicePattern::new(&[2, 2, 1]).unwrap();
        let ring = pat.ring();
        let frame = pluecker_frame(&pat, &ring, 3).unwrap();
        let zeros = vec![rat(0); pat.coords.len()];
        let b = frame_at(&frame, &zeros);
        for (r, row) in b.iter().enumerate() {
            for (ci, v) in row.iter().enumerate() {
                let expect = if frame.cols[ci] == frame.pivots[r] { rat(1) } else { rat(0) };
                assert_eq!(*v, expect);
            }
        }
    }

    #[test]
    fn frame_for_case1_has_published_shape() {
        let pat = SlicePattern::new(&[1; 5]).unwrap();
        let ring = pat.ring();
        let frame = pluecker_frame(&pat, &ring, 2).unwrap();
        assert_eq!(frame.rows.len(), 5);
        assert_eq!(frame.pivots, (1..=5).map(|i| (i, 1)).collect::<Vec<_>>());
        // b1 = Delta_{1,3,4,5,bar 1} = a1
        let cols = vec![(1, 1), (3, 1), (4, 1), (5, 1), (1, 0)];
        let minor = frame_minor(&frame, &ring, &cols).unwrap();
        assert_eq!(minor.to_string_in(&ring), "a1");
        // b9 = Delta_{1,2,3,bar1,bar2} = a3 a7 - a4 a6
        let cols9 = vec![(1, 1), (2, 1), (3, 1), (1, 0), (2, 0)];
        let minor9 = frame_minor(&frame, &ring, &cols9).unwrap();
        let expect = crate::poly::parse_poly(&ring, "a3*a7 - a4*a6").unwrap();
        assert_eq!(minor9, expect);
    }

    #[test]
    fn a2_projective_cycle_is_plane() {
        let cycle = projective_cycle_ideal(&tab(&[&[1, 2], &[3]])).unwrap();
        let dims = cycle_hilbert_values(&cycle, &[0, 1, 2, 3, 4]).unwrap();
        for (d, v) in dims {
            let expect = crate::poly::hilbert::binomial(d + 2, 2);
            assert_eq!(v, expect, "degree {d}");
        }
    }

    #[test]
    fn roundtrip_case1_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let p = SlicePattern::new(&[1; 5]).unwrap();
        for _ in 0..10 {
            let point: Vec<Rat> = (0..p.coords.len())
                .map(|_| rat(rng.gen_range(-9..=9)))
                .collect();
            let g = mvy_map(&p, &point);
            assert_eq!(inverse_mvy(&g, &[1; 5]).unwrap(), point);
        }
    }
}
