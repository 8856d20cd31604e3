//! The slice T_mu through the Jordan form J_mu intersected with the upper
//! triangular matrices, and generation of the generalized orbital variety
//! ideal of a tableau by box-by-box rank conditions with saturation by rank
//! witnesses.

use crate::alpha::{alpha_ring, positive_roots, root_form, LinearForm};
use crate::error::{Error, Result};
use crate::poly::ideal::Ideal;
use crate::poly::{MonomialOrder, Poly, PolyRing};
use crate::tableaux::Tableau;
use crate::Rat;
use num::traits::One;
use std::collections::BTreeMap;

/// Coordinate layout of T_mu cap n: for each block pair (s, a) with s < a the
/// last row of block s carries mu_a free entries in the columns of block a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceCoord {
    /// 0-indexed matrix position
    pub row: usize,
    pub col: usize,
    /// 1-indexed block pair (s, a), s < a
    pub block: (usize, usize),
    /// 1-indexed position within block a
    pub k: usize,
    pub name: String,
}

#[derive(Debug, Clone)]
pub struct SlicePattern {
    pub mu: Vec<usize>,
    pub n: usize,
    pub coords: Vec<SliceCoord>,
}

impl SlicePattern {
    /// Requires mu effective dominant with a nonzero last part.
    pub fn new(mu: &[usize]) -> Result<Self> {
        if mu.is_empty() || *mu.last().unwrap() == 0 {
            return Err(Error::Orbital(
                "weight must be effective with a nonzero last part".into(),
            ));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Orbital("weight must be dominant".into()));
        }
        let m = mu.len();
        let n: usize = mu.iter().sum();
        let mut offsets = vec![0usize];
        for &x in mu {
            offsets.push(offsets.last().unwrap() + x);
        }
        // naming: doubled blocks get the paired a{i}/b{i} scheme, everything
        // else is numbered sequentially in reading order
        let all_two = mu.iter().all(|&x| x == 2);
        let mut coords = Vec::new();
        let mut pair_index = 0usize;
        let mut seq = 0usize;
        for s in 1..=m {
            for a in (s + 1)..=m {
                pair_index += 1;
                for k in 1..=mu[a - 1] {
                    let row = offsets[s - 1] + mu[s - 1] - 1;
                    let col = offsets[a - 1] + k - 1;
                    seq += 1;
                    let name = if all_two {
                        if k == 1 {
                            format!("a{pair_index}")
                        } else {
                            format!("b{pair_index}")
                        }
                    } else {
                        format!("a{seq}")
                    };
                    coords.push(SliceCoord { row, col, block: (s, a), k, name });
                }
            }
        }
        Ok(SlicePattern { mu: mu.to_vec(), n, coords })
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    /// Weight of each coordinate: block pair (s, a) carries alpha_{s..a-1},
    /// independent of the within-block index.
    pub fn weight_of(&self, c: &SliceCoord) -> LinearForm {
        root_form(self.m() - 1, c.block.0, c.block.1 - 1)
    }

    /// The ring of free coordinates, weighted by the torus action.
    pub fn ring(&self) -> PolyRing {
        let rank = self.m() - 1;
        PolyRing::with_weights(
            self.coords.iter().map(|c| c.name.clone()).collect(),
            MonomialOrder::DegRevLex,
            self.coords.iter().map(|c| self.weight_of(c)).collect(),
            rank,
        )
    }

    /// Symbolic slice matrix over the coordinate ring: pinned superdiagonal
    /// 1s of J_mu, free variables, zeros elsewhere.
    pub fn matrix(&self, ring: &PolyRing) -> Vec<Vec<Poly>> {
        let mut mat = vec![vec![Poly::zero(); self.n]; self.n];
        let mut off = 0usize;
        for &sz in &self.mu {
            for r in 0..sz.saturating_sub(1) {
                mat[off + r][off + r + 1] = Poly::one(ring);
            }
            off += sz;
        }
        for (i, c) in self.coords.iter().enumerate() {
            mat[c.row][c.col] = Poly::var(ring, i);
        }
        mat
    }

    /// Evaluate the slice matrix at a rational point (one value per coord).
    pub fn matrix_at(&self, point: &[Rat]) -> Vec<Vec<Rat>> {
        let mut mat = vec![vec![Rat::from_integer(0.into()); self.n]; self.n];
        let mut off = 0usize;
        for &sz in &self.mu {
            for r in 0..sz.saturating_sub(1) {
                mat[off + r][off + r + 1] = Rat::one();
            }
            off += sz;
        }
        for (i, c) in self.coords.iter().enumerate() {
            mat[c.row][c.col] = point[i].clone();
        }
        mat
    }

    /// Expected dimension of the orbital variety of a tableau with this
    /// weight and shape lambda: <lambda - mu, rho>.
    pub fn expected_dim(&self, shape: &[usize]) -> i64 {
        let m = self.m();
        let mut lambda: Vec<i64> = shape.iter().map(|&x| x as i64).collect();
        lambda.resize(m, 0);
        (0..m)
            .map(|i| (lambda[i] - self.mu[i] as i64) * (m - i) as i64)
            .sum()
    }
}

pub fn mat_mul(ring: &PolyRing, a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let prod = a[i][k].mul(ring, &b[k][j]);
                out[i][j] = out[i][j].add(ring, &prod);
            }
        }
    }
    out
}

/// Determinant of the submatrix on `rows` x `cols` by expansion along the
/// sparsest column, with zero pruning.
pub fn minor_det(ring: &PolyRing, m: &[Vec<Poly>], rows: &[usize], cols: &[usize]) -> Poly {
    debug_assert_eq!(rows.len(), cols.len());
    if rows.is_empty() {
        return Poly::one(ring);
    }
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut best_c = 0;
    let mut best_count = usize::MAX;
    for (ci, &c) in cols.iter().enumerate() {
        let count = rows.iter().filter(|&&r| !m[r][c].is_zero()).count();
        if count < best_count {
            best_count = count;
            best_c = ci;
        }
    }
    if best_count == 0 {
        return Poly::zero();
    }
    let c = cols[best_c];
    let rest_cols: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != best_c)
        .map(|(_, &x)| x)
        .collect();
    let mut acc = Poly::zero();
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
        let sub = minor_det(ring, m, &rest_rows, &rest_cols);
        if sub.is_zero() {
            continue;
        }
        let signed = if (ri + best_c) % 2 == 0 {
            m[r][c].clone()
        } else {
            m[r][c].neg()
        };
        acc = acc.add(ring, &signed.mul(ring, &sub));
    }
    acc
}

/// All nonzero k x k minors of the leading principal `size` x `size` window.
fn all_minors(ring: &PolyRing, m: &[Vec<Poly>], size: usize, k: usize) -> Vec<Poly> {
    use itertools::Itertools;
    if k == 0 || k > size {
        return Vec::new();
    }
    let live_rows: Vec<usize> = (0..size)
        .filter(|&r| (0..size).any(|c| !m[r][c].is_zero()))
        .collect();
    let live_cols: Vec<usize> = (0..size)
        .filter(|&c| (0..size).any(|r| !m[r][c].is_zero()))
        .collect();
    if live_rows.len() < k || live_cols.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in live_rows.iter().copied().combinations(k) {
        for cols in live_cols.iter().copied().combinations(k) {
            let d = minor_det(ring, m, &rows, &cols);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

fn boxes_right_of(shape: &[usize], c: usize) -> usize {
    shape.iter().map(|&l| l.saturating_sub(c)).sum()
}

/// Saturate by one stage's witness set: the intersection over distinct
/// nonzero normal forms of the single-minor saturations.
fn saturate_stage(ideal: Ideal, witnesses_raw: &[Poly]) -> Result<Ideal> {
    let mut witnesses: Vec<Poly> = Vec::new();
    for w in witnesses_raw {
        let nf = ideal.normal_form(w);
        if !nf.is_zero() && !witnesses.contains(&nf) {
            witnesses.push(nf);
        }
    }
    if witnesses.is_empty() {
        return Err(Error::Orbital(
            "rank witnesses all vanish: inconsistent rank conditions".into(),
        ));
    }
    Ok(ideal.saturate(&witnesses))
}

fn run_stages(
    pattern: &SlicePattern,
    t: &Tableau,
    boxes: &[(u32, usize)],
) -> Result<Ideal> {
    let ring = pattern.ring();
    let a = pattern.matrix(&ring);
    let mut ideal = Ideal::zero(ring.clone());
    // rank-equality witnesses of every processed stage; a later stage's
    // conditions can re-expose components an earlier witness must rip out
    let mut witness_sets: Vec<Vec<Poly>> = Vec::new();
    for &(i, k) in boxes {
        let sub = t.restrict_box(i, k as usize);
        let shape = sub.shape();
        let size: usize = shape.iter().sum();
        if size == 0 {
            continue;
        }
        let mut power = a.clone();
        let max_c = shape.first().copied().unwrap_or(0);
        for c in 1..=max_c {
            if c > 1 {
                power = mat_mul(&ring, &power, &a);
            }
            let r = boxes_right_of(&shape, c);
            if r + 1 > size {
                continue;
            }
            let conditions = all_minors(&ring, &power, size, r + 1);
            let new_gens: Vec<Poly> =
                conditions.into_iter().filter(|g| !ideal.contains(g)).collect();
            if r > 0 {
                let w = all_minors(&ring, &power, size, r);
                if !w.is_empty() {
                    witness_sets.push(w);
                }
            }
            if new_gens.is_empty() {
                continue;
            }
            ideal = ideal.sum(&new_gens);
            if let Some(w) = witness_sets.last() {
                ideal = saturate_stage(ideal, &w.clone())?;
            }
        }
    }
    // fixpoint pass: re-saturate by every stage's witnesses until stable
    loop {
        let mut changed = false;
        for w in &witness_sets {
            let next = saturate_stage(ideal.clone(), w)?;
            if !next.equals(&ideal) {
                ideal = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let gb = ideal.gb().as_ref().clone();
    let result = Ideal::new(ring, gb.clone());
    result.seed_gb(MonomialOrder::DegRevLex, gb);
    Ok(result)
}

/// Ideal of the generalized orbital variety of a semistandard tableau:
/// for each restriction step (i, k) in reading order and each power c, the
/// (r+1) x (r+1) minors of A_(i,k)^c vanish (r the rank forced by the shape),
/// and after each stage the ideal is saturated by the r x r witness minors.
pub fn orbital_ideal(t: &Tableau) -> Result<(SlicePattern, Ideal)> {
    t.validate()?;
    let m = t.max_entry() as usize;
    let mu = t.weight(m);
    if mu.iter().any(|&x| x == 0) {
        return Err(Error::Orbital("tableau weight must be strictly effective".into()));
    }
    let pattern = SlicePattern::new(&mu)?;
    let mut boxes: Vec<(u32, usize)> = Vec::new();
    for i in 1..=m as u32 {
        for k in 1..=mu[(i - 1) as usize] {
            boxes.push((i, k));
        }
    }
    let ideal = run_stages(&pattern, t, &boxes)?;
    Ok((pattern, ideal))
}

/// Block-by-block variant (restrictions at (i, mu_i) only); the box-by-box
/// refinement must give the same saturated ideal.
pub fn orbital_ideal_blockwise(t: &Tableau) -> Result<(SlicePattern, Ideal)> {
    t.validate()?;
    let m = t.max_entry() as usize;
    let mu = t.weight(m);
    let pattern = SlicePattern::new(&mu)?;
    let boxes: Vec<(u32, usize)> =
        (1..=m as u32).map(|i| (i, mu[(i - 1) as usize])).collect();
    let ideal = run_stages(&pattern, t, &boxes)?;
    Ok((pattern, ideal))
}

/// Weight map of the slice coordinates; their product is the multidegree of
/// the Jordan point.
pub fn assign_weights(pattern: &SlicePattern) -> BTreeMap<String, LinearForm> {
    pattern
        .coords
        .iter()
        .map(|c| (c.name.clone(), pattern.weight_of(c)))
        .collect()
}

/// (expected, actual) dimension pair: <lambda - mu, rho> vs the Groebner
/// dimension of the generated ideal.
pub fn dimension_check(t: &Tableau, pattern: &SlicePattern, ideal: &Ideal) -> (i64, i64) {
    let expected = pattern.expected_dim(&t.shape());
    let actual = ideal.dimension() as i64;
    (expected, actual)
}

/// p(mu): the product of all coordinate weights as an alpha polynomial.
pub fn jordan_point_mdeg(pattern: &SlicePattern) -> Poly {
    let rank = pattern.m() - 1;
    let aring = alpha_ring(rank);
    let mut acc = Poly::one(&aring);
    for c in &pattern.coords {
        let w = pattern.weight_of(c);
        acc = acc.mul(&aring, &crate::poly::mdeg::weight_form(&aring, &w));
    }
    acc
}

/// Coordinate weights as a multiset of linear forms.
pub fn weight_multiset(pattern: &SlicePattern) -> Vec<LinearForm> {
    pattern.coords.iter().map(|c| pattern.weight_of(c)).collect()
}

/// Delta_+ of A_{m-1} (rank m-1 root system on m-1 alpha coordinates).
pub fn delta_plus(m: usize) -> Vec<LinearForm> {
    positive_roots(m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ideal::ideal_from_strings;
    use crate::poly::parse_poly;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn slice_221_shape() {
        let p = SlicePattern::new(&[2, 2, 1]).unwrap();
        let positions: Vec<(usize, usize)> =
            p.coords.iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(positions, vec![(1, 2), (1, 3), (1, 4), (3, 4)]);
    }

    #[test]
    fn slice_ones_is_full_n() {
        let p = SlicePattern::new(&[1, 1, 1]).unwrap();
        assert_eq!(p.coords.len(), 3);
        let names: Vec<&str> = p.coords.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["a1", "a2", "a3"]);
        assert_eq!(p.weight_of(&p.coords[0]), vec![1, 0]);
        assert_eq!(p.weight_of(&p.coords[1]), vec![1, 1]);
        assert_eq!(p.weight_of(&p.coords[2]), vec![0, 1]);
    }

    #[test]
    fn slice_regular_nilpotent_has_no_coords() {
        let p = SlicePattern::new(&[5]).unwrap();
        assert!(p.coords.is_empty());
        assert_eq!(p.n, 5);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(SlicePattern::new(&[1, 0, 1]).is_err());
        assert!(SlicePattern::new(&[1, 2]).is_err());
        assert!(SlicePattern::new(&[2, 1, 0]).is_err());
    }

    #[test]
    fn leitfaden_ideal_is_b() {
        let (pattern, ideal) = orbital_ideal(&tab(&[&[1, 2], &[3]])).unwrap();
        assert_eq!(pattern.coords[2].block, (2, 3));
        let expected = ideal_from_strings(&ideal.ring, &["a3"]).unwrap();
        assert!(ideal.equals(&expected));
    }

    #[test]
    fn published_six_box_example() {
        let (_, ideal) = orbital_ideal(&tab(&[&[1, 1, 3], &[2, 2], &[4]])).unwrap();
        let expected =
            ideal_from_strings(&ideal.ring, &["a1", "a2", "a7", "a3*a6 - a4*a5"]).unwrap();
        assert!(ideal.equals(&expected));
    }

    #[test]
    fn weight_homogeneous_generators() {
        let (_, ideal) = orbital_ideal(&tab(&[&[1, 1, 3], &[2, 2], &[4]])).unwrap();
        for g in &ideal.gens {
            assert!(g.homogeneous_weight(&ideal.ring).is_some());
        }
    }

    #[test]
    fn highest_weight_tableau_is_point() {
        let (pattern, ideal) = orbital_ideal(&tab(&[&[1, 1], &[2]])).unwrap();
        assert_eq!(ideal.dimension(), 0);
        assert_eq!(pattern.expected_dim(&[2, 1]), 0);
    }

    #[test]
    fn random_points_from_published_parametrization() {
        // A in X_[[1,2],[3,4]] has a, f != 0 and ae + bf = 0
        let (pattern, ideal) = orbital_ideal(&tab(&[&[1, 2], &[3, 4]])).unwrap();
        let vals = [(3i64, 5i64, 7i64, 2i64), (1, -2, 4, 9), (-5, 1, 2, 3)];
        for (a, b, c, f) in vals {
            let e = crate::ratio(-b * f, a);
            let point = vec![
                crate::rat(a),
                crate::rat(b),
                crate::rat(c),
                crate::rat(0),
                e,
                crate::rat(f),
            ];
            for g in &ideal.gens {
                assert_eq!(g.eval(&point), crate::rat(0), "gen {}", g.to_string_in(&ideal.ring));
            }
        }
        assert_eq!(pattern.expected_dim(&[2, 2]), ideal.dimension() as i64);
    }

    #[test]
    fn boxy_refinement_small() {
        let cases: Vec<Vec<Vec<u32>>> = vec![
            vec![vec![1, 2], vec![3]],
            vec![vec![1, 1], vec![2]],
            vec![vec![1, 2], vec![3, 4]],
            vec![vec![1, 2, 3], vec![4]],
            vec![vec![1, 1, 2], vec![2, 3]],
            vec![vec![1, 2], vec![3, 4], vec![5]],
            vec![vec![1, 1], vec![2, 2], vec![3]],
        ];
        for rows in cases {
            let t = Tableau::new(rows).unwrap();
            let (_, boxy) = orbital_ideal(&t).unwrap();
            let (_, blocky) = orbital_ideal_blockwise(&t).unwrap();
            assert!(boxy.equals(&blocky), "mismatch for {:?}", t.rows);
        }
    }

    #[test]
    fn weight_product_for_ones_is_all_roots() {
        let p = SlicePattern::new(&[1, 1, 1, 1, 1]).unwrap();
        let mut ws = weight_multiset(&p);
        ws.sort();
        let mut roots = delta_plus(5);
        roots.sort();
        assert_eq!(ws, roots);
        let p2 = SlicePattern::new(&[2; 6]).unwrap();
        let mut ws2 = weight_multiset(&p2);
        ws2.sort();
        let mut doubled: Vec<_> = delta_plus(6)
            .into_iter()
            .flat_map(|r| [r.clone(), r])
            .collect();
        doubled.sort();
        assert_eq!(ws2, doubled);
    }

    #[test]
    fn mvy_slice_free_entry_count() {
        for mu in [vec![2, 2, 1], vec![3, 1, 1], vec![2, 2, 2], vec![1, 1, 1, 1]] {
            let p = SlicePattern::new(&mu).unwrap();
            let mut expect = 0;
            for s in 0..mu.len() {
                for a in (s + 1)..mu.len() {
                    expect += mu[a];
                }
            }
            assert_eq!(p.coords.len(), expect);
        }
    }

    #[test]
    fn eqgov_colon_step_matches() {
        let p = SlicePattern::new(&[1, 1, 1]).unwrap();
        let ring = p.ring();
        let raw = ideal_from_strings(&ring, &["a1*a3"]).unwrap();
        let sat = raw.saturate(&[parse_poly(&ring, "a1").unwrap()]);
        let expected = ideal_from_strings(&sat.ring, &["a3"]).unwrap();
        assert!(sat.equals(&expected));
    }
}
