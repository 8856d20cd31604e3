//! BZ data and MV polytopes for GL_m: the interval-indexed value grid, the
//! bijection with Lusztig data, edge inequalities, tropical Pluecker checks,
//! and vertex paths along the fixed word.

use crate::error::{Error, Result};
use crate::tableaux::{root_order, LusztigDatum};
use std::collections::BTreeMap;

/// Values M_[a,b] on interval chamber weights, 1 <= a <= b <= m, together
/// with the declared weight pair. M_[a,b] = 0 when b < a by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BZDatum {
    pub m: usize,
    pub vals: BTreeMap<(usize, usize), i64>,
}

impl BZDatum {
    pub fn new(m: usize) -> Self {
        BZDatum { m, vals: BTreeMap::new() }
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        if b < a {
            0
        } else {
            self.vals.get(&(a, b)).copied().unwrap_or(0)
        }
    }

    pub fn set(&mut self, a: usize, b: usize, v: i64) {
        self.vals.insert((a, b), v);
    }
}

/// Lusztig datum from interval BZ values:
/// n_(a,b) = M_[a,b+1] + M_[a+1,b] - M_[a,b] - M_[a+1,b+1].
pub fn datum_from_bz(m_vals: &BZDatum) -> Result<LusztigDatum> {
    let m = m_vals.m;
    let mut entries = Vec::new();
    for (a, b) in root_order(m) {
        let n = m_vals.get(a, b + 1) + m_vals.get(a + 1, b)
            - m_vals.get(a, b)
            - m_vals.get(a + 1, b + 1);
        if n < 0 {
            return Err(Error::EdgeInequality(format!(
                "n_({a},{b}) = {n} < 0"
            )));
        }
        entries.push(n as u64);
    }
    LusztigDatum::new(m, entries)
}

/// Inverse of `datum_from_bz` for stable data (lowest vertex 0): the row
/// M_[1,*] is zero and each next row follows by the telescoping recursion.
pub fn bz_from_datum(n: &LusztigDatum) -> Result<BZDatum> {
    let m = n.m;
    let mut out = BZDatum::new(m);
    for b in 1..=m {
        out.set(1, b, 0);
    }
    for a in 1..m {
        // fill row a+1 from row a, left to right
        // d_b = n_(a,b) - M_[a,b+1] + M_[a,b]; M_[a+1,b] - M_[a+1,b+1] = d_b
        let d: Vec<i64> = (a..m)
            .map(|b| n.get(a, b) as i64 - out.get(a, b + 1) + out.get(a, b))
            .collect();
        let mut cur = -d[0]; // M_[a+1,a+1], since M_[a+1,a] = 0
        out.set(a + 1, a + 1, cur);
        for (k, b) in ((a + 1)..m).enumerate() {
            cur -= d[k + 1];
            out.set(a + 1, b + 1, cur);
        }
    }
    // verify the reconstruction and the interval edge inequalities
    let back = datum_from_bz(&out)?;
    if &back != n {
        return Err(Error::EdgeInequality("reconstruction mismatch".into()));
    }
    Ok(out)
}

/// Chamber values on arbitrary subsets of [m] (sorted index vectors), used
/// for tropical Pluecker checks where non-interval weights appear.
#[derive(Debug, Clone)]
pub struct ChamberValues {
    pub m: usize,
    pub vals: BTreeMap<Vec<usize>, i64>,
}

impl ChamberValues {
    pub fn from_intervals(bz: &BZDatum) -> Self {
        let mut vals = BTreeMap::new();
        for (&(a, b), &v) in &bz.vals {
            vals.insert((a..=b).collect(), v);
        }
        ChamberValues { m: bz.m, vals }
    }

    pub fn insert(&mut self, mut subset: Vec<usize>, v: i64) {
        subset.sort_unstable();
        self.vals.insert(subset, v);
    }

    fn get(&self, subset: &[usize]) -> Option<i64> {
        self.vals.get(subset).copied()
    }
}

fn apply_perm(w: &[usize], subset: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = subset.iter().map(|&i| w[i - 1]).collect();
    out.sort_unstable();
    out
}

fn all_permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=m {
        let mut next = Vec::new();
        for p in out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalReport {
    /// (w, i, j) triples with all required values present and the relation satisfied
    pub satisfied: Vec<(Vec<usize>, usize, usize)>,
    /// triples where the min-relation fails
    pub violated: Vec<(Vec<usize>, usize, usize)>,
}

/// Check the tropical Pluecker relation at every applicable (w, i, j) whose
/// chamber values are all present. In type A the relation is nontrivial only
/// for adjacent i, j.
pub fn tropical_pluecker_check(cv: &ChamberValues) -> TropicalReport {
    let m = cv.m;
    let mut report = TropicalReport { satisfied: Vec::new(), violated: Vec::new() };
    let omega: Vec<Vec<usize>> = (1..m).map(|i| (1..=i).collect()).collect();
    for w in all_permutations(m) {
        for i in 1..m {
            for j in 1..m {
                if i == j || i.abs_diff(j) != 1 {
                    continue;
                }
                // Bruhat: w < w s_i and w < w s_j (right multiplication by a
                // simple transposition increases length iff w(i) < w(i+1))
                if !(w[i - 1] < w[i] && w[j - 1] < w[j]) {
                    continue;
                }
                let mut wsi = w.clone();
                wsi.swap(i - 1, i);
                let mut wsj = w.clone();
                wsj.swap(j - 1, j);
                let mut wsisj = wsi.clone();
                wsisj.swap(j - 1, j);
                let mut wsjsi = wsj.clone();
                wsjsi.swap(i - 1, i);
                let need = [
                    apply_perm(&wsi, &omega[i - 1]),
                    apply_perm(&wsj, &omega[j - 1]),
                    apply_perm(&w, &omega[i - 1]),
                    apply_perm(&wsisj, &omega[j - 1]),
                    apply_perm(&wsjsi, &omega[i - 1]),
                    apply_perm(&w, &omega[j - 1]),
                ];
                // the relation is symmetric in (i, j); report each triple once
                if i > j {
                    continue;
                }
                let vals: Option<Vec<i64>> = need.iter().map(|s| cv.get(s)).collect();
                let Some(v) = vals else { continue };
                let lhs = v[0] + v[1];
                let rhs = (v[2] + v[3]).min(v[4] + v[5]);
                if lhs == rhs {
                    report.satisfied.push((w.clone(), i, j));
                } else {
                    report.violated.push((w.clone(), i, j));
                }
            }
        }
    }
    report
}

/// Edge-inequality check over all (w, i) whose four chamber weights are all
/// available: M_{w omega_i} + M_{w s_i omega_i} - M_{w omega_{i-1}} -
/// M_{w omega_{i+1}} <= 0 (with omega_0 = 0 and omega_m constant).
pub fn edge_inequality_violations(cv: &ChamberValues) -> Vec<(Vec<usize>, usize)> {
    let m = cv.m;
    let full: Vec<usize> = (1..=m).collect();
    let mut bad = Vec::new();
    for w in all_permutations(m) {
        for i in 1..m {
            if !(w[i - 1] < w[i]) {
                continue;
            }
            let mut wsi = w.clone();
            wsi.swap(i - 1, i);
            let omega_i: Vec<usize> = (1..=i).collect();
            let a = cv.get(&apply_perm(&w, &omega_i));
            let b = cv.get(&apply_perm(&wsi, &omega_i));
            let lo = if i >= 2 {
                let omega_prev: Vec<usize> = (1..i).collect();
                cv.get(&apply_perm(&w, &omega_prev))
            } else {
                Some(0)
            };
            let hi = if i + 1 < m {
                let omega_next: Vec<usize> = (1..=i + 1).collect();
                cv.get(&apply_perm(&w, &omega_next))
            } else if i + 1 == m {
                cv.get(&full)
            } else {
                Some(0)
            };
            if let (Some(a), Some(b), Some(lo), Some(hi)) = (a, b, lo, hi) {
                if a + b - lo - hi > 0 {
                    bad.push((w.clone(), i));
                }
            }
        }
    }
    bad
}

/// Vertex path along the fixed word: mu_k - mu_{k-1} = n_k beta_k, recorded
/// in alpha coordinates.
pub fn vertex_path(n: &LusztigDatum) -> Vec<Vec<i64>> {
    let mut path = vec![vec![0i64; n.m - 1]];
    for (&(a, b), &k) in root_order(n.m).iter().zip(&n.entries) {
        let mut next = path.last().unwrap().clone();
        for c in a..=b {
            next[c - 1] += k as i64;
        }
        path.push(next);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2_edge_example() {
        // M_[1,1] = mu, M_[2,2] = -lambda, M_[1,2] = 0 gives n_1 = lambda - mu
        let mut bz = BZDatum::new(2);
        let (lambda, mu) = (3i64, 1i64);
        bz.set(1, 1, mu);
        bz.set(2, 2, -lambda);
        bz.set(1, 2, 0);
        let n = datum_from_bz(&bz).unwrap();
        assert_eq!(n.entries, vec![(lambda - mu) as u64]);
    }

    #[test]
    fn sl3_stable_example() {
        // stable polytope of weight (alpha_1, 0): published interval values
        let mut bz = BZDatum::new(3);
        bz.set(1, 1, 0);
        bz.set(1, 2, 0);
        bz.set(1, 3, 0);
        bz.set(2, 2, -1);
        bz.set(2, 3, -1);
        bz.set(3, 3, 0);
        let n = datum_from_bz(&bz).unwrap();
        assert_eq!(n.entries, vec![1, 0, 0]);
        // round trip through the telescoping recursion
        let back = bz_from_datum(&n).unwrap();
        assert_eq!(back, bz);
    }

    #[test]
    fn zero_datum_zero_bz() {
        let n = LusztigDatum::zero(4);
        let bz = bz_from_datum(&n).unwrap();
        assert!(bz.vals.values().all(|&v| v == 0));
        assert_eq!(datum_from_bz(&bz).unwrap(), n);
    }

    #[test]
    fn a2_data_and_paths() {
        let n = LusztigDatum::new(3, vec![1, 0, 1]).unwrap();
        let bz = bz_from_datum(&n).unwrap();
        assert_eq!(datum_from_bz(&bz).unwrap(), n);
        let path = vertex_path(&n);
        assert_eq!(
            path,
            vec![vec![0, 0], vec![1, 0], vec![1, 0], vec![1, 1]]
        );
        // (0,1,0): the segment through alpha_1 + alpha_2
        let n2 = LusztigDatum::new(3, vec![0, 1, 0]).unwrap();
        let path2 = vertex_path(&n2);
        assert_eq!(
            path2,
            vec![vec![0, 0], vec![0, 0], vec![1, 1], vec![1, 1]]
        );
    }

    #[test]
    fn a3_path_through_published_vertex_set() {
        let n = LusztigDatum::new(4, vec![0, 1, 0, 1, 0, 1]).unwrap();
        let path = vertex_path(&n);
        let vertex_set: Vec<Vec<i64>> = vec![
            vec![0, 0, 0],
            vec![0, 1, 1],
            vec![0, 2, 0],
            vec![0, 2, 1],
            vec![1, 1, 0],
            vec![1, 2, 0],
            vec![1, 2, 1],
        ];
        for mu in &path {
            assert!(vertex_set.contains(mu), "path vertex {mu:?} not in hull");
        }
        assert_eq!(path.last().unwrap(), &vec![1, 2, 1]);
    }

    #[test]
    fn path_endpoint_is_datum_weight() {
        let n = LusztigDatum::new(4, vec![2, 0, 1, 0, 1, 1]).unwrap();
        let path = vertex_path(&n);
        assert_eq!(path.last().unwrap(), &n.weight());
    }

    #[test]
    fn bijection_exhaustive_small() {
        for m in 2..=4usize {
            let len = m * (m - 1) / 2;
            let mut entries = vec![0u64; len];
            loop {
                let n = LusztigDatum::new(m, entries.clone()).unwrap();
                let bz = bz_from_datum(&n).unwrap();
                assert_eq!(datum_from_bz(&bz).unwrap(), n);
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    if entries[i] < 2 {
                        entries[i] += 1;
                        break;
                    }
                    entries[i] = 0;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }

    #[test]
    fn tropical_check_sl3() {
        // the stable weight-(alpha_1, 0) polytope: full chamber table,
        // including the one non-interval weight {1,3} with value 0
        let mut bz = BZDatum::new(3);
        bz.set(1, 1, 0);
        bz.set(1, 2, 0);
        bz.set(1, 3, 0);
        bz.set(2, 2, -1);
        bz.set(2, 3, -1);
        bz.set(3, 3, 0);
        let mut cv = ChamberValues::from_intervals(&bz);
        cv.insert(vec![1, 3], 0);
        let rep = tropical_pluecker_check(&cv);
        assert!(!rep.satisfied.is_empty());
        assert!(rep.violated.is_empty());
        assert!(edge_inequality_violations(&cv).is_empty());
        // perturbing one value breaks the min relation somewhere
        let mut cv2 = cv.clone();
        cv2.insert(vec![2], 0); // was -1
        let rep2 = tropical_pluecker_check(&cv2);
        let bad = !rep2.violated.is_empty()
            || !edge_inequality_violations(&cv2).is_empty();
        assert!(bad);
    }

    #[test]
    fn tropical_vacuous_for_pgl2() {
        let bz = BZDatum::new(2);
        let cv = ChamberValues::from_intervals(&bz);
        let rep = tropical_pluecker_check(&cv);
        assert!(rep.satisfied.is_empty() && rep.violated.is_empty());
    }
}
