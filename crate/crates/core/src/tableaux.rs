//! Semistandard Young tableaux, GT patterns, Lusztig data for the fixed word
//! (1,2,...,m-1,...,1,2,1), multisegments with the bracketing statistics,
//! crystal operators, and the tableau sort function.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Order of positive roots for the fixed reduced word: pairs (a, b) with
/// 1 <= a <= b <= m-1, enumerated a-major. Entry k of a Lusztig datum is the
/// multiplicity of alpha_a + ... + alpha_b.
pub fn root_order(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..m {
        for b in a..m {
            out.push((a, b));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {r} is empty")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {r} not weakly increasing")));
            }
            if row.iter().any(|&e| e == 0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
        }
        for r in 1..self.rows.len() {
            if self.rows[r].len() > self.rows[r - 1].len() {
                return Err(Error::InvalidTableau("shape is not a partition".into()));
            }
            for c in 0..self.rows[r].len() {
                if self.rows[r][c] <= self.rows[r - 1][c] {
                    return Err(Error::InvalidTableau(format!(
                        "column {c} not strictly increasing"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicity vector of the entries 1..=m.
    pub fn weight(&self, m: usize) -> Vec<usize> {
        let mut mu = vec![0usize; m];
        for row in &self.rows {
            for &e in row {
                mu[(e - 1) as usize] += 1;
            }
        }
        mu
    }

    /// Delete all entries greater than `i`.
    pub fn restrict(&self, i: u32) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&e| e <= i).collect::<Vec<_>>())
            .filter(|r: &Vec<u32>| !r.is_empty())
            .collect();
        Tableau { rows }
    }

    /// Delete all entries greater than `i` and all but the leftmost `k`
    /// occurrences of `i`.
    pub fn restrict_box(&self, i: u32, k: usize) -> Tableau {
        // occurrences of i ordered by column
        let mut occ: Vec<(usize, usize)> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == i {
                    occ.push((c, r));
                }
            }
        }
        occ.sort_unstable();
        let keep: Vec<(usize, usize)> = occ.iter().take(k).map(|&(c, r)| (r, c)).collect();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, &e)| e < i || (e == i && keep.contains(&(r, *c))))
                    .map(|(_, &e)| e)
                    .collect::<Vec<_>>()
            })
            .filter(|r: &Vec<u32>| !r.is_empty())
            .collect();
        Tableau { rows }
    }

    /// Row-reading word, bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut w = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            w.extend_from_slice(row);
        }
        w
    }

    /// Positions of removable corner boxes as (row, col), top to bottom.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let shape = self.shape();
        let mut out = Vec::new();
        for r in 0..shape.len() {
            let below = if r + 1 < shape.len() { shape[r + 1] } else { 0 };
            if shape[r] > below {
                out.push((r, shape[r] - 1));
            }
        }
        out
    }

    /// Highest-weight tableau of a shape: row i filled with i.
    pub fn highest_weight(shape: &[usize]) -> Tableau {
        Tableau {
            rows: shape
                .iter()
                .enumerate()
                .filter(|(_, &l)| l > 0)
                .map(|(i, &l)| vec![(i + 1) as u32; l])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTPattern {
    /// rows[i] = shape of the restriction to entries <= i+1, padded to i+1 parts
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn interlaces(&self) -> bool {
        for i in 0..self.rows.len().saturating_sub(1) {
            let top = &self.rows[i];
            let bot = &self.rows[i + 1];
            for k in 0..top.len() {
                if !(bot[k + 1] <= top[k] && top[k] <= bot[k]) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn gt_pattern(t: &Tableau, m: usize) -> Result<GTPattern> {
    t.validate()?;
    if t.max_entry() as usize > m {
        return Err(Error::InvalidTableau("entry exceeds m".into()));
    }
    let rows = (1..=m)
        .map(|i| {
            let mut shape: Vec<i64> = t
                .restrict(i as u32)
                .shape()
                .iter()
                .map(|&l| l as i64)
                .collect();
            shape.resize(i, 0);
            shape
        })
        .collect();
    Ok(GTPattern { rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LusztigDatum {
    pub m: usize,
    /// indexed by `root_order(m)`
    pub entries: Vec<u64>,
}

impl LusztigDatum {
    pub fn new(m: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != m * (m - 1) / 2 {
            return Err(Error::InvalidDatum(format!(
                "expected {} entries for m = {m}",
                m * (m - 1) / 2
            )));
        }
        Ok(LusztigDatum { m, entries })
    }

    pub fn zero(m: usize) -> Self {
        LusztigDatum { m, entries: vec![0; m * (m - 1) / 2] }
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        let idx = root_order(self.m).iter().position(|&p| p == (a, b)).unwrap();
        self.entries[idx]
    }

    /// Weight nu = sum n_(a,b) alpha_(a,b) in alpha coordinates.
    pub fn weight(&self) -> Vec<i64> {
        let mut nu = vec![0i64; self.m - 1];
        for (&(a, b), &n) in root_order(self.m).iter().zip(&self.entries) {
            for c in a..=b {
                nu[c - 1] += n as i64;
            }
        }
        nu
    }
}

/// Lusztig datum of a tableau: n_(a,b) is the difference of GT rows b+1 and b
/// in slot a (the string of southwesterly differences).
pub fn lusztig_datum(t: &Tableau, m: usize) -> Result<LusztigDatum> {
    let gt = gt_pattern(t, m)?;
    let entries = root_order(m)
        .iter()
        .map(|&(a, b)| {
            let hi = gt.rows[b][a - 1];
            let lo = if b >= a { gt.rows[b - 1][a - 1] } else { 0 };
            (hi - lo) as u64
        })
        .collect();
    Ok(LusztigDatum { m, entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multisegment {
    pub m: usize,
    /// multiplicity of the segment [a, b]
    pub mult: std::collections::BTreeMap<(usize, usize), u64>,
}

impl Multisegment {
    pub fn from_datum(n: &LusztigDatum) -> Self {
        let mut mult = std::collections::BTreeMap::new();
        for (&(a, b), &k) in root_order(n.m).iter().zip(&n.entries) {
            if k > 0 {
                mult.insert((a, b), k);
            }
        }
        Multisegment { m: n.m, mult }
    }

    pub fn to_datum(&self) -> LusztigDatum {
        let entries = root_order(self.m)
            .iter()
            .map(|p| self.mult.get(p).copied().unwrap_or(0))
            .collect();
        LusztigDatum { m: self.m, entries }
    }

    /// Segments as display columns, sorted increasing in height and
    /// decreasing in base, height taking priority.
    fn sorted_columns(&self) -> Vec<(usize, usize)> {
        let mut cols = Vec::new();
        for (&(a, b), &k) in &self.mult {
            for _ in 0..k {
                cols.push((a, b));
            }
        }
        cols.sort_by(|x, y| {
            let hx = x.1 - x.0;
            let hy = y.1 - y.0;
            hx.cmp(&hy).then(y.0.cmp(&x.0))
        });
        cols
    }
}

/// Bracketing statistic: place "(" under columns with base i and ")" under
/// columns with base i+1, then count unpaired "("s.
pub fn epsilon_star(ms: &Multisegment, i: usize) -> u64 {
    let mut open = 0u64;
    for (a, _) in ms.sorted_columns() {
        if a == i {
            open += 1;
        } else if a == i + 1 && open > 0 {
            open -= 1;
        } else if a == i + 1 {
            // unmatched ")" to the left of any "(" stays unmatched
        }
    }
    open
}

/// All bracketing statistics at once.
pub fn epsilon_star_vector(ms: &Multisegment) -> Vec<u64> {
    (1..ms.m).map(|i| epsilon_star(ms, i)).collect()
}

/// Convert an alpha-coordinate weight to a GL weight vector of length m
/// (normalized so the last coordinate is c_{m-1} subtracted, i.e. sums to 0).
fn alpha_to_gl(m: usize, nu: &[i64]) -> Vec<i64> {
    let mut gl = vec![0i64; m];
    gl[0] = nu[0];
    for i in 1..m - 1 {
        gl[i] = nu[i] - nu[i - 1];
    }
    gl[m - 1] = -nu[m - 2];
    gl
}

/// The unique tableau of smallest shape with the prescribed Lusztig datum:
/// shape lambda = sum eps*_i omega_i, weight mu = lambda - nu.
pub fn tableau_from_datum(n: &LusztigDatum) -> Result<Tableau> {
    let m = n.m;
    let ms = Multisegment::from_datum(n);
    let eps = epsilon_star_vector(&ms);
    // lambda = sum eps_i * omega_i, omega_i = (1^i, 0^{m-i})
    let mut lambda = vec![0i64; m];
    for (i, &e) in eps.iter().enumerate() {
        for part in lambda.iter_mut().take(i + 1) {
            *part += e as i64;
        }
    }
    if lambda.iter().all(|&l| l == 0) {
        if n.entries.iter().all(|&k| k == 0) {
            return Ok(Tableau::empty());
        }
        return Err(Error::InvalidDatum("empty minimal shape for nonzero datum".into()));
    }
    let nu_gl = alpha_to_gl(m, &n.weight());
    let mu: Vec<i64> = lambda.iter().zip(&nu_gl).map(|(l, v)| l - v).collect();
    if mu.iter().any(|&x| x < 0) {
        return Err(Error::InvalidDatum("minimal-shape weight is not effective".into()));
    }
    // build the GT pattern: row b+1 from row b and the datum, diagonal from |mu|
    let mut gt: Vec<Vec<i64>> = vec![vec![mu[0]]];
    for b in 1..m {
        let mut row = vec![0i64; b + 1];
        for a in 1..=b {
            row[a - 1] = gt[b - 1][a - 1] + n.get(a, b) as i64;
        }
        let total: i64 = mu[..=b].iter().sum();
        row[b] = total - row[..b].iter().sum::<i64>();
        gt.push(row);
    }
    let pattern = GTPattern { rows: gt.clone() };
    if !pattern.interlaces() || gt.iter().any(|r| r.windows(2).any(|w| w[0] < w[1]) || r.iter().any(|&x| x < 0)) {
        return Err(Error::InvalidDatum("datum does not define an interlacing pattern".into()));
    }
    // read the tableau: row a receives entry i in columns gt[i-2][a-1]..gt[i-1][a-1]
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let final_shape = &gt[m - 1];
    for a in 0..m {
        let len = if a < final_shape.len() { final_shape[a] } else { 0 };
        if len == 0 {
            continue;
        }
        let mut row = Vec::with_capacity(len as usize);
        for i in (a + 1)..=m {
            let hi = gt[i - 1][a];
            let lo = if i >= a + 2 { gt[i - 2][a] } else { 0 };
            for _ in lo..hi {
                row.push(i as u32);
            }
        }
        rows.push(row);
    }
    let t = Tableau::new(rows)?;
    let back = lusztig_datum(&t, m)?;
    if &back != n {
        return Err(Error::InvalidDatum("round trip failed".into()));
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// crystal operators

fn signature(word: &[u32], i: u32) -> (Vec<usize>, Vec<usize>) {
    // scan left to right; i+1 opens ("-"), i closes against the most recent
    // open; return (unmatched minus positions, unmatched plus positions)
    let mut minus_stack: Vec<usize> = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (k, &c) in word.iter().enumerate() {
        if c == i + 1 {
            minus_stack.push(k);
        } else if c == i {
            if minus_stack.is_empty() {
                plus.push(k);
            } else {
                minus_stack.pop();
            }
        }
    }
    (minus_stack, plus)
}

/// Position in (row, col) of the k-th letter of the reading word.
fn word_position(t: &Tableau, k: usize) -> (usize, usize) {
    let mut idx = k;
    for (rev_r, row) in t.rows.iter().rev().enumerate() {
        if idx < row.len() {
            let r = t.rows.len() - 1 - rev_r;
            return (r, idx);
        }
        idx -= row.len();
    }
    unreachable!("index out of range")
}

pub fn eps_i(t: &Tableau, i: u32) -> u64 {
    let (minus, _) = signature(&t.reading_word(), i);
    minus.len() as u64
}

pub fn phi_i(t: &Tableau, i: u32) -> u64 {
    let (_, plus) = signature(&t.reading_word(), i);
    plus.len() as u64
}

/// Raising operator: turn the i+1 at the leftmost unmatched "-" into i.
pub fn e_i(t: &Tableau, i: u32) -> Option<Tableau> {
    let (minus, _) = signature(&t.reading_word(), i);
    let &k = minus.first()?;
    let (r, c) = word_position(t, k);
    let mut rows = t.rows.clone();
    rows[r][c] = i;
    Tableau::new(rows).ok()
}

/// Lowering operator: turn the i at the rightmost unmatched "+" into i+1.
pub fn f_i(t: &Tableau, i: u32) -> Option<Tableau> {
    let (_, plus) = signature(&t.reading_word(), i);
    let &k = plus.last()?;
    let (r, c) = word_position(t, k);
    let mut rows = t.rows.clone();
    rows[r][c] = i + 1;
    Tableau::new(rows).ok()
}

pub fn eps_vector(t: &Tableau, m: usize) -> Vec<u64> {
    (1..m as u32).map(|i| eps_i(t, i)).collect()
}

pub fn phi_vector(t: &Tableau, m: usize) -> Vec<u64> {
    (1..m as u32).map(|i| phi_i(t, i)).collect()
}

/// Apply a sequence of raising operators; None if any step is undefined.
pub fn apply_e_string(t: &Tableau, string: &[u32]) -> Option<Tableau> {
    let mut cur = t.clone();
    for &i in string {
        cur = e_i(&cur, i)?;
    }
    Some(cur)
}

/// All semistandard tableaux of the given shape and weight (entries 1..=m
/// with multiplicity weight[i]).
pub fn enumerate_ssyt(shape: &[usize], weight: &[usize]) -> Vec<Tableau> {
    let m = weight.len();
    let total: usize = shape.iter().sum();
    if weight.iter().sum::<usize>() != total {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]) .collect();
    // fill cells in row-major order
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    let mut used = vec![0usize; m];
    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        rows: &mut Vec<Vec<u32>>,
        used: &mut Vec<usize>,
        weight: &[usize],
        out: &mut Vec<Tableau>,
    ) {
        if pos == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[pos];
        let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let min_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        for e in lo..=(weight.len() as u32) {
            let ei = (e - 1) as usize;
            if used[ei] < weight[ei] {
                rows[r][c] = e;
                used[ei] += 1;
                rec(cells, pos + 1, rows, used, weight, out);
                used[ei] -= 1;
            }
        }
        rows[r][c] = 0;
    }
    rec(&cells, 0, &mut rows, &mut used, weight, &mut out);
    out
}

/// Enumerate the candidates of a weight space with their raising statistics:
/// all semistandard tableaux of the shape and weight, each with its vector
/// (eps_1..eps_{m-1}). Used to re-derive string-order minimality arguments.
pub fn string_candidates(shape: &[usize], weight: &[usize]) -> Vec<(Tableau, Vec<u64>)> {
    let m = weight.len();
    enumerate_ssyt(shape, weight)
        .into_iter()
        .map(|t| {
            let eps = eps_vector(&t, m);
            (t, eps)
        })
        .collect()
}

/// The published tableau sort: repeatedly restrict to entries <= i and insert
/// the value of the rightmost largest corner at its row index.
pub fn sort(t: &Tableau) -> Vec<u32> {
    fn max_corner(t: &Tableau) -> (u32, (usize, usize)) {
        let mut best: (i64, (usize, usize)) = (-1, (0, 0));
        for (r, c) in t.corners() {
            let e = t.rows[r][c] as i64;
            if e > best.0 {
                best = (e, (r, c));
            }
        }
        (best.0 as u32, best.1)
    }
    if t.rows.is_empty() {
        return Vec::new();
    }
    let mt = max_corner(t).0;
    let mut list: Vec<u32> = Vec::new();
    for i in 1..mt {
        let s = t.restrict(i);
        if s.rows.is_empty() {
            continue;
        }
        let (ms, (r, _)) = max_corner(&s);
        let idx = r.min(list.len());
        list.insert(idx, ms);
    }
    list
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn gt_pattern_published_example() {
        let t = tab(&[&[1, 1, 2], &[2, 3, 3]]);
        let gt = gt_pattern(&t, 3).unwrap();
        assert_eq!(gt.rows, vec![vec![2], vec![3, 1], vec![3, 3, 0]]);
        assert!(gt.interlaces());
    }

    #[test]
    fn gt_pattern_highest_weight_and_single_row() {
        let t = Tableau::highest_weight(&[3, 2]);
        let gt = gt_pattern(&t, 2).unwrap();
        assert_eq!(gt.rows, vec![vec![3], vec![3, 2]]);
        // single column: pattern (1 / 1,1 / 1,1,1)
        let col = tab(&[&[1], &[2], &[3]]);
        let gt2 = gt_pattern(&col, 3).unwrap();
        assert_eq!(gt2.rows, vec![vec![1], vec![1, 1], vec![1, 1, 1]]);
        // single row: pattern (1 / 2,0 / 3,0,0)
        let row = tab(&[&[1, 2, 3]]);
        let gt3 = gt_pattern(&row, 3).unwrap();
        assert_eq!(gt3.rows, vec![vec![1], vec![2, 0], vec![3, 0, 0]]);
    }

    #[test]
    fn lusztig_datum_published_examples() {
        let t = tab(&[&[1, 1, 2], &[2, 3, 3]]);
        let n = lusztig_datum(&t, 3).unwrap();
        assert_eq!(n.entries, vec![1, 0, 2]);
        // highest-weight tableaux have the zero datum
        let h = Tableau::highest_weight(&[3, 2, 1]);
        assert_eq!(lusztig_datum(&h, 4).unwrap().entries, vec![0; 6]);
        // the A5 example
        let t6 = tab(&[&[1, 3], &[2, 5], &[4], &[6]]);
        let n6 = lusztig_datum(&t6, 6).unwrap();
        assert_eq!(
            n6.entries,
            vec![0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0]
        );
    }

    #[test]
    fn epsilon_star_published_example() {
        let n = LusztigDatum::new(6, vec![0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0]).unwrap();
        let ms = Multisegment::from_datum(&n);
        assert_eq!(epsilon_star_vector(&ms), vec![0, 1, 0, 1, 0]);
        // empty multisegment
        let z = Multisegment::from_datum(&LusztigDatum::zero(4));
        assert_eq!(epsilon_star_vector(&z), vec![0, 0, 0]);
        // single segment [i, j] has eps*_i = 1 and all others 0
        for (a, b) in root_order(5) {
            let mut entries = vec![0u64; 10];
            let idx = root_order(5).iter().position(|&p| p == (a, b)).unwrap();
            entries[idx] = 1;
            let ms = Multisegment::from_datum(&LusztigDatum::new(5, entries).unwrap());
            let expected: Vec<u64> = (1..5).map(|i| u64::from(i == a)).collect();
            assert_eq!(epsilon_star_vector(&ms), expected, "segment [{a},{b}]");
        }
    }

    #[test]
    fn tableau_from_datum_published_examples() {
        let n = LusztigDatum::new(6, vec![0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0]).unwrap();
        let t = tableau_from_datum(&n).unwrap();
        assert_eq!(t.rows, vec![vec![1, 3], vec![2, 5], vec![4], vec![6]]);
        assert_eq!(t.shape(), vec![2, 2, 1, 1]);
        // zero datum gives the empty tableau
        assert_eq!(tableau_from_datum(&LusztigDatum::zero(4)).unwrap(), Tableau::empty());
        // (1,0,1) in A2
        let n2 = LusztigDatum::new(3, vec![1, 0, 1]).unwrap();
        let t2 = tableau_from_datum(&n2).unwrap();
        assert_eq!(t2.rows, vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn roundtrip_exhaustive_small() {
        // all data for m <= 4 with entries <= 2
        for m in 2..=4usize {
            let len = m * (m - 1) / 2;
            let mut entries = vec![0u64; len];
            loop {
                let n = LusztigDatum::new(m, entries.clone()).unwrap();
                let t = tableau_from_datum(&n).expect("constructible");
                if !t.rows.is_empty() {
                    assert_eq!(lusztig_datum(&t, m).unwrap(), n);
                }
                // odometer over {0,1,2}^len
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
    fn datum_weight_bookkeeping() {
        // sum of n_(a,b) alpha_(a,b) equals lambda - mu for every tableau
        for t in enumerate_ssyt(&[2, 2, 1], &[1, 1, 1, 1, 1]) {
            let m = 5;
            let n = lusztig_datum(&t, m).unwrap();
            let nu = n.weight();
            let lambda: Vec<i64> = {
                let mut s: Vec<i64> = t.shape().iter().map(|&x| x as i64).collect();
                s.resize(m, 0);
                s
            };
            let mu: Vec<i64> = t.weight(m).iter().map(|&x| x as i64).collect();
            // lambda - mu in alpha coordinates: partial sums
            let mut expect = vec![0i64; m - 1];
            let mut acc = 0i64;
            for i in 0..m - 1 {
                acc += lambda[i] - mu[i];
                expect[i] = acc;
            }
            assert_eq!(nu, expect);
        }
    }

    #[test]
    fn crystal_published_eps_and_string() {
        let t = tab(&[&[1, 2], &[3, 4], &[5]]);
        assert_eq!(eps_vector(&t, 5), vec![1, 0, 1, 0]);
        let h = apply_e_string(&t, &[3, 2, 1, 4, 2, 3]).unwrap();
        assert_eq!(h, Tableau::highest_weight(&[2, 2, 1]));
        // raising is undefined everywhere on the highest-weight tableau
        for i in 1..5 {
            assert!(e_i(&h, i).is_none());
        }
    }

    #[test]
    fn crystal_axioms_small_shapes() {
        // e and f are mutually inverse; phi - eps = <alpha_i^vee, wt>
        let m = 3usize;
        let shapes: Vec<Vec<usize>> = vec![
            vec![1],
            vec![2],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2, 1],
            vec![2, 2],
        ];
        for shape in shapes {
            // all weights of entries <= m
            let total: usize = shape.iter().sum();
            let mut all = Vec::new();
            enumerate_weights(m, total, &mut vec![0; m], 0, &mut all);
            for w in all {
                for t in enumerate_ssyt(&shape, &w) {
                    for i in 1..m as u32 {
                        if let Some(up) = e_i(&t, i) {
                            assert_eq!(f_i(&up, i).as_ref(), Some(&t));
                            assert_eq!(eps_i(&up, i), eps_i(&t, i) - 1);
                            assert_eq!(phi_i(&up, i), phi_i(&t, i) + 1);
                        }
                        if let Some(dn) = f_i(&t, i) {
                            assert_eq!(e_i(&dn, i).as_ref(), Some(&t));
                        }
                        let wt = t.weight(m);
                        let pairing =
                            wt[(i - 1) as usize] as i64 - wt[i as usize] as i64;
                        assert_eq!(
                            phi_i(&t, i) as i64 - eps_i(&t, i) as i64,
                            pairing
                        );
                    }
                }
            }
        }
    }

    fn enumerate_weights(
        m: usize,
        total: usize,
        cur: &mut Vec<usize>,
        pos: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == m {
            if cur.iter().sum::<usize>() == total {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=total {
            cur[pos] = v;
            if cur[..=pos].iter().sum::<usize>() <= total {
                enumerate_weights(m, total, cur, pos + 1, out);
            }
        }
        cur[pos] = 0;
    }

    #[test]
    fn sort_published_examples() {
        let t = tab(&[&[1, 1, 3], &[2, 2], &[4]]);
        assert_eq!(sort(&t), vec![3, 1, 2]);
        let t2 = tab(&[&[1, 2], &[3, 4]]);
        assert_eq!(sort(&t2), vec![2, 3, 1]);
        let single = tab(&[&[1]]);
        assert_eq!(sort(&single), Vec::<u32>::new());
    }

    #[test]
    fn string_candidate_tables() {
        // weight-space tables with raising statistics: the 5-element A4 case
        let t5 = string_candidates(&[2, 2, 1], &[1, 1, 1, 1, 1]);
        let mut eps5: Vec<Vec<u64>> = t5.iter().map(|(_, e)| e.clone()).collect();
        eps5.sort();
        let mut expect5 = vec![
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 0],
        ];
        expect5.sort();
        assert_eq!(eps5, expect5);
        // the distinguished element carries (1,0,1,0)
        let distinguished = tab(&[&[1, 2], &[3, 4], &[5]]);
        assert!(t5.iter().any(|(t, e)| t == &distinguished && e == &vec![1, 0, 1, 0]));
        // the 9-element A5 case
        let t9 = string_candidates(&[2, 2, 1, 1], &[1; 6]);
        let mut eps9: Vec<Vec<u64>> = t9.iter().map(|(_, e)| e.clone()).collect();
        eps9.sort();
        let mut expect9 = vec![
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 1],
            vec![0, 1, 0, 0, 1],
            vec![1, 0, 0, 0, 1],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![1, 0, 0, 1, 0],
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 1, 0, 0],
        ];
        expect9.sort();
        assert_eq!(eps9, expect9);
        let distinguished9 = tab(&[&[1, 3], &[2, 5], &[4], &[6]]);
        assert!(t9
            .iter()
            .any(|(t, e)| t == &distinguished9 && e == &vec![0, 1, 0, 1, 0]));
        // a trivial weight space: single highest-weight element
        let t1 = string_candidates(&[2, 1], &[2, 1]);
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].0, Tableau::highest_weight(&[2, 1]));
    }

    #[test]
    fn ssyt_enumeration_counts() {
        // shape (2,2,1), weight (1,1,1,1,1): the five standard tableaux
        let ts = enumerate_ssyt(&[2, 2, 1], &[1, 1, 1, 1, 1]);
        assert_eq!(ts.len(), 5);
        // shape (2,2,1,1), weight (1^6): nine standard tableaux
        let ts2 = enumerate_ssyt(&[2, 2, 1, 1], &[1; 6]);
        assert_eq!(ts2.len(), 9);
    }
}
