//! Arithmetic and small dense linear algebra over F_p for word-sized primes.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        // extended Euclid
        let (mut t, mut newt) = (0i128, 1i128);
        let (mut r, mut newr) = (self.p as i128, (a % self.p) as i128);
        while newr != 0 {
            let q = r / newr;
            (t, newt) = (newt, t - q * newt);
            (r, newr) = (newr, r - q * newr);
        }
        assert_eq!(r, 1, "not invertible mod p");
        (((t % self.p as i128) + self.p as i128) % self.p as i128) as u64
    }

    /// Reduce a rational n/d with small denominator mod p; panics if p | d.
    pub fn from_rat(&self, r: &crate::Rat) -> u64 {
        use num::traits::Signed;
        let p = num::BigInt::from(self.p);
        let n = ((r.numer() % &p) + &p) % &p;
        let d = ((r.denom() % &p) + &p) % &p;
        let d64: u64 = d.try_into().unwrap();
        assert!(d64 != 0, "denominator divisible by p");
        let n64: u64 = n.abs().try_into().unwrap();
        self.mul(n64, self.inv(d64))
    }
}

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FpMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FpMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, f: &Fp, other: &FpMat) -> FpMat {
        assert_eq!(self.cols, other.rows);
        let mut out = FpMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, f: &Fp, other: &FpMat) -> FpMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FpMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &Fp, c: u64) -> FpMat {
        FpMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self, f: &Fp) -> (FpMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // find pivot
            let mut pr = None;
            for i in r..m.rows {
                if m.get(i, c) != 0 {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            // swap rows
            for j in 0..m.cols {
                let (a, b) = (m.get(r, j), m.get(pr, j));
                m.set(r, j, b);
                m.set(pr, j, a);
            }
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                if i != r && m.get(i, c) != 0 {
                    let factor = m.get(i, c);
                    for j in 0..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self, f: &Fp) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the kernel (as rows).
    pub fn kernel(&self, f: &Fp) -> FpMat {
        let (rref, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FpMat::zero(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(rref.get(r, fc)));
            }
        }
        out
    }

    /// Rows spanning the row space, in RREF (canonical for subspace identity).
    pub fn row_space(&self, f: &Fp) -> FpMat {
        self.rref(f).0
    }

    /// Does the row space of `self` contain the given vector? When the rows
    /// are already in reduced echelon form this reduces `v` directly against
    /// the pivots; otherwise it falls back to a rank comparison.
    pub fn row_space_contains(&self, f: &Fp, v: &[u64]) -> bool {
        if let Some(pivots) = self.echelon_pivots() {
            let mut w = v.to_vec();
            for (r, &pc) in pivots.iter().enumerate() {
                let c = w[pc];
                if c != 0 {
                    for j in 0..self.cols {
                        w[j] = f.sub(w[j], f.mul(c, self.get(r, j)));
                    }
                }
            }
            return w.iter().all(|&x| x == 0);
        }
        let mut m = FpMat::zero(self.rows + 1, self.cols);
        m.data[..self.rows * self.cols].copy_from_slice(&self.data);
        m.data[self.rows * self.cols..].copy_from_slice(v);
        m.rank(f) == self.rank(f)
    }

    /// Pivot columns when the matrix is in reduced row echelon form.
    fn echelon_pivots(&self) -> Option<Vec<usize>> {
        let mut pivots = Vec::with_capacity(self.rows);
        let mut last: i64 = -1;
        for r in 0..self.rows {
            let pc = (0..self.cols).find(|&c| self.get(r, c) != 0)?;
            if (pc as i64) <= last || self.get(r, pc) != 1 {
                return None;
            }
            for rr in 0..self.rows {
                if rr != r && self.get(rr, pc) != 0 {
                    return None;
                }
            }
            pivots.push(pc);
            last = pc as i64;
        }
        Some(pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel() {
        let f = Fp::new(5);
        let mut m = FpMat::zero(2, 3);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 2, 1);
        let k = m.kernel(&f);
        assert_eq!(k.rows, 1);
        // kernel of [[1,2,0],[0,0,1]] is spanned by (-2, 1, 0) = (3, 1, 0) mod 5
        assert_eq!(&k.data, &[3, 1, 0]);
        assert_eq!(m.rank(&f), 2);
    }

    #[test]
    fn inverse() {
        let f = Fp::new(7);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
