//! Dense matrices over Z/2^n and exact linear solving over that local ring.
//!
//! Solving works through a diagonalization U*A*V = diag(2^v_i) where U, V are
//! invertible over Z/2^n. Pivots are chosen with minimal 2-adic valuation over
//! the whole remaining submatrix, which keeps every elimination factor
//! integral. Solvability of A x = b then reduces to divisibility of U*b by the
//! diagonal, and the kernel is generated by scaled columns of V.

use super::zmod::{mask, unit_inv, val2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZnMat {
    n: u8,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl ZnMat {
    pub fn zeros(n: u8, rows: usize, cols: usize) -> Self {
        assert!((1..=62).contains(&n));
        ZnMat { n, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: u8, k: usize) -> Self {
        let mut a = Self::zeros(n, k, k);
        for i in 0..k {
            a.set(i, i, 1);
        }
        a
    }

    pub fn from_rows(n: u8, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut a = Self::zeros(n, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                a.set(i, j, v);
            }
        }
        a
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v & mask(self.n);
    }

    pub fn add(&self, o: &ZnMat) -> ZnMat {
        assert_eq!((self.n, self.rows, self.cols), (o.n, o.rows, o.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            *a = a.wrapping_add(*b) & mask(self.n);
        }
        out
    }

    pub fn sub(&self, o: &ZnMat) -> ZnMat {
        assert_eq!((self.n, self.rows, self.cols), (o.n, o.rows, o.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            *a = a.wrapping_sub(*b) & mask(self.n);
        }
        out
    }

    pub fn mul(&self, o: &ZnMat) -> ZnMat {
        assert_eq!(self.n, o.n);
        assert_eq!(self.cols, o.rows);
        let mut out = ZnMat::zeros(self.n, self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].wrapping_add(a.wrapping_mul(o.get(l, j))) & mask(self.n);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> ZnMat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.wrapping_mul(c) & mask(self.n);
        }
        out
    }

    pub fn kron(&self, o: &ZnMat) -> ZnMat {
        assert_eq!(self.n, o.n);
        let mut out = ZnMat::zeros(self.n, self.rows * o.rows, self.cols * o.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..o.rows {
                    for j2 in 0..o.cols {
                        let v = a.wrapping_mul(o.get(i2, j2)) & mask(self.n);
                        out.set(i1 * o.rows + i2, j1 * o.cols + j2, v);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ZnMat {
        let mut out = ZnMat::zeros(self.n, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> ZnMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = ZnMat::identity(self.n, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let mut t = 0u64;
        for i in 0..self.rows {
            t = t.wrapping_add(self.get(i, i));
        }
        t & mask(self.n)
    }

    /// Entrywise reduction to a lower level n2 <= n.
    pub fn reduce(&self, n2: u8) -> ZnMat {
        assert!(n2 <= self.n);
        let mut out = ZnMat::zeros(n2, self.rows, self.cols);
        for (dst, src) in out.data.iter_mut().zip(&self.data) {
            *dst = src & mask(n2);
        }
        out
    }

    /// Reinterpret canonical representatives at a higher level.
    pub fn lift_level(&self, n2: u8) -> ZnMat {
        assert!(n2 >= self.n);
        ZnMat { n: n2, rows: self.rows, cols: self.cols, data: self.data.clone() }
    }

    pub fn entries(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.data.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        for k in 0..self.cols {
            let idx = i * self.cols + k;
            self.data[idx] = self.data[idx].wrapping_mul(c) & mask(self.n);
        }
    }

    /// row[dst] -= c * row[src]
    fn submul_row(&mut self, dst: usize, src: usize, c: u64) {
        if c == 0 {
            return;
        }
        for k in 0..self.cols {
            let v = self.data[src * self.cols + k].wrapping_mul(c);
            let idx = dst * self.cols + k;
            self.data[idx] = self.data[idx].wrapping_sub(v) & mask(self.n);
        }
    }

    fn submul_col(&mut self, dst: usize, src: usize, c: u64) {
        if c == 0 {
            return;
        }
        for i in 0..self.rows {
            let v = self.data[i * self.cols + src].wrapping_mul(c);
            let idx = i * self.cols + dst;
            self.data[idx] = self.data[idx].wrapping_sub(v) & mask(self.n);
        }
    }
}

/// U*A*V = diag(2^diag[k]) with U, V invertible over Z/2^n.
pub struct ZnDiag {
    pub n: u8,
    pub u: ZnMat,
    pub v: ZnMat,
    /// valuations of the diagonal pivots, in elimination order
    pub diag: Vec<u8>,
    pub rows: usize,
    pub cols: usize,
}

/// One generator of the kernel module: a vector together with its additive
/// order 2^order_exp.
#[derive(Clone, Debug)]
pub struct ZnKernelGen {
    pub vector: Vec<u64>,
    pub order_exp: u8,
}

pub fn zn_diagonalize(a: &ZnMat) -> ZnDiag {
    let n = a.n;
    let mut w = a.clone();
    let mut u = ZnMat::identity(n, a.rows);
    let mut v = ZnMat::identity(n, a.cols);
    let lim = a.rows.min(a.cols);
    let mut diag = Vec::new();
    for k in 0..lim {
        // minimal-valuation pivot over the remaining submatrix
        let mut best: Option<(usize, usize, u8)> = None;
        for i in k..a.rows {
            for j in k..a.cols {
                let val = val2(n, w.get(i, j));
                if val < n && best.map_or(true, |(_, _, bv)| val < bv) {
                    best = Some((i, j, val));
                }
            }
        }
        let Some((pi, pj, pv)) = best else { break };
        w.swap_rows(k, pi);
        u.swap_rows(k, pi);
        w.swap_cols(k, pj);
        v.swap_cols(k, pj);
        let unit = w.get(k, k) >> pv;
        let inv = unit_inv(n, unit);
        w.scale_row(k, inv);
        u.scale_row(k, inv);
        // pivot is now exactly 2^pv; all other entries have valuation >= pv
        for i in 0..a.rows {
            if i != k {
                let f = w.get(i, k) >> pv;
                w.submul_row(i, k, f);
                u.submul_row(i, k, f);
            }
        }
        for j in 0..a.cols {
            if j != k {
                let f = w.get(k, j) >> pv;
                w.submul_col(j, k, f);
                v.submul_col(j, k, f);
            }
        }
        diag.push(pv);
    }
    ZnDiag { n, u, v, diag, rows: a.rows, cols: a.cols }
}

impl ZnDiag {
    /// All kernel generators of A, as columns of V scaled by 2^(n - v).
    pub fn kernel_gens(&self) -> Vec<ZnKernelGen> {
        let mut gens = Vec::new();
        for (k, &vk) in self.diag.iter().enumerate() {
            if vk > 0 {
                let col: Vec<u64> = (0..self.cols)
                    .map(|i| self.v.get(i, k).wrapping_mul(1u64 << (self.n - vk)) & mask(self.n))
                    .collect();
                gens.push(ZnKernelGen { vector: col, order_exp: vk });
            }
        }
        for k in self.diag.len()..self.cols {
            let col: Vec<u64> = (0..self.cols).map(|i| self.v.get(i, k)).collect();
            gens.push(ZnKernelGen { vector: col, order_exp: self.n });
        }
        gens
    }

    /// Particular solution of A x = b, or None with no solution.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut c = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.rows {
                acc = acc.wrapping_add(self.u.get(i, j).wrapping_mul(b[j]));
            }
            c[i] = acc & mask(self.n);
        }
        let mut y = vec![0u64; self.cols];
        for (k, &vk) in self.diag.iter().enumerate() {
            if c[k] & ((1u64 << vk) - 1) != 0 {
                return None; // 2^vk does not divide the transformed RHS
            }
            y[k] = c[k] >> vk;
        }
        for ck in c.iter().skip(self.diag.len()) {
            if *ck != 0 {
                return None;
            }
        }
        let mut x = vec![0u64; self.cols];
        for i in 0..self.cols {
            let mut acc = 0u64;
            for (k, &yk) in y.iter().enumerate() {
                acc = acc.wrapping_add(self.v.get(i, k).wrapping_mul(yk));
            }
            x[i] = acc & mask(self.n);
        }
        Some(x)
    }
}
