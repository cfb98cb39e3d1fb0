//! Dense matrices over GF(2^m).
//!
//! The m = 1 case packs rows into machine words (least-significant bit of
//! word 0 is column 0) and does all elimination with XOR on whole words.
//! For m > 1 entries are bytes and products go through the scalar tables.
//! Everything is exact; elimination is deterministic with ties broken by
//! the smallest row/column index.

use rand::RngCore;

use super::gf::{inv_val, mul_val, FieldElem};

#[derive(Clone, PartialEq, Eq)]
enum Store {
    /// m == 1, row-major words, `wpr` words per row.
    Bits { wpr: usize, w: Vec<u64> },
    /// m > 1, row-major bytes.
    Bytes(Vec<u8>),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldMat {
    m: u8,
    rows: usize,
    cols: usize,
    store: Store,
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref {
    pub mat: FieldMat,
    pub pivots: Vec<usize>,
}

impl FieldMat {
    pub fn zeros(m: u8, rows: usize, cols: usize) -> Self {
        assert!((1..=8).contains(&m));
        let store = if m == 1 {
            let wpr = cols.div_ceil(64).max(1);
            Store::Bits { wpr, w: vec![0; wpr * rows] }
        } else {
            Store::Bytes(vec![0; rows * cols])
        };
        FieldMat { m, rows, cols, store }
    }

    pub fn identity(m: u8, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a.set(i, i, 1);
        }
        a
    }

    pub fn from_rows(m: u8, rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut a = Self::zeros(m, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                a.set(i, j, v);
            }
        }
        a
    }

    pub fn random<R: RngCore>(rng: &mut R, m: u8, rows: usize, cols: usize) -> Self {
        let mut a = Self::zeros(m, rows, cols);
        let lim = 1u16 << m;
        for i in 0..rows {
            for j in 0..cols {
                a.set(i, j, (rng.next_u32() as u16 % lim) as u8);
            }
        }
        a
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.store {
            Store::Bits { wpr, w } => ((w[i * wpr + j / 64] >> (j % 64)) & 1) as u8,
            Store::Bytes(b) => b[i * self.cols + j],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(i < self.rows && j < self.cols);
        match &mut self.store {
            Store::Bits { wpr, w } => {
                let idx = i * *wpr + j / 64;
                let bit = 1u64 << (j % 64);
                if v & 1 == 1 {
                    w[idx] |= bit;
                } else {
                    w[idx] &= !bit;
                }
            }
            Store::Bytes(b) => b[i * self.cols + j] = v,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits { w, .. } => w.iter().all(|&x| x == 0),
            Store::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    /// Raw row words for the bit-packed path.
    fn row_words(&self, i: usize) -> &[u64] {
        match &self.store {
            Store::Bits { wpr, w } => &w[i * wpr..(i + 1) * wpr],
            Store::Bytes(_) => unreachable!(),
        }
    }

    pub fn add(&self, o: &FieldMat) -> FieldMat {
        assert_eq!((self.m, self.rows, self.cols), (o.m, o.rows, o.cols));
        let mut out = self.clone();
        match (&mut out.store, &o.store) {
            (Store::Bits { w, .. }, Store::Bits { w: ow, .. }) => {
                for (a, b) in w.iter_mut().zip(ow) {
                    *a ^= b;
                }
            }
            (Store::Bytes(b), Store::Bytes(ob)) => {
                for (a, x) in b.iter_mut().zip(ob) {
                    *a ^= x; // char-2 addition is XOR of coefficient vectors
                }
            }
            _ => unreachable!(),
        }
        out
    }

    pub fn mul(&self, o: &FieldMat) -> FieldMat {
        assert_eq!(self.m, o.m, "field degree mismatch");
        assert_eq!(self.cols, o.rows, "inner dimension mismatch");
        let mut out = FieldMat::zeros(self.m, self.rows, o.cols);
        match (&self.store, &o.store, &mut out.store) {
            (Store::Bits { wpr: awpr, w: aw }, Store::Bits { wpr: bwpr, w: bw }, Store::Bits { wpr: owpr, w: ow }) => {
                let (awpr, bwpr, owpr) = (*awpr, *bwpr, *owpr);
                for i in 0..self.rows {
                    let arow = &aw[i * awpr..(i + 1) * awpr];
                    let orow = &mut ow[i * owpr..(i + 1) * owpr];
                    for (jw, &aword) in arow.iter().enumerate() {
                        let mut bits = aword;
                        while bits != 0 {
                            let j = jw * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            let brow = &bw[j * bwpr..(j + 1) * bwpr];
                            for (dst, src) in orow.iter_mut().zip(brow) {
                                *dst ^= src;
                            }
                        }
                    }
                }
            }
            _ => {
                for i in 0..self.rows {
                    for l in 0..self.cols {
                        let a = self.get(i, l);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..o.cols {
                            let b = o.get(l, j);
                            if b != 0 {
                                let p = mul_val(self.m, a, b);
                                out.set(i, j, out.get(i, j) ^ p);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: u8) -> FieldMat {
        if c == 1 {
            return self.clone();
        }
        let mut out = FieldMat::zeros(self.m, self.rows, self.cols);
        if c == 0 {
            return out;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(i, j, mul_val(self.m, c, v));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FieldMat {
        let mut out = FieldMat::zeros(self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(j, i, v);
                }
            }
        }
        out
    }

    /// Kronecker product, row-major convention. The GF(2) path composes whole
    /// rows with word shifts.
    pub fn kron(&self, o: &FieldMat) -> FieldMat {
        assert_eq!(self.m, o.m);
        let mut out = FieldMat::zeros(self.m, self.rows * o.rows, self.cols * o.cols);
        if let (Store::Bits { wpr: awpr, w: aw }, Store::Bits { wpr: bwpr, w: bw }, Store::Bits { wpr: owpr, w: ow }) =
            (&self.store, &o.store, &mut out.store)
        {
            for i1 in 0..self.rows {
                let arow = &aw[i1 * awpr..(i1 + 1) * awpr];
                for i2 in 0..o.rows {
                    let brow = &bw[i2 * bwpr..(i2 + 1) * bwpr];
                    let orow = &mut ow[(i1 * o.rows + i2) * *owpr..(i1 * o.rows + i2 + 1) * *owpr];
                    for (jw, &aword) in arow.iter().enumerate() {
                        let mut bits = aword;
                        while bits != 0 {
                            let j1 = jw * 64 + bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            let base = j1 * o.cols;
                            let (word0, off) = (base / 64, (base % 64) as u32);
                            for (k, &bword) in brow.iter().enumerate() {
                                if bword == 0 {
                                    continue;
                                }
                                orow[word0 + k] ^= bword << off;
                                if off != 0 {
                                    let spill = bword >> (64 - off);
                                    if word0 + k + 1 < orow.len() {
                                        orow[word0 + k + 1] ^= spill;
                                    } else {
                                        debug_assert_eq!(spill, 0);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            return out;
        }
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..o.rows {
                    for j2 in 0..o.cols {
                        let b = o.get(i2, j2);
                        if b != 0 {
                            out.set(i1 * o.rows + i2, j1 * o.cols + j2, mul_val(self.m, a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, o: &FieldMat) -> FieldMat {
        assert_eq!(self.m, o.m);
        assert_eq!(self.rows, o.rows);
        let mut out = FieldMat::zeros(self.m, self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(i, j, v);
                }
            }
            for j in 0..o.cols {
                let v = o.get(i, j);
                if v != 0 {
                    out.set(i, self.cols + j, v);
                }
            }
        }
        out
    }

    pub fn vstack(&self, o: &FieldMat) -> FieldMat {
        assert_eq!(self.m, o.m);
        assert_eq!(self.cols, o.cols);
        let mut out = FieldMat::zeros(self.m, self.rows + o.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                let v = o.get(i, j);
                if v != 0 {
                    out.set(self.rows + i, j, v);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u64) -> FieldMat {
        assert_eq!(self.rows, self.cols);
        let mut acc = FieldMat::identity(self.m, self.rows);
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

    pub fn col(&self, j: usize) -> FieldMat {
        let mut out = FieldMat::zeros(self.m, self.rows, 1);
        for i in 0..self.rows {
            let v = self.get(i, j);
            if v != 0 {
                out.set(i, 0, v);
            }
        }
        out
    }

    pub fn set_col(&mut self, j: usize, v: &FieldMat) {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, self.rows);
        for i in 0..self.rows {
            self.set(i, j, v.get(i, 0));
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> FieldMat {
        let mut out = FieldMat::zeros(self.m, self.rows, idx.len());
        for (k, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(i, k, v);
                }
            }
        }
        out
    }

    /// Flatten row-major to a single row, for rank computations on sets of maps.
    pub fn vec_row(&self) -> FieldMat {
        let mut out = FieldMat::zeros(self.m, 1, self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(0, i * self.cols + j, v);
                }
            }
        }
        out
    }

    /// Lift a 0/1 matrix into GF(2^m2).
    pub fn lift_to(&self, m2: u8) -> FieldMat {
        assert_eq!(self.m, 1, "only GF(2) matrices embed canonically");
        let mut out = FieldMat::zeros(m2, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != 0 {
                    out.set(i, j, 1);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.store {
            Store::Bits { wpr, w } => {
                for k in 0..*wpr {
                    w.swap(a * *wpr + k, b * *wpr + k);
                }
            }
            Store::Bytes(bts) => {
                for k in 0..self.cols {
                    bts.swap(a * self.cols + k, b * self.cols + k);
                }
            }
        }
    }

    /// row[dst] += c * row[src]
    fn addmul_row(&mut self, dst: usize, src: usize, c: u8) {
        if c == 0 {
            return;
        }
        match &mut self.store {
            Store::Bits { wpr, w } => {
                let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
                let (head, tail) = w.split_at_mut(hi * *wpr);
                let (drow, srow) = if dst < src {
                    (&mut head[dst * *wpr..(dst + 1) * *wpr], &tail[..*wpr])
                } else {
                    let s = &head[lo * *wpr..(lo + 1) * *wpr];
                    (&mut tail[..*wpr], s)
                };
                for (d, s) in drow.iter_mut().zip(srow) {
                    *d ^= s;
                }
            }
            Store::Bytes(bts) => {
                for k in 0..self.cols {
                    let v = mul_val(self.m, c, bts[src * self.cols + k]);
                    bts[dst * self.cols + k] ^= v;
                }
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: u8) {
        if c == 1 {
            return;
        }
        match &mut self.store {
            Store::Bits { .. } => {}
            Store::Bytes(bts) => {
                for k in 0..self.cols {
                    bts[i * self.cols + k] = mul_val(self.m, c, bts[i * self.cols + k]);
                }
            }
        }
    }

    /// Reduced row echelon form; fully reduced above and below pivots.
    pub fn rref(&self) -> Rref {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let mut piv = None;
            for i in r..a.rows {
                if a.get(i, c) != 0 {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            a.swap_rows(r, p);
            let inv = if a.m == 1 { 1 } else { inv_val(a.m, a.get(r, c)) };
            a.scale_row(r, inv);
            for i in 0..a.rows {
                if i != r {
                    let v = a.get(i, c);
                    if v != 0 {
                        a.addmul_row(i, r, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of {v : A v = 0}; columns of the result, deterministic order.
    pub fn kernel(&self) -> FieldMat {
        let Rref { mat, pivots } = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FieldMat::zeros(self.m, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, 1);
            for (prow, &pcol) in pivots.iter().enumerate().take(rank) {
                let v = mat.get(prow, f);
                if v != 0 {
                    out.set(pcol, k, v); // char 2: x_p = v * x_f
                }
            }
        }
        out
    }

    /// Particular solution of A X = B with free variables set to zero.
    pub fn solve(&self, rhs: &FieldMat) -> Option<FieldMat> {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.m, rhs.m);
        let aug = self.hstack(rhs);
        let Rref { mat, pivots } = aug.rref();
        // consistency: no pivot may land in the RHS block
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = FieldMat::zeros(self.m, self.cols, rhs.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                let v = mat.get(prow, self.cols + j);
                if v != 0 {
                    x.set(pcol, j, v);
                }
            }
        }
        Some(x)
    }

    /// Basis of the column space: the original pivot columns, in order.
    pub fn column_space(&self) -> FieldMat {
        let piv = self.rref().pivots;
        self.select_cols(&piv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<FieldMat> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&FieldMat::identity(self.m, self.rows));
        let Rref { mat, pivots } = aug.rref();
        if pivots.len() != self.rows || pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut out = FieldMat::zeros(self.m, self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                out.set(i, j, mat.get(i, self.cols + j));
            }
        }
        Some(out)
    }

    pub fn entries_u8(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Hex encoding of the packed row words, LSB of word 0 = column 0.
    pub fn rows_hex(&self) -> Vec<Vec<String>> {
        assert_eq!(self.m, 1);
        (0..self.rows)
            .map(|i| self.row_words(i).iter().map(|w| format!("{w:x}")).collect())
            .collect()
    }

    pub fn scalar_at(&self, i: usize, j: usize) -> FieldElem {
        FieldElem::new(self.m, self.get(i, j))
    }
}

impl std::fmt::Debug for FieldMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FieldMat gf(2^{}) {}x{}", self.m, self.rows, self.cols)?;
        for i in 0..self.rows.min(40) {
            for j in 0..self.cols.min(80) {
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
