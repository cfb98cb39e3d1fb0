//! Ring-tagged dense matrices and their JSON encoding.
//!
//! The JSON schema is `{ring: {kind, m|n|d}, rows, cols, data}` where data is
//! an array of hex-encoded row words for GF(2) (least-significant bit of word
//! 0 is column 0), an array of integer rows for GF(2^m) with m > 1 and for
//! Z/2^n, and an array of rows of coefficient vectors for the cyclotomic ring.

use serde_json::{json, Value};

use super::cyc::CycInt;
use super::fieldmat::FieldMat;
use super::znmat::{zn_diagonalize, ZnKernelGen, ZnMat};
use crate::error::{Error, Result};

/// Minimal matrix over the cyclotomic integer ring; enough for evaluating
/// the two-dimensional irreducible representations.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMat {
    d: u8,
    rows: usize,
    cols: usize,
    data: Vec<CycInt>,
}

impl CycMat {
    pub fn zeros(d: u8, rows: usize, cols: usize) -> Self {
        CycMat { d, rows, cols, data: vec![CycInt::zero(d); rows * cols] }
    }

    pub fn identity(d: u8, k: usize) -> Self {
        let mut a = Self::zeros(d, k, k);
        for i in 0..k {
            a.set(i, i, CycInt::one(d));
        }
        a
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycInt) {
        assert_eq!(v.d(), self.d);
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &CycMat) -> CycMat {
        assert_eq!(self.d, o.d);
        assert_eq!(self.cols, o.rows);
        let mut out = CycMat::zeros(self.d, self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j).add(&a.mul(o.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> CycInt {
        assert_eq!(self.rows, self.cols);
        let mut t = CycInt::zero(self.d);
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }
}

/// A dense matrix over one of the three scalar rings of the workbench.
#[derive(Clone, PartialEq)]
pub enum DenseMatrix {
    Field(FieldMat),
    Zmod(ZnMat),
    Cyc(CycMat),
}

impl DenseMatrix {
    pub fn rows(&self) -> usize {
        match self {
            DenseMatrix::Field(a) => a.rows(),
            DenseMatrix::Zmod(a) => a.rows(),
            DenseMatrix::Cyc(a) => a.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            DenseMatrix::Field(a) => a.cols(),
            DenseMatrix::Zmod(a) => a.cols(),
            DenseMatrix::Cyc(a) => a.cols(),
        }
    }

    pub fn ring_name(&self) -> String {
        match self {
            DenseMatrix::Field(a) => format!("gf(2^{})", a.m()),
            DenseMatrix::Zmod(a) => format!("z/2^{}", a.n()),
            DenseMatrix::Cyc(a) => format!("cyc(d={})", a.d()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DenseMatrix::Field(a) => {
                let data: Value = if a.m() == 1 {
                    json!(a.rows_hex())
                } else {
                    json!(a.entries_u8())
                };
                json!({
                    "ring": {"kind": "gf", "m": a.m()},
                    "rows": a.rows(),
                    "cols": a.cols(),
                    "data": data,
                })
            }
            DenseMatrix::Zmod(a) => json!({
                "ring": {"kind": "zmod", "n": a.n()},
                "rows": a.rows(),
                "cols": a.cols(),
                "data": a.entries(),
            }),
            DenseMatrix::Cyc(a) => {
                let data: Vec<Vec<Vec<i64>>> = (0..a.rows())
                    .map(|i| (0..a.cols()).map(|j| a.get(i, j).coeffs().to_vec()).collect())
                    .collect();
                json!({
                    "ring": {"kind": "cyc", "d": a.d()},
                    "rows": a.rows(),
                    "cols": a.cols(),
                    "data": data,
                })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<DenseMatrix> {
        let bad = |msg: &str| Error::MalformedFile { path: "<matrix>".into(), reason: msg.into() };
        let ring = v.get("ring").ok_or_else(|| bad("missing ring"))?;
        let kind = ring.get("kind").and_then(Value::as_str).ok_or_else(|| bad("missing ring.kind"))?;
        let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| bad("missing rows"))? as usize;
        let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| bad("missing cols"))? as usize;
        let data = v.get("data").and_then(Value::as_array).ok_or_else(|| bad("missing data"))?;
        if data.len() != rows {
            return Err(bad("row count mismatch"));
        }
        match kind {
            "gf" => {
                let m = ring.get("m").and_then(Value::as_u64).ok_or_else(|| bad("missing ring.m"))? as u8;
                let mut a = FieldMat::zeros(m, rows, cols);
                if m == 1 {
                    for (i, row) in data.iter().enumerate() {
                        let words = row.as_array().ok_or_else(|| bad("bad row"))?;
                        for (wi, wv) in words.iter().enumerate() {
                            let s = wv.as_str().ok_or_else(|| bad("word must be hex string"))?;
                            let w = u64::from_str_radix(s, 16)
                                .map_err(|_| bad("bad hex word"))?;
                            for b in 0..64 {
                                let j = wi * 64 + b;
                                if j < cols && (w >> b) & 1 == 1 {
                                    a.set(i, j, 1);
                                }
                            }
                        }
                    }
                } else {
                    for (i, row) in data.iter().enumerate() {
                        let ents = row.as_array().ok_or_else(|| bad("bad row"))?;
                        if ents.len() != cols {
                            return Err(bad("column count mismatch"));
                        }
                        for (j, e) in ents.iter().enumerate() {
                            a.set(i, j, e.as_u64().ok_or_else(|| bad("bad entry"))? as u8);
                        }
                    }
                }
                Ok(DenseMatrix::Field(a))
            }
            "zmod" => {
                let n = ring.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing ring.n"))? as u8;
                let mut a = ZnMat::zeros(n, rows, cols);
                for (i, row) in data.iter().enumerate() {
                    let ents = row.as_array().ok_or_else(|| bad("bad row"))?;
                    if ents.len() != cols {
                        return Err(bad("column count mismatch"));
                    }
                    for (j, e) in ents.iter().enumerate() {
                        a.set(i, j, e.as_u64().ok_or_else(|| bad("bad entry"))?);
                    }
                }
                Ok(DenseMatrix::Zmod(a))
            }
            "cyc" => {
                let d = ring.get("d").and_then(Value::as_u64).ok_or_else(|| bad("missing ring.d"))? as u8;
                let mut a = CycMat::zeros(d, rows, cols);
                for (i, row) in data.iter().enumerate() {
                    let ents = row.as_array().ok_or_else(|| bad("bad row"))?;
                    for (j, e) in ents.iter().enumerate() {
                        let cs = e
                            .as_array()
                            .ok_or_else(|| bad("bad coeff vector"))?
                            .iter()
                            .map(|c| c.as_i64().ok_or_else(|| bad("bad coeff")))
                            .collect::<Result<Vec<i64>>>()?;
                        a.set(i, j, CycInt::from_coeffs(d, cs));
                    }
                }
                Ok(DenseMatrix::Cyc(a))
            }
            other => Err(bad(&format!("unknown ring kind {other}"))),
        }
    }
}

/// Basis of the right kernel; defined for field entries only.
pub fn kernel_basis(a: &DenseMatrix) -> Result<DenseMatrix> {
    match a {
        DenseMatrix::Field(f) => Ok(DenseMatrix::Field(f.kernel())),
        other => Err(Error::RingMismatch(format!(
            "kernel_basis needs field entries, got {}",
            other.ring_name()
        ))),
    }
}

/// Solution-set description for `solve_linear`.
pub enum SolveOutcome {
    FieldSolution { particular: FieldMat, kernel: FieldMat },
    ZmodSolution { particular: Vec<u64>, kernel: Vec<ZnKernelGen> },
    NoSolution,
}

/// Solve A x = b exactly over GF(2^m) or Z/2^n.
pub fn solve_linear(a: &DenseMatrix, b: &DenseMatrix) -> Result<SolveOutcome> {
    if a.rows() != b.rows() || b.cols() != 1 {
        return Err(Error::DimMismatch(format!(
            "solve_linear: {}x{} vs rhs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    match (a, b) {
        (DenseMatrix::Field(fa), DenseMatrix::Field(fb)) => {
            if fa.m() != fb.m() {
                return Err(Error::RingMismatch("field degrees differ".into()));
            }
            match fa.solve(fb) {
                Some(x) => Ok(SolveOutcome::FieldSolution { particular: x, kernel: fa.kernel() }),
                None => Ok(SolveOutcome::NoSolution),
            }
        }
        (DenseMatrix::Zmod(za), DenseMatrix::Zmod(zb)) => {
            if za.n() != zb.n() {
                return Err(Error::RingMismatch("truncation levels differ".into()));
            }
            let rhs: Vec<u64> = (0..zb.rows()).map(|i| zb.get(i, 0)).collect();
            let d = zn_diagonalize(za);
            match d.solve(&rhs) {
                Some(x) => Ok(SolveOutcome::ZmodSolution { particular: x, kernel: d.kernel_gens() }),
                None => Ok(SolveOutcome::NoSolution),
            }
        }
        _ => Err(Error::RingMismatch(format!(
            "solve_linear over {} with rhs {}",
            a.ring_name(),
            b.ring_name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_gf2() {
        let a = FieldMat::from_rows(1, &[vec![1, 0, 1], vec![0, 1, 1]]);
        let dm = DenseMatrix::Field(a);
        let back = DenseMatrix::from_json(&dm.to_json()).unwrap();
        assert!(dm == back);
    }

    #[test]
    fn json_roundtrip_zmod() {
        let a = ZnMat::from_rows(3, &[vec![1, 7], vec![4, 0]]);
        let dm = DenseMatrix::Zmod(a);
        let back = DenseMatrix::from_json(&dm.to_json()).unwrap();
        assert!(dm == back);
    }

    #[test]
    fn json_roundtrip_cyc() {
        let mut a = CycMat::identity(4, 2);
        a.set(0, 1, CycInt::zeta_pow(4, 3));
        let dm = DenseMatrix::Cyc(a);
        let back = DenseMatrix::from_json(&dm.to_json()).unwrap();
        assert!(dm == back);
    }

    #[test]
    fn kernel_basis_rejects_zmod() {
        let a = DenseMatrix::Zmod(ZnMat::identity(2, 2));
        assert!(matches!(kernel_basis(&a), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn solve_linear_z4_zero_divisor() {
        let a = DenseMatrix::Zmod(ZnMat::from_rows(2, &[vec![2]]));
        let b1 = DenseMatrix::Zmod(ZnMat::from_rows(2, &[vec![1]]));
        let b2 = DenseMatrix::Zmod(ZnMat::from_rows(2, &[vec![2]]));
        assert!(matches!(solve_linear(&a, &b1).unwrap(), SolveOutcome::NoSolution));
        match solve_linear(&a, &b2).unwrap() {
            SolveOutcome::ZmodSolution { particular, kernel } => {
                assert!(particular[0] == 1 || particular[0] == 3);
                assert_eq!(kernel.len(), 1);
            }
            _ => panic!("expected a Z/4 solution"),
        }
    }
}
