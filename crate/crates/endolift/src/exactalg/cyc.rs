//! Exact arithmetic in the cyclotomic integer ring Z[x]/(x^(2^(d-2)) + 1).
//!
//! Here x stands for a primitive 2^(d-1)-th root of unity. All character
//! values of the dihedral group of order 2^d live in this one ring; rational
//! values are detected by vanishing of the non-constant coordinates.

use std::fmt;

/// An element of Z[x]/(x^L + 1) with L = 2^(d-2), coefficients of 1, x, ..., x^(L-1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    d: u8,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn len_for(d: u8) -> usize {
        assert!(d >= 3, "group parameter must be at least 3");
        1usize << (d - 2)
    }

    pub fn zero(d: u8) -> Self {
        CycInt { d, coeffs: vec![0; Self::len_for(d)] }
    }

    pub fn one(d: u8) -> Self {
        Self::scalar(d, 1)
    }

    pub fn scalar(d: u8, c: i64) -> Self {
        let mut z = Self::zero(d);
        z.coeffs[0] = c;
        z
    }

    pub fn from_coeffs(d: u8, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), Self::len_for(d));
        CycInt { d, coeffs }
    }

    /// The monomial zeta^k, reduced by x^L = -1. Accepts any integer exponent.
    pub fn zeta_pow(d: u8, k: i64) -> Self {
        let l = Self::len_for(d) as i64;
        let period = 2 * l; // zeta has order 2^(d-1)
        let e = k.rem_euclid(period);
        let mut z = Self::zero(d);
        if e < l {
            z.coeffs[e as usize] = 1;
        } else {
            z.coeffs[(e - l) as usize] = -1;
        }
        z
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.d, o.d);
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        CycInt { d: self.d, coeffs }
    }

    pub fn sub(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.d, o.d);
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        CycInt { d: self.d, coeffs }
    }

    pub fn neg(&self) -> CycInt {
        CycInt { d: self.d, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: i64) -> CycInt {
        CycInt { d: self.d, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Negacyclic convolution: polynomial product followed by x^L -> -1.
    pub fn mul(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.d, o.d);
        let l = self.coeffs.len();
        let mut out = vec![0i64; l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let k = i + j;
                if k < l {
                    out[k] += a * b;
                } else {
                    out[k - l] -= a * b;
                }
            }
        }
        CycInt { d: self.d, coeffs: out }
    }

    /// Complex conjugation zeta -> zeta^(-1).
    pub fn conj(&self) -> CycInt {
        let l = self.coeffs.len();
        let mut out = vec![0i64; l];
        out[0] = self.coeffs[0];
        for a in 1..l {
            // zeta^(-a) = -zeta^(L - a)
            out[l - a] -= self.coeffs[a];
        }
        CycInt { d: self.d, coeffs: out }
    }

    /// Trace to Z under the Galois action: 2^(d-2) times the constant coordinate.
    pub fn trace(&self) -> i64 {
        (self.coeffs.len() as i64) * self.coeffs[0]
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn rational_value(&self) -> Option<i64> {
        if self.is_rational() {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Exact division by an integer; None when any coordinate is not divisible.
    pub fn div_exact(&self, c: i64) -> Option<CycInt> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            if a % c != 0 {
                return None;
            }
            out.push(a / c);
        }
        Some(CycInt { d: self.d, coeffs: out })
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc{:?}", self.coeffs)
    }
}
