//! Scalar arithmetic in Z/2^n for 1 <= n <= 62.

use std::fmt;

pub const MAX_LEVEL: u8 = 62;

#[inline]
pub fn mask(n: u8) -> u64 {
    debug_assert!((1..=MAX_LEVEL).contains(&n));
    (1u64 << n) - 1
}

/// 2-adic valuation of `v` in Z/2^n; zero gets valuation n.
#[inline]
pub fn val2(n: u8, v: u64) -> u8 {
    if v & mask(n) == 0 {
        n
    } else {
        (v & mask(n)).trailing_zeros() as u8
    }
}

/// Inverse of an odd element of Z/2^n by Newton iteration.
pub fn unit_inv(n: u8, v: u64) -> u64 {
    let v = v & mask(n);
    assert!(v & 1 == 1, "only odd elements are invertible in Z/2^n");
    let mut x = 1u64;
    // doubles correct bits each round; 6 rounds cover 64 bits
    for _ in 0..6 {
        x = x.wrapping_mul(2u64.wrapping_sub(v.wrapping_mul(x)));
    }
    x & mask(n)
}

/// An element of Z/2^n, stored as its canonical representative in [0, 2^n).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZmodElem {
    n: u8,
    value: u64,
}

impl ZmodElem {
    pub fn new(n: u8, value: u64) -> Self {
        assert!((1..=MAX_LEVEL).contains(&n), "level {n} out of range");
        ZmodElem { n, value: value & mask(n) }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn add(&self, o: &ZmodElem) -> ZmodElem {
        assert_eq!(self.n, o.n);
        ZmodElem::new(self.n, self.value.wrapping_add(o.value))
    }

    pub fn sub(&self, o: &ZmodElem) -> ZmodElem {
        assert_eq!(self.n, o.n);
        ZmodElem::new(self.n, self.value.wrapping_sub(o.value))
    }

    pub fn mul(&self, o: &ZmodElem) -> ZmodElem {
        assert_eq!(self.n, o.n);
        ZmodElem::new(self.n, self.value.wrapping_mul(o.value))
    }

    pub fn neg(&self) -> ZmodElem {
        ZmodElem::new(self.n, self.value.wrapping_neg())
    }

    /// Ring homomorphism Z/2^n -> Z/2^n2 for n2 <= n.
    pub fn reduce(&self, n2: u8) -> ZmodElem {
        assert!(n2 <= self.n);
        ZmodElem::new(n2, self.value)
    }
}

impl fmt::Debug for ZmodElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod 2^{})", self.value, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_inverses_mod_8() {
        for v in [1u64, 3, 5, 7] {
            assert_eq!(v.wrapping_mul(unit_inv(3, v)) & mask(3), 1);
        }
    }

    #[test]
    fn reduction_is_ring_hom() {
        for a in 0..16u64 {
            for b in 0..16u64 {
                let x = ZmodElem::new(4, a);
                let y = ZmodElem::new(4, b);
                assert_eq!(x.add(&y).reduce(2), x.reduce(2).add(&y.reduce(2)));
                assert_eq!(x.mul(&y).reduce(2), x.reduce(2).mul(&y.reduce(2)));
            }
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(val2(3, 0), 3);
        assert_eq!(val2(3, 4), 2);
        assert_eq!(val2(3, 6), 1);
        assert_eq!(val2(3, 5), 0);
    }
}
