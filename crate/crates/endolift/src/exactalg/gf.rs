//! Scalar arithmetic in GF(2^m) for 1 <= m <= 8.
//!
//! Elements are polynomials over GF(2) packed into the low bits of a byte,
//! reduced modulo a fixed irreducible polynomial per degree. The moduli are
//! compiled in as constants so that serialized data is portable between
//! builds. Multiplication for m > 1 goes through log/antilog tables built
//! once per degree; for m = 1 the operations collapse to XOR and AND.

use std::fmt;
use std::sync::OnceLock;

pub const MAX_DEGREE: u8 = 8;

/// Irreducible modulus per extension degree, bit i = coefficient of x^i.
/// Index 0 is unused.
pub const MODULI: [u16; 9] = [
    0,
    0b11,          // x + 1
    0b111,         // x^2 + x + 1
    0b1011,        // x^3 + x + 1
    0b1_0011,      // x^4 + x + 1
    0b10_0101,     // x^5 + x^2 + 1
    0b100_0011,    // x^6 + x + 1
    0b1000_0011,   // x^7 + x + 1
    0b1_0001_1011, // x^8 + x^4 + x^3 + x + 1
];

/// Polynomial product of two GF(2)[x] bit-polynomials reduced mod `MODULI[m]`.
pub fn poly_mul_mod(a: u16, b: u16, m: u8) -> u16 {
    let q = MODULI[m as usize];
    let mut a = a as u32;
    let b = b as u32;
    let mut acc = 0u32;
    for i in 0..m {
        if (b >> i) & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if (a >> m) & 1 == 1 {
            a ^= q as u32;
        }
    }
    acc as u16
}

struct Tables {
    exp: Vec<u8>, // exp[i] = g^i, length 2^m - 1
    log: Vec<u8>, // log[v] for v in 1..2^m
}

fn build_tables(m: u8) -> Tables {
    let order = (1u32 << m) - 1;
    // Smallest multiplicative generator for this modulus.
    let mut gen = 0u16;
    'outer: for cand in 2..(1u16 << m) {
        let mut v = 1u16;
        for step in 1..=order {
            v = poly_mul_mod(v, cand, m);
            if v == 1 {
                if step == order {
                    gen = cand;
                    break 'outer;
                }
                continue 'outer;
            }
        }
    }
    assert!(gen != 0 || m == 1, "no generator found for GF(2^{m})");
    if m == 1 {
        return Tables { exp: vec![1], log: vec![0] };
    }
    let mut exp = vec![0u8; order as usize];
    let mut log = vec![0u8; order as usize];
    let mut v = 1u16;
    for i in 0..order {
        exp[i as usize] = v as u8;
        log[(v - 1) as usize] = i as u8;
        v = poly_mul_mod(v, gen, m);
    }
    Tables { exp, log }
}

fn tables(m: u8) -> &'static Tables {
    static TABLES: OnceLock<Vec<Tables>> = OnceLock::new();
    let all = TABLES.get_or_init(|| (1..=MAX_DEGREE).map(build_tables).collect());
    &all[(m - 1) as usize]
}

/// An element of GF(2^m). The coefficient bit-vector lives in `val`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    m: u8,
    val: u8,
}

impl FieldElem {
    pub fn new(m: u8, val: u8) -> Self {
        assert!((1..=MAX_DEGREE).contains(&m), "degree {m} out of range");
        assert!(m == 8 || (val as u16) < (1 << m), "value {val} out of range for m={m}");
        FieldElem { m, val }
    }

    pub fn zero(m: u8) -> Self {
        FieldElem::new(m, 0)
    }

    pub fn one(m: u8) -> Self {
        FieldElem::new(m, 1)
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn val(&self) -> u8 {
        self.val
    }

    pub fn is_zero(&self) -> bool {
        self.val == 0
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        assert_eq!(self.m, o.m, "field degree mismatch");
        FieldElem { m: self.m, val: self.val ^ o.val }
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        assert_eq!(self.m, o.m, "field degree mismatch");
        if self.val == 0 || o.val == 0 {
            return FieldElem::zero(self.m);
        }
        if self.m == 1 {
            return FieldElem { m: 1, val: self.val & o.val };
        }
        let t = tables(self.m);
        let order = (1u32 << self.m) - 1;
        let s = t.log[(self.val - 1) as usize] as u32 + t.log[(o.val - 1) as usize] as u32;
        FieldElem { m: self.m, val: t.exp[(s % order) as usize] }
    }

    pub fn inv(&self) -> FieldElem {
        assert!(self.val != 0, "zero has no inverse");
        if self.m == 1 {
            return *self;
        }
        let t = tables(self.m);
        let order = (1u32 << self.m) - 1;
        let l = t.log[(self.val - 1) as usize] as u32;
        FieldElem { m: self.m, val: t.exp[((order - l) % order) as usize] }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf{}:{}", 1u16 << self.m, self.val)
    }
}

/// Scalar multiplication table row as raw values, used by the byte-matrix path.
pub fn mul_val(m: u8, a: u8, b: u8) -> u8 {
    FieldElem::new(m, a).mul(&FieldElem::new(m, b)).val()
}

pub fn inv_val(m: u8, a: u8) -> u8 {
    FieldElem::new(m, a).inv().val()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_irreducible(q: u16, m: u8) -> bool {
        // No root can be shared with any polynomial of lower degree: test all
        // products of two nonconstant polynomials of degree < m.
        for a in 2u32..(1 << m) {
            for b in 2u32..(1 << m) {
                // plain carry-less product, no reduction
                let mut prod = 0u32;
                for i in 0..16 {
                    if (b >> i) & 1 == 1 {
                        prod ^= a << i;
                    }
                }
                if prod == q as u32 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn moduli_are_irreducible() {
        for m in 1..=MAX_DEGREE {
            assert!(is_irreducible(MODULI[m as usize], m), "modulus for m={m} is reducible");
        }
    }

    #[test]
    fn gf2_is_xor_and() {
        let z = FieldElem::zero(1);
        let o = FieldElem::one(1);
        assert_eq!(o.add(&o), z);
        assert_eq!(o.mul(&o), o);
        assert_eq!(o.add(&z), o);
        assert_eq!(o.mul(&z), z);
    }

    #[test]
    fn field_axioms_small_degrees() {
        for m in 1..=4u8 {
            let n = 1u16 << m;
            for a in 0..n {
                let ea = FieldElem::new(m, a as u8);
                for b in 0..n {
                    let eb = FieldElem::new(m, b as u8);
                    assert_eq!(ea.add(&eb), eb.add(&ea));
                    assert_eq!(ea.mul(&eb), eb.mul(&ea));
                    for c in 0..n {
                        let ec = FieldElem::new(m, c as u8);
                        assert_eq!(ea.mul(&eb).mul(&ec), ea.mul(&eb.mul(&ec)));
                        assert_eq!(ea.mul(&eb.add(&ec)), ea.mul(&eb).add(&ea.mul(&ec)));
                    }
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for m in 1..=MAX_DEGREE {
            let n = 1u32 << m;
            for a in 1..n {
                let ea = FieldElem::new(m, a as u8);
                assert_eq!(ea.mul(&ea.inv()), FieldElem::one(m), "m={m} a={a}");
            }
        }
    }
}
