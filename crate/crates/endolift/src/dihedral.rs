//! The dihedral 2-group D of order 2^d, presented by two involutions.
//!
//! D = <s, t | s^2 = 1 = t^2, (st)^(2^(d-2)) = (ts)^(2^(d-2))>. With r = s*t
//! of order 2^(d-1), every element has the normal form r^j s^e, stored as the
//! pair (j, e). The fixed element order is increasing j, then e, and all
//! coset machinery is deterministic so that induced matrices are reproducible
//! bit for bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub d: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupElem {
    /// rotation exponent modulo 2^(d-1)
    pub j: u32,
    /// reflection bit
    pub s: u8,
}

pub fn make_group(d: u32) -> Result<GroupSpec> {
    if d < 3 {
        return Err(Error::BadGroup(format!("group parameter d = {d} must be at least 3")));
    }
    if d > 16 {
        return Err(Error::BadGroup(format!("group parameter d = {d} exceeds the supported range")));
    }
    let g = GroupSpec { d };
    // verify the defining relations on the normal form
    let sigma = g.sigma();
    let tau = g.tau();
    debug_assert_eq!(g.mul(sigma, sigma), g.identity());
    debug_assert_eq!(g.mul(tau, tau), g.identity());
    let st = g.mul(sigma, tau);
    let ts = g.mul(tau, sigma);
    debug_assert_eq!(g.pow(st, 1 << (d - 2)), g.pow(ts, 1 << (d - 2)));
    Ok(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SubgroupId {
    CSigma,
    CTau,
    Center,
    K1,
    K2,
    Whole,
}

impl SubgroupId {
    pub fn name(&self) -> &'static str {
        match self {
            SubgroupId::CSigma => "C_sigma",
            SubgroupId::CTau => "C_tau",
            SubgroupId::Center => "Z",
            SubgroupId::K1 => "K1",
            SubgroupId::K2 => "K2",
            SubgroupId::Whole => "D",
        }
    }
}

/// A stored subgroup: its elements in a canonical generator-based order and
/// the ordered left-coset representatives.
#[derive(Clone, Debug)]
pub struct SubgroupSpec {
    pub id: SubgroupId,
    pub elements: Vec<GroupElem>,
    pub coset_reps: Vec<GroupElem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjClass {
    pub rep: GroupElem,
    pub size: usize,
    pub members: Vec<GroupElem>,
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        1usize << self.d
    }

    pub fn rot_order(&self) -> u32 {
        1u32 << (self.d - 1)
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem { j: 0, s: 0 }
    }

    pub fn sigma(&self) -> GroupElem {
        GroupElem { j: 0, s: 1 }
    }

    /// tau = r^(-1) sigma, so that sigma * tau = r.
    pub fn tau(&self) -> GroupElem {
        GroupElem { j: self.rot_order() - 1, s: 1 }
    }

    pub fn rotation(&self, j: u32) -> GroupElem {
        GroupElem { j: j % self.rot_order(), s: 0 }
    }

    /// The central involution z = (sigma tau)^(2^(d-2)) = r^(2^(d-2)).
    pub fn central(&self) -> GroupElem {
        GroupElem { j: 1 << (self.d - 2), s: 0 }
    }

    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        let n = self.rot_order();
        let j = if a.s == 0 { (a.j + b.j) % n } else { (a.j + n - b.j % n) % n };
        GroupElem { j, s: a.s ^ b.s }
    }

    pub fn inv(&self, a: GroupElem) -> GroupElem {
        if a.s == 1 {
            a // reflections are involutions
        } else {
            GroupElem { j: (self.rot_order() - a.j) % self.rot_order(), s: 0 }
        }
    }

    pub fn pow(&self, a: GroupElem, e: u64) -> GroupElem {
        let mut acc = self.identity();
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elem_order(&self, a: GroupElem) -> u64 {
        let mut acc = a;
        let mut k = 1u64;
        while acc != self.identity() {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    /// All elements in the fixed order: increasing j, then s.
    pub fn elements(&self) -> Vec<GroupElem> {
        let mut out = Vec::with_capacity(self.order());
        for j in 0..self.rot_order() {
            for s in 0..2u8 {
                out.push(GroupElem { j, s });
            }
        }
        out
    }

    pub fn elem_index(&self, a: GroupElem) -> usize {
        (a.j as usize) * 2 + a.s as usize
    }

    /// Express an element as the normal-form word (j, s) -> r^j s^s; this is
    /// the identity on the stored data but gives back the multiplication
    /// recipe for matrix evaluation.
    pub fn is_central(&self, a: GroupElem) -> bool {
        self.elements().iter().all(|&g| self.mul(a, g) == self.mul(g, a))
    }

    pub fn subgroup(&self, id: SubgroupId) -> SubgroupSpec {
        let z = self.central();
        let elements = match id {
            SubgroupId::CSigma => vec![self.identity(), self.sigma()],
            SubgroupId::CTau => vec![self.identity(), self.tau()],
            SubgroupId::Center => vec![self.identity(), z],
            SubgroupId::K1 => {
                let s = self.sigma();
                vec![self.identity(), s, z, self.mul(z, s)]
            }
            SubgroupId::K2 => {
                let t = self.tau();
                vec![self.identity(), t, z, self.mul(z, t)]
            }
            SubgroupId::Whole => self.elements(),
        };
        // closure sanity
        debug_assert!(elements
            .iter()
            .all(|&a| elements.iter().all(|&b| elements.contains(&self.mul(a, b)))));
        let coset_reps = self.left_coset_reps(&elements);
        SubgroupSpec { id, elements, coset_reps }
    }

    /// Greedy left-coset representatives in the fixed element order.
    fn left_coset_reps(&self, subgroup: &[GroupElem]) -> Vec<GroupElem> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if covered[self.elem_index(g)] {
                continue;
            }
            reps.push(g);
            for &h in subgroup {
                covered[self.elem_index(self.mul(g, h))] = true;
            }
        }
        reps
    }

    /// For y in D, the coset index i and subgroup element h with y = reps[i] * h.
    pub fn coset_decompose(&self, sub: &SubgroupSpec, y: GroupElem) -> (usize, GroupElem) {
        for (i, &x) in sub.coset_reps.iter().enumerate() {
            let h = self.mul(self.inv(x), y);
            if sub.elements.contains(&h) {
                return (i, h);
            }
        }
        unreachable!("coset representatives must partition the group");
    }

    /// Conjugacy classes in the canonical order: 1, z, rotation pairs
    /// r^j (0 < j < 2^(d-2)), the sigma reflection class, the tau reflection
    /// class. Computed by brute conjugation and cross-checked against the
    /// closed form.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let elems = self.elements();
        let mut seen = vec![false; self.order()];
        let mut raw: Vec<Vec<GroupElem>> = Vec::new();
        for &g in &elems {
            if seen[self.elem_index(g)] {
                continue;
            }
            let mut class = Vec::new();
            for &x in &elems {
                let c = self.mul(self.mul(x, g), self.inv(x));
                if !seen[self.elem_index(c)] {
                    seen[self.elem_index(c)] = true;
                    class.push(c);
                }
            }
            class.sort_by_key(|e| self.elem_index(*e));
            raw.push(class);
        }

        // canonical representatives, in canonical order
        let mut want: Vec<GroupElem> = vec![self.identity(), self.central()];
        for j in 1..(1u32 << (self.d - 2)) {
            want.push(self.rotation(j));
        }
        want.push(self.sigma());
        want.push(self.tau());

        let mut out = Vec::with_capacity(want.len());
        for rep in want {
            let class = raw
                .iter()
                .find(|c| c.contains(&rep))
                .expect("canonical representative missing from brute-force classes")
                .clone();
            out.push(ConjClass { rep, size: class.len(), members: class });
        }
        // cross-check against the closed form: 2^(d-2) + 3 classes covering D
        assert_eq!(out.len(), (1 << (self.d - 2)) + 3, "class count disagrees with closed form");
        assert_eq!(out.iter().map(|c| c.size).sum::<usize>(), self.order());
        assert_eq!(out.len(), raw.len(), "brute-force split found extra classes");
        out
    }
}
