//! Finite-dimensional modules over the group algebra in characteristic 2.
//!
//! A module is a tuple of generator action matrices over GF(2^m) satisfying
//! the defining relations. Besides the dihedral group itself the same
//! machinery runs over the order-2 and Klein-four subgroups, which is what
//! restriction hands back; the p-group facts (projective = free, the norm
//! element detects free summands, local endomorphism rings) hold uniformly.

mod cover;
mod hom;
mod iso;

pub use cover::{Cover, SyzygyResult};
pub use hom::{
    ext1, ext1_dim, ext1_dim_via_cover_restriction, hom_space, map_kernel_submodule, phom_dim,
    stable_basis, stable_hom_dim, Ext1, HomSpace, ShortExactSeq,
};
pub use iso::{is_isomorphic, IsoConfig, IsoOutcome, DEFAULT_SEED};

use crate::dihedral::{GroupSpec, SubgroupId, SubgroupSpec};
use crate::error::{Error, Result};
use crate::exactalg::FieldMat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    Dihedral(GroupSpec),
    Cyclic2,
    Klein4,
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match self {
            GroupKind::Dihedral(g) => g.order(),
            GroupKind::Cyclic2 => 2,
            GroupKind::Klein4 => 4,
        }
    }

    pub fn gen_count(&self) -> usize {
        match self {
            GroupKind::Cyclic2 => 1,
            _ => 2,
        }
    }
}

/// A module, given by its generator action matrices.
#[derive(Clone, PartialEq)]
pub struct ModuleRep {
    kind: GroupKind,
    gens: Vec<FieldMat>,
}

/// A submodule presented by an inclusion matrix whose columns are a basis.
#[derive(Clone)]
pub struct Submodule {
    pub module: ModuleRep,
    pub inclusion: FieldMat,
}

/// A quotient with its projection and a fixed linear section.
#[derive(Clone)]
pub struct QuotientData {
    pub module: ModuleRep,
    pub projection: FieldMat,
    pub section: FieldMat,
}

impl std::fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleRep({:?}, dim {}, gf(2^{}))", self.kind, self.dim(), self.m())
    }
}

impl ModuleRep {
    /// Validated construction over the dihedral group.
    pub fn from_action(g: GroupSpec, s: FieldMat, t: FieldMat) -> Result<ModuleRep> {
        if s.rows() != s.cols() || t.rows() != t.cols() || s.rows() != t.rows() {
            return Err(Error::DimMismatch("action matrices must be square of equal size".into()));
        }
        if s.m() != t.m() {
            return Err(Error::RingMismatch("action matrices over different fields".into()));
        }
        let me = ModuleRep { kind: GroupKind::Dihedral(g), gens: vec![s, t] };
        me.validate()?;
        Ok(me)
    }

    pub fn from_gens(kind: GroupKind, gens: Vec<FieldMat>) -> Result<ModuleRep> {
        assert_eq!(gens.len(), kind.gen_count());
        let me = ModuleRep { kind, gens };
        me.validate()?;
        Ok(me)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim();
        let m = self.m();
        let id = FieldMat::identity(m, n);
        match self.kind {
            GroupKind::Dihedral(g) => {
                let (s, t) = (&self.gens[0], &self.gens[1]);
                if s.mul(s) != id {
                    return Err(Error::RelationViolation("sigma^2 = 1 fails".into()));
                }
                if t.mul(t) != id {
                    return Err(Error::RelationViolation("tau^2 = 1 fails".into()));
                }
                let e = 1u64 << (g.d - 2);
                if s.mul(t).pow(e) != t.mul(s).pow(e) {
                    return Err(Error::RelationViolation(format!(
                        "(sigma tau)^{e} = (tau sigma)^{e} fails"
                    )));
                }
            }
            GroupKind::Cyclic2 => {
                let a = &self.gens[0];
                if a.mul(a) != id {
                    return Err(Error::RelationViolation("involution relation fails".into()));
                }
            }
            GroupKind::Klein4 => {
                let (x, y) = (&self.gens[0], &self.gens[1]);
                if x.mul(x) != id || y.mul(y) != id {
                    return Err(Error::RelationViolation("involution relation fails".into()));
                }
                if x.mul(y) != y.mul(x) {
                    return Err(Error::RelationViolation("commutation relation fails".into()));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn group(&self) -> Option<GroupSpec> {
        match self.kind {
            GroupKind::Dihedral(g) => Some(g),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.gens[0].rows()
    }

    pub fn m(&self) -> u8 {
        self.gens[0].m()
    }

    pub fn gens(&self) -> &[FieldMat] {
        &self.gens
    }

    pub fn s(&self) -> &FieldMat {
        &self.gens[0]
    }

    pub fn t(&self) -> &FieldMat {
        assert!(self.gens.len() > 1);
        &self.gens[1]
    }

    /// The trivial one-dimensional module.
    pub fn trivial(kind: GroupKind, m: u8) -> ModuleRep {
        let gens = (0..kind.gen_count()).map(|_| FieldMat::identity(m, 1)).collect();
        ModuleRep { kind, gens }
    }

    /// The zero module.
    pub fn zero(kind: GroupKind, m: u8) -> ModuleRep {
        let gens = (0..kind.gen_count()).map(|_| FieldMat::zeros(m, 0, 0)).collect();
        ModuleRep { kind, gens }
    }

    /// The regular module: permutation matrices of left multiplication in the
    /// fixed element order.
    pub fn regular(kind: GroupKind, m: u8) -> ModuleRep {
        match kind {
            GroupKind::Dihedral(g) => {
                let n = g.order();
                let elems = g.elements();
                let mut s = FieldMat::zeros(m, n, n);
                let mut t = FieldMat::zeros(m, n, n);
                for (col, &h) in elems.iter().enumerate() {
                    s.set(g.elem_index(g.mul(g.sigma(), h)), col, 1);
                    t.set(g.elem_index(g.mul(g.tau(), h)), col, 1);
                }
                ModuleRep { kind, gens: vec![s, t] }
            }
            GroupKind::Cyclic2 => {
                let a = FieldMat::from_rows(m, &[vec![0, 1], vec![1, 0]]);
                ModuleRep { kind, gens: vec![a] }
            }
            GroupKind::Klein4 => {
                // element order 1, x, y, xy
                let x = FieldMat::from_rows(
                    m,
                    &[vec![0, 1, 0, 0], vec![1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 0]],
                );
                let y = FieldMat::from_rows(
                    m,
                    &[vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 0, 0, 0], vec![0, 1, 0, 0]],
                );
                ModuleRep { kind, gens: vec![x, y] }
            }
        }
    }

    /// Free module of the given rank: basis blocks (copy, group element).
    pub fn free(kind: GroupKind, m: u8, rank: usize) -> ModuleRep {
        let reg = Self::regular(kind, m);
        if rank == 1 {
            return reg;
        }
        let idt = FieldMat::identity(m, rank);
        let gens = reg.gens.iter().map(|g| idt.kron(g)).collect();
        ModuleRep { kind, gens }
    }

    /// All element action matrices in the fixed element order.
    pub fn element_matrices(&self) -> Vec<FieldMat> {
        match self.kind {
            GroupKind::Dihedral(g) => {
                let r = self.gens[0].mul(&self.gens[1]);
                let mut out = Vec::with_capacity(g.order());
                let mut rj = FieldMat::identity(self.m(), self.dim());
                for j in 0..g.rot_order() {
                    out.push(rj.clone());
                    out.push(rj.mul(&self.gens[0]));
                    if j + 1 < g.rot_order() {
                        rj = rj.mul(&r);
                    }
                }
                out
            }
            GroupKind::Cyclic2 => {
                vec![FieldMat::identity(self.m(), self.dim()), self.gens[0].clone()]
            }
            GroupKind::Klein4 => {
                let id = FieldMat::identity(self.m(), self.dim());
                let xy = self.gens[0].mul(&self.gens[1]);
                vec![id, self.gens[0].clone(), self.gens[1].clone(), xy]
            }
        }
    }

    /// Action matrix of a single dihedral group element.
    pub fn act_elem(&self, e: crate::dihedral::GroupElem) -> FieldMat {
        let GroupKind::Dihedral(_) = self.kind else { panic!("dihedral modules only") };
        let r = self.gens[0].mul(&self.gens[1]);
        let mut out = r.pow(e.j as u64);
        if e.s == 1 {
            out = out.mul(&self.gens[0]);
        }
        out
    }

    /// Matrix of the norm element (sum over the group).
    pub fn norm_matrix(&self) -> FieldMat {
        let id = FieldMat::identity(self.m(), self.dim());
        match self.kind {
            GroupKind::Dihedral(g) => {
                let r = self.gens[0].mul(&self.gens[1]);
                // sum of r^j over a full cycle = product of (I + r^(2^i))
                let mut acc = id.clone();
                let mut p = r;
                for _ in 0..(g.d - 1) {
                    acc = acc.mul(&id.add(&p));
                    p = p.mul(&p);
                }
                acc.mul(&id.add(&self.gens[0]))
            }
            GroupKind::Cyclic2 => id.add(&self.gens[0]),
            GroupKind::Klein4 => id.add(&self.gens[0]).mul(&id.add(&self.gens[1])),
        }
    }

    /// rad(M) = sum of (1 + g) M over the generators, as a submodule.
    pub fn radical(&self) -> Submodule {
        let id = FieldMat::identity(self.m(), self.dim());
        let mut stacked: Option<FieldMat> = None;
        for g in &self.gens {
            let aug = id.add(g);
            stacked = Some(match stacked {
                None => aug,
                Some(prev) => prev.hstack(&aug),
            });
        }
        let basis = stacked.unwrap().column_space();
        self.submodule_from_basis(basis)
    }

    /// soc(M) = joint kernel of the augmented generators.
    pub fn socle(&self) -> Submodule {
        let id = FieldMat::identity(self.m(), self.dim());
        let mut stacked: Option<FieldMat> = None;
        for g in &self.gens {
            let aug = id.add(g);
            stacked = Some(match stacked {
                None => aug,
                Some(prev) => prev.vstack(&aug),
            });
        }
        let basis = stacked.unwrap().kernel();
        self.submodule_from_basis(basis)
    }

    /// Wrap an action-invariant column space as a module. The basis columns
    /// must be linearly independent and the span closed under the action.
    pub fn submodule_from_basis(&self, basis: FieldMat) -> Submodule {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                basis
                    .solve(&g.mul(&basis))
                    .expect("basis span is not closed under the group action")
            })
            .collect();
        let module = ModuleRep { kind: self.kind, gens };
        debug_assert!(module.validate().is_ok());
        Submodule { module, inclusion: basis }
    }

    /// Smallest submodule containing the given columns.
    pub fn span_submodule(&self, seed: &FieldMat) -> Submodule {
        let mut basis = seed.column_space();
        loop {
            let mut grown = basis.clone();
            for g in &self.gens {
                grown = grown.hstack(&g.mul(&basis));
            }
            let next = grown.column_space();
            if next.cols() == basis.cols() {
                break;
            }
            basis = next;
        }
        self.submodule_from_basis(basis)
    }

    /// Quotient by the span of the given columns (which must be a submodule).
    pub fn quotient_by(&self, sub_basis: &FieldMat) -> QuotientData {
        let n = self.dim();
        let m = self.m();
        let rt = sub_basis.transpose().rref();
        let pivots = rt.pivots.clone();
        let reduced = rt.mat; // rows are the reduced basis vectors
        let rank = pivots.len();
        let comp: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // projection: reduce each standard vector by the subspace, keep
        // complement coordinates
        let mut projection = FieldMat::zeros(m, comp.len(), n);
        for i in 0..n {
            // v = e_i reduced modulo the subspace
            let mut v: Vec<u8> = vec![0; n];
            v[i] = 1;
            for (k, &p) in pivots.iter().enumerate().take(rank) {
                let c = v[p];
                if c != 0 {
                    for j in 0..n {
                        let b = reduced.get(k, j);
                        if b != 0 {
                            v[j] ^= crate::exactalg::gf::mul_val(m, c, b);
                        }
                    }
                }
            }
            for (qi, &q) in comp.iter().enumerate() {
                if v[q] != 0 {
                    projection.set(qi, i, v[q]);
                }
            }
        }
        let mut section = FieldMat::zeros(m, n, comp.len());
        for (qi, &q) in comp.iter().enumerate() {
            section.set(q, qi, 1);
        }
        let gens = self.gens.iter().map(|g| projection.mul(&g.mul(&section))).collect();
        let module = ModuleRep { kind: self.kind, gens };
        debug_assert!(module.validate().is_ok());
        QuotientData { module, projection, section }
    }

    pub fn direct_sum(&self, o: &ModuleRep) -> ModuleRep {
        assert_eq!(self.kind, o.kind);
        assert_eq!(self.m(), o.m());
        let n1 = self.dim();
        let n2 = o.dim();
        let gens = self
            .gens
            .iter()
            .zip(&o.gens)
            .map(|(a, b)| {
                let mut g = FieldMat::zeros(self.m(), n1 + n2, n1 + n2);
                for i in 0..n1 {
                    for j in 0..n1 {
                        let v = a.get(i, j);
                        if v != 0 {
                            g.set(i, j, v);
                        }
                    }
                }
                for i in 0..n2 {
                    for j in 0..n2 {
                        let v = b.get(i, j);
                        if v != 0 {
                            g.set(n1 + i, n1 + j, v);
                        }
                    }
                }
                g
            })
            .collect();
        ModuleRep { kind: self.kind, gens }
    }

    /// Tensor product with the diagonal action.
    pub fn tensor(&self, o: &ModuleRep) -> ModuleRep {
        assert_eq!(self.kind, o.kind);
        assert_eq!(self.m(), o.m());
        let gens = self.gens.iter().zip(&o.gens).map(|(a, b)| a.kron(b)).collect();
        ModuleRep { kind: self.kind, gens }
    }

    /// Dual module; the generators are involutions, so inverse-transpose is
    /// plain transpose.
    pub fn dual(&self) -> ModuleRep {
        let gens = self.gens.iter().map(FieldMat::transpose).collect();
        ModuleRep { kind: self.kind, gens }
    }

    /// Hom_k(M, N) = M* tensor N with the diagonal action.
    pub fn hom_module(&self, o: &ModuleRep) -> ModuleRep {
        self.dual().tensor(o)
    }

    /// Restriction to one of the stored subgroups.
    pub fn restrict(&self, sub: &SubgroupSpec) -> ModuleRep {
        let GroupKind::Dihedral(g) = self.kind else { panic!("restriction needs a dihedral module") };
        let zmat = || self.gens[0].mul(&self.gens[1]).pow(1u64 << (g.d - 2));
        let me = match sub.id {
            SubgroupId::CSigma => {
                ModuleRep { kind: GroupKind::Cyclic2, gens: vec![self.gens[0].clone()] }
            }
            SubgroupId::CTau => {
                ModuleRep { kind: GroupKind::Cyclic2, gens: vec![self.gens[1].clone()] }
            }
            SubgroupId::Center => ModuleRep { kind: GroupKind::Cyclic2, gens: vec![zmat()] },
            SubgroupId::K1 => {
                ModuleRep { kind: GroupKind::Klein4, gens: vec![self.gens[0].clone(), zmat()] }
            }
            SubgroupId::K2 => {
                ModuleRep { kind: GroupKind::Klein4, gens: vec![self.gens[1].clone(), zmat()] }
            }
            SubgroupId::Whole => self.clone(),
        };
        debug_assert!(me.validate().is_ok());
        me
    }

    /// Action matrix of a subgroup element on a subgroup-kind module, indexed
    /// through the canonical element list of the subgroup.
    fn subgroup_elem_matrix(&self, sub: &SubgroupSpec, h: crate::dihedral::GroupElem) -> FieldMat {
        let pos = sub
            .elements
            .iter()
            .position(|&e| e == h)
            .expect("element does not lie in the subgroup");
        match self.kind {
            GroupKind::Cyclic2 => match pos {
                0 => FieldMat::identity(self.m(), self.dim()),
                _ => self.gens[0].clone(),
            },
            GroupKind::Klein4 => match pos {
                0 => FieldMat::identity(self.m(), self.dim()),
                1 => self.gens[0].clone(),
                2 => self.gens[1].clone(),
                _ => self.gens[0].mul(&self.gens[1]),
            },
            GroupKind::Dihedral(_) => self.act_elem(h),
        }
    }
}

/// Right multiplication by a group element on the regular module. It commutes
/// with the left action, so images of right multiplications are submodules.
pub fn regular_right_mult(g: GroupSpec, m: u8, h: crate::dihedral::GroupElem) -> FieldMat {
    let n = g.order();
    let mut out = FieldMat::zeros(m, n, n);
    for (col, &x) in g.elements().iter().enumerate() {
        out.set(g.elem_index(g.mul(x, h)), col, 1);
    }
    out
}

/// The left ideal kD(1+h) of the regular module: the column span of right
/// multiplication by 1 + h.
pub fn principal_ideal(g: GroupSpec, m: u8, h: crate::dihedral::GroupElem) -> Submodule {
    let kd = ModuleRep::regular(GroupKind::Dihedral(g), m);
    let id = FieldMat::identity(m, g.order());
    let basis = id.add(&regular_right_mult(g, m, h)).column_space();
    kd.submodule_from_basis(basis)
}

/// Induction from a stored subgroup in the fixed coset order: block
/// permutation matrices of dimension [D : H] * dim(M_H).
pub fn induce(g: GroupSpec, sub: &SubgroupSpec, module_h: &ModuleRep) -> Result<ModuleRep> {
    let expected_kind = match sub.id {
        SubgroupId::CSigma | SubgroupId::CTau | SubgroupId::Center => GroupKind::Cyclic2,
        SubgroupId::K1 | SubgroupId::K2 => GroupKind::Klein4,
        SubgroupId::Whole => GroupKind::Dihedral(g),
    };
    if module_h.kind() != expected_kind {
        return Err(Error::UnknownSubgroup(format!(
            "module kind {:?} does not match subgroup {}",
            module_h.kind(),
            sub.id.name()
        )));
    }
    if sub.id == SubgroupId::Whole {
        return Ok(module_h.clone());
    }
    let t = sub.coset_reps.len();
    let dh = module_h.dim();
    let m = module_h.m();
    let build = |gen: crate::dihedral::GroupElem| -> FieldMat {
        let mut out = FieldMat::zeros(m, t * dh, t * dh);
        for (i, &x) in sub.coset_reps.iter().enumerate() {
            let (i2, h) = g.coset_decompose(sub, g.mul(gen, x));
            let block = module_h.subgroup_elem_matrix(sub, h);
            for a in 0..dh {
                for b in 0..dh {
                    let v = block.get(a, b);
                    if v != 0 {
                        out.set(i2 * dh + a, i * dh + b, v);
                    }
                }
            }
        }
        out
    };
    ModuleRep::from_action(g, build(g.sigma()), build(g.tau()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::make_group;

    fn d3() -> GroupSpec {
        make_group(3).unwrap()
    }

    #[test]
    fn trivial_module_validates() {
        let g = d3();
        let k = ModuleRep::from_action(g, FieldMat::identity(1, 1), FieldMat::identity(1, 1)).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn unipotent_pair_accepted_for_d4() {
        // S = T = [[1,1],[0,1]]: ST = I, so the long relation holds trivially.
        let g = make_group(4).unwrap();
        let u = FieldMat::from_rows(1, &[vec![1, 1], vec![0, 1]]);
        assert!(ModuleRep::from_action(g, u.clone(), u).is_ok());
    }

    #[test]
    fn relation_violation_is_named() {
        let g = d3();
        let bad = FieldMat::from_rows(1, &[vec![1, 1], vec![1, 0]]); // not an involution
        let id = FieldMat::identity(1, 2);
        match ModuleRep::from_action(g, bad, id) {
            Err(Error::RelationViolation(msg)) => assert!(msg.contains("sigma")),
            other => panic!("expected relation violation, got {other:?}"),
        }
    }

    #[test]
    fn regular_module_dimensions_and_layers() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        assert_eq!(kd.dim(), 8);
        assert_eq!(kd.socle().module.dim(), 1);
        assert_eq!(kd.radical().module.dim(), 7);
    }

    #[test]
    fn radical_of_trivial_is_zero() {
        let g = d3();
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        assert_eq!(k.radical().module.dim(), 0);
        assert_eq!(k.socle().module.dim(), 1);
    }

    #[test]
    fn socle_of_regular_is_spanned_by_norm_image() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        // the stated generator [(1+s)(1+t)]^(2^(d-2)) spans the socle
        let id = FieldMat::identity(1, 8);
        let w = id.add(kd.s()).mul(&id.add(kd.t())).pow(1 << (g.d - 2));
        let soc = kd.socle();
        assert_eq!(w.column_space().cols(), 1);
        // the socle inclusion and the image of w have the same span
        let combined = soc.inclusion.hstack(&w.column_space());
        assert_eq!(combined.rank(), 1);
    }

    #[test]
    fn socle_is_additive_on_direct_sums() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        let sum = kd.direct_sum(&k);
        assert_eq!(
            sum.socle().module.dim(),
            kd.socle().module.dim() + k.socle().module.dim()
        );
    }

    #[test]
    fn tensor_unit_and_dual_involution() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        assert_eq!(k.tensor(&kd), kd);
        assert_eq!(kd.dual().dual(), kd);
        assert_eq!(k.tensor(&kd).dim(), kd.dim());
    }

    #[test]
    fn restriction_of_regular_is_free_over_c2() {
        for d in 3..=4 {
            let g = make_group(d).unwrap();
            let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
            let res = kd.restrict(&g.subgroup(SubgroupId::CSigma));
            let id = FieldMat::identity(1, kd.dim());
            // free rank over C2 = rank(I + action)
            assert_eq!(id.add(res.s()).rank(), 1 << (d - 1));
        }
    }

    #[test]
    fn induced_trivial_matches_ideal() {
        let g = d3();
        let sub = g.subgroup(SubgroupId::CSigma);
        let k2 = ModuleRep::trivial(GroupKind::Cyclic2, 1);
        let ind = induce(g, &sub, &k2).unwrap();
        assert_eq!(ind.dim(), 4);
        // kD(1+sigma) has the same dimension
        let ideal = principal_ideal(g, 1, g.sigma());
        assert_eq!(ideal.module.dim(), 4);
    }

    #[test]
    fn induce_rejects_wrong_kind() {
        let g = d3();
        let sub = g.subgroup(SubgroupId::CSigma);
        let wrong = ModuleRep::trivial(GroupKind::Klein4, 1);
        assert!(induce(g, &sub, &wrong).is_err());
    }

    #[test]
    fn element_matrices_multiply_like_the_group() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let mats = kd.element_matrices();
        let elems = g.elements();
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let prod = g.elem_index(g.mul(a, b));
                assert_eq!(mats[i].mul(&mats[j]), mats[prod]);
            }
        }
    }

    #[test]
    fn quotient_dimensions() {
        let g = d3();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let soc = kd.socle();
        let q = kd.quotient_by(&soc.inclusion);
        assert_eq!(q.module.dim(), 7);
    }
}
