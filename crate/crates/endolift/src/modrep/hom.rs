//! Homomorphism spaces, stable Hom, first extension groups and the pushout
//! construction of extension middle terms.
//!
//! A map factors through a projective exactly when it factors through the
//! projective cover of its target (the cover is surjective and projectives
//! are injective here), and equivalently when it extends along the syzygy
//! inclusion. Both routes are implemented; they must agree and the tests
//! compare them.

use super::{ModuleRep, Submodule};
use crate::error::{Error, Result};
use crate::exactalg::FieldMat;

/// Basis of Hom_{kG}(source, target); every member intertwines all generators.
pub struct HomSpace {
    pub basis: Vec<FieldMat>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A validated short exact sequence 0 -> left -> middle -> right -> 0.
/// `inj` has shape dim(middle) x dim(left), `surj` has dim(right) x dim(middle).
#[derive(Clone)]
pub struct ShortExactSeq {
    pub left: ModuleRep,
    pub middle: ModuleRep,
    pub right: ModuleRep,
    pub inj: FieldMat,
    pub surj: FieldMat,
}

impl ShortExactSeq {
    pub fn validate(&self) -> Result<()> {
        if self.left.dim() + self.right.dim() != self.middle.dim() {
            return Err(Error::DimMismatch("dimensions do not add up in the sequence".into()));
        }
        if self.inj.rank() != self.left.dim() {
            return Err(Error::CertificateFailure("inclusion is not injective".into()));
        }
        if self.surj.rank() != self.right.dim() {
            return Err(Error::CertificateFailure("projection is not surjective".into()));
        }
        if !self.surj.mul(&self.inj).is_zero() {
            return Err(Error::CertificateFailure("composite of the maps is nonzero".into()));
        }
        for ((gl, gm), gr) in self
            .left
            .gens()
            .iter()
            .zip(self.middle.gens())
            .zip(self.right.gens())
        {
            if self.inj.mul(gl) != gm.mul(&self.inj) {
                return Err(Error::CertificateFailure("inclusion is not a module map".into()));
            }
            if self.surj.mul(gm) != gr.mul(&self.surj) {
                return Err(Error::CertificateFailure("projection is not a module map".into()));
            }
        }
        Ok(())
    }
}

/// Solve the intertwiner system X g_M = g_N X for all generators.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> HomSpace {
    assert_eq!(m.kind(), n.kind(), "modules over different groups");
    assert_eq!(m.m(), n.m(), "modules over different fields");
    let dm = m.dim();
    let dn = n.dim();
    if dm == 0 || dn == 0 {
        return HomSpace { basis: Vec::new() };
    }
    let fm = m.m();
    let idm = FieldMat::identity(fm, dm);
    let idn = FieldMat::identity(fm, dn);
    let mut sys: Option<FieldMat> = None;
    for (gm, gn) in m.gens().iter().zip(n.gens()) {
        // row-major vec(X): vec(X gm) = (I ⊗ gm^T) vec X, vec(gn X) = (gn ⊗ I) vec X
        let block = idn.kron(&gm.transpose()).add(&gn.kron(&idm));
        sys = Some(match sys {
            None => block,
            Some(prev) => prev.vstack(&block),
        });
    }
    let ker = sys.unwrap().kernel();
    let mut basis = Vec::with_capacity(ker.cols());
    for k in 0..ker.cols() {
        let mut x = FieldMat::zeros(fm, dn, dm);
        for a in 0..dn {
            for b in 0..dm {
                let v = ker.get(a * dm + b, k);
                if v != 0 {
                    x.set(a, b, v);
                }
            }
        }
        debug_assert_eq!(x.mul(m.s()), n.s().mul(&x));
        basis.push(x);
    }
    HomSpace { basis }
}

/// Spanning set of the maps M -> N that factor through a projective,
/// obtained by composing M -> kG (functional maps) with kG -> N (orbit maps
/// of the top generators of N through its cover).
fn phom_spanning(m: &ModuleRep, n: &ModuleRep) -> Vec<FieldMat> {
    if m.dim() == 0 || n.dim() == 0 {
        return Vec::new();
    }
    let tops = n.top_generators();
    let mut out = Vec::with_capacity(tops.len() * m.dim());
    for &ti in &tops {
        let mut v = FieldMat::zeros(n.m(), n.dim(), 1);
        v.set(ti, 0, 1);
        let pc = n.orbit_map(&v);
        for i in 0..m.dim() {
            let mut f = FieldMat::zeros(m.m(), 1, m.dim());
            f.set(0, i, 1);
            let phi = m.functional_map(&f);
            out.push(pc.mul(&phi));
        }
    }
    out
}

fn rank_of_maps(maps: &[FieldMat]) -> usize {
    let mut rows: Option<FieldMat> = None;
    for x in maps {
        let r = x.vec_row();
        rows = Some(match rows {
            None => r,
            Some(prev) => prev.vstack(&r),
        });
    }
    rows.map_or(0, |r| r.rank())
}

/// Dimension of the subspace of maps factoring through a projective.
pub fn phom_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    rank_of_maps(&phom_spanning(m, n))
}

/// dim Hom(M, N) - dim PHom(M, N).
pub fn stable_hom_dim(m: &ModuleRep, n: &ModuleRep) -> usize {
    hom_space(m, n).dim() - phom_dim(m, n)
}

/// Representatives of a basis of Hom(M, N) / PHom(M, N), deterministic.
pub fn stable_basis(m: &ModuleRep, n: &ModuleRep) -> Vec<FieldMat> {
    let hom = hom_space(m, n);
    if hom.dim() == 0 {
        return Vec::new();
    }
    let width = n.dim() * m.dim();
    let mut rows = FieldMat::zeros(m.m(), 0, width);
    for x in phom_spanning(m, n) {
        rows = rows.vstack(&x.vec_row());
    }
    let mut rank = rows.rank();
    let mut reps = Vec::new();
    for x in &hom.basis {
        let cand = rows.vstack(&x.vec_row());
        let r2 = cand.rank();
        if r2 > rank {
            rows = cand;
            rank = r2;
            reps.push(x.clone());
        }
    }
    reps
}

/// Ext^1(V, W) together with everything needed to realize middle terms:
/// the syzygy presentation 0 -> Omega V -> P -> V -> 0 and stable-basis
/// cocycles Omega V -> W.
pub struct Ext1 {
    pub v: ModuleRep,
    pub w: ModuleRep,
    pub omega: ModuleRep,
    pub cover_p: ModuleRep,
    /// dim(P) x dim(Omega V)
    pub inj: FieldMat,
    /// dim(V) x dim(P)
    pub surj: FieldMat,
    pub basis: Vec<FieldMat>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The cocycle of a coefficient vector over the stable basis.
    pub fn cocycle(&self, coeffs: &[u8]) -> FieldMat {
        assert_eq!(coeffs.len(), self.basis.len());
        let mut acc = FieldMat::zeros(self.w.m(), self.w.dim(), self.omega.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                acc = acc.add(&b.scale(*c));
            }
        }
        acc
    }

    /// Pushout of the cover sequence along a cocycle: the extension
    /// 0 -> W -> E -> V -> 0 of that class. The flag reports the zero class
    /// (split sequence), which is legitimate output, not an error.
    pub fn middle(&self, coeffs: &[u8]) -> (ShortExactSeq, bool) {
        let cocycle = self.cocycle(coeffs);
        let is_zero = coeffs.iter().all(|&c| c == 0);
        let graph = cocycle.vstack(&self.inj);
        let wp = self.w.direct_sum(&self.cover_p);
        let quot = wp.quotient_by(&graph);
        // W -> E
        let mut incl_w = FieldMat::zeros(self.w.m(), wp.dim(), self.w.dim());
        for i in 0..self.w.dim() {
            incl_w.set(i, i, 1);
        }
        let inj_mid = quot.projection.mul(&incl_w);
        // E -> V through the P-part of the chosen section
        let mut bottom = FieldMat::zeros(self.w.m(), self.cover_p.dim(), quot.module.dim());
        for i in 0..self.cover_p.dim() {
            for j in 0..quot.module.dim() {
                let v = quot.section.get(self.w.dim() + i, j);
                if v != 0 {
                    bottom.set(i, j, v);
                }
            }
        }
        let surj_mid = self.surj.mul(&bottom);
        let ses = ShortExactSeq {
            left: self.w.clone(),
            middle: quot.module,
            right: self.v.clone(),
            inj: inj_mid,
            surj: surj_mid,
        };
        ses.validate().expect("pushout sequence must be exact");
        (ses, is_zero)
    }
}

/// Ext^1 via stable Hom(Omega V, W) with an explicit cocycle basis.
pub fn ext1(v: &ModuleRep, w: &ModuleRep) -> Ext1 {
    let syz = v.syzygy(1);
    let basis = stable_basis(&syz.module, w);
    Ext1 {
        v: v.clone(),
        w: w.clone(),
        omega: syz.module,
        cover_p: syz.ses.middle,
        inj: syz.ses.inj,
        surj: syz.ses.surj,
        basis,
    }
}

pub fn ext1_dim(v: &ModuleRep, w: &ModuleRep) -> usize {
    ext1(v, w).dim()
}

/// Independent route to dim Ext^1: cokernel of Hom(P, W) -> Hom(Omega V, W)
/// restricting along the syzygy inclusion.
pub fn ext1_dim_via_cover_restriction(v: &ModuleRep, w: &ModuleRep) -> usize {
    let syz = v.syzygy(1);
    let omega = &syz.module;
    let hom_dim = hom_space(omega, w).dim();
    if omega.dim() == 0 || w.dim() == 0 {
        return 0;
    }
    let order = v.kind().order();
    let t = syz.ses.middle.dim() / order;
    let mut images = Vec::new();
    for c in 0..t {
        // rows of the inclusion belonging to block c
        let mut kc = FieldMat::zeros(v.m(), order, omega.dim());
        for i in 0..order {
            for j in 0..omega.dim() {
                let val = syz.ses.inj.get(c * order + i, j);
                if val != 0 {
                    kc.set(i, j, val);
                }
            }
        }
        for b in 0..w.dim() {
            let mut e = FieldMat::zeros(w.m(), w.dim(), 1);
            e.set(b, 0, 1);
            images.push(w.orbit_map(&e).mul(&kc));
        }
    }
    hom_dim - rank_of_maps(&images)
}

/// A submodule wrapper for the kernel of an explicit module map.
pub fn map_kernel_submodule(m: &ModuleRep, map: &FieldMat) -> Submodule {
    assert_eq!(map.cols(), m.dim());
    m.submodule_from_basis(map.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{make_group, SubgroupId};
    use crate::modrep::{induce, GroupKind, ModuleRep};

    fn d3_regular() -> (crate::dihedral::GroupSpec, ModuleRep, ModuleRep) {
        let g = make_group(3).unwrap();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        (g, kd, k)
    }

    #[test]
    fn stable_hom_of_trivial_is_one() {
        let (_, _, k) = d3_regular();
        assert_eq!(stable_hom_dim(&k, &k), 1);
    }

    #[test]
    fn stable_hom_of_projective_vanishes() {
        let (_, kd, _) = d3_regular();
        assert_eq!(stable_hom_dim(&kd, &kd), 0);
    }

    #[test]
    fn ext_of_trivial_by_trivial_is_two_dimensional() {
        let (_, _, k) = d3_regular();
        assert_eq!(ext1_dim(&k, &k), 2);
        assert_eq!(ext1_dim_via_cover_restriction(&k, &k), 2);
    }

    #[test]
    fn ext_from_projective_vanishes() {
        let (_, kd, k) = d3_regular();
        assert_eq!(ext1_dim(&kd, &k), 0);
        assert_eq!(ext1_dim(&kd, &kd), 0);
    }

    #[test]
    fn zero_class_gives_split_middle() {
        let (_, _, k) = d3_regular();
        let e = ext1(&k, &k);
        let (ses, is_zero) = e.middle(&vec![0; e.dim()]);
        assert!(is_zero);
        assert_eq!(ses.middle.dim(), 2);
        // split: the middle has two trivial summands, so both generators act
        // as the identity
        assert_eq!(*ses.middle.s(), crate::exactalg::FieldMat::identity(1, 2));
        assert_eq!(*ses.middle.t(), crate::exactalg::FieldMat::identity(1, 2));
    }

    #[test]
    fn nonzero_self_extensions_of_trivial_are_the_three_unipotent_pairs() {
        use crate::modrep::{is_isomorphic, IsoConfig, IsoOutcome};
        let (g, _, k) = d3_regular();
        let e = ext1(&k, &k);
        assert_eq!(e.dim(), 2);
        let u = crate::exactalg::FieldMat::from_rows(1, &[vec![1, 1], vec![0, 1]]);
        let id2 = crate::exactalg::FieldMat::identity(1, 2);
        let targets = vec![
            ModuleRep::from_action(g, u.clone(), id2.clone()).unwrap(),
            ModuleRep::from_action(g, id2.clone(), u.clone()).unwrap(),
            ModuleRep::from_action(g, u.clone(), u.clone()).unwrap(),
        ];
        let cfg = IsoConfig::default();
        let mut matched = vec![false; 3];
        for coeffs in [[1, 0], [0, 1], [1, 1]] {
            let (ses, is_zero) = e.middle(&coeffs);
            assert!(!is_zero);
            assert_eq!(ses.middle.dim(), 2);
            let mut hit = None;
            for (i, t) in targets.iter().enumerate() {
                if let IsoOutcome::Iso(_) = is_isomorphic(&ses.middle, t, &cfg).unwrap() {
                    hit = Some(i);
                    break;
                }
            }
            matched[hit.expect("middle must be one of the three pairs")] = true;
        }
        assert!(matched.iter().all(|&b| b), "all three middles must occur");
    }

    #[test]
    fn frobenius_reciprocity_dimensions() {
        let (g, kd, _) = d3_regular();
        for id in [SubgroupId::CSigma, SubgroupId::CTau, SubgroupId::K1, SubgroupId::K2] {
            let sub = g.subgroup(id);
            let kind = if matches!(id, SubgroupId::K1 | SubgroupId::K2) {
                GroupKind::Klein4
            } else {
                GroupKind::Cyclic2
            };
            let kh = ModuleRep::trivial(kind, 1);
            let ind = induce(g, &sub, &kh).unwrap();
            let lhs = hom_space(&ind, &kd).dim();
            let rhs = hom_space(&kh, &kd.restrict(&sub)).dim();
            assert_eq!(lhs, rhs, "subgroup {}", id.name());
        }
    }

    #[test]
    fn hom_dims_match_under_duality() {
        let (g, kd, k) = d3_regular();
        let e = kd.quotient_by(&kd.socle().inclusion).module;
        for (a, b) in [(&kd, &k), (&k, &e), (&e, &kd)] {
            assert_eq!(hom_space(a, b).dim(), hom_space(&b.dual(), &a.dual()).dim());
        }
        let _ = g;
    }
}
