//! Projective covers, syzygies and free-summand splitting.
//!
//! Over a 2-group algebra every projective is free, the cover of M is
//! (kG)^t with t = dim(M / rad M), and the norm element detects free
//! summands: its rank on M equals the number of free direct summands. The
//! splitting itself goes through explicit module maps M -> kG built from
//! linear functionals, which keeps the whole operation a handful of
//! word-packed matrix products.

use super::hom::ShortExactSeq;
use super::{GroupKind, ModuleRep, Submodule};
use crate::exactalg::FieldMat;

/// Projective cover data: the free module, the covering map and the chosen
/// top generators (standard basis indices of a complement of rad M).
pub struct Cover {
    pub p: ModuleRep,
    pub map: FieldMat,
    pub top: Vec<usize>,
}

pub struct SyzygyResult {
    pub module: ModuleRep,
    pub ses: ShortExactSeq,
}

impl ModuleRep {
    /// Standard basis indices of the fixed deterministic complement of rad(M),
    /// ties broken by column index.
    pub fn top_generators(&self) -> Vec<usize> {
        let rad = self.radical();
        let n = self.dim();
        let mut basis = rad.inclusion.clone();
        let mut rank = basis.rank();
        let mut top = Vec::new();
        for i in 0..n {
            if rank == n {
                break;
            }
            let mut e = FieldMat::zeros(self.m(), n, 1);
            e.set(i, 0, 1);
            let grown = basis.hstack(&e);
            let r2 = grown.rank();
            if r2 > rank {
                basis = grown;
                rank = r2;
                top.push(i);
            }
        }
        top
    }

    /// Rows f * rho(h^{-1}) for all h in the fixed element order, given a row
    /// functional f. This is the matrix of the module map M -> kG attached to
    /// f by x -> sum_g f(g x) g^{-1}.
    pub(super) fn functional_map(&self, f: &FieldMat) -> FieldMat {
        assert_eq!(f.rows(), 1);
        assert_eq!(f.cols(), self.dim());
        match self.kind() {
            GroupKind::Dihedral(g) => {
                let st = self.s().mul(self.t());
                let ts = self.t().mul(self.s());
                let mut out = FieldMat::zeros(self.m(), g.order(), self.dim());
                // h = r^j       -> h^{-1} = (ts)^j
                // h = r^j sigma -> h^{-1} = h, with matrix (st)^j s
                let mut w = f.clone(); // f * (ts)^j
                let mut u = f.clone(); // f * (st)^j
                for j in 0..g.rot_order() {
                    let row_rot = &w;
                    let row_ref = u.mul(self.s());
                    for c in 0..self.dim() {
                        let v = row_rot.get(0, c);
                        if v != 0 {
                            out.set(2 * j as usize, c, v);
                        }
                        let v2 = row_ref.get(0, c);
                        if v2 != 0 {
                            out.set(2 * j as usize + 1, c, v2);
                        }
                    }
                    if j + 1 < g.rot_order() {
                        w = w.mul(&ts);
                        u = u.mul(&st);
                    }
                }
                out
            }
            GroupKind::Cyclic2 => f.vstack(&f.mul(self.s())),
            GroupKind::Klein4 => {
                let fx = f.mul(self.s());
                let fy = f.mul(self.t());
                let fxy = fx.mul(self.t());
                f.vstack(&fx).vstack(&fy).vstack(&fxy)
            }
        }
    }

    /// Columns rho(g) v for all g in the fixed element order, as a
    /// dim x |G| matrix. This is the module map kG -> M sending 1 to v.
    pub(super) fn orbit_map(&self, v: &FieldMat) -> FieldMat {
        assert_eq!(v.cols(), 1);
        assert_eq!(v.rows(), self.dim());
        match self.kind() {
            GroupKind::Dihedral(g) => {
                let r = self.s().mul(self.t());
                let mut out = FieldMat::zeros(self.m(), self.dim(), g.order());
                let mut a = v.clone(); // r^j v
                let mut b = self.s().mul(v); // r^j (s v)
                for j in 0..g.rot_order() {
                    out.set_col(2 * j as usize, &a);
                    out.set_col(2 * j as usize + 1, &b);
                    if j + 1 < g.rot_order() {
                        a = r.mul(&a);
                        b = r.mul(&b);
                    }
                }
                out
            }
            GroupKind::Cyclic2 => v.hstack(&self.s().mul(v)),
            GroupKind::Klein4 => {
                let xv = self.s().mul(v);
                let yv = self.t().mul(v);
                let xyv = self.s().mul(&yv);
                v.hstack(&xv).hstack(&yv).hstack(&xyv)
            }
        }
    }

    /// Minimal projective cover (kG)^t -> M.
    pub fn projective_cover(&self) -> Cover {
        let top = self.top_generators();
        let t = top.len();
        let p = ModuleRep::free(self.kind(), self.m(), t);
        let mut map = FieldMat::zeros(self.m(), self.dim(), t * self.kind().order());
        for (c, &ti) in top.iter().enumerate() {
            let mut v = FieldMat::zeros(self.m(), self.dim(), 1);
            v.set(ti, 0, 1);
            let block = self.orbit_map(&v);
            for j in 0..block.cols() {
                let col = block.col(j);
                map.set_col(c * self.kind().order() + j, &col);
            }
        }
        debug_assert_eq!(map.rank(), self.dim(), "cover map must be surjective");
        Cover { p, map, top }
    }

    /// Syzygy: direction +1 is the kernel of the projective cover, -1 is the
    /// dual construction. The returned sequence is 0 -> Omega M -> P -> M -> 0
    /// (resp. 0 -> M -> P -> Omega^{-1} M -> 0).
    pub fn syzygy(&self, direction: i32) -> SyzygyResult {
        assert!(direction == 1 || direction == -1);
        if direction == 1 {
            let cover = self.projective_cover();
            let kernel = cover.map.kernel();
            let sub = cover.p.submodule_from_basis(kernel);
            let ses = ShortExactSeq {
                left: sub.module.clone(),
                middle: cover.p,
                right: self.clone(),
                inj: sub.inclusion,
                surj: cover.map,
            };
            ses.validate().expect("syzygy sequence must be exact");
            SyzygyResult { module: ses.left.clone(), ses }
        } else {
            let dual_res = self.dual().syzygy(1);
            // dualize 0 -> Omega(M*) -> P -> M* -> 0; free modules are
            // self-dual with the same matrices
            let omega_inv = dual_res.module.dual();
            let ses = ShortExactSeq {
                left: self.clone(),
                middle: dual_res.ses.middle.dual(),
                right: omega_inv.clone(),
                inj: dual_res.ses.surj.transpose(),
                surj: dual_res.ses.inj.transpose(),
            };
            ses.validate().expect("cosyzygy sequence must be exact");
            SyzygyResult { module: omega_inv, ses }
        }
    }

    pub fn syzygy_module(&self, direction: i32) -> ModuleRep {
        self.syzygy(direction).module
    }

    /// Iterated syzygy with sign.
    pub fn syzygy_pow(&self, a: i64) -> ModuleRep {
        let dir = if a >= 0 { 1 } else { -1 };
        let mut cur = self.clone();
        for _ in 0..a.unsigned_abs() {
            cur = cur.syzygy_module(dir);
        }
        cur
    }

    /// Norm matrix of a tensor product, assembled as a sum of Kronecker
    /// products of the factors' element matrices. Much cheaper than the
    /// product formula when the tensor is large.
    pub fn tensor_norm(a: &ModuleRep, b: &ModuleRep) -> FieldMat {
        assert_eq!(a.kind(), b.kind());
        let ea = a.element_matrices();
        let eb = b.element_matrices();
        let mut acc = FieldMat::zeros(a.m(), a.dim() * b.dim(), a.dim() * b.dim());
        for (ma, mb) in ea.iter().zip(&eb) {
            acc = acc.add(&ma.kron(mb));
        }
        acc
    }

    /// Number of free direct summands: rank of the norm element on M.
    pub fn free_rank(&self) -> usize {
        self.norm_matrix().rank()
    }

    /// Split off all free direct summands at once. Returns the free-summand
    /// free core (as a module) and the free rank.
    pub fn strip_free(&self) -> (ModuleRep, usize) {
        self.strip_free_with_norm(self.norm_matrix())
    }

    /// strip_free with a precomputed norm matrix.
    pub fn strip_free_with_norm(&self, norm: FieldMat) -> (ModuleRep, usize) {
        let core = self.strip_core(norm);
        let rank = (self.dim() - core.module.dim()) / self.kind().order();
        (core.module, rank)
    }

    /// The core as an explicit submodule of M.
    pub fn strip_free_submodule(&self) -> Submodule {
        self.strip_core(self.norm_matrix())
    }

    fn strip_core(&self, nm: FieldMat) -> Submodule {
        let pivots = nm.rref().pivots;
        let r = pivots.len();
        if r == 0 {
            return Submodule {
                module: self.clone(),
                inclusion: FieldMat::identity(self.m(), self.dim()),
            };
        }
        // columns y_k = N e_{pivots[k]} are independent; choose functionals
        // f_k with f_k(y_l) = delta_{kl}
        let y = nm.select_cols(&pivots);
        let ftrans = y
            .transpose()
            .solve(&FieldMat::identity(self.m(), r))
            .expect("full column rank gives a consistent system");
        // stack the module maps M -> kG attached to each functional
        let mut phi: Option<FieldMat> = None;
        for k in 0..r {
            let f = ftrans.col(k).transpose();
            let block = self.functional_map(&f);
            phi = Some(match phi {
                None => block,
                Some(prev) => prev.vstack(&block),
            });
        }
        let phi = phi.unwrap();
        debug_assert_eq!(phi.rank(), r * self.kind().order());
        let core_basis = phi.kernel();
        self.submodule_from_basis(core_basis)
    }
}
