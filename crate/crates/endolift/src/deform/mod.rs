//! Deformation-theoretic constructions: the two-dimensional self-extensions
//! N_lambda of the trivial module, the tensor modules B = A tensor N, and
//! the tangent space of dual-number lifts with restriction fingerprints.

mod lift;
mod theorem;

pub use lift::{
    four_lifts, invertible_intertwiner_exists, lift_character, lift_of_module, lift_step,
    FourLifts, LiftRep, LiftStepOutcome, NonIsoWitness,
};
pub use theorem::{verify_theorem, DeformationEvidence};

use serde::Serialize;

use crate::dihedral::{GroupSpec, SubgroupId};
use crate::endotriv::{a_module, c2_shape, Reflection};
use crate::error::{Error, Result};
use crate::exactalg::FieldMat;
use crate::modrep::{ext1, is_isomorphic, stable_hom_dim, IsoConfig, ModuleRep, ShortExactSeq};

/// The lambda parameter of the basic self-extension: a unit of the field, or
/// one of the two reflections.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Lambda {
    Unit(u8),
    Refl(Reflection),
}

impl Lambda {
    pub fn name(&self) -> String {
        match self {
            Lambda::Unit(v) => format!("unit:{v}"),
            Lambda::Refl(r) => r.name().to_string(),
        }
    }
}

/// The 2-dimensional module with a unipotent action: the nonsplit
/// self-extensions of the trivial module are exactly these.
pub fn n_lambda(g: GroupSpec, lam: Lambda, m: u8) -> Result<ModuleRep> {
    let upper = |v: u8| FieldMat::from_rows(m, &[vec![1, v], vec![0, 1]]);
    let id = FieldMat::identity(m, 2);
    match lam {
        Lambda::Unit(0) => Err(Error::InvalidArgument("lambda must be a unit".into())),
        Lambda::Unit(v) => ModuleRep::from_action(g, upper(1), upper(v)),
        Lambda::Refl(Reflection::Sigma) => ModuleRep::from_action(g, upper(1), id),
        Lambda::Refl(Reflection::Tau) => ModuleRep::from_action(g, id, upper(1)),
    }
}

/// Which branch of the classification a B-module landed in.
#[derive(Clone, Debug, Serialize)]
pub enum BClass {
    /// N_lambda plus n free summands (lambda a unit or the defining reflection)
    CoreWithFree { free_rank: usize },
    /// the opposite-reflection case, certified by its two restriction shapes
    OppositeReflection {
        free_at_other: usize,
        trivial_at_nu: usize,
        free_at_nu: usize,
    },
}

pub struct BModule {
    pub module: ModuleRep,
    pub lambda: Lambda,
    pub classification: BClass,
}

/// B = A_{nu,n} tensor N_lambda, verified against its classification:
/// for lambda a unit or nu itself, B is N_lambda plus (kD)^n; for the other
/// reflection the two restrictions have the stated shapes. A mismatch is a
/// hard failure.
pub fn b_module(
    g: GroupSpec,
    nu: Reflection,
    n: usize,
    lam: Lambda,
    m: u8,
    iso: &IsoConfig,
) -> Result<BModule> {
    let a = a_module(g, nu, n, m, iso)?;
    let nl = n_lambda(g, lam, m)?;
    let b = a.module.tensor(&nl);
    let opposite = matches!(lam, Lambda::Refl(r) if r == nu.other());
    let classification = if !opposite {
        let (core, rank) = b.strip_free();
        if rank != n {
            return Err(Error::Classification(format!(
                "B has free rank {rank}, expected {n}"
            )));
        }
        if !is_isomorphic(&core, &nl, iso)?.is_iso() {
            return Err(Error::Classification("core of B is not N_lambda".into()));
        }
        BClass::CoreWithFree { free_rank: rank }
    } else {
        let res_other = c2_shape(&b.restrict(&g.subgroup(nu.other().cyclic_subgroup())));
        let res_nu = c2_shape(&b.restrict(&g.subgroup(nu.cyclic_subgroup())));
        let free_expected = n * (1usize << (g.d - 1));
        if res_other.trivial != 0 || res_other.free != free_expected + 1 {
            return Err(Error::Classification(format!(
                "restriction to the other reflection is k^{} + free^{}, expected free^{}",
                res_other.trivial,
                res_other.free,
                free_expected + 1
            )));
        }
        if res_nu.trivial != 2 || res_nu.free != free_expected {
            return Err(Error::Classification(format!(
                "restriction to the defining reflection is k^{} + free^{}, expected k^2 + free^{free_expected}",
                res_nu.trivial, res_nu.free
            )));
        }
        BClass::OppositeReflection {
            free_at_other: res_other.free,
            trivial_at_nu: res_nu.trivial,
            free_at_nu: res_nu.free,
        }
    };
    Ok(BModule { module: b, lambda: lam, classification })
}

/// Whether a restricted self-extension splits.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Fingerprint {
    Trivial,
    Nontrivial,
}

/// One dual-number lift of V: the underlying self-extension of V by V and
/// the splitting fingerprint of its restrictions to the two reflections.
pub struct DualLift {
    pub coeffs: Vec<u8>,
    pub is_zero_class: bool,
    pub ses: ShortExactSeq,
    pub fingerprint: (Fingerprint, Fingerprint),
}

pub struct TangentSpace {
    pub dim: usize,
    pub lifts: Vec<DualLift>,
}

fn restriction_fingerprint(v: &ModuleRep, middle: &ModuleRep, sub: SubgroupId, g: GroupSpec) -> Fingerprint {
    let base = c2_shape(&v.restrict(&g.subgroup(sub)));
    let ext = c2_shape(&middle.restrict(&g.subgroup(sub)));
    if ext.trivial == 2 * base.trivial {
        Fingerprint::Trivial
    } else {
        Fingerprint::Nontrivial
    }
}

/// All dual-number lifts of V over a GF(2) basis of Ext^1(V, V): one per
/// coefficient vector, 2^dim in total.
pub fn tangent_space(v: &ModuleRep, iso: &IsoConfig) -> Result<TangentSpace> {
    let _ = iso;
    let g = v.group().ok_or_else(|| Error::InvalidArgument("dihedral modules only".into()))?;
    if stable_hom_dim(v, v) != 1 {
        return Err(Error::CertificateFailure(
            "tangent space needs a module with one-dimensional stable endomorphisms".into(),
        ));
    }
    let e = ext1(v, v);
    let dim = e.dim();
    if dim > 8 {
        return Err(Error::CertificateFailure(format!(
            "tangent dimension {dim} is outside the enumerable range"
        )));
    }
    let mut lifts = Vec::with_capacity(1 << dim);
    for code in 0u64..(1 << dim) {
        let coeffs: Vec<u8> = (0..dim).map(|i| ((code >> i) & 1) as u8).collect();
        let (ses, is_zero_class) = e.middle(&coeffs);
        let fingerprint = (
            restriction_fingerprint(v, &ses.middle, SubgroupId::CSigma, g),
            restriction_fingerprint(v, &ses.middle, SubgroupId::CTau, g),
        );
        if is_zero_class && fingerprint != (Fingerprint::Trivial, Fingerprint::Trivial) {
            return Err(Error::CertificateFailure(
                "the zero class must restrict trivially".into(),
            ));
        }
        lifts.push(DualLift { coeffs, is_zero_class, ses, fingerprint });
    }
    Ok(TangentSpace { dim, lifts })
}

/// Match a nonzero dual lift against the three-way classification by its
/// fingerprint, then certify with an isomorphism test against the matching
/// B-module. Returns the lambda branch it matched.
pub fn classify_dual_lift(
    g: GroupSpec,
    nu: Reflection,
    n: usize,
    lift: &DualLift,
    iso: &IsoConfig,
) -> Result<Lambda> {
    let lam = match lift.fingerprint {
        (Fingerprint::Nontrivial, Fingerprint::Nontrivial) => Lambda::Unit(1),
        (Fingerprint::Nontrivial, Fingerprint::Trivial) => Lambda::Refl(Reflection::Sigma),
        (Fingerprint::Trivial, Fingerprint::Nontrivial) => Lambda::Refl(Reflection::Tau),
        (Fingerprint::Trivial, Fingerprint::Trivial) => {
            return Err(Error::Classification("zero fingerprint has no lambda".into()))
        }
    };
    let b = b_module(g, nu, n, lam, lift.ses.middle.m(), iso)?;
    if !is_isomorphic(&lift.ses.middle, &b.module, iso)?.is_iso() {
        return Err(Error::Classification(format!(
            "dual lift with fingerprint {:?} is not isomorphic to its B-module",
            lift.fingerprint
        )));
    }
    Ok(lam)
}
