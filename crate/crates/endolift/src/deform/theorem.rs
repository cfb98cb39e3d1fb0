//! The aggregate deformation evidence for one (d, nu, n, level) cell:
//! tangent dimension and fingerprint coverage, four character-distinct
//! pairwise non-isomorphic lifts over Z/2^level, and the truncated
//! endo-triviality of each lift.

use serde_json::{json, Value};

use crate::dihedral::GroupSpec;
use crate::endotriv::{a_module, is_endotrivial, Reflection};
use crate::error::{Error, Result};
use crate::modrep::IsoConfig;

use super::lift::{four_lifts, lift_character, FourLifts, LiftRep};
use super::{tangent_space, Fingerprint};

pub struct DeformationEvidence {
    pub group: GroupSpec,
    pub nu: Reflection,
    pub n: usize,
    pub level: u8,
    pub tangent_dim: usize,
    pub fingerprints: Vec<(Fingerprint, Fingerprint)>,
    pub four: FourLifts,
    pub endotrivial_lift: [bool; 4],
}

/// Truncated endo-triviality of a lift: the character of Hom_k(U, U) must be
/// the trivial character plus a multiple of the regular character, and the
/// mod-2 reduction must strip to the trivial module.
fn lift_is_endotrivial(l: &LiftRep) -> Result<bool> {
    let q = l.dim() as i64;
    let free_multiplicity = (q * q - 1) % (1i64 << l.group.d);
    if free_multiplicity != 0 {
        return Ok(false);
    }
    let modulus = 1u64 << l.level;
    let chars = lift_character(l);
    let classes = l.group.conjugacy_classes();
    // character of U* tensor U on a class: trace(rho(c^-1)) * trace(rho(c))
    for (k, c) in classes.iter().enumerate() {
        let inv_trace = l.act_elem(l.group.inv(c.rep)).trace();
        let hom_val = inv_trace.wrapping_mul(chars[k]) & (modulus - 1);
        let expected = if k == 0 {
            // q^2 = 1 + s * 2^d exactly
            (q * q) as u64 & (modulus - 1)
        } else {
            1
        };
        if hom_val != expected {
            return Ok(false);
        }
    }
    Ok(is_endotrivial(&l.reduction()))
}

/// Aggregate evidence for one cell. Every sub-check failure fails the whole
/// report.
pub fn verify_theorem(
    g: GroupSpec,
    nu: Reflection,
    n: usize,
    level: u8,
    iso: &IsoConfig,
) -> Result<DeformationEvidence> {
    // (1) tangent dimension and fingerprint coverage
    let a = a_module(g, nu, n, 1, iso)?;
    let ts = tangent_space(&a.module, iso)?;
    if ts.dim != 2 {
        return Err(Error::CertificateFailure(format!(
            "tangent dimension is {}, expected 2",
            ts.dim
        )));
    }
    let mut fingerprints = Vec::new();
    let mut seen = [false; 3];
    for l in &ts.lifts {
        fingerprints.push(l.fingerprint);
        if !l.is_zero_class {
            let slot = match l.fingerprint {
                (Fingerprint::Nontrivial, Fingerprint::Nontrivial) => 0,
                (Fingerprint::Nontrivial, Fingerprint::Trivial) => 1,
                (Fingerprint::Trivial, Fingerprint::Nontrivial) => 2,
                (Fingerprint::Trivial, Fingerprint::Trivial) => {
                    return Err(Error::CertificateFailure(
                        "a nonzero tangent direction restricts trivially on both sides".into(),
                    ))
                }
            };
            if seen[slot] {
                return Err(Error::CertificateFailure(
                    "two tangent directions share a fingerprint".into(),
                ));
            }
            seen[slot] = true;
        }
    }
    if !seen.iter().all(|&b| b) {
        return Err(Error::CertificateFailure(
            "the three nonzero fingerprints are not all covered".into(),
        ));
    }

    // (2) four distinct points at the requested truncation
    let four = four_lifts(g, nu, n, level, iso)?;

    // (3) truncated endo-triviality of each selected lift
    let mut endo = [false; 4];
    for (i, l) in four.lifts.iter().enumerate() {
        endo[i] = lift_is_endotrivial(l)?;
        if !endo[i] {
            return Err(Error::CertificateFailure(format!(
                "lift {i} fails the truncated endo-triviality identity"
            )));
        }
    }

    Ok(DeformationEvidence {
        group: g,
        nu,
        n,
        level,
        tangent_dim: ts.dim,
        fingerprints,
        four,
        endotrivial_lift: endo,
    })
}

impl DeformationEvidence {
    pub fn to_json(&self) -> Value {
        let fp_name = |f: Fingerprint| match f {
            Fingerprint::Trivial => "trivial",
            Fingerprint::Nontrivial => "nontrivial",
        };
        json!({
            "target": {"d": self.group.d, "nu": self.nu.name(), "n": self.n, "level": self.level},
            "tangent_dim": self.tangent_dim,
            "fingerprints": self.fingerprints.iter()
                .map(|(a, b)| vec![fp_name(*a), fp_name(*b)])
                .collect::<Vec<_>>(),
            "lifts": self.four.lifts.iter().zip(self.four.characters.iter())
                .map(|(l, ch)| {
                    let mut v = l.to_json();
                    v["characters"] = json!(ch);
                    v
                })
                .collect::<Vec<_>>(),
            "ledger_characters_mod_2_level": self.four.ledger_values,
            "pairwise_noniso": self.four.witnesses,
            "endotrivial_lift": self.endotrivial_lift,
            "hom_dim_f": self.four.ledger.hom_dim_f,
            "hom_dim_k": self.four.ledger.hom_dim_k,
            "ext_dim_k": self.four.ledger.ext_dim_k,
        })
    }
}
