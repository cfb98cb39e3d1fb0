//! Module isomorphism testing with an invertibility witness.
//!
//! Strategy: dimension filter, then seeded random sampling of the
//! homomorphism space for an invertible element, then exhaustive enumeration
//! when the space is small enough to scan completely. If neither route can
//! settle the question the answer is surfaced as inconclusive, never as a
//! silent "false".

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_space;
use super::ModuleRep;
use crate::error::{Error, Result};
use crate::exactalg::FieldMat;

/// Default seed: the ASCII bytes of "DIHEDRAL".
pub const DEFAULT_SEED: u64 = 0x4449_4845_4452_414C;

#[derive(Clone, Copy, Debug)]
pub struct IsoConfig {
    pub seed: u64,
    pub trials: u32,
    /// exhaustive fallback when dim Hom * field degree is at most this
    pub exhaustive_bits: u32,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { seed: DEFAULT_SEED, trials: 512, exhaustive_bits: 20 }
    }
}

pub enum IsoOutcome {
    Iso(FieldMat),
    NotIso,
}

impl IsoOutcome {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }
}

fn combine(basis: &[FieldMat], coeffs: &[u8], m: u8, rows: usize, cols: usize) -> FieldMat {
    let mut acc = FieldMat::zeros(m, rows, cols);
    for (c, b) in coeffs.iter().zip(basis) {
        if *c != 0 {
            acc = acc.add(&b.scale(*c));
        }
    }
    acc
}

pub fn is_isomorphic(a: &ModuleRep, b: &ModuleRep, cfg: &IsoConfig) -> Result<IsoOutcome> {
    if a.kind() != b.kind() {
        return Err(Error::RingMismatch("modules over different groups".into()));
    }
    if a.m() != b.m() {
        return Err(Error::RingMismatch("modules over different fields".into()));
    }
    if a.dim() != b.dim() {
        return Ok(IsoOutcome::NotIso);
    }
    if a.dim() == 0 {
        return Ok(IsoOutcome::Iso(FieldMat::zeros(a.m(), 0, 0)));
    }
    let hom = hom_space(a, b);
    let h = hom.dim();
    if h == 0 {
        return Ok(IsoOutcome::NotIso);
    }
    let m = a.m();
    let field_size = 1u32 << m;

    // single basis elements first; identity-like witnesses come out directly
    for x in &hom.basis {
        if x.is_invertible() {
            return Ok(IsoOutcome::Iso(x.clone()));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let coeffs: Vec<u8> = (0..h).map(|_| rng.gen_range(0..field_size) as u8).collect();
        let x = combine(&hom.basis, &coeffs, m, b.dim(), a.dim());
        if x.is_invertible() {
            return Ok(IsoOutcome::Iso(x));
        }
    }

    let bits = h as u32 * m as u32;
    if bits <= cfg.exhaustive_bits {
        let total = 1u64 << bits;
        for code in 1..total {
            let coeffs: Vec<u8> = (0..h)
                .map(|i| ((code >> (i as u32 * m as u32)) & ((field_size - 1) as u64)) as u8)
                .collect();
            let x = combine(&hom.basis, &coeffs, m, b.dim(), a.dim());
            if x.is_invertible() {
                return Ok(IsoOutcome::Iso(x));
            }
        }
        return Ok(IsoOutcome::NotIso);
    }
    Err(Error::Inconclusive(format!(
        "hom space of dimension {h} over gf(2^{m}) exceeds the exhaustive threshold and sampling found no unit"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::make_group;
    use crate::modrep::GroupKind;

    #[test]
    fn module_is_isomorphic_to_itself() {
        let g = make_group(3).unwrap();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let cfg = IsoConfig::default();
        match is_isomorphic(&kd, &kd, &cfg).unwrap() {
            IsoOutcome::Iso(w) => {
                assert!(w.is_invertible());
                assert_eq!(w.mul(kd.s()), kd.s().mul(&w));
            }
            IsoOutcome::NotIso => panic!("self-isomorphism missing"),
        }
    }

    #[test]
    fn dimension_filter() {
        let g = make_group(3).unwrap();
        let kd = ModuleRep::regular(GroupKind::Dihedral(g), 1);
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        assert!(!is_isomorphic(&k, &kd, &IsoConfig::default()).unwrap().is_iso());
    }

    #[test]
    fn ideal_matches_induced_module() {
        let g = make_group(3).unwrap();
        let ideal = crate::modrep::principal_ideal(g, 1, g.sigma()).module;
        let sub = g.subgroup(crate::dihedral::SubgroupId::CSigma);
        let ind = crate::modrep::induce(g, &sub, &ModuleRep::trivial(GroupKind::Cyclic2, 1)).unwrap();
        assert!(is_isomorphic(&ideal, &ind, &IsoConfig::default()).unwrap().is_iso());
    }

    #[test]
    fn distinguishes_nonisomorphic_two_dimensionals() {
        let g = make_group(3).unwrap();
        let u = FieldMat::from_rows(1, &[vec![1, 1], vec![0, 1]]);
        let id2 = FieldMat::identity(1, 2);
        let n_sigma = ModuleRep::from_action(g, u.clone(), id2.clone()).unwrap();
        let n_tau = ModuleRep::from_action(g, id2, u).unwrap();
        assert!(!is_isomorphic(&n_sigma, &n_tau, &IsoConfig::default()).unwrap().is_iso());
    }
}
