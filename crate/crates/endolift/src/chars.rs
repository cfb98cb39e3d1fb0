//! Ordinary character theory of the dihedral 2-group over the fraction field
//! of the 2-adic integers.
//!
//! All values live in the single cyclotomic ring Z[x]/(x^(2^(d-2)) + 1);
//! rationality is detected by coordinate vanishing, never by floating point.
//! The irreducibles are the four linear characters and the two-dimensional
//! ones chi5_i, whose Galois orbits sum to the rational characters rho_l.
//! Class functions are stored on the canonical class order of
//! `dihedral::conjugacy_classes`.

use serde::Serialize;

use crate::dihedral::{ConjClass, GroupSpec, SubgroupId};
use crate::endotriv::{a_module, Reflection};
use crate::error::{Error, Result};
use crate::exactalg::{CycInt, CycMat};
use crate::modrep::{ext1_dim, hom_space, induce, IsoConfig, ModuleRep};

/// Exact class function: one cyclotomic value per conjugacy class.
#[derive(Clone, PartialEq, Debug)]
pub struct ClassFunction {
    pub d: u8,
    pub values: Vec<CycInt>,
}

impl ClassFunction {
    pub fn add(&self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            d: self.d,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            d: self.d,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> ClassFunction {
        ClassFunction { d: self.d, values: self.values.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn degree(&self) -> &CycInt {
        &self.values[0]
    }

    pub fn rational_values(&self) -> Result<Vec<i64>> {
        self.values
            .iter()
            .map(|v| {
                v.rational_value().ok_or_else(|| {
                    Error::Decomposition("class function has an irrational value".into())
                })
            })
            .collect()
    }
}

/// The character table: classes in canonical order, irreducibles in the order
/// chi1, chi2, chi3, chi4, chi5_1, ..., chi5_(2^(d-2)-1).
pub struct CharTable {
    pub group: GroupSpec,
    pub classes: Vec<ConjClass>,
    pub irreducibles: Vec<ClassFunction>,
    pub labels: Vec<String>,
}

/// Evaluate the irreducible representations on the class representatives,
/// from their defining matrices.
pub fn char_table(g: GroupSpec) -> CharTable {
    let d = g.d as u8;
    let classes = g.conjugacy_classes();
    let mut irreducibles = Vec::new();
    let mut labels = Vec::new();

    // the four linear characters, as (value on sigma, value on tau)
    let linear = [(1i64, 1i64), (-1, -1), (1, -1), (-1, 1)];
    for (idx, (vs, vt)) in linear.iter().enumerate() {
        let values = classes
            .iter()
            .map(|c| {
                let vr = vs * vt; // value on r = sigma*tau
                let mut acc = 1i64;
                for _ in 0..c.rep.j {
                    acc *= vr;
                }
                if c.rep.s == 1 {
                    acc *= vs;
                }
                CycInt::scalar(d, acc)
            })
            .collect();
        irreducibles.push(ClassFunction { d, values });
        labels.push(format!("chi{}", idx + 1));
    }

    // the two-dimensional representations chi5_i
    for i in 1..(1u32 << (d - 2)) {
        let mut m_sigma = CycMat::zeros(d, 2, 2);
        m_sigma.set(0, 1, CycInt::one(d));
        m_sigma.set(1, 0, CycInt::one(d));
        let mut m_tau = CycMat::zeros(d, 2, 2);
        m_tau.set(0, 1, CycInt::zeta_pow(d, -(i as i64)));
        m_tau.set(1, 0, CycInt::zeta_pow(d, i as i64));
        let m_r = m_sigma.mul(&m_tau);
        let values = classes
            .iter()
            .map(|c| {
                let mut rep = CycMat::identity(d, 2);
                for _ in 0..c.rep.j {
                    rep = rep.mul(&m_r);
                }
                if c.rep.s == 1 {
                    rep = rep.mul(&m_sigma);
                }
                rep.trace()
            })
            .collect();
        irreducibles.push(ClassFunction { d, values });
        labels.push(format!("chi5_{i}"));
    }

    CharTable { group: g, classes, irreducibles, labels }
}

impl CharTable {
    pub fn order(&self) -> i64 {
        1i64 << self.group.d
    }

    /// Exact inner product; errors when the result is not a rational integer.
    pub fn inner_product(&self, a: &ClassFunction, b: &ClassFunction) -> Result<i64> {
        let d = self.group.d as u8;
        let mut acc = CycInt::zero(d);
        for (c, (va, vb)) in self.classes.iter().zip(a.values.iter().zip(&b.values)) {
            acc = acc.add(&va.mul(&vb.conj()).scale(c.size as i64));
        }
        let div = acc
            .div_exact(self.order())
            .ok_or_else(|| Error::Decomposition("inner product is not integral".into()))?;
        div.rational_value()
            .ok_or_else(|| Error::Decomposition("inner product is not rational".into()))
    }

    /// Number of rational characters in the basis chi1..chi4, rho_0..rho_(d-3).
    pub fn rational_basis_len(&self) -> usize {
        4 + self.group.d as usize - 2
    }

    /// Galois orbit of two-dimensional characters summing to rho_l, as
    /// indices into `irreducibles`.
    pub fn orbit_indices(&self, l: usize) -> Vec<usize> {
        let d = self.group.d;
        assert!(l <= d as usize - 3);
        let step = 1u32 << (d as usize - 3 - l);
        (1..=(1u32 << l)).map(|u| 4 + (step * (2 * u - 1) - 1) as usize).collect()
    }

    /// The rational character rho_l as a class function, with the trace
    /// cross-check for integrality.
    pub fn rho(&self, l: usize) -> Result<ClassFunction> {
        let d = self.group.d as u8;
        let orbit = self.orbit_indices(l);
        let mut acc = ClassFunction { d, values: vec![CycInt::zero(d); self.classes.len()] };
        for &i in &orbit {
            acc = acc.add(&self.irreducibles[i]);
        }
        // every value must be a rational integer, and the Galois trace of a
        // single orbit member must be 2^(d-2-l) times the orbit sum
        let stab = 1i64 << (self.group.d as usize - 2 - l);
        for (k, v) in acc.values.iter().enumerate() {
            let rv = v.rational_value().ok_or_else(|| {
                Error::Decomposition(format!("rho_{l} has an irrational value on class {k}"))
            })?;
            let tr = self.irreducibles[orbit[0]].values[k].trace();
            if tr != stab * rv {
                return Err(Error::Decomposition(format!(
                    "trace cross-check failed for rho_{l} on class {k}"
                )));
            }
        }
        Ok(acc)
    }
}

/// Multiplicity vector over the rational basis chi1..chi4, rho_0..rho_(d-3).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RationalCharacter {
    pub d: u8,
    pub mult: Vec<i64>,
}

impl RationalCharacter {
    pub fn zero(d: u8) -> Self {
        RationalCharacter { d, mult: vec![0; 4 + d as usize - 2] }
    }

    pub fn basis(d: u8, idx: usize) -> Self {
        let mut rc = Self::zero(d);
        rc.mult[idx] = 1;
        rc
    }

    pub fn add(&self, o: &RationalCharacter) -> Self {
        RationalCharacter {
            d: self.d,
            mult: self.mult.iter().zip(&o.mult).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        RationalCharacter { d: self.d, mult: self.mult.iter().map(|a| a * c).collect() }
    }

    pub fn constituent_degree(_d: u8, idx: usize) -> i64 {
        if idx < 4 {
            1
        } else {
            1i64 << (idx - 4 + 1)
        }
    }

    pub fn degree(&self) -> i64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, m)| m * Self::constituent_degree(self.d, i))
            .sum()
    }

    /// Dimension over F of the End field of each constituent: 1 for the
    /// linear characters, 2^l for rho_l.
    pub fn end_weight(d: u8, idx: usize) -> i64 {
        let _ = d;
        if idx < 4 {
            1
        } else {
            1i64 << (idx - 4)
        }
    }

    /// Exact class-function values, computed from the table.
    pub fn values(&self, table: &CharTable) -> Result<Vec<i64>> {
        let d = self.d;
        let mut acc = ClassFunction { d, values: vec![CycInt::zero(d); table.classes.len()] };
        for (i, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let cf = if i < 4 { table.irreducibles[i].clone() } else { table.rho(i - 4)? };
            acc = acc.add(&cf.scale(m));
        }
        acc.rational_values()
    }
}

/// Weighted Hom dimension over F between two rational characters.
pub fn hom_dim_f(x: &RationalCharacter, y: &RationalCharacter) -> i64 {
    assert_eq!(x.d, y.d);
    x.mult
        .iter()
        .zip(&y.mult)
        .enumerate()
        .map(|(i, (a, b))| a * b * RationalCharacter::end_weight(x.d, i))
        .sum()
}

/// Decompose an exact class function over the rational basis. Non-integral
/// or inconsistent multiplicities are hard errors.
pub fn decompose_rational(table: &CharTable, phi: &ClassFunction) -> Result<RationalCharacter> {
    let d = table.group.d as u8;
    let mut rc = RationalCharacter::zero(d);
    for i in 0..4 {
        rc.mult[i] = table.inner_product(phi, &table.irreducibles[i])?;
    }
    for l in 0..=(table.group.d as usize - 3) {
        let orbit = table.orbit_indices(l);
        let mults = orbit
            .iter()
            .map(|&i| table.inner_product(phi, &table.irreducibles[i]))
            .collect::<Result<Vec<i64>>>()?;
        if mults.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Decomposition(format!(
                "multiplicities differ across the Galois orbit of rho_{l}"
            )));
        }
        rc.mult[4 + l] = mults[0];
    }
    // reconstruction must reproduce phi exactly
    let mut acc = ClassFunction { d, values: vec![CycInt::zero(d); table.classes.len()] };
    for (i, &m) in rc.mult.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let cf = if i < 4 { table.irreducibles[i].clone() } else { table.rho(i - 4)? };
        acc = acc.add(&cf.scale(m));
    }
    if acc != *phi {
        return Err(Error::Decomposition(
            "class function is not a rational-basis combination".into(),
        ));
    }
    Ok(rc)
}

/// Fixed-point character of the left-coset action of D on D/H.
pub fn perm_character(table: &CharTable, h: SubgroupId) -> Result<RationalCharacter> {
    if !matches!(h, SubgroupId::CSigma | SubgroupId::CTau) {
        return Err(Error::UnknownSubgroup(h.name().into()));
    }
    let g = table.group;
    let d = g.d as u8;
    let sub = g.subgroup(h);
    let values = table
        .classes
        .iter()
        .map(|c| {
            let fixed = sub
                .coset_reps
                .iter()
                .filter(|&&x| {
                    let y = g.mul(c.rep, x);
                    let (i, _) = g.coset_decompose(&sub, y);
                    sub.coset_reps[i] == x
                })
                .count();
            CycInt::scalar(d, fixed as i64)
        })
        .collect();
    let rc = decompose_rational(table, &ClassFunction { d, values })?;
    if rc.degree() != (1i64 << (g.d - 1)) {
        return Err(Error::Decomposition("permutation character has the wrong degree".into()));
    }
    Ok(rc)
}

/// Character of the regular representation, from fixed-point counts.
pub fn regular_character(table: &CharTable) -> Result<RationalCharacter> {
    let g = table.group;
    let d = g.d as u8;
    let values = table
        .classes
        .iter()
        .enumerate()
        .map(|(k, _)| {
            if k == 0 {
                CycInt::scalar(d, 1i64 << g.d)
            } else {
                CycInt::zero(d)
            }
        })
        .collect();
    decompose_rational(table, &ClassFunction { d, values })
}

/// The four target characters for the truncated lifts of A_{nu,n}, plus the
/// Hom-dimension bookkeeping used by the lifting step.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterLedger {
    pub nu: Reflection,
    pub n: usize,
    pub entries: [RationalCharacter; 4],
    /// weighted Hom dimension over F between each entry and its partner
    /// induced-lattice character; equal for all four entries
    pub hom_dim_f: i64,
    /// dim_k Hom(A_{nu,n}, induced trivial module), from exact linear algebra
    pub hom_dim_k: usize,
    /// dim_k Ext^1(A_{nu,n}, induced trivial module), recorded alongside
    pub ext_dim_k: usize,
}

/// Rational character of the induced lattice with leading character index
/// pair (a, b): chi_a + chi_b + sum of all rho_l.
fn induced_lattice_character(d: u8, a: usize, b: usize) -> RationalCharacter {
    let mut rc = RationalCharacter::zero(d);
    rc.mult[a] = 1;
    rc.mult[b] = 1;
    for l in 0..(d as usize - 2) {
        rc.mult[4 + l] = 1;
    }
    rc
}

/// Build the ledger for (nu, n) and verify the dimension bookkeeping against
/// the exact module computations. Any inconsistency is a hard error.
pub fn ledger(g: GroupSpec, nu: Reflection, n: usize, iso: &IsoConfig) -> Result<CharacterLedger> {
    let d = g.d as u8;
    // (c, dd) leading pair: chi3/chi4 for sigma, swapped for tau (0-based 2, 3)
    let (c_idx, d_idx) = match nu {
        Reflection::Sigma => (2usize, 3usize),
        Reflection::Tau => (3usize, 2usize),
    };
    let rho_total = {
        let mut rc = RationalCharacter::zero(d);
        for l in 0..(d as usize - 2) {
            rc.mult[4 + l] = 1;
        }
        rc
    };
    let pair_a = RationalCharacter::basis(d, 0).add(&RationalCharacter::basis(d, c_idx)); // chi1 + chi_c
    let pair_b = RationalCharacter::basis(d, 1).add(&RationalCharacter::basis(d, d_idx)); // chi2 + chi_d

    let m = (n / 2) as i64;
    let entries: [RationalCharacter; 4] = if n % 2 == 0 {
        let base = pair_a.scale(m).add(&pair_b.scale(m)).add(&rho_total.scale(2 * m));
        [
            RationalCharacter::basis(d, 0).add(&base),
            RationalCharacter::basis(d, c_idx).add(&base),
            RationalCharacter::basis(d, 1).add(&base),
            RationalCharacter::basis(d, d_idx).add(&base),
        ]
    } else {
        let base_i = pair_a.scale(m).add(&pair_b.scale(m + 1)).add(&rho_total.scale(2 * m + 1));
        let base_ii = pair_a.scale(m + 1).add(&pair_b.scale(m)).add(&rho_total.scale(2 * m + 1));
        [
            RationalCharacter::basis(d, 0).add(&base_i),
            RationalCharacter::basis(d, c_idx).add(&base_i),
            RationalCharacter::basis(d, 1).add(&base_ii),
            RationalCharacter::basis(d, d_idx).add(&base_ii),
        ]
    };

    let expected_degree = (n as i64) * (1i64 << (g.d - 1)) + 1;
    for e in &entries {
        if e.degree() != expected_degree {
            return Err(Error::CertificateFailure(format!(
                "ledger entry has degree {}, expected {expected_degree}",
                e.degree()
            )));
        }
        if e.degree() % 2 != 1 {
            return Err(Error::CertificateFailure("ledger degree must be odd".into()));
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if entries[i] == entries[j] {
                return Err(Error::CertificateFailure("ledger entries must be distinct".into()));
            }
        }
    }

    // weighted Hom dimension against the partner induced-lattice character;
    // the pairing swaps with the parity of n
    let partner_b = induced_lattice_character(d, 1, d_idx); // chi2 + chi_d + rho
    let partner_a = induced_lattice_character(d, 0, c_idx); // chi1 + chi_c + rho
    let (p01, p23) = if n % 2 == 0 { (&partner_b, &partner_a) } else { (&partner_a, &partner_b) };
    let expect_f = (n as i64) * (1i64 << (g.d - 2));
    let fdims: Vec<i64> = [
        hom_dim_f(&entries[0], p01),
        hom_dim_f(&entries[1], p01),
        hom_dim_f(&entries[2], p23),
        hom_dim_f(&entries[3], p23),
    ]
    .into();
    if fdims.iter().any(|&f| f != expect_f) {
        return Err(Error::CertificateFailure(format!(
            "weighted Hom dimensions {fdims:?} differ from expected {expect_f}"
        )));
    }

    // exact module side of the bookkeeping
    let a = a_module(g, nu, n, 1, iso)?;
    let ind = induce(
        g,
        &g.subgroup(nu.cyclic_subgroup()),
        &ModuleRep::trivial(crate::modrep::GroupKind::Cyclic2, 1),
    )?;
    let hom_dim_k = hom_space(&a.module, &ind).dim();
    let expect_k = n * (1usize << (g.d - 2)) + 1;
    if hom_dim_k != expect_k {
        return Err(Error::CertificateFailure(format!(
            "dim Hom(A, induced) = {hom_dim_k}, expected {expect_k}"
        )));
    }
    if (expect_f as usize) != hom_dim_k - 1 {
        return Err(Error::CertificateFailure(
            "character count and linear-algebra count disagree".into(),
        ));
    }
    let ext_dim_k = ext1_dim(&a.module, &ind);

    Ok(CharacterLedger { nu, n, entries, hom_dim_f: expect_f, hom_dim_k, ext_dim_k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::make_group;

    fn table(d: u32) -> CharTable {
        char_table(make_group(d).unwrap())
    }

    #[test]
    fn linear_character_values() {
        let t = table(3);
        // canonical class order: 1, z, r, sigma-class, tau-class
        let chi3 = &t.irreducibles[2];
        let vals: Vec<i64> = chi3.values.iter().map(|v| v.rational_value().unwrap()).collect();
        assert_eq!(vals, vec![1, 1, -1, 1, -1]);
    }

    #[test]
    fn two_dimensional_vanishes_on_reflections() {
        for d in 3..=5 {
            let t = table(d);
            for i in 4..t.irreducibles.len() {
                let n = t.classes.len();
                assert!(t.irreducibles[i].values[n - 1].is_zero());
                assert!(t.irreducibles[i].values[n - 2].is_zero());
            }
        }
    }

    #[test]
    fn first_orthogonality() {
        for d in 3..=4 {
            let t = table(d);
            for (i, a) in t.irreducibles.iter().enumerate() {
                for (j, b) in t.irreducibles.iter().enumerate() {
                    let ip = t.inner_product(a, b).unwrap();
                    assert_eq!(ip, if i == j { 1 } else { 0 }, "d={d} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn second_orthogonality() {
        let t = table(4);
        for (ci, c) in t.classes.iter().enumerate() {
            for (cj, _) in t.classes.iter().enumerate() {
                let mut acc = CycInt::zero(4);
                for chi in &t.irreducibles {
                    acc = acc.add(&chi.values[ci].mul(&chi.values[cj].conj()));
                }
                if ci == cj {
                    let centralizer = (1i64 << t.group.d) / c.size as i64;
                    assert_eq!(acc, CycInt::scalar(4, centralizer));
                } else {
                    assert!(acc.is_zero());
                }
            }
        }
    }

    #[test]
    fn rho0_values_d3() {
        let t = table(3);
        let rho0 = t.rho(0).unwrap();
        let vals = rho0.rational_values().unwrap();
        assert_eq!(vals, vec![2, -2, 0, 0, 0]);
    }

    #[test]
    fn rho_degrees_and_integrality() {
        for d in 4..=5 {
            let t = table(d);
            for l in 0..=(d as usize - 3) {
                let rho = t.rho(l).unwrap();
                assert_eq!(rho.degree().rational_value().unwrap(), 1i64 << (l + 1));
            }
        }
    }

    #[test]
    fn perm_character_d3() {
        let t = table(3);
        let x = perm_character(&t, SubgroupId::CSigma).unwrap();
        assert_eq!(x.mult, vec![1, 0, 1, 0, 1]); // chi1 + chi3 + rho0
        assert_eq!(x.degree(), 4);
        let y = perm_character(&t, SubgroupId::CTau).unwrap();
        assert_eq!(y.mult, vec![1, 0, 0, 1, 1]); // chi1 + chi4 + rho0
    }

    #[test]
    fn regular_character_decomposition() {
        for d in 3..=5 {
            let t = table(d);
            let reg = regular_character(&t).unwrap();
            let mut expected = vec![1i64, 1, 1, 1];
            expected.extend(std::iter::repeat(2).take(d as usize - 2));
            assert_eq!(reg.mult, expected);
        }
    }

    #[test]
    fn ideal_complement_character() {
        // regular minus permutation = chi2 + chi4 + sum of rho (for sigma)
        let t = table(4);
        let reg = regular_character(&t).unwrap();
        let x = perm_character(&t, SubgroupId::CSigma).unwrap();
        let diff = reg.add(&x.scale(-1));
        assert_eq!(diff.mult, vec![0, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn weighted_hom_dimensions() {
        for d in 3..=5u8 {
            let mut rho_total = RationalCharacter::zero(d);
            for l in 0..(d as usize - 2) {
                rho_total.mult[4 + l] = 1;
            }
            assert_eq!(hom_dim_f(&rho_total, &rho_total), (1i64 << (d - 2)) - 1);
            let chi1 = RationalCharacter::basis(d, 0);
            assert_eq!(hom_dim_f(&chi1, &chi1), 1);
        }
    }

    #[test]
    fn ledger_n0_is_the_linear_characters() {
        let g = make_group(3).unwrap();
        let led = ledger(g, Reflection::Sigma, 0, &IsoConfig::default()).unwrap();
        let mut leads: Vec<Vec<i64>> = led.entries.iter().map(|e| e.mult.clone()).collect();
        leads.sort();
        assert_eq!(
            leads,
            vec![
                vec![0, 0, 0, 1, 0],
                vec![0, 0, 1, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![1, 0, 0, 0, 0]
            ]
        );
        assert_eq!(led.hom_dim_k, 1);
        assert_eq!(led.hom_dim_f, 0);
        assert_eq!(led.ext_dim_k, 1);
    }

    #[test]
    fn ledger_bookkeeping_d3_n1() {
        let g = make_group(3).unwrap();
        let led = ledger(g, Reflection::Sigma, 1, &IsoConfig::default()).unwrap();
        assert_eq!(led.hom_dim_f, 2);
        assert_eq!(led.hom_dim_k, 3);
        assert_eq!(led.ext_dim_k, 1);
        for e in &led.entries {
            assert_eq!(e.degree(), 5);
        }
        // frozen values mod 8 of the four entries on the canonical classes
        let t = char_table(g);
        let vals: Vec<Vec<i64>> =
            led.entries.iter().map(|e| e.values(&t).unwrap()).collect();
        assert_eq!(vals[0], vec![5, 1, 1, -1, 1]);
        assert_eq!(vals[1], vec![5, 1, -1, -1, -1]);
        assert_eq!(vals[2], vec![5, 1, 1, 1, -1]);
        assert_eq!(vals[3], vec![5, 1, -1, 1, 1]);
    }
}
