//! Lifting representations through the truncations Z/2^n.
//!
//! A level-n lift stores action matrices over Z/2^n satisfying the defining
//! relations. One lifting step solves for corrections S + 2^n A, T + 2^n B
//! over Z/2^(n+1); expanding the relations to first order makes this an
//! inhomogeneous GF(2)-linear system in (A, B), and conjugation by I + 2^n C
//! acts on the solution set through the coboundary directions. The step
//! returns solutions modulo that level-local gauge.

use serde_json::json;

use crate::chars::{ledger, CharacterLedger};
use crate::dihedral::GroupSpec;
use crate::endotriv::{a_module, Reflection};
use crate::error::{Error, Result};
use crate::exactalg::{zn_diagonalize, FieldMat, ZnMat};
use crate::modrep::{IsoConfig, ModuleRep};

/// A representation over Z/2^level whose mod-2 reduction is the module of
/// interest.
#[derive(Clone)]
pub struct LiftRep {
    pub group: GroupSpec,
    pub level: u8,
    pub s: ZnMat,
    pub t: ZnMat,
}

impl LiftRep {
    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.dim();
        let id = ZnMat::identity(self.level, q);
        if self.s.mul(&self.s) != id || self.t.mul(&self.t) != id {
            return Err(Error::RelationViolation(
                "involution relation fails over the truncation".into(),
            ));
        }
        let e = 1u64 << (self.group.d - 2);
        if self.s.mul(&self.t).pow(e) != self.t.mul(&self.s).pow(e) {
            return Err(Error::RelationViolation(
                "rotation relation fails over the truncation".into(),
            ));
        }
        Ok(())
    }

    /// Entrywise reduction mod 2 as a validated module.
    pub fn reduction(&self) -> ModuleRep {
        let to_gf2 = |a: &ZnMat| {
            let mut out = FieldMat::zeros(1, a.rows(), a.cols());
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    if a.get(i, j) & 1 == 1 {
                        out.set(i, j, 1);
                    }
                }
            }
            out
        };
        ModuleRep::from_action(self.group, to_gf2(&self.s), to_gf2(&self.t))
            .expect("reduction of a valid lift is a valid module")
    }

    /// Reduce to a lower level; the relations survive reduction.
    pub fn reduce_level(&self, level: u8) -> LiftRep {
        LiftRep {
            group: self.group,
            level,
            s: self.s.reduce(level),
            t: self.t.reduce(level),
        }
    }

    /// Action of a group element over the truncation.
    pub fn act_elem(&self, e: crate::dihedral::GroupElem) -> ZnMat {
        let mut out = self.s.mul(&self.t).pow(e.j as u64);
        if e.s == 1 {
            out = out.mul(&self.s);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "level": self.level,
            "S": crate::exactalg::DenseMatrix::Zmod(self.s.clone()).to_json(),
            "T": crate::exactalg::DenseMatrix::Zmod(self.t.clone()).to_json(),
        })
    }
}

/// View a GF(2) module as a level-1 lift of itself.
pub fn lift_of_module(m: &ModuleRep) -> Result<LiftRep> {
    let g = m.group().ok_or_else(|| Error::InvalidArgument("dihedral modules only".into()))?;
    if m.m() != 1 {
        return Err(Error::RingMismatch(
            "truncated lifting starts from a GF(2) module".into(),
        ));
    }
    let to_zn = |a: &FieldMat| {
        let mut out = ZnMat::zeros(1, a.rows(), a.cols());
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if a.get(i, j) == 1 {
                    out.set(i, j, 1);
                }
            }
        }
        out
    };
    Ok(LiftRep { group: g, level: 1, s: to_zn(m.s()), t: to_zn(m.t()) })
}

/// Characters of a lift: traces on the canonical class representatives.
pub fn lift_character(l: &LiftRep) -> Vec<u64> {
    l.group
        .conjugacy_classes()
        .iter()
        .map(|c| l.act_elem(c.rep).trace())
        .collect()
}

pub struct LiftStepOutcome {
    pub lifts: Vec<LiftRep>,
    /// log2 of the solution count modulo the level-local gauge
    pub tangent_bits: usize,
    pub obstruction: Option<String>,
}

fn copy_block(dst: &mut FieldMat, src: &FieldMat, row0: usize, col0: usize) {
    for i in 0..src.rows() {
        for j in 0..src.cols() {
            let v = src.get(i, j);
            if v != 0 {
                dst.set(row0 + i, col0 + j, dst.get(row0 + i, col0 + j) ^ v);
            }
        }
    }
}

/// First-order blocks of a word in the two generator letters: the coefficient
/// matrices (prefix kron suffix^T) summed per letter.
fn word_blocks(word: &[usize], gens: [&FieldMat; 2]) -> [FieldMat; 2] {
    let q = gens[0].rows();
    let id = FieldMat::identity(1, q);
    let len = word.len();
    let mut prefixes = Vec::with_capacity(len + 1);
    prefixes.push(id.clone());
    for &w in word {
        let last = prefixes.last().unwrap();
        prefixes.push(last.mul(gens[w]));
    }
    let mut suffixes = vec![id.clone(); len + 1];
    for i in (0..len).rev() {
        suffixes[i] = gens[word[i]].mul(&suffixes[i + 1]);
    }
    let zero = FieldMat::zeros(1, q * q, q * q);
    let mut blocks = [zero.clone(), zero];
    for (i, &w) in word.iter().enumerate() {
        let kron = prefixes[i].kron(&suffixes[i + 1].transpose());
        blocks[w] = blocks[w].add(&kron);
    }
    blocks
}

/// Residual of a matrix identity that holds at level n, divided by 2^n and
/// reduced mod 2.
fn residual_gf2(lhs: &ZnMat, rhs: &ZnMat, n: u8) -> FieldMat {
    let diff = lhs.sub(rhs);
    let mut out = FieldMat::zeros(1, diff.rows(), diff.cols());
    for i in 0..diff.rows() {
        for j in 0..diff.cols() {
            let v = diff.get(i, j);
            assert!(v & ((1u64 << n) - 1) == 0, "residual is not divisible by 2^n");
            if (v >> n) & 1 == 1 {
                out.set(i, j, 1);
            }
        }
    }
    out
}

fn vec_of(mat: &FieldMat) -> FieldMat {
    mat.vec_row().transpose()
}

/// One lifting step from level n to level n + 1, solutions modulo the
/// level-local gauge I + 2^n C. An unsolvable system yields an empty list
/// together with the obstruction certificate.
pub fn lift_step(l: &LiftRep) -> Result<LiftStepOutcome> {
    l.validate()?;
    let q = l.dim();
    let n = l.level;
    let n1 = n + 1;
    let g = l.group;
    let st = l.s.lift_level(n1);
    let tt = l.t.lift_level(n1);
    let id_zn = ZnMat::identity(n1, q);

    let sbar = {
        let red = l.reduction();
        red.s().clone()
    };
    let tbar = l.reduction().t().clone();
    let id = FieldMat::identity(1, q);

    // relation residuals at level n+1, divided by 2^n
    let r_s = residual_gf2(&st.mul(&st), &id_zn, n);
    let r_t = residual_gf2(&tt.mul(&tt), &id_zn, n);
    let e = 1u64 << (g.d - 2);
    let r_w = residual_gf2(&st.mul(&tt).pow(e), &tt.mul(&st).pow(e), n);

    // first-order blocks
    let q2 = q * q;
    let s_block = id.kron(&sbar.transpose()).add(&sbar.kron(&id));
    let t_block = id.kron(&tbar.transpose()).add(&tbar.kron(&id));
    let lword: Vec<usize> = (0..2 * e as usize).map(|i| i % 2).collect(); // s t s t ...
    let rword: Vec<usize> = (0..2 * e as usize).map(|i| (i + 1) % 2).collect(); // t s t s ...
    let lb = word_blocks(&lword, [&sbar, &tbar]);
    let rb = word_blocks(&rword, [&sbar, &tbar]);
    let braid_a = lb[0].add(&rb[0]);
    let braid_b = lb[1].add(&rb[1]);

    // assemble [A | B] system with rhs
    let mut sys = FieldMat::zeros(1, 3 * q2, 2 * q2);
    copy_block(&mut sys, &s_block, 0, 0);
    copy_block(&mut sys, &t_block, q2, q2);
    copy_block(&mut sys, &braid_a, 2 * q2, 0);
    copy_block(&mut sys, &braid_b, 2 * q2, q2);
    let rhs = vec_of(&r_s).vstack(&vec_of(&r_t)).vstack(&vec_of(&r_w));

    let Some(particular) = sys.solve(&rhs) else {
        return Ok(LiftStepOutcome {
            lifts: Vec::new(),
            tangent_bits: 0,
            obstruction: Some(format!(
                "no correction solves the relations at level {n1}: rank {} system with inconsistent right-hand side",
                sys.rank()
            )),
        });
    };
    let kernel = sys.kernel();

    // coboundary directions (C sbar + sbar C, C tbar + tbar C)
    let mut cob = FieldMat::zeros(1, q2, 2 * q2);
    for u in 0..q {
        for v in 0..q {
            let row = u * q + v;
            for b in 0..q {
                // (e_uv X)_{u,b} = X_{v,b}; (X e_uv)_{a,v} = X_{a,u}
                let x1 = sbar.get(v, b);
                if x1 != 0 {
                    let idx = u * q + b;
                    cob.set(row, idx, cob.get(row, idx) ^ x1);
                }
                let x2 = tbar.get(v, b);
                if x2 != 0 {
                    let idx = q2 + u * q + b;
                    cob.set(row, idx, cob.get(row, idx) ^ x2);
                }
            }
            for a in 0..q {
                let x1 = sbar.get(a, u);
                if x1 != 0 {
                    let idx = a * q + v;
                    cob.set(row, idx, cob.get(row, idx) ^ x1);
                }
                let x2 = tbar.get(a, u);
                if x2 != 0 {
                    let idx = q2 + a * q + v;
                    cob.set(row, idx, cob.get(row, idx) ^ x2);
                }
            }
        }
    }
    debug_assert!(sys.mul(&cob.transpose()).is_zero(), "gauge must preserve solutions");

    // complement of the coboundary span inside the kernel
    let mut rows = cob;
    let mut rank = rows.rank();
    let mut complement = Vec::new();
    for k in 0..kernel.cols() {
        let cand_row = kernel.col(k).transpose();
        let grown = rows.vstack(&cand_row);
        let r2 = grown.rank();
        if r2 > rank {
            rows = grown;
            rank = r2;
            complement.push(kernel.col(k));
        }
    }
    let bits = complement.len();
    if bits > 12 {
        return Err(Error::CertificateFailure(format!(
            "solution space of 2^{bits} gauge classes is outside the enumerable range"
        )));
    }

    let mut lifts = Vec::with_capacity(1 << bits);
    for code in 0u64..(1 << bits) {
        let mut sol = particular.clone();
        for (i, c) in complement.iter().enumerate() {
            if (code >> i) & 1 == 1 {
                sol = sol.add(c);
            }
        }
        let mut s_new = st.clone();
        let mut t_new = tt.clone();
        for a in 0..q {
            for b in 0..q {
                if sol.get(a * q + b, 0) == 1 {
                    s_new.set(a, b, s_new.get(a, b) ^ (1u64 << n));
                }
                if sol.get(q2 + a * q + b, 0) == 1 {
                    t_new.set(a, b, t_new.get(a, b) ^ (1u64 << n));
                }
            }
        }
        let lift = LiftRep { group: g, level: n1, s: s_new, t: t_new };
        lift.validate()?;
        debug_assert_eq!(lift.reduce_level(n).s, l.s);
        lifts.push(lift);
    }
    Ok(LiftStepOutcome { lifts, tangent_bits: bits, obstruction: None })
}

/// Exact test for an invertible intertwiner between two lifts over Z/2^n.
/// Invertibility over the truncation is invertibility of the mod-2 image, so
/// the search space is the GF(2) span of the reduced kernel generators.
pub fn invertible_intertwiner_exists(a: &LiftRep, b: &LiftRep) -> Result<bool> {
    assert_eq!(a.level, b.level);
    assert_eq!(a.dim(), b.dim());
    let q = a.dim();
    let n = a.level;
    let idq = ZnMat::identity(n, q);
    // X a.s = b.s X and X a.t = b.t X over Z/2^n
    let block = |am: &ZnMat, bm: &ZnMat| {
        idq.kron(&am.transpose()).sub(&bm.kron(&idq))
    };
    let mut sys = block(&a.s, &b.s);
    let other = block(&a.t, &b.t);
    // stack rows
    let mut stacked = ZnMat::zeros(n, sys.rows() + other.rows(), q * q);
    for i in 0..sys.rows() {
        for j in 0..q * q {
            stacked.set(i, j, sys.get(i, j));
        }
    }
    for i in 0..other.rows() {
        for j in 0..q * q {
            stacked.set(sys.rows() + i, j, other.get(i, j));
        }
    }
    sys = stacked;
    let diag = zn_diagonalize(&sys);
    let gens = diag.kernel_gens();
    // span of mod-2 reductions
    let mut basis_rows = FieldMat::zeros(1, 0, q * q);
    for g in &gens {
        let mut row = FieldMat::zeros(1, 1, q * q);
        for (j, &v) in g.vector.iter().enumerate() {
            if v & 1 == 1 {
                row.set(0, j, 1);
            }
        }
        let grown = basis_rows.vstack(&row);
        if grown.rank() > basis_rows.rank() {
            basis_rows = grown;
        }
    }
    let h = basis_rows.rows();
    if h > 20 {
        return Err(Error::Inconclusive(format!(
            "intertwiner span of dimension {h} exceeds the exhaustive threshold"
        )));
    }
    for code in 1u64..(1u64 << h) {
        let mut x = FieldMat::zeros(1, q, q);
        for i in 0..h {
            if (code >> i) & 1 == 1 {
                for j in 0..q * q {
                    if basis_rows.get(i, j) == 1 {
                        x.set(j / q, j % q, x.get(j / q, j % q) ^ 1);
                    }
                }
            }
        }
        if x.is_invertible() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn dedupe_by_character(frontier: Vec<LiftRep>) -> Result<Vec<LiftRep>> {
    let mut kept: Vec<(Vec<u64>, Vec<LiftRep>)> = Vec::new();
    for l in frontier {
        let ch = lift_character(&l);
        match kept.iter_mut().find(|(c, _)| *c == ch) {
            None => kept.push((ch, vec![l])),
            Some((_, reps)) => {
                // characters tie: merge only on a proven isomorphism
                let mut duplicate = false;
                for r in reps.iter() {
                    if invertible_intertwiner_exists(r, &l)? {
                        duplicate = true;
                        break;
                    }
                }
                if !duplicate {
                    reps.push(l);
                }
            }
        }
    }
    Ok(kept.into_iter().flat_map(|(_, reps)| reps).collect())
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct NonIsoWitness {
    pub first: usize,
    pub second: usize,
    /// class index where the characters differ, if that is the certificate
    pub class_index: Option<usize>,
    /// set when the certificate is an exhaustive intertwiner search instead
    pub by_intertwiner_search: bool,
}

pub struct FourLifts {
    pub ledger: CharacterLedger,
    pub lifts: [LiftRep; 4],
    pub characters: [Vec<u64>; 4],
    pub ledger_values: [Vec<u64>; 4],
    pub witnesses: Vec<NonIsoWitness>,
    pub tangent_bits_per_step: Vec<usize>,
}

/// Walk the lifting tree to the requested level and select, per ledger
/// character, one lift whose traces match it modulo 2^level. Fewer than four
/// matches is a hard failure carrying the obstruction trace.
pub fn four_lifts(
    g: GroupSpec,
    nu: Reflection,
    n: usize,
    level: u8,
    iso: &IsoConfig,
) -> Result<FourLifts> {
    if level < 2 {
        return Err(Error::InvalidArgument("lifting level must be at least 2".into()));
    }
    let led = ledger(g, nu, n, iso)?;
    let a = a_module(g, nu, n, 1, iso)?;
    let mut frontier = vec![lift_of_module(&a.module)?];
    let mut tangent_bits_per_step = Vec::new();
    for _ in 1..level {
        let mut next = Vec::new();
        let mut bits_seen = None;
        for l in &frontier {
            let out = lift_step(l)?;
            if let Some(ob) = out.obstruction {
                return Err(Error::Obstruction(format!(
                    "lifting from level {} failed: {ob}",
                    l.level
                )));
            }
            bits_seen = Some(out.tangent_bits);
            next.extend(out.lifts);
        }
        tangent_bits_per_step.push(bits_seen.unwrap_or(0));
        frontier = dedupe_by_character(next)?;
    }

    // ledger character values modulo 2^level
    let table = crate::chars::char_table(g);
    let modulus = 1i64 << level;
    let ledger_values: Vec<Vec<u64>> = led
        .entries
        .iter()
        .map(|e| {
            e.values(&table)
                .map(|vals| vals.iter().map(|v| v.rem_euclid(modulus) as u64).collect())
        })
        .collect::<Result<_>>()?;

    let mut selected: Vec<Option<usize>> = vec![None; 4];
    let chars: Vec<Vec<u64>> = frontier.iter().map(lift_character).collect();
    for (li, ch) in chars.iter().enumerate() {
        for (ei, lv) in ledger_values.iter().enumerate() {
            if selected[ei].is_none() && ch == lv {
                selected[ei] = Some(li);
            }
        }
    }
    let missing: Vec<usize> = selected
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.is_none().then_some(i))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Obstruction(format!(
            "ledger entries {missing:?} have no matching lift at level {level}; {} lifts enumerated",
            frontier.len()
        )));
    }
    let picks: Vec<usize> = selected.into_iter().map(Option::unwrap).collect();
    let lifts: [LiftRep; 4] = std::array::from_fn(|i| frontier[picks[i]].clone());
    let characters: [Vec<u64>; 4] = std::array::from_fn(|i| chars[picks[i]].clone());

    // pairwise non-isomorphism certificates
    let mut witnesses = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let class_index = characters[i]
                .iter()
                .zip(&characters[j])
                .position(|(a, b)| a != b);
            let by_search = if class_index.is_none() {
                if invertible_intertwiner_exists(&lifts[i], &lifts[j])? {
                    return Err(Error::CertificateFailure(format!(
                        "selected lifts {i} and {j} are isomorphic"
                    )));
                }
                true
            } else {
                false
            };
            witnesses.push(NonIsoWitness {
                first: i,
                second: j,
                class_index,
                by_intertwiner_search: by_search,
            });
        }
    }

    let ledger_values: [Vec<u64>; 4] = std::array::from_fn(|i| ledger_values[i].clone());
    Ok(FourLifts { ledger: led, lifts, characters, ledger_values, witnesses, tangent_bits_per_step })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::{make_group, SubgroupId};
    use crate::modrep::{induce, GroupKind};

    fn iso() -> IsoConfig {
        IsoConfig::default()
    }

    #[test]
    fn lifts_of_trivial_to_level_2_are_the_four_characters() {
        let g = make_group(3).unwrap();
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        let out = lift_step(&lift_of_module(&k).unwrap()).unwrap();
        assert_eq!(out.lifts.len(), 4);
        assert_eq!(out.tangent_bits, 2);
        let mut pairs: Vec<(u64, u64)> =
            out.lifts.iter().map(|l| (l.s.get(0, 0), l.t.get(0, 0))).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(1, 1), (1, 3), (3, 1), (3, 3)]);
    }

    #[test]
    fn permutation_lift_is_a_solution() {
        // the coset permutation matrices over Z/2^(n+1) satisfy the relations
        // and reduce to the level-n permutation lift
        let g = make_group(3).unwrap();
        let sub = g.subgroup(SubgroupId::CSigma);
        let perm = |level: u8| {
            let build = |gen: crate::dihedral::GroupElem| {
                let t = sub.coset_reps.len();
                let mut out = ZnMat::zeros(level, t, t);
                for (i, &x) in sub.coset_reps.iter().enumerate() {
                    let (i2, _) = g.coset_decompose(&sub, g.mul(gen, x));
                    out.set(i2, i, 1);
                }
                out
            };
            LiftRep { group: g, level, s: build(g.sigma()), t: build(g.tau()) }
        };
        for level in [2u8, 3] {
            let l = perm(level);
            l.validate().unwrap();
            assert_eq!(l.reduce_level(level - 1).s, perm(level - 1).s);
        }
        // reduction mod 2 is the induced module
        let ind = induce(g, &sub, &ModuleRep::trivial(GroupKind::Cyclic2, 1)).unwrap();
        assert_eq!(perm(2).reduction(), ind);
        // trace of sigma at level 2 equals the fixed-coset count
        assert_eq!(perm(2).act_elem(g.sigma()).trace(), 2);
    }

    #[test]
    fn unobstructed_chain_d3() {
        let g = make_group(3).unwrap();
        for n in 0..=3usize {
            let a = a_module(g, Reflection::Sigma, n, 1, &iso()).unwrap();
            let mut frontier = vec![lift_of_module(&a.module).unwrap()];
            for _ in 1..3 {
                let mut next = Vec::new();
                for l in &frontier {
                    let out = lift_step(l).unwrap();
                    assert!(out.obstruction.is_none(), "obstructed at n={n}");
                    assert_eq!(out.tangent_bits, 2, "gauge classes at n={n}");
                    next.extend(out.lifts);
                }
                frontier = next;
            }
            assert!(!frontier.is_empty());
        }
    }

    #[test]
    fn four_lifts_n0_level2_match_linear_characters() {
        let g = make_group(3).unwrap();
        let fl = four_lifts(g, Reflection::Sigma, 0, 2, &iso()).unwrap();
        // classes: 1, z, r, sigma, tau; chi1..chi4 mod 4
        let mut got: Vec<Vec<u64>> = fl.characters.to_vec();
        got.sort();
        let mut want = vec![
            vec![1, 1, 1, 1, 1],
            vec![1, 1, 1, 3, 3],
            vec![1, 1, 3, 1, 3],
            vec![1, 1, 3, 3, 1],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn four_lifts_d3_n1_level3_match_ledger_mod_8() {
        let g = make_group(3).unwrap();
        let fl = four_lifts(g, Reflection::Sigma, 1, 3, &iso()).unwrap();
        let mut got: Vec<Vec<u64>> = fl.characters.to_vec();
        got.sort();
        let mut want = vec![
            vec![5, 1, 1, 7, 1],
            vec![5, 1, 7, 7, 7],
            vec![5, 1, 1, 1, 7],
            vec![5, 1, 7, 1, 1],
        ];
        want.sort();
        assert_eq!(got, want);
        // all six pairs certified
        assert_eq!(fl.witnesses.len(), 6);
        assert!(fl.witnesses.iter().all(|w| w.class_index.is_some()));
    }

    #[test]
    fn reduction_of_higher_level_is_valid() {
        let g = make_group(3).unwrap();
        let fl = four_lifts(g, Reflection::Sigma, 1, 3, &iso()).unwrap();
        for l in &fl.lifts {
            let down = l.reduce_level(2);
            down.validate().unwrap();
            assert_eq!(down.reduction(), l.reduction());
        }
    }

    #[test]
    fn intertwiner_search_on_identical_lifts() {
        let g = make_group(3).unwrap();
        let k = ModuleRep::trivial(GroupKind::Dihedral(g), 1);
        let l = lift_step(&lift_of_module(&k).unwrap()).unwrap().lifts;
        assert!(invertible_intertwiner_exists(&l[0], &l[0]).unwrap());
        // 1-dimensional lifts with distinct characters admit no intertwiner
        let distinct: Vec<_> = l
            .iter()
            .filter(|x| (x.s.get(0, 0), x.t.get(0, 0)) != (l[0].s.get(0, 0), l[0].t.get(0, 0)))
            .collect();
        assert!(!invertible_intertwiner_exists(&l[0], distinct[0]).unwrap());
    }
}
