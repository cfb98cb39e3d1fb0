//! Acceptance suite: one test and one printed pass/fail line per criterion.
//!
//! The tests are serialized through a process-wide gate so the stated wall
//! clock budgets are measured without contention from sibling tests.

use std::sync::Mutex;
use std::time::Instant;

use endolift::config::Config;
use endolift::endotriv::Reflection;
use endolift::verify;

static GATE: Mutex<()> = Mutex::new(());

/// Serialize the criteria so wall-clock budgets are contention-free; a
/// poisoned lock (an earlier criterion failed) is fine to reuse.
fn gate() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn cfg() -> Config {
    Config::default()
}

fn announce(n: u32, pass: bool, detail: &str) {
    println!("acceptance criterion {n}: {} — {detail}", if pass { "PASS" } else { "FAIL" });
}

#[test]
fn criterion_01_group_algebra_structure() {
    let _g = gate();
    let start = Instant::now();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4, 5] {
        let r = verify::check_structure(d, &cfg);
        if !r.pass {
            ok = false;
            notes.push(format!("d={d}: {}", r.witnesses));
        }
    }
    let elapsed = start.elapsed();
    let within = elapsed.as_secs_f64() < 5.0;
    announce(
        1,
        ok && within,
        &format!("socle/radical/heart/ideal checks for d in 3..=5 in {:.2?}", elapsed),
    );
    assert!(ok, "{notes:?}");
    assert!(within, "budget of 5 s exceeded: {elapsed:?}");
}

#[test]
fn criterion_02_lattice_characters() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4, 5] {
        let r = verify::check_chars(d, &cfg);
        if !r.pass {
            ok = false;
            notes.push(format!("d={d}: {}", r.witnesses));
        }
    }
    announce(2, ok, "permutation and complement characters plus lattice reductions, d in 3..=5");
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_03_a_series_dimensions_restrictions_sequences() {
    let _g = gate();
    let start = Instant::now();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4, 5] {
        for nu in [Reflection::Sigma, Reflection::Tau] {
            let r = verify::check_a_series(d, nu, 3, &cfg);
            if !r.pass {
                ok = false;
                notes.push(format!("d={d} {}: {}", nu.name(), r.witnesses));
            }
        }
    }
    let elapsed = start.elapsed();
    let within = elapsed.as_secs_f64() < 60.0;
    announce(
        3,
        ok && within,
        &format!("dims, restrictions and step sequences for n <= 3, d in 3..=5 in {:.2?}", elapsed),
    );
    assert!(ok, "{notes:?}");
    assert!(within, "budget of 60 s exceeded: {elapsed:?}");
}

#[test]
fn criterion_04_xi_values_and_shift() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4, 5] {
        let r = verify::check_xi(d, 3, &cfg);
        if !r.pass {
            ok = false;
            notes.push(format!("d={d}: {}", r.witnesses));
        }
    }
    announce(4, ok, "Xi of k, the E modules and the series, with the diagonal shift rule");
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_05_endotriviality() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4, 5] {
        let r = verify::check_endotrivial(d, 3, &cfg);
        if !r.pass {
            ok = false;
            notes.push(format!("d={d}: {}", r.witnesses));
        }
    }
    announce(
        5,
        ok,
        "series members and their syzygies are endo-trivial; the regular module and the heart are not (see the radical-control test for the remaining stated clause)",
    );
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_05_radical_control_as_stated() {
    let _g = gate();
    // Stated expectation: the radical of the regular module is NOT
    // endo-trivial. The radical is the kernel of the augmentation map
    // kD -> k, i.e. the first syzygy of the trivial module, and syzygies of
    // endo-trivial modules are endo-trivial; the computation below confirms
    // that End_k of the radical strips to the trivial module. The clause can
    // therefore never hold; the quotient radical/socle is the sound negative
    // control and is covered by the test above.
    let g = endolift::dihedral::make_group(3).unwrap();
    let kd = endolift::modrep::ModuleRep::regular(endolift::modrep::GroupKind::Dihedral(g), 1);
    let rad = kd.radical().module;
    let computed = endolift::endotriv::is_endotrivial(&rad);
    let pass = !computed;
    announce(
        5,
        pass,
        "stated radical control: expected is_endotrivial(rad(kD)) = false, computed true (rad(kD) is the first syzygy of k)",
    );
    assert!(
        pass,
        "is_endotrivial(rad(kD)) = {computed}; rad(kD) is the first syzygy of the trivial \
         module and hence endo-trivial, so the stated expectation cannot hold"
    );
}

#[test]
fn criterion_06_self_extension_trichotomy() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4] {
        for nu in [Reflection::Sigma, Reflection::Tau] {
            for n in 0..=2 {
                let r = verify::check_ext_squared(d, nu, n, &cfg);
                if !r.pass {
                    ok = false;
                    notes.push(format!("d={d} {} n={n}: {}", nu.name(), r.witnesses));
                }
            }
        }
    }
    announce(6, ok, "Ext dim 2 and the middle-term trichotomy over GF(2) and GF(4)");
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_07_fingerprint_coverage() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4] {
        for nu in [Reflection::Sigma, Reflection::Tau] {
            for n in 0..=2 {
                let r = verify::check_fingerprints(d, nu, n, &cfg);
                if !r.pass {
                    ok = false;
                    notes.push(format!("d={d} {} n={n}: {}", nu.name(), r.witnesses));
                }
            }
        }
    }
    announce(7, ok, "the three nonzero tangent fingerprints are exactly the three nonzero pairs");
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_08_four_lifts_and_theorem_evidence() {
    let _g = gate();
    let start = Instant::now();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3, 4] {
        for nu in [Reflection::Sigma, Reflection::Tau] {
            for n in 0..=2 {
                let r = verify::check_theorem(d, nu, n, 3, &cfg);
                if !r.pass {
                    ok = false;
                    notes.push(format!("d={d} {} n={n}: {}", nu.name(), r.witnesses));
                } else {
                    let w = &r.witnesses;
                    if w["tangent_dim"] != 2 {
                        ok = false;
                        notes.push(format!("d={d} {} n={n}: tangent dim {}", nu.name(), w["tangent_dim"]));
                    }
                    if !w["endotrivial_lift"].as_array().unwrap().iter().all(|b| b.as_bool() == Some(true)) {
                        ok = false;
                        notes.push(format!("d={d} {} n={n}: lift endo-triviality", nu.name()));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let within = elapsed.as_secs_f64() < 600.0;
    announce(
        8,
        ok && within,
        &format!(
            "four ledger-matched pairwise non-isomorphic lifts over Z/8 with endo-trivial lifts in {:.2?}",
            elapsed
        ),
    );
    assert!(ok, "{notes:?}");
    assert!(within, "budget of 600 s exceeded: {elapsed:?}");
}

#[test]
fn criterion_09_hom_dimension_cross_checks() {
    let _g = gate();
    let cfg = cfg();
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [3u32, 4] {
        for nu in [Reflection::Sigma, Reflection::Tau] {
            for n in 0..=2usize {
                let r = verify::check_hom_counts(d, nu, n, &cfg);
                let expect_f = (n as i64) * (1i64 << (d - 2));
                if !r.pass
                    || r.witnesses["hom_dim_f"] != expect_f
                    || r.witnesses["hom_dim_k"] != expect_f + 1
                {
                    ok = false;
                    notes.push(format!("d={d} {} n={n}: {}", nu.name(), r.witnesses));
                }
            }
        }
    }
    announce(9, ok, "weighted character Hom dims equal the exact module counts minus one");
    assert!(ok, "{notes:?}");
}

#[test]
fn criterion_10_infrastructure() {
    let _g = gate();
    use endolift::exactalg::FieldMat;
    use rand::{Rng, RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(endolift::modrep::DEFAULT_SEED);

    // rank-nullity on 1000 random GF(2) matrices
    for _ in 0..1000 {
        let r = 1 + (rng.next_u32() % 24) as usize;
        let c = 1 + (rng.next_u32() % 24) as usize;
        let a = FieldMat::random(&mut rng, 1, r, c);
        assert_eq!(a.rank() + a.kernel().cols(), c, "rank-nullity failed");
    }

    // Frobenius reciprocity on 100 random (module, subgroup) pairs
    use endolift::dihedral::{make_group, SubgroupId};
    use endolift::modrep::{hom_space, induce, GroupKind, ModuleRep};
    let catalogs: Vec<(u32, Vec<ModuleRep>)> = [3u32, 4]
        .iter()
        .map(|&d| {
            let g = make_group(d).unwrap();
            let iso = endolift::modrep::IsoConfig::default();
            let kind = GroupKind::Dihedral(g);
            let mut cat = vec![
                ModuleRep::trivial(kind, 1),
                ModuleRep::regular(kind, 1),
                endolift::endotriv::e_module(g, Reflection::Sigma, 1),
                endolift::endotriv::e_module(g, Reflection::Tau, 1),
                endolift::endotriv::a_module(g, Reflection::Sigma, 1, 1, &iso).unwrap().module,
                endolift::deform::n_lambda(g, endolift::deform::Lambda::Unit(1), 1).unwrap(),
                endolift::deform::n_lambda(
                    g,
                    endolift::deform::Lambda::Refl(Reflection::Sigma),
                    1,
                )
                .unwrap(),
            ];
            let sum = cat[0].direct_sum(&cat[5]);
            cat.push(sum);
            (d, cat)
        })
        .collect();
    let random_conjugate = |m: &ModuleRep, rng: &mut rand_chacha::ChaCha8Rng| -> ModuleRep {
        let n = m.dim();
        loop {
            let u = FieldMat::random(rng, 1, n, n);
            if let Some(uinv) = u.inverse() {
                let g = m.group().unwrap();
                return ModuleRep::from_action(
                    g,
                    u.mul(m.s()).mul(&uinv),
                    u.mul(m.t()).mul(&uinv),
                )
                .unwrap();
            }
        }
    };
    let subs = [SubgroupId::CSigma, SubgroupId::CTau, SubgroupId::Center, SubgroupId::K1, SubgroupId::K2];
    for _ in 0..100 {
        let (d, cat) = &catalogs[rng.gen_range(0..catalogs.len())];
        let g = make_group(*d).unwrap();
        let m = random_conjugate(&cat[rng.gen_range(0..cat.len())], &mut rng);
        let sid = subs[rng.gen_range(0..subs.len())];
        let sub = g.subgroup(sid);
        let hkind = if matches!(sid, SubgroupId::K1 | SubgroupId::K2) {
            GroupKind::Klein4
        } else {
            GroupKind::Cyclic2
        };
        let x = if rng.gen_bool(0.5) {
            ModuleRep::trivial(hkind, 1)
        } else {
            ModuleRep::regular(hkind, 1)
        };
        let ind = induce(g, &sub, &x).unwrap();
        let lhs = hom_space(&ind, &m).dim();
        let rhs = hom_space(&x, &m.restrict(&sub)).dim();
        assert_eq!(lhs, rhs, "reciprocity failed for {} on dim {}", sid.name(), m.dim());
    }

    // golden corpus byte-stable across two runs
    let cfg = cfg();
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    endolift::golden::write_corpus(&cfg, dir1.path()).unwrap();
    endolift::golden::write_corpus(&cfg, dir2.path()).unwrap();
    let diff = endolift::golden::check_corpus(&cfg, dir1.path()).unwrap();
    assert!(diff.is_empty(), "first corpus is not reproducible: {diff:?}");
    // compare the two trees byte for byte
    let files = endolift::golden::corpus(&cfg).unwrap();
    for rel in files.keys() {
        let a = std::fs::read(dir1.path().join(rel)).unwrap();
        let b = std::fs::read(dir2.path().join(rel)).unwrap();
        assert_eq!(a, b, "corpus file {rel} differs between runs");
    }
    announce(10, true, "rank-nullity x1000, reciprocity x100, corpus byte-stable across two runs");
}
