//! Property tests for the arithmetic layer and the functor calculus.

use proptest::prelude::*;

use endolift::dihedral::make_group;
use endolift::exactalg::{CycInt, DenseMatrix, FieldMat, ZnMat};
use endolift::modrep::{
    ext1_dim, ext1_dim_via_cover_restriction, hom_space, GroupKind, ModuleRep,
};

/// Naive integer polynomial multiplication followed by x^L -> -1.
fn naive_negacyclic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let l = a.len();
    let mut full = vec![0i64; 2 * l];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            full[i + j] += x * y;
        }
    }
    let mut out = vec![0i64; l];
    for (k, v) in full.into_iter().enumerate() {
        if k < l {
            out[k] += v;
        } else {
            out[k - l] -= v;
        }
    }
    out
}

proptest! {
    #[test]
    fn cyclotomic_multiplication_matches_convolution(
        a in prop::collection::vec(-9i64..=9, 4),
        b in prop::collection::vec(-9i64..=9, 4),
    ) {
        let x = CycInt::from_coeffs(4, a.clone());
        let y = CycInt::from_coeffs(4, b.clone());
        prop_assert_eq!(x.mul(&y).coeffs().to_vec(), naive_negacyclic(&a, &b));
        // commutativity and a spot associativity check
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn zn_reduction_commutes_with_matrix_product(
        a in prop::collection::vec(0u64..16, 9),
        b in prop::collection::vec(0u64..16, 9),
    ) {
        let build = |v: &[u64]| {
            let mut m = ZnMat::zeros(4, 3, 3);
            for i in 0..3 {
                for j in 0..3 {
                    m.set(i, j, v[i * 3 + j]);
                }
            }
            m
        };
        let x = build(&a);
        let y = build(&b);
        prop_assert_eq!(x.mul(&y).reduce(1), x.reduce(1).mul(&y.reduce(1)));
        prop_assert_eq!(x.add(&y).reduce(2), x.reduce(2).add(&y.reduce(2)));
    }

    #[test]
    fn field_solve_solves(seed in 0u64..5000, r in 1usize..8, c in 1usize..8) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = FieldMat::random(&mut rng, 1, r, c);
        let x = FieldMat::random(&mut rng, 1, c, 1);
        let b = a.mul(&x);
        let sol = a.solve(&b).expect("constructed system is consistent");
        prop_assert_eq!(a.mul(&sol), b);
    }

    #[test]
    fn rank_is_invariant_under_transpose(seed in 0u64..5000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = FieldMat::random(&mut rng, 1, 7, 11);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        let g = FieldMat::random(&mut rng, 2, 5, 6);
        prop_assert_eq!(g.rank(), g.transpose().rank());
    }

    #[test]
    fn dense_matrix_json_roundtrip(seed in 0u64..5000, m in 1u8..3) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = DenseMatrix::Field(FieldMat::random(&mut rng, m, 4, 70));
        let back = DenseMatrix::from_json(&a.to_json()).unwrap();
        prop_assert!(a == back);
    }

    #[test]
    fn kron_respects_products(seed in 0u64..2000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        // (A kron B)(C kron D) = AC kron BD over GF(2), exercising the
        // word-shifted kron path with non-aligned block widths
        let a = FieldMat::random(&mut rng, 1, 3, 4);
        let b = FieldMat::random(&mut rng, 1, 5, 7);
        let c = FieldMat::random(&mut rng, 1, 4, 2);
        let d = FieldMat::random(&mut rng, 1, 7, 3);
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }
}

fn catalog() -> Vec<ModuleRep> {
    let g = make_group(3).unwrap();
    let iso = endolift::modrep::IsoConfig::default();
    vec![
        ModuleRep::trivial(GroupKind::Dihedral(g), 1),
        endolift::endotriv::e_module(g, endolift::endotriv::Reflection::Sigma, 1),
        endolift::endotriv::a_module(g, endolift::endotriv::Reflection::Tau, 1, 1, &iso)
            .unwrap()
            .module,
        endolift::deform::n_lambda(g, endolift::deform::Lambda::Unit(1), 1).unwrap(),
        ModuleRep::regular(GroupKind::Dihedral(g), 1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn strip_free_is_stable_under_adding_free_summands(idx in 0usize..5, r in 1usize..3) {
        let cat = catalog();
        let g = make_group(3).unwrap();
        let m = &cat[idx];
        let (core0, rank0) = m.strip_free();
        let mut padded = m.clone();
        for _ in 0..r {
            padded = padded.direct_sum(&ModuleRep::regular(GroupKind::Dihedral(g), 1));
        }
        let (core1, rank1) = padded.strip_free();
        prop_assert_eq!(rank1, rank0 + r);
        prop_assert_eq!(core0.dim(), core1.dim());
        let iso = endolift::modrep::IsoConfig::default();
        prop_assert!(endolift::modrep::is_isomorphic(&core0, &core1, &iso).unwrap().is_iso());
    }

    #[test]
    fn ext_dimension_agrees_across_routes(i in 0usize..5, j in 0usize..5) {
        let cat = catalog();
        prop_assert_eq!(
            ext1_dim(&cat[i], &cat[j]),
            ext1_dim_via_cover_restriction(&cat[i], &cat[j])
        );
    }

    #[test]
    fn hom_dimension_is_self_dual(i in 0usize..5, j in 0usize..5) {
        let cat = catalog();
        prop_assert_eq!(
            hom_space(&cat[i], &cat[j]).dim(),
            hom_space(&cat[j].dual(), &cat[i].dual()).dim()
        );
    }

    #[test]
    fn syzygy_roundtrip_preserves_the_core(idx in 0usize..5) {
        let cat = catalog();
        let m = &cat[idx];
        let (core, _) = m.strip_free();
        let back = m.syzygy_module(1).syzygy_module(-1);
        let (back_core, _) = back.strip_free();
        prop_assert_eq!(core.dim(), back_core.dim());
        if core.dim() > 0 {
            let iso = endolift::modrep::IsoConfig::default();
            prop_assert!(endolift::modrep::is_isomorphic(&core, &back_core, &iso).unwrap().is_iso());
        }
    }

    #[test]
    fn short_exact_sequences_validate(idx in 0usize..5) {
        let cat = catalog();
        let syz = cat[idx].syzygy(1);
        prop_assert!(syz.ses.validate().is_ok());
        prop_assert_eq!(
            syz.ses.left.dim() + syz.ses.right.dim(),
            syz.ses.middle.dim()
        );
    }
}
