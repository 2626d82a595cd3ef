use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seifert::laurent::{alexander_from_blocks, alexander_of_matrix, det_poly_matrix};
use seifert::linalg::random_unimodular;
use seifert::pd::parse_pd_line;
use seifert::seifert_matrix::seifert_matrices;
use seifert::seifert_state::genus_of_surface;
use seifert::wirtinger::alexander_via_fox;
use seifert::{IntMatrix, LaurentPoly, PlanarDiagram};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..3, prop::collection::vec(-4i64..=4, 0..5))
        .prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, &c))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn square(max: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)
            .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
    })
}

/// Braid words that close up to knots.
fn knot_braid() -> impl Strategy<Value = PlanarDiagram> {
    (
        2usize..=4,
        prop::collection::vec((1i32..4, any::<bool>()), 2..10),
    )
        .prop_filter_map("closes to a knot", |(strands, gens)| {
            let word: Vec<i32> = gens
                .into_iter()
                .map(|(g, pos)| {
                    let g = 1 + (g - 1) % (strands as i32 - 1);
                    if pos {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            PlanarDiagram::from_braid("b", &word, strands)
                .ok()
                .filter(|d| d.is_knot())
        })
}

/// Cofactor expansion along the first row, as an independent determinant.
fn cofactor(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.is_empty() {
        return LaurentPoly::one();
    }
    let mut acc = LaurentPoly::zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &cofactor(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn breadth_is_additive(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).breadth().unwrap(), a.breadth().unwrap() + b.breadth().unwrap());
    }

    #[test]
    fn normalize_is_idempotent_and_unit_invariant(a in nonzero_poly(), k in -5i64..5, neg in any::<bool>()) {
        let n = a.normalize().unwrap();
        prop_assert_eq!(n.normalize().unwrap(), n.clone());
        let u = if neg { -a.shift(k) } else { a.shift(k) };
        prop_assert!(u.equal_up_to_units(&a));
        prop_assert_eq!(n.min_exp(), Some(0));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn bareiss_matches_cofactor(n in 0usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|_| (0..n).map(|_| {
                let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
                LaurentPoly::from_coeffs(rng.gen_range(-1..=1), &c)
            }).collect())
            .collect();
        prop_assert_eq!(det_poly_matrix(&m).unwrap(), cofactor(&m));
    }

    #[test]
    fn int_det_matches_poly_det_at_one(v in square(5)) {
        // det(V - tV^T) at t = 1 is det(V - V^T)
        let f = alexander_of_matrix(&v).unwrap();
        prop_assert_eq!(f.eval_one(), v.sub(&v.transpose()).det());
    }

    #[test]
    fn pencil_constant_and_top_terms_are_det(v in square(5)) {
        let f = alexander_of_matrix(&v).unwrap();
        let n = v.size() as i64;
        let d = v.det();
        prop_assert_eq!(f.coeff(0), d.clone());
        let sign = if n % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        prop_assert_eq!(f.coeff(n), sign * d);
    }

    #[test]
    fn congruence_preserves_pencil(v in square(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_unimodular(v.size(), 10, &mut rng);
        prop_assert_eq!(alexander_of_matrix(&v.congruent(&p)).unwrap(), alexander_of_matrix(&v).unwrap());
    }

    #[test]
    fn pd_round_trip(d in knot_braid()) {
        let again = parse_pd_line(&d.to_pd_line()).unwrap();
        prop_assert_eq!(again.to_pd_line(), d.to_pd_line());
        prop_assert_eq!(again.signs(), d.signs());
    }

    #[test]
    fn signs_survive_relabelling(d in knot_braid(), k in 0u32..20) {
        let r = d.relabel_cyclic(k);
        prop_assert_eq!(r.signs(), d.signs());
        prop_assert_eq!(alexander_via_fox(&r).unwrap(), alexander_via_fox(&d).unwrap());
    }

    #[test]
    fn mirror_flips_signs_keeps_invariants(d in knot_braid()) {
        let m = d.mirror();
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(genus_of_surface(&m).unwrap(), genus_of_surface(&d).unwrap());
        prop_assert_eq!(alexander_via_fox(&m).unwrap(), alexander_via_fox(&d).unwrap());
    }

    #[test]
    fn seifert_forms_are_consistent(d in knot_braid()) {
        let v = seifert_matrices(&d).unwrap();
        for b in &v.blocks {
            prop_assert_eq!(b.v.add(&b.v.transpose()), b.s.clone());
            prop_assert_eq!(b.v.sub(&b.v.transpose()), b.j.clone());
            prop_assert!(b.s.is_symmetric());
        }
        // V - V^T is unimodular for a knot
        let full = v.assembled();
        let skew = full.sub(&full.transpose()).det();
        prop_assert_eq!(skew, BigInt::from(1));
    }

    #[test]
    fn block_polynomial_matches_oracle(d in knot_braid()) {
        let blocks = alexander_from_blocks(&seifert_matrices(&d).unwrap()).unwrap();
        prop_assert_eq!(blocks, alexander_via_fox(&d).unwrap());
    }
}
