mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use torb_core::gl2z::{alpha_project, decompose, nf_to_matrix, normal_form};
use torb_core::invariants::{oriented_class, unoriented_class};
use torb_core::presentations::{smith_decomposition, smith_normal_form, IntMatrix};
use torb_core::rewriting::{
    build_cobordism, commutator_witness, rewrite_in_free_basis, square_witness, verify_cobordism,
};
use torb_core::{GenWord, Mat2};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows, rows[0].len())
}

proptest! {
    #[test]
    fn decompose_round_trips(w in word_strategy(30)) {
        let m = w.evaluate();
        prop_assert_eq!(decompose(&m).evaluate(), m);
    }

    #[test]
    fn normal_form_round_trips(w in word_strategy(30)) {
        let m = w.evaluate();
        prop_assert_eq!(nf_to_matrix(&normal_form(&m)), m);
    }

    #[test]
    fn normal_form_ignores_inserted_relators(
        w in word_strategy(12),
        pos in 0usize..=12,
        rel in prop::sample::select(vec!["AA B'B'B'", "AAAA", "RR", "RARA", "RBRB", "BBBBBB"]),
    ) {
        let rel: GenWord = rel.parse().unwrap();
        let mut letters = w.0.clone();
        let at = pos.min(letters.len());
        letters.splice(at..at, rel.0.iter().copied());
        prop_assert_eq!(normal_form(&GenWord(letters).evaluate()), normal_form(&w.evaluate()));
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in word_strategy(15), v in word_strategy(15)) {
        prop_assert_eq!(u.concat(&v).evaluate(), u.evaluate().multiply(&v.evaluate()));
        prop_assert!(u.concat(&u.inverse()).evaluate().is_identity());
    }

    #[test]
    fn determinant_counts_reflections(w in word_strategy(30)) {
        let e_r = w.exponent_sums().r;
        prop_assert_eq!(w.evaluate().det(), if e_r % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn inverse_is_two_sided(w in word_strategy(30)) {
        let m = w.evaluate();
        prop_assert!(m.multiply(&m.inverse()).is_identity());
        prop_assert!(m.inverse().multiply(&m).is_identity());
    }

    #[test]
    fn oriented_class_is_additive(x in det_one_strategy(20), y in det_one_strategy(20)) {
        let sum = oriented_class(&x).unwrap() + oriented_class(&y).unwrap();
        prop_assert_eq!(oriented_class(&x.multiply(&y)).unwrap(), sum);
    }

    #[test]
    fn unoriented_class_is_additive(u in word_strategy(20), v in word_strategy(20)) {
        let (x, y) = (u.evaluate(), v.evaluate());
        prop_assert_eq!(unoriented_class(&x.multiply(&y)), unoriented_class(&x) + unoriented_class(&y));
    }

    #[test]
    fn reflection_negates_oriented_class(m in det_one_strategy(25)) {
        let r = Mat2::gen_r();
        let conj = r.multiply(&m).multiply(&r.inverse());
        prop_assert_eq!(oriented_class(&conj).unwrap(), -oriented_class(&m).unwrap());
    }

    #[test]
    fn class_of_a_power(m in det_one_strategy(12), k in -20i64..=20) {
        prop_assert_eq!(oriented_class(&m.pow(k)).unwrap(), oriented_class(&m).unwrap().times(k));
    }

    #[test]
    fn projection_kernel_is_central(m in det_one_strategy(25)) {
        let (_, w) = alpha_project(&m);
        prop_assert_eq!(w.is_empty(), m.is_identity() || m == Mat2::neg_identity());
    }

    #[test]
    fn free_basis_rewrite_is_exact(n in 0usize..=12, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = random_free_basis_word(&mut rng, n);
        prop_assert_eq!(rewrite_in_free_basis(&w.evaluate()).unwrap(), w);
    }

    #[test]
    fn witnesses_re_evaluate(n in 0usize..=12, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = random_free_basis_word(&mut rng, n).evaluate();
        prop_assert!(commutator_witness(&m).unwrap().verifies(&m));
        prop_assert!(square_witness(&m).unwrap().verifies(&m));
    }

    #[test]
    fn cobordisms_verify(ws in prop::collection::vec(word_strategy(10), 0..4), orientable in any::<bool>()) {
        // Close the list up so that it bounds over either kind of base.
        let mut ms: Vec<Mat2> = ws.iter().map(GenWord::evaluate).collect();
        let closing = Mat2::product(&ms).inverse();
        ms.push(closing);
        let d = build_cobordism(&ms, orientable).unwrap();
        prop_assert!(verify_cobordism(&d));
        prop_assert_eq!(d.boundary_monodromies, ms);
    }

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(rows in small_matrix()) {
        let m = int_matrix(&rows);
        let s = smith_decomposition(&m);
        prop_assert_eq!(s.u.multiply(&m).multiply(&s.v), s.d.clone());
        prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for pair in diag.windows(2) {
            let divides = if pair[0].is_zero() {
                pair[1].is_zero()
            } else {
                (&pair[1] % &pair[0]).is_zero()
            };
            prop_assert!(divides, "{:?}", diag);
        }
    }

    #[test]
    fn smith_form_matches_determinantal_divisors(rows in small_matrix()) {
        let cols = rows[0].len();
        prop_assert_eq!(smith_normal_form(&int_matrix(&rows)), invariant_factors_by_minors(&rows, cols));
    }

    #[test]
    fn smith_form_ignores_row_order(rows in small_matrix(), perm_seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = rows.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(perm_seed));
        prop_assert_eq!(smith_normal_form(&int_matrix(&rows)), smith_normal_form(&int_matrix(&shuffled)));
    }
}
