//! Exhaustive comparisons against brute-force computations.

mod common;

use std::collections::HashMap;

use common::*;
use torb_core::gl2z::PslWord;
use torb_core::invariants::{in_derived_sl, in_g_derived, unoriented_class};
use torb_core::presentations::{relator_matrix, Presentation};
use torb_core::rewriting::{
    commutator_solution, genus_search, is_commutator, rewrite_in_free_basis, GenusOutcome,
    DEFAULT_GENUS_BUDGET,
};
use torb_core::Mat2;

#[test]
fn free_basis_words_are_distinct_matrices() {
    let mut seen = HashMap::new();
    for w in free_basis_ball(6) {
        let m = w.evaluate();
        assert_eq!(rewrite_in_free_basis(&m).unwrap(), w);
        if let Some(prev) = seen.insert(m, w.clone()) {
            panic!("{prev} and {w} evaluate to the same matrix");
        }
    }
    assert_eq!(seen.len(), 1 + 4 + 12 + 36 + 108 + 324 + 972);
}

#[test]
fn free_basis_words_are_derived() {
    for w in free_basis_ball(4) {
        let m = w.evaluate();
        assert!(in_derived_sl(&m).unwrap());
        assert!(in_g_derived(&m));
    }
}

#[test]
fn is_commutator_matches_brute_force() {
    let oracle = commutators_in_ball(10);
    let mut seen = std::collections::HashSet::new();
    for w in free_basis_ball(4) {
        let m = w.evaluate();
        if !seen.insert(m.clone()) {
            continue;
        }
        let found = commutator_solution(&m).unwrap();
        assert_eq!(found.is_some(), oracle.contains(&m), "{w}");
        if let Some((x, y)) = found {
            assert_eq!(Mat2::commutator(&x, &y), m);
            assert_eq!((x.det(), y.det()), (1, 1));
        }
    }
}

#[test]
fn translation_twelve_has_genus_two() {
    let t12 = Mat2::translation().pow(12);
    assert!(!is_commutator(&t12).unwrap());
    assert!(!commutators_in_ball(10).contains(&t12));
    match genus_search(&t12, 3, DEFAULT_GENUS_BUDGET).unwrap() {
        GenusOutcome::Found { genus, witness } => {
            assert_eq!(genus, 2);
            assert!(witness.verifies(&t12));
        }
        other => panic!("unexpected {other:?}"),
    }
    assert_eq!(
        genus_search(&t12, 1, DEFAULT_GENUS_BUDGET).unwrap(),
        GenusOutcome::ExceedsMax { g_max: 1 }
    );
}

#[test]
fn parity_functionals_kill_relators() {
    // (e_A mod 2, e_R mod 2) is the unoriented class of a word.
    let m = relator_matrix(&Presentation::gl2z());
    for i in 0..m.rows() {
        let row = m.row(i);
        assert!(
            (&row[0] % 2u8 == 0.into()) && (&row[2] % 2u8 == 0.into()),
            "relator {i}"
        );
    }
    walk_ball(6, |_, sm, e| {
        let c = unoriented_class(&to_mat2(sm));
        assert_eq!(
            (c.u as i64, c.v as i64),
            (e[0].rem_euclid(2), e[2].rem_euclid(2))
        );
    });
}

#[test]
fn psl_ball_lifts_injectively() {
    let mut seen = HashMap::new();
    for w in PslWord::enumerate_ball(8) {
        let m = w.lift();
        let key = if m.a().sign() == num_bigint::Sign::Minus
            || (m.a().sign() == num_bigint::Sign::NoSign && m.b().sign() == num_bigint::Sign::Minus)
        {
            m.negate()
        } else {
            m
        };
        assert!(seen.insert(key, w.clone()).is_none(), "{w}");
    }
}
