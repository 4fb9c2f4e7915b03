//! Randomized property tests for the certificate engine and the form algebra.

use proptest::prelude::*;

use cicy_core::catalog::{load_catalog, CicyType};
use cicy_core::enumerate::{admissible, quintic_oracle};
use cicy_core::nodelab::{random_form, HomogeneousForm};
use cicy_core::rules::{binomial, certify, cond_node_budget, cond_node_surplus, CurveClass};

fn cicy_type() -> impl Strategy<Value = CicyType> {
    prop::sample::select(CicyType::ALL.to_vec())
}

proptest! {
    #[test]
    fn certify_is_pure(row_idx in 0usize..9, d in 1u32..60, g in 0u32..40) {
        let row = &load_catalog()[row_idx];
        let curve = CurveClass::new(d, g).unwrap();
        prop_assert_eq!(certify(row, curve), certify(row, curve));
    }

    #[test]
    fn node_budget_implies_surplus(row_idx in 0usize..9, g in 0u32..200) {
        let row = &load_catalog()[row_idx];
        let curve = CurveClass::new(1, g).unwrap();
        if cond_node_budget(row, curve) {
            prop_assert!(cond_node_surplus(row, curve));
        }
    }

    #[test]
    fn quintic_oracle_matches_certificates(d in 1u32..=40, g in 0u32..=30) {
        prop_assert_eq!(admissible(CicyType::Quintic, d, g).is_some(), quintic_oracle(d, g));
    }

    #[test]
    fn admissible_cells_have_positive_counts(t in cicy_type(), d in 1u32..=30, g in 0u32..=30) {
        if let Some(cert) = admissible(t, d, g) {
            let n = cert.expected_count.expect("admissible certificates carry a count");
            prop_assert!(n >= 1u32.into());
            prop_assert!(cert.cond_node_surplus);
            prop_assert_eq!(n, binomial(cert.row.ell as u64 - 2, g as u64));
        }
    }

    #[test]
    fn pascal_recurrence(n in 1u64..80, k in 0u64..80) {
        let lhs = binomial(n, k);
        let rhs = binomial(n - 1, k) + if k > 0 { binomial(n - 1, k - 1) } else { 0u32.into() };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_evaluation_is_multiplicative(
        da in 1u32..4,
        db in 1u32..4,
        sa in 0u64..1000,
        sb in 0u64..1000,
        x in 0u64..10007,
        y in 0u64..10007,
        z in 0u64..10007,
    ) {
        let p = 10007u64;
        let f = random_form(p, da, sa);
        let g = random_form(p, db, sb);
        let h = f.mul(&g);
        prop_assert_eq!(h.degree(), da + db);
        let pt = [x, y, z];
        prop_assert_eq!(h.eval_prime(pt), f.eval_prime(pt) * g.eval_prime(pt) % p);
    }

    #[test]
    fn form_sum_evaluates_pointwise(d in 1u32..5, sa in 0u64..1000, sb in 0u64..1000, x in 0u64..10007, y in 0u64..10007) {
        let p = 10007u64;
        let f = random_form(p, d, sa);
        let g = random_form(p, d, sb);
        let s = f.add(&g).unwrap();
        let pt = [x, y, 1];
        prop_assert_eq!(s.eval_prime(pt), (f.eval_prime(pt) + g.eval_prime(pt)) % p);
        // and subtraction undoes it
        prop_assert_eq!(s.sub(&g).unwrap(), f);
    }

    #[test]
    fn random_forms_are_seed_determined(d in 1u32..5, seed in 0u64..5000) {
        let a = random_form(10007, d, seed);
        let b = random_form(10007, d, seed);
        prop_assert_eq!(&a, &b);
        prop_assert!(a.support_len() <= ((d + 1) * (d + 2) / 2) as usize);
    }

    #[test]
    fn zero_forms_absorb_products(d in 0u32..4, s in 0u64..100) {
        let f = random_form(10007, d, s);
        let z = HomogeneousForm::zero(10007, 2);
        prop_assert!(f.mul(&z).is_zero());
        prop_assert_eq!(f.mul(&z).degree(), d + 2);
    }
}
