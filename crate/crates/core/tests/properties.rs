use std::sync::Arc;

use dolbeault::cliffext::{EndAlgebra, EndWord, ExtBasis};
use dolbeault::diffop::{OpAlgebra, OperatorElement};
use dolbeault::lie::{Letter, LieAlgebra};
use dolbeault::rational::qi;
use dolbeault::rootsys::{ParabolicData, RootSystem, Weight};
use dolbeault::uea::Uea;
use proptest::prelude::*;

fn uea(t: &str, levi: &[usize], cap: usize) -> Arc<Uea> {
    let rs = RootSystem::build(t).unwrap();
    let pd = ParabolicData::build(&rs, levi).unwrap();
    let g = Arc::new(LieAlgebra::new(&rs).unwrap());
    Arc::new(Uea::new(g, &pd, cap))
}

fn letter() -> impl Strategy<Value = Letter> {
    prop_oneof![(0..3usize).prop_map(Letter::F), (0..2usize).prop_map(Letter::H), (0..3usize).prop_map(Letter::E)]
}

fn end_word(n: usize) -> impl Strategy<Value = EndWord> {
    let full = (1u32 << n) - 1;
    prop::collection::vec((0..=full, 0..=full, -3i64..=3), 1..4).prop_map(|ts| {
        let mut w = EndWord::zero();
        for (i, j, c) in ts {
            w.add_term((i, j), qi(c));
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dot_action_inverts(a in 0i64..4, b in 0i64..4, idx in 0usize..6) {
        let rs = RootSystem::build("A2").unwrap();
        let ws = rs.weyl_group();
        let w = &ws[idx % ws.len()];
        let l = Weight::from_ints(&[a, b]);
        let moved = rs.dot_action(w, &l);
        prop_assert_eq!(rs.dot_action(&rs.inverse(w), &moved), l.clone());
        prop_assert!(rs.weyl_conjugate(&moved.add(&rs.rho), &l.add(&rs.rho)));
    }

    #[test]
    fn antipode_is_an_involutive_anti_automorphism(x in prop::collection::vec(letter(), 0..3), y in prop::collection::vec(letter(), 0..3)) {
        let u = uea("A2", &[], 6);
        let a = u.normalize_word(&x).unwrap();
        let b = u.normalize_word(&y).unwrap();
        prop_assert_eq!(u.antipode(&u.antipode(&a)), a.clone());
        let lhs = u.antipode(&u.mul(&a, &b).unwrap());
        let rhs = u.mul(&u.antipode(&b), &u.antipode(&a)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn end_words_multiply_like_matrices(a in end_word(3), b in end_word(3)) {
        let basis = ExtBasis::new(3);
        let alg = EndAlgebra::new();
        let prod = alg.mul(&a, &b);
        prop_assert_eq!(basis.to_matrix(&prod), basis.to_matrix(&a).mul(&basis.to_matrix(&b)));
    }

    #[test]
    fn d_is_a_graded_derivation(
        x in prop::collection::vec(letter(), 0..2),
        y in prop::collection::vec(letter(), 0..2),
        (i, j) in (0u32..8, 0u32..8),
        (k, l) in (0u32..8, 0u32..8),
    ) {
        let u = uea("A2", &[], 6);
        let ops = OpAlgebra::new(u.clone()).unwrap();
        let dol = ops.dolbeault().unwrap();
        let op = |w: &[Letter], m: u32, n: u32| {
            let p = OperatorElement::from_pbw(&u.normalize_word(w).unwrap());
            ops.mul(&p, &OperatorElement::from_end(&EndWord::word(m, n, qi(1)))).unwrap()
        };
        let a = op(&x, i, j);
        let b = op(&y, k, l);
        let sign = if (i.count_ones() + j.count_ones()) % 2 == 0 { qi(1) } else { qi(-1) };
        let lhs = ops.d(&dol, &ops.mul(&a, &b).unwrap()).unwrap();
        let rhs = ops.mul(&ops.d(&dol, &a).unwrap(), &b).unwrap()
            .add(&ops.mul(&a, &ops.d(&dol, &b).unwrap()).unwrap().scale(&sign));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn casimir_scalar_matches_hc_projection(a in 0i64..3, b in 0i64..3) {
        let u = uea("A2", &[], 4);
        let rs = &u.g.rs;
        let l = Weight::from_ints(&[a, b]);
        let omega = u.casimir();
        let p = u.hc_project(&omega);
        prop_assert_eq!(u.eval_highest(&p, &l), rs.casimir_at(&l.add(&rs.rho)));
    }
}
