mod common;

use common::*;
use g2lab::cayley::{a_v, is_in_g2, phi, star_phi};
use g2lab::g2maps::map_k;
use g2lab::torsion::{
    compare_formulas, d_phi, d_star_phi, fg_class, formula_value, map_relations, nabla_phi,
    quoted_map_relations, recover_t, skew_torsion, skew_torsion_checks, split_4form, split_5form,
    t_from_nabla_phi, tau_checks, tau_forms, torsion_model_checks, Formula, TorsionError, TorsionT,
};
use g2lab::{components, Endo7, Form, Module, Vec7, Q};
use proptest::prelude::*;

fn torsion() -> impl Strategy<Value = TorsionT<Q>> {
    endo().prop_map(TorsionT)
}

fn failures(rec: &g2lab::record::VerificationRecord<Q>) -> Vec<&'static str> {
    rec.failures().map(|c| c.id).collect()
}

#[test]
fn identity_torsion() {
    let t = TorsionT(Endo7::<Q>::identity());
    assert_eq!(d_phi(&t).inner(&star_phi()).unwrap(), q(84));
    assert!(d_star_phi(&t).is_zero());
    let tau = tau_forms(&t);
    assert_eq!(tau.tau0, q(12));
    assert!(tau.tau1.is_zero() && tau.tau2.is_zero() && tau.tau3.is_zero());
    assert_eq!(fg_class(&t), vec![Module::X1]);
    assert_eq!(
        fg_class(&TorsionT(Endo7::<Q>::zero())),
        Vec::<Module>::new()
    );
    assert_eq!(
        fg_class(&TorsionT(a_v(&Vec7::<Q>::basis(3)))),
        vec![Module::X4]
    );
}

#[test]
fn splits_of_model_forms() {
    let s = split_4form(&star_phi::<Q>()).unwrap();
    assert_eq!(s.part1, star_phi());
    assert!(s.part7.is_zero() && s.part27.is_zero());
    let w = Form::<Q>::monomial(&[0]).wedge(&phi());
    let s = split_4form(&w).unwrap();
    assert!(s.part1.is_zero() && s.part27.is_zero());
    assert_eq!(s.part7, w);
    let w = Form::<Q>::monomial(&[0]).wedge(&star_phi());
    let s = split_5form(&w).unwrap();
    assert_eq!(s.part7, w);
    assert!(s.part14.is_zero());
    assert!(matches!(
        split_4form(&phi::<Q>()),
        Err(TorsionError::Degree { .. })
    ));
}

#[test]
fn zero_forms_recover_zero() {
    let t = recover_t(&Form::<Q>::zero(4), &Form::zero(5)).unwrap();
    assert!(t.endo().is_zero());
}

#[test]
fn inconsistent_pair_is_reported() {
    let t = TorsionT(Endo7::<Q>::elementary(2, 5));
    let mut dp = d_phi(&t);
    dp.add_monomial(&[0, 1, 2, 3], &q(1));
    match recover_t(&dp, &d_star_phi(&t)) {
        Err(TorsionError::Inconsistent { max_residual, .. }) => assert!(max_residual > 0.0),
        other => panic!("expected inconsistency, got {other:?}"),
    }
}

#[test]
fn friedrich_ivanov_residual_matches_hand_expansion() {
    // (1/18)(12σ₁)² with σ₁² = 7‖T₁‖², ‖p(T)‖² = 6‖T₄‖², |𝒯|² = 4‖T₁‖² + 18‖T₃‖² + 6‖T₄‖².
    let fi = [q(144 * 7) / q(18) - q(2), q(0), -q(9), q(24) - q(3)];
    let reference = [q(54), -q(9), -q(9), q(45)];
    let expected: Vec<Q> = fi.iter().zip(&reference).map(|(a, b)| a - b).collect();
    assert_eq!(expected, vec![q(0), q(9), q(0), -q(24)]);

    // The reference itself, read off pure-module probes with ‖T₍ᵢ₎‖² known.
    let e01 = Endo7::<Q>::elementary(0, 1);
    let pure = [
        (Endo7::<Q>::identity(), q(7), 0),
        (components(&e01).c2, components(&e01).c2.norm_sq(), 1),
        (&e01 + &e01.transpose(), q(2), 2),
        (a_v(&Vec7::<Q>::basis(0)), q(6), 3),
    ];
    for (a, norm, k) in pure {
        assert_eq!(
            formula_value(Formula::Reference, &TorsionT(a)),
            &reference[k] * &norm
        );
    }

    let t = TorsionT(Endo7::<Q>::identity());
    let all = compare_formulas(&t);
    let fi = all
        .iter()
        .find(|r| r.formula == Formula::FriedrichIvanov)
        .unwrap();
    assert_eq!(fi.coefficients.to_vec(), expected);
    for r in &all {
        match r.formula {
            Formula::Reference => assert!(r.coefficients.iter().all(|c| *c == q(0))),
            Formula::Bryant
            | Formula::BorHernandezLamoneda
            | Formula::IntrinsicTorsion
            | Formula::Invariants => {
                assert!(r.matches_reference(), "{}", r.formula)
            }
            _ => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn model_identities(t in torsion()) {
        let rec = torsion_model_checks(&t);
        prop_assert!(rec.holds(), "{:?}", failures(&rec));
        prop_assert_eq!(t_from_nabla_phi(&nabla_phi(&t)), t.clone());
        prop_assert_eq!(recover_t(&d_phi(&t), &d_star_phi(&t)).unwrap(), t);
    }

    #[test]
    fn tau_identities(t in torsion()) {
        let rec = tau_checks(&t);
        prop_assert!(rec.holds(), "{:?}", failures(&rec));
        let tau = tau_forms(&t);
        let c2 = components(t.endo()).c2;
        prop_assert_eq!(&tau.tau2, &c2.flat_2form().scaled(&q(6)));
        prop_assert!(is_in_g2(&Endo7::from_2form(&tau.tau2)));
        prop_assert_eq!(tau.tau3.inner(&phi()).unwrap(), q(0));
    }

    #[test]
    fn four_form_split_matches_k(t in torsion()) {
        let c = components(t.endo());
        let s = split_4form(&d_phi(&t)).unwrap();
        let k = |a: &Endo7<Q>| map_k(&a.transpose()).scaled(&q(3));
        prop_assert_eq!(s.part1, k(&c.c1));
        prop_assert_eq!(s.part7, k(&c.c4));
        prop_assert_eq!(s.part27, k(&c.c3));
    }

    #[test]
    fn corrected_map_relations_hold(t in torsion()) {
        let rec = map_relations(&t);
        prop_assert!(rec.holds(), "{:?}", failures(&rec));
    }

    #[test]
    fn skew_torsion_without_x2(t in torsion()) {
        let c = components(t.endo());
        let t = TorsionT(&t.into_endo() - &c.c2);
        let rec = skew_torsion_checks(&t);
        prop_assert!(rec.holds(), "{:?}", failures(&rec));
        prop_assert!(!skew_torsion(&t).x2_present);
    }

    #[test]
    fn comparators_agree_on_random_torsion(t in torsion()) {
        for r in compare_formulas(&t) {
            match r.formula {
                Formula::Bryant | Formula::BorHernandezLamoneda | Formula::IntrinsicTorsion | Formula::Invariants => {
                    prop_assert!(r.matches_reference(), "{}", r.formula);
                    prop_assert!(r.consistent);
                }
                _ => {}
            }
        }
    }

    #[test]
    fn equivariance_of_derivatives(t in torsion(), which in 0usize..2) {
        let perm = &SYMMETRIES[which];
        let moved = TorsionT(t.endo().conjugate_by_permutation(perm));
        prop_assert_eq!(d_phi(&moved), permute_form(&d_phi(&t), perm));
        prop_assert_eq!(d_star_phi(&moved), permute_form(&d_star_phi(&t), perm));
    }
}

#[test]
fn quoted_map_signs_fail_on_generic_torsion() {
    let t = TorsionT(Endo7::<Q>::from_fn(
        |i, j| q((3 * i + 5 * j) as i64 % 7 - 3),
    ));
    let rec = quoted_map_relations(&t);
    assert!(rec.checks.iter().all(|c| !c.holds()));
}
