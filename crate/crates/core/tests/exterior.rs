mod common;

use common::*;
use g2lab::exterior::{basis, flat, sharp, Form};
use g2lab::{Scalar, Vec7, Q};
use proptest::prelude::*;

#[test]
fn evaluation_matches_minor_expansion_on_basis_tuples() {
    let f = Form::<Q>::from_coeffs(3, (0..35).map(|i| q(i - 17)).collect()).unwrap();
    for a in 0..7 {
        for b in 0..7 {
            for c in [0, 3, 6] {
                let vs = [Vec7::basis(a), Vec7::basis(b), Vec7::basis(c)];
                assert_eq!(f.evaluate(&vs).unwrap(), evaluate_by_minors(&f, &vs));
            }
        }
    }
}

#[test]
fn flat_and_sharp_are_inverse() {
    let v = Vec7::<Q>::from_ints([1, -2, 3, 0, 5, -6, 7]);
    let c = flat(&v);
    assert_eq!(c.as_form().coeff(&[4]), q(5));
    assert_eq!(sharp(&c), v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluate_agrees_with_minors(f in form(3), u in vec7(), v in vec7(), w in vec7()) {
        let vs = [u, v, w];
        prop_assert_eq!(f.evaluate(&vs).unwrap(), evaluate_by_minors(&f, &vs));
    }

    #[test]
    fn interior_is_insertion_in_first_slot(f in form(3), x in vec7(), v in vec7(), w in vec7()) {
        let lhs = f.interior(&x).unwrap().evaluate(&[v.clone(), w.clone()]).unwrap();
        prop_assert_eq!(lhs, evaluate_by_minors(&f, &[x, v, w]));
    }

    #[test]
    fn interior_twice_vanishes(f in any_form(), x in vec7()) {
        prop_assume!(f.degree() >= 2);
        prop_assert!(f.interior(&x).unwrap().interior(&x).unwrap().is_zero());
    }

    #[test]
    fn graded_commutativity((a, b) in (0usize..=4, 0usize..=3).prop_flat_map(|(p, r)| (form(p), form(r)))) {
        let sign = if (a.degree() * b.degree()) % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).scaled(&sign));
    }

    #[test]
    fn wedge_is_associative(a in form(1), b in form(2), c in form(3)) {
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn interior_is_an_antiderivation(a in form(2), b in form(3), x in vec7()) {
        let lhs = a.wedge(&b).interior(&x).unwrap();
        let rhs = &a.interior(&x).unwrap().wedge(&b) + &a.wedge(&b.interior(&x).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hodge_is_an_involution(f in any_form()) {
        prop_assert_eq!(f.hodge().hodge(), f);
    }

    #[test]
    fn wedge_with_dual_gives_inner_product((a, b) in (0usize..=7).prop_flat_map(|p| (form(p), form(p)))) {
        let top = a.wedge(&b.hodge());
        prop_assert_eq!(top.top_coefficient(), a.inner(&b).unwrap());
        let factorial: i64 = (1..=a.degree() as i64).product();
        prop_assert_eq!(a.tensor_inner(&b).unwrap(), a.inner(&b).unwrap() * Q::from_int(factorial));
    }

    #[test]
    fn wedge_sign_matches_sorting(i in 0usize..7, j in 0usize..7, k in 0usize..7) {
        let direct = Form::<Q>::monomial(&[i]).wedge(&Form::monomial(&[j])).wedge(&Form::monomial(&[k]));
        prop_assert_eq!(direct, Form::<Q>::monomial(&[i, j, k]));
        prop_assert_eq!(basis::dim(3), 35);
    }
}
