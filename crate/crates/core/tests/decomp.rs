mod common;

use common::*;
use g2lab::cayley::{a_v, is_in_g2};
use g2lab::decomp::oracle::oracle_project;
use g2lab::{component_norms, components, p_map, Endo7, Module, Vec7, Q};
use proptest::prelude::*;

#[test]
fn known_inputs_land_in_single_modules() {
    let id = components(&Endo7::<Q>::identity());
    assert_eq!(id.c1, Endo7::identity());
    assert!(id.c2.is_zero() && id.c3.is_zero() && id.c4.is_zero());

    let av = components(&a_v(&Vec7::<Q>::from_ints([1, 2, 0, -1, 0, 3, 0])));
    assert!(av.c1.is_zero() && av.c2.is_zero() && av.c3.is_zero());

    let e01 = Endo7::<Q>::elementary(0, 1);
    let s = components(&(&e01 + &e01.transpose()));
    assert!(s.c1.is_zero() && s.c2.is_zero() && s.c4.is_zero());
    assert_eq!(s.c3, &e01 + &e01.transpose());
}

#[test]
fn p_map_recovers_the_axis_of_a_v() {
    let v = Vec7::<Q>::from_ints([3, -1, 4, 1, -5, 9, 2]);
    assert_eq!(p_map(&a_v(&v)), v.scaled(&q(6)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn components_reconstruct_and_are_orthogonal(a in endo()) {
        let c = components(&a);
        prop_assert_eq!(c.sum(), a.clone());
        let parts = c.as_array();
        for i in 0..4 {
            for j in i + 1..4 {
                prop_assert_eq!(parts[i].tensor_inner(parts[j]), q(0));
            }
        }
        let norms = component_norms(&a);
        for m in Module::ALL {
            prop_assert_eq!(&norms[m.index()], &c.get(m).norm_sq());
        }
        prop_assert_eq!(norms.iter().cloned().fold(q(0), |x, y| x + y), a.norm_sq());
    }

    #[test]
    fn components_are_idempotent(a in endo()) {
        let c = components(&a);
        for m in Module::ALL {
            let again = components(c.get(m));
            for n in Module::ALL {
                if n == m {
                    prop_assert_eq!(again.get(n), c.get(m));
                } else {
                    prop_assert!(again.get(n).is_zero());
                }
            }
        }
        prop_assert!(is_in_g2(&c.c2));
        prop_assert!(c.c3.is_symmetric() && c.c3.trace() == q(0));
    }

    #[test]
    fn components_are_equivariant(a in endo(), which in 0usize..2) {
        let perm = &SYMMETRIES[which];
        let lhs = components(&a.conjugate_by_permutation(perm));
        let rhs = components(&a);
        for m in Module::ALL {
            prop_assert_eq!(lhs.get(m), &rhs.get(m).conjugate_by_permutation(perm));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn closed_forms_match_spanning_set_projection(a in endo()) {
        let c = components(&a);
        for m in Module::ALL {
            prop_assert_eq!(c.get(m), &oracle_project(&a, m));
        }
    }
}
