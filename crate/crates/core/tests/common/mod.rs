#![allow(dead_code)]

use g2lab::exterior::basis;
use g2lab::{Endo7, Form, Scalar, Vec7, Q};
use proptest::prelude::*;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn small() -> impl Strategy<Value = i64> {
    -9i64..=9
}

pub fn vec7() -> impl Strategy<Value = Vec7<Q>> {
    prop::array::uniform7(small()).prop_map(Vec7::from_ints)
}

pub fn endo() -> impl Strategy<Value = Endo7<Q>> {
    prop::array::uniform7(prop::array::uniform7(small())).prop_map(Endo7::from_ints)
}

pub fn symmetric_endo() -> impl Strategy<Value = Endo7<Q>> {
    endo().prop_map(|a| a.symmetric_part())
}

pub fn form(degree: usize) -> impl Strategy<Value = Form<Q>> {
    prop::collection::vec(small(), basis::dim(degree))
        .prop_map(move |c| Form::from_coeffs(degree, c.into_iter().map(q).collect()).unwrap())
}

pub fn any_form() -> impl Strategy<Value = Form<Q>> {
    (0usize..=7).prop_flat_map(form)
}

/// The two index maps i ↦ i+1 and i ↦ 2i (mod 7), which preserve φ.
pub const SYMMETRIES: [[usize; 7]; 2] = [[1, 2, 3, 4, 5, 6, 0], [0, 2, 4, 6, 1, 3, 5]];

pub fn permute_vec(v: &Vec7<Q>, perm: &[usize; 7]) -> Vec7<Q> {
    let mut out = Vec7::zero();
    for (i, &p) in perm.iter().enumerate() {
        out.0[p] = v.0[i].clone();
    }
    out
}

/// Pushforward of a form under e_i ↦ e_{perm[i]}.
pub fn permute_form(f: &Form<Q>, perm: &[usize; 7]) -> Form<Q> {
    let mut out = Form::zero(f.degree());
    for (pos, c) in f.coeffs().iter().enumerate() {
        let idx: Vec<usize> = f.monomial_indices(pos).iter().map(|&i| perm[i]).collect();
        out.add_monomial(&idx, c);
    }
    out
}

/// Leibniz expansion; independent of the library's elimination code.
pub fn leibniz_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = q(0);
    permutations(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for a in 0..n {
            for b in a + 1..n {
                if p[a] > p[b] {
                    inversions += 1;
                }
            }
        }
        let mut term = q(if inversions % 2 == 0 { 1 } else { -1 });
        for (row, &col) in p.iter().enumerate() {
            term *= &m[row][col];
        }
        total += term;
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// α(v₁,…,v_p) = Σ_I α_I det[(v_j)_{i_k}].
pub fn evaluate_by_minors(f: &Form<Q>, vs: &[Vec7<Q>]) -> Q {
    let mut total = q(0);
    for (pos, c) in f.coeffs().iter().enumerate() {
        let idx = f.monomial_indices(pos);
        let m: Vec<Vec<Q>> = idx
            .iter()
            .map(|&i| vs.iter().map(|v| v.0[i].clone()).collect())
            .collect();
        total += c * leibniz_det(&m);
    }
    total
}
