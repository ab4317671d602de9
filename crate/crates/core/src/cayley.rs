//! The G₂ constants φ, ⋆φ, Vol, the two-fold cross product derived from φ,
//! the endomorphisms A_v, and membership tests for 𝔤₂ and 𝔤₂⊥.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use crate::endo::Endo7;
use crate::exterior::{Form, Vec7};
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

/// The three cyclic index pairs (i+1, i+3), (i+4, i+5), (i+2, i+6) attached
/// to each i ∈ ℤ₇.
pub const CYCLIC_PAIRS: [(usize, usize); 3] = [(1, 3), (4, 5), (2, 6)];

/// The pair (r, s) = (i + dr, i + ds) for pattern `k`.
pub fn cyclic_pair(i: usize, k: usize) -> (usize, usize) {
    let (dr, ds) = CYCLIC_PAIRS[k];
    ((i + dr) % 7, (i + ds) % 7)
}

pub(crate) struct IntConstants {
    pub phi: Form<i64>,
    pub star_phi: Form<i64>,
    /// Nonzero structure constants φ(e_i, e_j, e_k), as (i, j, k, sign).
    pub cross: Vec<(usize, usize, usize, i64)>,
}

fn to_int_form(f: &Form<Q>) -> Form<i64> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral structure constant");
            c.to_integer()
                .to_i64()
                .expect("structure constant fits i64")
        })
        .collect();
    Form::from_parts(f.degree(), coeffs)
}

pub(crate) fn int_constants() -> &'static IntConstants {
    static CONSTANTS: OnceLock<IntConstants> = OnceLock::new();
    CONSTANTS.get_or_init(|| {
        let mut phi = Form::<Q>::zero(3);
        for i in 0..7 {
            phi.add_monomial(&[i, i + 1, i + 3], &Q::from_int(1));
        }
        let star_phi = phi.hodge();
        let mut cross = Vec::new();
        for i in 0..7 {
            let pi = phi.contract_basis(i);
            for j in 0..7 {
                let pij = pi.contract_basis(j);
                for (k, c) in pij.coeffs().iter().enumerate() {
                    let c = c.to_integer().to_i64().expect("unit structure constant");
                    if c != 0 {
                        cross.push((i, j, k, c));
                    }
                }
            }
        }
        IntConstants {
            phi: to_int_form(&phi),
            star_phi: to_int_form(&star_phi),
            cross,
        }
    })
}

/// φ = Σ_{i∈ℤ₇} e_i*∧e_{i+1}*∧e_{i+3}*, its Hodge dual and the volume form.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Constants<S = Q> {
    pub phi: Form<S>,
    pub star_phi: Form<S>,
    pub vol: Form<S>,
}

impl<S: Scalar> G2Constants<S> {
    pub fn new() -> Self {
        let c = int_constants();
        G2Constants {
            phi: c.phi.cast(),
            star_phi: c.star_phi.cast(),
            vol: Form::volume(),
        }
    }
}

impl<S: Scalar> Default for G2Constants<S> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn phi<S: Scalar>() -> Form<S> {
    int_constants().phi.cast()
}

pub fn star_phi<S: Scalar>() -> Form<S> {
    int_constants().star_phi.cast()
}

/// u × v = Σ_i φ(u, v, e_i) e_i.
pub fn cross<S: Scalar>(u: &Vec7<S>, v: &Vec7<S>) -> Vec7<S> {
    let mut out = Vec7::zero();
    for &(i, j, k, c) in &int_constants().cross {
        if u.0[i].is_zero() || v.0[j].is_zero() {
            continue;
        }
        let p = u.0[i].mul_ref(&v.0[j]);
        if c > 0 {
            out.0[k] += &p;
        } else {
            out.0[k] -= &p;
        }
    }
    out
}

/// A_v with A_v(u) = u × v.
pub fn a_v<S: Scalar>(v: &Vec7<S>) -> Endo7<S> {
    // (A_v)_ij = ⟨e_i, e_j × v⟩
    let mut a = Endo7::<S>::zero();
    for &(j, l, i, c) in &int_constants().cross {
        let entry = if c > 0 {
            v.0[l].clone()
        } else {
            -v.0[l].clone()
        };
        let mut cur = a.at(i, j).clone();
        cur += &entry;
        a.set(i, j, cur);
    }
    a
}

/// The seven cyclic sums a_{i+1,i+3} + a_{i+4,i+5} + a_{i+2,i+6}.
pub fn cyclic_sums<S: Scalar>(a: &Endo7<S>) -> [S; 7] {
    std::array::from_fn(|i| {
        let mut acc = S::zero();
        for k in 0..3 {
            let (r, s) = cyclic_pair(i, k);
            acc += a.at(r, s);
        }
        acc
    })
}

/// a ∈ 𝔤₂: antisymmetric with every cyclic sum zero.
pub fn is_in_g2<S: Scalar>(a: &Endo7<S>) -> bool {
    let scale = a.scale();
    a.is_antisymmetric() && cyclic_sums(a).iter().all(|s| s.is_negligible(&scale))
}

/// a ∈ 𝔤₂⊥: antisymmetric with a_{i+1,i+3} = a_{i+4,i+5} = a_{i+2,i+6}.
pub fn is_in_g2_perp<S: Scalar>(a: &Endo7<S>) -> bool {
    let scale = a.scale();
    a.is_antisymmetric()
        && (0..7).all(|i| {
            let (r0, s0) = cyclic_pair(i, 0);
            let first = a.at(r0, s0);
            (1..3).all(|k| {
                let (r, s) = cyclic_pair(i, k);
                (a.at(r, s).clone() - first.clone()).is_negligible(&scale)
            })
        })
}

/// a(u × v) − a(u) × v − u × a(v); vanishes for all u, v iff a ∈ 𝔤₂.
pub fn derivation_defect<S: Scalar>(a: &Endo7<S>, u: &Vec7<S>, v: &Vec7<S>) -> Vec7<S> {
    let lhs = a.apply(&cross(u, v));
    let r1 = cross(&a.apply(u), v);
    let r2 = cross(u, &a.apply(v));
    &(&lhs - &r1) - &r2
}

/// −Σ e_{i+2}*∧e_{i+4}*∧e_{i+5}*∧e_{i+6}*, written out term by term.
pub fn star_phi_displayed<S: Scalar>() -> Form<S> {
    let mut f = Form::zero(4);
    for i in 0..7 {
        f.add_monomial(&[i + 2, i + 4, i + 5, i + 6], &-S::one());
    }
    f
}

/// (φ,φ) = (⋆φ,⋆φ) = 7, φ∧⋆φ = 7 Vol and hodge(φ) against the displayed ⋆φ.
pub fn structural_checks<S: Scalar>() -> VerificationRecord<S> {
    let c = G2Constants::<S>::new();
    let seven = S::from_int(7);
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::scalar(
        "constants.phi-norm",
        "(φ, φ) = 7",
        c.phi.norm_sq(),
        seven.clone(),
    ));
    rec.push(IdentityCheck::scalar(
        "constants.star-phi-norm",
        "(⋆φ, ⋆φ) = 7",
        c.star_phi.norm_sq(),
        seven.clone(),
    ));
    rec.push(IdentityCheck::form(
        "constants.volume",
        "φ∧⋆φ = 7 Vol",
        &c.phi.wedge(&c.star_phi),
        &c.vol.scaled(&seven),
    ));
    rec.push(IdentityCheck::form(
        "constants.star-phi",
        "⋆φ = −Σ e_{i+2}∧e_{i+4}∧e_{i+5}∧e_{i+6}",
        &c.phi.hodge(),
        &star_phi_displayed(),
    ));
    rec
}

/// u×(u×v) = ⟨u,v⟩u − ‖u‖²v, u×(v×w) = −v×(u×w) + ⟨v,w⟩u + ⟨w,u⟩v − 2⟨u,v⟩w
/// and ⟨u×v, w⟩ = ⟨u, v×w⟩.
pub fn cross_identities<S: Scalar>(u: &Vec7<S>, v: &Vec7<S>, w: &Vec7<S>) -> VerificationRecord<S> {
    let mut rec = VerificationRecord::new();
    let lhs = cross(u, &cross(u, v));
    let rhs = &u.scaled(&u.dot(v)) - &v.scaled(&u.norm_sq());
    rec.push(IdentityCheck::vector(
        "cross.double",
        "u×(u×v) = ⟨u,v⟩u − ‖u‖²v",
        &lhs,
        &rhs,
    ));

    let lhs = cross(u, &cross(v, w));
    let mut rhs = -&cross(v, &cross(u, w));
    rhs = &rhs + &u.scaled(&v.dot(w));
    rhs = &rhs + &v.scaled(&w.dot(u));
    rhs = &rhs - &w.scaled(&(S::from_int(2) * u.dot(v)));
    rec.push(IdentityCheck::vector(
        "cross.triple",
        "u×(v×w) = −v×(u×w) + ⟨v,w⟩u + ⟨w,u⟩v − 2⟨u,v⟩w",
        &lhs,
        &rhs,
    ));
    rec.push(IdentityCheck::scalar(
        "cross.adjoint",
        "⟨u×v, w⟩ = ⟨u, v×w⟩",
        cross(u, v).dot(w),
        u.dot(&cross(v, w)),
    ));
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn e(i: usize) -> Vec7<Q> {
        Vec7::basis(i)
    }

    #[test]
    fn structural_constants() {
        let rec = structural_checks::<Q>();
        assert!(
            rec.holds(),
            "{:?}",
            rec.failures().map(|c| c.id).collect::<Vec<_>>()
        );
        assert!(structural_checks::<f64>().holds());
    }

    #[test]
    fn cross_identities_on_basis_triples() {
        for (i, j, k) in [(0, 1, 2), (3, 3, 5), (6, 2, 4)] {
            assert!(cross_identities(&e(i), &e(j), &e(k)).holds());
        }
    }

    #[test]
    fn multiplication_table() {
        for i in 0..7 {
            assert_eq!(cross(&e(i), &e(i + 1)), e(i + 3));
            assert_eq!(cross(&e(i + 3), &e(i)), e(i + 1));
            assert_eq!(cross(&e(i + 1), &e(i + 3)), e(i));
            assert!(cross(&e(i), &e(i)).is_zero());
        }
    }

    #[test]
    fn cross_matches_phi() {
        let phi = phi::<Q>();
        for i in 0..7 {
            for j in 0..7 {
                for k in 0..7 {
                    let lhs = cross(&e(i), &e(j)).dot(&e(k));
                    assert_eq!(lhs, phi.evaluate(&[e(i), e(j), e(k)]).unwrap());
                }
            }
        }
    }

    #[test]
    fn a_v_examples() {
        assert!(a_v(&Vec7::<Q>::zero()).is_zero());
        let a = a_v(&e(0));
        assert_eq!(a.apply(&e(1)), -&e(3));
        for i in 0..7 {
            let v = Vec7::<Q>::from_ints([3, -1, 4, 1, -5, 9, 2]);
            let av = a_v(&v);
            for k in 0..3 {
                let (r, s) = cyclic_pair(i, k);
                assert_eq!(av.at(r, s), &v[i]);
            }
        }
    }

    #[test]
    fn membership_of_simple_elements() {
        let zero = Endo7::<Q>::zero();
        assert!(is_in_g2(&zero));
        assert!(is_in_g2_perp(&zero));
        let a = a_v(&e(0));
        assert!(!is_in_g2(&a));
        assert!(is_in_g2_perp(&a));
        assert!(!is_in_g2(&Endo7::<Q>::identity()));
        assert!(!is_in_g2_perp(&Endo7::<Q>::identity()));
    }

    #[test]
    fn constants() {
        let g = G2Constants::<Q>::new();
        assert_eq!(g.phi.inner(&g.phi).unwrap(), Q::from_int(7));
        assert_eq!(g.star_phi, g.phi.hodge());
        assert!(!g.star_phi.coeffs().iter().all(Zero::is_zero));
    }
}
