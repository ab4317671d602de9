//! The scalar invariants σ₁, σ₂, i₀, i₁, i₂ of an endomorphism and the
//! relations tying them to the component norms.
//!
//! Here a(e_i) is the i-th column of `a`. The i-invariants are evaluated
//! from their defining double sums of cross products.

use crate::cayley::cross;
use crate::decomp::component_norms;
use crate::endo::Endo7;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet<S = Q> {
    pub sigma1: S,
    pub sigma2: S,
    pub i0: S,
    pub i1: S,
    pub i2: S,
}

impl<S: Scalar> InvariantSet<S> {
    pub fn of(a: &Endo7<S>) -> Self {
        InvariantSet {
            sigma1: sigma1(a),
            sigma2: sigma2(a),
            i0: i0(a),
            i1: i1(a),
            i2: i2(a),
        }
    }
}

pub fn sigma1<S: Scalar>(a: &Endo7<S>) -> S {
    a.trace()
}

/// σ₂(a) = ½ Σ_{i≠j} (a_ii a_jj − a_ij a_ji).
pub fn sigma2<S: Scalar>(a: &Endo7<S>) -> S {
    let mut acc = S::zero();
    for i in 0..7 {
        for j in 0..7 {
            if i != j {
                acc.add_product(a.at(i, i), a.at(j, j));
                acc -= &a.at(i, j).mul_ref(a.at(j, i));
            }
        }
    }
    acc * S::ratio(1, 2)
}

fn columns<S: Scalar>(a: &Endo7<S>) -> Vec<crate::exterior::Vec7<S>> {
    (0..7).map(|j| a.column(j)).collect()
}

fn basis<S: Scalar>() -> Vec<crate::exterior::Vec7<S>> {
    (0..7).map(crate::exterior::Vec7::basis).collect()
}

/// i₀(a) = Σ_{i,j} ⟨a(e_i) × a(e_j), e_i × e_j⟩.
pub fn i0<S: Scalar>(a: &Endo7<S>) -> S {
    let (cols, e) = (columns(a), basis::<S>());
    let mut acc = S::zero();
    for i in 0..7 {
        for j in 0..7 {
            acc += &cross(&cols[i], &cols[j]).dot(&cross(&e[i], &e[j]));
        }
    }
    acc
}

/// i₁(a) = Σ_{i,j} ⟨a(e_i) × e_i, a(e_j) × e_j⟩.
pub fn i1<S: Scalar>(a: &Endo7<S>) -> S {
    let (cols, e) = (columns(a), basis::<S>());
    let w: Vec<_> = (0..7).map(|i| cross(&cols[i], &e[i])).collect();
    let mut acc = S::zero();
    for u in &w {
        for v in &w {
            acc += &u.dot(v);
        }
    }
    acc
}

/// i₂(a) = Σ_{i,j} ⟨a(e_i) × e_j, a(e_j) × e_i⟩.
pub fn i2<S: Scalar>(a: &Endo7<S>) -> S {
    let (cols, e) = (columns(a), basis::<S>());
    let mut acc = S::zero();
    for i in 0..7 {
        for j in 0..7 {
            acc += &cross(&cols[i], &e[j]).dot(&cross(&cols[j], &e[i]));
        }
    }
    acc
}

/// Σ_{i,j} ‖e_i × a(e_j)‖².
pub fn cross_norm_sum<S: Scalar>(a: &Endo7<S>) -> S {
    let (cols, e) = (columns(a), basis::<S>());
    let mut acc = S::zero();
    for ei in &e {
        for c in &cols {
            acc += &cross(ei, c).norm_sq();
        }
    }
    acc
}

fn lin<S: Scalar>(terms: &[(i64, i64, &S)]) -> S {
    let mut acc = S::zero();
    for &(n, d, x) in terms {
        acc += &x.mul_ref(&S::ratio(n, d));
    }
    acc
}

/// Every relation among σ's, i's and component norms, with the 𝔛₁ norm
/// taken as σ₁²/7 and the 𝔛₃ norm line in its valid form
/// 2‖a₍₃₎‖² = (12/7)σ₁² − i₀ + i₂. All residuals vanish for every `a`.
pub fn invariant_relations<S: Scalar>(a: &Endo7<S>) -> VerificationRecord<S> {
    let inv = InvariantSet::of(a);
    let [n1, n2, n3, n4] = component_norms(a);
    let norm = a.norm_sq();
    let s1sq = inv.sigma1.clone() * inv.sigma1.clone();
    let (s2, i0, i1, i2) = (&inv.sigma2, &inv.i0, &inv.i1, &inv.i2);
    let mut rec = VerificationRecord::new();
    let mut add =
        |id, statement, lhs, rhs| rec.push(IdentityCheck::scalar(id, statement, lhs, rhs));

    add(
        "sigma.trace-square",
        "σ₁(a)² = 7‖a₍₁₎‖²",
        s1sq.clone(),
        lin(&[(7, 1, &n1)]),
    );
    add(
        "sigma.sigma2-norms",
        "2σ₂(a) = 6‖a₍₁₎‖² + ‖a₍₂₎‖² − ‖a₍₃₎‖² + ‖a₍₄₎‖²",
        lin(&[(2, 1, s2)]),
        lin(&[(6, 1, &n1), (1, 1, &n2), (-1, 1, &n3), (1, 1, &n4)]),
    );
    add(
        "i.i0-norms",
        "i₀(a) = 6‖a₍₁₎‖² + 3‖a₍₂₎‖² − ‖a₍₃₎‖² − 3‖a₍₄₎‖²",
        i0.clone(),
        lin(&[(6, 1, &n1), (3, 1, &n2), (-1, 1, &n3), (-3, 1, &n4)]),
    );
    add(
        "i.i1-norms",
        "i₁(a) = 6‖a₍₄₎‖²",
        i1.clone(),
        lin(&[(6, 1, &n4)]),
    );
    add(
        "i.i2-norms",
        "i₂(a) = −6‖a₍₁₎‖² + 3‖a₍₂₎‖² + ‖a₍₃₎‖² − 3‖a₍₄₎‖²",
        i2.clone(),
        lin(&[(-6, 1, &n1), (3, 1, &n2), (1, 1, &n3), (-3, 1, &n4)]),
    );
    add(
        "i.cross-norm-sum",
        "6‖a‖² = Σ‖e_i × a(e_j)‖²",
        lin(&[(6, 1, &norm)]),
        cross_norm_sum(a),
    );
    add(
        "i.i1-from-i0",
        "i₁(a) = −i₀(a) + ‖a‖² + 4σ₂(a) − σ₁(a)²",
        i1.clone(),
        lin(&[(-1, 1, i0), (1, 1, &norm), (4, 1, s2), (-1, 1, &s1sq)]),
    );
    add(
        "i.i2-from-i0",
        "i₂(a) = i₀(a) + ‖a‖² − 2σ₂(a) − σ₁(a)²",
        i2.clone(),
        lin(&[(1, 1, i0), (1, 1, &norm), (-2, 1, s2), (-1, 1, &s1sq)]),
    );
    add(
        "i.difference",
        "i₁(a) − i₂(a) = −2i₀(a) + 6σ₂(a)",
        i1.clone() - i2.clone(),
        lin(&[(-2, 1, i0), (6, 1, s2)]),
    );
    add(
        "norms.x1",
        "‖a₍₁₎‖² = σ₁(a)²/7",
        n1.clone(),
        lin(&[(1, 7, &s1sq)]),
    );
    add(
        "norms.x2",
        "6‖a₍₂₎‖² = i₀ + i₁ + i₂",
        lin(&[(6, 1, &n2)]),
        lin(&[(1, 1, i0), (1, 1, i1), (1, 1, i2)]),
    );
    add(
        "norms.x2-alt",
        "6‖a₍₂₎‖² = −6σ₂ + 3i₀ + 2i₁",
        lin(&[(6, 1, &n2)]),
        lin(&[(-6, 1, s2), (3, 1, i0), (2, 1, i1)]),
    );
    add(
        "norms.x3",
        "2‖a₍₃₎‖² = (12/7)σ₁² − i₀ + i₂",
        lin(&[(2, 1, &n3)]),
        lin(&[(12, 7, &s1sq), (-1, 1, i0), (1, 1, i2)]),
    );
    add(
        "norms.x3-alt",
        "2‖a₍₃₎‖² = (12/7)σ₁² − 6σ₂ + i₀ + i₁",
        lin(&[(2, 1, &n3)]),
        lin(&[(12, 7, &s1sq), (-6, 1, s2), (1, 1, i0), (1, 1, i1)]),
    );
    add("norms.x4", "6‖a₍₄₎‖² = i₁", lin(&[(6, 1, &n4)]), i1.clone());
    rec
}

/// The norm-from-invariant lines in their commonly quoted forms, which do
/// not hold in general: ‖a₍₁₎‖² = σ₁² and the 𝔛₃ line with a factor 6
/// (even after dividing σ₁² by 7). Evaluated for reporting only.
pub fn quoted_norm_relations<S: Scalar>(a: &Endo7<S>) -> VerificationRecord<S> {
    let inv = InvariantSet::of(a);
    let [n1, _, n3, _] = component_norms(a);
    let s1sq = inv.sigma1.clone() * inv.sigma1.clone();
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::scalar(
        "quoted.x1",
        "‖a₍₁₎‖² = σ₁(a)²",
        n1,
        s1sq.clone(),
    ));
    rec.push(IdentityCheck::scalar(
        "quoted.x3",
        "6‖a₍₃₎‖² = (12/7)σ₁² − i₀ + i₂",
        lin(&[(6, 1, &n3)]),
        lin(&[(12, 7, &s1sq), (-1, 1, &inv.i0), (1, 1, &inv.i2)]),
    ));
    rec.push(IdentityCheck::scalar(
        "quoted.x3-alt",
        "6‖a₍₃₎‖² = (12/7)σ₁² − 6σ₂ + i₀ + i₁",
        lin(&[(6, 1, &n3)]),
        lin(&[
            (12, 7, &s1sq),
            (-6, 1, &inv.sigma2),
            (1, 1, &inv.i0),
            (1, 1, &inv.i1),
        ]),
    ));
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::a_v;
    use crate::exterior::Vec7;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn identity_values() {
        let id = Endo7::<Q>::identity();
        let inv = InvariantSet::of(&id);
        assert_eq!((inv.sigma1, inv.sigma2), (q(7), q(21)));
        assert_eq!((inv.i0, inv.i1), (q(42), q(0)));
        assert!(invariant_relations(&id).holds());
    }

    #[test]
    fn unit_a_v_values() {
        let av = a_v(&Vec7::<Q>::basis(4));
        assert_eq!(sigma2(&av), q(3));
        assert_eq!(i1(&av), q(36));
        assert!(invariant_relations(&av).holds());
    }

    #[test]
    fn quoted_lines_fail_on_traceless_symmetric() {
        let mut a = Endo7::<Q>::zero();
        a.set(0, 1, q(1));
        a.set(1, 0, q(1));
        let rec = quoted_norm_relations(&a);
        assert!(rec.get("quoted.x1").unwrap().holds());
        assert!(!rec.get("quoted.x3").unwrap().holds());
        assert!(invariant_relations(&a).holds());
    }
}
