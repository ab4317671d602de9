//! Scalar-curvature formulas from several sources, each reduced to its
//! algebraic right-hand side (the divergence term is common to all of them
//! and dropped) and compared against 54‖T₍₁₎‖² − 9‖T₍₂₎‖² − 9‖T₍₃₎‖² + 45‖T₍₄₎‖².

use std::fmt;

use super::{nabla_phi, skew_torsion, tau_forms, xi_norm_sq, TorsionT};
use crate::cayley::{a_v, star_phi};
use crate::decomp::{component_norms, components};
use crate::endo::Endo7;
use crate::exterior::Vec7;
use crate::invariants::{i0, sigma2};
use crate::linalg;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Reference,
    IntrinsicTorsion,
    Invariants,
    Bryant,
    BorHernandezLamoneda,
    FriedrichIvanov,
    /// Friedrich–Ivanov with (dφ,⋆φ)² replaced by (144/49)σ₁(T)².
    FriedrichIvanovQuoted,
}

impl Formula {
    pub const ALL: [Formula; 7] = [
        Formula::Reference,
        Formula::IntrinsicTorsion,
        Formula::Invariants,
        Formula::Bryant,
        Formula::BorHernandezLamoneda,
        Formula::FriedrichIvanov,
        Formula::FriedrichIvanovQuoted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Reference => "reference",
            Formula::IntrinsicTorsion => "intrinsic-torsion",
            Formula::Invariants => "invariants",
            Formula::Bryant => "bryant",
            Formula::BorHernandezLamoneda => "bor-hernandez-lamoneda",
            Formula::FriedrichIvanov => "friedrich-ivanov",
            Formula::FriedrichIvanovQuoted => "friedrich-ivanov-quoted",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Formula::Reference => "54‖T₍₁₎‖² − 9‖T₍₂₎‖² − 9‖T₍₃₎‖² + 45‖T₍₄₎‖²",
            Formula::IntrinsicTorsion => "9‖ξ₍₁₎‖² − (3/2)‖ξ₍₂₎‖² − (3/2)‖ξ₍₃₎‖² + (15/2)‖ξ₍₄₎‖²",
            Formula::Invariants => "−9i₀(T) + 36σ₂(T)",
            Formula::Bryant => "(21/8)τ₀² + 30|τ₁|² − (1/2)|τ₂|² − (1/2)|τ₃|²",
            Formula::BorHernandezLamoneda => {
                "9‖(∇φ̃)₍₁₎‖² − (3/2)‖(∇φ̃)₍₂₎‖² − (3/2)‖(∇φ̃)₍₃₎‖² + (15/2)‖(∇φ̃)₍₄₎‖², φ = 6φ̃"
            }
            Formula::FriedrichIvanov => "(1/18)(dφ,⋆φ)² + 4‖p(T)‖² − (1/2)|𝒯|²",
            Formula::FriedrichIvanovQuoted => "(1/18)(144/49)σ₁(T)² + 4‖p(T)‖² − (1/2)|𝒯|²",
        }
    }

    /// Formulas stated only for torsion without an X2 component.
    /// Stable identifier used in verification reports.
    pub fn check_id(self) -> &'static str {
        match self {
            Formula::Reference => "compare.reference",
            Formula::IntrinsicTorsion => "compare.intrinsic-torsion",
            Formula::Invariants => "compare.invariants",
            Formula::Bryant => "compare.bryant",
            Formula::BorHernandezLamoneda => "compare.bor-hernandez-lamoneda",
            Formula::FriedrichIvanov => "compare.friedrich-ivanov",
            Formula::FriedrichIvanovQuoted => "compare.friedrich-ivanov-quoted",
        }
    }

    pub fn requires_no_x2(self) -> bool {
        matches!(
            self,
            Formula::FriedrichIvanov | Formula::FriedrichIvanovQuoted
        )
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn weighted<S: Scalar>(weights: [(i64, i64); 4], values: [S; 4]) -> S {
    let mut acc = S::zero();
    for ((n, d), v) in weights.iter().zip(values) {
        acc += &(v * S::ratio(*n, *d));
    }
    acc
}

const THIRDS: [(i64, i64); 4] = [(9, 1), (-3, 2), (-3, 2), (15, 2)];

/// The algebraic right-hand side of `formula` evaluated at T.
pub fn formula_value<S: Scalar>(formula: Formula, t: &TorsionT<S>) -> S {
    match formula {
        Formula::Reference => weighted([(54, 1), (-9, 1), (-9, 1), (45, 1)], component_norms(&t.0)),
        Formula::IntrinsicTorsion => {
            let c = components(&t.0);
            weighted(
                THIRDS,
                c.as_array().map(|ck| xi_norm_sq(&TorsionT(ck.clone()))),
            )
        }
        Formula::Invariants => i0(&t.0) * S::from_int(-9) + sigma2(&t.0) * S::from_int(36),
        Formula::Bryant => {
            let tau = tau_forms(t);
            weighted(
                [(21, 8), (30, 1), (-1, 2), (-1, 2)],
                [
                    tau.tau0.clone() * tau.tau0,
                    tau.tau1.norm_sq(),
                    tau.tau2.norm_sq(),
                    tau.tau3.norm_sq(),
                ],
            )
        }
        Formula::BorHernandezLamoneda => {
            let c = components(&t.0);
            let sixth_sq = S::ratio(1, 36);
            weighted(
                THIRDS,
                c.as_array()
                    .map(|ck| nabla_phi(&TorsionT(ck.clone())).tensor_norm_sq() * sixth_sq.clone()),
            )
        }
        Formula::FriedrichIvanov | Formula::FriedrichIvanovQuoted => {
            let first = if formula == Formula::FriedrichIvanov {
                let x = super::d_phi(t).dot(&star_phi());
                x.clone() * x
            } else {
                let s1 = t.0.trace();
                s1.clone() * s1 * S::ratio(144, 49)
            };
            let p = crate::decomp::p_map(&t.0);
            first * S::ratio(1, 18) + p.norm_sq() * S::from_int(4)
                - skew_torsion(t).form.norm_sq() * S::ratio(1, 2)
        }
    }
}

/// Residual of `formula` against the reference, written in the basis
/// (‖T₍₁₎‖², ‖T₍₂₎‖², ‖T₍₃₎‖², ‖T₍₄₎‖²).
#[derive(Clone, Debug, PartialEq)]
pub struct FormulaResidual<S = Q> {
    pub formula: Formula,
    pub coefficients: [S; 4],
    /// formula − reference at the torsion being compared.
    pub residual_at_t: S,
    /// The residual is the linear combination `coefficients` of the
    /// component norms on every probe and at T.
    pub consistent: bool,
}

impl<S: Scalar> FormulaResidual<S> {
    pub fn matches_reference(&self) -> bool {
        self.consistent && self.coefficients.iter().all(|c| c.is_negligible(&S::one()))
    }
}

/// Id, A_{e₀}, a pure X2 element, a pure X3 element and a mixed element.
pub fn probes<S: Scalar>() -> Vec<TorsionT<S>> {
    let mixed = Endo7::from_ints([
        [1, 2, 0, -1, 3, 0, 0],
        [0, -2, 1, 0, 0, 4, 1],
        [2, 0, 3, 1, -1, 0, 0],
        [0, 1, 0, 0, 2, 0, -3],
        [1, 0, 0, 2, 1, -1, 0],
        [0, -1, 2, 0, 0, 5, 1],
        [3, 0, 0, 1, 0, 0, -1],
    ]);
    vec![
        TorsionT(Endo7::identity()),
        TorsionT(a_v(&Vec7::basis(0))),
        TorsionT(components(&Endo7::elementary(0, 1)).c2),
        TorsionT(&Endo7::elementary(0, 1) + &Endo7::elementary(1, 0)),
        TorsionT(mixed),
    ]
}

fn residual_value<S: Scalar>(formula: Formula, t: &TorsionT<S>) -> S {
    formula_value(formula, t) - formula_value(Formula::Reference, t)
}

fn predicted<S: Scalar>(coefficients: &[S; 4], t: &TorsionT<S>) -> S {
    let mut acc = S::zero();
    for (c, n) in coefficients.iter().zip(component_norms(&t.0)) {
        acc.add_product(c, &n);
    }
    acc
}

/// Pins the four residual coefficients of `formula` from the probes.
/// Returns the coefficients and whether all five probes agree with them.
pub fn probe_coefficients<S: Scalar>(formula: Formula) -> ([S; 4], bool) {
    let probes = probes::<S>();
    let norms: Vec<[S; 4]> = probes.iter().map(|p| component_norms(&p.0)).collect();
    let values: Vec<S> = probes.iter().map(|p| residual_value(formula, p)).collect();
    let columns: Vec<Vec<S>> = (0..4)
        .map(|k| norms.iter().map(|n| n[k].clone()).collect())
        .collect();
    let c = linalg::least_squares(&columns, &values).expect("probe norms have full rank");
    let coefficients: [S; 4] = std::array::from_fn(|k| c[k].clone());
    let consistent = probes.iter().zip(&values).all(|(p, v)| {
        let scale = if v.abs() > S::one() {
            v.abs()
        } else {
            S::one()
        };
        (predicted(&coefficients, p) - v.clone()).is_negligible(&scale)
    });
    (coefficients, consistent)
}

/// Residual of one formula at T given pre-computed probe coefficients.
pub fn residual_at<S: Scalar>(
    formula: Formula,
    coefficients: ([S; 4], bool),
    t: &TorsionT<S>,
) -> FormulaResidual<S> {
    let (coefficients, probes_ok) = coefficients;
    let residual_at_t = residual_value(formula, t);
    let scale = if residual_at_t.abs() > S::one() {
        residual_at_t.abs()
    } else {
        S::one()
    };
    let at_t = (predicted(&coefficients, t) - residual_at_t.clone()).is_negligible(&scale);
    FormulaResidual {
        formula,
        coefficients,
        residual_at_t,
        consistent: probes_ok && at_t,
    }
}

/// Every formula's residual against the reference at T.
pub fn compare_formulas<S: Scalar>(t: &TorsionT<S>) -> Vec<FormulaResidual<S>> {
    Formula::ALL
        .iter()
        .map(|&f| residual_at(f, probe_coefficients(f), t))
        .collect()
}

/// Coefficients of the reference in the component-norm basis, read off the
/// four pure probes.
pub fn reference_coefficients<S: Scalar>() -> [S; 4] {
    let probes = probes::<S>();
    // probe index for X1, X2, X3, X4
    let which = [0, 2, 3, 1];
    std::array::from_fn(|k| {
        let t = &probes[which[k]];
        formula_value(Formula::Reference, t) / component_norms(&t.0)[k].clone()
    })
}

/// The reference carries (54, −9, −9, 45); every other formula's residual
/// coefficients should vanish, consistently across the probes.
pub fn coefficient_checks<S: Scalar>() -> VerificationRecord<S> {
    let mut rec = VerificationRecord::new();
    let expected = [54, -9, -9, 45].map(S::from_int);
    rec.push(IdentityCheck::from_slices(
        Formula::Reference.check_id(),
        Formula::Reference.statement(),
        &reference_coefficients(),
        &expected,
    ));
    for f in Formula::ALL.into_iter().skip(1) {
        let (c, ok) = probe_coefficients::<S>(f);
        let mut lhs = c.to_vec();
        lhs.push(if ok { S::zero() } else { S::one() });
        rec.push(IdentityCheck::from_slices(
            f.check_id(),
            f.statement(),
            &lhs,
            &vec![S::zero(); 5],
        ));
    }
    rec
}

/// Each formula against the reference at T (with the X2 part removed for
/// the formulas that need it).
pub fn sample_comparison_checks<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let without_x2 = TorsionT(&t.0 - &components(&t.0).c2);
    let mut rec = VerificationRecord::new();
    for f in Formula::ALL.into_iter().skip(1) {
        let at = if f.requires_no_x2() { &without_x2 } else { t };
        rec.push(IdentityCheck::scalar(
            f.check_id(),
            f.statement(),
            formula_value(f, at),
            formula_value(Formula::Reference, at),
        ));
    }
    rec
}
