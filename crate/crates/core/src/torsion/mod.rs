//! Pointwise torsion of a G₂-structure.
//!
//! The intrinsic torsion is encoded by an endomorphism T with
//! ξ_X Y = Y × T(X). From T we build ∇φ, the exterior derivatives dφ and
//! d⋆φ, the τ-forms and the skew torsion, and we recover T back from the
//! pair (dφ, d⋆φ).

mod compare;

pub use compare::{
    coefficient_checks, compare_formulas, formula_value, probe_coefficients, probes,
    reference_coefficients, residual_at, sample_comparison_checks, Formula, FormulaResidual,
};

use thiserror::Error;

use crate::cayley::{a_v, cross, cyclic_pair, phi, star_phi};
use crate::decomp::{component_norms, components, p_map, Module};
use crate::endo::Endo7;
use crate::exterior::{Form, Vec7};
use crate::g2maps::{map_k, map_m, map_table};
use crate::linalg;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

/// T with T_ij = ⟨e_i, T(e_j)⟩.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionT<S = Q>(pub Endo7<S>);

impl<S: Scalar> TorsionT<S> {
    pub fn endo(&self) -> &Endo7<S> {
        &self.0
    }

    pub fn into_endo(self) -> Endo7<S> {
        self.0
    }
}

impl<S> From<Endo7<S>> for TorsionT<S> {
    fn from(a: Endo7<S>) -> Self {
        TorsionT(a)
    }
}

/// ξ_x y = y × T(x).
pub fn xi_apply<S: Scalar>(t: &TorsionT<S>, x: &Vec7<S>, y: &Vec7<S>) -> Vec7<S> {
    cross(y, &t.0.apply(x))
}

/// Σ_i ξ_{e_i} e_i.
pub fn sum_xi_diagonal<S: Scalar>(t: &TorsionT<S>) -> Vec7<S> {
    let mut acc = Vec7::zero();
    for i in 0..7 {
        let e = Vec7::basis(i);
        acc = &acc + &xi_apply(t, &e, &e);
    }
    acc
}

/// ‖ξ‖² = Σ_{i,j} ‖ξ_{e_i} e_j‖².
pub fn xi_norm_sq<S: Scalar>(t: &TorsionT<S>) -> S {
    let mut acc = S::zero();
    for i in 0..7 {
        for j in 0..7 {
            acc += &xi_apply(t, &Vec7::basis(i), &Vec7::basis(j)).norm_sq();
        }
    }
    acc
}

/// An element of T*⊗Λ³ stored by slots: `slots[i]` = e_i⌟∇φ.
#[derive(Clone, Debug, PartialEq)]
pub struct NablaPhi<S = Q> {
    pub slots: Vec<Form<S>>,
}

impl<S: Scalar> NablaPhi<S> {
    /// ⟨α, α⟩ = Σ_i 3!·(α_i, α_i).
    pub fn tensor_norm_sq(&self) -> S {
        let mut acc = S::zero();
        for f in &self.slots {
            acc += &f.norm_sq();
        }
        acc * S::from_int(6)
    }

    pub fn scaled(&self, s: &S) -> Self {
        NablaPhi {
            slots: self.slots.iter().map(|f| f.scaled(s)).collect(),
        }
    }
}

/// ∇φ = 3 Σ T_ji e_i*⊗(e_j⌟⋆φ).
pub fn nabla_phi<S: Scalar>(t: &TorsionT<S>) -> NablaPhi<S> {
    let table = map_table();
    let three = S::from_int(3);
    let slots = (0..7)
        .map(|i| {
            let mut f = Form::zero(3);
            for (j, block) in table.star_phi_contractions.iter().enumerate() {
                f.add_scaled_int(&t.0.at(j, i).mul_ref(&three), block);
            }
            f
        })
        .collect();
    NablaPhi { slots }
}

/// Inverts [`nabla_phi`] through r(α)(X, Y) = ¼(X⌟α, Y⌟⋆φ) and
/// T_ij = ⅓ r(α)(e_j, e_i).
pub fn t_from_nabla_phi<S: Scalar>(np: &NablaPhi<S>) -> TorsionT<S> {
    let table = map_table();
    let twelfth = S::ratio(1, 12);
    TorsionT(Endo7::from_fn(|i, j| {
        np.slots[j].dot_int(&table.star_phi_contractions[i]) * twelfth.clone()
    }))
}

/// dφ as the explicit five-block sum over ℤ₇ in the entries of T.
pub fn d_phi<S: Scalar>(t: &TorsionT<S>) -> Form<S> {
    let mut out = Form::zero(4);
    let three = S::from_int(3);
    for i in 0..7 {
        let e = |a: usize, b: usize| t.0.at(i + a, i + b).clone();
        let m = |idx: [usize; 4]| idx.map(|x| (i + x) % 7);
        let blocks = [
            (-(e(2, 2) + e(4, 4) + e(5, 5) + e(6, 6)), m([2, 4, 5, 6])),
            (e(3, 1) + e(5, 4) + e(6, 2), m([0, 1, 2, 4])),
            (-e(1, 3) - e(4, 5) + e(6, 2), m([0, 2, 3, 5])),
            (-e(1, 3) + e(5, 4) - e(2, 6), m([0, 3, 4, 6])),
            (e(3, 1) - e(4, 5) - e(2, 6), m([0, 5, 6, 1])),
        ];
        for (c, idx) in blocks {
            out.add_monomial(&idx, &(c * three.clone()));
        }
    }
    out
}

/// d⋆φ = 3 Σ_i Σ_(r,s) (T_rs − T_sr − p(T)_i) ⋆(e_r*∧e_s*) over the three
/// cyclic pairs of each i.
pub fn d_star_phi<S: Scalar>(t: &TorsionT<S>) -> Form<S> {
    let table = map_table();
    let p = p_map(&t.0);
    let mut out = Form::zero(5);
    let three = S::from_int(3);
    for i in 0..7 {
        for k in 0..3 {
            let (r, s) = cyclic_pair(i, k);
            let c = (t.0.at(r, s).clone() - t.0.at(s, r).clone() - p[i].clone()) * three.clone();
            out.add_scaled_int(&c, &table.star_pairs[7 * r + s]);
        }
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TorsionError<S: std::fmt::Debug = Q> {
    #[error("{which} must have degree {expected}, found {found}")]
    Degree {
        which: &'static str,
        expected: usize,
        found: usize,
    },
    #[error(
        "forms are not the derivatives of a common torsion (largest residual {max_residual:e})"
    )]
    Inconsistent {
        recovered: Box<TorsionT<S>>,
        d_phi_residual: Form<S>,
        d_star_phi_residual: Form<S>,
        max_residual: f64,
    },
}

fn check_degree<S: Scalar>(
    which: &'static str,
    f: &Form<S>,
    expected: usize,
) -> Result<(), TorsionError<S>> {
    if f.degree() == expected {
        Ok(())
    } else {
        Err(TorsionError::Degree {
            which,
            expected,
            found: f.degree(),
        })
    }
}

/// Orthogonal projection of `target` onto the span of `spanning`.
fn project<S: Scalar>(target: &Form<S>, spanning: &[Form<S>]) -> Form<S> {
    let vectors: Vec<Vec<S>> = spanning.iter().map(|f| f.coeffs().to_vec()).collect();
    let coeffs =
        linalg::least_squares(&vectors, target.coeffs()).expect("spanning forms are independent");
    let mut out = Form::zero(target.degree());
    for (c, f) in coeffs.iter().zip(spanning) {
        out.add_scaled(c, f);
    }
    out
}

/// ω = part1 + part7 + part27 with part1 ∈ R⋆φ, part7 ∈ Λ¹∧φ.
#[derive(Clone, Debug, PartialEq)]
pub struct Split4<S = Q> {
    pub part1: Form<S>,
    pub part7: Form<S>,
    pub part27: Form<S>,
}

pub fn split_4form<S: Scalar>(omega: &Form<S>) -> Result<Split4<S>, TorsionError<S>> {
    check_degree("4-form", omega, 4)?;
    let sp = star_phi::<S>();
    let part1 = sp.scaled(&(omega.dot(&sp) * S::ratio(1, 7)));
    let ph = phi::<S>();
    let spanning: Vec<Form<S>> = (0..7).map(|i| Form::monomial(&[i]).wedge(&ph)).collect();
    let part7 = project(omega, &spanning);
    let part27 = &(omega - &part1) - &part7;
    Ok(Split4 {
        part1,
        part7,
        part27,
    })
}

/// ω = part7 + part14 with part7 ∈ Λ¹∧⋆φ.
#[derive(Clone, Debug, PartialEq)]
pub struct Split5<S = Q> {
    pub part7: Form<S>,
    pub part14: Form<S>,
}

pub fn split_5form<S: Scalar>(omega: &Form<S>) -> Result<Split5<S>, TorsionError<S>> {
    check_degree("5-form", omega, 5)?;
    let sp = star_phi::<S>();
    let spanning: Vec<Form<S>> = (0..7).map(|i| Form::monomial(&[i]).wedge(&sp)).collect();
    let part7 = project(omega, &spanning);
    let part14 = omega - &part7;
    Ok(Split5 { part7, part14 })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TauForms<S = Q> {
    pub tau0: S,
    pub tau1: Form<S>,
    pub tau2: Form<S>,
    pub tau3: Form<S>,
}

/// τ₀ = (12/7)σ₁(T), τ₁ = −½p(T)♭, τ₂ = 6T₍₂₎♭ and τ₃ = ⋆(dφ)₍₂₇₎.
pub fn tau_forms<S: Scalar>(t: &TorsionT<S>) -> TauForms<S> {
    let tau0 = t.0.trace() * S::ratio(12, 7);
    let tau1 = p_map(&t.0).flat().into_form().scaled(&S::ratio(-1, 2));
    let tau2 = components(&t.0).c2.flat_2form().scaled(&S::from_int(6));
    let split = split_4form(&d_phi(t)).expect("dφ is a 4-form");
    TauForms {
        tau0,
        tau1,
        tau2,
        tau3: split.part27.hodge(),
    }
}

/// τ₂ read off a 5-form as ⋆ of its Λ⁵₁₄ part.
pub fn tau2_from_forms<S: Scalar>(d_star_phi: &Form<S>) -> Result<Form<S>, TorsionError<S>> {
    Ok(split_5form(d_star_phi)?.part14.hodge())
}

/// pd⋆φ = ⋆(⋆dφ∧φ).
pub fn pd_star_phi<S: Scalar>(d_phi: &Form<S>) -> Result<Form<S>, TorsionError<S>> {
    check_degree("dφ", d_phi, 4)?;
    Ok(d_phi.hodge().wedge(&phi()).hodge())
}

/// pd⋆φ = −⋆(⋆d⋆φ∧⋆φ).
pub fn pd_star_phi_from_codifferential<S: Scalar>(
    d_star_phi: &Form<S>,
) -> Result<Form<S>, TorsionError<S>> {
    check_degree("d⋆φ", d_star_phi, 5)?;
    Ok(-&d_star_phi.hodge().wedge(&star_phi()).hodge())
}

fn one_form_sharp<S: Scalar>(f: &Form<S>) -> Vec7<S> {
    Vec7(std::array::from_fn(|i| f.coeffs()[i].clone()))
}

/// The four components of T reconstructed from (dφ, d⋆φ), without the
/// consistency check.
pub fn recover_components<S: Scalar>(
    d_phi: &Form<S>,
    d_star_phi: &Form<S>,
) -> Result<[Endo7<S>; 4], TorsionError<S>> {
    check_degree("dφ", d_phi, 4)?;
    check_degree("d⋆φ", d_star_phi, 5)?;
    let table = map_table();
    let sp = star_phi::<S>();
    let dphi_sp = d_phi.dot(&sp);

    let t1 = Endo7::identity().scaled(&(dphi_sp.clone() * S::ratio(1, 84)));

    let pd = pd_star_phi(d_phi)?;
    let t4 = a_v(&one_form_sharp(&pd)).scaled(&S::ratio(1, 36));

    // diagonal: (1/6)(dφ, e_i*∧(e_i⌟⋆φ) − (4/7)⋆φ); off-diagonal over unordered pairs
    let k = |i: usize, j: usize| d_phi.dot_int(&table.k_blocks[7 * i + j]);
    let mut t3 = Endo7::zero();
    for i in 0..7 {
        t3.set(
            i,
            i,
            (k(i, i) - dphi_sp.clone() * S::ratio(4, 7)) * S::ratio(1, 6),
        );
        for j in (i + 1)..7 {
            let v = (k(i, j) + k(j, i)) * S::ratio(1, 12);
            t3.set(j, i, v.clone());
            t3.set(i, j, v);
        }
    }

    let mut x = d_star_phi.clone();
    x.add_scaled(&S::ratio(1, 3), &pd.wedge(&sp));
    let mut t2 = Endo7::<S>::zero();
    for i in 0..7 {
        for j in 0..7 {
            if i == j {
                continue;
            }
            let c = x.dot_int(&table.star_pairs[7 * i + j]) * S::ratio(1, 12);
            let cur = t2.at(i, j).clone() + c.clone();
            t2.set(i, j, cur);
            let cur = t2.at(j, i).clone() - c;
            t2.set(j, i, cur);
        }
    }
    Ok([t1, t2, t3, t4])
}

/// Recovers T from (dφ, d⋆φ) and confirms the pair is the image of it.
pub fn recover_t<S: Scalar>(
    d_phi_in: &Form<S>,
    d_star_phi_in: &Form<S>,
) -> Result<TorsionT<S>, TorsionError<S>> {
    let [t1, t2, t3, t4] = recover_components(d_phi_in, d_star_phi_in)?;
    let t = TorsionT(&(&(&t1 + &t2) + &t3) + &t4);
    let r1 = &d_phi(&t) - d_phi_in;
    let r2 = &d_star_phi(&t) - d_star_phi_in;
    let scale = d_phi_in
        .coeffs()
        .iter()
        .chain(d_star_phi_in.coeffs())
        .fold(S::one(), |m, c| if c.abs() > m { c.abs() } else { m });
    let ok = r1
        .coeffs()
        .iter()
        .chain(r2.coeffs())
        .all(|c| c.is_negligible(&scale));
    if ok {
        return Ok(t);
    }
    let max_residual = r1
        .coeffs()
        .iter()
        .chain(r2.coeffs())
        .map(|c| c.to_f64().abs())
        .fold(0.0, f64::max);
    Err(TorsionError::Inconsistent {
        recovered: Box::new(t),
        d_phi_residual: r1,
        d_star_phi_residual: r2,
        max_residual,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkewTorsion<S = Q> {
    pub form: Form<S>,
    /// T has a nonzero X2 component, so no connection with skew torsion
    /// exists and `form` is only the formal expression.
    pub x2_present: bool,
}

/// 𝒯 = −(1/6)(dφ, ⋆φ)φ + ⋆dφ + 2⋆(p(T)♭∧φ).
pub fn skew_torsion<S: Scalar>(t: &TorsionT<S>) -> SkewTorsion<S> {
    let dphi = d_phi(t);
    let ph = phi::<S>();
    let mut form = dphi.hodge();
    form.add_scaled(&(dphi.dot(&star_phi()) * S::ratio(-1, 6)), &ph);
    let pw = p_map(&t.0).flat().as_form().wedge(&ph).hodge();
    form.add_scaled(&S::from_int(2), &pw);
    let norm_t = t.0.norm_sq();
    let scale = if norm_t > S::one() { norm_t } else { S::one() };
    let x2_present = !component_norms(&t.0)[1].is_negligible(&scale);
    SkewTorsion { form, x2_present }
}

/// The modules carrying a nonzero component of T.
pub fn fg_class<S: Scalar>(t: &TorsionT<S>) -> Vec<Module> {
    let norm_t = t.0.norm_sq();
    let scale = if norm_t > S::one() { norm_t } else { S::one() };
    let norms = component_norms(&t.0);
    Module::ALL
        .iter()
        .copied()
        .filter(|m| !norms[m.index()].is_negligible(&scale))
        .collect()
}

/// ‖ξ‖², ∇φ and both round trips.
pub fn torsion_model_checks<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let mut rec = VerificationRecord::new();
    let p = p_map(&t.0);
    let minus_p = -&p;
    let dphi = d_phi(t);
    let dsphi = d_star_phi(t);
    let pd = pd_star_phi(&dphi).expect("4-form");
    let pd_alt = pd_star_phi_from_codifferential(&dsphi).expect("5-form");
    let norm = t.0.norm_sq();

    rec.push(IdentityCheck::vector(
        "torsion.xi-trace",
        "Σ ξ_{e_i} e_i = −p(T)",
        &sum_xi_diagonal(t),
        &minus_p,
    ));
    rec.push(IdentityCheck::vector(
        "torsion.pd-star-phi",
        "−p(T) = −(1/6)(pd⋆φ)♯ with pd⋆φ = ⋆(⋆dφ∧φ)",
        &minus_p,
        &one_form_sharp(&pd).scaled(&S::ratio(-1, 6)),
    ));
    rec.push(IdentityCheck::form(
        "torsion.pd-two-routes",
        "⋆(⋆dφ∧φ) = −⋆(⋆d⋆φ∧⋆φ)",
        &pd,
        &pd_alt,
    ));
    rec.push(IdentityCheck::scalar(
        "torsion.xi-norm",
        "‖ξ‖² = 6‖T‖²",
        xi_norm_sq(t),
        norm.clone() * S::from_int(6),
    ));
    let np = nabla_phi(t);
    rec.push(IdentityCheck::scalar(
        "torsion.nabla-norm",
        "⟨∇φ, ∇φ⟩ = 216‖T‖²",
        np.tensor_norm_sq(),
        norm * S::from_int(216),
    ));
    rec.push(IdentityCheck::endo(
        "torsion.nabla-round-trip",
        "T → ∇φ → T",
        &t_from_nabla_phi(&np).0,
        &t.0,
    ));
    let recovered = match recover_components(&dphi, &dsphi) {
        Ok([a, b, c, d]) => &(&(&a + &b) + &c) + &d,
        Err(_) => Endo7::zero(),
    };
    rec.push(IdentityCheck::endo(
        "torsion.derivative-round-trip",
        "T → (dφ, d⋆φ) → T",
        &recovered,
        &t.0,
    ));
    rec
}

/// τ norms, reconstruction of dφ and d⋆φ, and the τ₂ cross-check.
pub fn tau_checks<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let mut rec = VerificationRecord::new();
    let tau = tau_forms(t);
    let [n1, n2, n3, n4] = component_norms(&t.0);
    let (ph, sp) = (phi::<S>(), star_phi::<S>());
    let dphi = d_phi(t);
    let dsphi = d_star_phi(t);

    rec.push(IdentityCheck::scalar(
        "tau.tau0-norm",
        "τ₀² = (144/7)‖T₍₁₎‖²",
        tau.tau0.clone() * tau.tau0.clone(),
        n1 * S::ratio(144, 7),
    ));
    rec.push(IdentityCheck::scalar(
        "tau.tau1-norm",
        "|τ₁|² = (3/2)‖T₍₄₎‖²",
        tau.tau1.norm_sq(),
        n4 * S::ratio(3, 2),
    ));
    rec.push(IdentityCheck::scalar(
        "tau.tau2-norm",
        "|τ₂|² = 18‖T₍₂₎‖²",
        tau.tau2.norm_sq(),
        n2 * S::from_int(18),
    ));
    rec.push(IdentityCheck::scalar(
        "tau.tau3-norm",
        "|τ₃|² = 18‖T₍₃₎‖²",
        tau.tau3.norm_sq(),
        n3 * S::from_int(18),
    ));
    let from_forms = tau2_from_forms(&dsphi).expect("5-form");
    rec.push(IdentityCheck::form(
        "tau.tau2-flat",
        "⋆(d⋆φ)₍₁₄₎ = τ₂ = 6T₍₂₎♭",
        &from_forms,
        &tau.tau2,
    ));

    let mut rebuilt = sp.scaled(&tau.tau0);
    rebuilt.add_scaled(&S::from_int(3), &tau.tau1.wedge(&ph));
    rebuilt = &rebuilt + &tau.tau3.hodge();
    rec.push(IdentityCheck::form(
        "tau.d-phi",
        "dφ = τ₀⋆φ + 3τ₁∧φ + ⋆τ₃",
        &dphi,
        &rebuilt,
    ));
    let mut rebuilt = tau.tau1.wedge(&sp).scaled(&S::from_int(4));
    rebuilt = &rebuilt + &tau.tau2.wedge(&ph);
    rec.push(IdentityCheck::form(
        "tau.d-star-phi",
        "d⋆φ = 4τ₁∧⋆φ + τ₂∧φ",
        &dsphi,
        &rebuilt,
    ));

    rec.push(IdentityCheck::scalar(
        "tau.tau3-traceless",
        "(τ₃, φ) = 0",
        tau.tau3.dot(&ph),
        S::zero(),
    ));
    let tau2_endo = Endo7::from_2form(&tau.tau2);
    let sums = crate::cayley::cyclic_sums(&tau2_endo);
    rec.push(IdentityCheck::from_slices(
        "tau.tau2-in-g2",
        "τ₂ ∈ Λ²₁₄",
        &sums,
        &vec![S::zero(); 7],
    ));

    let p_flat = p_map(&t.0).flat().into_form();
    let split5 = split_5form(&dsphi).expect("5-form");
    rec.push(IdentityCheck::form(
        "tau.d-star-phi-7",
        "(d⋆φ)₍₄₎ = −2p(T)♭∧⋆φ",
        &split5.part7,
        &p_flat.wedge(&sp).scaled(&S::from_int(-2)),
    ));
    let split4 = split_4form(&dphi).expect("4-form");
    rec.push(IdentityCheck::form(
        "tau.d-phi-7",
        "(dφ)₍₄₎ = −(3/2)p(T)♭∧φ",
        &split4.part7,
        &p_flat.wedge(&ph).scaled(&S::ratio(-3, 2)),
    ));
    rec
}

/// |𝒯|² and 6|𝒯|² = ⟨𝒯, 𝒯⟩; meaningful when T has no X2 part.
pub fn skew_torsion_checks<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let sk = skew_torsion(t);
    let [n1, _, n3, n4] = component_norms(&t.0);
    let norm = sk.form.norm_sq();
    let mut rec = VerificationRecord::new();
    let rhs = n1 * S::from_int(4) + n3 * S::from_int(18) + n4 * S::from_int(6);
    rec.push(IdentityCheck::scalar(
        "skew.norm",
        "|𝒯|² = 4‖T₍₁₎‖² + 18‖T₍₃₎‖² + 6‖T₍₄₎‖²",
        norm.clone(),
        rhs,
    ));
    rec.push(IdentityCheck::scalar(
        "skew.tensor-norm",
        "6|𝒯|² = ⟨𝒯, 𝒯⟩",
        norm * S::from_int(6),
        sk.form.tensor_inner(&sk.form).expect("same degree"),
    ));
    rec
}

/// How dφ and d⋆φ split along 𝗄 and 𝗆 of the components of T.
pub fn map_relations<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let c = components(&t.0);
    let split4 = split_4form(&d_phi(t)).expect("4-form");
    let dsphi = d_star_phi(t);
    let split5 = split_5form(&dsphi).expect("5-form");
    let k = |a: &Endo7<S>, f: i64| map_k(a).scaled(&S::from_int(f));
    let m = |a: &Endo7<S>, f: i64| map_m(a).scaled(&S::from_int(f));
    let zero4 = Form::zero(4);
    let zero5 = Form::zero(5);
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::form(
        "maps.d-phi-transpose",
        "dφ = 3𝗄(Tᵗ)",
        &d_phi(t),
        &k(&t.0.transpose(), 3),
    ));
    rec.push(IdentityCheck::form(
        "maps.d-phi-1",
        "(dφ)₍₁₎ = 3𝗄(T₍₁₎)",
        &split4.part1,
        &k(&c.c1, 3),
    ));
    rec.push(IdentityCheck::form(
        "maps.d-phi-3",
        "(dφ)₍₃₎ = 3𝗄(T₍₃₎)",
        &split4.part27,
        &k(&c.c3, 3),
    ));
    rec.push(IdentityCheck::form(
        "maps.d-phi-4",
        "(dφ)₍₄₎ = −3𝗄(T₍₄₎)",
        &split4.part7,
        &k(&c.c4, -3),
    ));
    rec.push(IdentityCheck::form(
        "maps.k-kills-x2",
        "𝗄(T₍₂₎) = 0",
        &map_k(&c.c2),
        &zero4,
    ));
    rec.push(IdentityCheck::form(
        "maps.d-star-phi-2",
        "(d⋆φ)₍₂₎ = 3𝗆(T₍₂₎)",
        &split5.part14,
        &m(&c.c2, 3),
    ));
    rec.push(IdentityCheck::form(
        "maps.d-star-phi-4",
        "(d⋆φ)₍₄₎ = −6𝗆(T₍₄₎)",
        &split5.part7,
        &m(&c.c4, -6),
    ));
    rec.push(IdentityCheck::form(
        "maps.m-kills-x1-x3",
        "𝗆(T₍₁₎ + T₍₃₎) = 0",
        &map_m(&(&c.c1 + &c.c3)),
        &zero5,
    ));
    rec
}

/// The 𝔛₄ lines with their commonly quoted factor 3, which fail whenever
/// T₍₄₎ ≠ 0. Evaluated for reporting only.
pub fn quoted_map_relations<S: Scalar>(t: &TorsionT<S>) -> VerificationRecord<S> {
    let c = components(&t.0);
    let split4 = split_4form(&d_phi(t)).expect("4-form");
    let split5 = split_5form(&d_star_phi(t)).expect("5-form");
    let three = S::from_int(3);
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::form(
        "quoted.d-phi-4",
        "(dφ)₍₄₎ = 3𝗄(T₍₄₎)",
        &split4.part7,
        &map_k(&c.c4).scaled(&three),
    ));
    rec.push(IdentityCheck::form(
        "quoted.d-star-phi-4",
        "(d⋆φ)₍₄₎ = 3𝗆(T₍₄₎)",
        &split5.part7,
        &map_m(&c.c4).scaled(&three),
    ));
    rec
}
