//! The G₂-irreducible decomposition gl(7) = 𝔛₁ ⊕ 𝔛₂ ⊕ 𝔛₃ ⊕ 𝔛₄ with
//! 𝔛₁ = R·Id, 𝔛₂ = 𝔤₂, 𝔛₃ = S²₀, 𝔛₄ = 𝔤₂⊥.
//!
//! The projectors are closed-form; [`oracle`] recomputes them by brute-force
//! orthogonal projection for cross-checking.

pub mod oracle;

use std::fmt;

use crate::cayley::{a_v, cyclic_pair};
use crate::endo::Endo7;
use crate::exterior::Vec7;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

/// One of the four G₂-modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Module {
    X1,
    X2,
    X3,
    X4,
}

impl Module {
    pub const ALL: [Module; 4] = [Module::X1, Module::X2, Module::X3, Module::X4];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn dimension(self) -> usize {
        match self {
            Module::X1 => 1,
            Module::X2 => 14,
            Module::X3 => 27,
            Module::X4 => 7,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Module::X1 => "X1",
            Module::X2 => "X2",
            Module::X3 => "X3",
            Module::X4 => "X4",
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The four components a₍₁₎ … a₍₄₎ of an endomorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Components<S = Q> {
    pub c1: Endo7<S>,
    pub c2: Endo7<S>,
    pub c3: Endo7<S>,
    pub c4: Endo7<S>,
}

impl<S: Scalar> G2Components<S> {
    pub fn get(&self, m: Module) -> &Endo7<S> {
        match m {
            Module::X1 => &self.c1,
            Module::X2 => &self.c2,
            Module::X3 => &self.c3,
            Module::X4 => &self.c4,
        }
    }

    pub fn sum(&self) -> Endo7<S> {
        &(&(&self.c1 + &self.c2) + &self.c3) + &self.c4
    }

    pub fn as_array(&self) -> [&Endo7<S>; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }
}

/// p(a)_i = a_{i+1,i+3} − a_{i+3,i+1} + a_{i+4,i+5} − a_{i+5,i+4} + a_{i+2,i+6} − a_{i+6,i+2}.
pub fn p_map<S: Scalar>(a: &Endo7<S>) -> Vec7<S> {
    Vec7(std::array::from_fn(|i| {
        let mut acc = S::zero();
        for k in 0..3 {
            let (r, s) = cyclic_pair(i, k);
            acc += a.at(r, s);
            acc -= a.at(s, r);
        }
        acc
    }))
}

pub fn components<S: Scalar>(a: &Endo7<S>) -> G2Components<S> {
    let tr7 = a.trace() * S::ratio(1, 7);
    let p = p_map(a);
    let c1 = Endo7::identity().scaled(&tr7);
    let c4 = a_v(&p).scaled(&S::ratio(1, 6));

    let half = S::ratio(1, 2);
    let c3 = Endo7::from_fn(|i, j| {
        if i == j {
            a.at(i, i).clone() - tr7.clone()
        } else {
            (a.at(i, j).clone() + a.at(j, i).clone()) * half.clone()
        }
    });

    // 6 a₍₂₎ on each cyclic pair (r, s): 3(a_rs − a_sr) − p_i
    let mut c2 = Endo7::zero();
    let sixth = S::ratio(1, 6);
    for (i, p_i) in p.0.iter().enumerate() {
        for k in 0..3 {
            let (r, s) = cyclic_pair(i, k);
            let diff = a.at(r, s).clone() - a.at(s, r).clone();
            let v = (S::from_int(3) * diff - p_i.clone()) * sixth.clone();
            c2.set(s, r, -v.clone());
            c2.set(r, s, v);
        }
    }
    G2Components { c1, c2, c3, c4 }
}

/// Squared norms ‖a₍ₖ₎‖², from the closed-form expressions in the entries of
/// `a` (never by norming the components).
pub fn component_norms<S: Scalar>(a: &Endo7<S>) -> [S; 4] {
    let tr = a.trace();
    let p = p_map(a);
    let p_sq = p.norm_sq();
    let n1 = tr.clone() * tr.clone() * S::ratio(1, 7);
    let n4 = p_sq.clone() * S::ratio(1, 6);

    let mut sums_sq = S::zero();
    let mut diffs_sq = S::zero();
    for i in 0..7 {
        for k in 0..3 {
            let (r, s) = cyclic_pair(i, k);
            let sum = a.at(r, s).clone() + a.at(s, r).clone();
            let diff = a.at(r, s).clone() - a.at(s, r).clone();
            sums_sq.add_product(&sum, &sum);
            diffs_sq.add_product(&diff, &diff);
        }
    }
    let tr7 = tr * S::ratio(1, 7);
    let mut diag = S::zero();
    for i in 0..7 {
        let d = a.at(i, i).clone() - tr7.clone();
        diag.add_product(&d, &d);
    }
    let half = S::ratio(1, 2);
    let n3 = sums_sq * half.clone() + diag;
    let n2 = diffs_sq * half - n4.clone();
    [n1, n2, n3, n4]
}

/// a = c1 + c2 + c3 + c4, pairwise orthogonality, Pythagoras, and the
/// closed-form norms against the norms of the components.
pub fn decomposition_checks<S: Scalar>(a: &Endo7<S>) -> VerificationRecord<S> {
    let c = components(a);
    let parts = c.as_array();
    let norms = component_norms(a);
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::endo(
        "decomp.reconstruct",
        "a = a₍₁₎ + a₍₂₎ + a₍₃₎ + a₍₄₎",
        &c.sum(),
        a,
    ));

    let mut cross_terms = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            cross_terms.push(parts[i].tensor_inner(parts[j]));
        }
    }
    let zeros = vec![S::zero(); cross_terms.len()];
    rec.push(IdentityCheck::from_slices(
        "decomp.orthogonal",
        "⟨a₍ᵢ₎, a₍ⱼ₎⟩ = 0 for i ≠ j",
        &cross_terms,
        &zeros,
    ));

    let mut total = S::zero();
    for n in &norms {
        total += n;
    }
    rec.push(IdentityCheck::scalar(
        "decomp.pythagoras",
        "‖a‖² = Σ‖a₍ᵢ₎‖²",
        total,
        a.norm_sq(),
    ));
    let direct: Vec<S> = parts.iter().map(|p| p.norm_sq()).collect();
    rec.push(IdentityCheck::from_slices(
        "decomp.norms",
        "closed-form ‖a₍ᵢ₎‖² = ‖a₍ᵢ₎‖²",
        &norms,
        &direct,
    ));
    rec
}
