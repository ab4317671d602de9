//! Equivariant maps between gl(7) and forms:
//!
//! * 𝗄(a) = Σ a_ij e_i*∧(e_j⌟⋆φ)  (gl(7) → Λ⁴)
//! * 𝗆(a) = Σ a_ij ⋆(e_i*∧e_j*)    (gl(7) → Λ⁵)
//! * 𝗂(a) = Σ a_ij e_i*∧(e_j⌟φ)    (gl(7) → Λ³)
//! * 𝗃(γ)_ij = ⋆((e_i⌟φ)∧(e_j⌟φ)∧γ) (Λ³ → gl(7))
//!
//! Every map is a linear combination of integer building blocks kept in a
//! [`MapTable`] built once on first use.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::cayley::{int_constants, phi, star_phi};
use crate::endo::Endo7;
use crate::exterior::{ExteriorError, Form, Vec7};
use crate::linalg;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

/// Integer building blocks, indexed by 7·i + j where a pair is involved.
#[derive(Clone, Debug, PartialEq)]
pub struct MapTable {
    /// e_j⌟⋆φ
    pub star_phi_contractions: Vec<Form<i64>>,
    /// e_j⌟φ
    pub phi_contractions: Vec<Form<i64>>,
    /// ⋆(e_i*∧e_j*)
    pub star_pairs: Vec<Form<i64>>,
    /// e_i*∧(e_j⌟⋆φ)
    pub k_blocks: Vec<Form<i64>>,
    /// e_i*∧(e_j⌟φ)
    pub i_blocks: Vec<Form<i64>>,
    /// ⋆((e_i⌟φ)∧(e_j⌟φ)), so that 𝗃(γ)_ij = (j_duals[7i+j], γ)
    pub j_duals: Vec<Form<i64>>,
}

fn to_int(f: &Form<Q>) -> Form<i64> {
    use num_traits::ToPrimitive;
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral table entry");
            c.to_integer().to_i64().expect("table entry fits i64")
        })
        .collect();
    Form::from_parts(f.degree(), coeffs)
}

impl MapTable {
    /// Regenerates every table from φ and ⋆φ.
    pub fn build() -> Self {
        let c = int_constants();
        let (phi_q, star_q): (Form<Q>, Form<Q>) = (c.phi.cast(), c.star_phi.cast());
        let sc: Vec<Form<Q>> = (0..7).map(|j| star_q.contract_basis(j)).collect();
        let pc: Vec<Form<Q>> = (0..7).map(|j| phi_q.contract_basis(j)).collect();
        let e = |i: usize| Form::<Q>::monomial(&[i]);
        let mut star_pairs = Vec::with_capacity(49);
        let mut k_blocks = Vec::with_capacity(49);
        let mut i_blocks = Vec::with_capacity(49);
        let mut j_duals = Vec::with_capacity(49);
        for i in 0..7 {
            for j in 0..7 {
                star_pairs.push(to_int(&e(i).wedge(&e(j)).hodge()));
                k_blocks.push(to_int(&e(i).wedge(&sc[j])));
                i_blocks.push(to_int(&e(i).wedge(&pc[j])));
                j_duals.push(to_int(&pc[i].wedge(&pc[j]).hodge()));
            }
        }
        MapTable {
            star_phi_contractions: sc.iter().map(to_int).collect(),
            phi_contractions: pc.iter().map(to_int).collect(),
            star_pairs,
            k_blocks,
            i_blocks,
            j_duals,
        }
    }

    /// SHA-256 over every table in a fixed order (degree then coefficients,
    /// little-endian).
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for group in [
            &self.star_phi_contractions,
            &self.phi_contractions,
            &self.star_pairs,
            &self.k_blocks,
            &self.i_blocks,
            &self.j_duals,
        ] {
            for f in group.iter() {
                h.update((f.degree() as u64).to_le_bytes());
                for c in f.coeffs() {
                    h.update(c.to_le_bytes());
                }
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// SHA-256 of the serialized tables; a change here means the maps changed.
pub const TABLE_DIGEST: &str = "49928fe4d053094e0071b6478ff46a9b3deada9ff18f3552a9c0c8bbd6df3d8a";

pub fn map_table() -> &'static MapTable {
    static TABLE: OnceLock<MapTable> = OnceLock::new();
    TABLE.get_or_init(MapTable::build)
}

fn combine<S: Scalar>(a: &Endo7<S>, blocks: &[Form<i64>], degree: usize) -> Form<S> {
    let mut out = Form::zero(degree);
    for i in 0..7 {
        for j in 0..7 {
            out.add_scaled_int(a.at(i, j), &blocks[7 * i + j]);
        }
    }
    out
}

pub fn map_k<S: Scalar>(a: &Endo7<S>) -> Form<S> {
    combine(a, &map_table().k_blocks, 4)
}

pub fn map_m<S: Scalar>(a: &Endo7<S>) -> Form<S> {
    combine(a, &map_table().star_pairs, 5)
}

pub fn map_i<S: Scalar>(a: &Endo7<S>) -> Form<S> {
    combine(a, &map_table().i_blocks, 3)
}

/// The repeated-subscript variant Σ a_ii e_i*∧(e_j⌟φ), kept for reporting.
pub fn map_i_diagonal_variant<S: Scalar>(a: &Endo7<S>) -> Form<S> {
    let table = map_table();
    let mut out = Form::zero(3);
    for i in 0..7 {
        for j in 0..7 {
            out.add_scaled_int(a.at(i, i), &table.i_blocks[7 * i + j]);
        }
    }
    out
}

pub fn map_j<S: Scalar>(gamma: &Form<S>) -> Result<Endo7<S>, ExteriorError> {
    if gamma.degree() != 3 {
        return Err(ExteriorError::DegreeMismatch {
            expected: 3,
            found: gamma.degree(),
        });
    }
    let table = map_table();
    Ok(Endo7::from_fn(|i, j| {
        gamma.dot_int(&table.j_duals[7 * i + j])
    }))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("endomorphism is not symmetric (must lie in X1 + X3)")]
    NotSymmetric,
    #[error("3-form has a component in the 7-dimensional summand (must lie in the image of symmetric endomorphisms)")]
    NotInSymmetricSlice,
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
}

/// Removes the component of a 3-form along span{e_i⌟⋆φ}, leaving its part in
/// the image of 𝗂 on symmetric endomorphisms.
pub fn project_symmetric_slice<S: Scalar>(gamma: &Form<S>) -> Form<S> {
    let spans: Vec<Form<S>> = map_table()
        .star_phi_contractions
        .iter()
        .map(|f| f.cast())
        .collect();
    let coeffs = linalg::least_squares(
        &spans
            .iter()
            .map(|f| f.coeffs().to_vec())
            .collect::<Vec<_>>(),
        gamma.coeffs(),
    )
    .expect("e_i⌟⋆φ are independent");
    let mut out = gamma.clone();
    for (c, f) in coeffs.iter().zip(&spans) {
        out.add_scaled(&-c.clone(), f);
    }
    out
}

fn restrict<S: Scalar>(
    a: &Endo7<S>,
    gamma: &Form<S>,
    strict: bool,
) -> Result<(Endo7<S>, Form<S>), DomainError> {
    if gamma.degree() != 3 {
        return Err(ExteriorError::DegreeMismatch {
            expected: 3,
            found: gamma.degree(),
        }
        .into());
    }
    let g = project_symmetric_slice(gamma);
    if strict {
        if !a.is_symmetric() {
            return Err(DomainError::NotSymmetric);
        }
        let scale = gamma
            .coeffs()
            .iter()
            .fold(S::one(), |m, x| if x.abs() > m { x.abs() } else { m });
        if !(gamma - &g)
            .coeffs()
            .iter()
            .all(|d| d.is_negligible(&scale))
        {
            return Err(DomainError::NotInSymmetricSlice);
        }
        return Ok((a.clone(), gamma.clone()));
    }
    Ok((a.symmetric_part(), g))
}

/// The composition identities on X1 ⊕ X3:
/// 𝗃(𝗂(a)) = −4a − 2σ₁(a)Id, 𝗂(𝗃(γ)) = −4γ − 2(γ,φ)φ, (𝗂(a), φ) = 3σ₁(a),
/// 𝗃(⋆𝗄(a)) = 4a − 4σ₁(a)Id and 𝗄(𝗃(γ)) = 4⋆γ − 4(γ,φ)⋆φ.
///
/// Outside the domain the inputs are projected onto it, unless `strict`.
pub fn composition_checks<S: Scalar>(
    a: &Endo7<S>,
    gamma: &Form<S>,
    strict: bool,
) -> Result<VerificationRecord<S>, DomainError> {
    let (a, g) = restrict(a, gamma, strict)?;
    let s1 = a.trace();
    let g_phi = g.dot(&phi());
    let id = Endo7::<S>::identity();
    let mut rec = VerificationRecord::new();

    let ja = map_j(&map_i(&a))?;
    let rhs = &a.scaled(&S::from_int(-4)) - &id.scaled(&(S::from_int(2) * s1.clone()));
    rec.push(IdentityCheck::endo(
        "maps.j-after-i",
        "𝗃(𝗂(a)) = −4a − 2σ₁(a)Id",
        &ja,
        &rhs,
    ));

    let ig = map_i(&map_j(&g)?);
    let mut rhs = g.scaled(&S::from_int(-4));
    rhs.add_scaled(&(S::from_int(-2) * g_phi.clone()), &phi());
    rec.push(IdentityCheck::form(
        "maps.i-after-j",
        "𝗂(𝗃(γ)) = −4γ − 2(γ,φ)φ",
        &ig,
        &rhs,
    ));

    rec.push(IdentityCheck::scalar(
        "maps.i-trace",
        "(𝗂(a), φ) = 3σ₁(a)",
        map_i(&a).dot(&phi()),
        S::from_int(3) * s1.clone(),
    ));

    let jk = map_j(&map_k(&a).hodge())?;
    let rhs = &a.scaled(&S::from_int(4)) - &id.scaled(&(S::from_int(4) * s1.clone()));
    rec.push(IdentityCheck::endo(
        "maps.j-after-star-k",
        "𝗃(⋆𝗄(a)) = 4a − 4σ₁(a)Id",
        &jk,
        &rhs,
    ));

    let kj = map_k(&map_j(&g)?);
    let mut rhs = g.hodge().scaled(&S::from_int(4));
    rhs.add_scaled(&(S::from_int(-4) * g_phi), &star_phi());
    rec.push(IdentityCheck::form(
        "maps.k-after-j",
        "𝗄(𝗃(γ)) = 4⋆γ − 4(γ,φ)⋆φ",
        &kj,
        &rhs,
    ));
    Ok(rec)
}

/// The two mixed compositions with their commonly quoted coefficients,
/// 𝗃(⋆𝗄(a)) = −4a − 4σ₁(a)Id and 𝗄(𝗃(γ)) = 4⋆γ + (7/3)(γ,φ)⋆φ. These do not
/// hold in general; evaluated for reporting only.
pub fn quoted_composition_checks<S: Scalar>(
    a: &Endo7<S>,
    gamma: &Form<S>,
    strict: bool,
) -> Result<VerificationRecord<S>, DomainError> {
    let (a, g) = restrict(a, gamma, strict)?;
    let s1 = a.trace();
    let id = Endo7::<S>::identity();
    let mut rec = VerificationRecord::new();
    let jk = map_j(&map_k(&a).hodge())?;
    let rhs = &a.scaled(&S::from_int(-4)) - &id.scaled(&(S::from_int(4) * s1));
    rec.push(IdentityCheck::endo(
        "quoted.j-after-star-k",
        "𝗃(⋆𝗄(a)) = −4a − 4σ₁(a)Id",
        &jk,
        &rhs,
    ));
    let kj = map_k(&map_j(&g)?);
    let mut rhs = g.hodge().scaled(&S::from_int(4));
    rhs.add_scaled(&(S::ratio(7, 3) * g.dot(&phi())), &star_phi());
    rec.push(IdentityCheck::form(
        "quoted.k-after-j",
        "𝗄(𝗃(γ)) = 4⋆γ + (7/3)(γ,φ)⋆φ",
        &kj,
        &rhs,
    ));
    Ok(rec)
}

/// 𝗄(a) + ⋆𝗂(aᵗ) = σ₁(a)⋆φ and ⋆𝗄(a) + 𝗂(aᵗ) = σ₁(a)φ, valid on all of gl(7).
pub fn bridging_identities<S: Scalar>(a: &Endo7<S>) -> VerificationRecord<S> {
    let s1 = a.trace();
    let k = map_k(a);
    let it = map_i(&a.transpose());
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::form(
        "maps.bridge-4",
        "𝗄(a) + ⋆𝗂(aᵗ) = σ₁(a)⋆φ",
        &(&k + &it.hodge()),
        &star_phi::<S>().scaled(&s1),
    ));
    rec.push(IdentityCheck::form(
        "maps.bridge-3",
        "⋆𝗄(a) + 𝗂(aᵗ) = σ₁(a)φ",
        &(&k.hodge() + &it),
        &phi::<S>().scaled(&s1),
    ));
    rec
}

/// ⋆(x♭∧(y⌟⋆φ)) + y♭∧(x⌟φ) = ⟨x,y⟩φ and x♭∧(y⌟⋆φ) + ⋆(y♭∧(x⌟φ)) = ⟨x,y⟩⋆φ.
pub fn vector_identities<S: Scalar>(x: &Vec7<S>, y: &Vec7<S>) -> VerificationRecord<S> {
    let (phi, star_phi) = (phi::<S>(), star_phi::<S>());
    let xy = x.dot(y);
    let a = x.flat().as_form().wedge(&star_phi.contract(y));
    let b = y.flat().as_form().wedge(&phi.contract(x));
    let mut rec = VerificationRecord::new();
    rec.push(IdentityCheck::form(
        "maps.vector-3",
        "⋆(x♭∧(y⌟⋆φ)) + y♭∧(x⌟φ) = ⟨x,y⟩φ",
        &(&a.hodge() + &b),
        &phi.scaled(&xy),
    ));
    rec.push(IdentityCheck::form(
        "maps.vector-4",
        "x♭∧(y⌟⋆φ) + ⋆(y♭∧(x⌟φ)) = ⟨x,y⟩⋆φ",
        &(&a + &b.hodge()),
        &star_phi.scaled(&xy),
    ));
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::a_v;
    use crate::decomp::components;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn table_is_reproducible() {
        let fresh = MapTable::build();
        assert_eq!(&fresh, map_table());
        assert_eq!(fresh.digest(), TABLE_DIGEST);
    }

    #[test]
    fn distinguished_values() {
        let id = Endo7::<Q>::identity();
        assert_eq!(map_i(&id), phi::<Q>().scaled(&q(3)));
        assert_eq!(map_k(&id), star_phi::<Q>().scaled(&q(4)));
        assert_eq!(map_j(&phi::<Q>()).unwrap(), id.scaled(&q(-6)));
        assert_eq!(map_j(&map_i(&id)).unwrap(), id.scaled(&q(-18)));
        assert!(map_m(&id).is_zero());
        assert!(map_j(&Form::<Q>::zero(2)).is_err());
    }

    #[test]
    fn kernels() {
        let a = Endo7::<Q>::from_fn(|i, j| Q::from_int(((3 * i + 5 * j) % 11) as i64 - 5));
        let c = components(&a);
        assert!(map_k(&c.c2).is_zero());
        assert!(map_m(&c.c1).is_zero() && map_m(&c.c3).is_zero());
        assert!(!map_m(&a_v(&Vec7::<Q>::basis(0))).is_zero());
    }

    #[test]
    fn j_matches_literal_wedge() {
        let mut gamma = Form::<Q>::zero(3);
        for (n, c) in [3, -1, 4, 1, -5, 9, 2].iter().enumerate() {
            gamma.add_monomial(&[n, n + 2, n + 3], &q(*c));
        }
        let table = map_table();
        let j = map_j(&gamma).unwrap();
        for i in 0..7 {
            for k in 0..7 {
                let pi: Form<Q> = table.phi_contractions[i].cast();
                let pk: Form<Q> = table.phi_contractions[k].cast();
                let lit = pi.wedge(&pk).wedge(&gamma).top_coefficient();
                assert_eq!(j.at(i, k), &lit);
            }
        }
        assert!(j.is_symmetric());
    }

    #[test]
    fn compositions_on_identity_and_phi() {
        let rec = composition_checks(&Endo7::<Q>::identity(), &phi(), true).unwrap();
        assert!(rec.holds(), "{:?}", rec.failures().collect::<Vec<_>>());
        let quoted = quoted_composition_checks(&Endo7::<Q>::identity(), &phi(), true).unwrap();
        assert!(!quoted.holds());
    }

    #[test]
    fn strict_domain() {
        let a = a_v(&Vec7::<Q>::basis(2));
        assert_eq!(
            composition_checks(&a, &phi(), true).unwrap_err(),
            DomainError::NotSymmetric
        );
        let gamma: Form<Q> = map_table().star_phi_contractions[0].cast();
        assert_eq!(
            composition_checks(&Endo7::identity(), &gamma, true).unwrap_err(),
            DomainError::NotInSymmetricSlice
        );
        assert!(composition_checks(&a, &gamma, false).unwrap().holds());
    }

    #[test]
    fn vector_identities_on_basis() {
        let e0 = Vec7::<Q>::basis(0);
        assert!(vector_identities(&e0, &e0).holds());
        assert!(vector_identities(&e0, &Vec7::basis(1)).holds());
    }
}
