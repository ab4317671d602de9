use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::basis::{self, DIM};
use super::{ExteriorError, Vec7};
use crate::scalar::{Scalar, Q};

/// An alternating k-form on R^7 with dense coefficients over the sorted
/// monomial basis (see [`basis`]).
///
/// Evaluation follows the determinant convention: e_I*(e_I) = 1 for sorted
/// I, with no 1/k! factor anywhere.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<S = Q> {
    degree: usize,
    coeffs: Vec<S>,
}

impl<S> Form<S> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Index tuple of the monomial stored at `position`.
    pub fn monomial_indices(&self, position: usize) -> Vec<usize> {
        basis::indices(basis::mask(self.degree, position)).collect()
    }

    pub(crate) fn from_parts(degree: usize, coeffs: Vec<S>) -> Self {
        debug_assert_eq!(coeffs.len(), basis::dim(degree));
        Form { degree, coeffs }
    }
}

impl Form<i64> {
    pub fn cast<S: Scalar>(&self) -> Form<S> {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|&c| S::from_int(c)).collect(),
        }
    }
}

impl<S: Scalar> Form<S> {
    pub fn zero(degree: usize) -> Self {
        Form {
            degree,
            coeffs: vec![S::zero(); basis::dim(degree)],
        }
    }

    pub fn scalar(value: S) -> Self {
        Form {
            degree: 0,
            coeffs: vec![value],
        }
    }

    /// Vol = e_0*∧…∧e_6*.
    pub fn volume() -> Self {
        Form {
            degree: DIM,
            coeffs: vec![S::one()],
        }
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<S>) -> Result<Self, ExteriorError> {
        if degree > DIM {
            return Err(ExteriorError::DegreeOutOfRange(degree));
        }
        if coeffs.len() != basis::dim(degree) {
            return Err(ExteriorError::CoefficientCount {
                degree,
                expected: basis::dim(degree),
                found: coeffs.len(),
            });
        }
        Ok(Form { degree, coeffs })
    }

    /// e_{i1}*∧…∧e_{ik}* for arbitrary (mod 7) indices; repeated indices give zero.
    pub fn monomial(indices: &[usize]) -> Self {
        let mut f = Form::zero(indices.len());
        f.add_monomial(indices, &S::one());
        f
    }

    /// Adds `c · e_{indices}*` in place.
    pub fn add_monomial(&mut self, indices: &[usize], c: &S) {
        assert_eq!(indices.len(), self.degree, "monomial degree mismatch");
        if let Some((mask, sign)) = basis::sort_indices(indices) {
            let slot = &mut self.coeffs[basis::rank(mask)];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
    }

    /// Coefficient in front of e_{indices}* (sign-adjusted for unsorted input).
    pub fn coeff(&self, indices: &[usize]) -> S {
        match basis::sort_indices(indices) {
            Some((mask, sign)) if indices.len() == self.degree => {
                let c = self.coeffs[basis::rank(mask)].clone();
                if sign > 0 {
                    c
                } else {
                    -c
                }
            }
            _ => S::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, s: &S) -> Self {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(s)).collect(),
        }
    }

    /// `self += s · other`.
    pub fn add_scaled(&mut self, s: &S, other: &Form<S>) {
        assert_eq!(self.degree, other.degree, "degree mismatch in form sum");
        if s.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                a.add_product(s, b);
            }
        }
    }

    pub(crate) fn add_scaled_int(&mut self, s: &S, other: &Form<i64>) {
        assert_eq!(self.degree, other.degree, "degree mismatch in form sum");
        if s.is_zero() {
            return;
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            match b {
                0 => {}
                1 => *a += s,
                -1 => *a -= s,
                _ => a.add_product(s, &S::from_int(b)),
            }
        }
    }

    /// α∧β. Degrees summing past 7 give the empty zero form.
    pub fn wedge(&self, other: &Form<S>) -> Form<S> {
        let degree = self.degree + other.degree;
        let mut out = Form::zero(degree);
        if degree > DIM {
            return out;
        }
        for (&ma, a) in basis::masks(self.degree).iter().zip(&self.coeffs) {
            if a.is_zero() {
                continue;
            }
            for (&mb, b) in basis::masks(other.degree).iter().zip(&other.coeffs) {
                if b.is_zero() {
                    continue;
                }
                let sign = basis::wedge_sign(ma, mb);
                if sign == 0 {
                    continue;
                }
                let prod = a.mul_ref(b);
                let slot = &mut out.coeffs[basis::rank(ma | mb)];
                if sign > 0 {
                    *slot += &prod;
                } else {
                    *slot -= &prod;
                }
            }
        }
        out
    }

    /// x⌟α, with (x⌟α)(v_1, …) = α(x, v_1, …).
    pub fn interior(&self, x: &Vec7<S>) -> Result<Form<S>, ExteriorError> {
        if self.degree == 0 {
            return Err(ExteriorError::ContractScalar);
        }
        Ok(self.contract(x))
    }

    pub(crate) fn contract(&self, x: &Vec7<S>) -> Form<S> {
        let mut out = Form::zero(self.degree - 1);
        for (&m, c) in basis::masks(self.degree).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            for i in basis::indices(m) {
                if x.0[i].is_zero() {
                    continue;
                }
                let prod = x.0[i].mul_ref(c);
                let slot = &mut out.coeffs[basis::rank(m & !(1 << i))];
                if basis::contraction_sign(i, m) > 0 {
                    *slot += &prod;
                } else {
                    *slot -= &prod;
                }
            }
        }
        out
    }

    /// e_i⌟α.
    pub fn contract_basis(&self, i: usize) -> Form<S> {
        self.contract(&Vec7::basis(i))
    }

    /// Hodge star for the standard metric and Vol = e_0*∧…∧e_6*:
    /// ⋆e_I* = sign(I, Iᶜ) e_{Iᶜ}*.
    pub fn hodge(&self) -> Form<S> {
        assert!(self.degree <= DIM, "hodge star of an overflowed form");
        let full = (1u8 << DIM) - 1;
        let mut out = Form::zero(DIM - self.degree);
        for (&m, c) in basis::masks(self.degree).iter().zip(&self.coeffs) {
            let comp = full & !m;
            let slot = &mut out.coeffs[basis::rank(comp)];
            *slot = if basis::wedge_sign(m, comp) > 0 {
                c.clone()
            } else {
                -c.clone()
            };
        }
        out
    }

    /// (α, β) = (1/p!) Σ α(e_I) β(e_I), i.e. the plain sum over sorted monomials.
    pub fn inner(&self, other: &Form<S>) -> Result<S, ExteriorError> {
        if self.degree != other.degree {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(self.dot(other))
    }

    pub(crate) fn dot(&self, other: &Form<S>) -> S {
        debug_assert_eq!(self.degree, other.degree);
        let mut acc = S::zero();
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !a.is_zero() && !b.is_zero() {
                acc.add_product(a, b);
            }
        }
        acc
    }

    pub(crate) fn dot_int(&self, other: &Form<i64>) -> S {
        debug_assert_eq!(self.degree, other.degree);
        let mut acc = S::zero();
        for (a, &b) in self.coeffs.iter().zip(&other.coeffs) {
            match b {
                0 => {}
                1 => acc += a,
                -1 => acc -= a,
                _ => acc.add_product(a, &S::from_int(b)),
            }
        }
        acc
    }

    /// |α|² = (α, α).
    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    /// ⟨α, β⟩ = p!·(α, β), the component-sum inner product on tensors.
    pub fn tensor_inner(&self, other: &Form<S>) -> Result<S, ExteriorError> {
        let factorial: i64 = (1..=self.degree as i64).product();
        Ok(self.inner(other)? * S::from_int(factorial))
    }

    /// α(v_1, …, v_p) by successive contraction.
    pub fn evaluate(&self, vectors: &[Vec7<S>]) -> Result<S, ExteriorError> {
        if vectors.len() != self.degree {
            return Err(ExteriorError::DegreeMismatch {
                expected: self.degree,
                found: vectors.len(),
            });
        }
        let mut f = self.clone();
        for v in vectors {
            f = f.contract(v);
        }
        Ok(f.coeffs[0].clone())
    }

    /// The coefficient of a top-degree form against Vol (zero-degree forms
    /// return their value).
    pub fn top_coefficient(&self) -> S {
        match self.degree {
            0 | DIM => self.coeffs[0].clone(),
            _ => S::zero(),
        }
    }
}

impl<S: Scalar> Add for &Form<S> {
    type Output = Form<S>;

    fn add(self, rhs: Self) -> Form<S> {
        let mut out = self.clone();
        out.add_scaled(&S::one(), rhs);
        out
    }
}

impl<S: Scalar> Sub for &Form<S> {
    type Output = Form<S>;

    fn sub(self, rhs: Self) -> Form<S> {
        let mut out = self.clone();
        out.add_scaled(&-S::one(), rhs);
        out
    }
}

impl<S: Scalar> Neg for &Form<S> {
    type Output = Form<S>;

    fn neg(self) -> Form<S> {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{phi, star_phi};
    use crate::exterior::ExteriorError;
    use crate::scalar::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn wedge_basics() {
        let e01 = Form::<Q>::monomial(&[0]).wedge(&Form::monomial(&[1]));
        assert_eq!(e01.coeff(&[0, 1]), q(1));
        assert_eq!(e01.coeff(&[1, 0]), q(-1));
        assert!(phi::<Q>().wedge(&phi()).is_zero());
        assert_eq!(phi::<Q>().wedge(&star_phi()), Form::volume().scaled(&q(7)));
        let over = star_phi::<Q>().wedge(&star_phi());
        assert_eq!(over.degree(), 8);
        assert!(over.is_zero());
    }

    #[test]
    fn interior_basics() {
        let e01 = Form::<Q>::monomial(&[0, 1]);
        assert_eq!(e01.interior(&Vec7::basis(0)).unwrap(), Form::monomial(&[1]));
        assert_eq!(
            Form::scalar(q(2)).interior(&Vec7::basis(0)),
            Err(ExteriorError::ContractScalar)
        );
        let mut expected = Form::<Q>::zero(2);
        for (a, b) in [(1, 3), (4, 5), (2, 6)] {
            expected.add_monomial(&[a, b], &q(1));
        }
        assert_eq!(phi::<Q>().contract_basis(0), expected);
    }

    #[test]
    fn hodge_and_inner() {
        assert_eq!(Form::scalar(q(1)).hodge(), Form::<Q>::volume());
        assert_eq!(Form::<Q>::volume().hodge(), Form::scalar(q(1)));
        assert_eq!(phi::<Q>().inner(&phi()).unwrap(), q(7));
        assert_eq!(phi::<Q>().tensor_inner(&phi()).unwrap(), q(42));
        let e01 = Form::<Q>::monomial(&[0, 1]);
        assert_eq!(e01.norm_sq(), q(1));
        assert_eq!(e01.tensor_inner(&e01).unwrap(), q(2));
        assert!(matches!(
            phi::<Q>().inner(&e01),
            Err(ExteriorError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn constructors_validate() {
        assert!(Form::<Q>::from_coeffs(8, vec![]).is_err());
        assert!(Form::<Q>::from_coeffs(2, vec![q(0); 20]).is_err());
        assert!(Form::<Q>::monomial(&[3, 3]).is_zero());
    }
}
