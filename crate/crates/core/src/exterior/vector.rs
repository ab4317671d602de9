use std::ops::{Add, Index, Neg, Sub};

use crate::exterior::{ExteriorError, Form};
use num_traits::Zero;

use crate::scalar::{Scalar, Q};

/// A vector of R^7 in the standard (Cayley) basis. Indices are taken mod 7.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec7<S = Q>(pub [S; 7]);

impl<S: Scalar> Vec7<S> {
    pub fn zero() -> Self {
        Vec7(std::array::from_fn(|_| S::zero()))
    }

    /// The basis vector e_i.
    pub fn basis(i: usize) -> Self {
        let i = i % 7;
        Vec7(std::array::from_fn(|j| {
            if j == i {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn from_ints(v: [i64; 7]) -> Self {
        Vec7(v.map(S::from_int))
    }

    pub fn dot(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            acc.add_product(a, b);
        }
        acc
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn scaled(&self, s: &S) -> Self {
        Vec7(std::array::from_fn(|i| self.0[i].mul_ref(s)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The musical isomorphism x ↦ x♭ = ⟨x, ·⟩.
    pub fn flat(&self) -> Covec7<S> {
        Covec7(Form::from_parts(1, self.0.to_vec()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.0.iter()
    }
}

impl<S> Index<usize> for Vec7<S> {
    type Output = S;

    fn index(&self, i: usize) -> &S {
        &self.0[i % 7]
    }
}

impl<S: Scalar> Add for &Vec7<S> {
    type Output = Vec7<S>;

    fn add(self, rhs: Self) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| {
            let mut x = self.0[i].clone();
            x += &rhs.0[i];
            x
        }))
    }
}

impl<S: Scalar> Sub for &Vec7<S> {
    type Output = Vec7<S>;

    fn sub(self, rhs: Self) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| {
            let mut x = self.0[i].clone();
            x -= &rhs.0[i];
            x
        }))
    }
}

impl<S: Scalar> Neg for &Vec7<S> {
    type Output = Vec7<S>;

    fn neg(self) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| -self.0[i].clone()))
    }
}

/// A covector, i.e. a 1-form.
#[derive(Clone, Debug, PartialEq)]
pub struct Covec7<S = Q>(Form<S>);

impl<S: Scalar> Covec7<S> {
    pub fn basis(i: usize) -> Self {
        Vec7::basis(i).flat()
    }

    /// α ↦ α♯ with ⟨α♯, x⟩ = α(x).
    pub fn sharp(&self) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| self.0.coeffs()[i].clone()))
    }

    pub fn as_form(&self) -> &Form<S> {
        &self.0
    }

    pub fn into_form(self) -> Form<S> {
        self.0
    }
}

impl<S: Scalar> TryFrom<Form<S>> for Covec7<S> {
    type Error = ExteriorError;

    fn try_from(form: Form<S>) -> Result<Self, ExteriorError> {
        if form.degree() != 1 {
            return Err(ExteriorError::DegreeMismatch {
                expected: 1,
                found: form.degree(),
            });
        }
        Ok(Covec7(form))
    }
}

impl<S> From<Covec7<S>> for Form<S> {
    fn from(c: Covec7<S>) -> Form<S> {
        c.0
    }
}
