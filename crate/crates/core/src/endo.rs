//! Endomorphisms of R^7 (elements of gl(7)).

use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::exterior::{Form, Vec7};
use crate::scalar::{Scalar, Q};

/// An element of gl(7) stored by its matrix a_ij = ⟨e_i, a(e_j)⟩, so that
/// a(e_j) = Σ_i a_ij e_i (column action).
#[derive(Clone, Debug, PartialEq)]
pub struct Endo7<S = Q> {
    rows: [[S; 7]; 7],
}

impl<S: Scalar> Endo7<S> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Endo7 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn from_rows(rows: [[S; 7]; 7]) -> Self {
        Endo7 { rows }
    }

    pub fn from_ints(rows: [[i64; 7]; 7]) -> Self {
        Self::from_fn(|i, j| S::from_int(rows[i][j]))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| S::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    /// The elementary endomorphism e_i ⊗ e_j*.
    pub fn elementary(i: usize, j: usize) -> Self {
        let (i, j) = (i % 7, j % 7);
        Self::from_fn(|r, c| {
            if (r, c) == (i, j) {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// x ⊗ y*, i.e. entries x_i y_j.
    pub fn outer(x: &Vec7<S>, y: &Vec7<S>) -> Self {
        Self::from_fn(|i, j| x.0[i].mul_ref(&y.0[j]))
    }

    pub fn rows(&self) -> &[[S; 7]; 7] {
        &self.rows
    }

    /// a_ij with indices taken mod 7.
    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.rows[i % 7][j % 7]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.rows[i % 7][j % 7] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..7 {
            acc += &self.rows[i][i];
        }
        acc
    }

    /// a(v).
    pub fn apply(&self, v: &Vec7<S>) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| {
            let mut acc = S::zero();
            for j in 0..7 {
                acc.add_product(&self.rows[i][j], &v.0[j]);
            }
            acc
        }))
    }

    /// a(e_j), the j-th column.
    pub fn column(&self, j: usize) -> Vec7<S> {
        Vec7(std::array::from_fn(|i| self.rows[i][j % 7].clone()))
    }

    /// Composition self ∘ other.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = S::zero();
            for k in 0..7 {
                acc.add_product(&self.rows[i][k], &other.rows[k][j]);
            }
            acc
        })
    }

    pub fn scaled(&self, s: &S) -> Self {
        Self::from_fn(|i, j| self.rows[i][j].mul_ref(s))
    }

    /// (a + aᵗ)/2.
    pub fn symmetric_part(&self) -> Self {
        let half = S::ratio(1, 2);
        Self::from_fn(|i, j| (self.rows[i][j].clone() + self.rows[j][i].clone()) * half.clone())
    }

    /// (a − aᵗ)/2.
    pub fn antisymmetric_part(&self) -> Self {
        let half = S::ratio(1, 2);
        Self::from_fn(|i, j| (self.rows[i][j].clone() - self.rows[j][i].clone()) * half.clone())
    }

    /// ⟨a, b⟩ = Σ a_ij b_ij.
    pub fn tensor_inner(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for (ra, rb) in self.rows.iter().zip(&other.rows) {
            for (a, b) in ra.iter().zip(rb) {
                acc.add_product(a, b);
            }
        }
        acc
    }

    /// ‖a‖² = ⟨a, a⟩.
    pub fn norm_sq(&self) -> S {
        self.tensor_inner(self)
    }

    /// Largest absolute entry (at least one); the reference scale for
    /// tolerance checks.
    pub fn scale(&self) -> S {
        self.rows.iter().flatten().fold(S::one(), |m, x| {
            let ax = x.abs();
            if ax > m {
                ax
            } else {
                m
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    /// Entrywise comparison under the scalar's notion of negligible.
    pub fn approx_eq(&self, other: &Self) -> bool {
        let scale = {
            let a = self.scale();
            let b = other.scale();
            if a > b {
                a
            } else {
                b
            }
        };
        (self - other)
            .rows
            .iter()
            .flatten()
            .all(|d| d.is_negligible(&scale))
    }

    pub fn is_symmetric(&self) -> bool {
        self.approx_eq(&self.transpose())
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.approx_eq(&-&self.transpose())
    }

    /// The 2-form a♭(x, y) = ⟨x, a(y)⟩ of an antisymmetric endomorphism
    /// (coefficient a_ij on e_i*∧e_j*, i < j).
    pub fn flat_2form(&self) -> Form<S> {
        let mut f = Form::zero(2);
        for i in 0..7 {
            for j in (i + 1)..7 {
                f.add_monomial(&[i, j], &self.rows[i][j]);
            }
        }
        f
    }

    /// Inverse of [`Endo7::flat_2form`]: a_ij = ω(e_i, e_j).
    pub fn from_2form(omega: &Form<S>) -> Self {
        assert_eq!(omega.degree(), 2, "expected a 2-form");
        Self::from_fn(|i, j| omega.coeff(&[i, j]))
    }

    /// g a g⁻¹ for a permutation g: e_i ↦ e_{perm[i]}.
    pub fn conjugate_by_permutation(&self, perm: &[usize; 7]) -> Self {
        let mut out = Self::zero();
        for i in 0..7 {
            for j in 0..7 {
                out.rows[perm[i]][perm[j]] = self.rows[i][j].clone();
            }
        }
        out
    }
}

impl<S: Scalar> Add for &Endo7<S> {
    type Output = Endo7<S>;

    fn add(self, rhs: Self) -> Endo7<S> {
        Endo7::from_fn(|i, j| {
            let mut x = self.rows[i][j].clone();
            x += &rhs.rows[i][j];
            x
        })
    }
}

impl<S: Scalar> Sub for &Endo7<S> {
    type Output = Endo7<S>;

    fn sub(self, rhs: Self) -> Endo7<S> {
        Endo7::from_fn(|i, j| {
            let mut x = self.rows[i][j].clone();
            x -= &rhs.rows[i][j];
            x
        })
    }
}

impl<S: Scalar> Neg for &Endo7<S> {
    type Output = Endo7<S>;

    fn neg(self) -> Endo7<S> {
        Endo7::from_fn(|i, j| -self.rows[i][j].clone())
    }
}
