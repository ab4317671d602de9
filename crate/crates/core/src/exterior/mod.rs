//! Exterior algebra of R^7: forms, wedge and interior products, Hodge star
//! and the two inner products `(·,·)` and `⟨·,·⟩`.

pub mod basis;
mod form;
mod vector;

use thiserror::Error;

pub use form::Form;
pub use vector::{Covec7, Vec7};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("cannot contract a scalar")]
    ContractScalar,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} is out of range 0..=7")]
    DegreeOutOfRange(usize),
    #[error("a {degree}-form has {expected} coefficients, found {found}")]
    CoefficientCount {
        degree: usize,
        expected: usize,
        found: usize,
    },
}

pub fn wedge<S: crate::Scalar>(a: &Form<S>, b: &Form<S>) -> Form<S> {
    a.wedge(b)
}

pub fn interior<S: crate::Scalar>(x: &Vec7<S>, a: &Form<S>) -> Result<Form<S>, ExteriorError> {
    a.interior(x)
}

pub fn hodge<S: crate::Scalar>(a: &Form<S>) -> Form<S> {
    a.hodge()
}

pub fn form_inner<S: crate::Scalar>(a: &Form<S>, b: &Form<S>) -> Result<S, ExteriorError> {
    a.inner(b)
}

pub fn flat<S: crate::Scalar>(x: &Vec7<S>) -> Covec7<S> {
    x.flat()
}

pub fn sharp<S: crate::Scalar>(a: &Covec7<S>) -> Vec7<S> {
    a.sharp()
}
