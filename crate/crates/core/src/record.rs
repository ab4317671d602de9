//! Residual bookkeeping shared by every identity check.

use crate::endo::Endo7;
use crate::exterior::{Form, Vec7};
use crate::scalar::{Scalar, Q};

/// One evaluated identity: `residual` holds lhs − rhs coordinatewise and
/// `scale` the largest magnitude seen on either side (at least one).
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck<S = Q> {
    pub id: &'static str,
    pub statement: &'static str,
    pub residual: Vec<S>,
    pub scale: S,
}

fn max_abs<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values.into_iter().fold(S::one(), |m, x| {
        let a = x.abs();
        if a > m {
            a
        } else {
            m
        }
    })
}

impl<S: Scalar> IdentityCheck<S> {
    pub fn from_slices(id: &'static str, statement: &'static str, lhs: &[S], rhs: &[S]) -> Self {
        assert_eq!(lhs.len(), rhs.len(), "{id}: sides have different shapes");
        let scale = max_abs(lhs.iter().chain(rhs));
        let residual = lhs
            .iter()
            .zip(rhs)
            .map(|(l, r)| l.clone() - r.clone())
            .collect();
        IdentityCheck {
            id,
            statement,
            residual,
            scale,
        }
    }

    pub fn scalar(id: &'static str, statement: &'static str, lhs: S, rhs: S) -> Self {
        Self::from_slices(id, statement, &[lhs], &[rhs])
    }

    pub fn vector(id: &'static str, statement: &'static str, lhs: &Vec7<S>, rhs: &Vec7<S>) -> Self {
        Self::from_slices(id, statement, &lhs.0, &rhs.0)
    }

    pub fn endo(id: &'static str, statement: &'static str, lhs: &Endo7<S>, rhs: &Endo7<S>) -> Self {
        let l: Vec<S> = lhs.rows().iter().flatten().cloned().collect();
        let r: Vec<S> = rhs.rows().iter().flatten().cloned().collect();
        Self::from_slices(id, statement, &l, &r)
    }

    pub fn form(id: &'static str, statement: &'static str, lhs: &Form<S>, rhs: &Form<S>) -> Self {
        assert_eq!(lhs.degree(), rhs.degree(), "{id}: degree mismatch");
        Self::from_slices(id, statement, lhs.coeffs(), rhs.coeffs())
    }

    pub fn holds(&self) -> bool {
        self.residual.iter().all(|r| r.is_negligible(&self.scale))
    }

    /// Largest absolute residual entry.
    pub fn max_residual(&self) -> f64 {
        self.residual
            .iter()
            .map(|r| r.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

/// Checks of statements known not to hold in general (quoted variants kept
/// for comparison, and the Friedrich–Ivanov comparator). They are reported
/// but never decide a run.
pub fn is_informational(id: &str) -> bool {
    id.starts_with("quoted.") || id.starts_with("compare.friedrich-ivanov")
}

/// An ordered list of identity checks.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationRecord<S = Q> {
    pub checks: Vec<IdentityCheck<S>>,
}

impl<S: Scalar> Default for VerificationRecord<S> {
    fn default() -> Self {
        VerificationRecord { checks: Vec::new() }
    }
}

impl<S: Scalar> VerificationRecord<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: IdentityCheck<S>) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationRecord<S>) {
        self.checks.extend(other.checks);
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck<S>> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn get(&self, id: &str) -> Option<&IdentityCheck<S>> {
        self.checks.iter().find(|c| c.id == id)
    }
}
