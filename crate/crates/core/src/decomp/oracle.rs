//! Independent projection oracle: builds explicit spanning sets of the four
//! modules and projects orthogonally by an exact normal-equations solve.
//! Slow; meant for tests and the verification harness only.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::Module;
use crate::cayley::{a_v, cyclic_pair};
use crate::endo::Endo7;
use crate::exterior::Vec7;
use crate::linalg;
use crate::record::{IdentityCheck, VerificationRecord};
use crate::scalar::{Scalar, Q};

struct Subspace {
    basis: Vec<Endo7<Q>>,
    gram_inv: Vec<Vec<Q>>,
}

fn upper_pairs() -> Vec<(usize, usize)> {
    (0..7)
        .flat_map(|i| ((i + 1)..7).map(move |j| (i, j)))
        .collect()
}

/// Kernel of the seven cyclic sums on the antisymmetric matrices.
fn g2_basis() -> Vec<Endo7<Q>> {
    let pairs = upper_pairs();
    let rows: Vec<Vec<Q>> = (0..7)
        .map(|i| {
            let mut row = vec![Q::zero(); pairs.len()];
            for k in 0..3 {
                let (r, s) = cyclic_pair(i, k);
                let (pos, sign) = match pairs.iter().position(|&p| p == (r, s)) {
                    Some(pos) => (pos, Q::one()),
                    None => (pairs.iter().position(|&p| p == (s, r)).unwrap(), -Q::one()),
                };
                row[pos] += &sign;
            }
            row
        })
        .collect();
    linalg::nullspace(&rows, pairs.len())
        .into_iter()
        .map(|x| {
            let mut a = Endo7::zero();
            for (&(i, j), c) in pairs.iter().zip(x) {
                a.set(j, i, -c.clone());
                a.set(i, j, c);
            }
            a
        })
        .collect()
}

fn s0_basis() -> Vec<Endo7<Q>> {
    let mut out = Vec::new();
    for (i, j) in upper_pairs() {
        out.push(&Endo7::elementary(i, j) + &Endo7::elementary(j, i));
    }
    for i in 0..6 {
        out.push(&Endo7::elementary(i, i) - &Endo7::elementary(6, 6));
    }
    out
}

fn build(module: Module) -> Subspace {
    let basis = match module {
        Module::X1 => vec![Endo7::identity()],
        Module::X2 => g2_basis(),
        Module::X3 => s0_basis(),
        Module::X4 => (0..7).map(|i| a_v(&Vec7::basis(i))).collect(),
    };
    assert_eq!(
        basis.len(),
        module.dimension(),
        "spanning set of {module} has wrong size"
    );
    let n = basis.len();
    let gram: Vec<Vec<Q>> = basis
        .iter()
        .map(|u| basis.iter().map(|v| u.tensor_inner(v)).collect())
        .collect();
    let mut columns = Vec::with_capacity(n);
    for k in 0..n {
        let mut unit = vec![Q::zero(); n];
        unit[k] = Q::one();
        columns.push(
            linalg::solve(&gram, &unit)
                .unwrap_or_else(|| panic!("basis of {module} is rank deficient")),
        );
    }
    let gram_inv = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    Subspace { basis, gram_inv }
}

fn subspace(module: Module) -> &'static Subspace {
    static CACHE: [OnceLock<Subspace>; 4] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    CACHE[module.index()].get_or_init(|| build(module))
}

/// The spanning set used for `module` (sizes 1, 14, 27, 7).
pub fn oracle_basis(module: Module) -> &'static [Endo7<Q>] {
    &subspace(module).basis
}

/// Orthogonal projection of `a` onto `module`.
pub fn oracle_project(a: &Endo7<Q>, module: Module) -> Endo7<Q> {
    let sub = subspace(module);
    let rhs: Vec<Q> = sub.basis.iter().map(|b| b.tensor_inner(a)).collect();
    let mut out = Endo7::zero();
    for (row, b) in sub.gram_inv.iter().zip(&sub.basis) {
        let mut c = Q::zero();
        for (g, r) in row.iter().zip(&rhs) {
            if !g.is_zero() && !r.is_zero() {
                c += &(g * r);
            }
        }
        if !c.is_zero() {
            out = &out + &b.scaled(&c);
        }
    }
    out
}

/// Closed-form components of `a` (computed in `S`) against the oracle
/// projections (computed exactly, then converted).
pub fn oracle_checks<S: Scalar>(a: &Endo7<Q>) -> VerificationRecord<S> {
    let cast = |m: &Endo7<Q>| Endo7::<S>::from_fn(|i, j| S::from_q(m.at(i, j)));
    let closed = super::components(&cast(a));
    let mut rec = VerificationRecord::new();
    for (module, id) in Module::ALL.into_iter().zip([
        "decomp.oracle-x1",
        "decomp.oracle-x2",
        "decomp.oracle-x3",
        "decomp.oracle-x4",
    ]) {
        let oracle = cast(&oracle_project(a, module));
        rec.push(IdentityCheck::endo(
            id,
            "closed-form projector = orthogonal projection onto the spanning set",
            closed.get(module),
            &oracle,
        ));
    }
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::is_in_g2;
    use crate::linalg::rank;

    #[test]
    fn dimensions_add_to_49() {
        let sizes: Vec<usize> = Module::ALL.iter().map(|&m| oracle_basis(m).len()).collect();
        assert_eq!(sizes, vec![1, 14, 27, 7]);
        let all: Vec<Vec<Q>> = Module::ALL
            .iter()
            .flat_map(|&m| oracle_basis(m).iter())
            .map(|b| b.rows().iter().flatten().cloned().collect())
            .collect();
        assert_eq!(rank(&all, 49), 49);
        assert!(oracle_basis(Module::X2).iter().all(is_in_g2));
    }

    #[test]
    fn trivial_projections() {
        assert_eq!(
            oracle_project(&Endo7::identity(), Module::X1),
            Endo7::identity()
        );
        let av = a_v(&Vec7::from_ints([1, 2, 0, -1, 3, 0, 5]));
        assert!(oracle_project(&av, Module::X2).is_zero());
        assert_eq!(oracle_project(&av, Module::X4), av);
    }
}
