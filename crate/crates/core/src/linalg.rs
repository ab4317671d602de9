//! Small dense Gaussian elimination over a [`Scalar`] field.

use crate::scalar::Scalar;

fn max_abs<S: Scalar>(rows: &[Vec<S>]) -> S {
    rows.iter().flatten().fold(S::one(), |m, x| {
        let a = x.abs();
        if a > m {
            a
        } else {
            m
        }
    })
}

/// Reduced row echelon form in place, pivoting only in the first `ncols`
/// columns (any further columns ride along); returns the pivot columns.
pub fn rref<S: Scalar>(m: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let scale = max_abs(m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let best = (row..m.len())
            .filter(|&r| !m[r][col].is_negligible(&scale))
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(p) = best else { continue };
        m.swap(row, p);
        let inv = S::one() / m[row][col].clone();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..m[r].len() {
                let delta = factor.mul_ref(&m[row][c]);
                m[r][c] -= &delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// A basis of { x : rows · x = 0 }.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![S::zero(); ncols];
            x[f] = S::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Solves the square system a·x = b; `None` when singular.
pub fn solve<S: Scalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Least-squares coefficients c minimising |Σ c_k v_k − target| via the
/// normal equations; `None` if the vectors are dependent.
pub fn least_squares<S: Scalar>(vectors: &[Vec<S>], target: &[S]) -> Option<Vec<S>> {
    let dot = |a: &[S], b: &[S]| {
        let mut acc = S::zero();
        for (x, y) in a.iter().zip(b) {
            if !x.is_zero() && !y.is_zero() {
                acc.add_product(x, y);
            }
        }
        acc
    };
    let gram: Vec<Vec<S>> = vectors
        .iter()
        .map(|u| vectors.iter().map(|v| dot(u, v)).collect())
        .collect();
    let rhs: Vec<S> = vectors.iter().map(|u| dot(u, target)).collect();
    solve(&gram, &rhs)
}

/// Determinant by elimination.
pub fn determinant<S: Scalar>(a: &[Vec<S>]) -> S {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = S::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return S::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = S::one() / m[col][col].clone();
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].mul_ref(&inv);
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor.mul_ref(p);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn solves_exactly() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(&a, &[q(1), q(2)]).unwrap();
        assert_eq!(x, vec![Q::ratio(1, 5), Q::ratio(3, 5)]);
        assert!(solve(&[vec![q(1), q(2)], vec![q(2), q(4)]], &[q(0), q(0)]).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let rows = vec![vec![q(1), q(1), q(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(v.iter().cloned().fold(q(0), |a, b| a + b), q(0));
        }
    }

    #[test]
    fn determinant_matches_cofactor() {
        let a = vec![
            vec![q(2), q(-1), q(0)],
            vec![q(1), q(3), q(4)],
            vec![q(0), q(5), q(-2)],
        ];
        // 2(−6 − 20) + 1(−2 − 0) = −54
        assert_eq!(determinant(&a), q(-54));
    }
}
