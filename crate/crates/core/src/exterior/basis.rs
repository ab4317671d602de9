//! Index bookkeeping for Λ^k(R^7)*.
//!
//! A basis monomial e_{i1}*∧…∧e_{ik}* with i1 < … < ik is encoded as the
//! 7-bit mask with those bits set. Within each degree the monomials are
//! ordered lexicographically by their index tuples.

use std::sync::OnceLock;

pub const DIM: usize = 7;

struct Tables {
    masks: [Vec<u8>; DIM + 1],
    rank: [u8; 1 << DIM],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut masks: [Vec<u8>; DIM + 1] = Default::default();
        let mut rank = [0u8; 1 << DIM];
        for (k, list) in masks.iter_mut().enumerate() {
            let mut tuple = Vec::with_capacity(k);
            push_combinations(0, k, &mut tuple, list);
            for (r, &m) in list.iter().enumerate() {
                rank[m as usize] = r as u8;
            }
        }
        Tables { masks, rank }
    })
}

fn push_combinations(start: usize, k: usize, tuple: &mut Vec<usize>, out: &mut Vec<u8>) {
    if tuple.len() == k {
        out.push(tuple.iter().fold(0u8, |m, &i| m | (1 << i)));
        return;
    }
    for i in start..DIM {
        tuple.push(i);
        push_combinations(i + 1, k, tuple, out);
        tuple.pop();
    }
}

/// C(7, k); zero above degree 7.
pub fn dim(k: usize) -> usize {
    if k > DIM {
        0
    } else {
        tables().masks[k].len()
    }
}

pub fn mask(k: usize, index: usize) -> u8 {
    tables().masks[k][index]
}

pub fn masks(k: usize) -> &'static [u8] {
    &tables().masks[k]
}

pub fn rank(mask: u8) -> usize {
    tables().rank[mask as usize] as usize
}

pub fn indices(mask: u8) -> impl Iterator<Item = usize> {
    (0..DIM).filter(move |&i| mask & (1 << i) != 0)
}

/// Sign of e_A ∧ e_B relative to the sorted monomial e_{A∪B}; zero on overlap.
pub fn wedge_sign(a: u8, b: u8) -> i8 {
    if a & b != 0 {
        return 0;
    }
    let inversions: u32 = indices(b)
        .map(|j| (a & !((1u8 << (j + 1)).wrapping_sub(1))).count_ones())
        .sum();
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of e_i ⌟ e_M for i ∈ M: (−1)^(position of i in M).
pub fn contraction_sign(i: usize, mask: u8) -> i8 {
    if (mask & ((1u8 << i) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sorted mask and permutation sign of an unsorted index list, `None` if an
/// index repeats. Indices are reduced mod 7.
pub fn sort_indices(idx: &[usize]) -> Option<(u8, i8)> {
    let mut mask = 0u8;
    let mut sign = 1i8;
    for &raw in idx {
        let i = raw % DIM;
        if mask & (1 << i) != 0 {
            return None;
        }
        // every earlier index larger than i is an inversion
        if (mask >> (i + 1)).count_ones() % 2 == 1 {
            sign = -sign;
        }
        mask |= 1 << i;
    }
    Some((mask, sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_are_binomials() {
        let dims: Vec<usize> = (0..=8).map(dim).collect();
        assert_eq!(dims, vec![1, 7, 21, 35, 35, 21, 7, 1, 0]);
    }

    #[test]
    fn lexicographic_order() {
        let first: Vec<Vec<usize>> = masks(3)
            .iter()
            .take(3)
            .map(|&m| indices(m).collect())
            .collect();
        assert_eq!(first, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
        let last: Vec<usize> = indices(*masks(3).last().unwrap()).collect();
        assert_eq!(last, vec![4, 5, 6]);
        for k in 0..=DIM {
            for (r, &m) in masks(k).iter().enumerate() {
                assert_eq!(rank(m), r);
            }
        }
    }

    #[test]
    fn signs() {
        assert_eq!(sort_indices(&[1, 0]), Some((0b11, -1)));
        assert_eq!(sort_indices(&[4, 5, 0]), Some((0b110001, 1)));
        assert_eq!(sort_indices(&[6, 0, 2]), Some((0b1000101, 1)));
        assert_eq!(sort_indices(&[3, 10]), None);
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        assert_eq!(wedge_sign(0b11, 0b10), 0);
        assert_eq!(contraction_sign(2, 0b111), 1);
        assert_eq!(contraction_sign(1, 0b111), -1);
    }
}
