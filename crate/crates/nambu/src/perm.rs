//! Permutation parity, the Levi-Civita symbol and signed shuffle
//! enumeration.
//!
//! Alternating sums over a symmetric group `S_m` whose summand is totally
//! antisymmetric inside two blocks collapse to a sum over block shuffles;
//! [`split_signs`] enumerates those shuffles with their signs so the checkers
//! can avoid the full `m!` enumeration without changing any value.

use itertools::Itertools;

use crate::error::NambuError;

/// Sorts `values` ascending and returns the parity of the sorting
/// permutation, or `None` if two values coincide.
pub fn sorted_with_sign(values: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = values.to_vec();
    let mut sign = 1i8;
    // Insertion sort with transposition counting; inputs are tiny.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// Parity of a permutation of `1..=k` in one-line notation: `+1` for even,
/// `-1` for odd.  Errors if the input is not a permutation.
pub fn levi_civita_parity(perm: &[usize]) -> Result<i8, NambuError> {
    let k = perm.len();
    let mut seen = vec![false; k];
    for &v in perm {
        if v == 0 || v > k {
            return Err(NambuError::NotAPermutation {
                len: k,
                reason: format!("value {v} out of range"),
            });
        }
        if seen[v - 1] {
            return Err(NambuError::NotAPermutation {
                len: k,
                reason: format!("value {v} repeated"),
            });
        }
        seen[v - 1] = true;
    }
    Ok(sorted_with_sign(perm).expect("repeats were ruled out").1)
}

/// Totally antisymmetric symbol on index tuples with values in `1..=n`:
/// the parity of the tuple as a permutation-up-to-sorting, or `0` on repeats.
pub fn epsilon_symbol(indices: &[usize]) -> i8 {
    match sorted_with_sign(indices) {
        Some((_, sign)) => sign,
        None => 0,
    }
}

/// All permutations of `1..=k` in lexicographic order, with parity.
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    (1..=k)
        .permutations(k)
        .map(|p| {
            let sign = sorted_with_sign(&p).expect("permutations have no repeats").1;
            (p, sign)
        })
        .collect()
}

/// All ways of splitting positions `0..m` into an ascending block of size
/// `k` and its ascending complement, with the sign of the block shuffle
/// (the permutation `[block, complement]` of `0..m`).
pub fn split_signs(m: usize, k: usize) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    (0..m)
        .combinations(k)
        .map(|block| {
            let complement: Vec<usize> = (0..m).filter(|i| !block.contains(i)).collect();
            // Parity of [block, complement]: inversions are exactly the
            // pairs (b, c) with b in the block, c in the complement, b > c.
            let inversions = block
                .iter()
                .map(|&b| complement.iter().filter(|&&c| b > c).count())
                .sum::<usize>();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (block, complement, sign)
        })
        .collect()
}

/// `k!` as a u64 (checker block sizes are tiny).
pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}
