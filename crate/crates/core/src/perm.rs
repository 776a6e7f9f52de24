//! Permutation enumeration in lexicographic order with incremental parity.

use alloc::vec::Vec;
use core::ops::ControlFlow;

/// Visits all permutations of `0..n` in lexicographic order. The callback
/// receives the permutation and whether it is even; returning
/// `ControlFlow::Break` stops the sweep.
///
/// Parity is maintained incrementally: a lexicographic step is one
/// transposition plus a suffix reversal of length `l`, flipping parity
/// `1 + l/2` times.
pub fn for_each_permutation<F>(n: usize, mut f: F)
where
    F: FnMut(&[usize], bool) -> ControlFlow<()>,
{
    if n == 0 {
        return;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut even = true;
    loop {
        if let ControlFlow::Break(()) = f(&perm, even) {
            return;
        }
        // Longest descending suffix starts at `i`.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        even = !even;
        let suffix = n - i;
        perm[i..].reverse();
        if (suffix / 2) % 2 == 1 {
            even = !even;
        }
    }
}

/// Whether a permutation is even, by cycle decomposition.
pub fn parity_even(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    let mut transpositions = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// Checks that `perm` is a bijection on `0..n`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}
