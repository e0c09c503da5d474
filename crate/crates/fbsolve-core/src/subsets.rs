//! Subset enumeration helpers shared by the exact solvers and oracles.
//!
//! All solvers enumerate candidate sets in ascending size and
//! lexicographically within each size, so returned witnesses are
//! deterministic and minimum-cardinality.

use alloc::vec::Vec;

/// Calls `f` with each size-`r` index combination of `0..n` in
/// lexicographic order until `f` returns `Some`. The combination slice
/// is strictly increasing.
pub fn find_combination<T>(
    n: usize,
    r: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if r > n {
        return None;
    }
    let mut combo: Vec<usize> = (0..r).collect();
    loop {
        if let Some(t) = f(&combo) {
            return Some(t);
        }
        // Advance to the next combination.
        let mut i = r;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if combo[i] != i + n - r {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        combo[i] += 1;
        for j in i + 1..r {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Enumerates subsets of `0..n` in ascending size `0..=max_size`,
/// lexicographic within each size, until `f` returns `Some`.
pub fn find_subset_ascending<T>(
    n: usize,
    max_size: usize,
    mut f: impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    for r in 0..=max_size.min(n) {
        if let Some(t) = find_combination(n, r, &mut f) {
            return Some(t);
        }
    }
    None
}

/// Visits every subset of `0..n` in ascending size then lexicographic
/// order (no early exit).
pub fn for_each_subset_ascending(n: usize, max_size: usize, mut f: impl FnMut(&[usize])) {
    find_subset_ascending::<()>(n, max_size, |combo| {
        f(combo);
        None
    });
}

/// `C(n, r)` saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of subsets of size at most `k` of an `n`-element set,
/// saturating.
pub fn subsets_up_to(n: usize, k: usize) -> u128 {
    let mut acc: u128 = 0;
    for r in 0..=k.min(n) {
        acc = acc.saturating_add(binomial(n, r));
    }
    acc
}
