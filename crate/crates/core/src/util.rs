//! Small shared helpers.

/// Visits every `k`-subset of `0..n` in lexicographic order of index tuples.
///
/// The callback returns `Some(r)` to stop the enumeration early with `r`.
pub(crate) fn for_each_combination<R>(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> Option<R>,
) -> Option<R> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if let Some(r) = f(&idx) {
            return Some(r);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visits subsets of `0..n` by increasing cardinality, lexicographic within a
/// cardinality, optionally capped at `max_size` (inclusive).
pub(crate) fn for_each_subset_ascending<R>(
    n: usize,
    max_size: usize,
    mut f: impl FnMut(&[usize]) -> Option<R>,
) -> Option<R> {
    for k in 0..=max_size.min(n) {
        if let Some(r) = for_each_combination(n, k, &mut f) {
            return Some(r);
        }
    }
    None
}
