//! Binomial coefficients and lexicographic subset enumeration.

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `sum_{i=0..=r} C(n, i)`, saturating.
pub fn binomial_prefix_sum(n: u128, r: u128) -> u128 {
    (0..=r).fold(0u128, |acc, i| acc.saturating_add(binomial(n, i)))
}

/// Advances `idx` (strictly increasing indices into `0..n`) to the next
/// combination in lexicographic order. Returns `false` after the last one.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < n - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every subset of `items` with at most `max` elements, by size
/// and then lexicographically by position, starting with the empty set.
pub fn for_each_subset_up_to<T: Copy>(items: &[T], max: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    let mut buf = Vec::with_capacity(max.min(n));
    for r in 0..=max.min(n) {
        let mut idx: Vec<usize> = (0..r).collect();
        loop {
            buf.clear();
            buf.extend(idx.iter().map(|&i| items[i]));
            f(&buf);
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
        assert_eq!(binomial_prefix_sum(4, 4), 16);
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset_up_to(&[7, 8, 9], 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![],
                vec![7],
                vec![8],
                vec![9],
                vec![7, 8],
                vec![7, 9],
                vec![8, 9]
            ]
        );
    }

    #[test]
    fn combinations_of_empty_set() {
        let mut count = 0;
        for_each_subset_up_to::<usize>(&[], 3, |_| count += 1);
        assert_eq!(count, 1);
    }
}
