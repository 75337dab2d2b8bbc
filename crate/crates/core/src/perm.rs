//! Multiset permutations of small integer arrays.

/// Rearranges `v` into the next lexicographically larger permutation;
/// returns `false` (leaving `v` sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `f` once for every distinct rearrangement of `v`.
pub fn for_each_distinct<T: Ord + Clone, const N: usize>(v: &[T; N], mut f: impl FnMut(&[T; N])) {
    let mut cur = v.clone();
    cur.sort();
    loop {
        f(&cur);
        if !next_permutation(&mut cur) {
            break;
        }
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `N! / Π mult!` for the multiset of entries.
pub fn distinct_count<T: Ord + Clone>(v: &[T]) -> u64 {
    let mut s = v.to_vec();
    s.sort();
    let mut total = factorial(s.len() as u64);
    let mut run = 1u64;
    for w in s.windows(2) {
        if w[0] == w[1] {
            run += 1;
            total /= run;
        } else {
            run = 1;
        }
    }
    total
}
