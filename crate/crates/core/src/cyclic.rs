//! Helpers for sequences read cyclically.

/// Start index of the lexicographically least rotation of `s`.
///
/// Two-pointer scan (Booth/Duval style), linear in `s.len()`. Returns 0 for
/// an empty slice.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &s[(i + k) % n];
        let b = &s[(j + k) % n];
        match a.cmp(b) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// The least rotation of `s` as a new vector.
pub fn canonical_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    rotated(s, least_rotation(s))
}

pub fn rotated<T: Clone>(s: &[T], start: usize) -> Vec<T> {
    s[start..].iter().chain(s[..start].iter()).cloned().collect()
}

/// Smallest `p > 0` such that rotating by `p` fixes `s`; `0` for empty input.
pub fn period<T: PartialEq>(s: &[T]) -> usize {
    let n = s.len();
    (1..=n)
        .find(|&p| n % p == 0 && (0..n).all(|i| s[i] == s[(i + p) % n]))
        .unwrap_or(0)
}

/// Cyclically consecutive pairs `(s[i], s[i+1])`, including the wrap-around.
pub fn cyclic_pairs<T>(s: &[T]) -> impl Iterator<Item = (usize, &T, &T)> + '_ {
    let n = s.len();
    (0..n).map(move |i| (i, &s[i], &s[(i + 1) % n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_least(s: &[u8]) -> Vec<u8> {
        (0..s.len().max(1))
            .map(|r| rotated(s, r.min(s.len())))
            .min()
            .unwrap_or_default()
    }

    #[test]
    fn small_cases() {
        assert_eq!(canonical_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_rotation(&[2, 1, 2, 1]), vec![1, 2, 1, 2]);
        assert_eq!(canonical_rotation::<u8>(&[]), Vec::<u8>::new());
        assert_eq!(period(&['a', 'b', 'a', 'b']), 2);
        assert_eq!(period(&['a', 'b', 'c']), 3);
        assert_eq!(period(&['a', 'a']), 1);
    }

    proptest! {
        #[test]
        fn least_rotation_matches_naive(s in proptest::collection::vec(0u8..3, 0..12)) {
            prop_assert_eq!(canonical_rotation(&s), naive_least(&s));
        }

        #[test]
        fn canonical_is_rotation_invariant(s in proptest::collection::vec(0u8..4, 1..10), r in 0usize..10) {
            let r = r % s.len();
            prop_assert_eq!(canonical_rotation(&s), canonical_rotation(&rotated(&s, r)));
        }
    }
}
