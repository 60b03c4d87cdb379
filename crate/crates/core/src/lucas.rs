/// `binom(n, k) mod 2` by Lucas' theorem: odd iff every binary digit of `k`
/// is at most the matching digit of `n`. Zero when `k > n`.
#[inline]
pub fn lucas_binom(n: u64, k: u64) -> bool {
    k <= n && n & k == k
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn matches_pascal_triangle_mod_2() {
        let mut row = vec![true];
        for n in 0..=4096u64 {
            for (k, &bit) in row.iter().enumerate() {
                assert_eq!(lucas_binom(n, k as u64), bit, "binom({n},{k})");
            }
            assert!(!lucas_binom(n, n + 1));
            let mut next = vec![true; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] ^ row[k];
            }
            row = next;
        }
    }

    #[test]
    fn small_cases() {
        assert!(lucas_binom(7, 1) && lucas_binom(6, 2));
        assert!(!lucas_binom(2, 1));
        assert!(lucas_binom(12345, 0));
        assert!(!lucas_binom(3, 5));
        for t in 3..=20u32 {
            let n = (1u64 << t) - 5;
            assert!(lucas_binom(n, n - 1));
        }
        // binom(2^{t-1}, 3) is even
        assert!(!lucas_binom(8, 3));
    }
}
