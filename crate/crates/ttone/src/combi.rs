//! Small subset utilities shared by the solver and the colorers.
//!
//! Labels are `t`-element subsets of `{1..=k}` stored as `u64` bitmasks with
//! color `c` at bit `c - 1`. Enumeration order is lexicographic on the sorted
//! color tuple, which the search code relies on for determinism.

/// All t-element subsets of `{1..=k}` as bitmasks, lexicographic on the
/// sorted tuple: 12, 13, ..., 1k, 23, 24, ...
pub(crate) fn subsets_lex(k: usize, t: usize) -> Vec<u64> {
    assert!(k <= 63, "palette too large for mask representation");
    let mut out = Vec::new();
    let mut current = 0u64;
    fn rec(out: &mut Vec<u64>, current: &mut u64, next: usize, k: usize, left: usize) {
        if left == 0 {
            out.push(*current);
            return;
        }
        for c in next..=(k - left + 1) {
            *current |= 1 << (c - 1);
            rec(out, current, c + 1, k, left - 1);
            *current &= !(1 << (c - 1));
        }
    }
    if t <= k {
        rec(&mut out, &mut current, 1, k, t);
    }
    out
}

pub(crate) fn mask_of_colors(colors: &[u16]) -> u64 {
    let mut m = 0u64;
    for &c in colors {
        m |= 1 << (c - 1);
    }
    m
}

pub(crate) fn colors_of_mask(mut mask: u64) -> Vec<u16> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let b = mask.trailing_zeros() as u16;
        out.push(b + 1);
        mask &= mask - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_of_four_in_lex_order() {
        let got: Vec<Vec<u16>> = subsets_lex(4, 2).into_iter().map(colors_of_mask).collect();
        let want = vec![
            vec![1, 2],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 4],
            vec![3, 4],
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn mask_round_trip() {
        let m = mask_of_colors(&[2, 5, 11]);
        assert_eq!(colors_of_mask(m), vec![2, 5, 11]);
    }

    #[test]
    fn counts_match_binomials() {
        assert_eq!(subsets_lex(5, 2).len(), 10);
        assert_eq!(subsets_lex(11, 3).len(), 165);
        assert_eq!(subsets_lex(3, 3).len(), 1);
    }
}
