//! Constructive colorings of cycles.
//!
//! Cycles need six colors for a 2-tone coloring exactly when their length is
//! 3, 4, or 7, and five otherwise. Those three short cycles get explicit
//! good 2-tone 6-colorings; all other lengths are colored with five colors
//! by a transfer-matrix sweep over consecutive label pairs. In five colors,
//! any 2-tone coloring makes distance-two vertices share a color (disjoint
//! labels would leave no label for their common neighbor), so the 5-color
//! output is automatically good. The 3-good 11-coloring follows the
//! inductive construction: contract one vertex of a long cycle, color the
//! shorter cycle, then reinsert and repair a bounded window by search.

use thiserror::Error;

use crate::combi::{mask_of_colors, subsets_lex};
use crate::graph::Graph;
use crate::labeling::Labeling;
use crate::solver::{extend_escalating, PairRule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleScheme {
    /// 2-tone with the optimal palette: 6 colors for lengths 3, 4, 7,
    /// otherwise 5.
    Tone,
    /// Good 2-tone with at most 6 colors.
    Good6,
    /// 3-good with 11 colors.
    ThreeGood11,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycles need at least 3 vertices, got {n}")]
    TooShort { n: usize },
    #[error("no valid window repair while extending a cycle coloring at n = {n}")]
    Internal { n: usize },
}

pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle edges are simple")
}

/// Closed-form 2-tone chromatic number of the n-cycle.
pub fn cycle_tau2(n: usize) -> usize {
    if matches!(n, 3 | 4 | 7) {
        6
    } else {
        5
    }
}

/// Labels vertices 0..n in cyclic order. The result always passes the
/// verifier for the matching mode, which the unit tests assert across a
/// range of lengths.
pub fn color_cycle(n: usize, scheme: CycleScheme) -> Result<(usize, Labeling), CycleError> {
    if n < 3 {
        return Err(CycleError::TooShort { n });
    }
    match scheme {
        CycleScheme::Tone | CycleScheme::Good6 => match n {
            3 => Ok((6, explicit(&[&[1, 2], &[3, 4], &[5, 6]]))),
            4 => Ok((6, explicit(&[&[1, 2], &[3, 4], &[1, 5], &[3, 6]]))),
            7 => Ok((
                6,
                explicit(&[&[1, 2], &[3, 4], &[1, 5], &[2, 4], &[1, 3], &[2, 5], &[3, 6]]),
            )),
            _ => Ok((5, five_color_sweep(n))),
        },
        CycleScheme::ThreeGood11 => {
            let masks = three_good_masks(n)?;
            Ok((11, Labeling::from_masks(3, 11, &masks)))
        }
    }
}

fn explicit(labels: &[&[u16]]) -> Labeling {
    Labeling::total(2, 6, labels.iter().map(|l| l.to_vec()).collect())
}

/// Five-color 2-tone sweep for n >= 5, n != 7. States are the ten 2-subsets
/// of {1..=5}; a step from (prev, cur) to next needs next disjoint from cur
/// and different from prev. The wrap constraints tie positions n-2 and n-1
/// back to 0 and 1. The first vertex is pinned to {1,2}; reachability runs
/// backward so the forward walk can always pick the lexicographically
/// smallest feasible label.
fn five_color_sweep(n: usize) -> Labeling {
    let labels = subsets_lex(5, 2);
    let m = labels.len();
    let step_ok = |a: usize, b: usize| labels[a] & labels[b] == 0;
    let skip_ok = |a: usize, b: usize| a != b;

    let s0 = 0; // {1,2}
    for s1 in 0..m {
        if !step_ok(s0, s1) {
            continue;
        }
        let idx = |p: usize, c: usize| p * m + c;
        // feasible[i][(prev, cur)]: labels for positions i..n can be chosen,
        // respecting the wrap constraints against s0 and s1. Index i is the
        // next position to fill; i == n is the wrap check itself.
        let mut feasible = vec![vec![false; m * m]; n + 1];
        for p in 0..m {
            for c in 0..m {
                feasible[n][idx(p, c)] = step_ok(c, s0) && skip_ok(p, s0) && skip_ok(c, s1);
            }
        }
        for i in (2..n).rev() {
            for p in 0..m {
                for c in 0..m {
                    feasible[i][idx(p, c)] = (0..m).any(|nx| {
                        step_ok(c, nx) && skip_ok(p, nx) && feasible[i + 1][idx(c, nx)]
                    });
                }
            }
        }
        if !feasible[2][idx(s0, s1)] {
            continue;
        }
        let mut seq = vec![s0, s1];
        for i in 2..n {
            let (p, c) = (seq[i - 2], seq[i - 1]);
            let next = (0..m)
                .find(|&nx| step_ok(c, nx) && skip_ok(p, nx) && feasible[i + 1][idx(c, nx)])
                .expect("forward walk through a feasible table");
            seq.push(next);
        }
        let masks: Vec<u64> = seq.into_iter().map(|s| labels[s]).collect();
        return Labeling::from_masks(2, 5, &masks);
    }
    unreachable!("every cycle length outside {{3,4,7}} admits a five-color sweep")
}

fn three_good_masks(n: usize) -> Result<Vec<u64>, CycleError> {
    match n {
        3 => Ok(vec![
            mask_of_colors(&[1, 2, 3]),
            mask_of_colors(&[4, 5, 6]),
            mask_of_colors(&[7, 8, 9]),
        ]),
        4 => Ok(vec![
            mask_of_colors(&[1, 2, 3]),
            mask_of_colors(&[4, 5, 6]),
            mask_of_colors(&[1, 7, 8]),
            mask_of_colors(&[4, 9, 10]),
        ]),
        _ => {
            // Drop vertex 1, close the shorter cycle, then reinsert it. The
            // shorter coloring leaves the old neighbors 0 and 2 disjoint, so
            // the repair window must include vertex 2 (or 0) as well.
            let shorter = three_good_masks(n - 1)?;
            let g = cycle_graph(n);
            let mut labels: Vec<Option<u64>> = Vec::with_capacity(n);
            labels.push(Some(shorter[0]));
            labels.push(None);
            labels.extend(shorter[1..].iter().map(|&m| Some(m)));

            let scopes: Vec<Vec<usize>> = vec![
                vec![1, 2],
                vec![1, 2, 0],
                vec![1, 2, 0, 3],
                vec![1, 2, 0, 3, n - 1],
            ];
            match extend_escalating(&g, PairRule::GoodThree, 11, &mut labels, &scopes, 5_000_000) {
                Some(_) => Ok(labels.into_iter().map(Option::unwrap).collect()),
                None => Err(CycleError::Internal { n }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{verify, VerifyMode};

    fn colors(l: &Labeling, v: usize) -> Vec<u16> {
        l.get(v).unwrap().to_vec()
    }

    #[test]
    fn four_cycle_good_coloring_is_the_known_one() {
        let (k, f) = color_cycle(4, CycleScheme::Good6).unwrap();
        assert_eq!(k, 6);
        assert_eq!(colors(&f, 0), vec![1, 2]);
        assert_eq!(colors(&f, 1), vec![3, 4]);
        assert_eq!(colors(&f, 2), vec![1, 5]);
        assert_eq!(colors(&f, 3), vec![3, 6]);
    }

    #[test]
    fn seven_cycle_good_coloring_is_the_known_one() {
        let (k, f) = color_cycle(7, CycleScheme::Good6).unwrap();
        assert_eq!(k, 6);
        let want: Vec<Vec<u16>> = vec![
            vec![1, 2],
            vec![3, 4],
            vec![1, 5],
            vec![2, 4],
            vec![1, 3],
            vec![2, 5],
            vec![3, 6],
        ];
        for (v, w) in want.iter().enumerate() {
            assert_eq!(&colors(&f, v), w);
        }
        assert!(verify(&cycle_graph(7), &f, VerifyMode::GoodTwoTone).unwrap().valid());
    }

    #[test]
    fn five_cycle_uses_five_colors() {
        let (k, f) = color_cycle(5, CycleScheme::Tone).unwrap();
        assert_eq!(k, 5);
        let report = verify(&cycle_graph(5), &f, VerifyMode::TTone).unwrap();
        assert!(report.valid(), "violations: {:?}", report.violations);
    }

    #[test]
    fn triangle_three_good_base_case() {
        let (k, f) = color_cycle(3, CycleScheme::ThreeGood11).unwrap();
        assert_eq!(k, 11);
        assert_eq!(colors(&f, 0), vec![1, 2, 3]);
        assert_eq!(colors(&f, 1), vec![4, 5, 6]);
        assert_eq!(colors(&f, 2), vec![7, 8, 9]);
    }

    #[test]
    fn all_schemes_verify_for_a_range_of_lengths() {
        for n in 3..=40 {
            let g = cycle_graph(n);
            let (k, f) = color_cycle(n, CycleScheme::Tone).unwrap();
            assert_eq!(k, cycle_tau2(n));
            assert!(verify(&g, &f, VerifyMode::TTone).unwrap().valid(), "tone n={n}");
            assert!(f.max_color_used() as usize <= k);

            let (k, f) = color_cycle(n, CycleScheme::Good6).unwrap();
            assert!(k <= 6);
            assert!(
                verify(&g, &f, VerifyMode::GoodTwoTone).unwrap().valid(),
                "good n={n}"
            );

            let (k, f) = color_cycle(n, CycleScheme::ThreeGood11).unwrap();
            assert_eq!(k, 11);
            assert!(
                verify(&g, &f, VerifyMode::ThreeGood).unwrap().valid(),
                "3-good n={n}"
            );
            assert!(
                verify(&g, &f, VerifyMode::TTone).unwrap().valid(),
                "3-good as 3-tone n={n}"
            );
        }
    }

    #[test]
    fn too_short_is_rejected() {
        assert_eq!(color_cycle(2, CycleScheme::Tone), Err(CycleError::TooShort { n: 2 }));
    }
}
