//! Greedy 2-tone coloring of trees with the optimal palette.
//!
//! A nontrivial tree with maximum degree D has 2-tone chromatic number
//! ceil((5 + sqrt(8D + 1)) / 2), the smallest k with C(k-2, 2) >= D. Coloring
//! in breadth-first order, a vertex sees only its parent among colored
//! neighbors, so it has at least C(k-2, 2) candidate labels built from free
//! colors, while at most D - 1 colored second neighbors can each block one
//! exact label. The greedy pick therefore never gets stuck.

use thiserror::Error;

use crate::combi::subsets_lex;
use crate::graph::{distances_up_to, Graph};
use crate::labeling::Labeling;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is not a tree (n = {n}, m = {m}, connected = {connected})")]
    NotATree { n: usize, m: usize, connected: bool },
    #[error("a single vertex has no 2-tone palette requirement; need n >= 2")]
    SingleVertex,
}

/// Smallest k with (k - 2)(k - 3) >= 2 * max_degree.
pub fn tree_tone2_palette(max_degree: usize) -> usize {
    let mut k = 4;
    while (k - 2) * (k - 3) < 2 * max_degree {
        k += 1;
    }
    k
}

/// 2-tone coloring of a tree in breadth-first order from vertex 0, always a
/// lowest candidate label of free colors that no colored distance-two vertex
/// already holds. Uses exactly the closed-form palette.
pub fn color_tree_2tone(g: &Graph) -> Result<(usize, Labeling), TreeError> {
    let (n, m) = (g.n(), g.edge_count());
    if n == 1 {
        return Err(TreeError::SingleVertex);
    }
    if n == 0 || m != n - 1 || !g.is_connected() {
        return Err(TreeError::NotATree { n, m, connected: g.is_connected() });
    }
    let k = tree_tone2_palette(g.max_degree());
    let cands = subsets_lex(k, 2);
    let dist = distances_up_to(g, 2);

    let mut masks: Vec<Option<u64>> = vec![None; n];
    let order = {
        // Plain BFS from vertex 0, neighbors in ascending id order.
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    };
    for &v in &order {
        let mut blocked = 0u64;
        for &u in g.neighbors(v) {
            if let Some(mask) = masks[u] {
                blocked |= mask;
            }
        }
        let label = cands
            .iter()
            .copied()
            .find(|&c| {
                if c & blocked != 0 {
                    return false;
                }
                (0..n).all(|u| match (dist.get(v, u), masks[u]) {
                    (Some(2), Some(mask)) => mask != c,
                    _ => true,
                })
            })
            .expect("candidate count exceeds blocked second neighbors");
        masks[v] = Some(label);
    }
    let masks: Vec<u64> = masks.into_iter().map(Option::unwrap).collect();
    Ok((k, Labeling::from_masks(2, k, &masks)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{verify, VerifyMode};
    use crate::solver::{exact_tau, SearchBudget};

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn palette_formula_values() {
        assert_eq!(tree_tone2_palette(1), 4);
        assert_eq!(tree_tone2_palette(2), 5);
        assert_eq!(tree_tone2_palette(3), 5);
        assert_eq!(tree_tone2_palette(4), 6);
        assert_eq!(tree_tone2_palette(6), 6);
        assert_eq!(tree_tone2_palette(7), 7);
    }

    #[test]
    fn single_edge_gets_disjoint_pairs() {
        let (k, f) = color_tree_2tone(&path(2)).unwrap();
        assert_eq!(k, 4);
        assert_eq!(f.get(0), Some(&[1u16, 2][..]));
        assert_eq!(f.get(1), Some(&[3u16, 4][..]));
    }

    #[test]
    fn three_leaf_star_uses_five_colors() {
        let g = star(3);
        let (k, f) = color_tree_2tone(&g).unwrap();
        assert_eq!(k, 5);
        assert!(verify(&g, &f, VerifyMode::TTone).unwrap().valid());
        assert_eq!(exact_tau(&g, 2, SearchBudget::default()).unwrap().0, 5);
    }

    #[test]
    fn three_path_needs_five() {
        let (k, f) = color_tree_2tone(&path(3)).unwrap();
        assert_eq!(k, 5);
        assert!(verify(&path(3), &f, VerifyMode::TTone).unwrap().valid());
    }

    #[test]
    fn paths_and_stars_verify_and_match_the_oracle() {
        for n in 2..=9 {
            let g = path(n);
            let (k, f) = color_tree_2tone(&g).unwrap();
            assert!(verify(&g, &f, VerifyMode::TTone).unwrap().valid(), "path {n}");
            assert_eq!(k, exact_tau(&g, 2, SearchBudget::default()).unwrap().0, "path {n}");
        }
        for leaves in 1..=6 {
            let g = star(leaves);
            let (k, f) = color_tree_2tone(&g).unwrap();
            assert!(verify(&g, &f, VerifyMode::TTone).unwrap().valid(), "star {leaves}");
            assert_eq!(
                k,
                exact_tau(&g, 2, SearchBudget::default()).unwrap().0,
                "star {leaves}"
            );
        }
    }

    #[test]
    fn non_trees_are_rejected() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(color_tree_2tone(&g), Err(TreeError::NotATree { .. })));
        let lone = Graph::new(1, &[]).unwrap();
        assert_eq!(color_tree_2tone(&lone), Err(TreeError::SingleVertex));
    }
}
