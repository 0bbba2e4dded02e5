//! 2-tone colorings of Halin graphs.
//!
//! Cubic Halin graphs of order at least six take at most seven colors: color
//! the internal tree with five colors, walk the rim assigning L-labels (one
//! color from {6,7} plus one from {1..5}), and close the cycle with a small
//! case analysis around the deepest fan. General Halin graphs take at most
//! `max(10, ceil((13 + sqrt(8*maxdeg - 15)) / 2))` colors by shrinking the
//! deepest fan, recursing, and re-inserting the removed leaves greedily;
//! wheels are the base case, solved by a bounded search over the rim.

use thiserror::Error;

use crate::combi::subsets_lex;
use crate::graph::{distances_up_to, DistanceTable, Graph};
use crate::halin::{deepest_fan, FanDecomposition, HalinError, HalinStructure};
use crate::labeling::{verify, Labeling, VerifyMode};
use crate::trees::color_tree_2tone;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HalinColorError {
    #[error("vertex {v} has degree {degree}; the cubic colorer needs a 3-regular graph")]
    NotCubic { v: usize, degree: usize },
    #[error("cubic colorer needs order n >= 6, got {n}")]
    TooSmallCubic { n: usize },
    #[error("maximum degree must be at least 3, got {delta}")]
    DegreeTooSmall { delta: usize },
    #[error("halin structure error: {0}")]
    Structure(#[from] HalinError),
    #[error("no valid label during {stage}; this is a bug")]
    Internal { stage: &'static str },
}

/// `max(10, ceil((13 + sqrt(8*delta - 15)) / 2))`, evaluated exactly: the
/// ceiling term is the smallest k with (2k - 13)^2 >= 8*delta - 15.
pub fn halin_bound(delta: usize) -> Result<usize, HalinColorError> {
    if delta < 3 {
        return Err(HalinColorError::DegreeTooSmall { delta });
    }
    let d = 8 * delta - 15;
    let mut k = 7;
    while (2 * k - 13) * (2 * k - 13) < d {
        k += 1;
    }
    Ok(k.max(10))
}

/// Closed-form 2-tone chromatic number of the wheel with `d` rim vertices.
pub fn wheel_tau2(d: usize) -> usize {
    match d {
        5 | 6 | 8 | 9 => 7,
        3 | 4 | 7 => 8,
        10..=15 => 8,
        _ => {
            // Smallest k with (2k - 5)^2 >= 8d + 1.
            let mut k = 8;
            while (2 * k - 5) * (2 * k - 5) < 8 * d + 1 {
                k += 1;
            }
            k
        }
    }
}

fn pair_valid(
    dist: &DistanceTable,
    masks: &[Option<u64>],
    v: usize,
    cand: u64,
    skip: Option<usize>,
) -> bool {
    for u in 0..masks.len() {
        if u == v || Some(u) == skip {
            continue;
        }
        let Some(m) = masks[u] else { continue };
        match dist.get(v, u) {
            Some(1) => {
                if cand & m != 0 {
                    return false;
                }
            }
            Some(2) => {
                if (cand & m).count_ones() >= 2 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Cubic case.
// ---------------------------------------------------------------------------

/// 2-tone coloring of a cubic Halin graph of order n >= 6 with at most seven
/// colors. The returned k is the largest color actually used.
pub fn color_cubic_halin7(h: &HalinStructure) -> Result<(usize, Labeling), HalinColorError> {
    let g = h.graph();
    let n = g.n();
    for v in 0..n {
        if g.degree(v) != 3 {
            return Err(HalinColorError::NotCubic { v, degree: g.degree(v) });
        }
    }
    if n < 6 {
        return Err(HalinColorError::TooSmallCubic { n });
    }

    // Internal tree, colored with at most five colors.
    let internals = h.internal_vertices().to_vec();
    let local_of: std::collections::HashMap<usize, usize> =
        internals.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let tree_edges_local: Vec<(usize, usize)> = h
        .tree_edges()
        .iter()
        .filter(|&&(u, v)| local_of.contains_key(&u) && local_of.contains_key(&v))
        .map(|&(u, v)| (local_of[&u], local_of[&v]))
        .collect();
    let t_prime = Graph::new(internals.len(), &tree_edges_local).expect("internal tree");
    let (_, tree_coloring) =
        color_tree_2tone(&t_prime).map_err(|_| HalinColorError::Internal { stage: "tree" })?;

    let mut masks: Vec<Option<u64>> = vec![None; n];
    let tree_masks = tree_coloring.masks();
    for (i, &v) in internals.iter().enumerate() {
        masks[v] = tree_masks[i];
    }

    let root = internals[0];
    let fan = deepest_fan(h, root)?;
    debug_assert_eq!(fan.leaf_run.len(), 2, "cubic fans have exactly two leaves");
    let dist = distances_up_to(g, 2);

    // Rim sequence starting at the second fan leaf and ending at the first,
    // so the two fan leaves are the first and last entries.
    let leaf_order = h.leaf_order();
    let nl = leaf_order.len();
    let start = leaf_order
        .iter()
        .position(|&l| l == fan.leaf_run[1])
        .expect("fan leaf on the cycle");
    let xs: Vec<usize> = (0..nl).map(|i| leaf_order[(start + i) % nl]).collect();
    let x = fan.x;
    let y = fan.parent;

    // First fan leaf: a pair of colors from {1..5} free at it.
    let five = subsets_lex(5, 2);
    let x_mask = masks[x].unwrap();
    let first = five
        .iter()
        .copied()
        .find(|&c| c & x_mask == 0 && pair_valid(&dist, &masks, xs[0], c, None))
        .ok_or(HalinColorError::Internal { stage: "first fan leaf" })?;
    masks[xs[0]] = Some(first);

    // Remaining rim except the closing leaf: L-labels in cyclic order.
    for i in 1..nl - 1 {
        let v = xs[i];
        let mut chosen = None;
        'outer: for c in 1..=5u32 {
            for hi in [6u32, 7] {
                let cand = (1u64 << (c - 1)) | (1u64 << (hi - 1));
                if pair_valid(&dist, &masks, v, cand, None) {
                    chosen = Some(cand);
                    break 'outer;
                }
            }
        }
        masks[v] = Some(chosen.ok_or(HalinColorError::Internal { stage: "rim L-label" })?);
    }

    // Normalize so f(x) = {1,2}, f(x1) = {3,4}, f(y) = {3,5} and the
    // L-label before the closing leaf contains 6, run the closing case
    // analysis, then undo the renaming.
    let perm = normalizing_permutation(
        masks[x].unwrap(),
        masks[xs[0]].unwrap(),
        masks[y].unwrap(),
        masks[xs[nl - 2]].unwrap(),
    );
    for m in masks.iter_mut().flatten() {
        *m = apply_perm(*m, &perm);
    }

    // The fan center moves to {6,7}; with every rim label holding at most
    // one color from {6,7}, this is always valid.
    let x67 = 0b11 << 5;
    debug_assert!(pair_valid(&dist, &masks, x, x67, None));
    masks[x] = Some(x67);

    let closing = xs[nl - 1];
    let mut done = false;
    let x1_current = masks[xs[0]].unwrap();
    let mut x1_options = vec![x1_current];
    x1_options.extend(five.iter().copied().filter(|&c| c != x1_current));
    'search: for x1_cand in x1_options {
        masks[xs[0]] = Some(x1_cand);
        if !pair_valid(&dist, &masks, xs[0], x1_cand, Some(closing)) {
            continue;
        }
        for &close_cand in &five {
            if pair_valid(&dist, &masks, closing, close_cand, None) {
                masks[closing] = Some(close_cand);
                done = true;
                break 'search;
            }
        }
    }
    if !done {
        return Err(HalinColorError::Internal { stage: "cycle closing" });
    }

    let inverse = invert_perm(&perm);
    for m in masks.iter_mut().flatten() {
        *m = apply_perm(*m, &inverse);
    }

    // Every middle rim vertex must end up with an L-label.
    for &v in xs.iter().take(nl - 1).skip(1) {
        let m = masks[v].unwrap();
        assert_eq!((m & (0b11 << 5)).count_ones(), 1, "rim vertex lost its L-label");
        assert_eq!((m & 0b11111).count_ones(), 1, "rim vertex lost its L-label");
    }

    let masks: Vec<u64> = masks.into_iter().map(Option::unwrap).collect();
    let k = 64 - masks.iter().fold(0u64, |a, &m| a | m).leading_zeros() as usize;
    let labeling = Labeling::from_masks(2, k.max(2), &masks);
    let report = verify(g, &labeling, VerifyMode::TTone).expect("well-formed labeling");
    assert!(report.valid(), "cubic colorer failed verification: {:?}", report.violations);
    assert!(k <= 7);
    Ok((k, labeling))
}

/// Permutation of {1..7} sending f(x) to {1,2}, f(x1) to {3,4}, f(y) to
/// {3,5}, and the 6-or-7 color of the last L-label to 6. f(x1) and f(y) are
/// 2-subsets of the 3-set {1..5} minus f(x), so they share exactly one
/// color, which becomes 3.
fn normalizing_permutation(fx: u64, fx1: u64, fy: u64, l_label: u64) -> [u16; 8] {
    let fx_colors = crate::combi::colors_of_mask(fx);
    let shared = fx1 & fy;
    debug_assert_eq!(shared.count_ones(), 1);
    let c3 = crate::combi::colors_of_mask(shared)[0];
    let c4 = crate::combi::colors_of_mask(fx1 & !shared)[0];
    let c5 = crate::combi::colors_of_mask(fy & !shared)[0];
    let mut perm = [0u16; 8];
    perm[fx_colors[0] as usize] = 1;
    perm[fx_colors[1] as usize] = 2;
    perm[c3 as usize] = 3;
    perm[c4 as usize] = 4;
    perm[c5 as usize] = 5;
    if l_label & (1 << 5) != 0 {
        perm[6] = 6;
        perm[7] = 7;
    } else {
        perm[6] = 7;
        perm[7] = 6;
    }
    perm
}

fn invert_perm(perm: &[u16; 8]) -> [u16; 8] {
    let mut inv = [0u16; 8];
    for c in 1..8 {
        inv[perm[c] as usize] = c as u16;
    }
    inv
}

fn apply_perm(mask: u64, perm: &[u16; 8]) -> u64 {
    let mut out = 0u64;
    for c in 1..8u16 {
        if mask & (1 << (c - 1)) != 0 {
            out |= 1 << (perm[c as usize] - 1);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// General case.
// ---------------------------------------------------------------------------

/// 2-tone coloring of an arbitrary Halin graph with at most
/// `halin_bound(max_degree)` colors. The returned k is the largest color
/// actually used.
pub fn color_halin(h: &HalinStructure) -> Result<(usize, Labeling), HalinColorError> {
    let g = h.graph();
    let bound = halin_bound(g.max_degree())?;
    let masks = color_halin_masks(h)?;
    let k = 64 - masks.iter().fold(0u64, |a, &m| a | m).leading_zeros() as usize;
    assert!(k <= bound, "used {k} colors, bound is {bound}");
    let labeling = Labeling::from_masks(2, k.max(2), &masks);
    let report = verify(g, &labeling, VerifyMode::TTone).expect("well-formed labeling");
    assert!(report.valid(), "halin colorer failed verification: {:?}", report.violations);
    Ok((k, labeling))
}

fn color_halin_masks(h: &HalinStructure) -> Result<Vec<u64>, HalinColorError> {
    let g = h.graph();
    let n = g.n();
    let k = halin_bound(g.max_degree())?;

    if h.internal_vertices().len() == 1 {
        return wheel_masks(h, k);
    }

    let root = h.internal_vertices()[0];
    let fan = deepest_fan(h, root)?;
    let m = fan.leaf_run.len();

    let (child, old_of_new, reinsert) = if m == 2 {
        shrink_fan_of_two(h, &fan)
    } else {
        shrink_fan_by_one(h, &fan)
    }?;
    let child_masks = color_halin_masks(&child)?;

    let mut masks: Vec<Option<u64>> = vec![None; n];
    for (new_id, &old_id) in old_of_new.iter().enumerate() {
        masks[old_id] = Some(child_masks[new_id]);
    }
    // Greedy reinsertion: candidate pairs in lexicographic order, colors
    // unused by colored neighbors, never equal to a distance-two label.
    let dist = distances_up_to(g, 2);
    let cands = subsets_lex(k, 2);
    for v in reinsert {
        let label = cands
            .iter()
            .copied()
            .find(|&c| pair_valid(&dist, &masks, v, c, None))
            .ok_or(HalinColorError::Internal { stage: "fan reinsertion" })?;
        masks[v] = Some(label);
    }
    Ok(masks.into_iter().map(Option::unwrap).collect())
}

/// Wheel base case: hub {1,2}; rim labels are pairs over {3..k}, pairwise
/// distinct (all rim vertices are within distance two via the hub) and
/// disjoint across rim edges. Solved by depth-first search; the palette
/// always admits a solution, so the budget is generous.
fn wheel_masks(h: &HalinStructure, k: usize) -> Result<Vec<u64>, HalinColorError> {
    let g = h.graph();
    let n = g.n();
    let hub = h.internal_vertices()[0];
    let rim = h.leaf_order().to_vec();
    let d = rim.len();

    let hub_mask = 0b11u64;
    let cands: Vec<u64> = subsets_lex(k, 2)
        .into_iter()
        .filter(|&c| c & hub_mask == 0)
        .collect();
    let mut chosen: Vec<u64> = Vec::with_capacity(d);
    let mut budget = 1000u64 * (d as u64) * (d as u64) + 10_000;
    fn rim_rec(
        i: usize,
        d: usize,
        cands: &[u64],
        chosen: &mut Vec<u64>,
        budget: &mut u64,
    ) -> bool {
        if i == d {
            return true;
        }
        for &c in cands {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            if chosen.contains(&c) {
                continue;
            }
            if i > 0 && chosen[i - 1] & c != 0 {
                continue;
            }
            if i == d - 1 && chosen[0] & c != 0 {
                continue;
            }
            chosen.push(c);
            if rim_rec(i + 1, d, cands, chosen, budget) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if !rim_rec(0, d, &cands, &mut chosen, &mut budget) {
        return Err(HalinColorError::Internal { stage: "wheel rim" });
    }
    let mut masks = vec![0u64; n];
    masks[hub] = hub_mask;
    for (i, &v) in rim.iter().enumerate() {
        masks[v] = chosen[i];
    }
    Ok(masks)
}

type Shrunk = (HalinStructure, Vec<usize>, Vec<usize>);

/// Fan with exactly two leaves: remove both; the fan center becomes a rim
/// leaf between the removed leaves' outer cycle neighbors.
fn shrink_fan_of_two(h: &HalinStructure, fan: &FanDecomposition) -> Result<Shrunk, HalinColorError> {
    let g = h.graph();
    let removed = fan.leaf_run.clone();
    let (child_g_raw, old_of_new) = g.remove_vertices(&removed);
    let new_of_old: std::collections::HashMap<usize, usize> =
        old_of_new.iter().enumerate().map(|(n, &o)| (o, n)).collect();

    let leaf_order: Vec<usize> = h
        .leaf_order()
        .iter()
        .filter_map(|&l| {
            if l == fan.leaf_run[0] {
                Some(new_of_old[&fan.x])
            } else if l == fan.leaf_run[1] {
                None
            } else {
                Some(new_of_old[&l])
            }
        })
        .collect();
    let tree_edges: Vec<(usize, usize)> = h
        .tree_edges()
        .iter()
        .filter(|&&(u, v)| !removed.contains(&u) && !removed.contains(&v))
        .map(|&(u, v)| (new_of_old[&u], new_of_old[&v]))
        .collect();
    // The two new cycle edges around x.
    let nl = leaf_order.len();
    let extra: Vec<(usize, usize)> = (0..nl)
        .map(|i| {
            let (a, b) = (leaf_order[i], leaf_order[(i + 1) % nl]);
            (a.min(b), a.max(b))
        })
        .filter(|&(a, b)| !child_g_raw.has_edge(a, b))
        .collect();
    let child_g = child_g_raw.with_edges(&extra).expect("fresh rim edges");
    let child = HalinStructure::new(child_g, &tree_edges, &leaf_order)?;
    // Color the leaf next to the still-colored rim first.
    let reinsert = vec![removed[0], removed[1]];
    Ok((child, old_of_new, reinsert))
}

/// Fan with three or more leaves: remove the second leaf of the run and let
/// its two run neighbors close the cycle.
fn shrink_fan_by_one(h: &HalinStructure, fan: &FanDecomposition) -> Result<Shrunk, HalinColorError> {
    let g = h.graph();
    let removed = vec![fan.leaf_run[1]];
    let (child_g_raw, old_of_new) = g.remove_vertices(&removed);
    let new_of_old: std::collections::HashMap<usize, usize> =
        old_of_new.iter().enumerate().map(|(n, &o)| (o, n)).collect();

    let leaf_order: Vec<usize> = h
        .leaf_order()
        .iter()
        .filter(|&&l| l != fan.leaf_run[1])
        .map(|&l| new_of_old[&l])
        .collect();
    let tree_edges: Vec<(usize, usize)> = h
        .tree_edges()
        .iter()
        .filter(|&&(u, v)| u != fan.leaf_run[1] && v != fan.leaf_run[1])
        .map(|&(u, v)| (new_of_old[&u], new_of_old[&v]))
        .collect();
    let a = new_of_old[&fan.leaf_run[0]];
    let b = new_of_old[&fan.leaf_run[2]];
    let child_g = child_g_raw
        .with_edges(&[(a.min(b), a.max(b))])
        .expect("fresh rim edge");
    let child = HalinStructure::new(child_g, &tree_edges, &leaf_order)?;
    Ok((child, old_of_new, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{exact_tau, SearchBudget};

    fn wheel(rim: usize) -> HalinStructure {
        let center = rim;
        let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        let tree: Vec<(usize, usize)> = (0..rim).map(|i| (center, i)).collect();
        edges.extend_from_slice(&tree);
        let leaf_order: Vec<usize> = (0..rim).collect();
        HalinStructure::new(Graph::new(rim + 1, &edges).unwrap(), &tree, &leaf_order).unwrap()
    }

    fn six_vertex_cubic() -> HalinStructure {
        let tree = vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)];
        let leaf_order = vec![2, 3, 4, 5];
        let mut edges = tree.clone();
        edges.extend_from_slice(&[(2, 3), (3, 4), (4, 5), (5, 2)]);
        HalinStructure::new(Graph::new(6, &edges).unwrap(), &tree, &leaf_order).unwrap()
    }

    /// Internals 0-1-2 in a path; 0 and 2 carry two leaves, 1 carries one.
    fn eight_vertex_cubic() -> HalinStructure {
        let tree = vec![(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7)];
        let leaf_order = vec![3, 4, 5, 6, 7];
        let mut edges = tree.clone();
        edges.extend_from_slice(&[(3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]);
        HalinStructure::new(Graph::new(8, &edges).unwrap(), &tree, &leaf_order).unwrap()
    }

    #[test]
    fn bound_spot_values() {
        assert_eq!(halin_bound(3).unwrap(), 10);
        assert_eq!(halin_bound(8).unwrap(), 10);
        assert_eq!(halin_bound(17).unwrap(), 12);
        assert!(halin_bound(2).is_err());
    }

    #[test]
    fn wheel_closed_form_values() {
        let expected = [(3, 8), (4, 8), (5, 7), (6, 7), (7, 8), (8, 7), (9, 7), (10, 8)];
        for (d, tau) in expected {
            assert_eq!(wheel_tau2(d), tau, "wheel with {d} rim vertices");
        }
        assert_eq!(wheel_tau2(15), 8);
        assert_eq!(wheel_tau2(16), 9);
    }

    #[test]
    fn six_vertex_cubic_within_seven() {
        let h = six_vertex_cubic();
        let (k, f) = color_cubic_halin7(&h).unwrap();
        assert!(k <= 7);
        assert!(verify(h.graph(), &f, VerifyMode::TTone).unwrap().valid());
        let (tau, _) = exact_tau(h.graph(), 2, SearchBudget::default()).unwrap();
        assert!(tau <= k);
        assert!(tau <= 7);
    }

    #[test]
    fn eight_vertex_cubic_within_seven() {
        let h = eight_vertex_cubic();
        assert!(h.is_cubic());
        let (k, f) = color_cubic_halin7(&h).unwrap();
        assert!(k <= 7);
        assert!(verify(h.graph(), &f, VerifyMode::TTone).unwrap().valid());
    }

    #[test]
    fn k4_presented_as_halin_is_too_small() {
        let h = wheel(3);
        assert!(h.is_cubic());
        assert_eq!(color_cubic_halin7(&h), Err(HalinColorError::TooSmallCubic { n: 4 }));
    }

    #[test]
    fn non_cubic_wheel_is_rejected_by_the_cubic_colorer() {
        let h = wheel(5);
        assert!(matches!(color_cubic_halin7(&h), Err(HalinColorError::NotCubic { .. })));
    }

    #[test]
    fn wheels_color_within_the_general_bound() {
        for rim in 3..=12 {
            let h = wheel(rim);
            let (k, f) = color_halin(&h).unwrap();
            assert!(verify(h.graph(), &f, VerifyMode::TTone).unwrap().valid());
            assert!(k <= halin_bound(h.graph().max_degree()).unwrap(), "rim {rim}");
        }
    }

    #[test]
    fn cubic_instances_color_within_the_general_bound() {
        for h in [six_vertex_cubic(), eight_vertex_cubic()] {
            let (k, f) = color_halin(&h).unwrap();
            assert!(verify(h.graph(), &f, VerifyMode::TTone).unwrap().valid());
            assert!(k <= 10);
        }
    }
}
