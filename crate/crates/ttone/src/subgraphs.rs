//! Detection of the short cycles and the K4-minus-an-edge subgraph that
//! drive the 2-tone classification of subcubic outerplanar graphs.

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct ForbiddenSubgraphs {
    pub has_c3: bool,
    pub has_c4: bool,
    pub has_c7: bool,
    pub has_k4e: bool,
    pub connected: bool,
    pub max_degree: usize,
    pub min_degree: usize,
    /// First cycle found of each length, as a vertex sequence.
    pub c3: Option<Vec<usize>>,
    pub c4: Option<Vec<usize>>,
    pub c7: Option<Vec<usize>>,
    /// An edge lying on two triangles: (u, v, apex1, apex2).
    pub k4e: Option<[usize; 4]>,
}

const TARGET_LENGTHS: [usize; 3] = [3, 4, 7];

/// Scans for C3, C4, C7 subgraphs and for an edge contained in two
/// triangles (a K4 minus an edge). Cycles are enumerated as closed walks
/// without vertex repetition by depth-first search where the start vertex is
/// the smallest on the cycle, so each cycle is visited a bounded number of
/// times; only lengths up to 7 are explored.
pub fn detect_forbidden(g: &Graph) -> ForbiddenSubgraphs {
    let mut found: [Option<Vec<usize>>; 3] = [None, None, None];

    let mut path = Vec::with_capacity(8);
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        if found.iter().all(Option::is_some) {
            break;
        }
        path.clear();
        path.push(start);
        on_path[start] = true;
        dfs_cycles(g, start, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
    }

    let mut k4e = None;
    'edges: for &(u, v) in g.edges() {
        let mut apexes = Vec::new();
        for &w in g.neighbors(u) {
            if w != v && g.has_edge(w, v) {
                apexes.push(w);
                if apexes.len() == 2 {
                    k4e = Some([u, v, apexes[0], apexes[1]]);
                    break 'edges;
                }
            }
        }
    }

    let [c3, c4, c7] = found;
    ForbiddenSubgraphs {
        has_c3: c3.is_some(),
        has_c4: c4.is_some(),
        has_c7: c7.is_some(),
        has_k4e: k4e.is_some(),
        connected: g.is_connected(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        c3,
        c4,
        c7,
        k4e,
    }
}

fn dfs_cycles(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut [Option<Vec<usize>>; 3],
) {
    let len = path.len();
    if len >= 3 && g.has_edge(*path.last().unwrap(), start) {
        if let Some(slot) = TARGET_LENGTHS.iter().position(|&l| l == len) {
            if found[slot].is_none() {
                found[slot] = Some(path.clone());
            }
        }
    }
    if len == 7 || found.iter().all(Option::is_some) {
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w > start && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            dfs_cycles(g, start, path, on_path, found);
            on_path[w] = false;
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn k4_minus_e() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn k4e_has_triangle_square_and_shared_edge() {
        let r = detect_forbidden(&k4_minus_e());
        assert!(r.has_c3);
        assert!(r.has_c4, "the 4-cycle through all vertices");
        assert!(!r.has_c7);
        assert!(r.has_k4e);
        let [u, v, a, b] = r.k4e.unwrap();
        let g = k4_minus_e();
        assert!(g.has_edge(u, v) && g.has_edge(u, a) && g.has_edge(v, a));
        assert!(g.has_edge(u, b) && g.has_edge(v, b));
    }

    #[test]
    fn seven_cycle_only_triggers_c7() {
        let r = detect_forbidden(&cycle(7));
        assert!(!r.has_c3 && !r.has_c4 && !r.has_k4e);
        assert!(r.has_c7);
        assert_eq!(r.c7.as_ref().unwrap().len(), 7);
    }

    #[test]
    fn six_cycle_triggers_nothing() {
        let r = detect_forbidden(&cycle(6));
        assert!(!r.has_c3 && !r.has_c4 && !r.has_c7 && !r.has_k4e);
        assert!(r.connected);
        assert_eq!(r.max_degree, 2);
        assert_eq!(r.min_degree, 2);
    }

    #[test]
    fn witness_cycles_are_actual_cycles() {
        let g = k4_minus_e();
        let r = detect_forbidden(&g);
        for w in [r.c3.unwrap(), r.c4.unwrap()] {
            for i in 0..w.len() {
                assert!(g.has_edge(w[i], w[(i + 1) % w.len()]));
            }
        }
    }
}
