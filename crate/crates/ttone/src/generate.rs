//! Deterministic instance generation: canonical small graphs, seeded random
//! subcubic outerplanar and Halin families with their structural
//! certificates, and exhaustive enumerators for desk-scale corpora.
//!
//! Randomness comes exclusively from the crate's SplitMix64 stream, so a
//! `(family, params, seed)` triple reproduces the same edge list everywhere.

use thiserror::Error;

use crate::graph::Graph;
use crate::halin::{HalinError, HalinStructure};
use crate::outerplane::{EmbedError, OuterplaneEmbedding};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Path,
    Complete,
    K4e,
    Wheel,
    Fig1,
    Outerplanar,
    Halin,
    CubicHalin,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::K4e => "k4e",
            Family::Wheel => "wheel",
            Family::Fig1 => "fig1",
            Family::Outerplanar => "outerplanar",
            Family::Halin => "halin",
            Family::CubicHalin => "cubic-halin",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "cycle" => Some(Family::Cycle),
            "path" => Some(Family::Path),
            "complete" => Some(Family::Complete),
            "k4e" => Some(Family::K4e),
            "wheel" => Some(Family::Wheel),
            "fig1" => Some(Family::Fig1),
            "outerplanar" => Some(Family::Outerplanar),
            "halin" => Some(Family::Halin),
            "cubic-halin" | "cubicHalin" | "cubichalin" => Some(Family::CubicHalin),
            _ => None,
        }
    }

    fn randomized(self) -> bool {
        matches!(self, Family::Outerplanar | Family::Halin | Family::CubicHalin)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("family {family} requires --n")]
    MissingN { family: &'static str },
    #[error("family {family} is randomized and requires --seed")]
    MissingSeed { family: &'static str },
    #[error("family {family} cannot be built at this size: {reason}")]
    InvalidSize { family: &'static str, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub family: String,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub seed: Option<u64>,
    pub notes: String,
}

/// A generated graph plus whichever structural certificate its family
/// supports. Certificates always validate.
#[derive(Debug, Clone)]
pub struct GraphBundle {
    pub graph: Graph,
    pub outer_order: Option<Vec<usize>>,
    pub tree_edges: Option<Vec<(usize, usize)>>,
    pub leaf_order: Option<Vec<usize>>,
    pub provenance: Provenance,
}

impl GraphBundle {
    pub fn embedding(&self) -> Option<Result<OuterplaneEmbedding, EmbedError>> {
        self.outer_order
            .as_ref()
            .map(|order| OuterplaneEmbedding::new(self.graph.clone(), order.clone()))
    }

    pub fn halin(&self) -> Option<Result<HalinStructure, HalinError>> {
        match (&self.tree_edges, &self.leaf_order) {
            (Some(tree), Some(order)) => {
                Some(HalinStructure::new(self.graph.clone(), tree, order))
            }
            _ => None,
        }
    }
}

pub fn generate(
    family: Family,
    n: Option<usize>,
    d: Option<usize>,
    seed: Option<u64>,
) -> Result<GraphBundle, GenError> {
    if family.randomized() && seed.is_none() {
        return Err(GenError::MissingSeed { family: family.name() });
    }
    let provenance = |n: Option<usize>, d: Option<usize>, notes: String| Provenance {
        family: family.name().to_string(),
        n,
        d,
        seed,
        notes,
    };
    match family {
        Family::Cycle => {
            let n = n.ok_or(GenError::MissingN { family: "cycle" })?;
            if n < 3 {
                return Err(GenError::InvalidSize {
                    family: "cycle",
                    reason: "need n >= 3".into(),
                });
            }
            let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(GraphBundle {
                graph: Graph::new(n, &edges).unwrap(),
                outer_order: Some((0..n).collect()),
                tree_edges: None,
                leaf_order: None,
                provenance: provenance(Some(n), None, String::new()),
            })
        }
        Family::Path => {
            let n = n.ok_or(GenError::MissingN { family: "path" })?;
            if n < 1 {
                return Err(GenError::InvalidSize { family: "path", reason: "need n >= 1".into() });
            }
            let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(GraphBundle {
                graph: Graph::new(n, &edges).unwrap(),
                outer_order: Some((0..n).collect()),
                tree_edges: None,
                leaf_order: None,
                provenance: provenance(Some(n), None, String::new()),
            })
        }
        Family::Complete => {
            let n = n.ok_or(GenError::MissingN { family: "complete" })?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            Ok(GraphBundle {
                graph: Graph::new(n, &edges).unwrap(),
                outer_order: if n <= 3 { Some((0..n).collect()) } else { None },
                tree_edges: None,
                leaf_order: None,
                provenance: provenance(Some(n), None, String::new()),
            })
        }
        Family::K4e => Ok(GraphBundle {
            graph: Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
            outer_order: Some(vec![2, 0, 3, 1]),
            tree_edges: None,
            leaf_order: None,
            provenance: provenance(Some(4), None, String::new()),
        }),
        Family::Wheel => {
            let d = d
                .or(n.map(|n| n.saturating_sub(1)))
                .ok_or(GenError::MissingN { family: "wheel" })?;
            if d < 3 {
                return Err(GenError::InvalidSize {
                    family: "wheel",
                    reason: "need rim size d >= 3".into(),
                });
            }
            let hub = d;
            let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, (i + 1) % d)).collect();
            let tree: Vec<(usize, usize)> = (0..d).map(|i| (hub, i)).collect();
            edges.extend_from_slice(&tree);
            Ok(GraphBundle {
                graph: Graph::new(d + 1, &edges).unwrap(),
                outer_order: None,
                tree_edges: Some(tree),
                leaf_order: Some((0..d).collect()),
                provenance: provenance(Some(d + 1), Some(d), String::new()),
            })
        }
        Family::Fig1 => Ok(GraphBundle {
            graph: Graph::new(5, &[(0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (1, 2)]).unwrap(),
            outer_order: Some(vec![0, 1, 4, 3, 2]),
            tree_edges: None,
            leaf_order: None,
            provenance: provenance(Some(5), None, String::new()),
        }),
        Family::Outerplanar => {
            let n = n.ok_or(GenError::MissingN { family: "outerplanar" })?;
            if n < 3 {
                return Err(GenError::InvalidSize {
                    family: "outerplanar",
                    reason: "need n >= 3".into(),
                });
            }
            let (graph, order, notes) = grow_outerplanar(n, seed.unwrap());
            Ok(GraphBundle {
                graph,
                outer_order: Some(order),
                tree_edges: None,
                leaf_order: None,
                provenance: provenance(Some(n), None, notes),
            })
        }
        Family::Halin | Family::CubicHalin => {
            let n = n.ok_or(GenError::MissingN { family: family.name() })?;
            let cubic = family == Family::CubicHalin;
            if cubic {
                if n < 6 || n % 2 != 0 {
                    return Err(GenError::InvalidSize {
                        family: "cubic-halin",
                        reason: format!("cubic Halin graphs exist for even n >= 6, got {n}"),
                    });
                }
            } else if n < 4 || n == 5 {
                return Err(GenError::InvalidSize {
                    family: "halin",
                    reason: format!("tree growth reaches n = 4 and n >= 6, got {n}"),
                });
            }
            let max_children = if cubic {
                2
            } else {
                d.unwrap_or(4).max(3) - 1
            };
            if max_children == 2 && (n % 2 != 0) {
                return Err(GenError::InvalidSize {
                    family: family.name(),
                    reason: format!("expansion by two keeps n even, got {n}"),
                });
            }
            let (graph, tree, order) = grow_halin(n, max_children, seed.unwrap());
            Ok(GraphBundle {
                graph,
                outer_order: None,
                tree_edges: Some(tree),
                leaf_order: Some(order),
                provenance: provenance(Some(n), d, String::new()),
            })
        }
    }
}

/// Starts from a short cycle and alternates two moves keeping the maximum
/// degree at three and the outer order consistent: splice a path between two
/// cycle-consecutive vertices of degree at most two (a new bounded face), or
/// hang a pendant path off one such vertex.
fn grow_outerplanar(n: usize, seed: u64) -> (Graph, Vec<usize>, String) {
    let mut rng = SplitMix64::new(seed);
    let base = (3 + rng.below(4) as usize).min(n);
    let mut order: Vec<usize> = (0..base).collect();
    let mut edges: Vec<(usize, usize)> = (0..base).map(|i| (i, (i + 1) % base)).collect();
    let mut degree = vec![2usize; base];
    if base == n && base < 3 {
        unreachable!("caller enforces n >= 3");
    }
    let mut face_sizes = Vec::new();
    let mut cur = base;
    while cur < n {
        let remaining = n - cur;
        let len = order.len();
        let has = |edges: &[(usize, usize)], u: usize, v: usize| {
            edges.iter().any(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
        };
        let face_sites: Vec<usize> = (0..len)
            .filter(|&i| {
                let (u, v) = (order[i], order[(i + 1) % len]);
                degree[u] <= 2 && degree[v] <= 2 && has(&edges, u, v)
            })
            .collect();
        let path_sites: Vec<usize> = (0..cur).filter(|&v| degree[v] <= 2).collect();
        let use_face = !face_sites.is_empty() && rng.below(100) < 70;
        let j = 1 + rng.below(remaining.min(4) as u64) as usize;
        let fresh: Vec<usize> = (cur..cur + j).collect();
        if use_face {
            let i = *rng.pick(&face_sites);
            let (u, v) = (order[i], order[(i + 1) % len]);
            edges.push((u.min(fresh[0]), u.max(fresh[0])));
            for w in fresh.windows(2) {
                edges.push((w[0], w[1]));
            }
            edges.push((v.min(fresh[j - 1]), v.max(fresh[j - 1])));
            degree[u] += 1;
            degree[v] += 1;
            degree.extend(std::iter::repeat(2).take(j));
            for (offset, &p) in fresh.iter().enumerate() {
                order.insert(i + 1 + offset, p);
            }
            face_sizes.push(j + 2);
        } else {
            let u = *rng.pick(&path_sites);
            edges.push((u.min(fresh[0]), u.max(fresh[0])));
            for w in fresh.windows(2) {
                edges.push((w[0], w[1]));
            }
            degree[u] += 1;
            let mut newdeg = vec![2usize; j];
            newdeg[j - 1] = 1;
            degree.extend(newdeg);
            let pos = order.iter().position(|&x| x == u).unwrap();
            for (offset, &p) in fresh.iter().enumerate() {
                order.insert(pos + 1 + offset, p);
            }
        }
        cur += j;
    }
    let graph = Graph::new(n, &edges).expect("growth adds fresh simple edges");
    let notes = if face_sizes.is_empty() {
        String::new()
    } else {
        format!(
            "faces:{}",
            face_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("+")
        )
    };
    (graph, order, notes)
}

/// Starts from a star with three leaves and repeatedly expands a random leaf
/// into an internal vertex with 2..=max_children children, leaving no
/// remainder of one. The leaf order is the depth-first leaf sequence, which
/// keeps every subtree contiguous on the cycle.
fn grow_halin(n: usize, max_children: usize, seed: u64) -> (Graph, Vec<(usize, usize)>, Vec<usize>) {
    let mut rng = SplitMix64::new(seed);
    let mut adj: Vec<Vec<usize>> = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
    let mut leaves: Vec<usize> = vec![1, 2, 3];
    let mut cur = 4;
    while cur < n {
        let remaining = n - cur;
        let options: Vec<usize> = (2..=max_children.min(remaining))
            .filter(|&c| remaining - c != 1)
            .collect();
        let c = *rng.pick(&options);
        let li = rng.below(leaves.len() as u64) as usize;
        let v = leaves.remove(li);
        for child in cur..cur + c {
            adj[v].push(child);
            adj.push(vec![v]);
            leaves.push(child);
        }
        leaves.sort_unstable();
        cur += c;
    }
    let mut tree = Vec::new();
    for (v, nb) in adj.iter().enumerate() {
        for &u in nb {
            if v < u {
                tree.push((v, u));
            }
        }
    }
    // Depth-first leaf order from the original center, children in the
    // order they were created.
    let mut leaf_order = Vec::new();
    let mut stack = vec![(0usize, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        if adj[v].len() == 1 && v != 0 {
            leaf_order.push(v);
            continue;
        }
        for &u in adj[v].iter().rev() {
            if u != parent {
                stack.push((u, v));
            }
        }
    }
    let nl = leaf_order.len();
    let mut edges = tree.clone();
    for i in 0..nl {
        let (a, b) = (leaf_order[i], leaf_order[(i + 1) % nl]);
        edges.push((a.min(b), a.max(b)));
    }
    let graph = Graph::new(cur, &edges).expect("tree plus leaf cycle is simple");
    (graph, tree, leaf_order)
}

/// Random tree by preferential attachment under a degree cap; used for tree
/// corpora in tests and scans.
pub fn random_tree(n: usize, max_degree: usize, seed: u64) -> Graph {
    assert!(n >= 2 && max_degree >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1);
    for v in 1..n {
        let sites: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let u = *rng.pick(&sites);
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    Graph::new(n, &edges).expect("attachment edges are simple")
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration at desk scale.
// ---------------------------------------------------------------------------

/// Every connected subcubic outerplane graph drawn on the convex polygon
/// 0..n in id order: all non-crossing diagonal sets crossed with all side
/// subsets, filtered to connected graphs with maximum degree three. Every
/// connected subcubic outerplanar graph on at most n vertices is isomorphic
/// to at least one entry (relabel an embedding by polygon position).
pub fn enumerate_outerplanar_polygon(n: usize) -> Vec<GraphBundle> {
    assert!((1..=16).contains(&n), "polygon enumeration is for desk scale");
    let sides: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let (a, b) = (i, (i + 1) % n);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut diagonals = Vec::new();
    for i in 0..n {
        for j in (i + 2)..n {
            if !(i == 0 && j == n - 1) {
                diagonals.push((i, j));
            }
        }
    }
    let crossing = |&(a, b): &(usize, usize), &(c, d): &(usize, usize)| {
        if a == c || a == d || b == c || b == d {
            return false;
        }
        (a < c && c < b) != (a < d && d < b)
    };

    let mut sets: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut diag_degree = vec![0usize; n];
    fn rec(
        idx: usize,
        diagonals: &[(usize, usize)],
        crossing: &dyn Fn(&(usize, usize), &(usize, usize)) -> bool,
        chosen: &mut Vec<(usize, usize)>,
        diag_degree: &mut Vec<usize>,
        sets: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if idx == diagonals.len() {
            sets.push(chosen.clone());
            return;
        }
        rec(idx + 1, diagonals, crossing, chosen, diag_degree, sets);
        let d = diagonals[idx];
        if diag_degree[d.0] < 3
            && diag_degree[d.1] < 3
            && chosen.iter().all(|c| !crossing(c, &d))
        {
            chosen.push(d);
            diag_degree[d.0] += 1;
            diag_degree[d.1] += 1;
            rec(idx + 1, diagonals, crossing, chosen, diag_degree, sets);
            diag_degree[d.0] -= 1;
            diag_degree[d.1] -= 1;
            chosen.pop();
        }
    }
    rec(0, &diagonals, &crossing, &mut chosen, &mut diag_degree, &mut sets);

    let mut out = Vec::new();
    for diag_set in &sets {
        for mask in 0u32..(1 << n) {
            let mut degree = vec![0usize; n];
            let mut ok = true;
            for &(a, b) in diag_set {
                degree[a] += 1;
                degree[b] += 1;
            }
            let mut edges: Vec<(usize, usize)> = diag_set.clone();
            for (i, &s) in sides.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    degree[s.0] += 1;
                    degree[s.1] += 1;
                    if degree[s.0] > 3 || degree[s.1] > 3 {
                        ok = false;
                        break;
                    }
                    edges.push(s);
                }
            }
            if !ok || degree.iter().any(|&d| d > 3) {
                continue;
            }
            // Connectivity over the edge list.
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut Vec<usize>, x: usize) -> usize {
                if parent[x] != x {
                    let r = find(parent, parent[x]);
                    parent[x] = r;
                }
                parent[x]
            }
            for &(a, b) in &edges {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            let root = find(&mut parent, 0);
            if (1..n).any(|v| find(&mut parent, v) != root) {
                continue;
            }
            let graph = Graph::new(n, &edges).unwrap();
            out.push(GraphBundle {
                graph,
                outer_order: Some((0..n).collect()),
                tree_edges: None,
                leaf_order: None,
                provenance: Provenance {
                    family: "polygon-enumeration".to_string(),
                    n: Some(n),
                    d: None,
                    seed: None,
                    notes: String::new(),
                },
            });
        }
    }
    out
}

/// Representatives of every cubic Halin graph of (even) order n: all
/// subcubic internal-tree shapes, all child orders, deduplicated by the
/// cyclic leaf sequence. Isomorphic duplicates across tree labelings are
/// possible; coverage of every isomorphism class is what matters.
pub fn enumerate_cubic_halin(n: usize) -> Vec<GraphBundle> {
    if n < 4 || n % 2 != 0 {
        return Vec::new();
    }
    let internals = (n - 2) / 2;
    let shapes = subcubic_tree_shapes(internals);
    let mut out = Vec::new();
    for shape in &shapes {
        // Attach leaves: internal v of tree-degree d gets 3 - d leaves.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); internals];
        for &(u, v) in shape {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut full_adj = adj.clone();
        let mut next = internals;
        for v in 0..internals {
            for _ in adj[v].len()..3 {
                full_adj[v].push(next);
                full_adj.push(vec![v]);
                next += 1;
            }
        }
        debug_assert_eq!(next, n);

        let mut orders = std::collections::BTreeSet::new();
        enumerate_leaf_orders(&full_adj, 0, &mut orders);
        for order in orders {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (v, nb) in full_adj.iter().enumerate() {
                for &u in nb {
                    if v < u {
                        edges.push((v, u));
                    }
                }
            }
            let tree = edges.clone();
            let nl = order.len();
            for i in 0..nl {
                let (a, b) = (order[i], order[(i + 1) % nl]);
                edges.push((a.min(b), a.max(b)));
            }
            let graph = Graph::new(n, &edges).unwrap();
            out.push(GraphBundle {
                graph,
                outer_order: None,
                tree_edges: Some(tree),
                leaf_order: Some(order),
                provenance: Provenance {
                    family: "cubic-halin-enumeration".to_string(),
                    n: Some(n),
                    d: None,
                    seed: None,
                    notes: String::new(),
                },
            });
        }
    }
    out
}

/// All pairwise non-isomorphic trees on `n` vertices with maximum degree at
/// most three, as canonical edge lists. Exhaustive over labeled trees with
/// brute-force canonicalization; n stays tiny.
fn subcubic_tree_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut shapes = std::collections::BTreeSet::new();
    // Prufer decode over all sequences.
    let seq_len = n - 2;
    let mut seq = vec![0usize; seq_len];
    loop {
        let edges = prufer_decode(&seq, n);
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().all(|&d| d <= 3) {
            shapes.insert(canonical_edges(&edges, n));
        }
        // Next sequence.
        let mut i = 0;
        while i < seq_len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq_len {
            break;
        }
    }
    shapes.into_iter().collect()
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    let mut leaf = usize::MAX;
    let mut used = vec![false; n];
    for &s in seq {
        if leaf == usize::MAX {
            while used[ptr] || degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
        edges.push((leaf.min(s), leaf.max(s)));
        used[leaf] = true;
        degree[s] -= 1;
        leaf = if degree[s] == 1 && s < ptr { s } else { usize::MAX };
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    debug_assert_eq!(rest.len(), 2);
    edges.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
    edges
}

fn canonical_edges(edges: &[(usize, usize)], n: usize) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    permute_all(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
            .collect();
        mapped.sort_unstable();
        if best.as_ref().map_or(true, |b| &mapped < b) {
            best = Some(mapped);
        }
    });
    best.unwrap()
}

fn permute_all(perm: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        f(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        permute_all(perm, i + 1, f);
        perm.swap(i, j);
    }
}

/// All depth-first leaf sequences over child orderings, canonicalized as
/// cyclic sequences up to rotation and reflection.
fn enumerate_leaf_orders(
    adj: &[Vec<usize>],
    root: usize,
    out: &mut std::collections::BTreeSet<Vec<usize>>,
) {
    fn walk(
        adj: &[Vec<usize>],
        v: usize,
        parent: usize,
        prefix: &mut Vec<usize>,
        out: &mut std::collections::BTreeSet<Vec<usize>>,
        root: usize,
    ) -> Vec<Vec<usize>> {
        let children: Vec<usize> = adj[v].iter().copied().filter(|&u| u != parent).collect();
        if children.is_empty() {
            return vec![vec![v]];
        }
        // All concatenations over child permutations of each child's own
        // leaf sequences.
        let child_seqs: Vec<Vec<Vec<usize>>> = children
            .iter()
            .map(|&c| walk(adj, c, v, prefix, out, root))
            .collect();
        let mut results = Vec::new();
        let mut order: Vec<usize> = (0..children.len()).collect();
        permute_all(&mut order, 0, &mut |p| {
            let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
            for &ci in p {
                let mut next = Vec::new();
                for base in &combos {
                    for seq in &child_seqs[ci] {
                        let mut ext = base.clone();
                        ext.extend_from_slice(seq);
                        next.push(ext);
                    }
                }
                combos = next;
            }
            results.extend(combos);
        });
        let _ = root;
        results
    }
    let mut prefix = Vec::new();
    for seq in walk(adj, root, usize::MAX, &mut prefix, out, root) {
        out.insert(canonical_cyclic(&seq));
    }
}

fn canonical_cyclic(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for dir in 0..2 {
        let s: Vec<usize> = if dir == 0 {
            seq.to_vec()
        } else {
            seq.iter().rev().copied().collect()
        };
        for start in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| s[(start + i) % n]).collect();
            if best.as_ref().map_or(true, |b| &rotated < b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}
