//! Outerplane embeddings: validation, bounded faces, weak dual, pendant
//! faces, and a small-instance recognizer.
//!
//! An embedding is modeled as a convex polygon listing every vertex once,
//! with all other edges drawn as chords inside it. The embedding is valid
//! when no two chords interleave. Bounded faces are recovered by walking the
//! rotation system induced by the polygon positions; the single
//! negative-orientation walk is the outer face. The weak dual joins bounded
//! faces sharing an edge and is a forest precisely for valid embeddings. A
//! pendant face is a leaf of the dual whose cycle has exactly one vertex of
//! degree three, or exactly two consecutive ones, in the whole graph.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("outer order must list every vertex exactly once")]
    NotAPermutation,
    #[error("graph must be connected for a face structure")]
    NotConnected,
    #[error("chords {{{a}, {b}}} and {{{c}, {d}}} interleave")]
    CrossingChords { a: usize, b: usize, c: usize, d: usize },
    #[error("face walk revisited a vertex; embedding is not outerplane")]
    MalformedFace,
    #[error("weak dual contains a cycle; embedding is not outerplane")]
    DualNotForest,
    #[error("outerplanarity recognition is exhaustive and limited to n <= {max}, got n = {n}")]
    TooLargeToRecognize { n: usize, max: usize },
    #[error("graph admits no outerplane embedding")]
    NotOuterplanar,
}

/// Bounded faces of a validated embedding. Each face cycle is rotated to
/// start at its smallest vertex, directed so the second vertex is the
/// smaller neighbor, and the list is sorted; goldens diff cleanly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct WeakDual {
    pub nodes: usize,
    /// Pairs of face indices sharing an edge, sorted.
    pub links: Vec<(usize, usize)>,
    /// Indices into the face list.
    pub pendant_faces: Vec<usize>,
}

/// A graph together with a validated outer order and its bounded faces.
#[derive(Debug, Clone)]
pub struct OuterplaneEmbedding {
    graph: Graph,
    outer_order: Vec<usize>,
    faces: FaceSet,
}

impl OuterplaneEmbedding {
    pub fn new(graph: Graph, outer_order: Vec<usize>) -> Result<Self, EmbedError> {
        let faces = validate_outerplane(&graph, &outer_order)?;
        Ok(OuterplaneEmbedding { graph, outer_order, faces })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn outer_order(&self) -> &[usize] {
        &self.outer_order
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }
}

fn canonical_cycle(walk: &[usize]) -> Vec<usize> {
    let n = walk.len();
    let start = (0..n).min_by_key(|&i| walk[i]).unwrap();
    let fwd: Vec<usize> = (0..n).map(|i| walk[(start + i) % n]).collect();
    let bwd: Vec<usize> = (0..n).map(|i| walk[(start + n - i) % n]).collect();
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

/// Validates the polygon-with-chords model and returns the bounded faces.
pub fn validate_outerplane(g: &Graph, outer_order: &[usize]) -> Result<FaceSet, EmbedError> {
    let n = g.n();
    if outer_order.len() != n {
        return Err(EmbedError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in outer_order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(EmbedError::NotAPermutation);
        }
        pos[v] = i;
    }
    if !g.is_connected() {
        return Err(EmbedError::NotConnected);
    }

    // Chords as position pairs (a < b); sides are skipped since nothing can
    // sit strictly between consecutive positions.
    let chords: Vec<(usize, usize, usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            if b - a == 1 || (a == 0 && b == n - 1) {
                None
            } else {
                Some((a, b, u, v))
            }
        })
        .collect();
    for i in 0..chords.len() {
        for j in (i + 1)..chords.len() {
            let (a, b, u1, v1) = chords[i];
            let (c, d, u2, v2) = chords[j];
            let inside_c = a < c && c < b;
            let inside_d = a < d && d < b;
            if inside_c != inside_d && a != c && a != d && b != c && b != d {
                return Err(EmbedError::CrossingChords { a: u1, b: v1, c: u2, d: v2 });
            }
        }
    }

    // Rotation system: neighbors of v in counterclockwise order around the
    // polygon, i.e. ascending (pos[u] - pos[v]) mod n. Tracing with the
    // clockwise-next rule makes bounded faces come out counterclockwise.
    let mut rot: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut nb: Vec<usize> = g.neighbors(v).to_vec();
        nb.sort_by_key(|&u| (pos[u] + n - pos[v]) % n);
        rot.push(nb);
    }
    let index_in_rot = |v: usize, u: usize| rot[v].iter().position(|&x| x == u).unwrap();

    let mut edge_ids = std::collections::HashMap::new();
    let mut darts = Vec::new();
    for &(u, v) in g.edges() {
        edge_ids.insert((u, v), darts.len());
        darts.push((u, v));
        edge_ids.insert((v, u), darts.len());
        darts.push((v, u));
    }
    let mut seen = vec![false; darts.len()];
    let mut faces = Vec::new();
    for start in 0..darts.len() {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            seen[dart] = true;
            let (u, v) = darts[dart];
            walk.push(u);
            let i = index_in_rot(v, u);
            let w = rot[v][(i + rot[v].len() - 1) % rot[v].len()];
            dart = edge_ids[&(v, w)];
            if dart == start {
                break;
            }
        }
        // Exact signed area with positions placed on the convex curve
        // (p, p^2); counterclockwise walks are the bounded faces.
        let mut area2: i128 = 0;
        for i in 0..walk.len() {
            let p = pos[walk[i]] as i128;
            let q = pos[walk[(i + 1) % walk.len()]] as i128;
            area2 += p * q * q - q * p * p;
        }
        if area2 > 0 {
            let mut distinct = walk.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != walk.len() {
                return Err(EmbedError::MalformedFace);
            }
            faces.push(canonical_cycle(&walk));
        }
    }
    faces.sort();
    let expected = g.edge_count() + 1 - n;
    if faces.len() != expected {
        return Err(EmbedError::MalformedFace);
    }
    Ok(FaceSet { faces })
}

/// Weak dual with pendant-face marking. Face indices refer to `fs.faces`.
pub fn weak_dual(fs: &FaceSet, g: &Graph) -> Result<WeakDual, EmbedError> {
    let nf = fs.faces.len();
    let mut edge_faces: std::collections::HashMap<(usize, usize), Vec<usize>> =
        std::collections::HashMap::new();
    for (fi, face) in fs.faces.iter().enumerate() {
        for i in 0..face.len() {
            let (a, b) = (face[i], face[(i + 1) % face.len()]);
            edge_faces.entry((a.min(b), a.max(b))).or_default().push(fi);
        }
    }
    let mut links = Vec::new();
    for shared in edge_faces.values() {
        if shared.len() == 2 {
            links.push((shared[0].min(shared[1]), shared[0].max(shared[1])));
        }
    }
    links.sort_unstable();
    links.dedup();

    // Forest check by union-find.
    let mut parent: Vec<usize> = (0..nf).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(a, b) in &links {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(EmbedError::DualNotForest);
        }
        parent[ra] = rb;
    }

    let mut degree = vec![0usize; nf];
    for &(a, b) in &links {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut pendant_faces = Vec::new();
    for (fi, face) in fs.faces.iter().enumerate() {
        if degree[fi] > 1 {
            continue;
        }
        let deg3: Vec<usize> = (0..face.len()).filter(|&i| g.degree(face[i]) == 3).collect();
        let pendant = match deg3.len() {
            1 => true,
            2 => {
                let (i, j) = (deg3[0], deg3[1]);
                j - i == 1 || (i == 0 && j == face.len() - 1)
            }
            _ => false,
        };
        if pendant {
            pendant_faces.push(fi);
        }
    }
    Ok(WeakDual { nodes: nf, links, pendant_faces })
}

const RECOGNITION_LIMIT: usize = 10;

/// Exhaustive outerplanarity recognition for small graphs: tries cyclic
/// orders with vertex 0 first and returns the first valid one.
pub fn recognize_outerplanar(g: &Graph) -> Result<Vec<usize>, EmbedError> {
    let n = g.n();
    if n > RECOGNITION_LIMIT {
        return Err(EmbedError::TooLargeToRecognize { n, max: RECOGNITION_LIMIT });
    }
    if !g.is_connected() {
        return Err(EmbedError::NotConnected);
    }
    if n <= 3 {
        let order: Vec<usize> = (0..n).collect();
        return validate_outerplane(g, &order).map(|_| order);
    }
    if g.edge_count() > 2 * n - 3 {
        return Err(EmbedError::NotOuterplanar);
    }
    let mut rest: Vec<usize> = (1..n).collect();
    let mut order = Vec::with_capacity(n);
    fn permute(
        g: &Graph,
        rest: &mut Vec<usize>,
        order: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if rest.is_empty() {
            let mut full = vec![0];
            full.extend_from_slice(order);
            if validate_outerplane(g, &full).is_ok() {
                return Some(full);
            }
            return None;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            order.push(v);
            if let Some(found) = permute(g, rest, order) {
                return Some(found);
            }
            order.pop();
            rest.insert(i, v);
        }
        None
    }
    permute(g, &mut rest, &mut order).ok_or(EmbedError::NotOuterplanar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_graph() -> Graph {
        Graph::new(5, &[(0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (1, 2)]).unwrap()
    }

    #[test]
    fn square_with_one_chord_has_two_faces() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let fs = validate_outerplane(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(fs.faces, vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn k4_is_rejected_for_crossing_chords() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        assert!(matches!(
            validate_outerplane(&g, &[0, 1, 2, 3]),
            Err(EmbedError::CrossingChords { .. })
        ));
    }

    #[test]
    fn five_vertex_example_faces_and_dual() {
        // Pentagon boundary with one chord; faces are a triangle and a
        // quadrilateral.
        let g = fig1_graph();
        let fs = validate_outerplane(&g, &[0, 1, 4, 3, 2]).unwrap();
        assert_eq!(fs.faces, vec![vec![0, 1, 2], vec![1, 2, 3, 4]]);
        let dual = weak_dual(&fs, &g).unwrap();
        assert_eq!(dual.links, vec![(0, 1)]);
        // Vertices 1 and 2 have degree three and are consecutive on both
        // face cycles, so both faces are pendant.
        assert_eq!(dual.pendant_faces, vec![0, 1]);
    }

    #[test]
    fn plain_cycle_has_one_face_and_no_pendants() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let fs = validate_outerplane(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(fs.faces.len(), 1);
        let dual = weak_dual(&fs, &g).unwrap();
        assert!(dual.links.is_empty());
        assert!(dual.pendant_faces.is_empty());
    }

    #[test]
    fn two_triangles_sharing_an_edge_are_both_pendant() {
        // K4 minus an edge: triangles {0,1,2} and {0,1,3} share edge {0,1}.
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let fs = validate_outerplane(&g, &[2, 0, 3, 1]).unwrap();
        assert_eq!(fs.faces.len(), 2);
        let dual = weak_dual(&fs, &g).unwrap();
        assert_eq!(dual.links.len(), 1);
        assert_eq!(dual.pendant_faces, vec![0, 1]);
    }

    #[test]
    fn trees_have_no_bounded_faces() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let fs = validate_outerplane(&g, &[0, 1, 2, 3]).unwrap();
        assert!(fs.faces.is_empty());
    }

    #[test]
    fn duplicate_vertex_in_order_is_rejected() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            validate_outerplane(&g, &[0, 1, 1]),
            Err(EmbedError::NotAPermutation)
        );
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            validate_outerplane(&g, &[0, 1, 2, 3]),
            Err(EmbedError::NotConnected)
        );
    }

    #[test]
    fn recognition_finds_an_order_for_k4e_and_rejects_k4() {
        let k4e = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let order = recognize_outerplanar(&k4e).unwrap();
        assert!(validate_outerplane(&k4e, &order).is_ok());
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(recognize_outerplanar(&k4), Err(EmbedError::NotOuterplanar));
    }

    #[test]
    fn face_count_matches_euler_across_examples() {
        let g = fig1_graph();
        let fs = validate_outerplane(&g, &[0, 1, 4, 3, 2]).unwrap();
        assert_eq!(fs.faces.len(), g.edge_count() + 1 - g.n());
        for face in &fs.faces {
            for i in 0..face.len() {
                assert!(g.has_edge(face[i], face[(i + 1) % face.len()]));
            }
        }
    }
}
