//! Exact t-tone colorability by backtracking, plus the bounded extension
//! search the constructive colorers use to relabel small vertex sets.
//!
//! The search is deterministic: vertices are assigned in breadth-first order
//! from a maximum-degree vertex, candidate labels are enumerated in
//! lexicographic order, the first vertex is pinned to `{1..=t}`, and a color
//! may only be introduced once all smaller colors already appear. Those
//! prunings preserve satisfiability because the constraints are invariant
//! under color permutation. Budgets count label placements, not wall-clock
//! time, so identical calls explore identical trees on every machine.

use thiserror::Error;

use crate::combi::subsets_lex;
use crate::graph::{distances_up_to, DistanceTable, Graph};
use crate::labeling::{verify, Labeling, VerifyMode};

/// Deterministic cost limit: one node per attempted label placement.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 50_000_000 }
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Sat(Labeling),
    Unsat,
    Timeout,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("need 1 <= t <= k, got t = {t}, k = {k}")]
    InvalidParams { t: usize, k: usize },
    #[error("palette size {k} exceeds the 63-color mask limit")]
    PaletteTooLarge { k: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TauError {
    #[error("invalid tone size t = {t}")]
    InvalidTone { t: usize },
    #[error("search budget exhausted while deciding k = {k}")]
    BudgetExhausted { k: usize },
}

enum Search {
    Found,
    Exhausted,
    Timeout,
}

struct Ctx<'a> {
    cands: &'a [u64],
    /// Per position: (earlier position, distance) pairs with distance <= t.
    cons: Vec<Vec<(usize, u32)>>,
    assigned: Vec<u64>,
    first_fixed: u64,
    nodes: u64,
    max_nodes: u64,
}

impl Ctx<'_> {
    fn assign(&mut self, pos: usize, max_used: u32) -> Search {
        if pos == self.cons.len() {
            return Search::Found;
        }
        let single;
        let cands: &[u64] = if pos == 0 {
            single = [self.first_fixed];
            &single
        } else {
            self.cands
        };
        for &cand in cands {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Search::Timeout;
            }
            // New colors must extend the used prefix contiguously.
            let hi = cand >> max_used;
            if hi & (hi + 1) != 0 {
                continue;
            }
            let mut ok = true;
            for &(j, d) in &self.cons[pos] {
                if (cand & self.assigned[j]).count_ones() >= d {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            self.assigned[pos] = cand;
            match self.assign(pos + 1, max_used + hi.count_ones()) {
                Search::Found => return Search::Found,
                Search::Timeout => return Search::Timeout,
                Search::Exhausted => {}
            }
        }
        self.assigned[pos] = 0;
        Search::Exhausted
    }
}

/// Decides whether `g` admits a t-tone k-coloring within the budget. A `Sat`
/// outcome carries a witness that has already passed the verifier; `Unsat`
/// is only reported after the pruned search space is exhausted.
pub fn decide_colorable(
    g: &Graph,
    t: usize,
    k: usize,
    budget: SearchBudget,
) -> Result<SolveOutcome, SolveError> {
    if t < 1 || t > k {
        return Err(SolveError::InvalidParams { t, k });
    }
    if k > 63 {
        return Err(SolveError::PaletteTooLarge { k });
    }
    let order = g.bfs_order_from_max_degree();
    let pos_of: Vec<usize> = {
        let mut p = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let dist = distances_up_to(g, t as u32);
    let mut cons: Vec<Vec<(usize, u32)>> = vec![Vec::new(); g.n()];
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if let Some(d) = dist.get(u, v) {
                let (a, b) = (pos_of[u], pos_of[v]);
                let (early, late) = (a.min(b), a.max(b));
                cons[late].push((early, d));
            }
        }
    }
    let cands = subsets_lex(k, t);
    let mut ctx = Ctx {
        cands: &cands,
        cons,
        assigned: vec![0; g.n()],
        first_fixed: (1u64 << t) - 1,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    match ctx.assign(0, 0) {
        Search::Timeout => Ok(SolveOutcome::Timeout),
        Search::Exhausted => Ok(SolveOutcome::Unsat),
        Search::Found => {
            let mut masks = vec![0u64; g.n()];
            for (i, &v) in order.iter().enumerate() {
                masks[v] = ctx.assigned[i];
            }
            let witness = Labeling::from_masks(t, k, &masks);
            let report = verify(g, &witness, VerifyMode::TTone)
                .expect("solver produced a malformed labeling");
            assert!(
                report.valid(),
                "solver returned an invalid witness: {:?}",
                report.violations
            );
            Ok(SolveOutcome::Sat(witness))
        }
    }
}

/// Smallest k admitting a t-tone k-coloring, with a verified witness.
/// Iterates k = t, t+1, ... with a fresh budget per decision; `t * n` colors
/// always suffice, so the iteration terminates.
pub fn exact_tau(g: &Graph, t: usize, budget: SearchBudget) -> Result<(usize, Labeling), TauError> {
    if t < 1 {
        return Err(TauError::InvalidTone { t });
    }
    if g.n() == 0 {
        return Ok((t, Labeling::empty(t, t, 0)));
    }
    let mut k = t;
    loop {
        match decide_colorable(g, t, k, budget).map_err(|_| TauError::InvalidTone { t })? {
            SolveOutcome::Sat(witness) => return Ok((k, witness)),
            SolveOutcome::Unsat => k += 1,
            SolveOutcome::Timeout => return Err(TauError::BudgetExhausted { k }),
        }
    }
}

// ---------------------------------------------------------------------------
// Bounded extension search shared by the constructive colorers.
// ---------------------------------------------------------------------------

/// Pairwise constraint family used by an extension search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PairRule {
    /// Distance-d pairs share fewer than d colors; checked up to distance t.
    Tone(u32),
    /// Adjacent disjoint, distance-two share exactly one (2-tone good).
    GoodTwo,
    /// Adjacent disjoint, distance-two share exactly one (3-good).
    GoodThree,
}

impl PairRule {
    pub(crate) fn cap(self) -> u32 {
        match self {
            PairRule::Tone(t) => t,
            PairRule::GoodTwo | PairRule::GoodThree => 2,
        }
    }

    pub(crate) fn tone(self) -> usize {
        match self {
            PairRule::Tone(t) => t as usize,
            PairRule::GoodTwo => 2,
            PairRule::GoodThree => 3,
        }
    }

    pub(crate) fn pair_ok(self, d: u32, shared: u32) -> bool {
        match self {
            PairRule::Tone(_) => shared < d,
            PairRule::GoodTwo | PairRule::GoodThree => match d {
                1 => shared == 0,
                2 => shared == 1,
                _ => true,
            },
        }
    }
}

pub(crate) enum ExtendOutcome {
    Found,
    Fail,
    Timeout,
}

/// Reassigns the labels of `scope` (clearing any current values) so that all
/// constraints touching scope vertices hold; labels outside the scope stay
/// fixed. Fails fast when a fixed-fixed pair is already violated, since no
/// scope assignment can repair it.
pub(crate) fn extend_in_place(
    g: &Graph,
    dist: &DistanceTable,
    rule: PairRule,
    k: usize,
    labels: &mut [Option<u64>],
    scope: &[usize],
    max_nodes: u64,
) -> ExtendOutcome {
    debug_assert!(dist.cap() >= rule.cap());
    let n = g.n();
    let mut in_scope = vec![false; n];
    for &v in scope {
        in_scope[v] = true;
        labels[v] = None;
    }
    for u in 0..n {
        if in_scope[u] || labels[u].is_none() {
            continue;
        }
        for v in (u + 1)..n {
            if in_scope[v] || labels[v].is_none() {
                continue;
            }
            if let Some(d) = dist.get(u, v) {
                if d >= 1 && d <= rule.cap() {
                    let shared = (labels[u].unwrap() & labels[v].unwrap()).count_ones();
                    if !rule.pair_ok(d, shared) {
                        return ExtendOutcome::Fail;
                    }
                }
            }
        }
    }

    // Constraint partners of each scope vertex, within the distance cap.
    let partners: Vec<Vec<(usize, u32)>> = scope
        .iter()
        .map(|&v| {
            let mut p = Vec::new();
            for u in 0..n {
                if u == v {
                    continue;
                }
                if let Some(d) = dist.get(v, u) {
                    if d >= 1 && d <= rule.cap() {
                        p.push((u, d));
                    }
                }
            }
            p
        })
        .collect();

    let cands = subsets_lex(k, rule.tone());
    let mut nodes = 0u64;
    fn rec(
        idx: usize,
        scope: &[usize],
        partners: &[Vec<(usize, u32)>],
        cands: &[u64],
        rule: PairRule,
        labels: &mut [Option<u64>],
        nodes: &mut u64,
        max_nodes: u64,
    ) -> ExtendOutcome {
        if idx == scope.len() {
            return ExtendOutcome::Found;
        }
        let v = scope[idx];
        for &cand in cands {
            *nodes += 1;
            if *nodes > max_nodes {
                return ExtendOutcome::Timeout;
            }
            let ok = partners[idx].iter().all(|&(u, d)| match labels[u] {
                Some(m) => rule.pair_ok(d, (cand & m).count_ones()),
                None => true,
            });
            if !ok {
                continue;
            }
            labels[v] = Some(cand);
            match rec(idx + 1, scope, partners, cands, rule, labels, nodes, max_nodes) {
                ExtendOutcome::Found => return ExtendOutcome::Found,
                ExtendOutcome::Timeout => return ExtendOutcome::Timeout,
                ExtendOutcome::Fail => labels[v] = None,
            }
        }
        ExtendOutcome::Fail
    }
    rec(0, scope, &partners, &cands, rule, labels, &mut nodes, max_nodes)
}

/// Tries progressively larger scopes until one extension succeeds. Returns
/// the scope that worked.
pub(crate) fn extend_escalating(
    g: &Graph,
    rule: PairRule,
    k: usize,
    labels: &mut [Option<u64>],
    scopes: &[Vec<usize>],
    max_nodes: u64,
) -> Option<Vec<usize>> {
    let dist = distances_up_to(g, rule.cap());
    for scope in scopes {
        let mut attempt: Vec<Option<u64>> = labels.to_vec();
        match extend_in_place(g, &dist, rule, k, &mut attempt, scope, max_nodes) {
            ExtendOutcome::Found => {
                labels.copy_from_slice(&attempt);
                return Some(scope.clone());
            }
            ExtendOutcome::Fail | ExtendOutcome::Timeout => {}
        }
    }
    None
}

/// Scope helper: `base` plus every retained vertex within the given distance
/// of `base`, deduplicated, base first.
pub(crate) fn scope_with_neighborhood(g: &Graph, base: &[usize], radius: u32) -> Vec<usize> {
    let dist = distances_up_to(g, radius.max(1));
    let mut scope = base.to_vec();
    let mut seen = vec![false; g.n()];
    for &v in base {
        seen[v] = true;
    }
    for u in 0..g.n() {
        if seen[u] {
            continue;
        }
        if base.iter().any(|&b| matches!(dist.get(b, u), Some(d) if d <= radius)) {
            scope.push(u);
        }
    }
    scope
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

    fn fig1() -> Graph {
        Graph::new(5, &[(0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_needs_six_colors_for_two_tone() {
        let b = SearchBudget::default();
        assert!(matches!(decide_colorable(&cycle(3), 2, 5, b).unwrap(), SolveOutcome::Unsat));
        match decide_colorable(&cycle(3), 2, 6, b).unwrap() {
            SolveOutcome::Sat(w) => {
                assert!(verify(&cycle(3), &w, VerifyMode::TTone).unwrap().valid())
            }
            other => panic!("expected SAT, got {other:?}"),
        }
    }

    #[test]
    fn single_vertex_is_trivially_colorable() {
        let g = Graph::new(1, &[]).unwrap();
        match decide_colorable(&g, 2, 2, SearchBudget::default()).unwrap() {
            SolveOutcome::Sat(w) => assert_eq!(w.get(0), Some(&[1u16, 2][..])),
            other => panic!("expected SAT, got {other:?}"),
        }
    }

    #[test]
    fn known_two_tone_numbers() {
        let b = SearchBudget::default();
        assert_eq!(exact_tau(&cycle(7), 2, b).unwrap().0, 6);
        assert_eq!(exact_tau(&k4_minus_e(), 2, b).unwrap().0, 7);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(exact_tau(&k4, 2, b).unwrap().0, 8);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(exact_tau(&p3, 2, b).unwrap().0, 5);
    }

    #[test]
    fn known_three_tone_numbers() {
        let b = SearchBudget::default();
        assert_eq!(exact_tau(&k4_minus_e(), 3, b).unwrap().0, 11);
        assert_eq!(exact_tau(&fig1(), 3, b).unwrap().0, 11);
    }

    #[test]
    fn timeout_is_reported_not_misjudged() {
        let g = cycle(7);
        match decide_colorable(&g, 2, 5, SearchBudget::new(3)).unwrap() {
            SolveOutcome::Timeout => {}
            other => panic!("expected timeout under a 3-node budget, got {other:?}"),
        }
    }

    #[test]
    fn invalid_params_are_rejected() {
        let g = cycle(3);
        assert!(decide_colorable(&g, 3, 2, SearchBudget::default()).is_err());
        assert!(exact_tau(&g, 0, SearchBudget::default()).is_err());
    }

    #[test]
    fn extension_search_relabels_a_scope() {
        // Path 0-1-2 with both endpoints pinned to the same label; relabeling
        // the middle cannot help, the scope must include an endpoint.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut labels = vec![Some(0b11u64), None, Some(0b11u64)];
        let got = extend_escalating(
            &g,
            PairRule::Tone(2),
            5,
            &mut labels,
            &[vec![1], vec![1, 2]],
            1_000_000,
        );
        assert_eq!(got, Some(vec![1, 2]));
        for l in &labels {
            assert!(l.is_some());
        }
    }
}
