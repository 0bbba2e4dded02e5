//! Vertex labelings and the t-tone / good / 3-good verifier.
//!
//! A t-tone k-coloring assigns each vertex a set of `t` distinct colors from
//! `{1..=k}` so that vertices at distance `d` share fewer than `d` colors.
//! A good 2-tone coloring additionally requires vertices at distance two to
//! share exactly one color; a 3-good coloring uses 3-element labels with
//! adjacent labels disjoint and distance-two labels sharing exactly one
//! color. Every valid 3-good labeling is automatically a valid 3-tone one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combi::{colors_of_mask, mask_of_colors};
use crate::graph::{distances_up_to, Graph};

/// Possibly-partial assignment of sorted color sets to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    t: usize,
    k: usize,
    labels: Vec<Option<Vec<u16>>>,
}

impl Labeling {
    pub fn empty(t: usize, k: usize, n: usize) -> Self {
        Labeling { t, k, labels: vec![None; n] }
    }

    /// Total labeling from per-vertex color lists; each list is sorted.
    pub fn total(t: usize, k: usize, labels: Vec<Vec<u16>>) -> Self {
        let labels = labels
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                Some(l)
            })
            .collect();
        Labeling { t, k, labels }
    }

    pub(crate) fn from_masks(t: usize, k: usize, masks: &[u64]) -> Self {
        Labeling {
            t,
            k,
            labels: masks.iter().map(|&m| Some(colors_of_mask(m))).collect(),
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, v: usize) -> Option<&[u16]> {
        self.labels[v].as_deref()
    }

    pub fn set(&mut self, v: usize, mut colors: Vec<u16>) {
        colors.sort_unstable();
        self.labels[v] = Some(colors);
    }

    pub fn is_total(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Largest color appearing in any label, or 0 for an all-empty labeling.
    pub fn max_color_used(&self) -> u16 {
        self.labels
            .iter()
            .flatten()
            .flat_map(|l| l.iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn shared_colors(&self, u: usize, v: usize) -> usize {
        match (&self.labels[u], &self.labels[v]) {
            (Some(a), Some(b)) => {
                (mask_of_colors(a) & mask_of_colors(b)).count_ones() as usize
            }
            _ => 0,
        }
    }

    pub(crate) fn masks(&self) -> Vec<Option<u64>> {
        self.labels
            .iter()
            .map(|l| l.as_ref().map(|c| mask_of_colors(c)))
            .collect()
    }

    /// Relabels every vertex through a color permutation given as a map on
    /// `1..=k` (index 0 unused).
    pub fn permuted(&self, perm: &[u16]) -> Labeling {
        let labels = self
            .labels
            .iter()
            .map(|l| {
                l.as_ref().map(|colors| {
                    let mut mapped: Vec<u16> =
                        colors.iter().map(|&c| perm[c as usize]).collect();
                    mapped.sort_unstable();
                    mapped
                })
            })
            .collect();
        Labeling { t: self.t, k: self.k, labels }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Vertices at distance d share fewer than d colors.
    TTone,
    /// t = 2, t-tone rules plus: distance-two labels share exactly one color.
    GoodTwoTone,
    /// t = 3, adjacent labels disjoint and distance-two labels share exactly
    /// one color.
    ThreeGood,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    TTone,
    GoodExactOne,
    ThreeGoodAdjacentDisjoint,
    ThreeGoodExactOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub distance: u32,
    pub shared: usize,
    pub rule: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex {vertex} has no label but the labeling must be total")]
    NotTotal { vertex: usize },
    #[error("vertex {vertex} carries {found} colors, expected {expected}")]
    WrongLabelSize { vertex: usize, expected: usize, found: usize },
    #[error("vertex {vertex} uses color {color} outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: u16, k: usize },
    #[error("mode requires t = {expected}, labeling has t = {found}")]
    WrongTone { expected: usize, found: usize },
    #[error("labeling has {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}

fn check_well_formed(g: &Graph, f: &Labeling) -> Result<(), VerifyError> {
    if f.n() != g.n() {
        return Err(VerifyError::SizeMismatch { expected: g.n(), found: f.n() });
    }
    for v in 0..g.n() {
        let Some(label) = f.get(v) else {
            return Err(VerifyError::NotTotal { vertex: v });
        };
        let distinct = mask_of_colors(label).count_ones() as usize;
        if label.len() != f.t() || distinct != f.t() {
            return Err(VerifyError::WrongLabelSize {
                vertex: v,
                expected: f.t(),
                found: distinct.min(label.len()),
            });
        }
        for &c in label {
            if c == 0 || c as usize > f.k() {
                return Err(VerifyError::ColorOutOfRange { vertex: v, color: c, k: f.k() });
            }
        }
    }
    Ok(())
}

/// Checks a total labeling against a graph. Reports every violated pair;
/// pairs at distance greater than t can never violate the t-tone rule since
/// labels have only t colors, so only distances up to the relevant cap are
/// inspected.
pub fn verify(g: &Graph, f: &Labeling, mode: VerifyMode) -> Result<VerificationReport, VerifyError> {
    check_well_formed(g, f)?;
    match mode {
        VerifyMode::GoodTwoTone if f.t() != 2 => {
            return Err(VerifyError::WrongTone { expected: 2, found: f.t() })
        }
        VerifyMode::ThreeGood if f.t() != 3 => {
            return Err(VerifyError::WrongTone { expected: 3, found: f.t() })
        }
        _ => {}
    }
    let cap = match mode {
        VerifyMode::TTone => f.t() as u32,
        VerifyMode::GoodTwoTone | VerifyMode::ThreeGood => 2,
    };
    let dist = distances_up_to(g, cap.max(1));
    let masks: Vec<u64> = f.masks().into_iter().map(Option::unwrap).collect();

    let mut violations = Vec::new();
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let Some(d) = dist.get(u, v) else { continue };
            if d == 0 {
                continue;
            }
            let shared = (masks[u] & masks[v]).count_ones() as usize;
            match mode {
                VerifyMode::TTone => {
                    if shared >= d as usize {
                        violations.push(Violation { u, v, distance: d, shared, rule: Rule::TTone });
                    }
                }
                VerifyMode::GoodTwoTone => {
                    if shared >= d as usize {
                        violations.push(Violation { u, v, distance: d, shared, rule: Rule::TTone });
                    }
                    if d == 2 && shared != 1 {
                        violations.push(Violation {
                            u,
                            v,
                            distance: d,
                            shared,
                            rule: Rule::GoodExactOne,
                        });
                    }
                }
                VerifyMode::ThreeGood => {
                    if d == 1 && shared >= 1 {
                        violations.push(Violation {
                            u,
                            v,
                            distance: d,
                            shared,
                            rule: Rule::ThreeGoodAdjacentDisjoint,
                        });
                    }
                    if d == 2 && shared != 1 {
                        violations.push(Violation {
                            u,
                            v,
                            distance: d,
                            shared,
                            rule: Rule::ThreeGoodExactOne,
                        });
                    }
                }
            }
        }
    }
    Ok(VerificationReport { violations })
}
