//! t-tone graph colorings.
//!
//! A t-tone k-coloring assigns each vertex a set of t distinct colors from
//! `{1..=k}` so that vertices at distance d share fewer than d colors. This
//! crate provides:
//!
//! - a verifier for t-tone, good 2-tone, and 3-good labelings;
//! - an exact backtracking solver for the t-tone chromatic number on small
//!   instances;
//! - constructive polynomial-time colorers for subcubic outerplanar graphs
//!   (5/6/7-color 2-tone, 11-color 3-good) and for Halin graphs (7-color
//!   2-tone in the cubic case, a degree-based bound in general);
//! - structural validators for outerplane embeddings (faces, weak dual,
//!   pendant faces) and Halin decompositions (tree + leaf cycle, fans);
//! - deterministic seeded generators and conjecture scanners;
//! - a CLI over a small JSON graph format.

pub mod cli;
mod combi;
pub mod cycles;
pub mod generate;
pub mod graph;
pub mod halin;
pub mod halin_color;
pub mod io;
pub mod labeling;
pub mod outerplanar;
pub mod outerplane;
pub mod rng;
pub mod scan;
pub mod solver;
pub mod subgraphs;
pub mod trees;

pub use graph::{distances_up_to, DistanceTable, Graph, GraphError};
pub use labeling::{verify, Labeling, Rule, VerificationReport, VerifyError, VerifyMode, Violation};
pub use solver::{decide_colorable, exact_tau, SearchBudget, SolveOutcome};
pub use subgraphs::{detect_forbidden, ForbiddenSubgraphs};
