//! Reductions from Set Cover to chordal contraction and from multicolored
//! densest subgraph to split contraction, with their solution maps.

pub mod chordal;
pub mod split_gadget;

use thiserror::Error;

use crate::graph::{Edge, GraphError};

pub use chordal::{
    chordal_solution_to_set_cover, induced_cycles, objective_chc, set_cover_to_chordal,
    unexpected_induced_cycles, ChordalInstance, ChordalRole, SetCoverInstance,
};
pub use split_gadget::{
    build_split_gadget, clique_to_split_solution, extract_colorful_edges, extract_dense_subgraph,
    forced_clique_side_violations, CapClass, ColoredGraph, Extraction, GadgetInstance,
    GadgetParams, GadgetRole,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HardnessError {
    #[error("element {0} is not covered by any set")]
    UncoveredElement(usize),
    #[error("element {element} out of range for a universe of {n} elements")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("color class {0} is empty")]
    EmptyColorClass(usize),
    #[error("expected {expected} colors, found {found}")]
    BadColorCount { expected: usize, found: usize },
    #[error("edge {edge} has color {color}, outside 1..={t}")]
    ColorOutOfRange { edge: Edge, color: usize, t: usize },
    #[error("edge {0} has no color")]
    UncoloredEdge(Edge),
    #[error("host graph needs at least {needed} vertices, has {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex set is not a colorful clique of the required size")]
    NotAColorfulClique,
    #[error("edge set does not contract the gadget into a split graph")]
    NotASolution,
    #[error("solution has {size} edges, above the budget {budget:.3}")]
    BudgetExceeded { size: usize, budget: f64 },
    #[error("extraction bound violated: {0}")]
    BoundViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
