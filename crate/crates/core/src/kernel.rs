//! Types shared by the clique and split kernels.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Edge, EdgeSet, Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// The kernel is the input itself.
    Unchanged,
    /// The kernel is an induced subgraph on the kept vertices.
    Reduced,
    /// The input is a certified no-instance; the kernel is a fixed
    /// no-instance with budget 1.
    TrivialNo,
    /// No contraction reaches the class at all.
    Infeasible,
}

impl KernelKind {
    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Unchanged => "unchanged",
            KernelKind::Reduced => "reduced",
            KernelKind::TrivialNo => "trivial_no",
            KernelKind::Infeasible => "infeasible",
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unchanged" => Ok(KernelKind::Unchanged),
            "reduced" => Ok(KernelKind::Reduced),
            "trivial_no" => Ok(KernelKind::TrivialNo),
            "infeasible" => Ok(KernelKind::Infeasible),
            other => Err(format!("unknown kernel kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("kernel solution uses {0}, which is not a kernel edge")]
    InvalidKernelSolution(Edge),
    #[error("edge set does not contract the graph into the target class")]
    NotASolution,
    #[error("solution lifting failed: {0}")]
    LiftingFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `ceil(x)` that ignores floating-point noise just above an integer.
pub(crate) fn ceil_tolerant(x: f64) -> usize {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r as usize
    } else {
        x.ceil() as usize
    }
}

/// Rejects edge sets that are not edge sets of the kernel graph.
pub(crate) fn check_kernel_edges(kernel: &Graph, f: &[Edge]) -> Result<(), KernelError> {
    match f.iter().find(|e| !kernel.contains_edge(e)) {
        Some(e) => Err(KernelError::InvalidKernelSolution(*e)),
        None => Ok(()),
    }
}

/// Translates kernel-vertex edges back to original ids.
pub(crate) fn to_original(kept: &[Vertex], f: &[Edge]) -> EdgeSet {
    f.iter().map(|e| Edge::new(kept[e.u], kept[e.v])).collect()
}

/// Lexicographically least edge of `g` with one end in `a` and one in `b`.
pub(crate) fn least_crossing_edge(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Option<Edge> {
    let mut in_b = vec![false; g.n()];
    for &v in b {
        in_b[v] = true;
    }
    a.iter()
        .flat_map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| in_b[w])
                .map(move |&w| Edge::new(u, w))
        })
        .min()
}
