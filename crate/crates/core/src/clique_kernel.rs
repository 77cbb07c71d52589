//! Approximate kernel for contracting a graph into a clique.
//!
//! With `X` a deletion set leaving a clique `Y`, the kernel keeps `X` and a
//! marked subset `Y'` of `Y`: for every `A ⊆ X` with `|A| <= d`, one vertex
//! of `Y` seeing all of `A` and `2k + 1` vertices of `Y` seeing none of it.
//! Any kernel solution lifts back at a loss of at most one edge per `d`.

use crate::approx::clique_deletion_2approx;
use crate::combinatorics::{binomial_prefix_sum, for_each_subset_up_to};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::kernel::{
    ceil_tolerant, check_kernel_edges, least_crossing_edge, to_original, KernelError, KernelKind,
};
use crate::objective::Objective;
use crate::witness::{contract_edges, is_connected, spanning_forest};

pub use crate::objective::objective_clc;

#[derive(Debug, Clone, PartialEq)]
pub struct CliqueKernelConfig {
    pub epsilon: f64,
    pub k: usize,
    pub d: usize,
    /// When false, marking runs even on inputs already below the size bound.
    pub size_guard: bool,
}

impl CliqueKernelConfig {
    pub fn new(k: usize, epsilon: f64) -> Result<Self, KernelError> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(KernelError::InvalidParameter(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        Ok(CliqueKernelConfig {
            epsilon,
            k,
            d: ceil_tolerant(1.0 / epsilon).max(1),
            size_guard: true,
        })
    }

    pub fn with_size_guard(mut self, on: bool) -> Self {
        self.size_guard = on;
        self
    }

    /// Largest possible reduced kernel: `4k + (2k + 2) * sum_{i<=d} C(4k, i)`.
    pub fn size_bound(&self) -> u128 {
        let four_k = 4 * self.k as u128;
        binomial_prefix_sum(four_k, self.d as u128)
            .saturating_mul(2 * self.k as u128 + 2)
            .saturating_add(four_k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub kind: KernelKind,
    pub graph: Graph,
    pub k_out: usize,
    /// Original id of every kernel vertex; empty for `TrivialNo`.
    pub kept: Vec<Vertex>,
    /// The deletion set `X` in original ids.
    pub partition_x: Vec<Vertex>,
}

impl KernelResult {
    fn same(g: &Graph, kind: KernelKind, k: usize) -> Self {
        KernelResult {
            kind,
            graph: g.clone(),
            k_out: k,
            kept: (0..g.n()).collect(),
            partition_x: Vec::new(),
        }
    }

    fn trivial_no() -> Self {
        KernelResult {
            kind: KernelKind::TrivialNo,
            graph: Graph::path(4),
            k_out: 1,
            kept: Vec::new(),
            partition_x: Vec::new(),
        }
    }
}

fn complement_of(n: usize, x: &[Vertex]) -> Vec<Vertex> {
    let mut in_x = vec![false; n];
    for &v in x {
        in_x[v] = true;
    }
    (0..n).filter(|&v| !in_x[v]).collect()
}

fn neighbors_all(g: &Graph, y: Vertex, a: &[Vertex]) -> bool {
    a.iter().all(|&v| g.has_edge(y, v))
}

fn neighbors_none(g: &Graph, y: Vertex, a: &[Vertex]) -> bool {
    a.iter().all(|&v| !g.has_edge(y, v))
}

/// For every `A ⊆ x` with `|A| <= d`, the minimum-id vertex outside `x`
/// adjacent to all of `A`. Sorted.
pub fn mark_m1(g: &Graph, x: &[Vertex], d: usize) -> Vec<Vertex> {
    let y = complement_of(g.n(), x);
    let mut marked = vec![false; g.n()];
    for_each_subset_up_to(x, d, |a| {
        if let Some(&v) = y.iter().find(|&&v| neighbors_all(g, v, a)) {
            marked[v] = true;
        }
    });
    (0..g.n()).filter(|&v| marked[v]).collect()
}

/// For every `A ⊆ x` with `|A| <= d`, the `2k + 1` minimum-id vertices
/// outside `x` with no neighbour in `A`. Sorted.
pub fn mark_m2(g: &Graph, x: &[Vertex], d: usize, k: usize) -> Vec<Vertex> {
    let y = complement_of(g.n(), x);
    let mut marked = vec![false; g.n()];
    for_each_subset_up_to(x, d, |a| {
        for &v in y
            .iter()
            .filter(|&&v| neighbors_none(g, v, a))
            .take(2 * k + 1)
        {
            marked[v] = true;
        }
    });
    (0..g.n()).filter(|&v| marked[v]).collect()
}

pub fn reduce_clique(g: &Graph, cfg: &CliqueKernelConfig) -> KernelResult {
    let k = cfg.k;
    if !is_connected(g) {
        return KernelResult::same(g, KernelKind::Infeasible, k);
    }
    if g.n() <= k + 3 {
        return KernelResult::same(g, KernelKind::Unchanged, k);
    }
    let x = clique_deletion_2approx(g);
    if x.len() > 4 * k {
        return KernelResult::trivial_no();
    }
    if cfg.size_guard && (g.n() as u128) <= cfg.size_bound() {
        let mut r = KernelResult::same(g, KernelKind::Unchanged, k);
        r.partition_x = x;
        return r;
    }
    let mut keep = x.clone();
    keep.extend(mark_m1(g, &x, cfg.d));
    keep.extend(mark_m2(g, &x, cfg.d, k));
    let (graph, kept) = g.induced_subgraph(&keep);
    KernelResult {
        kind: KernelKind::Reduced,
        graph,
        k_out: k,
        kept,
        partition_x: x,
    }
}

/// Maps a kernel solution (in kernel ids) back to a solution of `g`.
pub fn lift_clique(
    g: &Graph,
    cfg: &CliqueKernelConfig,
    kr: &KernelResult,
    f_prime: &[Edge],
) -> Result<EdgeSet, KernelError> {
    check_kernel_edges(&kr.graph, f_prime)?;
    let k = cfg.k;
    let value = objective_clc(&kr.graph, kr.k_out, f_prime)?;
    let useful = matches!(value, Objective::Finite(v) if v <= kr.k_out);
    if matches!(kr.kind, KernelKind::TrivialNo | KernelKind::Infeasible) || !useful {
        return Ok(spanning_forest(g));
    }
    let f = to_original(&kr.kept, f_prime);
    if kr.kind == KernelKind::Unchanged {
        return Ok(f);
    }

    let (_, w) = contract_edges(&kr.graph, f_prime)?;
    let blocks: Vec<Vec<Vertex>> = w
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| kr.kept[i]).collect())
        .collect();
    let mut in_x = vec![false; g.n()];
    for &v in &kr.partition_x {
        in_x[v] = true;
    }
    let mut is_kept = vec![false; g.n()];
    for &v in &kr.kept {
        is_kept[v] = true;
    }
    let deleted: Vec<Vertex> = (0..g.n()).filter(|&v| !is_kept[v]).collect();
    if deleted.is_empty() {
        return Ok(f);
    }
    let anchor_vertex = kr
        .kept
        .iter()
        .copied()
        .filter(|&v| !in_x[v])
        .min()
        .ok_or_else(|| KernelError::LiftingFailed("no marked clique vertex".into()))?;
    let anchor = blocks
        .iter()
        .find(|b| b.contains(&anchor_vertex))
        .expect("every kept vertex lies in a block");

    let mut lifted = f;
    for b in &blocks {
        let inside_x = b.iter().all(|&v| in_x[v]);
        let missed = deleted.iter().any(|&y| neighbors_none(g, y, b));
        if inside_x && missed {
            let e = least_crossing_edge(g, b, anchor).ok_or_else(|| {
                KernelError::LiftingFailed(format!("block {b:?} does not touch the anchor"))
            })?;
            lifted.insert(e);
        }
    }
    if !objective_clc(g, k, &lifted)?.is_finite() {
        return Err(KernelError::LiftingFailed(
            "lifted edge set does not contract to a clique".into(),
        ));
    }
    Ok(lifted)
}
