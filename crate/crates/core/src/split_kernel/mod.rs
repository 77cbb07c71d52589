//! Approximate kernel for contracting a graph into a split graph.
//!
//! With `S` a deletion set leaving a split graph with partition `(X, Y)`
//! (`X` the clique side), the kernel keeps `S`, a marked subset `Y'` of `Y`
//! and a marked subset `X'` of `X`. Every mark is indexed by a subset of at
//! most `d` vertices of `S` (for `Y'`) or of `S ∪ Y'` (for `X'`).

mod lift;

pub use lift::{
    exact_split_search, lift_split, lift_split_construct, lift_split_traced,
    normalize_split_solution, LiftTier,
};

use crate::approx::split_deletion_5approx;
use crate::combinatorics::{binomial_prefix_sum, for_each_subset_up_to};
use crate::graph::{Graph, Vertex};
use crate::kernel::{ceil_tolerant, KernelError, KernelKind};
use crate::recognize::is_split;
use crate::witness::connected_components;

pub use crate::objective::objective_spc;

/// Default cap on candidate edge sets examined by the exact lifting tier.
pub const DEFAULT_EXACT_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SplitKernelConfig {
    pub epsilon: f64,
    pub k: usize,
    pub alpha_prime: f64,
    pub alpha: f64,
    pub d: usize,
    pub c: f64,
    /// When false, marking runs even on inputs already below the size bound.
    pub size_guard: bool,
    /// Largest number of candidate sets the exact lifting tier may examine.
    pub exact_guard: u128,
}

impl SplitKernelConfig {
    /// Uses the midpoint `alpha = (1 + alpha') / 2`.
    pub fn new(k: usize, epsilon: f64) -> Result<Self, KernelError> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(KernelError::InvalidParameter(format!(
                "epsilon must be positive, got {epsilon}"
            )));
        }
        let alpha_prime = 1.0 + epsilon / 2.0;
        Self::with_alpha(k, epsilon, (1.0 + alpha_prime) / 2.0)
    }

    pub fn with_alpha(k: usize, epsilon: f64, alpha: f64) -> Result<Self, KernelError> {
        let alpha_prime = 1.0 + epsilon / 2.0;
        if !(alpha > 1.0 && alpha < alpha_prime) {
            return Err(KernelError::InvalidParameter(format!(
                "alpha must lie strictly between 1 and {alpha_prime}, got {alpha}"
            )));
        }
        Ok(SplitKernelConfig {
            epsilon,
            k,
            alpha_prime,
            alpha,
            d: ceil_tolerant(1.0 / (alpha - 1.0)).max(2),
            c: 1.0 / (alpha_prime - alpha),
            size_guard: true,
            exact_guard: DEFAULT_EXACT_GUARD,
        })
    }

    pub fn with_size_guard(mut self, on: bool) -> Self {
        self.size_guard = on;
        self
    }

    pub fn with_exact_guard(mut self, limit: u128) -> Self {
        self.exact_guard = limit;
        self
    }

    /// Worst-case number of marked `Y` vertices: `(k + 3) * sum_{i<=d} C(10k, i)`.
    pub fn max_marked_y(&self) -> u128 {
        let k = self.k as u128;
        binomial_prefix_sum(10 * k, self.d as u128).saturating_mul(k + 3)
    }

    /// Worst-case number of marked `X` vertices:
    /// `(2k + 4) * sum_{i<=d} C(10k + |Y'|, i) + 2k + 2`.
    pub fn max_marked_x(&self) -> u128 {
        let k = self.k as u128;
        let pool = (10 * k).saturating_add(self.max_marked_y());
        binomial_prefix_sum(pool, self.d as u128)
            .saturating_mul(2 * k + 4)
            .saturating_add(2 * k + 2)
    }

    /// `10k + max_marked_y + max_marked_x`.
    pub fn size_bound(&self) -> u128 {
        (10 * self.k as u128)
            .saturating_add(self.max_marked_y())
            .saturating_add(self.max_marked_x())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitKernelResult {
    pub kind: KernelKind,
    pub graph: Graph,
    pub k_out: usize,
    /// Original id of every kernel vertex; empty for `TrivialNo`.
    pub kept: Vec<Vertex>,
    /// Deletion set `S`, original ids.
    pub s: Vec<Vertex>,
    /// Marked clique-side vertices, original ids.
    pub x_prime: Vec<Vertex>,
    /// Marked independent-side vertices, original ids.
    pub y_prime: Vec<Vertex>,
    /// Edges forced by contracting every non-retained component to a vertex.
    pub mandatory_cost: usize,
    /// The component that was kernelized, original ids.
    pub retained: Vec<Vertex>,
}

impl SplitKernelResult {
    fn trivial_no() -> Self {
        SplitKernelResult {
            kind: KernelKind::TrivialNo,
            graph: Graph::cycle(5),
            k_out: 1,
            kept: Vec::new(),
            s: Vec::new(),
            x_prime: Vec::new(),
            y_prime: Vec::new(),
            mandatory_cost: 0,
            retained: Vec::new(),
        }
    }
}

fn sorted_flags(n: usize, marked: &[bool]) -> Vec<Vertex> {
    (0..n).filter(|&v| marked[v]).collect()
}

/// Marks on the independent side `y`, indexed by subsets `A ⊆ s` with
/// `|A| <= d`: the `k + 2` minimum-id vertices of `N(A) ∩ y`, and the
/// highest-degree vertex of `y` adjacent to all of `A` (ties to smaller id).
pub fn mark_y(g: &Graph, s: &[Vertex], y: &[Vertex], d: usize, k: usize) -> Vec<Vertex> {
    let mut marked = vec![false; g.n()];
    for_each_subset_up_to(s, d, |a| {
        let seen_by_a = y
            .iter()
            .filter(|&&v| a.iter().any(|&u| g.has_edge(u, v)))
            .take(k + 2);
        for &v in seen_by_a {
            marked[v] = true;
        }
        let best = y
            .iter()
            .copied()
            .filter(|&v| a.iter().all(|&u| g.has_edge(u, v)))
            .max_by(|&p, &q| g.degree(p).cmp(&g.degree(q)).then(q.cmp(&p)));
        if let Some(v) = best {
            marked[v] = true;
        }
    });
    sorted_flags(g.n(), &marked)
}

/// Marks on the clique side `x`, indexed by subsets `A ⊆ s ∪ y_marked` with
/// `|A| <= d`: two minimum-id vertices of `x` adjacent to all of `A`, and
/// `2k + 2` minimum-id vertices of `x` adjacent to none of `A`; finally the
/// `2k + 2` lowest-id vertices of `x` not yet marked.
pub fn mark_x(
    g: &Graph,
    s: &[Vertex],
    x: &[Vertex],
    y_marked: &[Vertex],
    d: usize,
    k: usize,
) -> Vec<Vertex> {
    let mut pool: Vec<Vertex> = s.iter().chain(y_marked).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let mut marked = vec![false; g.n()];
    for_each_subset_up_to(&pool, d, |a| {
        let common = x
            .iter()
            .filter(|&&v| a.iter().all(|&u| g.has_edge(u, v)))
            .take(2);
        for &v in common {
            marked[v] = true;
        }
        let blind = x
            .iter()
            .filter(|&&v| a.iter().all(|&u| !g.has_edge(u, v)))
            .take(2 * k + 2);
        for &v in blind {
            marked[v] = true;
        }
    });
    let extra: Vec<Vertex> = x
        .iter()
        .copied()
        .filter(|&v| !marked[v])
        .take(2 * k + 2)
        .collect();
    for v in extra {
        marked[v] = true;
    }
    sorted_flags(g.n(), &marked)
}

/// Kernel of a connected graph, in its own ids.
fn reduce_connected(h: &Graph, cfg: &SplitKernelConfig) -> SplitKernelResult {
    let k = cfg.k;
    let all: Vec<Vertex> = (0..h.n()).collect();
    let unchanged = |s: Vec<Vertex>| SplitKernelResult {
        kind: KernelKind::Unchanged,
        graph: h.clone(),
        k_out: k,
        kept: all.clone(),
        s,
        x_prime: Vec::new(),
        y_prime: Vec::new(),
        mandatory_cost: 0,
        retained: all.clone(),
    };
    if h.n() <= k + 3 {
        return unchanged(Vec::new());
    }
    let s = split_deletion_5approx(h);
    if s.len() > 10 * k {
        return SplitKernelResult::trivial_no();
    }
    if cfg.size_guard && (h.n() as u128) <= cfg.size_bound() {
        return unchanged(s);
    }
    let (x, y) = split_sides(h, &s);
    let y_prime = mark_y(h, &s, &y, cfg.d, k);
    let x_prime = mark_x(h, &s, &x, &y_prime, cfg.d, k);
    let mut keep = s.clone();
    keep.extend(&x_prime);
    keep.extend(&y_prime);
    let (graph, kept) = h.induced_subgraph(&keep);
    SplitKernelResult {
        kind: KernelKind::Reduced,
        graph,
        k_out: k,
        kept,
        s,
        x_prime,
        y_prime,
        mandatory_cost: 0,
        retained: all,
    }
}

/// Canonical split partition `(X, Y)` of `g - s`, in `g`'s ids.
pub fn split_sides(g: &Graph, s: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let (rest, ids) = g.remove_vertices(s);
    let p = is_split(&rest).expect("deleting the deletion set leaves a split graph");
    let x = p.clique_side.iter().map(|&i| ids[i]).collect();
    let y = p.independent_side.iter().map(|&i| ids[i]).collect();
    (x, y)
}

pub fn reduce_split(g: &Graph, cfg: &SplitKernelConfig) -> SplitKernelResult {
    let comps = connected_components(g);
    if comps.len() <= 1 {
        return reduce_connected(g, cfg);
    }
    let k = cfg.k;
    if comps.iter().filter(|c| c.len() >= k + 2).count() >= 2 {
        return SplitKernelResult::trivial_no();
    }
    // first maximum in min-id order
    let retained_idx = comps
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("at least two components");
    let mandatory: usize = comps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != retained_idx)
        .map(|(_, c)| c.len() - 1)
        .sum();
    if mandatory > k {
        return SplitKernelResult::trivial_no();
    }
    let retained = comps[retained_idx].clone();
    let (h, ids) = g.induced_subgraph(&retained);
    let mut r = reduce_connected(&h, cfg);
    if r.kind == KernelKind::TrivialNo {
        return r;
    }
    let to_g = |list: &[Vertex]| list.iter().map(|&v| ids[v]).collect::<Vec<_>>();
    r.kept = to_g(&r.kept);
    r.s = to_g(&r.s);
    r.x_prime = to_g(&r.x_prime);
    r.y_prime = to_g(&r.y_prime);
    r.retained = retained;
    r.mandatory_cost = mandatory;
    r
}
