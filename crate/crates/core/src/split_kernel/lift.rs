//! Lifting split-kernel solutions back to the input graph.

use std::collections::VecDeque;

use crate::combinatorics::binomial;
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::kernel::{
    ceil_tolerant, check_kernel_edges, least_crossing_edge, to_original, KernelError, KernelKind,
};
use crate::objective::{objective_spc, Objective};
use crate::recognize::is_split;
use crate::witness::{
    connected_components, contract_edges, spanning_forest, spanning_tree_edges, WitnessStructure,
};

use super::{split_sides, SplitKernelConfig, SplitKernelResult};

/// Which branch of [`lift_split_traced`] produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftTier {
    /// Spanning forest of the input.
    Trivial,
    /// Constructive repair of the kernel solution.
    Construct,
    /// Exhaustive search on the input.
    Exact,
}

/// Normalized solution together with its witness structure and, per block,
/// whether the block sits on the clique side of a split partition of the
/// quotient in which every non-trivial block is on the clique side.
struct Normalized {
    f: EdgeSet,
    w: WitnessStructure,
    clique_side: Vec<bool>,
}

/// BFS tree of `g[block]` from `root` as `(parent, child)` pairs in
/// discovery order.
fn bfs_tree_from(g: &Graph, block: &[Vertex], root: Vertex) -> Vec<(Vertex, Vertex)> {
    let mut inside = vec![false; g.n()];
    for &v in block {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut tree = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if inside[v] && !seen[v] {
                seen[v] = true;
                tree.push((u, v));
                queue.push_back(v);
            }
        }
    }
    tree
}

fn normalize(g: &Graph, f: &[Edge]) -> Result<Normalized, KernelError> {
    let (q, w) = contract_edges(g, f)?;
    let p = is_split(&q).ok_or(KernelError::NotASolution)?;
    let mut side = vec![false; g.n()];
    for v in 0..g.n() {
        side[v] = p.in_clique_side(w.block_of(v));
    }
    let mut f: EdgeSet = f.iter().copied().collect();
    loop {
        let (q, w) = contract_edges(g, &f)?;
        let bad = w.non_trivial().find(|&i| !side[w.block(i)[0]]);
        let Some(a) = bad else {
            let clique_side = (0..w.len()).map(|i| side[w.block(i)[0]]).collect();
            return Ok(Normalized { f, w, clique_side });
        };
        let b = q
            .neighbors(a)
            .iter()
            .copied()
            .find(|&j| side[w.block(j)[0]])
            .ok_or_else(|| {
                KernelError::LiftingFailed(format!(
                    "independent-side witness set {:?} has no clique-side neighbour",
                    w.block(a)
                ))
            })?;
        let wa = w.block(a).to_vec();
        let shift = least_crossing_edge(g, &wa, w.block(b)).expect("adjacent blocks share an edge");
        let ua = if wa.contains(&shift.u) {
            shift.u
        } else {
            shift.v
        };
        let tree = bfs_tree_from(g, &wa, ua);
        // the last discovered vertex is a leaf
        let (parent, leaf) = *tree.last().expect("non-trivial block has a tree edge");
        let leaf_edge = Edge::new(parent, leaf);
        let mut next: EdgeSet = f
            .iter()
            .copied()
            .filter(|e| !(wa.contains(&e.u) && wa.contains(&e.v)))
            .collect();
        next.extend(
            tree.iter()
                .map(|&(p, c)| Edge::new(p, c))
                .filter(|&e| e != leaf_edge),
        );
        next.insert(shift);
        for &v in &wa {
            side[v] = true;
        }
        side[leaf] = false;
        f = next;
    }
}

/// Rewrites a split-contraction solution so that every non-trivial witness
/// set lies on the clique side of some split partition, without growing it.
pub fn normalize_split_solution(g: &Graph, f: &[Edge]) -> Result<EdgeSet, KernelError> {
    normalize(g, f).map(|n| n.f)
}

fn mandatory_edges(g: &Graph, kr: &SplitKernelResult) -> Result<EdgeSet, KernelError> {
    let mut in_retained = vec![false; g.n()];
    for &v in &kr.retained {
        in_retained[v] = true;
    }
    let mut f = EdgeSet::new();
    for comp in connected_components(g) {
        if !in_retained[comp[0]] {
            f.extend(spanning_tree_edges(g, &comp)?);
        }
    }
    Ok(f)
}

fn final_check(g: &Graph, f: EdgeSet) -> Result<EdgeSet, KernelError> {
    let (q, _) = contract_edges(g, &f)?;
    if is_split(&q).is_none() {
        return Err(KernelError::LiftingFailed(
            "lifted edge set does not contract to a split graph".into(),
        ));
    }
    Ok(f)
}

/// Repairs a kernel solution into a solution of `g` of size at most
/// `alpha * |f'| + 1` plus the mandatory cost.
pub fn lift_split_construct(
    g: &Graph,
    _cfg: &SplitKernelConfig,
    kr: &SplitKernelResult,
    f_prime: &[Edge],
) -> Result<EdgeSet, KernelError> {
    check_kernel_edges(&kr.graph, f_prime)?;
    if !matches!(kr.kind, KernelKind::Unchanged | KernelKind::Reduced) {
        return Err(KernelError::LiftingFailed(format!(
            "cannot repair a solution of a {} kernel",
            kr.kind
        )));
    }
    let mandatory = mandatory_edges(g, kr)?;
    if kr.kind == KernelKind::Unchanged {
        if objective_spc(&kr.graph, kr.k_out, f_prime)? == Objective::Infinite {
            return Err(KernelError::NotASolution);
        }
        let mut f = to_original(&kr.kept, f_prime);
        f.extend(mandatory);
        return final_check(g, f);
    }

    let norm = normalize(&kr.graph, f_prime)?;
    let blocks: Vec<Vec<Vertex>> = norm
        .w
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&i| kr.kept[i]).collect())
        .collect();
    let mut lifted = to_original(&kr.kept, &norm.f);
    lifted.extend(mandatory);

    let mut is_kept = vec![false; g.n()];
    for &v in &kr.kept {
        is_kept[v] = true;
    }
    let (h, ids) = g.induced_subgraph(&kr.retained);
    let local_s: Vec<Vertex> =
        kr.s.iter()
            .map(|v| {
                ids.binary_search(v)
                    .expect("deletion set lies in the retained component")
            })
            .collect();
    let (x, y) = split_sides(&h, &local_s);
    let deleted_x: Vec<Vertex> = x.iter().map(|&i| ids[i]).filter(|&v| !is_kept[v]).collect();
    let deleted_y: Vec<Vertex> = y.iter().map(|&i| ids[i]).filter(|&v| !is_kept[v]).collect();
    let misses = |b: &[Vertex], v: Vertex| b.iter().all(|&u| !g.has_edge(u, v));

    // clique side: every block must see every deleted clique vertex
    let violators: Vec<usize> = (0..blocks.len())
        .filter(|&i| norm.clique_side[i] && deleted_x.iter().any(|&v| misses(&blocks[i], v)))
        .collect();
    if !violators.is_empty() {
        let mut in_x_prime = vec![false; g.n()];
        for &v in &kr.x_prime {
            in_x_prime[v] = true;
        }
        let anchor = (0..blocks.len())
            .filter(|&i| norm.clique_side[i] && blocks[i].iter().any(|&v| in_x_prime[v]))
            .min_by_key(|&i| blocks[i].iter().copied().filter(|&v| in_x_prime[v]).min())
            .ok_or_else(|| {
                KernelError::LiftingFailed("no clique-side witness set meets X'".into())
            })?;
        for i in violators {
            let e = least_crossing_edge(g, &blocks[i], &blocks[anchor]).ok_or_else(|| {
                KernelError::LiftingFailed(format!(
                    "witness set {:?} does not touch the anchor",
                    blocks[i]
                ))
            })?;
            lifted.insert(e);
        }
    }

    // independent side: no block may see a deleted independent vertex
    let touched: Vec<usize> = (0..blocks.len())
        .filter(|&i| !norm.clique_side[i] && deleted_y.iter().any(|&v| !misses(&blocks[i], v)))
        .collect();
    for &a in &touched {
        let b = (0..blocks.len())
            .filter(|&j| norm.clique_side[j])
            .find(|&j| least_crossing_edge(g, &blocks[a], &blocks[j]).is_some())
            .ok_or_else(|| {
                KernelError::LiftingFailed(format!(
                    "independent-side witness set {:?} has no clique-side neighbour",
                    blocks[a]
                ))
            })?;
        lifted.insert(least_crossing_edge(g, &blocks[a], &blocks[b]).expect("checked above"));
    }
    final_check(g, lifted)
}

/// Number of edge sets of size at most `max` over `m` edges.
fn candidates(m: usize, max: usize) -> u128 {
    (0..=max).fold(0u128, |acc, s| {
        acc.saturating_add(binomial(m as u128, s as u128))
    })
}

struct ForestSearch<'a> {
    g: &'a Graph,
    edges: Vec<Edge>,
    chosen: Vec<Edge>,
}

impl ForestSearch<'_> {
    /// Depth-first over forests of exactly `size` edges, in lexicographic
    /// order of their sorted edge lists. Sets containing a cycle are skipped:
    /// a cycle edge never changes the contraction, so minimum solutions are
    /// forests.
    fn search(&mut self, start: usize, size: usize, uf: &UnionFindSnapshot) -> bool {
        if self.chosen.len() == size {
            let (q, _) = contract_edges(self.g, &self.chosen).expect("edges come from the graph");
            return is_split(&q).is_some();
        }
        let left = size - self.chosen.len();
        for i in start..self.edges.len() {
            if self.edges.len() - i < left {
                break;
            }
            let e = self.edges[i];
            let mut next = uf.clone();
            if !next.union(e.u, e.v) {
                continue;
            }
            self.chosen.push(e);
            if self.search(i + 1, size, &next) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

#[derive(Clone)]
struct UnionFindSnapshot(Vec<usize>);

impl UnionFindSnapshot {
    fn find(&self, mut x: usize) -> usize {
        while self.0[x] != x {
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Minimum `(size, lexicographic)` edge set of at most `max_size` edges that
/// contracts `g` into a split graph. `Err` carries the candidate count when
/// it exceeds `guard`.
pub fn exact_split_search(
    g: &Graph,
    max_size: usize,
    guard: u128,
) -> Result<Option<EdgeSet>, u128> {
    let edges = g.edge_list();
    let total = candidates(edges.len(), max_size.min(edges.len()));
    if total > guard {
        return Err(total);
    }
    let mut search = ForestSearch {
        g,
        edges,
        chosen: Vec::new(),
    };
    let root = UnionFindSnapshot((0..g.n()).collect());
    for size in 0..=max_size.min(g.n().saturating_sub(1)) {
        if search.search(0, size, &root) {
            return Ok(Some(search.chosen.iter().copied().collect()));
        }
    }
    Ok(None)
}

/// Three-tier lifting: trivial solution, constructive repair, or exact search.
pub fn lift_split_traced(
    g: &Graph,
    cfg: &SplitKernelConfig,
    kr: &SplitKernelResult,
    f_prime: &[Edge],
) -> Result<(EdgeSet, LiftTier), KernelError> {
    check_kernel_edges(&kr.graph, f_prime)?;
    let value = objective_spc(&kr.graph, kr.k_out, f_prime)?;
    let useful = matches!(value, Objective::Finite(v) if v <= kr.k_out);
    if !useful || !matches!(kr.kind, KernelKind::Unchanged | KernelKind::Reduced) {
        return Ok((spanning_forest(g), LiftTier::Trivial));
    }
    if f_prime.len() as f64 >= cfg.c - 1e-9 {
        return Ok((
            lift_split_construct(g, cfg, kr, f_prime)?,
            LiftTier::Construct,
        ));
    }
    let cap = ceil_tolerant(cfg.alpha * cfg.c).min(cfg.k);
    match exact_split_search(g, cap, cfg.exact_guard) {
        Ok(Some(f)) => Ok((f, LiftTier::Exact)),
        Ok(None) => Ok((spanning_forest(g), LiftTier::Trivial)),
        Err(_) => Ok((
            lift_split_construct(g, cfg, kr, f_prime)?,
            LiftTier::Construct,
        )),
    }
}

pub fn lift_split(
    g: &Graph,
    cfg: &SplitKernelConfig,
    kr: &SplitKernelResult,
    f_prime: &[Edge],
) -> Result<EdgeSet, KernelError> {
    lift_split_traced(g, cfg, kr, f_prime).map(|(f, _)| f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split_kernel::reduce_split;

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&p| Edge::from(p)).collect()
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize_split_solution(&Graph::path(4), &[])
            .unwrap()
            .is_empty());
        let p5 = Graph::path(5);
        let shifted = normalize_split_solution(&p5, &es(&[(0, 1)])).unwrap();
        assert_eq!(shifted, es(&[(1, 2)]));
        // already on the clique side
        let star = Graph::star(4);
        assert_eq!(
            normalize_split_solution(&star, &es(&[(0, 1)])).unwrap(),
            es(&[(0, 1)])
        );
        assert_eq!(
            normalize_split_solution(&Graph::cycle(5), &[]),
            Err(KernelError::NotASolution)
        );
    }

    #[test]
    fn exact_search_finds_anchor_optimum() {
        let c5 = Graph::cycle(5);
        let f = exact_split_search(&c5, 3, u128::MAX).unwrap().unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(exact_split_search(&c5, 1, u128::MAX), Ok(None));
        assert!(exact_split_search(&Graph::complete(30), 5, 1000).is_err());
    }

    #[test]
    fn tiers_dispatch() {
        let cfg = SplitKernelConfig::new(2, 1.0).unwrap();
        let c6 = Graph::cycle(6);
        let kr = reduce_split(&c6, &cfg);
        assert_eq!(kr.kind, KernelKind::Unchanged);
        // a non-solution falls back to the trivial tier
        let (f, tier) = lift_split_traced(&c6, &cfg, &kr, &[]).unwrap();
        assert_eq!((f.len(), tier), (5, LiftTier::Trivial));
        let cfg = SplitKernelConfig::new(3, 1.0).unwrap();
        let kr = reduce_split(&c6, &cfg);
        // |f'| = 3 < c = 4: exact tier
        let f_prime = es(&[(0, 1), (1, 2), (3, 4)]);
        let (f, tier) = lift_split_traced(&c6, &cfg, &kr, &f_prime).unwrap();
        assert_eq!(tier, LiftTier::Exact);
        assert_eq!(f, es(&[(0, 1), (0, 5), (1, 2)]));
        assert_eq!(
            lift_split_construct(&c6, &cfg, &kr, &f_prime).unwrap(),
            f_prime
        );
    }

    #[test]
    fn disconnected_lift_appends_mandatory_trees() {
        let cfg = SplitKernelConfig::new(3, 1.0).unwrap();
        let g = Graph::path(6).disjoint_union(&Graph::path(2));
        let kr = reduce_split(&g, &cfg);
        let f_prime = es(&[(1, 2), (3, 4)]);
        let f = lift_split_construct(&g, &cfg, &kr, &f_prime).unwrap();
        assert_eq!(f, es(&[(1, 2), (3, 4), (6, 7)]));
        assert_eq!(objective_spc(&g, 3, &f), Ok(Objective::Finite(3)));
    }
}
