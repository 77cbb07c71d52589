//! Definition-level reference checks shared by the integration tests and the
//! acceptance suite. Nothing here calls the library's recognizers or
//! contraction code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use contraction_kernels::hardness::{GadgetInstance, GadgetRole, SetCoverInstance};
use contraction_kernels::{Edge, Graph, Vertex};

/// Graph on `n` vertices whose edges are the set bits of `mask`, pairs in
/// the order (0,1), (0,2), (1,2), (0,3), ...
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for b in 1..n {
        for a in 0..b {
            if mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(|m| graph_from_mask(n, m)).collect()
}

fn adjacency_bits(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect()
}

/// Canonical code: the least edge mask over relabelings that keep vertices
/// sorted by (degree, neighbor degree multiset).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let adj = adjacency_bits(g);
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    // cell id for each position in the sorted order
    let mut cell = vec![0usize; n];
    for i in 1..n {
        cell[i] = cell[i - 1] + usize::from(key(order[i]) != key(order[i - 1]));
    }
    let cell_of_vertex: Vec<usize> = {
        let mut c = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            c[v] = cell[i];
        }
        c
    };
    let mut best = u64::MAX;
    let mut labels = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        pos: usize,
        n: usize,
        cell: &[usize],
        cell_of_vertex: &[usize],
        adj: &[u32],
        labels: &mut [usize],
        used: &mut [bool],
        best: &mut u64,
    ) {
        if pos == n {
            let mut code = 0u64;
            for v in 0..n {
                for u in 0..v {
                    if adj[v] >> u & 1 == 1 {
                        let (a, b) = if labels[u] < labels[v] {
                            (labels[u], labels[v])
                        } else {
                            (labels[v], labels[u])
                        };
                        code |= 1 << (b * (b - 1) / 2 + a);
                    }
                }
            }
            *best = (*best).min(code);
            return;
        }
        for v in 0..n {
            if !used[v] && cell_of_vertex[v] == cell[pos] {
                used[v] = true;
                labels[v] = pos;
                rec(pos + 1, n, cell, cell_of_vertex, adj, labels, used, best);
                used[v] = false;
            }
        }
    }
    rec(
        0,
        n,
        &cell,
        &cell_of_vertex,
        &adj,
        &mut labels,
        &mut used,
        &mut best,
    );
    best
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// built by adding a vertex with every neighborhood to each class on
/// `n - 1` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for h in &layer {
            for nb in 0..1u32 << (size - 1) {
                let mut edges: Vec<(Vertex, Vertex)> = h.edges().map(|e| (e.u, e.v)).collect();
                edges.extend(
                    (0..size - 1)
                        .filter(|&u| nb >> u & 1 == 1)
                        .map(|u| (u, size - 1)),
                );
                let g = Graph::from_edges(size, edges).unwrap();
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        layer = next;
    }
    layer
}

pub fn is_connected_def(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn connected_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n)
        .into_iter()
        .filter(is_connected_def)
        .collect()
}

pub fn is_complete_def(g: &Graph) -> bool {
    (0..g.n()).all(|a| (a + 1..g.n()).all(|b| g.has_edge(a, b)))
}

/// Tries every bipartition into a clique and an independent set.
pub fn is_split_def(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|a| {
            (a + 1..n).all(|b| {
                let adj = g.has_edge(a, b);
                match (inside(a), inside(b)) {
                    (true, true) => adj,
                    (false, false) => !adj,
                    _ => true,
                }
            })
        })
    })
}

/// Whether some vertex subset of size at least 4 induces a cycle.
pub fn has_long_induced_cycle_def(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 20, "subset search is exponential");
    (0..1u64 << n).any(|mask| {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() < 4 {
            return false;
        }
        let (h, _) = g.induced_subgraph(&verts);
        (0..h.n()).all(|v| h.degree(v) == 2) && is_connected_def(&h)
    })
}

pub fn is_chordal_def(g: &Graph) -> bool {
    !has_long_induced_cycle_def(g)
}

/// Contraction by repeated relabeling. Quotient vertex `i` is the block
/// with the `i`-th smallest minimum id. Returns the quotient and the blocks.
pub fn contract_naive(g: &Graph, f: &[Edge]) -> (Graph, Vec<Vec<Vertex>>) {
    let n = g.n();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for e in f {
            let (a, b) = (label[e.u], label[e.v]);
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                for l in label.iter_mut() {
                    if *l == hi {
                        *l = lo;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let reps: Vec<usize> = {
        let s: BTreeSet<usize> = label.iter().copied().collect();
        s.into_iter().collect()
    };
    let index = |l: usize| reps.binary_search(&l).unwrap();
    let blocks: Vec<Vec<Vertex>> = reps
        .iter()
        .map(|&r| (0..n).filter(|&v| label[v] == r).collect())
        .collect();
    let pairs: Vec<(usize, usize)> = g
        .edges()
        .filter(|e| label[e.u] != label[e.v])
        .map(|e| (index(label[e.u]), index(label[e.v])))
        .collect();
    (Graph::from_pairs_lossy(reps.len(), pairs), blocks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cls {
    Complete,
    Split,
    Chordal,
}

pub fn in_class_def(g: &Graph, cls: Cls) -> bool {
    match cls {
        Cls::Complete => is_complete_def(g),
        Cls::Split => is_split_def(g),
        Cls::Chordal => is_chordal_def(g),
    }
}

/// Smallest number of edges (at most `k`) whose contraction lands in `cls`,
/// by bitmask enumeration; `k + 1` if none.
pub fn contraction_opt_def(g: &Graph, k: usize, cls: Cls) -> usize {
    let edges = g.edge_list();
    let m = edges.len();
    assert!(m <= 24, "bitmask enumeration is exponential");
    let mut best = k + 1;
    for mask in 0..1u64 << m {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let f: Vec<Edge> = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        if in_class_def(&contract_naive(g, &f).0, cls) {
            best = size;
        }
    }
    best
}

/// Minimum number of vertices to delete so that the rest is in `cls`.
pub fn deletion_opt_def(g: &Graph, cls: Cls) -> usize {
    let n = g.n();
    (0..1u64 << n)
        .filter(|mask| {
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            in_class_def(&g.induced_subgraph(&keep).0, cls)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// `min(optimal cover size, k + 1)`.
pub fn set_cover_opt_def(sc: &SetCoverInstance) -> usize {
    let m = sc.sets.len();
    let mut best = sc.k + 1;
    for mask in 0..1u64 << m {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut covered = vec![false; sc.n_elements];
        for j in (0..m).filter(|&j| mask >> j & 1 == 1) {
            for &e in &sc.sets[j] {
                covered[e] = true;
            }
        }
        if covered.into_iter().all(|c| c) {
            best = size;
        }
    }
    best
}

/// Every adjacency of the gadget recomputed from the role map alone, plus
/// the size formulas. Returns human-readable violations.
pub fn gadget_violations(gi: &GadgetInstance, host_edges: usize) -> Vec<String> {
    let p = &gi.params;
    let mut out = Vec::new();
    let t = p.k * (p.k - 1) / 2;
    let rho = ((p.delta * t as f64 / p.k as f64) - 1e-9).ceil().max(1.0) as usize;
    let k_prime = 2 * t + rho * p.k;
    let k_circ = (5 * k_prime + 1) / 2 + 2;
    if (p.t, p.rho, p.k_prime, p.k_circ) != (t, rho, k_prime, k_circ) || gi.k_prime != k_prime {
        out.push(format!(
            "parameters {p:?}, expected t={t} rho={rho} k'={k_prime} k°={k_circ}"
        ));
    }
    let count = |f: &dyn Fn(&GadgetRole) -> bool| gi.roles.iter().filter(|r| f(r)).count();
    let z = count(&|r| matches!(r, GadgetRole::ZCopy { .. } | GadgetRole::ZExtra(_)));
    let es = count(&|r| matches!(r, GadgetRole::Es { .. }));
    let caps = count(&|r| matches!(r, GadgetRole::Cap(_)));
    let sv = count(&|r| matches!(r, GadgetRole::Special(_)));
    let guards = count(&|r| matches!(r, GadgetRole::Guard { .. }));
    let expected = (
        rho * gi.host_n + k_circ + 2,
        host_edges,
        t,
        t,
        k_circ * (rho * gi.host_n + k_circ + 2 + 2 * t),
    );
    if (z, es, caps, sv, guards) != expected {
        out.push(format!(
            "counts (Z, ES, cap, SV, guard) = {:?}, expected {expected:?}",
            (z, es, caps, sv, guards)
        ));
    }
    if gi.roles.len() != gi.graph.n() {
        out.push("role map does not cover the vertex set".into());
        return out;
    }
    let expect = |a: &GadgetRole, b: &GadgetRole, ia: Vertex, ib: Vertex| -> bool {
        use GadgetRole::*;
        let is_z = |r: &GadgetRole| matches!(r, ZCopy { .. } | ZExtra(_));
        match (a, b) {
            _ if is_z(a) && is_z(b) => true,
            (Es { edge, .. }, r) | (r, Es { edge, .. }) if is_z(r) => match r {
                ZCopy { vertex, .. } => !edge.contains(*vertex),
                _ => true,
            },
            (Es { color, .. }, Cap(c)) | (Cap(c), Es { color, .. }) => color == c,
            (Es { color, .. }, Special(c)) | (Special(c), Es { color, .. }) => color == c,
            (Special(_), Special(_)) => true,
            (Guard { owner }, _) => *owner == ib,
            (_, Guard { owner }) => *owner == ia,
            _ => false,
        }
    };
    let n = gi.graph.n();
    let mut bad = 0;
    for a in 0..n {
        for b in a + 1..n {
            if expect(&gi.roles[a], &gi.roles[b], a, b) != gi.graph.has_edge(a, b) {
                bad += 1;
                if bad <= 3 {
                    out.push(format!(
                        "adjacency {a}-{b} ({:?}, {:?}) differs",
                        gi.roles[a], gi.roles[b]
                    ));
                }
            }
        }
    }
    if bad > 3 {
        out.push(format!("{bad} adjacency mismatches in total"));
    }
    out
}
