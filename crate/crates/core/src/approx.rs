//! Constant-factor approximations for deleting vertices into a clique or a
//! split graph.

use crate::graph::{Graph, Vertex};
use crate::recognize::find_forbidden_split_subgraph;

/// Endpoints of a greedy maximal matching of the complement, scanning the
/// complement's edges in lexicographic order. Sorted.
pub fn clique_deletion_2approx(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut matched = vec![false; n];
    for u in 0..n {
        if matched[u] {
            continue;
        }
        let mut nbrs = g.neighbors(u).iter().peekable();
        for v in u + 1..n {
            while nbrs.peek().is_some_and(|&&w| w < v) {
                nbrs.next();
            }
            if nbrs.peek() == Some(&&v) || matched[v] {
                continue;
            }
            matched[u] = true;
            matched[v] = true;
            break;
        }
    }
    (0..n).filter(|&v| matched[v]).collect()
}

/// Repeatedly removes a whole forbidden induced subgraph (C4, C5 or 2K2).
/// Sorted original ids.
pub fn split_deletion_5approx(g: &Graph) -> Vec<Vertex> {
    let mut deleted = Vec::new();
    let mut alive: Vec<Vertex> = (0..g.n()).collect();
    loop {
        let (h, ids) = g.induced_subgraph(&alive);
        match find_forbidden_split_subgraph(&h) {
            None => break,
            Some(set) => {
                let gone: Vec<Vertex> = set.iter().map(|&i| ids[i]).collect();
                alive.retain(|v| !gone.contains(v));
                deleted.extend(gone);
            }
        }
    }
    deleted.sort_unstable();
    deleted
}
