//! Recognition of complete, split and chordal graphs.

use crate::graph::{Graph, Vertex};

/// A split partition: `clique_side` induces a clique, `independent_side` an
/// independent set. Both lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitPartition {
    pub clique_side: Vec<Vertex>,
    pub independent_side: Vec<Vertex>,
}

impl SplitPartition {
    /// Checks the partition against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in self.clique_side.iter().chain(&self.independent_side) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.iter().any(|&s| !s) {
            return false;
        }
        let c = &self.clique_side;
        let i = &self.independent_side;
        let clique = (0..c.len()).all(|a| (a + 1..c.len()).all(|b| g.has_edge(c[a], c[b])));
        let independent = (0..i.len()).all(|a| (a + 1..i.len()).all(|b| !g.has_edge(i[a], i[b])));
        clique && independent
    }

    pub fn in_clique_side(&self, v: Vertex) -> bool {
        self.clique_side.binary_search(&v).is_ok()
    }
}

pub fn is_complete(g: &Graph) -> bool {
    let n = g.n();
    g.m() == n * n.saturating_sub(1) / 2
}

/// Canonical split partition via the degree-sequence characterization.
///
/// Vertices are ranked by non-increasing degree (ties by id); the clique side
/// is the longest prefix allowed by the threshold `d_i >= i - 1`.
pub fn is_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // largest m (1-indexed) with d_m >= m - 1
    let m = (1..=n).rev().find(|&i| deg[i - 1] + 1 >= i).unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique_side = order[..m].to_vec();
    let mut independent_side = order[m..].to_vec();
    clique_side.sort_unstable();
    independent_side.sort_unstable();
    let p = SplitPartition {
        clique_side,
        independent_side,
    };
    debug_assert!(p.is_valid_for(g));
    Some(p)
}

/// Lexicographically least vertex set inducing `C4`, `2K2` or `C5`.
///
/// Four-vertex sets are scanned before five-vertex sets, so a `C5` is only
/// reported when the graph has no induced `C4` or `2K2`.
pub fn find_forbidden_split_subgraph(g: &Graph) -> Option<Vec<Vertex>> {
    if is_split(g).is_some() {
        return None;
    }
    let n = g.n();
    let adj = |a: Vertex, b: Vertex| g.has_edge(a, b) as usize;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = [a, b, c, d];
                    let degs = s.map(|x| s.iter().map(|&y| adj(x, y)).sum::<usize>());
                    // 2-regular on four vertices is C4, 1-regular is 2K2
                    if degs.iter().all(|&x| x == 2) || degs.iter().all(|&x| x == 1) {
                        return Some(s.to_vec());
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let s = [a, b, c, d, e];
                        let degs = s.map(|x| s.iter().map(|&y| adj(x, y)).sum::<usize>());
                        if degs.iter().all(|&x| x == 2) {
                            return Some(s.to_vec());
                        }
                    }
                }
            }
        }
    }
    unreachable!("a non-split graph contains an induced C4, C5 or 2K2")
}

/// Maximum cardinality search; returns the elimination order (reverse of the
/// visiting order). Ties go to the smallest id.
fn mcs_elimination_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex left");
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        if let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) {
            if later.iter().any(|&w| w != parent && !g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// A perfect elimination ordering, if `g` is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<Vertex>> {
    let order = mcs_elimination_order(g);
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}
