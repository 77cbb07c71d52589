//! Seeded instance generators. The same seed always gives the same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph, Vertex};
use crate::hardness::{ColoredGraph, SetCoverInstance};
use crate::witness::connected_components;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Random,
    PerturbedClique,
    PerturbedSplit,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(Family::Random),
            "perturbed-clique" => Ok(Family::PerturbedClique),
            "perturbed-split" => Ok(Family::PerturbedSplit),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_pairs_lossy(n, edges)
}

/// Joins consecutive components (in min-id order) by a random edge each.
pub fn connect(g: &Graph, rng: &mut impl Rng) -> Graph {
    let comps = connected_components(g);
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().map(|e| (e.u, e.v)).collect();
    for pair in comps.windows(2) {
        let a = *pair[0].choose(rng).expect("components are nonempty");
        let b = *pair[1].choose(rng).expect("components are nonempty");
        edges.push((a, b));
    }
    Graph::from_pairs_lossy(g.n(), edges)
}

pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let g = random_graph(n, p, rng);
    connect(&g, rng)
}

/// A clique on `n` vertices with about `n / 3` random edges removed, then
/// reconnected if needed.
pub fn perturbed_clique(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Graph::complete(n).edge_list();
    edges.shuffle(rng);
    edges.truncate(edges.len() - (n / 3).min(edges.len()));
    let g = Graph::from_pairs_lossy(n, edges.iter().map(|e| (e.u, e.v)));
    connect(&g, rng)
}

/// A random split graph (clique on the first `⌈n/2⌉` vertices, each other
/// vertex attached to a random nonempty part of it) with a few edges
/// between independent vertices added.
pub fn perturbed_split(n: usize, rng: &mut impl Rng) -> Graph {
    let c = n.div_ceil(2);
    let mut edges: Vec<(Vertex, Vertex)> = Graph::complete(c).edges().map(|e| (e.u, e.v)).collect();
    for v in c..n {
        let anchor = rng.gen_range(0..c);
        edges.push((anchor, v));
        for u in 0..c {
            if rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    let independent = n - c;
    if independent >= 2 {
        for _ in 0..(independent / 2).max(1) {
            let a = c + rng.gen_range(0..independent);
            let b = c + rng.gen_range(0..independent);
            edges.push((a, b));
        }
    }
    Graph::from_pairs_lossy(n, edges)
}

pub fn generate(family: Family, n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    match family {
        Family::Random => random_connected_graph(n, 0.5, &mut r),
        Family::PerturbedClique => perturbed_clique(n, &mut r),
        Family::PerturbedSplit => perturbed_split(n, &mut r),
    }
}

/// A set cover instance in which every element lies in at least one set.
pub fn random_set_cover(n: usize, m: usize, k: usize, rng: &mut impl Rng) -> SetCoverInstance {
    assert!(m >= 1 || n == 0, "elements need at least one set");
    let mut sets: Vec<Vec<usize>> = (0..m)
        .map(|_| (0..n).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    for e in 0..n {
        if !sets.iter().any(|s| s.contains(&e)) {
            let j = rng.gen_range(0..m);
            sets[j].push(e);
        }
    }
    SetCoverInstance::new(n, sets, k).expect("every element is covered")
}

/// A host on `n` vertices with a colorful `k`-clique planted on a random
/// vertex set, plus `G(n, p)` noise edges in random colors. Returns the host
/// and the sorted planted clique.
pub fn planted_colorful_host(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut impl Rng,
) -> (ColoredGraph, Vec<Vertex>) {
    assert!(k >= 2 && n >= k, "need 2 <= k <= n");
    let t = k * (k - 1) / 2;
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut clique = perm[..k].to_vec();
    clique.sort_unstable();
    let mut coloring: Vec<(Edge, usize)> = Vec::new();
    let mut color = 0;
    for (i, &a) in clique.iter().enumerate() {
        for &b in &clique[i + 1..] {
            color += 1;
            coloring.push((Edge::new(a, b), color));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let e = Edge::new(u, v);
            if !coloring.iter().any(|&(x, _)| x == e) && rng.gen_bool(p) {
                coloring.push((e, rng.gen_range(1..=t)));
            }
        }
    }
    let g = Graph::from_edges(n, coloring.iter().map(|(e, _)| (e.u, e.v))).expect("distinct edges");
    (
        ColoredGraph::new(g, t, &coloring).expect("valid coloring"),
        clique,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::is_split;
    use crate::witness::is_connected;

    #[test]
    fn reproducible() {
        for family in [
            Family::Random,
            Family::PerturbedClique,
            Family::PerturbedSplit,
        ] {
            assert_eq!(generate(family, 9, 7), generate(family, 9, 7));
            assert!(is_connected(&generate(family, 9, 7)));
        }
        assert_ne!(
            generate(Family::Random, 9, 1),
            generate(Family::Random, 9, 2)
        );
    }

    #[test]
    fn split_family_is_nearly_split() {
        let g = perturbed_split(8, &mut rng(3));
        assert!(g.m() > 0);
        // without the perturbation edges the base graph is split
        let c = 4;
        let base = Graph::from_pairs_lossy(8, g.edges().filter(|e| e.u < c).map(|e| (e.u, e.v)));
        assert!(is_split(&base).is_some());
    }

    #[test]
    fn planted_host_is_colorful() {
        let (cg, clique) = planted_colorful_host(6, 3, 0.4, &mut rng(11));
        assert_eq!(clique.len(), 3);
        assert!(cg.is_colorful_clique(&clique));
        let sc = random_set_cover(5, 4, 2, &mut rng(5));
        assert!(sc.covers(&(0..4).collect::<Vec<_>>()));
    }
}
