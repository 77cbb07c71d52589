//! Edge contraction and witness structures.
//!
//! Contracting an edge set `F` merges every connected component of the
//! spanning subgraph `(V, F)` into one vertex. The components are the witness
//! sets; the contracted graph has one vertex per witness set, ordered by the
//! minimum original id of the set, and two of them are adjacent iff some
//! original edge crosses the two sets.

use std::collections::VecDeque;

use crate::graph::{Edge, EdgeSet, Graph, GraphError, Vertex};

/// Partition of the vertex set into witness sets.
///
/// Blocks are sorted internally and ordered by their minimum vertex, so block
/// `i` is vertex `i` of the quotient graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStructure {
    blocks: Vec<Vec<Vertex>>,
    block_of: Vec<usize>,
}

impl WitnessStructure {
    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        WitnessStructure {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// Validates that `blocks` partition `0..n` into nonempty sets.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(GraphError::InvalidPartition("empty block".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if block_of[v] != usize::MAX {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(WitnessStructure { blocks, block_of })
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block (= quotient vertex) containing `v`.
    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    pub fn block(&self, i: usize) -> &[Vertex] {
        &self.blocks[i]
    }

    /// Canonical representative: the minimum original id in `v`'s block.
    pub fn rep(&self, v: Vertex) -> Vertex {
        self.blocks[self.block_of[v]][0]
    }

    /// Quotient-vertex labels, i.e. the minimum id of every block.
    pub fn labels(&self) -> Vec<Vertex> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    pub fn is_trivial(&self, i: usize) -> bool {
        self.blocks[i].len() == 1
    }

    /// Indices of blocks with at least two vertices.
    pub fn non_trivial(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.blocks.len()).filter(|&i| self.blocks[i].len() > 1)
    }
}

/// Minimal union-find with path halving; roots are not canonical, callers
/// re-derive block order from minimum ids.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller id as root so the root is the block minimum
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

fn blocks_from_union_find(n: usize, uf: &mut UnionFind) -> WitnessStructure {
    let mut index = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut block_of = vec![0; n];
    for v in 0..n {
        let r = uf.find(v);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(v);
        block_of[v] = index[r];
    }
    WitnessStructure { blocks, block_of }
}

fn quotient_graph(g: &Graph, w: &WitnessStructure) -> Graph {
    let pairs = g.edges().filter_map(|e| {
        let (a, b) = (w.block_of(e.u), w.block_of(e.v));
        (a != b).then_some((a, b))
    });
    Graph::from_pairs_lossy(w.len(), pairs)
}

/// Witness structure induced by the components of `(V(g), f)`, without
/// building the quotient.
pub fn witness_of(g: &Graph, f: &[Edge]) -> Result<WitnessStructure, GraphError> {
    let mut uf = UnionFind::new(g.n());
    for e in f {
        if !g.contains_edge(e) {
            return Err(GraphError::NonEdgeInF(*e));
        }
        uf.union(e.u, e.v);
    }
    Ok(blocks_from_union_find(g.n(), &mut uf))
}

/// `g / f` together with its witness structure.
pub fn contract_edges(g: &Graph, f: &[Edge]) -> Result<(Graph, WitnessStructure), GraphError> {
    let w = witness_of(g, f)?;
    Ok((quotient_graph(g, &w), w))
}

/// Quotient of `g` by a witness structure whose blocks must be connected.
pub fn quotient_by_witness(g: &Graph, w: &WitnessStructure) -> Result<Graph, GraphError> {
    if w.block_of.len() != g.n() {
        return Err(GraphError::InvalidPartition(format!(
            "witness structure covers {} vertices, graph has {}",
            w.block_of.len(),
            g.n()
        )));
    }
    for b in w.blocks() {
        if !is_connected_subset(g, b) {
            return Err(GraphError::DisconnectedBlock(b.clone()));
        }
    }
    Ok(quotient_graph(g, w))
}

/// Union of the BFS spanning trees of all blocks.
pub fn witness_edges(g: &Graph, w: &WitnessStructure) -> Result<EdgeSet, GraphError> {
    let mut f = EdgeSet::new();
    for i in w.non_trivial() {
        f.extend(spanning_tree_edges(g, w.block(i))?);
    }
    Ok(f)
}

pub fn is_connected_subset(g: &Graph, s: &[Vertex]) -> bool {
    if s.is_empty() {
        return true;
    }
    bfs_tree(g, s).len() + 1 == dedup_len(s)
}

fn dedup_len(s: &[Vertex]) -> usize {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn bfs_tree(g: &Graph, s: &[Vertex]) -> Vec<Edge> {
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    let root = *s.iter().min().expect("nonempty set");
    let mut seen = vec![false; g.n()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut tree = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if inside[v] && !seen[v] {
                seen[v] = true;
                tree.push(Edge::new(u, v));
                queue.push_back(v);
            }
        }
    }
    tree
}

/// BFS spanning tree of `g[s]` from the minimum id, neighbours in id order.
pub fn spanning_tree_edges(g: &Graph, s: &[Vertex]) -> Result<EdgeSet, GraphError> {
    if s.is_empty() {
        return Ok(EdgeSet::new());
    }
    let tree = bfs_tree(g, s);
    if tree.len() + 1 != dedup_len(s) {
        let mut block = s.to_vec();
        block.sort_unstable();
        block.dedup();
        return Err(GraphError::DisconnectedBlock(block));
    }
    Ok(tree.into_iter().collect())
}

/// Spanning forest of the whole graph: a spanning tree per component.
pub fn spanning_forest(g: &Graph) -> EdgeSet {
    let mut f = EdgeSet::new();
    for comp in connected_components(g) {
        f.extend(bfs_tree(g, &comp));
    }
    f
}

/// Components ordered by their minimum vertex; each sorted.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut comps = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || connected_components(g).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&p| Edge::from(p)).collect()
    }

    #[test]
    fn two_disjoint_contractions_of_p4_give_an_edge() {
        let (q, w) = contract_edges(&Graph::path(4), &es(&[(0, 1), (2, 3)])).unwrap();
        assert_eq!(q, Graph::complete(2));
        assert_eq!(w.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(w.labels(), vec![0, 2]);
    }

    #[test]
    fn empty_contraction_is_identity() {
        let g = Graph::cycle(5);
        let (q, w) = contract_edges(&g, &[]).unwrap();
        assert_eq!(q, g);
        assert_eq!(w, WitnessStructure::singletons(5));
    }

    #[test]
    fn contracting_a_cycle_edge_shortens_it() {
        let (q, _) = contract_edges(&Graph::cycle(5), &es(&[(2, 3)])).unwrap();
        assert_eq!(q, Graph::cycle(4));
    }

    #[test]
    fn non_edge_is_rejected() {
        assert_eq!(
            contract_edges(&Graph::path(4), &es(&[(0, 2)])),
            Err(GraphError::NonEdgeInF(Edge::new(0, 2)))
        );
    }

    #[test]
    fn quotient_examples() {
        let c4 = Graph::cycle(4);
        let w = WitnessStructure::from_blocks(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert_eq!(quotient_by_witness(&c4, &w).unwrap(), Graph::complete(3));
        let all = WitnessStructure::from_blocks(4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(quotient_by_witness(&c4, &all).unwrap(), Graph::empty(1));
        assert_eq!(
            quotient_by_witness(&c4, &WitnessStructure::singletons(4)).unwrap(),
            c4
        );
        let bad = WitnessStructure::from_blocks(4, vec![vec![0, 2], vec![1], vec![3]]).unwrap();
        assert_eq!(
            quotient_by_witness(&c4, &bad),
            Err(GraphError::DisconnectedBlock(vec![0, 2]))
        );
    }

    #[test]
    fn spanning_tree_examples() {
        let k3 = Graph::complete(3);
        assert!(spanning_tree_edges(&k3, &[1]).unwrap().is_empty());
        assert_eq!(spanning_tree_edges(&k3, &[2, 1]).unwrap(), es(&[(1, 2)]));
        assert_eq!(
            spanning_tree_edges(&k3, &[0, 1, 2]).unwrap(),
            es(&[(0, 1), (0, 2)])
        );
        assert!(spanning_tree_edges(&Graph::path(3), &[0, 2]).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(connected_components(&Graph::path(4)).len(), 1);
        let two_k2 = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(connected_components(&two_k2), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn invalid_partitions() {
        assert!(WitnessStructure::from_blocks(3, vec![vec![0, 1]]).is_err());
        assert!(WitnessStructure::from_blocks(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(WitnessStructure::from_blocks(2, vec![vec![0, 1], vec![]]).is_err());
    }
}
