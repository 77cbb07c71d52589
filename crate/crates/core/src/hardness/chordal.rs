//! Set Cover to chordal contraction, with a solution map back to set covers.

use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::recognize::is_chordal;
use crate::witness::{contract_edges, witness_of};

use super::HardnessError;

pub use crate::objective::objective_chc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub n_elements: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    /// Sorts and deduplicates each set, then checks ranges and coverage.
    pub fn new(n_elements: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self, HardnessError> {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let sc = SetCoverInstance {
            n_elements,
            sets,
            k,
        };
        sc.validate()?;
        Ok(sc)
    }

    pub fn validate(&self) -> Result<(), HardnessError> {
        let mut covered = vec![false; self.n_elements];
        for &e in self.sets.iter().flatten() {
            if e >= self.n_elements {
                return Err(HardnessError::ElementOutOfRange {
                    element: e,
                    n: self.n_elements,
                });
            }
            covered[e] = true;
        }
        match covered.iter().position(|&c| !c) {
            Some(e) => Err(HardnessError::UncoveredElement(e)),
            None => Ok(()),
        }
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.n_elements];
        for &j in chosen {
            for &e in &self.sets[j] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordalRole {
    Set(usize),
    A(usize),
    B(usize),
    C(usize),
    G,
}

/// Set vertices come first (`s_j = j`), then `a_i, b_i, c_i` at
/// `m + 3i, m + 3i + 1, m + 3i + 2`, and `g` last.
#[derive(Debug, Clone)]
pub struct ChordalInstance {
    pub graph: Graph,
    pub k: usize,
    pub roles: Vec<ChordalRole>,
    pub m: usize,
    pub n_elements: usize,
}

impl ChordalInstance {
    pub fn set_vertex(&self, j: usize) -> Vertex {
        j
    }

    pub fn a(&self, i: usize) -> Vertex {
        self.m + 3 * i
    }

    pub fn b(&self, i: usize) -> Vertex {
        self.m + 3 * i + 1
    }

    pub fn c(&self, i: usize) -> Vertex {
        self.m + 3 * i + 2
    }

    pub fn g(&self) -> Vertex {
        self.m + 3 * self.n_elements
    }

    /// Smallest set index containing element `i`, read off the graph.
    fn first_cover(&self, i: usize) -> usize {
        self.graph
            .neighbors(self.c(i))
            .iter()
            .copied()
            .find(|&v| v < self.m)
            .expect("every element lies in some set")
    }
}

pub fn set_cover_to_chordal(sc: &SetCoverInstance) -> Result<ChordalInstance, HardnessError> {
    sc.validate()?;
    let m = sc.m();
    let n = sc.n_elements;
    let g = m + 3 * n;
    let mut roles: Vec<ChordalRole> = (0..m).map(ChordalRole::Set).collect();
    for i in 0..n {
        roles.extend([ChordalRole::A(i), ChordalRole::B(i), ChordalRole::C(i)]);
    }
    roles.push(ChordalRole::G);

    let mut edges = Vec::new();
    for j in 0..m {
        for j2 in j + 1..m {
            edges.push((j, j2));
        }
        edges.push((j, g));
    }
    for i in 0..n {
        let (a, b, c) = (m + 3 * i, m + 3 * i + 1, m + 3 * i + 2);
        edges.extend([(g, a), (g, b), (a, c), (b, c)]);
    }
    for (j, set) in sc.sets.iter().enumerate() {
        for &i in set {
            edges.push((j, m + 3 * i + 2));
        }
    }
    Ok(ChordalInstance {
        graph: Graph::from_edges(g + 1, edges)?,
        k: sc.k,
        roles,
        m,
        n_elements: n,
    })
}

/// Maps a contraction of the constructed graph back to a family of set
/// indices. Oversized, invalid or non-chordal inputs map to every set.
pub fn chordal_solution_to_set_cover(ci: &ChordalInstance, f0: &[Edge]) -> Vec<usize> {
    let all: Vec<usize> = (0..ci.m).collect();
    let f0: EdgeSet = f0.iter().copied().collect();
    if f0.len() > ci.k {
        return all;
    }
    match contract_edges(&ci.graph, &f0) {
        Ok((q, _)) if is_chordal(&q) => {}
        _ => return all,
    }
    let g = ci.g();
    let f: EdgeSet = f0
        .iter()
        .map(|e| {
            let (x, y) = (ci.roles[e.u], ci.roles[e.v]);
            match (x, y) {
                (ChordalRole::Set(j), ChordalRole::C(_)) => Edge::new(ci.set_vertex(j), g),
                (ChordalRole::A(i) | ChordalRole::B(i), ChordalRole::C(_) | ChordalRole::G) => {
                    Edge::new(ci.set_vertex(ci.first_cover(i)), g)
                }
                _ => *e,
            }
        })
        .collect();
    let w = witness_of(&ci.graph, &f).expect("replacement edges exist in the graph");
    let block = w.block(w.block_of(g));
    block.iter().copied().filter(|&v| v < ci.m).collect()
}

/// All induced cycles with at least `min_len` vertices, each listed once,
/// starting at its smallest vertex and continuing towards the smaller
/// neighbor.
pub fn induced_cycles(g: &Graph, min_len: usize) -> Vec<Vec<Vertex>> {
    fn extend(g: &Graph, path: &mut Vec<Vertex>, min_len: usize, out: &mut Vec<Vec<Vertex>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &v in g.neighbors(last) {
            if v <= s || path.contains(&v) {
                continue;
            }
            let inner = if path.len() > 2 {
                &path[1..path.len() - 1]
            } else {
                &[][..]
            };
            if inner.iter().any(|&p| g.has_edge(p, v)) {
                continue;
            }
            let closes = path.len() > 1 && g.has_edge(s, v);
            if closes {
                if path[1] < v && path.len() + 1 >= min_len {
                    let mut cycle = path.clone();
                    cycle.push(v);
                    out.push(cycle);
                }
                continue;
            }
            path.push(v);
            extend(g, path, min_len, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        let mut path = vec![s];
        extend(g, &mut path, min_len.max(3), &mut out);
    }
    out
}

/// Induced cycles of length at least four that are not one of the gadget
/// 4-cycles `{g, a_i, c_i, s_j}`, `{g, b_i, c_i, s_j}` with `u_i ∈ S_j`, or
/// `{g, a_i, c_i, b_i}`. Empty for every correctly built instance.
pub fn unexpected_induced_cycles(ci: &ChordalInstance) -> Vec<Vec<Vertex>> {
    induced_cycles(&ci.graph, 4)
        .into_iter()
        .filter(|cycle| !is_gadget_cycle(ci, cycle))
        .collect()
}

fn is_gadget_cycle(ci: &ChordalInstance, cycle: &[Vertex]) -> bool {
    if cycle.len() != 4 || !cycle.contains(&ci.g()) {
        return false;
    }
    let Some(i) = cycle.iter().find_map(|&v| match ci.roles[v] {
        ChordalRole::C(i) => Some(i),
        _ => None,
    }) else {
        return false;
    };
    let mut rest: Vec<Vertex> = cycle
        .iter()
        .copied()
        .filter(|&v| v != ci.g() && v != ci.c(i))
        .collect();
    rest.sort_unstable();
    if rest == [ci.a(i), ci.b(i)] {
        return true;
    }
    match rest.as_slice() {
        &[s, x] if s < ci.m && (x == ci.a(i) || x == ci.b(i)) => ci.graph.has_edge(s, ci.c(i)),
        _ => false,
    }
}
