//! Edge-colored densest subgraph to split contraction: the gadget, the
//! clique-to-contraction map and the contraction-to-dense-subgraph
//! extractor.

use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::kernel::ceil_tolerant;
use crate::recognize::is_split;
use crate::witness::contract_edges;

use super::HardnessError;

/// A graph with every edge colored in `1..=t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub t: usize,
    edges: Vec<Edge>,
    colors: Vec<usize>,
}

impl ColoredGraph {
    /// `coloring` must color each edge of `graph` exactly once.
    pub fn new(graph: Graph, t: usize, coloring: &[(Edge, usize)]) -> Result<Self, HardnessError> {
        let edges = graph.edge_list();
        let mut colors = vec![0; edges.len()];
        for &(e, c) in coloring {
            let idx = edges
                .binary_search(&e)
                .map_err(|_| crate::graph::GraphError::NonEdgeInF(e))?;
            if c == 0 || c > t {
                return Err(HardnessError::ColorOutOfRange {
                    edge: e,
                    color: c,
                    t,
                });
            }
            if colors[idx] != 0 {
                return Err(crate::graph::GraphError::DuplicateEdge(e).into());
            }
            colors[idx] = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(HardnessError::UncoloredEdge(edges[i]));
        }
        Ok(ColoredGraph {
            graph,
            t,
            edges,
            colors,
        })
    }

    pub fn color(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok().map(|i| self.colors[i])
    }

    /// Edges with their colors, in lexicographic edge order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn color_class(&self, c: usize) -> Vec<Edge> {
        self.colored_edges()
            .filter(|&(_, x)| x == c)
            .map(|(e, _)| e)
            .collect()
    }

    /// Whether `s` is a clique whose edges carry pairwise distinct colors.
    pub fn is_colorful_clique(&self, s: &[Vertex]) -> bool {
        let mut seen = vec![false; self.t + 1];
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                if a == b {
                    return false;
                }
                match self.color(&Edge::new(a, b)) {
                    Some(c) if !seen[c] => seen[c] = true,
                    _ => return false,
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GadgetParams {
    pub k: usize,
    pub t: usize,
    pub rho: usize,
    pub k_prime: usize,
    pub k_circ: usize,
    pub delta: f64,
}

impl GadgetParams {
    pub fn new(k: usize, delta: f64) -> Result<Self, HardnessError> {
        if k < 2 {
            return Err(HardnessError::InvalidParameter(format!(
                "k must be at least 2, got {k}"
            )));
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(HardnessError::InvalidParameter(format!(
                "delta must be positive, got {delta}"
            )));
        }
        let t = k * (k - 1) / 2;
        let rho = ceil_tolerant(delta * t as f64 / k as f64).max(1);
        let k_prime = 2 * t + rho * k;
        let k_circ = (5 * k_prime).div_ceil(2) + 2;
        Ok(GadgetParams {
            k,
            t,
            rho,
            k_prime,
            k_circ,
            delta,
        })
    }

    /// `(5/4 - δ)·k′`.
    pub fn budget(&self) -> f64 {
        (1.25 - self.delta) * self.k_prime as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetRole {
    ZCopy { vertex: Vertex, index: usize },
    ZExtra(usize),
    Es { color: usize, edge: Edge },
    Cap(usize),
    Special(usize),
    Guard { owner: Vertex },
}

/// Vertex order: copies `X_u` (`u·ρ + j`), extra `Z` vertices, edge
/// selectors in lexicographic host-edge order, caps, specials, then `k°`
/// guards per `Z` vertex, cap and special, in that order.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub k_prime: usize,
    pub params: GadgetParams,
    pub roles: Vec<GadgetRole>,
    pub host_n: usize,
    pub z: Vec<Vertex>,
    /// `es[i - 1]` is the selector set of color `i`.
    pub es: Vec<Vec<Vertex>>,
    pub caps: Vec<Vertex>,
    pub specials: Vec<Vertex>,
}

impl GadgetInstance {
    pub fn copy_of(&self, u: Vertex, j: usize) -> Vertex {
        u * self.params.rho + j
    }

    pub fn cap(&self, color: usize) -> Vertex {
        self.caps[color - 1]
    }

    pub fn special(&self, color: usize) -> Vertex {
        self.specials[color - 1]
    }

    /// Selector vertex of a host edge.
    pub fn selector(&self, e: &Edge) -> Option<Vertex> {
        let base = self.z.len();
        (base..self.caps[0])
            .find(|&w| matches!(self.roles[w], GadgetRole::Es { edge, .. } if edge == *e))
    }

    pub fn guards_of(&self, owner: Vertex) -> std::ops::Range<Vertex> {
        let kc = self.params.k_circ;
        let owner_idx = if owner < self.z.len() {
            owner
        } else {
            owner - self.caps[0] + self.z.len()
        };
        let start = self.specials[self.specials.len() - 1] + 1 + owner_idx * kc;
        start..start + kc
    }
}

pub fn build_split_gadget(
    cg: &ColoredGraph,
    k: usize,
    delta: f64,
) -> Result<GadgetInstance, HardnessError> {
    let p = GadgetParams::new(k, delta)?;
    if cg.t != p.t {
        return Err(HardnessError::BadColorCount {
            expected: p.t,
            found: cg.t,
        });
    }
    let n = cg.graph.n();
    if n < k + 1 {
        return Err(HardnessError::TooFewVertices {
            needed: k + 1,
            found: n,
        });
    }
    let mut es: Vec<Vec<Vertex>> = vec![Vec::new(); p.t];
    let mut roles = Vec::new();
    for u in 0..n {
        roles.extend((0..p.rho).map(|index| GadgetRole::ZCopy { vertex: u, index }));
    }
    roles.extend((0..p.k_circ + 2).map(GadgetRole::ZExtra));
    let z_len = roles.len();
    for (edge, color) in cg.colored_edges() {
        es[color - 1].push(roles.len());
        roles.push(GadgetRole::Es { color, edge });
    }
    if let Some(i) = es.iter().position(Vec::is_empty) {
        return Err(HardnessError::EmptyColorClass(i + 1));
    }
    let cap0 = roles.len();
    roles.extend((1..=p.t).map(GadgetRole::Cap));
    let sp0 = roles.len();
    roles.extend((1..=p.t).map(GadgetRole::Special));
    let owners: Vec<Vertex> = (0..z_len).chain(cap0..sp0 + p.t).collect();
    for &owner in &owners {
        roles.extend((0..p.k_circ).map(|_| GadgetRole::Guard { owner }));
    }

    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for a in 0..z_len {
        edges.extend((a + 1..z_len).map(|b| (a, b)));
    }
    for w in z_len..cap0 {
        let GadgetRole::Es { color, edge } = roles[w] else {
            unreachable!()
        };
        let skip = |z: Vertex| z < n * p.rho && (z / p.rho == edge.u || z / p.rho == edge.v);
        edges.extend((0..z_len).filter(|&z| !skip(z)).map(|z| (z, w)));
        edges.push((w, cap0 + color - 1));
        edges.push((w, sp0 + color - 1));
    }
    for a in sp0..sp0 + p.t {
        edges.extend((a + 1..sp0 + p.t).map(|b| (a, b)));
    }
    let guard0 = sp0 + p.t;
    for (idx, &owner) in owners.iter().enumerate() {
        let start = guard0 + idx * p.k_circ;
        edges.extend((start..start + p.k_circ).map(|y| (owner, y)));
    }
    let graph = Graph::from_edges(roles.len(), edges)?;
    Ok(GadgetInstance {
        graph,
        k_prime: p.k_prime,
        params: p,
        host_n: n,
        z: (0..z_len).collect(),
        es,
        caps: (cap0..sp0).collect(),
        specials: (sp0..guard0).collect(),
        roles,
    })
}

/// The contraction of size `k′` built from a colorful `k`-clique.
pub fn clique_to_split_solution(
    cg: &ColoredGraph,
    clique: &[Vertex],
    gi: &GadgetInstance,
) -> Result<EdgeSet, HardnessError> {
    let mut s = clique.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != gi.params.k || s.len() != clique.len() || s.iter().any(|&v| v >= cg.graph.n()) {
        return Err(HardnessError::NotAColorfulClique);
    }
    if !cg.is_colorful_clique(&s) {
        return Err(HardnessError::NotAColorfulClique);
    }
    let mut f = EdgeSet::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            let e = Edge::new(a, b);
            let color = cg.color(&e).expect("clique edges are colored");
            let w = gi.selector(&e).expect("every host edge has a selector");
            f.insert(Edge::new(w, gi.cap(color)));
            f.insert(Edge::new(w, gi.special(color)));
        }
    }
    let u0 = (0..cg.graph.n())
        .find(|v| s.binary_search(v).is_err())
        .ok_or(HardnessError::NotAColorfulClique)?;
    let z0 = gi.copy_of(u0, 0);
    for &u in &s {
        for j in 0..gi.params.rho {
            f.insert(Edge::new(gi.copy_of(u, j), z0));
        }
    }
    Ok(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapClass {
    /// Shares its witness set with another cap.
    SharedCap,
    /// Its witness set meets `Z`.
    MeetsZ,
    /// Its witness set holds at least two selector vertices.
    ManySelectors,
    /// None of the above.
    Clean,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Extraction {
    /// Endpoints of the recovered host edges.
    pub vertices: Vec<Vertex>,
    /// Host edges whose selectors sit alone in clean cap witness sets.
    pub edges: Vec<Edge>,
    /// `classes[i - 1]` classifies the cap of color `i`.
    pub classes: Vec<CapClass>,
}

/// Recovers a small vertex set spanning many colorful host edges from a
/// split contraction of the gadget of size at most `(5/4 - δ)·k′`.
pub fn extract_dense_subgraph(
    gi: &GadgetInstance,
    f_prime: &[Edge],
) -> Result<Extraction, HardnessError> {
    let f: EdgeSet = f_prime.iter().copied().collect();
    let budget = gi.params.budget();
    if f.len() as f64 > budget + 1e-9 {
        return Err(HardnessError::BudgetExceeded {
            size: f.len(),
            budget,
        });
    }
    extract_colorful_edges(gi, &f)
}

/// The same extraction without the budget precondition. The output bounds
/// are still asserted.
pub fn extract_colorful_edges(
    gi: &GadgetInstance,
    f_prime: &[Edge],
) -> Result<Extraction, HardnessError> {
    let (q, w) = contract_edges(&gi.graph, f_prime)?;
    if is_split(&q).is_none() {
        return Err(HardnessError::NotASolution);
    }
    let p = &gi.params;
    let mut classes = Vec::with_capacity(p.t);
    let mut edges = Vec::new();
    for color in 1..=p.t {
        let block = w.block(w.block_of(gi.cap(color)));
        let mut caps = 0;
        let mut meets_z = false;
        let mut selectors = Vec::new();
        for &v in block {
            match gi.roles[v] {
                GadgetRole::Cap(_) => caps += 1,
                GadgetRole::ZCopy { .. } | GadgetRole::ZExtra(_) => meets_z = true,
                GadgetRole::Es { edge, .. } => selectors.push(edge),
                _ => {}
            }
        }
        let class = if caps >= 2 {
            CapClass::SharedCap
        } else if meets_z {
            CapClass::MeetsZ
        } else if selectors.len() >= 2 {
            CapClass::ManySelectors
        } else {
            CapClass::Clean
        };
        if class == CapClass::Clean {
            edges.extend(selectors);
        }
        classes.push(class);
    }
    edges.sort_unstable();
    let mut vertices: Vec<Vertex> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    vertices.sort_unstable();
    vertices.dedup();

    let k = p.k as f64;
    if vertices.len() as f64 * p.delta > k + 1e-9 {
        return Err(HardnessError::BoundViolated(format!(
            "{} vertices exceed k/delta = {:.3}",
            vertices.len(),
            k / p.delta
        )));
    }
    let need = 1.5 * p.delta * p.t as f64;
    if (edges.len() as f64) < need - 1e-9 {
        return Err(HardnessError::BoundViolated(format!(
            "{} colorful edges, fewer than 3·delta·t/2 = {need:.3}",
            edges.len()
        )));
    }
    let mut colors: Vec<usize> = edges.iter().map(|e| selector_color(gi, e)).collect();
    colors.sort_unstable();
    colors.dedup();
    if colors.len() != edges.len() {
        return Err(HardnessError::BoundViolated(
            "recovered edges repeat a color".into(),
        ));
    }
    Ok(Extraction {
        vertices,
        edges,
        classes,
    })
}

fn selector_color(gi: &GadgetInstance, e: &Edge) -> usize {
    gi.es
        .iter()
        .position(|set| {
            set.iter()
                .any(|&w| matches!(gi.roles[w], GadgetRole::Es { edge, .. } if edge == *e))
        })
        .map_or(0, |i| i + 1)
}

/// Cap, special and `Z` vertices whose quotient vertex falls on the
/// independent side of the canonical split partition of `g′/f′`. Empty for
/// every split contraction within `k°` edges, since each such vertex keeps
/// two untouched pendant guards.
pub fn forced_clique_side_violations(
    gi: &GadgetInstance,
    f_prime: &[Edge],
) -> Result<Vec<Vertex>, HardnessError> {
    let (q, w) = contract_edges(&gi.graph, f_prime)?;
    let part = is_split(&q).ok_or(HardnessError::NotASolution)?;
    Ok(gi
        .z
        .iter()
        .chain(&gi.caps)
        .chain(&gi.specials)
        .copied()
        .filter(|&v| !part.in_clique_side(w.block_of(v)))
        .collect())
}
