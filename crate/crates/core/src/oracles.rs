//! Exhaustive reference solvers for small instances.

use num_rational::Ratio;
use thiserror::Error;

use crate::combinatorics::{binomial, next_combination};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::witness::contract_edges;

pub use crate::objective::{objective, Objective, TargetClass};

/// Default cap on the number of candidate sets an oracle may enumerate.
pub const DEFAULT_GUARD: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space of {candidates} candidates exceeds the limit of {limit}")]
    TooLarge { candidates: u128, limit: u128 },
    #[error("density needs at least two vertices, got {0}")]
    TooSmall(usize),
}

fn guard(candidates: u128, limit: u128) -> Result<(), OracleError> {
    if candidates > limit {
        Err(OracleError::TooLarge { candidates, limit })
    } else {
        Ok(())
    }
}

/// Minimum edge set of size at most `k` contracting `g` into `cls`, smallest
/// size first and lexicographically least among equals. `None` when no set
/// of at most `k` edges works.
pub fn brute_force_contraction(
    g: &Graph,
    k: usize,
    cls: TargetClass,
) -> Result<Option<(EdgeSet, usize)>, OracleError> {
    brute_force_contraction_with_guard(g, k, cls, DEFAULT_GUARD)
}

pub fn brute_force_contraction_with_guard(
    g: &Graph,
    k: usize,
    cls: TargetClass,
    limit: u128,
) -> Result<Option<(EdgeSet, usize)>, OracleError> {
    let edges = g.edge_list();
    let m = edges.len();
    let top = k.min(m);
    let total = (0..=top).fold(0u128, |acc, s| {
        acc.saturating_add(binomial(m as u128, s as u128))
    });
    guard(total, limit)?;
    let mut chosen: Vec<Edge> = Vec::with_capacity(top);
    for size in 0..=top {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            chosen.clear();
            chosen.extend(idx.iter().map(|&i| edges[i]));
            let (q, _) = contract_edges(g, &chosen).expect("subsets of E(g) are valid");
            if cls.contains(&q) {
                return Ok(Some((chosen.iter().copied().collect(), size)));
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    Ok(None)
}

/// `OPT(g, k)`: the optimum size, or `k + 1` when nothing within budget works.
pub fn optimum(g: &Graph, k: usize, cls: TargetClass) -> Result<usize, OracleError> {
    Ok(brute_force_contraction(g, k, cls)?.map_or(k + 1, |(_, s)| s))
}

/// `|E(g[s])| / C(|s|, 2)`.
pub fn density(g: &Graph, s: &[Vertex]) -> Result<Ratio<u64>, OracleError> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    let n = set.len() as u64;
    if n < 2 {
        return Err(OracleError::TooSmall(set.len()));
    }
    Ok(Ratio::new(
        g.induced_edge_count(&set) as u64,
        n * (n - 1) / 2,
    ))
}

/// A `k`-vertex set maximizing the induced edge count, lexicographically
/// least among maximizers.
pub fn densest_k_subgraph_brute(g: &Graph, k: usize) -> Result<(Vec<Vertex>, usize), OracleError> {
    let n = g.n();
    if k > n {
        return Ok((Vec::new(), 0));
    }
    guard(binomial(n as u128, k as u128), DEFAULT_GUARD)?;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut best = (idx.clone(), g.induced_edge_count(&idx));
    while next_combination(&mut idx, n) {
        let count = g.induced_edge_count(&idx);
        if count > best.1 {
            best = (idx.clone(), count);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub edges_valid: bool,
    pub in_class: bool,
    pub value: Objective,
}

pub fn verify_solution(g: &Graph, k: usize, f: &[Edge], cls: TargetClass) -> VerifyReport {
    match contract_edges(g, f) {
        Err(_) => VerifyReport {
            edges_valid: false,
            in_class: false,
            value: Objective::Infinite,
        },
        Ok((q, _)) => {
            let in_class = cls.contains(&q);
            VerifyReport {
                edges_valid: true,
                in_class,
                value: if in_class {
                    Objective::Finite(f.len().min(k + 1))
                } else {
                    Objective::Infinite
                },
            }
        }
    }
}
