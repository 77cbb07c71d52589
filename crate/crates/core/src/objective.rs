//! Target classes and the capped contraction objective `min(|F|, k + 1)`.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Edge, Graph, GraphError};
use crate::recognize::{is_chordal, is_complete, is_split};
use crate::witness::contract_edges;

/// An objective value; `Infinite` when the contracted graph misses the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Objective {
    Finite(usize),
    Infinite,
}

impl Objective {
    pub fn finite(self) -> Option<usize> {
        match self {
            Objective::Finite(v) => Some(v),
            Objective::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Objective::Finite(_))
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Finite(v) => write!(f, "{v}"),
            Objective::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetClass {
    Complete,
    Split,
    Chordal,
}

impl TargetClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            TargetClass::Complete => is_complete(g),
            TargetClass::Split => is_split(g).is_some(),
            TargetClass::Chordal => is_chordal(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TargetClass::Complete => "clique",
            TargetClass::Split => "split",
            TargetClass::Chordal => "chordal",
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clique" | "complete" => Ok(TargetClass::Complete),
            "split" => Ok(TargetClass::Split),
            "chordal" => Ok(TargetClass::Chordal),
            other => Err(format!("unknown class `{other}`")),
        }
    }
}

/// `min(|f|, k + 1)` if `g / f` lies in `cls`, otherwise infinite.
pub fn objective(
    g: &Graph,
    k: usize,
    f: &[Edge],
    cls: TargetClass,
) -> Result<Objective, GraphError> {
    let (q, _) = contract_edges(g, f)?;
    Ok(if cls.contains(&q) {
        Objective::Finite(f.len().min(k + 1))
    } else {
        Objective::Infinite
    })
}

pub fn objective_clc(g: &Graph, k: usize, f: &[Edge]) -> Result<Objective, GraphError> {
    objective(g, k, f, TargetClass::Complete)
}

pub fn objective_spc(g: &Graph, k: usize, f: &[Edge]) -> Result<Objective, GraphError> {
    objective(g, k, f, TargetClass::Split)
}

pub fn objective_chc(g: &Graph, k: usize, f: &[Edge]) -> Result<Objective, GraphError> {
    objective(g, k, f, TargetClass::Chordal)
}
