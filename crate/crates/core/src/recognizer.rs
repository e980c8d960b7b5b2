//! Linear-time membership tests for cactus forests and forests of odd cacti.
//!
//! A multigraph is a cactus forest iff every block has at most as many edges
//! as vertices, i.e. each block is an isolated vertex, a single edge or a
//! single cycle (a parallel pair counts as a 2-cycle). In odd mode each cycle
//! block must additionally have odd total edge weight.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{MultiGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassMode {
    /// Cactus forests (Cactus Vertex Deletion).
    Cactus,
    /// Forests of odd cacti under edge weights (Even Cycle Transversal).
    OddCactus,
}

impl ClassMode {
    /// Problem name used in graph file headers.
    pub fn problem_name(self) -> &'static str {
        match self {
            ClassMode::Cactus => "cvd",
            ClassMode::OddCactus => "ect",
        }
    }
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.problem_name())
    }
}

impl FromStr for ClassMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cvd" | "cactus" => Ok(ClassMode::Cactus),
            "ect" | "odd" | "odd_cactus" => Ok(ClassMode::OddCactus),
            other => Err(format!("unknown mode `{other}` (expected cvd or ect)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    /// A block violating the class condition; present iff `member` is false.
    pub witness: Option<BTreeSet<VertexId>>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            member: true,
            witness: None,
        }
    }

    fn no(block: BTreeSet<VertexId>) -> Self {
        Verdict {
            member: false,
            witness: Some(block),
        }
    }
}

pub fn is_cactus_forest(g: &MultiGraph) -> Verdict {
    check(g, ClassMode::Cactus)
}

pub fn is_odd_cactus_forest(g: &MultiGraph) -> Verdict {
    check(g, ClassMode::OddCactus)
}

pub fn class_check(g: &MultiGraph, mode: ClassMode) -> Verdict {
    check(g, mode)
}

/// Whether `G[S ∪ A]` stays in the class.
pub fn guard_with(
    g: &MultiGraph,
    s: &BTreeSet<VertexId>,
    a: &BTreeSet<VertexId>,
    mode: ClassMode,
) -> bool {
    let mut mask = vec![false; g.vertex_count()];
    for v in s.iter().chain(a) {
        if let Some(i) = g.index(*v) {
            mask[i] = true;
        }
    }
    check(&g.retain(&mask), mode).member
}

fn check(g: &MultiGraph, mode: ClassMode) -> Verdict {
    let bd = g.block_decomposition();
    for b in &bd.blocks {
        if b.edges.len() > b.vertices.len() {
            return Verdict::no(b.vertices.clone());
        }
        if mode == ClassMode::OddCactus && b.edges.len() >= 2 {
            let weight: u32 = b
                .edges
                .iter()
                .map(|&id| u32::from(g.edge(id).expect("block edge").weight))
                .sum();
            if weight.is_multiple_of(2) {
                return Verdict::no(b.vertices.clone());
            }
        }
    }
    Verdict::yes()
}
