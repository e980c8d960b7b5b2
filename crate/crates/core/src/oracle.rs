//! Exhaustive reference solver. Subsets are tried by increasing size, then in
//! lexicographic label order, so the first hit is a minimum deletion set.
//! No pruning on purpose.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::recognizer::{class_check, ClassMode};

pub const DEFAULT_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` when nothing up to the size cap works.
    pub min_size: Option<usize>,
    pub witness: BTreeSet<VertexId>,
}

pub fn min_deletion_set(
    g: &MultiGraph,
    mode: ClassMode,
    k_cap: Option<usize>,
) -> Result<OracleResult> {
    min_deletion_set_with_limit(g, mode, k_cap, DEFAULT_MAX_VERTICES)
}

pub fn min_deletion_set_with_limit(
    g: &MultiGraph,
    mode: ClassMode,
    k_cap: Option<usize>,
    max_vertices: usize,
) -> Result<OracleResult> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::OracleTooLarge {
            n,
            limit: max_vertices,
        });
    }
    let cap = k_cap.unwrap_or(n).min(n);
    for size in 0..=cap {
        for x in g.vertices().iter().copied().combinations(size) {
            let x: BTreeSet<VertexId> = x.into_iter().collect();
            if class_check(&g.delete_vertices(&x)?, mode).member {
                return Ok(OracleResult {
                    min_size: Some(size),
                    witness: x,
                });
            }
        }
    }
    Ok(OracleResult {
        min_size: None,
        witness: BTreeSet::new(),
    })
}
