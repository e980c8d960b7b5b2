//! Iterative compression: grows a solution vertex by vertex in label order
//! and, whenever it reaches size `k + 1`, compresses it back to `k` through
//! the disjoint solver.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::disjoint::{DisjointSolver, Instance, SearchStats};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::measure::{AuditSink, MeasureParams};
use crate::recognizer::{class_check, ClassMode};
use crate::solution::Solution;

pub struct Compressor<'a> {
    inner: DisjointSolver<'a>,
}

impl<'a> Compressor<'a> {
    pub fn new(params: MeasureParams) -> Self {
        Compressor {
            inner: DisjointSolver::new(params),
        }
    }

    pub fn with_audit(params: MeasureParams, sink: &'a mut dyn AuditSink) -> Self {
        Compressor {
            inner: DisjointSolver::with_audit(params, sink),
        }
    }

    pub fn check_children(self, on: bool) -> Self {
        Compressor {
            inner: self.inner.check_children(on),
        }
    }

    pub fn stats(&self) -> SearchStats {
        self.inner.stats
    }

    /// A deletion set of size at most `k`, if one exists.
    pub fn solve(&mut self, g: &MultiGraph, k: usize, mode: ClassMode) -> Result<Option<Solution>> {
        let mut current: BTreeSet<VertexId> = BTreeSet::new();
        let mut prefix: BTreeSet<VertexId> = BTreeSet::new();
        for &v in g.vertices() {
            prefix.insert(v);
            let gi = g.induced(&prefix)?;
            let mut z = current.clone();
            z.insert(v);
            if z.len() <= k {
                current = z;
                continue;
            }
            // the old solution may still cover the grown prefix
            if class_check(&gi.delete_vertices(&current)?, mode).member {
                continue;
            }
            match self.compress(&gi, &z, k, mode)? {
                Some(x) => current = x,
                None => return Ok(None),
            }
            debug_assert!(current.len() <= k);
            debug_assert!(class_check(&gi.delete_vertices(&current)?, mode).member);
        }
        let sol = Solution::new(current);
        if !sol.verify(g, mode)?.member {
            return Err(Error::Invariant(
                "compression produced an invalid deletion set".into(),
            ));
        }
        Ok(Some(sol))
    }

    /// Tries every `W ⊊ Z` with `|W| ≤ k` (smallest first) as the part of `Z`
    /// that is deleted; the rest of `Z` becomes the protected set.
    fn compress(
        &mut self,
        gi: &MultiGraph,
        z: &BTreeSet<VertexId>,
        k: usize,
        mode: ClassMode,
    ) -> Result<Option<BTreeSet<VertexId>>> {
        let zs: Vec<VertexId> = z.iter().copied().collect();
        for size in 0..=k.min(zs.len() - 1) {
            for w in zs.iter().copied().combinations(size) {
                let w: BTreeSet<VertexId> = w.into_iter().collect();
                let protected: BTreeSet<VertexId> = z.difference(&w).copied().collect();
                let reduced = gi.delete_vertices(&w)?;
                if !class_check(&reduced.induced(&protected)?, mode).member {
                    continue;
                }
                let inst = Instance::new(reduced, protected, (k - size) as i64, mode)?;
                if let Some(x) = self.inner.solve(&inst)? {
                    let mut out = w;
                    out.extend(x.vertices);
                    return Ok(Some(out));
                }
            }
        }
        Ok(None)
    }

    /// Smallest deletion set, sweeping `k = 0, 1, …` up to `k_cap`
    /// (default `|V|`). `None` when the cap is exhausted.
    pub fn find_min(
        &mut self,
        g: &MultiGraph,
        mode: ClassMode,
        k_cap: Option<usize>,
    ) -> Result<Option<(usize, Solution)>> {
        let cap = k_cap.unwrap_or(g.vertex_count());
        for k in 0..=cap {
            if let Some(sol) = self.solve(g, k, mode)? {
                return Ok(Some((sol.len(), sol)));
            }
        }
        Ok(None)
    }
}

pub fn solve(g: &MultiGraph, k: usize, mode: ClassMode) -> Result<Option<Solution>> {
    Compressor::new(MeasureParams::default()).solve(g, k, mode)
}

pub fn find_min(
    g: &MultiGraph,
    mode: ClassMode,
    k_cap: Option<usize>,
) -> Result<Option<(usize, Solution)>> {
    Compressor::new(MeasureParams::default()).find_min(g, mode, k_cap)
}
