//! The search-tree measure `α·k + β·cc(G[S]) + γ·b(G[S])`, the audit records
//! used to check every rule's claimed measure drop, and the branching-vector
//! root solver.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed when comparing measure drops.
pub const AUDIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Default for MeasureParams {
    fn default() -> Self {
        MeasureParams {
            alpha: 1.0,
            beta: 0.4052,
            gamma: 0.0726,
        }
    }
}

impl MeasureParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha >= 0.0 && beta >= gamma && gamma >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "measure constants need alpha >= 0 and beta >= gamma >= 0, got ({alpha}, {beta}, {gamma})"
            )));
        }
        Ok(MeasureParams { alpha, beta, gamma })
    }

    pub fn evaluate(&self, k: i64, cc: usize, bridges: usize) -> f64 {
        self.alpha * k as f64 + self.beta * cc as f64 + self.gamma * bridges as f64
    }

    /// Guaranteed drop of the keep child of the S-attachment rule.
    pub fn attachment_keep_drop(&self) -> f64 {
        (self.beta - 2.0 * self.gamma).min(self.gamma)
    }

    /// Guaranteed drop of the keep child of the leaf-block rule.
    pub fn leaf_keep_drop(&self) -> f64 {
        self.beta - 2.0 * self.gamma
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    RrIsolatedComponent,
    RrDegreeOne,
    RrForcedDelete,
    BrParallelConflict,
    RrSingleNeighbor,
    BrSAttachment,
    RrContractDegreeTwo,
    BrLeafBlock,
    Terminal,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::RrIsolatedComponent => "rr_isolated_component",
            RuleId::RrDegreeOne => "rr_degree_one",
            RuleId::RrForcedDelete => "rr_forced_delete",
            RuleId::BrParallelConflict => "br_parallel_conflict",
            RuleId::RrSingleNeighbor => "rr_single_neighbor",
            RuleId::BrSAttachment => "br_s_attachment",
            RuleId::RrContractDegreeTwo => "rr_contract_degree_two",
            RuleId::BrLeafBlock => "br_leaf_block",
            RuleId::Terminal => "terminal",
        }
    }

    pub fn is_branching(self) -> bool {
        matches!(
            self,
            RuleId::BrParallelConflict | RuleId::BrSAttachment | RuleId::BrLeafBlock
        )
    }

    /// Lower bound on `μ(parent) − μ(child)` for child `child_index`.
    /// `rr_forced_delete` must hit its bound exactly.
    pub fn claimed_drop(self, child_index: usize, p: &MeasureParams) -> f64 {
        match (self, child_index) {
            (RuleId::RrForcedDelete, _) => p.alpha,
            (RuleId::BrParallelConflict, _) => p.alpha,
            (RuleId::BrSAttachment, 0) => p.alpha,
            (RuleId::BrSAttachment, _) => p.attachment_keep_drop(),
            (RuleId::BrLeafBlock, 0..=2) => p.alpha,
            (RuleId::BrLeafBlock, _) => p.leaf_keep_drop(),
            _ => 0.0,
        }
    }
}

/// Evidence for one parent/child measure step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub rule: RuleId,
    pub mu_parent: f64,
    pub child_index: usize,
    pub mu_child: f64,
    pub bound: f64,
}

impl AuditRecord {
    pub fn drop(&self) -> f64 {
        self.mu_parent - self.mu_child
    }

    pub fn meets_bound(&self) -> bool {
        let d = self.drop();
        if self.rule == RuleId::RrForcedDelete {
            (d - self.bound).abs() <= AUDIT_TOLERANCE
        } else {
            d >= self.bound - AUDIT_TOLERANCE
        }
    }
}

pub trait AuditSink {
    fn record(&mut self, rec: AuditRecord);
}

impl AuditSink for Vec<AuditRecord> {
    fn record(&mut self, rec: AuditRecord) {
        self.push(rec);
    }
}

/// Writes one JSON object per line. The first IO error is kept and the
/// remaining records are dropped.
pub struct JsonLinesSink<W: Write> {
    out: W,
    pub error: Option<std::io::Error>,
}

impl<W: Write> JsonLinesSink<W> {
    pub fn new(out: W) -> Self {
        JsonLinesSink { out, error: None }
    }

    pub fn finish(mut self) -> std::io::Result<W> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> AuditSink for JsonLinesSink<W> {
    fn record(&mut self, rec: AuditRecord) {
        if self.error.is_some() {
            return;
        }
        let line = serde_json::to_string(&rec).expect("audit record serializes");
        if let Err(e) = writeln!(self.out, "{line}") {
            self.error = Some(e);
        }
    }
}

/// The unique `c ≥ 1` with `Σ c^(−b_i) = 1`.
pub fn branching_factor_root(factors: &[f64]) -> Result<f64> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("empty branching vector".into()));
    }
    if let Some(b) = factors.iter().find(|b| !(b.is_finite() && **b > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "branching factors must be positive, got {b}"
        )));
    }
    let f = |x: f64| factors.iter().map(|b| x.powf(-b)).sum::<f64>() - 1.0;
    let mut lo = 1.0;
    if f(lo) <= 0.0 {
        return Ok(lo);
    }
    let mut hi = 2.0;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    // f is strictly decreasing on [1, ∞)
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm.abs() <= 1e-12 || hi - lo <= f64::EPSILON * hi {
            return Ok(mid);
        }
        if fm > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
