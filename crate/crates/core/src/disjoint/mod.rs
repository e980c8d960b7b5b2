//! Branch-and-reduce search for the disjoint problem: given a protected set
//! `S` with both `G[V∖S]` and `G[S]` in the target class, find `X ⊆ V∖S`,
//! `|X| ≤ k`, with `G − X` in the class.
//!
//! The dispatcher tries the rules in a fixed order; every branch strictly
//! decreases the measure `α·k + β·cc(G[S]) + γ·b(G[S])`, which an optional
//! [`AuditSink`] can record per child.

mod rules;

use std::collections::BTreeSet;

pub use rules::{
    br_leaf_block, br_parallel_conflict, br_s_attachment, rr_cleanup, rr_contract_degree_two,
    rr_forced_delete, rr_single_neighbor,
};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::measure::{AuditRecord, AuditSink, MeasureParams, RuleId};
use crate::recognizer::{class_check, ClassMode};
use crate::solution::Solution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: MultiGraph,
    /// The protected set `S`.
    pub protected: BTreeSet<VertexId>,
    pub budget: i64,
    pub mode: ClassMode,
}

impl Instance {
    pub fn new(
        graph: MultiGraph,
        protected: BTreeSet<VertexId>,
        budget: i64,
        mode: ClassMode,
    ) -> Result<Self> {
        if let Some(&v) = protected.iter().find(|v| !graph.contains(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(Instance {
            graph,
            protected,
            budget,
            mode,
        })
    }

    pub fn free_vertices(&self) -> BTreeSet<VertexId> {
        self.graph
            .vertices()
            .iter()
            .copied()
            .filter(|v| !self.protected.contains(v))
            .collect()
    }

    pub fn protected_graph(&self) -> MultiGraph {
        self.graph
            .induced(&self.protected)
            .expect("protected set is a vertex subset")
    }

    pub fn measure(&self, p: &MeasureParams) -> f64 {
        let gs = self.protected_graph();
        p.evaluate(self.budget, gs.cc(), gs.bridge_count())
    }

    /// Checks `S ⊆ V` and that both sides are in the class.
    pub fn check_invariants(&self) -> Result<()> {
        if let Some(v) = self.protected.iter().find(|v| !self.graph.contains(**v)) {
            return Err(Error::Invariant(format!(
                "protected vertex {v} not in graph"
            )));
        }
        if !class_check(&self.protected_graph(), self.mode).member {
            return Err(Error::Invariant("G[S] left the class".into()));
        }
        let rest = self.graph.induced(&self.free_vertices())?;
        if !class_check(&rest, self.mode).member {
            return Err(Error::Invariant("G[V∖S] left the class".into()));
        }
        Ok(())
    }

    /// Removes `x` from the graph and charges `cost` to the budget.
    pub(crate) fn without(&self, x: &BTreeSet<VertexId>, cost: i64) -> Instance {
        Instance {
            graph: self
                .graph
                .delete_vertices(x)
                .expect("removed vertices belong to the graph"),
            protected: self.protected.clone(),
            budget: self.budget - cost,
            mode: self.mode,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeKind {
    Reduce,
    Branch,
    Terminal(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Child {
    pub instance: Instance,
    /// Vertices this step puts into the solution.
    pub added: BTreeSet<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub rule: RuleId,
    pub kind: OutcomeKind,
    pub children: Vec<Child>,
}

impl RuleOutcome {
    fn terminal(answer: bool) -> Self {
        RuleOutcome {
            rule: RuleId::Terminal,
            kind: OutcomeKind::Terminal(answer),
            children: Vec::new(),
        }
    }
}

/// Picks the first applicable rule.
///
/// Order: budget exhausted, already in class, zero budget, then isolated
/// components / degree one, forced deletion, parallel conflicts, single
/// neighbour, S-attachment, degree-two contraction, leaf block.
type Rule = fn(&Instance) -> Result<Option<RuleOutcome>>;

pub fn next_rule(inst: &Instance) -> Result<RuleOutcome> {
    if inst.budget < 0 {
        return Ok(RuleOutcome::terminal(false));
    }
    if class_check(&inst.graph, inst.mode).member {
        return Ok(RuleOutcome::terminal(true));
    }
    if inst.budget == 0 {
        return Ok(RuleOutcome::terminal(false));
    }
    let rules: [Rule; 7] = [
        rr_cleanup,
        rr_forced_delete,
        br_parallel_conflict,
        rr_single_neighbor,
        br_s_attachment,
        rr_contract_degree_two,
        br_leaf_block,
    ];
    for rule in rules {
        if let Some(out) = rule(inst)? {
            return Ok(out);
        }
    }
    Err(Error::Invariant(
        "no rule applies to a non-terminal instance".into(),
    ))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes: the root plus every branch child explored.
    pub nodes: u64,
    pub branch_nodes: u64,
    pub reductions: u64,
}

impl std::ops::AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.nodes += o.nodes;
        self.branch_nodes += o.branch_nodes;
        self.reductions += o.reductions;
    }
}

pub struct DisjointSolver<'a> {
    params: MeasureParams,
    audit: Option<&'a mut dyn AuditSink>,
    pub stats: SearchStats,
    check_children: bool,
}

impl<'a> DisjointSolver<'a> {
    pub fn new(params: MeasureParams) -> Self {
        DisjointSolver {
            params,
            audit: None,
            stats: SearchStats::default(),
            check_children: cfg!(debug_assertions),
        }
    }

    pub fn with_audit(params: MeasureParams, sink: &'a mut dyn AuditSink) -> Self {
        DisjointSolver {
            audit: Some(sink),
            ..Self::new(params)
        }
    }

    /// Re-check the instance invariants on every child (on by default in
    /// debug builds).
    pub fn check_children(mut self, on: bool) -> Self {
        self.check_children = on;
        self
    }

    pub fn params(&self) -> &MeasureParams {
        &self.params
    }

    /// Returns `None` when no deletion set within budget exists, including
    /// when `G[S]` itself is outside the class.
    pub fn solve(&mut self, inst: &Instance) -> Result<Option<Solution>> {
        let rest = inst.graph.induced(&inst.free_vertices())?;
        if !class_check(&rest, inst.mode).member {
            return Err(Error::InvalidInstance(
                "G[V∖S] is not in the target class".into(),
            ));
        }
        if !class_check(&inst.protected_graph(), inst.mode).member {
            return Ok(None);
        }
        Ok(self.search(inst.clone())?.map(Solution::new))
    }

    fn search(&mut self, mut inst: Instance) -> Result<Option<BTreeSet<VertexId>>> {
        self.stats.nodes += 1;
        let mut taken = BTreeSet::new();
        loop {
            let mut out = next_rule(&inst)?;
            self.inspect(&inst, &out)?;
            match out.kind {
                OutcomeKind::Terminal(true) => return Ok(Some(taken)),
                OutcomeKind::Terminal(false) => return Ok(None),
                OutcomeKind::Reduce => {
                    self.stats.reductions += 1;
                    let child = out.children.pop().expect("reduction has one child");
                    taken.extend(child.added);
                    inst = child.instance;
                }
                OutcomeKind::Branch => {
                    self.stats.branch_nodes += 1;
                    for child in out.children {
                        if let Some(mut x) = self.search(child.instance)? {
                            x.extend(child.added);
                            x.extend(taken);
                            return Ok(Some(x));
                        }
                    }
                    return Ok(None);
                }
            }
        }
    }

    fn inspect(&mut self, parent: &Instance, out: &RuleOutcome) -> Result<()> {
        if self.check_children {
            if out.kind == OutcomeKind::Branch && !(2..=4).contains(&out.children.len()) {
                return Err(Error::Invariant(format!(
                    "{} produced {} children",
                    out.rule.as_str(),
                    out.children.len()
                )));
            }
            for child in &out.children {
                if !child.added.is_disjoint(&parent.protected) {
                    return Err(Error::Invariant(format!(
                        "{} deleted a protected vertex",
                        out.rule.as_str()
                    )));
                }
                child
                    .instance
                    .check_invariants()
                    .map_err(|e| Error::Invariant(format!("after {}: {e}", out.rule.as_str())))?;
            }
        }
        if let Some(sink) = self.audit.as_deref_mut() {
            if out.children.is_empty() {
                return Ok(());
            }
            let mu_parent = parent.measure(&self.params);
            for (idx, child) in out.children.iter().enumerate() {
                sink.record(AuditRecord {
                    rule: out.rule,
                    mu_parent,
                    child_index: idx,
                    mu_child: child.instance.measure(&self.params),
                    bound: out.rule.claimed_drop(idx, &self.params),
                });
            }
        }
        Ok(())
    }
}

/// One-shot disjoint solve.
pub fn solve(
    inst: &Instance,
    params: MeasureParams,
    audit: Option<&mut dyn AuditSink>,
) -> Result<Option<Solution>> {
    match audit {
        Some(sink) => DisjointSolver::with_audit(params, sink).solve(inst),
        None => DisjointSolver::new(params).solve(inst),
    }
}
