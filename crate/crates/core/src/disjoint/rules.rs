//! Reduction and branching rules for the disjoint problem. Each rule inspects
//! an instance and, when it applies, returns the resulting children. Within a
//! rule, candidates are scanned by ascending vertex label.

use std::collections::{BTreeMap, BTreeSet};

use super::{Child, Instance, OutcomeKind, RuleOutcome};
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::measure::RuleId;
use crate::recognizer::{guard_with, ClassMode};

fn protected_mask(inst: &Instance) -> Vec<bool> {
    inst.graph
        .vertices()
        .iter()
        .map(|v| inst.protected.contains(v))
        .collect()
}

fn reduce(rule: RuleId, instance: Instance) -> RuleOutcome {
    RuleOutcome {
        rule,
        kind: OutcomeKind::Reduce,
        children: vec![Child {
            instance,
            added: BTreeSet::new(),
        }],
    }
}

fn delete_child(inst: &Instance, v: VertexId) -> Child {
    let x = BTreeSet::from([v]);
    Child {
        instance: inst.without(&x, 1),
        added: x,
    }
}

fn keep_child(inst: &Instance, a: &BTreeSet<VertexId>) -> Child {
    let mut protected = inst.protected.clone();
    protected.extend(a.iter().copied());
    Child {
        instance: Instance {
            graph: inst.graph.clone(),
            protected,
            budget: inst.budget,
            mode: inst.mode,
        },
        added: BTreeSet::new(),
    }
}

/// Components of `G[V∖S]` without neighbours in `S` are dropped; failing
/// that, the lowest free vertex of degree one is dropped.
pub fn rr_cleanup(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    let free: Vec<bool> = in_s.iter().map(|s| !s).collect();
    let (count, comp) = g.retain(&free).component_ids();
    if count > 0 {
        // component ids are indexed over the free vertices only
        let free_idx: Vec<usize> = (0..g.vertex_count()).filter(|&i| free[i]).collect();
        let mut touches_s = vec![false; count];
        for (j, &i) in free_idx.iter().enumerate() {
            if g.adjacency(i).iter().any(|&(w, _)| in_s[w]) {
                touches_s[comp[j]] = true;
            }
        }
        let doomed: BTreeSet<VertexId> = free_idx
            .iter()
            .enumerate()
            .filter(|&(j, _)| !touches_s[comp[j]])
            .map(|(_, &i)| g.label(i))
            .collect();
        if !doomed.is_empty() {
            return Ok(Some(reduce(
                RuleId::RrIsolatedComponent,
                inst.without(&doomed, 0),
            )));
        }
    }
    for i in (0..g.vertex_count()).filter(|&i| free[i]) {
        if g.adjacency(i).len() == 1 {
            let x = BTreeSet::from([g.label(i)]);
            return Ok(Some(reduce(RuleId::RrDegreeOne, inst.without(&x, 0))));
        }
    }
    Ok(None)
}

/// A free vertex `v` such that `G[S ∪ {v}]` leaves the class must be deleted.
pub fn rr_forced_delete(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    for i in (0..g.vertex_count()).filter(|&i| !in_s[i]) {
        // a single edge into S can only add a pendant edge
        let into_s = g.adjacency(i).iter().filter(|&&(w, _)| in_s[w]).count();
        if into_s < 2 {
            continue;
        }
        let v = g.label(i);
        if !guard_with(g, &inst.protected, &BTreeSet::from([v]), inst.mode) {
            return Ok(Some(RuleOutcome {
                rule: RuleId::RrForcedDelete,
                kind: OutcomeKind::Reduce,
                children: vec![delete_child(inst, v)],
            }));
        }
    }
    Ok(None)
}

/// Free `u, v` joined by three or more edges, or in odd mode by exactly two
/// edges of equal weight: one of them has to go.
pub fn br_parallel_conflict(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    for i in (0..g.vertex_count()).filter(|&i| !in_s[i]) {
        let mut bundles: BTreeMap<usize, Vec<u8>> = BTreeMap::new();
        for &(w, p) in g.adjacency(i) {
            if w > i && !in_s[w] {
                bundles.entry(w).or_default().push(g.edge_at(p).weight);
            }
        }
        for (w, weights) in bundles {
            let conflict = weights.len() >= 3
                || (inst.mode == ClassMode::OddCactus
                    && weights.len() == 2
                    && weights[0] == weights[1]);
            if conflict {
                return Ok(Some(RuleOutcome {
                    rule: RuleId::BrParallelConflict,
                    kind: OutcomeKind::Branch,
                    children: vec![
                        delete_child(inst, g.label(i)),
                        delete_child(inst, g.label(w)),
                    ],
                }));
            }
        }
    }
    Ok(None)
}

/// A free vertex with a single neighbour sits on no obstruction once
/// multiplicities are at most two.
pub fn rr_single_neighbor(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    for i in (0..g.vertex_count()).filter(|&i| !in_s[i]) {
        let adj = g.adjacency(i);
        if let Some(&(first, _)) = adj.first() {
            if adj.iter().all(|&(w, _)| w == first) {
                let x = BTreeSet::from([g.label(i)]);
                return Ok(Some(reduce(RuleId::RrSingleNeighbor, inst.without(&x, 0))));
            }
        }
    }
    Ok(None)
}

/// A free vertex with two or more distinct neighbours in `S`: delete it, or
/// move it into `S`.
pub fn br_s_attachment(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    for i in (0..g.vertex_count()).filter(|&i| !in_s[i]) {
        let s_nbrs: BTreeSet<usize> = g
            .adjacency(i)
            .iter()
            .filter(|&&(w, _)| in_s[w])
            .map(|&(w, _)| w)
            .collect();
        if s_nbrs.len() < 2 {
            continue;
        }
        let v = g.label(i);
        let a = BTreeSet::from([v]);
        if !guard_with(g, &inst.protected, &a, inst.mode) {
            return Err(Error::Invariant(format!(
                "vertex {v} survived forced deletion but G[S ∪ {{v}}] is outside the class"
            )));
        }
        return Ok(Some(RuleOutcome {
            rule: RuleId::BrSAttachment,
            kind: OutcomeKind::Branch,
            children: vec![delete_child(inst, v), keep_child(inst, &a)],
        }));
    }
    Ok(None)
}

/// Replaces a free vertex `v` with `N(v) = {u, w}` by
/// `max(m(u, v), m(v, w))` parallel `u–w` edges. In odd mode a single new
/// edge carries the parity of the removed path; a pair gets weights 0 and 1,
/// the lower id taking 0.
pub fn rr_contract_degree_two(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    for i in (0..g.vertex_count()).filter(|&i| !in_s[i]) {
        let mut nbrs: BTreeMap<usize, Vec<u8>> = BTreeMap::new();
        for &(w, p) in g.adjacency(i) {
            nbrs.entry(w).or_default().push(g.edge_at(p).weight);
        }
        if nbrs.len() != 2 {
            continue;
        }
        let mut it = nbrs.into_iter();
        let (iu, wu) = it.next().expect("two neighbours");
        let (iw, ww) = it.next().expect("two neighbours");
        let (v, u, w) = (g.label(i), g.label(iu), g.label(iw));
        if in_s[iu] && in_s[iw] {
            return Err(Error::Invariant(format!(
                "degree-two vertex {v} has both neighbours {u}, {w} in S"
            )));
        }
        let p = wu.len().max(ww.len());
        if p > 2 {
            return Err(Error::Invariant(format!(
                "degree-two vertex {v} has multiplicity {p} to a neighbour"
            )));
        }
        let weights: Vec<u8> = match (inst.mode, p) {
            (ClassMode::Cactus, _) => vec![1; p],
            (ClassMode::OddCactus, 1) => vec![(wu[0] + ww[0]) % 2],
            (ClassMode::OddCactus, _) => vec![0, 1],
        };
        let mut graph: MultiGraph = g.delete_vertices(&BTreeSet::from([v]))?;
        for wt in weights {
            graph.add_edge(u, w, wt)?;
        }
        return Ok(Some(reduce(
            RuleId::RrContractDegreeTwo,
            Instance {
                graph,
                protected: inst.protected.clone(),
                budget: inst.budget,
                mode: inst.mode,
            },
        )));
    }
    Ok(None)
}

/// Branches on three consecutive non-cut vertices of the first leaf block of
/// `G[V∖S]` (for a triangle block, its three vertices): delete one of them,
/// or move all three into `S` when that keeps `G[S]` in the class.
pub fn br_leaf_block(inst: &Instance) -> Result<Option<RuleOutcome>> {
    let g = &inst.graph;
    let in_s = protected_mask(inst);
    let free: Vec<bool> = in_s.iter().map(|s| !s).collect();
    let h = g.retain(&free);
    if h.is_empty() {
        return Ok(None);
    }
    let bd = h.block_decomposition();
    let block = bd
        .leaf_blocks()
        .find(|b| b.vertices.len() >= 3)
        .ok_or_else(|| Error::Invariant("no leaf block with three or more vertices".into()))?;
    let triple = if block.vertices.len() == 3 {
        let mut it = block.vertices.iter().copied();
        let (a, b, c) = (it.next(), it.next(), it.next());
        (a.unwrap(), b.unwrap(), c.unwrap())
    } else {
        h.triple_in_block(block, &bd.cut_vertices).ok_or_else(|| {
            Error::Invariant(format!(
                "leaf block {:?} lacks three consecutive non-cut vertices",
                block.vertices
            ))
        })?
    };
    let triple = [triple.0, triple.1, triple.2];
    for &x in triple.iter().filter(|x| !bd.cut_vertices.contains(x)) {
        let s_nbrs = g
            .neighbors(x)?
            .into_iter()
            .filter(|y| inst.protected.contains(y))
            .count();
        if s_nbrs != 1 {
            return Err(Error::Invariant(format!(
                "leaf-block vertex {x} has {s_nbrs} neighbours in S, expected 1"
            )));
        }
    }
    let mut children: Vec<Child> = triple.iter().map(|&x| delete_child(inst, x)).collect();
    let a: BTreeSet<VertexId> = triple.into_iter().collect();
    if guard_with(g, &inst.protected, &a, inst.mode) {
        children.push(keep_child(inst, &a));
    }
    Ok(Some(RuleOutcome {
        rule: RuleId::BrLeafBlock,
        kind: OutcomeKind::Branch,
        children,
    }))
}
