//! Brute-force graph oracles that share nothing with the block machinery.

use cactus_core::{MultiGraph, VertexId};

struct Simple {
    n: usize,
    /// (neighbour index, edge id, weight)
    adj: Vec<Vec<(usize, u32, u8)>>,
}

impl Simple {
    fn new(g: &MultiGraph) -> Self {
        let labels = g.vertices();
        let idx = |v: VertexId| labels.binary_search(&v).unwrap();
        let mut adj = vec![Vec::new(); labels.len()];
        for e in g.edges() {
            let (a, b) = (idx(e.u), idx(e.v));
            adj[a].push((b, e.id, e.weight));
            adj[b].push((a, e.id, e.weight));
        }
        Simple {
            n: labels.len(),
            adj,
        }
    }
}

/// Simple `a`–`b` paths as (interior vertex mask, edge ids).
fn paths_between(s: &Simple, a: usize, b: usize) -> Vec<(u64, Vec<u32>)> {
    fn go(
        s: &Simple,
        at: usize,
        b: usize,
        seen: u64,
        edges: &mut Vec<u32>,
        out: &mut Vec<(u64, Vec<u32>)>,
    ) {
        for &(w, id, _) in &s.adj[at] {
            if w == b {
                edges.push(id);
                out.push((seen, edges.clone()));
                edges.pop();
            } else if seen & (1 << w) == 0 {
                edges.push(id);
                go(s, w, b, seen | (1 << w), edges, out);
                edges.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(s, a, b, 1 << a, &mut Vec::new(), &mut out);
    for p in &mut out {
        p.0 &= !(1 << a);
    }
    out
}

fn disjoint(p: &(u64, Vec<u32>), q: &(u64, Vec<u32>)) -> bool {
    p.0 & q.0 == 0 && p.1.iter().all(|e| !q.1.contains(e))
}

/// True iff some pair of vertices is joined by three internally disjoint
/// paths, i.e. the graph contains a subdivision of three parallel edges.
pub fn has_theta(g: &MultiGraph) -> bool {
    let s = Simple::new(g);
    assert!(s.n <= 64);
    for a in 0..s.n {
        for b in a + 1..s.n {
            let paths = paths_between(&s, a, b);
            for i in 0..paths.len() {
                for j in i + 1..paths.len() {
                    if !disjoint(&paths[i], &paths[j]) {
                        continue;
                    }
                    for l in j + 1..paths.len() {
                        if disjoint(&paths[i], &paths[l]) && disjoint(&paths[j], &paths[l]) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// True iff some cycle (including 2-cycles of parallel edges) has even
/// total weight.
pub fn has_even_cycle(g: &MultiGraph) -> bool {
    let s = Simple::new(g);
    assert!(s.n <= 64);
    fn go(s: &Simple, start: usize, at: usize, first: u32, seen: u64, parity: u8) -> bool {
        for &(w, id, wt) in &s.adj[at] {
            if w == start {
                if id != first && (parity + wt).is_multiple_of(2) {
                    return true;
                }
            } else if w > start
                && seen & (1 << w) == 0
                && go(s, start, w, first, seen | (1 << w), parity ^ wt)
            {
                return true;
            }
        }
        false
    }
    (0..s.n).any(|start| {
        s.adj[start]
            .iter()
            .filter(|&&(w, _, _)| w > start)
            .any(|&(w, id, wt)| go(&s, start, w, id, (1 << start) | (1 << w), wt))
    })
}

pub fn naive_cc(g: &MultiGraph) -> usize {
    let s = Simple::new(g);
    let mut seen = vec![false; s.n];
    let mut count = 0;
    for r in 0..s.n {
        if seen[r] {
            continue;
        }
        count += 1;
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(v) = stack.pop() {
            for &(w, _, _) in &s.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Edges whose removal disconnects their endpoints.
pub fn naive_bridges(g: &MultiGraph) -> usize {
    let base = naive_cc(g);
    g.edges()
        .iter()
        .filter(|e| {
            let rest: Vec<(VertexId, VertexId)> = g
                .edges()
                .iter()
                .filter(|f| f.id != e.id)
                .map(|f| (f.u, f.v))
                .collect();
            let h = MultiGraph::from_edges(g.vertices().iter().copied(), rest).unwrap();
            naive_cc(&h) > base
        })
        .count()
}

/// Every connected simple graph on labels `1..=n`, one per edge subset.
pub fn connected_simple_graphs(n: usize) -> Vec<MultiGraph> {
    let pairs: Vec<(VertexId, VertexId)> = (1..=n as VertexId)
        .flat_map(|u| (u + 1..=n as VertexId).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p);
        let g = MultiGraph::from_edges(1..=n as VertexId, edges).unwrap();
        if naive_cc(&g) == 1 {
            out.push(g);
        }
    }
    out
}

pub fn reweight(g: &MultiGraph, bits: impl IntoIterator<Item = u8>) -> MultiGraph {
    let edges: Vec<(VertexId, VertexId, u8)> = g
        .edges()
        .iter()
        .zip(bits)
        .map(|(e, w)| (e.u, e.v, w))
        .collect();
    assert_eq!(edges.len(), g.edge_count());
    MultiGraph::from_weighted_edges(g.vertices().iter().copied(), edges).unwrap()
}
