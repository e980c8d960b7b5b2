//! Undirected multigraphs without self-loops, carrying a weight bit on every
//! edge, plus the connectivity queries the solvers are built on: components,
//! bridges, cut vertices and the block decomposition.
//!
//! Graph values are treated as immutable by the solvers. Every structural
//! operation (`delete_vertices`, `induced`, ...) returns a fresh graph that
//! keeps the original vertex labels and edge ids.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    /// Smaller endpoint label.
    pub u: VertexId,
    /// Larger endpoint label.
    pub v: VertexId,
    pub weight: u8,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A block: maximal 2-connected piece, a single (possibly parallel) edge
/// bundle, or an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted by vertex set.
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<VertexId>,
    pub bridges: BTreeSet<EdgeId>,
}

impl BlockDecomposition {
    pub fn cut_count(&self, block: &Block) -> usize {
        block
            .vertices
            .iter()
            .filter(|v| self.cut_vertices.contains(v))
            .count()
    }

    pub fn is_leaf(&self, block: &Block) -> bool {
        self.cut_count(block) <= 1
    }

    pub fn leaf_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(move |b| self.is_leaf(b))
    }
}

const NONE: usize = usize::MAX;

/// Multigraph with sorted vertex labels and edges stored in id order.
#[derive(Debug, Clone, Default)]
pub struct MultiGraph {
    labels: Vec<VertexId>,
    edges: Vec<Edge>,
    // endpoint indices of `edges[i]`
    ends: Vec<(usize, usize)>,
    // per vertex index: (neighbor index, edge position)
    adj: Vec<Vec<(usize, usize)>>,
    next_edge_id: EdgeId,
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given labels, unit-weight edges.
    pub fn from_edges(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Self::from_weighted_edges(vertices, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    pub fn from_weighted_edges(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, u8)>,
    ) -> Result<Self> {
        let mut g = Self::new();
        for v in vertices {
            g.insert_vertex(v)?;
        }
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Adds a vertex labelled one above the current maximum (0 when empty).
    pub fn add_vertex(&mut self) -> VertexId {
        let label = self.labels.last().map_or(0, |&l| l + 1);
        self.labels.push(label);
        self.adj.push(Vec::new());
        label
    }

    pub fn insert_vertex(&mut self, label: VertexId) -> Result<()> {
        match self.labels.binary_search(&label) {
            Ok(_) => Err(Error::DuplicateVertex(label)),
            Err(pos) if pos == self.labels.len() => {
                self.labels.push(label);
                self.adj.push(Vec::new());
                Ok(())
            }
            Err(pos) => {
                self.labels.insert(pos, label);
                self.adj.insert(pos, Vec::new());
                let shift = |i: usize| if i >= pos { i + 1 } else { i };
                for e in &mut self.ends {
                    *e = (shift(e.0), shift(e.1));
                }
                for list in &mut self.adj {
                    for entry in list.iter_mut() {
                        entry.0 = shift(entry.0);
                    }
                }
                Ok(())
            }
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, weight: u8) -> Result<EdgeId> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if weight > 1 {
            return Err(Error::InvalidWeight(weight));
        }
        let iu = self.index(u).ok_or(Error::UnknownVertex(u))?;
        let iv = self.index(v).ok_or(Error::UnknownVertex(v))?;
        let (iu, iv) = if u < v { (iu, iv) } else { (iv, iu) };
        let id = self.next_edge_id;
        self.next_edge_id += 1;
        let pos = self.edges.len();
        self.edges.push(Edge {
            id,
            u: u.min(v),
            v: u.max(v),
            weight,
        });
        self.ends.push((iu, iv));
        self.adj[iu].push((iv, pos));
        self.adj[iv].push((iu, pos));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Vertex labels in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.labels
    }

    /// Edges in ascending id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.labels.iter().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index(v).is_some()
    }

    pub(crate) fn index(&self, v: VertexId) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub(crate) fn label(&self, i: usize) -> VertexId {
        self.labels[i]
    }

    /// (neighbor index, edge position) pairs of vertex index `i`.
    pub(crate) fn adjacency(&self, i: usize) -> &[(usize, usize)] {
        &self.adj[i]
    }

    pub(crate) fn edge_at(&self, pos: usize) -> &Edge {
        &self.edges[pos]
    }

    fn require(&self, v: VertexId) -> Result<usize> {
        self.index(v).ok_or(Error::UnknownVertex(v))
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|p| &self.edges[p])
    }

    /// Edges incident to `v`, in adjacency order.
    pub fn incident_edges(&self, v: VertexId) -> Result<impl Iterator<Item = &Edge> + '_> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(move |&(_, p)| &self.edges[p]))
    }

    /// Edges between `u` and `v`, lowest id first.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Result<Vec<Edge>> {
        let iu = self.require(u)?;
        let iv = self.require(v)?;
        let mut out: Vec<Edge> = self.adj[iu]
            .iter()
            .filter(|&&(w, _)| w == iv)
            .map(|&(_, p)| self.edges[p])
            .collect();
        out.sort_by_key(|e| e.id);
        Ok(out)
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> Result<usize> {
        let iu = self.require(u)?;
        let iv = self.require(v)?;
        Ok(self.adj[iu].iter().filter(|&&(w, _)| w == iv).count())
    }

    pub fn neighbors(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(|&(w, _)| self.labels[w]).collect())
    }

    /// Number of incident edges, parallel edges counted separately.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adj[self.require(v)?].len())
    }

    /// `G[keep]`.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Result<MultiGraph> {
        let mut mask = vec![false; self.labels.len()];
        for &v in keep {
            mask[self.require(v)?] = true;
        }
        Ok(self.retain(&mask))
    }

    /// `G[V \ x]`.
    pub fn delete_vertices(&self, x: &BTreeSet<VertexId>) -> Result<MultiGraph> {
        let mut mask = vec![true; self.labels.len()];
        for &v in x {
            mask[self.require(v)?] = false;
        }
        Ok(self.retain(&mask))
    }

    pub(crate) fn retain(&self, mask: &[bool]) -> MultiGraph {
        let mut remap = vec![NONE; self.labels.len()];
        let mut labels = Vec::new();
        for (i, &keep) in mask.iter().enumerate() {
            if keep {
                remap[i] = labels.len();
                labels.push(self.labels[i]);
            }
        }
        let mut g = MultiGraph {
            adj: vec![Vec::new(); labels.len()],
            labels,
            edges: Vec::new(),
            ends: Vec::new(),
            next_edge_id: self.next_edge_id,
        };
        for (p, e) in self.edges.iter().enumerate() {
            let (a, b) = self.ends[p];
            if mask[a] && mask[b] {
                let (a, b) = (remap[a], remap[b]);
                let q = g.edges.len();
                g.edges.push(*e);
                g.ends.push((a, b));
                g.adj[a].push((b, q));
                g.adj[b].push((a, q));
            }
        }
        g
    }

    /// Components as vertex sets, ordered by smallest label.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = BTreeSet::new();
            while let Some(x) = stack.pop() {
                comp.insert(self.labels[x]);
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Component index per vertex index.
    pub(crate) fn component_ids(&self) -> (usize, Vec<usize>) {
        let n = self.labels.len();
        let mut comp = vec![NONE; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != NONE {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(y, _) in &self.adj[x] {
                    if comp[y] == NONE {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// Number of connected components; 0 for the empty graph.
    pub fn cc(&self) -> usize {
        self.component_ids().0
    }

    pub fn bridges(&self) -> BTreeSet<EdgeId> {
        self.tarjan()
            .blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| self.edges[b[0]].id)
            .collect()
    }

    pub fn bridge_count(&self) -> usize {
        self.tarjan().blocks.iter().filter(|b| b.len() == 1).count()
    }

    pub fn cut_vertices(&self) -> BTreeSet<VertexId> {
        let t = self.tarjan();
        t.is_cut
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| self.labels[i])
            .collect()
    }

    pub fn block_decomposition(&self) -> BlockDecomposition {
        let t = self.tarjan();
        let mut blocks: Vec<Block> = t
            .blocks
            .iter()
            .map(|positions| {
                let mut vertices = BTreeSet::new();
                let mut edges = BTreeSet::new();
                for &p in positions {
                    let e = &self.edges[p];
                    vertices.insert(e.u);
                    vertices.insert(e.v);
                    edges.insert(e.id);
                }
                Block { vertices, edges }
            })
            .collect();
        blocks.extend(t.isolated.iter().map(|&i| Block {
            vertices: BTreeSet::from([self.labels[i]]),
            edges: BTreeSet::new(),
        }));
        blocks.sort();
        let bridges = blocks
            .iter()
            .filter(|b| b.edges.len() == 1)
            .flat_map(|b| b.edges.iter().copied())
            .collect();
        let cut_vertices = t
            .is_cut
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| self.labels[i])
            .collect();
        BlockDecomposition {
            blocks,
            cut_vertices,
            bridges,
        }
    }

    pub fn leaf_blocks(&self) -> Vec<Block> {
        let bd = self.block_decomposition();
        bd.leaf_blocks().cloned().collect()
    }

    /// Three consecutive vertices of `block`, none a cut vertex of `self`.
    ///
    /// Cycle blocks are walked from their lowest label towards its smaller
    /// neighbour; the first window of three non-cut vertices wins. For any
    /// other block the lexicographically smallest non-cut path `a-b-c` is
    /// returned.
    pub fn consecutive_noncut_triple(
        &self,
        block: &BTreeSet<VertexId>,
    ) -> Result<Option<(VertexId, VertexId, VertexId)>> {
        let bd = self.block_decomposition();
        let b = bd
            .blocks
            .iter()
            .find(|b| &b.vertices == block)
            .ok_or(Error::NotABlock)?;
        if b.vertices.len() < 3 {
            return Err(Error::InvalidArgument(
                "consecutive triple needs a block with at least 3 vertices".into(),
            ));
        }
        Ok(self.triple_in_block(b, &bd.cut_vertices))
    }

    pub(crate) fn triple_in_block(
        &self,
        b: &Block,
        cuts: &BTreeSet<VertexId>,
    ) -> Option<(VertexId, VertexId, VertexId)> {
        let nbrs = |x: VertexId| -> BTreeSet<VertexId> {
            self.incident_edges(x)
                .expect("block vertex in graph")
                .filter(|e| b.edges.contains(&e.id))
                .map(|e| e.other(x))
                .collect()
        };
        let ok = |x: &VertexId| !cuts.contains(x);
        let is_cycle =
            b.edges.len() == b.vertices.len() && b.vertices.iter().all(|&x| nbrs(x).len() == 2);
        if is_cycle {
            let start = *b.vertices.first()?;
            let mut order = vec![start];
            let mut prev = start;
            let mut cur = *nbrs(start).first()?;
            while cur != start {
                order.push(cur);
                let next = *nbrs(cur).iter().find(|&&y| y != prev)?;
                prev = cur;
                cur = next;
            }
            let len = order.len();
            return (0..len)
                .map(|i| (order[i], order[(i + 1) % len], order[(i + 2) % len]))
                .find(|(a, m, c)| ok(a) && ok(m) && ok(c));
        }
        for &a in b.vertices.iter().filter(|x| ok(x)) {
            for m in nbrs(a).into_iter().filter(ok) {
                if let Some(c) = nbrs(m).into_iter().find(|c| *c != a && ok(c)) {
                    return Some((a, m, c));
                }
            }
        }
        None
    }

    fn tarjan(&self) -> Tarjan {
        let n = self.labels.len();
        let mut disc = vec![NONE; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut isolated = Vec::new();
        let mut edge_stack: Vec<usize> = Vec::new();
        // (vertex, parent edge position, next adjacency slot)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != NONE {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            if self.adj[root].is_empty() {
                isolated.push(root);
                continue;
            }
            let mut root_children = 0;
            stack.push((root, NONE, 0));
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, pe, next) = stack[top];
                if next < self.adj[v].len() {
                    stack[top].2 += 1;
                    let (w, e) = self.adj[v][next];
                    if e == pe {
                        continue;
                    }
                    if disc[w] == NONE {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            if p == root {
                                root_children += 1;
                            } else {
                                is_cut[p] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == pe {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        Tarjan {
            blocks,
            is_cut,
            isolated,
        }
    }
}

struct Tarjan {
    // edge positions per block
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
    isolated: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[VertexId]) -> BTreeSet<VertexId> {
        xs.iter().copied().collect()
    }

    fn path(n: u32) -> MultiGraph {
        MultiGraph::from_edges(1..=n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: u32) -> MultiGraph {
        MultiGraph::from_edges(1..=n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn multiplicity_counts_parallel_edges() {
        let mut g = MultiGraph::new();
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(a, b, 1).unwrap();
        assert_eq!(g.multiplicity(a, b).unwrap(), 1);
        g.add_edge(b, a, 1).unwrap();
        assert_eq!(g.multiplicity(a, b).unwrap(), 2);
        assert_eq!(g.degree(a).unwrap(), 2);
        assert_eq!(g.neighbors(a).unwrap().len(), 1);
    }

    #[test]
    fn add_edge_errors() {
        let mut g = MultiGraph::new();
        let a = g.add_vertex();
        assert_eq!(g.add_edge(a, a, 1), Err(Error::SelfLoop(a)));
        assert_eq!(g.add_edge(a, 7, 1), Err(Error::UnknownVertex(7)));
        g.add_vertex();
        assert_eq!(g.add_edge(0, 1, 2), Err(Error::InvalidWeight(2)));
        assert_eq!(g.insert_vertex(1), Err(Error::DuplicateVertex(1)));
    }

    #[test]
    fn out_of_order_insert_keeps_adjacency() {
        let mut g = MultiGraph::new();
        g.insert_vertex(5).unwrap();
        g.insert_vertex(9).unwrap();
        g.add_edge(5, 9, 1).unwrap();
        g.insert_vertex(1).unwrap();
        g.add_edge(1, 9, 0).unwrap();
        assert_eq!(g.vertices(), &[1, 5, 9]);
        assert_eq!(g.neighbors(9).unwrap(), set(&[1, 5]));
        assert_eq!(g.neighbors(5).unwrap(), set(&[9]));
    }

    #[test]
    fn basic_queries() {
        let p = path(3);
        assert_eq!(p.degree(2).unwrap(), 2);
        assert_eq!(p.neighbors(2).unwrap(), set(&[1, 3]));
        let mut g = MultiGraph::new();
        let v = g.add_vertex();
        assert_eq!(g.degree(v).unwrap(), 0);
        assert!(g.neighbors(v).unwrap().is_empty());
        assert_eq!(g.degree(42), Err(Error::UnknownVertex(42)));
    }

    #[test]
    fn delete_vertices_examples() {
        let tri = cycle(3);
        let h = tri.delete_vertices(&set(&[1])).unwrap();
        assert_eq!(h.vertices(), &[2, 3]);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(tri.delete_vertices(&BTreeSet::new()).unwrap(), tri);
        let d = MultiGraph::from_edges([1, 2], [(1, 2), (1, 2), (1, 2)]).unwrap();
        let h = d.delete_vertices(&set(&[2])).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(
            tri.delete_vertices(&set(&[4])),
            Err(Error::UnknownVertex(4))
        );
    }

    #[test]
    fn components() {
        let mut g = cycle(3);
        g.insert_vertex(4).unwrap();
        assert_eq!(g.cc(), 2);
        assert_eq!(MultiGraph::new().cc(), 0);
        assert_eq!(path(5).cc(), 1);
        assert_eq!(g.connected_components(), vec![set(&[1, 2, 3]), set(&[4])]);
    }

    #[test]
    fn bridges_and_cuts() {
        let p = path(3);
        assert_eq!(p.bridges().len(), 2);
        assert_eq!(p.cut_vertices(), set(&[2]));
        let c = cycle(4);
        assert!(c.bridges().is_empty());
        assert!(c.cut_vertices().is_empty());
        let pair = MultiGraph::from_edges([1, 2], [(1, 2), (1, 2)]).unwrap();
        assert!(pair.bridges().is_empty());
    }

    #[test]
    fn leaf_blocks_of_pendant_cycle() {
        // C5 on 1..5 with pendant edge 1-6
        let mut g = cycle(5);
        g.insert_vertex(6).unwrap();
        g.add_edge(1, 6, 1).unwrap();
        let leaves = g.leaf_blocks();
        assert_eq!(leaves.len(), 2);
        assert_eq!(leaves[0].vertices, set(&[1, 2, 3, 4, 5]));
        assert_eq!(leaves[1].vertices, set(&[1, 6]));
        let t = g
            .consecutive_noncut_triple(&set(&[1, 2, 3, 4, 5]))
            .unwrap()
            .unwrap();
        assert_eq!(t, (2, 3, 4));
    }

    #[test]
    fn triple_in_triangle_and_c4() {
        let tri = cycle(3);
        assert_eq!(
            tri.consecutive_noncut_triple(&set(&[1, 2, 3])).unwrap(),
            Some((1, 2, 3))
        );
        // C4 1-2-3-4 with a pendant at 2 making 2 the cut vertex
        let mut g = cycle(4);
        g.insert_vertex(5).unwrap();
        g.add_edge(2, 5, 1).unwrap();
        assert_eq!(
            g.consecutive_noncut_triple(&set(&[1, 2, 3, 4])).unwrap(),
            Some((3, 4, 1))
        );
        assert_eq!(
            g.consecutive_noncut_triple(&set(&[1, 2, 3])),
            Err(Error::NotABlock)
        );
        assert!(g.consecutive_noncut_triple(&set(&[2, 5])).is_err());
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let g = MultiGraph::from_edges(1..=5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        let bd = g.block_decomposition();
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices, set(&[3]));
        assert!(bd.bridges.is_empty());
        assert_eq!(bd.leaf_blocks().count(), 2);
    }

    fn arb_multigraph(max_n: u32, max_m: usize) -> impl Strategy<Value = MultiGraph> {
        (1..=max_n).prop_flat_map(move |n| {
            proptest::collection::vec((1..=n, 1..=n, 0u8..=1), 0..=max_m).prop_map(move |es| {
                let mut g = MultiGraph::from_edges(1..=n, []).unwrap();
                for (u, v, w) in es {
                    if u != v {
                        g.add_edge(u, v, w).unwrap();
                    }
                }
                g
            })
        })
    }

    fn naive_bridges(g: &MultiGraph) -> BTreeSet<EdgeId> {
        let base = g.cc();
        g.edges()
            .iter()
            .filter(|e| {
                let h = MultiGraph::from_weighted_edges(
                    g.vertices().iter().copied(),
                    g.edges()
                        .iter()
                        .filter(|f| f.id != e.id)
                        .map(|f| (f.u, f.v, f.weight)),
                )
                .unwrap();
                h.cc() > base
            })
            .map(|e| e.id)
            .collect()
    }

    fn naive_cuts(g: &MultiGraph) -> BTreeSet<VertexId> {
        let base = g.cc();
        g.vertices()
            .iter()
            .copied()
            .filter(|&v| g.delete_vertices(&BTreeSet::from([v])).unwrap().cc() > base)
            .collect()
    }

    proptest! {
        #[test]
        fn cc_plus_bridges_at_most_n(g in arb_multigraph(12, 24)) {
            prop_assert!(g.cc() + g.bridge_count() <= g.vertex_count());
        }

        #[test]
        fn bridges_and_cuts_match_definition(g in arb_multigraph(10, 16)) {
            let bd = g.block_decomposition();
            prop_assert_eq!(&bd.bridges, &naive_bridges(&g));
            prop_assert_eq!(&bd.cut_vertices, &naive_cuts(&g));
            prop_assert_eq!(bd.bridges.clone(), g.bridges());
        }

        #[test]
        fn blocks_partition_edges(g in arb_multigraph(10, 20)) {
            let bd = g.block_decomposition();
            let total: usize = bd.blocks.iter().map(|b| b.edges.len()).sum();
            prop_assert_eq!(total, g.edge_count());
            let all: BTreeSet<EdgeId> = bd.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
            prop_assert_eq!(all.len(), g.edge_count());
            for &v in g.vertices() {
                let owners = bd.blocks.iter().filter(|b| b.vertices.contains(&v)).count();
                if bd.cut_vertices.contains(&v) {
                    prop_assert!(owners >= 2);
                } else {
                    prop_assert_eq!(owners, 1);
                }
            }
        }

        #[test]
        fn deletion_composes(g in arb_multigraph(10, 16), xs in proptest::collection::btree_set(1u32..=10, 0..5), ys in proptest::collection::btree_set(1u32..=10, 0..5)) {
            let x: BTreeSet<_> = xs.into_iter().filter(|v| g.contains(*v)).collect();
            let y: BTreeSet<_> = ys.into_iter().filter(|v| g.contains(*v) && !x.contains(v)).collect();
            let once = g.delete_vertices(&x.union(&y).copied().collect()).unwrap();
            let twice = g.delete_vertices(&x).unwrap().delete_vertices(&y).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
