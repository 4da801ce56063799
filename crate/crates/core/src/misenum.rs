//! Maximal independent set enumeration with polynomial delay and space.
//!
//! The enumeration walks a tree whose nodes at depth `j` are the maximal
//! independent sets of `G_j`, the subgraph induced by vertices `0..j`.
//! Every maximal independent set `T` of `G_{j+1}` has exactly one parent in
//! `G_j`:
//!
//! * `T` itself when `j ∉ T`;
//! * `T ∖ {j}` when that set is already maximal in `G_j`;
//! * otherwise the greedy completion of `T ∖ {j}` inside `G_j`.
//!
//! A node `S` therefore has the child `S ∪ {j}` when `j` has no neighbour in
//! `S`, and otherwise the children `S` and, when `S` is its parent,
//! `(S ∖ N(j)) ∪ {j}`. Every node has at least one child, so leaves sit at
//! depth `|V|` and are exactly the maximal independent sets of the whole
//! graph, each reached once. The walk is a depth-first traversal with an
//! explicit stack of at most `|V| + 1` frames, each holding one vertex set;
//! between two outputs it climbs and descends at most `|V|` levels doing
//! `O(|V|²)` bit work per level. No emitted solution is retained.

use crate::error::{Error, Result};
use crate::framework::{ArgumentationFramework, ConflictGraph};
use crate::set::ArgumentSet;

pub type VertexSet = ArgumentSet;

/// Simple undirected graph on `0..n` with bit-row adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adjacency: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Panics on a self-loop.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed in an undirected graph");
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adjacency[v].is_disjoint(set))
    }

    pub fn is_maximal_independent(&self, set: &VertexSet) -> bool {
        self.is_independent(set)
            && (0..self.vertex_count())
                .all(|v| set.contains(v) || self.adjacency[v].intersects(set))
    }
}

/// Extends an independent `set` to a maximal one by scanning vertices in
/// index order and adding every vertex with no neighbour in the current set.
pub fn greedy_complete(g: &UndirectedGraph, set: &VertexSet) -> Result<VertexSet> {
    if !g.is_independent(set) {
        return Err(Error::Precondition("set is not independent".into()));
    }
    Ok(complete_within(g, set, g.vertex_count()))
}

/// Greedy completion inside `G_prefix`.
fn complete_within(g: &UndirectedGraph, set: &VertexSet, prefix: usize) -> VertexSet {
    let mut out = set.clone();
    for w in 0..prefix {
        if !out.contains(w) && g.adjacency[w].is_disjoint(&out) {
            out.insert(w);
        }
    }
    out
}

/// Instrumentation of one enumeration run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct MisStats {
    pub emitted: u64,
    /// Tree nodes visited so far.
    pub nodes: u64,
    pub peak_stack_frames: usize,
    /// Peak number of 64-bit words held by live stack frames.
    pub peak_tracked_words: usize,
}

struct Frame {
    depth: usize,
    set: VertexSet,
    next_child: u8,
}

/// Single-consumer stream of maximal independent sets.
pub struct MisIter {
    graph: UndirectedGraph,
    stack: Vec<Frame>,
    stats: MisStats,
}

impl MisIter {
    pub fn new(graph: UndirectedGraph) -> Self {
        let root = Frame {
            depth: 0,
            set: graph.empty_set(),
            next_child: 0,
        };
        let mut it = Self {
            graph,
            stack: vec![root],
            stats: MisStats::default(),
        };
        it.track();
        it
    }

    pub fn stats(&self) -> MisStats {
        self.stats
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    fn track(&mut self) {
        self.stats.nodes += 1;
        let frames = self.stack.len();
        if frames > self.stats.peak_stack_frames {
            self.stats.peak_stack_frames = frames;
        }
        let words: usize = self.stack.iter().map(|f| f.set.word_count()).sum();
        if words > self.stats.peak_tracked_words {
            self.stats.peak_tracked_words = words;
        }
    }

    /// The `index`-th child of the node `(depth, set)`, if any.
    fn child(&self, depth: usize, set: &VertexSet, index: u8) -> Option<VertexSet> {
        let v = depth;
        let nv = &self.graph.adjacency[v];
        if nv.is_disjoint(set) {
            return (index == 0).then(|| {
                let mut c = set.clone();
                c.insert(v);
                c
            });
        }
        match index {
            0 => Some(set.clone()),
            1 => {
                let kept = set.difference(nv);
                // Parent test: the greedy completion of the kept part in G_v
                // must give back `set`.
                if complete_within(&self.graph, &kept, v) != *set {
                    return None;
                }
                let mut candidate = kept;
                candidate.insert(v);
                let maximal = (0..=v).all(|w| {
                    candidate.contains(w) || self.graph.adjacency[w].intersects(&candidate)
                });
                maximal.then_some(candidate)
            }
            _ => None,
        }
    }
}

impl Iterator for MisIter {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.graph.vertex_count();
        loop {
            let top = self.stack.last_mut()?;
            if top.depth == n {
                let leaf = self.stack.pop().expect("non-empty stack");
                self.stats.emitted += 1;
                return Some(leaf.set);
            }
            let (depth, index) = (top.depth, top.next_child);
            top.next_child += 1;
            let parent = &self.stack.last().expect("non-empty stack").set;
            match self.child(depth, parent, index) {
                Some(set) => {
                    self.stack.push(Frame {
                        depth: depth + 1,
                        set,
                        next_child: 0,
                    });
                    self.track();
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// All maximal independent sets of `g`, each exactly once.
pub fn enum_mis(g: &UndirectedGraph) -> MisIter {
    MisIter::new(g.clone())
}

/// Naive sets of a framework, mapped back from its conflict graph.
pub struct NaiveIter {
    inner: MisIter,
    arguments: Vec<usize>,
    bound: usize,
}

impl NaiveIter {
    pub fn stats(&self) -> MisStats {
        self.inner.stats()
    }
}

impl Iterator for NaiveIter {
    type Item = ArgumentSet;

    fn next(&mut self) -> Option<ArgumentSet> {
        let vertices = self.inner.next()?;
        Some(ArgumentSet::from_indices(
            self.bound,
            vertices.iter().map(|v| self.arguments[v]),
        ))
    }
}

pub fn enum_naive(f: &ArgumentationFramework) -> NaiveIter {
    let ConflictGraph {
        graph, arguments, ..
    } = f.conflict_graph();
    NaiveIter {
        inner: MisIter::new(graph),
        arguments,
        bound: f.len(),
    }
}
