//! Simple undirected graphs, their squares, and plane embeddings.

mod cycles;
pub mod io;
mod plane;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use cycles::{girth, has_cycle_of_length, Girth};
pub use plane::{check_class, ClassReport, Face, PlaneGraph};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and symmetric; there are no loops and no
/// parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::BadVertex {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn empty(vertex_count: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn path(n: usize) -> Graph {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Connected and nonempty.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_count() == 1
    }

    /// The same vertex set with every edge at `v` removed (`v` stays as an
    /// isolated vertex so ids are preserved).
    pub fn isolate(&self, v: usize) -> Graph {
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(u, list)| {
                if u == v {
                    Vec::new()
                } else {
                    list.iter().copied().filter(|&w| w != v).collect()
                }
            })
            .collect();
        Graph { adjacency }
    }

    /// Subgraph induced by `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = keep.iter().flat_map(|&u| {
            let index = &index;
            self.neighbors(u)
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && w > u)
                .map(move |&w| (index[u], index[w]))
        });
        Graph::from_edges(keep.len(), edges).expect("induced subgraph is simple")
    }

    /// Checks that `order` is a permutation of the vertex set and returns
    /// its inverse (vertex -> position).
    pub fn positions(&self, order: &[usize]) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if order.len() != n {
            return Err(Error::BadOrder(format!(
                "order has {} entries, graph has {} vertices",
                order.len(),
                n
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::BadOrder(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::BadOrder(format!("vertex {v} repeated")));
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

/// Provenance of an edge of a square graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// The pair was already adjacent in the base graph.
    Adjacent,
    /// The pair is at distance exactly two in the base graph.
    DistanceTwo,
}

/// The square of a graph, with each edge tagged by its base-graph distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareGraph {
    graph: Graph,
    kinds: Vec<Vec<EdgeKind>>,
}

impl SquareGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Tags parallel to `graph().neighbors(v)`.
    pub fn kinds(&self, v: usize) -> &[EdgeKind] {
        &self.kinds[v]
    }

    pub fn kind(&self, u: usize, v: usize) -> Option<EdgeKind> {
        self.graph.neighbors(u).binary_search(&v).ok().map(|i| self.kinds[u][i])
    }

    /// Neighbors of `v` at distance exactly two in the base graph.
    pub fn distance_two(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .zip(&self.kinds[v])
            .filter(|(_, k)| **k == EdgeKind::DistanceTwo)
            .map(|(&w, _)| w)
    }
}

impl std::ops::Deref for SquareGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Builds `G²` by a two-level neighborhood scan from every vertex.
pub fn square(g: &Graph) -> SquareGraph {
    let n = g.vertex_count();
    let mut stamp = vec![usize::MAX; n];
    let mut adjacency = Vec::with_capacity(n);
    let mut kinds = Vec::with_capacity(n);
    let mut found: Vec<(usize, EdgeKind)> = Vec::new();
    for v in 0..n {
        found.clear();
        stamp[v] = v;
        for &u in g.neighbors(v) {
            stamp[u] = v;
            found.push((u, EdgeKind::Adjacent));
        }
        for &u in g.neighbors(v) {
            for &w in g.neighbors(u) {
                if stamp[w] != v {
                    stamp[w] = v;
                    found.push((w, EdgeKind::DistanceTwo));
                }
            }
        }
        found.sort_unstable_by_key(|&(w, _)| w);
        adjacency.push(found.iter().map(|&(w, _)| w).collect());
        kinds.push(found.iter().map(|&(_, k)| k).collect());
    }
    SquareGraph {
        graph: Graph { adjacency },
        kinds,
    }
}
