//! Small labelled simple graphs with one adjacency word per vertex.
//!
//! [`Graph`] is the carrier for both forbidden patterns `H` and host graphs.
//! Vertices are `0..n` and every vertex set is a `u64` bitmask, so `n` is
//! bounded by [`MAX_VERTICES`].

pub mod catalog;
pub mod colouring;
pub mod graph6;
pub mod subgraph;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use colouring::{chromatic_number, find_colouring, is_colourable};
pub use graph6::{encode_graph6, parse_graph6};
pub use subgraph::{contains_subgraph, for_each_embedding, Matcher};

/// Word capacity of the adjacency rows.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, bit `v` set iff `v` is a member.
pub type VertexSet = u64;

/// Iterates over the members of a vertex set in ascending order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

#[inline]
pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Ordered list of edges `(u, v)` with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeList(pub Vec<(usize, usize)>);

impl EdgeList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }
}

/// Simple undirected graph on the vertex set `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity {
                n,
                capacity: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
            edge_count: 0,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("complete graph over capacity");
        for u in 0..n {
            g.adj[u] = full_set(n) & !(1u64 << u);
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n).expect("path over capacity");
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1).expect("star over capacity");
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// Complete multipartite graph; part `i` occupies a contiguous block of
    /// vertices in the order given.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut g = Graph::empty(n).expect("multipartite graph over capacity");
        let mut part = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        Ok(())
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.edge_count += 1;
        true
    }

    /// Removes `uv`; returns false if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return false;
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.edge_count -= 1;
        true
    }

    /// Edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| members(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList(self.edges().collect())
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set & self.vertex_set();
        let verts: Vec<usize> = members(set).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(verts.len()).expect("induced subgraph fits");
        for (i, &v) in verts.iter().enumerate() {
            for w in members(self.adj[v] & set) {
                if pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        g
    }

    /// `G - v`: deletes the vertex and relabels.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_set() & !(1u64 << v))
    }

    /// Same vertex set with the given edges removed.
    pub fn without_edges<'a>(&self, edges: impl IntoIterator<Item = &'a (usize, usize)>) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp: VertexSet = 1 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in members(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same size");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Shortest cycle length, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        girth(self)
    }

    pub fn chromatic_number(&self) -> usize {
        chromatic_number(self)
    }
}

/// Length of a shortest cycle; `None` when `g` is a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                // no shorter cycle can close beyond this depth
                if 2 * dist[x] + 1 >= b {
                    break 'bfs;
                }
            }
            for w in members(g.neighbours(x)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    parent[w] = x;
                    queue.push_back(w);
                } else if parent[x] != w {
                    let len = dist[x] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj[..self.n].hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", encode_graph6(self), self.edge_list().0)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn constructors_count_edges() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(7).edge_count(), 7);
        assert_eq!(Graph::complete_multipartite(&[1, 2, 3]).edge_count(), 11);
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!((0..10).all(|v| Graph::petersen().degree(v) == 3));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::empty(65), Err(Error::Capacity { .. })));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1))));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::complete(3)), Some(3));
        assert_eq!(girth(&tree()), None);
        assert_eq!(girth(&Graph::petersen()), Some(5));
        assert_eq!(girth(&Graph::cycle(9)), Some(9));
        assert_eq!(girth(&Graph::complete_multipartite(&[3, 3])), Some(4));
        assert_eq!(girth(&Graph::empty(0).unwrap()), None);
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::cycle(5);
        let h = g.remove_vertex(0);
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_list().0, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn components_of_forest() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00011, 0b00100, 0b11000]);
    }
}
