//! Immutable simple undirected graphs with bit-row adjacency.
//!
//! A [`Graph`] is frozen at construction: every query is read-only, so
//! values can be shared freely across threads. Mutations (toggling an edge,
//! appending a vertex) return a new graph.

use serde::Serialize;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Distance from a breadth-first search. Unreachable vertices get the
/// explicit [`Distance::Infinite`] variant, never a sentinel number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

/// Length of a shortest odd cycle, or [`OddGirth::Unbounded`] when the graph
/// is bipartite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddGirth {
    Finite(usize),
    Unbounded,
}

impl OddGirth {
    /// True when every odd cycle has length at least `k` (vacuously true for
    /// bipartite graphs).
    pub fn at_least(self, k: usize) -> bool {
        match self {
            OddGirth::Finite(g) => g >= k,
            OddGirth::Unbounded => true,
        }
    }
}

impl std::fmt::Display for OddGirth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OddGirth::Finite(g) => write!(f, "{g}"),
            OddGirth::Unbounded => write!(f, "inf"),
        }
    }
}

impl Serialize for OddGirth {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Immutable simple undirected graph. Vertices are `0..n`; `rows[v]` is the
/// neighbour set of `v`. Adjacency is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::empty(); n],
        })
    }

    /// Graph with exactly the given edges. Duplicate pairs collapse; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { endpoint: u, order: n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { endpoint: v, order: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// The cycle `0 - 1 - ... - (m-1) - 0`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::CycleLengthTooSmall(m));
        }
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Graph::from_edges(m, &edges)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite graph with sides `a` and `b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Copy with the edge `u v` flipped.
    pub fn with_edge_toggled(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n {
            return Err(Error::EndpointOutOfRange { endpoint: u, order: self.n });
        }
        if v >= self.n {
            return Err(Error::EndpointOutOfRange { endpoint: v, order: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        if g.rows[u].contains(v) {
            g.rows[u].remove(v);
            g.rows[v].remove(u);
        } else {
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Copy extended by one new vertex (index `n`) adjacent to `neighbors`.
    pub fn with_vertex_appended(&self, neighbors: &VertexSet) -> Result<Self> {
        let v = self.n;
        if v + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(v + 1));
        }
        let mut g = self.clone();
        g.n = v + 1;
        let nb = *neighbors & VertexSet::full(v);
        g.rows.push(nb);
        for u in nb.iter() {
            g.rows[u].insert(v);
        }
        Ok(g)
    }

    /// Copy with vertices renamed by `perm`, where `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            rows: vec![VertexSet::empty(); self.n],
        };
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                g.rows[perm[u]].insert(perm[v]);
            }
        }
        g
    }

    /// Breadth-first distances from `v`.
    pub fn distances_from(&self, v: usize) -> Result<Vec<Distance>> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.bfs_within(v, &self.vertex_set()))
    }

    /// BFS from `v` restricted to `allowed` (which must contain `v`).
    pub(crate) fn bfs_within(&self, v: usize, allowed: &VertexSet) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        dist[v] = Distance::Finite(0);
        let mut frontier = VertexSet::singleton(v);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::empty();
            for u in frontier.iter() {
                next |= self.rows[u];
            }
            next &= *allowed;
            next = next.minus(seen);
            for w in next.iter() {
                dist[w] = Distance::Finite(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Length of a shortest odd closed walk through `v`, which equals the
    /// length of a shortest odd cycle through `v` whenever such a walk is
    /// minimal over the whole graph. Runs a BFS over the bipartite double
    /// cover: state `(w, parity)`.
    pub(crate) fn shortest_odd_walk_through(&self, v: usize) -> Option<usize> {
        // dist[w][p]: shortest walk v -> w of parity p.
        let mut dist = vec![[usize::MAX; 2]; self.n];
        dist[v][0] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back((v, 0usize));
        while let Some((u, p)) = queue.pop_front() {
            let du = dist[u][p];
            for w in self.rows[u].iter() {
                let q = 1 - p;
                if dist[w][q] == usize::MAX {
                    dist[w][q] = du + 1;
                    queue.push_back((w, q));
                }
            }
        }
        match dist[v][1] {
            usize::MAX => None,
            d => Some(d),
        }
    }

    /// Exact odd girth: the minimum over all vertices of the shortest odd
    /// closed walk through that vertex. A shortest odd closed walk is always
    /// a cycle, so the minimum is the odd girth.
    pub fn odd_girth(&self) -> OddGirth {
        let mut best: Option<usize> = None;
        for v in 0..self.n {
            if let Some(d) = self.shortest_odd_walk_through(v) {
                best = Some(best.map_or(d, |b| b.min(d)));
                if best == Some(3) {
                    break;
                }
            }
        }
        match best {
            Some(g) => OddGirth::Finite(g),
            None => OddGirth::Unbounded,
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A blow-up instruction: replace vertex `i` of `pattern` by an independent
/// blob of `blobs[i]` vertices and every pattern edge by a complete
/// bipartite connection.
#[derive(Clone, Debug)]
pub struct BlowupSpec {
    pub pattern: Graph,
    pub blobs: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(pattern: Graph, blobs: Vec<usize>) -> Result<Self> {
        if blobs.len() != pattern.n() {
            return Err(Error::BlobCountMismatch {
                blobs: blobs.len(),
                pattern: pattern.n(),
            });
        }
        Ok(BlowupSpec { pattern, blobs })
    }

    /// As-balanced-as-possible blow-up of `pattern` on `total` vertices.
    pub fn balanced(pattern: Graph, total: usize) -> Result<Self> {
        let blobs = balanced_blobs(total, pattern.n())?;
        BlowupSpec::new(pattern, blobs)
    }

    /// Build the blow-up. Vertex order is blob-major: all of blob 0 first,
    /// then blob 1, and so on.
    pub fn build(&self) -> Result<Graph> {
        let total: usize = self.blobs.iter().sum();
        let mut start = Vec::with_capacity(self.blobs.len() + 1);
        let mut acc = 0;
        for &b in &self.blobs {
            start.push(acc);
            acc += b;
        }
        start.push(acc);
        let mut edges = Vec::new();
        for (u, v) in self.pattern.edges() {
            for x in start[u]..start[u + 1] {
                for y in start[v]..start[v + 1] {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(total, &edges)
    }
}

/// Split `n` into `m` parts, each `n/m` rounded down or up, larger parts
/// first.
pub fn balanced_blobs(n: usize, m: usize) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::ZeroParts);
    }
    let q = n / m;
    let r = n % m;
    Ok((0..m).map(|i| if i < r { q + 1 } else { q }).collect())
}
