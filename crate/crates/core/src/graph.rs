//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] owns an adjacency bitset per vertex plus sorted neighbor lists.
//! The all-pairs distance matrix is computed on the first metric query and
//! cached for the lifetime of the graph.

use std::fmt;
use std::ops::Add;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Hop distance between two vertices.
///
/// `Infinite` marks pairs in different components. Sums involving `Infinite`
/// are `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => serializer.serialize_u32(*d),
            Distance::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Row-major `n x n` matrix of hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    // `None` for disconnected pairs.
    cells: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub(crate) fn bfs_all(adj: &[Vec<Vertex>]) -> DistanceMatrix {
        let n = adj.len();
        let mut cells = vec![None; n * n];
        let mut queue = Vec::with_capacity(n);
        for source in 0..n {
            let row = &mut cells[source * n..(source + 1) * n];
            row[source] = Some(0);
            queue.clear();
            queue.push(source);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = row[u].expect("queued vertices have a distance");
                for &w in &adj[u] {
                    if row[w].is_none() {
                        row[w] = Some(du + 1);
                        queue.push(w);
                    }
                }
            }
        }
        DistanceMatrix { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Distance {
        match self.cells[u * self.n + v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        }
    }

    #[inline]
    pub fn finite(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.cells[u * self.n + v]
    }

    /// Largest distance from `v`, `Infinite` if some vertex is unreachable.
    pub fn eccentricity(&self, v: Vertex) -> Distance {
        (0..self.n).map(|w| self.get(v, w)).max().unwrap_or(Distance::Finite(0))
    }

    /// `x` lies on some `u,w`-geodesic.
    #[inline]
    pub fn between(&self, u: Vertex, x: Vertex, w: Vertex) -> bool {
        match (self.finite(u, x), self.finite(x, w), self.finite(u, w)) {
            (Some(a), Some(b), Some(c)) => a + b == c,
            _ => false,
        }
    }
}

/// A set of vertex ids, stored sorted and without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet(Vec::new())
    }

    /// Builds a set from ids that must be distinct.
    pub fn from_distinct(ids: impl IntoIterator<Item = Vertex>) -> Result<VertexSet> {
        let mut ids: Vec<Vertex> = ids.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(VertexSet(ids))
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Checks that every member is a vertex of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::InvalidVertex { vertex: v, n: g.n() }),
            _ => Ok(()),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    /// Maps local ids through `mapping` (local id -> host id).
    pub fn lift(&self, mapping: &[Vertex]) -> VertexSet {
        self.iter().map(|v| mapping[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        let mut ids: Vec<Vertex> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Simple undirected graph, immutable once built.
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    neighbors: Vec<Vec<Vertex>>,
    edge_count: usize,
    dist: OnceLock<DistanceMatrix>,
}

impl Graph {
    /// Graph on `n` vertices with the given edges. Repeated edges are collapsed.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let mut builder = GraphBuilder::new(n);
        for (u, v) in edges {
            builder.try_add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    pub fn edgeless(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn adjacency(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.n < 2 || self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// All-pairs hop distances, computed by BFS on first use.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::bfs_all(&self.neighbors))
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> Distance {
        self.distances().get(u, v)
    }
}

impl Clone for Graph {
    fn clone(&self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            neighbors: self.neighbors.clone(),
            edge_count: self.edge_count,
            dist: self.dist.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable staging area for graph construction.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<FixedBitSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> GraphBuilder {
        GraphBuilder { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::InvalidVertex { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Panics on out-of-range ids; self-loops are a logic error.
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        let neighbors: Vec<Vec<Vertex>> = self.adj.iter().map(|row| row.ones().collect()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { n: self.adj.len(), adj: self.adj, neighbors, edge_count, dist: OnceLock::new() }
    }
}
