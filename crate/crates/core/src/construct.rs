//! Graph constructions. Every function returns a fresh graph.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComposeMode {
    DisjointUnion,
    Join,
    CartesianProduct,
}

pub fn compose(mode: ComposeMode, g: &Graph, h: &Graph) -> Graph {
    match mode {
        ComposeMode::DisjointUnion => disjoint_union(g, h),
        ComposeMode::Join => join(g, h),
        ComposeMode::CartesianProduct => cartesian_product(g, h),
    }
}

/// `h`'s vertices are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    union_builder(g, h).build()
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut b = union_builder(g, h);
    let off = g.n();
    for u in g.vertices() {
        for v in h.vertices() {
            b.add_edge(u, off + v);
        }
    }
    b.build()
}

fn union_builder(g: &Graph, h: &Graph) -> GraphBuilder {
    let off = g.n();
    let mut b = GraphBuilder::new(g.n() + h.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        b.add_edge(off + u, off + v);
    }
    b
}

/// Vertex `(x, y)` is numbered `x * h.n() + y`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut b = GraphBuilder::new(g.n() * m);
    for x in g.vertices() {
        for (y1, y2) in h.edges() {
            b.add_edge(x * m + y1, x * m + y2);
        }
    }
    for (x1, x2) in g.edges() {
        for y in h.vertices() {
            b.add_edge(x1 * m + y, x2 * m + y);
        }
    }
    b.build()
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// `G[S]` together with the map from new ids to ids of `g`. New id `i`
/// corresponds to the `i`-th smallest member of `s`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
    s.validate(g)?;
    let mapping: Vec<Vertex> = s.iter().collect();
    let mut b = GraphBuilder::new(mapping.len());
    for (i, &u) in mapping.iter().enumerate() {
        for (j, &v) in mapping.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                b.add_edge(i, j);
            }
        }
    }
    Ok((b.build(), mapping))
}

/// `g` with the vertices of `s` removed, plus the id map back into `g`.
pub fn delete_vertices(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
    s.validate(g)?;
    let keep: VertexSet = g.vertices().filter(|&v| !s.contains(v)).collect();
    induced_subgraph(g, &keep)
}
