//! Cograph recognition by cotree construction.
//!
//! A single vertex is a leaf; a disconnected graph is the union of its
//! components; a graph with disconnected complement is the join of its
//! co-components. When both a graph on two or more vertices and its
//! complement are connected, the graph contains an induced `P_4` and is
//! not a cograph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};

/// Cotree node. Internal nodes carry `alpha`, `omega` and `size` of the
/// subgraph they describe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum Cotree {
    Leaf { vertex: Vertex },
    Union { children: Vec<Cotree>, alpha: usize, omega: usize, size: usize },
    Join { children: Vec<Cotree>, alpha: usize, omega: usize, size: usize },
}

/// Four vertices `a-b-c-d` inducing a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InducedP4(pub [Vertex; 4]);

impl Cotree {
    fn union(children: Vec<Cotree>) -> Cotree {
        Cotree::Union {
            alpha: children.iter().map(Cotree::alpha).sum(),
            omega: children.iter().map(Cotree::omega).max().unwrap_or(0),
            size: children.iter().map(Cotree::size).sum(),
            children,
        }
    }

    fn join(children: Vec<Cotree>) -> Cotree {
        Cotree::Join {
            alpha: children.iter().map(Cotree::alpha).max().unwrap_or(0),
            omega: children.iter().map(Cotree::omega).sum(),
            size: children.iter().map(Cotree::size).sum(),
            children,
        }
    }

    pub fn alpha(&self) -> usize {
        match self {
            Cotree::Leaf { .. } => 1,
            Cotree::Union { alpha, .. } | Cotree::Join { alpha, .. } => *alpha,
        }
    }

    pub fn omega(&self) -> usize {
        match self {
            Cotree::Leaf { .. } => 1,
            Cotree::Union { omega, .. } | Cotree::Join { omega, .. } => *omega,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Cotree::Leaf { .. } => 1,
            Cotree::Union { size, .. } | Cotree::Join { size, .. } => *size,
        }
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Vertex>) {
        match self {
            Cotree::Leaf { vertex } => out.push(*vertex),
            Cotree::Union { children, .. } | Cotree::Join { children, .. } => {
                children.iter().for_each(|c| c.collect_leaves(out))
            }
        }
    }

    /// A maximum independent set: everything under a union, the best child under a join.
    pub fn independent_set(&self) -> VertexSet {
        match self {
            Cotree::Leaf { vertex } => [*vertex].into_iter().collect(),
            Cotree::Union { children, .. } => children.iter().flat_map(|c| c.independent_set().into_vec()).collect(),
            Cotree::Join { children, .. } => best_child(children, Cotree::alpha).independent_set(),
        }
    }

    /// A maximum clique: the best child under a union, everything under a join.
    pub fn clique(&self) -> VertexSet {
        match self {
            Cotree::Leaf { vertex } => [*vertex].into_iter().collect(),
            Cotree::Union { children, .. } => best_child(children, Cotree::omega).clique(),
            Cotree::Join { children, .. } => children.iter().flat_map(|c| c.clique().into_vec()).collect(),
        }
    }

    /// Largest vertex set inducing a disjoint union of cliques, and the largest
    /// such set with at least two cliques (`None` when the graph is complete).
    ///
    /// Under a union the children's sets combine. Under a join, vertices taken
    /// from two children are all adjacent across, so a set meeting two
    /// children is a single clique; a set with two or more cliques stays
    /// inside one child.
    pub fn cluster_sets(&self) -> (VertexSet, Option<VertexSet>) {
        match self {
            Cotree::Leaf { vertex } => ([*vertex].into_iter().collect(), None),
            Cotree::Union { children, .. } => {
                let all: VertexSet = children.iter().flat_map(|c| c.cluster_sets().0.into_vec()).collect();
                (all.clone(), Some(all))
            }
            Cotree::Join { children, .. } => {
                let sets: Vec<_> = children.iter().map(Cotree::cluster_sets).collect();
                let clique = self.clique();
                let single = sets.iter().map(|s| &s.0).fold(clique, |best, s| if s.len() > best.len() { s.clone() } else { best });
                let multi = sets.into_iter().filter_map(|s| s.1).fold(None::<VertexSet>, |best, s| match best {
                    Some(b) if b.len() >= s.len() => Some(b),
                    _ => Some(s),
                });
                (single, multi)
            }
        }
    }
}

// First child attaining the maximum of `key`.
fn best_child(children: &[Cotree], key: fn(&Cotree) -> usize) -> &Cotree {
    let top = children.iter().map(key).max().expect("internal nodes have children");
    children.iter().find(|c| key(c) == top).expect("maximum is attained")
}

/// Builds the cotree of `g`, or returns an induced `P_4`.
///
/// Panics on the empty graph.
pub fn build_cotree(g: &Graph) -> std::result::Result<Cotree, InducedP4> {
    assert!(g.n() > 0, "the empty graph has no cotree");
    build(g, g.vertices().collect())
}

fn build(g: &Graph, verts: Vec<Vertex>) -> std::result::Result<Cotree, InducedP4> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf { vertex: verts[0] });
    }
    let parts = split(&verts, |u, v| g.has_edge(u, v));
    if parts.len() > 1 {
        return parts.into_iter().map(|p| build(g, p)).collect::<std::result::Result<_, _>>().map(Cotree::union);
    }
    let coparts = split(&verts, |u, v| !g.has_edge(u, v));
    if coparts.len() > 1 {
        return coparts.into_iter().map(|p| build(g, p)).collect::<std::result::Result<_, _>>().map(Cotree::join);
    }
    Err(find_induced_p4(g, &verts).expect("a graph with connected complement on >= 2 vertices has an induced P4"))
}

// Components of the graph on `verts` whose adjacency is `linked`, each sorted,
// listed by smallest member.
fn split(verts: &[Vertex], linked: impl Fn(Vertex, Vertex) -> bool) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; verts.len()];
    let mut parts = Vec::new();
    for start in 0..verts.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut part = Vec::new();
        while let Some(i) = stack.pop() {
            part.push(verts[i]);
            for j in 0..verts.len() {
                if !seen[j] && linked(verts[i], verts[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// Scans edges `b-c` and extends them to `a-b-c-d` with `a` seeing only `b` and
/// `d` seeing only `c` among the four.
pub fn find_induced_p4(g: &Graph, verts: &[Vertex]) -> Option<InducedP4> {
    let inside: VertexSet = verts.iter().copied().collect();
    for &b in inside.as_slice() {
        for &c in g.neighbors(b).iter().filter(|&&c| inside.contains(c)) {
            for &a in g.neighbors(b).iter().filter(|&&a| a != c && inside.contains(a) && !g.has_edge(a, c)) {
                if let Some(&d) = g
                    .neighbors(c)
                    .iter()
                    .find(|&&d| d != b && d != a && inside.contains(d) && !g.has_edge(d, b) && !g.has_edge(d, a))
                {
                    return Some(InducedP4([a, b, c, d]));
                }
            }
        }
    }
    None
}

/// Recomputes `alpha` and `omega` bottom-up, validating the tree shape and
/// the stored annotations on the way.
pub fn cotree_invariants(tree: &Cotree) -> Result<(usize, usize)> {
    fn walk(t: &Cotree, parent_is_union: Option<bool>) -> Result<(usize, usize, usize)> {
        let (children, is_union) = match t {
            Cotree::Leaf { .. } => return Ok((1, 1, 1)),
            Cotree::Union { children, .. } => (children, true),
            Cotree::Join { children, .. } => (children, false),
        };
        if children.len() < 2 {
            return Err(Error::Contract("cotree node with fewer than two children".into()));
        }
        if parent_is_union == Some(is_union) {
            return Err(Error::Contract("cotree nodes of the same kind are nested".into()));
        }
        let stats = children.iter().map(|c| walk(c, Some(is_union))).collect::<Result<Vec<_>>>()?;
        let size: usize = stats.iter().map(|s| s.2).sum();
        let (alpha, omega) = if is_union {
            (stats.iter().map(|s| s.0).sum(), stats.iter().map(|s| s.1).max().unwrap_or(0))
        } else {
            (stats.iter().map(|s| s.0).max().unwrap_or(0), stats.iter().map(|s| s.1).sum())
        };
        if (t.alpha(), t.omega(), t.size()) != (alpha, omega, size) {
            return Err(Error::Contract("cotree annotations disagree with their children".into()));
        }
        Ok((alpha, omega, size))
    }
    let (alpha, omega, _) = walk(tree, None)?;
    Ok((alpha, omega))
}

/// Rebuilds the graph a cotree describes. Leaves must be exactly `0..n`.
pub fn graph_of(tree: &Cotree) -> Result<Graph> {
    let mut leaves = tree.leaves();
    let n = leaves.len();
    leaves.sort_unstable();
    if leaves.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::Contract("cotree leaves are not the ids 0..n".into()));
    }
    let mut b = GraphBuilder::new(n);
    fn add_joins(t: &Cotree, b: &mut GraphBuilder) {
        if let Cotree::Union { children, .. } | Cotree::Join { children, .. } = t {
            if let Cotree::Join { .. } = t {
                let sets: Vec<Vec<Vertex>> = children.iter().map(Cotree::leaves).collect();
                for (i, x) in sets.iter().enumerate() {
                    for y in &sets[i + 1..] {
                        for &u in x {
                            for &v in y {
                                b.add_edge(u, v);
                            }
                        }
                    }
                }
            }
            children.iter().for_each(|c| add_joins(c, b));
        }
    }
    add_joins(tree, &mut b);
    Ok(b.build())
}

/// Random cograph on `n` vertices from a random cotree. The root is a join
/// when `connected` is set (and `n >= 2`), so the result is connected.
///
/// Vertex sets are split recursively into 2-3 random blocks; node kinds
/// alternate below the root, whose kind is drawn at random unless forced.
pub fn random_cograph(n: usize, connected: bool, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    let root_join = connected || rng.gen_bool(0.5);
    grow(&mut rng, &mut b, (0..n).collect(), root_join);
    b.build()
}

fn grow(rng: &mut ChaCha8Rng, b: &mut GraphBuilder, verts: Vec<Vertex>, join: bool) {
    if verts.len() < 2 {
        return;
    }
    let k = rng.gen_range(2..=3.min(verts.len()));
    let mut blocks: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    // one vertex per block first, so no block is empty
    for (i, &v) in verts.iter().enumerate() {
        let slot = if i < k { i } else { rng.gen_range(0..k) };
        blocks[slot].push(v);
    }
    if join {
        for (i, x) in blocks.iter().enumerate() {
            for y in &blocks[i + 1..] {
                for &u in x {
                    for &v in y {
                        b.add_edge(u, v);
                    }
                }
            }
        }
    }
    for block in blocks {
        grow(rng, b, block, !join);
    }
}
