use crate::graph::{Graph, Vertex, VertexSet};

/// Largest `S` such that `G[S]` is a disjoint union of at least two cliques
/// (equivalently, the complement induces a complete multipartite graph with at
/// least two parts). Complete graphs have no such set and get the value 1.
pub fn eta_exact(g: &Graph) -> (usize, VertexSet) {
    if g.is_complete() {
        return match g.n() {
            0 => (0, VertexSet::new()),
            _ => (1, [0].into_iter().collect()),
        };
    }
    let (u, v) = g
        .vertices()
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
        .expect("a non-complete graph has a non-edge");
    let mut search = ClusterSearch { g, parts: Vec::new(), size: 0, best: vec![u, v] };
    search.expand(g.vertices().collect());
    let best: VertexSet = search.best.into_iter().collect();
    (best.len(), best)
}

#[derive(Clone, Copy)]
enum Placement {
    NewPart,
    Into(usize),
}

struct ClusterSearch<'a> {
    g: &'a Graph,
    parts: Vec<Vec<Vertex>>,
    size: usize,
    best: Vec<Vertex>,
}

impl ClusterSearch<'_> {
    // `c` may join if it sees nothing chosen, or exactly one whole part.
    fn placement(&self, c: Vertex) -> Option<Placement> {
        let mut hit = None;
        for (i, part) in self.parts.iter().enumerate() {
            let seen = part.iter().filter(|&&w| self.g.has_edge(c, w)).count();
            if seen == 0 {
                continue;
            }
            if seen != part.len() || hit.is_some() {
                return None;
            }
            hit = Some(i);
        }
        Some(hit.map_or(Placement::NewPart, Placement::Into))
    }

    fn expand(&mut self, candidates: Vec<Vertex>) {
        if self.parts.len() >= 2 && self.size > self.best.len() {
            self.best = self.parts.iter().flatten().copied().collect();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if self.size + candidates.len() - i <= self.best.len() {
                return;
            }
            let Some(place) = self.placement(v) else { continue };
            match place {
                Placement::NewPart => self.parts.push(vec![v]),
                Placement::Into(p) => self.parts[p].push(v),
            }
            self.size += 1;
            let next: Vec<Vertex> = candidates[i + 1..].iter().copied().filter(|&c| self.placement(c).is_some()).collect();
            self.expand(next);
            self.size -= 1;
            match place {
                Placement::NewPart => {
                    self.parts.pop();
                }
                Placement::Into(p) => {
                    self.parts[p].pop();
                }
            }
        }
    }
}
