use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::metric::BipartiteLabeling;

/// Largest induced complete bipartite subgraph with both sides nonempty.
///
/// Subsets of the smaller side are explored depth-first; the other side of each
/// candidate biclique is the common neighborhood. Returns 0 when a side is empty.
pub fn psi_exact(g: &Graph, labeling: &BipartiteLabeling) -> Result<(usize, VertexSet)> {
    labeling.validate(g)?;
    let (small, large) = if labeling.side_a.len() <= labeling.side_b.len() {
        (&labeling.side_a, &labeling.side_b)
    } else {
        (&labeling.side_b, &labeling.side_a)
    };
    if small.is_empty() {
        return Ok((0, VertexSet::new()));
    }
    let mut search = BicliqueSearch { g, chosen: Vec::new(), best: 0, best_set: VertexSet::new() };
    search.expand(small.iter().collect(), large.iter().collect());
    Ok((search.best, search.best_set))
}

struct BicliqueSearch<'a> {
    g: &'a Graph,
    chosen: Vec<Vertex>,
    best: usize,
    best_set: VertexSet,
}

impl BicliqueSearch<'_> {
    fn expand(&mut self, candidates: Vec<Vertex>, common: Vec<Vertex>) {
        if !self.chosen.is_empty() && !common.is_empty() && self.chosen.len() + common.len() > self.best {
            self.best = self.chosen.len() + common.len();
            self.best_set = self.chosen.iter().chain(&common).copied().collect();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if self.chosen.len() + (candidates.len() - i) + common.len() <= self.best {
                return;
            }
            let narrowed: Vec<Vertex> = common.iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
            if narrowed.is_empty() {
                continue;
            }
            let next: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&c| narrowed.iter().any(|&w| self.g.has_edge(c, w)))
                .collect();
            self.chosen.push(v);
            self.expand(next, narrowed);
            self.chosen.pop();
        }
    }
}
