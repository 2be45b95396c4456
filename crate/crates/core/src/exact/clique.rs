use crate::construct::complement;
use crate::graph::{Graph, Vertex, VertexSet};

/// Maximum clique by branch and bound, with greedy coloring as the upper bound.
pub fn max_clique(g: &Graph) -> (usize, VertexSet) {
    let mut start: Vec<Vertex> = g.vertices().collect();
    start.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = CliqueSearch { g, current: Vec::new(), best: Vec::new() };
    search.expand(start);
    let best: VertexSet = search.best.into_iter().collect();
    (best.len(), best)
}

/// Maximum independent set, as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph) -> (usize, VertexSet) {
    max_clique(&complement(g))
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    current: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: Vec<Vertex>) {
        if candidates.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let (order, colors) = color_sort(self.g, &candidates);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            let next: Vec<Vertex> = order[..idx].iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
    }
}

// Greedy sequential coloring; returns vertices grouped by color class and,
// per position, the number of classes used up to it.
fn color_sort(g: &Graph, candidates: &[Vertex]) -> (Vec<Vertex>, Vec<usize>) {
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in candidates {
        match classes.iter_mut().find(|class| class.iter().all(|&w| !g.has_edge(v, w))) {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(candidates.len());
    let mut colors = Vec::with_capacity(candidates.len());
    for (k, class) in classes.into_iter().enumerate() {
        colors.extend(std::iter::repeat_n(k + 1, class.len()));
        order.extend(class);
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};

    fn brute_clique(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<_> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
                vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn fixtures() {
        let pet = generate(&FamilySpec::Petersen).unwrap();
        assert_eq!(max_clique(&pet).0, 2);
        assert_eq!(max_independent_set(&pet).0, 4);
        for n in 1..=6 {
            assert_eq!(max_clique(&generate(&FamilySpec::Complete(n)).unwrap()).0, n);
            assert_eq!(max_independent_set(&generate(&FamilySpec::Path(n)).unwrap()).0, n.div_ceil(2));
        }
        for n in 3..=7 {
            for k in 0..n - 1 {
                assert_eq!(max_clique(&generate(&FamilySpec::Gnk(n, k)).unwrap()).0, n);
            }
        }
        assert_eq!(max_clique(&Graph::edgeless(0)).0, 0);
    }

    #[test]
    fn witnesses_are_cliques_of_reported_size() {
        for seed in 0..60 {
            let g = generate(&FamilySpec::RandomGnp { n: 11, p: 0.5, seed }).unwrap();
            let (omega, w) = max_clique(&g);
            assert_eq!(omega, brute_clique(&g), "seed {seed}");
            assert_eq!(w.len(), omega);
            assert!(w.iter().all(|a| w.iter().all(|b| a == b || g.has_edge(a, b))));
            let (alpha, ind) = max_independent_set(&g);
            assert_eq!(ind.len(), alpha);
            assert!(ind.iter().all(|a| ind.iter().all(|b| !g.has_edge(a, b))));
        }
    }
}
